//! The free associative dialgebra `DiAs<X>`: dimonomials with a central
//! letter, both products, the bar quotient onto the free associative
//! algebra, the involution, Jordan diproducts, substitution and the
//! dot-placement map on associative polynomials.

use crate::linalg::{half, LinComb, Scalar};
use crate::{Error, Result};
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Generator symbol. Symbols compare by declared order first, then by name,
/// so an alphabet built with [`alphabet`] orders as declared while ad-hoc
/// symbols fall back to lexicographic comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    ord: u32,
    name: Arc<str>,
}

impl Var {
    pub fn new(name: &str) -> Self {
        assert!(!name.is_empty(), "variable name must be nonempty");
        Var {
            ord: 0,
            name: name.into(),
        }
    }

    pub fn with_ord(name: &str, ord: u32) -> Self {
        assert!(!name.is_empty(), "variable name must be nonempty");
        Var {
            ord,
            name: name.into(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ord(&self) -> u32 {
        self.ord
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Declared total order on generators: `alphabet(&["x", "y", "z"])`.
pub fn alphabet(names: &[&str]) -> Vec<Var> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| Var::with_ord(n, i as u32 + 1))
        .collect()
}

/// A word in the generators with one marked (central) letter.
///
/// The dot index is 0-based and always `< letters.len()`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dimonomial {
    letters: Vec<Var>,
    dot: usize,
}

impl Dimonomial {
    pub fn new(letters: Vec<Var>, dot: usize) -> Self {
        assert!(!letters.is_empty(), "dimonomial must be nonempty");
        assert!(dot < letters.len(), "dot out of range");
        Dimonomial { letters, dot }
    }

    pub fn generator(v: Var) -> Self {
        Dimonomial {
            letters: vec![v],
            dot: 0,
        }
    }

    pub fn letters(&self) -> &[Var] {
        &self.letters
    }

    pub fn dot(&self) -> usize {
        self.dot
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn central_letter(&self) -> &Var {
        &self.letters[self.dot]
    }

    pub fn star(&self) -> Dimonomial {
        let mut letters = self.letters.clone();
        letters.reverse();
        let dot = self.letters.len() - 1 - self.dot;
        Dimonomial { letters, dot }
    }

    pub fn word(&self) -> AssocMonomial {
        AssocMonomial(self.letters.clone())
    }

    pub fn multidegree(&self) -> BTreeMap<Var, usize> {
        multidegree_of(&self.letters)
    }
}

// Canonical order: total degree, then letters by declared order, then dot.
impl Ord for Dimonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.dot.cmp(&other.dot))
    }
}

impl PartialOrd for Dimonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dimonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v)?;
            if i == self.dot {
                f.write_str("^")?;
            }
        }
        Ok(())
    }
}

/// A word without a dot (basis of the free associative algebra).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AssocMonomial(pub Vec<Var>);

impl AssocMonomial {
    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn star(&self) -> AssocMonomial {
        let mut l = self.0.clone();
        l.reverse();
        AssocMonomial(l)
    }

    pub fn multidegree(&self) -> BTreeMap<Var, usize> {
        multidegree_of(&self.0)
    }
}

impl Ord for AssocMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AssocMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AssocMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

pub fn multidegree_of(letters: &[Var]) -> BTreeMap<Var, usize> {
    let mut m = BTreeMap::new();
    for v in letters {
        *m.entry(v.clone()).or_insert(0) += 1;
    }
    m
}

pub type Dipolynomial = LinComb<Dimonomial>;
pub type AssocPolynomial = LinComb<AssocMonomial>;

pub fn gen_dipoly(v: &Var) -> Dipolynomial {
    Dipolynomial::unit(Dimonomial::generator(v.clone()))
}

pub fn gen_assoc(v: &Var) -> AssocPolynomial {
    AssocPolynomial::unit(AssocMonomial(vec![v.clone()]))
}

fn concat(u: &[Var], v: &[Var]) -> Vec<Var> {
    let mut l = Vec::with_capacity(u.len() + v.len());
    l.extend_from_slice(u);
    l.extend_from_slice(v);
    l
}

/// Left product: `(u -| v)` keeps the dot of `u`.
pub fn mul_left(f: &Dipolynomial, g: &Dipolynomial) -> Dipolynomial {
    f.bilinear(g, |u, v| {
        Dipolynomial::unit(Dimonomial::new(concat(&u.letters, &v.letters), u.dot))
    })
}

/// Right product: `(u |- v)` keeps the dot of `v`.
pub fn mul_right(f: &Dipolynomial, g: &Dipolynomial) -> Dipolynomial {
    f.bilinear(g, |u, v| {
        Dipolynomial::unit(Dimonomial::new(
            concat(&u.letters, &v.letters),
            u.letters.len() + v.dot,
        ))
    })
}

/// Product in the free associative algebra (word concatenation).
pub fn mul_assoc(f: &AssocPolynomial, g: &AssocPolynomial) -> AssocPolynomial {
    f.bilinear(g, |u, v| {
        AssocPolynomial::unit(AssocMonomial(concat(&u.0, &v.0)))
    })
}

/// Bar quotient: erase the dot, merging coefficients.
pub fn bar(f: &Dipolynomial) -> AssocPolynomial {
    f.map_terms(|w| AssocPolynomial::unit(w.word()))
}

/// The involution: reverse letters and the dot.
pub fn involution(f: &Dipolynomial) -> Dipolynomial {
    f.map_terms(|w| Dipolynomial::unit(w.star()))
}

pub fn involution_assoc(f: &AssocPolynomial) -> AssocPolynomial {
    f.map_terms(|w| AssocPolynomial::unit(w.star()))
}

/// `{u} = u + u*`.
pub fn symmetrize(u: &Dimonomial) -> Dipolynomial {
    let mut f = Dipolynomial::unit(u.clone());
    f.add_term(u.star(), Scalar::one());
    f
}

/// Jordan right diproduct `f |-o g = (f |- g + g -| f)/2`.
pub fn jordan_right(f: &Dipolynomial, g: &Dipolynomial) -> Dipolynomial {
    mul_right(f, g).add(&mul_left(g, f)).scale(&half())
}

/// Jordan left diproduct `f -|o g = (f -| g + g |- f)/2`.
pub fn jordan_left(f: &Dipolynomial, g: &Dipolynomial) -> Dipolynomial {
    mul_left(f, g).add(&mul_right(g, f)).scale(&half())
}

/// Splits by central letter; the parts sum back to the input.
pub fn central_decompose(f: &Dipolynomial) -> BTreeMap<Var, Dipolynomial> {
    let mut parts: BTreeMap<Var, Dipolynomial> = BTreeMap::new();
    for (w, c) in f.iter() {
        parts
            .entry(w.central_letter().clone())
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    parts
}

/// Places the dot on the unique occurrence of `z` in every monomial.
///
/// Rejects input that is not of degree exactly 1 in `z` per monomial.
pub fn psi_as(f: &AssocPolynomial, z: &Var) -> Result<Dipolynomial> {
    let mut out = Dipolynomial::zero();
    for (w, c) in f.iter() {
        let occurrences: Vec<usize> = w
            .0
            .iter()
            .enumerate()
            .filter(|(_, v)| *v == z)
            .map(|(i, _)| i)
            .collect();
        if occurrences.len() != 1 {
            return Err(Error::NotLinearIn {
                var: z.name().into(),
                found: occurrences.len(),
            });
        }
        out.add_term(Dimonomial::new(w.0.clone(), occurrences[0]), c.clone());
    }
    Ok(out)
}

/// `w^|-`: dot on the last letter of each monomial.
pub fn lift_right(f: &AssocPolynomial) -> Dipolynomial {
    f.map_terms(|w| Dipolynomial::unit(Dimonomial::new(w.0.clone(), w.0.len() - 1)))
}

/// `w^-|`: dot on the first letter of each monomial.
pub fn lift_left(f: &AssocPolynomial) -> Dipolynomial {
    f.map_terms(|w| Dipolynomial::unit(Dimonomial::new(w.0.clone(), 0)))
}

/// Substitutes `g` for `z` in `f`.
///
/// Non-central occurrences of `z` are replaced multilinearly by the
/// monomials of `bar(g)`; a central occurrence is spliced with the dotted
/// monomials of `g` (the dot of `g` becomes the dot of the result). This is
/// the unique extension forced by the 0-identities.
pub fn substitute(f: &Dipolynomial, z: &Var, g: &Dipolynomial) -> Dipolynomial {
    let g_bar = bar(g);
    let mut out = Dipolynomial::zero();
    for (w, c) in f.iter() {
        // partial expansions: (letters so far, dot position if placed, coeff)
        let mut partial: Vec<(Vec<Var>, Option<usize>, Scalar)> =
            vec![(Vec::new(), None, c.clone())];
        for (i, letter) in w.letters.iter().enumerate() {
            let is_dot = i == w.dot;
            let mut next = Vec::new();
            for (prefix, dot, coeff) in &partial {
                if letter != z {
                    let mut p = prefix.clone();
                    p.push(letter.clone());
                    let d = if is_dot { Some(prefix.len()) } else { *dot };
                    next.push((p, d, coeff.clone()));
                } else if is_dot {
                    for (gm, gc) in g.iter() {
                        let mut p = prefix.clone();
                        p.extend_from_slice(gm.letters());
                        next.push((p, Some(prefix.len() + gm.dot()), coeff * gc));
                    }
                } else {
                    for (gw, gc) in g_bar.iter() {
                        let mut p = prefix.clone();
                        p.extend_from_slice(gw.letters());
                        next.push((p, *dot, coeff * gc));
                    }
                }
            }
            partial = next;
        }
        for (letters, dot, coeff) in partial {
            let dot = dot.expect("every dimonomial has a dot");
            out.add_term(Dimonomial::new(letters, dot), coeff);
        }
    }
    out
}

/// Symmetrized dotted tetrad `{u abc}` with the dot on one of `a`, `b`, `c`
/// (selected by `dot_sel` in `0..3`). Only `bar(u)` matters left of the dot.
pub fn dotted_tetrad(u: &Dipolynomial, a: &Var, b: &Var, c: &Var, dot_sel: usize) -> Dipolynomial {
    assert!(dot_sel < 3, "dot_sel selects one of the three letters");
    let tail = Dipolynomial::unit(Dimonomial::new(
        vec![a.clone(), b.clone(), c.clone()],
        dot_sel,
    ));
    let w = mul_right(u, &tail);
    w.add(&involution(&w))
}

pub fn total_degree(f: &Dipolynomial) -> Option<usize> {
    f.keys().map(|w| w.len()).max()
}

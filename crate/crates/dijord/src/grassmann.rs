//! The Grassmann dialgebra: the quotient of the free associative dialgebra
//! by the ideal generated by all `x -| y + y |- x`.
//!
//! Its basis consists of *normal words* `x1^ x2 ... xk` with the dot in
//! front and a strictly increasing tail; the projection kills every Jordan
//! dipolynomial of degree >= 2, which is what makes it useful as a
//! non-membership witness.

use crate::diassoc::{mul_left, mul_right, Dimonomial, Dipolynomial, Var};
use crate::linalg::{LinComb, Scalar};
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt;

/// Basis word of the Grassmann dialgebra: a free head (the dotted letter)
/// followed by a strictly increasing tail.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NormalWord {
    pub head: Var,
    pub tail: Vec<Var>,
}

impl NormalWord {
    pub fn degree(&self) -> usize {
        1 + self.tail.len()
    }

    pub fn to_dimonomial(&self) -> Dimonomial {
        let mut letters = vec![self.head.clone()];
        letters.extend_from_slice(&self.tail);
        Dimonomial::new(letters, 0)
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^", self.head)?;
        for v in &self.tail {
            write!(f, " {}", v)?;
        }
        Ok(())
    }
}

pub type GrassmannElement = LinComb<NormalWord>;

/// Normal form of a single dimonomial: `None` if it reduces to zero,
/// otherwise the normal word and its sign.
///
/// The rewriting system behind this (validated exhaustively in the tests
/// via [`all_normal_forms`]) moves the dot to the front, one letter at a
/// time with a sign flip each, then sorts the remaining letters with a
/// signed bubble sort, killing any equal adjacent tail pair.
pub fn reduce_dimonomial(w: &Dimonomial) -> Option<(NormalWord, Scalar)> {
    let head = w.central_letter().clone();
    let mut tail: Vec<Var> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != w.dot())
        .map(|(_, v)| v.clone())
        .collect();
    let mut sign = if w.dot() % 2 == 0 { 1i32 } else { -1 };
    // signed bubble sort of the tail
    loop {
        let mut swapped = false;
        for i in 0..tail.len().saturating_sub(1) {
            if tail[i] == tail[i + 1] {
                return None;
            }
            if tail[i] > tail[i + 1] {
                tail.swap(i, i + 1);
                sign = -sign;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let sign = if sign > 0 { Scalar::one() } else { -Scalar::one() };
    Some((NormalWord { head, tail }, sign))
}

/// Linear extension of [`reduce_dimonomial`]; the quotient projection.
pub fn reduce(f: &Dipolynomial) -> GrassmannElement {
    let mut out = GrassmannElement::zero();
    for (w, c) in f.iter() {
        if let Some((nw, sign)) = reduce_dimonomial(w) {
            out.add_term(nw, c * &sign);
        }
    }
    out
}

/// The homomorphism onto the Grassmann dialgebra (alias of [`reduce`]).
pub fn sigma(f: &Dipolynomial) -> GrassmannElement {
    reduce(f)
}

pub fn lift(g: &GrassmannElement) -> Dipolynomial {
    let mut out = Dipolynomial::zero();
    for (w, c) in g.iter() {
        out.add_term(w.to_dimonomial(), c.clone());
    }
    out
}

/// Products in the Grassmann dialgebra: multiply representatives, reduce.
pub fn gr_mul_left(f: &GrassmannElement, g: &GrassmannElement) -> GrassmannElement {
    reduce(&mul_left(&lift(f), &lift(g)))
}

pub fn gr_mul_right(f: &GrassmannElement, g: &GrassmannElement) -> GrassmannElement {
    reduce(&mul_right(&lift(f), &lift(g)))
}

/// Number of degree-`k` basis words on `n` generators: `n * C(n, k-1)`.
pub fn basis_count(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1);
    if k - 1 > n {
        return 0;
    }
    n * num_integer::binomial(n, k - 1)
}

/// All single rewriting steps applicable to a signed dimonomial, for the
/// confluence oracle. Each rule is the oriented form of a defining relation:
///
/// * equal adjacent letters strictly left of the dot, or an equal adjacent
///   tail pair right of the dot, kill the word;
/// * a decreasing adjacent pair strictly left of the dot, or in the tail,
///   swaps with a sign flip;
/// * the letter directly left of the dot moves past it with a sign flip.
pub fn rewrite_steps(w: &Dimonomial) -> Vec<Option<(Dimonomial, i32)>> {
    let mut out = Vec::new();
    let letters = w.letters();
    let dot = w.dot();
    for i in 0..letters.len() - 1 {
        let in_scope = i + 1 < dot || i > dot;
        if in_scope {
            if letters[i] == letters[i + 1] {
                out.push(None);
            } else if letters[i] > letters[i + 1] {
                let mut l = letters.to_vec();
                l.swap(i, i + 1);
                out.push(Some((Dimonomial::new(l, dot), -1)));
            }
        }
    }
    if dot > 0 {
        let mut l = letters.to_vec();
        l.swap(dot - 1, dot);
        out.push(Some((Dimonomial::new(l, dot - 1), -1)));
    }
    out
}

/// Every normal form reachable by maximal reduction sequences, as signed
/// words (`None` = zero). Confluence means the returned set is a singleton.
pub fn all_normal_forms(w: &Dimonomial) -> BTreeSet<Option<(Dimonomial, i32)>> {
    fn go(w: &Dimonomial, sign: i32, out: &mut BTreeSet<Option<(Dimonomial, i32)>>) {
        let steps = rewrite_steps(w);
        if steps.is_empty() {
            out.insert(Some((w.clone(), sign)));
            return;
        }
        for s in steps {
            match s {
                None => {
                    out.insert(None);
                }
                Some((w2, s2)) => go(&w2, sign * s2, out),
            }
        }
    }
    let mut out = BTreeSet::new();
    go(w, 1, &mut out);
    out
}

/// All dimonomials of the given degree over the alphabet.
pub fn dimonomials_of_degree(alphabet: &[Var], degree: usize) -> Vec<Dimonomial> {
    assert!(degree >= 1);
    let mut words: Vec<Vec<Var>> = vec![vec![]];
    for _ in 0..degree {
        let mut next = Vec::new();
        for w in &words {
            for v in alphabet {
                let mut w2 = w.clone();
                w2.push(v.clone());
                next.push(w2);
            }
        }
        words = next;
    }
    let mut out = Vec::new();
    for w in words {
        for dot in 0..degree {
            out.push(Dimonomial::new(w.clone(), dot));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diassoc::{alphabet, symmetrize};
    use crate::linalg::scalar;

    fn xyz() -> (Var, Var, Var) {
        let a = alphabet(&["x", "y", "z"]);
        (a[0].clone(), a[1].clone(), a[2].clone())
    }

    fn dm(letters: &[&Var], dot: usize) -> Dimonomial {
        Dimonomial::new(letters.iter().map(|v| (*v).clone()).collect(), dot)
    }

    #[test]
    fn defining_relation_dies() {
        let (x, y, _) = xyz();
        // x^ y + y x^ -> 0
        let f = Dipolynomial::unit(dm(&[&x, &y], 0)).add(&Dipolynomial::unit(dm(&[&y, &x], 1)));
        assert!(reduce(&f).is_zero());
    }

    #[test]
    fn single_swap() {
        let (x, y, _) = xyz();
        // x y^ -> - y^ x
        let got = reduce(&Dipolynomial::unit(dm(&[&x, &y], 1)));
        let expect = GrassmannElement::term(
            NormalWord {
                head: y.clone(),
                tail: vec![x.clone()],
            },
            scalar(-1),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn repeated_tail_dies() {
        let (x, y, _) = xyz();
        assert!(reduce(&Dipolynomial::unit(dm(&[&x, &y, &y], 0))).is_zero());
        // head may repeat in the tail: x^ x is normal
        let g = reduce(&Dipolynomial::unit(dm(&[&x, &x], 0)));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn sigma_of_symmetrized_tetrad() {
        let (x, y, z) = xyz();
        // sigma({x^ x y z}) = 2 x^ x y z
        let f = symmetrize(&dm(&[&x, &x, &y, &z], 0));
        let got = sigma(&f);
        let expect = GrassmannElement::term(
            NormalWord {
                head: x.clone(),
                tail: vec![x.clone(), y.clone(), z.clone()],
            },
            scalar(2),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn sigma_fixes_generators() {
        let (x, _, _) = xyz();
        let got = sigma(&Dipolynomial::unit(dm(&[&x], 0)));
        assert_eq!(
            got,
            GrassmannElement::unit(NormalWord {
                head: x.clone(),
                tail: vec![],
            })
        );
    }

    #[test]
    fn basis_counts() {
        assert_eq!(basis_count(3, 2), 9);
        assert_eq!(basis_count(3, 4), 3);
        assert_eq!(basis_count(1, 1), 1);
        assert_eq!(basis_count(3, 5), 0);
    }

    #[test]
    fn confluent_and_counts_match_small() {
        // all dimonomials of degree <= 4 on 3 generators: every maximal
        // reduction sequence ends in the same signed normal word, the
        // explorer agrees with the closed form, and the normal-form count
        // per degree is n * C(n, k-1)
        let vars = alphabet(&["x", "y", "z"]);
        for k in 1..=4usize {
            let mut normals = BTreeSet::new();
            for w in dimonomials_of_degree(&vars, k) {
                let forms = all_normal_forms(&w);
                assert_eq!(forms.len(), 1, "not confluent on {}", w);
                let closed = reduce_dimonomial(&w);
                match forms.into_iter().next().unwrap() {
                    None => assert!(closed.is_none(), "explorer kills {}, closed form not", w),
                    Some((nf, sign)) => {
                        let (nw, s) = closed.expect("closed form must be nonzero");
                        assert_eq!(nw.to_dimonomial(), nf);
                        assert_eq!(s, scalar(sign as i64));
                        normals.insert(nf);
                    }
                }
            }
            assert_eq!(normals.len() as u64, basis_count(3, k as u64));
        }
    }

    #[test]
    fn sigma_is_a_homomorphism() {
        let (x, y, z) = xyz();
        let f = Dipolynomial::from_terms([
            (dm(&[&x, &y], 1), scalar(2)),
            (dm(&[&z], 0), scalar(-1)),
        ]);
        let g = Dipolynomial::from_terms([
            (dm(&[&y, &z], 0), scalar(1)),
            (dm(&[&x, &x], 1), scalar(3)),
        ]);
        assert_eq!(sigma(&mul_left(&f, &g)), gr_mul_left(&sigma(&f), &sigma(&g)));
        assert_eq!(sigma(&mul_right(&f, &g)), gr_mul_right(&sigma(&f), &sigma(&g)));
    }

    #[test]
    fn reduce_is_idempotent_and_linear() {
        let (x, y, z) = xyz();
        let f = Dipolynomial::from_terms([
            (dm(&[&z, &y, &x, &x], 3), scalar(1)),
            (dm(&[&x, &y, &z], 1), scalar(5)),
        ]);
        let r = reduce(&f);
        assert_eq!(reduce(&lift(&r)), r);
        let g = Dipolynomial::unit(dm(&[&y, &x], 0));
        assert_eq!(
            reduce(&f.add(&g.scale(&scalar(7)))),
            r.add(&reduce(&g).scale(&scalar(7)))
        );
    }
}

//! Free nonassociative (di)algebra terms, the Jordan-expansion maps into
//! the associative (di)algebras, the sign-placement map on terms, full
//! linearization and canonicalization to the 0-dialgebra basis.

use crate::diassoc::{
    gen_assoc, gen_dipoly, mul_assoc, mul_left, mul_right, AssocPolynomial, Dimonomial,
    Dipolynomial, Var,
};
use crate::linalg::{half, LinComb};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

/// Fully parenthesized term in the free nonassociative algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AlgTerm {
    Leaf(Var),
    Mul(Rc<AlgTerm>, Rc<AlgTerm>),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DiOp {
    /// `-|` : the dot stays left.
    Left,
    /// `|-` : the dot moves right.
    Right,
}

/// Fully parenthesized term in the free nonassociative dialgebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DiTerm {
    Leaf(Var),
    Node(DiOp, Rc<DiTerm>, Rc<DiTerm>),
}

impl AlgTerm {
    pub fn leaf(v: &Var) -> Self {
        AlgTerm::Leaf(v.clone())
    }

    pub fn mul(l: AlgTerm, r: AlgTerm) -> Self {
        AlgTerm::Mul(Rc::new(l), Rc::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            AlgTerm::Leaf(_) => 1,
            AlgTerm::Mul(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn degree_in(&self, v: &Var) -> usize {
        match self {
            AlgTerm::Leaf(w) => usize::from(w == v),
            AlgTerm::Mul(l, r) => l.degree_in(v) + r.degree_in(v),
        }
    }

    pub fn vars(&self, out: &mut BTreeMap<Var, usize>) {
        match self {
            AlgTerm::Leaf(v) => *out.entry(v.clone()).or_insert(0) += 1,
            AlgTerm::Mul(l, r) => {
                l.vars(out);
                r.vars(out);
            }
        }
    }

    pub fn multidegree(&self) -> BTreeMap<Var, usize> {
        let mut m = BTreeMap::new();
        self.vars(&mut m);
        m
    }

    /// Substitutes variables by terms (leaves without an image stay put).
    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> AlgTerm {
        match self {
            AlgTerm::Leaf(v) => AlgTerm::Leaf(map.get(v).cloned().unwrap_or_else(|| v.clone())),
            AlgTerm::Mul(l, r) => AlgTerm::mul(l.rename(map), r.rename(map)),
        }
    }
}

impl DiTerm {
    pub fn leaf(v: &Var) -> Self {
        DiTerm::Leaf(v.clone())
    }

    pub fn node(op: DiOp, l: DiTerm, r: DiTerm) -> Self {
        DiTerm::Node(op, Rc::new(l), Rc::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            DiTerm::Leaf(_) => 1,
            DiTerm::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn degree_in(&self, v: &Var) -> usize {
        match self {
            DiTerm::Leaf(w) => usize::from(w == v),
            DiTerm::Node(_, l, r) => l.degree_in(v) + r.degree_in(v),
        }
    }

    /// The central leaf: `c(u |- v) = c(v)`, `c(u -| v) = c(u)`.
    pub fn central_letter(&self) -> &Var {
        match self {
            DiTerm::Leaf(v) => v,
            DiTerm::Node(DiOp::Right, _, r) => r.central_letter(),
            DiTerm::Node(DiOp::Left, l, _) => l.central_letter(),
        }
    }

    /// Forgets the op labels, yielding an algebra term.
    pub fn forget_ops(&self) -> AlgTerm {
        match self {
            DiTerm::Leaf(v) => AlgTerm::Leaf(v.clone()),
            DiTerm::Node(_, l, r) => AlgTerm::mul(l.forget_ops(), r.forget_ops()),
        }
    }

    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> DiTerm {
        match self {
            DiTerm::Leaf(v) => DiTerm::Leaf(map.get(v).cloned().unwrap_or_else(|| v.clone())),
            DiTerm::Node(op, l, r) => DiTerm::node(*op, l.rename(map), r.rename(map)),
        }
    }
}

impl fmt::Display for AlgTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgTerm::Leaf(v) => write!(f, "{}", v),
            AlgTerm::Mul(l, r) => write!(f, "({} . {})", l, r),
        }
    }
}

impl fmt::Display for DiTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiTerm::Leaf(v) => write!(f, "{}", v),
            DiTerm::Node(DiOp::Right, l, r) => write!(f, "({} |> {})", l, r),
            DiTerm::Node(DiOp::Left, l, r) => write!(f, "({} <| {})", l, r),
        }
    }
}

pub type AlgTermPoly = LinComb<AlgTerm>;
pub type DiTermPoly = LinComb<DiTerm>;

/// Jordan expansion into the free associative algebra:
/// `J(uv) = (J(u) J(v) + J(v) J(u)) / 2`.
pub fn expand_jordan_term(t: &AlgTerm) -> AssocPolynomial {
    match t {
        AlgTerm::Leaf(v) => gen_assoc(v),
        AlgTerm::Mul(l, r) => {
            let a = expand_jordan_term(l);
            let b = expand_jordan_term(r);
            mul_assoc(&a, &b).add(&mul_assoc(&b, &a)).scale(&half())
        }
    }
}

pub fn expand_jordan(f: &AlgTermPoly) -> AssocPolynomial {
    f.map_terms(expand_jordan_term)
}

/// Dialgebra Jordan expansion into the free associative dialgebra:
/// `J_Di(u |- v) = (J_Di(u) |- J_Di(v) + J_Di(v) -| J_Di(u)) / 2` and the
/// mirrored rule for `-|`.
pub fn expand_jordan_di_term(t: &DiTerm) -> Dipolynomial {
    match t {
        DiTerm::Leaf(v) => gen_dipoly(v),
        DiTerm::Node(op, l, r) => {
            let a = expand_jordan_di_term(l);
            let b = expand_jordan_di_term(r);
            match op {
                DiOp::Right => mul_right(&a, &b).add(&mul_left(&b, &a)).scale(&half()),
                DiOp::Left => mul_left(&a, &b).add(&mul_right(&b, &a)).scale(&half()),
            }
        }
    }
}

pub fn expand_jordan_di(f: &DiTermPoly) -> Dipolynomial {
    f.map_terms(expand_jordan_di_term)
}

/// All op signs point right (`u^|-`).
pub fn term_lift_right(t: &AlgTerm) -> DiTerm {
    match t {
        AlgTerm::Leaf(v) => DiTerm::Leaf(v.clone()),
        AlgTerm::Mul(l, r) => DiTerm::node(DiOp::Right, term_lift_right(l), term_lift_right(r)),
    }
}

/// All op signs point left (`u^-|`).
pub fn term_lift_left(t: &AlgTerm) -> DiTerm {
    match t {
        AlgTerm::Leaf(v) => DiTerm::Leaf(v.clone()),
        AlgTerm::Mul(l, r) => DiTerm::node(DiOp::Left, term_lift_left(l), term_lift_left(r)),
    }
}

fn psi_alg_term(t: &AlgTerm, z: &Var) -> Result<DiTerm> {
    match t {
        AlgTerm::Leaf(v) if v == z => Ok(DiTerm::Leaf(v.clone())),
        AlgTerm::Leaf(v) => Err(Error::NotLinearIn {
            var: z.name().into(),
            found: usize::from(v == z),
        }),
        AlgTerm::Mul(l, r) => {
            let (dl, dr) = (l.degree_in(z), r.degree_in(z));
            if dl + dr != 1 {
                return Err(Error::NotLinearIn {
                    var: z.name().into(),
                    found: dl + dr,
                });
            }
            if dl == 1 {
                Ok(DiTerm::node(DiOp::Left, psi_alg_term(l, z)?, term_lift_left(r)))
            } else {
                Ok(DiTerm::node(
                    DiOp::Right,
                    term_lift_right(l),
                    psi_alg_term(r, z)?,
                ))
            }
        }
    }
}

/// Sign placement on terms: every op points toward the unique `z`.
///
/// Subterms not containing `z` get all ops pointing away from it, matching
/// the `^|-` / `^-|` convention. Rejects terms with degree != 1 in `z`.
pub fn psi_alg(f: &AlgTermPoly, z: &Var) -> Result<DiTermPoly> {
    let mut out = DiTermPoly::zero();
    for (t, c) in f.iter() {
        out.add_term(psi_alg_term(t, z)?, c.clone());
    }
    Ok(out)
}

/// Fresh linearization variable `x#i`, ordered after all user symbols.
pub fn fresh_var(base: &Var, i: usize) -> Var {
    Var::with_ord(
        &format!("{}#{}", base.name(), i),
        (1 << 20) + base.ord() * 64 + i as u32,
    )
}

trait Linearizable: Ord + Clone {
    fn count(&self, v: &Var) -> usize;
    fn replace_occurrences(&self, v: &Var, subs: &[Var]) -> Self;
}

impl Linearizable for AlgTerm {
    fn count(&self, v: &Var) -> usize {
        self.degree_in(v)
    }
    fn replace_occurrences(&self, v: &Var, subs: &[Var]) -> Self {
        fn go(t: &AlgTerm, v: &Var, subs: &[Var], next: &mut usize) -> AlgTerm {
            match t {
                AlgTerm::Leaf(w) if w == v => {
                    let r = AlgTerm::Leaf(subs[*next].clone());
                    *next += 1;
                    r
                }
                AlgTerm::Leaf(w) => AlgTerm::Leaf(w.clone()),
                AlgTerm::Mul(l, r) => {
                    AlgTerm::mul(go(l, v, subs, next), go(r, v, subs, next))
                }
            }
        }
        let mut next = 0;
        go(self, v, subs, &mut next)
    }
}

impl Linearizable for DiTerm {
    fn count(&self, v: &Var) -> usize {
        self.degree_in(v)
    }
    fn replace_occurrences(&self, v: &Var, subs: &[Var]) -> Self {
        fn go(t: &DiTerm, v: &Var, subs: &[Var], next: &mut usize) -> DiTerm {
            match t {
                DiTerm::Leaf(w) if w == v => {
                    let r = DiTerm::Leaf(subs[*next].clone());
                    *next += 1;
                    r
                }
                DiTerm::Leaf(w) => DiTerm::Leaf(w.clone()),
                DiTerm::Node(op, l, r) => {
                    DiTerm::node(*op, go(l, v, subs, next), go(r, v, subs, next))
                }
            }
        }
        let mut next = 0;
        go(self, v, subs, &mut next)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn linearize_poly<T: Linearizable>(f: &LinComb<T>, x: &Var, n: usize) -> Result<LinComb<T>> {
    let fresh: Vec<Var> = (1..=n).map(|i| fresh_var(x, i)).collect();
    let mut out = LinComb::zero();
    for (t, c) in f.iter() {
        if t.count(x) != n {
            return Err(Error::NotHomogeneous(x.name().into()));
        }
        for perm in permutations(n) {
            let subs: Vec<Var> = perm.iter().map(|&i| fresh[i].clone()).collect();
            out.add_term(t.replace_occurrences(x, &subs), c.clone());
        }
    }
    Ok(out)
}

/// Full linearization in `x`: the `n` occurrences are distributed over
/// fresh variables `x#1 ... x#n` in all `n!` ways. Identifying the fresh
/// variables back to `x` returns `n!` times the input.
pub fn linearize(f: &AlgTermPoly, x: &Var, n: usize) -> Result<AlgTermPoly> {
    linearize_poly(f, x, n)
}

pub fn linearize_di(f: &DiTermPoly, x: &Var, n: usize) -> Result<DiTermPoly> {
    linearize_poly(f, x, n)
}

/// `x y - y x`.
pub fn commutativity(x: &Var, y: &Var) -> AlgTermPoly {
    let xy = AlgTerm::mul(AlgTerm::leaf(x), AlgTerm::leaf(y));
    let yx = AlgTerm::mul(AlgTerm::leaf(y), AlgTerm::leaf(x));
    AlgTermPoly::unit(xy).sub(&AlgTermPoly::unit(yx))
}

/// The multilinear Jordan identity
/// `J(x1,x2,x3,x4) = x1(x2(x3 x4)) + (x2(x1 x3))x4 + x3(x2(x1 x4))
///  - (x1 x2)(x3 x4) - (x1 x3)(x2 x4) - (x3 x2)(x1 x4)`.
pub fn multilinear_jordan(v: &[Var; 4]) -> AlgTermPoly {
    let l = |i: usize| AlgTerm::leaf(&v[i - 1]);
    let m = AlgTerm::mul;
    let mut f = AlgTermPoly::zero();
    for (t, s) in [
        (m(l(1), m(l(2), m(l(3), l(4)))), 1),
        (m(m(l(2), m(l(1), l(3))), l(4)), 1),
        (m(l(3), m(l(2), m(l(1), l(4)))), 1),
        (m(m(l(1), l(2)), m(l(3), l(4))), -1),
        (m(m(l(1), l(3)), m(l(2), l(4))), -1),
        (m(m(l(3), l(2)), m(l(1), l(4))), -1),
    ] {
        f.add_term(t, crate::linalg::scalar(s));
    }
    f
}

/// Right-commutativity `x |- y - y -| x`, the first defining identity of
/// Jordan dialgebras.
pub fn right_commutativity(x: &Var, y: &Var) -> DiTermPoly {
    let a = DiTerm::node(DiOp::Right, DiTerm::leaf(x), DiTerm::leaf(y));
    let b = DiTerm::node(DiOp::Left, DiTerm::leaf(y), DiTerm::leaf(x));
    DiTermPoly::unit(a).sub(&DiTermPoly::unit(b))
}

/// The dotted multilinear Jordan identity `J(..., xi^, ...)`: all op signs
/// point at the `i`-th argument (`i` in `0..4`).
pub fn dotted_jordan(v: &[Var; 4], i: usize) -> DiTermPoly {
    psi_alg(&multilinear_jordan(v), &v[i]).expect("J is multilinear")
}

/// A dialgebra term with its ops normalized so that every sign points at
/// the central leaf, plus the letter sequence and the dot index. Two terms
/// equal in the free 0-dialgebra have equal canonical forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Canonical0 {
    pub term: DiTerm,
    pub letters: Vec<Var>,
    pub dot: usize,
}

/// Canonical 0-dialgebra form: the central letter is computed by
/// `c(u |- v) = c(v)`, `c(u -| v) = c(u)` and every op label is replaced by
/// the one pointing toward it, preserving the parenthesization.
pub fn canonical_0form(t: &DiTerm) -> Canonical0 {
    fn letters_of(t: &DiTerm, out: &mut Vec<Var>) {
        match t {
            DiTerm::Leaf(v) => out.push(v.clone()),
            DiTerm::Node(_, l, r) => {
                letters_of(l, out);
                letters_of(r, out);
            }
        }
    }
    fn relabel(t: &DiTerm, offset: usize, dot: usize) -> DiTerm {
        match t {
            DiTerm::Leaf(v) => DiTerm::Leaf(v.clone()),
            DiTerm::Node(_, l, r) => {
                let nl = l.degree();
                // op points toward the central position
                let op = if dot >= offset + nl { DiOp::Right } else { DiOp::Left };
                DiTerm::node(op, relabel(l, offset, dot), relabel(r, offset + nl, dot))
            }
        }
    }
    fn dot_of(t: &DiTerm, offset: usize) -> usize {
        match t {
            DiTerm::Leaf(_) => offset,
            DiTerm::Node(DiOp::Right, l, r) => dot_of(r, offset + l.degree()),
            DiTerm::Node(DiOp::Left, l, _) => dot_of(l, offset),
        }
    }
    let mut letters = Vec::new();
    letters_of(t, &mut letters);
    let dot = dot_of(t, 0);
    Canonical0 {
        term: relabel(t, 0, dot),
        letters,
        dot,
    }
}

/// Image in the free associative dialgebra: letters in order, dot on the
/// central leaf.
pub fn forget_to_diassoc(t: &DiTerm) -> Dimonomial {
    let c = canonical_0form(t);
    Dimonomial::new(c.letters, c.dot)
}

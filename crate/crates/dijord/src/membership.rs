//! Span membership for Jordan polynomials and Jordan dipolynomials on
//! bounded-degree components, identity checking for special Jordan
//! dialgebras, and the decomposition of symmetric dipolynomials over
//! generators and dotted tetrads.

use crate::diassoc::{
    bar, involution, jordan_right, symmetrize, AssocMonomial, AssocPolynomial,
    Dimonomial, Dipolynomial, Var,
};
use crate::diterm::{
    expand_jordan_di, expand_jordan_di_term, expand_jordan_term, psi_alg, AlgTerm,
    AlgTermPoly, DiOp, DiTerm, DiTermPoly,
};
use crate::linalg::{LinComb, Scalar, SpanBasis, SpanResult};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::rc::Rc;

/// Default bound on the total degree of membership queries.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

pub type Multidegree = BTreeMap<Var, usize>;

fn total(md: &Multidegree) -> usize {
    md.values().sum()
}

/// All splittings of `md` into two nonzero parts.
fn proper_splits(md: &Multidegree) -> Vec<(Multidegree, Multidegree)> {
    let vars: Vec<(&Var, usize)> = md.iter().map(|(v, &c)| (v, c)).collect();
    let mut lefts: Vec<Multidegree> = vec![Multidegree::new()];
    for (v, c) in &vars {
        let mut next = Vec::new();
        for l in &lefts {
            for take in 0..=*c {
                let mut l2 = l.clone();
                if take > 0 {
                    l2.insert((*v).clone(), take);
                }
                next.push(l2);
            }
        }
        lefts = next;
    }
    let mut out = Vec::new();
    for l in lefts {
        if l.is_empty() || total(&l) == total(md) {
            continue;
        }
        let mut r = Multidegree::new();
        for (v, &c) in md {
            let rest = c - l.get(v).copied().unwrap_or(0);
            if rest > 0 {
                r.insert(v.clone(), rest);
            }
        }
        out.push((l, r));
    }
    out
}

/// All fully parenthesized nonassociative monomials of the multidegree.
pub fn alg_monomials(md: &Multidegree) -> Vec<AlgTerm> {
    if total(md) == 1 {
        let v = md.keys().next().unwrap();
        return vec![AlgTerm::leaf(v)];
    }
    let mut out = Vec::new();
    for (l, r) in proper_splits(md) {
        for tl in alg_monomials(&l) {
            for tr in alg_monomials(&r) {
                out.push(AlgTerm::Mul(Rc::new(tl.clone()), Rc::new(tr)));
            }
        }
    }
    out
}

/// All monomials of the multidegree in the single Jordan diproduct.
///
/// Only the right diproduct is needed: `a -|o b = b |-o a`, so trees over
/// one operation already span everything.
pub fn di_monomials(md: &Multidegree) -> Vec<DiTerm> {
    if total(md) == 1 {
        let v = md.keys().next().unwrap();
        return vec![DiTerm::leaf(v)];
    }
    let mut out = Vec::new();
    for (l, r) in proper_splits(md) {
        for tl in di_monomials(&l) {
            for tr in di_monomials(&r) {
                out.push(DiTerm::Node(DiOp::Right, Rc::new(tl.clone()), Rc::new(tr)));
            }
        }
    }
    out
}

/// Row-reduced span of a homogeneous component of the Jordan-expansion
/// image, with the generating monomials kept for preimage certificates.
pub struct AlgSpan {
    pub trees: Vec<AlgTerm>,
    pub basis: SpanBasis<AssocMonomial>,
}

pub struct DiSpan {
    pub trees: Vec<DiTerm>,
    pub basis: SpanBasis<Dimonomial>,
}

pub fn jordan_span_alg(md: &Multidegree, bound: usize) -> Result<AlgSpan> {
    let degree = total(md);
    if degree > bound {
        return Err(Error::BoundExceeded { degree, bound });
    }
    let trees = alg_monomials(md);
    let mut basis = SpanBasis::new();
    for t in &trees {
        basis.insert(&expand_jordan_term(t));
    }
    Ok(AlgSpan { trees, basis })
}

pub fn jordan_span_di(md: &Multidegree, bound: usize) -> Result<DiSpan> {
    let degree = total(md);
    if degree > bound {
        return Err(Error::BoundExceeded { degree, bound });
    }
    let trees = di_monomials(md);
    let mut basis = SpanBasis::new();
    for t in &trees {
        basis.insert(&expand_jordan_di_term(t));
    }
    Ok(DiSpan { trees, basis })
}

#[derive(Clone, Debug)]
pub enum AlgMembership {
    Member { preimage: AlgTermPoly },
    NonMember { residual: AssocPolynomial },
}

#[derive(Clone, Debug)]
pub enum DiMembership {
    Member { preimage: DiTermPoly },
    NonMember { residual: Dipolynomial },
}

impl AlgMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, AlgMembership::Member { .. })
    }
}

impl DiMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, DiMembership::Member { .. })
    }
}

fn by_multidegree<K: Ord + Clone>(
    f: &LinComb<K>,
    md_of: impl Fn(&K) -> Multidegree,
) -> BTreeMap<Multidegree, LinComb<K>> {
    let mut parts: BTreeMap<Multidegree, LinComb<K>> = BTreeMap::new();
    for (k, c) in f.iter() {
        parts.entry(md_of(k)).or_default().add_term(k.clone(), c.clone());
    }
    parts
}

/// Is `f` in the span of Jordan products of the generators?
///
/// Decided per multidegree component by exact row reduction; a positive
/// certificate is a term polynomial whose expansion is exactly `f`.
pub fn is_jordan_polynomial(f: &AssocPolynomial, bound: usize) -> Result<AlgMembership> {
    let mut preimage = AlgTermPoly::zero();
    let mut residual = AssocPolynomial::zero();
    for (md, comp) in by_multidegree(f, |w| w.multidegree()) {
        let span = jordan_span_alg(&md, bound)?;
        match span.basis.in_span(&comp) {
            SpanResult::Member { coeffs } => {
                for (c, t) in coeffs.iter().zip(span.trees.iter()) {
                    preimage.add_term(t.clone(), c.clone());
                }
            }
            SpanResult::NonMember { residual: r } => residual.add_assign(&r),
        }
    }
    Ok(if residual.is_zero() {
        AlgMembership::Member { preimage }
    } else {
        AlgMembership::NonMember { residual }
    })
}

/// Direct span decision for Jordan dipolynomials, one multidegree
/// component at a time.
pub fn is_jordan_dipolynomial_direct(f: &Dipolynomial, bound: usize) -> Result<DiMembership> {
    let mut preimage = DiTermPoly::zero();
    let mut residual = Dipolynomial::zero();
    for (md, comp) in by_multidegree(f, |w| w.multidegree()) {
        let span = jordan_span_di(&md, bound)?;
        match span.basis.in_span(&comp) {
            SpanResult::Member { coeffs } => {
                for (c, t) in coeffs.iter().zip(span.trees.iter()) {
                    preimage.add_term(t.clone(), c.clone());
                }
            }
            SpanResult::NonMember { residual: r } => residual.add_assign(&r),
        }
    }
    Ok(if residual.is_zero() {
        DiMembership::Member { preimage }
    } else {
        DiMembership::NonMember { residual }
    })
}

/// Is `f` a Jordan dipolynomial?
///
/// The expansion of any single-operation tree keeps the central letter of
/// its last right factor, so membership splits by central letter. A
/// component linear in its central variable is decided through the bar
/// image: for such `f_v` membership is equivalent to membership of
/// `bar(f_v)` among classical Jordan polynomials, and a preimage pulls
/// back through the sign-placement map. Other components fall back to the
/// direct span.
pub fn is_jordan_dipolynomial(f: &Dipolynomial, bound: usize) -> Result<DiMembership> {
    let mut preimage = DiTermPoly::zero();
    let mut residual = Dipolynomial::zero();
    let mut components: BTreeMap<Var, Dipolynomial> = BTreeMap::new();
    for (w, c) in f.iter() {
        components
            .entry(w.central_letter().clone())
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    for (v, comp) in components {
        let linear = comp
            .keys()
            .all(|w| w.letters().iter().filter(|l| **l == v).count() == 1);
        if linear {
            match is_jordan_polynomial(&bar(&comp), bound)? {
                AlgMembership::Member { preimage: p } => {
                    preimage.add_assign(&psi_alg(&p, &v)?);
                }
                AlgMembership::NonMember { .. } => match is_jordan_dipolynomial_direct(&comp, bound)? {
                    DiMembership::Member { preimage: p } => preimage.add_assign(&p),
                    DiMembership::NonMember { residual: r } => residual.add_assign(&r),
                },
            }
        } else {
            match is_jordan_dipolynomial_direct(&comp, bound)? {
                DiMembership::Member { preimage: p } => preimage.add_assign(&p),
                DiMembership::NonMember { residual: r } => residual.add_assign(&r),
            }
        }
    }
    Ok(if residual.is_zero() {
        DiMembership::Member { preimage }
    } else {
        DiMembership::NonMember { residual }
    })
}

/// Is `f` fixed by the involution?
pub fn symmetric_check(f: &Dipolynomial) -> bool {
    involution(f) == *f
}

/// Leaf of a decomposition tree: a generator or a symmetrized dotted
/// four-letter word `{w} = w + w*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum HermLeaf {
    Gen(Var),
    Tetrad(Dimonomial),
}

/// Expression tree over the right Jordan diproduct.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum HermTree {
    Leaf(HermLeaf),
    Prod(Rc<HermTree>, Rc<HermTree>),
}

impl HermTree {
    pub fn eval(&self) -> Dipolynomial {
        match self {
            HermTree::Leaf(HermLeaf::Gen(v)) => crate::diassoc::gen_dipoly(v),
            HermTree::Leaf(HermLeaf::Tetrad(w)) => symmetrize(w),
            HermTree::Prod(l, r) => jordan_right(&l.eval(), &r.eval()),
        }
    }

    pub fn uses_tetrad(&self) -> bool {
        match self {
            HermTree::Leaf(HermLeaf::Gen(_)) => false,
            HermTree::Leaf(HermLeaf::Tetrad(_)) => true,
            HermTree::Prod(l, r) => l.uses_tetrad() || r.uses_tetrad(),
        }
    }
}

impl std::fmt::Display for HermTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HermTree::Leaf(HermLeaf::Gen(v)) => write!(f, "{}", v),
            HermTree::Leaf(HermLeaf::Tetrad(w)) => write!(f, "{{{}}}", w),
            HermTree::Prod(l, r) => write!(f, "({} *> {})", l, r),
        }
    }
}

/// Combination of decomposition trees re-evaluating to the decomposed
/// element.
#[derive(Clone, Debug)]
pub struct HermDecomposition {
    pub terms: Vec<(Scalar, HermTree)>,
}

impl HermDecomposition {
    pub fn eval(&self) -> Dipolynomial {
        let mut out = Dipolynomial::zero();
        for (c, t) in &self.terms {
            out.add_scaled(&t.eval(), c);
        }
        out
    }

    pub fn uses_tetrad(&self) -> bool {
        self.terms.iter().any(|(_, t)| t.uses_tetrad())
    }
}

/// Four-letter words of the multidegree, one representative per
/// `{w} = {w*}` pair, with every dot position.
fn tetrad_atoms(md: &Multidegree) -> Vec<Dimonomial> {
    let mut letters: Vec<Var> = Vec::new();
    for (v, &c) in md {
        for _ in 0..c {
            letters.push(v.clone());
        }
    }
    debug_assert_eq!(letters.len(), 4);
    let mut words: Vec<Vec<Var>> = Vec::new();
    permute_distinct(&letters, &mut Vec::new(), &mut vec![false; 4], &mut words);
    let mut out = Vec::new();
    for w in words {
        for dot in 0..4 {
            let d = Dimonomial::new(w.clone(), dot);
            if d <= d.star() {
                out.push(d);
            }
        }
    }
    out
}

fn permute_distinct(
    pool: &[Var],
    acc: &mut Vec<Var>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<Var>>,
) {
    if acc.len() == pool.len() {
        out.push(acc.clone());
        return;
    }
    let mut seen: Vec<&Var> = Vec::new();
    for i in 0..pool.len() {
        if used[i] || seen.contains(&&pool[i]) {
            continue;
        }
        seen.push(&pool[i]);
        used[i] = true;
        acc.push(pool[i].clone());
        permute_distinct(pool, acc, used, out);
        acc.pop();
        used[i] = false;
    }
}

/// (tetrad-free trees, trees with exactly one tetrad leaf) of the
/// multidegree.
fn herm_trees(md: &Multidegree) -> (Vec<HermTree>, Vec<HermTree>) {
    let mut free = Vec::new();
    let mut one = Vec::new();
    if total(md) == 1 {
        let v = md.keys().next().unwrap();
        free.push(HermTree::Leaf(HermLeaf::Gen(v.clone())));
        return (free, one);
    }
    if total(md) == 4 {
        for w in tetrad_atoms(md) {
            one.push(HermTree::Leaf(HermLeaf::Tetrad(w)));
        }
    }
    for (l, r) in proper_splits(md) {
        let (lf, lo) = herm_trees(&l);
        let (rf, ro) = herm_trees(&r);
        for a in &lf {
            for b in &rf {
                free.push(HermTree::Prod(Rc::new(a.clone()), Rc::new(b.clone())));
            }
        }
        for a in &lo {
            for b in &rf {
                one.push(HermTree::Prod(Rc::new(a.clone()), Rc::new(b.clone())));
            }
        }
        for a in &lf {
            for b in &ro {
                one.push(HermTree::Prod(Rc::new(a.clone()), Rc::new(b.clone())));
            }
        }
    }
    (free, one)
}

/// Expresses a symmetric dipolynomial over the generators and dotted
/// tetrads under the right Jordan diproduct.
///
/// Tetrad-free expressions are preferred: tetrad leaves only enter the
/// certificate when the Jordan span alone does not suffice. Failure to
/// decompose a genuinely symmetric element would contradict the structure
/// theorem for the symmetric subspace and is reported as an internal error.
pub fn herm_decompose(f: &Dipolynomial, bound: usize) -> Result<HermDecomposition> {
    if !symmetric_check(f) {
        return Err(Error::Internal(
            "herm_decompose requires a symmetric input".into(),
        ));
    }
    let mut terms: Vec<(Scalar, HermTree)> = Vec::new();
    for (md, comp) in by_multidegree(f, |w| w.multidegree()) {
        let degree = total(&md);
        if degree > bound {
            return Err(Error::BoundExceeded { degree, bound });
        }
        let (free, one) = herm_trees(&md);
        let mut trees = free;
        trees.extend(one);
        let mut basis = SpanBasis::new();
        for t in &trees {
            basis.insert(&t.eval());
        }
        match basis.in_span(&comp) {
            SpanResult::Member { coeffs } => {
                for (c, t) in coeffs.iter().zip(trees.iter()) {
                    if !num_traits::Zero::is_zero(c) {
                        terms.push((c.clone(), t.clone()));
                    }
                }
            }
            SpanResult::NonMember { .. } => {
                return Err(Error::Internal(format!(
                    "symmetric element of multidegree {:?} outside the tetrad span",
                    md
                )))
            }
        }
    }
    Ok(HermDecomposition { terms })
}

/// Does the identity `f = 0` (in the Jordan diproducts) hold in every
/// special Jordan dialgebra? By freeness this is equivalent to the
/// expansion at distinct generators being the zero dipolynomial.
pub fn holds_in_special_dialgebras(f: &DiTermPoly) -> bool {
    expand_jordan_di(f).is_zero()
}

#[derive(Clone, Debug)]
pub enum MacdonaldReport {
    /// Identity of all Jordan dialgebras: special + linear with central
    /// argument `z` lifts the verdict from the special case.
    IdentityOfAll,
    /// Fails already in the special ones; the nonzero expansion refutes it.
    NotSpecialIdentity { expansion: Dipolynomial },
}

/// For `f(x, y, z)` linear in `z`: if `f` holds in the special Jordan
/// dialgebras then it holds in all of them.
pub fn macdonald_check(f: &DiTermPoly, z: &Var) -> Result<MacdonaldReport> {
    for (t, _) in f.iter() {
        let d = t.degree_in(z);
        if d != 1 {
            return Err(Error::NotLinearIn {
                var: z.name().into(),
                found: d,
            });
        }
    }
    let expansion = expand_jordan_di(f);
    Ok(if expansion.is_zero() {
        MacdonaldReport::IdentityOfAll
    } else {
        MacdonaldReport::NotSpecialIdentity { expansion }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diassoc::alphabet;
    use crate::diterm::{dotted_jordan, expand_jordan, right_commutativity};
    use crate::linalg::scalar;

    fn md(pairs: &[(&Var, usize)]) -> Multidegree {
        pairs.iter().map(|&(v, c)| (v.clone(), c)).collect()
    }

    fn dm(letters: &[&Var], dot: usize) -> Dimonomial {
        Dimonomial::new(letters.iter().map(|v| (*v).clone()).collect(), dot)
    }

    #[test]
    fn span_dimensions_small() {
        let a = alphabet(&["x", "y", "z", "t"]);
        let (x, y) = (&a[0], &a[1]);
        // multidegree (1,1), dialgebra: dimension 2
        let span = jordan_span_di(&md(&[(x, 1), (y, 1)]), 8).unwrap();
        assert_eq!(span.basis.rank(), 2);
        // multidegree (1): dimension 1, both flavors
        assert_eq!(jordan_span_alg(&md(&[(x, 1)]), 8).unwrap().basis.rank(), 1);
        assert_eq!(jordan_span_di(&md(&[(x, 1)]), 8).unwrap().basis.rank(), 1);
        // bound enforcement
        assert!(jordan_span_alg(&md(&[(x, 9)]), 8).is_err());
    }

    #[test]
    fn tetrad_not_jordan_polynomial() {
        let a = alphabet(&["x", "y", "z", "t"]);
        let w = AssocMonomial(a.clone());
        let f = AssocPolynomial::unit(w.clone()).add(&AssocPolynomial::unit(w.star()));
        assert!(!is_jordan_polynomial(&f, 8).unwrap().is_member());
    }

    #[test]
    fn classical_members_with_certificates() {
        let a = alphabet(&["x", "y"]);
        let (x, y) = (&a[0], &a[1]);
        // (xy + yx)/2 is a member with preimage xy
        let f = AssocPolynomial::from_terms([
            (AssocMonomial(vec![x.clone(), y.clone()]), crate::linalg::ratio(1, 2)),
            (AssocMonomial(vec![y.clone(), x.clone()]), crate::linalg::ratio(1, 2)),
        ]);
        match is_jordan_polynomial(&f, 8).unwrap() {
            AlgMembership::Member { preimage } => assert_eq!(expand_jordan(&preimage), f),
            _ => panic!("expected member"),
        }
        // xyx is a member
        let g = AssocPolynomial::unit(AssocMonomial(vec![x.clone(), y.clone(), x.clone()]));
        match is_jordan_polynomial(&g, 8).unwrap() {
            AlgMembership::Member { preimage } => assert_eq!(expand_jordan(&preimage), g),
            _ => panic!("expected member"),
        }
    }

    #[test]
    fn dipolynomial_members() {
        let a = alphabet(&["x", "y"]);
        let (x, y) = (&a[0], &a[1]);
        // x y^ + y^ x = 2 (x |-o y)
        let f = Dipolynomial::from_terms([
            (dm(&[&x, &y], 1), scalar(1)),
            (dm(&[&y, &x], 0), scalar(1)),
        ]);
        match is_jordan_dipolynomial(&f, 8).unwrap() {
            DiMembership::Member { preimage } => assert_eq!(expand_jordan_di(&preimage), f),
            _ => panic!("expected member"),
        }
        // a bare generator
        let g = Dipolynomial::unit(dm(&[&x], 0));
        assert!(is_jordan_dipolynomial(&g, 8).unwrap().is_member());
    }

    #[test]
    fn dotted_tetrad_not_jordan_dipolynomial() {
        let a = alphabet(&["x", "y", "z"]);
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let f = symmetrize(&dm(&[&x, &x, &y, &z], 0));
        assert!(!is_jordan_dipolynomial(&f, 8).unwrap().is_member());
        assert!(!is_jordan_dipolynomial_direct(&f, 8).unwrap().is_member());
        // yet it is symmetric
        assert!(symmetric_check(&f));
    }

    #[test]
    fn fast_and_direct_paths_agree_on_samples() {
        let a = alphabet(&["x", "y", "z"]);
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let samples = [
            Dipolynomial::from_terms([
                (dm(&[&x, &z, &y], 1), scalar(1)),
                (dm(&[&y, &z, &x], 1), scalar(1)),
            ]),
            Dipolynomial::unit(dm(&[&x, &y, &z], 2)),
            jordan_right(
                &crate::diassoc::gen_dipoly(x),
                &jordan_right(&crate::diassoc::gen_dipoly(y), &crate::diassoc::gen_dipoly(z)),
            ),
        ];
        for f in &samples {
            assert_eq!(
                is_jordan_dipolynomial(f, 8).unwrap().is_member(),
                is_jordan_dipolynomial_direct(f, 8).unwrap().is_member()
            );
        }
    }

    #[test]
    fn symmetric_check_examples() {
        let a = alphabet(&["x", "y", "z"]);
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        assert!(symmetric_check(&symmetrize(&dm(&[&x, &x, &y, &z], 0))));
        assert!(!symmetric_check(&Dipolynomial::unit(dm(&[&x, &y], 0))));
        // J_di images are symmetric
        let t = DiTerm::node(
            DiOp::Right,
            DiTerm::leaf(x),
            DiTerm::node(DiOp::Left, DiTerm::leaf(y), DiTerm::leaf(x)),
        );
        assert!(symmetric_check(&expand_jordan_di_term(&t)));
    }

    #[test]
    fn herm_decompose_tetrad_and_plain() {
        let a = alphabet(&["x", "y", "z"]);
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        // {x^ x y z} decomposes (necessarily using a tetrad leaf)
        let f = symmetrize(&dm(&[&x, &x, &y, &z], 0));
        let d = herm_decompose(&f, 8).unwrap();
        assert_eq!(d.eval(), f);
        assert!(d.uses_tetrad());
        // x y^ + y^ x needs no tetrads
        let g = Dipolynomial::from_terms([
            (dm(&[&x, &y], 1), scalar(1)),
            (dm(&[&y, &x], 0), scalar(1)),
        ]);
        let d2 = herm_decompose(&g, 8).unwrap();
        assert_eq!(d2.eval(), g);
        assert!(!d2.uses_tetrad());
    }

    #[test]
    fn herm_decompose_two_generators_tetrad_free() {
        // a symmetric degree-4 element on two generators gets a tetrad-free
        // decomposition (the symmetric space equals the Jordan span there)
        let a = alphabet(&["x", "y"]);
        let (x, y) = (&a[0], &a[1]);
        let f = symmetrize(&dm(&[&x, &x, &y, &x], 1));
        let d = herm_decompose(&f, 8).unwrap();
        assert_eq!(d.eval(), f);
        assert!(!d.uses_tetrad());
    }

    #[test]
    fn special_dialgebra_identities() {
        let a = alphabet(&["x", "y", "z", "t"]);
        let (x, y) = (&a[0], &a[1]);
        assert!(holds_in_special_dialgebras(&right_commutativity(x, y)));
        // x |-o y - y |-o x is not an identity
        let f = DiTermPoly::unit(DiTerm::node(DiOp::Right, DiTerm::leaf(x), DiTerm::leaf(y)))
            .sub(&DiTermPoly::unit(DiTerm::node(
                DiOp::Right,
                DiTerm::leaf(y),
                DiTerm::leaf(x),
            )));
        assert!(!holds_in_special_dialgebras(&f));
        // all four dotted Jordan identities hold
        let v = [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()];
        for i in 0..4 {
            assert!(holds_in_special_dialgebras(&dotted_jordan(&v, i)));
        }
    }

    #[test]
    fn macdonald_reports() {
        let a = alphabet(&["x", "y", "z"]);
        let (x, z) = (&a[0], &a[2]);
        // x |-o z - z -|o x: identity of all Jordan dialgebras
        let f = DiTermPoly::unit(DiTerm::node(DiOp::Right, DiTerm::leaf(x), DiTerm::leaf(z)))
            .sub(&DiTermPoly::unit(DiTerm::node(
                DiOp::Left,
                DiTerm::leaf(z),
                DiTerm::leaf(x),
            )));
        assert!(matches!(
            macdonald_check(&f, z).unwrap(),
            MacdonaldReport::IdentityOfAll
        ));
        // x |-o z - z |-o x: refuted with its nonzero expansion
        let g = DiTermPoly::unit(DiTerm::node(DiOp::Right, DiTerm::leaf(x), DiTerm::leaf(z)))
            .sub(&DiTermPoly::unit(DiTerm::node(
                DiOp::Right,
                DiTerm::leaf(z),
                DiTerm::leaf(x),
            )));
        assert!(matches!(
            macdonald_check(&g, z).unwrap(),
            MacdonaldReport::NotSpecialIdentity { .. }
        ));
        // rejects input not linear in z
        let h = DiTermPoly::unit(DiTerm::node(DiOp::Left, DiTerm::leaf(x), DiTerm::leaf(x)));
        assert!(macdonald_check(&h, z).is_err());
    }

    #[test]
    fn di_span_matches_psi_of_alg_span() {
        // per multidegree, the dialgebra span splits by central letter and
        // each central-letter slice is the dot-placement image of the
        // classical span in a fresh variable
        let a = alphabet(&["x", "y"]);
        let (x, y) = (&a[0], &a[1]);
        let dspan = jordan_span_di(&md(&[(x, 2), (y, 1)]), 8).unwrap();
        let mut di_rows = SpanBasis::new();
        for t in &dspan.trees {
            di_rows.insert(&expand_jordan_di_term(t));
        }
        // classical span of the same multidegree with one x renamed to z,
        // dotted back onto z then z := x: covers the x-central slice
        let z = Var::with_ord("zz", 100);
        let aspan = jordan_span_alg(&md(&[(x, 1), (y, 1), (&z, 1)]), 8).unwrap();
        for t in &aspan.trees {
            let lin = crate::diterm::psi_alg(&AlgTermPoly::unit(t.clone()), &z).unwrap();
            let expanded = expand_jordan_di(&lin);
            let subst = crate::diassoc::substitute(&expanded, &z, &crate::diassoc::gen_dipoly(x));
            assert!(di_rows.in_span(&subst).is_member());
        }
    }
}

//! Finite-dimensional algebras and dialgebras given by structure
//! constants: multilinear identity checking over basis tuples, the bar
//! quotient, the split null extension, and truncated free dialgebras as a
//! reusable test bed.

use crate::diassoc::{mul_left, mul_right, Dimonomial, Dipolynomial, Var};
use crate::diterm::{AlgTerm, AlgTermPoly, DiOp, DiTerm, DiTermPoly};
use crate::linalg::{half, LinComb, Scalar, SpanBasis};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Coordinate vector over the basis.
pub type Element = LinComb<usize>;

/// Degree grading used to skip basis tuples whose products are truncated
/// to zero anyway: in a graded algebra with products of total degree above
/// `truncation` set to zero, every multilinear monomial vanishes on a
/// tuple whose grades sum beyond the truncation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Grading {
    pub grades: Vec<usize>,
    pub truncation: usize,
}

/// Algebra (one product table) or dialgebra (left table then right table)
/// by structure constants.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    labels: Vec<String>,
    /// `tables[op][i][j]` = product of basis elements i, j under op;
    /// one table for an algebra, `[left, right]` for a dialgebra.
    tables: Vec<Vec<Vec<Element>>>,
    grading: Option<Grading>,
}

impl StructureAlgebra {
    pub fn new_algebra(labels: Vec<String>, table: Vec<Vec<Element>>) -> Self {
        let s = StructureAlgebra {
            labels,
            tables: vec![table],
            grading: None,
        };
        s.check_shape();
        s
    }

    pub fn new_dialgebra(
        labels: Vec<String>,
        left: Vec<Vec<Element>>,
        right: Vec<Vec<Element>>,
    ) -> Self {
        let s = StructureAlgebra {
            labels,
            tables: vec![left, right],
            grading: None,
        };
        s.check_shape();
        s
    }

    fn check_shape(&self) {
        let n = self.labels.len();
        for t in &self.tables {
            assert_eq!(t.len(), n, "table row count");
            for row in t {
                assert_eq!(row.len(), n, "table column count");
            }
        }
        if let Some(g) = &self.grading {
            assert_eq!(g.grades.len(), n, "grade count");
        }
    }

    pub fn with_grading(mut self, grading: Grading) -> Self {
        self.grading = Some(grading);
        self.check_shape();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn is_dialgebra(&self) -> bool {
        self.tables.len() == 2
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::unit(i)
    }

    pub fn mul(&self, op: usize, a: &Element, b: &Element) -> Element {
        a.bilinear(b, |&i, &j| self.tables[op][i][j].clone())
    }

    /// Single product of an algebra.
    pub fn product(&self, a: &Element, b: &Element) -> Element {
        assert!(!self.is_dialgebra());
        self.mul(0, a, b)
    }

    pub fn left_product(&self, a: &Element, b: &Element) -> Element {
        assert!(self.is_dialgebra());
        self.mul(0, a, b)
    }

    pub fn right_product(&self, a: &Element, b: &Element) -> Element {
        assert!(self.is_dialgebra());
        self.mul(1, a, b)
    }

    pub fn eval_alg_term(&self, t: &AlgTerm, assign: &BTreeMap<Var, Element>) -> Element {
        match t {
            AlgTerm::Leaf(v) => assign[v].clone(),
            AlgTerm::Mul(l, r) => self.mul(
                0,
                &self.eval_alg_term(l, assign),
                &self.eval_alg_term(r, assign),
            ),
        }
    }

    pub fn eval_di_term(&self, t: &DiTerm, assign: &BTreeMap<Var, Element>) -> Element {
        match t {
            DiTerm::Leaf(v) => assign[v].clone(),
            DiTerm::Node(op, l, r) => {
                let o = match op {
                    DiOp::Left => 0,
                    DiOp::Right => 1,
                };
                self.mul(
                    o,
                    &self.eval_di_term(l, assign),
                    &self.eval_di_term(r, assign),
                )
            }
        }
    }

    pub fn eval_alg(&self, f: &AlgTermPoly, assign: &BTreeMap<Var, Element>) -> Element {
        let mut out = Element::zero();
        for (t, c) in f.iter() {
            out.add_scaled(&self.eval_alg_term(t, assign), c);
        }
        out
    }

    pub fn eval_di(&self, f: &DiTermPoly, assign: &BTreeMap<Var, Element>) -> Element {
        let mut out = Element::zero();
        for (t, c) in f.iter() {
            out.add_scaled(&self.eval_di_term(t, assign), c);
        }
        out
    }

    /// Turns a dialgebra into its Jordan dialgebra: `a |-o b` and `a -|o b`
    /// as the new products.
    pub fn plus_dialgebra(&self) -> StructureAlgebra {
        assert!(self.is_dialgebra());
        let n = self.dim();
        let h = half();
        let mut left = vec![vec![Element::zero(); n]; n];
        let mut right = vec![vec![Element::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                left[i][j] = self.tables[0][i][j]
                    .add(&self.tables[1][j][i])
                    .scale(&h);
                right[i][j] = self.tables[1][i][j]
                    .add(&self.tables[0][j][i])
                    .scale(&h);
            }
        }
        StructureAlgebra {
            labels: self.labels.clone(),
            tables: vec![left, right],
            grading: self.grading.clone(),
        }
    }
}

fn multilinear_vars_alg(f: &AlgTermPoly) -> Result<Vec<Var>> {
    let mut vars: BTreeSet<Var> = BTreeSet::new();
    for (t, _) in f.iter() {
        for v in t.multidegree().keys() {
            vars.insert(v.clone());
        }
    }
    for (t, _) in f.iter() {
        for v in &vars {
            if t.degree_in(v) != 1 {
                return Err(Error::NotMultilinear(format!(
                    "term {} has degree {} in {}",
                    t,
                    t.degree_in(v),
                    v
                )));
            }
        }
    }
    Ok(vars.into_iter().collect())
}

fn multilinear_vars_di(f: &DiTermPoly) -> Result<Vec<Var>> {
    let mut vars: BTreeSet<Var> = BTreeSet::new();
    for (t, _) in f.iter() {
        collect_di_vars(t, &mut vars);
    }
    for (t, _) in f.iter() {
        for v in &vars {
            if t.degree_in(v) != 1 {
                return Err(Error::NotMultilinear(format!(
                    "term {} has degree {} in {}",
                    t,
                    t.degree_in(v),
                    v
                )));
            }
        }
    }
    Ok(vars.into_iter().collect())
}

fn collect_di_vars(t: &DiTerm, out: &mut BTreeSet<Var>) {
    match t {
        DiTerm::Leaf(v) => {
            out.insert(v.clone());
        }
        DiTerm::Node(_, l, r) => {
            collect_di_vars(l, out);
            collect_di_vars(r, out);
        }
    }
}

fn for_each_tuple(
    dim: usize,
    arity: usize,
    grading: Option<&Grading>,
    mut f: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let min_grade = grading.map(|g| g.grades.iter().copied().min().unwrap_or(0));
    let mut tuple = Vec::with_capacity(arity);
    fn go(
        dim: usize,
        arity: usize,
        grading: Option<&Grading>,
        min_grade: Option<usize>,
        grade_sum: usize,
        tuple: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        if tuple.len() == arity {
            return if f(tuple) { None } else { Some(tuple.clone()) };
        }
        for i in 0..dim {
            let mut sum = grade_sum;
            if let (Some(g), Some(m)) = (grading, min_grade) {
                sum += g.grades[i];
                let remaining = arity - tuple.len() - 1;
                if sum + remaining * m > g.truncation {
                    continue;
                }
            }
            tuple.push(i);
            let r = go(dim, arity, grading, min_grade, sum, tuple, f);
            tuple.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    go(dim, arity, grading, min_grade, 0, &mut tuple, &mut f)
}

/// Counterexample of a failed identity: the basis tuple (in variable
/// order) and the nonzero value there.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub tuple: Vec<usize>,
    pub value: Element,
}

/// Does the multilinear identity `f = 0` hold? Checked on all basis
/// tuples, which suffices by multilinearity; with a grading, tuples whose
/// total grade exceeds the truncation are skipped since every multilinear
/// monomial is zero on them.
pub fn holds_identity_alg(a: &StructureAlgebra, f: &AlgTermPoly) -> Result<Option<Counterexample>> {
    assert!(!a.is_dialgebra(), "algebra identity on an algebra table");
    let vars = multilinear_vars_alg(f)?;
    let mut failure = None;
    let bad = for_each_tuple(a.dim(), vars.len(), a.grading(), |tuple| {
        let assign: BTreeMap<Var, Element> = vars
            .iter()
            .cloned()
            .zip(tuple.iter().map(|&i| a.basis(i)))
            .collect();
        let v = a.eval_alg(f, &assign);
        if v.is_zero() {
            true
        } else {
            failure = Some(v);
            false
        }
    });
    Ok(bad.map(|tuple| Counterexample {
        tuple,
        value: failure.expect("failing tuple has a value"),
    }))
}

pub fn holds_identity_di(a: &StructureAlgebra, f: &DiTermPoly) -> Result<Option<Counterexample>> {
    assert!(a.is_dialgebra(), "dialgebra identity on a dialgebra table");
    let vars = multilinear_vars_di(f)?;
    let mut failure = None;
    let bad = for_each_tuple(a.dim(), vars.len(), a.grading(), |tuple| {
        let assign: BTreeMap<Var, Element> = vars
            .iter()
            .cloned()
            .zip(tuple.iter().map(|&i| a.basis(i)))
            .collect();
        let v = a.eval_di(f, &assign);
        if v.is_zero() {
            true
        } else {
            failure = Some(v);
            false
        }
    });
    Ok(bad.map(|tuple| Counterexample {
        tuple,
        value: failure.expect("failing tuple has a value"),
    }))
}

/// The two 0-identities `(x -| y) |- z = (x |- y) |- z` and
/// `x -| (y |- z) = x -| (y -| z)` as term polynomials.
pub fn zero_identities(x: &Var, y: &Var, z: &Var) -> [DiTermPoly; 2] {
    let l = DiTerm::leaf;
    let n = DiTerm::node;
    let a = DiTermPoly::unit(n(DiOp::Right, n(DiOp::Left, l(x), l(y)), l(z)))
        .sub(&DiTermPoly::unit(n(DiOp::Right, n(DiOp::Right, l(x), l(y)), l(z))));
    let b = DiTermPoly::unit(n(DiOp::Left, l(x), n(DiOp::Right, l(y), l(z))))
        .sub(&DiTermPoly::unit(n(DiOp::Left, l(x), n(DiOp::Left, l(y), l(z)))));
    [a, b]
}

/// The remaining associativity axioms of associative dialgebras.
pub fn associativity_identities(x: &Var, y: &Var, z: &Var) -> [DiTermPoly; 3] {
    let l = DiTerm::leaf;
    let n = DiTerm::node;
    let assoc_r = DiTermPoly::unit(n(DiOp::Right, n(DiOp::Right, l(x), l(y)), l(z)))
        .sub(&DiTermPoly::unit(n(DiOp::Right, l(x), n(DiOp::Right, l(y), l(z)))));
    let assoc_l = DiTermPoly::unit(n(DiOp::Left, n(DiOp::Left, l(x), l(y)), l(z)))
        .sub(&DiTermPoly::unit(n(DiOp::Left, l(x), n(DiOp::Left, l(y), l(z)))));
    let assoc_x = DiTermPoly::unit(n(DiOp::Left, n(DiOp::Right, l(x), l(y)), l(z)))
        .sub(&DiTermPoly::unit(n(DiOp::Right, l(x), n(DiOp::Left, l(y), l(z)))));
    [assoc_r, assoc_l, assoc_x]
}

fn check_zero_identities(d: &StructureAlgebra) -> Result<()> {
    let x = Var::with_ord("x", 1);
    let y = Var::with_ord("y", 2);
    let z = Var::with_ord("z", 3);
    for f in zero_identities(&x, &y, &z) {
        if let Some(c) = holds_identity_di(d, &f)? {
            return Err(Error::ZeroIdentitiesFail(format!(
                "failing basis tuple {:?}",
                c.tuple
            )));
        }
    }
    Ok(())
}

/// The bar quotient of a 0-dialgebra and the projection onto it.
///
/// `projection[k]` is the image of basis element `k` in quotient
/// coordinates.
pub struct BarQuotient {
    pub algebra: StructureAlgebra,
    /// Original basis indices representing the quotient basis.
    pub representatives: Vec<usize>,
    pub projection: Vec<Element>,
}

pub fn bar_algebra(d: &StructureAlgebra) -> Result<BarQuotient> {
    assert!(d.is_dialgebra());
    check_zero_identities(d)?;
    let n = d.dim();
    // D0 = span { e_i |- e_j - e_i -| e_j }
    let mut d0: SpanBasis<usize> = SpanBasis::new();
    for i in 0..n {
        for j in 0..n {
            let v = d.tables[1][i][j].sub(&d.tables[0][i][j]);
            if !v.is_zero() {
                d0.insert(&v);
            }
        }
    }
    let pivots: BTreeSet<usize> = d0.pivots().iter().copied().collect();
    let representatives: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let index_of: BTreeMap<usize, usize> = representatives
        .iter()
        .enumerate()
        .map(|(q, &k)| (k, q))
        .collect();
    let to_quotient = |v: &Element| -> Element {
        let reduced = d0.reduce(v);
        let mut out = Element::zero();
        for (k, c) in reduced.iter() {
            out.add_term(index_of[k], c.clone());
        }
        out
    };
    let projection: Vec<Element> = (0..n).map(|k| to_quotient(&Element::unit(k))).collect();
    let qdim = representatives.len();
    let mut table = vec![vec![Element::zero(); qdim]; qdim];
    for (qi, &i) in representatives.iter().enumerate() {
        for (qj, &j) in representatives.iter().enumerate() {
            // either product works modulo D0
            table[qi][qj] = to_quotient(&d.tables[0][i][j]);
        }
    }
    let labels = representatives
        .iter()
        .map(|&k| d.labels[k].clone())
        .collect();
    let grading = d.grading.as_ref().map(|g| Grading {
        grades: representatives.iter().map(|&k| g.grades[k]).collect(),
        truncation: g.truncation,
    });
    let mut algebra = StructureAlgebra::new_algebra(labels, table);
    if let Some(g) = grading {
        algebra = algebra.with_grading(g);
    }
    Ok(BarQuotient {
        algebra,
        representatives,
        projection,
    })
}

/// The split null extension: the bar quotient acting on the dialgebra as a
/// square-zero part, `(a + m)(b + n) = ab + (a |- n + m -| b)`.
pub fn split_null_extension(d: &StructureAlgebra) -> Result<StructureAlgebra> {
    let bar = bar_algebra(d)?;
    let qdim = bar.algebra.dim();
    let n = d.dim();
    let total = qdim + n;
    let shift = |v: &Element| -> Element {
        let mut out = Element::zero();
        for (k, c) in v.iter() {
            out.add_term(qdim + k, c.clone());
        }
        out
    };
    let mut table = vec![vec![Element::zero(); total]; total];
    for i in 0..qdim {
        for j in 0..qdim {
            table[i][j] = bar.algebra.tables[0][i][j].clone();
        }
    }
    for (i, &rep_i) in bar.representatives.iter().enumerate() {
        for m in 0..n {
            // a_bar . m = a |- m ; m . a_bar = m -| a
            table[i][qdim + m] = shift(&d.tables[1][rep_i][m]);
            table[qdim + m][i] = shift(&d.tables[0][m][rep_i]);
        }
    }
    let mut labels: Vec<String> = bar.algebra.labels.clone();
    labels.extend(d.labels.iter().map(|l| format!("m:{}", l)));
    let grading = d.grading.as_ref().map(|g| {
        let mut grades: Vec<usize> = bar
            .representatives
            .iter()
            .map(|&k| g.grades[k])
            .collect();
        grades.extend(g.grades.iter().copied());
        Grading {
            grades,
            truncation: g.truncation,
        }
    });
    let mut out = StructureAlgebra::new_algebra(labels, table);
    if let Some(g) = grading {
        out = out.with_grading(g);
    }
    Ok(out)
}

/// The free associative dialgebra on `vars` with all products of degree
/// above `d` set to zero, together with its dimonomial basis.
pub fn truncated_free_dialgebra(vars: &[Var], d: usize) -> (StructureAlgebra, Vec<Dimonomial>) {
    let mut basis: Vec<Dimonomial> = Vec::new();
    let mut words: Vec<Vec<Var>> = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &words {
            for v in vars {
                let mut w2 = w.clone();
                w2.push(v.clone());
                next.push(w2);
            }
        }
        for w in &next {
            for dot in 0..w.len() {
                basis.push(Dimonomial::new(w.clone(), dot));
            }
        }
        words = next;
    }
    basis.sort();
    let index: BTreeMap<Dimonomial, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let truncate = |p: &Dipolynomial| -> Element {
        let mut out = Element::zero();
        for (w, c) in p.iter() {
            if w.len() <= d {
                out.add_term(index[w], c.clone());
            }
        }
        out
    };
    let n = basis.len();
    let mut left = vec![vec![Element::zero(); n]; n];
    let mut right = vec![vec![Element::zero(); n]; n];
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let pu = Dipolynomial::unit(u.clone());
            let pv = Dipolynomial::unit(v.clone());
            left[i][j] = truncate(&mul_left(&pu, &pv));
            right[i][j] = truncate(&mul_right(&pu, &pv));
        }
    }
    let labels = basis.iter().map(|w| w.to_string()).collect();
    let grading = Grading {
        grades: basis.iter().map(|w| w.len()).collect(),
        truncation: d,
    };
    let algebra = StructureAlgebra::new_dialgebra(labels, left, right).with_grading(grading);
    (algebra, basis)
}

#[derive(Serialize, Deserialize)]
struct TableEntryJson {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct StructureAlgebraJson {
    labels: Vec<String>,
    tables: Vec<Vec<TableEntryJson>>,
    grading: Option<Grading>,
}

pub fn to_json(a: &StructureAlgebra) -> String {
    let tables = a
        .tables
        .iter()
        .map(|t| {
            let mut entries = Vec::new();
            for (i, row) in t.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    for (&k, c) in cell.iter() {
                        entries.push(TableEntryJson {
                            i,
                            j,
                            k,
                            c: c.to_string(),
                        });
                    }
                }
            }
            entries
        })
        .collect();
    serde_json::to_string_pretty(&StructureAlgebraJson {
        labels: a.labels.clone(),
        tables,
        grading: a.grading.clone(),
    })
    .expect("serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<StructureAlgebra> {
    let dto: StructureAlgebraJson = serde_json::from_str(s)
        .map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
    let n = dto.labels.len();
    if dto.tables.is_empty() || dto.tables.len() > 2 {
        return Err(Error::Parse {
            pos: 0,
            msg: "expected one or two product tables".into(),
        });
    }
    let mut tables = Vec::new();
    for t in &dto.tables {
        let mut table = vec![vec![Element::zero(); n]; n];
        for e in t {
            if e.i >= n || e.j >= n || e.k >= n {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("index out of range in entry ({},{},{})", e.i, e.j, e.k),
                });
            }
            let c: Scalar = e.c.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad rational {:?}", e.c),
            })?;
            table[e.i][e.j].add_term(e.k, c);
        }
        tables.push(table);
    }
    let mut a = StructureAlgebra {
        labels: dto.labels,
        tables,
        grading: None,
    };
    if let Some(g) = dto.grading {
        a = a.with_grading(g);
    }
    a.check_shape();
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diassoc::alphabet;
    use crate::diterm::{commutativity, dotted_jordan, multilinear_jordan, right_commutativity};
    use crate::linalg::scalar;

    fn two_vars() -> Vec<Var> {
        alphabet(&["x", "y"])
    }

    #[test]
    fn truncated_dimension_and_axioms() {
        let vars = two_vars();
        let (d3, _) = truncated_free_dialgebra(&vars, 3);
        // sum over k <= 3 of k * 2^k = 2 + 8 + 24
        assert_eq!(d3.dim(), 34);
        let x = Var::with_ord("a", 1);
        let y = Var::with_ord("b", 2);
        let z = Var::with_ord("c", 3);
        for f in zero_identities(&x, &y, &z)
            .into_iter()
            .chain(associativity_identities(&x, &y, &z))
        {
            assert!(holds_identity_di(&d3, &f).unwrap().is_none());
        }
    }

    #[test]
    fn plus_dialgebra_is_jordan() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 4);
        let p = d.plus_dialgebra();
        let a = alphabet(&["p", "q", "r", "s"]);
        let v = [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()];
        assert!(holds_identity_di(&p, &right_commutativity(&v[0], &v[1]))
            .unwrap()
            .is_none());
        for i in 0..4 {
            assert!(holds_identity_di(&p, &dotted_jordan(&v, i)).unwrap().is_none());
        }
        // plain commutativity fails on the plus dialgebra, with a witness
        let f = DiTermPoly::unit(DiTerm::node(
            DiOp::Right,
            DiTerm::leaf(&v[0]),
            DiTerm::leaf(&v[1]),
        ))
        .sub(&DiTermPoly::unit(DiTerm::node(
            DiOp::Right,
            DiTerm::leaf(&v[1]),
            DiTerm::leaf(&v[0]),
        )));
        assert!(holds_identity_di(&p, &f).unwrap().is_some());
    }

    #[test]
    fn bar_of_truncated_dias() {
        let vars = two_vars();
        let (d, basis) = truncated_free_dialgebra(&vars, 2);
        let bar = bar_algebra(&d).unwrap();
        // bar of degree <= 2 DiAs on 2 letters = truncated As: 2 + 4 = 6
        assert_eq!(bar.algebra.dim(), 6);
        // projection is an algebra morphism (arbitrary basis pair check)
        for i in 0..d.dim() {
            for j in 0..d.dim() {
                let lhs = bar
                    .algebra
                    .product(&bar.projection[i], &bar.projection[j]);
                let prod = d.left_product(&d.basis(i), &d.basis(j));
                let mut rhs = Element::zero();
                for (k, c) in prod.iter() {
                    rhs.add_scaled(&bar.projection[*k], c);
                }
                assert_eq!(lhs, rhs, "at {} {}", basis[i], basis[j]);
            }
        }
    }

    #[test]
    fn bar_equal_products_is_identity() {
        // dialgebra with both products equal: D0 = 0, bar is D itself
        let labels = vec!["u".into(), "v".into()];
        let mut t = vec![vec![Element::zero(); 2]; 2];
        t[0][0] = Element::unit(0);
        t[0][1] = Element::unit(1);
        t[1][0] = Element::unit(1);
        let d = StructureAlgebra::new_dialgebra(labels, t.clone(), t);
        let bar = bar_algebra(&d).unwrap();
        assert_eq!(bar.algebra.dim(), 2);
        assert_eq!(bar.representatives, vec![0, 1]);
    }

    #[test]
    fn split_null_extension_of_plus_is_jordan_algebra() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 4);
        let p = d.plus_dialgebra();
        let e = split_null_extension(&p).unwrap();
        // dim D-hat = dim(bar D) + dim(D)
        assert_eq!(p.dim(), 98);
        assert_eq!(e.dim(), bar_algebra(&p).unwrap().algebra.dim() + p.dim());
        let a = alphabet(&["p", "q", "r", "s"]);
        let v = [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()];
        assert!(holds_identity_alg(&e, &commutativity(&v[0], &v[1]))
            .unwrap()
            .is_none());
        assert!(holds_identity_alg(&e, &multilinear_jordan(&v)).unwrap().is_none());
    }

    #[test]
    fn square_zero_part() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 2);
        let e = split_null_extension(&d).unwrap();
        let qdim = e.dim() - d.dim();
        // products of two M-part elements vanish
        for m in 0..d.dim() {
            for n in 0..d.dim() {
                assert!(e.product(&e.basis(qdim + m), &e.basis(qdim + n)).is_zero());
            }
        }
    }

    #[test]
    fn rejects_non_multilinear() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 2);
        let x = Var::new("x");
        let f = DiTermPoly::unit(DiTerm::node(DiOp::Right, DiTerm::leaf(&x), DiTerm::leaf(&x)));
        assert!(holds_identity_di(&d, &f).is_err());
    }

    #[test]
    fn zero_identity_failure_detected() {
        // a dialgebra violating the 0-identities cannot be barred
        let labels = vec!["u".into()];
        let mut left = vec![vec![Element::zero(); 1]; 1];
        let right = vec![vec![Element::zero(); 1]; 1];
        left[0][0] = Element::unit(0);
        let d = StructureAlgebra::new_dialgebra(labels, left, right);
        assert!(matches!(bar_algebra(&d), Err(Error::ZeroIdentitiesFail(_))));
    }

    #[test]
    fn json_round_trip() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 2);
        let s = to_json(&d);
        let d2 = from_json(&s).unwrap();
        assert_eq!(d.labels, d2.labels);
        assert_eq!(d.tables, d2.tables);
        let x = Var::with_ord("a", 1);
        let y = Var::with_ord("b", 2);
        let z = Var::with_ord("c", 3);
        for f in zero_identities(&x, &y, &z) {
            assert!(holds_identity_di(&d2, &f).unwrap().is_none());
        }
    }

    #[test]
    fn verdict_invariant_under_basis_permutation() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 2);
        let n = d.dim();
        // reverse the basis order
        let perm: Vec<usize> = (0..n).rev().collect();
        let inv = perm.clone();
        let remap = |v: &Element| -> Element {
            let mut out = Element::zero();
            for (k, c) in v.iter() {
                out.add_term(inv[*k], c.clone());
            }
            out
        };
        let mut left = vec![vec![Element::zero(); n]; n];
        let mut right = vec![vec![Element::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                left[i][j] = remap(&d.tables[0][perm[i]][perm[j]]);
                right[i][j] = remap(&d.tables[1][perm[i]][perm[j]]);
            }
        }
        let labels = perm.iter().map(|&k| d.labels[k].clone()).collect();
        let grading = d.grading().map(|g| Grading {
            grades: perm.iter().map(|&k| g.grades[k]).collect(),
            truncation: g.truncation,
        });
        let mut d2 = StructureAlgebra::new_dialgebra(labels, left, right);
        if let Some(g) = grading {
            d2 = d2.with_grading(g);
        }
        let x = Var::with_ord("a", 1);
        let y = Var::with_ord("b", 2);
        let z = Var::with_ord("c", 3);
        for f in zero_identities(&x, &y, &z) {
            assert_eq!(
                holds_identity_di(&d, &f).unwrap().is_none(),
                holds_identity_di(&d2, &f).unwrap().is_none()
            );
        }
    }

    #[test]
    fn counterexample_is_reproducible() {
        let vars = two_vars();
        let (d, _) = truncated_free_dialgebra(&vars, 2);
        let p = d.plus_dialgebra();
        let a = alphabet(&["p", "q"]);
        let f = DiTermPoly::unit(DiTerm::node(
            DiOp::Right,
            DiTerm::leaf(&a[0]),
            DiTerm::leaf(&a[1]),
        ))
        .sub(&DiTermPoly::unit(DiTerm::node(
            DiOp::Right,
            DiTerm::leaf(&a[1]),
            DiTerm::leaf(&a[0]),
        )));
        let c = holds_identity_di(&p, &f).unwrap().expect("must fail");
        let assign: BTreeMap<Var, Element> = a
            .iter()
            .cloned()
            .zip(c.tuple.iter().map(|&i| p.basis(i)))
            .collect();
        assert_eq!(p.eval_di(&f, &assign), c.value);
        assert!(!c.value.is_zero());
    }

    #[test]
    fn eval_with_scaled_elements() {
        // bilinearity sanity: evaluating on combinations matches expansion
        let vars = two_vars();
        let (d, basis) = truncated_free_dialgebra(&vars, 3);
        let i = 0usize;
        let j = 1usize;
        let a = d.basis(i).scale(&scalar(3));
        let b = d.basis(j).sub(&d.basis(i));
        let got = d.left_product(&a, &b);
        let expect = d
            .left_product(&d.basis(i), &d.basis(j))
            .scale(&scalar(3))
            .sub(&d.left_product(&d.basis(i), &d.basis(i)).scale(&scalar(3)));
        assert_eq!(got, expect, "bilinearity at {} {}", basis[i], basis[j]);
    }
}

//! Exact rational arithmetic and span membership over Q.
//!
//! Vectors are sparse linear combinations keyed by an arbitrary ordered
//! index type; the membership and ideal computations elsewhere in the
//! crate use (di)monomials as keys directly, so the canonical monomial
//! order doubles as the column order of every matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar. Always reduced, denominator positive, zero is 0/1.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Scalar {
    ratio(1, 2)
}

/// Sparse linear combination over `Scalar`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord>(BTreeMap<K, Scalar>);

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb(BTreeMap::new())
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !coeff.is_zero() {
            m.insert(key, coeff);
        }
        LinComb(m)
    }

    pub fn unit(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.0.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (K, Scalar)> {
        self.0.into_iter()
    }

    /// Smallest key with nonzero coefficient, in the canonical order.
    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.0.iter().next()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in other.iter() {
            r.add_term(k.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb(self.0.iter().map(|(k, c)| (k.clone(), c * s)).collect())
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * s);
        }
    }

    /// Applies a linear map given on keys; images may collide and are summed.
    pub fn map_terms<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of a map on key pairs.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinComb<K2>,
        mut f: impl FnMut(&K, &K2) -> LinComb<K3>,
    ) -> LinComb<K3> {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Display> LinComb<K> {
    /// Renders `c1 k1 + c2 k2 - ...` with rational coefficients.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{} * ", abs));
            }
            out.push_str(&k.to_string());
        }
        out
    }
}

/// Result of an exact span-membership query.
#[derive(Clone, Debug)]
pub enum SpanResult<K: Ord> {
    /// Coefficients over the *original* inserted rows recombining to the query.
    Member { coeffs: Vec<Scalar> },
    /// Nonzero residual after reduction; proves non-membership.
    NonMember { residual: LinComb<K> },
}

impl<K: Ord> SpanResult<K> {
    pub fn is_member(&self) -> bool {
        matches!(self, SpanResult::Member { .. })
    }
}

/// Incremental row-reduced span with bookkeeping back to the inserted rows.
///
/// Rows are kept in reduced echelon form; the pivot of each stored row is
/// the lowest key of the row in the canonical key order, pivot coefficient 1,
/// and pivots are eliminated from all other stored rows.
#[derive(Clone, Debug)]
pub struct SpanBasis<K: Ord + Clone> {
    rows: Vec<LinComb<K>>,
    /// combos[r] expresses rows[r] over the inserted vectors.
    combos: Vec<Vec<Scalar>>,
    pivots: Vec<K>,
    inserted: usize,
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        SpanBasis {
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinComb<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[K] {
        &self.pivots
    }

    fn reduce_tracking(&self, v: &LinComb<K>) -> (LinComb<K>, Vec<Scalar>) {
        let mut residual = v.clone();
        let mut used = vec![Scalar::zero(); self.rows.len()];
        // One pass suffices: rows are fully reduced and sorted by pivot.
        for (i, row) in self.rows.iter().enumerate() {
            let c = residual.coeff(&self.pivots[i]);
            if !c.is_zero() {
                residual.add_scaled(row, &-c.clone());
                used[i] = c;
            }
        }
        (residual, used)
    }

    /// Adds a vector to the span. Returns true if the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let (mut residual, used) = self.reduce_tracking(v);
        // combo for the residual over inserted vectors (including v itself)
        let mut combo = vec![Scalar::zero(); self.inserted + 1];
        combo[self.inserted] = Scalar::one();
        for (i, c) in used.iter().enumerate() {
            if !c.is_zero() {
                for (j, cj) in self.combos[i].iter().enumerate() {
                    combo[j] = &combo[j] - &(c * cj);
                }
            }
        }
        self.inserted += 1;
        if residual.is_zero() {
            return false;
        }
        let (pivot, lead) = {
            let (k, c) = residual.leading().expect("nonzero residual");
            (k.clone(), c.clone())
        };
        let inv = Scalar::one() / lead;
        residual = residual.scale(&inv);
        for c in combo.iter_mut() {
            *c = &*c * &inv;
        }
        // eliminate the new pivot from existing rows
        for i in 0..self.rows.len() {
            let c = self.rows[i].coeff(&pivot);
            if !c.is_zero() {
                self.rows[i].add_scaled(&residual, &-c.clone());
                while self.combos[i].len() < combo.len() {
                    self.combos[i].push(Scalar::zero());
                }
                for (j, cj) in combo.iter().enumerate() {
                    self.combos[i][j] = &self.combos[i][j] - &(&c * cj);
                }
            }
        }
        // keep rows sorted by pivot
        let pos = self
            .pivots
            .binary_search(&pivot)
            .expect_err("pivot must be new");
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, residual);
        self.combos.insert(pos, combo);
        true
    }

    /// Residual of `v` modulo the span (zero iff `v` is in the span).
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        self.reduce_tracking(v).0
    }

    /// Exact membership with certificate over the inserted rows.
    pub fn in_span(&self, v: &LinComb<K>) -> SpanResult<K> {
        let (residual, used) = self.reduce_tracking(v);
        if residual.is_zero() {
            let mut coeffs = vec![Scalar::zero(); self.inserted];
            for (i, c) in used.iter().enumerate() {
                if !c.is_zero() {
                    for (j, cj) in self.combos[i].iter().enumerate() {
                        coeffs[j] = &coeffs[j] + &(c * cj);
                    }
                }
            }
            SpanResult::Member { coeffs }
        } else {
            SpanResult::NonMember { residual }
        }
    }
}

impl<K: Ord + Clone> Default for SpanBasis<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// Reduced row-echelon form of a list of sparse rows.
///
/// Returns the reduced nonzero rows, the pivot keys (lowest key first) and
/// the rank. Deterministic: pivot choice is always the lowest key.
pub fn rref<K: Ord + Clone>(rows: &[LinComb<K>]) -> (Vec<LinComb<K>>, Vec<K>, usize) {
    let mut basis = SpanBasis::new();
    for r in rows {
        basis.insert(r);
    }
    let rank = basis.rank();
    (basis.rows, basis.pivots, rank)
}

/// Span membership against a fixed list of basis rows.
pub fn in_span<K: Ord + Clone>(v: &LinComb<K>, rows: &[LinComb<K>]) -> SpanResult<K> {
    let mut basis = SpanBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.in_span(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(entries: &[(usize, (i64, i64))]) -> LinComb<usize> {
        LinComb::from_terms(entries.iter().map(|&(k, (n, d))| (k, ratio(n, d))))
    }

    #[test]
    fn rref_dependent_rows() {
        let rows = vec![vec_of(&[(0, (1, 1)), (1, (2, 1))]), vec_of(&[(0, (2, 1)), (1, (4, 1))])];
        let (_, _, rank) = rref(&rows);
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_identity() {
        let rows = vec![vec_of(&[(0, (1, 1))]), vec_of(&[(1, (1, 1))])];
        let (_, pivots, rank) = rref(&rows);
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_two_with_fractions() {
        // rows [1/2, 1], [1, 2], [0, 3]
        let rows = vec![
            vec_of(&[(0, (1, 2)), (1, (1, 1))]),
            vec_of(&[(0, (1, 1)), (1, (2, 1))]),
            vec_of(&[(1, (3, 1))]),
        ];
        let (_, _, rank) = rref(&rows);
        assert_eq!(rank, 2);
    }

    #[test]
    fn in_span_scaled_row() {
        let basis = vec![vec_of(&[(0, (1, 1)), (1, (2, 1))])];
        let v = vec_of(&[(0, (2, 1)), (1, (4, 1))]);
        match in_span(&v, &basis) {
            SpanResult::Member { coeffs } => assert_eq!(coeffs, vec![scalar(2)]),
            _ => panic!("expected member"),
        }
    }

    #[test]
    fn in_span_rejects() {
        let basis = vec![vec_of(&[(1, (1, 1))])];
        let v = vec_of(&[(0, (1, 1))]);
        assert!(!in_span(&v, &basis).is_member());
    }

    #[test]
    fn in_span_solves_system() {
        // v = [1,1,1], basis {[1,0,1],[0,2,0]} -> coeffs (1, 1/2)
        let basis = vec![
            vec_of(&[(0, (1, 1)), (2, (1, 1))]),
            vec_of(&[(1, (2, 1))]),
        ];
        let v = vec_of(&[(0, (1, 1)), (1, (1, 1)), (2, (1, 1))]);
        match in_span(&v, &basis) {
            SpanResult::Member { coeffs } => {
                assert_eq!(coeffs, vec![scalar(1), ratio(1, 2)]);
            }
            _ => panic!("expected member"),
        }
    }

    #[test]
    fn member_coeffs_recombine_exactly() {
        let rows = vec![
            vec_of(&[(0, (1, 3)), (1, (1, 1)), (3, (2, 1))]),
            vec_of(&[(0, (1, 1)), (2, (5, 2))]),
            vec_of(&[(1, (7, 1)), (3, (1, 6))]),
        ];
        let v = {
            let mut v = rows[0].scale(&ratio(3, 7));
            v.add_scaled(&rows[1], &ratio(-2, 5));
            v.add_scaled(&rows[2], &scalar(4));
            v
        };
        match in_span(&v, &rows) {
            SpanResult::Member { coeffs } => {
                let mut recomb = LinComb::zero();
                for (c, r) in coeffs.iter().zip(rows.iter()) {
                    recomb.add_scaled(r, c);
                }
                assert_eq!(recomb, v);
            }
            _ => panic!("expected member"),
        }
    }

    #[test]
    fn rank_invariant_under_permutation() {
        let rows = vec![
            vec_of(&[(0, (1, 1)), (1, (1, 1))]),
            vec_of(&[(1, (1, 1)), (2, (1, 1))]),
            vec_of(&[(0, (1, 1)), (2, (-1, 1))]),
            vec_of(&[(2, (3, 1))]),
        ];
        let (_, _, rank) = rref(&rows);
        let permuted: Vec<_> = vec![rows[2].clone(), rows[0].clone(), rows[3].clone(), rows[1].clone()];
        let (_, _, rank2) = rref(&permuted);
        assert_eq!(rank, rank2);
    }
}

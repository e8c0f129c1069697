//! Graded ideal computations inside the two-generated special Jordan
//! dialgebra, the tetrad criterion for speciality of its quotients, and
//! the certified construction of an exceptional quotient.

use crate::diassoc::{
    central_decompose, dotted_tetrad, involution, jordan_left, jordan_right, Dimonomial,
    Dipolynomial, Var,
};
use crate::linalg::{ratio, SpanBasis, SpanResult};
use crate::membership::{jordan_span_di, Multidegree};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Row-reduced basis of the degree-`d` component of the special Jordan
/// dialgebra on two generators.
pub fn algebra_component(x: &Var, y: &Var, d: usize, bound: usize) -> Result<Vec<Dipolynomial>> {
    if d > bound {
        return Err(Error::BoundExceeded { degree: d, bound });
    }
    let mut basis = SpanBasis::new();
    for dx in 0..=d {
        let dy = d - dx;
        let mut md = Multidegree::new();
        if dx > 0 {
            md.insert(x.clone(), dx);
        }
        if dy > 0 {
            md.insert(y.clone(), dy);
        }
        if md.is_empty() {
            continue;
        }
        let span = jordan_span_di(&md, bound)?;
        for row in span.basis.rows() {
            basis.insert(row);
        }
    }
    Ok(basis.rows().to_vec())
}

fn degree_of(f: &Dipolynomial) -> Result<usize> {
    let mut degs = f.keys().map(|w| w.len());
    let first = degs.next().ok_or_else(|| {
        Error::Internal("zero generator has no degree".into())
    })?;
    if degs.all(|d| d == first) {
        Ok(first)
    } else {
        Err(Error::NotHomogeneous("ideal generator".into()))
    }
}

/// Row-reduced basis of the degree-`d` component of the ideal generated
/// by homogeneous elements inside the two-generated special Jordan
/// dialgebra.
///
/// Computed by graded closure: the degree-`n` component is spanned by the
/// degree-`n` generators together with all four Jordan diproducts of an
/// algebra element of degree `p` with an ideal element of degree `q`,
/// `p + q = n`. Lower components are complete before higher ones are
/// formed, so iterating each degree to a rank fixpoint terminates
/// immediately; the loop stays as a self-check.
pub fn ideal_component(
    x: &Var,
    y: &Var,
    generators: &[Dipolynomial],
    d: usize,
    bound: usize,
) -> Result<Vec<Dipolynomial>> {
    if d > bound {
        return Err(Error::BoundExceeded { degree: d, bound });
    }
    let mut gens_by_degree: BTreeMap<usize, Vec<&Dipolynomial>> = BTreeMap::new();
    for g in generators {
        gens_by_degree.entry(degree_of(g)?).or_default().push(g);
    }
    let mut components: BTreeMap<usize, SpanBasis<Dimonomial>> = BTreeMap::new();
    let min_degree = match gens_by_degree.keys().next() {
        Some(&m) => m,
        None => return Ok(Vec::new()),
    };
    for n in min_degree..=d {
        let mut basis = SpanBasis::new();
        for g in gens_by_degree.get(&n).into_iter().flatten() {
            basis.insert(g);
        }
        loop {
            let rank_before = basis.rank();
            for p in 1..n {
                let q = n - p;
                let ideal_rows: Vec<Dipolynomial> = match components.get(&q) {
                    Some(b) => b.rows().to_vec(),
                    None => continue,
                };
                if ideal_rows.is_empty() {
                    continue;
                }
                for a in algebra_component(x, y, p, bound)? {
                    for w in &ideal_rows {
                        basis.insert(&jordan_right(&a, w));
                        basis.insert(&jordan_left(&a, w));
                        basis.insert(&jordan_right(w, &a));
                        basis.insert(&jordan_left(w, &a));
                    }
                }
            }
            if basis.rank() == rank_before {
                break;
            }
        }
        components.insert(n, basis);
    }
    Ok(components
        .remove(&d)
        .map(|b| b.rows().to_vec())
        .unwrap_or_default())
}

/// Per-generator outcome of the tetrad criterion.
#[derive(Clone, Debug)]
pub struct TetradVerdict {
    pub generator_index: usize,
    /// `{u x^ x y}` lies in the ideal component of matching degree.
    pub x_tetrad_in_ideal: bool,
    /// `{u y^ y x}` lies in the ideal component of matching degree.
    pub y_tetrad_in_ideal: bool,
    /// Residual of the first failing tetrad, when any.
    pub residual: Option<Dipolynomial>,
}

#[derive(Clone, Debug)]
pub struct SpecialityReport {
    pub special: bool,
    pub verdicts: Vec<TetradVerdict>,
    /// Rank of each ideal component consulted, keyed by degree.
    pub ideal_ranks: BTreeMap<usize, usize>,
}

/// Is the quotient of the two-generated special Jordan dialgebra by the
/// ideal generated by `generators` special? Decided by the tetrad
/// criterion: for every generator `u`, both `{u x^ x y}` and `{u y^ y x}`
/// must lie in the ideal.
pub fn quotient_speciality_check(
    x: &Var,
    y: &Var,
    generators: &[Dipolynomial],
    bound: usize,
) -> Result<SpecialityReport> {
    let mut verdicts = Vec::new();
    let mut ideal_ranks = BTreeMap::new();
    let mut special = true;
    for (i, u) in generators.iter().enumerate() {
        let degree = degree_of(u)? + 3;
        if degree > bound {
            return Err(Error::BoundExceeded { degree, bound });
        }
        let ideal = ideal_component(x, y, generators, degree, bound)?;
        ideal_ranks.insert(degree, ideal.len());
        let mut basis = SpanBasis::new();
        for row in &ideal {
            basis.insert(row);
        }
        let tx = dotted_tetrad(u, x, x, y, 0);
        let ty = dotted_tetrad(u, y, y, x, 0);
        let rx = basis.in_span(&tx);
        let ry = basis.in_span(&ty);
        let residual = match (&rx, &ry) {
            (SpanResult::NonMember { residual }, _) => Some(residual.clone()),
            (_, SpanResult::NonMember { residual }) => Some(residual.clone()),
            _ => None,
        };
        let v = TetradVerdict {
            generator_index: i,
            x_tetrad_in_ideal: rx.is_member(),
            y_tetrad_in_ideal: ry.is_member(),
            residual,
        };
        special &= v.x_tetrad_in_ideal && v.y_tetrad_in_ideal;
        verdicts.push(v);
    }
    Ok(SpecialityReport {
        special,
        verdicts,
        ideal_ranks,
    })
}

/// Full certificate of the exceptional-quotient construction.
#[derive(Clone, Debug)]
pub struct ExceptionalQuotientCertificate {
    pub k: Dipolynomial,
    pub f: Dipolynomial,
    /// `f = {x^3 x^ y} - {y^2 x x^ y}` holds exactly.
    pub f_matches_closed_form: bool,
    pub f_symmetric: bool,
    /// `f` has no dimonomials with central letter `y`.
    pub f_has_no_y_component: bool,
    /// Rank of the ideal component at the degree of `k` (must be 1).
    pub seed_rank: usize,
    pub ideal_rank_deg5: usize,
    pub f_outside_ideal: bool,
    pub residual: Option<Dipolynomial>,
}

impl ExceptionalQuotientCertificate {
    /// All checks passed: the quotient by the ideal of `k` is exceptional.
    pub fn verified(&self) -> bool {
        self.f_matches_closed_form
            && self.f_symmetric
            && self.f_has_no_y_component
            && self.seed_rank == 1
            && self.f_outside_ideal
    }
}

/// Constructs `k = (x^ x + x x^ - y^ y - y y^)/2` and `f = {k x x^ y}`,
/// checks the closed form of `f`, and certifies that `f` stays outside
/// the degree-5 component of the ideal generated by `k` — so the quotient
/// by that ideal is an exceptional Jordan dialgebra.
pub fn verify_exceptional_quotient(x: &Var, y: &Var) -> Result<ExceptionalQuotientCertificate> {
    let bound = 6;
    let dm = |letters: &[&Var], dot: usize| {
        Dimonomial::new(letters.iter().map(|v| (*v).clone()).collect(), dot)
    };
    let k = Dipolynomial::from_terms([
        (dm(&[x, x], 0), ratio(1, 2)),
        (dm(&[x, x], 1), ratio(1, 2)),
        (dm(&[y, y], 0), ratio(-1, 2)),
        (dm(&[y, y], 1), ratio(-1, 2)),
    ]);
    // f = {k x x^ y}: the dot sits on the middle letter of the tail
    let f = dotted_tetrad(&k, x, x, y, 1);
    let closed = {
        let a = crate::diassoc::symmetrize(&dm(&[x, x, x, x, y], 3));
        let b = crate::diassoc::symmetrize(&dm(&[y, y, x, x, y], 3));
        a.sub(&b)
    };
    let f_matches_closed_form = f == closed;
    let f_symmetric = involution(&f) == f;
    let f_has_no_y_component = central_decompose(&f)
        .get(y)
        .map_or(true, |p| p.is_zero());
    let seed = ideal_component(x, y, std::slice::from_ref(&k), 2, bound)?;
    let i5 = ideal_component(x, y, std::slice::from_ref(&k), 5, bound)?;
    let mut basis = SpanBasis::new();
    for row in &i5 {
        basis.insert(row);
    }
    let (f_outside_ideal, residual) = match basis.in_span(&f) {
        SpanResult::Member { .. } => (false, None),
        SpanResult::NonMember { residual } => (true, Some(residual)),
    };
    Ok(ExceptionalQuotientCertificate {
        k,
        f,
        f_matches_closed_form,
        f_symmetric,
        f_has_no_y_component,
        seed_rank: seed.len(),
        ideal_rank_deg5: i5.len(),
        f_outside_ideal,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diassoc::{alphabet, gen_dipoly};
    use crate::membership::symmetric_check;

    fn xy() -> (Var, Var) {
        let a = alphabet(&["x", "y"]);
        (a[0].clone(), a[1].clone())
    }

    #[test]
    fn algebra_component_dimensions() {
        let (x, y) = xy();
        let c1 = algebra_component(&x, &y, 1, 6).unwrap();
        assert_eq!(c1.len(), 2);
        // degree 2: x |-o x, y |-o y, x |-o y, y |-o x are independent and
        // exhaust the symmetric subspace (the 8 degree-2 dimonomials fall
        // into four involution orbits), so the dimension is 4
        let c2 = algebra_component(&x, &y, 2, 6).unwrap();
        assert_eq!(c2.len(), 4);
        for row in c1.iter().chain(&c2) {
            assert!(symmetric_check(row));
        }
        assert!(algebra_component(&x, &y, 9, 6).is_err());
    }

    #[test]
    fn ideal_seed_and_growth() {
        let (x, y) = xy();
        let k = verify_exceptional_quotient(&x, &y).unwrap().k;
        let gens = [k.clone()];
        let i2 = ideal_component(&x, &y, &gens, 2, 6).unwrap();
        assert_eq!(i2.len(), 1);
        // degree 3: spanned by the four diproducts of k with x and y
        let i3 = ideal_component(&x, &y, &gens, 3, 6).unwrap();
        let mut expect = SpanBasis::new();
        for v in [&x, &y] {
            let g = gen_dipoly(v);
            expect.insert(&jordan_right(&k, &g));
            expect.insert(&jordan_left(&k, &g));
            expect.insert(&jordan_right(&g, &k));
            expect.insert(&jordan_left(&g, &k));
        }
        assert_eq!(i3.len(), expect.rank());
        for row in &i3 {
            assert!(expect.in_span(row).is_member());
            assert!(symmetric_check(row));
        }
        // single generator of degree 1
        let gx = [gen_dipoly(&x)];
        let i1 = ideal_component(&x, &y, &gx, 1, 6).unwrap();
        assert_eq!(i1.len(), 1);
    }

    #[test]
    fn quotient_by_generator_is_special() {
        let (x, y) = xy();
        let report =
            quotient_speciality_check(&x, &y, &[gen_dipoly(&x)], 6).unwrap();
        assert!(report.special);
        // empty generator set: nothing to check, special
        let empty = quotient_speciality_check(&x, &y, &[], 6).unwrap();
        assert!(empty.special);
        assert!(empty.verdicts.is_empty());
    }

    #[test]
    fn exceptional_quotient_certified() {
        let (x, y) = xy();
        let cert = verify_exceptional_quotient(&x, &y).unwrap();
        assert!(cert.f_matches_closed_form);
        assert!(cert.f_symmetric);
        assert!(cert.f_has_no_y_component);
        assert_eq!(cert.seed_rank, 1);
        assert!(cert.f_outside_ideal);
        assert!(cert.verified());
        // the tetrad criterion agrees: the quotient is not special
        let report =
            quotient_speciality_check(&x, &y, std::slice::from_ref(&cert.k), 6).unwrap();
        assert!(!report.special);
    }

    #[test]
    fn rejects_inhomogeneous_generator() {
        let (x, y) = xy();
        let g = gen_dipoly(&x).add(&jordan_right(&gen_dipoly(&x), &gen_dipoly(&y)));
        assert!(ideal_component(&x, &y, &[g], 3, 6).is_err());
    }
}

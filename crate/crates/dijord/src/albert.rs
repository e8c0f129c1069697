//! Rational octonions by Cayley-Dickson doubling, the 27-dimensional
//! algebra of Hermitian 3x3 octonion matrices under `a o b = (ab + ba)/2`,
//! its dialgebra avatar with equal products, and certification of
//! multilinear s-identities by evaluation there.

use crate::diassoc::Var;
use crate::diterm::{expand_jordan, expand_jordan_di, psi_alg, AlgTerm, AlgTermPoly, DiTerm, DiTermPoly};
use crate::linalg::{half, scalar, LinComb, Scalar, SpanBasis};
use crate::structalg::{Element, StructureAlgebra};
use crate::{Error, Result};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Algebra with a conjugation, as raw structure constants; the input and
/// output shape of the doubling step.
#[derive(Clone, Debug)]
pub struct InvolutiveAlgebra {
    pub table: Vec<Vec<LinComb<usize>>>,
    pub conj: Vec<LinComb<usize>>,
}

/// The ground field as a one-dimensional algebra with trivial conjugation.
pub fn rationals() -> InvolutiveAlgebra {
    InvolutiveAlgebra {
        table: vec![vec![LinComb::unit(0)]],
        conj: vec![LinComb::unit(0)],
    }
}

/// One Cayley-Dickson doubling step with parameter `mu`:
/// `(a,b)(c,d) = (ac + mu conj(d) b, da + b conj(c))`, `conj(a,b) = (conj a, -b)`.
pub fn cayley_dickson(base: &InvolutiveAlgebra, mu: &Scalar) -> InvolutiveAlgebra {
    let n = base.table.len();
    let lift = |v: &LinComb<usize>, offset: usize| -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (k, c) in v.iter() {
            out.add_term(k + offset, c.clone());
        }
        out
    };
    let mul = |a: &LinComb<usize>, b: &LinComb<usize>| -> LinComb<usize> {
        a.bilinear(b, |&i, &j| base.table[i][j].clone())
    };
    let conj = |a: &LinComb<usize>| -> LinComb<usize> {
        a.map_terms(|&i| base.conj[i].clone())
    };
    let dim = 2 * n;
    let mut table = vec![vec![LinComb::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            // basis element i = (e_i, 0) or (0, e_{i-n})
            let (a, b) = if i < n {
                (LinComb::unit(i), LinComb::zero())
            } else {
                (LinComb::zero(), LinComb::unit(i - n))
            };
            let (c, d) = if j < n {
                (LinComb::unit(j), LinComb::zero())
            } else {
                (LinComb::zero(), LinComb::unit(j - n))
            };
            let first = mul(&a, &c).add(&mul(&conj(&d), &b).scale(mu));
            let second = mul(&d, &a).add(&mul(&b, &conj(&c)));
            table[i][j] = lift(&first, 0).add(&lift(&second, n));
        }
    }
    let mut conj_out = Vec::with_capacity(dim);
    for i in 0..dim {
        if i < n {
            conj_out.push(lift(&base.conj[i], 0));
        } else {
            conj_out.push(LinComb::term(i, -Scalar::one()));
        }
    }
    InvolutiveAlgebra {
        table,
        conj: conj_out,
    }
}

/// Three doubling steps with `mu = -1` from the rationals.
pub fn octonion_algebra() -> InvolutiveAlgebra {
    let m = -Scalar::one();
    let mut a = rationals();
    for _ in 0..3 {
        a = cayley_dickson(&a, &m);
    }
    a
}

/// `e_i e_j = sign * e_k`, extracted once from the doubling construction.
fn oct_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let alg = octonion_algebra();
        let mut t = [[(0i8, 0usize); 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let cell = &alg.table[i][j];
                assert_eq!(cell.len(), 1, "octonion basis products are monomial");
                let (&k, c) = cell.iter().next().unwrap();
                let sign = if *c == Scalar::one() {
                    1
                } else if *c == -Scalar::one() {
                    -1
                } else {
                    panic!("octonion structure constants are +-1")
                };
                t[i][j] = (sign, k);
            }
        }
        t
    })
}

/// Octonion with dense rational coordinates over `e0 = 1, e1, ..., e7`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Octonion(pub [Scalar; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| Scalar::zero()))
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        let mut o = Self::zero();
        o.0[0] = s;
        o
    }

    pub fn unit(i: usize) -> Self {
        let mut o = Self::zero();
        o.0[i] = Scalar::one();
        o
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] - &other.0[i]))
    }

    pub fn neg(&self) -> Self {
        Octonion(std::array::from_fn(|i| -self.0[i].clone()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn conj(&self) -> Self {
        Octonion(std::array::from_fn(|i| {
            if i == 0 {
                self.0[0].clone()
            } else {
                -self.0[i].clone()
            }
        }))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = oct_table();
        let mut out = Self::zero();
        for i in 0..8 {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if other.0[j].is_zero() {
                    continue;
                }
                let (sign, k) = t[i][j];
                let p = &self.0[i] * &other.0[j];
                if sign > 0 {
                    out.0[k] = &out.0[k] + &p;
                } else {
                    out.0[k] = &out.0[k] - &p;
                }
            }
        }
        out
    }

    /// `N(a) = a conj(a)`: the sum of coordinate squares.
    pub fn norm(&self) -> Scalar {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn real_part(&self) -> Scalar {
        self.0[0].clone()
    }
}

/// Hermitian 3x3 octonion matrix: diagonal scalars and the upper
/// off-diagonal entries at (1,2), (1,3), (2,3); the lower triangle is
/// implicitly conjugate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlbertElement {
    pub diag: [Scalar; 3],
    pub off: [Octonion; 3],
}

/// Dimension of the Hermitian matrix algebra over the rationals.
pub const ALBERT_DIM: usize = 27;

fn off_slot(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("off_slot expects an upper off-diagonal position"),
    }
}

impl AlbertElement {
    pub fn zero() -> Self {
        AlbertElement {
            diag: std::array::from_fn(|_| Scalar::zero()),
            off: std::array::from_fn(|_| Octonion::zero()),
        }
    }

    pub fn one() -> Self {
        let mut e = Self::zero();
        for d in e.diag.iter_mut() {
            *d = Scalar::one();
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|c| c.is_zero()) && self.off.iter().all(|o| o.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        AlbertElement {
            diag: std::array::from_fn(|i| &self.diag[i] + &other.diag[i]),
            off: std::array::from_fn(|i| self.off[i].add(&other.off[i])),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AlbertElement {
            diag: std::array::from_fn(|i| &self.diag[i] - &other.diag[i]),
            off: std::array::from_fn(|i| self.off[i].sub(&other.off[i])),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        AlbertElement {
            diag: std::array::from_fn(|i| &self.diag[i] * s),
            off: std::array::from_fn(|i| self.off[i].scale(s)),
        }
    }

    fn matrix(&self) -> [[Octonion; 3]; 3] {
        let mut m = std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
        let m_ref: &mut [[Octonion; 3]; 3] = &mut m;
        for i in 0..3 {
            m_ref[i][i] = Octonion::scalar(self.diag[i].clone());
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            m_ref[i][j] = self.off[off_slot(i, j)].clone();
            m_ref[j][i] = self.off[off_slot(i, j)].conj();
        }
        m
    }

    fn from_matrix(m: &[[Octonion; 3]; 3]) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            debug_assert!(
                m[i][i].sub(&Octonion::scalar(m[i][i].real_part())).is_zero(),
                "diagonal of a Jordan product of Hermitian matrices is real"
            );
            out.diag[i] = m[i][i].real_part();
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            debug_assert_eq!(m[j][i], m[i][j].conj(), "result must be Hermitian");
            out.off[off_slot(i, j)] = m[i][j].clone();
        }
        out
    }

    /// The `i`-th standard basis element: three diagonal idempotents, then
    /// eight octonion units in each off-diagonal slot.
    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        if i < 3 {
            e.diag[i] = Scalar::one();
        } else {
            let slot = (i - 3) / 8;
            let unit = (i - 3) % 8;
            e.off[slot] = Octonion::unit(unit);
        }
        e
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(ALBERT_DIM);
        v.extend(self.diag.iter().cloned());
        for o in &self.off {
            v.extend(o.0.iter().cloned());
        }
        v
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), ALBERT_DIM);
        let mut e = Self::zero();
        for i in 0..3 {
            e.diag[i] = v[i].clone();
        }
        for slot in 0..3 {
            for k in 0..8 {
                e.off[slot].0[k] = v[3 + slot * 8 + k].clone();
            }
        }
        e
    }
}

/// `a o b = (ab + ba)/2` on Hermitian matrices; commutative by
/// construction.
pub fn albert_product(a: &AlbertElement, b: &AlbertElement) -> AlbertElement {
    let ma = a.matrix();
    let mb = b.matrix();
    let h = half();
    let mut m: [[Octonion; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = Octonion::zero();
            for k in 0..3 {
                acc = acc.add(&ma[i][k].mul(&mb[k][j]));
                acc = acc.add(&mb[i][k].mul(&ma[k][j]));
            }
            m[i][j] = acc.scale(&h);
        }
    }
    AlbertElement::from_matrix(&m)
}

/// The Hermitian matrix algebra as a dialgebra with equal operations.
pub fn albert_as_dialgebra() -> StructureAlgebra {
    let mut table = vec![vec![Element::zero(); ALBERT_DIM]; ALBERT_DIM];
    for i in 0..ALBERT_DIM {
        for j in 0..ALBERT_DIM {
            let p = albert_product(&AlbertElement::basis(i), &AlbertElement::basis(j));
            table[i][j] = Element::from_terms(
                p.to_coords()
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| (k, c)),
            );
        }
    }
    let labels = (0..ALBERT_DIM).map(|i| format!("a{}", i)).collect();
    StructureAlgebra::new_dialgebra(labels, table.clone(), table)
}

/// Rank of the multiplication representation `x -> (x o e_j)_j`; the
/// annihilator `{x | x o J = 0}` is trivial iff the rank is full.
pub fn annihilator_rank() -> usize {
    let mut basis = SpanBasis::new();
    for i in 0..ALBERT_DIM {
        let mut row: LinComb<usize> = LinComb::zero();
        for j in 0..ALBERT_DIM {
            let p = albert_product(&AlbertElement::basis(i), &AlbertElement::basis(j));
            for (k, c) in p.to_coords().into_iter().enumerate() {
                row.add_term(j * ALBERT_DIM + k, c);
            }
        }
        basis.insert(&row);
    }
    basis.rank()
}

/// Witness group of a variable: linearization variables `x#1, x#2, ...`
/// share the element assigned to their base name.
fn witness_group(v: &Var) -> String {
    match v.name().split_once('#') {
        Some((base, _)) => base.to_string(),
        None => v.name().to_string(),
    }
}

fn random_albert(rng: &mut ChaCha8Rng) -> AlbertElement {
    let coords: Vec<Scalar> = (0..ALBERT_DIM)
        .map(|_| scalar(rng.gen_range(-2..=2)))
        .collect();
    AlbertElement::from_coords(&coords)
}

/// Memoized evaluation of a term polynomial in the Hermitian matrix
/// algebra. Terms are cached after relabeling every leaf by its witness
/// group, which collapses the orbit of a linearization to a single
/// evaluation.
struct MemoEval<'a> {
    assign: &'a BTreeMap<String, AlbertElement>,
    group_var: BTreeMap<Var, Var>,
    memo_alg: BTreeMap<AlgTerm, AlbertElement>,
    memo_di: BTreeMap<DiTerm, AlbertElement>,
}

impl<'a> MemoEval<'a> {
    fn new(assign: &'a BTreeMap<String, AlbertElement>, vars: &[Var]) -> Self {
        let group_var = vars
            .iter()
            .map(|v| (v.clone(), Var::new(&witness_group(v))))
            .collect();
        MemoEval {
            assign,
            group_var,
            memo_alg: BTreeMap::new(),
            memo_di: BTreeMap::new(),
        }
    }

    fn eval_alg_term(&mut self, t: &AlgTerm) -> AlbertElement {
        let key = t.rename(&self.group_var);
        if let Some(v) = self.memo_alg.get(&key) {
            return v.clone();
        }
        let out = match &key {
            AlgTerm::Leaf(v) => self.assign[v.name()].clone(),
            AlgTerm::Mul(l, r) => {
                let a = self.eval_alg_term(l);
                let b = self.eval_alg_term(r);
                albert_product(&a, &b)
            }
        };
        self.memo_alg.insert(key, out.clone());
        out
    }

    fn eval_alg(&mut self, f: &AlgTermPoly) -> AlbertElement {
        let mut out = AlbertElement::zero();
        for (t, c) in f.iter() {
            out = out.add(&self.eval_alg_term(t).scale(c));
        }
        out
    }

    /// Evaluation in the equal-products dialgebra: both operations act as
    /// the Jordan product.
    fn eval_di_term(&mut self, t: &DiTerm) -> AlbertElement {
        let key = t.rename(&self.group_var);
        if let Some(v) = self.memo_di.get(&key) {
            return v.clone();
        }
        let out = match &key {
            DiTerm::Leaf(v) => self.assign[v.name()].clone(),
            DiTerm::Node(_, l, r) => {
                let a = self.eval_di_term(l);
                let b = self.eval_di_term(r);
                albert_product(&a, &b)
            }
        };
        self.memo_di.insert(key, out.clone());
        out
    }

    fn eval_di(&mut self, f: &DiTermPoly) -> AlbertElement {
        let mut out = AlbertElement::zero();
        for (t, c) in f.iter() {
            out = out.add(&self.eval_di_term(t).scale(c));
        }
        out
    }
}

/// Evaluates a term polynomial at seeded random Hermitian matrices, one
/// element per witness group.
pub fn eval_at_random(f: &AlgTermPoly, seed: u64) -> AlbertElement {
    let mut vars: Vec<Var> = Vec::new();
    for (t, _) in f.iter() {
        for v in t.multidegree().keys() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    vars.sort();
    let mut groups: Vec<String> = vars.iter().map(witness_group).collect();
    groups.sort();
    groups.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let assign: BTreeMap<String, AlbertElement> = groups
        .into_iter()
        .map(|g| (g, random_albert(&mut rng)))
        .collect();
    let mut eval = MemoEval::new(&assign, &vars);
    eval.eval_alg(f)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlbertWitness {
    pub seed: u64,
    /// Coordinates per witness group, 27 rationals each (as strings in
    /// JSON output).
    pub assignment: BTreeMap<String, Vec<String>>,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DialgebraVerdict {
    pub var: String,
    /// The sign-placement image expands to zero, so it holds in every
    /// special Jordan dialgebra.
    pub expansion_zero: bool,
    /// Its evaluation at the stored witness in the equal-products
    /// dialgebra is nonzero.
    pub evaluation_nonzero: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SIdentityCertificate {
    /// The expansion at distinct generators vanishes: identity of all
    /// special Jordan algebras.
    pub special_side_zero: bool,
    pub witness: Option<AlbertWitness>,
    pub dialgebra_side: Vec<DialgebraVerdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SIdentityVerdict {
    /// Special side vanishes and a nonzero evaluation exists: a genuine
    /// s-identity, and every sign placement is one for dialgebras.
    SIdentity,
    /// The expansion is nonzero, so it fails in special Jordan algebras.
    NotSpecialIdentity,
    /// Special side vanishes, but no witness was found: possibly an
    /// identity of all Jordan algebras; never reported as a refutation.
    Inconclusive,
}

impl SIdentityCertificate {
    pub fn verdict(&self) -> SIdentityVerdict {
        if !self.special_side_zero {
            SIdentityVerdict::NotSpecialIdentity
        } else if self.witness.is_some()
            && !self.dialgebra_side.is_empty()
            && self
                .dialgebra_side
                .iter()
                .all(|d| d.expansion_zero && d.evaluation_nonzero)
        {
            SIdentityVerdict::SIdentity
        } else {
            SIdentityVerdict::Inconclusive
        }
    }
}

fn scalars_to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

const WITNESS_ATTEMPTS: usize = 64;

/// Certifies a multilinear s-identity candidate:
///
/// 1. special side — the expansion at distinct generators must vanish;
/// 2. Jordan side — seeded search for an assignment of Hermitian matrices
///    with small entries where the value is nonzero (variables sharing a
///    name before `#` receive equal elements, so a linearized identity is
///    probed at its un-linearized arguments);
/// 3. dialgebra side — for every variable, the sign-placement image
///    expands to zero and evaluates nonzero at the same witness in the
///    equal-products dialgebra.
pub fn certify_sidentity(g: &AlgTermPoly, seed: u64) -> Result<SIdentityCertificate> {
    let mut vars: Vec<Var> = Vec::new();
    for (t, _) in g.iter() {
        for v in t.multidegree().keys() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    vars.sort();
    for (t, _) in g.iter() {
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
    let degree = vars.len();
    if degree > 8 {
        return Err(Error::BoundExceeded { degree, bound: 8 });
    }

    let special_side_zero = expand_jordan(g).is_zero();

    let groups: Vec<String> = {
        let mut gs: Vec<String> = vars.iter().map(witness_group).collect();
        gs.dedup();
        gs.sort();
        gs.dedup();
        gs
    };

    let mut witness = None;
    let mut witness_assign: Option<BTreeMap<String, AlbertElement>> = None;
    if special_side_zero {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..WITNESS_ATTEMPTS {
            let assign: BTreeMap<String, AlbertElement> = groups
                .iter()
                .map(|gname| (gname.clone(), random_albert(&mut rng)))
                .collect();
            let mut eval = MemoEval::new(&assign, &vars);
            let value = eval.eval_alg(g);
            if !value.is_zero() {
                witness = Some(AlbertWitness {
                    seed,
                    assignment: assign
                        .iter()
                        .map(|(k, e)| (k.clone(), scalars_to_strings(&e.to_coords())))
                        .collect(),
                    value: scalars_to_strings(&value.to_coords()),
                });
                witness_assign = Some(assign);
                break;
            }
        }
    }

    let mut dialgebra_side = Vec::new();
    if special_side_zero {
        if let Some(assign) = &witness_assign {
            for v in &vars {
                let image = psi_alg(g, v)?;
                let expansion_zero = expand_jordan_di(&image).is_zero();
                let mut eval = MemoEval::new(assign, &vars);
                let evaluation_nonzero = !eval.eval_di(&image).is_zero();
                dialgebra_side.push(DialgebraVerdict {
                    var: v.name().to_string(),
                    expansion_zero,
                    evaluation_nonzero,
                });
            }
        }
    }

    Ok(SIdentityCertificate {
        special_side_zero,
        witness,
        dialgebra_side,
    })
}

/// Re-evaluates a stored certificate: the witness must reproduce a
/// nonzero value equal to the recorded one.
pub fn replay_certificate(g: &AlgTermPoly, cert: &SIdentityCertificate) -> Result<bool> {
    let w = match &cert.witness {
        Some(w) => w,
        None => return Ok(false),
    };
    let mut vars: Vec<Var> = Vec::new();
    for (t, _) in g.iter() {
        for v in t.multidegree().keys() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    let mut assign = BTreeMap::new();
    for (k, coords) in &w.assignment {
        let parsed: std::result::Result<Vec<Scalar>, _> =
            coords.iter().map(|s| s.parse::<Scalar>()).collect();
        let parsed = parsed.map_err(|_| Error::Parse {
            pos: 0,
            msg: "bad rational in witness".into(),
        })?;
        assign.insert(k.clone(), AlbertElement::from_coords(&parsed));
    }
    let mut eval = MemoEval::new(&assign, &vars);
    let value = eval.eval_alg(g);
    Ok(!value.is_zero() && scalars_to_strings(&value.to_coords()) == w.value)
}

/// Glennie's degree-8 identity, transcribed from the classical sources
/// (Glennie 1966; see also McCrimmon's "A Taste of Jordan Algebras"):
///
/// `G8 = H(x,y,z) - H(y,x,z)` with
/// `H(x,y,z) = {U_x U_y z, z, x o y} - U_x U_y U_z (x o y)`,
/// `U_a b = 2 a o (a o b) - (a o a) o b`,
/// `{a,b,c} = 2((a o b) o c + (b o c) o a - (a o c) o b)`.
///
/// It vanishes under the expansion into associative polynomials but not
/// in the Hermitian matrix algebra: the classical s-identity.
pub fn glennie_g8(x: &Var, y: &Var, z: &Var) -> AlgTermPoly {
    let leaf = |v: &Var| AlgTermPoly::unit(AlgTerm::leaf(v));
    let mul = |a: &AlgTermPoly, b: &AlgTermPoly| -> AlgTermPoly {
        a.bilinear(b, |s, t| {
            AlgTermPoly::unit(AlgTerm::mul(s.clone(), t.clone()))
        })
    };
    let u = |a: &AlgTermPoly, b: &AlgTermPoly| -> AlgTermPoly {
        // U_a b = 2 a(ab) - (aa)b
        mul(a, &mul(a, b))
            .scale(&scalar(2))
            .sub(&mul(&mul(a, a), b))
    };
    let triple = |a: &AlgTermPoly, b: &AlgTermPoly, c: &AlgTermPoly| -> AlgTermPoly {
        // {a,b,c} = 2((ab)c + (bc)a - (ac)b)
        mul(&mul(a, b), c)
            .add(&mul(&mul(b, c), a))
            .sub(&mul(&mul(a, c), b))
            .scale(&scalar(2))
    };
    let h = |x: &AlgTermPoly, y: &AlgTermPoly, z: &AlgTermPoly| -> AlgTermPoly {
        let xy = mul(x, y);
        triple(&u(x, &u(y, z)), z, &xy).sub(&u(x, &u(y, &u(z, &xy))))
    };
    let (px, py, pz) = (leaf(x), leaf(y), leaf(z));
    h(&px, &py, &pz).sub(&h(&py, &px, &pz))
}

/// The stored transcription of Glennie's identity, shipped with the crate
/// and cross-checked against [`glennie_g8`] by the test suite.
pub fn glennie_g8_from_data() -> Result<AlgTermPoly> {
    let raw = include_str!("../data/glennie_g8.txt");
    let body: String = raw
        .lines()
        .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .collect::<Vec<_>>()
        .join(" ");
    let mut order = crate::parse::VarOrder::new(&["x", "y", "z"]);
    crate::parse::parse_algterm_poly(&body, &mut order)
}

/// The full linearization of Glennie's identity: multilinear of degree 8
/// in `x#1..x#3, y#1..y#3, z#1..z#2`.
pub fn glennie_g8_linearized(x: &Var, y: &Var, z: &Var) -> AlgTermPoly {
    let g = glennie_g8(x, y, z);
    let g = crate::diterm::linearize(&g, x, 3).expect("degree 3 in x");
    let g = crate::diterm::linearize(&g, y, 3).expect("degree 3 in y");
    crate::diterm::linearize(&g, z, 2).expect("degree 2 in z")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diassoc::alphabet;
    use crate::diterm::multilinear_jordan;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_oct(r: &mut ChaCha8Rng) -> Octonion {
        Octonion(std::array::from_fn(|_| scalar(r.gen_range(-3..=3))))
    }

    #[test]
    fn octonion_basic_relations() {
        for i in 1..8 {
            let e = Octonion::unit(i);
            assert_eq!(e.mul(&e), Octonion::scalar(-Scalar::one()), "e{0} e{0}", i);
        }
        assert_eq!(
            Octonion::unit(1).mul(&Octonion::unit(2)),
            Octonion::unit(3)
        );
        let one = Octonion::one();
        for i in 0..8 {
            let e = Octonion::unit(i);
            assert_eq!(one.mul(&e), e);
            assert_eq!(e.mul(&one), e);
        }
    }

    #[test]
    fn octonion_norm_and_alternativity() {
        let mut r = rng(7);
        for _ in 0..50 {
            let a = random_oct(&mut r);
            let b = random_oct(&mut r);
            assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
            // (ab)b = a(bb) and (aa)b = a(ab)
            assert_eq!(a.mul(&b).mul(&b), a.mul(&b.mul(&b)));
            assert_eq!(a.mul(&a).mul(&b), a.mul(&a.mul(&b)));
            // conjugation is an antiautomorphism
            assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
        }
    }

    #[test]
    fn octonions_not_associative() {
        let (a, b, c) = (Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
        assert_ne!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn albert_unit_and_idempotents() {
        let e11 = AlbertElement::basis(0);
        assert_eq!(albert_product(&e11, &e11), e11);
        let one = AlbertElement::one();
        let mut r = rng(11);
        for _ in 0..10 {
            let a = random_albert(&mut r);
            assert_eq!(albert_product(&one, &a), a);
            assert_eq!(albert_product(&a, &one), a);
        }
    }

    #[test]
    fn albert_commutative_and_jordan() {
        let mut r = rng(3);
        let vars = alphabet(&["p", "q", "r", "s"]);
        let v: [Var; 4] = [
            vars[0].clone(),
            vars[1].clone(),
            vars[2].clone(),
            vars[3].clone(),
        ];
        let jid = multilinear_jordan(&v);
        for _ in 0..30 {
            let a = random_albert(&mut r);
            let b = random_albert(&mut r);
            assert_eq!(albert_product(&a, &b), albert_product(&b, &a));
            // multilinear Jordan identity
            let assign: BTreeMap<String, AlbertElement> = [
                ("p", random_albert(&mut r)),
                ("q", random_albert(&mut r)),
                ("r", random_albert(&mut r)),
                ("s", random_albert(&mut r)),
            ]
            .into_iter()
            .map(|(k, e)| (k.to_string(), e))
            .collect();
            let mut eval = MemoEval::new(&assign, &vars);
            assert!(eval.eval_alg(&jid).is_zero());
        }
    }

    #[test]
    fn dialgebra_avatar_and_annihilator() {
        let d = albert_as_dialgebra();
        assert_eq!(d.dim(), ALBERT_DIM);
        // equal products collapse the bar quotient to the algebra itself
        let bar = crate::structalg::bar_algebra(&d).unwrap();
        assert_eq!(bar.algebra.dim(), ALBERT_DIM);
        assert_eq!(annihilator_rank(), ALBERT_DIM);
    }

    #[test]
    fn glennie_special_side_vanishes() {
        let a = alphabet(&["x", "y", "z"]);
        let g = glennie_g8(&a[0], &a[1], &a[2]);
        assert!(expand_jordan(&g).is_zero());
        // multidegree is (3,3,2) in every term
        for (t, _) in g.iter() {
            assert_eq!(t.degree_in(&a[0]), 3);
            assert_eq!(t.degree_in(&a[1]), 3);
            assert_eq!(t.degree_in(&a[2]), 2);
        }
    }

    #[test]
    fn stored_glennie_matches_builder() {
        let a = alphabet(&["x", "y", "z"]);
        let built = glennie_g8(&a[0], &a[1], &a[2]);
        let stored = glennie_g8_from_data().unwrap();
        assert_eq!(stored, built);
    }

    #[test]
    fn glennie_nonzero_on_albert() {
        let a = alphabet(&["x", "y", "z"]);
        let g = glennie_g8(&a[0], &a[1], &a[2]);
        let mut r = rng(0);
        let mut found = false;
        for _ in 0..16 {
            let assign: BTreeMap<String, AlbertElement> = [
                ("x".to_string(), random_albert(&mut r)),
                ("y".to_string(), random_albert(&mut r)),
                ("z".to_string(), random_albert(&mut r)),
            ]
            .into_iter()
            .collect();
            let mut eval = MemoEval::new(&assign, &a);
            if !eval.eval_alg(&g).is_zero() {
                found = true;
                break;
            }
        }
        assert!(found, "no nonzero evaluation in 16 attempts");
    }

    #[test]
    fn certify_commutativity_is_not_sidentity() {
        let a = alphabet(&["x", "y"]);
        let g = crate::diterm::commutativity(&a[0], &a[1]);
        let cert = certify_sidentity(&g, 0).unwrap();
        assert!(cert.special_side_zero);
        assert!(cert.witness.is_none());
        assert_eq!(cert.verdict(), SIdentityVerdict::Inconclusive);
    }

    #[test]
    fn certify_jordan_identity_not_sidentity() {
        let a = alphabet(&["p", "q", "r", "s"]);
        let v: [Var; 4] = [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()];
        let cert = certify_sidentity(&multilinear_jordan(&v), 0).unwrap();
        assert!(cert.special_side_zero);
        assert!(cert.witness.is_none());
    }

    #[test]
    fn certify_rejects_nonlinear() {
        let a = alphabet(&["x", "y", "z"]);
        let g = glennie_g8(&a[0], &a[1], &a[2]);
        assert!(matches!(
            certify_sidentity(&g, 0),
            Err(Error::NotMultilinear(_))
        ));
    }

    #[test]
    fn psi_image_evaluation_collapses() {
        // in an equal-products dialgebra, evaluating a sign placement of g
        // equals evaluating g itself
        let a = alphabet(&["x", "y", "z"]);
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        let g = AlgTermPoly::unit(AlgTerm::mul(
            AlgTerm::mul(AlgTerm::leaf(x), AlgTerm::leaf(z)),
            AlgTerm::leaf(y),
        ));
        let image = psi_alg(&g, z).unwrap();
        let mut r = rng(5);
        let assign: BTreeMap<String, AlbertElement> = [
            ("x".to_string(), random_albert(&mut r)),
            ("y".to_string(), random_albert(&mut r)),
            ("z".to_string(), random_albert(&mut r)),
        ]
        .into_iter()
        .collect();
        let mut eval = MemoEval::new(&assign, &a);
        let va = eval.eval_alg(&g);
        let vd = eval.eval_di(&image);
        assert_eq!(va, vd);
        // and it agrees with the structure-constant dialgebra evaluation
        let d = albert_as_dialgebra();
        let assign_elems: BTreeMap<Var, Element> = assign
            .iter()
            .map(|(k, e)| {
                (
                    a.iter().find(|v| v.name() == k).unwrap().clone(),
                    Element::from_terms(e.to_coords().into_iter().enumerate()),
                )
            })
            .collect();
        let vt = d.eval_di(&image, &assign_elems);
        assert_eq!(vt, Element::from_terms(vd.to_coords().into_iter().enumerate()));
    }
}

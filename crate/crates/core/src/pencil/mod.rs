//! Skew forms over `Q` and `Q[u,v]`: Pfaffians, the constant-rank
//! certificate for pencils, the 12×12 flattening, and two coordinate checks
//! built on the explicit net.

mod congruence;
pub mod data;
mod quasimonad;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::linalg;
use crate::poly::{format_rational, PolyError, Poly, Signature, Q};

pub use congruence::{congruence_model_check, CongruenceReport, CoordinateModel};
pub use quasimonad::{quasimonad_checks, QuasimonadReport, CubicLocus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("Pfaffian of a matrix of odd size {0}")]
    OddSize(usize),
    #[error("Pfaffian of the empty matrix")]
    Empty,
    #[error("matrix is not square")]
    NotSquare,
    #[error("entries ({i},{j}) and ({j},{i}) are not opposite")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("entry ({i},{j}) is not a quadratic form")]
    NotQuadratic { i: usize, j: usize },
    #[error("matrix text: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The commutative-ring operations the Pfaffian recursion needs.
pub trait RingElem: Clone {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn vanishes(&self) -> bool;
}

impl RingElem for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl RingElem for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.signature())
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn vanishes(&self) -> bool {
        Poly::is_zero(self)
    }
}

pub fn check_antisymmetric<T: RingElem>(m: &[Vec<T>]) -> Result<(), PencilError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(PencilError::NotSquare);
    }
    for i in 0..n {
        for j in i..n {
            if !m[i][j].plus(&m[j][i]).vanishes() {
                return Err(PencilError::NotAntisymmetric { i, j });
            }
        }
    }
    Ok(())
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian<T: RingElem>(m: &[Vec<T>]) -> Result<T, PencilError> {
    check_antisymmetric(m)?;
    let n = m.len();
    if n % 2 == 1 {
        return Err(PencilError::OddSize(n));
    }
    if n == 0 {
        return Err(PencilError::Empty);
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pf_rec(m, &idx, &m[0][0].zero_like()))
}

fn pf_rec<T: RingElem>(m: &[Vec<T>], idx: &[usize], zero: &T) -> T {
    if idx.len() == 2 {
        return m[idx[0]][idx[1]].clone();
    }
    let first = idx[0];
    let mut acc = zero.clone();
    for (k, &j) in idx.iter().enumerate().skip(1) {
        if m[first][j].vanishes() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != first && x != j).collect();
        let term = m[first][j].times(&pf_rec(m, &rest, zero));
        acc = if k % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

/// Pfaffian of the principal submatrix on `rows`.
pub fn sub_pfaffian<T: RingElem>(m: &[Vec<T>], rows: &[usize]) -> Result<T, PencilError> {
    let sub: Vec<Vec<T>> = rows.iter().map(|&i| rows.iter().map(|&j| m[i][j].clone()).collect()).collect();
    pfaffian(&sub)
}

/// A 6×6 skew matrix of binary quadratic forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPencil {
    sig: Arc<Signature>,
    entries: Vec<Vec<Poly>>,
}

pub fn pencil_signature() -> Arc<Signature> {
    Signature::new([("u", 1), ("v", 1)]).expect("distinct names")
}

impl SkewPencil {
    pub fn new(entries: Vec<Vec<Poly>>) -> Result<Self, PencilError> {
        let sig = pencil_signature();
        check_antisymmetric(&entries)?;
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.signature() != &sig {
                    return Err(PolyError::SignatureMismatch.into());
                }
                if !e.is_zero() && !(e.is_homogeneous() && e.degree() == Some(2)) {
                    return Err(PencilError::NotQuadratic { i, j });
                }
            }
        }
        Ok(SkewPencil { sig, entries })
    }

    /// Parses rows separated by newlines and entries by `&`.
    pub fn parse(text: &str) -> Result<Self, PencilError> {
        let sig = pencil_signature();
        let rows = parse_rows(text, |s| Poly::parse(s, &sig).map_err(PencilError::from))?;
        Self::new(rows)
    }

    pub fn beta() -> Self {
        Self::parse(data::BETA_TEXT).expect("built-in matrix is valid")
    }

    pub fn zero(n: usize) -> Self {
        let sig = pencil_signature();
        SkewPencil { entries: vec![vec![Poly::zero(&sig); n]; n], sig }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    pub fn to_text(&self) -> String {
        render_rows(&self.entries)
    }

    pub fn evaluate(&self, u: &Q, v: &Q) -> Vec<Vec<Q>> {
        let pt = [u.clone(), v.clone()];
        self.entries.iter().map(|r| r.iter().map(|e| e.evaluate(&pt)).collect()).collect()
    }

    pub fn rank_at(&self, u: &Q, v: &Q) -> usize {
        linalg::rank(&self.evaluate(u, v))
    }

    /// All `4×4` sub-Pfaffians, indexed by increasing row quadruples.
    pub fn sub_pfaffians_4(&self) -> Vec<([usize; 4], Poly)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let p = sub_pfaffian(&self.entries, &[a, b, c, d]).expect("antisymmetric by construction");
                        out.push(([a, b, c, d], p));
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn parse_rows<T>(text: &str, mut f: impl FnMut(&str) -> Result<T, PencilError>) -> Result<Vec<Vec<T>>, PencilError> {
    let rows: Vec<Vec<T>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split('&').map(|s| f(s.trim())).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(PencilError::Parse(format!("expected {n} entries in every row")));
    }
    Ok(rows)
}

pub(crate) fn render_rows<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        s.push_str(&cells.join("&"));
        s.push('\n');
    }
    s
}

/// The built-in integer flattening.
pub fn flattening() -> Vec<Vec<BigInt>> {
    parse_rows(data::FLATTENING_TEXT, |s| s.parse::<BigInt>().map_err(|e| PencilError::Parse(e.to_string())))
        .expect("built-in matrix is valid")
}

pub fn flattening_q() -> Vec<Vec<Q>> {
    flattening().into_iter().map(|r| r.into_iter().map(Q::from_integer).collect()).collect()
}

/// Exact rank of an integer matrix by fraction-free elimination.
pub fn flatten_rank(m: &[Vec<BigInt>]) -> usize {
    linalg::rank_fraction_free(m)
}

/// Text printed by `verify pencil --dump`.
pub fn dump() -> String {
    let beta = SkewPencil::beta();
    let flat = flattening();
    format!("{}\n{}", beta.to_text(), render_rows(&flat))
}

// ---------- binary forms ----------

/// Dense univariate polynomial, coefficient of `u^i` at index `i`.
type Uni = Vec<Q>;

fn trim(mut p: Uni) -> Uni {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn uni_rem(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let c = r.last().expect("nonempty").clone() / &lead;
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[shift + i] -= t;
        }
        r = trim(r);
    }
    r
}

fn uni_gcd(a: Uni, b: Uni) -> Uni {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        for x in a.iter_mut() {
            *x /= &l;
        }
    }
    a
}

/// Gcd of homogeneous forms in `(u,v)`, monic in the leading term; zero if
/// all inputs vanish.
pub fn binary_gcd(forms: &[Poly]) -> Poly {
    let sig = pencil_signature();
    let mut g: Option<Uni> = None;
    let mut vmult = u32::MAX;
    for f in forms.iter().filter(|f| !f.is_zero()) {
        let deg = f.degree().expect("nonzero");
        let mut d = vec![Q::zero(); deg as usize + 1];
        let mut vm = u32::MAX;
        for (m, c) in f.terms() {
            d[m.exps()[0] as usize] += c;
            vm = vm.min(m.exps()[1]);
        }
        vmult = vmult.min(vm);
        g = Some(match g {
            None => uni_gcd(d, vec![]),
            Some(h) => uni_gcd(h, d),
        });
    }
    let Some(g) = g else {
        return Poly::zero(&sig);
    };
    let dg = g.len() as u32 - 1;
    let mut out = Poly::zero(&sig);
    for (i, c) in g.iter().enumerate() {
        let t = Poly::monomial(&sig, vec![i as u32, dg - i as u32 + vmult], c.clone());
        out = &out + &t;
    }
    out.monic()
}

/// A rational zero `[u:v]` of a nonzero binary form, if one exists.
pub fn rational_zero(f: &Poly) -> Option<[Q; 2]> {
    if f.is_zero() {
        return Some([Q::one(), Q::zero()]);
    }
    if f.terms().all(|(m, _)| m.exps()[1] > 0) {
        return Some([Q::one(), Q::zero()]);
    }
    // dehomogenize at v = 1 and apply the rational root test
    let deg = f.degree().expect("nonzero") as usize;
    let mut d = vec![Q::zero(); deg + 1];
    for (m, c) in f.terms() {
        d[m.exps()[0] as usize] += c;
    }
    let d = trim(d);
    let lcm = d.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let ints: Vec<BigInt> = d.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        return Some([Q::zero(), Q::one()]);
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut k = BigInt::one();
        // constant terms here are small; cap the search all the same
        while &k * &k <= n && k < BigInt::from(100_000) {
            if (&n % &k).is_zero() {
                out.push(k.clone());
                out.push(&n / &k);
            }
            k += 1;
        }
        out
    };
    let ps = divisors(&ints[0]);
    let qs = divisors(ints.last().expect("nonzero"));
    for p in &ps {
        for qd in &qs {
            for sign in [1, -1] {
                let r = Q::new(p * sign, qd.clone());
                let val = d.iter().rev().fold(Q::zero(), |acc, c| acc * &r + c);
                if val.is_zero() {
                    return Some([r, Q::one()]);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedCondition {
    /// The 6×6 Pfaffian is not identically zero.
    PfaffianNonzero,
    /// The 4×4 sub-Pfaffians have a nonconstant common factor (or all vanish).
    CommonFactor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Rank exactly 4 on all of `P^1`; `gcd` is the (constant) gcd.
    ConstantRank4 { gcd: Poly },
    Failed { condition: FailedCondition, gcd: Option<Poly>, witness: Option<[Q; 2]> },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::ConstantRank4 { .. })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ConstantRank4 { gcd } => write!(f, "constant rank 4, gcd of 4x4 sub-Pfaffians = {gcd}"),
            Certificate::Failed { condition, gcd, witness } => {
                write!(f, "failed: {condition:?}")?;
                if let Some(g) = gcd {
                    write!(f, ", gcd = {g}")?;
                }
                if let Some([u, v]) = witness {
                    write!(f, ", witness [u:v] = [{}:{}]", format_rational(u), format_rational(v))?;
                }
                Ok(())
            }
        }
    }
}

/// Certifies rank 4 at every point of `P^1`: the 6×6 Pfaffian vanishes
/// identically and the 4×4 sub-Pfaffians have no common zero.
pub fn constant_rank_certificate(p: &SkewPencil) -> Result<Certificate, PencilError> {
    let pf = pfaffian(p.entries())?;
    if !pf.is_zero() {
        let witness = (0..)
            .map(|k: i64| [Q::from_integer(k.into()), Q::one()])
            .chain([[Q::one(), Q::zero()]])
            .take(pf.degree().unwrap_or(0) as usize + 2)
            .find(|pt| !pf.evaluate(pt).is_zero())
            .or(Some([Q::one(), Q::zero()]));
        return Ok(Certificate::Failed { condition: FailedCondition::PfaffianNonzero, gcd: None, witness });
    }
    let minors: Vec<Poly> = p.sub_pfaffians_4().into_iter().map(|(_, f)| f).collect();
    let g = binary_gcd(&minors);
    if g.as_constant().is_some_and(|c| !c.is_zero()) {
        return Ok(Certificate::ConstantRank4 { gcd: g });
    }
    let witness = rational_zero(&g);
    Ok(Certificate::Failed { condition: FailedCondition::CommonFactor, gcd: Some(g), witness })
}

/// Random point of `P^1` with small integer coordinates, not both zero.
pub fn random_p1_point<R: Rng>(rng: &mut R) -> [Q; 2] {
    loop {
        let u: i64 = rng.gen_range(-20..=20);
        let v: i64 = rng.gen_range(-20..=20);
        if u != 0 || v != 0 {
            return [Q::from_integer(u.into()), Q::from_integer(v.into())];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qf};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_by_two() {
        let m = vec![vec![q(0), q(5)], vec![q(-5), q(0)]];
        assert_eq!(pfaffian(&m).unwrap(), q(5));
        assert!(matches!(pfaffian(&[vec![q(0)]]), Err(PencilError::OddSize(1))));
        let bad = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert!(matches!(pfaffian(&bad), Err(PencilError::NotAntisymmetric { i: 0, j: 1 })));
    }

    #[test]
    fn beta_text_round_trips() {
        let b = SkewPencil::beta();
        assert_eq!(b.to_text(), data::BETA_TEXT);
        assert_eq!(render_rows(&flattening()), data::FLATTENING_TEXT);
    }

    #[test]
    fn beta_has_constant_rank_4() {
        let b = SkewPencil::beta();
        assert!(pfaffian(b.entries()).unwrap().is_zero());
        let cert = constant_rank_certificate(&b).unwrap();
        assert!(cert.is_certified(), "{cert}");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let [u, v] = random_p1_point(&mut rng);
            assert_eq!(b.rank_at(&u, &v), 4);
        }
    }

    #[test]
    fn degenerate_pencils_fail() {
        let cert = constant_rank_certificate(&SkewPencil::zero(6)).unwrap();
        assert!(matches!(cert, Certificate::Failed { condition: FailedCondition::CommonFactor, .. }));
        if let Certificate::Failed { gcd, .. } = &cert {
            assert!(gcd.as_ref().unwrap().is_zero());
        }

        let sig = pencil_signature();
        let u2 = Poly::parse("u^2", &sig).unwrap();
        let mut e = vec![vec![Poly::zero(&sig); 6]; 6];
        for (i, j) in [(0, 1), (2, 3)] {
            e[i][j] = u2.clone();
            e[j][i] = -&u2;
        }
        let p = SkewPencil::new(e).unwrap();
        let cert = constant_rank_certificate(&p).unwrap();
        match cert {
            Certificate::Failed { condition, gcd, witness } => {
                assert_eq!(condition, FailedCondition::CommonFactor);
                assert_eq!(gcd.unwrap().to_string(), "u^4");
                assert_eq!(witness, Some([q(0), q(1)]));
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn gcd_of_binary_forms() {
        let sig = pencil_signature();
        let f = |s: &str| Poly::parse(s, &sig).unwrap();
        assert_eq!(binary_gcd(&[f("u^2-v^2"), f("u*v+v^2")]).to_string(), "u+v");
        assert_eq!(binary_gcd(&[f("u*v^2"), f("v^3")]).to_string(), "v^2");
        assert_eq!(binary_gcd(&[f("u^2"), f("v^2")]).to_string(), "1");
        assert_eq!(rational_zero(&f("2*u-3*v")), Some([qf(3, 2), q(1)]));
    }

    #[test]
    fn flattening_rank() {
        assert_eq!(flatten_rank(&flattening()), 6);
        let id: Vec<Vec<BigInt>> = (0..12).map(|i| (0..12).map(|j| BigInt::from((i == j) as i32)).collect()).collect();
        assert_eq!(flatten_rank(&id), 12);
    }
}

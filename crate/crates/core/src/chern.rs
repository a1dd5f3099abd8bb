//! Chern, Segre and Chern character calculus over a [`ChowRing`], with
//! Hirzebruch–Riemann–Roch and a Grothendieck–Riemann–Roch pushforward for
//! curves in projective space.
//!
//! Graded series are stored as `Vec<Poly>` indexed by degree and truncated
//! at the ambient dimension of the ring.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chow::{ChowClass, ChowError, ChowRing};
use crate::poly::{q, Poly, Q};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChernError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error("bundle classes belong to different rings")]
    RingMismatch,
    #[error("expected rank {expected}, found {found}")]
    WrongRank { expected: i64, found: i64 },
    #[error("Chern class c_{index} must be homogeneous of degree {index}")]
    BadChernClass { index: usize },
    #[error("ring `{0}` is not a projective space")]
    NotProjectiveSpace(String),
    #[error("curve class must have codimension {expected} or {point}, found {found}")]
    WrongCodimension { expected: u32, point: u32, found: u32 },
}

/// Formal vector bundle: a rank and Chern classes `c_1..c_D`.
#[derive(Debug, Clone, PartialEq)]
pub struct BundleClass {
    ring: ChowRing,
    rank: i64,
    chern: Vec<Poly>,
}

/// Chern character `ch_0..ch_D` of a (possibly virtual) bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernCharacter {
    ring: ChowRing,
    comps: Vec<Poly>,
}

fn top_degree(ring: &ChowRing) -> usize {
    ring.ambient_dim() as usize
}

fn zeros(ring: &ChowRing) -> Vec<Poly> {
    vec![Poly::zero(ring.signature()); top_degree(ring) + 1]
}

fn factorial(n: usize) -> Q {
    Q::from_integer((1..=n).map(BigInt::from).product())
}

fn binomial(n: i64, k: usize) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc = acc * q(n - i as i64) / q(i as i64 + 1);
    }
    acc
}

/// Graded product truncated at the ring's top degree.
pub(crate) fn series_mul(ring: &ChowRing, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let d = top_degree(ring);
    let mut out = zeros(ring);
    for (i, x) in a.iter().enumerate().take(d + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(d + 1 - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out.iter().map(|p| ring.nf(p)).collect()
}

/// Inverse of a graded series with constant term one.
pub(crate) fn series_inverse(ring: &ChowRing, c: &[Poly]) -> Vec<Poly> {
    let d = top_degree(ring);
    let mut s = zeros(ring);
    s[0] = Poly::one(ring.signature());
    for k in 1..=d {
        let mut acc = Poly::zero(ring.signature());
        for i in 1..=k.min(c.len().saturating_sub(1)) {
            acc = &acc - &(&c[i] * &s[k - i]);
        }
        s[k] = ring.nf(&acc);
    }
    s
}

/// `exp(x)` for a series without constant term.
fn series_exp(ring: &ChowRing, x: &[Poly]) -> Vec<Poly> {
    let d = top_degree(ring);
    let mut out = zeros(ring);
    out[0] = Poly::one(ring.signature());
    let mut power = out.clone();
    for n in 1..=d {
        power = series_mul(ring, &power, x);
        let inv = factorial(n).recip();
        for k in 0..=d {
            out[k] = &out[k] + &power[k].scale(&inv);
        }
    }
    out
}

/// `ch` from a rank and total Chern class (with `c[0] = 1`), via Newton's
/// identities `p_k = (-1)^{k-1} k e_k + sum_{i<k} (-1)^{k-1+i} e_{k-i} p_i`.
pub(crate) fn ch_from_chern(ring: &ChowRing, rank: &Q, c: &[Poly]) -> Vec<Poly> {
    let d = top_degree(ring);
    let e = |k: usize| c.get(k).cloned().unwrap_or_else(|| Poly::zero(ring.signature()));
    let mut p: Vec<Poly> = zeros(ring);
    let mut ch = zeros(ring);
    ch[0] = Poly::constant(ring.signature(), rank.clone());
    for k in 1..=d {
        let sign = |n: usize| if n % 2 == 0 { Q::one() } else { -Q::one() };
        let mut acc = e(k).scale(&(sign(k - 1) * q(k as i64)));
        for i in 1..k {
            acc = &acc + &(&e(k - i) * &p[i]).scale(&sign(k - 1 + i));
        }
        p[k] = ring.nf(&acc);
        ch[k] = p[k].scale(&factorial(k).recip());
    }
    ch
}

/// Total Chern class from a Chern character:
/// `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i` with `p_i = i! ch_i`.
pub(crate) fn chern_from_ch(ring: &ChowRing, ch: &[Poly]) -> Vec<Poly> {
    let d = top_degree(ring);
    let p: Vec<Poly> = (0..=d)
        .map(|i| ch.get(i).map_or_else(|| Poly::zero(ring.signature()), |x| x.scale(&factorial(i))))
        .collect();
    let mut e = zeros(ring);
    e[0] = Poly::one(ring.signature());
    for k in 1..=d {
        let mut acc = Poly::zero(ring.signature());
        for i in 1..=k {
            let t = &e[k - i] * &p[i];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        e[k] = ring.nf(&acc.scale(&q(k as i64).recip()));
    }
    e
}

/// Coefficients `a_k` of `log(x / (1 - e^{-x})) = sum a_k x^k`, `k = 1..=d`.
fn todd_log_coefficients(d: usize) -> Vec<Q> {
    // u = (1 - e^{-x}) / x = sum (-1)^n x^n / (n+1)!
    let u: Vec<Q> = (0..=d)
        .map(|n| {
            let s = if n % 2 == 0 { Q::one() } else { -Q::one() };
            s / factorial(n + 1)
        })
        .collect();
    // log(u) = sum_{m>=1} (-1)^{m+1} (u-1)^m / m
    let mut y = u.clone();
    y[0] = Q::zero();
    let mut log = vec![Q::zero(); d + 1];
    let mut pw = vec![Q::zero(); d + 1];
    pw[0] = Q::one();
    for m in 1..=d {
        let mut next = vec![Q::zero(); d + 1];
        for (i, a) in pw.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate().take(d + 1 - i) {
                next[i + j] += a * b;
            }
        }
        pw = next;
        let s = if m % 2 == 1 { Q::one() } else { -Q::one() };
        for k in 0..=d {
            log[k] += &pw[k] * &s / q(m as i64);
        }
    }
    // log(x / (1 - e^{-x})) = -log(u)
    log.into_iter().map(|c| -c).collect()
}

fn graded(ring: &ChowRing, p: &Poly) -> Vec<Poly> {
    (0..=top_degree(ring) as u32).map(|k| p.component(k)).collect()
}

impl BundleClass {
    /// `chern[k-1]` is `c_k`; it must be homogeneous of degree `k`.
    pub fn new(ring: &ChowRing, rank: i64, chern: Vec<Poly>) -> Result<Self, ChernError> {
        let d = top_degree(ring);
        let mut cs = Vec::with_capacity(d);
        for k in 1..=d {
            let c = match chern.get(k - 1) {
                Some(c) => {
                    c.same_sig(&Poly::zero(ring.signature())).map_err(ChowError::from)?;
                    let c = ring.nf(c);
                    if !c.is_zero() && (!c.is_homogeneous() || c.degree() != Some(k as u32)) {
                        return Err(ChernError::BadChernClass { index: k });
                    }
                    c
                }
                None => Poly::zero(ring.signature()),
            };
            cs.push(c);
        }
        for (k, c) in chern.iter().enumerate().skip(d) {
            if !ring.nf(c).is_zero() {
                return Err(ChernError::BadChernClass { index: k + 1 });
            }
        }
        Ok(BundleClass { ring: ring.clone(), rank, chern: cs })
    }

    pub fn parse(ring: &ChowRing, rank: i64, chern: &[&str]) -> Result<Self, ChernError> {
        let polys = chern.iter().map(|t| ring.poly(t)).collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, rank, polys)
    }

    pub fn trivial(ring: &ChowRing, rank: i64) -> Self {
        BundleClass { ring: ring.clone(), rank, chern: zeros(ring)[1..].to_vec() }
    }

    pub fn line(ring: &ChowRing, divisor: &Poly) -> Result<Self, ChernError> {
        Self::new(ring, 1, vec![divisor.clone()])
    }

    fn from_total(ring: &ChowRing, rank: i64, total: &[Poly]) -> Self {
        BundleClass { ring: ring.clone(), rank, chern: total[1..].to_vec() }
    }

    pub fn ring(&self) -> &ChowRing {
        &self.ring
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    /// `c_k`, with `c_0 = 1`.
    pub fn c(&self, k: usize) -> Poly {
        match k {
            0 => Poly::one(self.ring.signature()),
            k => self.chern.get(k - 1).cloned().unwrap_or_else(|| Poly::zero(self.ring.signature())),
        }
    }

    pub fn chern_class(&self, k: usize) -> ChowClass {
        self.ring.from_poly(&self.c(k))
    }

    pub fn chern_classes(&self) -> &[Poly] {
        &self.chern
    }

    /// `[1, c_1, .., c_D]`.
    pub fn total_series(&self) -> Vec<Poly> {
        (0..=top_degree(&self.ring)).map(|k| self.c(k)).collect()
    }

    pub fn total(&self) -> Poly {
        self.total_series().iter().fold(Poly::zero(self.ring.signature()), |a, b| &a + b)
    }

    fn same_ring(&self, other: &Self) -> Result<(), ChernError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(ChernError::RingMismatch)
        }
    }

    pub fn dual(&self) -> Self {
        let chern = self
            .chern
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
            .collect();
        BundleClass { ring: self.ring.clone(), rank: self.rank, chern }
    }

    /// `E ⊗ L` with `c_1(L) = t`. For honest ranks this is
    /// `c_k = sum_i C(r-i, k-i) c_i t^{k-i}`; virtual ranks go through `ch`.
    pub fn twist(&self, t: &Poly) -> Result<Self, ChernError> {
        let line = Self::line(&self.ring, t)?;
        if self.rank < 0 {
            return Ok(self.chern_character().mul(&line.chern_character())?.to_bundle());
        }
        let d = top_degree(&self.ring);
        let t = self.ring.nf(t);
        let mut tp = vec![Poly::one(self.ring.signature())];
        for k in 1..=d {
            tp.push(self.ring.nf(&(&tp[k - 1] * &t)));
        }
        let mut total = zeros(&self.ring);
        total[0] = Poly::one(self.ring.signature());
        for k in 1..=d {
            let mut acc = Poly::zero(self.ring.signature());
            for i in 0..=k {
                let b = binomial(self.rank - i as i64, k - i);
                if !b.is_zero() {
                    acc = &acc + &(&self.c(i) * &tp[k - i]).scale(&b);
                }
            }
            total[k] = self.ring.nf(&acc);
        }
        Ok(Self::from_total(&self.ring, self.rank, &total))
    }

    pub fn whitney_sum(&self, other: &Self) -> Result<Self, ChernError> {
        self.same_ring(other)?;
        let total = series_mul(&self.ring, &self.total_series(), &other.total_series());
        Ok(Self::from_total(&self.ring, self.rank + other.rank, &total))
    }

    /// The class `Q` with `c(E) = c(F) c(Q)`, i.e. `E / F`.
    pub fn whitney_quotient(&self, sub: &Self) -> Result<Self, ChernError> {
        self.same_ring(sub)?;
        let inv = series_inverse(&self.ring, &sub.total_series());
        let total = series_mul(&self.ring, &self.total_series(), &inv);
        Ok(Self::from_total(&self.ring, self.rank - sub.rank, &total))
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, ChernError> {
        Ok(self.chern_character().mul(&other.chern_character())?.to_bundle())
    }

    /// Segre series `s` with `s(E) c(E) = 1`, degrees `0..=D`.
    pub fn segre_series(&self) -> Vec<Poly> {
        series_inverse(&self.ring, &self.total_series())
    }

    pub fn segre(&self, k: usize) -> Poly {
        self.segre_series().get(k).cloned().unwrap_or_else(|| Poly::zero(self.ring.signature()))
    }

    /// `∧²E` for rank three, as `E^∨ ⊗ det E`.
    pub fn wedge2_rank3(&self) -> Result<Self, ChernError> {
        if self.rank != 3 {
            return Err(ChernError::WrongRank { expected: 3, found: self.rank });
        }
        self.dual().twist(&self.c(1))
    }

    /// `∧²E` from `ch(∧²E) = (ch(E)^2 - ψ²ch(E)) / 2`.
    pub fn wedge2(&self) -> Self {
        let ch = self.chern_character();
        ch.mul(&ch).expect("same ring").sub(&ch.adams(2)).expect("same ring").scale(&Q::new(1.into(), 2.into())).to_bundle()
    }

    /// `Sym²E` from `ch(Sym²E) = (ch(E)^2 + ψ²ch(E)) / 2`.
    pub fn sym2(&self) -> Self {
        let ch = self.chern_character();
        ch.mul(&ch).expect("same ring").add(&ch.adams(2)).expect("same ring").scale(&Q::new(1.into(), 2.into())).to_bundle()
    }

    pub fn chern_character(&self) -> ChernCharacter {
        ChernCharacter {
            ring: self.ring.clone(),
            comps: ch_from_chern(&self.ring, &q(self.rank), &self.total_series()),
        }
    }
}

impl ChernCharacter {
    pub fn new(ring: &ChowRing, comps: Vec<Poly>) -> Self {
        let d = top_degree(ring);
        let mut out = zeros(ring);
        for (k, c) in comps.into_iter().enumerate().take(d + 1) {
            out[k] = ring.nf(&c);
        }
        ChernCharacter { ring: ring.clone(), comps: out }
    }

    /// `ch` of a sum of line bundles with the given multiplicities.
    pub fn of_lines(ring: &ChowRing, lines: &[(i64, &Poly)]) -> Result<Self, ChernError> {
        let mut acc = ChernCharacter::new(ring, vec![]);
        for (m, d) in lines {
            let ch = BundleClass::line(ring, d)?.chern_character().scale(&q(*m));
            acc = acc.add(&ch)?;
        }
        Ok(acc)
    }

    /// `ch` of a polynomial class regarded as a sum of graded pieces.
    pub fn from_class(ring: &ChowRing, p: &Poly) -> Self {
        Self::new(ring, graded(ring, &ring.nf(p)))
    }

    pub fn ring(&self) -> &ChowRing {
        &self.ring
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn rank(&self) -> Q {
        self.comps[0].constant_term()
    }

    /// The whole character as one inhomogeneous polynomial.
    pub fn as_poly(&self) -> Poly {
        self.comps.iter().fold(Poly::zero(self.ring.signature()), |a, b| &a + b)
    }

    fn check(&self, other: &Self) -> Result<(), ChernError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(ChernError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChernError> {
        self.check(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        Ok(ChernCharacter { ring: self.ring.clone(), comps })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ChernError> {
        self.check(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect();
        Ok(ChernCharacter { ring: self.ring.clone(), comps })
    }

    /// Character of the tensor product.
    pub fn mul(&self, other: &Self) -> Result<Self, ChernError> {
        self.check(other)?;
        Ok(ChernCharacter { ring: self.ring.clone(), comps: series_mul(&self.ring, &self.comps, &other.comps) })
    }

    pub fn scale(&self, c: &Q) -> Self {
        ChernCharacter { ring: self.ring.clone(), comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiplication by `e^t`, i.e. twisting by the line bundle `O(t)`.
    pub fn twist(&self, t: &Poly) -> Result<Self, ChernError> {
        let line = BundleClass::line(&self.ring, t)?.chern_character();
        self.mul(&line)
    }

    /// Adams operation: `ψ^k ch_j = k^j ch_j`.
    pub fn adams(&self, k: i64) -> Self {
        let comps = self
            .comps
            .iter()
            .enumerate()
            .map(|(j, c)| c.scale(&Q::from_integer(BigInt::from(k).pow(j as u32))))
            .collect();
        ChernCharacter { ring: self.ring.clone(), comps }
    }

    /// Bundle class with this character; the rank is `ch_0`.
    pub fn to_bundle(&self) -> BundleClass {
        let rank = crate::poly::to_i64(&self.rank()).expect("integral rank");
        BundleClass::from_total(&self.ring, rank, &chern_from_ch(&self.ring, &self.comps))
    }
}

/// Todd class `td_0..td_D` of the tangent bundle:
/// `td = exp(sum_k a_k p_k)` with `log(x / (1 - e^{-x})) = sum a_k x^k`.
pub fn todd(ring: &ChowRing) -> Result<Vec<Poly>, ChernError> {
    let tangent = ring.tangent().ok_or_else(|| ChowError::MissingTangent(ring.label().to_string()))?;
    let tb = BundleClass::new(ring, ring.dim() as i64, tangent.to_vec())?;
    let ch = tb.chern_character();
    let a = todd_log_coefficients(top_degree(ring));
    let mut log = zeros(ring);
    for k in 1..=top_degree(ring) {
        log[k] = ch.comps[k].scale(&(&a[k] * factorial(k)));
    }
    Ok(series_exp(ring, &log))
}

/// Hirzebruch–Riemann–Roch: `χ = ∫ ch · td`.
pub fn hrr_chi(ring: &ChowRing, ch: &ChernCharacter) -> Result<Q, ChernError> {
    if &ch.ring != ring {
        return Err(ChernError::RingMismatch);
    }
    let td = todd(ring)?;
    let prod = series_mul(ring, &ch.comps, &td);
    Ok(ring.integrate_top(&prod[ring.dim() as usize]))
}

/// Euler characteristic of a bundle class.
pub fn euler_characteristic(bundle: &BundleClass) -> Result<Q, ChernError> {
    hrr_chi(&bundle.ring, &bundle.chern_character())
}

/// Chern character of `i_* F` for a line bundle `F` of degree `f_degree` on a
/// smooth curve of genus `genus` and class `curve` in `P^n`, from
/// `i_*(ch(F) td(C)) = ch(i_* F) td(P^n)`. A class of codimension `n` is
/// treated as a reduced point, giving the skyscraper character.
pub fn grr_push_curve(ambient: &ChowRing, genus: i64, curve: &ChowClass, f_degree: i64) -> Result<ChernCharacter, ChernError> {
    let is_pn = ambient.signature().len() == 1 && !ambient.has_cap() && ambient.tangent().is_some();
    if !is_pn {
        return Err(ChernError::NotProjectiveSpace(ambient.label().to_string()));
    }
    ambient.check(curve)?;
    let n = ambient.dim();
    let codim = curve.degree().unwrap_or(0);
    if !curve.is_homogeneous() || (codim != n - 1 && codim != n) {
        return Err(ChernError::WrongCodimension { expected: n - 1, point: n, found: codim });
    }
    let mut pushed = curve.rep().clone();
    if codim == n - 1 {
        // push of ch(F) td(C) = [C] + (f + 1 - g) [pt]
        let pt = ambient.point_class()?;
        pushed = &pushed + &pt.rep().scale(&q(f_degree + 1 - genus));
    }
    let td = todd(ambient)?;
    let inv = series_inverse(ambient, &td);
    let comps = series_mul(ambient, &graded(ambient, &pushed), &inv);
    Ok(ChernCharacter { ring: ambient.clone(), comps })
}

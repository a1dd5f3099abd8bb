//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial carries a [`Signature`]: the ordered list of its
//! variables together with a positive integer weight for each. Monomials are
//! compared by weighted degree first and by reverse-lexicographic order on
//! the exponent vector second, so graded pieces are preserved by reduction.

mod groebner;
mod hilbert;
mod parse;

pub use groebner::GroebnerBasis;
pub use hilbert::{hilbert_polynomial, hilbert_series_numerator, HilbertPolynomial};
pub use parse::{parse_poly, parse_rational};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rational number; the only coefficient type in the crate.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The fraction `num/den`. Panics on a zero denominator.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials live over different variable signatures")]
    SignatureMismatch,
    #[error("duplicate variable `{0}` in signature")]
    DuplicateVariable(String),
    #[error("variable weights must be positive (`{0}`)")]
    ZeroWeight(String),
    #[error("Groebner computation exceeded the degree cap {0}")]
    DegreeCapExceeded(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

/// Ordered variables with their grading weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    vars: Vec<Variable>,
}

impl Signature {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>, PolyError> {
        let mut out: Vec<Variable> = Vec::new();
        for (name, weight) in vars {
            let name = name.into();
            if weight == 0 {
                return Err(PolyError::ZeroWeight(name));
            }
            if out.iter().any(|v| v.name == name) {
                return Err(PolyError::DuplicateVariable(name));
            }
            out.push(Variable { name, weight });
        }
        Ok(Arc::new(Signature { vars: out }))
    }

    /// Signature with no variables: polynomials over it are rational constants.
    pub fn empty() -> Arc<Self> {
        Arc::new(Signature { vars: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vars[i].weight
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.weight).collect()
    }

    /// This signature followed by `other`; fails on a name clash.
    pub fn concat(&self, other: &Signature) -> Result<Arc<Self>, PolyError> {
        Signature::new(
            self.vars
                .iter()
                .chain(other.vars.iter())
                .map(|v| (v.name.clone(), v.weight)),
        )
    }

    /// This signature with one more variable appended.
    pub fn with_var(&self, name: &str, weight: u32) -> Result<Arc<Self>, PolyError> {
        Signature::new(
            self.vars
                .iter()
                .map(|v| (v.name.clone(), v.weight))
                .chain(std::iter::once((name.to_string(), weight))),
        )
    }

    fn monomial(&self, exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().zip(&self.vars).map(|(e, v)| e * v.weight).sum();
        Monomial { degree, exps }
    }
}

/// Exponent vector with its cached weighted degree.
///
/// The ordering is graded reverse lexicographic: weighted degree first, then
/// the monomial with the smaller exponent in the last differing variable wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, assuming divisibility.
    fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree - other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }
    }

    fn lcm(&self, other: &Monomial, sig: &Signature) -> Monomial {
        sig.monomial(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with rational coefficients over a fixed [`Signature`].
///
/// Stored coefficients are never zero.
#[derive(Clone)]
pub struct Poly {
    sig: Arc<Signature>,
    terms: BTreeMap<Monomial, Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(sig: &Arc<Signature>) -> Poly {
        Poly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Arc<Signature>) -> Poly {
        Poly::constant(sig, Q::one())
    }

    pub fn constant(sig: &Arc<Signature>, c: Q) -> Poly {
        let mut p = Poly::zero(sig);
        if !c.is_zero() {
            p.terms.insert(sig.monomial(vec![0; sig.len()]), c);
        }
        p
    }

    pub fn var(sig: &Arc<Signature>, name: &str) -> Result<Poly, PolyError> {
        let i = sig.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Poly::var_at(sig, i))
    }

    pub fn var_at(sig: &Arc<Signature>, i: usize) -> Poly {
        let mut exps = vec![0; sig.len()];
        exps[i] = 1;
        Poly::monomial(sig, exps, Q::one())
    }

    pub fn monomial(sig: &Arc<Signature>, exps: Vec<u32>, c: Q) -> Poly {
        assert_eq!(exps.len(), sig.len(), "exponent vector length");
        let mut p = Poly::zero(sig);
        if !c.is_zero() {
            p.terms.insert(sig.monomial(exps), c);
        }
        p
    }

    /// Parses `text` over `sig`; shorthand for [`parse_poly`].
    pub fn parse(text: &str, sig: &Arc<Signature>) -> Result<Poly, PolyError> {
        parse_poly(text, sig)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff_of_exps(&self, exps: &[u32]) -> Q {
        self.coeff(&self.sig.monomial(exps.to_vec()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Constant term, or zero.
    pub fn constant_term(&self) -> Q {
        self.terms
            .iter()
            .next()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    /// Returns the constant if the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 if self.terms.keys().next().unwrap().is_one() => Some(self.constant_term()),
            _ => None,
        }
    }

    /// Highest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(|m| m.degree)
    }

    /// Lowest weighted degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// The part of weighted degree `d`.
    pub fn component(&self, d: u32) -> Poly {
        Poly {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of weighted degree above `d`.
    pub fn truncate(&self, d: u32) -> Poly {
        Poly {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.sig);
        }
        Poly {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.sig);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_sig(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig,
            "polynomial signature mismatch"
        );
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_sig(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_sig(other)?;
        Ok(self * other)
    }

    pub(crate) fn same_sig(&self, other: &Poly) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig {
            Ok(())
        } else {
            Err(PolyError::SignatureMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * m * other`
    pub(crate) fn add_scaled_shifted(&mut self, c: &Q, m: &Monomial, other: &Poly) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    /// Ring homomorphism into polynomials over `target` sending variable `i`
    /// to `images[i]`.
    pub fn substitute(&self, target: &Arc<Signature>, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.sig.len(), "one image per variable");
        let target = target.clone();
        let mut out = Poly::zero(&target);
        // cache powers of each image
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<Signature>) -> Result<Poly, PolyError> {
        let map: Vec<usize> = self
            .sig
            .vars
            .iter()
            .map(|v| target.index_of(&v.name).ok_or_else(|| PolyError::UnknownVariable(v.name.clone())))
            .collect::<Result<_, _>>()?;
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(target.monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Evaluates at a rational point given in signature order.
    pub fn evaluate(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.sig.len());
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial evaluation: substitutes constants for the listed variables.
    pub fn specialize(&self, values: &[(usize, Q)]) -> Poly {
        let mut out = Poly::zero(&self.sig);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            let mut coef = c.clone();
            for (i, v) in values {
                for _ in 0..exps[*i] {
                    coef *= v;
                }
                exps[*i] = 0;
            }
            out.add_term(self.sig.monomial(exps), coef);
        }
        out
    }

    /// Exponent of variable `i` in the highest power present.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exps[i]).max().unwrap_or(0)
    }

    /// Coefficients of `x_i^k` as polynomials in the remaining variables.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let top = self.degree_in(i) as usize;
        let mut out = vec![Poly::zero(&self.sig); if self.is_zero() { 0 } else { top + 1 }];
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            let k = exps[i] as usize;
            exps[i] = 0;
            out[k].add_term(self.sig.monomial(exps), c.clone());
        }
        out
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_sig(rhs);
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_sig(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_sig(rhs);
        let mut out = Poly::zero(&self.sig);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn fmt_rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Canonical form: descending monomial order, explicit `*`, unit
    /// coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(fmt_rational(&abs));
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.sig.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.sig.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Formats a rational the same way polynomial coefficients are printed.
pub fn format_rational(c: &Q) -> String {
    fmt_rational(c)
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(c: &Q) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Arc<Signature> {
        Signature::new([("x", 1), ("y", 1), ("z", 1)]).unwrap()
    }

    #[test]
    fn grevlex_order() {
        let s = sig();
        let m = |e: [u32; 3]| s.monomial(e.to_vec());
        // same degree: x^2 > xy > y^2 > xz > yz > z^2
        let chain = [m([2, 0, 0]), m([1, 1, 0]), m([0, 2, 0]), m([1, 0, 1]), m([0, 1, 1]), m([0, 0, 2])];
        for w in chain.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
        assert!(m([0, 0, 2]) > m([1, 0, 0]));
    }

    #[test]
    fn weighted_degree_dominates() {
        let s = Signature::new([("h", 1), ("c", 2)]).unwrap();
        let h3 = s.monomial(vec![3, 0]);
        let c2 = s.monomial(vec![0, 2]);
        assert_eq!(c2.degree(), 4);
        assert!(c2 > h3);
    }

    #[test]
    fn display_canonical() {
        let s = sig();
        let p = Poly::parse("3*x*y - x^2 + 4/3 - z", &s).unwrap();
        assert_eq!(p.to_string(), "-x^2+3*x*y-z+4/3");
        assert_eq!(Poly::zero(&s).to_string(), "0");
    }

    #[test]
    fn substitute_is_a_ring_map() {
        let s = sig();
        let t = Signature::new([("u", 1), ("v", 1)]).unwrap();
        let p = Poly::parse("x*y+z^2", &s).unwrap();
        let images = vec![
            Poly::parse("u+v", &t).unwrap(),
            Poly::parse("u-v", &t).unwrap(),
            Poly::parse("v", &t).unwrap(),
        ];
        assert_eq!(p.substitute(&t, &images), Poly::parse("u^2", &t).unwrap());
    }

    #[test]
    fn embed_by_name() {
        let s = Signature::new([("y", 1)]).unwrap();
        let p = Poly::parse("2*y^2", &s).unwrap();
        let e = p.embed(&sig()).unwrap();
        assert_eq!(e.to_string(), "2*y^2");
        assert!(matches!(e.embed(&s), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn signature_rejects_duplicates() {
        assert_eq!(
            Signature::new([("a", 1), ("a", 2)]).unwrap_err(),
            PolyError::DuplicateVariable("a".into())
        );
    }
}

//! Presented Chow rings with an integration map.
//!
//! A ring is `Q[vars]/(relations)` together with a dimension `d` and a
//! normalization. Integration of a class `x` of degree `d` is computed as
//! `value * NF(x * cap) / NF(top)`, where `top` spans the one-dimensional
//! graded piece of degree `d + deg(cap)`. The cap is `1` for honest rings.
//! For a hypersurface modelled inside an ambient ring it is the class of
//! the hypersurface.

mod catalog;
mod construct;
mod doc;

pub use catalog::{catalog, catalog_names, projective_line, projective_space, Variety};
pub use construct::{
    blowup_threefold_along_curve, integrate_on_hyperplane_section, product_ring, projective_bundle,
    relative_canonical, solve_center_tridegree, CenterSolution,
};
pub use doc::{RingDocument, VariableEntry};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg;
use crate::poly::{GroebnerBasis, Monomial, Poly, PolyError, Signature, Q};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChowError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("unknown variety `{0}`")]
    UnknownVariety(String),
    #[error("class is not homogeneous")]
    Inhomogeneous,
    #[error("expected a class of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("variable names clash: `{0}`")]
    NameClash(String),
    #[error("bundle rank must be at least one")]
    RankTooSmall,
    #[error("ring `{0}` was not built as a projective bundle")]
    NotAProjectiveBundle(String),
    #[error("expected a threefold, got dimension {0}")]
    NotAThreefold(u32),
    #[error("classes belong to different rings")]
    RingMismatch,
    #[error("ring `{0}` carries no tangent data")]
    MissingTangent(String),
    #[error("graded piece of degree {degree} has dimension {found}, expected 1")]
    TopPiece { degree: u32, found: u64 },
    #[error("normalization class reduces to zero")]
    ZeroNormalization,
    #[error("bundle class: {0}")]
    Bundle(String),
    #[error("malformed ring document: {0}")]
    Document(String),
}

/// Tautological data remembered by [`projective_bundle`].
#[derive(Debug, Clone, PartialEq)]
pub struct BundleData {
    pub zeta: String,
    pub rank: u32,
    pub c1: Poly,
}

/// Everything needed to build a [`ChowRing`].
#[derive(Debug, Clone)]
pub struct RingSpec {
    pub label: String,
    pub signature: Arc<Signature>,
    pub relations: Vec<Poly>,
    pub dim: u32,
    /// Class the integrand is multiplied by before reading off the top
    /// coefficient; `None` means `1`.
    pub cap: Option<Poly>,
    pub top: Poly,
    pub top_value: Q,
    /// Chern classes `c_1..c_d` of the tangent bundle.
    pub tangent: Option<Vec<Poly>>,
    pub bundle: Option<BundleData>,
}

#[derive(Debug)]
struct RingData {
    spec: RingSpec,
    gb: GroebnerBasis,
    cap: Poly,
    top_monomial: Monomial,
    top_coeff: Q,
}

/// A presented graded ring with integration. Cheap to clone.
#[derive(Debug, Clone)]
pub struct ChowRing(Arc<RingData>);

impl PartialEq for ChowRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.label() == other.label()
                && self.signature() == other.signature()
                && self.gb() == other.gb()
                && self.dim() == other.dim())
    }
}

impl ChowRing {
    pub fn new(spec: RingSpec) -> Result<Self, ChowError> {
        let sig = spec.signature.clone();
        for r in &spec.relations {
            r.same_sig(&Poly::zero(&sig))?;
        }
        let gb = GroebnerBasis::compute(&sig, &spec.relations)?;
        let cap = spec.cap.clone().unwrap_or_else(|| Poly::one(&sig));
        let cap_deg = homogeneous_degree(&cap)?;
        let top_deg = homogeneous_degree(&spec.top)?;
        if top_deg != spec.dim + cap_deg {
            return Err(ChowError::WrongDegree { expected: spec.dim + cap_deg, found: top_deg });
        }
        let pieces = gb.hilbert_function(top_deg);
        if pieces[top_deg as usize] != 1 {
            return Err(ChowError::TopPiece { degree: top_deg, found: pieces[top_deg as usize] });
        }
        let nf = gb.normal_form(&spec.top)?;
        let (m, c) = nf.leading_term().ok_or(ChowError::ZeroNormalization)?;
        let (top_monomial, top_coeff) = (m.clone(), c.clone());
        let tangent = match &spec.tangent {
            Some(t) => Some(t.iter().map(|c| gb.normal_form(c)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        let spec = RingSpec { tangent, ..spec };
        Ok(ChowRing(Arc::new(RingData { spec, gb, cap, top_monomial, top_coeff })))
    }

    pub fn label(&self) -> &str {
        &self.0.spec.label
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.0.spec.signature
    }

    pub fn relations(&self) -> &[Poly] {
        &self.0.spec.relations
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.0.gb
    }

    pub fn dim(&self) -> u32 {
        self.0.spec.dim
    }

    pub fn cap(&self) -> &Poly {
        &self.0.cap
    }

    pub fn has_cap(&self) -> bool {
        self.0.spec.cap.is_some()
    }

    /// Degree of the top graded piece of the presenting ring, i.e. the
    /// dimension plus the degree of the cap.
    pub fn ambient_dim(&self) -> u32 {
        self.0.top_monomial.degree()
    }

    pub fn top(&self) -> &Poly {
        &self.0.spec.top
    }

    pub fn top_value(&self) -> &Q {
        &self.0.spec.top_value
    }

    pub fn tangent(&self) -> Option<&[Poly]> {
        self.0.spec.tangent.as_deref()
    }

    pub fn bundle(&self) -> Option<&BundleData> {
        self.0.spec.bundle.as_ref()
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn poly(&self, text: &str) -> Result<Poly, ChowError> {
        Ok(Poly::parse(text, self.signature())?)
    }

    /// Parses and reduces a class.
    pub fn class(&self, text: &str) -> Result<ChowClass, ChowError> {
        Ok(self.from_poly(&self.poly(text)?))
    }

    pub fn from_poly(&self, p: &Poly) -> ChowClass {
        ChowClass { ring: self.clone(), rep: self.nf(p) }
    }

    pub fn var(&self, name: &str) -> Result<ChowClass, ChowError> {
        Ok(self.from_poly(&Poly::var(self.signature(), name)?))
    }

    pub fn one(&self) -> ChowClass {
        self.from_poly(&Poly::one(self.signature()))
    }

    pub fn constant(&self, c: Q) -> ChowClass {
        self.from_poly(&Poly::constant(self.signature(), c))
    }

    /// Normal form. Panics if `p` lives over another signature.
    pub fn nf(&self, p: &Poly) -> Poly {
        self.0.gb.normal_form(p).expect("polynomial over the ring's signature")
    }

    /// Class of a point: the normalization class divided by its value,
    /// expressed so that it integrates to one.
    pub fn point_class(&self) -> Result<ChowClass, ChowError> {
        if self.has_cap() {
            // pick a standard monomial of degree d pairing nontrivially
            for m in self.0.gb.standard_monomials(self.dim()) {
                let v = self.integrate_poly(&m)?;
                if !v.is_zero() {
                    return Ok(self.from_poly(&m.scale(&v.recip())));
                }
            }
            return Err(ChowError::ZeroNormalization);
        }
        Ok(self.from_poly(&self.top().scale(&self.top_value().recip())))
    }

    /// Integral of a homogeneous polynomial; zero unless its degree is `d`.
    pub fn integrate_poly(&self, p: &Poly) -> Result<Q, ChowError> {
        if p.is_zero() {
            return Ok(Q::zero());
        }
        if !p.is_homogeneous() {
            return Err(ChowError::Inhomogeneous);
        }
        Ok(self.integrate_top(p))
    }

    /// Integral of the degree-`d` component of an arbitrary polynomial.
    pub fn integrate_top(&self, p: &Poly) -> Q {
        let x = p.component(self.dim());
        if x.is_zero() {
            return Q::zero();
        }
        let nf = self.nf(&(&x * self.cap()));
        let c = nf.coeff(&self.0.top_monomial);
        c / &self.0.top_coeff * self.top_value()
    }

    pub fn integrate(&self, x: &ChowClass) -> Result<Q, ChowError> {
        self.check(x)?;
        self.integrate_poly(&x.rep)
    }

    pub(crate) fn check(&self, x: &ChowClass) -> Result<(), ChowError> {
        if &x.ring == self {
            Ok(())
        } else {
            Err(ChowError::RingMismatch)
        }
    }

    /// Graded dimensions of the presenting ring in degrees
    /// `0..=ambient_dim + 1`.
    pub fn hilbert_function(&self) -> Vec<u64> {
        self.0.gb.hilbert_function(self.ambient_dim() + 1)
    }

    /// Basis of the degree-`k` piece by standard monomials.
    pub fn basis(&self, k: u32) -> Vec<Poly> {
        self.0.gb.standard_monomials(k)
    }

    /// Matrix of the intersection pairing between degree `k` and `d - k`.
    pub fn pairing_matrix(&self, k: u32) -> Result<Vec<Vec<Q>>, ChowError> {
        let left = self.basis(k);
        let right = if k <= self.dim() { self.basis(self.dim() - k) } else { vec![] };
        left.iter()
            .map(|a| right.iter().map(|b| self.integrate_poly(&(a * b))).collect())
            .collect()
    }

    /// Quotient by numerically trivial classes: adds every class of degree
    /// at most `d` that pairs to zero with all classes of complementary
    /// degree as a relation. Rings with a cap are returned unchanged, since
    /// their pairing only sees the hypersurface.
    pub fn numerical_quotient(&self) -> Result<ChowRing, ChowError> {
        if self.has_cap() {
            return Ok(self.clone());
        }
        let mut extra = Vec::new();
        for k in 0..=self.dim() {
            let basis = self.basis(k);
            let m = self.pairing_matrix(k)?;
            if basis.is_empty() {
                continue;
            }
            let mt = linalg::transpose(&m);
            let kernel = if mt.is_empty() {
                // nothing to pair with: the whole piece is trivial
                (0..basis.len())
                    .map(|i| (0..basis.len()).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
                    .collect()
            } else {
                linalg::nullspace(&mt, basis.len())
            };
            for v in kernel {
                let mut p = Poly::zero(self.signature());
                for (c, b) in v.iter().zip(&basis) {
                    p = &p + &b.scale(c);
                }
                extra.push(p);
            }
        }
        if extra.is_empty() {
            return Ok(self.clone());
        }
        let mut spec = self.0.spec.clone();
        spec.relations.extend(extra);
        ChowRing::new(spec)
    }

    /// Same presentation with tangent Chern classes attached.
    pub fn with_tangent(&self, tangent: Vec<Poly>) -> ChowRing {
        let mut spec = self.0.spec.clone();
        spec.tangent = Some(tangent.iter().map(|c| self.nf(c)).collect());
        self.rebuild(spec)
    }

    fn rebuild(&self, spec: RingSpec) -> ChowRing {
        ChowRing(Arc::new(RingData {
            spec,
            gb: self.0.gb.clone(),
            cap: self.0.cap.clone(),
            top_monomial: self.0.top_monomial.clone(),
            top_coeff: self.0.top_coeff.clone(),
        }))
    }

    /// Same presentation under a new label.
    pub fn relabel(&self, label: &str) -> ChowRing {
        let mut spec = self.0.spec.clone();
        spec.label = label.to_string();
        self.rebuild(spec)
    }
}

fn homogeneous_degree(p: &Poly) -> Result<u32, ChowError> {
    if !p.is_homogeneous() {
        return Err(ChowError::Inhomogeneous);
    }
    Ok(p.degree().unwrap_or(0))
}

/// Element of a [`ChowRing`], stored as its normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct ChowClass {
    ring: ChowRing,
    rep: Poly,
}

impl ChowClass {
    pub fn ring(&self) -> &ChowRing {
        &self.ring
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.rep.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rep.is_homogeneous()
    }

    pub fn scale(&self, c: &Q) -> ChowClass {
        ChowClass { ring: self.ring.clone(), rep: self.rep.scale(c) }
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn integrate(&self) -> Result<Q, ChowError> {
        self.ring.integrate(self)
    }

    pub fn try_add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.ring.check(other)?;
        Ok(ChowClass { ring: self.ring.clone(), rep: &self.rep + &other.rep })
    }

    pub fn try_mul(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.ring.check(other)?;
        Ok(self.ring.from_poly(&(&self.rep * &other.rep)))
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl Add<&ChowClass> for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.try_add(rhs).expect("classes in the same ring")
    }
}

impl Sub<&ChowClass> for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self.ring.check(rhs).expect("classes in the same ring");
        ChowClass { ring: self.ring.clone(), rep: &self.rep - &rhs.rep }
    }
}

impl Mul<&ChowClass> for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        self.try_mul(rhs).expect("classes in the same ring")
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass { ring: self.ring.clone(), rep: -&self.rep }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    #[test]
    fn fb_integration_through_the_cap() {
        let fb = catalog("FB").unwrap();
        assert_eq!(fb.integrate(&fb.class("alpha_1*alpha_2*alpha_3").unwrap()).unwrap(), q(1));
        let h2 = fb.class("alpha_1+alpha_2+alpha_3+alpha_4").unwrap();
        assert_eq!(h2.pow(3).integrate().unwrap(), q(24));
        assert_eq!(fb.point_class().unwrap().integrate().unwrap(), q(1));
    }

    #[test]
    fn degree_mismatch_integrates_to_zero_and_inhomogeneous_is_rejected() {
        let b = catalog("B").unwrap();
        assert_eq!(b.class("h_3^3").unwrap().integrate().unwrap(), q(0));
        assert_eq!(b.class("h_3^4+h_3").unwrap().integrate(), Err(ChowError::Inhomogeneous));
    }

    #[test]
    fn classes_from_different_rings_do_not_mix() {
        let a = catalog("P1^2").unwrap();
        let b = catalog("P1^3").unwrap();
        let x = a.var("alpha_1").unwrap();
        let y = b.var("alpha_1").unwrap();
        assert_eq!(x.try_mul(&y), Err(ChowError::RingMismatch));
    }

    #[test]
    fn numerical_quotient_of_an_honest_ring_is_itself() {
        let g = catalog("G26").unwrap();
        let n = g.numerical_quotient().unwrap();
        assert_eq!(n.hilbert_function(), g.hilbert_function());
    }
}

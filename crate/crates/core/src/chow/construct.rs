//! Ring constructions: products, projective bundles, blow-ups of threefolds
//! along curves.

use num_traits::Zero;

use super::{BundleData, ChowClass, ChowError, ChowRing, RingSpec};
use crate::chern::{self, BundleClass, ChernCharacter};
use crate::poly::{q, Poly, Q};

/// Künneth product. Variable names must be disjoint.
pub fn product_ring(a: &ChowRing, b: &ChowRing) -> Result<ChowRing, ChowError> {
    for v in b.signature().vars() {
        if a.signature().index_of(&v.name).is_some() {
            return Err(ChowError::NameClash(v.name.clone()));
        }
    }
    let sig = a.signature().concat(b.signature())?;
    let lift = |p: &Poly| p.embed(&sig);
    let mut relations = Vec::new();
    for r in a.relations().iter().chain(b.relations()) {
        relations.push(lift(r)?);
    }
    let cap = match (a.has_cap(), b.has_cap()) {
        (false, false) => None,
        _ => Some(&lift(a.cap())? * &lift(b.cap())?),
    };
    let mut spec = RingSpec {
        label: format!("{}x{}", a.label(), b.label()),
        signature: sig.clone(),
        relations,
        dim: a.dim() + b.dim(),
        cap,
        top: &lift(a.top())? * &lift(b.top())?,
        top_value: a.top_value() * b.top_value(),
        tangent: None,
        bundle: None,
    };
    let ring = ChowRing::new(spec.clone())?;
    if let (Some(ta), Some(tb)) = (a.tangent(), b.tangent()) {
        let lift_all = |t: &[Poly]| t.iter().map(lift).collect::<Result<Vec<_>, _>>();
        let ea = BundleClass::new(&ring, a.dim() as i64, lift_all(ta)?).map_err(chern_to_chow)?;
        let eb = BundleClass::new(&ring, b.dim() as i64, lift_all(tb)?).map_err(chern_to_chow)?;
        let t = ea.whitney_sum(&eb).map_err(chern_to_chow)?;
        spec.tangent = Some(t.chern_classes().to_vec());
        return Ok(ring.with_tangent(spec.tangent.unwrap()));
    }
    Ok(ring)
}

fn chern_to_chow(e: chern::ChernError) -> ChowError {
    match e {
        chern::ChernError::Chow(c) => c,
        other => ChowError::Bundle(other.to_string()),
    }
}

/// Projective bundle of rank-one quotients of `E`, with tautological class
/// `zeta = c_1(O(1))` named `zeta_name`.
///
/// The relation is `sum_i (-1)^i c_i(E) zeta^{r-i} = 0` and
/// `π_* zeta^{r-1} = 1`, so `π_* zeta^{r-1+k}` is the Segre class of `E^∨`.
pub fn projective_bundle(base: &ChowRing, e: &BundleClass, zeta_name: &str) -> Result<ChowRing, ChowError> {
    if e.rank() < 1 {
        return Err(ChowError::RankTooSmall);
    }
    base.check(&e.chern_class(0))?;
    let r = e.rank() as u32;
    let sig = base.signature().with_var(zeta_name, 1)?;
    let zeta = Poly::var(&sig, zeta_name)?;
    let lift = |p: &Poly| p.embed(&sig);
    let mut relations: Vec<Poly> = base.relations().iter().map(lift).collect::<Result<_, _>>()?;
    let mut grothendieck = Poly::zero(&sig);
    for i in 0..=r as usize {
        let term = &lift(&e.c(i))? * &zeta.pow(r - i as u32);
        grothendieck = if i % 2 == 0 { &grothendieck + &term } else { &grothendieck - &term };
    }
    relations.push(grothendieck);
    let spec = RingSpec {
        label: format!("P({})", base.label()),
        signature: sig.clone(),
        relations,
        dim: base.dim() + r - 1,
        cap: if base.has_cap() { Some(lift(base.cap())?) } else { None },
        top: &lift(base.top())? * &zeta.pow(r - 1),
        top_value: base.top_value().clone(),
        tangent: None,
        bundle: Some(BundleData { zeta: zeta_name.to_string(), rank: r, c1: lift(&e.c(1))? }),
    };
    let ring = ChowRing::new(spec)?;
    match base.tangent() {
        Some(tb) if !base.has_cap() => {
            // T = π^*T_B + (π^*E^∨ ⊗ O(1) - O)
            let lifted = tb.iter().map(lift).collect::<Result<Vec<_>, _>>()?;
            let tbase = BundleClass::new(&ring, base.dim() as i64, lifted).map_err(chern_to_chow)?;
            let ce = e.chern_classes().iter().map(lift).collect::<Result<Vec<_>, _>>()?;
            let elift = BundleClass::new(&ring, e.rank(), ce).map_err(chern_to_chow)?;
            let rel = elift
                .dual()
                .chern_character()
                .twist(&zeta)
                .and_then(|c| c.sub(&ChernCharacter::from_class(&ring, &Poly::one(&sig))))
                .map_err(chern_to_chow)?;
            let t = tbase.chern_character().add(&rel).map_err(chern_to_chow)?.to_bundle();
            Ok(ring.with_tangent(t.chern_classes().to_vec()))
        }
        _ => Ok(ring),
    }
}

/// Relative canonical class `-r zeta + π^* c_1(E)` of a projective bundle.
pub fn relative_canonical(pb: &ChowRing) -> Result<ChowClass, ChowError> {
    let data = pb.bundle().ok_or_else(|| ChowError::NotAProjectiveBundle(pb.label().to_string()))?;
    let zeta = pb.var(&data.zeta)?;
    Ok(&zeta.scale(&-q(data.rank as i64)) + &pb.from_poly(&data.c1))
}

/// `∫_ambient x · H`: the degree of `x` regarded on the hyperplane section
/// of class `H`.
pub fn integrate_on_hyperplane_section(ambient: &ChowRing, h: &ChowClass, x: &ChowClass) -> Result<Q, ChowError> {
    ambient.check(h)?;
    ambient.check(x)?;
    if !x.is_homogeneous() {
        return Err(ChowError::Inhomogeneous);
    }
    let found = x.degree().unwrap_or(0);
    if !x.is_zero() && found + 1 != ambient.dim() {
        return Err(ChowError::WrongDegree { expected: ambient.dim() - 1, found });
    }
    ambient.integrate(&(x * h))
}

/// Blow-up of a smooth threefold along a smooth curve of class `curve` and
/// genus `genus`, with exceptional divisor `e`:
///
/// * `e · π^*y = 0` for `y` of degree at least two,
/// * `e^2 · π^*D = -(D·C) [pt]`,
/// * `e^3 = -deg N_C [pt]` with `deg N_C = -K·C + 2g - 2`,
///
/// followed by the quotient by numerically trivial classes.
pub fn blowup_threefold_along_curve(base: &ChowRing, curve: &ChowClass, genus: i64) -> Result<ChowRing, ChowError> {
    blowup_raw(base, curve, genus)?.numerical_quotient()
}

fn blowup_raw(base: &ChowRing, curve: &ChowClass, genus: i64) -> Result<ChowRing, ChowError> {
    if base.dim() != 3 || base.has_cap() {
        return Err(ChowError::NotAThreefold(base.dim()));
    }
    base.check(curve)?;
    let cdeg = curve.degree().unwrap_or(0);
    if !curve.is_homogeneous() || cdeg != 2 {
        return Err(ChowError::WrongDegree { expected: 2, found: cdeg });
    }
    let tangent = base.tangent().ok_or_else(|| ChowError::MissingTangent(base.label().to_string()))?;
    let sig = base.signature().with_var("e", 1)?;
    let e = Poly::var(&sig, "e")?;
    let lift = |p: &Poly| p.embed(&sig);
    let pt = lift(base.point_class()?.rep())?;
    let mut relations: Vec<Poly> = base.relations().iter().map(lift).collect::<Result<_, _>>()?;
    for y in base.basis(2).iter().chain(base.basis(3).iter()) {
        relations.push(&e * &lift(y)?);
    }
    for d in base.basis(1) {
        let dc = base.integrate_poly(&(&d * curve.rep()))?;
        relations.push(&(&e.pow(2) * &lift(&d)?) + &pt.scale(&dc));
    }
    let normal_degree = base.integrate_poly(&(&tangent[0] * curve.rep()))? + q(2 * genus - 2);
    relations.push(&e.pow(3) + &pt.scale(&normal_degree));
    ChowRing::new(RingSpec {
        label: format!("Bl({})", base.label()),
        signature: sig.clone(),
        relations,
        dim: 3,
        cap: None,
        top: lift(base.top())?,
        top_value: base.top_value().clone(),
        tangent: None,
        bundle: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterSolution {
    pub tridegree: [u32; 3],
    pub genus: u32,
}

/// Searches tri-degrees `0..=max_degree` and genera `0..=max_genus` for curves
/// in `(P^1)^3` such that `α_4 = h - e` with `h = α_1 + α_2 + α_3` satisfies
/// `α_4^2 = 0` numerically on the blow-up.
pub fn solve_center_tridegree(max_degree: u32, max_genus: u32) -> Result<Vec<CenterSolution>, ChowError> {
    let base = super::catalog("P1^3")?;
    let mut out = Vec::new();
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree {
            for d3 in 0..=max_degree {
                let curve = base.class(&format!(
                    "{d1}*alpha_2*alpha_3+{d2}*alpha_1*alpha_3+{d3}*alpha_1*alpha_2"
                ))?;
                if curve.is_zero() {
                    continue;
                }
                for g in 0..=max_genus {
                    let bl = blowup_raw(&base, &curve, g as i64)?;
                    let a4 = bl.class("alpha_1+alpha_2+alpha_3-e")?;
                    let sq = a4.pow(2);
                    let mut ok = (&sq * &a4).integrate()?.is_zero();
                    for d in ["alpha_1", "alpha_2", "alpha_3", "e"] {
                        ok &= (&sq * &bl.class(d)?).integrate()?.is_zero();
                    }
                    if ok {
                        out.push(CenterSolution { tridegree: [d1, d2, d3], genus: g });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::catalog;

    #[test]
    fn product_with_a_point_is_the_same_ring() {
        let b = catalog("B").unwrap();
        let p = product_ring(&b, &catalog("point").unwrap()).unwrap();
        assert_eq!(p.hilbert_function(), b.hilbert_function());
        assert_eq!(p.class("h_3^4").unwrap().integrate().unwrap(), q(16));
    }

    #[test]
    fn product_of_two_lines() {
        let l = product_ring(&super::super::projective_line("a").unwrap(), &super::super::projective_line("b").unwrap())
            .unwrap();
        assert_eq!(l.class("a*b").unwrap().integrate().unwrap(), q(1));
        assert!(matches!(
            product_ring(&catalog("B").unwrap(), &catalog("B").unwrap()),
            Err(ChowError::NameClash(_))
        ));
    }

    #[test]
    fn p1_times_b() {
        let r = catalog("P1xB").unwrap();
        assert!(r.gb().contains(&r.poly("sigma^2").unwrap()).unwrap());
        assert_eq!(r.class("sigma*h_3^4").unwrap().integrate().unwrap(), q(16));
    }

    #[test]
    fn bundle_over_a_point_is_a_line() {
        let pt = catalog("point").unwrap();
        let pb = projective_bundle(&pt, &BundleClass::trivial(&pt, 2), "z").unwrap();
        assert!(pb.gb().contains(&pb.poly("z^2").unwrap()).unwrap());
        assert_eq!(pb.class("z").unwrap().integrate().unwrap(), q(1));
        assert_eq!(relative_canonical(&pb).unwrap(), pb.class("-2*z").unwrap());
        assert_eq!(pb.tangent().unwrap()[0], pb.poly("2*z").unwrap());
        assert!(matches!(
            relative_canonical(&catalog("B").unwrap()),
            Err(ChowError::NotAProjectiveBundle(_))
        ));
    }

    #[test]
    fn ruling_line_has_trivial_e_cubed() {
        let base = catalog("P1^3").unwrap();
        let c = base.class("alpha_1*alpha_2").unwrap();
        let bl = blowup_threefold_along_curve(&base, &c, 0).unwrap();
        assert_eq!(bl.class("e^3").unwrap().integrate().unwrap(), q(0));
        assert!(matches!(
            blowup_threefold_along_curve(&catalog("B").unwrap(), &catalog("B").unwrap().class("h_3^2").unwrap(), 0),
            Err(ChowError::NotAThreefold(4))
        ));
    }

    #[test]
    fn elliptic_sextic_is_the_unique_center() {
        let sols = solve_center_tridegree(4, 3).unwrap();
        assert_eq!(sols, vec![CenterSolution { tridegree: [2, 2, 2], genus: 1 }]);
    }

    #[test]
    fn blowup_has_poincare_duality() {
        let base = catalog("P1^3").unwrap();
        let c = base.class("2*alpha_2*alpha_3+2*alpha_1*alpha_3+2*alpha_1*alpha_2").unwrap();
        let bl = blowup_threefold_along_curve(&base, &c, 1).unwrap();
        assert_eq!(bl.hilbert_function(), vec![1, 4, 4, 1, 0]);
        assert_eq!(bl.class("(2*alpha_1+2*alpha_2+2*alpha_3-e)^3").unwrap().integrate().unwrap(), q(24));
    }
}

//! The rings used throughout the crate, built on demand and cached.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use super::{product_ring, projective_bundle, ChowError, ChowRing, RingSpec};
use crate::chern::BundleClass;
use crate::poly::{q, qf, Poly, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variety {
    /// Projective space of the given dimension, hyperplane `H`.
    Pn(u32),
    /// Product of `k` lines with classes `alpha_1..alpha_k`.
    P1k(u32),
    /// Grassmannian of lines in `P^5`, generated by `h_2` and `c_2`.
    G26,
    /// Lagrangian Grassmannian, Chern classes `c'_1, c'_2, c'_3` of the
    /// tautological quotient.
    Gw36,
    /// The genus-9 Fano fourfold.
    B,
    /// Hyperplane section of class `(1,1,1,1)` in `(P^1)^4`.
    FB,
    /// Incidence variety, a `P^1`-bundle over `FB` with tautological `h_3'`.
    I,
    /// `P(O(2) + 3 O)` over a line with classes `sigma`, `h`.
    Pi,
    /// `P^1 x B`, line class `sigma`.
    P1B,
    Point,
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::Pn(n) => write!(f, "P{n}"),
            Variety::P1k(k) => write!(f, "P1^{k}"),
            Variety::G26 => write!(f, "G26"),
            Variety::Gw36 => write!(f, "Gw36"),
            Variety::B => write!(f, "B"),
            Variety::FB => write!(f, "FB"),
            Variety::I => write!(f, "I"),
            Variety::Pi => write!(f, "Pi"),
            Variety::P1B => write!(f, "P1xB"),
            Variety::Point => write!(f, "point"),
        }
    }
}

impl FromStr for Variety {
    type Err = ChowError;

    fn from_str(s: &str) -> Result<Self, ChowError> {
        let unknown = || ChowError::UnknownVariety(s.to_string());
        let num = |t: &str| t.parse::<u32>().map_err(|_| unknown());
        let v = match s {
            "G26" => Variety::G26,
            "Gw36" => Variety::Gw36,
            "B" => Variety::B,
            "FB" => Variety::FB,
            "I" => Variety::I,
            "Pi" => Variety::Pi,
            "P1xB" => Variety::P1B,
            "point" => Variety::Point,
            _ => {
                if let Some(k) = s.strip_prefix("P1^k(").and_then(|t| t.strip_suffix(')')) {
                    Variety::P1k(num(k)?)
                } else if let Some(k) = s.strip_prefix("P1^") {
                    Variety::P1k(num(k)?)
                } else if let Some(n) = s.strip_prefix("Pn(").and_then(|t| t.strip_suffix(')')) {
                    Variety::Pn(num(n)?)
                } else if let Some(n) = s.strip_prefix('P') {
                    Variety::Pn(num(n)?)
                } else {
                    return Err(unknown());
                }
            }
        };
        match v {
            Variety::Pn(0) | Variety::P1k(0) => Err(unknown()),
            v => Ok(v),
        }
    }
}

/// Labels accepted by [`catalog`], with examples for the parametric families.
pub fn catalog_names() -> Vec<&'static str> {
    vec!["P5", "P1^4", "G26", "Gw36", "B", "FB", "I", "Pi", "P1xB", "point"]
}

/// Looks up a ring by label, e.g. `"B"`, `"P5"`, `"Pn(3)"`, `"P1^4"`.
pub fn catalog(name: &str) -> Result<ChowRing, ChowError> {
    let v: Variety = name.parse()?;
    static CACHE: OnceLock<Mutex<HashMap<Variety, ChowRing>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().expect("cache lock").get(&v) {
        return Ok(r.clone());
    }
    let ring = build(v)?;
    cache.lock().expect("cache lock").insert(v, ring.clone());
    Ok(ring)
}

fn build(v: Variety) -> Result<ChowRing, ChowError> {
    match v {
        Variety::Pn(n) => projective_space(n, "H"),
        Variety::P1k(k) => lines(k),
        Variety::G26 => g26(),
        Variety::Gw36 => gw36(),
        Variety::B => fano_b(),
        Variety::FB => fb(),
        Variety::I => incidence(),
        Variety::Pi => pi(),
        Variety::P1B => Ok(product_ring(&projective_line("sigma")?, &catalog("B")?)?.relabel("P1xB")),
        Variety::Point => point(),
    }
}

fn parse_all(sig: &Arc<Signature>, rels: &[&str]) -> Result<Vec<Poly>, ChowError> {
    rels.iter().map(|r| Ok(Poly::parse(r, sig)?)).collect()
}

/// `Q[var]/(var^{n+1})` with `∫ var^n = 1`.
pub fn projective_space(n: u32, var: &str) -> Result<ChowRing, ChowError> {
    let sig = Signature::new([(var, 1)])?;
    let h = Poly::var(&sig, var)?;
    let tangent = (1..=n)
        .map(|k| {
            let b: u64 = (0..k as u64).fold(1, |acc, i| acc * (n as u64 + 1 - i) / (i + 1));
            h.pow(k).scale(&q(b as i64))
        })
        .collect();
    ChowRing::new(RingSpec {
        label: format!("P{n}"),
        signature: sig.clone(),
        relations: vec![h.pow(n + 1)],
        dim: n,
        cap: None,
        top: h.pow(n),
        top_value: q(1),
        tangent: Some(tangent),
        bundle: None,
    })
}

pub fn projective_line(var: &str) -> Result<ChowRing, ChowError> {
    projective_space(1, var)
}

fn lines(k: u32) -> Result<ChowRing, ChowError> {
    let names: Vec<String> = (1..=k).map(|i| format!("alpha_{i}")).collect();
    let sig = Signature::new(names.iter().map(|n| (n.as_str(), 1)))?;
    let vars: Vec<Poly> = (0..k as usize).map(|i| Poly::var_at(&sig, i)).collect();
    let one = Poly::one(&sig);
    let total = vars.iter().fold(one.clone(), |acc, a| &acc * &(&one + &a.scale(&q(2))));
    let tangent = (1..=k).map(|d| total.component(d)).collect();
    ChowRing::new(RingSpec {
        label: format!("P1^{k}"),
        signature: sig.clone(),
        relations: vars.iter().map(|a| a.pow(2)).collect(),
        dim: k,
        cap: None,
        top: vars.iter().fold(one, |acc, a| &acc * a),
        top_value: q(1),
        tangent: Some(tangent),
        bundle: None,
    })
}

fn g26() -> Result<ChowRing, ChowError> {
    let sig = Signature::new([("h_2", 1), ("c_2", 2)])?;
    let ring = ChowRing::new(RingSpec {
        label: "G26".into(),
        signature: sig.clone(),
        relations: parse_all(&sig, &["h_2^5+3*h_2*c_2^2-4*h_2^3*c_2", "-h_2^4*c_2+3*h_2^2*c_2^2-c_2^3"])?,
        dim: 8,
        cap: None,
        top: Poly::parse("h_2^8", &sig)?,
        top_value: q(14),
        tangent: None,
        bundle: None,
    })?;
    // T = K^v ⊗ Q with c(K^v) = 1 + h_2 + c_2 and Q = 6 O / K
    let kdual = BundleClass::parse(&ring, 2, &["h_2", "c_2"]).expect("valid classes");
    let quot = BundleClass::trivial(&ring, 6).whitney_quotient(&kdual.dual()).expect("same ring");
    let t = kdual.tensor(&quot).expect("same ring");
    Ok(ring.with_tangent(t.chern_classes().to_vec()))
}

fn gw36() -> Result<ChowRing, ChowError> {
    let sig = Signature::new([("c'_1", 1), ("c'_2", 2), ("c'_3", 3)])?;
    let ring = ChowRing::new(RingSpec {
        label: "Gw36".into(),
        signature: sig.clone(),
        relations: parse_all(&sig, &["c'_3^2", "c'_2^2-2*c'_1*c'_3", "c'_1^2-2*c'_2"])?,
        dim: 6,
        cap: None,
        top: Poly::parse("c'_1^6", &sig)?,
        top_value: q(16),
        tangent: None,
        bundle: None,
    })?;
    // T = Sym² Q
    let q3 = BundleClass::parse(&ring, 3, &["c'_1", "c'_2", "c'_3"]).expect("valid classes");
    Ok(ring.with_tangent(q3.sym2().chern_classes().to_vec()))
}

/// Relations of the Chow ring of `B`.
pub(crate) const B_RELATIONS: [&str; 11] = [
    "3*h_3^2-2*(a_1+a_2+a_3+a_4)",
    "8*h_3*a_1-3*h_3^3",
    "8*h_3*a_2-3*h_3^3",
    "8*h_3*a_3-3*h_3^3",
    "8*h_3*a_4-3*h_3^3",
    "8*a_1*a_2-h_3^4",
    "8*a_1*a_3-h_3^4",
    "8*a_1*a_4-h_3^4",
    "8*a_2*a_3-h_3^4",
    "8*a_2*a_4-h_3^4",
    "8*a_3*a_4-h_3^4",
];

fn fano_b() -> Result<ChowRing, ChowError> {
    let sig = Signature::new([("h_3", 1), ("a_1", 2), ("a_2", 2), ("a_3", 2), ("a_4", 2)])?;
    let ring = ChowRing::new(RingSpec {
        label: "B".into(),
        signature: sig.clone(),
        relations: parse_all(&sig, &B_RELATIONS)?,
        dim: 4,
        cap: None,
        top: Poly::parse("h_3^4", &sig)?,
        top_value: q(16),
        tangent: None,
        bundle: None,
    })?;
    // B is cut from Gw36 by two hyperplanes: T_B = Sym² Q|_B - 2 O(h_3),
    // with c(Q|_B) = 1 + h_3 + h_3^2/2 + h_3^3/8.
    let qb = BundleClass::new(
        &ring,
        3,
        vec![ring.poly("h_3")?, ring.poly("1/2*h_3^2")?, ring.poly("1/8*h_3^3")?],
    )
    .expect("valid classes");
    let normal = BundleClass::line(&ring, &ring.poly("h_3")?).expect("valid class");
    let normal = normal.whitney_sum(&normal).expect("same ring");
    let t = qb.sym2().whitney_quotient(&normal).expect("same ring");
    Ok(ring.with_tangent(t.chern_classes().to_vec()))
}

fn fb() -> Result<ChowRing, ChowError> {
    let p14 = catalog("P1^4")?;
    let sig = p14.signature().clone();
    ChowRing::new(RingSpec {
        label: "FB".into(),
        signature: sig.clone(),
        relations: p14.relations().to_vec(),
        dim: 3,
        cap: Some(Poly::parse("alpha_1+alpha_2+alpha_3+alpha_4", &sig)?),
        top: Poly::parse("alpha_1*alpha_2*alpha_3*alpha_4", &sig)?,
        top_value: q(1),
        tangent: None,
        bundle: None,
    })
}

/// `E = (K_2^⊥/K_2)^∨(h_2)` on `FB`: `c_1 = 2 h_2`, `c_2 = 4/3 h_2^2`.
pub(crate) fn incidence_bundle(fb: &ChowRing) -> Result<BundleClass, ChowError> {
    let h2 = fb.poly("alpha_1+alpha_2+alpha_3+alpha_4")?;
    Ok(BundleClass::new(fb, 2, vec![h2.scale(&q(2)), h2.pow(2).scale(&qf(4, 3))]).expect("valid classes"))
}

fn incidence() -> Result<ChowRing, ChowError> {
    let fb = catalog("FB")?;
    let e = incidence_bundle(&fb)?;
    Ok(projective_bundle(&fb, &e, "h_3'")?.relabel("I"))
}

fn pi() -> Result<ChowRing, ChowError> {
    let line = projective_line("sigma")?;
    let e = BundleClass::new(&line, 4, vec![line.poly("2*sigma")?]).expect("valid class");
    Ok(projective_bundle(&line, &e, "h")?.relabel("Pi"))
}

fn point() -> Result<ChowRing, ChowError> {
    let sig = Signature::empty();
    ChowRing::new(RingSpec {
        label: "point".into(),
        signature: sig.clone(),
        relations: vec![],
        dim: 0,
        cap: None,
        top: Poly::one(&sig),
        top_value: q(1),
        tangent: Some(vec![]),
        bundle: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_parse() {
        assert_eq!("P5".parse::<Variety>().unwrap(), Variety::Pn(5));
        assert_eq!("Pn(3)".parse::<Variety>().unwrap(), Variety::Pn(3));
        assert_eq!("P1^4".parse::<Variety>().unwrap(), Variety::P1k(4));
        assert_eq!("P1^k(2)".parse::<Variety>().unwrap(), Variety::P1k(2));
        assert!(matches!(catalog("Q7"), Err(ChowError::UnknownVariety(_))));
        assert!(matches!(catalog("P0"), Err(ChowError::UnknownVariety(_))));
    }

    #[test]
    fn every_catalog_ring_has_a_one_dimensional_top() {
        for name in catalog_names() {
            let r = catalog(name).unwrap();
            let hf = r.hilbert_function();
            let top = r.ambient_dim() as usize;
            assert_eq!(hf[top], 1, "{name}");
            assert!(hf[top + 1..].iter().all(|&x| x == 0), "{name}: {hf:?}");
        }
    }

    #[test]
    fn graded_dimensions() {
        assert_eq!(catalog("G26").unwrap().hilbert_function(), vec![1, 1, 2, 2, 3, 2, 2, 1, 1, 0]);
        assert_eq!(catalog("B").unwrap().hilbert_function(), vec![1, 1, 4, 1, 1, 0]);
        assert_eq!(catalog("Gw36").unwrap().hilbert_function(), vec![1, 1, 1, 2, 1, 1, 1, 0]);
    }

    #[test]
    fn normalizations() {
        let b = catalog("B").unwrap();
        assert_eq!(b.class("h_3^4").unwrap().integrate().unwrap(), q(16));
        let p14 = catalog("P1^4").unwrap();
        assert_eq!(p14.class("alpha_1*alpha_2*alpha_3*alpha_4").unwrap().integrate().unwrap(), q(1));
        let gw = catalog("Gw36").unwrap();
        assert_eq!(gw.class("c'_1^3*c'_3").unwrap().integrate().unwrap(), q(2));
    }

    #[test]
    fn tangent_first_chern_classes_give_the_index() {
        let c1 = |name: &str| catalog(name).unwrap().tangent().unwrap()[0].to_string();
        assert_eq!(c1("P5"), "6*H");
        assert_eq!(c1("G26"), "6*h_2");
        assert_eq!(c1("Gw36"), "4*c'_1");
        assert_eq!(c1("B"), "2*h_3");
        assert_eq!(c1("P1^3"), "2*alpha_1+2*alpha_2+2*alpha_3");
    }

    #[test]
    fn euler_characteristics_of_the_tangent_bundles() {
        // top Chern class integrates to the number of Schubert cells
        let e = |name: &str| {
            let r = catalog(name).unwrap();
            let t = r.tangent().unwrap();
            r.integrate_poly(&t[r.dim() as usize - 1]).unwrap()
        };
        assert_eq!(e("G26"), q(15));
        assert_eq!(e("Gw36"), q(8));
        assert_eq!(e("P5"), q(6));
    }
}

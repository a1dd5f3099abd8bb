//! Seeded randomized invariants, run as one check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Abort, Check, Ctx, Outcome, Speed};
use crate::bott::{cohomology, Cohomology, WeightC3, DIM};
use crate::chern::BundleClass;
use crate::chow::catalog;
use crate::linalg;
use crate::pencil::{constant_rank_certificate, pencil_signature, pfaffian, Certificate, SkewPencil};
use crate::poly::{Poly, Q};
use crate::rep::SL2Rep;

pub(super) static CHECKS: &[Check] = &[Check {
    name: "property-suites",
    section: "core",
    reference: "randomized invariants: Pf^2 = det, fraction-free rank, normal forms, Whitney and Chern character round trips, Clebsch-Gordan dimensions, Serre duality, certificate soundness",
    speed: Speed::Fast,
    run: suites,
}];

/// Outcome of one randomized property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Q>> {
    let mut m = vec![vec![qi(0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = qi(rng.gen_range(-5..=5));
            m[j][i] = -x.clone();
            m[i][j] = x;
        }
    }
    m
}

fn pf_squared(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let n = 2 * rng.gen_range(1..=3);
    let m = random_skew(rng, n);
    let pf = pfaffian(&m)?;
    Ok(&pf * &pf == linalg::det(&m))
}

fn bareiss(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    // product of random n×k and k×n integer matrices has rank at most k
    let n = rng.gen_range(2..=8);
    let k = rng.gen_range(1..=n);
    let a: Vec<Vec<i64>> = (0..n).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let b: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let prod: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect();
    let zi: Vec<Vec<_>> = prod.iter().map(|r| r.iter().map(|&x| num_bigint::BigInt::from(x)).collect()).collect();
    let zq: Vec<Vec<Q>> = prod.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let r = linalg::rank_fraction_free(&zi);
    Ok(r == linalg::rank(&zq) && r <= k)
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &crate::chow::ChowRing, max_deg: u32) -> Poly {
    let sig = ring.signature();
    let mut p = Poly::zero(sig);
    for _ in 0..4 {
        let exps: Vec<u32> = (0..sig.len()).map(|_| rng.gen_range(0..=1)).collect();
        let deg: u32 = exps.iter().zip(sig.weights()).map(|(e, w)| e * w).sum();
        if deg <= max_deg {
            p = &p + &Poly::monomial(sig, exps, qi(rng.gen_range(-4..=4)));
        }
    }
    p
}

fn ring_axioms(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let ring = catalog(["B", "G26", "FB", "P1xB"][rng.gen_range(0..4)])?;
    let [a, b, c] = [0; 3].map(|_| ring.from_poly(&random_poly(rng, &ring, 3)));
    let assoc = &(&a * &b) * &c == &a * &(&b * &c);
    let comm = &a * &b == &b * &a;
    let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
    let unit = &a * &ring.one() == a && (&a + &-&a).is_zero();
    Ok(assoc && comm && distrib && unit)
}

fn normal_forms(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let ring = catalog(["B", "G26", "Gw36", "P1^4"][rng.gen_range(0..4)])?;
    let x = random_poly(rng, &ring, 3);
    let y = random_poly(rng, &ring, 3);
    let nx = ring.nf(&x);
    let idempotent = ring.nf(&nx) == nx;
    let multiplicative = ring.nf(&(&x * &y)) == ring.nf(&(&nx * &ring.nf(&y)));
    Ok(idempotent && multiplicative)
}

fn random_bundle(rng: &mut ChaCha8Rng, ring: &crate::chow::ChowRing) -> Result<BundleClass, Abort> {
    let rank = rng.gen_range(1..=4);
    let chern = (1..=rank as u32)
        .map(|i| Ok(Poly::parse(&format!("H^{i}"), ring.signature())?.scale(&qi(rng.gen_range(-4..=4)))))
        .collect::<Result<_, Abort>>()?;
    Ok(BundleClass::new(ring, rank, chern)?)
}

fn whitney_segre(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let p5 = catalog("P5")?;
    let e = random_bundle(rng, &p5)?;
    let f = random_bundle(rng, &p5)?;
    let s = e.segre_series().iter().fold(Poly::zero(p5.signature()), |a, b| &a + b);
    let inverse = p5.nf(&(&e.total() * &s)) == Poly::one(p5.signature());
    let sum = e.whitney_sum(&f)?;
    let product = p5.nf(&(&e.total() * &f.total())) == p5.nf(&sum.total());
    let quotient = sum.whitney_quotient(&f)? == e;
    Ok(inverse && product && quotient)
}

fn chern_character(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let p5 = catalog("P5")?;
    let e = random_bundle(rng, &p5)?;
    let f = random_bundle(rng, &p5)?;
    let round_trip = e.chern_character().to_bundle() == e;
    let additive = e.whitney_sum(&f)?.chern_character() == e.chern_character().add(&f.chern_character())?;
    let multiplicative = e.tensor(&f)?.chern_character() == e.chern_character().mul(&f.chern_character())?;
    Ok(round_trip && additive && multiplicative)
}

fn random_rep(rng: &mut ChaCha8Rng) -> SL2Rep {
    let parts: Vec<u32> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..=6)).collect();
    SL2Rep::from_parts(&parts)
}

fn clebsch_gordan(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let (a, b, c) = (random_rep(rng), random_rep(rng), random_rep(rng));
    let dims = a.tensor(&b).dim() == a.dim() * b.dim();
    let commutative = a.tensor(&b) == b.tensor(&a);
    let distributive = a.tensor(&b.plus(&c)) == a.tensor(&b).plus(&a.tensor(&c));
    Ok(dims && commutative && distributive)
}

fn serre_duality(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let mut w: Vec<i64> = (0..3).map(|_| rng.gen_range(-12..=8)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    let w = WeightC3::new(w[0], w[1], w[2])?;
    Ok(match (cohomology(&w), cohomology(&w.serre_dual())) {
        (Cohomology::Acyclic(_), Cohomology::Acyclic(_)) => true,
        (Cohomology::Concentrated { degree: d1, dimension: n1 }, Cohomology::Concentrated { degree: d2, dimension: n2 }) => {
            d1 + d2 == DIM && n1 == n2
        }
        _ => false,
    })
}

/// `g^T diag(A, 0) g` for a random 4×4 skew block of binary quadrics.
fn random_rank4_pencil(rng: &mut ChaCha8Rng) -> Result<SkewPencil, Abort> {
    let sig = pencil_signature();
    let quad = |rng: &mut ChaCha8Rng| -> Result<Poly, Abort> {
        let mut f = Poly::zero(&sig);
        for m in ["u^2", "u*v", "v^2"] {
            f = &f + &Poly::parse(m, &sig)?.scale(&qi(rng.gen_range(-2..=2)));
        }
        Ok(f)
    };
    let mut block = vec![vec![Poly::zero(&sig); 6]; 6];
    for i in 0..4 {
        for j in i + 1..4 {
            let f = quad(rng)?;
            block[j][i] = -&f;
            block[i][j] = f;
        }
    }
    let g: Vec<Vec<Q>> = loop {
        let g: Vec<Vec<Q>> = (0..6).map(|_| (0..6).map(|_| qi(rng.gen_range(-1..=1))).collect()).collect();
        if linalg::rank(&g) == 6 {
            break g;
        }
    };
    let entries = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let mut acc = Poly::zero(&sig);
                    for k in 0..4 {
                        for l in 0..4 {
                            acc = &acc + &block[k][l].scale(&(&g[k][i] * &g[l][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Ok(SkewPencil::new(entries)?)
}

fn certificate_soundness(rng: &mut ChaCha8Rng) -> Result<bool, Abort> {
    let p = random_rank4_pencil(rng)?;
    Ok(match constant_rank_certificate(&p)? {
        Certificate::ConstantRank4 { .. } => (0..20).all(|_| {
            let u = qi(rng.gen_range(-30..=30));
            let v = qi(rng.gen_range(-30..=30));
            (u == qi(0) && v == qi(0)) || p.rank_at(&u, &v) == 4
        }),
        Certificate::Failed { witness: Some([u, v]), .. } => p.rank_at(&u, &v) < 4,
        Certificate::Failed { witness: None, gcd, .. } => gcd.is_some_and(|g| g.is_zero() || g.degree() > Some(0)),
    })
}

type Property = fn(&mut ChaCha8Rng) -> Result<bool, Abort>;

const PROPERTIES: [(&str, Property); 9] = [
    ("ring axioms in presented Chow rings", ring_axioms),
    ("pfaffian squared is the determinant", pf_squared),
    ("fraction-free rank agrees with row reduction", bareiss),
    ("normal form is idempotent and multiplicative", normal_forms),
    ("Whitney sum, quotient and Segre inverse", whitney_segre),
    ("Chern character round trip, additivity, multiplicativity", chern_character),
    ("Clebsch-Gordan dimensions and distributivity", clebsch_gordan),
    ("Serre duality on random C_3 weights", serre_duality),
    ("constant-rank certificate soundness", certificate_soundness),
];

/// Runs each property on `cases` instances drawn from `seed`.
pub fn property_suite(seed: u64, cases: usize) -> Result<Vec<PropertyResult>, String> {
    let mut out = Vec::new();
    for (k, (name, prop)) in PROPERTIES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let mut failure = None;
        for case in 0..cases {
            if !prop(&mut rng).map_err(|e| format!("{name}: {}", e.0))? {
                failure = Some(format!("case {case}"));
                break;
            }
        }
        out.push(PropertyResult { name, cases, failure });
    }
    Ok(out)
}

fn suites(ctx: &mut Ctx) -> Outcome {
    for r in property_suite(ctx.seed(), 200).map_err(Abort)? {
        ctx.eq(&format!("{} ({} cases)", r.name, r.cases), r.failure.unwrap_or_else(|| "all hold".into()), "all hold".into());
    }
    Ok(())
}

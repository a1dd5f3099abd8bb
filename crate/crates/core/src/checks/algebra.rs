//! Bott vanishing, SL_2 bookkeeping, the net of skew forms and its complex.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Abort, Check, Ctx, Outcome, Speed};
use crate::bott::{cohomology, is_acyclic, weyl_dim_c3, AcyclicWitness, Cohomology, WeightC3, DIM, RESOLUTION_WEIGHTS};
use crate::chern::{grr_push_curve, hrr_chi, BundleClass, ChernCharacter};
use crate::chow::{catalog, projective_bundle};
use crate::pencil::{
    congruence_model_check, constant_rank_certificate, flatten_rank, flattening, pencil_signature, pfaffian, quasimonad_checks,
    random_p1_point, Certificate, CubicLocus, SkewPencil,
};
use crate::poly::{q, Poly};
use crate::rep::{euler_solve, kernel_equivariant, SL2Rep, Term};

pub(super) static CHECKS: &[Check] = &[
    Check { name: "bott-six-weights", section: "§1", reference: r#"the six weights of the resolution: "the sheaves are acyclic""#, speed: Speed::Fast, run: six_weights },
    Check { name: "bott-dimension-anchors", section: "§1", reference: "Weyl dimensions of the C_3 fundamental representations 6, 14, 14", speed: Speed::Fast, run: dimension_anchors },
    Check { name: "bott-serre-duality", section: "§1", reference: "H^i(w) and H^{6-i}(-w-2rho) have equal dimension on the isotropic flag variety", speed: Speed::Fast, run: serre_duality },
    Check { name: "dimension-ledger", section: "§1", reference: r#"h^0(E(1)) = 6, vanishing Ext^1 count and "$h^0({\cal O}_{\bar{F}}(1,1,1,1))=15$""#, speed: Speed::Fast, run: dimension_ledger },
    Check { name: "sl2-clebsch-gordan", section: "§1", reference: "L (x) W = 2(S_3+S_1) and the equivariant kernel V = L + S_3", speed: Speed::Fast, run: clebsch_gordan },
    Check { name: "segre-birational", section: "§4", reference: r#""it is the fourth segre class of $E_1$" and R = K_P + 6h = 4h - h_3 on P(E_1(h_3))"#, speed: Speed::Fast, run: segre_birational },
    Check { name: "pencil-beta", section: "§4", reference: r#""net of alternating forms of constant rank $4$" whose flattening has "rank $6$""#, speed: Speed::Fast, run: pencil_beta },
    Check { name: "pencil-degenerate-controls", section: "§4", reference: "the certificate rejects degenerate pencils with a rational witness", speed: Speed::Fast, run: pencil_controls },
    Check { name: "quasimonad-complex", section: "§4", reference: r#"L(-1) -> W (x) O -> L(1) is a complex with injective left map and nondegenerate form on W"#, speed: Speed::Fast, run: quasimonad },
    Check { name: "K-invariants", section: "§4", reference: r#""$c_1K=0$, $c_2K=2$, $c_3K=0$, $c_4K=-15$" and "$H^0K(2)=13$""#, speed: Speed::Fast, run: k_invariants },
    Check { name: "congruence-model", section: "§4", reference: r#"sections of M_E in the ideal of the incidence, "which is exactly the map of" the congruence"#, speed: Speed::Slow, run: congruence },
    Check { name: "cubic-locus", section: "§4", reference: r#"rank <= 1 locus of the right map is a "rational cubic curve""#, speed: Speed::Slow, run: cubic_locus },
];

fn six_weights(ctx: &mut Ctx) -> Outcome {
    for w in RESOLUTION_WEIGHTS {
        let w = WeightC3::new(w[0], w[1], w[2])?;
        let wit = is_acyclic(&w);
        let text = wit.map_or_else(|| "not acyclic".to_string(), |x| x.to_string());
        ctx.note(format!("{w}: {text}"));
        ctx.holds(&format!("H^*({w}) = 0"), wit.is_some());
    }
    let w = WeightC3::new(0, 0, -1)?;
    ctx.eq("witness for (0,0,-1)", format!("{:?}", is_acyclic(&w)), format!("{:?}", Some(AcyclicWitness::Zero { index: 2 })));
    let w = WeightC3::new(-1, -1, -2)?;
    ctx.eq("witness for (-1,-1,-2)", format!("{:?}", is_acyclic(&w)), format!("{:?}", Some(AcyclicWitness::Collision { i: 1, j: 2 })));
    Ok(())
}

fn concentrated(w: [i64; 3]) -> Result<String, Abort> {
    let w = WeightC3::new(w[0], w[1], w[2])?;
    Ok(match cohomology(&w) {
        Cohomology::Acyclic(_) => "acyclic".into(),
        Cohomology::Concentrated { degree, dimension } => format!("H^{degree} of dimension {dimension}"),
    })
}

fn dimension_anchors(ctx: &mut Ctx) -> Outcome {
    for (w, d) in [([1, 0, 0], 6), ([1, 1, 0], 14), ([1, 1, 1], 14), ([0, 0, 0], 1), ([2, 0, 0], 21)] {
        ctx.eq(&format!("dim V({},{},{})", w[0], w[1], w[2]), weyl_dim_c3(&WeightC3::new(w[0], w[1], w[2])?)?, d);
    }
    ctx.eq("H^*(O(1,0,0))", concentrated([1, 0, 0])?, "H^0 of dimension 6".into());
    ctx.eq("H^*(K) with K = O(-4,-4,-4)", concentrated([-4, -4, -4])?, "H^6 of dimension 1".into());
    Ok(())
}

fn serre_duality(ctx: &mut Ctx) -> Outcome {
    let (mut pairs, mut bad) = (0, Vec::new());
    for a in -7..=3i64 {
        for b in -7..=a {
            for c in -7..=b {
                let w = WeightC3::new(a, b, c)?;
                let ok = match (cohomology(&w), cohomology(&w.serre_dual())) {
                    (Cohomology::Acyclic(_), Cohomology::Acyclic(_)) => true,
                    (Cohomology::Concentrated { degree: d1, dimension: n1 }, Cohomology::Concentrated { degree: d2, dimension: n2 }) => {
                        d1 + d2 == DIM && n1 == n2
                    }
                    _ => false,
                };
                pairs += 1;
                if !ok {
                    bad.push(w.to_string());
                }
            }
        }
    }
    ctx.note(format!("{pairs} weights in the box [-7,3]"));
    ctx.eq("weights violating duality", bad.join(" "), String::new());
    Ok(())
}

fn dimension_ledger(ctx: &mut Ctx) -> Outcome {
    let l = SL2Rep::l();
    // H^0(E(1)) = V is the kernel of L (x) W -> S_3 + S_1
    let v = kernel_equivariant(&l.tensor(&SL2Rep::from_parts(&[2, 2])), &SL2Rep::from_parts(&[1, 3]))
        .ok_or_else(|| Abort("S1+S3 not in L(x)W".into()))?;
    ctx.eq("h^0 E(1)", v.dim(), 6);
    ctx.eq("h^0 O_F(1,1,1,1)", crate::rep::monomial_section_count(&[1, 1, 1, 1]), 16);
    ctx.eq("h^0 on F_B after the relation", crate::rep::divisor_section_count(&[1, 1, 1, 1], &[1, 1, 1, 1]), 15);
    let ext = euler_solve(&[
        Term::Dim(1),
        Term::Known(l.tensor(&v)),
        Term::Known(SL2Rep::from_parts(&[2, 2, 4])),
        Term::Unknown,
    ])?;
    ctx.eq("dim Ext^1 from 0 -> C -> L(x)V -> S2+S2+S4 -> Ext^1 -> 0", ext, 0);
    ctx.holds("15 > 14 = h^0 O(h_2) on G_omega(2,6)", 15 > 6 * 5 / 2 - 1);
    Ok(())
}

fn clebsch_gordan(ctx: &mut Ctx) -> Outcome {
    let l = SL2Rep::l();
    let w = SL2Rep::from_parts(&[2, 2]);
    let lw = l.tensor(&w);
    ctx.eq("L (x) W", lw.to_string(), "2S1+2S3".into());
    let v = kernel_equivariant(&lw, &SL2Rep::from_parts(&[1, 3])).ok_or_else(|| Abort("S1+S3 not in L(x)W".into()))?;
    ctx.eq("kernel of L(x)W -> S1+S3", v.to_string(), "S1+S3".into());
    ctx.eq("dim V", v.dim(), 6);
    ctx.eq("dim W", w.dim(), 6);
    ctx.eq("S2 (x) S2", SL2Rep::sym(2).tensor(&SL2Rep::sym(2)).to_string(), "S0+S2+S4".into());
    ctx.eq("S3 (x) S1", SL2Rep::sym(3).tensor(&SL2Rep::sym(1)).to_string(), "S2+S4".into());
    Ok(())
}

fn segre_birational(ctx: &mut Ctx) -> Outcome {
    let b = catalog("B")?;
    let e1 = BundleClass::parse(&b, 2, &["-h_3", "a_1"])?;
    ctx.eq("int_B s_4(E_1)", b.integrate_poly(&e1.segre(4))?, q(1));
    let h3 = b.poly("h_3")?;
    let p = projective_bundle(&b, &e1.twist(&h3)?, "h")?;
    let t = p.tangent().ok_or_else(|| Abort("P(E_1(h_3)) has no tangent".into()))?;
    let r = &p.from_poly(&(-&t[0])) + &p.class("6*h")?;
    ctx.eq("K_P + 6h", r.to_string(), p.class("4*h-h_3")?.to_string());
    let h5 = p.class("h^5")?.integrate()?;
    ctx.eq("int h^5 = int_B s_4(E_1(h_3)^v)", h5, b.integrate_poly(&e1.twist(&h3)?.dual().segre(4))?);
    Ok(())
}

fn pencil_beta(ctx: &mut Ctx) -> Outcome {
    let beta = SkewPencil::beta();
    let pf = pfaffian(beta.entries())?;
    ctx.eq("Pf(beta)", pf.to_string(), "0".into());
    let cert = constant_rank_certificate(&beta)?;
    ctx.note(cert.to_string());
    ctx.holds("constant rank 4 certified", cert.is_certified());
    ctx.eq("rank of the 12x12 flattening", flatten_rank(&flattening()), 6);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed());
    let ranks: Vec<usize> = (0..20).map(|_| {
        let [u, v] = random_p1_point(&mut rng);
        beta.rank_at(&u, &v)
    }).collect();
    ctx.eq("ranks at 20 random points of P^1", format!("{ranks:?}"), format!("{:?}", [4usize; 20]));
    Ok(())
}

fn pencil_controls(ctx: &mut Ctx) -> Outcome {
    let sig = pencil_signature();
    let mut m = vec![vec![Poly::zero(&sig); 6]; 6];
    let u2 = Poly::parse("u^2", &sig)?;
    for (i, j) in [(0, 1), (2, 3)] {
        m[i][j] = u2.clone();
        m[j][i] = -&u2;
    }
    let degenerate = constant_rank_certificate(&SkewPencil::new(m)?)?;
    ctx.eq("certificate for u^2(e_12+e_34)", degenerate.to_string(), "failed: CommonFactor, gcd = u^4, witness [u:v] = [0:1]".into());
    let zero = constant_rank_certificate(&SkewPencil::zero(6))?;
    ctx.holds("zero pencil rejected", matches!(zero, Certificate::Failed { .. }));
    ctx.note(zero.to_string());
    Ok(())
}

fn quasimonad(ctx: &mut Ctx) -> Outcome {
    let r = quasimonad_checks(ctx.seed(), 20, None)?;
    ctx.eq("rank of flattening", r.flattening_rank, 6);
    ctx.eq("rank of the induced form on W", r.form_rank, 6);
    ctx.holds("right . left = 0 identically", r.composition_zero);
    ctx.eq("rank of the left map at e_0", r.left_rank_at_e0, 2);
    ctx.holds("left map of rank 2 at 20 random points", r.left_ranks.iter().all(|&k| k == 2));
    ctx.holds("right map of rank 2 at 20 random points", r.right_ranks.iter().all(|&k| k == 2));
    Ok(())
}

fn k_invariants(ctx: &mut Ctx) -> Outcome {
    let p5 = catalog("P5")?;
    let h = p5.poly("H")?;
    let zero = Poly::zero(p5.signature());
    let middle = ChernCharacter::of_lines(&p5, &[(6, &zero)])?;
    let sides = ChernCharacter::of_lines(&p5, &[(2, &-&h), (2, &h)])?;
    let sheaf = grr_push_curve(&p5, 0, &p5.class("3*H^4")?, 4)?;
    let k = middle.sub(&sides)?.add(&sheaf)?;
    let c = k.to_bundle();
    let coeffs: Vec<String> = (1..=4).map(|i| c.c(i).coeff_of_exps(&[i as u32]).to_string()).collect();
    ctx.eq("rank K", k.rank(), q(2));
    ctx.eq("(c_1,c_2,c_3,c_4)(K) in powers of H", coeffs.join(","), "0,2,0,-15".into());
    ctx.eq("chi(K(2))", hrr_chi(&p5, &k.twist(&p5.poly("2*H")?)?)?, q(13));
    ctx.note(format!("chi(K) = {}", hrr_chi(&p5, &k)?));
    Ok(())
}

fn congruence(ctx: &mut Ctx) -> Outcome {
    let r = congruence_model_check(ctx.seed())?;
    for (s, ok) in &r.membership {
        ctx.holds(&format!("{s} in the incidence ideal"), *ok);
    }
    ctx.holds("(-mu,-lambda).M_E reproduces the sections", r.presentation_matches);
    ctx.eq("rank M_E at a point with a != 0", r.rank_generic, 2);
    ctx.eq("rank M_E at a point with a = 0", r.rank_special, 1);
    ctx.holds("both test points lie on B", r.generic_point_on_b && r.special_point_on_b);
    ctx.eq("isotropic test points", r.isotropic_points, 10);
    ctx.eq("isotropic test points satisfying the equations", r.isotropic_points_ok, r.isotropic_points);
    ctx.holds("non-isotropic point rejected", r.nonisotropic_rejected);
    Ok(())
}

fn cubic_locus(ctx: &mut Ctx) -> Outcome {
    let r = quasimonad_checks(ctx.seed(), 0, Some(8))?;
    let text = match r.locus {
        Some(CubicLocus::Computed(hp)) => hp.to_string(),
        Some(CubicLocus::Inconclusive { cap }) => format!("inconclusive at degree cap {cap}"),
        None => "not computed".into(),
    };
    ctx.eq("Hilbert polynomial of the rank <= 1 locus", text, "3*t+1".into());
    Ok(())
}

//! Checks on presented Chow rings.

use super::{Check, Ctx, Outcome, Speed};
use crate::chern::BundleClass;
use crate::chow::{
    blowup_threefold_along_curve, catalog, catalog_names, integrate_on_hyperplane_section, relative_canonical,
    solve_center_tridegree, CenterSolution, ChowClass, ChowRing,
};
use crate::linalg;
use crate::poly::{q, qf, Poly};
use crate::rep::{divisor_section_count, monomial_section_count};

pub(super) static CHECKS: &[Check] = &[
    Check { name: "EiZi-vanishing", section: "§1", reference: r#"[Z_i].c_2(E_i(3 sigma_i)) vanishes in A(P^1 x B), with "$[Z_i]=a_i+h_3.\sigma_i -[V_i]$""#, speed: Speed::Fast, run: eizi },
    Check { name: "pi-quadric-degree", section: "§1", reference: r#"relative model of the incidence over the conic: "a 2 dimensional irreducible quadric""#, speed: Speed::Fast, run: pi_quadric },
    Check { name: "deg-FB-24", section: "§2", reference: r#"class 4(h_2^2-c_2)^2 of F_B, of "degree $24$ in $G_\omega (2,W)$""#, speed: Speed::Fast, run: deg_fb },
    Check { name: "alphai-deg-6", section: "§2", reference: r#"class 2h_2c_2(h_2^2-c_2) of alpha_i: "in the Chow ring of $F_B$ we have $\alpha_i.h_2^2=6""#, speed: Speed::Fast, run: alphai },
    Check { name: "g26-degree-14", section: "§2", reference: "presentation of A(G(2,6)) and its degree against the hook-length count", speed: Speed::Fast, run: g26_degree },
    Check { name: "g26-hyperplane-section", section: "§2", reference: "degree of the hyperplane section of G(2,6) through its top class", speed: Speed::Fast, run: g26_hyperplane },
    Check { name: "fb-triple-products", section: "§2", reference: r#""$\alpha_i.\alpha_j.\alpha_k=1$ when $i,j,k$", alpha_i^2 = 0, alpha_i.alpha_j.h_2 = 2, h_2^3 = 24"#, speed: Speed::Fast, run: fb_triple },
    Check { name: "fb-sections-15", section: "§2", reference: r#""$h^0({\cal O}_{\bar{F}}(1,1,1,1))=15$ and $h^0({\cal O}_{G_\omega (2,W)}(h_2))=14$""#, speed: Speed::Fast, run: fb_sections },
    Check { name: "relative-canonical-I", section: "§2", reference: r#"relative dualizing sheaf omega_{p_1} = O_I(2h_2 - 2h_3')"#, speed: Speed::Fast, run: relative_canonical_i },
    Check { name: "chow-B-presentation", section: "§3", reference: r#""the Chow ring of $B$": point a_1a_2/2, [V_i] = 2a_i - h_3^2/2, [V_i]^2 = 4 points, deg Z = 2"#, speed: Speed::Fast, run: chow_b },
    Check { name: "gensA2B-relation", section: "§3", reference: r#""2(a_1+a_2+a_3+a_4)=3h_3^2" and (a_i) a basis of A^2_B"#, speed: Speed::Fast, run: gens_a2b },
    Check { name: "blowup-consistency", section: "§3", reference: "F_B as a blow-up \"in an elliptic sextic curve\" with exceptional divisor v_i", speed: Speed::Fast, run: blowup },
    Check { name: "AI-coefficient", section: "§3", reference: r#"relation h_3'^2 - 2h_2h_3' + 4/3h_2^2 of A_I and sum p_2^*a_i = 3/2 h_3'^2"#, speed: Speed::Fast, run: ai_coefficient },
    Check { name: "incidence-degree-64", section: "§3", reference: r#"p_2: I -> B finite of "length $4$""#, speed: Speed::Fast, run: incidence_degree },
    Check { name: "pullback-constraint", section: "§3", reference: r#""$2h_2.\gamma_0+\gamma_1\in{\rm Q}" (the rationals) times h_2^2 for gamma = a_i"#, speed: Speed::Fast, run: pullback },
    Check { name: "gw36-presentation", section: "§3", reference: "A(G_omega(3,6)) = Q[c'_1,c'_2,c'_3]/(c_3'^2, c_2'^2-2c'_1c'_3, c_1'^2-2c'_2)", speed: Speed::Fast, run: gw36 },
    Check { name: "tangent-bundles", section: "§3", reference: "index and topological Euler characteristic of the homogeneous spaces and of B", speed: Speed::Fast, run: tangents },
    Check { name: "ring-export-roundtrip", section: "core", reference: "every catalog ring survives export and import unchanged", speed: Speed::Fast, run: export_roundtrip },
];

fn class(r: &ChowRing, s: &str) -> Result<ChowClass, super::Abort> {
    Ok(r.class(s)?)
}

fn eizi(ctx: &mut Ctx) -> Outcome {
    let r = catalog("P1xB")?;
    for i in 1..=4 {
        let v = class(&r, &format!("2*a_{i}-1/2*h_3^2"))?;
        let z = &class(&r, &format!("a_{i}+h_3*sigma"))? - &v;
        let c2 = class(&r, &format!("a_{i}-3*h_3*sigma"))?;
        ctx.eq(&format!("[Z_{i}].c_2(E_{i}(3 sigma)) normal form"), (&z * &c2).to_string(), "0".into());
    }
    Ok(())
}

fn pi_quadric(ctx: &mut Ctx) -> Outcome {
    let r = catalog("Pi")?;
    let x = class(&r, "2*h*sigma*(h+2*sigma)^2")?;
    ctx.eq("int (2h).sigma.(h+2 sigma)^2", x.integrate()?, q(2));
    ctx.eq("int h^4", class(&r, "h^4")?.integrate()?, q(2));
    Ok(())
}

/// `(K_2^⊥/K_2)^∨(h_2)` on `G(2,6)`, from `c(K_2) c(K_2^⊥/K_2) c(K_2^∨) = 1`.
fn kb_bundle(g: &ChowRing) -> Result<BundleClass, super::Abort> {
    let k = BundleClass::parse(g, 2, &["-h_2", "c_2"])?;
    let mid = BundleClass::trivial(g, 6).whitney_quotient(&k)?.whitney_quotient(&k.dual())?;
    Ok(mid.dual().twist(&g.poly("h_2")?)?)
}

fn deg_fb(ctx: &mut Ctx) -> Outcome {
    let g = catalog("G26")?;
    let kb = kb_bundle(&g)?;
    let fb = g.from_poly(&kb.c(2).pow(2));
    ctx.eq("[F_B] = c_2(KB)^2", fb.to_string(), class(&g, "4*(h_2^2-c_2)^2")?.to_string());
    let h = class(&g, "h_2")?;
    ctx.eq("int [F_B].h_2^3.h_2", (&fb * &h.pow(4)).integrate()?, q(24));
    Ok(())
}

fn alphai(ctx: &mut Ctx) -> Outcome {
    let g = catalog("G26")?;
    let kb = kb_bundle(&g)?;
    let alpha = &class(&g, "h_2*c_2")? * &g.from_poly(&kb.c(2));
    ctx.eq("[alpha_i] = h_2.c_2.c_2(KB)", alpha.to_string(), class(&g, "2*h_2*c_2*(h_2^2-c_2)")?.to_string());
    let h = class(&g, "h_2")?;
    ctx.eq("int [alpha_i].h_2^2.h_2", (&alpha * &h.pow(3)).integrate()?, q(6));
    Ok(())
}

/// Standard Young tableaux of rectangular shape, by the hook-length formula.
pub(crate) fn syt_rectangle(rows: u64, cols: u64) -> u64 {
    let n = rows * cols;
    let mut num: u128 = (1..=n as u128).product();
    for i in 0..rows {
        for j in 0..cols {
            num /= ((rows - i - 1) + (cols - j - 1) + 1) as u128;
        }
    }
    num as u64
}

fn g26_degree(ctx: &mut Ctx) -> Outcome {
    let g = catalog("G26")?;
    ctx.eq("Hilbert function", format!("{:?}", g.hilbert_function()), "[1, 1, 2, 2, 3, 2, 2, 1, 1, 0]".into());
    // c_2 = sigma_{11} and sigma_{11}^4 is the point class
    let h8 = g.nf(&g.poly("h_2^8")?);
    let c4 = g.nf(&g.poly("c_2^4")?);
    let ratio = h8.coeff_of_exps(&[0, 4]) / c4.coeff_of_exps(&[0, 4]);
    ctx.eq("h_2^8 / c_2^4 in the top degree", ratio, q(syt_rectangle(2, 4) as i64));
    ctx.eq("hook-length count of the 2x4 box", syt_rectangle(2, 4), 14);
    ctx.eq("int c_2^4", class(&g, "c_2^4")?.integrate()?, q(1));
    Ok(())
}

fn g26_hyperplane(ctx: &mut Ctx) -> Outcome {
    let g = catalog("G26")?;
    let h = class(&g, "h_2")?;
    ctx.eq("int_{h_2} h_2^7", integrate_on_hyperplane_section(&g, &h, &h.pow(7))?, q(14));
    Ok(())
}

fn fb_triple(ctx: &mut Ctx) -> Outcome {
    let r = catalog("FB")?;
    let h = class(&r, "alpha_1+alpha_2+alpha_3+alpha_4")?;
    for i in 1..=4 {
        ctx.eq(&format!("alpha_{i}^2"), class(&r, &format!("alpha_{i}^2"))?.to_string(), "0".into());
        ctx.eq(&format!("int alpha_{i}.h_2^2"), (&class(&r, &format!("alpha_{i}"))? * &h.pow(2)).integrate()?, q(6));
    }
    for (i, j, k) in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)] {
        ctx.eq(&format!("int alpha_{i}.alpha_{j}.alpha_{k}"), class(&r, &format!("alpha_{i}*alpha_{j}*alpha_{k}"))?.integrate()?, q(1));
    }
    for (i, j) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
        ctx.eq(&format!("int alpha_{i}.alpha_{j}.h_2"), (&class(&r, &format!("alpha_{i}*alpha_{j}"))? * &h).integrate()?, q(2));
    }
    ctx.eq("int h_2^3", h.pow(3).integrate()?, q(24));
    Ok(())
}

fn fb_sections(ctx: &mut Ctx) -> Outcome {
    ctx.eq("h^0 O(1,1,1,1) on (P^1)^4", monomial_section_count(&[1, 1, 1, 1]), 16);
    ctx.eq("h^0 O(1,1,1,1) on the divisor of class (1,1,1,1)", divisor_section_count(&[1, 1, 1, 1], &[1, 1, 1, 1]), 15);
    // Plücker space of the isotropic Grassmannian: dim ∧²W - 1
    ctx.eq("h^0 O(h_2) on G_omega(2,6)", 6 * 5 / 2 - 1, 14);
    ctx.eq("h^0 O(1,1,1) on (P^1)^3", monomial_section_count(&[1, 1, 1]), 8);
    Ok(())
}

fn relative_canonical_i(ctx: &mut Ctx) -> Outcome {
    let r = catalog("I")?;
    let w = relative_canonical(&r)?;
    let expected = class(&r, "2*(alpha_1+alpha_2+alpha_3+alpha_4)-2*h_3'")?;
    ctx.eq("omega_{p_1}", w.to_string(), expected.to_string());
    Ok(())
}

fn chow_b(ctx: &mut Ctx) -> Outcome {
    let b = catalog("B")?;
    for rel in b.relations() {
        ctx.eq(&format!("normal form of {rel}"), b.nf(rel).to_string(), "0".into());
    }
    ctx.eq("int a_1 a_2", class(&b, "a_1*a_2")?.integrate()?, q(2));
    ctx.eq("point class a_1a_2/2", b.point_class()?.to_string(), class(&b, "1/2*a_1*a_2")?.to_string());
    let h2 = class(&b, "h_3^2")?;
    for i in 1..=4 {
        let v = class(&b, &format!("2*a_{i}-1/2*h_3^2"))?;
        ctx.eq(&format!("[V_{i}]^2"), v.pow(2).integrate()?, q(4));
        ctx.eq(&format!("deg V_{i}"), (&v * &h2).integrate()?, q(4));
        let z = class(&b, &format!("1/2*h_3^2-a_{i}"))?;
        ctx.eq(&format!("deg Z_{i},p"), (&z * &h2).integrate()?, q(2));
        for j in i + 1..=4 {
            let w = class(&b, &format!("2*a_{j}-1/2*h_3^2"))?;
            ctx.eq(&format!("[V_{i}][V_{j}]"), (&v * &w).to_string(), "0".into());
        }
    }
    ctx.eq("deg B", class(&b, "h_3^4")?.integrate()?, q(16));
    Ok(())
}

fn gens_a2b(ctx: &mut Ctx) -> Outcome {
    let b = catalog("B")?;
    ctx.eq("2(a_1+a_2+a_3+a_4)-3h_3^2", class(&b, "2*(a_1+a_2+a_3+a_4)-3*h_3^2")?.to_string(), "0".into());
    ctx.eq("Hilbert function", format!("{:?}", b.hilbert_function()), "[1, 1, 4, 1, 1, 0]".into());
    let a: Vec<Poly> = (1..=4).map(|i| b.poly(&format!("a_{i}"))).collect::<Result<_, _>>()?;
    let gram: Vec<Vec<_>> =
        a.iter().map(|x| a.iter().map(|y| b.integrate_poly(&(x * y))).collect::<Result<Vec<_>, _>>()).collect::<Result<_, _>>()?;
    ctx.eq("rank of the pairing on a_1..a_4", linalg::rank(&gram), 4);
    Ok(())
}

fn blowup(ctx: &mut Ctx) -> Outcome {
    let sols = solve_center_tridegree(4, 3)?;
    let fmt_sols = |s: &[CenterSolution]| s.iter().map(|c| format!("{:?} genus {}", c.tridegree, c.genus)).collect::<Vec<_>>().join(", ");
    ctx.eq("centers with alpha_4^2 = 0 (degrees <= 4, genus <= 3)", fmt_sols(&sols), "[2, 2, 2] genus 1".into());

    let base = catalog("P1^3")?;
    let curve = class(&base, "2*alpha_2*alpha_3+2*alpha_1*alpha_3+2*alpha_1*alpha_2")?;
    let bl = blowup_threefold_along_curve(&base, &curve, 1)?;
    ctx.eq("curve degree under O(1,1,1)", (&curve * &class(&base, "alpha_1+alpha_2+alpha_3")?).integrate()?, q(6));
    let alphas: Vec<ChowClass> = ["alpha_1", "alpha_2", "alpha_3", "alpha_1+alpha_2+alpha_3-e"]
        .iter()
        .map(|s| class(&bl, s))
        .collect::<Result<_, _>>()?;
    let h2 = class(&bl, "2*(alpha_1+alpha_2+alpha_3)-e")?;
    let v4 = &h2 - &alphas[3].scale(&q(2));
    ctx.eq("v_4 = h_2 - 2 alpha_4", v4.to_string(), class(&bl, "e")?.to_string());
    ctx.eq("int h_2^3", h2.pow(3).integrate()?, q(24));
    let divisors: Vec<ChowClass> = bl.basis(1).iter().map(|p| bl.from_poly(p)).collect();
    for (i, a) in alphas.iter().enumerate() {
        ctx.eq(&format!("int alpha_{}^3", i + 1), a.pow(3).integrate()?, q(0));
        let all_zero = divisors.iter().map(|d| (&a.pow(2) * d).integrate()).collect::<Result<Vec<_>, _>>()?.iter().all(|x| *x == q(0));
        ctx.holds(&format!("alpha_{}^2.D = 0 for every divisor D", i + 1), all_zero);
        ctx.eq(&format!("int alpha_{}.h_2^2", i + 1), (a * &h2.pow(2)).integrate()?, q(6));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            ctx.eq(&format!("int alpha_{}.alpha_{}.h_2", i + 1, j + 1), (&(&alphas[i] * &alphas[j]) * &h2).integrate()?, q(2));
            for k in j + 1..4 {
                let t = &(&alphas[i] * &alphas[j]) * &alphas[k];
                ctx.eq(&format!("int alpha_{}.alpha_{}.alpha_{}", i + 1, j + 1, k + 1), t.integrate()?, q(1));
            }
        }
    }
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        ctx.eq(&format!("int v_4.alpha_{}.alpha_{}", j + 1, k + 1), (&(&v4 * &alphas[j]) * &alphas[k]).integrate()?, q(0));
    }
    Ok(())
}

fn ai_coefficient(ctx: &mut Ctx) -> Outcome {
    let g = catalog("G26")?;
    let kb = kb_bundle(&g)?;
    ctx.eq("c_2((K_2^perp/K_2)^v(h_2))", g.from_poly(&kb.c(2)).to_string(), class(&g, "2*h_2^2-2*c_2")?.to_string());
    // modulo h_2^2 = 3 c_2 the class is 4/3 h_2^2
    let diff = &kb.c(2) - &g.poly("4/3*h_2^2")?;
    let multiple = g.poly("2/3*(h_2^2-3*c_2)")?;
    ctx.holds("c_2(KB) - 4/3 h_2^2 is 2/3 (h_2^2 - 3 c_2)", diff == multiple);

    let i = catalog("I")?;
    ctx.eq("h_3'^2-2h_2h_3'+4/3h_2^2", class(&i, "h_3'^2-2*(alpha_1+alpha_2+alpha_3+alpha_4)*h_3'+4/3*(alpha_1+alpha_2+alpha_3+alpha_4)^2")?.to_string(), "0".into());
    let h2 = "(alpha_1+alpha_2+alpha_3+alpha_4)";
    let mut sum = i.constant(q(0));
    for k in 1..=4 {
        sum = &sum + &class(&i, &format!("h_3'*({h2}-alpha_{k})+{h2}*(2*alpha_{k}-{h2})"))?;
    }
    ctx.eq("sum p_2^*a_i - 3/2 h_3'^2", (&sum - &class(&i, "3/2*h_3'^2")?).to_string(), "0".into());
    Ok(())
}

fn incidence_degree(ctx: &mut Ctx) -> Outcome {
    let i = catalog("I")?;
    let b = catalog("B")?;
    let d = class(&i, "h_3'^4")?.integrate()?;
    ctx.eq("int_I h_3'^4", d.clone(), q(64));
    ctx.eq("int_I h_3'^4 / int_B h_3^4", d / class(&b, "h_3^4")?.integrate()?, q(4));
    Ok(())
}

fn pullback(ctx: &mut Ctx) -> Outcome {
    let r = catalog("FB")?;
    let h2 = "(alpha_1+alpha_2+alpha_3+alpha_4)";
    for k in 1..=4 {
        let x = class(&r, &format!("2*{h2}*({h2}-alpha_{k})+{h2}*(2*alpha_{k}-{h2})-{h2}^2"))?;
        ctx.eq(&format!("2h_2.gamma_0+gamma_1-h_2^2 for a_{k}"), x.to_string(), "0".into());
    }
    Ok(())
}

fn gw36(ctx: &mut Ctx) -> Outcome {
    let g = catalog("Gw36")?;
    ctx.eq("Hilbert function", format!("{:?}", g.hilbert_function()), "[1, 1, 1, 2, 1, 1, 1, 0]".into());
    ctx.eq("deg G_omega(3,6)", class(&g, "c'_1^6")?.integrate()?, q(16));
    ctx.eq("int c'_1^3 c'_3", class(&g, "c'_1^3*c'_3")?.integrate()?, q(2));
    // on a double hyperplane section, c'_1c'_2 - 4c'_3 pairs to zero with h^2
    let x = class(&g, "(c'_1*c'_2-4*c'_3)*c'_1^3")?;
    ctx.eq("int (c'_1c'_2-4c'_3).c'_1^2 on B", x.integrate()?, q(0));
    Ok(())
}

fn tangents(ctx: &mut Ctx) -> Outcome {
    // only even cohomology, so c_top integrates to the sum of the Hilbert function
    for (name, c1) in [("P5", "6*H"), ("G26", "6*h_2"), ("Gw36", "4*c'_1"), ("B", "2*h_3")] {
        let r = catalog(name)?;
        let t = r.tangent().ok_or_else(|| super::Abort(format!("{name} has no tangent")))?;
        ctx.eq(&format!("c_1(T_{name})"), t[0].to_string(), c1.into());
        let betti: u64 = r.hilbert_function().iter().sum();
        ctx.eq(&format!("int c_top(T_{name})"), r.integrate_poly(&t[r.dim() as usize - 1])?, q(betti as i64));
    }
    Ok(())
}

fn export_roundtrip(ctx: &mut Ctx) -> Outcome {
    for name in catalog_names() {
        let r = catalog(name)?;
        let text = r.export();
        let back = ChowRing::import(&text)?;
        ctx.holds(&format!("{name} export/import/export is bit-exact"), back.export() == text);
    }
    let _ = qf(1, 1);
    Ok(())
}

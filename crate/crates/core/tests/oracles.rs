//! Values recomputed by independent elementary means.

use std::collections::BTreeMap;

use fano_chow::bott::{weyl_dim_c3, WeightC3};
use fano_chow::chern::{grr_push_curve, hrr_chi, ChernCharacter};
use fano_chow::chow::catalog;
use fano_chow::poly::{q, Poly};
use fano_chow::rep::SL2Rep;

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of ways to fill a (possibly shifted) shape box by box, each
/// addition weighted by `weight(row, col)`.
fn weighted_fillings(shape: &[usize], shifted: bool, weight: &dyn Fn(usize, usize) -> u64) -> u64 {
    fn go(cur: &mut Vec<usize>, target: &[usize], shifted: bool, weight: &dyn Fn(usize, usize) -> u64, memo: &mut BTreeMap<Vec<usize>, u64>) -> u64 {
        if cur.as_slice() == target {
            return 1;
        }
        if let Some(&v) = memo.get(cur) {
            return v;
        }
        let mut total = 0;
        for r in 0..target.len() {
            if cur[r] == target[r] {
                continue;
            }
            let col = cur[r] + if shifted { r } else { 0 };
            // box (r, col) needs the box above it filled
            let above_ok = r == 0 || cur[r - 1] + if shifted { r - 1 } else { 0 } > col;
            if above_ok {
                cur[r] += 1;
                total += weight(r, col) * go(cur, target, shifted, weight, memo);
                cur[r] -= 1;
            }
        }
        memo.insert(cur.clone(), total);
        total
    }
    go(&mut vec![0; shape.len()], shape, shifted, weight, &mut BTreeMap::new())
}

#[test]
fn degree_of_g26_is_the_number_of_2x4_tableaux() {
    let tableaux = weighted_fillings(&[4, 4], false, &|_, _| 1);
    assert_eq!(tableaux, 14);
    let g = catalog("G26").unwrap();
    assert_eq!(g.class("h_2^8").unwrap().integrate().unwrap(), q(tableaux as i64));
}

#[test]
fn degree_of_lagrangian_grassmannian_by_shifted_pieri() {
    // off-diagonal boxes of the staircase carry a factor 2
    let d = weighted_fillings(&[3, 2, 1], true, &|r, c| if r == c { 1 } else { 2 });
    assert_eq!(d, 16);
    let g = catalog("Gw36").unwrap();
    assert_eq!(g.class("c'_1^6").unwrap().integrate().unwrap(), q(d as i64));
    // B is cut by two hyperplanes
    assert_eq!(catalog("B").unwrap().class("h_3^4").unwrap().integrate().unwrap(), q(d as i64));
}

#[test]
fn hilbert_functions_count_partitions() {
    // partitions in a 2x4 box by size: the Gaussian binomial [6 choose 2]
    let mut box_counts = vec![0u64; 9];
    for a in 0..=4 {
        for b in 0..=a {
            box_counts[a + b] += 1;
        }
    }
    let hf = catalog("G26").unwrap().hilbert_function();
    assert_eq!(&hf[..9], &box_counts[..]);
    // strict partitions inside (3,2,1): subsets of {1,2,3} by sum
    let mut strict = vec![0u64; 7];
    for mask in 0..8u32 {
        strict[(0..3).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).sum::<usize>()] += 1;
    }
    let hf = catalog("Gw36").unwrap().hilbert_function();
    assert_eq!(&hf[..7], &strict[..]);
}

#[test]
fn products_on_the_divisor_of_p1_power_4() {
    // coefficient of a_1a_2a_3a_4 in a product of linear forms in (P^1)^4
    fn top(forms: &[[i64; 4]]) -> i64 {
        let mut total = 0;
        let mut idx = vec![0usize; forms.len()];
        loop {
            let mut seen = [false; 4];
            if idx.iter().all(|&i| !std::mem::replace(&mut seen[i], true)) {
                total += idx.iter().zip(forms).map(|(&i, f)| f[i]).product::<i64>();
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < 4 {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                return total;
            }
        }
    }
    let h = [1, 1, 1, 1];
    let e = |i: usize| {
        let mut v = [0; 4];
        v[i] = 1;
        v
    };
    let fb = catalog("FB").unwrap();
    assert_eq!(fb.class("(alpha_1+alpha_2+alpha_3+alpha_4)^3").unwrap().integrate().unwrap(), q(top(&[h, h, h, h])));
    assert_eq!(top(&[h, h, h, h]), 24);
    assert_eq!(top(&[e(0), e(1), e(2), h]), 1);
    assert_eq!(top(&[e(0), e(1), h, h]), 2);
    assert_eq!(top(&[e(0), h, h, h]), 6);
    assert_eq!(fb.class("alpha_1*(alpha_1+alpha_2+alpha_3+alpha_4)^2").unwrap().integrate().unwrap(), q(6));
}

#[test]
fn euler_characteristics_of_k_from_binomials() {
    // chi(O(d)) on P^5 and chi of a degree-f line bundle on a rational curve
    let chi = |d: i64| binom(d + 5, 5);
    let k_twist = |t: i64| 6 * chi(t) - 2 * chi(t - 1) - 2 * chi(t + 1) + (4 + 3 * t + 1);
    assert_eq!(k_twist(2), 13);
    assert_eq!(k_twist(0), -1);

    let p5 = catalog("P5").unwrap();
    let h = p5.poly("H").unwrap();
    let zero = Poly::zero(p5.signature());
    let k = ChernCharacter::of_lines(&p5, &[(6, &zero)])
        .unwrap()
        .sub(&ChernCharacter::of_lines(&p5, &[(2, &-&h), (2, &h)]).unwrap())
        .unwrap()
        .add(&grr_push_curve(&p5, 0, &p5.class("3*H^4").unwrap(), 4).unwrap())
        .unwrap();
    for t in -3..=4 {
        let ch = k.twist(&h.scale(&q(t))).unwrap();
        assert_eq!(hrr_chi(&p5, &ch).unwrap(), q(k_twist(t)), "t = {t}");
    }
}

#[test]
fn symplectic_dimensions_from_exterior_powers() {
    let d = |a, b, c| weyl_dim_c3(&WeightC3::new(a, b, c).unwrap()).unwrap() as i64;
    assert_eq!(d(1, 0, 0), 6);
    assert_eq!(d(1, 1, 0), binom(6, 2) - 1);
    assert_eq!(d(1, 1, 1), binom(6, 3) - 6);
    assert_eq!(d(2, 0, 0), binom(7, 2));
}

/// Weight multiset of a representation of SL_2.
fn character(r: &SL2Rep) -> BTreeMap<i64, u64> {
    let mut ch = BTreeMap::new();
    for i in r.parts() {
        for k in 0..=i as i64 {
            *ch.entry(i as i64 - 2 * k).or_insert(0) += 1;
        }
    }
    ch
}

#[test]
fn clebsch_gordan_matches_characters() {
    for a in 0..7u32 {
        for b in 0..7u32 {
            let (x, y) = (SL2Rep::sym(a), SL2Rep::sym(b));
            let mut prod = BTreeMap::new();
            for (wa, ma) in character(&x) {
                for (wb, mb) in character(&y) {
                    *prod.entry(wa + wb).or_insert(0) += ma * mb;
                }
            }
            assert_eq!(character(&x.tensor(&y)), prod, "S{a} x S{b}");
        }
    }
}

#[test]
fn twisted_cubic_hilbert_polynomial_from_parametrization() {
    use fano_chow::poly::{hilbert_polynomial, GroebnerBasis, Signature};
    let sig = Signature::new(["x", "y", "z", "w"].map(|v| (v, 1))).unwrap();
    let gens: Vec<Poly> = ["x*z-y^2", "y*w-z^2", "x*w-y*z"].iter().map(|s| Poly::parse(s, &sig).unwrap()).collect();
    let gb = GroebnerBasis::compute(&sig, &gens).unwrap();
    // degree-t forms restrict onto binary forms of degree 3t
    for t in 1..8u32 {
        assert_eq!(gb.hilbert_function(t)[t as usize], 3 * t as u64 + 1);
    }
    assert_eq!(hilbert_polynomial(&gb).unwrap().to_string(), "3*t+1");
}

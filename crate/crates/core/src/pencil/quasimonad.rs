//! The three-term complex `L(-1) -> W -> L(1)` on `P^5` built from the net.
//!
//! `W` is the column space of the flattening `M`, with basis the pivot
//! columns `P`. The right map contracts `P` with `z`; the left map sends
//! `e_a ⊗ z` to the `P`-coordinates of `M (e_a ⊗ z)`, with index `2i + a`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg;
use crate::poly::{hilbert_polynomial, GroebnerBasis, HilbertPolynomial, Poly, PolyError, Signature, Q};

use super::flattening_q;

/// Outcome of the rank-≤1 locus computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubicLocus {
    Computed(HilbertPolynomial),
    /// The Gröbner computation hit the degree cap.
    Inconclusive { cap: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasimonadReport {
    pub seed: u64,
    pub flattening_rank: usize,
    /// Rank of the induced form on `W`.
    pub form_rank: usize,
    pub composition_zero: bool,
    pub left_rank_at_e0: usize,
    pub left_ranks: Vec<usize>,
    pub right_ranks: Vec<usize>,
    /// `None` when the locus was not requested.
    pub locus: Option<CubicLocus>,
}

impl QuasimonadReport {
    pub fn passed(&self) -> bool {
        let locus_ok = match &self.locus {
            None | Some(CubicLocus::Inconclusive { .. }) => true,
            Some(CubicLocus::Computed(hp)) => is_twisted_cubic(hp),
        };
        self.flattening_rank == 6
            && self.form_rank == 6
            && self.composition_zero
            && self.left_rank_at_e0 == 2
            && self.left_ranks.iter().all(|&r| r == 2)
            && self.right_ranks.iter().all(|&r| r == 2)
            && locus_ok
    }
}

/// Projective curve of degree 3 and arithmetic genus 0.
pub fn is_twisted_cubic(hp: &HilbertPolynomial) -> bool {
    hp.to_string() == "3*t+1"
}

impl fmt::Display for QuasimonadReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed = {}", self.seed)?;
        writeln!(f, "rank of flattening = {}", self.flattening_rank)?;
        writeln!(f, "rank of induced form on W = {}", self.form_rank)?;
        writeln!(f, "composition identically zero = {}", self.composition_zero)?;
        writeln!(f, "left map rank at e0 = {}", self.left_rank_at_e0)?;
        writeln!(f, "left map ranks at samples = {:?}", self.left_ranks)?;
        write!(f, "right map ranks at samples = {:?}", self.right_ranks)?;
        match &self.locus {
            None => Ok(()),
            Some(CubicLocus::Computed(hp)) => write!(f, "\nHilbert polynomial of rank<=1 locus = {hp}"),
            Some(CubicLocus::Inconclusive { cap }) => write!(f, "\nrank<=1 locus: inconclusive at degree cap {cap}"),
        }
    }
}

pub(crate) struct Complex {
    pub sig: Arc<Signature>,
    /// 2×6 right map.
    pub right: Vec<Vec<Poly>>,
    /// 6×2 left map.
    pub left: Vec<Vec<Poly>>,
    pub flattening_rank: usize,
    pub form_rank: usize,
}

pub(crate) fn build() -> Complex {
    let m = flattening_q();
    let (_, pivots) = linalg::row_reduce(&m);
    let r = pivots.len();
    // coordinates of every column of M in the pivot basis
    let aug: Vec<Vec<Q>> = (0..12)
        .map(|i| pivots.iter().map(|&p| m[i][p].clone()).chain(m[i].iter().cloned()).collect())
        .collect();
    let (red, _) = linalg::row_reduce(&aug);
    let coords: Vec<Vec<Q>> = (0..r).map(|k| red[k][r..].to_vec()).collect();
    let gram: Vec<Vec<Q>> = pivots.iter().map(|&i| pivots.iter().map(|&j| m[i][j].clone()).collect()).collect();

    let sig = Signature::new((0..6).map(|i| (format!("z{i}"), 1))).expect("distinct names");
    let z: Vec<Poly> = (0..6).map(|i| Poly::var_at(&sig, i)).collect();
    let lin = |coef: &dyn Fn(usize) -> Q| -> Poly {
        (0..6).fold(Poly::zero(&sig), |acc, i| &acc + &z[i].scale(&coef(i)))
    };
    let right = (0..2).map(|a| (0..r).map(|k| lin(&|i| m[2 * i + a][pivots[k]].clone())).collect()).collect();
    let left = (0..r).map(|k| (0..2).map(|a| lin(&|i| coords[k][2 * i + a].clone())).collect()).collect();
    Complex { sig, right, left, flattening_rank: r, form_rank: linalg::rank(&gram) }
}

fn matmul(a: &[Vec<Poly>], b: &[Vec<Poly>], sig: &Arc<Signature>) -> Vec<Vec<Poly>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(Poly::zero(sig), |acc, (x, brow)| &acc + &(x * &brow[j])))
                .collect()
        })
        .collect()
}

fn eval_rank(m: &[Vec<Poly>], pt: &[Q]) -> usize {
    let v: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|e| e.evaluate(pt)).collect()).collect();
    linalg::rank(&v)
}

/// The fifteen `2×2` minors of the right map.
pub(crate) fn right_minors(c: &Complex) -> Vec<Poly> {
    let mut out = Vec::new();
    for j in 0..6 {
        for k in j + 1..6 {
            out.push(&(&c.right[0][j] * &c.right[1][k]) - &(&c.right[0][k] * &c.right[1][j]));
        }
    }
    out
}

/// Runs the sanity checks of the complex; `locus_cap` enables the Gröbner
/// computation of the rank-≤1 locus with that degree cap.
pub fn quasimonad_checks(seed: u64, samples: usize, locus_cap: Option<u32>) -> Result<QuasimonadReport, PolyError> {
    let c = build();
    let comp = matmul(&c.right, &c.left, &c.sig);
    let composition_zero = comp.iter().flatten().all(Poly::is_zero);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e0 = vec![Q::from_integer(0.into()); 6];
    e0[0] = Q::from_integer(1.into());
    let left_rank_at_e0 = eval_rank(&c.left, &e0);
    let mut left_ranks = Vec::new();
    let mut right_ranks = Vec::new();
    for _ in 0..samples {
        let pt: Vec<Q> = (0..6).map(|_| Q::from_integer(rng.gen_range(-50i64..=50).into())).collect();
        left_ranks.push(eval_rank(&c.left, &pt));
        right_ranks.push(eval_rank(&c.right, &pt));
    }

    let locus = match locus_cap {
        None => None,
        Some(cap) => match GroebnerBasis::compute_capped(&c.sig, &right_minors(&c), Some(cap)) {
            Ok(gb) => Some(CubicLocus::Computed(hilbert_polynomial(&gb).expect("standard grading"))),
            Err(PolyError::DegreeCapExceeded(cap)) => Some(CubicLocus::Inconclusive { cap }),
            Err(e) => return Err(e),
        },
    };
    Ok(QuasimonadReport {
        seed,
        flattening_rank: c.flattening_rank,
        form_rank: c.form_rank,
        composition_zero,
        left_rank_at_e0,
        left_ranks,
        right_ranks,
        locus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_checks_pass() {
        let r = quasimonad_checks(1, 10, None).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.left_rank_at_e0, 2);
        assert!(r.composition_zero);
    }

    #[test]
    fn minors_are_fifteen_quadrics() {
        let c = build();
        let ms = right_minors(&c);
        assert_eq!(ms.len(), 15);
        assert!(ms.iter().all(|m| m.is_zero() || (m.is_homogeneous() && m.degree() == Some(2))));
    }

    #[test]
    fn tiny_cap_is_inconclusive() {
        let r = quasimonad_checks(1, 0, Some(1)).unwrap();
        assert_eq!(r.locus, Some(CubicLocus::Inconclusive { cap: 1 }));
    }
}

//! Hilbert series numerators and Hilbert polynomials of quotient rings.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GroebnerBasis, Q};

/// Numerator `N(t)` of the Hilbert series `N(t) / prod_i (1 - t^{w_i})` of
/// the quotient by the ideal of `gb`. Coefficients are listed by ascending
/// power of `t`.
pub fn hilbert_series_numerator(gb: &GroebnerBasis) -> Vec<BigInt> {
    let weights = gb.signature().weights();
    let gens: Vec<Vec<u32>> = gb.leading_monomials().iter().map(|m| m.exps().to_vec()).collect();
    let mut n = numerator(&weights, minimalize(gens));
    trim(&mut n);
    n
}

/// Hilbert polynomial of a standard graded quotient (all weights one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    /// Krull dimension of the quotient; the polynomial has degree one less.
    pub krull_dimension: usize,
    /// Coefficients in ascending powers of the degree variable.
    pub coefficients: Vec<Q>,
}

impl HilbertPolynomial {
    pub fn eval(&self, t: i64) -> Q {
        let t = Q::from_integer(t.into());
        self.coefficients.iter().rev().fold(Q::zero(), |acc, c| acc * &t + c)
    }

    /// Degree of the projective scheme, i.e. the leading coefficient times
    /// `(dim)!`.
    pub fn degree(&self) -> Q {
        match self.coefficients.last() {
            None => Q::zero(),
            Some(c) => {
                let fact: BigInt = (1..self.krull_dimension).map(BigInt::from).product();
                c * Q::from_integer(fact)
            }
        }
    }
}

impl std::fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sig = super::Signature::new([("t", 1)]).expect("one variable");
        let mut p = super::Poly::zero(&sig);
        for (i, c) in self.coefficients.iter().enumerate() {
            p = &p + &super::Poly::monomial(&sig, vec![i as u32], c.clone());
        }
        write!(f, "{p}")
    }
}

/// Hilbert polynomial of the quotient, or `None` when some variable has
/// weight other than one.
pub fn hilbert_polynomial(gb: &GroebnerBasis) -> Option<HilbertPolynomial> {
    if gb.signature().weights().iter().any(|&w| w != 1) {
        return None;
    }
    let mut num = hilbert_series_numerator(gb);
    let mut d = gb.signature().len();
    // divide by (1 - t) while t = 1 is a root
    while d > 0 && !num.is_empty() && num.iter().sum::<BigInt>().is_zero() {
        let mut quot = vec![BigInt::zero(); num.len() - 1];
        let mut acc = BigInt::zero();
        for i in 0..num.len() - 1 {
            acc += &num[i];
            quot[i] = acc.clone();
        }
        num = quot;
        trim(&mut num);
        d -= 1;
    }
    if d == 0 || num.is_empty() {
        return Some(HilbertPolynomial { krull_dimension: 0, coefficients: vec![] });
    }
    // HP(t) = sum_i q_i * C(t - i + d - 1, d - 1)
    let mut coeffs = vec![Q::zero(); d];
    for (i, qi) in num.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        let mut binom = vec![Q::one()];
        let shift = d as i64 - 1 - i as i64;
        for k in 1..d {
            // multiply by (t + shift - k + 1) / k
            let a = Q::from_integer((shift - k as i64 + 1).into());
            let mut next = vec![Q::zero(); binom.len() + 1];
            for (j, b) in binom.iter().enumerate() {
                next[j] += b * &a;
                next[j + 1] += b.clone();
            }
            let kq = Q::from_integer((k as i64).into());
            binom = next.into_iter().map(|c| c / &kq).collect();
        }
        for (j, b) in binom.into_iter().enumerate() {
            coeffs[j] += b * Q::from_integer(qi.clone());
        }
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Some(HilbertPolynomial { krull_dimension: d, coefficients: coeffs })
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    let mut out: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(k: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); k as usize + 1];
    v[0] = BigInt::one();
    v[k as usize] -= BigInt::one();
    v
}

fn wdeg(weights: &[u32], e: &[u32]) -> u32 {
    weights.iter().zip(e).map(|(w, x)| w * x).sum()
}

// Pivot recursion: N(I) = N(I + (x)) + t^{w(x)} N(I : x).
fn numerator(weights: &[u32], gens: Vec<Vec<u32>>) -> Vec<BigInt> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![];
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..].iter().all(|b| a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0))
    });
    if coprime {
        return gens
            .iter()
            .fold(vec![BigInt::one()], |acc, g| poly_mul(&acc, &one_minus_t_pow(wdeg(weights, g))));
    }
    // most frequent variable among generators of total exponent at least two
    let n = weights.len();
    let mut freq = vec![0usize; n];
    for g in gens.iter().filter(|g| g.iter().sum::<u32>() >= 2) {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                freq[i] += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&i| (freq[i], std::cmp::Reverse(i))).expect("variables");
    let mut unit = vec![0; n];
    unit[x] = 1;

    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|g| g[x] == 0).cloned().collect();
    plus.push(unit);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[x] = h[x].saturating_sub(1);
            h
        })
        .collect();

    let a = numerator(weights, minimalize(plus));
    let mut b = numerator(weights, minimalize(colon));
    let shift = weights[x] as usize;
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + shift)];
    for (i, c) in a.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.drain(..).enumerate() {
        out[i + shift] += c;
    }
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, qf, Poly, Signature};

    fn gb(vars: &[(&str, u32)], gens: &[&str]) -> GroebnerBasis {
        let s = Signature::new(vars.iter().copied()).unwrap();
        let g: Vec<Poly> = gens.iter().map(|x| parse_poly(x, &s).unwrap()).collect();
        GroebnerBasis::compute(&s, &g).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn numerator_matches_hilbert_function() {
        let b = gb(&[("h_2", 1), ("c_2", 2)], &["h_2^5+3*h_2*c_2^2-4*h_2^3*c_2", "-h_2^4*c_2+3*h_2^2*c_2^2-c_2^3"]);
        let num = hilbert_series_numerator(&b);
        // expand N(t) / ((1-t)(1-t^2)) and compare with the graded dimensions
        let mut series = num.clone();
        series.resize(40, BigInt::zero());
        for w in [1usize, 2] {
            for i in w..series.len() {
                let prev = series[i - w].clone();
                series[i] += prev;
            }
        }
        let hf: Vec<BigInt> = b.hilbert_function(20).into_iter().map(BigInt::from).collect();
        assert_eq!(series[..21].to_vec(), hf);
    }

    #[test]
    fn twisted_cubic() {
        let b = gb(&[("x", 1), ("y", 1), ("z", 1), ("w", 1)], &["x*z-y^2", "y*w-z^2", "x*w-y*z"]);
        let hp = hilbert_polynomial(&b).unwrap();
        assert_eq!(hp.krull_dimension, 2);
        assert_eq!(hp.to_string(), "3*t+1");
        assert_eq!(hp.degree(), qf(3, 1));
    }

    #[test]
    fn plane_conic_and_points() {
        let b = gb(&[("x", 1), ("y", 1), ("z", 1)], &["x*y-z^2"]);
        assert_eq!(hilbert_series_numerator(&b), ints(&[1, 0, -1]));
        assert_eq!(hilbert_polynomial(&b).unwrap().to_string(), "2*t+1");
        let pts = gb(&[("x", 1), ("y", 1)], &["x*y*(x-y)"]);
        let hp = hilbert_polynomial(&pts).unwrap();
        assert_eq!(hp.krull_dimension, 1);
        assert_eq!(hp.eval(10), qf(3, 1));
    }

    #[test]
    fn artinian_has_zero_polynomial() {
        let b = gb(&[("x", 1), ("y", 1)], &["x^2", "y^3"]);
        let hp = hilbert_polynomial(&b).unwrap();
        assert_eq!(hp.krull_dimension, 0);
        assert!(hp.coefficients.is_empty());
        let w = gb(&[("x", 1), ("y", 2)], &["x^2"]);
        assert!(hilbert_polynomial(&w).is_none());
    }
}

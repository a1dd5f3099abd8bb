//! Buchberger completion with sugar-degree pair selection.

use std::sync::Arc;

use super::{Monomial, Poly, PolyError, Signature, Q};

/// A reduced Gröbner basis for the graded reverse lexicographic order of
/// its signature.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    sig: Arc<Signature>,
    polys: Vec<Poly>,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

impl GroebnerBasis {
    /// Computes the reduced basis of the ideal generated by `gens`.
    pub fn compute(sig: &Arc<Signature>, gens: &[Poly]) -> Result<Self, PolyError> {
        Self::compute_capped(sig, gens, None)
    }

    /// Like [`compute`](Self::compute), but gives up with
    /// [`PolyError::DegreeCapExceeded`] once a pair of sugar degree above
    /// `cap` would have to be processed.
    pub fn compute_capped(sig: &Arc<Signature>, gens: &[Poly], cap: Option<u32>) -> Result<Self, PolyError> {
        for g in gens {
            if g.signature() != sig {
                return Err(PolyError::SignatureMismatch);
            }
        }
        let mut basis: Vec<Poly> = Vec::new();
        let mut sugar: Vec<u32> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        for g in gens {
            let r = reduce(g, &basis);
            if !r.is_zero() {
                add_to_basis(r.monic(), g.degree().unwrap_or(0), &mut basis, &mut sugar, &mut pairs, sig);
            }
        }

        while !pairs.is_empty() {
            // lowest sugar first, ties broken by the lcm and then indices
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    pa.sugar
                        .cmp(&pb.sugar)
                        .then_with(|| pa.lcm.cmp(&pb.lcm))
                        .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            if let Some(c) = cap {
                if pair.sugar > c {
                    return Err(PolyError::DegreeCapExceeded(c));
                }
            }
            if chain_criterion(&pair, &basis, &pairs) {
                continue;
            }
            let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm);
            let r = reduce(&s, &basis);
            if !r.is_zero() {
                add_to_basis(r.monic(), pair.sugar, &mut basis, &mut sugar, &mut pairs, sig);
            }
        }

        Ok(GroebnerBasis { sig: sig.clone(), polys: interreduce(basis) })
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    /// Basis elements, sorted by ascending leading monomial.
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().expect("nonzero").clone()).collect()
    }

    /// Unique remainder of `p` modulo the ideal: no term of the result is
    /// divisible by a leading monomial of the basis.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly, PolyError> {
        if p.signature() != &self.sig {
            return Err(PolyError::SignatureMismatch);
        }
        Ok(reduce(p, &self.polys))
    }

    /// Ideal membership.
    pub fn contains(&self, p: &Poly) -> Result<bool, PolyError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }

    /// Graded dimensions of the quotient ring in degrees `0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        let leads = self.leading_monomials();
        (0..=max_degree)
            .map(|d| count_standard(&self.sig, &leads, d, 0, &mut vec![0; self.sig.len()]))
            .collect()
    }

    /// Monomials of weighted degree `d` not in the leading-term ideal, in
    /// descending order. They form a basis of the degree-`d` piece.
    pub fn standard_monomials(&self, d: u32) -> Vec<Poly> {
        let leads = self.leading_monomials();
        let mut out = Vec::new();
        collect_standard(&self.sig, &leads, d, 0, &mut vec![0; self.sig.len()], &mut out);
        out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        out
    }
}

fn add_to_basis(
    p: Poly,
    s: u32,
    basis: &mut Vec<Poly>,
    sugar: &mut Vec<u32>,
    pairs: &mut Vec<Pair>,
    sig: &Signature,
) {
    let lm = p.leading_monomial().expect("nonzero").clone();
    let n = basis.len();
    for (i, b) in basis.iter().enumerate() {
        let blm = b.leading_monomial().expect("nonzero");
        if blm.coprime(&lm) {
            // product criterion
            continue;
        }
        let lcm = blm.lcm(&lm, sig);
        let ps = (sugar[i] + lcm.degree - blm.degree).max(s + lcm.degree - lm.degree);
        pairs.push(Pair { i, j: n, lcm, sugar: ps });
    }
    basis.push(p);
    sugar.push(s);
}

/// Second Buchberger criterion: the pair is redundant when some third
/// element's leading monomial divides the lcm and both connecting pairs have
/// already been treated.
fn chain_criterion(pair: &Pair, basis: &[Poly], pending: &[Pair]) -> bool {
    let has = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pending.iter().any(|p| p.i == a && p.j == b)
    };
    basis.iter().enumerate().any(|(k, g)| {
        k != pair.i
            && k != pair.j
            && g.leading_monomial().expect("nonzero").divides(&pair.lcm)
            && !has(pair.i, k)
            && !has(pair.j, k)
    })
}

fn s_polynomial(f: &Poly, g: &Poly, lcm: &Monomial) -> Poly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let mut s = Poly::zero(f.signature());
    s.add_scaled_shifted(&fc.recip(), &lcm.div(fm), f);
    s.add_scaled_shifted(&-gc.recip(), &lcm.div(gm), g);
    s
}

/// Full reduction of `p` by `basis`.
fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    let mut rest = p.clone();
    let mut out = Poly::zero(p.signature());
    while let Some((m, c)) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading_term().expect("nonzero");
                let factor: Q = -(c / gc);
                rest.add_scaled_shifted(&factor, &m.div(gm), g);
            }
            None => {
                rest.terms.remove(&m);
                out.terms.insert(m, c);
            }
        }
    }
    out
}

fn interreduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Poly> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|q| q.leading_monomial().expect("nonzero").divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        out.push(reduce(&minimal[i], &others).monic());
    }
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    out
}

fn divisible_by_any(leads: &[Monomial], exps: &[u32]) -> bool {
    leads.iter().any(|m| m.exps.iter().zip(exps).all(|(a, b)| a <= b))
}

fn count_standard(sig: &Signature, leads: &[Monomial], remaining: u32, var: usize, exps: &mut Vec<u32>) -> u64 {
    if var == sig.len() {
        return u64::from(remaining == 0 && !divisible_by_any(leads, exps));
    }
    let w = sig.weight(var);
    let mut total = 0;
    let mut e = 0;
    while e * w <= remaining {
        exps[var] = e;
        total += count_standard(sig, leads, remaining - e * w, var + 1, exps);
        e += 1;
    }
    exps[var] = 0;
    total
}

fn collect_standard(
    sig: &Arc<Signature>,
    leads: &[Monomial],
    remaining: u32,
    var: usize,
    exps: &mut Vec<u32>,
    out: &mut Vec<Poly>,
) {
    if var == sig.len() {
        if remaining == 0 && !divisible_by_any(leads, exps) {
            out.push(Poly::monomial(sig, exps.clone(), Q::from_integer(1.into())));
        }
        return;
    }
    let w = sig.weight(var);
    let mut e = 0;
    while e * w <= remaining {
        exps[var] = e;
        collect_standard(sig, leads, remaining - e * w, var + 1, exps, out);
        e += 1;
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn basis(sig: &Arc<Signature>, gens: &[&str]) -> GroebnerBasis {
        let gens: Vec<Poly> = gens.iter().map(|g| parse_poly(g, sig).unwrap()).collect();
        GroebnerBasis::compute(sig, &gens).unwrap()
    }

    #[test]
    fn monomial_ideal_is_already_reduced() {
        let s = Signature::new([("x", 1), ("y", 1)]).unwrap();
        let gb = basis(&s, &["x^2", "y^2"]);
        let shown: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["y^2", "x^2"]);
    }

    #[test]
    fn grassmannian_g26_graded_dimensions() {
        // Partitions in a 2x4 box, counted by size.
        let mut oracle = vec![0u64; 9];
        for a in 0..=4 {
            for b in 0..=a {
                oracle[a + b] += 1;
            }
        }
        assert_eq!(oracle, vec![1, 1, 2, 2, 3, 2, 2, 1, 1]);
        let s = Signature::new([("h_2", 1), ("c_2", 2)]).unwrap();
        let gb = basis(&s, &["h_2^5+3*h_2*c_2^2-4*h_2^3*c_2", "-h_2^4*c_2+3*h_2^2*c_2^2-c_2^3"]);
        let mut hf = gb.hilbert_function(10);
        assert_eq!(hf.split_off(9), vec![0, 0]);
        assert_eq!(hf, oracle);
    }

    #[test]
    fn generators_reduce_to_zero_and_normal_form_is_idempotent() {
        let s = Signature::new([("x", 1), ("y", 1), ("z", 1)]).unwrap();
        let gens = ["x^2-y*z", "x*y-z^2", "y^2-x*z"];
        let gb = basis(&s, &gens);
        for g in gens {
            assert!(gb.contains(&parse_poly(g, &s).unwrap()).unwrap());
        }
        let p = parse_poly("x^3*y + 7*z^4 - x*y*z", &s).unwrap();
        let nf = gb.normal_form(&p).unwrap();
        assert_eq!(gb.normal_form(&nf).unwrap(), nf);
        for (m, _) in nf.terms() {
            assert!(gb.leading_monomials().iter().all(|l| !l.divides(m)));
        }
    }

    #[test]
    fn zero_ideal_counts_weighted_monomials() {
        let s = Signature::new([("a", 1), ("b", 2)]).unwrap();
        let gb = GroebnerBasis::compute(&s, &[]).unwrap();
        // monomials a^i b^j with i + 2j = d
        assert_eq!(gb.hilbert_function(5), vec![1, 1, 2, 2, 3, 3]);
        let t = Signature::new([("t", 1)]).unwrap();
        assert_eq!(GroebnerBasis::compute(&t, &[]).unwrap().hilbert_function(4), vec![1; 5]);
    }

    #[test]
    fn unit_ideal_and_cap() {
        let s = Signature::new([("x", 1), ("y", 1)]).unwrap();
        let gb = basis(&s, &["x*y-1", "x"]);
        assert!(gb.is_unit_ideal());
        let gens: Vec<Poly> = ["x^3-y^2*x", "x^2*y-y^3+x"].iter().map(|g| parse_poly(g, &s).unwrap()).collect();
        assert_eq!(
            GroebnerBasis::compute_capped(&s, &gens, Some(3)),
            Err(PolyError::DegreeCapExceeded(3))
        );
    }

    #[test]
    fn mismatched_signature_is_rejected() {
        let s = Signature::new([("x", 1)]).unwrap();
        let t = Signature::new([("y", 1)]).unwrap();
        let gb = basis(&s, &["x^2"]);
        assert_eq!(gb.normal_form(&Poly::var(&t, "y").unwrap()), Err(PolyError::SignatureMismatch));
    }
}

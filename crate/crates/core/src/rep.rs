//! Formal `SL_2`-representations and Euler-characteristic ledgers for exact
//! sequences.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("exactly one unknown term is required, found {0}")]
    Unknowns(usize),
    #[error("alternating sum forces dimension {0} for the unknown term")]
    Negative(i64),
}

/// A multiset of irreducibles `S_i L`, stored as `i -> multiplicity`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SL2Rep(BTreeMap<u32, u32>);

impl SL2Rep {
    pub fn zero() -> Self {
        SL2Rep::default()
    }

    /// The irreducible `S_i L` of dimension `i + 1`.
    pub fn sym(i: u32) -> Self {
        SL2Rep(BTreeMap::from([(i, 1)]))
    }

    pub fn trivial() -> Self {
        Self::sym(0)
    }

    /// The standard representation `L`.
    pub fn l() -> Self {
        Self::sym(1)
    }

    pub fn from_parts(parts: &[u32]) -> Self {
        parts.iter().fold(Self::zero(), |acc, &i| acc.plus(&Self::sym(i)))
    }

    pub fn dim(&self) -> u64 {
        self.0.iter().map(|(&i, &m)| (i as u64 + 1) * m as u64).sum()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (&i, &m) in &other.0 {
            *out.entry(i).or_insert(0) += m;
        }
        SL2Rep(out)
    }

    /// Clebsch–Gordan: `S_a ⊗ S_b = ⊕ S_k`, `k = |a-b|, |a-b|+2, .., a+b`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (&a, &m) in &self.0 {
            for (&b, &n) in &other.0 {
                let mut k = a.abs_diff(b);
                while k <= a + b {
                    *out.entry(k).or_insert(0) += m * n;
                    k += 2;
                }
            }
        }
        SL2Rep(out)
    }

    pub fn parts(&self) -> Vec<u32> {
        self.0.iter().flat_map(|(&i, &m)| std::iter::repeat(i).take(m as usize)).collect()
    }

    /// Whether `other` occurs inside `self` as a summand.
    pub fn contains(&self, other: &Self) -> bool {
        other.0.iter().all(|(i, m)| self.0.get(i).is_some_and(|n| n >= m))
    }

    /// Removes a summand; `None` if it is not contained.
    pub fn minus(&self, other: &Self) -> Option<Self> {
        if !self.contains(other) {
            return None;
        }
        let mut out = self.0.clone();
        for (i, m) in &other.0 {
            let e = out.get_mut(i).expect("contained");
            *e -= m;
            if *e == 0 {
                out.remove(i);
            }
        }
        Some(SL2Rep(out))
    }
}

impl fmt::Display for SL2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(&i, &m)| if m == 1 { format!("S{i}") } else { format!("{m}S{i}") })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// A term of an exact sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Known(SL2Rep),
    /// Only the dimension is known.
    Dim(u64),
    Unknown,
}

/// Solves `0 -> T_0 -> T_1 -> ... -> 0` for the single unknown term.
pub fn euler_solve(sequence: &[Term]) -> Result<u64, RepError> {
    let unknowns: Vec<usize> = sequence.iter().enumerate().filter(|(_, t)| **t == Term::Unknown).map(|(i, _)| i).collect();
    if unknowns.len() != 1 {
        return Err(RepError::Unknowns(unknowns.len()));
    }
    let u = unknowns[0];
    let mut sum: i64 = 0;
    for (i, t) in sequence.iter().enumerate() {
        let d = match t {
            Term::Known(r) => r.dim() as i64,
            Term::Dim(d) => *d as i64,
            Term::Unknown => continue,
        };
        sum += if i % 2 == 0 { d } else { -d };
    }
    // sign of the unknown times its dimension cancels the rest
    let x = if u % 2 == 0 { -sum } else { sum };
    if x < 0 {
        return Err(RepError::Negative(x));
    }
    Ok(x as u64)
}

/// Equivariant version for a short exact sequence `0 -> ? -> A -> B -> 0`
/// of semisimple representations: the kernel is `A - B`.
pub fn kernel_equivariant(a: &SL2Rep, b: &SL2Rep) -> Option<SL2Rep> {
    a.minus(b)
}

/// Sections of `O(d_1,..,d_k)` on `(P^1)^k`: `prod (d_i + 1)`.
pub fn monomial_section_count(multidegree: &[u32]) -> u64 {
    multidegree.iter().map(|&d| d as u64 + 1).product()
}

/// Sections of `O(d)` restricted to a divisor of class `D` in `(P^1)^k`,
/// assuming `H^1(O(d - D)) = 0`: `prod (d_i + 1) - prod (d_i - D_i + 1)`.
pub fn divisor_section_count(multidegree: &[u32], divisor: &[u32]) -> u64 {
    let twisted: Option<Vec<u32>> = multidegree.iter().zip(divisor).map(|(d, e)| d.checked_sub(*e)).collect();
    monomial_section_count(multidegree) - twisted.map_or(0, |t| monomial_section_count(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_gordan() {
        assert_eq!(SL2Rep::sym(3).dim(), 4);
        let p = SL2Rep::l().tensor(&SL2Rep::sym(2));
        assert_eq!(p, SL2Rep::from_parts(&[3, 1]));
        assert_eq!(p.dim(), 6);
        assert_eq!(p.to_string(), "S1+S3");
    }

    #[test]
    fn section_counts() {
        assert_eq!(monomial_section_count(&[1, 1, 1, 1]), 16);
        assert_eq!(divisor_section_count(&[1, 1, 1, 1], &[1, 1, 1, 1]), 15);
        assert_eq!(monomial_section_count(&[0, 0, 0, 0]), 1);
        assert_eq!(monomial_section_count(&[1, 1, 1]), 8);
    }

    #[test]
    fn ledgers() {
        let a = SL2Rep::sym(2);
        assert_eq!(euler_solve(&[Term::Known(a.clone()), Term::Known(a), Term::Unknown]), Ok(0));
        assert_eq!(euler_solve(&[Term::Unknown, Term::Dim(3), Term::Dim(5)]), Err(RepError::Negative(-2)));
        assert_eq!(euler_solve(&[Term::Dim(3), Term::Dim(5)]), Err(RepError::Unknowns(0)));
    }
}

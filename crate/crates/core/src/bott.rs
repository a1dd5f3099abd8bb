//! Borel–Weil–Bott for irreducible homogeneous bundles on the Lagrangian
//! Grassmannian of a 6-dimensional symplectic space (type C₃).
//!
//! Weights are weakly decreasing triples for the Levi `GL_3`. The Weyl group
//! acts by signed permutations; `ρ = (3,2,1)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub const RHO: [i64; 3] = [3, 2, 1];

/// Dimension of the Lagrangian Grassmannian.
pub const DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BottError {
    #[error("weight {0:?} is not weakly decreasing")]
    NotDecreasing([i64; 3]),
    #[error("weight {0} is not dominant")]
    NotDominant(WeightC3),
    #[error("cannot parse weight `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightC3([i64; 3]);

impl WeightC3 {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, BottError> {
        if a >= b && b >= c {
            Ok(WeightC3([a, b, c]))
        } else {
            Err(BottError::NotDecreasing([a, b, c]))
        }
    }

    pub fn entries(&self) -> [i64; 3] {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0[2] >= 0
    }

    pub fn plus_rho(&self) -> [i64; 3] {
        [self.0[0] + RHO[0], self.0[1] + RHO[1], self.0[2] + RHO[2]]
    }

    /// Weight of `ω ⊗ E^∨`, where the canonical class is `(-4,-4,-4)`.
    pub fn serre_dual(&self) -> WeightC3 {
        WeightC3([-self.0[2] - 4, -self.0[1] - 4, -self.0[0] - 4])
    }
}

impl fmt::Display for WeightC3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for WeightC3 {
    type Err = BottError;

    fn from_str(s: &str) -> Result<Self, BottError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i64> = t
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| BottError::Parse(s.to_string()))?;
        match parts.as_slice() {
            [a, b, c] => WeightC3::new(*a, *b, *c),
            _ => Err(BottError::Parse(s.to_string())),
        }
    }
}

/// Why `w + ρ` is singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcyclicWitness {
    /// Coordinate `index` (0-based) of `w + ρ` vanishes.
    Zero { index: usize },
    /// Coordinates `i < j` of `w + ρ` have equal absolute value.
    Collision { i: usize, j: usize },
}

impl fmt::Display for AcyclicWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcyclicWitness::Zero { index } => write!(f, "entry {} of w+rho is 0", index + 1),
            AcyclicWitness::Collision { i, j } => write!(f, "entries {} and {} of w+rho have equal absolute value", i + 1, j + 1),
        }
    }
}

/// `Some(witness)` iff every cohomology group of the bundle vanishes.
pub fn is_acyclic(w: &WeightC3) -> Option<AcyclicWitness> {
    let v = w.plus_rho();
    if let Some(index) = v.iter().position(|&x| x == 0) {
        return Some(AcyclicWitness::Zero { index });
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if v[i].abs() == v[j].abs() {
                return Some(AcyclicWitness::Collision { i, j });
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cohomology {
    Acyclic(AcyclicWitness),
    /// The only nonzero group is `H^degree`, of the given dimension.
    Concentrated { degree: usize, dimension: u64 },
}

/// The 48 signed permutations of three coordinates.
pub fn weyl_group() -> Vec<([usize; 3], [i64; 3])> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for p in perms {
        for mask in 0..8 {
            let signs = [0, 1, 2].map(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            out.push((p, signs));
        }
    }
    out
}

fn apply(g: &([usize; 3], [i64; 3]), v: [i64; 3]) -> [i64; 3] {
    let (p, s) = g;
    [s[0] * v[p[0]], s[1] * v[p[1]], s[2] * v[p[2]]]
}

/// Positive roots `e_i - e_j`, `e_i + e_j` (`i < j`) and `2 e_i`.
pub fn positive_roots() -> Vec<[i64; 3]> {
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut a = [0; 3];
            a[i] = 1;
            a[j] = -1;
            roots.push(a);
            let mut b = [0; 3];
            b[i] = 1;
            b[j] = 1;
            roots.push(b);
        }
        let mut c = [0; 3];
        c[i] = 2;
        roots.push(c);
    }
    roots
}

fn pairing(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Bott's theorem: find the Weyl element making `w + ρ` strictly dominant;
/// its length, the number of positive roots it sends negative, is the
/// cohomological degree.
pub fn cohomology(w: &WeightC3) -> Cohomology {
    if let Some(wit) = is_acyclic(w) {
        return Cohomology::Acyclic(wit);
    }
    let v = w.plus_rho();
    let g = weyl_group()
        .into_iter()
        .find(|g| {
            let u = apply(g, v);
            u[0] > u[1] && u[1] > u[2] && u[2] > 0
        })
        .expect("a regular weight has a dominant conjugate");
    let u = apply(&g, v);
    let degree = positive_roots().iter().filter(|b| pairing(&v, b) < 0).count();
    let dominant = WeightC3([u[0] - RHO[0], u[1] - RHO[1], u[2] - RHO[2]]);
    let dimension = weyl_dim_c3(&dominant).expect("dominant after sorting");
    Cohomology::Concentrated { degree, dimension }
}

/// Weyl dimension formula `prod_β <λ+ρ, β> / <ρ, β>` over the positive roots.
pub fn weyl_dim_c3(w: &WeightC3) -> Result<u64, BottError> {
    if !w.is_dominant() {
        return Err(BottError::NotDominant(*w));
    }
    let v = w.plus_rho();
    let (mut num, mut den) = (1i128, 1i128);
    for b in positive_roots() {
        num *= pairing(&v, &b) as i128;
        den *= pairing(&RHO, &b) as i128;
    }
    debug_assert_eq!(num % den, 0);
    Ok((num / den) as u64)
}

/// The six weights of the bundles `∧^i Q^∨(-j)` appearing in the resolution.
pub const RESOLUTION_WEIGHTS: [[i64; 3]; 6] =
    [[0, 0, -1], [0, -1, -1], [-1, -1, -1], [-1, -1, -2], [-1, -2, -2], [-2, -2, -2]];

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64, c: i64) -> WeightC3 {
        WeightC3::new(a, b, c).unwrap()
    }

    #[test]
    fn weyl_group_and_roots() {
        assert_eq!(weyl_group().len(), 48);
        assert_eq!(positive_roots().len(), 9);
    }

    #[test]
    fn resolution_weights_are_acyclic() {
        for [a, b, c] in RESOLUTION_WEIGHTS {
            assert!(is_acyclic(&w(a, b, c)).is_some(), "{a},{b},{c}");
        }
        assert_eq!(is_acyclic(&w(0, 0, -1)), Some(AcyclicWitness::Zero { index: 2 }));
        assert_eq!(is_acyclic(&w(-1, -1, -2)), Some(AcyclicWitness::Collision { i: 1, j: 2 }));
        assert_eq!(is_acyclic(&w(0, 0, 0)), None);
    }

    #[test]
    fn dimension_anchors() {
        assert_eq!(weyl_dim_c3(&w(0, 0, 0)).unwrap(), 1);
        assert_eq!(weyl_dim_c3(&w(1, 0, 0)).unwrap(), 6);
        assert_eq!(weyl_dim_c3(&w(1, 1, 0)).unwrap(), 14);
        assert_eq!(weyl_dim_c3(&w(1, 1, 1)).unwrap(), 14);
        assert_eq!(cohomology(&w(1, 0, 0)), Cohomology::Concentrated { degree: 0, dimension: 6 });
        assert!(matches!(weyl_dim_c3(&w(0, 0, -1)), Err(BottError::NotDominant(_))));
    }

    #[test]
    fn canonical_bundle_has_top_cohomology() {
        assert_eq!(cohomology(&w(-4, -4, -4)), Cohomology::Concentrated { degree: 6, dimension: 1 });
    }

    #[test]
    fn parse_and_reject() {
        assert_eq!("1,1,0".parse::<WeightC3>().unwrap(), w(1, 1, 0));
        assert_eq!("(-1, -2, -2)".parse::<WeightC3>().unwrap(), w(-1, -2, -2));
        assert!(matches!("0,1,0".parse::<WeightC3>(), Err(BottError::NotDecreasing(_))));
        assert!(matches!("1,2".parse::<WeightC3>(), Err(BottError::Parse(_))));
    }
}

//! Coordinates on `∧^3` of a 6-dimensional symplectic space as `(a, X, Y, b)`
//! with `X`, `Y` symmetric, and the incidence of the tangent hyperplane
//! `y5 = y2` with the conic `λ²w0 + λμw1 + μ²w2`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg;
use crate::poly::{GroebnerBasis, Poly, PolyError, Signature, Q};

/// Positions of `x0..x5` in the symmetric matrix.
const SYM: [[usize; 3]; 3] = [[0, 1, 2], [1, 5, 3], [2, 3, 4]];

pub struct CoordinateModel {
    sig: Arc<Signature>,
}

impl Default for CoordinateModel {
    fn default() -> Self {
        Self::new()
    }
}

type M3 = [[Poly; 3]; 3];

fn adj3(m: &M3) -> M3 {
    let c = |r: [usize; 2], s: [usize; 2]| &(&m[r[0]][s[0]] * &m[r[1]][s[1]]) - &(&m[r[0]][s[1]] * &m[r[1]][s[0]]);
    let others = |i: usize| -> [usize; 2] {
        match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // adj[i][j] = (-1)^{i+j} minor(j, i)
            let minor = c(others(j), others(i));
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
    })
}

impl CoordinateModel {
    pub fn new() -> Self {
        let mut names: Vec<String> = vec!["a".into(), "b".into()];
        names.extend((0..6).map(|i| format!("x{i}")));
        names.extend((0..6).map(|i| format!("y{i}")));
        names.extend(["lambda".into(), "mu".into()]);
        let sig = Signature::new(names.into_iter().map(|n| (n, 1))).expect("distinct names");
        CoordinateModel { sig }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn var(&self, name: &str) -> Poly {
        Poly::var(&self.sig, name).expect("model variable")
    }

    fn sym(&self, prefix: &str) -> M3 {
        std::array::from_fn(|i| std::array::from_fn(|j| self.var(&format!("{prefix}{}", SYM[i][j]))))
    }

    pub fn x(&self) -> M3 {
        self.sym("x")
    }

    pub fn y(&self) -> M3 {
        self.sym("y")
    }

    /// `∧²X = aY`, `∧²Y = bX`, `YX = ab·I`, entrywise.
    pub fn isotropic_equations(&self) -> Vec<Poly> {
        let (a, b) = (self.var("a"), self.var("b"));
        let (x, y) = (self.x(), self.y());
        let (ax, ay) = (adj3(&x), adj3(&y));
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                out.push(&ax[i][j] - &(&a * &y[i][j]));
                out.push(&ay[i][j] - &(&b * &x[i][j]));
                let mut yx = Poly::zero(&self.sig);
                for k in 0..3 {
                    yx = &yx + &(&y[i][k] * &x[k][j]);
                }
                if i == j {
                    yx = &yx - &(&a * &b);
                }
                out.push(yx);
            }
        }
        out.retain(|p| !p.is_zero());
        out.sort_by(|p, q| p.to_string().cmp(&q.to_string()));
        out.dedup();
        out
    }

    pub fn hyperplane(&self) -> Poly {
        &self.var("y5") - &self.var("y2")
    }

    /// Equations of the incidence in `P^1 × H̄`.
    pub fn incidence_equations(&self) -> Vec<Poly> {
        let (l, m) = (self.var("lambda"), self.var("mu"));
        let conic = [&l * &l, &l * &m, &m * &m];
        let (x, y) = (self.x(), self.y());
        let mut out = vec![self.var("a")];
        for row in &x {
            out.push(row.iter().zip(&conic).fold(Poly::zero(&self.sig), |acc, (e, c)| &acc + &(e * c)));
        }
        for (r0, r1) in [(0, 1), (1, 2)] {
            for j in 0..3 {
                out.push(&(&l * &y[r1][j]) - &(&m * &y[r0][j]));
            }
        }
        out
    }

    /// The six bilinear sections.
    pub fn sections(&self) -> Vec<Poly> {
        let (a, l, m) = (self.var("a"), self.var("lambda"), self.var("mu"));
        let yv: Vec<Poly> = (0..5).map(|i| self.var(&format!("y{i}"))).collect();
        let mut out = vec![-&(&a * &l), -&(&a * &m)];
        for i in 0..4 {
            out.push(&(&l * &yv[i + 1]) - &(&m * &yv[i]));
        }
        out
    }

    /// The 2×6 matrix with rows `(a,0,y0,y1,y2,y3)` and `(0,a,-y1,-y2,-y3,-y4)`.
    pub fn m_e(&self) -> [Vec<Poly>; 2] {
        let a = self.var("a");
        let zero = Poly::zero(&self.sig);
        let yv: Vec<Poly> = (0..5).map(|i| self.var(&format!("y{i}"))).collect();
        let mut r0 = vec![a.clone(), zero.clone()];
        let mut r1 = vec![zero, a];
        for i in 0..4 {
            r0.push(yv[i].clone());
            r1.push(-&yv[i + 1]);
        }
        [r0, r1]
    }

    /// A point `(a, b, x0..x5, y0..y5)` padded with `λ = μ = 0`.
    pub fn point(&self, a: Q, b: Q, x: [Q; 6], y: [Q; 6]) -> Vec<Q> {
        let mut p = vec![a, b];
        p.extend(x);
        p.extend(y);
        p.extend([Q::from_integer(0.into()), Q::from_integer(0.into())]);
        p
    }

    pub fn on_isotropic_grassmannian(&self, pt: &[Q]) -> bool {
        self.isotropic_equations().iter().all(|e| e.evaluate(pt) == Q::from_integer(0.into()))
    }

    pub fn rank_m_e(&self, pt: &[Q]) -> usize {
        let m: Vec<Vec<Q>> = self.m_e().iter().map(|r| r.iter().map(|e| e.evaluate(pt)).collect()).collect();
        linalg::rank(&m)
    }
}

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn sym_entries(m: &[[Q; 3]; 3]) -> [Q; 6] {
    std::array::from_fn(|k| {
        let (i, j) = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).find(|&(i, j)| SYM[i][j] == k).expect("index");
        m[i][j].clone()
    })
}

fn adj_q(m: &[[Q; 3]; 3]) -> [[Q; 3]; 3] {
    let others = |i: usize| -> [usize; 2] {
        match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (r, s) = (others(j), others(i));
            let minor = &m[r[0]][s[0]] * &m[r[1]][s[1]] - &m[r[0]][s[1]] * &m[r[1]][s[0]];
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
    })
}

fn det_q(m: &[[Q; 3]; 3]) -> Q {
    (0..3).map(|j| &m[0][j] * &adj_q(m)[j][0]).fold(qi(0), |a, b| a + b)
}

fn nonzero<R: Rng>(rng: &mut R) -> i64 {
    loop {
        let k = rng.gen_range(-9i64..=9);
        if k != 0 {
            return k;
        }
    }
}

/// The point `(1, S, adj S, det S)` for a symmetric `S`.
fn chart_point(model: &CoordinateModel, s: &[[Q; 3]; 3]) -> Vec<Q> {
    let ad = adj_q(s);
    model.point(qi(1), det_q(s), sym_entries(s), sym_entries(&ad))
}

fn random_symmetric<R: Rng>(rng: &mut R) -> [[Q; 3]; 3] {
    let e: [Q; 6] = std::array::from_fn(|_| qi(rng.gen_range(-9i64..=9)));
    std::array::from_fn(|i| std::array::from_fn(|j| e[SYM[i][j]].clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub seed: u64,
    /// Per section: its text and whether it lies in the incidence ideal.
    pub membership: Vec<(String, bool)>,
    /// `(-μ,-λ)·M_E` equals the sections with the first two swapped.
    pub presentation_matches: bool,
    /// Rank of `M_E` at a point of `B` on the hyperplane with `a ≠ 0`.
    pub rank_generic: usize,
    /// Rank at a constructed point with `a = 0` and nonzero `y`.
    pub rank_special: usize,
    pub generic_point_on_b: bool,
    pub special_point_on_b: bool,
    pub isotropic_points: usize,
    pub isotropic_points_ok: usize,
    pub nonisotropic_rejected: bool,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.membership.iter().all(|(_, ok)| *ok)
            && self.presentation_matches
            && self.rank_generic == 2
            && self.rank_special == 1
            && self.generic_point_on_b
            && self.special_point_on_b
            && self.isotropic_points_ok == self.isotropic_points
            && self.nonisotropic_rejected
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed = {}", self.seed)?;
        for (s, ok) in &self.membership {
            writeln!(f, "section {s} in incidence ideal = {ok}")?;
        }
        writeln!(f, "(-mu,-lambda).M_E matches sections = {}", self.presentation_matches)?;
        writeln!(f, "rank M_E at point with a!=0 = {} (on B: {})", self.rank_generic, self.generic_point_on_b)?;
        writeln!(f, "rank M_E at point with a=0 = {} (on B: {})", self.rank_special, self.special_point_on_b)?;
        write!(
            f,
            "isotropic test points {}/{}, non-isotropic rejected = {}",
            self.isotropic_points_ok, self.isotropic_points, self.nonisotropic_rejected
        )
    }
}

pub fn congruence_model_check(seed: u64) -> Result<CongruenceReport, PolyError> {
    let model = CoordinateModel::new();
    let sig = model.signature().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // (i) ideal membership
    let mut gens = model.incidence_equations();
    gens.push(model.hyperplane());
    let gb = GroebnerBasis::compute(&sig, &gens)?;
    let sections = model.sections();
    let membership = sections
        .iter()
        .map(|s| Ok((s.to_string(), gb.contains(s)?)))
        .collect::<Result<Vec<_>, PolyError>>()?;

    let (l, m) = (model.var("lambda"), model.var("mu"));
    let me = model.m_e();
    let combo: Vec<Poly> = (0..6).map(|j| -&(&(&m * &me[0][j]) + &(&l * &me[1][j]))).collect();
    let mut swapped = sections.clone();
    swapped.swap(0, 1);
    let presentation_matches = combo == swapped;

    // (ii) a point with a = 1 on the hyperplane: solve y5 = y2 for x0
    let generic = loop {
        let [x1, x2, x3, x5] = [0; 4].map(|_| qi(rng.gen_range(-9i64..=9)));
        let x4 = qi(nonzero(&mut rng));
        let x0 = (&x1 * &x3 - &x2 * &x5 + &x2 * &x2) / &x4;
        let e = [x0, x1, x2, x3, x4, x5];
        let s: [[Q; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| e[SYM[i][j]].clone()));
        let pt = chart_point(&model, &s);
        if det_q(&s) != qi(0) {
            break pt;
        }
    };
    let hyper = model.hyperplane();
    let on_b = |pt: &[Q]| model.on_isotropic_grassmannian(pt) && hyper.evaluate(pt) == qi(0);
    let generic_point_on_b = on_b(&generic);
    let rank_generic = model.rank_m_e(&generic);

    // a = b = 0, X = k ww^T with w = (μ,-λ,0), Y = c vv^T with v on the conic
    let (lam, mu, k, c) = (qi(nonzero(&mut rng)), qi(nonzero(&mut rng)), qi(nonzero(&mut rng)), qi(nonzero(&mut rng)));
    let w = [mu.clone(), -lam.clone(), qi(0)];
    let v = [&lam * &lam, &lam * &mu, &mu * &mu];
    let xm: [[Q; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| &k * &w[i] * &w[j]));
    let ym: [[Q; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| &c * &v[i] * &v[j]));
    let special = model.point(qi(0), qi(0), sym_entries(&xm), sym_entries(&ym));
    let special_point_on_b = on_b(&special);
    let rank_special = model.rank_m_e(&special);

    // isotropic test points and a non-isotropic one
    let isotropic_points = 10;
    let isotropic_points_ok = (0..isotropic_points)
        .filter(|_| model.on_isotropic_grassmannian(&chart_point(&model, &random_symmetric(&mut rng))))
        .count();
    let skew = [[qi(1), qi(2), qi(3)], [qi(5), qi(7), qi(11)], [qi(13), qi(17), qi(19)]];
    let ad = adj_q(&skew);
    let upper = |m: &[[Q; 3]; 3]| -> [Q; 6] {
        std::array::from_fn(|k| {
            let (i, j) = (0..3).flat_map(|i| (i..3).map(move |j| (i, j))).find(|&(i, j)| SYM[i][j] == k).expect("index");
            m[i][j].clone()
        })
    };
    let bad = model.point(qi(1), det_q(&skew), upper(&skew), upper(&ad));
    let nonisotropic_rejected = !model.on_isotropic_grassmannian(&bad);

    Ok(CongruenceReport {
        seed,
        membership,
        presentation_matches,
        rank_generic,
        rank_special,
        generic_point_on_b,
        special_point_on_b,
        isotropic_points,
        isotropic_points_ok,
        nonisotropic_rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equations_are_homogeneous() {
        let m = CoordinateModel::new();
        for e in m.isotropic_equations().iter().chain(&m.incidence_equations()).chain(&m.sections()) {
            assert!(e.is_homogeneous(), "{e}");
        }
        assert_eq!(m.sections()[2].to_string().contains("y1"), true);
    }

    #[test]
    fn model_check_passes() {
        let r = congruence_model_check(3).unwrap();
        assert!(r.passed(), "{r}");
    }
}

//! Split reduced root data, their Weyl groups, the dominance order and the
//! valuation-image domains `V^ξ` and `V^{ξ,norm}`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::exactnum::linalg::{self, Matrix};
use crate::exactnum::{lp, FieldData, Rat};

/// A point of `V_R = X*(T) ⊗ R`, in the coordinates of the character lattice.
pub type WeightVec = Vec<Rat>;

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// An element of the Weyl group, stored as its action on characters and on
/// cocharacters (column vectors, `v ↦ M v`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub on_chars: Vec<Vec<i64>>,
    pub on_cochars: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn ipair(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { on_chars: identity(rank), on_cochars: identity(rank) }
    }

    pub fn is_identity(&self) -> bool {
        self.on_chars == identity(self.on_chars.len())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            on_chars: mat_mul(&self.on_chars, &other.on_chars),
            on_cochars: mat_mul(&self.on_cochars, &other.on_cochars),
        }
    }

    pub fn act_char(&self, z: &[Rat]) -> WeightVec {
        self.on_chars
            .iter()
            .map(|row| row.iter().zip(z).map(|(&m, x)| x * Rat::int(m)).sum())
            .collect()
    }

    pub fn act_cochar(&self, l: &[i64]) -> Vec<i64> {
        self.on_cochars.iter().map(|row| ipair(row, l)).collect()
    }
}

/// A split reduced root datum given by simple roots in `X*(T)` and simple
/// coroots in `X_*(T)`, both as integer vectors for dual bases.
#[derive(Debug, Clone)]
pub struct RootDatum {
    name: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    eta: WeightVec,
    weyl: Vec<WeylElement>,
}

impl RootDatum {
    /// Builds a datum from simple roots and coroots; validates the Cartan
    /// matrix and enumerates the (capped) Weyl group.
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        Self::with_cap(name, rank, simple_roots, simple_coroots, DEFAULT_ORBIT_CAP)
    }

    pub fn with_cap(
        name: impl Into<String>,
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        cap: usize,
    ) -> Result<Self> {
        let l = simple_roots.len();
        if simple_coroots.len() != l {
            return Err(Error::InvalidDatum(format!(
                "{l} simple roots but {} simple coroots",
                simple_coroots.len()
            )));
        }
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(Error::InvalidDatum(format!("root vectors must have length {rank}")));
        }
        for i in 0..l {
            for j in 0..l {
                let a = ipair(&simple_roots[i], &simple_coroots[j]);
                let b = ipair(&simple_roots[j], &simple_coroots[i]);
                if i == j && a != 2 {
                    return Err(Error::InvalidDatum(format!("<a_{i}, a_{i}^v> = {a}, expected 2")));
                }
                if i != j && (a > 0 || (a == 0) != (b == 0)) {
                    return Err(Error::InvalidDatum(format!(
                        "Cartan entries ({i},{j}) = {a}, ({j},{i}) = {b} are not admissible"
                    )));
                }
            }
        }
        if linalg::rank(&linalg::from_ints(&simple_roots)) != l {
            return Err(Error::InvalidDatum("simple roots are linearly dependent".into()));
        }

        let reflections: Vec<WeylElement> =
            (0..l).map(|i| reflection(&simple_roots[i], &simple_coroots[i])).collect();

        let mut weyl = vec![WeylElement::identity(rank)];
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([identity(rank)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in &reflections {
                let w = s.compose(&weyl[k]);
                // entries of a finite reflection group stay tiny; growth means
                // the group is infinite long before the cap is reached
                if w.on_chars.iter().flatten().any(|x| x.abs() > 1 << 16) {
                    return Err(Error::InvalidDatum("Weyl group is infinite".into()));
                }
                if seen.insert(w.on_chars.clone()) {
                    if weyl.len() >= cap {
                        return Err(Error::OrbitCap { cap });
                    }
                    weyl.push(w);
                    queue.push_back(weyl.len() - 1);
                }
            }
        }

        // positive roots with their coroots: W-translates of simple pairs that
        // are non-negative combinations of the simple roots
        let roots_mat = linalg::transpose(&linalg::from_ints(&simple_roots), rank);
        let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        let mut pair_seen = HashSet::new();
        for w in &weyl {
            for i in 0..l {
                let beta = w.act_cochar_like_char(&simple_roots[i]);
                let beta_v = w.act_cochar(&simple_coroots[i]);
                if !pair_seen.insert(beta.clone()) {
                    continue;
                }
                let target: Vec<Rat> = beta.iter().map(|&x| Rat::int(x)).collect();
                let coeffs = linalg::rat_linear_solve(&roots_mat, &target)?
                    .expect("Weyl translate of a root lies in the root span");
                if coeffs.iter().all(|c| !c.is_negative()) {
                    pairs.push((beta, beta_v));
                }
            }
        }
        pairs.sort();
        let (positive_roots, positive_coroots): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let eta = (0..rank)
            .map(|k| Rat::new(positive_roots.iter().map(|b| b[k]).sum(), 2))
            .collect();

        Ok(RootDatum {
            name: name.into(),
            rank,
            simple_roots,
            simple_coroots,
            positive_roots,
            positive_coroots,
            eta,
            weyl,
        })
    }

    /// `GL_n`, with the Borel chosen so that dominant means nondecreasing:
    /// `α_i = e_{i+1} − e_i`.
    pub fn gl(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDatum("GL_0 is not a group of interest".into()));
        }
        let roots: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| (0..n).map(|k| i64::from(k == i + 1) - i64::from(k == i)).collect())
            .collect();
        RootDatum::new(format!("GL {n}"), n, roots.clone(), roots)
    }

    /// Simply connected datum of a Cartan matrix `A[i][j] = ⟨α_i, α_j^∨⟩`:
    /// characters in the basis of fundamental weights.
    pub fn from_cartan(name: impl Into<String>, cartan: &[Vec<i64>]) -> Result<Self> {
        let l = cartan.len();
        let coroots = identity(l);
        RootDatum::new(name, l, cartan.to_vec(), coroots)
    }

    /// Adjoint datum of a Cartan matrix: characters in the basis of simple roots.
    pub fn adjoint_from_cartan(name: impl Into<String>, cartan: &[Vec<i64>]) -> Result<Self> {
        let l = cartan.len();
        let coroots = (0..l).map(|j| (0..l).map(|i| cartan[i][j]).collect()).collect();
        RootDatum::new(name, l, identity(l), coroots)
    }

    pub fn sl(n: usize) -> Result<Self> {
        let mut d = RootDatum::from_cartan(format!("SL {n}"), &type_a_cartan(n)?)?;
        d.name = format!("SL {n}");
        Ok(d)
    }

    pub fn pgl(n: usize) -> Result<Self> {
        RootDatum::adjoint_from_cartan(format!("PGL {n}"), &type_a_cartan(n)?)
    }

    /// `Sp_4` on `Z²`: `α_1 = e_1 − e_2`, `α_2 = 2e_2`; here `η = (2, 1)` is integral.
    pub fn sp4() -> Self {
        RootDatum::new("Sp4", 2, vec![vec![1, -1], vec![0, 2]], vec![vec![1, -1], vec![0, 1]])
            .expect("Sp4 datum is valid")
    }

    /// `SO_5` on `Z²`: `α_1 = e_1 − e_2`, `α_2 = e_2`; here `η = (3/2, 1/2)`.
    pub fn so5() -> Self {
        RootDatum::new("SO5", 2, vec![vec![1, -1], vec![0, 1]], vec![vec![1, -1], vec![0, 2]])
            .expect("SO5 datum is valid")
    }

    /// `G_2`, simply connected.
    pub fn g2() -> Self {
        RootDatum::from_cartan("G2", &[vec![2, -1], vec![-3, 2]]).expect("G2 datum is valid")
    }

    /// Parses a preset name such as `GL 3`, `SL 2`, `PGL 2`, `Sp4`, `SO5`, `G2`.
    pub fn preset(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split_whitespace().collect();
        let size = |s: Option<&&str>| -> Result<usize> {
            s.ok_or_else(|| Error::parse(format!("group `{spec}` needs a size")))?
                .parse()
                .map_err(|_| Error::parse(format!("bad group size in `{spec}`")))
        };
        match parts.first().copied() {
            Some("GL") => RootDatum::gl(size(parts.get(1))?),
            Some("SL") => RootDatum::sl(size(parts.get(1))?),
            Some("PGL") => RootDatum::pgl(size(parts.get(1))?),
            Some("Sp4") => Ok(RootDatum::sp4()),
            Some("SO5") => Ok(RootDatum::so5()),
            Some("G2") => Ok(RootDatum::g2()),
            _ => Err(Error::parse(format!("unknown group preset `{spec}`"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// `⟨α_i, α_j^∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| ipair(a, c)).collect())
            .collect()
    }

    /// `η`, half the sum of the positive roots.
    pub fn half_sum_positive_roots(&self) -> WeightVec {
        self.eta.clone()
    }

    /// Whether `η ∈ X*(T)`.
    pub fn eta_integral(&self) -> bool {
        self.eta.iter().all(Rat::is_integer)
    }

    fn check_len(&self, z: &[Rat]) -> Result<()> {
        if z.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a datum of rank {}",
                z.len(),
                self.rank
            )));
        }
        Ok(())
    }

    pub fn pair_coroot(&self, z: &[Rat], i: usize) -> Rat {
        z.iter().zip(&self.simple_coroots[i]).map(|(x, &c)| x * Rat::int(c)).sum()
    }

    pub fn reflect(&self, z: &[Rat], i: usize) -> WeightVec {
        let k = self.pair_coroot(z, i);
        z.iter().zip(&self.simple_roots[i]).map(|(x, &a)| x - &k * Rat::int(a)).collect()
    }

    pub fn is_dominant(&self, z: &[Rat]) -> bool {
        (0..self.semisimple_rank()).all(|i| !self.pair_coroot(z, i).is_negative())
    }

    /// The orbit `W·z`, sorted, or an error once it exceeds `cap` points.
    pub fn weyl_orbit_capped(&self, z: &[Rat], cap: usize) -> Result<Vec<WeightVec>> {
        self.check_len(z)?;
        let mut seen: HashSet<WeightVec> = HashSet::from([z.to_vec()]);
        let mut queue = VecDeque::from([z.to_vec()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.semisimple_rank() {
                let y = self.reflect(&x, i);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitCap { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<WeightVec> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn weyl_orbit(&self, z: &[Rat]) -> Result<Vec<WeightVec>> {
        self.weyl_orbit_capped(z, DEFAULT_ORBIT_CAP)
    }

    /// The unique dominant point of `W·z`.
    pub fn dominant_rep(&self, z: &[Rat]) -> Result<WeightVec> {
        self.check_len(z)?;
        let mut x = z.to_vec();
        while let Some(i) =
            (0..self.semisimple_rank()).find(|&i| self.pair_coroot(&x, i).is_negative())
        {
            x = self.reflect(&x, i);
        }
        Ok(x)
    }

    /// Coefficients of `v` in the simple roots, if `v` lies in their span.
    pub fn simple_root_coefficients(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        self.check_len(v)?;
        let m: Matrix = linalg::transpose(&linalg::from_ints(&self.simple_roots), self.rank);
        if self.simple_roots.is_empty() {
            return Ok(v.iter().all(Rat::is_zero).then(Vec::new));
        }
        linalg::rat_linear_solve(&m, v)
    }

    /// `z ≤ z2`: `z2 − z` is a non-negative rational combination of simple roots.
    pub fn dominance_leq(&self, z: &[Rat], z2: &[Rat]) -> Result<bool> {
        self.check_len(z)?;
        self.check_len(z2)?;
        let diff: Vec<Rat> = z2.iter().zip(z).map(|(a, b)| a - b).collect();
        Ok(match self.simple_root_coefficients(&diff)? {
            Some(c) => c.iter().all(|x| !x.is_negative()),
            None => false,
        })
    }

    /// Is the cocharacter `λ` antidominant, i.e. `⟨α, λ⟩ ≤ 0` for all positive `α`?
    pub fn is_antidominant_cochar(&self, l: &[i64]) -> bool {
        self.positive_roots.iter().all(|a| ipair(a, l) <= 0)
    }

    /// A Weyl element `w` with `wλ` antidominant, and `wλ`.
    pub fn antidominant_cochar(&self, l: &[i64]) -> (WeylElement, Vec<i64>) {
        let mut w = WeylElement::identity(self.rank);
        let mut x = l.to_vec();
        while let Some(i) =
            (0..self.semisimple_rank()).find(|&i| ipair(&self.simple_roots[i], &x) > 0)
        {
            let s = self.simple_reflection(i);
            x = s.act_cochar(&x);
            w = s.compose(&w);
        }
        (w, x)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        reflection(&self.simple_roots[i], &self.simple_coroots[i])
    }
}

impl WeylElement {
    // roots are characters; this is `act_char` on integer vectors
    fn act_cochar_like_char(&self, a: &[i64]) -> Vec<i64> {
        self.on_chars.iter().map(|row| ipair(row, a)).collect()
    }
}

/// `s_α`: `z ↦ z − ⟨z, α^∨⟩α` on characters, `λ ↦ λ − ⟨α, λ⟩α^∨` on cocharacters.
fn reflection(a: &[i64], c: &[i64]) -> WeylElement {
    let n = a.len();
    WeylElement {
        on_chars: (0..n).map(|r| (0..n).map(|s| i64::from(r == s) - a[r] * c[s]).collect()).collect(),
        on_cochars: (0..n).map(|r| (0..n).map(|s| i64::from(r == s) - c[r] * a[s]).collect()).collect(),
    }
}

fn type_a_cartan(n: usize) -> Result<Vec<Vec<i64>>> {
    if n < 2 {
        return Err(Error::InvalidDatum("type A datum needs n >= 2".into()));
    }
    let l = n - 1;
    Ok((0..l)
        .map(|i| {
            (0..l)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect())
}

/// The highest weights `ξ̃_σ` of the algebraic representation, one dominant
/// weight of `T` per embedding `σ : L → K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight {
    per_embedding: Vec<WeightVec>,
}

impl HighestWeight {
    pub fn new(datum: &RootDatum, field: &FieldData, per_embedding: Vec<WeightVec>) -> Result<Self> {
        if per_embedding.len() != field.embeddings() {
            return Err(Error::InvalidWeights(format!(
                "{} embedding weights given but [L:Q_p] = {}",
                per_embedding.len(),
                field.embeddings()
            )));
        }
        for (s, w) in per_embedding.iter().enumerate() {
            datum.check_len(w)?;
            if !datum.is_dominant(w) {
                return Err(Error::InvalidWeights(format!("weight for embedding {} is not dominant", s + 1)));
            }
        }
        Ok(HighestWeight { per_embedding })
    }

    pub fn zero(datum: &RootDatum, field: &FieldData) -> Self {
        HighestWeight { per_embedding: vec![vec![Rat::zero(); datum.rank()]; field.embeddings()] }
    }

    pub fn per_embedding(&self) -> &[WeightVec] {
        &self.per_embedding
    }

    /// `ξ_L = val_L ∘ ξ`, the coordinatewise sum over embeddings.
    pub fn xi_l(&self) -> WeightVec {
        let n = self.per_embedding.first().map_or(0, Vec::len);
        (0..n).map(|k| self.per_embedding.iter().map(|w| &w[k]).sum()).collect()
    }
}

/// `η_L = [L:Q_p]·η`.
pub fn eta_l(datum: &RootDatum, field: &FieldData) -> WeightVec {
    let d = field.degree_rat();
    datum.half_sum_positive_roots().iter().map(|x| x * &d).collect()
}

fn add(x: &[Rat], y: &[Rat]) -> WeightVec {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Membership of `z` in `V^ξ` (`(z + η_L)^dom ≤ η_L + ξ_L`) or, when
/// `normalized`, in `V^{ξ,norm}` (`z^dom ≤ η_L + ξ_L`).
pub fn in_vxi(
    datum: &RootDatum,
    field: &FieldData,
    xi: &HighestWeight,
    z: &[Rat],
    normalized: bool,
) -> Result<bool> {
    datum.check_len(z)?;
    let eta = eta_l(datum, field);
    let bound = add(&eta, &xi.xi_l());
    let point = if normalized { z.to_vec() } else { add(z, &eta) };
    datum.dominance_leq(&datum.dominant_rep(&point)?, &bound)
}

/// Membership of `z` in the convex hull of `{w(η_L + ξ_L) − η_L}`, decided by
/// exact linear programming.
pub fn in_hull(datum: &RootDatum, field: &FieldData, xi: &HighestWeight, z: &[Rat]) -> Result<bool> {
    datum.check_len(z)?;
    let eta = eta_l(datum, field);
    let top = add(&eta, &xi.xi_l());
    let vertices: Vec<WeightVec> = datum
        .weyl_orbit(&top)?
        .into_iter()
        .map(|v| v.iter().zip(&eta).map(|(a, b)| a - b).collect())
        .collect();
    lp::in_convex_hull(&vertices, z)
}

/// Vertices `w(η_L + ξ_L) − η_L` of the hull, sorted.
pub fn hull_vertices(datum: &RootDatum, field: &FieldData, xi: &HighestWeight) -> Result<Vec<WeightVec>> {
    let eta = eta_l(datum, field);
    let top = add(&eta, &xi.xi_l());
    Ok(datum
        .weyl_orbit(&top)?
        .into_iter()
        .map(|v| v.iter().zip(&eta).map(|(a, b)| a - b).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> WeightVec {
        xs.iter().map(|&x| Rat::int(x)).collect()
    }

    fn h(n: i64) -> Rat {
        Rat::half(n)
    }

    #[test]
    fn eta_of_gl() {
        assert_eq!(RootDatum::gl(2).unwrap().half_sum_positive_roots(), vec![h(-1), h(1)]);
        assert_eq!(RootDatum::gl(3).unwrap().half_sum_positive_roots(), v(&[-1, 0, 1]));
        assert_eq!(RootDatum::gl(1).unwrap().half_sum_positive_roots(), v(&[0]));
        assert!(!RootDatum::gl(2).unwrap().eta_integral());
    }

    #[test]
    fn eta_of_rank_two_presets() {
        assert_eq!(RootDatum::sp4().half_sum_positive_roots(), v(&[2, 1]));
        assert_eq!(RootDatum::so5().half_sum_positive_roots(), vec![h(3), h(1)]);
        assert!(RootDatum::sp4().eta_integral());
        assert!(!RootDatum::so5().eta_integral());
        assert_eq!(RootDatum::g2().positive_roots().len(), 6);
        assert_eq!(RootDatum::g2().weyl_group().len(), 12);
        assert_eq!(RootDatum::sp4().weyl_group().len(), 8);
    }

    #[test]
    fn sl_and_pgl_eta() {
        assert!(RootDatum::sl(2).unwrap().eta_integral());
        assert!(!RootDatum::pgl(2).unwrap().eta_integral());
        assert_eq!(RootDatum::sl(4).unwrap().weyl_group().len(), 24);
    }

    #[test]
    fn rejects_bad_cartan() {
        assert!(RootDatum::new("bad", 2, vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 2]]).is_err());
        assert!(RootDatum::from_cartan("affine", &[vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn infinite_weyl_group_hits_cap() {
        let hyperbolic = || (vec![vec![2, -3], vec![-3, 2]], vec![vec![1, 0], vec![0, 1]]);
        let (r, c) = hyperbolic();
        assert!(matches!(RootDatum::with_cap("h", 2, r, c, 20), Err(Error::OrbitCap { cap: 20 })));
        let (r, c) = hyperbolic();
        assert!(matches!(RootDatum::new("h", 2, r, c), Err(Error::InvalidDatum(_))));
    }

    #[test]
    fn orbits() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert_eq!(gl2.weyl_orbit(&v(&[0, 1])).unwrap(), vec![v(&[0, 1]), v(&[1, 0])]);
        let gl3 = RootDatum::gl(3).unwrap();
        assert_eq!(gl3.weyl_orbit(&v(&[0, 0, 0])).unwrap().len(), 1);
        assert_eq!(gl3.weyl_orbit(&v(&[0, 1, 2])).unwrap().len(), 6);
        assert!(matches!(gl3.weyl_orbit_capped(&v(&[0, 1, 2]), 4), Err(Error::OrbitCap { .. })));
    }

    #[test]
    fn dominant_representatives() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert_eq!(gl2.dominant_rep(&v(&[3, -1])).unwrap(), v(&[-1, 3]));
        let gl3 = RootDatum::gl(3).unwrap();
        assert_eq!(gl3.dominant_rep(&v(&[1, 1, 0])).unwrap(), v(&[0, 1, 1]));
        assert_eq!(gl3.dominant_rep(&v(&[0, 1, 1])).unwrap(), v(&[0, 1, 1]));
    }

    #[test]
    fn dominance_examples() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert!(gl2.dominance_leq(&[h(1), h(1)], &v(&[0, 1])).unwrap());
        assert!(!gl2.dominance_leq(&v(&[0, 1]), &[h(1), h(1)]).unwrap());
        assert!(gl2.dominance_leq(&v(&[4, 7]), &v(&[4, 7])).unwrap());
        // different totals are never comparable
        assert!(!gl2.dominance_leq(&v(&[0, 0]), &v(&[0, 1])).unwrap());
    }

    #[test]
    fn vxi_examples() {
        let l = FieldData::qp(5);
        let gl2 = RootDatum::gl(2).unwrap();
        let xi = HighestWeight::zero(&gl2, &l);
        assert!(in_vxi(&gl2, &l, &xi, &v(&[0, 0]), true).unwrap());
        assert!(!in_vxi(&gl2, &l, &xi, &v(&[-1, 1]), true).unwrap());
        let gl1 = RootDatum::gl(1).unwrap();
        let xi1 = HighestWeight::new(&gl1, &l, vec![v(&[3])]).unwrap();
        assert!(in_vxi(&gl1, &l, &xi1, &v(&[3]), false).unwrap());
        assert!(!in_vxi(&gl1, &l, &xi1, &v(&[2]), false).unwrap());
    }

    #[test]
    fn hull_examples() {
        let l = FieldData::qp(3);
        let gl2 = RootDatum::gl(2).unwrap();
        let xi = HighestWeight::zero(&gl2, &l);
        assert!(in_hull(&gl2, &l, &xi, &v(&[0, 0])).unwrap());
        assert!(!in_hull(&gl2, &l, &xi, &v(&[5, -5])).unwrap());
        let xi = HighestWeight::new(&gl2, &l, vec![v(&[1, 4])]).unwrap();
        assert!(in_hull(&gl2, &l, &xi, &xi.xi_l()).unwrap());
    }

    #[test]
    fn weights_must_be_dominant_and_match_embeddings() {
        let l = FieldData::new(3, 2, 1).unwrap();
        let gl2 = RootDatum::gl(2).unwrap();
        assert!(HighestWeight::new(&gl2, &l, vec![v(&[0, 1])]).is_err());
        assert!(HighestWeight::new(&gl2, &l, vec![v(&[0, 1]), v(&[1, 0])]).is_err());
        let xi = HighestWeight::new(&gl2, &l, vec![v(&[0, 1]), v(&[2, 2])]).unwrap();
        assert_eq!(xi.xi_l(), v(&[2, 3]));
    }

    #[test]
    fn antidominant_translate() {
        let gl3 = RootDatum::gl(3).unwrap();
        let (w, x) = gl3.antidominant_cochar(&[0, 2, 1]);
        assert_eq!(x, vec![2, 1, 0]);
        assert_eq!(w.act_cochar(&[0, 2, 1]), x);
        assert!(gl3.is_antidominant_cochar(&x));
    }

    fn arb_gl3_vec() -> impl Strategy<Value = WeightVec> {
        proptest::collection::vec((-6i64..7).prop_map(Rat::half), 3)
    }

    proptest! {
        #[test]
        fn dominance_is_a_partial_order(a in arb_gl3_vec(), b in arb_gl3_vec(), c in arb_gl3_vec()) {
            let d = RootDatum::gl(3).unwrap();
            prop_assert!(d.dominance_leq(&a, &a).unwrap());
            if d.dominance_leq(&a, &b).unwrap() && d.dominance_leq(&b, &a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if d.dominance_leq(&a, &b).unwrap() && d.dominance_leq(&b, &c).unwrap() {
                prop_assert!(d.dominance_leq(&a, &c).unwrap());
            }
        }

        #[test]
        fn dominant_rep_is_orbit_invariant(
            z in proptest::collection::vec((-6i64..7).prop_map(Rat::half), 2),
            k in 0usize..8,
        ) {
            let d = RootDatum::sp4();
            let w = &d.weyl_group()[k];
            let wz = w.act_char(&z);
            prop_assert_eq!(d.dominant_rep(&wz).unwrap(), d.dominant_rep(&z).unwrap());
            let l = FieldData::qp(2);
            let xi = HighestWeight::new(&d, &l, vec![vec![Rat::int(1), Rat::int(1)]]).unwrap();
            prop_assert_eq!(in_vxi(&d, &l, &xi, &z, true).unwrap(), in_vxi(&d, &l, &xi, &wz, true).unwrap());
        }

        #[test]
        fn gl_dominance_is_majorization(a in arb_gl3_vec(), b in arb_gl3_vec()) {
            // for nondecreasing coordinates: b dominates a iff tail sums of b are
            // at least those of a, with equal totals
            let d = RootDatum::gl(3).unwrap();
            let tails = |x: &WeightVec, k: usize| -> Rat { x[k..].iter().sum() };
            let expected = tails(&a, 0) == tails(&b, 0) && (1..3).all(|k| tails(&a, k) <= tails(&b, k));
            prop_assert_eq!(d.dominance_leq(&a, &b).unwrap(), expected);
        }
    }
}

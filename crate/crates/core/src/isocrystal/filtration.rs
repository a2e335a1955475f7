use super::Polygon;
use crate::error::{Error, Result};
use crate::exactnum::linalg::{self, Matrix};
use crate::exactnum::Rat;

/// The filtration on one factor `D_{L,σ}`: strictly increasing jumps with
/// their graded dimensions, and optionally a basis `f_1, …, f_n` realizing it
/// as `Fil^{jump_k} = span(f_{s_k+1}, …, f_n)`, `s_k` the dimension below
/// the `k`-th jump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingFiltration {
    pub jumps: Vec<(Rat, usize)>,
    pub flag: Option<Matrix>,
}

impl EmbeddingFiltration {
    /// From a list of jumps with repetition (any order).
    pub fn from_jump_list(jumps: &[Rat]) -> Self {
        let mut sorted = jumps.to_vec();
        sorted.sort();
        let mut grouped: Vec<(Rat, usize)> = Vec::new();
        for j in sorted {
            match grouped.last_mut() {
                Some((last, d)) if *last == j => *d += 1,
                _ => grouped.push((j, 1)),
            }
        }
        EmbeddingFiltration { jumps: grouped, flag: None }
    }

    pub fn dim(&self) -> usize {
        self.jumps.iter().map(|(_, d)| d).sum()
    }

    /// The jumps repeated by graded dimension, nondecreasing.
    pub fn expanded(&self) -> Vec<Rat> {
        self.jumps.iter().flat_map(|(j, d)| std::iter::repeat_n(j.clone(), *d)).collect()
    }

    pub fn t_h(&self) -> Rat {
        self.jumps.iter().map(|(j, d)| j * Rat::from(*d)).sum()
    }

    /// `Fil^{jump_k}` as a list of spanning rows, for each `k`.
    pub fn steps(&self) -> Option<Vec<Matrix>> {
        let flag = self.flag.as_ref()?;
        let mut start = 0;
        let mut out = Vec::with_capacity(self.jumps.len());
        for (_, d) in &self.jumps {
            out.push(flag[start..].to_vec());
            start += d;
        }
        Some(out)
    }

    fn validate(&self, sigma: usize) -> Result<()> {
        if self.jumps.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Precondition(format!("jumps of embedding {sigma} must increase strictly")));
        }
        if self.jumps.iter().any(|(_, d)| *d == 0) {
            return Err(Error::Precondition(format!("zero graded dimension for embedding {sigma}")));
        }
        if let Some(flag) = &self.flag {
            let n = self.dim();
            if flag.len() != n || flag.iter().any(|v| v.len() != n) {
                return Err(Error::DimensionMismatch(format!(
                    "flag of embedding {sigma} must consist of {n} vectors of length {n}"
                )));
            }
            if linalg::rank(flag) != n {
                return Err(Error::Precondition(format!("flag vectors of embedding {sigma} are dependent")));
            }
        }
        Ok(())
    }
}

/// A filtration on `D_L = ∏_σ D_{L,σ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    per_embedding: Vec<EmbeddingFiltration>,
}

impl Filtration {
    pub fn new(per_embedding: Vec<EmbeddingFiltration>) -> Result<Self> {
        if per_embedding.is_empty() {
            return Err(Error::Precondition("a filtration needs at least one embedding".into()));
        }
        for (s, e) in per_embedding.iter().enumerate() {
            e.validate(s + 1)?;
        }
        Ok(Filtration { per_embedding })
    }

    /// From jump lists (with repetition) per embedding, without flags.
    pub fn from_jumps(jumps: &[Vec<Rat>]) -> Result<Self> {
        Filtration::new(jumps.iter().map(|j| EmbeddingFiltration::from_jump_list(j)).collect())
    }

    pub fn per_embedding(&self) -> &[EmbeddingFiltration] {
        &self.per_embedding
    }

    pub fn embeddings(&self) -> usize {
        self.per_embedding.len()
    }

    pub fn has_flags(&self) -> bool {
        self.per_embedding.iter().all(|e| e.flag.is_some())
    }

    /// Replaces the flag of every embedding.
    pub fn with_flags(&self, flags: Vec<Matrix>) -> Result<Self> {
        if flags.len() != self.per_embedding.len() {
            return Err(Error::DimensionMismatch("one flag per embedding is required".into()));
        }
        let per = self
            .per_embedding
            .iter()
            .zip(flags)
            .map(|(e, f)| EmbeddingFiltration { jumps: e.jumps.clone(), flag: Some(f) })
            .collect();
        Filtration::new(per)
    }

    /// The common dimension of all `D_{L,σ}`.
    pub fn dim(&self) -> Result<usize> {
        let n = self.per_embedding[0].dim();
        if self.per_embedding.iter().any(|e| e.dim() != n) {
            return Err(Error::DimensionMismatch(
                "embeddings carry filtrations of different total dimension".into(),
            ));
        }
        Ok(n)
    }

    pub fn t_h(&self) -> Rat {
        self.per_embedding.iter().map(EmbeddingFiltration::t_h).sum()
    }

    /// `Σ_σ i_{j,σ}` for `j = 1..n`, jumps taken nondecreasing per σ.
    pub fn index_sums(&self) -> Result<Vec<Rat>> {
        let n = self.dim()?;
        let expanded: Vec<Vec<Rat>> = self.per_embedding.iter().map(|e| e.expanded()).collect();
        Ok((0..n).map(|j| expanded.iter().map(|e| &e[j]).sum()).collect())
    }

    pub fn hodge_polygon(&self) -> Result<Polygon> {
        Ok(Polygon::from_partial_sums(&self.index_sums()?))
    }

    /// Normalized `t_H` of the filtration induced on the coordinate subspace
    /// spanned by `coords`. Requires flags.
    pub fn induced_t_h(&self, coords: &[usize]) -> Result<Rat> {
        let n = self.dim()?;
        let outside: Vec<usize> = (0..n).filter(|c| !coords.contains(c)).collect();
        let mut total = Rat::zero();
        for (s, e) in self.per_embedding.iter().enumerate() {
            let steps = e
                .steps()
                .ok_or_else(|| Error::Precondition(format!("embedding {} has no explicit flag", s + 1)))?;
            // dim(Fil ∩ E_S) = dim Fil − rank of Fil projected away from S
            let dims: Vec<usize> = steps
                .iter()
                .map(|rows| {
                    let proj: Matrix =
                        rows.iter().map(|v| outside.iter().map(|&c| v[c].clone()).collect()).collect();
                    rows.len() - if outside.is_empty() { 0 } else { linalg::rank(&proj) }
                })
                .collect();
            for (k, (jump, _)) in e.jumps.iter().enumerate() {
                let next = dims.get(k + 1).copied().unwrap_or(0);
                total += jump * Rat::from(dims[k] - next);
            }
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn t_h_examples() {
        assert_eq!(Filtration::from_jumps(&[vec![r(0), r(1)]]).unwrap().t_h(), r(1));
        assert_eq!(Filtration::from_jumps(&[vec![r(0), r(2)], vec![r(1), r(3)]]).unwrap().t_h(), r(6));
        assert_eq!(Filtration::from_jumps(&[vec![r(0), r(0), r(0)]]).unwrap().t_h(), r(0));
    }

    #[test]
    fn hodge_polygon_example() {
        let f = Filtration::from_jumps(&[vec![r(-2), r(0)]]).unwrap();
        let verts = f.hodge_polygon().unwrap().vertices().to_vec();
        assert_eq!(verts, vec![(r(0), r(0)), (r(1), r(-2)), (r(2), r(-2))]);
        let mismatched = Filtration::from_jumps(&[vec![r(0)], vec![r(0), r(1)]]).unwrap();
        assert!(mismatched.hodge_polygon().is_err());
    }

    #[test]
    fn induced_filtration_on_lines() {
        // Fil^0 = everything, Fil^2 = span(1,1)
        let f = Filtration::from_jumps(&[vec![r(0), r(2)]])
            .unwrap()
            .with_flags(vec![vec![vec![r(1), r(0)], vec![r(1), r(1)]]])
            .unwrap();
        assert_eq!(f.induced_t_h(&[0]).unwrap(), r(0));
        assert_eq!(f.induced_t_h(&[1]).unwrap(), r(0));
        assert_eq!(f.induced_t_h(&[0, 1]).unwrap(), r(2));
        assert_eq!(f.induced_t_h(&[]).unwrap(), r(0));
        let g = Filtration::from_jumps(&[vec![r(0), r(2)]])
            .unwrap()
            .with_flags(vec![vec![vec![r(0), r(1)], vec![r(1), r(0)]]])
            .unwrap();
        assert_eq!(g.induced_t_h(&[0]).unwrap(), r(2));
    }

    #[test]
    fn rejects_dependent_flags() {
        let f = Filtration::from_jumps(&[vec![r(0), r(2)]]).unwrap();
        assert!(f.with_flags(vec![vec![vec![r(1), r(1)], vec![r(2), r(2)]]]).is_err());
    }
}

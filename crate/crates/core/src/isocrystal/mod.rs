//! Filtered φ-modules over `L_0 ⊗ K`: slopes, filtrations, polygons and the
//! weak-admissibility tests.
//!
//! All `t_N`/`t_H` values are normalized by `[K:L]`. A slope is `val_L` of an
//! eigenvalue of `φ^f`.

mod admissible;
mod filtration;
mod polygon;
mod steinberg;

pub use admissible::{
    admissible_by_inequalities, admissible_inequalities, build_admissible_filtration,
    destabilizing_subobject, stable_subobjects, weak_admissible, SUBOBJECT_LIMIT,
};
pub use filtration::{EmbeddingFiltration, Filtration};
pub use polygon::{polygon_dominates, Polygon};
pub use steinberg::{block_existence_criterion, block_polygons, combi_lemma, combi_lemma_frac, steinberg_filtration};

use crate::error::{Error, Result};
use crate::exactnum::{FieldData, Rat};

/// One eigenvalue of `φ^f`: its slope, algebraic multiplicity and the Jordan
/// partition of that multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeBlock {
    pub slope: Rat,
    pub multiplicity: usize,
    pub jordan: Vec<usize>,
}

impl SlopeBlock {
    pub fn semisimple(slope: Rat, multiplicity: usize) -> Self {
        SlopeBlock { slope, multiplicity, jordan: vec![1; multiplicity] }
    }

    /// A single Jordan block of size `multiplicity`.
    pub fn chain(slope: Rat, multiplicity: usize) -> Self {
        SlopeBlock { slope, multiplicity, jordan: vec![multiplicity] }
    }
}

/// `D = D_0 ⊕ D_0(1) ⊕ ⋯ ⊕ D_0(s)` with `N` mapping `D_0(n)` onto `D_0(n−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergData {
    pub d0_rank: usize,
    pub s: usize,
    pub base: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiModule {
    field: FieldData,
    blocks: Vec<SlopeBlock>,
    steinberg: Option<SteinbergData>,
}

impl PhiModule {
    /// Blocks are distinct eigenvalues (slopes may coincide); coordinates
    /// follow block order, and inside a block each Jordan part is a chain
    /// `c_1, …, c_m` with `c_1` an eigenvector.
    pub fn new(field: FieldData, blocks: Vec<SlopeBlock>) -> Result<Self> {
        for b in &blocks {
            if b.multiplicity == 0 {
                return Err(Error::Precondition("block of multiplicity zero".into()));
            }
            if b.jordan.iter().sum::<usize>() != b.multiplicity || b.jordan.contains(&0) {
                return Err(Error::Precondition(format!(
                    "Jordan partition {:?} does not partition {}",
                    b.jordan, b.multiplicity
                )));
            }
        }
        if blocks.is_empty() {
            return Err(Error::Precondition("a phi-module needs positive rank".into()));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.jordan.sort_by(|x, y| y.cmp(x));
        }
        Ok(PhiModule { field, blocks, steinberg: None })
    }

    /// Rank-one eigenvalues with the given slopes, pairwise distinct.
    pub fn from_slopes(field: FieldData, slopes: &[Rat]) -> Result<Self> {
        PhiModule::new(field, slopes.iter().map(|s| SlopeBlock::semisimple(s.clone(), 1)).collect())
    }

    /// The Steinberg-type module over `D_0` of rank `d0_rank` and slope
    /// `base`; `D_0(n)` has slope `base + n·[L:Q_p]` since `φ^f` is multiplied
    /// by `p^{nf}`.
    pub fn steinberg(field: FieldData, d0_rank: usize, s: usize, base: Rat) -> Result<Self> {
        if d0_rank == 0 {
            return Err(Error::Precondition("D_0 must have positive rank".into()));
        }
        let ef = field.degree_rat();
        let blocks = (0..=s)
            .map(|n| SlopeBlock::semisimple(&base + &ef * Rat::from(n), d0_rank))
            .collect();
        Ok(PhiModule { field, blocks, steinberg: Some(SteinbergData { d0_rank, s, base }) })
    }

    pub fn field(&self) -> &FieldData {
        &self.field
    }

    pub fn blocks(&self) -> &[SlopeBlock] {
        &self.blocks
    }

    pub fn steinberg_data(&self) -> Option<&SteinbergData> {
        self.steinberg.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.multiplicity).sum()
    }

    /// The slope of each coordinate, in coordinate order.
    pub fn coordinate_slopes(&self) -> Vec<Rat> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.slope.clone(), b.multiplicity))
            .collect()
    }

    /// All slopes with multiplicity, sorted nondecreasingly.
    pub fn sorted_slopes(&self) -> Vec<Rat> {
        let mut s = self.coordinate_slopes();
        s.sort();
        s
    }

    /// Normalized `t_N`: the sum of the slopes with multiplicity.
    pub fn t_n(&self) -> Rat {
        self.blocks.iter().map(|b| &b.slope * Rat::from(b.multiplicity)).sum()
    }

    pub fn newton_polygon(&self) -> Polygon {
        let slopes: Vec<(Rat, usize)> =
            self.blocks.iter().map(|b| (b.slope.clone(), b.multiplicity)).collect();
        Polygon::from_slopes(&slopes)
    }
}

/// Normalized `t_N` of a module.
pub fn t_n(d: &PhiModule) -> Rat {
    d.t_n()
}

/// Normalized `t_H = Σ_σ Σ_i i·dim gr^i`.
pub fn t_h(f: &Filtration) -> Rat {
    f.t_h()
}

pub fn newton_polygon(d: &PhiModule) -> Polygon {
    d.newton_polygon()
}

pub fn hodge_polygon(f: &Filtration) -> Result<Polygon> {
    f.hodge_polygon()
}

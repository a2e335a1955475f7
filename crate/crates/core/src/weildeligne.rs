//! Unramified Weil–Deligne data and the dictionary with φ-modules.
//!
//! Frobenius data are valuations `val_L` of eigenvalues of a geometric
//! Frobenius; under the dictionary they become the slopes of `φ^f`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{FieldData, Rat};
use crate::isocrystal::{PhiModule, SlopeBlock};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WdBlock {
    /// An eigenvalue of geometric Frobenius with `N = 0` on its generalized
    /// eigenspace.
    Frobenius { valuation: Rat, multiplicity: usize, jordan: Vec<usize> },
    /// An indecomposable Steinberg-type block: `length` copies of a piece of
    /// rank `piece_rank`, with Frobenius valuations `base + k·[L:Q_p]` and `N`
    /// shifting copy `k` onto copy `k − 1`.
    Chain { base: Rat, piece_rank: usize, length: usize },
}

impl WdBlock {
    pub fn dim(&self) -> usize {
        match self {
            WdBlock::Frobenius { multiplicity, .. } => *multiplicity,
            WdBlock::Chain { piece_rank, length, .. } => piece_rank * length,
        }
    }

    /// `Σ valuation · multiplicity` over the block.
    pub fn valuation_sum(&self, field: &FieldData) -> Rat {
        match self {
            WdBlock::Frobenius { valuation, multiplicity, .. } => valuation * Rat::from(*multiplicity),
            WdBlock::Chain { base, piece_rank, length } => {
                let l = *length as i64;
                let steps = field.degree_rat() * Rat::new(l * (l - 1), 2);
                (base * Rat::int(l) + steps) * Rat::from(*piece_rank)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WdRep {
    field: FieldData,
    blocks: Vec<WdBlock>,
}

impl WdRep {
    pub fn new(field: FieldData, blocks: Vec<WdBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Precondition("a Weil-Deligne representation needs positive dimension".into()));
        }
        for b in &blocks {
            match b {
                WdBlock::Frobenius { multiplicity, jordan, .. } => {
                    if *multiplicity == 0
                        || jordan.contains(&0)
                        || jordan.iter().sum::<usize>() != *multiplicity
                    {
                        return Err(Error::Precondition(format!(
                            "Jordan partition {jordan:?} does not partition {multiplicity}"
                        )));
                    }
                }
                WdBlock::Chain { piece_rank, length, .. } => {
                    if *piece_rank == 0 || *length < 2 {
                        return Err(Error::Precondition(
                            "a chain needs a piece of positive rank and length at least 2".into(),
                        ));
                    }
                }
            }
        }
        Ok(WdRep { field, blocks })
    }

    /// Semisimple Frobenius with one simple eigenvalue per valuation.
    pub fn unramified(field: FieldData, valuations: &[Rat]) -> Result<Self> {
        WdRep::new(
            field,
            valuations
                .iter()
                .map(|v| WdBlock::Frobenius { valuation: v.clone(), multiplicity: 1, jordan: vec![1] })
                .collect(),
        )
    }

    pub fn field(&self) -> &FieldData {
        &self.field
    }

    pub fn blocks(&self) -> &[WdBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(WdBlock::dim).sum()
    }

    /// `val_L det r(geometric Frobenius)`.
    pub fn det_valuation(&self) -> Rat {
        self.blocks.iter().map(|b| b.valuation_sum(&self.field)).sum()
    }

    /// Blocks sorted, Jordan partitions nonincreasing.
    pub fn canonical(&self) -> WdRep {
        let mut blocks: Vec<WdBlock> = self
            .blocks
            .iter()
            .cloned()
            .map(|b| match b {
                WdBlock::Frobenius { valuation, multiplicity, mut jordan } => {
                    jordan.sort_by(|a, b| b.cmp(a));
                    WdBlock::Frobenius { valuation, multiplicity, jordan }
                }
                chain => chain,
            })
            .collect();
        blocks.sort();
        WdRep { field: self.field, blocks }
    }

    pub fn has_chain(&self) -> bool {
        self.blocks.iter().any(|b| matches!(b, WdBlock::Chain { .. }))
    }
}

impl fmt::Display for WdBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WdBlock::Frobenius { valuation, multiplicity, jordan } => {
                let parts: Vec<String> = jordan.iter().map(|j| j.to_string()).collect();
                write!(f, "frobenius val={valuation} mult={multiplicity} jordan={}", parts.join(","))
            }
            WdBlock::Chain { base, piece_rank, length } => {
                write!(f, "chain base={base} rank={piece_rank} length={length}")
            }
        }
    }
}

/// The φ-module attached to an unramified `r`.
///
/// `D = ⊕_{n<f} V_n` with `φ: V_n → V_{n+1}` the identity for `n < f − 1`
/// and `V_{f−1} → V_0` a geometric Frobenius, so `φ^f` on each `V_n` is a
/// cyclic rotation of the same composite; its eigenvalue valuations are
/// accumulated along the cycle.
pub fn mod_of_wd(r: &WdRep) -> Result<PhiModule> {
    let field = *r.field();
    let chains = r.blocks.iter().filter(|b| matches!(b, WdBlock::Chain { .. })).count();
    if chains > 1 || (chains == 1 && r.blocks.len() > 1) {
        return Err(Error::Unsupported(
            "only a single indecomposable chain or an N = 0 representation can be transported".into(),
        ));
    }
    let f = field.f as usize;
    // valuation contributed by each step of the cycle, per Frobenius block
    let step = |n: usize, v: &Rat| if n + 1 == f { v.clone() } else { Rat::zero() };
    let around = |v: &Rat| -> Result<Rat> {
        let per_component: Vec<Rat> = (0..f)
            .map(|start| (0..f).map(|k| step((start + k) % f, v)).sum())
            .collect();
        if per_component.iter().any(|x| x != &per_component[0]) {
            return Err(Error::Precondition("phi^f differs across components".into()));
        }
        Ok(per_component[0].clone())
    };
    match &r.blocks[..] {
        [WdBlock::Chain { base, piece_rank, length }] => {
            PhiModule::steinberg(field, *piece_rank, length - 1, around(base)?)
        }
        blocks => {
            let out = blocks
                .iter()
                .map(|b| match b {
                    WdBlock::Frobenius { valuation, multiplicity, jordan } => Ok(SlopeBlock {
                        slope: around(valuation)?,
                        multiplicity: *multiplicity,
                        jordan: jordan.clone(),
                    }),
                    WdBlock::Chain { .. } => unreachable!("chains handled above"),
                })
                .collect::<Result<Vec<_>>>()?;
            PhiModule::new(field, out)
        }
    }
}

/// The Weil–Deligne representation of a φ-module, in canonical form.
pub fn wd_of_mod(d: &PhiModule) -> Result<WdRep> {
    let field = *d.field();
    let blocks = match d.steinberg_data() {
        Some(st) => vec![WdBlock::Chain { base: st.base.clone(), piece_rank: st.d0_rank, length: st.s + 1 }],
        None => d
            .blocks()
            .iter()
            .map(|b| WdBlock::Frobenius {
                valuation: b.slope.clone(),
                multiplicity: b.multiplicity,
                jordan: b.jordan.clone(),
            })
            .collect(),
    };
    Ok(WdRep::new(field, blocks)?.canonical())
}

/// Replaces every Jordan partition by all-ones parts; `N` is kept.
pub fn f_semisimplify(r: &WdRep) -> WdRep {
    let blocks = r
        .blocks
        .iter()
        .map(|b| match b {
            WdBlock::Frobenius { valuation, multiplicity, .. } => WdBlock::Frobenius {
                valuation: valuation.clone(),
                multiplicity: *multiplicity,
                jordan: vec![1; *multiplicity],
            },
            chain => chain.clone(),
        })
        .collect();
    WdRep { field: r.field, blocks }
}

/// `(t_N, dim)` of each indecomposable summand of the Frobenius
/// semisimplification, sorted.
pub type BlockDecomposition = Vec<(Rat, usize)>;

pub fn block_decompose(r: &WdRep) -> BlockDecomposition {
    let ss = f_semisimplify(r);
    let mut out: BlockDecomposition = Vec::new();
    for b in &ss.blocks {
        match b {
            WdBlock::Frobenius { valuation, multiplicity, .. } => {
                out.extend(std::iter::repeat_n((valuation.clone(), 1), *multiplicity));
            }
            chain @ WdBlock::Chain { .. } => out.push((chain.valuation_sum(&ss.field), chain.dim())),
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isocrystal::t_n;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn frob(v: i64, m: usize, jordan: Vec<usize>) -> WdBlock {
        WdBlock::Frobenius { valuation: r(v), multiplicity: m, jordan }
    }

    #[test]
    fn rank_one_and_chain_examples() {
        let l = FieldData::qp(3);
        let d = mod_of_wd(&WdRep::unramified(l, &[r(5)]).unwrap()).unwrap();
        assert_eq!(d.coordinate_slopes(), vec![r(5)]);
        let l2 = FieldData::new(3, 1, 2).unwrap();
        let d2 = mod_of_wd(&WdRep::unramified(l2, &[r(5)]).unwrap()).unwrap();
        assert_eq!(d2.coordinate_slopes(), vec![r(5)]);
        let chain = WdRep::new(l, vec![WdBlock::Chain { base: r(2), piece_rank: 1, length: 2 }]).unwrap();
        let st = mod_of_wd(&chain).unwrap();
        assert_eq!(st.coordinate_slopes(), vec![r(2), r(3)]);
        assert_eq!(wd_of_mod(&st).unwrap(), chain);
        assert_eq!(wd_of_mod(&d).unwrap(), WdRep::unramified(l, &[r(5)]).unwrap());
    }

    #[test]
    fn round_trip_and_t_n() {
        let l = FieldData::new(2, 1, 3).unwrap();
        let rep = WdRep::new(l, vec![frob(3, 2, vec![2]), frob(-1, 1, vec![1]), frob(3, 3, vec![1, 2])]).unwrap();
        let d = mod_of_wd(&rep).unwrap();
        assert_eq!(wd_of_mod(&d).unwrap(), rep.canonical());
        assert_eq!(t_n(&d), rep.det_valuation());
    }

    #[test]
    fn semisimplification() {
        let l = FieldData::qp(2);
        let rep = WdRep::new(l, vec![frob(1, 2, vec![2])]).unwrap();
        let ss = f_semisimplify(&rep);
        assert_eq!(ss.blocks()[0], frob(1, 2, vec![1, 1]));
        assert_eq!(f_semisimplify(&ss), ss);
        assert_eq!(block_decompose(&rep), block_decompose(&ss));
    }

    #[test]
    fn decomposition_examples() {
        let l = FieldData::qp(5);
        let two = WdRep::unramified(l, &[r(2), r(0)]).unwrap();
        assert_eq!(block_decompose(&two), vec![(r(0), 1), (r(2), 1)]);
        let v = Rat::new(1, 3);
        let st = WdRep::new(l, vec![WdBlock::Chain { base: v.clone(), piece_rank: 1, length: 2 }]).unwrap();
        assert_eq!(block_decompose(&st), vec![(v * r(2) + r(1), 2)]);
    }

    #[test]
    fn mixed_data_is_not_transported() {
        let l = FieldData::qp(5);
        let mixed = WdRep::new(
            l,
            vec![WdBlock::Chain { base: r(0), piece_rank: 1, length: 2 }, frob(4, 1, vec![1])],
        )
        .unwrap();
        assert!(matches!(mod_of_wd(&mixed), Err(Error::Unsupported(_))));
        assert_eq!(block_decompose(&mixed).iter().map(|b| b.1).sum::<usize>(), 3);
    }
}

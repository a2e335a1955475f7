use super::{Filtration, PhiModule};
use crate::error::{Error, Result};
use crate::exactnum::linalg::Matrix;
use crate::exactnum::Rat;
use crate::ineq::{all_hold, Inequality};

/// Largest number of φ-stable coordinate subspaces the oracle enumerates.
pub const SUBOBJECT_LIMIT: usize = 1 << 12;

fn check_shapes(d: &PhiModule, f: &Filtration) -> Result<()> {
    if f.embeddings() != d.field().embeddings() {
        return Err(Error::DimensionMismatch(format!(
            "filtration has {} embeddings but [L:Q_p] = {}",
            f.embeddings(),
            d.field().embeddings()
        )));
    }
    let n = f.dim()?;
    if n != d.rank() {
        return Err(Error::DimensionMismatch(format!(
            "filtration of dimension {n} on a module of rank {}",
            d.rank()
        )));
    }
    Ok(())
}

/// The partial-sum inequalities `Σ_{j≤i} Σ_σ i_{j,σ} ≤ (sum of the i smallest
/// slopes)`, with equality for `i = n`.
pub fn admissible_inequalities(d: &PhiModule, jumps: &Filtration) -> Result<Vec<Inequality>> {
    if d.steinberg_data().is_some() {
        return Err(Error::Precondition("inequality test applies to modules with N = 0".into()));
    }
    check_shapes(d, jumps)?;
    let sums = jumps.index_sums()?;
    let slopes = d.sorted_slopes();
    let n = sums.len();
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        lhs += &sums[i];
        rhs += &slopes[i];
        let label = format!("partial sum {}", i + 1);
        out.push(if i + 1 == n {
            Inequality::eq(label, lhs.clone(), rhs.clone())
        } else {
            Inequality::le(label, lhs.clone(), rhs.clone())
        });
    }
    Ok(out)
}

pub fn admissible_by_inequalities(d: &PhiModule, jumps: &Filtration) -> Result<bool> {
    Ok(all_hold(&admissible_inequalities(d, jumps)?))
}

/// All φ- and N-stable coordinate subspaces, as coordinate lists (the zero
/// subspace included).
///
/// Supported: Steinberg modules (the chain `D_0 ⊕ ⋯ ⊕ D_0(n)`), and `N = 0`
/// modules in which every eigenvalue is simple or carries a single Jordan
/// block (then the stable subspaces are products of initial segments).
pub fn stable_subobjects(d: &PhiModule) -> Result<Vec<Vec<usize>>> {
    if let Some(st) = d.steinberg_data() {
        return Ok((0..=st.s + 1).map(|m| (0..m * st.d0_rank).collect()).collect());
    }
    let mut offsets = Vec::with_capacity(d.blocks().len());
    let mut count = 1usize;
    let mut start = 0;
    for b in d.blocks() {
        if b.multiplicity > 1 && b.jordan.len() > 1 {
            return Err(Error::Unsupported(format!(
                "eigenvalue of slope {} has multiplicity {} without a single Jordan block; \
                 its stable subspaces form a positive-dimensional family",
                b.slope, b.multiplicity
            )));
        }
        offsets.push((start, b.multiplicity));
        start += b.multiplicity;
        count = count.saturating_mul(b.multiplicity + 1);
    }
    if count > SUBOBJECT_LIMIT {
        return Err(Error::Unsupported(format!(
            "{count} stable subspaces exceed the enumeration limit of {SUBOBJECT_LIMIT}"
        )));
    }
    let mut out = vec![Vec::new()];
    for (start, m) in offsets {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for base in &out {
            for len in 0..=m {
                let mut s: Vec<usize> = base.clone();
                s.extend(start..start + len);
                next.push(s);
            }
        }
        out = next;
    }
    Ok(out)
}

/// A stable subspace violating `t_H ≤ t_N` (or the whole module when
/// `t_H ≠ t_N`), if any. Requires explicit flags.
pub fn destabilizing_subobject(d: &PhiModule, f: &Filtration) -> Result<Option<Vec<usize>>> {
    check_shapes(d, f)?;
    if !f.has_flags() {
        return Err(Error::Precondition("weak admissibility needs explicit flags".into()));
    }
    let n = d.rank();
    if f.t_h() != d.t_n() {
        return Ok(Some((0..n).collect()));
    }
    let slopes = d.coordinate_slopes();
    for sub in stable_subobjects(d)? {
        if sub.is_empty() || sub.len() == n {
            continue;
        }
        let t_n: Rat = sub.iter().map(|&c| &slopes[c]).sum();
        if f.induced_t_h(&sub)? > t_n {
            return Ok(Some(sub));
        }
    }
    Ok(None)
}

/// `t_H = t_N` and `t_H(D') ≤ t_N(D')` for every enumerated stable `D'`.
pub fn weak_admissible(d: &PhiModule, f: &Filtration) -> Result<bool> {
    Ok(destabilizing_subobject(d, f)?.is_none())
}

/// The filtration with jumps `jumps` and flag
/// `f_j = c_j + Σ_{k<j} x_j^k c_k`, `x_j = j`, where `c_1, c_2, …` are the
/// coordinates ordered by nondecreasing slope. The same flag is used for
/// every embedding.
pub fn build_admissible_filtration(d: &PhiModule, jumps: &Filtration) -> Result<Filtration> {
    let ineqs = admissible_inequalities(d, jumps)?;
    if let Some(bad) = ineqs.iter().find(|i| !i.holds()) {
        return Err(Error::Precondition(format!("inequalities fail: {bad}")));
    }
    let n = d.rank();
    let slopes = d.coordinate_slopes();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| slopes[a].cmp(&slopes[b]));
    let flag: Matrix = (1..=n)
        .map(|j| {
            let mut v = vec![Rat::zero(); n];
            v[order[j - 1]] = Rat::one();
            let x = Rat::from(j);
            for k in 1..j {
                v[order[k - 1]] = x.pow(k as i64);
            }
            v
        })
        .collect();
    jumps.with_flags(vec![flag; jumps.embeddings()])
}

#[cfg(test)]
mod tests {
    use super::super::SlopeBlock;
    use super::*;
    use crate::exactnum::FieldData;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn gl2_module(slopes: [i64; 2]) -> PhiModule {
        PhiModule::from_slopes(FieldData::qp(5), &[r(slopes[0]), r(slopes[1])]).unwrap()
    }

    #[test]
    fn inequality_examples() {
        let jumps = Filtration::from_jumps(&[vec![r(-2), r(0)]]).unwrap();
        // zeta valuations (0, 2) give slopes (0, -2)
        assert!(admissible_by_inequalities(&gl2_module([0, -2]), &jumps).unwrap());
        assert!(!admissible_by_inequalities(&gl2_module([1, -3]), &jumps).unwrap());
        let one = PhiModule::from_slopes(FieldData::qp(5), &[Rat::half(3)]).unwrap();
        let c = Filtration::from_jumps(&[vec![Rat::half(3)]]).unwrap();
        assert!(admissible_by_inequalities(&one, &c).unwrap());
    }

    #[test]
    fn weak_admissibility_examples() {
        let d = gl2_module([0, 2]);
        // Fil^0 = D, Fil^2 = span(f_2)
        let with_line = |f1: [i64; 2], f2: [i64; 2]| {
            Filtration::from_jumps(&[vec![r(0), r(2)]])
                .unwrap()
                .with_flags(vec![vec![vec![r(f1[0]), r(f1[1])], vec![r(f2[0]), r(f2[1])]]])
                .unwrap()
        };
        assert!(weak_admissible(&d, &with_line([1, 0], [1, 1])).unwrap());
        let eigenline = with_line([0, 1], [1, 0]);
        assert!(!weak_admissible(&d, &eigenline).unwrap());
        assert_eq!(destabilizing_subobject(&d, &eigenline).unwrap(), Some(vec![0]));
    }

    #[test]
    fn rank_one_needs_equal_jump() {
        let d = PhiModule::from_slopes(FieldData::qp(3), &[r(4)]).unwrap();
        let flag = vec![vec![vec![r(1)]]];
        let ok = Filtration::from_jumps(&[vec![r(4)]]).unwrap().with_flags(flag.clone()).unwrap();
        let no = Filtration::from_jumps(&[vec![r(3)]]).unwrap().with_flags(flag).unwrap();
        assert!(weak_admissible(&d, &ok).unwrap());
        assert!(!weak_admissible(&d, &no).unwrap());
    }

    #[test]
    fn construction_passes_oracle() {
        let d = gl2_module([0, -2]);
        let jumps = Filtration::from_jumps(&[vec![r(-2), r(0)]]).unwrap();
        let f = build_admissible_filtration(&d, &jumps).unwrap();
        assert!(weak_admissible(&d, &f).unwrap());
        let bad = Filtration::from_jumps(&[vec![r(-1), r(-1)]]).unwrap();
        assert!(build_admissible_filtration(&gl2_module([0, -2]), &bad).is_err());
    }

    #[test]
    fn jordan_chains_are_supported() {
        let l = FieldData::qp(2);
        let d = PhiModule::new(l, vec![SlopeBlock::chain(r(1), 3), SlopeBlock::semisimple(r(0), 1)]).unwrap();
        assert_eq!(stable_subobjects(&d).unwrap().len(), 8);
        let jumps = Filtration::from_jumps(&[vec![r(0), r(1), r(1), r(1)]]).unwrap();
        let f = build_admissible_filtration(&d, &jumps).unwrap();
        assert!(weak_admissible(&d, &f).unwrap());
        let repeated = PhiModule::new(l, vec![SlopeBlock::semisimple(r(1), 2)]).unwrap();
        assert!(matches!(stable_subobjects(&repeated), Err(Error::Unsupported(_))));
    }
}

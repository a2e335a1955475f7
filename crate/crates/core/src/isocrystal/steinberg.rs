use super::{polygon_dominates, Filtration, PhiModule, Polygon};
use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// The chain filtration on a Steinberg module: with coordinates ordered
/// `D_0, D_0(1), …, D_0(s)`, `Fil^{i_m} = span(e_m, …, e_n)` for every
/// embedding, so that `Fil^{i_{j(d_0+1)+1}} = D_0(j) ⊕ ⋯ ⊕ D_0(s)`.
pub fn steinberg_filtration(d: &PhiModule, jumps: &Filtration) -> Result<Filtration> {
    if d.steinberg_data().is_none() {
        return Err(Error::Precondition("module has no Steinberg structure".into()));
    }
    let n = jumps.dim()?;
    if n != d.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{n} jumps per embedding for a Steinberg module of rank {}",
            d.rank()
        )));
    }
    if jumps.embeddings() != d.field().embeddings() {
        return Err(Error::DimensionMismatch(format!(
            "{} embeddings given but [L:Q_p] = {}",
            jumps.embeddings(),
            d.field().embeddings()
        )));
    }
    let identity: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    jumps.with_flags(vec![identity; jumps.embeddings()])
}

/// Checks the hypotheses `i_{n−1} + h ≤ i_n` and
/// `i_0 + ⋯ + i_s ≤ (s+1)c + h(1 + ⋯ + s)`, and the conclusions
/// `i_0 + ⋯ + i_n ≤ (n+1)c + h(1 + ⋯ + n)` for all `0 ≤ n ≤ s`.
pub fn combi_lemma(s: usize, h: i64, c: &Rat, i: &[i64]) -> (bool, bool) {
    let cn = c.numer().try_into().expect("numerator fits in i64");
    let cd = c.denom().try_into().expect("denominator fits in i64");
    combi_lemma_frac(s, h, cn, cd, i)
}

/// `combi_lemma` with `c = c_num / c_den` (`c_den > 0`), in machine integers.
pub fn combi_lemma_frac(s: usize, h: i64, c_num: i64, c_den: i64, i: &[i64]) -> (bool, bool) {
    assert_eq!(i.len(), s + 1, "need i_0, …, i_s");
    assert!(c_den > 0);
    let (h, cn, cd) = (h as i128, c_num as i128, c_den as i128);
    // D·(i_0 + ⋯ + i_n) ≤ (n+1)·c_num + D·h·n(n+1)/2
    let bound = |n: i128| (n + 1) * cn + cd * h * n * (n + 1) / 2;
    let gaps_ok = i.windows(2).all(|w| w[0] as i128 + h <= w[1] as i128);
    let mut partial = Vec::with_capacity(i.len());
    let mut acc = 0i128;
    for &x in i {
        acc += x as i128;
        partial.push(acc);
    }
    let total_ok = cd * partial[s] <= bound(s as i128);
    let conclusions = partial.iter().enumerate().all(|(n, &p)| cd * p <= bound(n as i128));
    (gaps_ok && total_ok, conclusions)
}

/// The block polygons: through `(d_1 + ⋯ + d_k, t_{N,1} + ⋯ + t_{N,k})` after
/// ordering blocks by increasing `t_N` (and decreasing dimension among
/// equal `t_N`), and the Hodge polygon sampled at the same abscissae.
pub fn block_polygons(blocks: &[(Rat, usize)], jumps: &Filtration) -> Result<(Polygon, Polygon)> {
    if blocks.is_empty() {
        return Err(Error::Precondition("block list is empty".into()));
    }
    if blocks.iter().any(|(_, d)| *d == 0) {
        return Err(Error::Precondition("blocks must have positive dimension".into()));
    }
    let sums = jumps.index_sums()?;
    let total: usize = blocks.iter().map(|(_, d)| d).sum();
    if total != sums.len() {
        return Err(Error::DimensionMismatch(format!(
            "blocks of total dimension {total} but {} jumps per embedding",
            sums.len()
        )));
    }
    let mut sorted = blocks.to_vec();
    sorted.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut newton = vec![(Rat::zero(), Rat::zero())];
    let mut hodge = vec![(Rat::zero(), Rat::zero())];
    let (mut x, mut tn) = (0usize, Rat::zero());
    let mut th = Rat::zero();
    for (t, d) in &sorted {
        th += sums[x..x + d].iter().sum::<Rat>();
        x += d;
        tn += t;
        newton.push((Rat::from(x), tn.clone()));
        hodge.push((Rat::from(x), th.clone()));
    }
    Ok((Polygon::from_points(newton)?, Polygon::from_points(hodge)?))
}

/// Existence of an admissible filtration on a direct sum of indecomposable
/// blocks `(t_N, dim)`: the block Hodge polygon lies under the block Newton
/// polygon with equal endpoints.
pub fn block_existence_criterion(blocks: &[(Rat, usize)], jumps: &Filtration) -> Result<bool> {
    let (newton, hodge) = block_polygons(blocks, jumps)?;
    polygon_dominates(&newton, &hodge)
}

#[cfg(test)]
mod tests {
    use super::super::{admissible_by_inequalities, weak_admissible};
    use super::*;
    use crate::exactnum::FieldData;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn chain_filtration_shape() {
        let l = FieldData::qp(3);
        let d = PhiModule::steinberg(l, 1, 1, r(0)).unwrap();
        let f = steinberg_filtration(&d, &Filtration::from_jumps(&[vec![r(0), r(1)]]).unwrap()).unwrap();
        let steps = f.per_embedding()[0].steps().unwrap();
        assert_eq!(steps[0].len(), 2);
        assert_eq!(steps[1], vec![vec![r(0), r(1)]]);
        // the subobject D_0 sees only the lowest jump
        assert_eq!(f.induced_t_h(&[0]).unwrap(), r(0));
        assert!(weak_admissible(&d, &f).unwrap());
    }

    #[test]
    fn central_equality_decides_steinberg_case() {
        let l = FieldData::qp(5);
        let d = PhiModule::steinberg(l, 2, 2, Rat::half(-3)).unwrap();
        let t_n = d.t_n();
        assert_eq!(t_n, r(-9) + r(2) * r(3));
        let good: Vec<Rat> = vec![r(-4), r(-3), r(-1), r(0), r(2), r(3)];
        assert_eq!(good.iter().sum::<Rat>(), t_n);
        let f = steinberg_filtration(&d, &Filtration::from_jumps(&[good]).unwrap()).unwrap();
        assert!(weak_admissible(&d, &f).unwrap());
        let off = vec![r(-4), r(-3), r(-1), r(0), r(2), r(4)];
        let g = steinberg_filtration(&d, &Filtration::from_jumps(&[off]).unwrap()).unwrap();
        assert!(!weak_admissible(&d, &g).unwrap());
    }

    // With jumps spaced by 1/2 the gap hypothesis of the lemma fails, and so
    // can admissibility: D_0 of slope -1/4, jumps 0 < 1/2.
    #[test]
    fn half_spaced_jumps_can_fail() {
        let l = FieldData::qp(3);
        let d = PhiModule::steinberg(l, 1, 1, Rat::new(-1, 4)).unwrap();
        let jumps = vec![r(0), Rat::half(1)];
        assert_eq!(jumps.iter().sum::<Rat>(), d.t_n());
        let f = steinberg_filtration(&d, &Filtration::from_jumps(&[jumps]).unwrap()).unwrap();
        assert!(!weak_admissible(&d, &f).unwrap());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(combi_lemma(1, 1, &r(0), &[-1, 1]), (true, true));
        for i0 in -5..=5 {
            let (hyp, concl) = combi_lemma(0, 2, &Rat::half(3), &[i0]);
            assert_eq!(hyp, concl);
        }
        assert!(!combi_lemma(1, 1, &r(0), &[1, 1]).0);
    }

    #[test]
    fn block_criterion_examples() {
        let jumps = Filtration::from_jumps(&[vec![r(-2), r(0)]]).unwrap();
        assert!(block_existence_criterion(&[(r(-2), 1), (r(0), 1)], &jumps).unwrap());
        assert!(block_existence_criterion(&[(r(0), 1), (r(-2), 1)], &jumps).unwrap());
        let single = Filtration::from_jumps(&[vec![r(1), r(2)]]).unwrap();
        assert!(block_existence_criterion(&[(r(3), 2)], &single).unwrap());
        assert!(!block_existence_criterion(&[(r(4), 2)], &single).unwrap());
        assert!(block_existence_criterion(&[(r(3), 3)], &single).is_err());
        // agrees with the inequality test on distinct slopes
        let d = PhiModule::from_slopes(FieldData::qp(2), &[r(1), r(-3)]).unwrap();
        assert_eq!(
            block_existence_criterion(&[(r(1), 1), (r(-3), 1)], &jumps).unwrap(),
            admissible_by_inequalities(&d, &jumps).unwrap()
        );
    }
}

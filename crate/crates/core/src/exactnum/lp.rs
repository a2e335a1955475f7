//! Exact feasibility of `A x = b, x ≥ 0` by phase-one simplex.

use super::linalg::Matrix;
use super::Rat;
use crate::error::{Error, Result};

/// Returns a non-negative solution of `A x = b`, or `None` when none exists.
///
/// Phase one of the simplex method on the auxiliary problem minimizing the
/// sum of artificial variables, with Bland's rule so that it terminates.
pub fn feasible_point(a: &Matrix, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "LP has {m} constraints but right-hand side of length {}",
            b.len()
        )));
    }
    let n = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("ragged constraint matrix".into()));
    }
    let width = n + m;
    // tableau rows: [A | I | b], rows negated so that b >= 0
    let mut t: Matrix = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: Vec<Rat> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        r.push(if flip { -bi } else { bi.clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..width).collect();
    let mut obj: Vec<Rat> = (0..=width)
        .map(|j| if (n..width).contains(&j) { Rat::zero() } else { t.iter().map(|r| &r[j]).sum() })
        .collect();

    loop {
        let Some(enter) = (0..width).find(|&j| obj[j].is_positive()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width] / &t[i][enter];
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = &t[l][width] / &t[l][enter];
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(pr) = leave else {
            // unbounded descent is impossible for a sum of non-negative variables
            unreachable!("phase-one objective is bounded below");
        };
        pivot(&mut t, &mut obj, pr, enter);
        basis[pr] = enter;
    }

    if !obj[width].is_zero() {
        return Ok(None);
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = t[i][width].clone();
        }
    }
    Ok(Some(x))
}

fn pivot(t: &mut Matrix, obj: &mut [Rat], pr: usize, pc: usize) {
    let inv = t[pr][pc].recip();
    for x in t[pr].iter_mut() {
        *x *= &inv;
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let factor = row[pc].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &(&factor * p);
            }
        }
    }
    let factor = obj[pc].clone();
    if !factor.is_zero() {
        for (x, p) in obj.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &(&factor * p);
            }
        }
    }
}

/// Whether `z` is a convex combination of `points`.
pub fn in_convex_hull(points: &[Vec<Rat>], z: &[Rat]) -> Result<bool> {
    if points.is_empty() {
        return Ok(false);
    }
    let dim = z.len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch("hull vertices and query differ in length".into()));
    }
    let mut a: Matrix = (0..dim).map(|k| points.iter().map(|p| p[k].clone()).collect()).collect();
    a.push(vec![Rat::one(); points.len()]);
    let mut b = z.to_vec();
    b.push(Rat::one());
    Ok(feasible_point(&a, &b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::linalg::{from_ints, mat_vec};
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn simple_feasibility() {
        let a = from_ints(&[vec![1, 1]]);
        let x = feasible_point(&a, &[r(3)]).unwrap().unwrap();
        assert_eq!(mat_vec(&a, &x), vec![r(3)]);
        assert!(feasible_point(&a, &[r(-1)]).unwrap().is_none());
    }

    #[test]
    fn hull_of_segment() {
        let pts = vec![vec![r(0), r(0)], vec![r(2), r(2)]];
        assert!(in_convex_hull(&pts, &[r(1), r(1)]).unwrap());
        assert!(!in_convex_hull(&pts, &[r(1), r(0)]).unwrap());
        assert!(!in_convex_hull(&pts, &[r(3), r(3)]).unwrap());
    }

    #[test]
    fn degenerate_vertex_set() {
        let pts = vec![vec![r(1)], vec![r(1)], vec![r(1)]];
        assert!(in_convex_hull(&pts, &[r(1)]).unwrap());
        assert!(!in_convex_hull(&pts, &[Rat::new(1, 2)]).unwrap());
    }

    proptest! {
        // in dimension one the hull is the interval [min, max]
        #[test]
        fn one_dimensional_hull(
            pts in proptest::collection::vec(-10i64..10, 1..6),
            z in -12i64..12,
            d in 1i64..4,
        ) {
            let zr = Rat::new(z, d);
            let lo = Rat::int(*pts.iter().min().unwrap());
            let hi = Rat::int(*pts.iter().max().unwrap());
            let vs: Vec<Vec<Rat>> = pts.iter().map(|&p| vec![r(p)]).collect();
            prop_assert_eq!(in_convex_hull(&vs, std::slice::from_ref(&zr)).unwrap(), lo <= zr && zr <= hi);
        }
    }
}

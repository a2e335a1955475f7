use super::Rat;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
pub type Matrix = Vec<Vec<Rat>>;

fn check_rect(a: &Matrix) -> Result<usize> {
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != cols) {
        return Err(Error::DimensionMismatch("ragged matrix rows".into()));
    }
    Ok(cols)
}

/// Reduces `a` in place to reduced row echelon form and returns the pivot
/// columns in order.
pub fn rref(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &a[r][j];
                    a[i][j] -= &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

/// Solves `A x = b` exactly. Returns `Ok(None)` when the system is
/// inconsistent; free variables are set to zero.
pub fn rat_linear_solve(a: &Matrix, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let cols = check_rect(a)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has length {}",
            a.len(),
            b.len()
        )));
    }
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

/// Basis of the null space `{x : A x = 0}` for a matrix with `cols` columns.
pub fn kernel(a: &Matrix, cols: usize) -> Vec<Vec<Rat>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); cols];
            v[fc] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][fc];
            }
            v
        })
        .collect()
}

pub fn transpose(a: &Matrix, cols: usize) -> Matrix {
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn dot(x: &[Rat], y: &[Rat]) -> Rat {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn mat_vec(a: &Matrix, x: &[Rat]) -> Vec<Rat> {
    a.iter().map(|row| dot(row, x)).collect()
}

/// Dimension of the intersection of the row spans of `u` and `v`
/// (both spanning subspaces of a space of dimension `n`).
pub fn intersection_dim(u: &Matrix, v: &Matrix) -> usize {
    let mut both = u.clone();
    both.extend(v.iter().cloned());
    rank(u) + rank(v) - rank(&both)
}

/// Converts an integer matrix to rationals.
pub fn from_ints(a: &[Vec<i64>]) -> Matrix {
    a.iter().map(|row| row.iter().map(|&x| Rat::int(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn solve_examples() {
        let id = from_ints(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(rat_linear_solve(&id, &[r(1), r(2)]).unwrap(), Some(vec![r(1), r(2)]));
        let sing = from_ints(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(rat_linear_solve(&sing, &[r(0), r(1)]).unwrap(), None);
        let diag = from_ints(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(
            rat_linear_solve(&diag, &[r(1), r(1)]).unwrap(),
            Some(vec![Rat::new(1, 2), Rat::new(1, 3)])
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let id = from_ints(&[vec![1, 0], vec![0, 1]]);
        assert!(rat_linear_solve(&id, &[r(1)]).is_err());
        let ragged = vec![vec![r(1)], vec![r(1), r(2)]];
        assert!(rat_linear_solve(&ragged, &[r(1), r(1)]).is_err());
    }

    #[test]
    fn kernel_and_intersection() {
        let a = from_ints(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(Rat::is_zero));
        let u = from_ints(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let v = from_ints(&[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(intersection_dim(&u, &v), 1);
    }

    proptest! {
        #[test]
        fn solutions_satisfy_the_system(
            entries in proptest::collection::vec(-5i64..6, 12),
            x in proptest::collection::vec(-5i64..6, 4),
        ) {
            let a: Matrix = entries.chunks(4).map(|c| c.iter().map(|&v| r(v)).collect()).collect();
            let x: Vec<Rat> = x.into_iter().map(r).collect();
            let b = mat_vec(&a, &x);
            let sol = rat_linear_solve(&a, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(mat_vec(&a, &sol), b);
        }
    }
}

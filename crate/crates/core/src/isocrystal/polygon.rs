use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// A piecewise-linear function on `[0, width]` starting at `(0,0)`, given by
/// its vertices; collinear interior points are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<(Rat, Rat)>,
}

impl Polygon {
    /// From points with strictly increasing `x`, the first being `(0,0)`.
    pub fn from_points(points: Vec<(Rat, Rat)>) -> Result<Self> {
        match points.first() {
            Some((x, y)) if x.is_zero() && y.is_zero() => {}
            _ => return Err(Error::Precondition("polygon must start at (0,0)".into())),
        }
        if points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::Precondition("polygon x-coordinates must increase strictly".into()));
        }
        let mut vertices: Vec<(Rat, Rat)> = Vec::with_capacity(points.len());
        for p in points {
            if vertices.len() >= 2 {
                let (x0, y0) = &vertices[vertices.len() - 2];
                let (x1, y1) = &vertices[vertices.len() - 1];
                let s01 = (y1 - y0) / (x1 - x0);
                let s1p = (&p.1 - y1) / (&p.0 - x1);
                if s01 == s1p {
                    vertices.pop();
                }
            }
            vertices.push(p);
        }
        Ok(Polygon { vertices })
    }

    /// The lower convex polygon with the given slopes (each with its
    /// horizontal width), sorted nondecreasingly.
    pub fn from_slopes(slopes: &[(Rat, usize)]) -> Self {
        let mut sorted: Vec<&(Rat, usize)> = slopes.iter().filter(|(_, w)| *w > 0).collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        let mut pts = vec![(Rat::zero(), Rat::zero())];
        for (s, w) in sorted {
            let (x, y) = pts.last().unwrap().clone();
            let w = Rat::from(*w);
            pts.push((&x + &w, y + s * &w));
        }
        Polygon::from_points(pts).expect("widths are positive")
    }

    /// The polygon through `(k, Σ_{j≤k} v_j)`.
    pub fn from_partial_sums(values: &[Rat]) -> Self {
        let mut pts = vec![(Rat::zero(), Rat::zero())];
        let mut acc = Rat::zero();
        for (k, v) in values.iter().enumerate() {
            acc += v;
            pts.push((Rat::from(k + 1), acc.clone()));
        }
        Polygon::from_points(pts).expect("unit steps")
    }

    pub fn vertices(&self) -> &[(Rat, Rat)] {
        &self.vertices
    }

    pub fn width(&self) -> Rat {
        self.vertices.last().unwrap().0.clone()
    }

    pub fn end_value(&self) -> Rat {
        self.vertices.last().unwrap().1.clone()
    }

    /// The value at `x ∈ [0, width]` by linear interpolation.
    pub fn value_at(&self, x: &Rat) -> Rat {
        let v = &self.vertices;
        if v.len() == 1 {
            return v[0].1.clone();
        }
        let k = v.partition_point(|(vx, _)| vx < x).clamp(1, v.len() - 1);
        let (x0, y0) = &v[k - 1];
        let (x1, y1) = &v[k];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    pub fn slopes(&self) -> Vec<Rat> {
        self.vertices.windows(2).map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0)).collect()
    }

    pub fn is_lower_convex(&self) -> bool {
        self.slopes().windows(2).all(|s| s[0] <= s[1])
    }

    /// One `x y` line per vertex.
    pub fn vertex_table(&self) -> String {
        let mut out = String::new();
        for (x, y) in &self.vertices {
            let _ = writeln!(out, "{x} {y}");
        }
        out
    }
}

/// `hodge` lies on or below `newton` at every breakpoint, with equal endpoints.
pub fn polygon_dominates(newton: &Polygon, hodge: &Polygon) -> Result<bool> {
    if newton.width() != hodge.width() {
        return Err(Error::DimensionMismatch(format!(
            "polygons of widths {} and {}",
            newton.width(),
            hodge.width()
        )));
    }
    if newton.end_value() != hodge.end_value() {
        return Ok(false);
    }
    let xs = newton.vertices.iter().chain(&hodge.vertices).map(|(x, _)| x);
    Ok(xs.into_iter().all(|x| hodge.value_at(x) <= newton.value_at(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn pts(p: &Polygon) -> Vec<(Rat, Rat)> {
        p.vertices().to_vec()
    }

    #[test]
    fn newton_examples() {
        let p = Polygon::from_slopes(&[(r(1), 1), (r(0), 1)]);
        assert_eq!(pts(&p), vec![(r(0), r(0)), (r(1), r(0)), (r(2), r(1))]);
        let half = Polygon::from_slopes(&[(Rat::half(1), 1), (Rat::half(1), 1)]);
        assert_eq!(pts(&half), vec![(r(0), r(0)), (r(2), r(1))]);
        assert_eq!(half.value_at(&r(1)), Rat::half(1));
        let h = Polygon::from_partial_sums(&[r(-2), r(0)]);
        assert_eq!(pts(&h), vec![(r(0), r(0)), (r(1), r(-2)), (r(2), r(-2))]);
    }

    #[test]
    fn dominance_examples() {
        let n01 = Polygon::from_slopes(&[(r(0), 1), (r(1), 1)]);
        let nhalf = Polygon::from_slopes(&[(Rat::half(1), 2)]);
        assert!(polygon_dominates(&n01, &n01).unwrap());
        assert!(polygon_dominates(&nhalf, &n01).unwrap());
        assert!(!polygon_dominates(&n01, &nhalf).unwrap());
        let wide = Polygon::from_slopes(&[(r(0), 3)]);
        assert!(polygon_dominates(&n01, &wide).is_err());
    }

    #[test]
    fn rejects_bad_points() {
        assert!(Polygon::from_points(vec![(r(1), r(0))]).is_err());
        assert!(Polygon::from_points(vec![(r(0), r(0)), (r(0), r(1))]).is_err());
    }

    #[test]
    fn non_convex_point_lists_are_kept() {
        let p = Polygon::from_points(vec![(r(0), r(0)), (r(1), r(2)), (r(2), r(2))]).unwrap();
        assert!(!p.is_lower_convex());
        assert_eq!(p.vertex_table(), "0 0\n1 2\n2 2\n");
    }
}

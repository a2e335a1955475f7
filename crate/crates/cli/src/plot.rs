//! SVG rendering of a Newton/Hodge polygon pair.

use std::fmt::Write as _;

use bsc_core::exactnum::Rat;
use bsc_core::isocrystal::Polygon;

use crate::report::PolygonPair;

const WIDTH: f64 = 520.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;

struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn new(polys: &[&Polygon]) -> Self {
        let pts: Vec<(f64, f64)> =
            polys.iter().flat_map(|p| p.vertices().iter().map(|(x, y)| (x.to_f64(), y.to_f64()))).collect();
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for (x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let sx = (WIDTH - 2.0 * MARGIN) / (x1 - x0).max(1.0);
        let sy = (HEIGHT - 2.0 * MARGIN) / (y1 - y0).max(1.0);
        Frame { x0, y0: y1, sx, sy }
    }

    fn map(&self, x: &Rat, y: &Rat) -> (f64, f64) {
        (MARGIN + (x.to_f64() - self.x0) * self.sx, MARGIN + (self.y0 - y.to_f64()) * self.sy)
    }
}

fn polyline(out: &mut String, frame: &Frame, p: &Polygon, color: &str, label_dy: f64) {
    let pts: Vec<String> = p
        .vertices()
        .iter()
        .map(|(x, y)| {
            let (u, v) = frame.map(x, y);
            format!("{u:.2},{v:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
        pts.join(" ")
    );
    for (x, y) in p.vertices() {
        let (u, v) = frame.map(x, y);
        let _ = writeln!(out, r#"<circle cx="{u:.2}" cy="{v:.2}" r="3" fill="{color}"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" fill="{color}">({x}, {y})</text>"#,
            u + 5.0,
            v + label_dy
        );
    }
}

/// Both polygons with exact vertex labels; Newton in blue, Hodge in red.
pub fn render_svg(pair: &PolygonPair) -> String {
    let frame = Frame::new(&[&pair.newton, &pair.hodge]);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{MARGIN}" y="20" font-size="13">{}: Newton (blue), Hodge (red), Hodge below Newton: {}</text>"#,
        pair.id, pair.dominates
    );
    polyline(&mut out, &frame, &pair.newton, "#1f4e9c", -6.0);
    polyline(&mut out, &frame, &pair.hodge, "#b22222", 14.0);
    out.push_str("</svg>\n");
    out
}

//! Deterministic SVG output for coupler traces and animation frames.

use std::fmt::Write as _;

use crate::coupler_curve::Trace;
use crate::fourbar::{Branch, LinkageParams, Pose, RootSign};
use crate::lorentz2::Point;

use super::report::fmt_num;

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 0.05;

/// World-to-pixel map with the y-axis pointing up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub min_x: f64,
    pub max_x: f64,
    pub min_y: f64,
    pub max_y: f64,
    scale: f64,
}

impl Viewport {
    /// Bounding box of `pts` grown by 5% of its larger side on every edge.
    pub fn fit<I: IntoIterator<Item = (f64, f64)>>(pts: I) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for (x, y) in pts {
            if x.is_finite() && y.is_finite() {
                x0 = x0.min(x);
                x1 = x1.max(x);
                y0 = y0.min(y);
                y1 = y1.max(y);
            }
        }
        if !x0.is_finite() {
            (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let m = MARGIN * span;
        let (min_x, max_x, min_y, max_y) = (x0 - m, x1 + m, y0 - m, y1 + m);
        Self {
            min_x,
            max_x,
            min_y,
            max_y,
            scale: WIDTH / (max_x - min_x).max(max_y - min_y),
        }
    }

    pub fn width(&self) -> f64 {
        round2((self.max_x - self.min_x) * self.scale)
    }

    pub fn height(&self) -> f64 {
        round2((self.max_y - self.min_y) * self.scale)
    }

    fn px(&self, x: f64, y: f64) -> (String, String) {
        (
            fmt_num(round2((x - self.min_x) * self.scale)),
            fmt_num(round2((self.max_y - y) * self.scale)),
        )
    }

    /// Segments of `y = x` and `y = −x` inside the box.
    fn guides(&self) -> Vec<((f64, f64), (f64, f64))> {
        let mut out = Vec::new();
        let (lo, hi) = (self.min_x.max(self.min_y), self.max_x.min(self.max_y));
        if lo < hi {
            out.push(((lo, lo), (hi, hi)));
        }
        let (lo, hi) = (self.min_x.max(-self.max_y), self.max_x.min(-self.min_y));
        if lo < hi {
            out.push(((lo, -lo), (hi, -hi)));
        }
        out
    }
}

fn round2(v: f64) -> f64 {
    (v * 100.0).round() / 100.0 + 0.0
}

fn header(s: &mut String, vp: &Viewport, comment: &str) {
    let (w, h) = (fmt_num(vp.width()), fmt_num(vp.height()));
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, "<!-- {comment} -->");
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    for (a, b) in vp.guides() {
        let ((x1, y1), (x2, y2)) = (vp.px(a.0, a.1), vp.px(b.0, b.1));
        let _ = writeln!(
            s,
            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#bbbbbb" stroke-dasharray="6 4"/>"##
        );
    }
}

fn marker(s: &mut String, vp: &Viewport, p: Point, label: &str) {
    let (x, y) = vp.px(p.x, p.y);
    let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="4" fill="black"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{x}" y="{y}" dx="6" dy="-6" font-family="sans-serif" font-size="14">{label}</text>"#
    );
}

fn color(root: RootSign, branch: Branch) -> &'static str {
    match (branch, root) {
        (Branch::Standard, RootSign::Plus) => "#1f77b4",
        (Branch::Standard, RootSign::Minus) => "#d62728",
        (Branch::Reversed, RootSign::Plus) => "#2ca02c",
        (Branch::Reversed, RootSign::Minus) => "#9467bd",
    }
}

/// One path per polyline, the isotropic guides and the fixed pivots.
pub fn trace_svg(p: &LinkageParams, trace: &Trace, title: &str) -> String {
    let o = Point::ORIGIN;
    let c = Point::new(p.g, 0.0);
    let vp = Viewport::fit(
        trace
            .points()
            .map(|q| (q.x, q.y))
            .chain([(o.x, o.y), (c.x, c.y)]),
    );
    let mut s = String::new();
    header(&mut s, &vp, title);
    for line in &trace.polylines {
        let mut d = String::new();
        for (k, q) in line.points.iter().enumerate() {
            let (x, y) = vp.px(q.x, q.y);
            let _ = write!(d, "{}{x} {y}", if k == 0 { "M" } else { " L" });
        }
        let _ = writeln!(
            s,
            r#"<path class="{}-{}" d="{d}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            line.root.as_str(),
            line.branch.as_str(),
            color(line.root, line.branch)
        );
    }
    marker(&mut s, &vp, o, "O");
    marker(&mut s, &vp, c, "C");
    let _ = writeln!(
        s,
        "<!-- skipped: {} infeasible: {} -->",
        trace.skipped, trace.infeasible
    );
    s.push_str("</svg>\n");
    s
}

/// Quadrilateral `O–A–B–C` with link lengths, in a viewport shared by all frames.
pub fn frame_svg(p: &LinkageParams, pose: &Pose, vp: &Viewport, title: &str) -> String {
    let mut s = String::new();
    header(&mut s, vp, title);
    let links = [
        (pose.o, pose.c, "g", p.g, true),
        (pose.o, pose.a, "a", p.a, false),
        (pose.a, pose.b, "h", p.h, false),
        (pose.c, pose.b, "b", p.b, false),
    ];
    for (u, v, name, len, ground) in links {
        let ((x1, y1), (x2, y2)) = (vp.px(u.x, u.y), vp.px(v.x, v.y));
        let style = if ground {
            r#" stroke-dasharray="8 4""#
        } else {
            ""
        };
        let _ = writeln!(
            s,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"{style}/>"#
        );
        let m = u.midpoint(v);
        let (mx, my) = vp.px(m.x, m.y);
        let _ = writeln!(
            s,
            r##"<text x="{mx}" y="{my}" dy="-4" font-family="sans-serif" font-size="12" fill="#444444">{name}={}</text>"##,
            fmt_num(len)
        );
    }
    for (pt, label) in [(pose.o, "O"), (pose.a, "A"), (pose.b, "B"), (pose.c, "C")] {
        marker(&mut s, vp, pt, label);
    }
    s.push_str("</svg>\n");
    s
}

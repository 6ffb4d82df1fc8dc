use std::fmt::Write as _;

use crate::options::{RenderOptions, ViewBox};

/// Six fractional digits, never a negative zero.
pub(crate) fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Drawing-space bounds, with y pointing up.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Bounds {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Bounds {
    pub fn empty() -> Self {
        Self { min_x: f64::INFINITY, min_y: f64::INFINITY, max_x: f64::NEG_INFINITY, max_y: f64::NEG_INFINITY }
    }

    pub fn add(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    pub fn padded(self, pad: f64) -> Self {
        Self { min_x: self.min_x - pad, min_y: self.min_y - pad, max_x: self.max_x + pad, max_y: self.max_y + pad }
    }

    pub fn is_empty(&self) -> bool {
        !(self.min_x <= self.max_x)
    }
}

/// Accumulates SVG elements. Plane y is flipped so that up is up.
pub(crate) struct Doc {
    body: String,
}

impl Doc {
    pub fn new() -> Self {
        Self { body: String::new() }
    }

    pub fn polygon(&mut self, pts: &[(f64, f64)], fill: &str, stroke: &str, width: f64) {
        let points: Vec<String> = pts.iter().map(|(x, y)| format!("{},{}", num(*x), num(-y))).collect();
        let _ = writeln!(
            self.body,
            r#"<polygon points="{}" fill="{fill}" stroke="{stroke}" stroke-width="{}"/>"#,
            points.join(" "),
            num(width)
        );
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str, width: f64) {
        let points: Vec<String> = pts.iter().map(|(x, y)| format!("{},{}", num(*x), num(-y))).collect();
        let _ = writeln!(
            self.body,
            r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="{}" stroke-linejoin="round"/>"#,
            points.join(" "),
            num(width)
        );
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{}" stroke-linecap="round"/>"#,
            num(a.0),
            num(-a.1),
            num(b.0),
            num(-b.1),
            num(width)
        );
    }

    pub fn circle(&mut self, c: (f64, f64), r: f64, fill: &str, stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{fill}" stroke="{stroke}" stroke-width="{}"/>"#,
            num(c.0),
            num(-c.1),
            num(r),
            num(width)
        );
    }

    pub fn rect(&mut self, corner: (f64, f64), w: f64, h: f64, fill: &str, opacity: f64) {
        let _ = writeln!(
            self.body,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{fill}" fill-opacity="{}"/>"#,
            num(corner.0),
            num(-(corner.1 + h)),
            num(w),
            num(h),
            num(opacity)
        );
    }

    pub fn text(&mut self, at: (f64, f64), size: f64, content: &str) {
        let _ = writeln!(
            self.body,
            r#"<text x="{}" y="{}" font-size="{}" font-family="sans-serif" text-anchor="middle" dominant-baseline="middle">{content}</text>"#,
            num(at.0),
            num(-at.1),
            num(size)
        );
    }

    /// Wraps the body in an `<svg>` element sized from `bounds` or the
    /// explicit view box.
    pub fn finish(self, bounds: Bounds, options: &RenderOptions) -> String {
        let (x, y, w, h) = match options.view_box {
            ViewBox::Explicit { min_x, min_y, width, height } => (min_x, -(min_y + height), width, height),
            ViewBox::Auto => {
                let b = if bounds.is_empty() { Bounds { min_x: -1.0, min_y: -1.0, max_x: 1.0, max_y: 1.0 } } else { bounds };
                (b.min_x, -b.max_y, b.max_x - b.min_x, b.max_y - b.min_y)
            }
        };
        let height_px = (f64::from(options.width_px) * h / w).round().max(1.0) as u64;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n{}</svg>\n",
            options.width_px,
            height_px,
            num(x),
            num(y),
            num(w),
            num(h),
            self.body
        )
    }
}

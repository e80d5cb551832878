//! Static SVG figures for script environments.
//!
//! Rendering is approximate by design: coordinates are converted to doubles
//! and conics are sampled as polylines (256 segments per branch). The output
//! is deterministic for a fixed environment and draw list.

use crate::script::{Environment, Value};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SvgError {
    #[error("nothing to draw")]
    EmptyDrawList,
}

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub width: u32,
}

impl Default for SvgOptions {
    fn default() -> SvgOptions {
        SvgOptions { width: 800 }
    }
}

const CONIC_SEGMENTS: usize = 256;

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bounds {
    fn empty() -> Bounds {
        Bounds { min_x: f64::INFINITY, min_y: f64::INFINITY, max_x: f64::NEG_INFINITY, max_y: f64::NEG_INFINITY }
    }

    fn include(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    fn is_empty(&self) -> bool {
        self.min_x > self.max_x
    }

    fn span(&self) -> f64 {
        (self.max_x - self.min_x).max(self.max_y - self.min_y).max(1e-9)
    }
}

/// Fixed-precision, locale-free number formatting so output is byte-stable.
fn fmt_num(v: f64) -> String {
    let s = format!("{v:.4}");
    // Avoid "-0.0000".
    if s.starts_with("-0.0000") && s.len() == 7 {
        "0.0000".to_string()
    } else {
        s
    }
}

fn stroke_for(style: Option<&str>, span: f64) -> String {
    let width = fmt_num(span * 0.004);
    match style {
        Some("dashed") => format!(
            "stroke=\"#444444\" stroke-width=\"{width}\" stroke-dasharray=\"{dash}\" fill=\"none\"",
            dash = fmt_num(span * 0.02)
        ),
        Some("light") => format!("stroke=\"#999999\" stroke-width=\"{width}\" fill=\"none\""),
        _ => format!("stroke=\"#000000\" stroke-width=\"{width}\" fill=\"none\""),
    }
}

pub fn emit_svg(env: &Environment, options: &SvgOptions) -> Result<String, SvgError> {
    if env.draws.is_empty() {
        return Err(SvgError::EmptyDrawList);
    }
    let items: Vec<(&str, &Value, Option<&str>)> = env
        .draws
        .iter()
        .filter_map(|(name, style)| {
            env.get(name).map(|v| (name.as_str(), v, style.as_deref()))
        })
        .collect();
    if items.is_empty() {
        return Err(SvgError::EmptyDrawList);
    }

    // First pass: bounding box over the bounded drawables (SVG's y axis
    // points down, so geometric y is negated throughout).
    let mut bounds = Bounds::empty();
    for (_, value, _) in &items {
        match value {
            Value::Point(p) => bounds.include(p.x.to_f64(), -p.y.to_f64()),
            Value::Triangle(t) => {
                for v in t.vertices() {
                    bounds.include(v.x.to_f64(), -v.y.to_f64());
                }
            }
            Value::Circle(c) => {
                let center = c.center();
                let (cx, cy) = (center.x.to_f64(), -center.y.to_f64());
                let r = c.radius_sq().to_f64().max(0.0).sqrt();
                bounds.include(cx - r, cy - r);
                bounds.include(cx + r, cy + r);
            }
            Value::Line(_) | Value::Conic(_) | Value::Scalar(_) => {}
        }
    }
    if bounds.is_empty() {
        bounds = Bounds { min_x: -1.0, min_y: -1.0, max_x: 1.0, max_y: 1.0 };
    }
    let margin = bounds.span() * 0.05;
    let min_x = bounds.min_x - margin;
    let min_y = bounds.min_y - margin;
    let width = (bounds.max_x - bounds.min_x) + 2.0 * margin;
    let height = (bounds.max_y - bounds.min_y) + 2.0 * margin;
    let span = width.max(height);
    let view = Bounds { min_x, min_y, max_x: min_x + width, max_y: min_y + height };

    let mut out = String::new();
    let pixel_height = (options.width as f64 * height / width).round() as u32;
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"{vx} {vy} {vw} {vh}\">",
        w = options.width,
        h = pixel_height.max(1),
        vx = fmt_num(min_x),
        vy = fmt_num(min_y),
        vw = fmt_num(width),
        vh = fmt_num(height),
    );

    for (name, value, style) in &items {
        match value {
            Value::Point(p) => {
                let (x, y) = (p.x.to_f64(), -p.y.to_f64());
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>",
                    fmt_num(x),
                    fmt_num(y),
                    fmt_num(span * 0.007)
                );
                let _ = writeln!(
                    out,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\">{}</text>",
                    fmt_num(x + span * 0.012),
                    fmt_num(y - span * 0.012),
                    fmt_num(span * 0.035),
                    name
                );
            }
            Value::Triangle(t) => {
                let pts: Vec<String> = t
                    .vertices()
                    .iter()
                    .map(|v| format!("{},{}", fmt_num(v.x.to_f64()), fmt_num(-v.y.to_f64())))
                    .collect();
                let _ = writeln!(
                    out,
                    "  <polygon points=\"{}\" {}/>",
                    pts.join(" "),
                    stroke_for(*style, span)
                );
            }
            Value::Circle(c) => {
                let center = c.center();
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>",
                    fmt_num(center.x.to_f64()),
                    fmt_num(-center.y.to_f64()),
                    fmt_num(c.radius_sq().to_f64().max(0.0).sqrt()),
                    stroke_for(*style, span)
                );
            }
            Value::Line(l) => {
                if let Some(((x1, y1), (x2, y2))) =
                    clip_line(l.a.to_f64(), l.b.to_f64(), l.c.to_f64(), &view)
                {
                    let _ = writeln!(
                        out,
                        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>",
                        fmt_num(x1),
                        fmt_num(y1),
                        fmt_num(x2),
                        fmt_num(y2),
                        stroke_for(*style, span)
                    );
                }
            }
            Value::Conic(k) => {
                let coeffs: Vec<f64> = k.coeffs.iter().map(|c| c.to_f64()).collect();
                for branch in sample_conic(&coeffs, &view) {
                    if branch.len() < 2 {
                        continue;
                    }
                    let pts: Vec<String> = branch
                        .iter()
                        .map(|(x, y)| format!("{},{}", fmt_num(*x), fmt_num(*y)))
                        .collect();
                    let _ = writeln!(
                        out,
                        "  <polyline points=\"{}\" {}/>",
                        pts.join(" "),
                        stroke_for(*style, span)
                    );
                }
            }
            Value::Scalar(_) => {}
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Clip `ax + by + c = 0` (geometric coordinates, y already negated by the
/// caller convention below) to the view rectangle. Works in the flipped
/// frame: the stored line is in geometric coordinates, so flip b's sign.
fn clip_line(a: f64, b: f64, c: f64, view: &Bounds) -> Option<((f64, f64), (f64, f64))> {
    // In flipped coordinates (x, y') with y' = -y the line is a x - b y' + c = 0.
    let (a, b) = (a, -b);
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let mut push = |x: f64, y: f64| {
        if hits.iter().all(|(hx, hy)| (hx - x).abs() > 1e-9 || (hy - y).abs() > 1e-9) {
            hits.push((x, y));
        }
    };
    const EDGE_EPS: f64 = 1e-9;
    if b.abs() > EDGE_EPS {
        for x in [view.min_x, view.max_x] {
            let y = -(a * x + c) / b;
            if y >= view.min_y - EDGE_EPS && y <= view.max_y + EDGE_EPS {
                push(x, y);
            }
        }
    }
    if a.abs() > EDGE_EPS {
        for y in [view.min_y, view.max_y] {
            let x = -(b * y + c) / a;
            if x >= view.min_x - EDGE_EPS && x <= view.max_x + EDGE_EPS {
                push(x, y);
            }
        }
    }
    if hits.len() >= 2 {
        Some((hits[0], hits[1]))
    } else {
        None
    }
}

/// Sample a conic inside the view as polylines: for each of 256 segments
/// across the sweep axis, solve the restricted quadratic; the two roots form
/// the two branches, broken where the discriminant goes negative.
fn sample_conic(coeffs: &[f64], view: &Bounds) -> Vec<Vec<(f64, f64)>> {
    let [a, b, c, d, e, f] = [coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], coeffs[5]];
    // Sweep x when the conic is quadratic in y, otherwise sweep y.
    let sweep_x = c.abs() >= a.abs();
    let (lo, hi) = if sweep_x {
        (view.min_x, view.max_x)
    } else {
        (view.min_y, view.max_y)
    };
    let mut branches: Vec<Vec<(f64, f64)>> = vec![Vec::new(), Vec::new()];
    let mut finished: Vec<Vec<(f64, f64)>> = Vec::new();
    for i in 0..=CONIC_SEGMENTS {
        let t = lo + (hi - lo) * (i as f64) / (CONIC_SEGMENTS as f64);
        // Restrict to the sweep line: a quadratic q2 s² + q1 s + q0 = 0 in
        // the other coordinate s.
        let (q2, q1, q0) = if sweep_x {
            // x = t (geometric x), solve for geometric y.
            (c, b * t + e, a * t * t + d * t + f)
        } else {
            // Flipped y' = t, so geometric y = -t; solve for x.
            let y = -t;
            (a, b * y + d, c * y * y + e * y + f)
        };
        let roots: Vec<f64> = if q2.abs() > 1e-12 {
            let disc = q1 * q1 - 4.0 * q2 * q0;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                let mut r = [(-q1 - sq) / (2.0 * q2), (-q1 + sq) / (2.0 * q2)];
                r.sort_by(|p, q| p.partial_cmp(q).unwrap());
                r.to_vec()
            } else {
                Vec::new()
            }
        } else if q1.abs() > 1e-12 {
            vec![-q0 / q1]
        } else {
            Vec::new()
        };
        for (bi, branch) in branches.iter_mut().enumerate() {
            match roots.get(bi) {
                Some(&s) => {
                    let (x, yflip) = if sweep_x { (t, -s) } else { (s, t) };
                    if yflip >= view.min_y && yflip <= view.max_y
                        && x >= view.min_x && x <= view.max_x
                    {
                        branch.push((x, yflip));
                    } else if !branch.is_empty() {
                        finished.push(std::mem::take(branch));
                    }
                }
                None => {
                    if !branch.is_empty() {
                        finished.push(std::mem::take(branch));
                    }
                }
            }
        }
    }
    finished.extend(branches.into_iter().filter(|b| !b.is_empty()));
    finished
}

//! SVG figures of diagram windows with funnel, line, and point overlays.
//! Exact coordinates are converted to decimals here and nowhere else.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{Diagram, Funnel};
use crate::lines::ExtendedLine;
use crate::rational::{nu, PlanePoint};

#[derive(Clone, Debug)]
pub enum Overlay {
    /// Shaded triangles of a funnel, drawn beneath the edges.
    Funnel { funnel: Funnel, fill: String },
    /// The visible part of an extended line above the x-axis.
    Line { line: ExtendedLine, stroke: String },
    /// Marked points; infinite points and points outside the window are skipped.
    Points {
        points: Vec<PlanePoint>,
        fill: String,
        radius: f64,
    },
}

impl Overlay {
    pub fn funnel(funnel: Funnel) -> Self {
        Overlay::Funnel {
            funnel,
            fill: "#fde2c4".into(),
        }
    }

    pub fn line(line: ExtendedLine) -> Self {
        Overlay::Line {
            line,
            stroke: "#1f5fbf".into(),
        }
    }

    pub fn points(points: Vec<PlanePoint>, fill: &str) -> Self {
        Overlay::Points {
            points,
            fill: fill.into(),
            radius: 3.5,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Pixel width; the height follows from a 1:1 aspect ratio.
    pub width: f64,
    pub margin: f64,
    /// Top of the visible strip in diagram units.
    pub y_max: f64,
    pub edge_stroke: String,
    pub vertex_fill: String,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            width: 960.0,
            margin: 16.0,
            y_max: 1.05,
            edge_stroke: "#555555".into(),
            vertex_fill: "#222222".into(),
        }
    }
}

/// Six significant digits, trailing zeros trimmed.
pub(crate) fn fmt6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(0.0) / r.denom().to_f64().unwrap_or(1.0))
}

struct Frame {
    x0: f64,
    x1: f64,
    scale: f64,
    margin: f64,
    height: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.margin + (x - self.x0) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        self.height - self.margin - y * self.scale
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x0 && x <= self.x1 && y >= 0.0 && y <= self.y_max
    }
}

/// Renders the window as SVG 1.1. Output depends only on the inputs.
pub fn render_svg(d: &Diagram, overlays: &[Overlay], opts: &SvgOptions) -> String {
    let (lo, hi) = d.window();
    let x0 = to_f64(&lo.to_rational().expect("diagram windows are finite"));
    let x1 = to_f64(&hi.to_rational().expect("diagram windows are finite"));
    let scale = (opts.width - 2.0 * opts.margin) / (x1 - x0);
    let height = opts.y_max * scale + 2.0 * opts.margin;
    let fr = Frame {
        x0,
        x1,
        scale,
        margin: opts.margin,
        height,
        y_max: opts.y_max,
    };
    let vx = |v: &crate::rational::ExtendedRational| -> (f64, f64) {
        match nu(v) {
            PlanePoint::Finite { x, y } => (to_f64(&x), to_f64(&y)),
            PlanePoint::Infinity => unreachable!("diagram vertices are finite"),
        }
    };

    let mut s = String::new();
    let w = fmt6(opts.width);
    let h = fmt6(height);
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
    )
    .unwrap();

    for o in overlays {
        if let Overlay::Funnel { funnel, fill } = o {
            writeln!(s, r#"<g class="funnel" fill="{fill}" stroke="none">"#).unwrap();
            for tri in funnel.triangles() {
                let pts: Vec<String> = tri
                    .iter()
                    .map(|v| {
                        let (x, y) = vx(v);
                        format!("{},{}", fmt6(fr.px(x)), fmt6(fr.py(y)))
                    })
                    .collect();
                writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
            }
            s.push_str("</g>\n");
        }
    }

    writeln!(
        s,
        r#"<g class="edges" stroke="{}" stroke-width="0.6">"#,
        opts.edge_stroke
    )
    .unwrap();
    for (a, b) in d.edges() {
        let (ax, ay) = vx(a);
        let (bx, by) = vx(b);
        writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt6(fr.px(ax)),
            fmt6(fr.py(ay)),
            fmt6(fr.px(bx)),
            fmt6(fr.py(by))
        )
        .unwrap();
    }
    s.push_str("</g>\n");

    writeln!(s, r#"<g class="vertices" fill="{}">"#, opts.vertex_fill).unwrap();
    for v in d.vertices() {
        let (x, y) = vx(v);
        let r = (2.5 * y).clamp(0.5, 2.5);
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            fmt6(fr.px(x)),
            fmt6(fr.py(y)),
            fmt6(r)
        )
        .unwrap();
    }
    s.push_str("</g>\n");

    for o in overlays {
        match o {
            Overlay::Line { line, stroke } => {
                if let Some((p, q)) = visible_segment(line, &fr) {
                    writeln!(
                        s,
                        r#"<line class="overlay-line" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="1.5"/>"#,
                        fmt6(fr.px(p.0)),
                        fmt6(fr.py(p.1)),
                        fmt6(fr.px(q.0)),
                        fmt6(fr.py(q.1))
                    )
                    .unwrap();
                }
            }
            Overlay::Points {
                points,
                fill,
                radius,
            } => {
                writeln!(
                    s,
                    r#"<g class="overlay-points" fill="{fill}" stroke="black" stroke-width="0.4">"#
                )
                .unwrap();
                for p in points {
                    let Some((x, y)) = p.coords() else { continue };
                    let (x, y) = (to_f64(x), to_f64(y));
                    if !fr.contains(x, y) {
                        continue;
                    }
                    writeln!(
                        s,
                        r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                        fmt6(fr.px(x)),
                        fmt6(fr.py(y)),
                        fmt6(*radius)
                    )
                    .unwrap();
                }
                s.push_str("</g>\n");
            }
            Overlay::Funnel { .. } => {}
        }
    }
    s.push_str("</svg>\n");
    s
}

/// The part of `line` with `0 <= y <= y_max` clipped to the window's x-range.
fn visible_segment(line: &ExtendedLine, fr: &Frame) -> Option<((f64, f64), (f64, f64))> {
    let ax = to_f64(&line.anchor().to_rational()?);
    let (tx, ty) = line.through().coords()?;
    let (dx, dy) = (to_f64(tx) - ax, to_f64(ty));
    if dy == 0.0 {
        return None;
    }
    // parameter range along anchor + s (dx, dy) giving 0 <= y <= y_max
    let (mut s0, mut s1) = {
        let a: f64 = 0.0;
        let b = fr.y_max / dy;
        (a.min(b), a.max(b))
    };
    if dx != 0.0 {
        let a = (fr.x0 - ax) / dx;
        let b = (fr.x1 - ax) / dx;
        s0 = s0.max(a.min(b));
        s1 = s1.min(a.max(b));
    } else if ax < fr.x0 || ax > fr.x1 {
        return None;
    }
    if s0 >= s1 {
        return None;
    }
    Some(((ax + s0 * dx, s0 * dy), (ax + s1 * dx, s1 * dy)))
}

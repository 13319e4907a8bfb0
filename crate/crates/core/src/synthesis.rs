//! Motifs, stamping with a frieze group, SVG output and exact rasterization.
//!
//! Motif coordinates live in one period-wide cell `0 ≤ x ≤ cell_width` of the
//! strip `-h ≤ y ≤ h`. A scene of `n` periods is treated as a cylinder: the
//! left and right edges of `[0, n·τ)` are identified, so the stamped pattern
//! is invariant under the whole group, not just its interior.

use std::fmt::Write as _;

use thiserror::Error;

use crate::group::FriezeGroup;
use crate::image::Image;
use crate::iso::{apply, canonical, StripIsometry};
use crate::scalar::Scalar;

const FLAG_MOTIF: &str = include_str!("../motifs/flag.motif");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("malformed motif (line {line}): {msg}")]
    MalformedMotif { line: usize, msg: String },
    #[error("point ({x}, {y}) on line {line} lies outside the cell")]
    OutOfCell { line: usize, x: Scalar, y: Scalar },
    #[error("group period {group} does not match motif cell width {cell}")]
    PeriodMismatch { group: Scalar, cell: Scalar },
    #[error("number of periods must be positive")]
    NoPeriods,
    #[error("{0} is not an integral number of pixels; choose px_per_unit to clear denominators")]
    NonIntegralRaster(Scalar),
    #[error("supersample factor must be 1, 2 or 4, got {0}")]
    InvalidSupersample(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Polyline,
    Polygon,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Primitive {
    pub shape: Shape,
    pub points: Vec<(Scalar, Scalar)>,
    pub filled: bool,
    pub shade: u8,
    /// Half-width of the stroke used for polylines and unfilled polygons.
    pub stroke: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Motif {
    pub primitives: Vec<Primitive>,
    pub cell_width: Scalar,
    pub half_height: Scalar,
}

impl Motif {
    /// The bundled asymmetric flag, stretched to the given cell.
    pub fn asymmetric_flag(cell_width: Scalar, half_height: Scalar) -> Motif {
        let base = parse_motif(FLAG_MOTIF.as_bytes()).expect("bundled motif parses");
        base.rescaled(cell_width, half_height)
    }

    /// Polyline through `segments + 1` samples of `y = amplitude·sin(2πx/τ)`.
    ///
    /// Samples are rounded to multiples of `1/1024` of the amplitude, and the
    /// quarter-wave is computed once and mirrored so the samples are exactly
    /// odd about zero crossings and even about extrema. `segments` must be a
    /// multiple of 4.
    pub fn sinusoid(cell_width: Scalar, half_height: Scalar, amplitude: Scalar, segments: usize) -> Motif {
        assert!(segments >= 4 && segments % 4 == 0, "segments must be a positive multiple of 4");
        let quarter = segments / 4;
        let q: Vec<Scalar> = (0..=quarter)
            .map(|k| {
                let s = (std::f64::consts::FRAC_PI_2 * k as f64 / quarter as f64).sin();
                Scalar::from_f64_rounded(s, 1024) * amplitude
            })
            .collect();
        let sample = |k: usize| -> Scalar {
            let half = 2 * quarter;
            let (k, sign) = if k > half { (k - half, -1) } else { (k, 1) };
            let v = if k <= quarter { q[k] } else { q[half - k] };
            v * sign
        };
        let points = (0..=segments)
            .map(|k| (cell_width * Scalar::new(k as i128, segments as i128), sample(k)))
            .collect();
        Motif {
            primitives: vec![Primitive {
                shape: Shape::Polyline,
                points,
                filled: false,
                shade: 0,
                stroke: half_height / 16,
            }],
            cell_width,
            half_height,
        }
    }

    /// Scales the motif to a new cell width and strip half-height.
    pub fn rescaled(&self, cell_width: Scalar, half_height: Scalar) -> Motif {
        let sx = cell_width / self.cell_width;
        let sy = half_height / self.half_height;
        Motif {
            primitives: self
                .primitives
                .iter()
                .map(|p| Primitive {
                    points: p.points.iter().map(|&(x, y)| (x * sx, y * sy)).collect(),
                    stroke: p.stroke * sy,
                    ..p.clone()
                })
                .collect(),
            cell_width,
            half_height,
        }
    }
}

/// Parses the line-oriented motif format:
///
/// ```text
/// cell 2 height 1
/// polygon filled shade=0 0,0 1/2,0 0,3/4
/// polyline shade=40 width=1/32 0,0 1,1/2
/// ```
///
/// `#` starts a comment line. `width` is the stroke half-width and defaults
/// to `height/16`.
pub fn parse_motif(text: &[u8]) -> Result<Motif, SynthesisError> {
    let text = std::str::from_utf8(text).map_err(|_| SynthesisError::MalformedMotif {
        line: 0,
        msg: "not valid UTF-8".into(),
    })?;
    let mut cell: Option<(Scalar, Scalar)> = None;
    let mut primitives = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let bad = |msg: String| SynthesisError::MalformedMotif { line, msg };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        let number = |tok: Option<&str>, what: &str| -> Result<Scalar, SynthesisError> {
            tok.ok_or_else(|| bad(format!("missing {what}")))?
                .parse::<Scalar>()
                .map_err(|e| bad(e.to_string()))
        };
        match keyword {
            "cell" => {
                if cell.is_some() {
                    return Err(bad("duplicate cell line".into()));
                }
                let w = number(tokens.next(), "cell width")?;
                if tokens.next() != Some("height") {
                    return Err(bad("expected `cell <width> height <h>`".into()));
                }
                let h = number(tokens.next(), "height")?;
                if tokens.next().is_some() {
                    return Err(bad("trailing tokens after cell line".into()));
                }
                if !w.is_positive() || !h.is_positive() {
                    return Err(bad("cell width and height must be positive".into()));
                }
                cell = Some((w, h));
            }
            "polygon" | "polyline" => {
                let (w, h) = cell.ok_or_else(|| bad("primitive before the cell line".into()))?;
                let shape = if keyword == "polygon" { Shape::Polygon } else { Shape::Polyline };
                let mut filled = false;
                let mut shade = 0u8;
                let mut stroke = h / 16;
                let mut points = Vec::new();
                for tok in tokens {
                    if tok == "filled" {
                        if shape == Shape::Polyline {
                            return Err(bad("a polyline cannot be filled".into()));
                        }
                        filled = true;
                    } else if let Some(v) = tok.strip_prefix("shade=") {
                        shade = v
                            .parse::<u8>()
                            .map_err(|_| bad(format!("shade `{v}` is not in 0..=255")))?;
                    } else if let Some(v) = tok.strip_prefix("width=") {
                        stroke = number(Some(v), "width")?;
                        if !stroke.is_positive() {
                            return Err(bad("stroke width must be positive".into()));
                        }
                    } else if let Some((xs, ys)) = tok.split_once(',') {
                        let x = number(Some(xs), "x")?;
                        let y = number(Some(ys), "y")?;
                        if x.is_negative() || x > w || y.abs() > h {
                            return Err(SynthesisError::OutOfCell { line, x, y });
                        }
                        points.push((x, y));
                    } else {
                        return Err(bad(format!("unexpected token `{tok}`")));
                    }
                }
                let min = if shape == Shape::Polygon { 3 } else { 2 };
                if points.len() < min {
                    return Err(bad(format!("{keyword} needs at least {min} points")));
                }
                primitives.push(Primitive {
                    shape,
                    points,
                    filled,
                    shade,
                    stroke,
                });
            }
            other => return Err(bad(format!("unknown directive `{other}`"))),
        }
    }
    let (cell_width, half_height) = cell.ok_or(SynthesisError::MalformedMotif {
        line: 0,
        msg: "missing cell line".into(),
    })?;
    if primitives.is_empty() {
        return Err(SynthesisError::MalformedMotif {
            line: 0,
            msg: "motif has no primitives".into(),
        });
    }
    Ok(Motif {
        primitives,
        cell_width,
        half_height,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    pub iso: StripIsometry,
    pub primitive: usize,
}

/// A motif stamped by group elements over `n` periods of a cyclic strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    pub motif: Motif,
    pub n_periods: u32,
    pub placed: Vec<Placement>,
}

impl Scene {
    pub fn period(&self) -> Scalar {
        self.motif.cell_width
    }

    pub fn width(&self) -> Scalar {
        self.period() * self.n_periods as i128
    }

    pub fn half_height(&self) -> Scalar {
        self.motif.half_height
    }

    /// Mapped outline of one placement, before cyclic wrapping.
    pub fn mapped_points(&self, p: &Placement) -> Vec<(Scalar, Scalar)> {
        self.motif.primitives[p.primitive]
            .points
            .iter()
            .map(|&pt| apply(&p.iso, pt))
            .collect()
    }
}

/// Stamps `m` with one element per coset of `T(n·τ)` in `g`: those from
/// `elements_in_window(0, nτ)` whose affine offset lies in `[0, nτ)`.
pub fn generate(m: &Motif, g: &FriezeGroup, n_periods: u32) -> Result<Scene, SynthesisError> {
    if g.period() != m.cell_width {
        return Err(SynthesisError::PeriodMismatch {
            group: g.period(),
            cell: m.cell_width,
        });
    }
    if n_periods == 0 {
        return Err(SynthesisError::NoPeriods);
    }
    let extent = g.period() * n_periods as i128;
    let mut placed = Vec::new();
    for e in g.elements_in_window(Scalar::ZERO, extent) {
        let c = canonical(&e).offset;
        if c.is_negative() || c >= extent {
            continue;
        }
        for i in 0..m.primitives.len() {
            placed.push(Placement { iso: e, primitive: i });
        }
    }
    Ok(Scene {
        motif: m.clone(),
        n_periods,
        placed,
    })
}

fn fmt_num(v: Scalar) -> String {
    let s = format!("{:.6}", v.to_f64());
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// SVG 1.1 document in model units, y pointing down from the top edge `y = h`.
pub fn render_svg(s: &Scene) -> String {
    let w = s.width();
    let h = s.half_height();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt_num(w * 100),
        fmt_num(h * 200),
        fmt_num(w),
        fmt_num(h * 2)
    );
    let _ = writeln!(
        out,
        r#"<defs><clipPath id="extent"><rect x="0" y="0" width="{}" height="{}"/></clipPath></defs>"#,
        fmt_num(w),
        fmt_num(h * 2)
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, fmt_num(w), fmt_num(h * 2));
    if s.placed.is_empty() {
        let _ = writeln!(out, r#"<g id="frieze" clip-path="url(#extent)"></g>"#);
    } else {
        let _ = writeln!(out, r#"<g id="frieze" clip-path="url(#extent)">"#);
        for p in &s.placed {
            let prim = &s.motif.primitives[p.primitive];
            let pts = s.mapped_points(p);
            let xmin = pts.iter().map(|p| p.0).min().unwrap_or_default();
            let xmax = pts.iter().map(|p| p.0).max().unwrap_or_default();
            for shift in wrap_shifts(xmin, xmax, w) {
                let mut d = String::new();
                for (i, (x, y)) in pts.iter().enumerate() {
                    let cmd = if i == 0 { 'M' } else { 'L' };
                    let _ = write!(d, "{cmd}{} {} ", fmt_num(*x + shift), fmt_num(h - *y));
                }
                if prim.shape == Shape::Polygon {
                    d.push('Z');
                }
                let gray = format!("rgb({0},{0},{0})", prim.shade);
                if prim.filled {
                    let _ = writeln!(out, r#"<path d="{}" fill="{gray}" stroke="none"/>"#, d.trim_end());
                } else {
                    let _ = writeln!(
                        out,
                        r#"<path d="{}" fill="none" stroke="{gray}" stroke-width="{}"/>"#,
                        d.trim_end(),
                        fmt_num(prim.stroke * 2)
                    );
                }
            }
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

/// Horizontal shifts `k·w` under which `[xmin, xmax]` meets the open strip
/// `(0, w)`.
fn wrap_shifts(xmin: Scalar, xmax: Scalar, w: Scalar) -> Vec<Scalar> {
    let kmin = ((-xmax) / w).floor();
    let kmax = ((w - xmin) / w).ceil();
    (kmin..=kmax)
        .map(|k| w * k)
        .filter(|&s| xmax + s > Scalar::ZERO && xmin + s < w)
        .collect()
}

type Poly = Vec<(Scalar, Scalar)>;

/// Closed regions covered by a primitive, in pixel coordinates. Strokes are
/// parallelograms offset vertically (or horizontally for steep segments), so
/// consecutive pieces of a monotone polyline tile without overlap.
fn regions(prim: &Primitive, pts: &[(Scalar, Scalar)], stroke: Scalar) -> Vec<Poly> {
    if prim.shape == Shape::Polygon && prim.filled {
        return vec![pts.to_vec()];
    }
    let mut segs: Vec<((Scalar, Scalar), (Scalar, Scalar))> = pts.windows(2).map(|w| (w[0], w[1])).collect();
    if prim.shape == Shape::Polygon {
        segs.push((pts[pts.len() - 1], pts[0]));
    }
    segs.into_iter()
        .filter(|(a, b)| a != b)
        .map(|((x0, y0), (x1, y1))| {
            if (x1 - x0).abs() >= (y1 - y0).abs() {
                vec![(x0, y0 - stroke), (x1, y1 - stroke), (x1, y1 + stroke), (x0, y0 + stroke)]
            } else {
                vec![(x0 - stroke, y0), (x0 + stroke, y0), (x1 + stroke, y1), (x1 - stroke, y1)]
            }
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Edge {
    Left(Scalar),
    Right(Scalar),
    Top(Scalar),
    Bottom(Scalar),
}

impl Edge {
    fn inside(&self, (x, y): (Scalar, Scalar)) -> bool {
        match *self {
            Edge::Left(v) => x >= v,
            Edge::Right(v) => x <= v,
            Edge::Top(v) => y >= v,
            Edge::Bottom(v) => y <= v,
        }
    }

    fn cross(&self, (x0, y0): (Scalar, Scalar), (x1, y1): (Scalar, Scalar)) -> (Scalar, Scalar) {
        match *self {
            Edge::Left(v) | Edge::Right(v) => (v, y0 + (y1 - y0) * ((v - x0) / (x1 - x0))),
            Edge::Top(v) | Edge::Bottom(v) => (x0 + (x1 - x0) * ((v - y0) / (y1 - y0)), v),
        }
    }
}

/// Sutherland–Hodgman clip against one axis-aligned half-plane.
fn clip(poly: &[(Scalar, Scalar)], edge: Edge) -> Poly {
    let mut out = Vec::with_capacity(poly.len() + 2);
    let n = poly.len();
    for i in 0..n {
        let cur = poly[i];
        let prev = poly[(i + n - 1) % n];
        let (ci, pi) = (edge.inside(cur), edge.inside(prev));
        if ci {
            if !pi {
                out.push(edge.cross(prev, cur));
            }
            out.push(cur);
        } else if pi {
            out.push(edge.cross(prev, cur));
        }
    }
    out
}

fn area(poly: &[(Scalar, Scalar)]) -> Scalar {
    if poly.len() < 3 {
        return Scalar::ZERO;
    }
    let n = poly.len();
    let mut twice = Scalar::ZERO;
    for i in 0..n {
        let (x0, y0) = poly[i];
        let (x1, y1) = poly[(i + 1) % n];
        twice += x0 * y1 - x1 * y0;
    }
    (twice / 2).abs()
}

/// Adds `weight × covered area` of `poly` to every pixel it touches.
fn accumulate(ink: &mut [Scalar], width: usize, height: usize, poly: &[(Scalar, Scalar)], weight: Scalar) {
    let ymin = poly.iter().map(|p| p.1).min().unwrap_or_default();
    let ymax = poly.iter().map(|p| p.1).max().unwrap_or_default();
    let r0 = ymin.floor().max(0);
    let r1 = ymax.ceil().min(height as i128);
    for r in r0..r1 {
        let band = clip(&clip(poly, Edge::Top(Scalar::integer(r))), Edge::Bottom(Scalar::integer(r + 1)));
        if band.len() < 3 {
            continue;
        }
        let xmin = band.iter().map(|p| p.0).min().unwrap_or_default();
        let xmax = band.iter().map(|p| p.0).max().unwrap_or_default();
        let c0 = xmin.floor().max(0);
        let c1 = xmax.ceil().min(width as i128);
        for c in c0..c1 {
            let cell = clip(&clip(&band, Edge::Left(Scalar::integer(c))), Edge::Right(Scalar::integer(c + 1)));
            let a = area(&cell);
            if !a.is_zero() {
                let idx = r as usize * width + c as usize;
                ink[idx] += a * weight;
            }
        }
    }
}

/// Exact box-filtered raster of the scene.
///
/// Each pixel starts white (255); every covered fraction `a` of a primitive
/// with shade `s` subtracts `a·(255 − s)`. Results are clamped and rounded
/// half up. With `supersample > 1` each pixel is the rounded mean of the
/// quantized sub-pixels.
pub fn rasterize(s: &Scene, px_per_unit: u32, supersample: u32) -> Result<Image, SynthesisError> {
    if ![1, 2, 4].contains(&supersample) {
        return Err(SynthesisError::InvalidSupersample(supersample));
    }
    let px = Scalar::from(px_per_unit);
    for len in [s.period() * px, s.width() * px, s.half_height() * px * 2] {
        if !len.is_integer() || !len.is_positive() {
            return Err(SynthesisError::NonIntegralRaster(len));
        }
    }
    let fine = render_exact(s, px * supersample as i128);
    let ss = supersample as usize;
    let w = (s.width() * px).numer() as usize;
    let h = (s.half_height() * px * 2).numer() as usize;
    let n = ss * ss;
    Ok(Image::from_fn(w, h, |x, y| {
        let mut sum = 0usize;
        for dy in 0..ss {
            for dx in 0..ss {
                sum += fine.get(x * ss + dx, y * ss + dy) as usize;
            }
        }
        ((sum * 2 + n) / (2 * n)) as u8
    }))
}

fn render_exact(s: &Scene, scale: Scalar) -> Image {
    let w = (s.width() * scale).numer() as usize;
    let h = (s.half_height() * scale * 2).numer() as usize;
    let wpx = Scalar::from(w);
    let top = s.half_height();
    let mut ink = vec![Scalar::ZERO; w * h];
    for p in &s.placed {
        let prim = &s.motif.primitives[p.primitive];
        let pts: Vec<(Scalar, Scalar)> = s
            .mapped_points(p)
            .into_iter()
            .map(|(x, y)| (x * scale, (top - y) * scale))
            .collect();
        let weight = Scalar::from(255 - prim.shade as u32);
        for region in regions(prim, &pts, prim.stroke * scale) {
            let xmin = region.iter().map(|p| p.0).min().unwrap_or_default();
            let xmax = region.iter().map(|p| p.0).max().unwrap_or_default();
            for shift in wrap_shifts(xmin, xmax, wpx) {
                let moved: Poly = region.iter().map(|&(x, y)| (x + shift, y)).collect();
                accumulate(&mut ink, w, h, &moved, weight);
            }
        }
    }
    let white = Scalar::integer(255);
    let pixels = ink
        .into_iter()
        .map(|a| (white - a).max(Scalar::ZERO).round_half_up() as u8)
        .collect();
    Image::new(w, h, pixels)
}

/// Brute-force self-symmetry search: every strip isometry (other than the
/// identity) that could map a vertex of the motif onto another vertex is
/// tried, and those mapping the primitive set onto itself are returned.
pub fn motif_self_symmetries(m: &Motif) -> Vec<StripIsometry> {
    let xs: Vec<Scalar> = m.primitives.iter().flat_map(|p| p.points.iter().map(|pt| pt.0)).collect();
    let mut candidates = Vec::new();
    for &a in &xs {
        for &b in &xs {
            let d = b - a;
            let mid = (a + b) / 2;
            candidates.push(StripIsometry::translation(d));
            candidates.push(StripIsometry::glide(d));
            candidates.push(StripIsometry::rotation(mid));
            candidates.push(StripIsometry::vertical_mirror(mid));
        }
    }
    candidates.sort();
    candidates.dedup();
    let key = |prims: &[Primitive], iso: &StripIsometry| -> Vec<(Shape, bool, u8, Vec<(Scalar, Scalar)>)> {
        let mut v: Vec<_> = prims
            .iter()
            .map(|p| {
                let mut pts: Vec<_> = p.points.iter().map(|&pt| apply(iso, pt)).collect();
                if p.shape == Shape::Polygon {
                    // polygons are compared as vertex sets
                    pts.sort();
                } else if pts.last() < pts.first() {
                    pts.reverse();
                }
                (p.shape, p.filled, p.shade, pts)
            })
            .collect();
        v.sort();
        v
    };
    let original = key(&m.primitives, &StripIsometry::IDENTITY);
    candidates
        .into_iter()
        .filter(|c| !c.is_identity())
        .filter(|c| key(&m.primitives, c) == original)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::TypeTag;
    use crate::iso::IsometryKind;

    fn q(n: i128, d: i128) -> Scalar {
        Scalar::new(n, d)
    }

    const TRIANGLE: &str = "cell 2 height 1\npolygon filled shade=0 0,0 1/2,0 0,3/4\n";

    #[test]
    fn parses_minimal_motif() {
        let m = parse_motif(TRIANGLE.as_bytes()).unwrap();
        assert_eq!(m.primitives.len(), 1);
        assert_eq!(m.primitives[0].shape, Shape::Polygon);
        assert!(m.primitives[0].filled);
        assert_eq!(m.primitives[0].points[2], (Scalar::ZERO, q(3, 4)));
        assert_eq!(m.cell_width, q(2, 1));
    }

    #[test]
    fn motif_errors() {
        let err = |t: &str| parse_motif(t.as_bytes()).unwrap_err();
        assert!(matches!(
            err("cell 2 height 1\npolygon filled 0,0 5/2,0 0,1/2\n"),
            SynthesisError::OutOfCell { line: 2, .. }
        ));
        assert!(matches!(err("cell 2 height 1\npolyline 0,0 1,3/2\n"), SynthesisError::OutOfCell { .. }));
        assert!(matches!(err("cell 2 height 1\npolyline 0,0 -1/8,0\n"), SynthesisError::OutOfCell { .. }));
        assert!(matches!(
            err("cell 2 height 1\npolygon shade=300 0,0 1,0 0,1\n"),
            SynthesisError::MalformedMotif { line: 2, .. }
        ));
        for bad in [
            "",
            "cell 2 height 1\n",
            "polygon 0,0 1,0 0,1\n",
            "cell 2 height 1\npolygon 0,0 1,0\n",
            "cell 2 height 1\npolyline filled 0,0 1,0\n",
            "cell 2 width 1\n",
            "cell 0 height 1\npolyline 0,0 0,0\n",
            "cell 2 height 1\ncircle 0,0\n",
            "cell 2 height 1\npolyline 0,0 1,x\n",
            "cell 2 height 1\ncell 2 height 1\n",
        ] {
            assert!(matches!(err(bad), SynthesisError::MalformedMotif { .. }), "{bad:?}");
        }
    }

    #[test]
    fn cell_edge_is_allowed() {
        let m = parse_motif(b"cell 1 height 1/2\npolygon filled 0,-1/2 1,-1/2 1,1/2 0,1/2\n").unwrap();
        assert_eq!(m.primitives[0].points[1], (q(1, 1), q(-1, 2)));
    }

    #[test]
    fn bundled_flag_is_asymmetric() {
        let m = Motif::asymmetric_flag(q(2, 1), q(1, 1));
        assert_eq!(motif_self_symmetries(&m), vec![]);
        // positive control: a symmetric square has self-symmetries
        let sq = parse_motif(b"cell 2 height 1\npolygon filled 1/2,-1/2 3/2,-1/2 3/2,1/2 1/2,1/2\n").unwrap();
        let syms = motif_self_symmetries(&sq);
        assert!(syms.contains(&StripIsometry::rotation(q(1, 1))));
        assert!(syms.contains(&StripIsometry::vertical_mirror(q(1, 1))));
        assert!(syms.contains(&StripIsometry::horizontal_reflection()));
    }

    #[test]
    fn sinusoid_samples_are_symmetric() {
        let m = Motif::sinusoid(q(2, 1), q(1, 1), q(1, 1), 64);
        let pts = &m.primitives[0].points;
        assert_eq!(pts.len(), 65);
        assert_eq!(pts[64].0, q(2, 1));
        for k in 0..=64 {
            assert_eq!(pts[64 - k].1, -pts[k].1);
            if k <= 32 {
                assert_eq!(pts[32 - k].1, pts[k].1);
            }
        }
        assert_eq!(pts[16].1, q(1, 1));
    }

    #[test]
    fn generate_translation_copies() {
        let m = Motif::asymmetric_flag(q(2, 1), q(1, 1));
        let g = FriezeGroup::standard(TypeTag::T, q(2, 1), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 3).unwrap();
        let isos: Vec<_> = s.placed.iter().map(|p| p.iso).collect();
        assert_eq!(isos.len(), 6);
        assert!(isos.iter().all(|e| e.kind == IsometryKind::Translation));
        assert_eq!(isos[0], StripIsometry::translation(Scalar::ZERO));
        assert_eq!(isos[5], StripIsometry::translation(q(4, 1)));
    }

    #[test]
    fn generate_rotation_copies() {
        let m = parse_motif(TRIANGLE.as_bytes()).unwrap();
        let g = FriezeGroup::standard(TypeTag::TR, q(2, 1), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 2).unwrap();
        let isos: Vec<String> = s.placed.iter().map(|p| p.iso.to_string()).collect();
        assert_eq!(isos, vec!["T(0)", "T(2)", "R(0)", "R(1)"]);
    }

    #[test]
    fn generate_counts_per_class() {
        let m = parse_motif(TRIANGLE.as_bytes()).unwrap();
        let g = FriezeGroup::standard(TypeTag::TRVSg, q(2, 1), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 2).unwrap();
        let count = |k| s.placed.iter().filter(|p| p.iso.kind == k).count();
        assert_eq!(count(IsometryKind::Translation), 2);
        assert_eq!(count(IsometryKind::Rotation), 2);
        assert_eq!(count(IsometryKind::VerticalMirror), 2);
        assert_eq!(count(IsometryKind::Glide), 2);
        assert!(s.placed.iter().all(|p| g.contains(&p.iso)));
    }

    #[test]
    fn generate_errors() {
        let m = parse_motif(TRIANGLE.as_bytes()).unwrap();
        let g = FriezeGroup::standard(TypeTag::T, q(3, 1), Scalar::ZERO).unwrap();
        assert!(matches!(generate(&m, &g, 2), Err(SynthesisError::PeriodMismatch { .. })));
        let g = FriezeGroup::standard(TypeTag::T, q(2, 1), Scalar::ZERO).unwrap();
        assert_eq!(generate(&m, &g, 0), Err(SynthesisError::NoPeriods));
    }

    #[test]
    fn svg_counts_and_determinism() {
        let m = parse_motif(TRIANGLE.as_bytes()).unwrap();
        let g = FriezeGroup::standard(TypeTag::T, q(2, 1), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 3).unwrap();
        let svg = render_svg(&s);
        assert_eq!(svg.matches("<path").count(), 3);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains(r#"version="1.1""#));
        assert!(svg.trim_end().ends_with("</svg>"));

        let empty = Scene {
            motif: m.clone(),
            n_periods: 1,
            placed: vec![],
        };
        assert!(render_svg(&empty).contains(r#"<g id="frieze" clip-path="url(#extent)"></g>"#));

        let g = FriezeGroup::standard(TypeTag::TRVS0, q(2, 1), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 2).unwrap();
        let a = render_svg(&s);
        assert_eq!(a, render_svg(&s.clone()));
        // the V(0) copy of the triangle lies left of the origin and is wrapped
        assert!(a.contains("M4 1 L3.5 1 L4 0.25 Z"));
    }

    #[test]
    fn full_cell_square_is_black() {
        let m = parse_motif(b"cell 1 height 1/2\npolygon filled shade=0 0,-1/2 1,-1/2 1,1/2 0,1/2\n").unwrap();
        let g = FriezeGroup::standard(TypeTag::T, q(1, 1), Scalar::ZERO).unwrap();
        let img = rasterize(&generate(&m, &g, 2).unwrap(), 4, 1).unwrap();
        assert_eq!((img.width(), img.height()), (8, 4));
        assert!(img.pixels().iter().all(|&v| v == 0));
    }

    #[test]
    fn partial_coverage_is_exact() {
        // a quarter-pixel-wide bar in a 2-px image
        let m = parse_motif(b"cell 1 height 1\npolygon filled shade=0 0,-1 1/8,-1 1/8,1 0,1\n").unwrap();
        let g = FriezeGroup::standard(TypeTag::T, q(1, 1), Scalar::ZERO).unwrap();
        let img = rasterize(&generate(&m, &g, 1).unwrap(), 2, 1).unwrap();
        assert_eq!((img.width(), img.height()), (2, 4));
        // coverage 1/4: 255 − 63.75 = 191.25 → 191
        assert_eq!(img.get(0, 0), 191);
        assert_eq!(img.get(1, 0), 255);
    }

    #[test]
    fn raster_errors() {
        let m = parse_motif(TRIANGLE.as_bytes()).unwrap();
        let g = FriezeGroup::standard(TypeTag::T, q(2, 1), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 1).unwrap();
        assert!(matches!(rasterize(&s, 4, 3), Err(SynthesisError::InvalidSupersample(3))));
        let m = parse_motif(b"cell 1/3 height 1\npolygon filled 0,0 1/4,0 0,1\n").unwrap();
        let g = FriezeGroup::standard(TypeTag::T, q(1, 3), Scalar::ZERO).unwrap();
        let s = generate(&m, &g, 3).unwrap();
        assert!(matches!(rasterize(&s, 4, 1), Err(SynthesisError::NonIntegralRaster(_))));
        assert!(rasterize(&s, 6, 1).is_ok());
    }

    #[test]
    fn wrap_shifts_cover_the_strip() {
        let w = q(4, 1);
        assert_eq!(wrap_shifts(q(1, 1), q(2, 1), w), vec![Scalar::ZERO]);
        assert_eq!(wrap_shifts(q(-1, 1), q(1, 1), w), vec![Scalar::ZERO, q(4, 1)]);
        assert_eq!(wrap_shifts(q(3, 1), q(5, 1), w), vec![q(-4, 1), Scalar::ZERO]);
        assert_eq!(wrap_shifts(q(-2, 1), q(0, 1), w), vec![q(4, 1)]);
    }
}

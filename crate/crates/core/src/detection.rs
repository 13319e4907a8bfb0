//! Symmetry detection on horizontally periodic grayscale strips.
//!
//! The image is read as a whole number of periods of a frieze whose axis is
//! the vertical midline, with the left and right edges identified. Every
//! probe compares the image against a pixel permutation: horizontal
//! reflections about half-integer centers and half-period shifts map the
//! pixel lattice onto itself, so no interpolation is involved.

use std::fmt;

use thiserror::Error;

use crate::group::{tag_from_flags, GroupError, SymmetryFlags, TypeTag};
use crate::image::Image;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("image must be at least 2 pixels wide")]
    TooNarrow,
    #[error("no period: no proper divisor of the width {0} is a cyclic shift symmetry")]
    NoPeriod(usize),
    #[error("glide probe needs an even period, got {0}")]
    OddPeriodGlide(usize),
    #[error(transparent)]
    InconsistentFlags(#[from] GroupError),
}

/// Pixel-comparison tolerance: two pixels differ when `|a − b| > delta`, and a
/// probe passes when at most a fraction `eta` of pixel pairs differ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eta: f64,
    pub delta: u8,
}

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance { eta: 0.0, delta: 0 };

    pub fn new(eta: f64, delta: u8) -> Self {
        Tolerance { eta, delta }
    }

    fn max_mismatches(&self, n: usize) -> usize {
        if self.eta <= 0.0 {
            0
        } else {
            (self.eta * n as f64).floor() as usize
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eta: 0.02, delta: 10 }
    }
}

/// A horizontal position in units of half a pixel. Pixel `i` spans
/// `[i, i + 1)`, so `HalfPx(1)` is the center of pixel 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPx(pub i64);

impl HalfPx {
    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfPx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let a = self.0.unsigned_abs();
        if a % 2 == 0 {
            write!(f, "{sign}{}", a / 2)
        } else {
            write!(f, "{sign}{}.5", a / 2)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProbeKind {
    Rotation,
    VerticalMirror,
    HorizontalReflection,
    ProperGlide,
}

/// A passing probe: the located center or axis (for rotation and mirror) and
/// the mismatch fraction of that candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeHit {
    pub position: Option<HalfPx>,
    pub mismatch: f64,
}

/// Counts pixels `(x, y)` whose value differs from the pixel at `map(x, y)`;
/// `None` once the count exceeds `limit`.
fn count_mismatches(img: &Image, delta: u8, limit: usize, map: impl Fn(usize, usize) -> (usize, usize)) -> Option<usize> {
    let mut count = 0;
    for y in 0..img.height() {
        for x in 0..img.width() {
            let (mx, my) = map(x, y);
            if img.get(x, y).abs_diff(img.get(mx, my)) > delta {
                count += 1;
                if count > limit {
                    return None;
                }
            }
        }
    }
    Some(count)
}

fn fraction(count: usize, img: &Image) -> f64 {
    count as f64 / (img.width() * img.height()) as f64
}

/// Mismatch count of the cyclic shift by `d`, if within tolerance.
fn shift_matches(img: &Image, d: usize, tol: Tolerance) -> Option<usize> {
    let w = img.width();
    let limit = tol.max_mismatches(w * img.height());
    count_mismatches(img, tol.delta, limit, |x, y| ((x + d) % w, y))
}

/// Smallest proper divisor `d` of the width whose cyclic shift matches.
pub fn find_period(img: &Image, tol: Tolerance) -> Result<usize, DetectError> {
    let w = img.width();
    if w < 2 {
        return Err(DetectError::TooNarrow);
    }
    (1..w)
        .filter(|d| w % d == 0)
        .find(|&d| shift_matches(img, d, tol).is_some())
        .ok_or(DetectError::NoPeriod(w))
}

/// Like [`find_period`] but reports the full width for aperiodic images.
pub fn minimal_cyclic_shift(img: &Image, tol: Tolerance) -> usize {
    find_period(img, tol).unwrap_or(img.width())
}

/// Looks for one symmetry of the given kind.
///
/// Rotation and mirror candidates are the index-space centers
/// `c ∈ {0, ½, …, p − ½}` mapping column `x` to `(2c − x) mod width`; the
/// first passing candidate in ascending order wins. Positions are reported
/// in continuous pixel coordinates (`c + ½`).
pub fn probe_symmetry(img: &Image, period: usize, kind: ProbeKind, tol: Tolerance) -> Result<Option<ProbeHit>, DetectError> {
    let w = img.width();
    let h = img.height();
    let limit = tol.max_mismatches(w * h);
    let flip = |y: usize| h - 1 - y;
    let hit = |count: usize, position| ProbeHit {
        position,
        mismatch: fraction(count, img),
    };
    match kind {
        ProbeKind::Rotation | ProbeKind::VerticalMirror => {
            let flips = kind == ProbeKind::Rotation;
            for k in 0..2 * period {
                let found = count_mismatches(img, tol.delta, limit, |x, y| {
                    let mx = (k + w - x % w) % w;
                    (mx, if flips { flip(y) } else { y })
                });
                if let Some(count) = found {
                    return Ok(Some(hit(count, Some(HalfPx(k as i64 + 1)))));
                }
            }
            Ok(None)
        }
        ProbeKind::HorizontalReflection => {
            Ok(count_mismatches(img, tol.delta, limit, |x, y| (x, flip(y))).map(|c| hit(c, None)))
        }
        ProbeKind::ProperGlide => {
            if period % 2 != 0 {
                return Err(DetectError::OddPeriodGlide(period));
            }
            let s = period / 2;
            Ok(count_mismatches(img, tol.delta, limit, |x, y| ((x + s) % w, flip(y))).map(|c| hit(c, None)))
        }
    }
}

fn double_columns(img: &Image) -> Image {
    Image::from_fn(img.width() * 2, img.height(), |x, y| img.get(x / 2, y))
}

/// Mismatch fractions of the probes that passed.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mismatch {
    pub period: f64,
    pub rotation: Option<f64>,
    pub vertical_mirror: Option<f64>,
    pub horizontal_reflection: Option<f64>,
    pub proper_glide: Option<f64>,
}

impl Mismatch {
    pub fn worst(&self) -> f64 {
        [self.rotation, self.vertical_mirror, self.horizontal_reflection, self.proper_glide]
            .into_iter()
            .flatten()
            .fold(self.period, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub period_px: usize,
    pub flags: SymmetryFlags,
    pub rot_center_px: Option<HalfPx>,
    pub mirror_axis_px: Option<HalfPx>,
    pub tag: TypeTag,
    pub mismatch: Mismatch,
}

impl fmt::Display for SymmetryReport {
    /// `tag=p2mg period=64 rot=3.5 mirror=19.5 glide=half mismatch=0.0 <T,R,V,S'>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = |p: Option<HalfPx>| p.map_or_else(|| "none".to_string(), |p| p.to_string());
        let glide = if self.flags.has_horizontal_reflection {
            "zero"
        } else if self.flags.has_proper_glide {
            "half"
        } else {
            "none"
        };
        write!(
            f,
            "tag={} period={} rot={} mirror={} glide={} mismatch={:?} {}",
            self.tag,
            self.period_px,
            pos(self.rot_center_px),
            pos(self.mirror_axis_px),
            glide,
            self.mismatch.worst(),
            self.tag.notation()
        )
    }
}

fn classify_once(img: &Image, tol: Tolerance) -> Result<SymmetryReport, DetectError> {
    let period = find_period(img, tol)?;
    let period_count = shift_matches(img, period, tol).unwrap_or(0);
    let rot = probe_symmetry(img, period, ProbeKind::Rotation, tol)?;
    let mirror = probe_symmetry(img, period, ProbeKind::VerticalMirror, tol)?;
    let hrefl = probe_symmetry(img, period, ProbeKind::HorizontalReflection, tol)?;
    // With the horizontal reflection present, a half-period glide would make
    // half the period a translation, so the glide probe only runs without it.
    let glide = if hrefl.is_some() {
        None
    } else if period % 2 == 1 {
        probe_symmetry(&double_columns(img), 2 * period, ProbeKind::ProperGlide, tol)?
    } else {
        probe_symmetry(img, period, ProbeKind::ProperGlide, tol)?
    };
    let flags = SymmetryFlags {
        has_rotation: rot.is_some(),
        has_vertical_mirror: mirror.is_some(),
        has_horizontal_reflection: hrefl.is_some(),
        has_proper_glide: glide.is_some(),
    };
    let tag = tag_from_flags(flags)?;
    Ok(SymmetryReport {
        period_px: period,
        flags,
        rot_center_px: rot.and_then(|h| h.position),
        mirror_axis_px: mirror.and_then(|h| h.position),
        tag,
        mismatch: Mismatch {
            period: fraction(period_count, img),
            rotation: rot.map(|h| h.mismatch),
            vertical_mirror: mirror.map(|h| h.mismatch),
            horizontal_reflection: hrefl.map(|h| h.mismatch),
            proper_glide: glide.map(|h| h.mismatch),
        },
    })
}

/// Finds the period, runs all probes and classifies. Inconsistent flags are
/// retried once with `eta / 2` before being reported.
pub fn classify_image(img: &Image, tol: Tolerance) -> Result<SymmetryReport, DetectError> {
    match classify_once(img, tol) {
        Err(DetectError::InconsistentFlags(_)) if tol.eta > 0.0 => {
            classify_once(img, Tolerance::new(tol.eta / 2.0, tol.delta))
        }
        other => other,
    }
}

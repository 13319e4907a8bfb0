//! The four symmetry kinds of a horizontal strip and their exact algebra.
//!
//! The strip axis is the line `y = 0`. Every symmetry of the strip is one of
//!
//! * `T(t)`: translation by `t` along the axis,
//! * `R(a)`: half-turn about the axis point `(a, 0)`,
//! * `V(a)`: reflection in the vertical line `x = a`,
//! * `S(t)`: reflection in the axis followed by translation by `t`.
//!
//! `S(0)` is the plain horizontal reflection and is kept inside the glide kind.
//! Composition reads right to left: `compose(p, q)` applies `q` first.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsometryKind {
    Translation,
    Rotation,
    VerticalMirror,
    Glide,
}

impl IsometryKind {
    pub const ALL: [IsometryKind; 4] = [
        IsometryKind::Translation,
        IsometryKind::Rotation,
        IsometryKind::VerticalMirror,
        IsometryKind::Glide,
    ];

    /// Single-letter name used in the textual form and the tables.
    pub fn letter(self) -> char {
        match self {
            IsometryKind::Translation => 'T',
            IsometryKind::Rotation => 'R',
            IsometryKind::VerticalMirror => 'V',
            IsometryKind::Glide => 'S',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'T' => Some(IsometryKind::Translation),
            'R' => Some(IsometryKind::Rotation),
            'V' => Some(IsometryKind::VerticalMirror),
            'S' => Some(IsometryKind::Glide),
            _ => None,
        }
    }

    /// Kind of a product, read off the compact multiplication table.
    pub fn product(self, rhs: IsometryKind) -> IsometryKind {
        use IsometryKind::*;
        match (self, rhs) {
            (Translation, k) | (k, Translation) => k,
            (Rotation, Rotation) | (VerticalMirror, VerticalMirror) | (Glide, Glide) => Translation,
            (Rotation, VerticalMirror) | (VerticalMirror, Rotation) => Glide,
            (Rotation, Glide) | (Glide, Rotation) => VerticalMirror,
            (VerticalMirror, Glide) | (Glide, VerticalMirror) => Rotation,
        }
    }

    /// `x ↦ σx`: orientation of the horizontal coordinate.
    pub fn sigma(self) -> Sign {
        match self {
            IsometryKind::Translation | IsometryKind::Glide => Sign::Plus,
            IsometryKind::Rotation | IsometryKind::VerticalMirror => Sign::Minus,
        }
    }

    /// `y ↦ μy`: orientation of the vertical coordinate.
    pub fn mu(self) -> Sign {
        match self {
            IsometryKind::Translation | IsometryKind::VerticalMirror => Sign::Plus,
            IsometryKind::Rotation | IsometryKind::Glide => Sign::Minus,
        }
    }

    fn from_signs(sigma: Sign, mu: Sign) -> IsometryKind {
        match (sigma, mu) {
            (Sign::Plus, Sign::Plus) => IsometryKind::Translation,
            (Sign::Plus, Sign::Minus) => IsometryKind::Glide,
            (Sign::Minus, Sign::Plus) => IsometryKind::VerticalMirror,
            (Sign::Minus, Sign::Minus) => IsometryKind::Rotation,
        }
    }
}

/// A symmetry of the horizontal strip.
///
/// For translations and glides `param` is the horizontal shift; for rotations
/// and vertical mirrors it is the x-coordinate of the center or axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripIsometry {
    pub kind: IsometryKind,
    pub param: Scalar,
}

impl StripIsometry {
    pub const IDENTITY: StripIsometry = StripIsometry {
        kind: IsometryKind::Translation,
        param: Scalar::ZERO,
    };

    pub fn new(kind: IsometryKind, param: Scalar) -> Self {
        StripIsometry { kind, param }
    }

    pub fn translation(t: Scalar) -> Self {
        Self::new(IsometryKind::Translation, t)
    }

    pub fn rotation(center: Scalar) -> Self {
        Self::new(IsometryKind::Rotation, center)
    }

    pub fn vertical_mirror(axis: Scalar) -> Self {
        Self::new(IsometryKind::VerticalMirror, axis)
    }

    pub fn glide(t: Scalar) -> Self {
        Self::new(IsometryKind::Glide, t)
    }

    pub fn horizontal_reflection() -> Self {
        Self::glide(Scalar::ZERO)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn is_horizontal_reflection(&self) -> bool {
        self.kind == IsometryKind::Glide && self.param.is_zero()
    }

    /// A glide with nonzero shift.
    pub fn is_proper_glide(&self) -> bool {
        self.kind == IsometryKind::Glide && !self.param.is_zero()
    }
}

/// Composition by the strip multiplication table: `q` first, then `p`.
pub fn compose(p: &StripIsometry, q: &StripIsometry) -> StripIsometry {
    use IsometryKind::*;
    let a = p.param;
    let b = q.param;
    match (p.kind, q.kind) {
        // T_t ∘ X
        (Translation, Translation) => StripIsometry::translation(a + b),
        (Translation, Rotation) => StripIsometry::rotation(b + a / 2),
        (Translation, VerticalMirror) => StripIsometry::vertical_mirror(b + a / 2),
        (Translation, Glide) => StripIsometry::glide(a + b),
        // R_A ∘ X
        (Rotation, Translation) => StripIsometry::rotation(a - b / 2),
        (Rotation, Rotation) => StripIsometry::translation((a - b) * 2),
        (Rotation, VerticalMirror) => StripIsometry::glide((a - b) * 2),
        (Rotation, Glide) => StripIsometry::vertical_mirror(a - b / 2),
        // V_A ∘ X
        (VerticalMirror, Translation) => StripIsometry::vertical_mirror(a - b / 2),
        (VerticalMirror, Rotation) => StripIsometry::glide((a - b) * 2),
        (VerticalMirror, VerticalMirror) => StripIsometry::translation((a - b) * 2),
        (VerticalMirror, Glide) => StripIsometry::rotation(a - b / 2),
        // S_t ∘ X
        (Glide, Translation) => StripIsometry::glide(a + b),
        (Glide, Rotation) => StripIsometry::vertical_mirror(b + a / 2),
        (Glide, VerticalMirror) => StripIsometry::rotation(b + a / 2),
        (Glide, Glide) => StripIsometry::translation(a + b),
    }
}

pub fn inverse(p: &StripIsometry) -> StripIsometry {
    match p.kind {
        IsometryKind::Translation | IsometryKind::Glide => StripIsometry::new(p.kind, -p.param),
        IsometryKind::Rotation | IsometryKind::VerticalMirror => *p,
    }
}

/// Image of a point.
pub fn apply(p: &StripIsometry, (x, y): (Scalar, Scalar)) -> (Scalar, Scalar) {
    let a = p.param;
    match p.kind {
        IsometryKind::Translation => (x + a, y),
        IsometryKind::Rotation => (a * 2 - x, -y),
        IsometryKind::VerticalMirror => (a * 2 - x, y),
        IsometryKind::Glide => (x + a, -y),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i128 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Affine normal form `(x, y) ↦ (σx + c, μy)` of a strip symmetry.
///
/// Used as an oracle for the multiplication table; not part of the
/// geometric vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub sigma: Sign,
    pub mu: Sign,
    pub offset: Scalar,
}

impl CanonicalForm {
    pub fn new(sigma: Sign, mu: Sign, offset: Scalar) -> Self {
        CanonicalForm { sigma, mu, offset }
    }

    /// `self ∘ rhs` as affine maps.
    pub fn then_after(&self, rhs: &CanonicalForm) -> CanonicalForm {
        CanonicalForm {
            sigma: self.sigma * rhs.sigma,
            mu: self.mu * rhs.mu,
            offset: rhs.offset * self.sigma.value() + self.offset,
        }
    }

    pub fn apply(&self, (x, y): (Scalar, Scalar)) -> (Scalar, Scalar) {
        (x * self.sigma.value() + self.offset, y * self.mu.value())
    }
}

pub fn canonical(p: &StripIsometry) -> CanonicalForm {
    let offset = match p.kind {
        IsometryKind::Translation | IsometryKind::Glide => p.param,
        IsometryKind::Rotation | IsometryKind::VerticalMirror => p.param * 2,
    };
    CanonicalForm::new(p.kind.sigma(), p.kind.mu(), offset)
}

pub fn from_canonical(f: &CanonicalForm) -> StripIsometry {
    let kind = IsometryKind::from_signs(f.sigma, f.mu);
    let param = match f.sigma {
        Sign::Plus => f.offset,
        Sign::Minus => f.offset / 2,
    };
    StripIsometry::new(kind, param)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid isometry `{0}`: expected T(..), R(..), V(..) or S(..) with a rational argument")]
pub struct ParseIsometryError(pub String);

impl fmt::Display for StripIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.letter(), self.param)
    }
}

impl FromStr for StripIsometry {
    type Err = ParseIsometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseIsometryError(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let kind = chars.next().and_then(IsometryKind::from_letter).ok_or_else(err)?;
        let rest = chars.as_str().trim_start();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let param = inner.parse::<Scalar>().map_err(|_| err())?;
        Ok(StripIsometry::new(kind, param))
    }
}

//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls `compose`, `canonical` or `from_generators`: isometries
//! are converted to affine maps `x ↦ sx·x + c, y ↦ sy·y` by hand and closed by
//! brute force.
#![allow(dead_code)]

use std::collections::BTreeSet;

use frieze::{IsometryKind, Scalar, StripIsometry, TypeTag};
use proptest::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Affine {
    pub sx: i8,
    pub sy: i8,
    pub c: Scalar,
}

impl Affine {
    pub const ID: Affine = Affine { sx: 1, sy: 1, c: Scalar::ZERO };

    pub fn of(p: &StripIsometry) -> Affine {
        let t = p.param;
        match p.kind {
            IsometryKind::Translation => Affine { sx: 1, sy: 1, c: t },
            IsometryKind::Rotation => Affine { sx: -1, sy: -1, c: t * 2 },
            IsometryKind::VerticalMirror => Affine { sx: -1, sy: 1, c: t * 2 },
            IsometryKind::Glide => Affine { sx: 1, sy: -1, c: t },
        }
    }

    /// Back to the textual family, checking the map is a strip isometry.
    pub fn to_iso(self) -> StripIsometry {
        match (self.sx, self.sy) {
            (1, 1) => StripIsometry::translation(self.c),
            (-1, -1) => StripIsometry::rotation(self.c / 2),
            (-1, 1) => StripIsometry::vertical_mirror(self.c / 2),
            (1, -1) => StripIsometry::glide(self.c),
            _ => unreachable!(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(self, other: Affine) -> Affine {
        Affine {
            sx: self.sx * other.sx,
            sy: self.sy * other.sy,
            c: other.c * self.sx as i128 + self.c,
        }
    }

    pub fn inv(self) -> Affine {
        Affine {
            sx: self.sx,
            sy: self.sy,
            c: -(self.c * self.sx as i128),
        }
    }

    pub fn apply(self, (x, y): (Scalar, Scalar)) -> (Scalar, Scalar) {
        (x * self.sx as i128 + self.c, y * self.sy as i128)
    }
}

/// Outcome of the brute-force closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Brute {
    NotAFrieze,
    Frieze { tag: TypeTag, period: Scalar },
}

/// All products of at most `max_len` generators or inverses.
pub fn word_closure(gens: &[StripIsometry], max_len: usize) -> BTreeSet<Affine> {
    let letters: Vec<Affine> = gens
        .iter()
        .flat_map(|g| {
            let a = Affine::of(g);
            [a, a.inv()]
        })
        .collect();
    let mut all = BTreeSet::from([Affine::ID]);
    let mut frontier = vec![Affine::ID];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in &letters {
                let v = l.after(*w);
                if all.insert(v) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    all
}

fn gcd(a: Scalar, b: Scalar) -> Scalar {
    // Euclid on rationals.
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = a.rem_euclid(b);
        a = b;
        b = r;
    }
    a
}

/// Classifies a brute-force element set by inspecting the families present.
pub fn classify_words(words: &BTreeSet<Affine>) -> Brute {
    let period = words
        .iter()
        .filter(|w| (w.sx, w.sy) == (1, 1))
        .fold(Scalar::ZERO, |acc, w| gcd(acc, w.c));
    if period.is_zero() {
        return Brute::NotAFrieze;
    }
    let has = |sx, sy| words.iter().any(|w| (w.sx, w.sy) == (sx, sy));
    let rot = has(-1, -1);
    let mirror = has(-1, 1);
    let glides: Vec<Scalar> = words.iter().filter(|w| (w.sx, w.sy) == (1, -1)).map(|w| w.c).collect();
    let plain = glides.iter().any(|c| c.is_multiple_of(period));
    let proper = !glides.is_empty() && !plain;
    let tag = match (rot, mirror, plain, proper) {
        (false, false, false, false) => TypeTag::T,
        (true, false, false, false) => TypeTag::TR,
        (false, true, false, false) => TypeTag::TV,
        (false, false, true, false) => TypeTag::TS0,
        (false, false, false, true) => TypeTag::TSg,
        (true, true, true, false) => TypeTag::TRVS0,
        (true, true, false, true) => TypeTag::TRVSg,
        other => panic!("impossible family pattern {other:?}"),
    };
    Brute::Frieze { tag, period }
}

pub fn q(n: i128, d: i128) -> Scalar {
    Scalar::new(n, d)
}

/// Rational with numerator in `-400..=400` and denominator in `1..=12`.
pub fn rational() -> impl Strategy<Value = Scalar> {
    (-400i128..=400, 1i128..=12).prop_map(|(n, d)| Scalar::new(n, d))
}

pub fn positive_rational() -> impl Strategy<Value = Scalar> {
    (1i128..=200, 1i128..=12).prop_map(|(n, d)| Scalar::new(n, d))
}

pub fn kind() -> impl Strategy<Value = IsometryKind> {
    prop::sample::select(IsometryKind::ALL.to_vec())
}

pub fn isometry() -> impl Strategy<Value = StripIsometry> {
    (kind(), rational()).prop_map(|(k, t)| StripIsometry::new(k, t))
}

pub fn tag() -> impl Strategy<Value = TypeTag> {
    prop::sample::select(TypeTag::ALL.to_vec())
}

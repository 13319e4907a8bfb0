//! Frieze groups: closure of generator sets, the seven types, and element
//! families.
//!
//! A frieze group with period `τ` is described by at most three anchors:
//! rotation centers form the family `rot_anchor + nτ/2`, mirror axes the
//! family `mirror_anchor + nτ/2`, and glides are either `S(nτ)` (phase zero,
//! contains the horizontal reflection) or `S((n+½)τ)` (phase half).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::iso::{compose, inverse, IsometryKind, StripIsometry};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty generator set")]
    NoGenerators,
    #[error("not a frieze: no translation generated")]
    NotAFrieze,
    #[error("inconsistent symmetry flags: {0}")]
    InconsistentFlags(&'static str),
    #[error("period must be positive, got {0}")]
    NonPositivePeriod(Scalar),
    #[error("invalid group description: {0}")]
    Malformed(String),
}

/// The seven frieze types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeTag {
    T,
    TR,
    TV,
    TS0,
    TSg,
    TRVS0,
    TRVSg,
}

impl TypeTag {
    pub const ALL: [TypeTag; 7] = [
        TypeTag::T,
        TypeTag::TR,
        TypeTag::TV,
        TypeTag::TS0,
        TypeTag::TSg,
        TypeTag::TRVS0,
        TypeTag::TRVSg,
    ];

    /// Crystallographic (IUC) name.
    pub fn alias(self) -> &'static str {
        match self {
            TypeTag::T => "p1",
            TypeTag::TR => "p2",
            TypeTag::TV => "p1m1",
            TypeTag::TS0 => "p11m",
            TypeTag::TSg => "p11g",
            TypeTag::TRVS0 => "p2mm",
            TypeTag::TRVSg => "p2mg",
        }
    }

    /// Generator-list notation, e.g. `<T,R,V,S'>`.
    pub fn notation(self) -> &'static str {
        match self {
            TypeTag::T => "<T>",
            TypeTag::TR => "<T,R>",
            TypeTag::TV => "<T,V>",
            TypeTag::TS0 => "<T,S0>",
            TypeTag::TSg => "<T,S'>",
            TypeTag::TRVS0 => "<T,R,V,S0>",
            TypeTag::TRVSg => "<T,R,V,S'>",
        }
    }

    pub fn has_rotation(self) -> bool {
        matches!(self, TypeTag::TR | TypeTag::TRVS0 | TypeTag::TRVSg)
    }

    pub fn has_vertical_mirror(self) -> bool {
        matches!(self, TypeTag::TV | TypeTag::TRVS0 | TypeTag::TRVSg)
    }

    pub fn glide_phase(self) -> GlidePhase {
        match self {
            TypeTag::TS0 | TypeTag::TRVS0 => GlidePhase::Zero,
            TypeTag::TSg | TypeTag::TRVSg => GlidePhase::Half,
            _ => GlidePhase::None,
        }
    }

    pub fn flags(self) -> SymmetryFlags {
        SymmetryFlags {
            has_rotation: self.has_rotation(),
            has_vertical_mirror: self.has_vertical_mirror(),
            has_horizontal_reflection: self.glide_phase() == GlidePhase::Zero,
            has_proper_glide: self.glide_phase() == GlidePhase::Half,
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.alias())
    }
}

impl FromStr for TypeTag {
    type Err = GroupError;

    /// Accepts aliases (`p2mg`), bracket notation (`<T,R,V,S'>`, also with
    /// `⟨⟩`, `S₀`, `S′`) and the variant names (`TRVSg`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '⟨' => '<',
                '⟩' => '>',
                '′' => '\'',
                '₀' => '0',
                c => c,
            })
            .collect();
        TypeTag::ALL
            .into_iter()
            .find(|t| {
                norm.eq_ignore_ascii_case(t.alias()) || norm == t.notation() || norm == format!("{t:?}")
            })
            .ok_or_else(|| GroupError::Malformed(format!("unknown frieze type `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlidePhase {
    None,
    Zero,
    Half,
}

impl fmt::Display for GlidePhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GlidePhase::None => "none",
            GlidePhase::Zero => "zero",
            GlidePhase::Half => "half",
        })
    }
}

impl FromStr for GlidePhase {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(GlidePhase::None),
            "zero" => Ok(GlidePhase::Zero),
            "half" => Ok(GlidePhase::Half),
            _ => Err(GroupError::Malformed(format!("unknown glide phase `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymmetryFlags {
    pub has_rotation: bool,
    pub has_vertical_mirror: bool,
    pub has_horizontal_reflection: bool,
    pub has_proper_glide: bool,
}

/// Decision table from symmetry flags to type.
///
/// Any two of {rotation, vertical mirror, glide family} force the third, and
/// a group cannot hold both the horizontal reflection and a proper glide.
pub fn tag_from_flags(f: SymmetryFlags) -> Result<TypeTag, GroupError> {
    if f.has_horizontal_reflection && f.has_proper_glide {
        return Err(GroupError::InconsistentFlags(
            "horizontal reflection and proper glide together imply a half-period translation",
        ));
    }
    let glide = f.has_horizontal_reflection || f.has_proper_glide;
    match (f.has_rotation, f.has_vertical_mirror, glide) {
        (false, false, false) => Ok(TypeTag::T),
        (true, false, false) => Ok(TypeTag::TR),
        (false, true, false) => Ok(TypeTag::TV),
        (false, false, true) if f.has_horizontal_reflection => Ok(TypeTag::TS0),
        (false, false, true) => Ok(TypeTag::TSg),
        (true, true, true) if f.has_horizontal_reflection => Ok(TypeTag::TRVS0),
        (true, true, true) => Ok(TypeTag::TRVSg),
        (true, true, false) => Err(GroupError::InconsistentFlags("rotation and mirror without a glide")),
        (true, false, true) => Err(GroupError::InconsistentFlags("rotation and glide without a mirror")),
        (false, true, true) => Err(GroupError::InconsistentFlags("mirror and glide without a rotation")),
    }
}

/// A classified frieze group. Anchors are kept reduced into `[0, τ/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FriezeGroup {
    tag: TypeTag,
    period: Scalar,
    rot_anchor: Option<Scalar>,
    mirror_anchor: Option<Scalar>,
    glide_phase: GlidePhase,
}

impl FriezeGroup {
    /// Validating constructor; anchors are reduced modulo `τ/2`.
    pub fn new(
        tag: TypeTag,
        period: Scalar,
        rot_anchor: Option<Scalar>,
        mirror_anchor: Option<Scalar>,
        glide_phase: GlidePhase,
    ) -> Result<Self, GroupError> {
        if !period.is_positive() {
            return Err(GroupError::NonPositivePeriod(period));
        }
        let half = period / 2;
        let rot_anchor = rot_anchor.map(|a| a.rem_euclid(half));
        let mirror_anchor = mirror_anchor.map(|a| a.rem_euclid(half));
        let bad = |msg: &str| Err(GroupError::Malformed(format!("{msg} for type {tag}")));
        if rot_anchor.is_some() != tag.has_rotation() {
            return bad("rotation anchor presence does not match");
        }
        if mirror_anchor.is_some() != tag.has_vertical_mirror() {
            return bad("mirror anchor presence does not match");
        }
        if glide_phase != tag.glide_phase() {
            return bad("glide phase does not match");
        }
        if let (Some(r), Some(m)) = (rot_anchor, mirror_anchor) {
            let offset = (m - r).rem_euclid(half);
            let want = if tag == TypeTag::TRVSg { period / 4 } else { Scalar::ZERO };
            if offset != want {
                return bad("mirror/center offset violates the spacing law");
            }
        }
        Ok(FriezeGroup {
            tag,
            period,
            rot_anchor,
            mirror_anchor,
            glide_phase,
        })
    }

    /// The standard group of a type with the given period; `anchor` places the
    /// rotation centers (and the mirrors, shifted by `τ/4` for `TRVSg`).
    pub fn standard(tag: TypeTag, period: Scalar, anchor: Scalar) -> Result<Self, GroupError> {
        let rot = tag.has_rotation().then_some(anchor);
        let mirror = tag.has_vertical_mirror().then(|| match tag {
            TypeTag::TRVSg => anchor + period / 4,
            _ => anchor,
        });
        FriezeGroup::new(tag, period, rot, mirror, tag.glide_phase())
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn period(&self) -> Scalar {
        self.period
    }

    pub fn rot_anchor(&self) -> Option<Scalar> {
        self.rot_anchor
    }

    pub fn mirror_anchor(&self) -> Option<Scalar> {
        self.mirror_anchor
    }

    pub fn glide_phase(&self) -> GlidePhase {
        self.glide_phase
    }

    pub fn flags(&self) -> SymmetryFlags {
        self.tag.flags()
    }

    /// A generating set: the period translation plus one element of each
    /// family present.
    pub fn generators(&self) -> Vec<StripIsometry> {
        let mut gens = vec![StripIsometry::translation(self.period)];
        if let Some(a) = self.rot_anchor {
            gens.push(StripIsometry::rotation(a));
        }
        if let Some(a) = self.mirror_anchor {
            gens.push(StripIsometry::vertical_mirror(a));
        }
        match self.glide_phase {
            GlidePhase::None => {}
            GlidePhase::Zero => gens.push(StripIsometry::horizontal_reflection()),
            GlidePhase::Half => gens.push(StripIsometry::glide(self.period / 2)),
        }
        gens
    }

    pub fn contains(&self, p: &StripIsometry) -> bool {
        let tau = self.period;
        let half = tau / 2;
        match p.kind {
            IsometryKind::Translation => p.param.is_multiple_of(tau),
            IsometryKind::Rotation => self.rot_anchor.is_some_and(|a| (p.param - a).is_multiple_of(half)),
            IsometryKind::VerticalMirror => {
                self.mirror_anchor.is_some_and(|a| (p.param - a).is_multiple_of(half))
            }
            IsometryKind::Glide => match self.glide_phase {
                GlidePhase::None => false,
                GlidePhase::Zero => p.param.is_multiple_of(tau),
                GlidePhase::Half => (p.param - half).is_multiple_of(tau),
            },
        }
    }

    /// Every element whose parameter lies in `[x0, x1)`, sorted by kind, then
    /// parameter.
    pub fn elements_in_window(&self, x0: Scalar, x1: Scalar) -> Vec<StripIsometry> {
        let tau = self.period;
        let half = tau / 2;
        let mut out = Vec::new();
        let mut family = |kind: IsometryKind, base: Scalar, step: Scalar| {
            let first = ((x0 - base) / step).ceil();
            let mut k = first;
            loop {
                let v = base + step * k;
                if v >= x1 {
                    break;
                }
                out.push(StripIsometry::new(kind, v));
                k += 1;
            }
        };
        family(IsometryKind::Translation, Scalar::ZERO, tau);
        if let Some(a) = self.rot_anchor {
            family(IsometryKind::Rotation, a, half);
        }
        if let Some(a) = self.mirror_anchor {
            family(IsometryKind::VerticalMirror, a, half);
        }
        match self.glide_phase {
            GlidePhase::None => {}
            GlidePhase::Zero => family(IsometryKind::Glide, Scalar::ZERO, tau),
            GlidePhase::Half => family(IsometryKind::Glide, half, tau),
        }
        out.sort();
        out
    }
}

impl fmt::Display for FriezeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<Scalar>| v.map_or_else(|| "none".to_string(), |s| s.to_string());
        write!(
            f,
            "tag={} period={} rot_anchor={} mirror_anchor={} glide={}",
            self.tag,
            self.period,
            opt(self.rot_anchor),
            opt(self.mirror_anchor),
            self.glide_phase
        )
    }
}

impl FromStr for FriezeGroup {
    type Err = GroupError;

    /// Parses `tag=p2mg period=2 rot_anchor=0 mirror_anchor=1/2 glide=half`.
    /// Missing anchors and glide default to `none`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tag = None;
        let mut period = None;
        let mut rot = None;
        let mut mirror = None;
        let mut glide = GlidePhase::None;
        let scalar = |v: &str| -> Result<Option<Scalar>, GroupError> {
            if v == "none" {
                return Ok(None);
            }
            v.parse::<Scalar>()
                .map(Some)
                .map_err(|e| GroupError::Malformed(e.to_string()))
        };
        for field in s.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| GroupError::Malformed(format!("expected key=value, got `{field}`")))?;
            match key {
                "tag" => tag = Some(value.parse::<TypeTag>()?),
                "period" => period = scalar(value)?,
                "rot_anchor" => rot = scalar(value)?,
                "mirror_anchor" => mirror = scalar(value)?,
                "glide" => glide = value.parse()?,
                _ => return Err(GroupError::Malformed(format!("unknown field `{key}`"))),
            }
        }
        let tag = tag.ok_or_else(|| GroupError::Malformed("missing tag".into()))?;
        let period = period.ok_or_else(|| GroupError::Malformed("missing period".into()))?;
        FriezeGroup::new(tag, period, rot, mirror, glide)
    }
}

/// Closes a generator set under composition and classifies the result.
///
/// The group is tracked as a translation lattice `τZ` together with one
/// representative for each of the rotation, mirror and glide classes. Every
/// element of a class differs from its representative by a translation, so
/// closing amounts to feeding such differences (and all products of
/// representatives) into the lattice until nothing changes. The lattice can
/// only shrink to a divisor inside `(1/L)Z`, where `L` clears all generator
/// denominators, so the loop terminates.
pub fn from_generators(gens: &[StripIsometry]) -> Result<FriezeGroup, GroupError> {
    if gens.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    let mut closure = Closure::default();
    let mut pending: Vec<StripIsometry> = gens.to_vec();
    loop {
        let mut changed = false;
        while let Some(e) = pending.pop() {
            changed |= closure.insert(e, &mut pending);
        }
        if !changed {
            break;
        }
        closure.reduce();
        let reps: Vec<StripIsometry> = closure.reps.iter().flatten().copied().collect();
        for a in &reps {
            for b in &reps {
                pending.push(compose(a, b));
            }
        }
    }
    closure.classify()
}

#[derive(Default)]
struct Closure {
    /// Nonnegative generator of the translation lattice; zero when trivial.
    lattice: Scalar,
    /// Rotation, vertical mirror, glide.
    reps: [Option<StripIsometry>; 3],
}

impl Closure {
    fn slot(kind: IsometryKind) -> Option<usize> {
        match kind {
            IsometryKind::Translation => None,
            IsometryKind::Rotation => Some(0),
            IsometryKind::VerticalMirror => Some(1),
            IsometryKind::Glide => Some(2),
        }
    }

    fn insert(&mut self, e: StripIsometry, pending: &mut Vec<StripIsometry>) -> bool {
        match Self::slot(e.kind) {
            None => {
                let g = Scalar::gcd(self.lattice, e.param);
                let changed = g != self.lattice;
                self.lattice = g;
                changed
            }
            Some(i) => match self.reps[i] {
                None => {
                    self.reps[i] = Some(e);
                    true
                }
                Some(r) => {
                    // e ∘ r⁻¹ is a translation; r is redundant mod the lattice.
                    pending.push(compose(&e, &inverse(&r)));
                    false
                }
            },
        }
    }

    fn reduce(&mut self) {
        if self.lattice.is_zero() {
            return;
        }
        let tau = self.lattice;
        for rep in self.reps.iter_mut().flatten() {
            let m = match rep.kind {
                IsometryKind::Glide => tau,
                _ => tau / 2,
            };
            rep.param = rep.param.rem_euclid(m);
        }
    }

    fn classify(mut self) -> Result<FriezeGroup, GroupError> {
        if self.lattice.is_zero() {
            return Err(GroupError::NotAFrieze);
        }
        self.reduce();
        let tau = self.lattice;
        let [rot, mirror, glide] = self.reps;
        let phase = match glide {
            None => GlidePhase::None,
            Some(s) if s.param.is_zero() => GlidePhase::Zero,
            Some(s) => {
                debug_assert_eq!(s.param, tau / 2);
                GlidePhase::Half
            }
        };
        let tag = tag_from_flags(SymmetryFlags {
            has_rotation: rot.is_some(),
            has_vertical_mirror: mirror.is_some(),
            has_horizontal_reflection: phase == GlidePhase::Zero,
            has_proper_glide: phase == GlidePhase::Half,
        })?;
        FriezeGroup::new(tag, tau, rot.map(|r| r.param), mirror.map(|m| m.param), phase)
    }
}

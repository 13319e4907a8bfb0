//! Wrapping a frieze around a cylinder.
//!
//! Cutting `n` periods out of the strip and gluing the ends turns the period
//! translation into a rotation by `2π/n` about the cylinder axis. Half-turns
//! become rotations about horizontal axes, vertical mirrors become mirror
//! planes through the axis, the horizontal reflection becomes the horizontal
//! mirror plane, and a proper glide becomes a rotoreflection.

use std::fmt;

use crate::group::{GlidePhase, TypeTag};
use crate::image::Image;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CylinderReport {
    pub n: u32,
    /// Order of the rotation group about the vertical axis.
    pub rotation_order: u32,
    pub halfturn_axes: u32,
    pub mirror_planes: u32,
    pub horizontal_plane: bool,
    pub rotoreflection: bool,
    /// Conventional point-group label such as `D6h`.
    pub label: String,
}

impl CylinderReport {
    /// Label family with `n` left symbolic, e.g. `Dnh`.
    pub fn family(tag: TypeTag) -> &'static str {
        match tag {
            TypeTag::T => "Cn",
            TypeTag::TR => "Dn",
            TypeTag::TV => "Cnv",
            TypeTag::TS0 => "Cnh",
            TypeTag::TSg => "S2n",
            TypeTag::TRVS0 => "Dnh",
            TypeTag::TRVSg => "Dnd",
        }
    }

    /// Presence pattern of (half-turns, mirror planes, horizontal plane,
    /// rotoreflection).
    pub fn profile(&self) -> (bool, bool, bool, bool) {
        (self.halfturn_axes > 0, self.mirror_planes > 0, self.horizontal_plane, self.rotoreflection)
    }
}

fn label(tag: TypeTag, n: u32) -> String {
    match tag {
        TypeTag::T => format!("C{n}"),
        TypeTag::TR => format!("D{n}"),
        TypeTag::TV => format!("C{n}v"),
        TypeTag::TS0 => format!("C{n}h"),
        TypeTag::TSg => format!("S{}", 2 * n),
        TypeTag::TRVS0 => format!("D{n}h"),
        TypeTag::TRVSg => format!("D{n}d"),
    }
}

/// Cylinder symmetries of `n` periods of a frieze of type `tag`. Panics if
/// `n` is zero.
pub fn wrap_report(tag: TypeTag, n: u32) -> CylinderReport {
    assert!(n >= 1, "a cylinder needs at least one period");
    let count = |present: bool| if present { n } else { 0 };
    CylinderReport {
        n,
        rotation_order: n,
        halfturn_axes: count(tag.has_rotation()),
        mirror_planes: count(tag.has_vertical_mirror()),
        horizontal_plane: tag.glide_phase() == GlidePhase::Zero,
        rotoreflection: tag.glide_phase() == GlidePhase::Half,
        label: label(tag, n),
    }
}

impl fmt::Display for CylinderReport {
    /// `n=6 Cnv: rot=2pi/6 mirrors=6 halfturns=0 hplane=no rotoreflection=no label=C6v (conventional)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let family = TypeTag::ALL
            .into_iter()
            .find(|t| wrap_report(*t, self.n) == *self)
            .map_or("?", CylinderReport::family);
        write!(
            f,
            "n={} {family}: rot=2pi/{} mirrors={} halfturns={} hplane={} rotoreflection={} label={} (conventional)",
            self.n,
            self.rotation_order,
            self.mirror_planes,
            self.halfturn_axes,
            yn(self.horizontal_plane),
            yn(self.rotoreflection),
            self.label
        )
    }
}

pub const CYCLIC_MARKER: &str = "cyclic: left and right edges identified";

/// `n` side-by-side copies of a one-period texture, tagged as cyclic.
pub fn wrap_texture(img: &Image, n: u32) -> Image {
    assert!(n >= 1, "a cylinder needs at least one period");
    let w = img.width();
    let mut out = Image::from_fn(w * n as usize, img.height(), |x, y| img.get(x % w, y));
    out.comments = img.comments.clone();
    out.comments.push(format!("{CYCLIC_MARKER} (n={n})"));
    out
}

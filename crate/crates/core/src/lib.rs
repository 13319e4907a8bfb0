//! Exact computations with frieze (border pattern) symmetry groups.
//!
//! * [`iso`]: the four strip symmetries and their multiplication table,
//! * [`group`]: closure of generator sets and the seven frieze types,
//! * [`synthesis`]: stamping a motif with a group, SVG and raster output,
//! * [`detection`]: recovering the type of a periodic grayscale strip,
//! * [`cylinder`]: wrapping a frieze around a cylinder.

pub mod cylinder;
pub mod detection;
pub mod group;
pub mod image;
pub mod iso;
pub mod scalar;
pub mod synthesis;
pub mod table;

pub use group::{from_generators, tag_from_flags, FriezeGroup, GlidePhase, GroupError, SymmetryFlags, TypeTag};
pub use image::Image;
pub use iso::{apply, compose, inverse, IsometryKind, StripIsometry};
pub use scalar::Scalar;
pub use cylinder::{wrap_report, wrap_texture, CylinderReport};
pub use detection::{classify_image, SymmetryReport, Tolerance};
pub use synthesis::{generate, parse_motif, rasterize, render_svg, Motif, Scene};

//! The eight lattice symmetries fixing the origin, translations, and
//! canonical forms under their composition.
//!
//! Two sets are *congruent* when some rotation or reflection followed by a
//! translation maps one onto the other. Congruence preserves set size and
//! boundary size, so all classification here happens per congruence class.

use crate::lattice::{Vertex, VertexSet};
use crate::{Error, Result};

/// The dihedral symmetries of the lattice fixing the origin.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PointSymmetry {
    Identity,
    /// Quarter turn counterclockwise: `(x, y) -> (-y, x)`.
    Rot90,
    Rot180,
    Rot270,
    /// Reflection across the x-axis: `(x, y) -> (x, -y)`.
    FlipX,
    /// Reflection across the y-axis: `(x, y) -> (-x, y)`.
    FlipY,
    /// Reflection across the diagonal `y = x`: `(x, y) -> (y, x)`.
    FlipDiag,
    /// Reflection across the antidiagonal `y = -x`: `(x, y) -> (-y, -x)`.
    FlipAnti,
}

impl PointSymmetry {
    pub const ALL: [PointSymmetry; 8] = [
        PointSymmetry::Identity,
        PointSymmetry::Rot90,
        PointSymmetry::Rot180,
        PointSymmetry::Rot270,
        PointSymmetry::FlipX,
        PointSymmetry::FlipY,
        PointSymmetry::FlipDiag,
        PointSymmetry::FlipAnti,
    ];

    pub const fn apply_point(self, v: Vertex) -> Vertex {
        match self {
            PointSymmetry::Identity => v,
            PointSymmetry::Rot90 => Vertex::new(-v.y, v.x),
            PointSymmetry::Rot180 => Vertex::new(-v.x, -v.y),
            PointSymmetry::Rot270 => Vertex::new(v.y, -v.x),
            PointSymmetry::FlipX => Vertex::new(v.x, -v.y),
            PointSymmetry::FlipY => Vertex::new(-v.x, v.y),
            PointSymmetry::FlipDiag => Vertex::new(v.y, v.x),
            PointSymmetry::FlipAnti => Vertex::new(-v.y, -v.x),
        }
    }
}

/// A lattice isometry: a point symmetry followed by a translation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Isometry {
    pub symmetry: PointSymmetry,
    pub shift: (i64, i64),
}

impl Isometry {
    /// Applies the isometry to every point.
    ///
    /// Errors with [`Error::CoordinateOverflow`] if a resulting coordinate
    /// leaves the supported range.
    pub fn apply(&self, set: &VertexSet) -> Result<VertexSet> {
        VertexSet::new(set.iter().map(|v| {
            self.symmetry
                .apply_point(v)
                .translated(self.shift.0, self.shift.1)
        }))
    }
}

/// Shifts the set so its least vertex in `(y, x)` order sits at the origin.
fn anchored_at_origin(set: &VertexSet) -> VertexSet {
    // Nonempty by the callers' guards; the least vertex is first in the
    // sorted list.
    let least = set.vertices()[0];
    set.translated(-least.x, -least.y)
}

/// The canonical representative of the congruence class of `set`.
///
/// Among the eight point-symmetric images, each translated so its least
/// vertex (in `(y, x)` order) sits at the origin, returns the one whose
/// sorted vertex list is lexicographically least. Two sets are congruent
/// exactly when their canonical forms are equal.
///
/// Errors with [`Error::EmptySet`] on the empty set.
pub fn canonical_form(set: &VertexSet) -> Result<VertexSet> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut best: Option<VertexSet> = None;
    for sym in PointSymmetry::ALL {
        let image: VertexSet = set.iter().map(|v| sym.apply_point(v)).collect();
        let candidate = anchored_at_origin(&image);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("eight candidates were examined"))
}

/// True when some isometry maps `a` onto `b`. Empty sets are congruent only
/// to each other.
pub fn are_congruent(a: &VertexSet, b: &VertexSet) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    canonical_form(a).expect("nonempty") == canonical_form(b).expect("nonempty")
}

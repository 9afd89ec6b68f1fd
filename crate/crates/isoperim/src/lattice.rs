//! Points and finite point sets of the square lattice with 4-neighbor
//! adjacency.

use crate::{Error, Result};
use std::fmt;

/// Largest coordinate magnitude accepted by public constructors. Interior
/// arithmetic adds at most a few units per operation, so `i64` never wraps.
pub const MAX_COORD: i64 = 1 << 30;

/// A lattice point.
///
/// The derived order is by `(y, x)`, so sorted vertex lists read
/// bottom-to-top, left-to-right. Canonical forms compare such lists
/// lexicographically; changing this order changes which representative
/// is canonical.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }

    /// The four lattice neighbors at `ℓ1` distance one, in E, N, W, S order.
    pub const fn neighbors(self) -> [Vertex; 4] {
        [
            Vertex::new(self.x + 1, self.y),
            Vertex::new(self.x, self.y + 1),
            Vertex::new(self.x - 1, self.y),
            Vertex::new(self.x, self.y - 1),
        ]
    }

    /// The eight points at `ℓ∞` distance one.
    pub const fn king_neighbors(self) -> [Vertex; 8] {
        [
            Vertex::new(self.x + 1, self.y),
            Vertex::new(self.x + 1, self.y + 1),
            Vertex::new(self.x, self.y + 1),
            Vertex::new(self.x - 1, self.y + 1),
            Vertex::new(self.x - 1, self.y),
            Vertex::new(self.x - 1, self.y - 1),
            Vertex::new(self.x, self.y - 1),
            Vertex::new(self.x + 1, self.y - 1),
        ]
    }

    pub const fn translated(self, dx: i64, dy: i64) -> Self {
        Vertex::new(self.x + dx, self.y + dy)
    }

    pub const fn l1_dist(self, other: Vertex) -> i64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }

    pub const fn linf_dist(self, other: Vertex) -> i64 {
        let dx = (self.x - other.x).abs();
        let dy = (self.y - other.y).abs();
        if dx > dy {
            dx
        } else {
            dy
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A finite set of lattice points, stored as a sorted, deduplicated list.
///
/// Equality, hashing, and ordering are element-wise on the sorted list, so
/// two values compare equal exactly when they are the same point set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct VertexSet {
    verts: Vec<Vertex>,
}

impl VertexSet {
    /// Builds a set from arbitrary points, deduplicating.
    ///
    /// Errors with [`Error::CoordinateOverflow`] if any coordinate magnitude
    /// exceeds [`MAX_COORD`]; the margin keeps every derived computation
    /// (boundaries, enclosing boxes, canonical shifts) inside `i64`.
    pub fn new<I: IntoIterator<Item = Vertex>>(verts: I) -> Result<Self> {
        let verts: Vec<Vertex> = verts.into_iter().collect();
        if verts
            .iter()
            .any(|v| v.x.abs() > MAX_COORD || v.y.abs() > MAX_COORD)
        {
            return Err(Error::CoordinateOverflow);
        }
        Ok(Self::from_unchecked(verts))
    }

    /// Internal constructor for points produced by crate operations, which
    /// stay far below the coordinate guard by construction.
    pub(crate) fn from_unchecked(mut verts: Vec<Vertex>) -> Self {
        verts.sort_unstable();
        verts.dedup();
        VertexSet { verts }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    /// The points in sorted `(y, x)` order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.verts.iter().copied()
    }

    /// This set plus one point.
    pub fn with(&self, v: Vertex) -> Self {
        let mut verts = self.verts.clone();
        if let Err(i) = verts.binary_search(&v) {
            verts.insert(i, v);
        }
        VertexSet { verts }
    }

    /// This set minus one point.
    pub fn without(&self, v: Vertex) -> Self {
        let mut verts = self.verts.clone();
        if let Ok(i) = verts.binary_search(&v) {
            verts.remove(i);
        }
        VertexSet { verts }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        // Translation preserves the (y, x) order, so the list stays sorted.
        VertexSet {
            verts: self.verts.iter().map(|v| v.translated(dx, dy)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.verts.iter().all(|&v| other.contains(v))
    }

    /// The vertex boundary: points outside the set with a neighbor inside.
    pub fn boundary(&self) -> VertexSet {
        let mut out = Vec::with_capacity(self.verts.len() * 2 + 4);
        for v in &self.verts {
            for n in v.neighbors() {
                if !self.contains(n) {
                    out.push(n);
                }
            }
        }
        VertexSet::from_unchecked(out)
    }

    pub fn boundary_size(&self) -> usize {
        self.boundary().len()
    }

    /// The set together with its vertex boundary.
    pub fn closed_neighborhood(&self) -> VertexSet {
        let mut out = Vec::with_capacity(self.verts.len() * 3 + 4);
        out.extend_from_slice(&self.verts);
        for v in &self.verts {
            for n in v.neighbors() {
                if !self.contains(n) {
                    out.push(n);
                }
            }
        }
        VertexSet::from_unchecked(out)
    }

    /// Connected components under 4-neighbor adjacency, sorted by their
    /// least vertex.
    pub fn l1_components(&self) -> Vec<VertexSet> {
        self.components_by(|v| v.neighbors().to_vec())
    }

    /// Connected components under 8-neighbor adjacency, sorted by their
    /// least vertex.
    pub fn linf_components(&self) -> Vec<VertexSet> {
        self.components_by(|v| v.king_neighbors().to_vec())
    }

    /// True when the set has at most one 4-neighbor component.
    pub fn is_connected(&self) -> bool {
        self.l1_components().len() <= 1
    }

    fn components_by(&self, adjacent: impl Fn(Vertex) -> Vec<Vertex>) -> Vec<VertexSet> {
        let n = self.verts.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(self.verts[i]);
                for nb in adjacent(self.verts[i]) {
                    if let Ok(j) = self.verts.binary_search(&nb) {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            out.push(VertexSet::from_unchecked(comp));
        }
        // `start` walks the sorted list, so components come out ordered by
        // their least vertex already; keep that explicit.
        out.sort();
        out
    }
}

impl FromIterator<Vertex> for VertexSet {
    /// Collects points without the coordinate guard; intended for literals
    /// and crate-internal values. Use [`VertexSet::new`] for external input.
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_unchecked(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(pts: &[(i64, i64)]) -> VertexSet {
        pts.iter().map(|&(x, y)| Vertex::new(x, y)).collect()
    }

    #[test]
    fn singleton_boundary_is_the_four_neighbors() {
        let a = vs(&[(0, 0)]);
        let b = a.boundary();
        assert_eq!(b, vs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]));
        assert_eq!(a.closed_neighborhood().len(), 5);
    }

    #[test]
    fn domino_boundary_has_six_points() {
        let a = vs(&[(0, 0), (1, 0)]);
        assert_eq!(a.boundary_size(), 6);
        assert_eq!(a.closed_neighborhood().len(), 8);
    }

    #[test]
    fn diagonal_pair_boundary_has_six_points() {
        let a = vs(&[(0, 0), (1, 1)]);
        assert_eq!(a.boundary_size(), 6);
        assert_eq!(a.l1_components().len(), 2);
        assert_eq!(a.linf_components().len(), 1);
        assert!(!a.is_connected());
    }

    #[test]
    fn boundary_excludes_the_set() {
        let a = vs(&[(0, 0), (1, 0), (0, 1)]);
        let b = a.boundary();
        assert!(b.iter().all(|v| !a.contains(v)));
        assert_eq!(b.len(), 7);
    }

    #[test]
    fn constructor_dedups_and_guards() {
        let a = VertexSet::new([Vertex::new(0, 0), Vertex::new(0, 0)]).unwrap();
        assert_eq!(a.len(), 1);
        let far = VertexSet::new([Vertex::new(MAX_COORD + 1, 0)]);
        assert_eq!(far.unwrap_err(), Error::CoordinateOverflow);
    }

    #[test]
    fn with_and_without_round_trip() {
        let a = vs(&[(0, 0), (2, 1)]);
        let b = a.with(Vertex::new(1, 1));
        assert_eq!(b.len(), 3);
        assert!(b.contains(Vertex::new(1, 1)));
        assert_eq!(b.without(Vertex::new(1, 1)), a);
    }

    #[test]
    fn sorted_order_is_by_y_then_x() {
        let a = vs(&[(5, 0), (0, 1), (-3, 0)]);
        let order: Vec<(i64, i64)> = a.iter().map(|v| (v.x, v.y)).collect();
        assert_eq!(order, vec![(-3, 0), (5, 0), (0, 1)]);
    }
}

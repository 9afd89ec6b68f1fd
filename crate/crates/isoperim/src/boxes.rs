//! Diagonal boxes: intersections of two diagonal bands, the extremal sets
//! of the vertex isoperimetric problem.
//!
//! A box is described in rotated coordinates `u = y - x`, `v = y + x` as
//! `{a <= u <= b, c <= v <= d}`. A lattice point exists at `(u, v)` exactly
//! when `u` and `v` share parity (`u + v = 2y`). Every box is congruent to a
//! standard form: `B(α, β)` with bounds `(0, α, 0, β)` when some corner of
//! the bounding rhombus is a lattice point, or `B̂(α, β)` with bounds
//! `(0, α, -1, β - 1)` (both spans even) when none is.

use crate::lattice::{Vertex, VertexSet, MAX_COORD};
use crate::{Error, Result};
use std::fmt;

/// A nonempty, normalized diagonal box.
///
/// Normalized means every extremal line `u = a`, `u = b`, `v = c`, `v = d`
/// contains a lattice point of the box; [`LatticeBox::new`] shrinks bounds
/// until this holds. Two boxes are the same point set exactly when their
/// normalized bounds agree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LatticeBox {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

/// Whether a standard form has lattice corners.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BoxKind {
    /// `B(α, β)`: at least one extreme `(u, v)` pair is a lattice point.
    Corner,
    /// `B̂(α, β)`: no extreme pair is a lattice point; both spans are even.
    Cornerless,
}

/// The congruence-invariant shape of a box: kind plus sorted spans.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StandardForm {
    pub kind: BoxKind,
    /// Smaller span.
    pub alpha: i64,
    /// Larger span.
    pub beta: i64,
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BoxKind::Corner => write!(f, "B({}, {})", self.alpha, self.beta),
            BoxKind::Cornerless => write!(f, "Bhat({}, {})", self.alpha, self.beta),
        }
    }
}

impl fmt::Display for LatticeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Box({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl LatticeBox {
    /// Builds the box `{a <= y - x <= b, c <= y + x <= d}`, shrinking bounds
    /// to normalized form.
    ///
    /// Errors with [`Error::EmptyBox`] when the bounds contain no lattice
    /// point (reversed bounds, or two degenerate sides of opposite parity),
    /// and [`Error::CoordinateOverflow`] when a bound magnitude exceeds
    /// `2 * MAX_COORD` (the `u, v` range reachable from guarded points).
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if [a, b, c, d].iter().any(|t| t.abs() > 2 * MAX_COORD) {
            return Err(Error::CoordinateOverflow);
        }
        if a > b || c > d {
            return Err(Error::EmptyBox);
        }
        let (mut a, mut b, mut c, mut d) = (a, b, c, d);
        if a == b && c == d {
            if (a + c).rem_euclid(2) != 0 {
                return Err(Error::EmptyBox);
            }
        } else if a == b {
            // A single u-line: only v of matching parity count.
            c += (a - c).rem_euclid(2);
            d -= (d - a).rem_euclid(2);
        } else if c == d {
            a += (c - a).rem_euclid(2);
            b -= (b - c).rem_euclid(2);
        }
        // With both spans positive, each extremal line spans both parities
        // and is automatically inhabited.
        debug_assert!(a <= b && c <= d);
        Ok(LatticeBox { a, b, c, d })
    }

    /// The corner-type standard box `B(α, β)` with bounds `(0, α, 0, β)`.
    ///
    /// Spans must be nonnegative. An odd span paired with a zero span
    /// normalizes downward (`B(0, 3)` is the point set `B(0, 2)`).
    pub fn corner_form(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 0 || beta < 0 {
            return Err(Error::InvalidSize(alpha.min(beta)));
        }
        LatticeBox::new(0, alpha, 0, beta)
    }

    /// The cornerless standard box `B̂(α, β)` with bounds `(0, α, -1, β - 1)`.
    ///
    /// Requires both spans even and at least 2; anything else has a corner
    /// and is rejected with [`Error::InvalidSize`].
    pub fn cornerless_form(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 2 || beta < 2 || alpha % 2 != 0 || beta % 2 != 0 {
            return Err(Error::InvalidSize(alpha.min(beta)));
        }
        LatticeBox::new(0, alpha, -1, beta - 1)
    }

    /// The normalized bounds `(a, b, c, d)`.
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn contains(&self, p: Vertex) -> bool {
        // u and v of a lattice point always share parity, so band membership
        // is the whole test.
        let u = p.y - p.x;
        let v = p.y + p.x;
        self.a <= u && u <= self.b && self.c <= v && v <= self.d
    }

    /// The lattice points of the box. Materializes `size()` points; intended
    /// for boxes that fit in memory.
    pub fn vertices(&self) -> VertexSet {
        let mut out = Vec::new();
        for u in self.a..=self.b {
            let mut v = self.c + (u - self.c).rem_euclid(2);
            while v <= self.d {
                out.push(Vertex::new((v - u) / 2, (u + v) / 2));
                v += 2;
            }
        }
        VertexSet::from_unchecked(out)
    }

    /// Number of lattice points, by closed form.
    pub fn size(&self) -> i64 {
        let sf = self.standard_form();
        let alpha = sf.alpha as i128;
        let beta = sf.beta as i128;
        let n = match sf.kind {
            BoxKind::Corner => (alpha * beta + alpha + beta + 2).div_euclid(2),
            BoxKind::Cornerless => (alpha * beta + alpha + beta) / 2,
        };
        i64::try_from(n).expect("box size exceeds i64")
    }

    /// Size of the vertex boundary: spans plus four.
    pub fn boundary_size(&self) -> i64 {
        (self.b - self.a) + (self.d - self.c) + 4
    }

    /// How many more points the box has than the smallest set with the same
    /// boundary size. Negative exactly when the box is not minimal.
    pub fn excess(&self) -> i64 {
        let sf = self.standard_form();
        let alpha = sf.alpha as i128;
        let beta = sf.beta as i128;
        let q = (beta - alpha) * (beta - alpha);
        let e = match sf.kind {
            BoxKind::Corner => (4 * ((alpha + beta).div_euclid(2)) - q).div_euclid(8),
            BoxKind::Cornerless => {
                let num = 2 * (alpha + beta) - q - 8;
                debug_assert_eq!(num.rem_euclid(8), 0);
                num.div_euclid(8)
            }
        };
        i64::try_from(e).expect("box excess exceeds i64")
    }

    /// The extreme `(u, v)` pairs that are lattice points, sorted.
    pub fn corners(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = [
            (self.a, self.c),
            (self.a, self.d),
            (self.b, self.c),
            (self.b, self.d),
        ]
        .into_iter()
        .filter(|&(u, v)| (u + v).rem_euclid(2) == 0)
        .map(|(u, v)| Vertex::new((v - u) / 2, (u + v) / 2))
        .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The congruence-invariant standard form. Congruences permute and shift
    /// the `u, v` axes, preserving the span multiset and corner parity, so
    /// kind plus sorted spans classifies boxes completely.
    pub fn standard_form(&self) -> StandardForm {
        let span_u = self.b - self.a;
        let span_v = self.d - self.c;
        let kind = if self.corners().is_empty() {
            BoxKind::Cornerless
        } else {
            BoxKind::Corner
        };
        if kind == BoxKind::Cornerless {
            debug_assert!(span_u % 2 == 0 && span_v % 2 == 0);
        }
        StandardForm {
            kind,
            alpha: span_u.min(span_v),
            beta: span_u.max(span_v),
        }
    }

    /// The fewest lattice points on any diagonal line that meets the box.
    ///
    /// Lines here are `u = w` for `a <= w <= b` and `v = w` for
    /// `c <= w <= d`; lines of the wrong parity on a degenerate side meet
    /// the box in nothing and do not count.
    pub fn min_standard_line_count(&self) -> i64 {
        fn points_with_parity(lo: i64, hi: i64, parity_of: i64) -> i64 {
            let first = lo + (parity_of - lo).rem_euclid(2);
            if first > hi {
                0
            } else {
                (hi - first) / 2 + 1
            }
        }
        let mut best = i64::MAX;
        for w in [self.a, self.a + 1] {
            if w > self.b {
                continue;
            }
            let count = points_with_parity(self.c, self.d, w);
            if count > 0 {
                best = best.min(count);
            }
        }
        for w in [self.c, self.c + 1] {
            if w > self.d {
                continue;
            }
            let count = points_with_parity(self.a, self.b, w);
            if count > 0 {
                best = best.min(count);
            }
        }
        best
    }
}

/// The smallest box containing the set: tight bands in both diagonal
/// directions. Errors with [`Error::EmptySet`] on the empty set.
pub fn enclosing_box(set: &VertexSet) -> Result<LatticeBox> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut a = i64::MAX;
    let mut b = i64::MIN;
    let mut c = i64::MAX;
    let mut d = i64::MIN;
    for p in set.iter() {
        let u = p.y - p.x;
        let v = p.y + p.x;
        a = a.min(u);
        b = b.max(u);
        c = c.min(v);
        d = d.max(v);
    }
    // Tight bounds are already normalized: every extremal line is attained
    // by a point of the set itself.
    let enc = LatticeBox { a, b, c, d };
    debug_assert_eq!(LatticeBox::new(a, b, c, d).as_ref(), Ok(&enc));
    Ok(enc)
}

/// True when the set is exactly a box. The empty set is not a box.
pub fn is_box(set: &VertexSet) -> bool {
    match enclosing_box(set) {
        Ok(enc) => enc.size() == set.len() as i64,
        Err(_) => false,
    }
}

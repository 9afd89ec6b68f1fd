//! Classification predicates for finite lattice sets: minimality and its
//! equivalent characterizations, saturation, efficiency, and life span.

use crate::boxes::{enclosing_box, is_box, BoxKind, StandardForm};
use crate::lattice::{Vertex, VertexSet};
use crate::symmetry::PointSymmetry;
use crate::wangwang::{min_size_for_boundary, ww_boundary};
use crate::{Error, Result};

/// The four axis-aligned diagonal quarter-planes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ConeDirection {
    North,
    East,
    South,
    West,
}

impl ConeDirection {
    pub const ALL: [ConeDirection; 4] = [
        ConeDirection::North,
        ConeDirection::East,
        ConeDirection::South,
        ConeDirection::West,
    ];
}

/// An infinite quarter-plane cone with its apex on the lattice. The north
/// cone at the origin is `{(x, y) : y >= |x|}`; the others are its
/// rotations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cone {
    pub apex: Vertex,
    pub direction: ConeDirection,
}

impl Cone {
    pub fn contains(&self, p: Vertex) -> bool {
        let dx = p.x - self.apex.x;
        let dy = p.y - self.apex.y;
        match self.direction {
            ConeDirection::North => dy >= dx.abs(),
            ConeDirection::East => dx >= dy.abs(),
            ConeDirection::South => -dy >= dx.abs(),
            ConeDirection::West => -dx >= dy.abs(),
        }
    }
}

/// True when every lattice point outside the set sits in some cone disjoint
/// from the set.
///
/// Only holes inside the enclosing box need examination: the box is an
/// intersection of four diagonal half-planes, and a point beyond one of
/// them keeps that whole quarter-plane to itself. Errors with
/// [`Error::EmptySet`] on the empty set.
pub fn complement_is_union_of_cones(set: &VertexSet) -> Result<bool> {
    let enc = enclosing_box(set)?;
    for hole in enc.vertices().iter() {
        if set.contains(hole) {
            continue;
        }
        let free = ConeDirection::ALL.iter().any(|&direction| {
            let cone = Cone {
                apex: hole,
                direction,
            };
            set.iter().all(|p| !cone.contains(p))
        });
        if !free {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How much larger the set is than the smallest set sharing its boundary
/// size. Nonnegative exactly for minimal sets. Errors with
/// [`Error::EmptySet`] on the empty set.
pub fn excess_of_set(set: &VertexSet) -> Result<i64> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let min_size = min_size_for_boundary(set.boundary_size())?;
    Ok(set.len() as i64 - min_size as i64)
}

/// True when no set of the same size has a smaller vertex boundary.
///
/// Decided through the enclosing box: the set is minimal exactly when its
/// boundary equals the box boundary and the missing-point count stays
/// within the box excess. Debug builds re-derive the verdict through the
/// cone characterization and through the excess and assert agreement.
/// Errors with [`Error::EmptySet`] on the empty set.
pub fn is_minimal(set: &VertexSet) -> Result<bool> {
    let enc = enclosing_box(set)?;
    let missing = enc.size() - set.len() as i64;
    let verdict =
        set.boundary_size() as i64 == enc.boundary_size() && missing <= enc.excess();
    #[cfg(debug_assertions)]
    {
        let cones = complement_is_union_of_cones(set).expect("nonempty");
        debug_assert_eq!(
            verdict,
            cones && missing <= enc.excess(),
            "cone route disagrees for {set:?}"
        );
        let excess = excess_of_set(set).expect("realized boundary sizes invert");
        debug_assert_eq!(
            verdict,
            excess >= 0,
            "excess route disagrees for {set:?}"
        );
    }
    Ok(verdict)
}

/// The quantities behind a minimality verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinimalityCertificate {
    pub set_size: usize,
    pub boundary_size: usize,
    pub enc_boundary_size: i64,
    /// Points of the enclosing box missing from the set.
    pub missing_count: i64,
    pub enc_excess: i64,
    pub set_excess: i64,
    pub minimal: bool,
}

/// Computes the boundary, enclosing-box, and excess quantities that witness
/// the minimality verdict. Errors with [`Error::EmptySet`] on the empty set.
pub fn minimality_certificate(set: &VertexSet) -> Result<MinimalityCertificate> {
    let enc = enclosing_box(set)?;
    let boundary_size = set.boundary_size();
    let missing_count = enc.size() - set.len() as i64;
    Ok(MinimalityCertificate {
        set_size: set.len(),
        boundary_size,
        enc_boundary_size: enc.boundary_size(),
        missing_count,
        enc_excess: enc.excess(),
        set_excess: excess_of_set(set)?,
        minimal: is_minimal(set)?,
    })
}

/// True when adding any single outside vertex strictly grows the boundary.
///
/// Only vertices within two steps of the set matter: anything farther
/// contributes four fresh boundary points. Errors with [`Error::EmptySet`]
/// on the empty set.
pub fn is_saturated(set: &VertexSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let closed = set.closed_neighborhood();
    for v in closed.closed_neighborhood().iter() {
        if !set.contains(v) && boundary_change(set, &closed, v) <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Change in boundary size from adding `v`: fresh neighbors minus the
/// boundary slot `v` vacates. `closed` must be `set.closed_neighborhood()`.
fn boundary_change(set: &VertexSet, closed: &VertexSet, v: Vertex) -> i64 {
    let fresh = v
        .neighbors()
        .iter()
        .filter(|&&u| !closed.contains(u))
        .count() as i64;
    fresh - i64::from(closed.contains(v) && !set.contains(v))
}

/// A local pattern around a missing vertex that forces a boundary-neutral
/// addition. Offsets are relative to the missing anchor; the anchor itself
/// is the only required absence.
///
/// Each pattern pins at least four of the five cells `{v} ∪ nbrs(v)` inside
/// the closed neighborhood, so adding the anchor cannot grow the boundary.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ForbiddenPattern {
    /// Three of the anchor's four neighbors are present.
    TripleNeighbors,
    /// The full column one step west of the anchor is present.
    AdjacentColumn,
    /// A knight-distance pair straddling the anchor.
    KnightPair,
    /// An antidiagonal pair straddling the anchor.
    DiagonalPair,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 4] = [
        ForbiddenPattern::TripleNeighbors,
        ForbiddenPattern::AdjacentColumn,
        ForbiddenPattern::KnightPair,
        ForbiddenPattern::DiagonalPair,
    ];

    /// Offsets (relative to the missing anchor) that must be present.
    pub fn present_offsets(self) -> &'static [Vertex] {
        const TRIPLE: [Vertex; 3] = [
            Vertex::new(1, 0),
            Vertex::new(0, 1),
            Vertex::new(0, -1),
        ];
        const COLUMN: [Vertex; 3] = [
            Vertex::new(-1, 1),
            Vertex::new(-1, 0),
            Vertex::new(-1, -1),
        ];
        const KNIGHT: [Vertex; 2] = [Vertex::new(-1, 1), Vertex::new(1, 0)];
        const DIAGONAL: [Vertex; 2] = [Vertex::new(-1, 1), Vertex::new(1, -1)];
        match self {
            ForbiddenPattern::TripleNeighbors => &TRIPLE,
            ForbiddenPattern::AdjacentColumn => &COLUMN,
            ForbiddenPattern::KnightPair => &KNIGHT,
            ForbiddenPattern::DiagonalPair => &DIAGONAL,
        }
    }
}

/// An occurrence of a forbidden pattern: the pattern, the image under a
/// point symmetry, and the missing anchor vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ForbiddenWitness {
    pub pattern: ForbiddenPattern,
    pub symmetry: PointSymmetry,
    pub anchor: Vertex,
}

/// Searches for a forbidden pattern occurrence under any point symmetry.
///
/// A returned witness certifies the set is not saturated: adding the anchor
/// does not grow the boundary (debug builds assert this). The converse
/// direction is not claimed; unsaturated sets may have no witness. Scans in
/// a fixed pattern, symmetry, and vertex order, so the result is
/// deterministic. Returns `None` for the empty set.
pub fn find_forbidden_configuration(set: &VertexSet) -> Option<ForbiddenWitness> {
    for pattern in ForbiddenPattern::ALL {
        for symmetry in PointSymmetry::ALL {
            let image: Vec<Vertex> = pattern
                .present_offsets()
                .iter()
                .map(|&o| symmetry.apply_point(o))
                .collect();
            for base in set.iter() {
                let anchor = Vertex::new(base.x - image[0].x, base.y - image[0].y);
                if set.contains(anchor) {
                    continue;
                }
                if image
                    .iter()
                    .all(|&o| set.contains(anchor.translated(o.x, o.y)))
                {
                    debug_assert!(
                        boundary_change(set, &set.closed_neighborhood(), anchor) <= 0,
                        "witness anchor must be boundary-neutral"
                    );
                    return Some(ForbiddenWitness {
                        pattern,
                        symmetry,
                        anchor,
                    });
                }
            }
        }
    }
    None
}

/// The standard forms whose boxes are efficient: `B(n, n)`, `B(n, n+1)`,
/// and `B(2k, 2k+2)`.
pub(crate) fn standard_form_is_efficient(sf: StandardForm) -> bool {
    sf.kind == BoxKind::Corner
        && (sf.alpha == sf.beta
            || sf.beta == sf.alpha + 1
            || (sf.beta == sf.alpha + 2 && sf.alpha % 2 == 0))
}

/// The standard forms alone in their grading: `B(2k, 2k)` and `B(n, n+1)`.
fn standard_form_is_uniquely_minimal(sf: StandardForm) -> bool {
    sf.kind == BoxKind::Corner
        && ((sf.alpha == sf.beta && sf.alpha % 2 == 0) || sf.beta == sf.alpha + 1)
}

/// True when the set is minimal and strictly smaller boundaries are
/// impossible at every larger size: no set with more points has a boundary
/// this small. Errors with [`Error::EmptySet`] on the empty set.
pub fn is_efficient(set: &VertexSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_minimal(set)? {
        return Ok(false);
    }
    let n = set.len();
    let verdict = ww_boundary(n + 1).expect("positive size") > ww_boundary(n).expect("positive size");
    debug_assert_eq!(
        verdict,
        is_box(set) && standard_form_is_efficient(enclosing_box(set).expect("nonempty").standard_form()),
        "efficient sets must be exactly the efficient box families"
    );
    Ok(verdict)
}

/// True when no single-vertex extension of the set is minimal.
///
/// Errors with [`Error::EmptySet`] on the empty set and
/// [`Error::NotMinimal`] when the set is not minimal (life span is defined
/// for minimal sets).
pub fn is_dead(set: &VertexSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_minimal(set)? {
        return Err(Error::NotMinimal);
    }
    // A minimal non-box always extends minimally toward its enclosing box;
    // a minimal box extends exactly when it is efficient.
    Ok(is_box(set) && !is_efficient(set)?)
}

/// True when every chain of minimal single-vertex extensions from the set
/// eventually dies. Errors as [`is_dead`].
pub fn is_mortal(set: &VertexSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_minimal(set)? {
        return Err(Error::NotMinimal);
    }
    // The enclosing box of a minimal set is minimal, and the set's fate is
    // the box's: immortal exactly when the box is in the efficient families.
    Ok(!standard_form_is_efficient(
        enclosing_box(set)?.standard_form(),
    ))
}

/// True when the set is minimal and is the only minimal congruence class of
/// its size. Errors with [`Error::EmptySet`] on the empty set.
pub fn is_uniquely_minimal(set: &VertexSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(is_minimal(set)?
        && is_box(set)
        && standard_form_is_uniquely_minimal(enclosing_box(set)?.standard_form()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxes::LatticeBox;

    fn vs(pts: &[(i64, i64)]) -> VertexSet {
        pts.iter().map(|&(x, y)| Vertex::new(x, y)).collect()
    }

    #[test]
    fn minimality_of_small_shapes() {
        assert!(is_minimal(&vs(&[(0, 0)])).unwrap());
        assert!(is_minimal(&vs(&[(0, 0), (1, 0)])).unwrap());
        assert!(is_minimal(&vs(&[(0, 0), (1, 1)])).unwrap());
        // Three in a diagonal line exceed the band budget.
        assert!(!is_minimal(&vs(&[(0, 0), (1, 1), (2, 2)])).unwrap());
        // Three in a straight row sit inside the plus with two points
        // missing, one more than its excess allows.
        assert!(!is_minimal(&vs(&[(0, 0), (1, 0), (2, 0)])).unwrap());
        assert!(is_minimal(&vs(&[(0, 0), (1, 0), (0, 1)])).unwrap());
        assert_eq!(is_minimal(&VertexSet::empty()).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn excess_of_small_sets() {
        let plus = LatticeBox::corner_form(2, 2).unwrap().vertices();
        assert_eq!(excess_of_set(&plus).unwrap(), 1);
        let diag3 = vs(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(excess_of_set(&diag3).unwrap(), -1);
    }

    #[test]
    fn certificate_for_a_non_minimal_box() {
        let diag3 = LatticeBox::corner_form(0, 4).unwrap().vertices();
        let cert = minimality_certificate(&diag3).unwrap();
        assert!(!cert.minimal);
        assert_eq!(cert.set_excess, -1);
        assert_eq!(cert.boundary_size, 8);
        assert_eq!(cert.missing_count, 0);
    }

    #[test]
    fn cone_complements() {
        let plus = LatticeBox::corner_form(2, 2).unwrap().vertices();
        assert!(complement_is_union_of_cones(&plus).unwrap());
        // Puncture the center (0, 1): the hole sees set points in all four
        // cones. Removing a tip instead leaves a free cone.
        let ring = plus.without(Vertex::new(0, 1));
        assert!(!complement_is_union_of_cones(&ring).unwrap());
        let tee = plus.without(Vertex::new(0, 0));
        assert!(complement_is_union_of_cones(&tee).unwrap());
    }

    #[test]
    fn saturation_of_small_shapes() {
        let plus = LatticeBox::corner_form(2, 2).unwrap().vertices();
        assert!(is_saturated(&plus).unwrap());
        // A missing corner neighbor keeps this one unsaturated.
        let hook = vs(&[(0, 0), (1, 1), (1, -1)]);
        assert!(!is_saturated(&hook).unwrap());
    }

    #[test]
    fn forbidden_pattern_on_a_hook() {
        let hook = vs(&[(0, 0), (1, 1), (1, -1)]);
        let witness = find_forbidden_configuration(&hook).expect("pattern occurs");
        assert_eq!(witness.anchor, Vertex::new(1, 0));
        assert!(!is_saturated(&hook).unwrap());
    }

    #[test]
    fn saturated_sets_have_no_witness() {
        // Two diagonal points around two absences: every addition grows the
        // boundary, and accordingly no pattern matches.
        let pair = vs(&[(1, 1), (1, -1)]);
        assert!(is_saturated(&pair).unwrap());
        assert_eq!(find_forbidden_configuration(&pair), None);

        let plus = LatticeBox::corner_form(2, 2).unwrap().vertices();
        assert_eq!(find_forbidden_configuration(&plus), None);
    }

    #[test]
    fn efficiency_follows_the_box_families() {
        for (alpha, beta, want) in [
            (0, 0, true),
            (1, 2, true),
            (2, 2, true),
            (1, 3, false),
            (2, 4, true),
            (2, 6, false),
            (3, 3, true),
            (4, 6, true),
            (12, 20, false),
        ] {
            let b = LatticeBox::corner_form(alpha, beta).unwrap().vertices();
            assert_eq!(is_efficient(&b).unwrap(), want, "B({alpha}, {beta})");
        }
        let square = LatticeBox::cornerless_form(2, 2).unwrap().vertices();
        assert!(!is_efficient(&square).unwrap());
        // Not minimal, so not efficient.
        let diag3 = vs(&[(0, 0), (1, 1), (2, 2)]);
        assert!(!is_efficient(&diag3).unwrap());
    }

    #[test]
    fn life_and_death_of_boxes() {
        let s_piece = LatticeBox::corner_form(1, 3).unwrap().vertices();
        assert!(is_dead(&s_piece).unwrap());
        assert!(is_mortal(&s_piece).unwrap());

        let pair = LatticeBox::corner_form(0, 2).unwrap().vertices();
        assert!(!is_dead(&pair).unwrap());
        assert!(!is_mortal(&pair).unwrap());

        let diag3 = vs(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(is_dead(&diag3).unwrap_err(), Error::NotMinimal);

        // A non-box inside an efficient box is alive and immortal.
        let t_piece = vs(&[(0, 0), (1, 0), (2, 0), (1, 1)]);
        assert!(!is_dead(&t_piece).unwrap());
        assert!(!is_mortal(&t_piece).unwrap());
    }

    #[test]
    fn unique_minimality_families() {
        for (alpha, beta, want) in [
            (0, 0, true),
            (1, 2, true),
            (2, 2, true),
            (2, 3, true),
            (3, 3, false),
            (1, 3, false),
            (8, 8, true),
        ] {
            let b = LatticeBox::corner_form(alpha, beta).unwrap().vertices();
            assert_eq!(is_uniquely_minimal(&b).unwrap(), want, "B({alpha}, {beta})");
        }
    }
}

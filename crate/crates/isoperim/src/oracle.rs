//! Brute-force ground truth on small sizes, independent of the structural
//! theory, used to certify the closed forms and the classifier.
//!
//! The enumeration universe is every set whose vertices chain together with
//! `ℓ∞` gaps of at most two, one representative per translation class. A set
//! outside the universe splits into parts at `ℓ∞` distance at least three,
//! whose boundaries are disjoint, so its boundary size is the sum over the
//! parts. The certification step folds that split bound into a recursion and
//! checks it stays strictly above the connected minimum at every size, which
//! proves the universe misses no minimizer.

use crate::classify;
use crate::graphmin;
use crate::lattice::{Vertex, VertexSet};
use crate::symmetry::canonical_form;
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet};

/// Largest size the packed representation holds (ten 12-bit cells in a
/// `u128`). Enumeration time also grows steeply with size; the practical
/// range on one core is a size or two lower.
pub const MAX_ORACLE_SIZE: usize = 10;

/// The 24 offsets with `ℓ∞` norm one or two.
const GAP_OFFSETS: [(i64, i64); 24] = [
    (-2, -2),
    (-2, -1),
    (-2, 0),
    (-2, 1),
    (-2, 2),
    (-1, -2),
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (-1, 2),
    (0, -2),
    (0, -1),
    (0, 1),
    (0, 2),
    (1, -2),
    (1, -1),
    (1, 0),
    (1, 1),
    (1, 2),
    (2, -2),
    (2, -1),
    (2, 0),
    (2, 1),
    (2, 2),
];

/// Shifts the cells so both coordinate minimums are zero, sorts them, and
/// packs each as `x << 6 | y` into successive 12-bit groups.
fn normalize_and_pack(cells: &mut [(i64, i64)]) -> u128 {
    let min_x = cells.iter().map(|c| c.0).min().expect("nonempty");
    let min_y = cells.iter().map(|c| c.1).min().expect("nonempty");
    for c in cells.iter_mut() {
        c.0 -= min_x;
        c.1 -= min_y;
    }
    cells.sort_unstable_by_key(|&(x, y)| (y, x));
    let mut packed = 0u128;
    for &(x, y) in cells.iter() {
        debug_assert!((0..64).contains(&x) && (0..64).contains(&y));
        packed = (packed << 12) | ((x as u128) << 6) | y as u128;
    }
    packed
}

fn unpack_into(packed: u128, len: usize, buf: &mut [(i64, i64)]) {
    let mut rest = packed;
    for slot in buf[..len].iter_mut() {
        let code = rest & 0xFFF;
        *slot = ((code >> 6) as i64, (code & 0x3F) as i64);
        rest >>= 12;
    }
}

fn to_vertex_set(packed: u128, len: usize) -> VertexSet {
    let mut buf = [(0i64, 0i64); MAX_ORACLE_SIZE];
    unpack_into(packed, len, &mut buf);
    buf[..len]
        .iter()
        .map(|&(x, y)| Vertex::new(x, y))
        .collect()
}

/// Every set of `size + 1` cells in the universe arises from one of `size`
/// cells by adding a vertex within `ℓ∞` distance two of it: the larger set
/// chains together, so it has a spanning tree in the gap graph, and
/// dropping a leaf keeps the rest chained.
fn grow_level(level: &[u128], size: usize) -> Vec<u128> {
    let mut seen: HashSet<u128> = HashSet::with_capacity(level.len() * 8);
    let mut cells = [(0i64, 0i64); MAX_ORACLE_SIZE];
    for &packed in level {
        unpack_into(packed, size, &mut cells);
        for i in 0..size {
            let (x, y) = cells[i];
            for (dx, dy) in GAP_OFFSETS {
                let candidate = (x + dx, y + dy);
                if cells[..size].contains(&candidate) {
                    continue;
                }
                let mut scratch = cells;
                scratch[size] = candidate;
                seen.insert(normalize_and_pack(&mut scratch[..=size]));
            }
        }
    }
    let mut out: Vec<u128> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// `levels[k - 1]` holds the sorted packed universe of size `k`.
struct Universe {
    levels: Vec<Vec<u128>>,
}

impl Universe {
    fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(0));
        }
        if n > MAX_ORACLE_SIZE {
            return Err(Error::SizeTooLarge {
                requested: n,
                limit: MAX_ORACLE_SIZE,
            });
        }
        let mut levels = vec![vec![normalize_and_pack(&mut [(0, 0)])]];
        for size in 1..n {
            let next = grow_level(&levels[size - 1], size);
            levels.push(next);
        }
        Ok(Universe { levels })
    }

    fn level(&self, size: usize) -> &[u128] {
        &self.levels[size - 1]
    }

    /// Smallest boundary among connected-universe sets of each size, then
    /// certified as the true minimum over all sets: any other set splits
    /// with disjoint part boundaries, and the recursion checks every split
    /// total stays strictly larger.
    fn certified_minimums(&self) -> Vec<usize> {
        let conn: Vec<usize> = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, level)| {
                level
                    .iter()
                    .map(|&p| to_vertex_set(p, i + 1).boundary_size())
                    .min()
                    .expect("level is nonempty")
            })
            .collect();
        let mut certified = Vec::with_capacity(conn.len());
        for (i, &c) in conn.iter().enumerate() {
            let split = (0..i)
                .map(|j| certified[j] + certified[i - 1 - j])
                .min();
            if let Some(s) = split {
                assert!(
                    s > c,
                    "a split set ties the connected minimum at size {}; \
                     the connected enumeration is not exhaustive there",
                    i + 1
                );
            }
            certified.push(c);
        }
        certified
    }
}

/// Certified smallest boundary size over all sets of `n` vertices.
pub fn brute_min_boundary(n: usize) -> Result<usize> {
    let universe = Universe::build(n)?;
    Ok(universe.certified_minimums()[n - 1])
}

/// Canonical forms of every congruence class attaining the certified
/// minimum boundary at size `n`, sorted.
pub fn brute_minimal_classes(n: usize) -> Result<Vec<VertexSet>> {
    let universe = Universe::build(n)?;
    let min = universe.certified_minimums()[n - 1];
    let mut classes = BTreeSet::new();
    for &packed in universe.level(n) {
        let set = to_vertex_set(packed, n);
        if set.boundary_size() == min {
            classes.insert(canonical_form(&set).expect("nonempty"));
        }
    }
    Ok(classes.into_iter().collect())
}

/// Visits one translation representative of every universe set of the
/// given size, in a fixed order.
pub fn for_each_candidate<F: FnMut(&VertexSet)>(size: usize, mut f: F) -> Result<()> {
    let universe = Universe::build(size)?;
    for &packed in universe.level(size) {
        f(&to_vertex_set(packed, size));
    }
    Ok(())
}

/// Ground-truth facts for one size.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OracleReport {
    pub size: usize,
    /// Certified isoperimetric minimum.
    pub min_boundary: usize,
    pub minimal_class_count: usize,
    /// Best boundary total over splits into smaller certified minima;
    /// `None` at size one. Strictly above `min_boundary` everywhere, which
    /// is what certifies the enumeration.
    pub best_split_boundary: Option<usize>,
}

/// Ground-truth reports for sizes `1..=n_max`.
pub fn survey(n_max: usize) -> Result<Vec<OracleReport>> {
    let universe = Universe::build(n_max)?;
    let certified = universe.certified_minimums();
    let mut reports = Vec::with_capacity(n_max);
    for size in 1..=n_max {
        let min = certified[size - 1];
        let class_count = universe
            .level(size)
            .iter()
            .filter(|&&p| to_vertex_set(p, size).boundary_size() == min)
            .map(|&p| canonical_form(&to_vertex_set(p, size)).expect("nonempty"))
            .collect::<BTreeSet<_>>()
            .len();
        let split = (1..size)
            .map(|j| certified[j - 1] + certified[size - j - 1])
            .min();
        reports.push(OracleReport {
            size,
            min_boundary: min,
            minimal_class_count: class_count,
            best_split_boundary: split,
        });
    }
    Ok(reports)
}

/// One set where a classification route disagrees with ground truth.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Discrepancy {
    pub set: VertexSet,
    /// Boundary equals the certified minimum.
    pub ground_truth: bool,
    /// Verdict via the enclosing box.
    pub enclosure_route: bool,
    /// Verdict via cone complement plus box excess.
    pub cone_route: bool,
    /// Verdict via nonnegative set excess.
    pub excess_route: bool,
}

/// Outcome of checking every universe set of one size against the
/// characterization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub size: usize,
    pub candidates: usize,
    pub min_boundary: usize,
    /// Sets where any route disagrees with ground truth, sorted.
    pub discrepancies: Vec<Discrepancy>,
    /// Brute-force minimal classes equal the structural enumeration.
    pub classes_match: bool,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty() && self.classes_match
    }
}

/// Checks every universe set of size `n` against the three minimality
/// routes and compares the brute-force class list with the structural
/// enumeration.
pub fn verify_characterization(n: usize) -> Result<VerifyReport> {
    let universe = Universe::build(n)?;
    let min = universe.certified_minimums()[n - 1];
    let mut discrepancies: Vec<Discrepancy> = universe
        .level(n)
        .par_iter()
        .filter_map(|&packed| {
            let set = to_vertex_set(packed, n);
            let ground_truth = set.boundary_size() == min;
            let enclosure_route = classify::is_minimal(&set).expect("nonempty");
            let enc = crate::boxes::enclosing_box(&set).expect("nonempty");
            let missing = enc.size() - set.len() as i64;
            let cone_route = classify::complement_is_union_of_cones(&set).expect("nonempty")
                && missing <= enc.excess();
            let excess_route = classify::excess_of_set(&set).expect("nonempty") >= 0;
            let verdicts = [enclosure_route, cone_route, excess_route];
            if verdicts.iter().any(|&v| v != ground_truth) {
                Some(Discrepancy {
                    set,
                    ground_truth,
                    enclosure_route,
                    cone_route,
                    excess_route,
                })
            } else {
                None
            }
        })
        .collect();
    discrepancies.sort_by(|a, b| a.set.cmp(&b.set));

    let brute: Vec<VertexSet> = {
        let mut classes = BTreeSet::new();
        for &packed in universe.level(n) {
            let set = to_vertex_set(packed, n);
            if set.boundary_size() == min {
                classes.insert(canonical_form(&set).expect("nonempty"));
            }
        }
        classes.into_iter().collect()
    };
    let structural: Vec<VertexSet> = graphmin::enumerate_minimal_classes(n)?
        .into_iter()
        .map(|c| c.canonical)
        .collect();
    let classes_match = brute == structural;

    Ok(VerifyReport {
        size: n,
        candidates: universe.level(n).len(),
        min_boundary: min,
        discrepancies,
        classes_match,
    })
}

//! Congruence classes of minimal sets, and the graph joining classes whose
//! representatives differ by a single vertex.

use crate::boxes::LatticeBox;
use crate::classify;
use crate::lattice::{Vertex, VertexSet};
use crate::symmetry::canonical_form;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// The analytic component classification's hypotheses, reported on failure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Hypothesis {
    /// The box excess must be nonnegative (the box must be minimal).
    NonnegativeExcess,
    /// Both spans must be at least two.
    ModulusAtLeastTwo,
    /// Every diagonal line meeting the box must carry at least excess plus
    /// two of its points.
    StandardLineCount,
    /// The box must be dead.
    Dead,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Hypothesis::NonnegativeExcess => "box excess is nonnegative",
            Hypothesis::ModulusAtLeastTwo => "both spans are at least two",
            Hypothesis::StandardLineCount => {
                "each inhabited diagonal line has at least excess plus two points"
            }
            Hypothesis::Dead => "box is dead",
        };
        f.write_str(text)
    }
}

/// Classification flags of one minimal congruence class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassFlags {
    pub dead: bool,
    pub mortal: bool,
    pub efficient: bool,
    pub uniquely_minimal: bool,
    pub connected: bool,
}

/// A congruence class of minimal sets, named by its canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinClass {
    pub canonical: VertexSet,
    /// The common size of the class members.
    pub grading: usize,
    pub flags: ClassFlags,
}

/// The minimal-class graph up to grading `n_max`. Nodes are sorted by
/// `(grading, canonical)`; edges join nodes of consecutive gradings and are
/// sorted pairs of node indices.
#[derive(Clone, Debug)]
pub struct MinGraph {
    pub nodes: Vec<MinClass>,
    pub edges: Vec<(usize, usize)>,
    pub n_max: usize,
}

/// One connected component of the minimal-class graph, or the analytically
/// determined component of a dead box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentSummary {
    /// Number of classes, when enumerated. The analytic path knows the
    /// count only for excess zero (the box alone).
    pub member_count: Option<usize>,
    /// Node indices into the graph the summary came from; empty on the
    /// analytic path.
    pub members: Vec<usize>,
    pub grading_min: usize,
    pub grading_max: usize,
    /// Nodes on the longest chain of consecutive gradings.
    pub height: usize,
    pub isolated: bool,
    pub contains_immortal: bool,
    /// True when the component reaches `n_max` with a live class there, so
    /// its upward continuation is not visible in this graph.
    pub truncated: bool,
}

/// Standard boxes that can enclose a minimal set of size at most `n`:
/// nonnegative excess and `size - excess <= n`.
///
/// For fixed smaller span the quantity `size - excess` never decreases as
/// the larger span grows, and its minimum over the larger span never
/// decreases as the smaller span grows, so both loops stop soundly.
fn seed_boxes(n: usize) -> Vec<LatticeBox> {
    let n = n as i64;
    let mut out = Vec::new();
    let reach = |b: &LatticeBox| b.size() - b.excess();

    let mut alpha = 0;
    loop {
        let base = LatticeBox::corner_form(alpha, alpha.max(1)).expect("valid spans");
        if alpha > 0 && reach(&base) > n {
            break;
        }
        // A zero span pairs only with even larger spans; odd ones denote
        // the same point set non-normalized.
        let step = if alpha == 0 { 2 } else { 1 };
        let mut beta = alpha;
        loop {
            let b = LatticeBox::corner_form(alpha, beta).expect("valid spans");
            if reach(&b) > n {
                break;
            }
            if b.excess() >= 0 {
                out.push(b);
            }
            beta += step;
        }
        alpha += 1;
    }

    let mut alpha = 2;
    loop {
        let base = LatticeBox::cornerless_form(alpha, alpha).expect("even spans");
        if reach(&base) > n {
            break;
        }
        let mut beta = alpha;
        loop {
            let b = LatticeBox::cornerless_form(alpha, beta).expect("even spans");
            if reach(&b) > n {
                break;
            }
            if b.excess() >= 0 {
                out.push(b);
            }
            beta += 2;
        }
        alpha += 2;
    }
    out
}

/// Canonical forms of every minimal class with grading in `lo..=hi`,
/// grouped by grading.
///
/// Seeds are the candidate enclosing boxes; every minimal set is reachable
/// from its enclosing box by removing one vertex at a time through minimal
/// sets only, so repeated single-vertex descent from the seeds visits every
/// class.
fn classes_by_grading(lo: usize, hi: usize) -> BTreeMap<usize, BTreeSet<VertexSet>> {
    debug_assert!(1 <= lo && lo <= hi);
    let mut work: BTreeMap<usize, BTreeSet<VertexSet>> = BTreeMap::new();
    for seed in seed_boxes(hi) {
        let verts = seed.vertices();
        let size = verts.len();
        debug_assert!(classify::is_minimal(&verts).expect("nonempty"));
        work.entry(size)
            .or_default()
            .insert(canonical_form(&verts).expect("nonempty"));
    }
    let top = work.keys().next_back().copied().unwrap_or(0);
    for size in (lo + 1..=top).rev() {
        let Some(level) = work.get(&size) else {
            continue;
        };
        let mut descended = BTreeSet::new();
        for class in level.clone() {
            for v in class.iter() {
                let smaller = class.without(v);
                if classify::is_minimal(&smaller).expect("nonempty") {
                    descended.insert(canonical_form(&smaller).expect("nonempty"));
                }
            }
        }
        work.entry(size - 1).or_default().extend(descended);
    }
    work.retain(|&size, _| lo <= size && size <= hi);
    work
}

fn make_class(canonical: VertexSet, grading: usize) -> MinClass {
    let flags = ClassFlags {
        dead: classify::is_dead(&canonical).expect("class is minimal"),
        mortal: classify::is_mortal(&canonical).expect("class is minimal"),
        efficient: classify::is_efficient(&canonical).expect("nonempty"),
        uniquely_minimal: classify::is_uniquely_minimal(&canonical).expect("nonempty"),
        connected: canonical.is_connected(),
    };
    MinClass {
        canonical,
        grading,
        flags,
    }
}

/// All minimal congruence classes of the given size, sorted by canonical
/// form. Errors with [`Error::InvalidSize`] when the size is zero.
pub fn enumerate_minimal_classes(n: usize) -> Result<Vec<MinClass>> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    let classes = classes_by_grading(n, n).remove(&n).unwrap_or_default();
    Ok(classes.into_iter().map(|c| make_class(c, n)).collect())
}

/// Builds the minimal-class graph for gradings `1..=n_max`.
///
/// Edges are found upward: for each class below the top grading, every
/// single-vertex extension within the `ℓ∞` neighborhood is tested for
/// minimality. Minimal sets are `ℓ∞`-connected, so this finds every pair of
/// classes differing by one vertex. Errors with [`Error::InvalidSize`] when
/// `n_max` is zero.
pub fn build_graph(n_max: usize) -> Result<MinGraph> {
    if n_max == 0 {
        return Err(Error::InvalidSize(0));
    }
    let by_grading = classes_by_grading(1, n_max);
    let mut nodes = Vec::new();
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    for (&grading, level) in &by_grading {
        for class in level {
            index.insert(class.clone(), nodes.len());
            nodes.push(make_class(class.clone(), grading));
        }
    }
    let mut edges = BTreeSet::new();
    for (i, node) in nodes.iter().enumerate() {
        if node.grading == n_max {
            continue;
        }
        let set = &node.canonical;
        let mut candidates: Vec<Vertex> =
            set.iter().flat_map(|v| v.king_neighbors()).collect();
        candidates.sort_unstable();
        candidates.dedup();
        for u in candidates {
            if set.contains(u) {
                continue;
            }
            let bigger = set.with(u);
            if classify::is_minimal(&bigger).expect("nonempty") {
                let c = canonical_form(&bigger).expect("nonempty");
                let j = *index
                    .get(&c)
                    .expect("minimal extensions within range are enumerated");
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    Ok(MinGraph {
        nodes,
        edges: edges.into_iter().collect(),
        n_max,
    })
}

/// Node indices with no incident edge, ascending. At the top grading this
/// can be an artifact of truncation; below it, such classes are genuinely
/// isolated.
pub fn isolated_vertices(graph: &MinGraph) -> Vec<usize> {
    let mut touched = vec![false; graph.nodes.len()];
    for &(i, j) in &graph.edges {
        touched[i] = true;
        touched[j] = true;
    }
    (0..graph.nodes.len()).filter(|&i| !touched[i]).collect()
}

/// Connected components of the graph, each summarized. Components are
/// sorted by their smallest node index.
pub fn components(graph: &MinGraph) -> Vec<ComponentSummary> {
    let n = graph.nodes.len();
    let mut adjacency = vec![Vec::new(); n];
    for &(i, j) in &graph.edges {
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    let mut assigned = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if assigned[start] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut stack = vec![start];
        assigned[start] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for &j in &adjacency[i] {
                if assigned[j] == usize::MAX {
                    assigned[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }

    groups
        .into_iter()
        .map(|members| {
            let gradings: Vec<usize> =
                members.iter().map(|&i| graph.nodes[i].grading).collect();
            let grading_min = *gradings.iter().min().expect("nonempty component");
            let grading_max = *gradings.iter().max().expect("nonempty component");
            // Longest chain of consecutive gradings: nodes sorted by
            // grading, each extending the best chain among lower neighbors.
            let mut order: Vec<usize> = members.clone();
            order.sort_by_key(|&i| graph.nodes[i].grading);
            let mut chain: HashMap<usize, usize> = HashMap::new();
            let mut height = 0;
            for &i in &order {
                let g = graph.nodes[i].grading;
                let best_below = adjacency[i]
                    .iter()
                    .filter(|&&j| graph.nodes[j].grading + 1 == g)
                    .filter_map(|j| chain.get(j).copied())
                    .max()
                    .unwrap_or(0);
                let h = best_below + 1;
                chain.insert(i, h);
                height = height.max(h);
            }
            let truncated = members.iter().any(|&i| {
                graph.nodes[i].grading == graph.n_max && !graph.nodes[i].flags.dead
            });
            ComponentSummary {
                member_count: Some(members.len()),
                isolated: members.len() == 1,
                contains_immortal: members.iter().any(|&i| !graph.nodes[i].flags.mortal),
                grading_min,
                grading_max,
                height,
                truncated,
                members,
            }
        })
        .collect()
}

/// Classifies the component of a dead box without building any graph.
///
/// For a box of excess `d` whose spans are at least two and whose inhabited
/// diagonal lines each carry at least `d + 2` points, the component of the
/// box's class consists of classes at every grading from `size - d` to
/// `size`, has height `d + 1`, and is a single isolated class exactly when
/// `d` is zero. All members are mortal. Errors with
/// [`Error::HypothesisFailed`] naming the first failing hypothesis.
pub fn classify_component_of_box(b: &LatticeBox) -> Result<ComponentSummary> {
    let d = b.excess();
    if d < 0 {
        return Err(Error::HypothesisFailed(Hypothesis::NonnegativeExcess));
    }
    let sf = b.standard_form();
    if sf.alpha < 2 {
        return Err(Error::HypothesisFailed(Hypothesis::ModulusAtLeastTwo));
    }
    if b.min_standard_line_count() < d + 2 {
        return Err(Error::HypothesisFailed(Hypothesis::StandardLineCount));
    }
    if classify::standard_form_is_efficient(sf) {
        return Err(Error::HypothesisFailed(Hypothesis::Dead));
    }
    let size = usize::try_from(b.size()).expect("box size fits usize");
    let d = d as usize;
    Ok(ComponentSummary {
        member_count: if d == 0 { Some(1) } else { None },
        members: Vec::new(),
        grading_min: size - d,
        grading_max: size,
        height: d + 1,
        isolated: d == 0,
        contains_immortal: false,
        truncated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::are_congruent;
    use crate::wangwang::ww;

    #[test]
    fn class_counts_on_small_gradings() {
        for (n, want) in [(1, 1), (2, 2), (3, 1), (4, 3), (5, 1), (6, 1)] {
            assert_eq!(enumerate_minimal_classes(n).unwrap().len(), want, "n = {n}");
        }
        assert_eq!(
            enumerate_minimal_classes(0).unwrap_err(),
            Error::InvalidSize(0)
        );
    }

    #[test]
    fn grading_four_classes_are_the_known_three() {
        let classes = enumerate_minimal_classes(4).unwrap();
        let t_piece = ww(4).unwrap();
        let square = LatticeBox::cornerless_form(2, 2).unwrap().vertices();
        let s_piece = LatticeBox::corner_form(1, 3).unwrap().vertices();
        for shape in [&t_piece, &square, &s_piece] {
            assert!(
                classes
                    .iter()
                    .any(|c| are_congruent(&c.canonical, shape)),
                "missing a known class"
            );
        }
    }

    #[test]
    fn tiny_graph_has_the_diagonal_edge() {
        let g = build_graph(2).unwrap();
        assert_eq!(g.nodes.len(), 3);
        assert_eq!(g.edges.len(), 2);
        // The singleton sits at index 0; both two-point classes attach.
        assert_eq!(g.nodes[0].grading, 1);
        assert!(g.edges.contains(&(0, 1)) && g.edges.contains(&(0, 2)));
    }

    #[test]
    fn graph_four_contains_the_l_to_square_edge() {
        let g = build_graph(4).unwrap();
        let l_piece = ww(3).unwrap();
        let square = LatticeBox::cornerless_form(2, 2).unwrap().vertices();
        let li = g
            .nodes
            .iter()
            .position(|c| are_congruent(&c.canonical, &l_piece))
            .unwrap();
        let si = g
            .nodes
            .iter()
            .position(|c| are_congruent(&c.canonical, &square))
            .unwrap();
        let key = (li.min(si), li.max(si));
        assert!(g.edges.contains(&key));
    }

    #[test]
    fn analytic_component_of_dead_boxes() {
        let wide = LatticeBox::corner_form(20, 12).unwrap();
        let summary = classify_component_of_box(&wide).unwrap();
        assert!(summary.isolated);
        assert_eq!(summary.grading_min, 137);
        assert_eq!(summary.grading_max, 137);
        assert_eq!(summary.height, 1);
        assert_eq!(summary.member_count, Some(1));
        assert!(!summary.contains_immortal);

        let tall = LatticeBox::corner_form(66, 60).unwrap();
        let summary = classify_component_of_box(&tall).unwrap();
        assert_eq!(summary.grading_min, 2017);
        assert_eq!(summary.grading_max, 2044);
        assert_eq!(summary.height, 28);
        assert!(!summary.isolated);
        assert_eq!(summary.member_count, None);
    }

    #[test]
    fn hypothesis_failures_are_reported() {
        let thin = LatticeBox::corner_form(0, 4).unwrap();
        assert_eq!(
            classify_component_of_box(&thin).unwrap_err(),
            Error::HypothesisFailed(Hypothesis::NonnegativeExcess)
        );
        let narrow = LatticeBox::corner_form(1, 3).unwrap();
        assert_eq!(
            classify_component_of_box(&narrow).unwrap_err(),
            Error::HypothesisFailed(Hypothesis::ModulusAtLeastTwo)
        );
        let sparse_line = LatticeBox::corner_form(4, 8).unwrap();
        assert_eq!(
            classify_component_of_box(&sparse_line).unwrap_err(),
            Error::HypothesisFailed(Hypothesis::StandardLineCount)
        );
        // Efficient boxes trip the line-count screen first; the deadness
        // check stays as a backstop behind it.
        let efficient = LatticeBox::corner_form(4, 4).unwrap();
        assert_eq!(
            classify_component_of_box(&efficient).unwrap_err(),
            Error::HypothesisFailed(Hypothesis::StandardLineCount)
        );
        let message = Error::HypothesisFailed(Hypothesis::Dead).to_string();
        assert!(message.contains("dead"), "{message}");
    }
}

//! Differential checks of the box closed forms against direct enumeration.

use isoperim::boxes::{enclosing_box, is_box, BoxKind, LatticeBox};
use isoperim::classify::{
    excess_of_set, find_forbidden_configuration, is_efficient, is_minimal, is_saturated,
};
use isoperim::lattice::VertexSet;
use isoperim::symmetry::are_congruent;

fn standard_boxes(max_span: i64) -> Vec<LatticeBox> {
    let mut out = Vec::new();
    for alpha in 0..=max_span {
        for beta in alpha..=max_span {
            out.push(LatticeBox::corner_form(alpha, beta).unwrap());
            if alpha >= 2 && alpha % 2 == 0 && beta % 2 == 0 {
                out.push(LatticeBox::cornerless_form(alpha, beta).unwrap());
            }
        }
    }
    out
}

#[test]
fn closed_forms_match_direct_enumeration() {
    for b in standard_boxes(12) {
        let cells = b.vertices();
        assert_eq!(b.size(), cells.len() as i64, "{b}");
        assert_eq!(b.boundary_size(), cells.boundary_size() as i64, "{b}");
        assert!(is_box(&cells), "{b}");
        let enc = enclosing_box(&cells).unwrap();
        assert_eq!(enc.bounds(), b.bounds(), "{b}");
    }
}

#[test]
fn box_excess_agrees_with_set_excess() {
    // The formula must reproduce size minus the smallest size attaining the
    // box boundary, including when that comes out negative.
    for b in standard_boxes(12) {
        let cells = b.vertices();
        assert_eq!(excess_of_set(&cells).unwrap(), b.excess(), "{b}");
        assert_eq!(is_minimal(&cells).unwrap(), b.excess() >= 0, "{b}");
    }
}

#[test]
fn standard_form_rebuilds_a_congruent_box() {
    for b in standard_boxes(12) {
        let sf = b.standard_form();
        let rebuilt = match sf.kind {
            BoxKind::Corner => LatticeBox::corner_form(sf.alpha, sf.beta).unwrap(),
            BoxKind::Cornerless => {
                LatticeBox::cornerless_form(sf.alpha, sf.beta).unwrap()
            }
        };
        assert_eq!(rebuilt.standard_form(), sf, "{b}");
        assert!(are_congruent(&b.vertices(), &rebuilt.vertices()), "{b}");
    }
}

#[test]
fn line_counts_match_direct_tallies() {
    for b in standard_boxes(12) {
        let cells = b.vertices();
        let mut per_u = std::collections::HashMap::new();
        let mut per_v = std::collections::HashMap::new();
        for p in cells.iter() {
            *per_u.entry(p.y - p.x).or_insert(0i64) += 1;
            *per_v.entry(p.y + p.x).or_insert(0i64) += 1;
        }
        let direct = per_u.values().chain(per_v.values()).min().copied().unwrap();
        assert_eq!(b.min_standard_line_count(), direct, "{b}");
    }
}

#[test]
fn boundary_steps_by_one_per_span() {
    // Closed form, then the same fact on the actual vertex sets. A box
    // with a zero span widens in twos; odd spans there renormalize away.
    for b in standard_boxes(10) {
        let sf = b.standard_form();
        let step = match sf.kind {
            BoxKind::Corner if sf.alpha > 0 => 1,
            _ => 2,
        };
        let wider = match sf.kind {
            BoxKind::Corner => LatticeBox::corner_form(sf.alpha, sf.beta + step).unwrap(),
            BoxKind::Cornerless => {
                LatticeBox::cornerless_form(sf.alpha, sf.beta + step).unwrap()
            }
        };
        assert_eq!(wider.boundary_size(), b.boundary_size() + step, "{b}");
        if sf.beta <= 8 {
            assert_eq!(
                wider.vertices().boundary_size(),
                b.vertices().boundary_size() + step as usize,
                "{b}"
            );
        }
    }
}

#[test]
fn excess_is_monotone_along_the_diagonal() {
    for b in standard_boxes(10) {
        let sf = b.standard_form();
        if sf.kind != BoxKind::Corner {
            continue;
        }
        let fatter = LatticeBox::corner_form(sf.alpha + 1, sf.beta + 1).unwrap();
        assert!(
            excess_of_set(&fatter.vertices()).unwrap()
                >= excess_of_set(&b.vertices()).unwrap(),
            "{b}"
        );
    }
}

#[test]
fn boxes_contain_no_forbidden_pattern() {
    for b in standard_boxes(12) {
        assert_eq!(find_forbidden_configuration(&b.vertices()), None, "{b}");
    }
}

#[test]
fn efficient_boxes_are_saturated() {
    let mut efficient_seen = 0;
    for b in standard_boxes(10) {
        let cells = b.vertices();
        if cells.is_empty() {
            continue;
        }
        if is_efficient(&cells).unwrap() {
            efficient_seen += 1;
            assert!(is_saturated(&cells).unwrap(), "{b}");
        }
    }
    assert!(efficient_seen > 10);
}

#[test]
fn enclosing_boxes_are_tight_on_non_boxes() {
    let hook: VertexSet = [(0, 0), (1, 1), (1, -1)]
        .iter()
        .map(|&(x, y)| isoperim::lattice::Vertex::new(x, y))
        .collect();
    let enc = enclosing_box(&hook).unwrap();
    assert!(hook.iter().all(|p| enc.contains(p)));
    assert!(enc.size() > hook.len() as i64);
    assert!(!is_box(&hook));
}

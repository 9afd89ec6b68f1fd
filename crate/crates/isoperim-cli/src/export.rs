//! Graph export formats. Node identity is a 64-bit FNV-1a hash of the
//! canonical vertex list, so ids are stable across runs and machines.

use isoperim::graphmin::{ClassFlags, MinGraph};
use isoperim::lattice::VertexSet;
use serde::Serialize;
use std::fmt::Write as _;

/// FNV-1a over the ASCII rendering "x1,y1;x2,y2;..." of the sorted vertex
/// list, as a 16-digit hex string.
pub fn node_id(set: &VertexSet) -> String {
    let text = set
        .iter()
        .map(|v| format!("{},{}", v.x, v.y))
        .collect::<Vec<_>>()
        .join(";");
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

#[derive(Serialize)]
struct FlagsExport {
    dead: bool,
    mortal: bool,
    efficient: bool,
    uniquely_minimal: bool,
    connected: bool,
}

impl From<ClassFlags> for FlagsExport {
    fn from(f: ClassFlags) -> Self {
        FlagsExport {
            dead: f.dead,
            mortal: f.mortal,
            efficient: f.efficient,
            uniquely_minimal: f.uniquely_minimal,
            connected: f.connected,
        }
    }
}

#[derive(Serialize)]
struct NodeExport {
    id: String,
    grading: usize,
    vertices: Vec<(i64, i64)>,
    flags: FlagsExport,
}

#[derive(Serialize)]
struct GraphExport {
    n_max: usize,
    nodes: Vec<NodeExport>,
    edges: Vec<(String, String)>,
}

pub fn graph_json(graph: &MinGraph) -> String {
    let ids: Vec<String> = graph.nodes.iter().map(|n| node_id(&n.canonical)).collect();
    let export = GraphExport {
        n_max: graph.n_max,
        nodes: graph
            .nodes
            .iter()
            .zip(&ids)
            .map(|(node, id)| NodeExport {
                id: id.clone(),
                grading: node.grading,
                vertices: node.canonical.iter().map(|v| (v.x, v.y)).collect(),
                flags: node.flags.into(),
            })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|&(i, j)| (ids[i].clone(), ids[j].clone()))
            .collect(),
    };
    serde_json::to_string(&export).expect("graph exports always serialize")
}

pub fn graph_dot(graph: &MinGraph) -> String {
    let ids: Vec<String> = graph.nodes.iter().map(|n| node_id(&n.canonical)).collect();
    let mut out = String::from("graph minsets {\n");
    for (node, id) in graph.nodes.iter().zip(&ids) {
        writeln!(out, "  \"{id}\" [label=\"g{}:{id}\"];", node.grading).unwrap();
    }
    for &(i, j) in &graph.edges {
        writeln!(out, "  \"{}\" -- \"{}\";", ids[i], ids[j]).unwrap();
    }
    out.push_str("}\n");
    out
}

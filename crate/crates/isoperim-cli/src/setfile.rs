//! The JSON exchange format for vertex sets: `{"vertices": [[x, y], ...]}`.

use anyhow::{bail, Context, Result};
use isoperim::lattice::{Vertex, VertexSet};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Serialize, Deserialize)]
pub struct SetFile {
    pub vertices: Vec<(i64, i64)>,
}

impl SetFile {
    /// Serializes with vertices sorted by `(y, x)`, so equal sets produce
    /// identical files.
    pub fn from_set(set: &VertexSet) -> Self {
        SetFile {
            vertices: set.iter().map(|v| (v.x, v.y)).collect(),
        }
    }

    /// Rejects duplicate vertices rather than silently merging them: a
    /// duplicate in an input file is always a mistake.
    pub fn into_set(self) -> Result<VertexSet> {
        let verts: Vec<Vertex> = self
            .vertices
            .iter()
            .map(|&(x, y)| Vertex::new(x, y))
            .collect();
        let set = VertexSet::new(verts.iter().copied())?;
        if set.len() != verts.len() {
            bail!("set file contains duplicate vertices");
        }
        Ok(set)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("set files always serialize")
    }
}

pub fn load(path: &Path) -> Result<VertexSet> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: SetFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    file.into_set()
}

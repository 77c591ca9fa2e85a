//! Line diagrams: columns of `d_1, ..., d_t` top-adjusted vertices joined by
//! edges between distinct columns.
//!
//! Vertices are numbered column by column, top to bottom; ids are 0-based
//! here (vertex `u` is basis vector `e_{u+1}`). Only branchless diagrams are
//! representable, so every connected component is a chain.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::composition::DimensionVector;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineDiagram {
    columns: DimensionVector,
    offsets: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

/// Edge counts of the chains of a branchless diagram, sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStats {
    pub lengths: Vec<usize>,
}

impl ChainStats {
    pub fn vertex_count(&self) -> usize {
        self.lengths.iter().map(|c| c + 1).sum()
    }
}

impl LineDiagram {
    pub fn new(columns: DimensionVector, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let offsets = columns.offsets();
        let n = columns.n();
        let col = |u: usize| offsets.partition_point(|&o| o <= u);
        let edges: BTreeSet<_> = edges.into_iter().collect();
        let mut left = vec![false; n];
        let mut right = vec![false; n];
        for &(u, v) in &edges {
            if u >= v || v >= n {
                return Err(Error::InvalidDiagram(format!("bad edge ({u},{v}) for n = {n}")));
            }
            if col(u) == col(v) {
                return Err(Error::InvalidDiagram(format!("edge ({u},{v}) inside one column")));
            }
            if std::mem::replace(&mut right[u], true) || std::mem::replace(&mut left[v], true) {
                return Err(Error::InvalidDiagram(format!("branching at edge ({u},{v})")));
            }
        }
        Ok(LineDiagram {
            columns,
            offsets,
            edges,
        })
    }

    pub fn edgeless(columns: DimensionVector) -> Self {
        let offsets = columns.offsets();
        LineDiagram {
            columns,
            offsets,
            edges: BTreeSet::new(),
        }
    }

    pub fn columns(&self) -> &DimensionVector {
        &self.columns
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn n(&self) -> usize {
        self.columns.n()
    }

    /// Vertex id of the vertex at `height` (1-based from the top) in `column` (1-based).
    pub fn vertex(&self, column: usize, height: usize) -> usize {
        self.offsets[column - 1] + height - 1
    }

    /// `(column, height)` of a vertex, both 1-based.
    pub fn position(&self, u: usize) -> (usize, usize) {
        let c = self.offsets.partition_point(|&o| o <= u);
        (c, u - self.offsets[c - 1] + 1)
    }

    fn right_neighbor(&self, u: usize) -> Option<usize> {
        self.edges.range((u, 0)..(u + 1, 0)).next().map(|&(_, v)| v)
    }

    /// The chains as vertex sequences, left to right, ordered by first vertex.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let has_left: BTreeSet<usize> = self.edges.iter().map(|&(_, v)| v).collect();
        (0..self.n())
            .filter(|u| !has_left.contains(u))
            .map(|start| {
                let mut chain = vec![start];
                while let Some(v) = self.right_neighbor(*chain.last().unwrap()) {
                    chain.push(v);
                }
                chain
            })
            .collect()
    }

    /// A copy with the given edge removed (no-op if absent).
    pub fn without_edge(&self, e: (usize, usize)) -> Self {
        let mut out = self.clone();
        out.edges.remove(&e);
        out
    }

    /// A copy with an extra edge, if the result is still branchless.
    pub fn with_edge(&self, e: (usize, usize)) -> Result<Self> {
        LineDiagram::new(self.columns.clone(), self.edges.iter().copied().chain([e]))
    }

    /// Deterministic ASCII picture: one text row per height, `o` for vertices,
    /// `---` for horizontal edges. Non-horizontal edges are listed after the picture.
    pub fn render_ascii(&self) -> String {
        let t = self.columns.t();
        let rows = self.columns.parts().iter().copied().max().unwrap_or(0);
        let mut out = String::new();
        let mut slanted = Vec::new();
        let mut horizontal: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
        for &(u, v) in &self.edges {
            let (cu, hu) = self.position(u);
            let (cv, hv) = self.position(v);
            if hu == hv {
                horizontal.insert((hu, cu, cv));
            } else {
                slanted.push((u, v));
            }
        }
        for h in 1..=rows {
            let mut line = String::new();
            // spans[c] = true if a horizontal edge at height h covers the gap right of column c
            let mut spans = vec![false; t + 1];
            for &(_, a, b) in horizontal.range((h, 0, 0)..(h + 1, 0, 0)) {
                for s in spans.iter_mut().take(b).skip(a) {
                    *s = true;
                }
            }
            for c in 1..=t {
                let cell = if self.columns.d(c) >= h {
                    'o'
                } else if c > 1 && spans[c - 1] && spans[c] {
                    '-'
                } else {
                    ' '
                };
                line.push(cell);
                if c < t {
                    line.push_str(if spans[c] { "---" } else { "   " });
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        for (u, v) in slanted {
            let _ = writeln!(out, "e({},{})", u + 1, v + 1);
        }
        out
    }
}

/// The complete line diagram `L_R(d)`: at every height, consecutive columns
/// that reach that height are joined.
pub fn complete_diagram(d: &DimensionVector) -> LineDiagram {
    let base = LineDiagram::edgeless(d.clone());
    let top = d.parts().iter().copied().max().unwrap_or(0);
    let mut edges = Vec::new();
    for h in 1..=top {
        let cols: Vec<usize> = (1..=d.t()).filter(|&c| d.d(c) >= h).collect();
        for w in cols.windows(2) {
            edges.push((base.vertex(w[0], h), base.vertex(w[1], h)));
        }
    }
    LineDiagram::new(d.clone(), edges).expect("complete diagram is branchless")
}

/// Restriction to columns `i..=j` (1-based), re-indexed, keeping the edges
/// with both endpoints inside.
pub fn subdiagram(l: &LineDiagram, i: usize, j: usize) -> Result<LineDiagram> {
    let cols = l.columns.slice(i, j)?;
    let (lo, hi) = (l.offsets[i - 1], l.offsets[j]);
    let edges = l
        .edges
        .iter()
        .filter(|&&(u, v)| u >= lo && v < hi)
        .map(|&(u, v)| (u - lo, v - lo));
    LineDiagram::new(cols, edges)
}

pub fn chain_stats(l: &LineDiagram) -> ChainStats {
    let mut lengths: Vec<usize> = l.chains().iter().map(|c| c.len() - 1).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    ChainStats { lengths }
}

/// The partition of `Φ(L)`: chain lengths plus one, sorted.
pub fn diagram_class(l: &LineDiagram) -> Partition {
    Partition::from_unsorted(chain_stats(l).lengths.iter().map(|c| c + 1).collect())
}

/// `Φ(L) = Σ_{e(u,v) ∈ L} E_uv`.
pub fn phi<S: Scalar>(l: &LineDiagram) -> Matrix<S> {
    Matrix::from_unit_entries(l.n(), l.edges.iter().copied())
}

/// The Richardson element `X(d) = Φ(L_R(d))`.
pub fn richardson_element<S: Scalar>(d: &DimensionVector) -> Matrix<S> {
    phi(&complete_diagram(d))
}

/// `r_ij^k = rk X(d)[ij]^k`, read off the chains of `L_R(d)[ij]`: a chain with
/// `c` edges contributes `max(c - k + 1, 0)`.
pub fn r_rank(d: &DimensionVector, i: usize, j: usize, k: usize) -> Result<usize> {
    d.check_pair(i, j)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let sub = subdiagram(&complete_diagram(d), i, j)?;
    Ok(chain_stats(&sub)
        .lengths
        .iter()
        .map(|&c| (c + 1).saturating_sub(k))
        .sum())
}

/// The number of chains of `L_R(d)[ij]` with at least `k` edges. This is the
/// literal chain count; it agrees with [`r_rank`] only when every such chain
/// has exactly `k` edges.
pub fn chains_with_at_least(d: &DimensionVector, i: usize, j: usize, k: usize) -> Result<usize> {
    d.check_pair(i, j)?;
    let sub = subdiagram(&complete_diagram(d), i, j)?;
    Ok(chain_stats(&sub).lengths.iter().filter(|&&c| c >= k).count())
}

use crate::error::{invalid, Result};
use crate::graph::{InducedSubgraph, Vertex};

/// Positive integer vertex weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexWeights {
    w: Vec<u64>,
}

impl VertexWeights {
    pub fn new(w: Vec<u64>) -> Result<Self> {
        if let Some(v) = w.iter().position(|&x| x == 0) {
            return Err(invalid(format!(
                "vertex {v} has weight 0, weights must be >= 1"
            )));
        }
        Ok(VertexWeights { w })
    }

    pub fn unit(n: usize) -> Self {
        VertexWeights { w: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> u64 {
        self.w[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.w
    }

    pub fn is_unit(&self) -> bool {
        self.w.iter().all(|&x| x == 1)
    }

    /// `w(X)`.
    pub fn of(&self, set: &[Vertex]) -> u64 {
        set.iter().map(|&v| self.w[v]).sum()
    }

    /// `w(V(G))`.
    pub fn total(&self) -> u64 {
        self.w.iter().sum()
    }

    /// Weights of the vertices kept in `sub`, indexed by child vertex.
    pub fn restrict(&self, sub: &InducedSubgraph) -> VertexWeights {
        VertexWeights {
            w: sub.parent_vertices().iter().map(|&v| self.w[v]).collect(),
        }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.w.len() != n {
            return Err(invalid(format!(
                "weights cover {} vertices but the graph has {n}",
                self.w.len()
            )));
        }
        Ok(())
    }
}

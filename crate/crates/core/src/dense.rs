//! Internal dense view of a graph: vertices renumbered to `0..n` in
//! ascending identifier order. The matching and LP routines run on this
//! view with an `alive` mask instead of materialising subgraphs.

use crate::graph::{Graph, VertexId};

pub(crate) struct DenseGraph {
    pub ids: Vec<VertexId>,
    pub adj: Vec<Vec<u32>>,
}

impl DenseGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let adj = ids
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .unwrap()
                    .iter()
                    .map(|u| ids.binary_search(u).unwrap() as u32)
                    .collect()
            })
            .collect();
        DenseGraph { ids, adj }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }
}

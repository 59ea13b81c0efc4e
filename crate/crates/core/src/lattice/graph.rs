use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::{json, Value};

use super::{basic_degenerations, MoveKind};
use crate::partitions::{enumerate_partitions, GhostPartition};

/// Partitions of a type joined by basic moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeGraph {
    pub vertices: Vec<GhostPartition>,
    /// `(from, to, kind)`: the move takes `vertices[from]` to `vertices[to]`.
    pub edges: Vec<(usize, usize, MoveKind)>,
}

pub fn lattice_graph(g: u32, h: u32) -> LatticeGraph {
    LatticeGraph::over(enumerate_partitions(g, h))
}

impl LatticeGraph {
    /// Graph on the given partitions, keeping only moves between them.
    pub fn over(vertices: Vec<GhostPartition>) -> Self {
        let index: HashMap<&GhostPartition, usize> = vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut edges = BTreeSet::new();
        for (i, p) in vertices.iter().enumerate() {
            for (mv, target) in basic_degenerations(p) {
                if let Some(&j) = index.get(&target) {
                    edges.insert((i, j, mv.kind));
                }
            }
        }
        LatticeGraph {
            vertices,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Undirected adjacency as sorted index pairs.
    pub fn adjacency(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(a, b, _)| (a.min(b), a.max(b))).collect()
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|p| serde_json::to_value(p).expect("partition serializes"))
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|&(a, b, k)| json!([a, b, k.as_str()])).collect();
        json!({ "vertices": vertices, "edges": edges })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph lattice {\n");
        for (i, p) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{p}\"];\n"));
        }
        for &(a, b, k) in &self.edges {
            out.push_str(&format!("  {a} -- {b} [label=\"{k}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let g = lattice_graph(0, 1);
        assert_eq!((g.vertices.len(), g.edges.len()), (1, 0));
        assert!(g.is_connected());

        let g = lattice_graph(1, 1);
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
        assert_eq!(g.edges[0].2, MoveKind::III);
        assert!(g.is_connected());
    }

    #[test]
    fn exports() {
        let g = lattice_graph(1, 1);
        assert_eq!(
            g.to_json().to_string(),
            r#"{"vertices":[{"closed":[1],"open":[],"target":[1,1]},{"closed":[],"open":[[1,1]],"target":[1,1]}],"edges":[[0,1,"III"]]}"#
        );
        assert_eq!(
            g.to_dot(),
            "graph lattice {\n  0 [label=\"(1)\"];\n  1 [label=\"((1,1))\"];\n  0 -- 1 [label=\"III\"];\n}\n"
        );
    }
}

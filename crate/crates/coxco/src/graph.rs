//! Finite simple graphs and their shape (connectivity, tree-ness, components).
//!
//! These graphs carry the combinatorics attached to a Coxeter system: the
//! finite-order graph used by the graph coherence criterion and the diagram
//! graph used by finite-type classification.  Vertices are `0..vertex_count`;
//! edges are unordered pairs with no loops and no multiplicities.

use std::collections::BTreeSet;

/// An undirected graph without loops or parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Connectivity summary of a [`SimpleGraph`].
///
/// `components` lists the vertex sets of the connected components, each sorted,
/// ordered by their smallest vertex.  `tree` holds exactly when the graph is
/// connected and `|E| = |V| - 1`; the edge count is checked on its own rather
/// than inferred from the traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphShape {
    pub connected: bool,
    pub tree: bool,
    pub components: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// Inserts the edge `{u, v}`.  Re-inserting an existing edge is a no-op.
    ///
    /// Panics if an endpoint is out of range or `u == v`; callers construct
    /// graphs from already-validated data.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "edge ({u}, {v}) out of range for {} vertices",
            self.vertex_count
        );
        assert!(u != v, "loops are not allowed (vertex {u})");
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// The subgraph induced on `vertices`, relabeled `0..vertices.len()` in
    /// the order given.  Panics on out-of-range or repeated vertices.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut position = vec![usize::MAX; self.vertex_count];
        for (new, &old) in vertices.iter().enumerate() {
            assert!(old < self.vertex_count, "vertex {old} out of range");
            assert!(position[old] == usize::MAX, "vertex {old} repeated");
            position[old] = new;
        }
        let mut sub = SimpleGraph::new(vertices.len());
        for &(a, b) in &self.edges {
            if position[a] != usize::MAX && position[b] != usize::MAX {
                sub.add_edge(position[a], position[b]);
            }
        }
        sub
    }

    /// Computes connectivity, tree-ness, and the component decomposition.
    pub fn shape(&self) -> GraphShape {
        let n = self.vertex_count;
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut component = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                component.push(v);
                for &w in &adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        let connected = components.len() <= 1;
        let tree = connected && self.edges.len() + 1 == n;
        GraphShape {
            connected,
            tree,
            components,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.shape().connected
    }

    pub fn is_tree(&self) -> bool {
        self.shape().tree
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 0..n - 1 {
            g.add_edge(i, i + 1);
        }
        g
    }

    #[test]
    fn five_cycle_is_connected_not_tree() {
        let shape = cycle(5).shape();
        assert!(shape.connected);
        assert!(!shape.tree);
        assert_eq!(shape.components, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn path_is_tree() {
        let shape = path(4).shape();
        assert!(shape.connected);
        assert!(shape.tree);
    }

    #[test]
    fn edgeless_graph_splits_into_singletons() {
        let shape = SimpleGraph::new(2).shape();
        assert!(!shape.connected);
        assert!(!shape.tree);
        assert_eq!(shape.components, vec![vec![0], vec![1]]);
    }

    #[test]
    fn single_vertex_is_a_tree() {
        let shape = SimpleGraph::new(1).shape();
        assert!(shape.connected);
        assert!(shape.tree);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = cycle(5);
        let sub = g.induced(&[0, 1, 2]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.has_edge(0, 1) && sub.has_edge(1, 2) && !sub.has_edge(0, 2));
    }

    #[test]
    fn degrees_and_neighbors() {
        let g = path(4);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(1), vec![0, 2]);
    }
}

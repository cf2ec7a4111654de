//! Abstract finite multigraphs. Loops and parallel edges are allowed; a loop
//! never lies in the boundary of a vertex set.

/// Undirected multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    loops: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut loops = vec![0; n];
        for &(u, v) in &edges {
            assert!(u < n && v < n, "edge ({u},{v}) outside 0..{n}");
            if u == v {
                loops[u] += 1;
            } else {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Graph {
            n,
            edges,
            adj,
            loops,
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours over non-loop edges, one entry per edge.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Number of non-loop edge ends at `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.loops[v]
    }

    /// Maximum degree, ignoring loops.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &u in &self.adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of non-loop edges with exactly one end in `set`.
    pub fn boundary_size(&self, set: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u != v && set[u] != set[v])
            .count()
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_ignore_loops() {
        let g = Graph::new(2, vec![(0, 1), (0, 0), (0, 1)]);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.loops_at(0), 1);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.boundary_size(&[true, false]), 2);
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::new(5, vec![(0, 3), (3, 4), (1, 2)]);
        assert_eq!(g.components(), vec![vec![0, 3, 4], vec![1, 2]]);
        let h = g.induced(&[3, 4, 1]);
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn standard_families() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).max_degree(), 2);
        assert_eq!(Graph::path(1).edge_count(), 0);
    }
}

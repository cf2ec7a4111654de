//! Twist regions: maximal connected unions of bigon faces, and the twist
//! graph obtained by collapsing each region to a vertex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::map::{CombinatorialMap, FaceSet, MapBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum BlockKind {
    /// Crossings of a connected union of bigons, in order along the chain.
    BigonChain { cyclic: bool },
    /// A crossing on no bigon.
    Isolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistBlock {
    pub crossings: Vec<usize>,
    pub kind: BlockKind,
}

impl TwistBlock {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.kind, BlockKind::BigonChain { cyclic: true })
    }
}

/// Partition of the crossings into twist regions, ordered by smallest crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistDecomposition {
    blocks: Vec<TwistBlock>,
    #[serde(skip)]
    region_of: Vec<usize>,
}

impl TwistDecomposition {
    /// Decomposition of the crossing-free diagram.
    pub fn empty() -> Self {
        TwistDecomposition {
            blocks: Vec::new(),
            region_of: Vec::new(),
        }
    }

    pub fn blocks(&self) -> &[TwistBlock] {
        &self.blocks
    }

    /// Number of twist regions.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.region_of.len()
    }

    pub fn region_of(&self, crossing: usize) -> usize {
        self.region_of[crossing]
    }

    pub fn has_cyclic_region(&self) -> bool {
        self.blocks.iter().any(TwistBlock::is_cyclic)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Darts whose edge borders a degree-2 face.
fn bigon_darts(map: &CombinatorialMap, fs: &FaceSet) -> Vec<bool> {
    let mut on = vec![false; map.dart_count()];
    for face in fs.faces().iter().filter(|f| f.len() == 2) {
        for &d in face {
            on[d] = true;
            on[map.alpha(d)] = true;
        }
    }
    on
}

pub fn twist_decomposition(map: &CombinatorialMap, fs: &FaceSet) -> TwistDecomposition {
    let n = map.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut on_bigon = vec![false; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for face in fs.faces().iter().filter(|f| f.len() == 2) {
        let (a, b) = (map.vertex_of(face[0]), map.vertex_of(face[1]));
        on_bigon[a] = true;
        on_bigon[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
        if a != b && !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let bigon_edge = bigon_darts(map, fs);

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = find(&mut parent, v);
        members[r].push(v);
    }
    // Roots are the smallest member, so iterating roots in order sorts blocks.
    let mut blocks = Vec::new();
    let mut region_of = vec![0; n];
    for (root, set) in members.into_iter().enumerate() {
        if set.is_empty() {
            continue;
        }
        debug_assert_eq!(set[0], root);
        let kind = if on_bigon[root] {
            let cyclic = set.len() >= 2
                && set
                    .iter()
                    .all(|&x| map.darts_at(x).iter().all(|&d| bigon_edge[d]));
            BlockKind::BigonChain { cyclic }
        } else {
            BlockKind::Isolated
        };
        let crossings = chain_order(&set, &adj, kind);
        for &x in &crossings {
            region_of[x] = blocks.len();
        }
        blocks.push(TwistBlock { crossings, kind });
    }
    TwistDecomposition { blocks, region_of }
}

/// Walks the bigon adjacency of a block, a path or a cycle since each
/// crossing meets at most two distinct bigon neighbours.
fn chain_order(set: &[usize], adj: &[Vec<usize>], kind: BlockKind) -> Vec<usize> {
    if set.len() == 1 {
        return set.to_vec();
    }
    let start = match kind {
        BlockKind::BigonChain { cyclic: true } => set[0],
        _ => *set
            .iter()
            .find(|&&x| adj[x].len() <= 1)
            .expect("a linear chain has an end"),
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < set.len() {
        let next = adj[cur]
            .iter()
            .copied()
            .filter(|&y| y != prev && y != start)
            .min()
            .expect("chain continues");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// The collapsed multigraph `T(D)`; vertex `i` is region `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistGraph {
    map: CombinatorialMap,
}

impl TwistGraph {
    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn graph(&self) -> Graph {
        self.map.graph()
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    /// Maximum number of edge-ends at a vertex, loops counted twice.
    pub fn max_degree(&self) -> usize {
        self.map.max_degree()
    }
}

pub fn twist_graph(td: &TwistDecomposition, map: &CombinatorialMap) -> Result<TwistGraph> {
    if td.crossing_count() != map.vertex_count() {
        return Err(Error::InconsistentInputs(format!(
            "decomposition covers {} crossings, map has {}",
            td.crossing_count(),
            map.vertex_count()
        )));
    }
    let fs = map.faces();
    let bigon_edge = bigon_darts(map, &fs);
    for (d, &on_bigon) in bigon_edge.iter().enumerate() {
        let (a, b) = (map.vertex_of(d), map.target(d));
        if on_bigon && td.region_of(a) != td.region_of(b) {
            return Err(Error::InconsistentInputs(format!(
                "bigon edge joins regions {} and {}",
                td.region_of(a),
                td.region_of(b)
            )));
        }
    }

    let mut b = MapBuilder::from_map(map);
    let mut relabel = vec![0; map.vertex_count()];
    for (id, block) in td.blocks().iter().enumerate() {
        let root = block.crossings[0];
        relabel[root] = id;
        // Contract a spanning tree of bigon edges into the root.
        loop {
            let pick = b
                .darts_at(root)
                .into_iter()
                .find(|&d| bigon_edge[d] && b.target(d) != root);
            match pick {
                Some(d) => b.contract(d),
                None => break,
            }
        }
        let loops: Vec<usize> = b
            .darts_at(root)
            .into_iter()
            .filter(|&d| bigon_edge[d] && d < b.twin(d))
            .collect();
        for d in loops {
            b.delete_edge(d);
        }
    }
    Ok(TwistGraph {
        map: b.finish_relabelled(&relabel, td.t()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::build_map;
    use crate::pd::parse_pd;

    fn decompose(text: &str) -> (CombinatorialMap, TwistDecomposition) {
        let m = build_map(&parse_pd(text).unwrap()).unwrap();
        let td = twist_decomposition(&m, &m.faces());
        (m, td)
    }

    const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
    const FIGURE_EIGHT: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

    #[test]
    fn trefoil_is_one_cyclic_region() {
        let (m, td) = decompose(TREFOIL);
        assert_eq!(td.t(), 1);
        assert_eq!(td.blocks()[0].crossings, vec![0, 1, 2]);
        assert!(td.blocks()[0].is_cyclic());
        let tg = twist_graph(&td, &m).unwrap();
        assert_eq!((tg.vertex_count(), tg.edge_count()), (1, 0));
        assert_eq!(tg.map().euler_characteristic(), 2);
    }

    #[test]
    fn figure_eight_has_two_regions() {
        let (m, td) = decompose(FIGURE_EIGHT);
        assert_eq!(td.t(), 2);
        assert!(td.blocks().iter().all(|b| b.len() == 2 && !b.is_cyclic()));
        let tg = twist_graph(&td, &m).unwrap();
        assert_eq!((tg.vertex_count(), tg.edge_count()), (2, 4));
        assert_eq!(tg.max_degree(), 4);
        assert!(tg.graph().edges().iter().all(|&(u, v)| u != v));
        assert_eq!(tg.map().euler_characteristic(), 2);
    }

    #[test]
    fn hopf_is_cyclic_pair() {
        let (m, td) = decompose("[[1,3,2,4],[3,1,4,2]]");
        assert_eq!(td.t(), 1);
        assert!(td.blocks()[0].is_cyclic());
        assert_eq!(twist_graph(&td, &m).unwrap().edge_count(), 0);
    }

    #[test]
    fn one_crossing_unknot() {
        let (m, td) = decompose("[[1,2,2,1]]");
        assert_eq!(td.t(), 1);
        assert_eq!(td.blocks()[0].kind, BlockKind::BigonChain { cyclic: false });
        let tg = twist_graph(&td, &m).unwrap();
        assert_eq!((tg.vertex_count(), tg.edge_count()), (1, 0));
    }

    #[test]
    fn mismatched_decomposition_rejected() {
        let (_, td) = decompose(TREFOIL);
        let (m8, _) = decompose(FIGURE_EIGHT);
        assert!(matches!(
            twist_graph(&td, &m8),
            Err(Error::InconsistentInputs(_))
        ));
    }
}

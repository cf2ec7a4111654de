//! Planar vertex separators with `|S| ≤ √(8n)` and parts of size at most
//! `2n/3`, via BFS levels and a fundamental cycle of a triangulation.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::{CombinatorialMap, MapBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorResult {
    pub separator: Vec<usize>,
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl SeparatorResult {
    /// Checks the partition, non-adjacency and size guarantees against `adj`.
    pub fn verify(&self, adj: &[Vec<usize>]) -> std::result::Result<(), String> {
        let n = adj.len();
        let mut side = vec![0u8; n];
        for (tag, set) in [(1, &self.separator), (2, &self.part1), (3, &self.part2)] {
            for &v in set.iter() {
                if v >= n || side[v] != 0 {
                    return Err(format!("vertex {v} misplaced"));
                }
                side[v] = tag;
            }
        }
        if let Some(v) = side.iter().position(|&s| s == 0) {
            return Err(format!("vertex {v} unassigned"));
        }
        for (v, nbrs) in adj.iter().enumerate() {
            for &u in nbrs {
                if side[v] == 2 && side[u] == 3 {
                    return Err(format!("edge {v}-{u} crosses the separator"));
                }
            }
        }
        let s = self.separator.len();
        if s * s > 8 * n {
            return Err(format!("|S| = {s} exceeds sqrt(8*{n})"));
        }
        for part in [&self.part1, &self.part2] {
            if 3 * part.len() > 2 * n {
                return Err(format!("part of size {} exceeds 2/3 of {n}", part.len()));
            }
        }
        Ok(())
    }
}

/// Sum of `V − E + F` over components must be `2·components`.
fn check_spherical(g: &CombinatorialMap) -> Result<()> {
    let components = g.component_count().max(1) as i64;
    let euler = g.euler_characteristic();
    if euler != 2 * components {
        return Err(Error::NonSpherical { euler });
    }
    Ok(())
}

/// Separator of a spherical (possibly disconnected) map, on its vertex ids.
/// Loops and parallel edges are ignored.
pub fn separate(g: &CombinatorialMap) -> Result<SeparatorResult> {
    check_spherical(g)?;
    Ok(separate_rotation(&g.simple_rotation()))
}

/// Separator of a simple plane graph given by counterclockwise neighbour lists.
pub(crate) fn separate_rotation(rot: &[Vec<usize>]) -> SeparatorResult {
    let n = rot.len();
    if n <= 2 {
        return SeparatorResult {
            separator: (0..n).collect(),
            part1: Vec::new(),
            part2: Vec::new(),
        };
    }
    let components = rotation_components(rot);
    if components.len() > 1 {
        return separate_disconnected(rot, components);
    }
    separate_connected(rot)
}

fn rotation_components(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; rot.len()];
    let mut out = Vec::new();
    for s in 0..rot.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &u in &rot[comp[i]] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Rotation restricted to `vertices`, renumbered by position.
pub(crate) fn induced_rotation(rot: &[Vec<usize>], vertices: &[usize]) -> Vec<Vec<usize>> {
    let mut index = vec![usize::MAX; rot.len()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    vertices
        .iter()
        .map(|&v| {
            rot[v]
                .iter()
                .filter(|&&u| index[u] != usize::MAX)
                .map(|&u| index[u])
                .collect()
        })
        .collect()
}

fn separate_disconnected(rot: &[Vec<usize>], components: Vec<Vec<usize>>) -> SeparatorResult {
    let n = rot.len();
    let largest = (0..components.len())
        .max_by_key(|&i| (components[i].len(), std::cmp::Reverse(i)))
        .unwrap();
    if 3 * components[largest].len() <= 2 * n {
        return pack(n, Vec::new(), components);
    }
    let big = &components[largest];
    let inner = separate_rotation(&induced_rotation(rot, big));
    let lift = |set: &[usize]| set.iter().map(|&i| big[i]).collect::<Vec<_>>();
    let mut pieces = vec![lift(&inner.part1), lift(&inner.part2)];
    pieces.extend(
        components
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != largest)
            .map(|(_, c)| c.clone()),
    );
    pack(n, lift(&inner.separator), pieces)
}

/// Packs mutually non-adjacent pieces, each of size at most `2n/3`, into two
/// parts of size at most `2n/3`.
fn pack(n: usize, separator: Vec<usize>, mut pieces: Vec<Vec<usize>>) -> SeparatorResult {
    pieces.retain(|p| !p.is_empty());
    pieces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    let mut part1 = Vec::new();
    let mut part2 = Vec::new();
    let mut iter = pieces.into_iter();
    for piece in iter.by_ref() {
        part1.extend(piece);
        if 3 * part1.len() >= n {
            break;
        }
    }
    for piece in iter {
        part2.extend(piece);
    }
    let mut separator = separator;
    separator.sort_unstable();
    part1.sort_unstable();
    part2.sort_unstable();
    SeparatorResult {
        separator,
        part1,
        part2,
    }
}

fn separate_connected(rot: &[Vec<usize>]) -> SeparatorResult {
    let n = rot.len();
    // BFS from vertex 0.
    let mut level = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    level[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in &rot[v] {
            if level[u] == usize::MAX {
                level[u] = level[v] + 1;
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let r = level[*order.last().unwrap()];
    let mut count = vec![0usize; r + 2];
    for &l in &level {
        count[l] += 1;
    }
    let mut cum = 0;
    let mut l1 = 0;
    for (l, &c) in count.iter().enumerate() {
        cum += c;
        if 2 * cum >= n {
            l1 = l;
            break;
        }
    }
    let k = cum;
    let sq = |x: usize| x * x;
    // Any admissible pair keeps |S| within bound; take the thinnest levels,
    // nearest the median on ties.
    let l0 = (0..=l1)
        .rev()
        .filter(|&l| sq(count[l] + 2 * (l1 - l)) <= 4 * k)
        .min_by_key(|&l| count[l])
        .expect("a short level exists below the median level");
    let l2 = (l1 + 1..=r + 1)
        .filter(|&l| sq(count[l] + 2 * (l - l1 - 1)) <= 4 * (n - k))
        .min_by_key(|&l| count[l])
        .expect("a short level exists above the median level");

    let mut separator: Vec<usize> = (0..n)
        .filter(|&v| level[v] == l0 || level[v] == l2)
        .collect();
    let piece = |lo: usize, hi: usize| -> Vec<usize> {
        (0..n)
            .filter(|&v| level[v] >= lo && level[v] < hi)
            .collect()
    };
    let bottom = piece(0, l0);
    let top = piece(l2 + 1, usize::MAX);
    let middle = piece(l0 + 1, l2);
    if 3 * middle.len() <= 2 * n {
        return pack(n, separator, vec![bottom, middle, top]);
    }

    // Levels below l2 induce a connected plane graph containing the BFS tree.
    let inner: Vec<usize> = (0..n).filter(|&v| level[v] < l2).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in inner.iter().enumerate() {
        index[v] = i;
    }
    let sub = induced_rotation(rot, &inner);
    let tri = triangulate_rotation(&sub).expect("connected simple graph with at least 3 vertices");
    let sub_parent: Vec<usize> = inner
        .iter()
        .map(|&v| if v == 0 { usize::MAX } else { index[parent[v]] })
        .collect();
    let sub_level: Vec<usize> = inner.iter().map(|&v| level[v]).collect();
    let weight: Vec<bool> = sub_level.iter().map(|&l| l > l0).collect();
    let (on_cycle, inside) = cycle_separator(&tri.0, &sub_parent, &sub_level, &weight);

    let mut in_middle = Vec::new();
    let mut out_middle = Vec::new();
    for (i, &v) in inner.iter().enumerate() {
        if !weight[i] {
            continue;
        }
        if on_cycle[i] {
            separator.push(v);
        } else if inside[i] {
            in_middle.push(v);
        } else {
            out_middle.push(v);
        }
    }
    pack(n, separator, vec![bottom, top, in_middle, out_middle])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Above,
}

/// Fundamental-cycle separator for a triangulation with spanning tree
/// `parent`. Returns (on cycle, strictly inside) flags; both open sides carry
/// at most two thirds of the total weight.
fn cycle_separator(
    tri: &CombinatorialMap,
    parent: &[usize],
    depth: &[usize],
    weight: &[bool],
) -> (Vec<bool>, Vec<bool>) {
    let n = tri.vertex_count();
    let fs = tri.faces();
    let nf = fs.len();
    let is_tree = |d: usize| {
        let (a, b) = (tri.vertex_of(d), tri.target(d));
        parent[a] == b || parent[b] == a
    };

    // Dual spanning tree over non-tree edges, rooted at face 0. Each face's
    // parent link is recorded by the dart of the connecting edge on its side.
    let mut face_parent_dart = vec![usize::MAX; nf];
    let mut tin = vec![usize::MAX; nf];
    let mut tout = vec![0; nf];
    let mut clock = 0;
    let mut stack = vec![(0usize, 0usize)];
    tin[0] = 0;
    clock += 1;
    while let Some(top) = stack.last_mut() {
        let (f, pos) = *top;
        let face = fs.face(f);
        if pos == face.len() {
            tout[f] = clock;
            stack.pop();
            continue;
        }
        top.1 += 1;
        let d = face[pos];
        if is_tree(d) {
            continue;
        }
        let g = fs.face_of(tri.alpha(d));
        if tin[g] == usize::MAX {
            tin[g] = clock;
            clock += 1;
            face_parent_dart[g] = tri.alpha(d);
            stack.push((g, 0));
        }
    }
    debug_assert!(
        tin.iter().all(|&t| t != usize::MAX),
        "dual tree spans all faces"
    );

    let canon: Vec<usize> = (0..n).map(|v| fs.face_of(tri.darts_at(v)[0])).collect();
    let mut face_weight = vec![0usize; nf];
    for v in 0..n {
        if weight[v] {
            face_weight[canon[v]] += 1;
        }
    }
    // Subtree sums in reverse preorder.
    let mut by_tin: Vec<usize> = (0..nf).collect();
    by_tin.sort_by_key(|&f| tin[f]);
    let mut sub = face_weight.clone();
    for &f in by_tin.iter().rev() {
        let d = face_parent_dart[f];
        if d != usize::MAX {
            let p = fs.face_of(tri.alpha(d));
            sub[p] += sub[f];
        }
    }
    let total = sub[0];

    // Non-tree edge identified by its lower face (the dual child).
    let child_of = |d: usize| {
        let a = fs.face_of(d);
        if face_parent_dart[a] == d {
            a
        } else {
            fs.face_of(tri.alpha(d))
        }
    };
    let in_subtree = |g: usize, f: usize| tin[g] <= tin[f] && tin[f] < tout[g];
    let cycle_of = |child: usize| -> Vec<usize> {
        let d = face_parent_dart[child];
        let (mut a, mut b) = (tri.vertex_of(d), tri.target(d));
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right);
        left
    };
    let side_weight = |child: usize, side: Side, cycle: &[usize]| -> usize {
        let below = sub[child];
        let open = match side {
            Side::Below => below,
            Side::Above => total - below,
        };
        let on = cycle
            .iter()
            .filter(|&&v| weight[v] && (in_subtree(child, canon[v]) == (side == Side::Below)))
            .count();
        open - on
    };

    let first = (0..tri.dart_count())
        .find(|&d| !is_tree(d))
        .expect("a triangulation has non-tree edges");
    let mut child = child_of(first);
    let mut cycle = cycle_of(child);
    let mut side = Side::Below;
    let mut w_in = side_weight(child, Side::Below, &cycle);
    let w_above = side_weight(child, Side::Above, &cycle);
    if w_above > w_in {
        side = Side::Above;
        w_in = w_above;
    }
    while 3 * w_in > 2 * total {
        // The inside face next to the current edge.
        let up = fs.face_of(tri.alpha(face_parent_dart[child]));
        let f = if side == Side::Below { child } else { up };
        let mut best: Option<(usize, usize, Side, Vec<usize>)> = None;
        for &d in fs.face(f) {
            if is_tree(d) {
                continue;
            }
            let c = child_of(d);
            if c == child {
                continue;
            }
            // Keep the side away from f.
            let s = if c == f { Side::Above } else { Side::Below };
            let cyc = cycle_of(c);
            let w = side_weight(c, s, &cyc);
            if best.as_ref().is_none_or(|b| w > b.0) {
                best = Some((w, c, s, cyc));
            }
        }
        match best {
            Some((w, c, s, cyc)) => {
                w_in = w;
                child = c;
                side = s;
                cycle = cyc;
            }
            None => break,
        }
    }

    let mut on_cycle = vec![false; n];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    let inside = (0..n)
        .map(|v| !on_cycle[v] && (in_subtree(child, canon[v]) == (side == Side::Below)))
        .collect();
    (on_cycle, inside)
}

/// Triangulation of a map together with the edges that were added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub map: CombinatorialMap,
    pub added: Vec<(usize, usize)>,
}

/// Adds chords until every face is a triangle. The input must be simple,
/// connected and spherical with at least three vertices.
pub fn triangulate(g: &CombinatorialMap) -> Result<Triangulation> {
    if g.vertex_count() < 3 {
        return Err(Error::TooSmall(g.vertex_count()));
    }
    let rot = g.rotation();
    CombinatorialMap::from_rotation(&rot)?;
    if g.component_count() != 1 {
        return Err(Error::Disconnected {
            components: g.component_count(),
        });
    }
    check_spherical(g)?;
    let (map, added) = triangulate_rotation(&rot)?;
    Ok(Triangulation { map, added })
}

pub(crate) fn triangulate_rotation(
    rot: &[Vec<usize>],
) -> Result<(CombinatorialMap, Vec<(usize, usize)>)> {
    let n = rot.len();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let base = CombinatorialMap::from_rotation(rot)?;
    let mut b = MapBuilder::from_map(&base);
    let mut adjacent: HashSet<(usize, usize)> = HashSet::new();
    for (v, nbrs) in rot.iter().enumerate() {
        for &u in nbrs {
            adjacent.insert((v, u));
        }
    }
    let mut added = Vec::new();
    let fs = base.faces();
    for face in fs.faces() {
        let mut walk = b.face_walk(face[0]);
        while walk.len() > 3 {
            let k = walk.len();
            let w = |i: usize| b.origin(walk[i % k]);
            let i = (0..k)
                .find(|&i| w(i) != w(i + 2) && !adjacent.contains(&(w(i), w(i + 2))))
                .ok_or_else(|| Error::InconsistentInputs("face admits no chord".into()))?;
            let (u, v) = (w(i), w(i + 2));
            let before_u = b.twin(walk[(i + k - 1) % k]);
            let before_v = b.twin(walk[(i + 1) % k]);
            let c = b.add_edge(u, Some(before_u), v, Some(before_v));
            adjacent.insert((u, v));
            adjacent.insert((v, u));
            added.push((u.min(v), u.max(v)));
            walk = b.face_walk(c);
        }
    }
    Ok((b.finish(), added))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_triangulation;

    fn path_map(n: usize) -> CombinatorialMap {
        let rot: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut v = Vec::new();
                if i > 0 {
                    v.push(i - 1);
                }
                if i + 1 < n {
                    v.push(i + 1);
                }
                v
            })
            .collect();
        CombinatorialMap::from_rotation(&rot).unwrap()
    }

    #[test]
    fn path_of_three() {
        let r = separate(&path_map(3)).unwrap();
        assert_eq!(r.separator, vec![1]);
        let mut parts = vec![r.part1.clone(), r.part2.clone()];
        parts.sort();
        assert_eq!(parts, vec![vec![0], vec![2]]);
    }

    #[test]
    fn tiny_graphs() {
        let one = CombinatorialMap::from_rotation(&[vec![]]).unwrap();
        let r = separate(&one).unwrap();
        assert_eq!((r.separator, r.part1.len(), r.part2.len()), (vec![0], 0, 0));
    }

    #[test]
    fn four_cycle_triangulates_to_k4() {
        let rot = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        let t = triangulate(&CombinatorialMap::from_rotation(&rot).unwrap()).unwrap();
        assert_eq!(t.added.len(), 2);
        assert_eq!(t.map.edge_count(), 6);
        assert!(t.map.faces().degrees().iter().all(|&d| d == 3));
        assert_eq!(t.map.euler_characteristic(), 2);
    }

    #[test]
    fn triangle_unchanged() {
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let t = triangulate(&CombinatorialMap::from_rotation(&rot).unwrap()).unwrap();
        assert!(t.added.is_empty());
    }

    #[test]
    fn star_triangulates() {
        let rot = vec![vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]];
        let t = triangulate(&CombinatorialMap::from_rotation(&rot).unwrap()).unwrap();
        assert_eq!(t.map.edge_count(), 3 * 5 - 6);
        assert!(t.map.faces().degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn triangulations_meet_guarantees() {
        for (i, n) in [3, 4, 10, 57, 300, 1000].into_iter().enumerate() {
            let g = random_triangulation(n, i as u64).unwrap();
            let r = separate(&g).unwrap();
            r.verify(&g.simple_rotation()).unwrap();
        }
    }

    #[test]
    fn disconnected_input() {
        let rot = vec![vec![1], vec![0], vec![3], vec![2], vec![]];
        let g = CombinatorialMap::from_rotation(&rot).unwrap();
        let r = separate(&g).unwrap();
        assert!(r.separator.is_empty());
        r.verify(&rot).unwrap();
    }

    #[test]
    fn too_small_to_triangulate() {
        let g = path_map(2);
        assert_eq!(triangulate(&g).unwrap_err(), Error::TooSmall(2));
    }
}

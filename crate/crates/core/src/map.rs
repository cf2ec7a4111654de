//! Combinatorial maps: darts with a vertex rotation and an edge involution.
//!
//! Faces are the orbits of `φ = σ ∘ α`, i.e. `face_next(d) = σ(α(d))`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pd::PdCode;

/// An immutable rotation system. Vertices may have no darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    vertex_count: usize,
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    vertex: Vec<usize>,
    first: Vec<Option<usize>>,
}

/// Face cycles of a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

impl CombinatorialMap {
    /// Builds a map from raw permutations, checking that `alpha` is a
    /// fixed-point-free involution and that `sigma` cycles stay on one vertex.
    pub fn from_parts(
        vertex_count: usize,
        sigma: Vec<usize>,
        alpha: Vec<usize>,
        vertex: Vec<usize>,
    ) -> Result<Self> {
        let n = sigma.len();
        if alpha.len() != n || vertex.len() != n {
            return Err(Error::InconsistentInputs(
                "permutation lengths differ".into(),
            ));
        }
        let mut hit = vec![false; n];
        for d in 0..n {
            let (s, a) = (sigma[d], alpha[d]);
            if s >= n || a >= n || vertex[d] >= vertex_count {
                return Err(Error::InconsistentInputs(format!("dart {d} out of range")));
            }
            if a == d || alpha[a] != d {
                return Err(Error::InconsistentInputs(format!(
                    "edge pairing is not a fixed-point-free involution at dart {d}"
                )));
            }
            if vertex[s] != vertex[d] {
                return Err(Error::InconsistentInputs(format!(
                    "rotation leaves vertex {} at dart {d}",
                    vertex[d]
                )));
            }
            if std::mem::replace(&mut hit[s], true) {
                return Err(Error::InconsistentInputs(
                    "rotation is not a permutation".into(),
                ));
            }
        }
        let mut first = vec![None; vertex_count];
        let mut counts = vec![0usize; vertex_count];
        for d in 0..n {
            first[vertex[d]].get_or_insert(d);
            counts[vertex[d]] += 1;
        }
        // A vertex must form a single rotation cycle.
        for (v, f) in first.iter().enumerate() {
            if let Some(f) = *f {
                let count = counts[v];
                let mut len = 1;
                let mut d = sigma[f];
                while d != f {
                    len += 1;
                    d = sigma[d];
                }
                if len != count {
                    return Err(Error::InconsistentInputs(format!(
                        "vertex {v} has more than one rotation cycle"
                    )));
                }
            }
        }
        Ok(CombinatorialMap {
            vertex_count,
            sigma,
            alpha,
            vertex,
            first,
        })
    }

    /// Simple plane graph from counterclockwise neighbour lists.
    pub fn from_rotation(rotation: &[Vec<usize>]) -> Result<Self> {
        let mut offset = Vec::with_capacity(rotation.len() + 1);
        offset.push(0);
        for nbrs in rotation {
            offset.push(offset.last().unwrap() + nbrs.len());
        }
        let total = *offset.last().unwrap();
        let mut index: HashMap<(usize, usize), usize> = HashMap::with_capacity(total);
        let mut sigma = vec![0; total];
        let mut vertex = vec![0; total];
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &u) in nbrs.iter().enumerate() {
                let d = offset[v] + i;
                if u == v || u >= rotation.len() || index.insert((v, u), d).is_some() {
                    return Err(Error::NotSimple);
                }
                sigma[d] = offset[v] + (i + 1) % nbrs.len();
                vertex[d] = v;
            }
        }
        let mut alpha = vec![0; total];
        for (&(v, u), &d) in &index {
            alpha[d] = *index.get(&(u, v)).ok_or(Error::NotSimple)?;
        }
        CombinatorialMap::from_parts(rotation.len(), sigma, alpha, vertex)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex[d]
    }

    /// Vertex at the far end of dart `d`.
    pub fn target(&self, d: usize) -> usize {
        self.vertex[self.alpha[d]]
    }

    pub fn is_loop(&self, d: usize) -> bool {
        self.vertex[d] == self.target(d)
    }

    pub fn face_next(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    /// Darts at `v` in counterclockwise order.
    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(f) = self.first[v] {
            let mut d = f;
            loop {
                out.push(d);
                d = self.sigma[d];
                if d == f {
                    break;
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at(v).len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Neighbour lists in rotation order (loops and repeats included).
    pub fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count)
            .map(|v| {
                self.darts_at(v)
                    .into_iter()
                    .map(|d| self.target(d))
                    .collect()
            })
            .collect()
    }

    /// Edges as `(dart, twin)` pairs with `dart < twin`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dart_count())
            .filter(move |&d| d < self.alpha[d])
            .map(move |d| (d, self.alpha[d]))
    }

    pub fn faces(&self) -> FaceSet {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = id;
                cycle.push(d);
                d = self.face_next(d);
            }
            faces.push(cycle);
        }
        FaceSet { faces, face_of }
    }

    /// `V − E + F`, counting one face per dartless vertex.
    pub fn euler_characteristic(&self) -> i64 {
        let isolated = self.first.iter().filter(|f| f.is_none()).count();
        let f = self.faces().len() + isolated;
        self.vertex_count as i64 - self.edge_count() as i64 + f as i64
    }

    pub fn component_count(&self) -> usize {
        self.graph().components().len()
    }

    pub fn is_spherical(&self) -> bool {
        self.component_count() == 1 && self.euler_characteristic() == 2
    }

    /// Underlying abstract multigraph (loops and parallel edges kept).
    pub fn graph(&self) -> Graph {
        let edges = self
            .edges()
            .map(|(d, t)| (self.vertex[d], self.vertex[t]))
            .collect();
        Graph::new(self.vertex_count, edges)
    }

    /// Copy with loops removed and parallel edges merged, keeping the first
    /// dart of each neighbour in rotation order.
    pub fn simple_rotation(&self) -> Vec<Vec<usize>> {
        self.rotation()
            .into_iter()
            .enumerate()
            .map(|(v, nbrs)| {
                let mut seen = std::collections::HashSet::new();
                nbrs.into_iter()
                    .filter(|&u| u != v && seen.insert(u))
                    .collect()
            })
            .collect()
    }
}

/// Builds `G(D)`: one vertex per crossing, rotation given by tuple order.
pub fn build_map(pd: &PdCode) -> Result<CombinatorialMap> {
    if pd.crossing_count() == 0 {
        return Err(Error::EmptyDiagram);
    }
    let tuples = pd.normalized();
    let darts = 4 * tuples.len();
    let mut sigma = vec![0; darts];
    let mut vertex = vec![0; darts];
    let mut by_label: Vec<Vec<usize>> = vec![Vec::new(); darts / 2];
    for (x, t) in tuples.iter().enumerate() {
        for (p, &label) in t.iter().enumerate() {
            let d = 4 * x + p;
            sigma[d] = 4 * x + (p + 1) % 4;
            vertex[d] = x;
            by_label[label].push(d);
        }
    }
    let mut alpha = vec![0; darts];
    for pair in &by_label {
        alpha[pair[0]] = pair[1];
        alpha[pair[1]] = pair[0];
    }
    let map = CombinatorialMap::from_parts(tuples.len(), sigma, alpha, vertex)?;
    let components = map.component_count();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    let euler = map.euler_characteristic();
    if euler != 2 {
        return Err(Error::NonSpherical { euler });
    }
    Ok(map)
}

/// Mutable dart structure with linked rotations, used for local surgery
/// (insertions, contractions, deletions) before freezing into a map.
#[derive(Debug, Clone)]
pub(crate) struct MapBuilder {
    next: Vec<usize>,
    prev: Vec<usize>,
    twin: Vec<usize>,
    origin: Vec<usize>,
    alive: Vec<bool>,
    first: Vec<Option<usize>>,
}

impl MapBuilder {
    pub(crate) fn new(vertex_count: usize) -> Self {
        MapBuilder {
            next: Vec::new(),
            prev: Vec::new(),
            twin: Vec::new(),
            origin: Vec::new(),
            alive: Vec::new(),
            first: vec![None; vertex_count],
        }
    }

    pub(crate) fn from_map(map: &CombinatorialMap) -> Self {
        let n = map.dart_count();
        let mut prev = vec![0; n];
        for d in 0..n {
            prev[map.sigma[d]] = d;
        }
        MapBuilder {
            next: map.sigma.clone(),
            prev,
            twin: map.alpha.clone(),
            origin: map.vertex.clone(),
            alive: vec![true; n],
            first: map.first.clone(),
        }
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.first.push(None);
        self.first.len() - 1
    }

    pub(crate) fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub(crate) fn origin(&self, d: usize) -> usize {
        self.origin[d]
    }

    pub(crate) fn target(&self, d: usize) -> usize {
        self.origin[self.twin[d]]
    }

    pub(crate) fn face_next(&self, d: usize) -> usize {
        self.next[self.twin[d]]
    }

    pub(crate) fn darts_at(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(f) = self.first[v] {
            let mut d = f;
            loop {
                out.push(d);
                d = self.next[d];
                if d == f {
                    break;
                }
            }
        }
        out
    }

    /// Live darts, in index order.
    pub(crate) fn darts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.next.len()).filter(move |&d| self.alive[d])
    }

    /// Face walk starting at `d`.
    pub(crate) fn face_walk(&self, d: usize) -> Vec<usize> {
        let mut walk = vec![d];
        let mut e = self.face_next(d);
        while e != d {
            walk.push(e);
            e = self.face_next(e);
        }
        walk
    }

    fn new_dart(&mut self, v: usize) -> usize {
        let d = self.next.len();
        self.next.push(d);
        self.prev.push(d);
        self.twin.push(d);
        self.origin.push(v);
        self.alive.push(true);
        d
    }

    /// Splices dart `d` into the rotation at its origin, right after `after`
    /// (counterclockwise). `after = None` requires an empty rotation.
    fn splice(&mut self, d: usize, after: Option<usize>) {
        let v = self.origin[d];
        match after {
            None => {
                assert!(self.first[v].is_none(), "vertex {v} already has darts");
                self.next[d] = d;
                self.prev[d] = d;
                self.first[v] = Some(d);
            }
            Some(a) => {
                debug_assert_eq!(self.origin[a], v);
                let b = self.next[a];
                self.next[a] = d;
                self.prev[d] = a;
                self.next[d] = b;
                self.prev[b] = d;
            }
        }
    }

    /// Adds an edge `u–v`: the new dart at `u` follows `after_u`, the one at
    /// `v` follows `after_v`. Returns the dart at `u`.
    pub(crate) fn add_edge(
        &mut self,
        u: usize,
        after_u: Option<usize>,
        v: usize,
        after_v: Option<usize>,
    ) -> usize {
        let du = self.new_dart(u);
        let dv = self.new_dart(v);
        self.twin[du] = dv;
        self.twin[dv] = du;
        self.splice(du, after_u);
        // For a loop on an empty vertex the second dart follows the first.
        let after_v = if u == v && after_v.is_none() {
            Some(du)
        } else {
            after_v
        };
        self.splice(dv, after_v);
        du
    }

    /// Reroutes the edges of `di` (a→b) and `dj` (c→d) through a new vertex
    /// whose rotation is (b, a, d, c). Both darts must border one face, which
    /// keeps the map planar. Returns the new vertex.
    pub(crate) fn insert_crossing(&mut self, di: usize, dj: usize) -> usize {
        let (ti, tj) = (self.twin[di], self.twin[dj]);
        assert!(di != dj && dj != ti, "darts must lie on distinct edges");
        let x = self.add_vertex();
        let [xa, xb, xc, xd] = [0; 4].map(|_| self.new_dart(x));
        for (p, q) in [(di, xa), (ti, xb), (dj, xc), (tj, xd)] {
            self.twin[p] = q;
            self.twin[q] = p;
        }
        self.splice(xb, None);
        self.splice(xa, Some(xb));
        self.splice(xd, Some(xa));
        self.splice(xc, Some(xd));
        x
    }

    fn unlink(&mut self, d: usize) {
        let v = self.origin[d];
        let (p, n) = (self.prev[d], self.next[d]);
        if n == d {
            self.first[v] = None;
        } else {
            self.next[p] = n;
            self.prev[n] = p;
            if self.first[v] == Some(d) {
                self.first[v] = Some(n);
            }
        }
        self.alive[d] = false;
    }

    pub(crate) fn delete_edge(&mut self, d: usize) {
        let t = self.twin[d];
        self.unlink(d);
        self.unlink(t);
    }

    /// Contracts the non-loop edge of `d`, merging its target into its origin.
    pub(crate) fn contract(&mut self, d: usize) {
        let t = self.twin[d];
        let (u, v) = (self.origin[d], self.origin[t]);
        assert_ne!(u, v, "cannot contract a loop");
        let moved: Vec<usize> = self.darts_at(v).into_iter().filter(|&x| x != t).collect();
        if moved.is_empty() {
            self.unlink(d);
            self.alive[t] = false;
            self.first[v] = None;
            return;
        }
        // u: ... p, d, a ...   v: ... q, t, b ...   →   u: ... p, b ... q, a ...
        let (p, a) = (self.prev[d], self.next[d]);
        let (b, q) = (self.next[t], self.prev[t]);
        for &x in &moved {
            self.origin[x] = u;
        }
        if a == d {
            // d was the only dart at u.
            self.next[q] = b;
            self.prev[b] = q;
            self.first[u] = Some(b);
        } else {
            self.next[p] = b;
            self.prev[b] = p;
            self.next[q] = a;
            self.prev[a] = q;
            if self.first[u] == Some(d) {
                self.first[u] = Some(a);
            }
        }
        self.alive[d] = false;
        self.alive[t] = false;
        self.first[v] = None;
    }

    /// Freezes into an immutable map, renumbering live darts densely.
    pub(crate) fn finish(&self) -> CombinatorialMap {
        let identity: Vec<usize> = (0..self.vertex_count()).collect();
        self.finish_relabelled(&identity, self.vertex_count())
    }

    /// Like [`finish`](Self::finish), sending vertex `v` to `relabel[v]`.
    pub(crate) fn finish_relabelled(
        &self,
        relabel: &[usize],
        vertex_count: usize,
    ) -> CombinatorialMap {
        let live: Vec<usize> = self.darts().collect();
        let mut index = vec![usize::MAX; self.next.len()];
        for (i, &d) in live.iter().enumerate() {
            index[d] = i;
        }
        let sigma = live.iter().map(|&d| index[self.next[d]]).collect();
        let alpha = live.iter().map(|&d| index[self.twin[d]]).collect();
        let vertex = live.iter().map(|&d| relabel[self.origin[d]]).collect();
        CombinatorialMap::from_parts(vertex_count, sigma, alpha, vertex)
            .expect("builder maintains a valid rotation system")
    }
}

//! Vertex orderings and their cut profiles: evaluation, exact minimisation,
//! separator-based construction, lifting from twist graphs, and sweeps.

use std::cmp::Ordering;

use serde::Serialize;

use crate::bounds::BoundConstants;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::map::CombinatorialMap;
use crate::separator::{induced_rotation, separate_rotation};
use crate::twist::TwistDecomposition;

/// `order[i]` is the vertex placed at position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &v in &order {
            if v >= order.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection(format!(
                    "vertex {v} repeated or out of range 0..{}",
                    order.len()
                )));
            }
        }
        Ok(VertexOrdering(order))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse permutation.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Boundary sizes `p_i = |∂(first i vertices)|` for `i = 1..=v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthProfile {
    profile: Vec<usize>,
}

impl WidthProfile {
    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    pub fn width(&self) -> usize {
        self.profile.iter().copied().max().unwrap_or(0)
    }

    pub fn sum_width(&self) -> usize {
        self.profile.iter().sum()
    }

    /// Profile entries as a multiset, largest first.
    pub fn lex_width(&self) -> Vec<usize> {
        let mut v = self.profile.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

fn check_order(g: &Graph, phi: &VertexOrdering) -> Result<()> {
    if phi.len() != g.vertex_count() {
        return Err(Error::NotABijection(format!(
            "ordering has {} entries, graph has {} vertices",
            phi.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

pub fn ordering_width(g: &Graph, phi: &VertexOrdering) -> Result<WidthProfile> {
    check_order(g, phi)?;
    let mut placed = vec![false; g.vertex_count()];
    let mut cut = 0usize;
    let mut profile = Vec::with_capacity(phi.len());
    for &x in phi.as_slice() {
        let back = g.neighbors(x).iter().filter(|&&u| placed[u]).count();
        cut = cut + g.degree(x) - 2 * back;
        placed[x] = true;
        profile.push(cut);
    }
    Ok(WidthProfile { profile })
}

/// Lexicographic order on descending multisets; a proper prefix is smaller.
pub fn compare_lex(a: &WidthProfile, b: &WidthProfile) -> Ordering {
    a.lex_width().cmp(&b.lex_width())
}

pub const EXACT_WIDTH_LIMIT: usize = 20;
pub const PERMUTATION_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactWidth {
    pub width: usize,
    pub ordering: VertexOrdering,
}

/// Minimum width over all orderings by dynamic programming over prefix sets.
pub fn exact_width(g: &Graph) -> Result<ExactWidth> {
    let n = g.vertex_count();
    if n > EXACT_WIDTH_LIMIT {
        return Err(Error::TooLarge {
            vertices: n,
            limit: EXACT_WIDTH_LIMIT,
        });
    }
    let full = (1usize << n) - 1;
    let mut cut = vec![0u32; full + 1];
    let mut best = vec![0u32; full + 1];
    for s in 1..=full {
        let x = s.trailing_zeros() as usize;
        let rest = s & !(1 << x);
        let back = g
            .neighbors(x)
            .iter()
            .filter(|&&u| rest >> u & 1 == 1)
            .count();
        cut[s] = cut[rest] + g.degree(x) as u32 - 2 * back as u32;
        let mut inner = u32::MAX;
        let mut bits = s;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            inner = inner.min(best[s & !(1 << y)]);
        }
        best[s] = cut[s].max(inner);
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let x = (0..n)
            .filter(|&y| s >> y & 1 == 1)
            .min_by_key(|&y| best[s & !(1 << y)])
            .unwrap();
        order.push(x);
        s &= !(1 << x);
    }
    order.reverse();
    Ok(ExactWidth {
        width: best[full] as usize,
        ordering: VertexOrdering(order),
    })
}

/// Minimum width by enumerating every permutation.
pub fn permutation_width(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > PERMUTATION_LIMIT {
        return Err(Error::TooLarge {
            vertices: n,
            limit: PERMUTATION_LIMIT,
        });
    }
    fn extend(
        g: &Graph,
        placed: &mut Vec<bool>,
        depth: usize,
        cut: usize,
        worst: usize,
        best: &mut usize,
    ) {
        if worst >= *best {
            return;
        }
        if depth == placed.len() {
            *best = worst;
            return;
        }
        for x in 0..placed.len() {
            if placed[x] {
                continue;
            }
            let back = g.neighbors(x).iter().filter(|&&u| placed[u]).count();
            let next = cut + g.degree(x) - 2 * back;
            placed[x] = true;
            extend(g, placed, depth + 1, next, worst.max(next), best);
            placed[x] = false;
        }
    }
    let mut best = usize::MAX;
    extend(g, &mut vec![false; n], 0, 0, 0, &mut best);
    Ok(if n == 0 { 0 } else { best })
}

/// Upper bound on the width of [`separator_ordering`]: `(6√2+4√3)·Δ·√v`.
pub fn separator_width_bound(max_degree: usize, vertices: usize) -> f64 {
    BoundConstants::standard().k612 * max_degree as f64 * (vertices as f64).sqrt()
}

/// Recursive ordering: separator first (by index), then each part. Components
/// are ordered one after another.
pub fn separator_ordering(g: &CombinatorialMap) -> Result<VertexOrdering> {
    // Propagates embedding failures.
    crate::separator::separate(g)?;
    let rot = g.simple_rotation();
    let ids: Vec<usize> = (0..rot.len()).collect();
    let mut out = Vec::with_capacity(rot.len());
    order_recursive(&rot, &ids, &mut out);
    VertexOrdering::new(out)
}

fn order_recursive(rot: &[Vec<usize>], ids: &[usize], out: &mut Vec<usize>) {
    if rot.len() <= 2 {
        out.extend_from_slice(ids);
        return;
    }
    let sep = separate_rotation(rot);
    out.extend(sep.separator.iter().map(|&i| ids[i]));
    for part in [&sep.part1, &sep.part2] {
        if part.is_empty() {
            continue;
        }
        let sub_ids: Vec<usize> = part.iter().map(|&i| ids[i]).collect();
        order_recursive(&induced_rotation(rot, part), &sub_ids, out);
    }
}

/// Maximum cut reached while appending `chain` to the placed set.
fn chain_peak(g: &Graph, chain: &[usize], placed: &mut [bool], mut cut: usize) -> (usize, usize) {
    let mut peak = 0;
    for &x in chain {
        let back = g.neighbors(x).iter().filter(|&&u| placed[u]).count();
        cut = cut + g.degree(x) - 2 * back;
        placed[x] = true;
        peak = peak.max(cut);
    }
    for &x in chain {
        placed[x] = false;
    }
    (peak, cut)
}

/// Expands an ordering of the twist graph into one of the diagram graph `g`:
/// each region's crossings are placed consecutively along its chain. Linear
/// chains run in whichever direction gives the lower peak cut (the stored
/// direction on ties); cyclic chains keep their stored order.
pub fn lift_ordering(
    phi_t: &VertexOrdering,
    td: &TwistDecomposition,
    g: &Graph,
) -> Result<VertexOrdering> {
    if phi_t.len() != td.t() {
        return Err(Error::InconsistentInputs(format!(
            "ordering has {} entries for {} twist regions",
            phi_t.len(),
            td.t()
        )));
    }
    if g.vertex_count() != td.crossing_count() {
        return Err(Error::InconsistentInputs(format!(
            "graph has {} vertices for {} crossings",
            g.vertex_count(),
            td.crossing_count()
        )));
    }
    let mut placed = vec![false; g.vertex_count()];
    let mut cut = 0;
    let mut out = Vec::with_capacity(g.vertex_count());
    for &region in phi_t.as_slice() {
        let block = &td.blocks()[region];
        let forward = block.crossings.clone();
        let chain = if block.is_cyclic() || forward.len() == 1 {
            forward
        } else {
            let mut backward = forward.clone();
            backward.reverse();
            let (f, _) = chain_peak(g, &forward, &mut placed, cut);
            let (b, _) = chain_peak(g, &backward, &mut placed, cut);
            if b < f {
                backward
            } else {
                forward
            }
        };
        let (_, after) = chain_peak(g, &chain, &mut placed, cut);
        cut = after;
        for &x in &chain {
            placed[x] = true;
        }
        out.extend(chain);
    }
    VertexOrdering::new(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CriticalKind {
    /// Every edge leaves upward.
    Minimum,
    /// Every edge leaves downward.
    Maximum,
    /// One upward and one downward block in the rotation.
    Regular,
    /// Upward and downward edges alternate more than twice.
    Saddle,
    /// No non-loop edges.
    Isolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "camelCase")]
pub enum SweepEvent {
    Vertex {
        vertex: usize,
        down: usize,
        up: usize,
        curls: usize,
        kind: CriticalKind,
    },
    Arcs {
        count: usize,
    },
}

/// Level-by-level record of a sweep of the sphere in the order `φ`:
/// vertex passages alternating with the number of arcs met between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepProfile {
    events: Vec<SweepEvent>,
}

impl SweepProfile {
    pub fn events(&self) -> &[SweepEvent] {
        &self.events
    }

    pub fn arc_counts(&self) -> Vec<usize> {
        self.events
            .iter()
            .filter_map(|e| match e {
                SweepEvent::Arcs { count } => Some(*count),
                _ => None,
            })
            .collect()
    }

    pub fn max_arcs(&self) -> usize {
        self.arc_counts().into_iter().max().unwrap_or(0)
    }

    /// Maximum level count once every loop is drawn as a small curl just
    /// above or just below its vertex, placed to minimise the maximum. The
    /// levels below the first and above the last vertex count as gaps too.
    pub fn curl_width(&self) -> usize {
        let mut base = vec![0usize];
        base.extend(self.arc_counts());
        base.push(0);
        let curls: Vec<usize> = self
            .events
            .iter()
            .filter_map(|e| match e {
                SweepEvent::Vertex { curls, .. } => Some(*curls),
                _ => None,
            })
            .collect();
        let floor = base.iter().copied().max().unwrap_or(0);
        let total: usize = curls.iter().sum();
        (0..=total)
            .map(|extra| floor + 2 * extra)
            .find(|&target| curls_fit(&base, &curls, target))
            .unwrap_or(floor + 2 * total)
    }
}

/// Vertex `i` sits between gaps `i` and `i + 1`; each of its curls adds two
/// to one of them. Greedy from the bottom fills the lower gap first.
fn curls_fit(base: &[usize], curls: &[usize], target: usize) -> bool {
    let cap: Vec<usize> = base.iter().map(|&b| (target - b) / 2).collect();
    let mut left = cap[0];
    for (i, &c) in curls.iter().enumerate() {
        let below = c.min(left);
        let rest = c - below;
        if rest > cap[i + 1] {
            return false;
        }
        left = cap[i + 1] - rest;
    }
    true
}

pub fn sweep_profile(g: &CombinatorialMap, phi: &VertexOrdering) -> Result<SweepProfile> {
    let n = g.vertex_count();
    if phi.len() != n {
        return Err(Error::NotABijection(format!(
            "ordering has {} entries, map has {} vertices",
            phi.len(),
            n
        )));
    }
    let pos = phi.positions();
    // Each non-loop edge spans the gaps between its endpoints' positions.
    let mut diff = vec![0i64; n + 1];
    for (d, t) in g.edges() {
        let (a, b) = (pos[g.vertex_of(d)], pos[g.vertex_of(t)]);
        if a != b {
            diff[a.min(b)] += 1;
            diff[a.max(b)] -= 1;
        }
    }
    let mut events = Vec::with_capacity(2 * n);
    let mut running = 0i64;
    for (i, &v) in phi.as_slice().iter().enumerate() {
        let mut up_flags = Vec::new();
        let mut curls = 0;
        for d in g.darts_at(v) {
            match pos[g.target(d)].cmp(&i) {
                Ordering::Greater => up_flags.push(true),
                Ordering::Less => up_flags.push(false),
                Ordering::Equal => curls += 1,
            }
        }
        curls /= 2;
        let up = up_flags.iter().filter(|&&u| u).count();
        let down = up_flags.len() - up;
        let changes = (0..up_flags.len())
            .filter(|&j| up_flags[j] != up_flags[(j + 1) % up_flags.len()])
            .count();
        let kind = match (down, up, changes) {
            (0, 0, _) => CriticalKind::Isolated,
            (0, _, _) => CriticalKind::Minimum,
            (_, 0, _) => CriticalKind::Maximum,
            (_, _, 2) => CriticalKind::Regular,
            _ => CriticalKind::Saddle,
        };
        events.push(SweepEvent::Vertex {
            vertex: v,
            down,
            up,
            curls,
            kind,
        });
        running += diff[i];
        if i + 1 < n {
            events.push(SweepEvent::Arcs {
                count: running as usize,
            });
        }
    }
    Ok(SweepProfile { events })
}

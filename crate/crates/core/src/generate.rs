//! Seeded generators for test corpora: link diagrams by repeated crossing
//! insertion and spherical triangulations by repeated vertex insertion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::map::{CombinatorialMap, MapBuilder};
use crate::pd::PdCode;

/// Relabels a 4-valent map as a PD code: crossing `v` lists its darts in
/// rotation order, edges numbered by first appearance.
pub fn map_to_pd(map: &CombinatorialMap) -> Result<PdCode> {
    let mut label = vec![0u64; map.dart_count()];
    let mut next = 1;
    let mut crossings = Vec::with_capacity(map.vertex_count());
    for v in 0..map.vertex_count() {
        let darts = map.darts_at(v);
        if darts.len() != 4 {
            return Err(Error::InconsistentInputs(format!(
                "vertex {v} has degree {}",
                darts.len()
            )));
        }
        let mut tuple = [0u64; 4];
        for (p, &d) in darts.iter().enumerate() {
            if label[d] == 0 {
                label[d] = next;
                label[map.alpha(d)] = next;
                next += 1;
            }
            tuple[p] = label[d];
        }
        crossings.push(tuple);
    }
    PdCode::new(crossings)
}

fn builder_faces(b: &MapBuilder) -> Vec<Vec<usize>> {
    let mut seen = vec![false; b.darts().last().map_or(0, |d| d + 1)];
    let mut faces = Vec::new();
    for d in b.darts() {
        if !seen[d] {
            let walk = b.face_walk(d);
            for &e in &walk {
                seen[e] = true;
            }
            faces.push(walk);
        }
    }
    faces
}

/// Connected spherical diagram with `n` crossings, grown from the 1-crossing
/// curl by inserting crossings between two edges of a random face.
pub fn random_diagram(n: usize, seed: u64) -> PdCode {
    if n == 0 {
        return PdCode::new(Vec::new()).expect("empty diagram is valid");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = MapBuilder::new(1);
    let outer = b.add_edge(0, None, 0, None);
    b.add_edge(0, Some(outer), 0, Some(outer));
    for _ in 1..n {
        let faces: Vec<Vec<usize>> = builder_faces(&b)
            .into_iter()
            .filter(|f| f.len() >= 2)
            .collect();
        let face = &faces[rng.gen_range(0..faces.len())];
        let i = rng.gen_range(0..face.len());
        let mut j = rng.gen_range(0..face.len() - 1);
        if j >= i {
            j += 1;
        }
        b.insert_crossing(face[i], face[j]);
    }
    map_to_pd(&b.finish()).expect("generator keeps every vertex 4-valent")
}

/// Spherical triangulation on `n ≥ 3` vertices: start from a triangle and
/// repeatedly star a uniformly chosen face.
pub fn random_triangulation(n: usize, seed: u64) -> Result<CombinatorialMap> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = MapBuilder::new(3);
    let e01 = b.add_edge(0, None, 1, None);
    let e12 = b.add_edge(1, Some(b.twin(e01)), 2, None);
    b.add_edge(2, Some(b.twin(e12)), 0, Some(e01));
    // One representative dart per triangular face.
    let mut faces = vec![e01, b.twin(e01)];
    for _ in 3..n {
        let k = rng.gen_range(0..faces.len());
        let d0 = faces[k];
        let d1 = b.face_next(d0);
        let d2 = b.face_next(d1);
        let (v0, v1, v2) = (b.origin(d0), b.origin(d1), b.origin(d2));
        let x = b.add_vertex();
        let e0 = b.add_edge(v0, Some(b.twin(d2)), x, None);
        let e2 = b.add_edge(v2, Some(b.twin(d1)), x, Some(b.twin(e0)));
        b.add_edge(v1, Some(b.twin(d0)), x, Some(b.twin(e2)));
        faces.push(d1);
        faces.push(d2);
    }
    Ok(b.finish())
}

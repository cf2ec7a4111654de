//! Seeded inputs shared by the benchmarks.

use linkwidth_core::{build_map, random_diagram, random_triangulation, CombinatorialMap, PdCode};

/// Spherical triangulation with `n` vertices.
pub fn triangulation(n: usize) -> CombinatorialMap {
    random_triangulation(n, n as u64).expect("n >= 3")
}

pub fn diagram(crossings: usize) -> PdCode {
    random_diagram(crossings, crossings as u64 ^ 0x5eed)
}

pub fn diagram_map(crossings: usize) -> CombinatorialMap {
    build_map(&diagram(crossings)).expect("generated diagrams are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_have_requested_size() {
        assert_eq!(triangulation(50).vertex_count(), 50);
        assert_eq!(diagram_map(30).vertex_count(), 30);
    }
}

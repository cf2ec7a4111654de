use linkwidth_core::{
    build_map, exact_width, graph_cheeger, lift_ordering, ordering_width, permutation_width,
    random_diagram, random_triangulation, separator_ordering, separator_width_bound, sweep_profile,
    twist_decomposition, twist_graph, CombinatorialMap, Graph, VertexOrdering,
};
use num_rational::Ratio;

fn small_spherical_graphs() -> Vec<CombinatorialMap> {
    let mut out = Vec::new();
    for seed in 0..40u64 {
        out.push(random_triangulation(3 + (seed as usize % 16), seed).unwrap());
        let m = build_map(&random_diagram(1 + (seed as usize % 18), seed)).unwrap();
        let td = twist_decomposition(&m, &m.faces());
        out.push(twist_graph(&td, &m).unwrap().map().clone());
        out.push(m);
    }
    out
}

#[test]
fn separator_ordering_within_bound() {
    for seed in 0..60u64 {
        let n = 3 + (seed as usize * 37) % 700;
        let g = random_triangulation(n, seed).unwrap();
        let phi = separator_ordering(&g).unwrap();
        let w = ordering_width(&g.graph(), &phi).unwrap().width();
        assert!(w as f64 <= separator_width_bound(g.graph().max_degree(), n) + 1e-9);
    }
}

#[test]
fn oracle_dominates_construction() {
    for g in small_spherical_graphs() {
        let graph = g.graph();
        let exact = exact_width(&graph).unwrap();
        let phi = separator_ordering(&g).unwrap();
        assert!(exact.width <= ordering_width(&graph, &phi).unwrap().width());
        assert_eq!(
            ordering_width(&graph, &exact.ordering).unwrap().width(),
            exact.width
        );
        if graph.vertex_count() <= 8 {
            assert_eq!(permutation_width(&graph).unwrap(), exact.width);
        }
    }
}

#[test]
fn paths_are_tight() {
    for n in 1..12 {
        assert_eq!(
            exact_width(&Graph::path(n)).unwrap().width,
            usize::from(n > 1)
        );
    }
}

#[test]
fn cheeger_below_width_ratio() {
    for g in small_spherical_graphs() {
        let graph = g.graph();
        let v = graph.vertex_count();
        if !(2..=16).contains(&v) {
            continue;
        }
        let h = graph_cheeger(&graph).unwrap().ratio();
        let w = exact_width(&graph).unwrap().width as u64;
        assert!(h <= Ratio::new(w, (v / 2) as u64));
    }
}

#[test]
fn lifting_adds_at_most_two_or_four() {
    let mut linear = 0;
    for seed in 0..300u64 {
        let c = 1 + (seed as usize * 13) % 120;
        let m = build_map(&random_diagram(c, seed)).unwrap();
        let td = twist_decomposition(&m, &m.faces());
        let tg = twist_graph(&td, &m).unwrap();
        let phi_t = separator_ordering(tg.map()).unwrap();
        let wt = ordering_width(&tg.graph(), &phi_t).unwrap().width();
        let lifted = lift_ordering(&phi_t, &td, &m.graph()).unwrap();
        let wg = ordering_width(&m.graph(), &lifted).unwrap().width();
        let slack = if td.has_cyclic_region() { 4 } else { 2 };
        linear += usize::from(!td.has_cyclic_region());
        assert!(wg <= wt + slack, "seed {seed}: {wg} > {wt} + {slack}");
    }
    assert!(linear >= 100);
}

#[test]
fn sweep_agrees_with_profile() {
    for g in small_spherical_graphs() {
        let n = g.vertex_count();
        for phi in [VertexOrdering::identity(n), separator_ordering(&g).unwrap()] {
            let sweep = sweep_profile(&g, &phi).unwrap();
            let profile = ordering_width(&g.graph(), &phi).unwrap();
            assert_eq!(sweep.max_arcs(), profile.width());
            assert_eq!(sweep.arc_counts(), profile.profile()[..n - 1].to_vec());
        }
    }
}

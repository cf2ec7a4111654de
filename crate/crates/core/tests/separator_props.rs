use linkwidth_core::{
    build_map, random_diagram, random_triangulation, separate, twist_decomposition, twist_graph,
};

#[test]
fn seeded_triangulations() {
    for i in 0..200u64 {
        let n = 3 + (i as usize * 1997) / 199;
        let g = random_triangulation(n, 1000 + i).unwrap();
        let r = separate(&g).unwrap();
        r.verify(&g.simple_rotation())
            .unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert_eq!(r, separate(&g).unwrap());
    }
}

#[test]
fn twist_graphs_of_random_diagrams() {
    for i in 0..200u64 {
        let c = 1 + (i as usize * 499) / 199;
        let m = build_map(&random_diagram(c, 2000 + i)).unwrap();
        let td = twist_decomposition(&m, &m.faces());
        let tg = twist_graph(&td, &m).unwrap();
        for g in [tg.map(), &m] {
            let r = separate(g).unwrap();
            r.verify(&g.simple_rotation())
                .unwrap_or_else(|e| panic!("c={c}: {e}"));
        }
    }
}

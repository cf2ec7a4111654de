//! Re-derivation of every numerical constant plus a small seeded property
//! suite. Takes the constant table as a parameter so tampered tables can be
//! shown to fail.

use linkwidth_core::{
    build_map, corollary_constants, full_report_with, lift_ordering, ordering_width, parse_pd,
    random_diagram, random_triangulation, separate, separator_ordering, sweep_profile,
    twist_decomposition, twist_graph, BoundConstants, ClassFlags, CombinatorialMap, Graph,
};
use serde::Serialize;
use serde_json::json;

use crate::envelope::ReportEnvelope;

const FIGURE_EIGHT: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";
const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Lobachevsky function via its Fourier series `½ Σ sin(2nθ)/n²`.
fn lobachevsky(theta: f64) -> f64 {
    0.5 * (1..=200_000u32)
        .map(|n| {
            let n = n as f64;
            (2.0 * n * theta).sin() / (n * n)
        })
        .sum::<f64>()
}

fn constant_checks(k: &BoundConstants, out: &mut Vec<Check>) {
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    let closure = (2.0 * r2 + k.k612 * (2.0f64 / 3.0).sqrt() - k.k612).abs();
    out.push(check(
        "closure-identity",
        closure < 1e-12,
        format!("residual {closure:e}"),
    ));
    let k612 = (k.k612 - (6.0 * r2 + 4.0 * r3)).abs();
    let k2416 = (k.k2416 - 4.0 * k.k612).abs();
    let k128 = (k.k128 - 2.0 * k.k612).abs();
    out.push(check(
        "separator-constants",
        k612 < 1e-12 && k2416 < 1e-12 && k128 < 1e-12,
        format!("k612 {} k2416 {} k128 {}", k.k612, k.k2416, k.k128),
    ));
    let pi4 = (k.four_pi - 4.0 * std::f64::consts::PI).abs();
    out.push(check("four-pi", pi4 < 1e-12, format!("{}", k.four_pi)));
    // Regular ideal tetrahedron and octahedron volumes, against the quoted
    // 5-digit values.
    let v3 = 3.0 * lobachevsky(std::f64::consts::PI / 3.0);
    let v8 = 8.0 * lobachevsky(std::f64::consts::PI / 4.0);
    out.push(check(
        "v3-tetrahedron",
        (k.v3 - v3).abs() < 1e-4,
        format!("quoted {} computed {v3:.12}", k.v3),
    ));
    out.push(check(
        "v8-octahedron",
        (k.v8 - v8).abs() < 1e-4,
        format!("quoted {} computed {v8:.12}", k.v8),
    ));
}

fn corollary_checks(k: &BoundConstants, out: &mut Vec<Check>) -> serde_json::Value {
    let c = corollary_constants(k);
    let ranges = [
        ("c1", c.c1, 1642.0, 1643.0),
        ("c2", c.c2, 1127.5, 1129.0),
        ("c3", c.c3, 0.0, 6572.0),
        ("c4", c.c4, 0.0, 2.7e7),
        ("c5", c.c5, 0.0, 4516.0),
        ("c6", c.c6, 0.0, 1.3e7),
    ];
    for (name, v, lo, hi) in ranges {
        out.push(check(
            &format!("corollary-{name}"),
            (lo..=hi).contains(&v),
            format!("{v} in [{lo}, {hi}]"),
        ));
    }
    out.push(check(
        "corollary-argmax",
        c.argmax_t == 3 && c.strictly_decreasing,
        format!("t = {} ({})", c.argmax_t, c.argmax_class.name()),
    ));
    serde_json::to_value(&c).expect("constants serialize")
}

fn near(name: &str, got: f64, want: f64, tol: f64) -> Check {
    check(
        name,
        (got - want).abs() <= tol,
        format!("{got} vs {want} ± {tol}"),
    )
}

fn fixture_checks(k: &BoundConstants, out: &mut Vec<Check>) {
    out.push(near(
        "max-width-bound-4",
        k.max_width_bound(4),
        125.308,
        1e-3,
    ));
    out.push(near(
        "max-width-bound-1",
        k.max_width_bound(1),
        63.6539,
        1e-3,
    ));
    out.push(near("bridge-bound-9", k.bridge_bound(9), 93.4809, 1e-3));
    let alt = k.alternating_volume_interval(3);
    out.push(near("alternating-interval-lower", alt.lower, 1.83195, 1e-3));
    out.push(near("alternating-interval-upper", alt.upper, 20.298, 1e-3));
    match k.highly_twisted_volume_interval(11) {
        Ok(ht) => {
            out.push(near(
                "highly-twisted-interval-lower",
                ht.lower,
                7.0735,
                1e-3,
            ));
            out.push(near(
                "highly-twisted-interval-upper",
                ht.upper,
                101.49,
                1e-3,
            ));
        }
        Err(e) => out.push(check("highly-twisted-interval", false, e.to_string())),
    }
    match (
        k.crossing_lower_bound(100.0),
        k.crossing_lower_bound(10.149),
    ) {
        (Ok(a), Ok(b)) => {
            out.push(near("crossing-lower-bound-100", a, 9.8532, 1e-3));
            out.push(near("crossing-lower-bound-unit", b, 1.0, 1e-3));
        }
        _ => out.push(check("crossing-lower-bound", false, "domain error".into())),
    }
    match k.cheeger_bound(61.6539, 2.02988) {
        Ok(h) => out.push(near("cheeger-bound", h, 381.68, 0.01)),
        Err(e) => out.push(check("cheeger-bound", false, e.to_string())),
    }
    let pd = parse_pd(FIGURE_EIGHT).expect("fixture parses");
    match full_report_with(k, &pd, Some(2.02988), ClassFlags::default()) {
        Ok(r) => {
            out.push(near(
                "figure-eight-cheeger",
                r.cheeger_bound.unwrap_or(f64::NAN),
                539.76,
                0.05,
            ));
            out.push(check(
                "figure-eight-regions",
                (r.t, r.c) == (2, 4),
                format!("t {} c {}", r.t, r.c),
            ));
        }
        Err(e) => out.push(check("figure-eight-report", false, e.to_string())),
    }
    let trefoil = parse_pd(TREFOIL).expect("fixture parses");
    match build_map(&trefoil) {
        Ok(m) => {
            let td = twist_decomposition(&m, &m.faces());
            out.push(check(
                "trefoil-regions",
                td.t() == 1 && td.has_cyclic_region(),
                format!("t {} cyclic {}", td.t(), td.has_cyclic_region()),
            ));
        }
        Err(e) => out.push(check("trefoil-regions", false, e.to_string())),
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_vec())
        .collect()
}

/// Separator guarantees, the width bound and sweep equality on one map.
fn map_properties(k: &BoundConstants, map: &CombinatorialMap) -> Result<(), String> {
    let g = map.graph();
    separate(map)
        .map_err(|e| e.to_string())?
        .verify(&adjacency(&g))?;
    let phi = separator_ordering(map).map_err(|e| e.to_string())?;
    let width = ordering_width(&g, &phi).map_err(|e| e.to_string())?.width();
    let bound = k.k612 * g.max_degree() as f64 * (g.vertex_count() as f64).sqrt();
    if width as f64 > bound + 1e-9 {
        return Err(format!("width {width} exceeds {bound}"));
    }
    let sweep = sweep_profile(map, &phi).map_err(|e| e.to_string())?;
    if sweep.max_arcs() != width {
        return Err(format!(
            "sweep peak {} differs from width {width}",
            sweep.max_arcs()
        ));
    }
    Ok(())
}

fn diagram_properties(k: &BoundConstants, crossings: usize, seed: u64) -> Result<(), String> {
    let pd = random_diagram(crossings, seed);
    let map = build_map(&pd).map_err(|e| e.to_string())?;
    let td = twist_decomposition(&map, &map.faces());
    let tg = twist_graph(&td, &map).map_err(|e| e.to_string())?;
    map_properties(k, tg.map())?;
    let phi_t = separator_ordering(tg.map()).map_err(|e| e.to_string())?;
    let g = map.graph();
    let lifted = lift_ordering(&phi_t, &td, &g).map_err(|e| e.to_string())?;
    let wt = ordering_width(&tg.graph(), &phi_t)
        .map_err(|e| e.to_string())?
        .width();
    let wg = ordering_width(&g, &lifted)
        .map_err(|e| e.to_string())?
        .width();
    let slack = if td.has_cyclic_region() { 4 } else { 2 };
    if wg > wt + slack {
        return Err(format!("lifted width {wg} exceeds {wt} + {slack}"));
    }
    Ok(())
}

fn suite_checks(k: &BoundConstants, seed: u64, out: &mut Vec<Check>) {
    let mut failures = Vec::new();
    for i in 0..20u64 {
        let n = 3 + (i as usize) * 17;
        let s = seed.wrapping_add(i);
        let r = random_triangulation(n, s)
            .map_err(|e| e.to_string())
            .and_then(|m| map_properties(k, &m));
        if let Err(e) = r {
            failures.push(format!("triangulation n={n} seed={s}: {e}"));
        }
    }
    out.push(check(
        "suite-triangulations",
        failures.is_empty(),
        if failures.is_empty() {
            "20 of 20".into()
        } else {
            failures.join("; ")
        },
    ));
    let mut failures = Vec::new();
    for i in 0..20u64 {
        let c = 1 + (i as usize) * 5;
        let s = seed.wrapping_add(1000 + i);
        if let Err(e) = diagram_properties(k, c, s) {
            failures.push(format!("diagram c={c} seed={s}: {e}"));
        }
    }
    out.push(check(
        "suite-diagrams",
        failures.is_empty(),
        if failures.is_empty() {
            "20 of 20".into()
        } else {
            failures.join("; ")
        },
    ));
}

/// All checks against `k`. The envelope's `passed` flag is the conjunction.
pub fn selfcheck(k: &BoundConstants, seed: u64) -> (ReportEnvelope, bool) {
    let mut checks = Vec::new();
    constant_checks(k, &mut checks);
    let constants = corollary_checks(k, &mut checks);
    fixture_checks(k, &mut checks);
    suite_checks(k, seed, &mut checks);
    let passed = checks.iter().all(|c| c.passed);
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect();
    let payload = json!({
        "seed": seed,
        "passed": passed,
        "checks": checks,
        "failed": failed,
        "constants": k,
        "corollary": constants,
    });
    (ReportEnvelope::new("selfcheck", None, payload), passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lobachevsky_values() {
        let v3 = 3.0 * lobachevsky(std::f64::consts::PI / 3.0);
        let v8 = 8.0 * lobachevsky(std::f64::consts::PI / 4.0);
        assert!((v3 - 1.014_941_606_409_65).abs() < 1e-9, "{v3}");
        assert!((v8 - 3.663_862_376_708_87).abs() < 1e-9, "{v8}");
    }
}

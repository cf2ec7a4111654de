//! One function per subcommand. Each takes raw input bytes and returns an
//! envelope; file handling stays in the binary.

use std::collections::BTreeMap;

use linkwidth_core::{
    build_map, exact_width, full_report, graph_cheeger, lift_ordering, ordering_width, parse_pd,
    permutation_width, random_diagram, separate, separator_ordering, separator_width_bound,
    twist_decomposition, twist_graph, BlockKind, ClassFlags, CombinatorialMap, Error, Graph,
    LinkClass, PdCode, TwistDecomposition, WidthProfile,
};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use crate::envelope::{digest, ReportEnvelope};
use crate::CliError;

/// Which graph a graph-level command runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphChoice {
    /// The twist graph T(D).
    #[default]
    Twist,
    /// The 4-valent diagram graph G(D).
    Diagram,
}

impl GraphChoice {
    fn name(self) -> &'static str {
        match self {
            GraphChoice::Twist => "twist",
            GraphChoice::Diagram => "diagram",
        }
    }
}

struct Input {
    pd: PdCode,
    digest: String,
}

fn ingest(bytes: &[u8]) -> Result<Input, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|_| CliError::Encoding)?;
    Ok(Input {
        pd: parse_pd(text)?,
        digest: digest(bytes),
    })
}

struct Pipeline {
    map: CombinatorialMap,
    td: TwistDecomposition,
    twist: CombinatorialMap,
}

fn pipeline(pd: &PdCode) -> Result<Pipeline, CliError> {
    if pd.crossing_count() == 0 {
        return Err(Error::EmptyDiagram.into());
    }
    let map = build_map(pd)?;
    let td = twist_decomposition(&map, &map.faces());
    let twist = twist_graph(&td, &map)?.map().clone();
    Ok(Pipeline { map, td, twist })
}

fn chosen_map(pd: &PdCode, choice: GraphChoice) -> Result<CombinatorialMap, CliError> {
    let p = pipeline(pd)?;
    Ok(match choice {
        GraphChoice::Twist => p.twist,
        GraphChoice::Diagram => p.map,
    })
}

fn profile_json(p: &WidthProfile) -> Value {
    json!({
        "profile": p.profile(),
        "width": p.width(),
        "sumWidth": p.sum_width(),
        "lexWidth": p.lex_width(),
    })
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_vec())
        .collect()
}

pub fn analyze(bytes: &[u8]) -> Result<ReportEnvelope, CliError> {
    let input = ingest(bytes)?;
    let pd = &input.pd;
    let payload = if pd.crossing_count() == 0 {
        json!({
            "c": 0,
            "t": 0,
            "cyclic": false,
            "components": pd.component_count(),
            "blocks": [],
            "twistGraph": {"vertices": 0, "edges": 0, "maxDegree": 0},
            "faceDegreeHistogram": [],
        })
    } else {
        let p = pipeline(pd)?;
        let mut hist = BTreeMap::<usize, usize>::new();
        for d in p.map.faces().degrees() {
            *hist.entry(d).or_default() += 1;
        }
        let blocks: Vec<Value> =
            p.td.blocks()
                .iter()
                .map(|b| {
                    let kind = match b.kind {
                        BlockKind::BigonChain { cyclic: true } => "cyclicChain",
                        BlockKind::BigonChain { cyclic: false } => "linearChain",
                        BlockKind::Isolated => "isolated",
                    };
                    json!({"crossings": b.crossings, "kind": kind})
                })
                .collect();
        json!({
            "c": pd.crossing_count(),
            "t": p.td.t(),
            "cyclic": p.td.has_cyclic_region(),
            "components": pd.component_count(),
            "blocks": blocks,
            "twistGraph": {
                "vertices": p.twist.vertex_count(),
                "edges": p.twist.edge_count(),
                "maxDegree": p.twist.max_degree(),
            },
            "faceDegreeHistogram": hist
                .iter()
                .rev()
                .map(|(d, n)| json!({"degree": d, "count": n}))
                .collect::<Vec<_>>(),
        })
    };
    Ok(ReportEnvelope::new("analyze", Some(input.digest), payload))
}

pub fn order(bytes: &[u8], exact: bool) -> Result<ReportEnvelope, CliError> {
    let input = ingest(bytes)?;
    if input.pd.crossing_count() == 0 {
        let empty = json!({"profile": [], "width": 0, "sumWidth": 0, "lexWidth": []});
        let mut payload = json!({
            "twistOrdering": [],
            "liftedOrdering": [],
            "twistProfile": empty,
            "liftedProfile": empty,
            "widthBound": {"maxDegree": 0, "vertices": 0, "bound": 0.0, "holds": true},
            "lifting": {"cyclic": false, "slack": 2, "holds": true},
        });
        if exact {
            payload["exact"] = json!({"width": 0, "ordering": [], "dominated": true});
        }
        return Ok(ReportEnvelope::new("order", Some(input.digest), payload));
    }
    let p = pipeline(&input.pd)?;
    let tg = p.twist.graph();
    let g = p.map.graph();
    if exact && tg.vertex_count() > linkwidth_core::width::EXACT_WIDTH_LIMIT {
        return Err(Error::TooLarge {
            vertices: tg.vertex_count(),
            limit: linkwidth_core::width::EXACT_WIDTH_LIMIT,
        }
        .into());
    }
    let phi_t = separator_ordering(&p.twist)?;
    let lifted = lift_ordering(&phi_t, &p.td, &g)?;
    let prof_t = ordering_width(&tg, &phi_t)?;
    let prof_g = ordering_width(&g, &lifted)?;
    let bound = separator_width_bound(tg.max_degree(), tg.vertex_count());
    let cyclic = p.td.has_cyclic_region();
    let slack = if cyclic { 4 } else { 2 };
    let mut payload = json!({
        "twistOrdering": phi_t.as_slice(),
        "liftedOrdering": lifted.as_slice(),
        "twistProfile": profile_json(&prof_t),
        "liftedProfile": profile_json(&prof_g),
        "widthBound": {
            "maxDegree": tg.max_degree(),
            "vertices": tg.vertex_count(),
            "bound": bound,
            "holds": prof_t.width() as f64 <= bound + 1e-9,
        },
        "lifting": {
            "cyclic": cyclic,
            "slack": slack,
            "holds": prof_g.width() <= prof_t.width() + slack,
        },
    });
    let mut warnings = Vec::new();
    if cyclic {
        warnings.push("cyclic twist region: lifting bound relaxed to width(T)+4".to_string());
    }
    if exact {
        let ex = exact_width(&tg)?;
        payload["exact"] = json!({
            "width": ex.width,
            "ordering": ex.ordering.as_slice(),
            "dominated": ex.width <= prof_t.width(),
        });
    }
    Ok(ReportEnvelope::new("order", Some(input.digest), payload).with_warnings(warnings))
}

pub fn bounds(
    bytes: &[u8],
    volume: Option<f64>,
    class: Option<LinkClass>,
    tangle_prime: bool,
) -> Result<ReportEnvelope, CliError> {
    let input = ingest(bytes)?;
    let flags = ClassFlags {
        class,
        tangle_prime_attested: tangle_prime,
    };
    let report = full_report(&input.pd, volume, flags)?;
    let warnings = report.warnings.clone();
    Ok(
        ReportEnvelope::new("bounds", Some(input.digest), to_value(&report))
            .with_warnings(warnings),
    )
}

pub fn separator(bytes: &[u8], choice: GraphChoice) -> Result<ReportEnvelope, CliError> {
    let input = ingest(bytes)?;
    let map = chosen_map(&input.pd, choice)?;
    let g = map.graph();
    let n = g.vertex_count();
    let sep = separate(&map)?;
    let verdict = sep.verify(&adjacency(&g));
    let payload = json!({
        "graph": choice.name(),
        "vertices": n,
        "edges": g.edge_count(),
        "separator": sep.separator,
        "part1": sep.part1,
        "part2": sep.part2,
        "separatorLimit": (8.0 * n as f64).sqrt(),
        "verified": verdict.is_ok(),
        "violation": verdict.err(),
    });
    Ok(ReportEnvelope::new(
        "separator",
        Some(input.digest),
        payload,
    ))
}

pub fn oracle(bytes: &[u8], choice: GraphChoice) -> Result<ReportEnvelope, CliError> {
    let input = ingest(bytes)?;
    let map = chosen_map(&input.pd, choice)?;
    let g = map.graph();
    let ex = exact_width(&g)?;
    let phi = separator_ordering(&map)?;
    let constructed = ordering_width(&g, &phi)?.width();
    let perm = if g.vertex_count() <= linkwidth_core::width::PERMUTATION_LIMIT {
        Some(permutation_width(&g)?)
    } else {
        None
    };
    let payload = json!({
        "graph": choice.name(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "constructed": {"ordering": phi.as_slice(), "width": constructed},
        "exact": {"ordering": ex.ordering.as_slice(), "width": ex.width},
        "permutationWidth": perm,
        "dominated": ex.width <= constructed,
        "agreement": perm.map(|w| w == ex.width),
    });
    Ok(ReportEnvelope::new("oracle", Some(input.digest), payload))
}

pub fn cheeger_graph(bytes: &[u8], choice: GraphChoice) -> Result<ReportEnvelope, CliError> {
    let input = ingest(bytes)?;
    let map = chosen_map(&input.pd, choice)?;
    let g = map.graph();
    let h = graph_cheeger(&g)?;
    let width_check = if g.vertex_count() <= linkwidth_core::width::EXACT_WIDTH_LIMIT {
        let w = exact_width(&g)?.width as u64;
        let bound = Ratio::new(w, g.vertex_count() as u64 / 2);
        json!({
            "exactWidth": w,
            "bound": {"numerator": bound.numer(), "denominator": bound.denom()},
            "holds": h.ratio() <= bound,
        })
    } else {
        Value::Null
    };
    let payload = json!({
        "graph": choice.name(),
        "vertices": g.vertex_count(),
        "numerator": h.numerator,
        "denominator": h.denominator,
        "value": h.value(),
        "witness": h.witness,
        "widthCheck": width_check,
    });
    Ok(ReportEnvelope::new(
        "cheeger-graph",
        Some(input.digest),
        payload,
    ))
}

/// Generates a seeded random diagram; the PD document is the payload.
pub fn gen(crossings: usize, seed: u64) -> ReportEnvelope {
    let pd = random_diagram(crossings, seed);
    let text = pd.to_json();
    let doc: Value = serde_json::from_str(&text).expect("generated PD is valid JSON");
    let payload = json!({"crossings": crossings, "seed": seed, "pd": doc});
    ReportEnvelope::new("gen", Some(digest(text.as_bytes())), payload)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

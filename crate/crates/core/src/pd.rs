//! Planar-diagram (PD) codes and rational surgery coefficients.
//!
//! A PD document is UTF-8 JSON, either a bare list of crossings
//! `[[a,b,c,d],...]` or an object
//! `{"crossings": [[a,b,c,d],...], "surgery": ["p/q" | "inf" | null, ...]}`.
//! Each crossing lists its four edge-ends counterclockwise, starting with the
//! incoming under-strand, so the under-strand occupies positions 0 and 2.
//! Crossing information is kept but no width computation looks at it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};

/// A Dehn filling slope in `Q ∪ {∞}`, always stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalSlope {
    numerator: i64,
    denominator: u64,
}

impl RationalSlope {
    pub const INFINITY: RationalSlope = RationalSlope {
        numerator: 1,
        denominator: 0,
    };

    pub fn new(numerator: i64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::BadCoefficient(
                "zero denominator; write `inf` for the infinite slope".into(),
            ));
        }
        if gcd(numerator.unsigned_abs(), denominator) != 1 {
            return Err(Error::BadCoefficient(format!(
                "{numerator}/{denominator} is not reduced"
            )));
        }
        Ok(RationalSlope {
            numerator,
            denominator,
        })
    }

    pub fn integer(n: i64) -> Self {
        RationalSlope {
            numerator: n,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_infinite(&self) -> bool {
        self.denominator == 0
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for RationalSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl FromStr for RationalSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(RationalSlope::INFINITY);
        }
        let bad = || Error::BadCoefficient(format!("cannot parse slope `{s}`"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: u64 = q.trim().parse().map_err(|_| bad())?;
                RationalSlope::new(p, q)
            }
            None => s
                .parse::<i64>()
                .map(RationalSlope::integer)
                .map_err(|_| bad()),
        }
    }
}

/// A validated PD code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u64; 4]>,
    components: Vec<Vec<u64>>,
    surgery: Option<Vec<Option<RationalSlope>>>,
}

impl PdCode {
    /// Validates crossing tuples and derives the link components.
    pub fn new(crossings: Vec<[u64; 4]>) -> Result<Self> {
        let mut seen: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
        for (x, tuple) in crossings.iter().enumerate() {
            for (p, &label) in tuple.iter().enumerate() {
                if label == 0 {
                    return Err(Error::MalformedInput(format!(
                        "crossing {x}: edge labels must be positive integers"
                    )));
                }
                seen.entry(label).or_default().push((x, p));
            }
        }
        for (label, ends) in &seen {
            if ends.len() != 2 {
                return Err(Error::BadIncidence(format!(
                    "edge label {label} appears {} time(s), expected 2",
                    ends.len()
                )));
            }
        }
        let components = trace_components(&crossings, &seen);
        Ok(PdCode {
            crossings,
            components,
            surgery: None,
        })
    }

    /// Attaches surgery coefficients, one entry per component in label order.
    pub fn with_surgery(mut self, surgery: Vec<Option<RationalSlope>>) -> Result<Self> {
        if surgery.len() != self.component_count() {
            return Err(Error::MalformedInput(format!(
                "{} surgery coefficients for {} components",
                surgery.len(),
                self.component_count()
            )));
        }
        self.surgery = Some(surgery);
        Ok(self)
    }

    pub fn crossings(&self) -> &[[u64; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Edge-label cycles of each component, ordered by smallest label. A
    /// crossing-free diagram has a single component with no labelled edges.
    pub fn components(&self) -> &[Vec<u64>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn surgery(&self) -> Option<&[Option<RationalSlope>]> {
        self.surgery.as_deref()
    }

    /// Crossings with edge labels renumbered to `0..2c` in increasing label order.
    pub fn normalized(&self) -> Vec<[usize; 4]> {
        let mut labels: Vec<u64> = self.crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let index = |l: u64| labels.binary_search(&l).expect("label present");
        self.crossings
            .iter()
            .map(|t| [index(t[0]), index(t[1]), index(t[2]), index(t[3])])
            .collect()
    }

    /// Canonical compact JSON document for this code.
    pub fn to_json(&self) -> String {
        let crossings: Vec<Value> = self
            .crossings
            .iter()
            .map(|t| Value::Array(t.iter().map(|&l| Value::from(l)).collect()))
            .collect();
        let mut doc = serde_json::Map::new();
        doc.insert("crossings".into(), Value::Array(crossings));
        if let Some(surgery) = &self.surgery {
            let entries = surgery
                .iter()
                .map(|s| match s {
                    Some(slope) => Value::String(slope.to_string()),
                    None => Value::Null,
                })
                .collect();
            doc.insert("surgery".into(), Value::Array(entries));
        }
        Value::Object(doc).to_string()
    }
}

fn trace_components(
    crossings: &[[u64; 4]],
    ends: &BTreeMap<u64, Vec<(usize, usize)>>,
) -> Vec<Vec<u64>> {
    if crossings.is_empty() {
        return vec![Vec::new()];
    }
    let mut visited: BTreeMap<u64, bool> = ends.keys().map(|&l| (l, false)).collect();
    let mut components = Vec::new();
    for &start in ends.keys() {
        if visited[&start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut label = start;
        // Enter along the first occurrence and leave through the opposite end.
        let (mut x, mut p) = ends[&start][0];
        loop {
            visited.insert(label, true);
            cycle.push(label);
            let out = crossings[x][(p + 2) % 4];
            let pair = &ends[&out];
            let next = if pair[0] == (x, (p + 2) % 4) {
                pair[1]
            } else {
                pair[0]
            };
            if out == start || visited[&out] {
                break;
            }
            label = out;
            (x, p) = next;
        }
        components.push(cycle);
    }
    components
}

/// Parses a PD document (bare crossing list or object form).
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::MalformedInput(format!("invalid JSON: {e}")))?;
    let (crossings, surgery, components) = match &doc {
        Value::Array(_) => (&doc, None, None),
        Value::Object(map) => {
            let crossings = map
                .get("crossings")
                .ok_or_else(|| Error::MalformedInput("missing `crossings`".into()))?;
            let surgery = map.get("surgery").filter(|v| !v.is_null());
            let components = map.get("components").filter(|v| !v.is_null());
            (crossings, surgery, components)
        }
        _ => {
            return Err(Error::MalformedInput(
                "expected a list of crossings or an object".into(),
            ))
        }
    };
    let pd = PdCode::new(parse_crossings(crossings)?)?;
    if let Some(components) = components {
        check_components(&pd, components)?;
    }
    match surgery {
        Some(s) => pd.with_surgery(parse_surgery(s)?),
        None => Ok(pd),
    }
}

fn parse_crossings(value: &Value) -> Result<Vec<[u64; 4]>> {
    let list = value
        .as_array()
        .ok_or_else(|| Error::MalformedInput("`crossings` must be a list".into()))?;
    list.iter()
        .enumerate()
        .map(|(x, tuple)| {
            let entries = tuple
                .as_array()
                .ok_or_else(|| Error::MalformedInput(format!("crossing {x} is not a list")))?;
            if entries.len() != 4 {
                return Err(Error::MalformedInput(format!(
                    "crossing {x} has {} entries, expected 4",
                    entries.len()
                )));
            }
            let mut out = [0u64; 4];
            for (slot, e) in out.iter_mut().zip(entries) {
                *slot = e.as_u64().filter(|&l| l > 0).ok_or_else(|| {
                    Error::MalformedInput(format!(
                        "crossing {x}: `{e}` is not a positive integer label"
                    ))
                })?;
            }
            Ok(out)
        })
        .collect()
}

fn parse_surgery(value: &Value) -> Result<Vec<Option<RationalSlope>>> {
    let list = value
        .as_array()
        .ok_or_else(|| Error::MalformedInput("`surgery` must be a list".into()))?;
    list.iter()
        .map(|entry| match entry {
            Value::Null => Ok(None),
            Value::String(s) => s.parse().map(Some),
            Value::Number(n) => n
                .as_i64()
                .map(|k| Some(RationalSlope::integer(k)))
                .ok_or_else(|| Error::BadCoefficient(format!("`{n}` is not an integer"))),
            other => Err(Error::BadCoefficient(format!(
                "unsupported coefficient `{other}`"
            ))),
        })
        .collect()
}

fn check_components(pd: &PdCode, value: &Value) -> Result<()> {
    let list = value
        .as_array()
        .ok_or_else(|| Error::MalformedInput("`components` must be a list".into()))?;
    let mut given: Vec<Vec<u64>> = Vec::with_capacity(list.len());
    for c in list {
        let labels = c
            .as_array()
            .ok_or_else(|| Error::MalformedInput("component is not a list".into()))?
            .iter()
            .map(|l| {
                l.as_u64()
                    .ok_or_else(|| Error::MalformedInput(format!("`{l}` is not a label")))
            })
            .collect::<Result<Vec<u64>>>()?;
        given.push(labels);
    }
    let canon = |cs: &[Vec<u64>]| {
        let mut sets: Vec<Vec<u64>> = cs
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        sets.sort();
        sets
    };
    if canon(&given) != canon(pd.components()) {
        return Err(Error::BadIncidence(
            "`components` does not match the strands of the crossings".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";

    #[test]
    fn parses_trefoil() {
        let pd = parse_pd(TREFOIL).unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.component_count(), 1);
        assert_eq!(pd.components()[0].len(), 6);
    }

    #[test]
    fn empty_diagram() {
        let pd = parse_pd("[]").unwrap();
        assert_eq!(pd.crossing_count(), 0);
        assert_eq!(pd.component_count(), 1);
    }

    #[test]
    fn label_appearing_once_is_bad_incidence() {
        let err = parse_pd("[[1,4,2,5],[3,6,4,2]]").unwrap_err();
        assert_eq!(err.kind(), "BadIncidence");
    }

    #[test]
    fn wrong_arity_and_syntax() {
        assert_eq!(parse_pd("[[1,2,1]]").unwrap_err().kind(), "MalformedInput");
        assert_eq!(parse_pd("[[1,2,2,1]").unwrap_err().kind(), "MalformedInput");
        assert_eq!(
            parse_pd("[[0,2,2,0]]").unwrap_err().kind(),
            "MalformedInput"
        );
        assert_eq!(
            parse_pd("{\"surgery\": []}").unwrap_err().kind(),
            "MalformedInput"
        );
    }

    #[test]
    fn hopf_link_has_two_components() {
        let pd = parse_pd("[[1,3,2,4],[3,1,4,2]]").unwrap();
        assert_eq!(pd.component_count(), 2);
        assert_eq!(pd.components()[0], vec![1, 2]);
        assert_eq!(pd.components()[1], vec![3, 4]);
    }

    #[test]
    fn surgery_coefficients() {
        let pd = parse_pd(r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "surgery": ["-2/3", "inf"]}"#)
            .unwrap();
        let s = pd.surgery().unwrap();
        assert_eq!(s[0], Some(RationalSlope::new(-2, 3).unwrap()));
        assert!(s[1].unwrap().is_infinite());

        let pd = parse_pd(r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "surgery": [5, null]}"#).unwrap();
        assert_eq!(pd.surgery().unwrap()[0], Some(RationalSlope::integer(5)));
    }

    #[test]
    fn unreduced_or_garbled_slopes() {
        for bad in ["2/4", "1/0", "x", "1/-2", "0/3"] {
            let doc = format!(r#"{{"crossings": [[1,2,2,1]], "surgery": ["{bad}"]}}"#);
            assert_eq!(
                parse_pd(&doc).unwrap_err().kind(),
                "BadCoefficient",
                "{bad}"
            );
        }
        assert_eq!(
            "0/1".parse::<RationalSlope>().unwrap(),
            RationalSlope::integer(0)
        );
    }

    #[test]
    fn surgery_length_must_match_components() {
        let doc = r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "surgery": ["1"]}"#;
        assert_eq!(parse_pd(doc).unwrap_err().kind(), "MalformedInput");
    }

    #[test]
    fn explicit_components_are_checked() {
        let ok = r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "components": [[2,1],[3,4]]}"#;
        assert!(parse_pd(ok).is_ok());
        let bad = r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "components": [[1,3],[2,4]]}"#;
        assert_eq!(parse_pd(bad).unwrap_err().kind(), "BadIncidence");
    }

    #[test]
    fn labels_are_normalized() {
        let pd = parse_pd("[[10,40,20,50],[30,60,40,10],[50,20,60,30]]").unwrap();
        assert_eq!(pd.normalized(), parse_pd(TREFOIL).unwrap().normalized());
        assert_eq!(pd.normalized()[0], [0, 3, 1, 4]);
    }

    #[test]
    fn json_round_trip() {
        let doc = r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "surgery": ["-2/3", null]}"#;
        let pd = parse_pd(doc).unwrap();
        assert_eq!(parse_pd(&pd.to_json()).unwrap(), pd);
    }
}

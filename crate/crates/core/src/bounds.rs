//! Closed-form bounds and the full diagram → report pipeline.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::build_map;
use crate::pd::PdCode;
use crate::twist::{twist_decomposition, twist_graph, TwistDecomposition};
use crate::width::{lift_ordering, ordering_width, separator_ordering, sweep_profile};

/// Numerical constants used by the bounds. `v3`, `v8` and `ht_lower` are the
/// quoted literature values; the rest are computed at full precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundConstants {
    pub v3: f64,
    pub v8: f64,
    pub k612: f64,
    pub k2416: f64,
    pub k128: f64,
    pub four_pi: f64,
    pub ht_lower: f64,
}

impl BoundConstants {
    pub fn standard() -> Self {
        let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
        BoundConstants {
            v3: 1.0149,
            v8: 3.6639,
            k612: 6.0 * r2 + 4.0 * r3,
            k2416: 24.0 * r2 + 16.0 * r3,
            k128: 12.0 * r2 + 8.0 * r3,
            four_pi: 4.0 * std::f64::consts::PI,
            ht_lower: 0.70735,
        }
    }

    pub fn max_width_bound(&self, t: usize) -> f64 {
        2.0 + self.k2416 * (t as f64).sqrt()
    }

    pub fn cheeger_bound(&self, heeg_width: f64, volume: f64) -> Result<f64> {
        if volume <= 0.0 || volume.is_nan() {
            return Err(Error::DomainError(format!(
                "volume must be positive, got {volume}"
            )));
        }
        if heeg_width < 0.0 || heeg_width.is_nan() {
            return Err(Error::DomainError(format!(
                "Heegaard width must be non-negative, got {heeg_width}"
            )));
        }
        Ok(self.four_pi * heeg_width / volume)
    }

    pub fn bridge_bound(&self, t: usize) -> f64 {
        1.0 + self.k128 * (t as f64).sqrt()
    }

    pub fn alternating_volume_interval(&self, t: usize) -> VolumeInterval {
        let t = t as f64;
        VolumeInterval::new(self.v8 * (t / 2.0 - 1.0), 10.0 * self.v3 * (t - 1.0))
    }

    pub fn highly_twisted_volume_interval(&self, t: usize) -> Result<VolumeInterval> {
        if t == 0 {
            return Err(Error::DomainError(
                "highly twisted interval needs t >= 1".into(),
            ));
        }
        let t = t as f64;
        Ok(VolumeInterval::new(
            self.ht_lower * (t - 1.0),
            10.0 * self.v3 * (t - 1.0),
        ))
    }

    pub fn crossing_lower_bound(&self, volume: f64) -> Result<f64> {
        if volume < 0.0 || volume.is_nan() {
            return Err(Error::DomainError(format!(
                "volume must be non-negative, got {volume}"
            )));
        }
        Ok(volume / (10.0 * self.v3))
    }
}

pub fn max_width_bound(t: usize) -> f64 {
    BoundConstants::standard().max_width_bound(t)
}

pub fn heegaard_width_bound(max_width: f64) -> Result<f64> {
    if max_width < 2.0 || max_width.is_nan() {
        return Err(Error::DomainError(format!(
            "max-width must be at least 2, got {max_width}"
        )));
    }
    Ok(max_width - 2.0)
}

pub fn cheeger_bound(heeg_width: f64, volume: f64) -> Result<f64> {
    BoundConstants::standard().cheeger_bound(heeg_width, volume)
}

/// Upper bound on the first Laplacian eigenvalue from a Cheeger bound.
pub fn buser_lambda1(h: f64) -> f64 {
    4.0 * h + 10.0 * h * h
}

pub fn bridge_bound(t: usize) -> f64 {
    BoundConstants::standard().bridge_bound(t)
}

pub fn alternating_volume_interval(t: usize) -> VolumeInterval {
    BoundConstants::standard().alternating_volume_interval(t)
}

pub fn highly_twisted_volume_interval(t: usize) -> Result<VolumeInterval> {
    BoundConstants::standard().highly_twisted_volume_interval(t)
}

pub fn crossing_lower_bound(volume: f64) -> Result<f64> {
    BoundConstants::standard().crossing_lower_bound(volume)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeInterval {
    pub lower: f64,
    pub upper: f64,
    /// Set when the lower end is not positive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl VolumeInterval {
    fn new(lower: f64, upper: f64) -> Self {
        let warning = (lower <= 0.0).then(|| format!("volume lower bound {lower} is not positive"));
        VolumeInterval {
            lower,
            upper,
            warning,
        }
    }
}

/// Minimum crossings per region for the highly twisted interval.
pub const HIGHLY_TWISTED_MIN: usize = 7;

pub fn check_highly_twisted(td: &TwistDecomposition) -> Result<()> {
    match td.blocks().iter().find(|b| b.len() < HIGHLY_TWISTED_MIN) {
        Some(b) => Err(Error::HypothesisViolated(format!(
            "twist region starting at crossing {} has {} crossings, fewer than {HIGHLY_TWISTED_MIN}",
            b.crossings[0],
            b.len()
        ))),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum LinkClass {
    Alternating,
    HighlyTwisted,
}

impl LinkClass {
    pub fn name(self) -> &'static str {
        match self {
            LinkClass::Alternating => "alternating",
            LinkClass::HighlyTwisted => "highly-twisted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorollaryConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub argmax_t: usize,
    pub argmax_class: LinkClass,
    /// The objective `t / lower(t)` falls strictly on every sampled step.
    pub strictly_decreasing: bool,
    pub sampled_up_to: usize,
}

/// Published ceilings for c₁..c₆.
pub const COROLLARY_CEILINGS: [f64; 6] = [1643.0, 1129.0, 6572.0, 2.7e7, 4516.0, 1.3e7];

impl CorollaryConstants {
    pub fn values(&self) -> [f64; 6] {
        [self.c1, self.c2, self.c3, self.c4, self.c5, self.c6]
    }

    pub fn within_ceilings(&self) -> bool {
        self.values()
            .iter()
            .zip(COROLLARY_CEILINGS)
            .all(|(&v, c)| v <= c)
    }
}

pub const COROLLARY_SAMPLE_LIMIT: usize = 1_000_000;

/// Suprema over `t ≥ 3` and both link classes of `h·√t` and `h·√Volume`,
/// using each class's lower volume bound, then the derived eigenvalue
/// constants. c₅ and c₆ are formed from the integer ceiling of c₂.
pub fn corollary_constants(k: &BoundConstants) -> CorollaryConstants {
    let lower = |class: LinkClass, t: f64| match class {
        LinkClass::Alternating => k.v8 * (t / 2.0 - 1.0),
        LinkClass::HighlyTwisted => k.ht_lower * (t - 1.0),
    };
    let mut best = (f64::NEG_INFINITY, 0, LinkClass::Alternating);
    let mut decreasing = true;
    for class in [LinkClass::Alternating, LinkClass::HighlyTwisted] {
        let mut prev = f64::INFINITY;
        for t in 3..=COROLLARY_SAMPLE_LIMIT {
            let ratio = t as f64 / lower(class, t as f64);
            if ratio >= prev {
                decreasing = false;
            }
            prev = ratio;
            if ratio > best.0 {
                best = (ratio, t, class);
            }
        }
    }
    let scale = k.four_pi * k.k2416;
    let c1 = scale * best.0;
    let c2 = scale * best.0.sqrt();
    let c2_ceiling = c2.ceil();
    CorollaryConstants {
        c1,
        c2,
        c3: 4.0 * c1,
        c4: 10.0 * c1 * c1,
        c5: 4.0 * c2_ceiling,
        c6: 10.0 * c2_ceiling * c2_ceiling,
        argmax_t: best.1,
        argmax_class: best.2,
        strictly_decreasing: decreasing,
        sampled_up_to: COROLLARY_SAMPLE_LIMIT,
    }
}

/// Attested or checked class hypotheses for [`full_report`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassFlags {
    pub class: Option<LinkClass>,
    pub tangle_prime_attested: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Hypotheses {
    /// Alternating, twist-reduced, no edge loops: attested, not checked.
    pub alternating_attested: bool,
    /// At least seven crossings per region: checked.
    pub highly_twisted_checked: bool,
    pub tangle_prime_attested: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum VolumeSource {
    User,
    IntervalLower,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub t: usize,
    pub c: usize,
    pub width_t: usize,
    pub width_g: usize,
    pub max_width_formula: f64,
    /// Level count of the sweep realised by the lifted ordering, curls included.
    pub max_width_constructive: f64,
    pub heeg_width_bound: f64,
    pub cheeger_bound: Option<f64>,
    pub cheeger_bound_constructive: Option<f64>,
    pub lambda1_bound: Option<f64>,
    pub lambda1_bound_constructive: Option<f64>,
    pub bridge_bound: f64,
    pub bridge_bound_constructive: f64,
    pub volume: Option<f64>,
    pub volume_source: Option<VolumeSource>,
    pub volume_interval: Option<VolumeInterval>,
    pub crossing_lower_bound: Option<f64>,
    pub degenerate_cyclic_region: bool,
    pub hypotheses: Hypotheses,
    pub warnings: Vec<String>,
}

struct Widths {
    t: usize,
    width_t: usize,
    width_g: usize,
    constructive: usize,
    td: TwistDecomposition,
}

fn pipeline_widths(pd: &PdCode) -> Result<Widths> {
    if pd.crossing_count() == 0 {
        // A round circle meets a level line at most twice.
        return Ok(Widths {
            t: 0,
            width_t: 0,
            width_g: 0,
            constructive: 2,
            td: TwistDecomposition::empty(),
        });
    }
    let map = build_map(pd)?;
    let td = twist_decomposition(&map, &map.faces());
    let tg = twist_graph(&td, &map)?;
    let phi_t = separator_ordering(tg.map())?;
    let width_t = ordering_width(&tg.graph(), &phi_t)?.width();
    let g = map.graph();
    let lifted = lift_ordering(&phi_t, &td, &g)?;
    let width_g = ordering_width(&g, &lifted)?.width();
    let constructive = sweep_profile(&map, &lifted)?.curl_width().max(2);
    Ok(Widths {
        t: td.t(),
        width_t,
        width_g,
        constructive,
        td,
    })
}

pub fn full_report(pd: &PdCode, volume: Option<f64>, flags: ClassFlags) -> Result<BoundsReport> {
    full_report_with(&BoundConstants::standard(), pd, volume, flags)
}

pub fn full_report_with(
    k: &BoundConstants,
    pd: &PdCode,
    volume: Option<f64>,
    flags: ClassFlags,
) -> Result<BoundsReport> {
    if let Some(v) = volume {
        if v <= 0.0 || v.is_nan() {
            return Err(Error::DomainError(format!(
                "volume must be positive, got {v}"
            )));
        }
    }
    let w = pipeline_widths(pd)?;
    let mut warnings = Vec::new();
    let formula = k.max_width_bound(w.t);
    let constructive = w.constructive as f64;
    let heeg = (formula.min(constructive) - 2.0).max(0.0);
    let heeg_formula = heegaard_width_bound(formula)?;

    let interval = match flags.class {
        None => None,
        Some(LinkClass::Alternating) => Some(k.alternating_volume_interval(w.t)),
        Some(LinkClass::HighlyTwisted) => {
            check_highly_twisted(&w.td)?;
            Some(k.highly_twisted_volume_interval(w.t)?)
        }
    };
    if let Some(msg) = interval.as_ref().and_then(|i| i.warning.clone()) {
        warnings.push(msg);
    }
    let (vol, source) = match (volume, &interval) {
        (Some(v), _) => (Some(v), Some(VolumeSource::User)),
        (None, Some(i)) if i.lower > 0.0 => (Some(i.lower), Some(VolumeSource::IntervalLower)),
        _ => (None, None),
    };
    let cheeger = vol.map(|v| k.cheeger_bound(heeg_formula, v)).transpose()?;
    let cheeger_c = vol.map(|v| k.cheeger_bound(heeg, v)).transpose()?;
    let pd_components = pd.component_count();
    if flags.tangle_prime_attested && pd_components != 1 {
        warnings.push(format!(
            "bridge bounds assume a knot; diagram has {pd_components} components"
        ));
    }
    let cyclic = w.td.has_cyclic_region();
    if cyclic {
        warnings.push("cyclic twist region: lifting bound relaxed to width(T)+4".into());
    }
    Ok(BoundsReport {
        t: w.t,
        c: pd.crossing_count(),
        width_t: w.width_t,
        width_g: w.width_g,
        max_width_formula: formula,
        max_width_constructive: constructive,
        heeg_width_bound: heeg,
        cheeger_bound: cheeger,
        cheeger_bound_constructive: cheeger_c,
        lambda1_bound: cheeger.map(buser_lambda1),
        lambda1_bound_constructive: cheeger_c.map(buser_lambda1),
        bridge_bound: k.bridge_bound(w.t),
        bridge_bound_constructive: constructive / 2.0,
        volume: vol,
        volume_source: source,
        volume_interval: interval,
        crossing_lower_bound: vol.map(|v| k.crossing_lower_bound(v)).transpose()?,
        degenerate_cyclic_region: cyclic,
        hypotheses: Hypotheses {
            alternating_attested: flags.class == Some(LinkClass::Alternating),
            highly_twisted_checked: flags.class == Some(LinkClass::HighlyTwisted),
            tangle_prime_attested: flags.tangle_prime_attested,
        },
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn constant_identities() {
        let k = BoundConstants::standard();
        assert!(close(k.k2416, 4.0 * k.k612, 1e-12));
        assert!(close(k.k128, 2.0 * k.k612, 1e-12));
        let closure = 2.0 * 2f64.sqrt() + k.k612 * (2.0f64 / 3.0).sqrt();
        assert!((closure - k.k612).abs() < 1e-12);
    }

    #[test]
    fn formula_values() {
        assert_eq!(max_width_bound(0), 2.0);
        assert!(close(max_width_bound(1), 63.6539, 1e-3));
        assert!(close(max_width_bound(4), 125.3079, 1e-3));
        assert_eq!(heegaard_width_bound(2.0).unwrap(), 0.0);
        assert!(close(heegaard_width_bound(63.6539).unwrap(), 61.6539, 1e-9));
        assert!(matches!(
            heegaard_width_bound(1.5),
            Err(Error::DomainError(_))
        ));
        assert_eq!(cheeger_bound(0.0, 3.0).unwrap(), 0.0);
        assert!(close(
            cheeger_bound(61.6539, 2.02988).unwrap(),
            381.68,
            0.01
        ));
        assert!(matches!(
            cheeger_bound(1.0, 0.0),
            Err(Error::DomainError(_))
        ));
        assert_eq!(buser_lambda1(0.0), 0.0);
        assert!(close(buser_lambda1(0.1), 0.5, 1e-12));
        assert_eq!(buser_lambda1(1.0), 14.0);
        assert_eq!(bridge_bound(0), 1.0);
        assert!(close(bridge_bound(1), 31.8270, 1e-3));
        assert!(close(bridge_bound(9), 93.4809, 1e-3));
        assert_eq!(crossing_lower_bound(0.0).unwrap(), 0.0);
        assert!(close(crossing_lower_bound(100.0).unwrap(), 9.8532, 1e-3));
        assert!(close(crossing_lower_bound(10.149).unwrap(), 1.0, 1e-12));
    }

    #[test]
    fn composition_identity() {
        let k = BoundConstants::standard();
        for t in [1, 2, 5, 40] {
            for v in [0.5, 2.02988, 17.0] {
                let composed =
                    cheeger_bound(heegaard_width_bound(max_width_bound(t)).unwrap(), v).unwrap();
                let direct = k.four_pi * k.k2416 * (t as f64).sqrt() / v;
                assert!((composed - direct).abs() <= 1e-9 * direct);
            }
        }
    }

    #[test]
    fn volume_intervals() {
        let a = alternating_volume_interval(3);
        assert!(close(a.lower, 1.83195, 1e-3) && close(a.upper, 20.298, 1e-3));
        assert_eq!(alternating_volume_interval(2).lower, 0.0);
        assert!(alternating_volume_interval(2).warning.is_some());
        let a = alternating_volume_interval(10);
        assert!(close(a.lower, 14.6556, 1e-3) && close(a.upper, 91.341, 1e-3));
        let h = highly_twisted_volume_interval(1).unwrap();
        assert_eq!((h.lower, h.upper), (0.0, 0.0));
        let h = highly_twisted_volume_interval(3).unwrap();
        assert!(close(h.lower, 1.41470, 1e-3) && close(h.upper, 20.298, 1e-3));
        let h = highly_twisted_volume_interval(11).unwrap();
        assert!(close(h.lower, 7.0735, 1e-3) && close(h.upper, 101.49, 1e-3));
    }

    #[test]
    fn corollary_values() {
        let c = corollary_constants(&BoundConstants::standard());
        assert!(close(c.c1, 1642.9, 0.5), "c1 = {}", c.c1);
        assert!(close(c.c2, 1128.2, 0.5), "c2 = {}", c.c2);
        assert!(close(c.c3, 6571.9, 2.0));
        assert!(close(c.c4, 2.699e7, 1e4));
        assert_eq!(c.c5, 4516.0);
        assert!(c.c6 <= 1.3e7);
        assert_eq!((c.argmax_t, c.argmax_class), (3, LinkClass::HighlyTwisted));
        assert!(c.strictly_decreasing);
        assert!(c.within_ceilings());
    }

    #[test]
    fn figure_eight_report() {
        let pd = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]").unwrap();
        let r = full_report(&pd, Some(2.02988), ClassFlags::default()).unwrap();
        assert_eq!((r.t, r.c), (2, 4));
        assert!(close(r.cheeger_bound.unwrap(), 539.76, 0.05));
        assert!(r.max_width_constructive <= r.max_width_formula);
        assert!(r.width_g <= r.width_t + 2);
        assert_eq!(r.volume_source, Some(VolumeSource::User));
    }

    #[test]
    fn trefoil_report_without_volume() {
        let pd = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        let r = full_report(&pd, None, ClassFlags::default()).unwrap();
        assert_eq!((r.t, r.c), (1, 3));
        assert!(r.cheeger_bound.is_none());
        assert!(r.degenerate_cyclic_region);
        assert_eq!(r.width_g, 4);
    }

    #[test]
    fn empty_diagram_report() {
        let r = full_report(&parse_pd("[]").unwrap(), None, ClassFlags::default()).unwrap();
        assert_eq!((r.t, r.c, r.heeg_width_bound), (0, 0, 0.0));
        assert_eq!(r.max_width_formula, 2.0);
    }

    #[test]
    fn highly_twisted_checked() {
        let pd = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]").unwrap();
        let flags = ClassFlags {
            class: Some(LinkClass::HighlyTwisted),
            tangle_prime_attested: false,
        };
        assert!(matches!(
            full_report(&pd, None, flags),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn interval_supplies_volume() {
        let pd = crate::generate::random_diagram(40, 5);
        let flags = ClassFlags {
            class: Some(LinkClass::Alternating),
            tangle_prime_attested: false,
        };
        let r = full_report(&pd, None, flags).unwrap();
        if r.t > 2 {
            assert_eq!(r.volume_source, Some(VolumeSource::IntervalLower));
            assert!(r.cheeger_bound.is_some());
        }
        let user = full_report(&pd, Some(50.0), flags).unwrap();
        assert_eq!(user.volume, Some(50.0));
        assert!(user.volume_interval.is_some());
    }
}

//! Legendrian `(np, nq)` cable links of a uniformly thick, Legendrian
//! simple knot type described by its mountain range.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::links::{
    permutation_allowed, Decision, LinkError, LinkMultiset, NondestabRep, OnDistinguished, OrderedLink, Permutation,
    Realization, RepKind, MAX_ENUMERATED_COMPONENTS,
};
use crate::mountain::{gcd, torus_knot_range, Invariants, MountainError, MountainRange, Sign};
use crate::toruslinks::indices_at;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CableError {
    #[error("knot type {knot} is not marked {flag}; the cable calculus does not apply")]
    AssumptionViolated { knot: String, flag: &'static str },
    #[error("invalid cable parameters: {0}")]
    InvalidSpec(String),
    #[error("unknown knot type {0:?}; expected unknot, fig8 or torus:p:q")]
    UnknownKnot(String),
    #[error("knot data for {knot}: given {field} = {given} but the peaks give {derived}")]
    Inconsistent { knot: String, field: &'static str, given: i64, derived: i64 },
    #[error(transparent)]
    Mountain(#[from] MountainError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

pub type CableResult<T> = Result<T, CableError>;

/// A knot type given by data: its mountain range and the properties the
/// cable calculus relies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawKnot")]
pub struct KnotTypeData {
    name: String,
    #[serde(flatten)]
    range: MountainRange,
    tb_bar: i64,
    sl_bar: i64,
    uniformly_thick: bool,
    legendrian_simple: bool,
    cable_of: Option<(i64, i64)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawKnot {
    name: String,
    peaks: Vec<Invariants>,
    uniformly_thick: bool,
    legendrian_simple: bool,
    #[serde(default)]
    cable_of: Option<(i64, i64)>,
    #[serde(default)]
    tb_bar: Option<i64>,
    #[serde(default)]
    sl_bar: Option<i64>,
}

impl TryFrom<RawKnot> for KnotTypeData {
    type Error = CableError;

    fn try_from(raw: RawKnot) -> CableResult<Self> {
        let k = KnotTypeData::new(
            raw.name,
            MountainRange::new(raw.peaks)?,
            raw.uniformly_thick,
            raw.legendrian_simple,
            raw.cable_of,
        );
        for (field, given, derived) in [("tb_bar", raw.tb_bar, k.tb_bar), ("sl_bar", raw.sl_bar, k.sl_bar)] {
            if let Some(given) = given.filter(|&g| g != derived) {
                return Err(CableError::Inconsistent { knot: k.name, field, given, derived });
            }
        }
        Ok(k)
    }
}

impl KnotTypeData {
    pub fn new(
        name: impl Into<String>,
        range: MountainRange,
        uniformly_thick: bool,
        legendrian_simple: bool,
        cable_of: Option<(i64, i64)>,
    ) -> Self {
        KnotTypeData {
            name: name.into(),
            tb_bar: range.max_tb(),
            sl_bar: range.max_sl(),
            range,
            uniformly_thick,
            legendrian_simple,
            cable_of,
        }
    }

    pub fn unknot() -> Self {
        let range = MountainRange::new([Invariants::new(-1, 0)]).unwrap();
        KnotTypeData::new("unknot", range, false, true, None)
    }

    pub fn figure_eight() -> Self {
        let range = MountainRange::new([Invariants::new(-3, 0)]).unwrap();
        KnotTypeData::new("fig8", range, true, true, None)
    }

    /// The `(p, q)` torus knot viewed as a cable of the unknot; `q < 0`
    /// for negative torus knots.
    pub fn torus(p: i64, q: i64) -> CableResult<Self> {
        let sign = if q < 0 { Sign::Neg } else { Sign::Pos };
        let range = torus_knot_range(p, q.abs(), sign)?;
        Ok(KnotTypeData::new(format!("torus:{p}:{q}"), range, sign == Sign::Neg, true, Some((p, q))))
    }

    /// `unknot`, `fig8` or `torus:p:q`.
    pub fn builtin(name: &str) -> CableResult<Self> {
        match name {
            "unknot" => Ok(Self::unknot()),
            "fig8" | "figure-eight" => Ok(Self::figure_eight()),
            _ => {
                let bad = || CableError::UnknownKnot(name.to_string());
                let rest = name.strip_prefix("torus:").ok_or_else(bad)?;
                let (p, q) = rest.split_once(':').ok_or_else(bad)?;
                let p = p.parse().map_err(|_| bad())?;
                let q = q.trim_start_matches('+').parse().map_err(|_| bad())?;
                Self::torus(p, q)
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn range(&self) -> &MountainRange {
        &self.range
    }

    pub fn tb_bar(&self) -> i64 {
        self.tb_bar
    }

    pub fn sl_bar(&self) -> i64 {
        self.sl_bar
    }

    pub fn uniformly_thick(&self) -> bool {
        self.uniformly_thick
    }

    pub fn legendrian_simple(&self) -> bool {
        self.legendrian_simple
    }

    pub fn cable_of(&self) -> Option<(i64, i64)> {
        self.cable_of
    }

    /// Same data with both calculus flags set.
    pub fn assume_thick_and_simple(mut self) -> Self {
        self.uniformly_thick = true;
        self.legendrian_simple = true;
        self
    }

    fn require_thick(&self) -> CableResult<()> {
        if self.uniformly_thick {
            Ok(())
        } else {
            Err(CableError::AssumptionViolated { knot: self.name.clone(), flag: "uniformly_thick" })
        }
    }

    fn require_calculus(&self) -> CableResult<()> {
        self.require_thick()?;
        if self.legendrian_simple {
            Ok(())
        } else {
            Err(CableError::AssumptionViolated { knot: self.name.clone(), flag: "legendrian_simple" })
        }
    }

    fn peaks_at_max(&self) -> impl Iterator<Item = Invariants> + '_ {
        self.range.peaks().iter().copied().filter(|p| p.tb == self.tb_bar)
    }

    fn classes_at(&self, tb: i64) -> Vec<Invariants> {
        self.range.lattice_points_at_or_above(tb).into_iter().filter(|c| c.tb == tb).collect()
    }
}

/// The `(np, nq)` cable: `n` parallel copies of the `(p, q)` curve on the
/// boundary of a neighbourhood of the companion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CableSpec {
    n: usize,
    p: i64,
    q: i64,
}

impl CableSpec {
    pub fn new(n: usize, p: i64, q: i64) -> CableResult<Self> {
        if n < 1 || p < 1 {
            return Err(CableError::InvalidSpec(format!("need n >= 1 and p >= 1, got n = {n}, p = {p}")));
        }
        if gcd(p, q) != 1 {
            return Err(CableError::InvalidSpec(format!("gcd({p}, {q}) != 1")));
        }
        Ok(CableSpec { n, p, q })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    fn require_link(&self) -> CableResult<()> {
        if self.n < 2 {
            return Err(CableError::InvalidSpec("link queries need n >= 2".into()));
        }
        Ok(())
    }
}

impl fmt::Display for CableSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n as i64;
        write!(f, "({}, {}) = {}({}, {})", n * self.p, n * self.q, n, self.p, self.q)
    }
}

/// Where the cabling slope `q/p` sits relative to the maximal
/// Thurston–Bennequin invariant of the companion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SlopeRegime {
    Greater,
    TbSlope,
    IntegralLesser,
    NonintegralLesser,
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

pub fn slope_regime(k: &KnotTypeData, spec: &CableSpec) -> SlopeRegime {
    regime_for_tb(k.tb_bar, spec)
}

/// [`slope_regime`] for a companion with maximal tb `tb_bar`.
pub fn regime_for_tb(tb_bar: i64, spec: &CableSpec) -> SlopeRegime {
    use std::cmp::Ordering::*;
    match spec.q.cmp(&(spec.p * tb_bar)) {
        Greater => SlopeRegime::Greater,
        Equal => SlopeRegime::TbSlope,
        Less if spec.p == 1 => SlopeRegime::IntegralLesser,
        Less => SlopeRegime::NonintegralLesser,
    }
}

/// The number `s` of twist or S/Z tangles in the standard cable, and the
/// Thurston–Bennequin invariant its companion front must have.
pub fn standard_twisting(k: &KnotTypeData, spec: &CableSpec) -> (i64, i64) {
    let (p, q) = (spec.p, spec.q);
    match slope_regime(k, spec) {
        SlopeRegime::Greater => (q - p * k.tb_bar, k.tb_bar),
        SlopeRegime::TbSlope => (0, k.tb_bar),
        SlopeRegime::IntegralLesser => (0, q),
        SlopeRegime::NonintegralLesser => {
            let c = ceil_div(q, p);
            (p * c - q, c)
        }
    }
}

/// Component invariants of the standard Legendrian cables, one record per
/// choice of companion class (and of S/Z tangle where that applies).
pub fn std_cable_components(k: &KnotTypeData, spec: &CableSpec) -> Vec<NondestabRep> {
    let (n, p, q) = (spec.n, spec.p, spec.q);
    match slope_regime(k, spec) {
        SlopeRegime::Greater => k
            .peaks_at_max()
            .map(|base| {
                let c = Invariants::new(p * q - q + p * k.tb_bar, p * base.r);
                NondestabRep::uniform(RepKind::StandardCable { base, tangle: None }, c, n)
            })
            .collect(),
        SlopeRegime::TbSlope => {
            k.peaks_at_max().map(|base| NondestabRep::uniform(RepKind::NCopy { base }, base, n)).collect()
        }
        SlopeRegime::IntegralLesser => {
            k.classes_at(q).into_iter().map(|base| NondestabRep::uniform(RepKind::NCopy { base }, base, n)).collect()
        }
        SlopeRegime::NonintegralLesser => {
            let (s, c) = standard_twisting(k, spec);
            k.classes_at(c)
                .into_iter()
                .flat_map(|base| {
                    [Sign::Neg, Sign::Pos].map(|sign| {
                        let ci = Invariants::new(p * q, p * base.r + sign.as_i64() * s);
                        NondestabRep::uniform(RepKind::StandardCable { base, tangle: Some(sign) }, ci, n)
                    })
                })
                .collect()
        }
    }
}

/// Every non-destabilizable Legendrian realization of the cable link.
pub fn nondestabilizable_reps_cable(k: &KnotTypeData, spec: &CableSpec) -> CableResult<Vec<NondestabRep>> {
    k.require_calculus()?;
    spec.require_link()?;
    let mut reps = std_cable_components(k, spec);
    if slope_regime(k, spec) == SlopeRegime::IntegralLesser {
        let (n, q) = (spec.n, spec.q);
        for t in 1..=k.tb_bar - q {
            for high in k.classes_at(q + t) {
                let low = Invariants::new(q - t, high.r);
                reps.push(NondestabRep::split(RepKind::Twisted { t, base: high }, high, low, n));
            }
        }
    }
    Ok(reps)
}

/// Maximal Thurston–Bennequin invariant of the `(p, q)` cable knot.
pub fn cable_max_tb_component(k: &KnotTypeData, p: i64, q: i64) -> CableResult<i64> {
    k.require_thick()?;
    let spec = CableSpec::new(1, p, q)?;
    Ok(match slope_regime(k, &spec) {
        _ if p == 1 => k.tb_bar,
        SlopeRegime::Greater => p * q - (p * k.tb_bar - q).abs(),
        _ => p * q,
    })
}

/// Upper bound on the sum of component tb invariants of the cable link.
pub fn max_component_tb_sum_cable(k: &KnotTypeData, spec: &CableSpec) -> CableResult<i64> {
    let n = spec.n as i64;
    Ok(match slope_regime(k, spec) {
        SlopeRegime::IntegralLesser => n * spec.q,
        _ => n * cable_max_tb_component(k, spec.p, spec.q)?,
    })
}

pub fn is_realizable_cable(k: &KnotTypeData, spec: &CableSpec, link: &LinkMultiset) -> CableResult<Realization> {
    let reps = nondestabilizable_reps_cable(k, spec)?;
    link.check(spec.n)?;
    Ok(Realization::from_reps(reps, link.components()))
}

/// Whether a Legendrian isotopy can carry component `i` to `sigma(i)`.
///
/// Returns `Unknown` when the companion is itself a cable whose cabling
/// slope product equals `q/p`, outside the greater-slope regime.
pub fn permutation_realizable_cable(
    k: &KnotTypeData,
    spec: &CableSpec,
    link: &OrderedLink,
    sigma: &Permutation,
) -> CableResult<Decision> {
    link.check(spec.n)?;
    let r = is_realizable_cable(k, spec, &link.multiset())?;
    if !r.realizable {
        return Err(LinkError::Unrealizable {
            which: "input",
            reason: format!("no non-destabilizable {spec} cable of {} stabilizes to it", k.name),
        }
        .into());
    }
    let regime = slope_regime(k, spec);
    if regime != SlopeRegime::Greater {
        if let Some((r, s)) = k.cable_of {
            if spec.q == r * s * spec.p {
                return Ok(Decision::Unknown);
            }
        }
    }
    let allowed = match regime {
        SlopeRegime::Greater => permutation_allowed(link, sigma, &[], OnDistinguished::Rotation)?,
        SlopeRegime::TbSlope => {
            permutation_allowed(link, sigma, &indices_at(link, k.tb_bar), OnDistinguished::Identity)?
        }
        SlopeRegime::IntegralLesser | SlopeRegime::NonintegralLesser => {
            permutation_allowed(link, sigma, &indices_at(link, spec.p * spec.q), OnDistinguished::Rotation)?
        }
    };
    Ok(allowed.into())
}

/// Counts of each decision over all permutations.
pub fn permutation_decision_counts(
    k: &KnotTypeData,
    spec: &CableSpec,
    link: &OrderedLink,
) -> CableResult<(usize, usize, usize)> {
    if spec.n > MAX_ENUMERATED_COMPONENTS {
        return Err(LinkError::SizeGuard { n: spec.n }.into());
    }
    let mut counts = (0, 0, 0);
    for sigma in Permutation::all(spec.n) {
        match permutation_realizable_cable(k, spec, link, &sigma)? {
            Decision::Yes => counts.0 += 1,
            Decision::No => counts.1 += 1,
            Decision::Unknown => counts.2 += 1,
        }
    }
    Ok(counts)
}

/// Maximal self-linking number of a transverse `(p, q)` cable component:
/// `pq - q + p·sl̄(K)`, the largest `tb - r` over the standard cables.
/// For `p = 1` this is `sl̄(K)`.
pub fn transverse_cable_sl_max(k: &KnotTypeData, p: i64, q: i64) -> CableResult<i64> {
    k.require_calculus()?;
    CableSpec::new(1, p, q)?;
    Ok(p * q - q + p * k.sl_bar)
}

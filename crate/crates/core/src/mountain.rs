//! Mountain ranges: the non-destabilizable classes of a knot type and the
//! stabilization lattice hanging below them.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MountainError {
    #[error("a mountain range needs at least one peak")]
    Empty,
    #[error("({tb}, {r}) has tb + r even; classical invariants always have tb + r odd")]
    Parity { tb: i64, r: i64 },
    #[error("peak {0} listed twice")]
    Duplicate(Invariants),
    #[error("peak {peak} is a stabilization of peak {by}")]
    Dominated { peak: Invariants, by: Invariants },
    #[error("invalid torus knot parameters: {0}")]
    InvalidParameters(String),
    #[error("tb {tb} is {depth} below the highest peak, beyond the search budget {budget}")]
    BudgetExceeded { tb: i64, depth: i64, budget: i64 },
}

pub type MountainResult<T> = Result<T, MountainError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "pos" | "positive" => Ok(Sign::Pos),
            "-" | "neg" | "negative" => Ok(Sign::Neg),
            _ => Err(format!("sign must be + or -, got {s:?}")),
        }
    }
}

/// A `(tb, r)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Invariants {
    pub tb: i64,
    pub r: i64,
}

pub type Peak = Invariants;

impl Invariants {
    pub const fn new(tb: i64, r: i64) -> Self {
        Invariants { tb, r }
    }

    pub fn has_valid_parity(self) -> bool {
        (self.tb + self.r).rem_euclid(2) == 1
    }

    /// `tb - r`, the self-linking number of the positive transverse push-off.
    pub fn sl(self) -> i64 {
        self.tb - self.r
    }

    /// Whether `other` is reachable from `self` by stabilizations.
    pub fn cone_contains(self, other: Invariants) -> bool {
        let depth = self.tb - other.tb;
        let dr = other.r - self.r;
        depth >= dr.abs() && (depth - dr).rem_euclid(2) == 0
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tb, self.r)
    }
}

pub fn stabilize(c: Invariants, sign: Sign) -> Invariants {
    Invariants::new(c.tb - 1, c.r + sign.as_i64())
}

/// A validated set of peaks: non-empty, correct parity, none dominating
/// another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRange")]
pub struct MountainRange {
    peaks: Vec<Peak>,
}

#[derive(Deserialize)]
struct RawRange {
    peaks: Vec<Peak>,
}

impl TryFrom<RawRange> for MountainRange {
    type Error = MountainError;

    fn try_from(raw: RawRange) -> MountainResult<Self> {
        MountainRange::new(raw.peaks)
    }
}

impl MountainRange {
    pub fn new(peaks: impl IntoIterator<Item = Peak>) -> MountainResult<Self> {
        let mut peaks: Vec<Peak> = peaks.into_iter().collect();
        if peaks.is_empty() {
            return Err(MountainError::Empty);
        }
        if let Some(p) = peaks.iter().find(|p| !p.has_valid_parity()) {
            return Err(MountainError::Parity { tb: p.tb, r: p.r });
        }
        peaks.sort_by_key(|p| (-p.tb, p.r));
        for (i, a) in peaks.iter().enumerate() {
            for b in &peaks[..i] {
                if a == b {
                    return Err(MountainError::Duplicate(*a));
                }
                if b.cone_contains(*a) {
                    return Err(MountainError::Dominated { peak: *a, by: *b });
                }
            }
        }
        Ok(MountainRange { peaks })
    }

    /// Peaks sorted by tb descending, then r ascending.
    pub fn peaks(&self) -> &[Peak] {
        &self.peaks
    }

    pub fn max_tb(&self) -> i64 {
        self.peaks[0].tb
    }

    /// Maximal `tb - r` over the range, attained at a peak.
    pub fn max_sl(&self) -> i64 {
        self.peaks.iter().map(|p| p.sl()).max().unwrap()
    }

    pub fn has_uniform_peak_tb(&self) -> bool {
        self.peaks.iter().all(|p| p.tb == self.max_tb())
    }

    /// Human-readable notes about unusual but accepted input.
    pub fn warnings(&self) -> Vec<String> {
        if self.has_uniform_peak_tb() {
            vec![]
        } else {
            vec!["peaks sit at different tb levels; results assume the range is exact".into()]
        }
    }

    pub fn contains(&self, tb: i64, r: i64) -> bool {
        let c = Invariants::new(tb, r);
        self.peaks.iter().any(|p| p.cone_contains(c))
    }

    /// Every class of the range with `tb >= tb0`, sorted by tb descending
    /// then r ascending.
    pub fn lattice_points_at_or_above(&self, tb0: i64) -> Vec<Invariants> {
        let mut out = BTreeSet::new();
        for p in &self.peaks {
            for tb in (tb0..=p.tb).rev() {
                let d = p.tb - tb;
                for r in (p.r - d..=p.r + d).step_by(2) {
                    out.insert((-tb, r));
                }
            }
        }
        out.into_iter().map(|(t, r)| Invariants::new(-t, r)).collect()
    }
}

/// The maximal-tb classes of the `(p, q)` torus knot with the given sign.
///
/// Requires `gcd(p, q) = 1` and `q >= p >= 1`, with `q > p` once `p >= 2`.
pub fn torus_knot_range(p: i64, q: i64, sign: Sign) -> MountainResult<MountainRange> {
    validate_torus(p, q)?;
    let peaks = if p == 1 {
        vec![Invariants::new(-1, 0)]
    } else if sign == Sign::Pos {
        vec![Invariants::new(p * q - p - q, 0)]
    } else {
        let m = q / p;
        (0..m)
            .flat_map(|k| {
                let r = q - p - 2 * p * k;
                [Invariants::new(-p * q, r), Invariants::new(-p * q, -r)]
            })
            .collect()
    };
    MountainRange::new(peaks)
}

pub(crate) fn validate_torus(p: i64, q: i64) -> MountainResult<()> {
    let bad = |m: String| Err(MountainError::InvalidParameters(m));
    if p < 1 || q < 1 {
        return bad(format!("p = {p} and q = {q} must be positive"));
    }
    if q < p {
        return bad(format!("need q >= p, got p = {p}, q = {q}"));
    }
    if gcd(p, q) != 1 {
        return bad(format!("gcd({p}, {q}) != 1"));
    }
    Ok(())
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The `|tb|` Legendrian unknots with the given `tb`.
pub fn unknot_classes_at(tb: i64) -> Vec<Invariants> {
    if tb > -1 {
        return vec![];
    }
    (tb + 1..=-tb - 1).step_by(2).map(|r| Invariants::new(tb, r)).collect()
}

/// Breadth-first closure of the peaks under stabilization. Used to check
/// [`MountainRange::contains`] independently.
pub fn bfs_contains(mr: &MountainRange, tb: i64, r: i64, budget: i64) -> MountainResult<bool> {
    let depth = mr.max_tb() - tb;
    if depth > budget {
        return Err(MountainError::BudgetExceeded { tb, depth, budget });
    }
    let target = Invariants::new(tb, r);
    let mut seen: HashSet<Invariants> = mr.peaks().iter().copied().collect();
    let mut queue: VecDeque<Invariants> = mr.peaks().iter().copied().collect();
    while let Some(c) = queue.pop_front() {
        if c == target {
            return Ok(true);
        }
        if c.tb <= tb {
            continue;
        }
        for s in [Sign::Pos, Sign::Neg] {
            let next = stabilize(c, s);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

//! Slopes on the torus as vertices of the Farey graph.
//!
//! A slope `q/p` is stored reduced with `p >= 0`; infinity is the single
//! point `1/0`. The boundary circle of the Farey disk is laid out with `0`
//! at the top, `∞` at the bottom and positive slopes on the right, so
//! walking clockwise from `0` visits the positive slopes in increasing
//! order, then `∞`, then the negative slopes in increasing order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FareyError {
    #[error("mediant of a slope with itself is undefined ({0})")]
    UndefinedMediant(Slope),
    #[error("slope {num}/{den} is not a valid fraction")]
    ZeroSlope { num: i64, den: i64 },
    #[error("cannot parse slope from {0:?}")]
    Parse(String),
    #[error("endpoints of a clockwise arc must differ ({0})")]
    DegenerateArc(Slope),
}

pub type FareyResult<T> = Result<T, FareyError>;

/// A reduced fraction `num/den`, `den >= 0`, with `∞ = 1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Slope {
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };
    pub const ZERO: Slope = Slope { num: 0, den: 1 };

    /// Builds `num/den`, reducing and normalising the sign. Any `n/0` with
    /// `n != 0` is `∞`.
    pub fn new(num: i64, den: i64) -> FareyResult<Self> {
        if num == 0 && den == 0 {
            return Err(FareyError::ZeroSlope { num, den });
        }
        if den == 0 {
            return Ok(Self::INFINITY);
        }
        let g = gcd(num, den);
        let s = den.signum();
        Ok(Slope { num: s * num / g, den: s * den / g })
    }

    pub fn integer(n: i64) -> Self {
        Slope { num: n, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_infinite(self) -> bool {
        self.den == 0
    }

    /// Position on the boundary circle: `(half, value)` where half 0 holds
    /// `[0, ∞)`, half 1 is `∞` and half 2 holds the negatives.
    fn half(self) -> u8 {
        if self.den == 0 {
            1
        } else if self.num >= 0 {
            0
        } else {
            2
        }
    }

    /// Clockwise order starting from `0`.
    fn circle_cmp(self, other: Slope) -> Ordering {
        self.half().cmp(&other.half()).then_with(|| {
            if self.den == 0 {
                Ordering::Equal
            } else {
                (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
            }
        })
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    fn from_str(s: &str) -> FareyResult<Self> {
        let t = s.trim();
        if matches!(t, "inf" | "∞" | "1/0" | "-1/0") {
            return Ok(Slope::INFINITY);
        }
        let bad = || FareyError::Parse(s.to_string());
        match t.split_once('/') {
            Some((a, b)) => {
                let num = a.trim().parse().map_err(|_| bad())?;
                let den: i64 = b.trim().parse().map_err(|_| bad())?;
                Slope::new(num, den).map_err(|_| bad())
            }
            None => t.parse().map(Slope::integer).map_err(|_| bad()),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(a.num + b.num) / (a.den + b.den)`. When one side is `∞` it is read as
/// `-1/0` next to a negative slope, so the mediant lands on the same half
/// of the disk as the finite endpoint.
pub fn mediant(a: Slope, b: Slope) -> FareyResult<Slope> {
    if a == b {
        return Err(FareyError::UndefinedMediant(a));
    }
    let signed_inf = |other: Slope| if other.num < 0 { -1 } else { 1 };
    let an = if a.is_infinite() { signed_inf(b) } else { a.num };
    let bn = if b.is_infinite() { signed_inf(a) } else { b.num };
    Slope::new(an + bn, a.den + b.den)
}

pub fn intersection_number(a: Slope, b: Slope) -> u64 {
    (a.num as i128 * b.den as i128 - b.num as i128 * a.den as i128).unsigned_abs() as u64
}

pub fn is_edge(a: Slope, b: Slope) -> bool {
    intersection_number(a, b) == 1
}

/// Whether `s` lies on the closed clockwise arc from `s0` to `s1`.
pub fn clockwise_contains(s0: Slope, s1: Slope, s: Slope) -> bool {
    use Ordering::*;
    match s0.circle_cmp(s1) {
        Less => s0.circle_cmp(s) != Greater && s.circle_cmp(s1) != Greater,
        Greater => s0.circle_cmp(s) != Greater || s.circle_cmp(s1) != Greater,
        Equal => s == s0,
    }
}

/// A path in the Farey graph running clockwise between its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FareyPath(Vec<Slope>);

impl FareyPath {
    pub fn vertices(&self) -> &[Slope] {
        &self.0
    }

    /// Number of edges, i.e. basic slices.
    pub fn edges(&self) -> usize {
        self.0.len() - 1
    }
}

/// Shortest clockwise Farey path from `s0` to `s1`.
///
/// Each step conjugates the current vertex `c` to `∞` by an element of
/// SL(2,Z); the neighbours of `∞` are the integers, so the furthest
/// clockwise neighbour of `c` not passing `s1` is the floor of the image
/// of `s1`.
pub fn minimal_path(s0: Slope, s1: Slope) -> FareyResult<FareyPath> {
    if s0 == s1 {
        return Err(FareyError::DegenerateArc(s0));
    }
    let mut path = vec![s0];
    let mut c = s0;
    while c != s1 {
        c = next_toward(c, s1);
        path.push(c);
    }
    Ok(FareyPath(path))
}

fn next_toward(c: Slope, target: Slope) -> Slope {
    let (a, b) = (c.num as i128, c.den as i128);
    // a*y - b*x = 1
    let (x, y) = bezout(a, b);
    // M = [[y, -x], [-b, a]] sends c to ∞ and preserves the cyclic order.
    let (tn, td) = (target.num as i128, target.den as i128);
    let mut n = y * tn - x * td;
    let mut d = -b * tn + a * td;
    if d < 0 {
        n = -n;
        d = -d;
    }
    debug_assert!(d > 0);
    let k = n.div_euclid(d);
    let (vn, vd) = (a * k + x, b * k + y);
    Slope::new(vn as i64, vd as i64).expect("image of an integer is a slope")
}

/// Solves `a*y - b*x = 1` for coprime `a`, `b` with `b >= 0`.
fn bezout(a: i128, b: i128) -> (i128, i128) {
    if b == 0 {
        // c = ∞ = 1/0: need y = 1.
        return (0, a);
    }
    // extended gcd: a*s + b*t = 1
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        s0 = -s0;
        t0 = -t0;
    }
    (-t0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn mediants() {
        assert_eq!(mediant(s("0"), Slope::INFINITY).unwrap(), s("1"));
        assert_eq!(mediant(s("-1"), Slope::INFINITY).unwrap(), s("-2"));
        assert_eq!(mediant(s("1/2"), s("1/3")).unwrap(), s("2/5"));
        assert!(mediant(s("1/2"), s("2/4")).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(intersection_number(s("0"), s("inf")), 1);
        assert_eq!(intersection_number(s("-7/3"), s("-2")), 1);
        assert_eq!(intersection_number(s("5/2"), s("1/3")), 13);
        assert!(is_edge(s("1/2"), s("1/3")));
        assert!(!is_edge(s("1/3"), s("2/3")));
    }

    #[test]
    fn arcs() {
        assert!(clockwise_contains(s("-3"), s("-2"), s("-7/3")));
        assert!(clockwise_contains(s("-3"), s("-2"), s("-3")));
        assert!(!clockwise_contains(s("-3"), s("-2"), s("0")));
        // wrapping through ∞
        assert!(clockwise_contains(s("2"), s("-5"), s("inf")));
        assert!(clockwise_contains(s("2"), s("-5"), s("-7")));
        assert!(!clockwise_contains(s("2"), s("-5"), s("1")));
    }

    #[test]
    fn paths() {
        let p = |a: &str, b: &str| minimal_path(s(a), s(b)).unwrap().vertices().to_vec();
        assert_eq!(p("-3", "-2"), vec![s("-3"), s("-2")]);
        assert_eq!(p("-7/3", "-2"), vec![s("-7/3"), s("-2")]);
        assert_eq!(p("-5/3", "-1"), vec![s("-5/3"), s("-3/2"), s("-1")]);
        assert_eq!(p("0", "inf").len(), 2);
        assert_eq!(p("inf", "0"), vec![s("inf"), s("0")]);
        assert_eq!(p("1/2", "-1/2"), vec![s("1/2"), s("1"), s("inf"), s("-1"), s("-1/2")]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(s("-6/4"), Slope::new(-3, 2).unwrap());
        assert_eq!(s("3/-2").to_string(), "-3/2");
        assert_eq!(Slope::INFINITY.to_string(), "inf");
        assert!("x/2".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
    }
}

//! Constructions of fronts: built-in knots, n-copies, twist and S/Z
//! tangles, stabilizations, and the standard cables and torus links.

use serde::{Deserialize, Serialize};

use super::{Event, FrontError, FrontResult, FrontWord};
use crate::cables::{ceil_div, regime_for_tb, CableSpec, SlopeRegime};
use crate::mountain::{torus_knot_range, validate_torus, Invariants, Sign};

/// Which cusped tangle to insert. Z raises the rotation number, S lowers
/// it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TangleKind {
    S,
    Z,
}

impl std::str::FromStr for TangleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "s" | "S" => Ok(TangleKind::S),
            "z" | "Z" => Ok(TangleKind::Z),
            _ => Err(format!("tangle kind must be s or z, got {s:?}")),
        }
    }
}

/// `len` adjacent strands starting at position `start`, just before event
/// `at`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Site {
    pub at: usize,
    pub start: usize,
    pub len: usize,
}

/// The figure-eight knot with `tb = -3`, `r = 0`.
pub const FIGURE_EIGHT: [Event; 11] = [
    Event::L(0),
    Event::L(0),
    Event::X(1),
    Event::X(0),
    Event::X(0),
    Event::X(0),
    Event::X(0),
    Event::X(1),
    Event::X(1),
    Event::R(0),
    Event::R(0),
];

pub fn unknot_front() -> FrontWord {
    FrontWord::new(vec![Event::L(0), Event::R(0)]).unwrap()
}

pub fn figure_eight_front() -> FrontWord {
    FrontWord::new(FIGURE_EIGHT.to_vec()).unwrap()
}

fn rebuild(events: Vec<Event>, all_reversed: bool) -> FrontWord {
    let f = FrontWord::new(events).expect("constructions preserve validity");
    if all_reversed {
        let n = f.component_count();
        f.with_reversed((0..n).collect()).unwrap()
    } else {
        f
    }
}

/// Whether every component is reversed; mixed orientations are refused.
fn uniform_reversal(f: &FrontWord) -> FrontResult<bool> {
    match f.reversed().len() {
        0 => Ok(false),
        n if n == f.component_count() => Ok(true),
        _ => Err(FrontError::InvalidParameter("constructions need all components oriented the same way".into())),
    }
}

fn single_component(f: &FrontWord) -> FrontResult<()> {
    match f.component_count() {
        1 => Ok(()),
        n => Err(FrontError::MultiComponent(n)),
    }
}

/// Bubble-sorts `from` into `to` starting at position `base`, emitting one
/// crossing per adjacent swap.
fn sort_strands<T: PartialEq + Copy>(from: &[T], to: &[T], base: usize, out: &mut Vec<Event>) {
    let rank = |x: &T| to.iter().position(|y| y == x).unwrap();
    let mut cur = from.to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..cur.len() - 1 {
            if rank(&cur[i]) > rank(&cur[i + 1]) {
                cur.swap(i, i + 1);
                out.push(Event::X(base + i));
                changed = true;
            }
        }
    }
}

/// `n` parallel push-offs of a one-component front.
///
/// A left cusp becomes `n` nested cusps followed by crossings that sort the
/// upper strands above the lower ones; right cusps are the mirror image and
/// a crossing becomes an `n × n` staircase.
pub fn n_copy(f: &FrontWord, n: usize) -> FrontResult<FrontWord> {
    single_component(f)?;
    if n == 0 {
        return Err(FrontError::InvalidParameter("n-copy needs n >= 1".into()));
    }
    // (is_upper, copy) labels for the two strands of each copy of a cusp.
    let stacked: Vec<(bool, usize)> = (0..n).rev().flat_map(|c| [(true, c), (false, c)]).collect();
    let sorted: Vec<(bool, usize)> =
        [true, false].into_iter().flat_map(|u| (0..n).rev().map(move |c| (u, c))).collect();
    let mut out = vec![];
    for &e in f.events() {
        let b = n * e.pos();
        match e {
            Event::L(_) => {
                out.extend(std::iter::repeat_n(Event::L(b), n));
                sort_strands(&stacked, &sorted, b, &mut out);
            }
            Event::R(_) => {
                sort_strands(&sorted, &stacked, b, &mut out);
                out.extend(std::iter::repeat_n(Event::R(b), n));
            }
            Event::X(_) => {
                for i in 0..n {
                    for j in (0..n).rev() {
                        out.push(Event::X(b + i + j));
                    }
                }
            }
        }
    }
    Ok(rebuild(out, uniform_reversal(f)?))
}

/// Checks that the strands of `site` exist and all run rightwards.
pub fn check_site(f: &FrontWord, site: Site) -> FrontResult<()> {
    let bad = || FrontError::SiteNotTrivial { at: site.at, start: site.start, end: site.start + site.len };
    if site.at > f.len() || site.len == 0 {
        return Err(bad());
    }
    let stack = f.stack_before(site.at);
    if site.start + site.len > stack.len() {
        return Err(bad());
    }
    if stack[site.start..site.start + site.len].iter().all(|&a| f.dir(a) == 1) {
        Ok(())
    } else {
        Err(bad())
    }
}

/// The first place where the top `k` strands all run rightwards.
pub fn default_site(f: &FrontWord, k: usize) -> FrontResult<Site> {
    (0..=f.len())
        .map(|at| Site { at, start: 0, len: k })
        .find(|&s| check_site(f, s).is_ok())
        .ok_or(FrontError::NoSite(k))
}

fn insert_at(f: &FrontWord, at: usize, tangle: &[Event]) -> FrontResult<FrontWord> {
    let all_reversed = uniform_reversal(f)?;
    let mut events = f.events()[..at].to_vec();
    events.extend_from_slice(tangle);
    events.extend_from_slice(&f.events()[at..]);
    Ok(rebuild(events, all_reversed))
}

/// The staircase `X(0) … X(k-2)` carrying the top strand to the bottom:
/// a `1/k` positive twist on `k` strands.
fn positive_tangle(k: usize) -> Vec<Event> {
    (0..k.saturating_sub(1)).map(Event::X).collect()
}

fn z_tangle(k: usize) -> Vec<Event> {
    let mut w = vec![Event::L(k)];
    w.extend((1..k).rev().map(Event::X));
    w.push(Event::R(0));
    w
}

fn s_tangle(k: usize) -> Vec<Event> {
    let mut w = vec![Event::L(0)];
    w.extend((1..k).map(Event::X));
    w.push(Event::R(k));
    w
}

fn zigzag(k: usize, kind: TangleKind) -> [Event; 2] {
    match kind {
        TangleKind::Z => [Event::L(k + 1), Event::R(k)],
        TangleKind::S => [Event::L(k), Event::R(k + 1)],
    }
}

/// One Legendrian twist on `n` strands: each strand in turn is looped
/// around those above it.
fn twist_tangle(n: usize) -> Vec<Event> {
    let mut w = vec![];
    for k in 1..n {
        w.push(Event::L(k));
        w.extend((0..k).rev().map(Event::X));
        w.extend((0..k).map(Event::X));
        w.extend([Event::X(k + 1), Event::R(k)]);
        w.extend(zigzag(k, TangleKind::Z));
        w.extend(zigzag(k, TangleKind::S));
    }
    w
}

fn repeated(tangle: Vec<Event>, count: usize, start: usize) -> Vec<Event> {
    let tangle: Vec<Event> = tangle.into_iter().map(|e| e.shifted(start)).collect();
    tangle.repeat(count)
}

/// Inserts `count` fundamental positive `k`-strand tangles at the site.
pub fn insert_positive_twists(f: &FrontWord, site: Site, count: usize) -> FrontResult<FrontWord> {
    check_site(f, site)?;
    insert_at(f, site.at, &repeated(positive_tangle(site.len), count, site.start))
}

/// Inserts `count < k` fundamental `k`-strand S or Z tangles at the site.
pub fn insert_sz_tangles(f: &FrontWord, site: Site, kind: TangleKind, count: usize) -> FrontResult<FrontWord> {
    check_site(f, site)?;
    if count >= site.len {
        return Err(FrontError::InvalidParameter(format!(
            "{count} tangles on {} strands; need fewer tangles than strands",
            site.len
        )));
    }
    let tangle = match kind {
        TangleKind::S => s_tangle(site.len),
        TangleKind::Z => z_tangle(site.len),
    };
    insert_at(f, site.at, &repeated(tangle, count, site.start))
}

/// The t-twisted n-copy: one component keeps the invariants of `f`, the
/// other `n - 1` lose `2t` in tb, and all pairs link `tb(f) - t` times.
pub fn twisted_n_copy(f: &FrontWord, n: usize, t: usize) -> FrontResult<FrontWord> {
    if t < 1 {
        return Err(FrontError::InvalidParameter("twisting needs t >= 1".into()));
    }
    let copy = n_copy(f, n)?;
    let site = default_site(&copy, n)?;
    check_site(&copy, site)?;
    insert_at(&copy, site.at, &repeated(twist_tangle(n), t, site.start))
}

/// Adds a zigzag to component `c`: `+` raises r by one, `-` lowers it, and
/// tb drops by one either way.
pub fn stabilize_front(f: &FrontWord, c: usize, sign: Sign) -> FrontResult<FrontWord> {
    f.check_component(c)?;
    let kind = match sign {
        Sign::Pos => TangleKind::Z,
        Sign::Neg => TangleKind::S,
    };
    for at in 1..f.len() {
        let stack = f.stack_before(at);
        if let Some(k) = (0..stack.len()).find(|&k| f.component_of_arc(stack[k]) == c && f.dir(stack[k]) == 1) {
            let reversed = f.reversed().to_vec();
            let mut events = f.events()[..at].to_vec();
            events.extend(zigzag(k, kind));
            events.extend_from_slice(&f.events()[at..]);
            // A zigzag keeps the component order, so flags carry over.
            return FrontWord::new(events)?.with_reversed(reversed);
        }
    }
    unreachable!("every component has a rightward arc")
}

/// Stabilizes the single component of `f` down to `target`.
pub fn stabilize_to(f: &FrontWord, target: Invariants) -> FrontResult<FrontWord> {
    single_component(f)?;
    let from = f.invariants()[0];
    if !from.cone_contains(target) {
        return Err(FrontError::InvalidParameter(format!("{target} is not a stabilization of {from}")));
    }
    let depth = from.tb - target.tb;
    let ups = (depth + target.r - from.r) / 2;
    let mut g = f.clone();
    for i in 0..depth {
        g = stabilize_front(&g, 0, if i < ups { Sign::Pos } else { Sign::Neg })?;
    }
    Ok(g)
}

/// Nested `np` maximal unknots closed up with `nq` positive tangles: the
/// maximal `(np, nq)` torus link.
pub fn positive_torus_link_front(n: usize, p: i64, q: i64) -> FrontResult<FrontWord> {
    validate_torus(p, q).map_err(|e| FrontError::InvalidParameter(e.to_string()))?;
    if n < 1 {
        return Err(FrontError::InvalidParameter("n must be at least 1".into()));
    }
    let strands = n * p as usize;
    let mut w: Vec<Event> = (0..strands).map(Event::L).collect();
    w.extend(positive_tangle(strands).repeat(n * q as usize));
    w.extend((0..strands).rev().map(Event::R));
    Ok(FrontWord::new(w).unwrap())
}

/// Front of the standard cable of `f`, a front of the companion with the
/// Thurston–Bennequin invariant the slope regime requires.
pub fn standard_cable_front(
    f: &FrontWord,
    spec: &CableSpec,
    tb_bar: i64,
    kind: Option<TangleKind>,
) -> FrontResult<FrontWord> {
    single_component(f)?;
    let (n, p, q) = (spec.n(), spec.p(), spec.q());
    let regime = regime_for_tb(tb_bar, spec);
    let need = match regime {
        SlopeRegime::Greater | SlopeRegime::TbSlope => tb_bar,
        SlopeRegime::IntegralLesser => q,
        SlopeRegime::NonintegralLesser => ceil_div(q, p),
    };
    let actual = f.tb_of_component(0)?;
    if actual != need {
        return Err(FrontError::TbMismatch { expected: need, actual });
    }
    match regime {
        SlopeRegime::TbSlope | SlopeRegime::IntegralLesser => n_copy(f, n),
        SlopeRegime::Greater => {
            let strands = n * p as usize;
            let s = (q - p * tb_bar) as usize;
            let copy = n_copy(f, strands)?;
            let site = default_site(&copy, strands)?;
            insert_positive_twists(&copy, site, n * s)
        }
        SlopeRegime::NonintegralLesser => {
            let s = (p * need - q) as usize;
            let copy = n_copy(f, p as usize)?;
            let site = default_site(&copy, p as usize)?;
            let knot = insert_sz_tangles(&copy, site, kind.unwrap_or(TangleKind::Z), s)?;
            n_copy(&knot, n)
        }
    }
}

/// The maximal-tb front of a negative `(p, -q)` torus knot with rotation
/// `r0`, built as a cable of a stabilized unknot.
pub fn negative_torus_knot_front(p: i64, q: i64, r0: i64) -> FrontResult<FrontWord> {
    let range = torus_knot_range(p, q, Sign::Neg).map_err(|e| FrontError::InvalidParameter(e.to_string()))?;
    if !range.peaks().iter().any(|c| c.r == r0) {
        return Err(FrontError::InvalidParameter(format!("{r0} is not a peak rotation of the ({p}, -{q}) torus knot")));
    }
    if p == 1 {
        return Ok(unknot_front());
    }
    let spec = CableSpec::new(1, p, -q).map_err(|e| FrontError::InvalidParameter(e.to_string()))?;
    let c = ceil_div(-q, p);
    let s = p * c + q;
    // r0 = p * r(base) ± s for a base unknot at tb = c.
    let (base, kind) = [(r0 - s, TangleKind::Z), (r0 + s, TangleKind::S)]
        .into_iter()
        .filter(|(x, _)| x % p == 0)
        .map(|(x, kind)| (Invariants::new(c, x / p), kind))
        .find(|(b, _)| Invariants::new(-1, 0).cone_contains(*b))
        .expect("every peak comes from a standard cable");
    let base = stabilize_to(&unknot_front(), base)?;
    standard_cable_front(&base, &spec, -1, Some(kind))
}

/// A front of the named built-in knot type realizing `target`: `unknot`,
/// `fig8` or `torus:p:q`.
pub fn knot_front(name: &str, target: Invariants) -> FrontResult<FrontWord> {
    let no = || FrontError::NoBuiltin(name.to_string());
    let peak = match name {
        "unknot" => unknot_front(),
        "fig8" | "figure-eight" => figure_eight_front(),
        _ => {
            let (p, q) = name
                .strip_prefix("torus:")
                .and_then(|s| s.split_once(':'))
                .and_then(|(p, q)| Some((p.parse::<i64>().ok()?, q.trim_start_matches('+').parse::<i64>().ok()?)))
                .ok_or_else(no)?;
            if q > 0 {
                positive_torus_link_front(1, p, q)?
            } else {
                let range =
                    torus_knot_range(p, -q, Sign::Neg).map_err(|e| FrontError::InvalidParameter(e.to_string()))?;
                let r0 =
                    range.peaks().iter().find(|c| c.cone_contains(target)).map(|c| c.r).unwrap_or(range.peaks()[0].r);
                negative_torus_knot_front(p, -q, r0)?
            }
        }
    };
    stabilize_to(&peak, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(tb: i64, r: i64) -> Invariants {
        Invariants::new(tb, r)
    }

    #[test]
    fn builtins() {
        assert_eq!(unknot_front().invariants(), vec![inv(-1, 0)]);
        assert_eq!(figure_eight_front().invariants(), vec![inv(-3, 0)]);
        assert_eq!(positive_torus_link_front(1, 2, 3).unwrap().invariants(), vec![inv(1, 0)]);
    }

    #[test]
    fn copies() {
        let f = n_copy(&unknot_front(), 3).unwrap();
        assert_eq!(f.invariants(), vec![inv(-1, 0); 3]);
        assert_eq!(f.linking(0, 2).unwrap(), -1);
        let g = n_copy(&figure_eight_front(), 2).unwrap();
        assert_eq!(g.invariants(), vec![inv(-3, 0); 2]);
        assert_eq!(g.linking(0, 1).unwrap(), -3);
        assert_eq!(n_copy(&figure_eight_front(), 1).unwrap(), figure_eight_front());
        assert!(matches!(n_copy(&f, 2), Err(FrontError::MultiComponent(3))));
    }

    #[test]
    fn twisted() {
        let f = twisted_n_copy(&unknot_front(), 3, 2).unwrap();
        let mut tbs: Vec<i64> = f.invariants().iter().map(|c| c.tb).collect();
        tbs.sort();
        assert_eq!(tbs, vec![-5, -5, -1]);
        assert!(f.invariants().iter().all(|c| c.r == 0));
        assert_eq!(f.linking(0, 1).unwrap(), -3);
        assert!(twisted_n_copy(&unknot_front(), 3, 0).is_err());
    }

    #[test]
    fn stabilizing() {
        let u = unknot_front();
        assert_eq!(stabilize_front(&u, 0, Sign::Pos).unwrap().invariants(), vec![inv(-2, 1)]);
        assert_eq!(stabilize_front(&u, 0, Sign::Neg).unwrap().invariants(), vec![inv(-2, -1)]);
        assert_eq!(stabilize_to(&figure_eight_front(), inv(-6, 1)).unwrap().invariants(), vec![inv(-6, 1)]);
        assert!(stabilize_to(&u, inv(-2, 0)).is_err());
    }

    #[test]
    fn sz_tangles() {
        let base = n_copy(&figure_eight_front(), 2).unwrap();
        let site = default_site(&base, 2).unwrap();
        let z = insert_sz_tangles(&base, site, TangleKind::Z, 1).unwrap();
        let s = insert_sz_tangles(&base, site, TangleKind::S, 1).unwrap();
        assert_eq!(z.invariants(), vec![inv(-14, 1)]);
        assert_eq!(s.invariants(), vec![inv(-14, -1)]);
        assert_eq!(insert_sz_tangles(&base, site, TangleKind::Z, 0).unwrap(), base);
        assert!(insert_sz_tangles(&base, site, TangleKind::Z, 2).is_err());
        assert!(check_site(&base, Site { at: 2, start: 0, len: 2 }).is_err());
    }

    #[test]
    fn negative_torus_knots() {
        for r0 in [-4, -2, 2, 4] {
            let f = negative_torus_knot_front(3, 7, r0).unwrap();
            assert_eq!(f.invariants(), vec![inv(-21, r0)]);
        }
        assert!(negative_torus_knot_front(3, 7, 0).is_err());
        for r0 in [-3, -1, 1, 3] {
            assert_eq!(negative_torus_knot_front(2, 5, r0).unwrap().invariants(), vec![inv(-10, r0)]);
        }
        assert_eq!(knot_front("torus:2:-5", inv(-11, 2)).unwrap().invariants(), vec![inv(-11, 2)]);
    }
}

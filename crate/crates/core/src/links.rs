//! Invariant tuples of links and the non-destabilizable representatives
//! that generate them. Shared by the torus link and cable calculi.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mountain::{Invariants, MountainError, Sign};

pub type ComponentInvariants = Invariants;

/// Largest `n` for which permutations are enumerated.
pub const MAX_ENUMERATED_COMPONENTS: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("invalid link parameters: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Mountain(#[from] MountainError),
    #[error("expected {expected} components, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("component {index} has invariants {inv} with tb + r even")]
    Parity { index: usize, inv: Invariants },
    #[error("{which} link is not realizable: {reason}")]
    Unrealizable { which: &'static str, reason: String },
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("malformed cyclic labels: {0}")]
    MalformedLabels(String),
    #[error("refusing to enumerate permutations of {n} components (limit {MAX_ENUMERATED_COMPONENTS})")]
    SizeGuard { n: usize },
}

pub type LinkResult<T> = Result<T, LinkError>;

/// Unordered component invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Invariants>", into = "Vec<Invariants>")]
pub struct LinkMultiset(Vec<Invariants>);

impl From<Vec<Invariants>> for LinkMultiset {
    fn from(mut v: Vec<Invariants>) -> Self {
        v.sort();
        LinkMultiset(v)
    }
}

impl From<LinkMultiset> for Vec<Invariants> {
    fn from(l: LinkMultiset) -> Self {
        l.0
    }
}

impl FromIterator<Invariants> for LinkMultiset {
    fn from_iter<I: IntoIterator<Item = Invariants>>(iter: I) -> Self {
        iter.into_iter().collect::<Vec<_>>().into()
    }
}

impl LinkMultiset {
    pub fn components(&self) -> &[Invariants] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn check(&self, n: usize) -> LinkResult<()> {
        check_components(&self.0, n)
    }
}

fn check_components(c: &[Invariants], n: usize) -> LinkResult<()> {
    if c.len() != n {
        return Err(LinkError::SizeMismatch { expected: n, got: c.len() });
    }
    match c.iter().position(|i| !i.has_valid_parity()) {
        Some(index) => Err(LinkError::Parity { index, inv: c[index] }),
        None => Ok(()),
    }
}

/// One component of an ordered link, with an optional position in the
/// cyclic order of the maximal-tb components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderedComponent {
    pub tb: i64,
    pub r: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<usize>,
}

/// Components in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedLink(Vec<OrderedComponent>);

impl OrderedLink {
    pub fn new(components: Vec<OrderedComponent>) -> Self {
        OrderedLink(components)
    }

    /// Components without labels.
    pub fn unlabeled(components: &[Invariants]) -> Self {
        OrderedLink(components.iter().map(|c| OrderedComponent { tb: c.tb, r: c.r, cyclic: None }).collect())
    }

    /// Components with labels `0..k` assigned in index order to those
    /// satisfying `labeled`.
    pub fn labeled_in_order(components: &[Invariants], labeled: impl Fn(Invariants) -> bool) -> Self {
        let mut k = 0;
        OrderedLink(
            components
                .iter()
                .map(|&c| {
                    let cyclic = labeled(c).then(|| {
                        k += 1;
                        k - 1
                    });
                    OrderedComponent { tb: c.tb, r: c.r, cyclic }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn invariants(&self) -> Vec<Invariants> {
        self.0.iter().map(|c| Invariants::new(c.tb, c.r)).collect()
    }

    pub fn multiset(&self) -> LinkMultiset {
        self.invariants().into()
    }

    pub(crate) fn check(&self, n: usize) -> LinkResult<()> {
        check_components(&self.invariants(), n)
    }

    /// Labels for the indices in `i1`. With no labels given at all, the
    /// index order is used. Otherwise the labels must sit exactly on `i1`
    /// and be a permutation of `0..|i1|`.
    pub(crate) fn cyclic_labels(&self, i1: &[usize]) -> LinkResult<Vec<usize>> {
        let bad = |m: String| Err(LinkError::MalformedLabels(m));
        if self.0.iter().all(|c| c.cyclic.is_none()) {
            return Ok((0..i1.len()).collect());
        }
        for (i, c) in self.0.iter().enumerate() {
            if c.cyclic.is_some() != i1.contains(&i) {
                return bad(format!(
                    "component {i} must {}carry a cyclic label",
                    if i1.contains(&i) { "" } else { "not " }
                ));
            }
        }
        let labels: Vec<usize> = i1.iter().map(|&i| self.0[i].cyclic.unwrap()).collect();
        if labels.iter().copied().sorted().ne(0..i1.len()) {
            return bad(format!("labels {labels:?} are not a permutation of 0..{}", i1.len()));
        }
        Ok(labels)
    }
}

/// A permutation `i -> sigma[i]` of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = LinkError;

    fn try_from(v: Vec<usize>) -> LinkResult<Self> {
        let mut seen = vec![false; v.len()];
        for &x in &v {
            if x >= v.len() || std::mem::replace(&mut seen[x], true) {
                return Err(LinkError::MalformedPermutation(format!("{v:?} is not a permutation of 0..{}", v.len())));
            }
        }
        Ok(Permutation(v))
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// `i -> i + k mod n`.
    pub fn rotation(n: usize, k: usize) -> Self {
        Permutation((0..n).map(|i| (i + k) % n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(", "))
    }
}

/// How a permutation may act on the distinguished components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OnDistinguished {
    /// A rotation with respect to the cyclic labels.
    Rotation,
    /// Fixed pointwise.
    Identity,
}

/// Whether `sigma` maps the distinguished set `i1` to itself and acts on
/// it as `mode` allows, and preserves invariants on everything else.
pub(crate) fn permutation_allowed(
    link: &OrderedLink,
    sigma: &Permutation,
    i1: &[usize],
    mode: OnDistinguished,
) -> LinkResult<bool> {
    if sigma.len() != link.len() {
        return Err(LinkError::MalformedPermutation(format!(
            "permutation of {} elements for a link of {} components",
            sigma.len(),
            link.len()
        )));
    }
    let inv = link.invariants();
    let labels = link.cyclic_labels(i1)?;
    let label = |i: usize| i1.iter().position(|&j| j == i).map(|k| labels[k]);
    if i1.iter().any(|&i| label(sigma.apply(i)).is_none()) {
        return Ok(false);
    }
    let on_i1 = match mode {
        OnDistinguished::Identity => i1.iter().all(|&i| sigma.apply(i) == i),
        OnDistinguished::Rotation => {
            let k = i1.len();
            let shift = |i: usize| (label(sigma.apply(i)).unwrap() + k - label(i).unwrap()) % k;
            i1.iter().map(|&i| shift(i)).all_equal()
        }
    };
    let rest = (0..link.len()).filter(|i| !i1.contains(i)).all(|i| inv[i] == inv[sigma.apply(i)]);
    Ok(on_i1 && rest)
}

/// Outcome of a permutation query. `Unknown` is reserved for the cases the
/// classification leaves open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

/// What kind of non-destabilizable link a representative is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum RepKind {
    /// The unique maximal positive torus link.
    PosMax,
    /// The n-copy of a maximal negative torus knot with rotation `r0`.
    NegKnottedMax { r0: i64 },
    /// The n-copy of the class `base`.
    NCopy { base: Invariants },
    /// The t-twisted n-copy of `base`; `base` is also the high component.
    Twisted { t: i64, base: Invariants },
    /// A standard cable built from the companion class `base`, with the
    /// S/Z choice when the construction has one.
    StandardCable {
        base: Invariants,
        #[serde(skip_serializing_if = "Option::is_none")]
        tangle: Option<Sign>,
    },
}

/// A non-destabilizable link: one optional high component and identical
/// low components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NondestabRep {
    #[serde(flatten)]
    pub kind: RepKind,
    components: Vec<Invariants>,
}

impl NondestabRep {
    /// `n` copies of `c`.
    pub fn uniform(kind: RepKind, c: Invariants, n: usize) -> Self {
        NondestabRep { kind, components: vec![c; n] }
    }

    /// One `high` component and `n - 1` copies of `low`.
    pub fn split(kind: RepKind, high: Invariants, low: Invariants, n: usize) -> Self {
        let mut components = vec![high];
        components.extend(std::iter::repeat_n(low, n - 1));
        NondestabRep { kind, components }
    }

    pub fn components(&self) -> &[Invariants] {
        &self.components
    }

    pub fn component_tb_sum(&self) -> i64 {
        self.components.iter().map(|c| c.tb).sum()
    }

    fn high_low(&self) -> (Option<Invariants>, Invariants) {
        let low = *self.components.last().unwrap();
        if self.components[0] == low {
            (None, low)
        } else {
            (Some(self.components[0]), low)
        }
    }

    /// Whether `link` is a componentwise stabilization of this
    /// representative under some matching of components to slots.
    pub fn covers(&self, link: &[Invariants]) -> bool {
        if link.len() != self.components.len() {
            return false;
        }
        match self.high_low() {
            (None, low) => link.iter().all(|&c| low.cone_contains(c)),
            (Some(high), low) => (0..link.len()).any(|h| {
                high.cone_contains(link[h]) && link.iter().enumerate().all(|(i, &c)| i == h || low.cone_contains(c))
            }),
        }
    }
}

/// Answer to a realizability query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub realizable: bool,
    /// Every non-destabilizable representative the link stabilizes from.
    pub witnesses: Vec<NondestabRep>,
}

impl Realization {
    pub(crate) fn from_reps(reps: Vec<NondestabRep>, link: &[Invariants]) -> Self {
        let witnesses: Vec<_> = reps.into_iter().filter(|r| r.covers(link)).collect();
        Realization { realizable: !witnesses.is_empty(), witnesses }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(tb: i64, r: i64) -> Invariants {
        Invariants::new(tb, r)
    }

    #[test]
    fn twisted_matching() {
        let rep = NondestabRep::split(RepKind::Twisted { t: 1, base: inv(-2, 1) }, inv(-2, 1), inv(-4, 1), 3);
        assert!(rep.covers(&[inv(-4, 1), inv(-2, 1), inv(-4, 1)]));
        assert!(rep.covers(&[inv(-5, 2), inv(-3, 0), inv(-4, 1)]));
        assert!(!rep.covers(&[inv(-2, 1), inv(-2, 1), inv(-4, 1)]));
        assert!(!rep.covers(&[inv(-2, 1), inv(-4, 1)]));
    }

    #[test]
    fn permutations() {
        assert!(Permutation::try_from(vec![0, 0]).is_err());
        assert!(Permutation::try_from(vec![1, 2]).is_err());
        let s = Permutation::try_from(vec![1, 2, 0]).unwrap();
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::rotation(3, 1), s);
        assert_eq!(Permutation::all(4).count(), 24);
    }

    #[test]
    fn labels() {
        let comps = [inv(-3, 0), inv(-4, 1), inv(-3, 0)];
        let l = OrderedLink::labeled_in_order(&comps, |c| c.tb == -3);
        assert_eq!(l.cyclic_labels(&[0, 2]).unwrap(), vec![0, 1]);
        assert!(l.cyclic_labels(&[0]).is_err());
        let json = r#"[{"tb":-3,"r":0,"cyclic":0},{"tb":-3,"r":0,"cyclic":0}]"#;
        let dup: OrderedLink = serde_json::from_str(json).unwrap();
        assert!(dup.cyclic_labels(&[0, 1]).is_err());
        assert!(serde_json::from_str::<OrderedLink>(r#"[{"tb":1,"r":0,"orientation":"-"}]"#).is_err());
    }

    #[test]
    fn rotation_rule() {
        let comps = [inv(-3, 0); 3];
        let l = OrderedLink::unlabeled(&comps);
        let i1 = [0, 1, 2];
        let yes = |s: Vec<usize>| {
            permutation_allowed(&l, &Permutation::try_from(s).unwrap(), &i1, OnDistinguished::Rotation).unwrap()
        };
        assert!(yes(vec![1, 2, 0]));
        assert!(yes(vec![0, 1, 2]));
        assert!(!yes(vec![1, 0, 2]));
    }
}

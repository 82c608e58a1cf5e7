//! Legendrian and transverse `(np, ±nq)` torus links.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::links::{
    permutation_allowed, LinkError, LinkMultiset, LinkResult, NondestabRep, OnDistinguished, OrderedLink, Permutation,
    Realization, RepKind, MAX_ENUMERATED_COMPONENTS,
};
use crate::mountain::{torus_knot_range, unknot_classes_at, validate_torus, Invariants, Sign};

/// The `(np, ±nq)` torus link: `n` parallel `(p, ±q)` torus knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct TorusLinkSpec {
    n: usize,
    p: i64,
    q: i64,
    sign: Sign,
}

#[derive(Deserialize)]
struct RawSpec {
    n: usize,
    p: i64,
    q: i64,
    sign: Sign,
}

impl TryFrom<RawSpec> for TorusLinkSpec {
    type Error = LinkError;

    fn try_from(r: RawSpec) -> LinkResult<Self> {
        TorusLinkSpec::new(r.n, r.p, r.q, r.sign)
    }
}

impl TorusLinkSpec {
    pub fn new(n: usize, p: i64, q: i64, sign: Sign) -> LinkResult<Self> {
        if n < 2 {
            return Err(LinkError::InvalidSpec(format!("a torus link needs n >= 2, got {n}")));
        }
        validate_torus(p, q)?;
        Ok(TorusLinkSpec { n, p, q, sign })
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

    pub fn sign(&self) -> Sign {
        self.sign
    }

    fn n_i64(&self) -> i64 {
        self.n as i64
    }

    /// Linking number between any two components.
    pub fn pairwise_linking(&self) -> i64 {
        self.sign.as_i64() * self.p * self.q
    }
}

impl fmt::Display for TorusLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n_i64();
        write!(f, "({}, {}{})", n * self.p, self.sign, n * self.q)
    }
}

/// The non-destabilizable Legendrian representatives of the link type.
pub fn nondestabilizable_reps(spec: &TorusLinkSpec) -> Vec<NondestabRep> {
    let TorusLinkSpec { n, p, q, sign } = *spec;
    match (sign, p) {
        (Sign::Pos, _) => vec![NondestabRep::uniform(RepKind::PosMax, Invariants::new(p * q - p - q, 0), n)],
        (Sign::Neg, 1) => {
            let mut reps: Vec<_> = unknot_classes_at(-q)
                .into_iter()
                .map(|c| NondestabRep::uniform(RepKind::NCopy { base: c }, c, n))
                .collect();
            for t in 1..q {
                for high in unknot_classes_at(-q + t) {
                    let low = Invariants::new(-q - t, high.r);
                    reps.push(NondestabRep::split(RepKind::Twisted { t, base: high }, high, low, n));
                }
            }
            reps
        }
        (Sign::Neg, _) => torus_knot_range(p, q, Sign::Neg)
            .expect("spec already validated")
            .peaks()
            .iter()
            .map(|&c| NondestabRep::uniform(RepKind::NegKnottedMax { r0: c.r }, c, n))
            .collect(),
    }
}

/// Thurston–Bennequin invariant of the whole link.
pub fn total_tb(spec: &TorusLinkSpec, link: &LinkMultiset) -> LinkResult<i64> {
    link.check(spec.n)?;
    let n = spec.n_i64();
    let sum: i64 = link.components().iter().map(|c| c.tb).sum();
    Ok(sum + spec.sign.as_i64() * (n - 1) * n * spec.p * spec.q)
}

/// Upper bound for the sum of the component Thurston–Bennequin invariants.
pub fn max_component_tb_sum(spec: &TorusLinkSpec) -> i64 {
    let (n, p, q) = (spec.n_i64(), spec.p, spec.q);
    match spec.sign {
        Sign::Pos => n * (p * q - p - q),
        Sign::Neg => -n * p * q,
    }
}

/// Whether some Legendrian realization of the link type has these
/// component invariants, with every witnessing representative.
pub fn is_realizable(spec: &TorusLinkSpec, link: &LinkMultiset) -> LinkResult<Realization> {
    link.check(spec.n)?;
    Ok(Realization::from_reps(nondestabilizable_reps(spec), link.components()))
}

fn require_realizable(spec: &TorusLinkSpec, link: &LinkMultiset, which: &'static str) -> LinkResult<Vec<NondestabRep>> {
    let r = is_realizable(spec, link)?;
    if r.realizable {
        Ok(r.witnesses)
    } else {
        Err(LinkError::Unrealizable {
            which,
            reason: format!("no non-destabilizable {spec} torus link stabilizes to it"),
        })
    }
}

/// Unordered Legendrian isotopy: realizable links are isotopic exactly
/// when their component invariants agree.
pub fn unordered_isotopic(spec: &TorusLinkSpec, a: &LinkMultiset, b: &LinkMultiset) -> LinkResult<bool> {
    require_realizable(spec, a, "first")?;
    require_realizable(spec, b, "second")?;
    Ok(a == b)
}

/// The non-destabilizable representatives that stabilize to `link`.
pub fn common_destabilizations(spec: &TorusLinkSpec, link: &LinkMultiset) -> LinkResult<Vec<NondestabRep>> {
    require_realizable(spec, link, "input")
}

/// Indices of components with tb equal to `tb`.
pub(crate) fn indices_at(link: &OrderedLink, tb: i64) -> Vec<usize> {
    link.invariants().iter().enumerate().filter(|(_, c)| c.tb == tb).map(|(i, _)| i).collect()
}

/// Whether a Legendrian isotopy can carry component `i` to `sigma(i)`.
pub fn permutation_realizable(spec: &TorusLinkSpec, link: &OrderedLink, sigma: &Permutation) -> LinkResult<bool> {
    link.check(spec.n)?;
    require_realizable(spec, &link.multiset(), "input")?;
    let i1 = match spec.sign {
        Sign::Pos => vec![],
        Sign::Neg => indices_at(link, -spec.p * spec.q),
    };
    permutation_allowed(link, sigma, &i1, OnDistinguished::Rotation)
}

/// Number of realizable permutations of the components.
pub fn realizable_permutation_count(spec: &TorusLinkSpec, link: &OrderedLink) -> LinkResult<usize> {
    if spec.n > MAX_ENUMERATED_COMPONENTS {
        return Err(LinkError::SizeGuard { n: spec.n });
    }
    let mut count = 0;
    for sigma in Permutation::all(spec.n) {
        if permutation_realizable(spec, link, &sigma)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Maximal self-linking number of a component of a transverse torus link.
pub fn transverse_sl_max_component(p: i64, q: i64, sign: Sign) -> LinkResult<i64> {
    validate_torus(p, q)?;
    Ok(sign.as_i64() * q * (p - 1) - p)
}

/// Whether a transverse realization has these component self-linking
/// numbers. Every sl-preserving permutation is then realizable too.
pub fn transverse_realizable(spec: &TorusLinkSpec, sls: &[i64]) -> LinkResult<bool> {
    if sls.len() != spec.n {
        return Err(LinkError::SizeMismatch { expected: spec.n, got: sls.len() });
    }
    let top = transverse_sl_max_component(spec.p, spec.q, spec.sign)?;
    Ok(sls.iter().all(|&s| s <= top && (top - s) % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(tb: i64, r: i64) -> Invariants {
        Invariants::new(tb, r)
    }

    fn neg(n: usize, p: i64, q: i64) -> TorusLinkSpec {
        TorusLinkSpec::new(n, p, q, Sign::Neg).unwrap()
    }

    fn link(c: &[(i64, i64)]) -> LinkMultiset {
        c.iter().map(|&(tb, r)| inv(tb, r)).collect()
    }

    #[test]
    fn rep_counts() {
        assert_eq!(nondestabilizable_reps(&neg(2, 1, 3)).len(), 6);
        let reps = nondestabilizable_reps(&neg(3, 1, 3));
        assert_eq!(reps.len(), 6);
        assert_eq!(reps.iter().filter(|r| matches!(r.kind, RepKind::NCopy { .. })).count(), 3);
        let r0s: Vec<_> = nondestabilizable_reps(&neg(2, 3, 7))
            .iter()
            .map(|r| match r.kind {
                RepKind::NegKnottedMax { r0 } => r0,
                _ => panic!(),
            })
            .collect();
        assert_eq!(r0s, vec![-4, -2, 2, 4]);
        assert_eq!(nondestabilizable_reps(&neg(4, 1, 1)).len(), 1);
    }

    #[test]
    fn tb_totals() {
        assert_eq!(total_tb(&neg(2, 1, 3), &link(&[(-3, 0), (-3, 0)])).unwrap(), -12);
        let pos = TorusLinkSpec::new(2, 2, 3, Sign::Pos).unwrap();
        assert_eq!(total_tb(&pos, &link(&[(1, 0), (1, 0)])).unwrap(), 14);
        assert_eq!(max_component_tb_sum(&pos), 2);
        assert_eq!(max_component_tb_sum(&neg(3, 1, 2)), -6);
        assert_eq!(max_component_tb_sum(&neg(3, 3, 7)), -63);
    }

    #[test]
    fn realizability() {
        let s = neg(2, 3, 7);
        assert!(!is_realizable(&s, &link(&[(-21, 4), (-21, 2)])).unwrap().realizable);
        assert!(is_realizable(&s, &link(&[(-21, 4), (-21, 4)])).unwrap().realizable);
        let r = is_realizable(&neg(2, 1, 3), &link(&[(-2, 1), (-4, 1)])).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].kind, RepKind::Twisted { t: 1, base: inv(-2, 1) });
        assert!(is_realizable(&neg(3, 1, 3), &link(&[(-2, 1), (-4, 1), (-4, 1)])).unwrap().realizable);
        assert!(is_realizable(&s, &link(&[(-21, 4)])).is_err());
    }

    #[test]
    fn destabilizations() {
        let kinds = |s: &TorusLinkSpec, l: &[(i64, i64)]| -> Vec<RepKind> {
            common_destabilizations(s, &link(l)).unwrap().into_iter().map(|r| r.kind).collect()
        };
        assert_eq!(
            kinds(&neg(2, 3, 7), &[(-22, 3), (-22, 3)]),
            vec![RepKind::NegKnottedMax { r0: 2 }, RepKind::NegKnottedMax { r0: 4 }]
        );
        assert_eq!(kinds(&neg(3, 1, 2), &[(-2, -1); 3]), vec![RepKind::NCopy { base: inv(-2, -1) }]);
        assert_eq!(
            kinds(&neg(3, 1, 2), &[(-3, 0); 3]),
            vec![
                RepKind::NCopy { base: inv(-2, -1) },
                RepKind::NCopy { base: inv(-2, 1) },
                RepKind::Twisted { t: 1, base: inv(-1, 0) },
            ]
        );
        assert!(common_destabilizations(&neg(2, 3, 7), &link(&[(-21, 0), (-21, 0)])).is_err());
    }

    #[test]
    fn isotopy() {
        let s = neg(2, 3, 7);
        let a = link(&[(-21, 4), (-21, 4)]);
        assert!(unordered_isotopic(&s, &a, &a).unwrap());
        assert!(!unordered_isotopic(&s, &a, &link(&[(-21, 2), (-21, 2)])).unwrap());
        assert!(matches!(
            unordered_isotopic(&s, &a, &link(&[(-21, 4), (-21, 2)])),
            Err(LinkError::Unrealizable { which: "second", .. })
        ));
    }

    #[test]
    fn permutations() {
        let s = neg(3, 2, 5);
        let max = OrderedLink::unlabeled(&[inv(-10, 1); 3]);
        assert_eq!(realizable_permutation_count(&s, &max).unwrap(), 3);
        let mixed = OrderedLink::unlabeled(&[inv(-10, 1), inv(-11, 2), inv(-11, 0)]);
        assert_eq!(realizable_permutation_count(&s, &mixed).unwrap(), 1);
        let pos = TorusLinkSpec::new(3, 2, 3, Sign::Pos).unwrap();
        assert_eq!(realizable_permutation_count(&pos, &OrderedLink::unlabeled(&[inv(1, 0); 3])).unwrap(), 6);
        let big = TorusLinkSpec::new(10, 2, 3, Sign::Pos).unwrap();
        assert!(realizable_permutation_count(&big, &OrderedLink::unlabeled(&[inv(1, 0); 10])).is_err());
    }

    #[test]
    fn transverse() {
        assert_eq!(transverse_sl_max_component(2, 3, Sign::Pos).unwrap(), 1);
        assert_eq!(transverse_sl_max_component(3, 7, Sign::Neg).unwrap(), -17);
        assert_eq!(transverse_sl_max_component(1, 4, Sign::Pos).unwrap(), -1);
        let pos = TorusLinkSpec::new(2, 2, 3, Sign::Pos).unwrap();
        assert!(transverse_realizable(&pos, &[1, 1]).unwrap());
        assert!(!transverse_realizable(&pos, &[1, 0]).unwrap());
        assert!(transverse_realizable(&neg(2, 3, 7), &[-17, -19]).unwrap());
        assert!(transverse_realizable(&neg(2, 3, 7), &[-17]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(neg(3, 1, 3).to_string(), "(3, -9)");
    }
}

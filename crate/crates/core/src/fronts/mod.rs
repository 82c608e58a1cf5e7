//! Front diagrams as Morse event words.
//!
//! Reading left to right, a front is a sequence of events acting on a
//! vertical stack of strands numbered from the top: `L(k)` opens a left
//! cusp whose two new strands take positions `k` and `k + 1`, `R(k)`
//! closes strands `k` and `k + 1` with a right cusp, and `X(k)` crosses
//! strands `k` and `k + 1`. A word is closed when the stack is empty at the
//! end.
//!
//! Each component is oriented so that the upper strand of its first left
//! cusp runs to the right. `reversed` lists components whose orientation
//! is flipped from that.

mod build;
mod render;

pub use build::*;
pub use render::*;

use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::mountain::Invariants;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrontError {
    #[error("event {index} ({event}) needs strands {needed} but only {available} exist")]
    OutOfRange { index: usize, event: Event, needed: usize, available: usize },
    #[error("word ends with {0} open strands")]
    OpenComponent(usize),
    #[error("component {0} does not exist")]
    NoSuchComponent(usize),
    #[error("linking needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("expected a single-component front, found {0} components")]
    MultiComponent(usize),
    #[error("strands {start}..{end} before event {at} are not parallel and rightward")]
    SiteNotTrivial { at: usize, start: usize, end: usize },
    #[error("no site with {0} parallel rightward strands")]
    NoSite(usize),
    #[error("front has tb {actual} but this construction needs tb {expected}")]
    TbMismatch { expected: i64, actual: i64 },
    #[error("invalid construction parameter: {0}")]
    InvalidParameter(String),
    #[error("no built-in front for {0}")]
    NoBuiltin(String),
    #[error("ascii diagram: {0}")]
    Ascii(String),
}

pub type FrontResult<T> = Result<T, FrontError>;

/// One Morse event of a front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    L(usize),
    R(usize),
    X(usize),
}

impl Event {
    pub fn pos(self) -> usize {
        match self {
            Event::L(k) | Event::R(k) | Event::X(k) => k,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Event::L(_) => "L",
            Event::R(_) => "R",
            Event::X(_) => "X",
        }
    }

    fn shifted(self, by: usize) -> Event {
        match self {
            Event::L(k) => Event::L(k + by),
            Event::R(k) => Event::R(k + by),
            Event::X(k) => Event::X(k + by),
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tag(), self.pos())
    }
}

impl Serialize for Event {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(self.tag())?;
        t.serialize_element(&self.pos())?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Event {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Event;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(r#"a pair like ["L", 0]"#)
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Event, A::Error> {
                let tag: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let pos: usize = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                match tag.as_str() {
                    "L" => Ok(Event::L(pos)),
                    "R" => Ok(Event::R(pos)),
                    "X" => Ok(Event::X(pos)),
                    _ => Err(de::Error::unknown_variant(&tag, &["L", "R", "X"])),
                }
            }
        }
        d.deserialize_seq(V)
    }
}

/// A closed front. Construction validates the word, so every `FrontWord`
/// has well-defined components and invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFront")]
pub struct FrontWord {
    events: Vec<Event>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reversed: Vec<usize>,
    #[serde(skip)]
    analysis: Analysis,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFront {
    events: Vec<Event>,
    #[serde(default)]
    reversed: Vec<usize>,
}

impl TryFrom<RawFront> for FrontWord {
    type Error = FrontError;

    fn try_from(raw: RawFront) -> FrontResult<Self> {
        FrontWord::new(raw.events)?.with_reversed(raw.reversed)
    }
}

/// Combinatorics extracted from a word in one linear pass.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Analysis {
    /// Component of each arc; arcs are numbered in order of creation.
    arc_component: Vec<usize>,
    /// +1 if the arc runs rightwards under the default orientation.
    arc_dir: Vec<i8>,
    /// Arc occupying each strand position, before each event and at the end.
    stacks: Vec<Vec<usize>>,
    components: usize,
}

impl Analysis {
    fn new(events: &[Event]) -> FrontResult<Analysis> {
        let mut stack: Vec<usize> = vec![];
        let mut stacks = Vec::with_capacity(events.len() + 1);
        let mut arcs = 0;
        // (upper arc, lower arc) of every cusp, left cusps flagged.
        let mut cusps: Vec<(bool, usize, usize)> = vec![];
        for (index, &event) in events.iter().enumerate() {
            stacks.push(stack.clone());
            let k = event.pos();
            let needed = match event {
                Event::L(_) => k,
                _ => k + 2,
            };
            if needed > stack.len() {
                return Err(FrontError::OutOfRange { index, event, needed, available: stack.len() });
            }
            match event {
                Event::L(_) => {
                    stack.splice(k..k, [arcs, arcs + 1]);
                    cusps.push((true, arcs, arcs + 1));
                    arcs += 2;
                }
                Event::R(_) => {
                    cusps.push((false, stack[k], stack[k + 1]));
                    stack.drain(k..k + 2);
                }
                Event::X(_) => stack.swap(k, k + 1),
            }
        }
        if !stack.is_empty() {
            return Err(FrontError::OpenComponent(stack.len()));
        }
        stacks.push(stack);

        // partner[arc] = [arc across its left cusp, arc across its right cusp]
        let mut partner = vec![[usize::MAX; 2]; arcs];
        for &(left, a, b) in &cusps {
            let side = usize::from(!left);
            partner[a][side] = b;
            partner[b][side] = a;
        }
        // Walk each component from the upper arc of its first left cusp;
        // directions alternate from arc to arc.
        let mut arc_component = vec![usize::MAX; arcs];
        let mut arc_dir = vec![0i8; arcs];
        let mut components = 0;
        for &(left, upper, _) in &cusps {
            if !left || arc_component[upper] != usize::MAX {
                continue;
            }
            let (mut arc, mut dir, mut side) = (upper, 1i8, 1);
            while arc_component[arc] == usize::MAX {
                arc_component[arc] = components;
                arc_dir[arc] = dir;
                arc = partner[arc][side];
                dir = -dir;
                side = 1 - side;
            }
            components += 1;
        }
        Ok(Analysis { arc_component, arc_dir, stacks, components })
    }
}

impl FrontWord {
    /// Validates a word: every event fits the current strand stack and the
    /// stack is empty at the end.
    pub fn new(events: Vec<Event>) -> FrontResult<Self> {
        let analysis = Analysis::new(&events)?;
        Ok(FrontWord { events, reversed: vec![], analysis })
    }

    /// Same front with the listed components' orientations flipped.
    pub fn with_reversed(mut self, mut reversed: Vec<usize>) -> FrontResult<Self> {
        reversed.sort_unstable();
        reversed.dedup();
        if let Some(&c) = reversed.iter().find(|&&c| c >= self.analysis.components) {
            return Err(FrontError::NoSuchComponent(c));
        }
        self.reversed = reversed;
        Ok(self)
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn reversed(&self) -> &[usize] {
        &self.reversed
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn component_count(&self) -> usize {
        self.analysis.components
    }

    /// Largest number of strands present at once.
    pub fn width(&self) -> usize {
        self.analysis.stacks.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_component(&self, c: usize) -> FrontResult<()> {
        if c < self.component_count() {
            Ok(())
        } else {
            Err(FrontError::NoSuchComponent(c))
        }
    }

    fn component_of_arc(&self, arc: usize) -> usize {
        self.analysis.arc_component[arc]
    }

    /// Direction of an arc under the actual orientation: +1 rightwards.
    fn dir(&self, arc: usize) -> i8 {
        let d = self.analysis.arc_dir[arc];
        if self.reversed.binary_search(&self.component_of_arc(arc)).is_ok() {
            -d
        } else {
            d
        }
    }

    /// Arcs at each strand position just before event `i` (or at the end
    /// when `i == len`).
    fn stack_before(&self, i: usize) -> &[usize] {
        &self.analysis.stacks[i]
    }

    fn crossings(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.events.iter().enumerate().filter_map(|(i, e)| match *e {
            Event::X(k) => {
                let s = self.stack_before(i);
                Some((s[k], s[k + 1]))
            }
            _ => None,
        })
    }

    fn crossing_sign(&self, a: usize, b: usize) -> i64 {
        if self.dir(a) == self.dir(b) {
            1
        } else {
            -1
        }
    }

    /// Writhe of the component minus its number of right cusps.
    pub fn tb_of_component(&self, c: usize) -> FrontResult<i64> {
        self.check_component(c)?;
        let writhe: i64 = self
            .crossings()
            .filter(|&(a, b)| self.component_of_arc(a) == c && self.component_of_arc(b) == c)
            .map(|(a, b)| self.crossing_sign(a, b))
            .sum();
        let right_cusps = self
            .events
            .iter()
            .enumerate()
            .filter(|&(i, e)| matches!(e, Event::R(k) if self.component_of_arc(self.stack_before(i)[*k]) == c))
            .count() as i64;
        Ok(writhe - right_cusps)
    }

    /// Half of (down cusps − up cusps) of the component.
    pub fn r_of_component(&self, c: usize) -> FrontResult<i64> {
        self.check_component(c)?;
        let mut twice = 0;
        for (i, e) in self.events.iter().enumerate() {
            let upper = match *e {
                Event::L(k) => self.stack_before(i + 1)[k],
                Event::R(k) => self.stack_before(i)[k],
                Event::X(_) => continue,
            };
            if self.component_of_arc(upper) != c {
                continue;
            }
            // A right cusp whose upper arc runs right is traversed
            // downwards; a left cusp in the same situation upwards.
            let down = (self.dir(upper) == 1) == matches!(e, Event::R(_));
            twice += if down { 1 } else { -1 };
        }
        Ok(twice / 2)
    }

    /// Half the signed count of crossings between two components.
    pub fn linking(&self, c1: usize, c2: usize) -> FrontResult<i64> {
        self.check_component(c1)?;
        self.check_component(c2)?;
        if c1 == c2 {
            return Err(FrontError::SameComponent(c1));
        }
        let twice: i64 = self
            .crossings()
            .filter(|&(a, b)| {
                let (ca, cb) = (self.component_of_arc(a), self.component_of_arc(b));
                (ca, cb) == (c1, c2) || (ca, cb) == (c2, c1)
            })
            .map(|(a, b)| self.crossing_sign(a, b))
            .sum();
        Ok(twice / 2)
    }

    /// `(tb, r)` of every component, in component order.
    pub fn invariants(&self) -> Vec<Invariants> {
        (0..self.component_count())
            .map(|c| Invariants::new(self.tb_of_component(c).unwrap(), self.r_of_component(c).unwrap()))
            .collect()
    }

    /// Symmetric matrix of pairwise linking numbers, zero on the diagonal.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.component_count();
        (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else { self.linking(i, j).unwrap() }).collect()).collect()
    }
}

impl fmt::Display for FrontWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FrontWord {
    type Err = FrontError;

    /// Parses the compact form printed by `Display`, e.g. `L0 X1 R0`.
    fn from_str(s: &str) -> FrontResult<Self> {
        let events = s
            .split_whitespace()
            .map(|tok| {
                let (tag, pos) = tok.split_at(1);
                let pos = pos.parse().map_err(|_| FrontError::Ascii(format!("bad event {tok:?}")))?;
                match tag {
                    "L" => Ok(Event::L(pos)),
                    "R" => Ok(Event::R(pos)),
                    "X" => Ok(Event::X(pos)),
                    _ => Err(FrontError::Ascii(format!("bad event {tok:?}"))),
                }
            })
            .collect::<FrontResult<Vec<_>>>()?;
        FrontWord::new(events)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FrontWord {
        s.parse().unwrap()
    }

    #[test]
    fn unknot() {
        let u = w("L0 R0");
        assert_eq!(u.component_count(), 1);
        assert_eq!(u.tb_of_component(0).unwrap(), -1);
        assert_eq!(u.r_of_component(0).unwrap(), 0);
    }

    #[test]
    fn zigzags() {
        assert_eq!(w("L0 L1 R0 R0").invariants(), vec![Invariants::new(-2, 1)]);
        assert_eq!(w("L0 L0 R1 R0").invariants(), vec![Invariants::new(-2, -1)]);
        let rev = w("L0 L1 R0 R0").with_reversed(vec![0]).unwrap();
        assert_eq!(rev.invariants(), vec![Invariants::new(-2, -1)]);
    }

    #[test]
    fn two_copy_of_unknot() {
        let f = w("L0 L0 X1 X1 R0 R0");
        assert_eq!(f.component_count(), 2);
        assert_eq!(f.invariants(), vec![Invariants::new(-1, 0); 2]);
        assert_eq!(f.linking(0, 1).unwrap(), -1);
        assert!(f.linking(1, 1).is_err());
        assert!(f.tb_of_component(2).is_err());
    }

    #[test]
    fn validation() {
        assert!(matches!("L0 X1".parse::<FrontWord>(), Err(FrontError::OutOfRange { .. })));
        assert!(matches!("L0 L0 R0".parse::<FrontWord>(), Err(FrontError::OpenComponent(2))));
        assert!(matches!("L1".parse::<FrontWord>(), Err(FrontError::OutOfRange { .. })));
        assert!(FrontWord::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn json() {
        let f: FrontWord = serde_json::from_str(r#"{"events":[["L",0],["R",0]]}"#).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"events":[["L",0],["R",0]]}"#);
        assert!(serde_json::from_str::<FrontWord>(r#"{"events":[["Q",0]]}"#).is_err());
        assert!(serde_json::from_str::<FrontWord>(r#"{"events":[["L",0]]}"#).is_err());
        assert!(serde_json::from_str::<FrontWord>(r#"{"events":[["L",0],["R",0]],"reversed":[1]}"#).is_err());
    }
}

//! Claim records, evaluation outcomes and the tuple prober used by evaluators.

use praxkit_core::operators::FinitePoset;
use praxkit_core::{BinRel, ExactProbSpace, Space, Subset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::gen::Constraint;

/// Tuples enumerated in full up to this many; beyond it a fixed-size sample is drawn.
pub const FULL_TUPLE_LIMIT: u64 = 16_384;
/// Sampled tuples per instance when full enumeration is too large.
pub const TUPLE_SAMPLES: u64 = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    MustPass,
    Registered,
    ExpectedFail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Undefined,
}

/// Universal claims fail on a hit; existential claims pass on one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    Forall,
    Exists,
}

/// Relation sizes a claim is run on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Up to the configured `n_max`.
    Base,
    /// One point beyond `n_max`, within the enumeration limit.
    Extended,
    /// At most the given size.
    Cap(usize),
}

pub type RelEval = fn(&Space, &mut Probe) -> Found;
pub type PosetEval = fn(&FinitePoset, &mut Probe) -> Found;
pub type ProbEval = fn(&ExactProbSpace, &mut Probe) -> Found;

#[derive(Clone, Copy)]
pub enum Domain {
    Rel(Constraint, RelEval),
    Fixture(fn() -> BinRel, RelEval),
    Poset(PosetEval),
    Prob(ProbEval),
}

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// Formula or law name.
    pub statement: &'static str,
    pub expected: Expected,
    pub quantifier: Quantifier,
    pub domain: Domain,
    pub bound: Bound,
    /// Also run on the seeded samples at the sample size.
    pub sampled: bool,
}

impl Claim {
    pub fn forall(id: &'static str, statement: &'static str, domain: Domain) -> Self {
        Self {
            id,
            statement,
            expected: Expected::Registered,
            quantifier: Quantifier::Forall,
            domain,
            bound: Bound::Base,
            sampled: false,
        }
    }

    pub fn exists(id: &'static str, statement: &'static str, domain: Domain) -> Self {
        Self { quantifier: Quantifier::Exists, ..Self::forall(id, statement, domain) }
    }

    pub fn must_pass(self) -> Self {
        Self { expected: Expected::MustPass, ..self }
    }

    pub fn expected_fail(self) -> Self {
        Self { expected: Expected::ExpectedFail, ..self }
    }

    pub fn sampled(self) -> Self {
        Self { sampled: true, ..self }
    }

    pub fn extended(self) -> Self {
        Self { bound: Bound::Extended, ..self }
    }

    pub fn cap(self, n: usize) -> Self {
        Self { bound: Bound::Cap(n), ..self }
    }
}

/// Named sets and an optional note locating a hit inside an instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub sets: Vec<(String, Subset)>,
    pub note: Option<String>,
}

impl Witness {
    pub fn sets(sets: &[(&str, Subset)]) -> Self {
        Self { sets: sets.iter().map(|&(k, v)| (k.to_string(), v)).collect(), note: None }
    }

    pub fn note(note: impl Into<String>) -> Self {
        Self { sets: Vec::new(), note: Some(note.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Result of evaluating a claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Found {
    Nothing,
    Hit(Witness),
    /// The instance does not meet the claim's premises.
    Skip,
}

impl From<Option<Witness>> for Found {
    fn from(w: Option<Witness>) -> Self {
        w.map_or(Found::Nothing, Found::Hit)
    }
}

/// Enumerates or samples argument tuples and counts every evaluation.
pub struct Probe {
    rng: ChaCha8Rng,
    pub tested: u64,
}

impl Probe {
    pub fn new(rng: ChaCha8Rng) -> Self {
        Self { rng, tested: 0 }
    }

    /// Searches `K`-tuples over `0..size` for the first hit.
    pub fn find<const K: usize>(
        &mut self,
        size: usize,
        mut f: impl FnMut([usize; K]) -> Option<Witness>,
    ) -> Option<Witness> {
        let total = (size as u64).checked_pow(K as u32).unwrap_or(u64::MAX);
        if total == 0 {
            return None;
        }
        if total <= FULL_TUPLE_LIMIT {
            for code in 0..total {
                let mut t = [0usize; K];
                let mut c = code;
                for slot in t.iter_mut().rev() {
                    *slot = (c % size as u64) as usize;
                    c /= size as u64;
                }
                self.tested += 1;
                if let Some(w) = f(t) {
                    return Some(w);
                }
            }
        } else {
            for _ in 0..TUPLE_SAMPLES {
                let t: [usize; K] = std::array::from_fn(|_| self.rng.gen_range(0..size));
                self.tested += 1;
                if let Some(w) = f(t) {
                    return Some(w);
                }
            }
        }
        None
    }

    pub fn sets1(&mut self, n: usize, mut f: impl FnMut(Subset) -> Option<Witness>) -> Option<Witness> {
        self.find(1 << n, |[a]| f(bits(a)))
    }

    pub fn sets2(&mut self, n: usize, mut f: impl FnMut(Subset, Subset) -> Option<Witness>) -> Option<Witness> {
        self.find(1 << n, |[a, b]| f(bits(a), bits(b)))
    }

    pub fn sets3(
        &mut self,
        n: usize,
        mut f: impl FnMut(Subset, Subset, Subset) -> Option<Witness>,
    ) -> Option<Witness> {
        self.find(1 << n, |[a, b, c]| f(bits(a), bits(b), bits(c)))
    }

    /// Counts one evaluation that is not a tuple search.
    pub fn tick(&mut self) {
        self.tested += 1;
    }
}

fn bits(i: usize) -> Subset {
    Subset::from_bits(i as u64)
}

/// Hit with named sets when `cond` holds.
#[macro_export]
macro_rules! hit {
    ($cond:expr $(, $name:literal => $v:expr)* $(,)?) => {
        if $cond {
            Some($crate::claim::Witness::sets(&[$(($name, $v)),*]))
        } else {
            None
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn full_enumeration_counts_every_tuple() {
        let mut p = Probe::new(ChaCha8Rng::seed_from_u64(0));
        assert!(p.sets2(3, |_, _| None).is_none());
        assert_eq!(p.tested, 64);
        let mut p = Probe::new(ChaCha8Rng::seed_from_u64(0));
        assert!(p.sets3(7, |_, _, _| None).is_none());
        assert_eq!(p.tested, TUPLE_SAMPLES);
    }

    #[test]
    fn first_hit_in_order() {
        let mut p = Probe::new(ChaCha8Rng::seed_from_u64(0));
        let w = p.find(4, |[a, b]| hit!(a + b == 3, "a" => Subset::from_bits(a as u64), "b" => Subset::from_bits(b as u64)));
        assert_eq!(w.unwrap().sets[0].1, Subset::EMPTY);
        assert_eq!(p.tested, 4);
    }
}

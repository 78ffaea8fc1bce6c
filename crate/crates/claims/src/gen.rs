//! Exhaustive and seeded generation of relations and small probability spaces.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use praxkit_core::{BinRel, ExactProbSpace, PraxError, Rational, Subset, Universe};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Largest universe for exhaustive enumeration of reflexive relations.
pub const ENUM_LIMIT: usize = 5;
/// Largest universe for exhaustive enumeration with a free diagonal.
pub const ENUM_LIMIT_ANY: usize = 4;
/// Rejection attempts before a generated candidate is repaired.
pub const MAX_REJECTIONS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Any,
    AllReflexive,
    Prax,
    QuasiOrder,
    Equivalence,
}

impl Constraint {
    pub const ALL: [Constraint; 5] =
        [Self::Any, Self::AllReflexive, Self::Prax, Self::QuasiOrder, Self::Equivalence];

    pub fn name(self) -> &'static str {
        match self {
            Self::Any => "any",
            Self::AllReflexive => "all_reflexive",
            Self::Prax => "prax",
            Self::QuasiOrder => "quasi_order",
            Self::Equivalence => "equivalence",
        }
    }

    pub fn accepts(self, r: &BinRel) -> bool {
        match self {
            Self::Any => true,
            Self::AllReflexive => r.is_reflexive(),
            Self::Prax => r.is_prax(),
            Self::QuasiOrder => r.is_quasi_order(),
            Self::Equivalence => r.is_equivalence(),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown constraint `{s}`"))
    }
}

/// Every relation on `n` numbered points satisfying `c`, in bitmask order of the free pairs.
pub fn enumerate_relations(n: usize, c: Constraint) -> praxkit_core::Result<Vec<BinRel>> {
    let limit = if c == Constraint::Any { ENUM_LIMIT_ANY } else { ENUM_LIMIT };
    if n > limit {
        return Err(PraxError::UniverseTooLarge { n, max: limit });
    }
    let universe = Universe::numbered(n)?;
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| c == Constraint::Any || x != y)
        .collect();
    let base: Vec<Subset> =
        (0..n).map(|x| if c == Constraint::Any { Subset::EMPTY } else { Subset::singleton(x) }).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut rows = base.clone();
        for (k, &(x, y)) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[x] = rows[x].with(y);
            }
        }
        let r = BinRel::from_rows(Arc::clone(&universe), rows)?;
        if c.accepts(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Deterministic relation for `(n, c, seed)`.
pub fn random_relation(n: usize, c: Constraint, seed: u64) -> praxkit_core::Result<BinRel> {
    random_relation_with(n, c, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// The `index`-th relation of the sample stream for `seed`; independent of other indices.
pub fn sample_relation(n: usize, c: Constraint, seed: u64, index: u64) -> praxkit_core::Result<BinRel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    random_relation_with(n, c, &mut rng)
}

pub fn random_relation_with<R: Rng>(n: usize, c: Constraint, rng: &mut R) -> praxkit_core::Result<BinRel> {
    let universe = Universe::numbered(n)?;
    let draw = |rng: &mut R| -> praxkit_core::Result<BinRel> {
        let density: f64 = rng.gen();
        let rows = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| (x == y && c != Constraint::Any) || rng.gen_bool(density))
                    .collect()
            })
            .collect();
        BinRel::from_rows(Arc::clone(&universe), rows)
    };
    match c {
        Constraint::Any | Constraint::AllReflexive => draw(rng),
        Constraint::QuasiOrder => Ok(draw(rng)?.sharp()),
        Constraint::Equivalence => {
            let r = draw(rng)?;
            Ok(r.union(&r.converse())?.sharp())
        }
        Constraint::Prax => {
            let mut last = draw(rng)?;
            for _ in 1..MAX_REJECTIONS {
                if last.is_prax() {
                    return Ok(last);
                }
                last = draw(rng)?;
            }
            Ok(repair_prax(last))
        }
    }
}

/// Removes pairs of violating symmetric triples until the relation is proto-transitive.
pub fn repair_prax(mut r: BinRel) -> BinRel {
    r = r.reflexive_closure();
    while let Some((x, y)) = proto_violation(&r) {
        let rows = r
            .rows()
            .iter()
            .enumerate()
            .map(|(i, &row)| if i == x { row.without(y) } else { row })
            .collect();
        r = BinRel::from_rows(r.universe().clone(), rows).expect("same shape");
    }
    r
}

/// A pair `(x, y)` of some triple with `τxy`, `τyz`, `x ≠ z` and not `τxz`.
fn proto_violation(r: &BinRel) -> Option<(usize, usize)> {
    let t = r.tau();
    let n = r.n();
    (0..n).find_map(|x| {
        t.row(x).iter().filter(|&y| y != x).find_map(|y| {
            t.row(y).iter().any(|z| z != x && z != y && !t.contains(x, z)).then_some((x, y))
        })
    })
}

/// Uniform spaces on `1..=max` outcomes followed by every other weighting in eighths.
pub fn prob_spaces(max: usize) -> Vec<ExactProbSpace> {
    let mut out: Vec<ExactProbSpace> =
        (1..=max).map(|n| ExactProbSpace::uniform(n).expect("positive size")).collect();
    for n in 1..=max {
        for w in compositions(8, n) {
            let weights: Vec<Rational> = w.into_iter().map(|k| Ratio::new(k as i64, 8)).collect();
            let space = ExactProbSpace::new(weights).expect("weights sum to one");
            if !out.contains(&space) {
                out.push(space);
            }
        }
    }
    out
}

/// Ordered `parts`-tuples of non-negative integers summing to `total`.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_relations(1, Constraint::Prax).unwrap().len(), 1);
        assert_eq!(enumerate_relations(2, Constraint::AllReflexive).unwrap().len(), 4);
        assert_eq!(enumerate_relations(2, Constraint::Prax).unwrap().len(), 4);
        assert_eq!(enumerate_relations(2, Constraint::Any).unwrap().len(), 16);
        assert_eq!(enumerate_relations(3, Constraint::Equivalence).unwrap().len(), 5);
        assert_eq!(enumerate_relations(3, Constraint::QuasiOrder).unwrap().len(), 29);
        assert!(enumerate_relations(6, Constraint::Prax).is_err());
        assert!(enumerate_relations(5, Constraint::Any).is_err());
    }

    #[test]
    fn random_relations_are_reproducible_and_valid() {
        for c in Constraint::ALL {
            for seed in 0..20 {
                let a = random_relation(6, c, seed).unwrap();
                assert_eq!(a, random_relation(6, c, seed).unwrap());
                assert!(c.accepts(&a), "{c} seed {seed}");
            }
        }
        assert_ne!(sample_relation(7, Constraint::Prax, 42, 0).unwrap(), sample_relation(7, Constraint::Prax, 42, 1).unwrap());
    }

    #[test]
    fn repair_yields_prax() {
        let u = Universe::numbered(3).unwrap();
        let r = BinRel::from_index_pairs(u, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap().reflexive_closure();
        assert!(!r.is_prax());
        assert!(repair_prax(r).is_prax());
    }

    #[test]
    fn probability_spaces() {
        let all = prob_spaces(4);
        assert!(all.iter().all(|p| p.n() <= 4));
        assert_eq!(all.iter().filter(|p| p.n() == 2).count(), 9);
    }
}

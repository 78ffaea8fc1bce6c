//! Degrees of dependence between subsets, positive/negative dependence, local bases and
//! exact probabilistic dependence.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::approx::{powerset_guard, POWERSET_LIMIT};
use crate::error::{PraxError, Result};
use crate::granules::Space;
use crate::set::{maximal, minimal, Subset};

/// Family of admissible dependence values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NuFamily {
    /// Lower definite sets of the base relation.
    DeltaL,
    /// Upper definite sets of the base relation.
    DeltaU,
    /// Lower definite sets of the transitive extension.
    DeltaLw,
    /// Upper approximations under the transitive extension.
    GammaUw,
}

impl std::str::FromStr for NuFamily {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "delta_l" => Ok(Self::DeltaL),
            "delta_u" => Ok(Self::DeltaU),
            "delta_lw" => Ok(Self::DeltaLw),
            "gamma_uw" => Ok(Self::GammaUw),
            _ => Err(format!("unknown value family `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaMode {
    /// Largest admissible value inside the common granules.
    Inf,
    /// Least admissible value containing the common granules.
    Sup,
}

/// Granules aggregated by the degree, plus the admissible values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepContext {
    pub granules: Vec<Subset>,
    pub values: Vec<Subset>,
    pub mode: BetaMode,
}

impl DepContext {
    /// Base successor granules with `nu` drawn from `base` or from `wide`.
    pub fn new(base: &Space, wide: &Space, nu: NuFamily, mode: BetaMode) -> Result<Self> {
        let granules = base.granules(crate::GranuleKind::Succ).to_vec();
        Ok(Self { granules, values: nu_values(base, wide, nu)?, mode })
    }

    /// Granules and values both taken from `space`.
    pub fn on(space: &Space, nu: NuFamily, mode: BetaMode) -> Result<Self> {
        Self::new(space, space, nu, mode)
    }

    pub fn aggregate(&self, x: Subset, y: Subset) -> Subset {
        self.granules
            .iter()
            .filter(|g| g.is_subset(x) && g.is_subset(y))
            .fold(Subset::EMPTY, |acc, g| acc | *g)
    }

    /// Every extremal admissible value; usually exactly one.
    pub fn beta_all(&self, x: Subset, y: Subset) -> Vec<Subset> {
        let agg = self.aggregate(x, y);
        match self.mode {
            BetaMode::Inf => {
                let inside: Vec<Subset> = self.values.iter().copied().filter(|v| v.is_subset(agg)).collect();
                maximal(&inside)
            }
            BetaMode::Sup => {
                let outside: Vec<Subset> = self.values.iter().copied().filter(|v| agg.is_subset(*v)).collect();
                minimal(&outside)
            }
        }
    }

    pub fn beta(&self, x: Subset, y: Subset) -> Result<Subset> {
        match self.beta_all(x, y).as_slice() {
            [] => Err(PraxError::Undefined),
            [v] => Ok(*v),
            _ => Err(PraxError::SideConditionViolated("no unique extremal value")),
        }
    }
}

pub fn nu_values(base: &Space, wide: &Space, nu: NuFamily) -> Result<Vec<Subset>> {
    powerset_guard(base.n(), POWERSET_LIMIT)?;
    let n = base.n();
    let mut v: Vec<Subset> = match nu {
        NuFamily::DeltaL => Subset::all(n).filter(|&a| base.l(a) == a).collect(),
        NuFamily::DeltaU => Subset::all(n).filter(|&a| base.u(a) == a).collect(),
        NuFamily::DeltaLw => Subset::all(n).filter(|&a| wide.l(a) == a).collect(),
        NuFamily::GammaUw => Subset::all(n).map(|a| wide.u(a)).collect(),
    };
    v.sort();
    v.dedup();
    Ok(v)
}

impl Space {
    /// `x^l ⊆ (y^u)^c` and `y^l ⊆ (x^u)^c`.
    pub fn pn_independent(&self, x: Subset, y: Subset) -> bool {
        self.l(x).is_subset(self.complement(self.u(y))) && self.l(y).is_subset(self.complement(self.u(x)))
    }

    /// Both inclusions of [`Space::pn_independent`] fail.
    pub fn pn_dependent(&self, x: Subset, y: Subset) -> bool {
        !self.l(x).is_subset(self.complement(self.u(y))) && !self.l(y).is_subset(self.complement(self.u(x)))
    }
}

/// Minimal generating point sets for a dependence value and their self-supporting part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalBases {
    pub p: Vec<Subset>,
    pub b: Vec<Subset>,
}

impl Space {
    pub fn local_bases(&self, x: Subset, y: Subset, z: Subset) -> Result<LocalBases> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        for s in [x, y, z] {
            self.check(s)?;
        }
        let xy = x & y;
        let valid = |k: Subset| {
            z.iter().all(|a| k.iter().any(|b| self.succ(b).contains(a) && self.succ(b).is_subset(x)))
                && k.iter().all(|e| self.succ(e).is_subset(xy))
        };
        let cands: Vec<Subset> = z.subsets().filter(|&k| valid(k)).collect();
        let p = minimal(&cands);
        let mut b = p.clone();
        loop {
            let keep: Vec<Subset> = b
                .iter()
                .copied()
                .filter(|k| {
                    k.iter().all(|a| self.succ(a).iter().all(|pt| b.iter().any(|j| j.contains(pt))))
                })
                .collect();
            if keep.len() == b.len() {
                break;
            }
            b = keep;
        }
        Ok(LocalBases { p, b })
    }
}

/// Scalars usable as probability weights.
pub trait Weight: num_traits::Num + Clone + PartialOrd + Debug + Send + Sync {}

impl<T: num_traits::Num + Clone + PartialOrd + Debug + Send + Sync> Weight for T {}

/// Finitely many outcomes with non-negative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteProbSpace<T> {
    weights: Vec<T>,
}

impl<T: Weight> FiniteProbSpace<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if weights.is_empty() {
            return Err(PraxError::InvalidWeights("no outcomes"));
        }
        if weights.len() > crate::set::MAX_POINTS {
            return Err(PraxError::UniverseTooLarge { n: weights.len(), max: crate::set::MAX_POINTS });
        }
        if weights.iter().any(|w| *w < T::zero()) {
            return Err(PraxError::InvalidWeights("negative weight"));
        }
        let total = weights.iter().cloned().fold(T::zero(), |a, b| a + b);
        if total != T::one() {
            return Err(PraxError::InvalidWeights("weights do not sum to one"));
        }
        Ok(Self { weights })
    }

    /// Equal weight on each of `n` outcomes.
    pub fn uniform(n: usize) -> Result<Self>
    where
        T: num_traits::FromPrimitive,
    {
        let w = T::one() / T::from_usize(n.max(1)).ok_or(PraxError::InvalidWeights("size"))?;
        Self::normalize(vec![w; n])
    }

    /// Rescales non-negative weights to sum to one.
    pub fn normalize(weights: Vec<T>) -> Result<Self> {
        let total = weights.iter().cloned().fold(T::zero(), |a, b| a + b);
        if total.is_zero() {
            return Err(PraxError::InvalidWeights("weights sum to zero"));
        }
        let scaled: Vec<T> = weights.into_iter().map(|w| w / total.clone()).collect();
        if scaled.iter().any(|w| *w < T::zero()) {
            return Err(PraxError::InvalidWeights("negative weight"));
        }
        Ok(Self { weights: scaled })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn p(&self, event: Subset) -> T {
        event.iter().fold(T::zero(), |acc, i| acc + self.weights[i].clone())
    }

    /// `p(x ∩ y) − p(x)·p(y)`.
    pub fn dep(&self, x: Subset, y: Subset) -> T {
        self.p(x & y) - self.p(x) * self.p(y)
    }

    /// `p(x)·p(y) < p(x ∩ y)`.
    pub fn pi(&self, x: Subset, y: Subset) -> bool {
        self.p(x) * self.p(y) < self.p(x & y)
    }

    /// `p(x ∩ y) < p(x)·p(y)`.
    pub fn sigma(&self, x: Subset, y: Subset) -> bool {
        self.p(x & y) < self.p(x) * self.p(y)
    }

    /// `p(x ∩ y) = 0`.
    pub fn wme(&self, x: Subset, y: Subset) -> bool {
        self.p(x & y).is_zero()
    }

    pub fn complement(&self, x: Subset) -> Subset {
        x.complement(self.n())
    }

    pub fn is_certain(&self, x: Subset) -> bool {
        self.p(x) == T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::relation::BinRel;
    use crate::set::Universe;
    use crate::{ExactProbSpace, FloatProbSpace, Rational};

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn c3_beta_has_no_common_granule() {
        let sp = Space::new(fixtures::c3());
        let ctx = DepContext::on(&sp, NuFamily::DeltaL, BetaMode::Inf).unwrap();
        let (x, y) = (s(&[0, 1]), s(&[1, 2]));
        assert_eq!(ctx.beta(x, y).unwrap(), Subset::EMPTY);
        assert_eq!(sp.l(x) & sp.l(y), s(&[1]));
    }

    #[test]
    fn classical_beta_is_meet_of_lowers() {
        let u = Universe::numbered(4).unwrap();
        let eq = BinRel::from_index_pairs(u, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap().reflexive_closure();
        let sp = Space::new(eq);
        let ctx = DepContext::on(&sp, NuFamily::DeltaL, BetaMode::Inf).unwrap();
        for x in Subset::all(4) {
            assert_eq!(ctx.beta(x, x).unwrap(), sp.l(x));
            for y in Subset::all(4) {
                assert_eq!(ctx.beta(x, y).unwrap(), sp.l(x) & sp.l(y));
                let lb = sp.local_bases(x, y, ctx.beta(x, y).unwrap()).unwrap();
                assert_eq!(lb.p, lb.b);
            }
        }
    }

    #[test]
    fn sup_mode_can_be_undefined() {
        let sp = Space::new(fixtures::c3());
        let ctx = DepContext { granules: sp.granules(crate::GranuleKind::Succ).to_vec(), values: vec![], mode: BetaMode::Sup };
        assert_eq!(ctx.beta(s(&[0]), s(&[0])), Err(PraxError::Undefined));
    }

    #[test]
    fn empty_value_has_empty_basis() {
        let sp = Space::new(fixtures::c3());
        let lb = sp.local_bases(s(&[0, 1]), s(&[1, 2]), Subset::EMPTY).unwrap();
        assert_eq!(lb.p, vec![Subset::EMPTY]);
    }

    #[test]
    fn pn_on_diagonal() {
        let sp = Space::new(BinRel::diagonal(Universe::numbered(3).unwrap()));
        assert!(sp.pn_independent(s(&[0]), s(&[1, 2])));
        assert!(sp.pn_dependent(s(&[0, 1]), s(&[0, 1])));
    }

    #[test]
    fn uniform_two_outcomes() {
        let sp = ExactProbSpace::uniform(2).unwrap();
        let x = s(&[0]);
        assert_eq!(sp.dep(x, x), Rational::new(1, 4));
        assert!(sp.sigma(x, sp.complement(x)));
        assert!(sp.wme(x, sp.complement(x)));
    }

    #[test]
    fn weights_validated() {
        assert!(ExactProbSpace::new(vec![Rational::new(1, 2)]).is_err());
        assert!(ExactProbSpace::new(vec![Rational::new(3, 2), Rational::new(-1, 2)]).is_err());
        let f = FloatProbSpace::new(vec![0.25, 0.75]).unwrap();
        assert!(f.pi(s(&[0]), s(&[0])));
    }
}

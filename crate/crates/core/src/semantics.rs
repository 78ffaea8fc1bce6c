//! Dependence between approximation pairs: the one-point completion, paired degrees, the
//! induced relation on the transitive side and the falls-down construction.

use serde::{Deserialize, Serialize};

use crate::algebra::{PvAlgebra, TauMap};
use crate::dependence::{nu_values, BetaMode, DepContext, NuFamily};
use crate::error::Result;
use crate::granules::{GranuleKind, Space};
use crate::relation::BinRel;
use crate::rough::RoughPair;
use crate::set::Subset;

/// Element of `ℛ(S) ∪ ℛ_w(S) ∪ {0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StarElem {
    Zero,
    Pair(RoughPair),
}

/// Componentwise infimal degree over the granules of a transitive relation, with lower
/// definite values on the first component and upper images on the second.
#[derive(Debug, Clone)]
pub struct BetaPlus {
    first: DepContext,
    second: DepContext,
}

impl BetaPlus {
    pub fn new(wide: &Space) -> Result<Self> {
        let granules = wide.granules(GranuleKind::Succ).to_vec();
        Ok(Self {
            first: DepContext { granules: granules.clone(), values: nu_values(wide, wide, NuFamily::DeltaLw)?, mode: BetaMode::Inf },
            second: DepContext { granules, values: nu_values(wide, wide, NuFamily::GammaUw)?, mode: BetaMode::Inf },
        })
    }

    /// Degrees over `granules` with explicit value families for each component.
    pub fn from_parts(granules: Vec<Subset>, first: Vec<Subset>, second: Vec<Subset>) -> Self {
        Self {
            first: DepContext { granules: granules.clone(), values: first, mode: BetaMode::Inf },
            second: DepContext { granules, values: second, mode: BetaMode::Inf },
        }
    }

    pub fn apply(&self, a: RoughPair, b: RoughPair) -> Result<RoughPair> {
        Ok(RoughPair::new(self.first.beta(a.lower, b.lower)?, self.second.beta(a.upper, b.upper)?))
    }
}

/// Dependence semantics of a relation against a transitive extension.
#[derive(Debug)]
pub struct DepSemantics {
    tau: TauMap,
    base: PvAlgebra,
    wide: PvAlgebra,
    beta: BetaPlus,
}

impl DepSemantics {
    pub fn new(r: &BinRel, rw: &BinRel) -> Result<Self> {
        let tau = TauMap::new(r, rw)?;
        let base = PvAlgebra::new(tau.base())?;
        let wide = PvAlgebra::new(tau.wide())?;
        let beta = BetaPlus::new(tau.wide())?;
        Ok(Self { tau, base, wide, beta })
    }

    /// Extension by `R^#`.
    pub fn with_sharp(r: &BinRel) -> Result<Self> {
        Self::new(r, &r.sharp())
    }

    pub fn tau_map(&self) -> &TauMap {
        &self.tau
    }

    /// `ℛ(S)`.
    pub fn base(&self) -> &PvAlgebra {
        &self.base
    }

    /// `ℛ_w(S)`.
    pub fn wide(&self) -> &PvAlgebra {
        &self.wide
    }

    pub fn tau(&self, a: RoughPair) -> RoughPair {
        self.tau.tau(a)
    }

    /// `τ` on base pairs, `0` elsewhere.
    pub fn tau_bar(&self, a: StarElem) -> StarElem {
        match a {
            StarElem::Pair(p) if self.base.contains(p) => StarElem::Pair(self.tau(p)),
            _ => StarElem::Zero,
        }
    }

    /// Carrier of the completed structure, `0` first.
    pub fn carrier(&self) -> Vec<StarElem> {
        let mut v: Vec<StarElem> = self
            .base
            .elements()
            .iter()
            .chain(self.wide.elements())
            .map(|&p| StarElem::Pair(p))
            .collect();
        v.push(StarElem::Zero);
        v.sort();
        v.dedup();
        v
    }

    pub fn beta_plus(&self, a: RoughPair, b: RoughPair) -> Result<RoughPair> {
        self.beta.apply(a, b)
    }

    /// `β⁺(α, τ(α))`.
    pub fn varrho(&self, a: RoughPair) -> Result<RoughPair> {
        self.beta_plus(a, self.tau(a))
    }

    /// Pairs `(τ(β), ϱ(β))` over all base pairs `β`, sorted and deduplicated.
    pub fn upsilon(&self) -> Result<Vec<(RoughPair, RoughPair)>> {
        let mut out = self
            .base
            .elements()
            .iter()
            .map(|&b| Ok((self.tau(b), self.varrho(b)?)))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// Falls-down maps on the pairs `(A^{l_o}, A^{u_o})`. Paired degrees run over the
/// symmetric granules with `l_o`-definite and `u_o`-image values.
#[derive(Debug)]
pub struct FallsDown {
    space: Space,
    pairs: Vec<RoughPair>,
    beta: BetaPlus,
}

impl FallsDown {
    pub fn new(r: &BinRel) -> Result<Self> {
        let space = Space::new(r.clone());
        crate::approx::powerset_guard(space.n(), crate::approx::POWERSET_LIMIT)?;
        let mut pairs: Vec<RoughPair> = Subset::all(space.n())
            .map(|a| {
                RoughPair::new(
                    space.approx(a, crate::ApproxKind::Lo),
                    space.approx(a, crate::ApproxKind::Uo),
                )
            })
            .collect();
        pairs.sort();
        pairs.dedup();
        let mut granules = space.granules(GranuleKind::Sym).to_vec();
        granules.sort();
        granules.dedup();
        let mut lows: Vec<Subset> = pairs.iter().map(|p| p.lower).collect();
        let mut ups: Vec<Subset> = pairs.iter().map(|p| p.upper).collect();
        for v in [&mut lows, &mut ups] {
            v.sort();
            v.dedup();
        }
        let beta = BetaPlus::from_parts(granules, lows, ups);
        Ok(Self { space, pairs, beta })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// `ℛ_o(S)`.
    pub fn pairs(&self) -> &[RoughPair] {
        &self.pairs
    }

    /// `∪_{y ∈ g} [y]`.
    pub fn integral(&self, g: Subset) -> Subset {
        self.space.succ_union(g)
    }

    /// `∪ {∫([y]_o) : [y]_o ⊆ a}`.
    pub fn contour(&self, a: Subset) -> Subset {
        (0..self.space.n())
            .map(|y| self.space.sym(y))
            .filter(|g| g.is_subset(a))
            .fold(Subset::EMPTY, |acc, g| acc | self.integral(g))
    }

    pub fn ltimes(&self, a: RoughPair) -> RoughPair {
        RoughPair::new(self.contour(a.lower), self.contour(a.upper))
    }

    pub fn beta_plus(&self, a: RoughPair, b: RoughPair) -> Result<RoughPair> {
        self.beta.apply(a, b)
    }

    /// `{β⁺(α, γ) : ⋉γ = ⋉α}`.
    pub fn pi_set(&self, a: RoughPair) -> Result<Vec<RoughPair>> {
        let target = self.ltimes(a);
        let mut out = self
            .pairs
            .iter()
            .filter(|&&g| self.ltimes(g) == target)
            .map(|&g| self.beta_plus(a, g))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn pi(&self, a: RoughPair, v: RoughPair) -> Result<bool> {
        Ok(self.pi_set(a)?.contains(&v))
    }

    /// `{Π_α : α ∈ ℛ_o(S)}`.
    pub fn cover(&self) -> Result<Vec<Vec<RoughPair>>> {
        let mut out = self.pairs.iter().map(|&a| self.pi_set(a)).collect::<Result<Vec<_>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::relation::BinRel;
    use crate::set::Universe;

    #[test]
    fn upsilon_bounds_on_c3() {
        let sem = DepSemantics::with_sharp(&fixtures::c3()).unwrap();
        let ups = sem.upsilon().unwrap();
        let bot = sem.wide().bottom();
        let top = sem.wide().top();
        assert!(ups.contains(&(bot, bot)));
        assert!(ups.contains(&(top, top)));
    }

    #[test]
    fn tau_bar_zero_outside_base() {
        let sem = DepSemantics::with_sharp(&fixtures::c3()).unwrap();
        assert_eq!(sem.tau_bar(StarElem::Zero), StarElem::Zero);
        let outside = RoughPair::new(Subset::from_indices([2]), Subset::from_indices([2]));
        if !sem.base().contains(outside) {
            assert_eq!(sem.tau_bar(StarElem::Pair(outside)), StarElem::Zero);
        }
        assert!(sem.carrier().contains(&StarElem::Zero));
    }

    #[test]
    fn symmetric_relation_integral_is_upper() {
        let u = Universe::numbered(3).unwrap();
        let tol = BinRel::from_index_pairs(u, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap().reflexive_closure();
        let fd = FallsDown::new(&tol).unwrap();
        for x in 0..3 {
            assert_eq!(fd.space().sym(x), fd.space().succ(x));
            let g = fd.space().sym(x);
            assert_eq!(fd.integral(g), fd.space().u(g));
        }
    }

    #[test]
    fn pi_reflexive_on_diagonal() {
        let d = BinRel::diagonal(Universe::numbered(3).unwrap());
        let fd = FallsDown::new(&d).unwrap();
        for &a in fd.pairs() {
            assert!(fd.pi(a, a).unwrap());
        }
    }
}

//! Choice-driven operators, closure systems and cautious closure operators.

use serde::{Deserialize, Serialize};

use crate::approx::{powerset_guard, POWERSET_LIMIT};
use crate::error::{PraxError, Result};
use crate::granules::Space;
use crate::set::{maximal, Subset};

/// Picks one member from a non-empty antichain of candidates.
pub trait Choice: Sync {
    fn choose(&self, family: &[Subset]) -> Subset;
}

/// Lexicographically least member list.
#[derive(Debug, Clone, Copy, Default)]
pub struct LexLeast;

impl Choice for LexLeast {
    fn choose(&self, family: &[Subset]) -> Subset {
        *family.iter().min_by(|a, b| a.lex_cmp(**b)).expect("non-empty family")
    }
}

/// Lexicographically greatest member list.
#[derive(Debug, Clone, Copy, Default)]
pub struct LexGreatest;

impl Choice for LexGreatest {
    fn choose(&self, family: &[Subset]) -> Subset {
        *family.iter().max_by(|a, b| a.lex_cmp(**b)).expect("non-empty family")
    }
}

impl<F: Fn(&[Subset]) -> Subset + Sync> Choice for F {
    fn choose(&self, family: &[Subset]) -> Subset {
        self(family)
    }
}

impl Space {
    fn supersets(&self, x: Subset) -> impl Iterator<Item = Subset> {
        (self.full() - x).subsets().map(move |d| x | d)
    }

    /// Supersets `y` of `x` with `y^l = x^l` and `y^u ⊆ x^{uu}`.
    pub fn heart_candidates(&self, x: Subset) -> Vec<Subset> {
        let xl = self.l(x);
        let xuu = self.u(self.u(x));
        self.supersets(x).filter(|&y| self.l(y) == xl && self.u(y).is_subset(xuu)).collect()
    }

    pub fn heart_maximal(&self, x: Subset) -> Vec<Subset> {
        maximal(&self.heart_candidates(x))
    }

    /// Upper approximation of the chosen maximal candidate.
    pub fn heart_with(&self, x: Subset, choice: &dyn Choice) -> Subset {
        self.u(choice.choose(&self.heart_maximal(x)))
    }

    pub fn heart(&self, x: Subset) -> Subset {
        self.heart_with(x, &LexLeast)
    }

    /// Maximal supersets of `x` with the same lower approximation.
    pub fn diamond_maximal(&self, x: Subset) -> Vec<Subset> {
        let xl = self.l(x);
        let cands: Vec<Subset> = self.supersets(x).filter(|&y| self.l(y) == xl).collect();
        maximal(&cands)
    }

    pub fn diamond_with(&self, x: Subset, choice: &dyn Choice) -> Subset {
        choice.choose(&self.diamond_maximal(x))
    }

    pub fn diamond(&self, x: Subset) -> Subset {
        self.diamond_with(x, &LexLeast)
    }

    /// Maximal subsets of `x` with the same upper approximation; always `{x}`.
    pub fn flat_maximal(&self, x: Subset) -> Vec<Subset> {
        let xu = self.u(x);
        let cands: Vec<Subset> = x.subsets().filter(|&y| self.u(y) == xu).collect();
        maximal(&cands)
    }

    pub fn flat_with(&self, x: Subset, choice: &dyn Choice) -> Subset {
        choice.choose(&self.flat_maximal(x))
    }

    pub fn flat(&self, x: Subset) -> Subset {
        self.flat_with(x, &LexLeast)
    }

    /// `(x^♥)^u`.
    pub fn curlyvee_with(&self, x: Subset, choice: &dyn Choice) -> Subset {
        self.u(self.heart_with(x, choice))
    }

    pub fn curlyvee(&self, x: Subset) -> Subset {
        self.curlyvee_with(x, &LexLeast)
    }

    /// `x ⊆ y ∧ x^l = y^l` forces the same choice from the maximal heart candidates.
    pub fn is_regular(&self, choice: &dyn Choice) -> Result<bool> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        let picks: Vec<Subset> = Subset::all(self.n())
            .map(|x| choice.choose(&self.heart_maximal(x)))
            .collect();
        Ok(Subset::all(self.n()).all(|x| {
            let xl = self.l(x);
            self.supersets(x)
                .filter(|&y| self.l(y) == xl)
                .all(|y| picks[x.bits() as usize] == picks[y.bits() as usize])
        }))
    }

    /// `x ↦ x^♥` for every subset, indexed by bitmask.
    pub fn heart_table(&self, choice: &dyn Choice) -> Result<Vec<Subset>> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        Ok(Subset::all(self.n()).map(|x| self.heart_with(x, choice)).collect())
    }
}

/// Which closure-system conditions a family meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureProfile {
    pub closure: bool,
    pub u_closure: bool,
    pub l_closure: bool,
    pub lu_closure: bool,
    pub bounded: bool,
}

/// Intersections of all subfamilies, the empty subfamily giving the whole universe.
pub fn subfamily_intersections(family: &[Subset], full: Subset) -> Vec<Subset> {
    let mut out = vec![full];
    let mut i = 0;
    while i < out.len() {
        let cur = out[i];
        for &f in family {
            let m = cur & f;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

impl Space {
    pub fn closure_profile(&self, family: &[Subset]) -> ClosureProfile {
        let meets = subfamily_intersections(family, self.full());
        let has = |a: Subset| family.contains(&a);
        let l_closure = meets.iter().all(|&m| has(self.l(m)));
        let u_closure = meets.iter().all(|&m| has(self.u(m)));
        let bounded = family.iter().any(|&z| family.iter().all(|&x| z.is_subset(x)))
            && family.iter().any(|&t| family.iter().all(|&x| x.is_subset(t)));
        ClosureProfile {
            closure: meets.iter().all(|&m| has(m)),
            u_closure,
            l_closure,
            lu_closure: l_closure && u_closure,
            bounded,
        }
    }
}

/// Which cautious-closure conditions an operator meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcoProfile {
    pub inclusion: bool,
    pub idempotence: bool,
    pub cautious_monotony: bool,
}

impl CcoProfile {
    pub fn is_cco(self) -> bool {
        self.inclusion && self.idempotence && self.cautious_monotony
    }
}

/// Checks an operator given as a table over all subsets of `n` points.
pub fn cco_profile(n: usize, op: &[Subset]) -> CcoProfile {
    let c = |a: Subset| op[a.bits() as usize];
    let full = Subset::full(n);
    let inclusion = Subset::all(n).all(|a| a.is_subset(c(a)));
    let idempotence = Subset::all(n).all(|a| c(c(a)) == c(a));
    let cautious_monotony = Subset::all(n).all(|a| {
        let ca = c(a);
        (ca - a).subsets().map(|d| a | d).all(|b| b.is_subset(full) && ca.is_subset(c(b)))
    });
    CcoProfile { inclusion, idempotence, cautious_monotony }
}

/// Finite partial order given by its down-sets: `below[x] = {y : y ≤ x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    below: Vec<Subset>,
}

impl FinitePoset {
    pub fn new(below: Vec<Subset>) -> Result<Self> {
        let n = below.len();
        if n == 0 {
            return Err(PraxError::EmptyUniverse);
        }
        powerset_guard(n, POWERSET_LIMIT)?;
        let full = Subset::full(n);
        let reflexive = (0..n).all(|x| below[x].contains(x) && below[x].is_subset(full));
        let antisym = (0..n).all(|x| below[x].iter().all(|y| y == x || !below[y].contains(x)));
        let trans = (0..n).all(|x| below[x].iter().all(|y| below[y].is_subset(below[x])));
        if !(reflexive && antisym && trans) {
            return Err(PraxError::SideConditionViolated("not a partial order"));
        }
        Ok(Self { below })
    }

    pub fn antichain(n: usize) -> Self {
        Self { below: (0..n).map(Subset::singleton).collect() }
    }

    pub fn chain(n: usize) -> Self {
        Self { below: (0..n).map(|x| Subset::full(x + 1)).collect() }
    }

    pub fn n(&self) -> usize {
        self.below.len()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn is_downset(&self, d: Subset) -> bool {
        d.iter().all(|x| self.below[x].is_subset(d))
    }

    /// Non-empty down-sets in bitmask order.
    pub fn ideals(&self) -> Vec<Subset> {
        Subset::all(self.n()).filter(|&d| !d.is_empty() && self.is_downset(d)).collect()
    }

    /// Every partial order on `n` points, as down-set tables.
    pub fn enumerate(n: usize) -> Vec<FinitePoset> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let mut below: Vec<Subset> = (0..n).map(Subset::singleton).collect();
            for (k, &(x, y)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    below[y] = below[y].with(x);
                }
            }
            if let Ok(p) = FinitePoset::new(below) {
                out.push(p);
            }
        }
        out
    }
}

fn meet_all(family: impl IntoIterator<Item = Subset>, full: Subset) -> Subset {
    family.into_iter().fold(full, |acc, s| acc & s)
}

/// Relevance of a collection of ideals (given as a list) for `b`.
pub fn relevant(poset: &FinitePoset, k: &[Subset], b: Subset) -> bool {
    let full = poset.full();
    if k.is_empty() || k.iter().any(|&p| !poset.is_downset(p) || p.is_empty()) {
        return false;
    }
    let top = match k.iter().copied().find(|&g| k.iter().all(|p| p.is_subset(g))) {
        Some(g) => g,
        None => return false,
    };
    if top == full || k.iter().any(|p| !p.is_subset(b)) {
        return false;
    }
    let meet = meet_all(k.iter().copied(), full);
    relevance_stable(poset, top, meet, b)
}

/// Every admissible extension keeps the intersection: each ideal inside `b` that can join a
/// collection topped below the universe already contains `meet`.
fn relevance_stable(poset: &FinitePoset, top: Subset, meet: Subset, b: Subset) -> bool {
    let full = poset.full();
    poset
        .ideals()
        .into_iter()
        .filter(|p| p.is_subset(b) && (*p | top) != full)
        .all(|p| meet.is_subset(p))
}

/// Distinct intersections of collections relevant for `z`.
pub fn relevant_intersections(poset: &FinitePoset, z: Subset) -> Vec<Subset> {
    let full = poset.full();
    let inside: Vec<Subset> = poset.ideals().into_iter().filter(|p| p.is_subset(z)).collect();
    let mut out: Vec<Subset> = Vec::new();
    for &g in inside.iter().filter(|&&g| g != full) {
        let below_g: Vec<Subset> = inside.iter().copied().filter(|p| p.is_subset(g)).collect();
        for m in subfamily_intersections(&below_g, g) {
            if relevance_stable(poset, g, m, z) && !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

/// The safe map: the common intersection of relevant collections, else the ideal hull.
pub fn safe_map(poset: &FinitePoset, z: Subset) -> Subset {
    let rel = relevant_intersections(poset, z);
    if rel.len() == 1 {
        rel[0]
    } else {
        meet_all(poset.ideals().into_iter().filter(|a| z.is_subset(*a)), poset.full())
    }
}

pub fn safe_map_table(poset: &FinitePoset) -> Vec<Subset> {
    Subset::all(poset.n()).map(|z| safe_map(poset, z)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::relation::BinRel;
    use crate::set::Universe;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn heart_on_c3() {
        let sp = Space::new(fixtures::c3());
        assert_eq!(sp.heart_candidates(s(&[0])), vec![s(&[0]), s(&[0, 2])]);
        assert_eq!(sp.heart_maximal(s(&[0])), vec![s(&[0, 2])]);
        assert_eq!(sp.heart(s(&[0])), s(&[0, 1, 2]));
    }

    #[test]
    fn heart_on_diagonal_is_identity() {
        let sp = Space::new(BinRel::diagonal(Universe::numbered(3).unwrap()));
        for x in Subset::all(3) {
            assert_eq!(sp.heart(x), x);
            assert_eq!(sp.diamond(x), x);
        }
    }

    #[test]
    fn flat_is_identity() {
        let sp = Space::new(fixtures::c3());
        for x in Subset::all(3) {
            assert_eq!(sp.flat(x), x);
        }
    }

    #[test]
    fn closure_profile_of_upper_images() {
        let sp = Space::new(fixtures::c3());
        let mut ups: Vec<Subset> = Subset::all(3).map(|x| sp.u(x)).collect();
        ups.sort();
        ups.dedup();
        let p = sp.closure_profile(&ups);
        assert!(p.u_closure && p.bounded);
    }

    #[test]
    fn meets_include_universe() {
        let m = subfamily_intersections(&[s(&[0, 1]), s(&[1, 2])], s(&[0, 1, 2]));
        assert_eq!(m, vec![s(&[1]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]);
    }

    #[test]
    fn poset_enumeration_counts() {
        assert_eq!(FinitePoset::enumerate(1).len(), 1);
        assert_eq!(FinitePoset::enumerate(2).len(), 3);
        assert_eq!(FinitePoset::enumerate(3).len(), 19);
    }

    fn brute_relevant_intersections(p: &FinitePoset, z: Subset) -> Vec<Subset> {
        let ideals = p.ideals();
        let mut out = Vec::new();
        for mask in 1u64..1 << ideals.len() {
            let k: Vec<Subset> = Subset::from_bits(mask).iter().map(|i| ideals[i]).collect();
            if relevant(p, &k, z) {
                let m = meet_all(k.iter().copied(), p.full());
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn relevant_intersections_match_brute_force() {
        for p in FinitePoset::enumerate(3) {
            for z in Subset::all(3) {
                assert_eq!(relevant_intersections(&p, z), brute_relevant_intersections(&p, z));
            }
        }
    }

    #[test]
    fn safe_map_on_chain() {
        let p = FinitePoset::chain(3);
        assert_eq!(relevant_intersections(&p, s(&[0])), vec![s(&[0])]);
        assert_eq!(safe_map(&p, s(&[0])), s(&[0]));
        assert_eq!(safe_map(&p, s(&[1])), s(&[0, 1]));
    }

    #[test]
    fn cco_of_identity() {
        let id: Vec<Subset> = Subset::all(3).collect();
        assert!(cco_profile(3, &id).is_cco());
    }
}

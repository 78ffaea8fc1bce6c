//! Rough objects: classes of roughly equal subsets and the order between them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::approx::{powerset_guard, POWERSET_LIMIT};
use crate::error::{PraxError, Result};
use crate::granules::Space;
use crate::set::Subset;

/// Lower and upper approximation of some subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RoughPair {
    pub lower: Subset,
    pub upper: Subset,
}

impl RoughPair {
    pub fn new(lower: Subset, upper: Subset) -> Self {
        Self { lower, upper }
    }

    /// Componentwise inclusion.
    pub fn leq(self, other: RoughPair) -> bool {
        self.lower.is_subset(other.lower) && self.upper.is_subset(other.upper)
    }
}

impl Space {
    pub fn rough_pair(&self, a: Subset) -> RoughPair {
        RoughPair::new(self.l(a), self.u(a))
    }

    /// `A^l ⊆ B^l` and `A^u ⊆ B^u`.
    pub fn rough_leq(&self, a: Subset, b: Subset) -> bool {
        self.rough_pair(a).leq(self.rough_pair(b))
    }

    pub fn rough_eq(&self, a: Subset, b: Subset) -> bool {
        self.rough_pair(a) == self.rough_pair(b)
    }
}

/// A block of roughly equal subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughClass {
    pub pair: RoughPair,
    /// Members in bitmask order.
    pub members: Vec<Subset>,
}

/// How an atom of [`PosetH`] looks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomType {
    /// Upper approximation is a single granule disjoint from every other granule.
    Type0,
    /// Empty lower approximation and the members form an open interval family `(∅, α)`.
    Type1,
    /// Every member has empty lower approximation.
    Type2,
    Unclassified,
}

/// Quotient of the power set by rough equality.
#[derive(Debug, Clone)]
pub struct PosetH {
    n: usize,
    classes: Vec<RoughClass>,
    by_pair: HashMap<RoughPair, usize>,
    class_of: Vec<usize>,
}

impl PosetH {
    pub fn new(space: &Space) -> Result<Self> {
        let n = space.n();
        powerset_guard(n, POWERSET_LIMIT)?;
        let mut classes: Vec<RoughClass> = Vec::new();
        let mut by_pair = HashMap::new();
        let mut class_of = Vec::with_capacity(1 << n);
        for a in Subset::all(n) {
            let p = space.rough_pair(a);
            let idx = *by_pair.entry(p).or_insert_with(|| {
                classes.push(RoughClass { pair: p, members: Vec::new() });
                classes.len() - 1
            });
            classes[idx].members.push(a);
            class_of.push(idx);
        }
        Ok(Self { n, classes, by_pair, class_of })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[RoughClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &RoughClass {
        &self.classes[i]
    }

    pub fn class_of(&self, a: Subset) -> usize {
        self.class_of[a.bits() as usize]
    }

    pub fn find(&self, p: RoughPair) -> Option<usize> {
        self.by_pair.get(&p).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.classes[i].pair.leq(self.classes[j].pair)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Order by quantifying over every pair of members.
    pub fn leq_members(&self, space: &Space, i: usize, j: usize) -> bool {
        let (a, b) = (&self.classes[i].members, &self.classes[j].members);
        a.iter().all(|&x| b.iter().all(|&y| space.rough_leq(x, y)))
    }

    /// Class of the empty set.
    pub fn bottom(&self) -> usize {
        self.class_of(Subset::EMPTY)
    }

    /// Class of the whole universe.
    pub fn top(&self) -> usize {
        self.class_of(Subset::full(self.n))
    }

    /// Classes covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        let z = self.bottom();
        (0..self.len())
            .filter(|&a| self.lt(z, a) && !(0..self.len()).any(|c| self.lt(z, c) && self.lt(c, a)))
            .collect()
    }

    pub fn upper_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect()
    }

    pub fn lower_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect()
    }

    /// Least element of `set`, if it has one.
    pub fn least(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().find(|&a| set.iter().all(|&b| self.leq(a, b)))
    }

    /// Greatest element of `set`, if it has one.
    pub fn greatest(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().find(|&a| set.iter().all(|&b| self.leq(b, a)))
    }

    pub fn atom_type(&self, space: &Space, atom: usize) -> AtomType {
        let c = &self.classes[atom];
        let granules = space.granules(crate::GranuleKind::Succ);
        let isolated = granules.iter().any(|&g| {
            g == c.pair.upper && granules.iter().all(|&h| h == g || !h.intersects(g))
        });
        if isolated {
            return AtomType::Type0;
        }
        if c.pair.lower.is_empty() {
            if open_interval_family(self.n, &c.members) {
                return AtomType::Type1;
            }
            return AtomType::Type2;
        }
        AtomType::Unclassified
    }

    /// For each non-bottom class, an atom below it; `Err` carries a class with none.
    pub fn atom_witnesses(&self) -> std::result::Result<Vec<(usize, usize)>, usize> {
        let atoms = self.atoms();
        let z = self.bottom();
        (0..self.len())
            .filter(|&x| x != z)
            .map(|x| atoms.iter().find(|&&a| self.leq(a, x)).map(|&a| (x, a)).ok_or(x))
            .collect()
    }

    pub fn is_atomic(&self) -> bool {
        self.atom_witnesses().is_ok()
    }

    pub fn is_downset(&self, k: &[usize]) -> bool {
        k.iter().all(|&a| (0..self.len()).all(|b| !self.leq(b, a) || k.contains(&b)))
    }

    /// Downset in which every pair has a common upper bound inside it.
    pub fn is_s_ideal(&self, k: &[usize]) -> bool {
        self.is_downset(k)
            && k.iter().all(|&a| {
                k.iter().all(|&b| self.upper_bounds(a, b).iter().any(|u| k.contains(u)))
            })
    }
}

/// `members = ⋃_{b ∈ α} {z : ∅ ⊂ z ⊂ b}` for some family `α`.
fn open_interval_family(n: usize, members: &[Subset]) -> bool {
    let inside = |z: &Subset| members.contains(z);
    let alpha: Vec<Subset> = Subset::all(n)
        .filter(|b| !b.is_empty() && !inside(b))
        .filter(|b| {
            let mut strict = b.subsets().filter(|z| !z.is_empty() && z != b).peekable();
            strict.peek().is_some() && strict.all(|z| inside(&z))
        })
        .collect();
    let mut covered: Vec<Subset> = alpha
        .iter()
        .flat_map(|b| b.subsets().filter(move |z| !z.is_empty() && z != b))
        .collect();
    covered.sort();
    covered.dedup();
    let mut m = members.to_vec();
    m.sort();
    covered == m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalKind {
    /// `x` against `z ⊂ x`.
    WeakUpper,
    /// `x` against `z ⊂ x`.
    Upper,
    /// `x` against `z ⊃ x`.
    WeakLower,
    /// `x` against `z ⊃ x`.
    Lower,
    /// Pair `x ⊂ z`, with every set strictly between behaving alike.
    Bi,
}

impl Space {
    /// Tests `x` for criticality relative to `z` under `kind`.
    pub fn critical(&self, x: Subset, z: Subset, kind: CriticalKind) -> Result<bool> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        self.check(x)?;
        self.check(z)?;
        let full = self.full();
        let above = |x: Subset| (full - x).subsets().filter(|d| !d.is_empty()).map(move |d| x | d);
        let below = |x: Subset| x.subsets().filter(move |v| *v != x);
        match kind {
            CriticalKind::WeakUpper | CriticalKind::Upper if !z.is_proper_subset(x) => {
                Err(PraxError::SideConditionViolated("relative set must be strictly below"))
            }
            CriticalKind::WeakLower | CriticalKind::Lower | CriticalKind::Bi
                if !x.is_proper_subset(z) =>
            {
                Err(PraxError::SideConditionViolated("relative set must be strictly above"))
            }
            CriticalKind::WeakUpper => {
                let xu = self.u(x);
                Ok(above(x).all(|y| self.l(y) != z || xu.is_proper_subset(self.u(y))))
            }
            CriticalKind::Upper => {
                let xu = self.u(x);
                Ok(above(x).filter(|&y| self.l(y) == z).all(|y| {
                    let yu = self.u(y);
                    below(x).filter(|&v| self.l(v) == z).all(|v| self.u(v) == xu && xu.is_proper_subset(yu))
                }))
            }
            CriticalKind::WeakLower => {
                let xl = self.l(x);
                Ok(below(x).all(|y| self.u(y) != z || self.l(y).is_proper_subset(xl)))
            }
            CriticalKind::Lower => {
                let xl = self.l(x);
                Ok(below(x).filter(|&y| self.u(y) == z).all(|y| {
                    let yl = self.l(y);
                    above(x).filter(|&v| self.u(v) == z).all(|v| yl.is_proper_subset(xl) && xl == self.l(v))
                }))
            }
            CriticalKind::Bi => {
                let (a, b) = (x, z);
                let (al, bu) = (self.l(a), self.u(b));
                let between: Vec<Subset> =
                    (b - a).subsets().filter(|d| !d.is_empty()).map(|d| a | d).filter(|&w| w != b).collect();
                Ok(between.iter().all(|&xx| {
                    between.iter().filter(|&&yy| xx.is_subset(yy)).all(|&yy| {
                        self.u(xx) == self.u(yy)
                            && self.l(xx) == self.l(yy)
                            && self.u(xx).is_proper_subset(bu)
                            && al.is_proper_subset(self.l(xx))
                    })
                }))
            }
        }
    }

    /// Every strict subset has strictly smaller lower approximation.
    pub fn lower_critical_abs(&self, x: Subset) -> bool {
        let xl = self.l(x);
        x.subsets().filter(|&y| y != x).all(|y| self.l(y).is_proper_subset(xl))
    }

    /// Upper critical relative to every strictly smaller set.
    pub fn upper_critical_abs(&self, x: Subset) -> bool {
        x.subsets()
            .filter(|&z| z != x)
            .all(|z| self.critical(x, z, CriticalKind::Upper).unwrap_or(false))
    }

    pub fn upper_critical_set(&self) -> Result<Vec<Subset>> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        Ok(Subset::all(self.n()).filter(|&x| self.upper_critical_abs(x)).collect())
    }

    pub fn lower_critical_set(&self) -> Result<Vec<Subset>> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        Ok(Subset::all(self.n()).filter(|&x| self.lower_critical_abs(x)).collect())
    }

    /// Both lower and upper critical.
    pub fn critical_set(&self) -> Result<Vec<Subset>> {
        let up = self.upper_critical_set()?;
        Ok(up.into_iter().filter(|&x| self.lower_critical_abs(x)).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BroomKind {
    Upper,
    Lower,
}

/// Universes above this size are refused by [`Space::brooms`].
pub const BROOM_LIMIT: usize = 5;

/// Maximal antichains of `items` under inclusion (maximal cliques of incomparability).
pub fn maximal_antichains(items: &[Subset]) -> Vec<Vec<Subset>> {
    assert!(items.len() <= 64);
    let k = items.len();
    let incomparable: Vec<u64> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i && !items[i].is_subset(items[j]) && !items[j].is_subset(items[i]))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut out = Vec::new();
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    bron_kerbosch(0, all, 0, &incomparable, &mut out);
    let mut res: Vec<Vec<Subset>> = out
        .into_iter()
        .map(|m| Subset::from_bits(m).iter().map(|i| items[i]).collect())
        .collect();
    res.sort();
    res
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, adj: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(r | 1 << v, p & adj[v], x & adj[v], adj, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

impl Space {
    /// Upper brooms: maximal antichains of at least two sets sharing an upper approximation.
    /// Lower brooms: the same for sets sharing a lower approximation that differs from each member.
    pub fn brooms(&self, kind: BroomKind) -> Result<Vec<Vec<Subset>>> {
        powerset_guard(self.n(), BROOM_LIMIT)?;
        let mut fibers: HashMap<Subset, Vec<Subset>> = HashMap::new();
        for a in Subset::all(self.n()) {
            match kind {
                BroomKind::Upper => fibers.entry(self.u(a)).or_default().push(a),
                BroomKind::Lower => {
                    let l = self.l(a);
                    if l != a {
                        fibers.entry(l).or_default().push(a);
                    }
                }
            }
        }
        let mut keys: Vec<Subset> = fibers.keys().copied().collect();
        keys.sort();
        let mut out = Vec::new();
        for k in keys {
            for ac in maximal_antichains(&fibers[&k]) {
                if ac.len() >= 2 {
                    out.push(ac);
                }
            }
        }
        Ok(out)
    }
}

/// Interval-like families of subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Bruinval {
    /// `[x,y]`, `(x,y)`, `[x,y)` or `(x,y]`.
    Interval { lo: Subset, hi: Subset, lo_closed: bool, hi_closed: bool },
    /// `[x,α)`, `(x,α]`, `(x,α)` or `[x,α]`: union of intervals from `lo` to members of `alpha`.
    ToFamily { lo: Subset, alpha: Vec<Subset>, lo_closed: bool, hi_closed: bool },
    /// `[α,β]` or `(α,β)`: union of intervals between members of `alpha` and of `beta`.
    Between { alpha: Vec<Subset>, beta: Vec<Subset>, closed: bool },
    /// `[[α,β]]`: `(α₁,β₁) ∪ [α₂,β₂] ∪ (α₁,β₂] ∪ [α₂,β₁)`.
    SemiClosed { alpha_open: Vec<Subset>, alpha_closed: Vec<Subset>, beta_open: Vec<Subset>, beta_closed: Vec<Subset> },
}

fn in_interval(z: Subset, lo: Subset, hi: Subset, lo_closed: bool, hi_closed: bool) -> bool {
    let low_ok = if lo_closed { lo.is_subset(z) } else { lo.is_proper_subset(z) };
    let high_ok = if hi_closed { z.is_subset(hi) } else { z.is_proper_subset(hi) };
    low_ok && high_ok
}

impl Bruinval {
    pub fn contains(&self, z: Subset) -> bool {
        match self {
            Bruinval::Interval { lo, hi, lo_closed, hi_closed } => in_interval(z, *lo, *hi, *lo_closed, *hi_closed),
            Bruinval::ToFamily { lo, alpha, lo_closed, hi_closed } => {
                alpha.iter().any(|&b| in_interval(z, *lo, b, *lo_closed, *hi_closed))
            }
            Bruinval::Between { alpha, beta, closed } => alpha
                .iter()
                .any(|&a| beta.iter().any(|&b| in_interval(z, a, b, *closed, *closed))),
            Bruinval::SemiClosed { alpha_open, alpha_closed, beta_open, beta_closed } => {
                let hit = |al: &[Subset], be: &[Subset], lc: bool, hc: bool| {
                    al.iter().any(|&a| be.iter().any(|&b| in_interval(z, a, b, lc, hc)))
                };
                hit(alpha_open, beta_open, false, false)
                    || hit(alpha_closed, beta_closed, true, true)
                    || hit(alpha_open, beta_closed, false, true)
                    || hit(alpha_closed, beta_open, true, false)
            }
        }
    }

    /// Members in bitmask order.
    pub fn members(&self, n: usize) -> Vec<Subset> {
        Subset::all(n).filter(|&z| self.contains(z)).collect()
    }
}

impl Space {
    /// Non-empty family of subsets sharing both approximations.
    pub fn is_roughly_equal(&self, family: &[Subset]) -> bool {
        match family.first() {
            None => false,
            Some(&f) => {
                let p = self.rough_pair(f);
                family.iter().all(|&a| self.rough_pair(a) == p)
            }
        }
    }

    /// Roughly equal and not extendable: the family is a whole class.
    pub fn is_full_requal(&self, family: &[Subset]) -> Result<bool> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        if !self.is_roughly_equal(family) {
            return Ok(false);
        }
        let p = self.rough_pair(family[0]);
        Ok(Subset::all(self.n()).filter(|&a| self.rough_pair(a) == p).all(|a| family.contains(&a)))
    }

    pub fn bruinval_members(&self, b: &Bruinval) -> Result<Vec<Subset>> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        Ok(b.members(self.n()))
    }
}

/// Splits a family into maximal closed intervals contained in it.
pub fn interval_decomposition(family: &[Subset]) -> Vec<(Subset, Subset)> {
    let inside = |z: Subset| family.contains(&z);
    let mut out: Vec<(Subset, Subset)> = Vec::new();
    for &lo in family {
        for &hi in family {
            if lo.is_subset(hi) && (hi - lo).subsets().all(|d| inside(lo | d)) {
                out.push((lo, hi));
            }
        }
    }
    let maximal: Vec<(Subset, Subset)> = out
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !out.iter().any(|&(c, d)| (c, d) != (a, b) && c.is_subset(a) && b.is_subset(d))
        })
        .collect();
    maximal
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
    fn c3_rough_order() {
        let sp = Space::new(fixtures::c3());
        assert!(sp.rough_leq(s(&[0]), s(&[0, 1])));
        let h = PosetH::new(&sp).unwrap();
        assert_eq!(h.class(h.bottom()).members, vec![Subset::EMPTY]);
        assert_eq!(h.class(h.top()).members, vec![s(&[0, 1, 2])]);
        for i in 0..h.len() {
            for j in 0..h.len() {
                assert_eq!(h.leq(i, j), h.leq_members(&sp, i, j));
            }
        }
    }

    #[test]
    fn diagonal_atoms_are_singletons() {
        let sp = Space::new(BinRel::diagonal(Universe::numbered(3).unwrap()));
        let h = PosetH::new(&sp).unwrap();
        let atoms = h.atoms();
        assert_eq!(atoms.len(), 3);
        for a in atoms {
            assert_eq!(h.class(a).members.len(), 1);
            assert_eq!(h.class(a).members[0].len(), 1);
            assert_eq!(h.atom_type(&sp, a), AtomType::Type0);
        }
        assert!(h.is_atomic());
    }

    #[test]
    fn diagonal_everything_critical() {
        let sp = Space::new(BinRel::diagonal(Universe::numbered(3).unwrap()));
        assert_eq!(sp.upper_critical_set().unwrap().len(), 8);
        assert!(sp.critical(s(&[0, 1]), s(&[0]), CriticalKind::Upper).unwrap());
        assert!(sp.critical(s(&[0]), s(&[0, 1]), CriticalKind::Lower).unwrap());
        assert!(sp.critical(s(&[0]), s(&[0]), CriticalKind::Upper).is_err());
    }

    #[test]
    fn full_universe_upper_critical() {
        let sp = Space::new(fixtures::c3());
        assert!(sp.upper_critical_abs(sp.full()));
    }

    #[test]
    fn c3_singletons_not_upper_broom() {
        let sp = Space::new(fixtures::c3());
        let brooms = sp.brooms(BroomKind::Upper).unwrap();
        assert!(!brooms.contains(&vec![s(&[0]), s(&[1])]));
        for b in &brooms {
            let u = sp.u(b[0]);
            assert!(b.iter().all(|&x| sp.u(x) == u));
        }
    }

    #[test]
    fn bruinval_forms() {
        let b = Bruinval::Interval { lo: s(&[0]), hi: s(&[0, 1, 2]), lo_closed: true, hi_closed: false };
        assert_eq!(b.members(3), vec![s(&[0]), s(&[0, 1]), s(&[0, 2])]);
        let open = Bruinval::ToFamily { lo: Subset::EMPTY, alpha: vec![s(&[0, 1]), s(&[2])], lo_closed: false, hi_closed: false };
        assert_eq!(open.members(3), vec![s(&[0]), s(&[1])]);
    }

    #[test]
    fn maximal_antichains_small() {
        let items = [s(&[0]), s(&[1]), s(&[0, 1])];
        let ac = maximal_antichains(&items);
        assert_eq!(ac, vec![vec![s(&[0]), s(&[1])], vec![s(&[0, 1])]]);
    }

    #[test]
    fn decomposition_covers_family() {
        let fam = vec![s(&[0]), s(&[0, 1]), s(&[2])];
        let parts = interval_decomposition(&fam);
        for z in &fam {
            assert!(parts.iter().any(|(a, b)| a.is_subset(*z) && z.is_subset(*b)));
        }
    }
}

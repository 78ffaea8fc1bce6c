//! Operations on rough objects, filters, the partial algebra of approximation pairs and
//! maps between approximation spaces of a relation and a transitive extension.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::approx::{powerset_guard, ApproxKind, POWERSET_LIMIT};
use crate::error::{PraxError, Result};
use crate::granules::Space;
use crate::relation::BinRel;
use crate::rough::{PosetH, RoughPair};
use crate::set::Subset;

/// Rough objects with their operations.
#[derive(Debug)]
pub struct HAlgebra<'a> {
    space: &'a Space,
    h: PosetH,
}

/// A lower or upper bound set together with its extremum, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub set: Vec<usize>,
    pub extremum: Option<usize>,
}

impl<'a> HAlgebra<'a> {
    pub fn new(space: &'a Space) -> Result<Self> {
        Ok(Self { space, h: PosetH::new(space)? })
    }

    pub fn h(&self) -> &PosetH {
        &self.h
    }

    pub fn space(&self) -> &Space {
        self.space
    }

    fn pair(&self, i: usize) -> RoughPair {
        self.h.class(i).pair
    }

    /// `[A^l]`.
    pub fn l(&self, i: usize) -> usize {
        self.h.class_of(self.pair(i).lower)
    }

    /// `[A^u]`.
    pub fn u(&self, i: usize) -> usize {
        self.h.class_of(self.pair(i).upper)
    }

    fn member_fold(&self, i: usize, j: usize, f: impl Fn(Subset, Subset) -> Subset) -> usize {
        let (a, b) = (&self.h.class(i).members, &self.h.class(j).members);
        let all = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .fold(Subset::EMPTY, |acc, (x, y)| acc | f(x, y));
        self.h.class_of(all)
    }

    /// Class of the union of all member intersections.
    pub fn odot(&self, i: usize, j: usize) -> usize {
        self.member_fold(i, j, |x, y| x & y)
    }

    /// Class of the union of all member unions.
    pub fn oplus(&self, i: usize, j: usize) -> usize {
        self.member_fold(i, j, |x, y| x | y)
    }

    /// Lower bounds with their greatest element.
    pub fn lb(&self, i: usize, j: usize) -> Bounds {
        let set = self.h.lower_bounds(i, j);
        let extremum = self.h.greatest(&set);
        Bounds { set, extremum }
    }

    /// Upper bounds with their least element.
    pub fn ub(&self, i: usize, j: usize) -> Bounds {
        let set = self.h.upper_bounds(i, j);
        let extremum = self.h.least(&set);
        Bounds { set, extremum }
    }

    fn lookup(&self, lower: Subset, upper: Subset) -> Result<usize> {
        self.h.find(RoughPair::new(lower, upper)).ok_or(PraxError::EmptyResult)
    }

    /// Sets with lower `(A^l ∩ B^l)^l` and upper `A^u ∪ B^u`.
    pub fn plus(&self, i: usize, j: usize) -> Result<usize> {
        let (a, b) = (self.pair(i), self.pair(j));
        self.lookup(self.space.l(a.lower & b.lower), a.upper | b.upper)
    }

    /// Sets with lower `A^l ∩ B^l` and upper `A^u ∪ B^u`.
    pub fn plus_variant(&self, i: usize, j: usize) -> Result<usize> {
        let (a, b) = (self.pair(i), self.pair(j));
        self.lookup(a.lower & b.lower, a.upper | b.upper)
    }

    /// Sets with lower `A^l ∪ B^l` and upper `A^l ∪ B^l ∪ (A^u ∩ B^u)`.
    pub fn times(&self, i: usize, j: usize) -> Result<usize> {
        let (a, b) = (self.pair(i), self.pair(j));
        let low = a.lower | b.lower;
        self.lookup(low, low | (a.upper & b.upper))
    }

    /// Sets with lower `A^l ∪ B^l` and upper `A^u ∪ B^u`.
    pub fn otimes(&self, i: usize, j: usize) -> Result<usize> {
        let (a, b) = (self.pair(i), self.pair(j));
        self.lookup(a.lower | b.lower, a.upper | b.upper)
    }

    pub fn bottom(&self) -> usize {
        self.h.bottom()
    }

    pub fn top(&self) -> usize {
        self.h.top()
    }
}

/// Which filter conditions a set of classes meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterProfile {
    pub f1: bool,
    pub f2: bool,
    pub f3: bool,
    pub f4: bool,
    pub f5: bool,
}

impl FilterProfile {
    pub fn order_filter(self) -> bool {
        self.f1
    }
    pub fn filter(self) -> bool {
        self.f1 && self.f2
    }
    pub fn prime_filter(self) -> bool {
        self.f1 && self.f2 && self.f3
    }
    pub fn prime_order_filter(self) -> bool {
        self.f1 && self.f4
    }
    pub fn strong_order_filter(self) -> bool {
        self.f1 && self.f5
    }
}

/// Filters and similar sets of classes are stored as bitmasks over class indices.
pub const FILTER_CLASS_LIMIT: usize = 20;

impl HAlgebra<'_> {
    fn all_classes(&self) -> Subset {
        Subset::full(self.h.len())
    }

    pub fn up_closure(&self, k: Subset) -> Subset {
        (0..self.h.len()).filter(|&b| k.iter().any(|a| self.h.leq(a, b))).collect()
    }

    pub fn filter_profile(&self, k: Subset) -> FilterProfile {
        let n = self.h.len();
        let one = self.top();
        let f1 = self.up_closure(k) == k;
        let f2 = k.iter().all(|x| k.contains(self.l(x)) && k.iter().all(|y| k.contains(self.oplus(x, y))));
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
        let f3 = pairs().all(|(a, b)| {
            let s = self.oplus(a, b);
            !(s != one && k.contains(s)) || k.contains(a) || k.contains(b)
        });
        let f4 = pairs().all(|(a, b)| match self.ub(a, b).extremum {
            Some(c) if c != one && k.contains(c) => k.contains(a) || k.contains(b),
            _ => true,
        });
        let f5 = k
            .iter()
            .all(|a| k.iter().all(|b| self.h.lower_bounds(a, b).iter().any(|&c| k.contains(c))));
        FilterProfile { f1, f2, f3, f4, f5 }
    }

    /// Smallest filter containing `k`.
    pub fn generated_filter(&self, k: Subset) -> Subset {
        let mut cur = k;
        loop {
            let mut next = self.up_closure(cur);
            for x in next.iter() {
                next = next.with(self.l(x));
                for y in cur.iter() {
                    next = next.with(self.oplus(x, y));
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn filter_meet(&self, f: Subset, p: Subset) -> Subset {
        f & p
    }

    pub fn filter_join(&self, f: Subset, p: Subset) -> Subset {
        self.generated_filter(f | p)
    }

    /// Non-empty filters, in bitmask order.
    pub fn filters(&self) -> Result<Vec<Subset>> {
        powerset_guard(self.h.len(), FILTER_CLASS_LIMIT)?;
        Ok(self
            .all_classes()
            .subsets()
            .filter(|k| !k.is_empty() && self.filter_profile(*k).filter())
            .collect())
    }

    /// Filters form a bounded lattice under `∩` and the generated join, and every filter is the
    /// join of the atoms below it.
    pub fn filter_lattice_atomistic(&self) -> Result<bool> {
        let fs = self.filters()?;
        let bottom = fs.iter().copied().fold(self.all_classes(), |a, b| a & b);
        if !fs.contains(&bottom) || !fs.contains(&self.all_classes()) {
            return Ok(false);
        }
        let closed = fs.iter().all(|&a| {
            fs.iter().all(|&b| fs.contains(&(a & b)) && fs.contains(&self.filter_join(a, b)))
        });
        if !closed {
            return Ok(false);
        }
        let atoms: Vec<Subset> = fs
            .iter()
            .copied()
            .filter(|&a| {
                a != bottom && !fs.iter().any(|&c| c != bottom && c != a && c.is_proper_subset(a))
            })
            .collect();
        Ok(fs.iter().filter(|&&f| f != bottom).all(|&f| {
            let join = atoms
                .iter()
                .filter(|a| a.is_subset(f))
                .fold(bottom, |acc, &a| self.filter_join(acc, a));
            join == f
        }))
    }
}

/// The pairs `(A^l, A^u)` realised in a space, with partial operations.
#[derive(Debug, Clone)]
pub struct PvAlgebra {
    n: usize,
    realized: HashSet<RoughPair>,
    pairs: Vec<RoughPair>,
}

impl PvAlgebra {
    pub fn new(space: &Space) -> Result<Self> {
        powerset_guard(space.n(), POWERSET_LIMIT)?;
        let mut pairs: Vec<RoughPair> = Subset::all(space.n()).map(|a| space.rough_pair(a)).collect();
        pairs.sort();
        pairs.dedup();
        let realized = pairs.iter().copied().collect();
        Ok(Self { n: space.n(), realized, pairs })
    }

    pub fn elements(&self) -> &[RoughPair] {
        &self.pairs
    }

    pub fn contains(&self, p: RoughPair) -> bool {
        self.realized.contains(&p)
    }

    fn realize(&self, p: RoughPair) -> Result<RoughPair> {
        if self.contains(p) {
            Ok(p)
        } else {
            Err(PraxError::Undefined)
        }
    }

    pub fn bottom(&self) -> RoughPair {
        RoughPair::new(Subset::EMPTY, Subset::EMPTY)
    }

    pub fn top(&self) -> RoughPair {
        RoughPair::new(Subset::full(self.n), Subset::full(self.n))
    }

    /// Componentwise union.
    pub fn join(&self, a: RoughPair, b: RoughPair) -> Result<RoughPair> {
        self.realize(RoughPair::new(a.lower | b.lower, a.upper | b.upper))
    }

    /// Componentwise intersection.
    pub fn meet(&self, a: RoughPair, b: RoughPair) -> Result<RoughPair> {
        self.realize(RoughPair::new(a.lower & b.lower, a.upper & b.upper))
    }

    /// `(l, u) ↦ (u^c, l^c)`.
    pub fn wcomp(&self, a: RoughPair) -> Result<RoughPair> {
        self.realize(RoughPair::new(a.upper.complement(self.n), a.lower.complement(self.n)))
    }
}

/// Partial algebra operations that need the lower approximation.
#[derive(Debug, Clone)]
pub struct PvSpace<'a> {
    pub space: &'a Space,
    pub alg: PvAlgebra,
}

impl<'a> PvSpace<'a> {
    pub fn new(space: &'a Space) -> Result<Self> {
        Ok(Self { space, alg: PvAlgebra::new(space)? })
    }

    /// `((A^l ∩ B^l)^l, (A^u ∩ B^u)^l)`.
    pub fn pmeet(&self, a: RoughPair, b: RoughPair) -> Result<RoughPair> {
        let p = RoughPair::new(self.space.l(a.lower & b.lower), self.space.l(a.upper & b.upper));
        self.alg.realize(p)
    }
}

/// Equal whenever both sides are defined.
pub fn weak_eq<T: PartialEq>(a: &Result<T>, b: &Result<T>) -> bool {
    match (a, b) {
        (Ok(x), Ok(y)) => x == y,
        _ => true,
    }
}

/// Defined together and equal when defined.
pub fn weak_star_eq<T: PartialEq>(a: &Result<T>, b: &Result<T>) -> bool {
    match (a, b) {
        (Ok(x), Ok(y)) => x == y,
        (Err(_), Err(_)) => true,
        _ => false,
    }
}

/// Closure of the sets fixed by both approximations under the Boolean operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanReport {
    pub has_bounds: bool,
    pub closed_union: bool,
    pub closed_intersection: bool,
    pub closed_complement: bool,
}

impl BooleanReport {
    pub fn is_boolean(self) -> bool {
        self.has_bounds && self.closed_union && self.closed_intersection && self.closed_complement
    }
}

pub fn definite_boolean_report(space: &Space) -> Result<BooleanReport> {
    let d = space.definites(&[ApproxKind::L, ApproxKind::U])?;
    let has = |a: Subset| d.contains(&a);
    Ok(BooleanReport {
        has_bounds: has(Subset::EMPTY) && has(space.full()),
        closed_union: d.iter().all(|&a| d.iter().all(|&b| has(a | b))),
        closed_intersection: d.iter().all(|&a| d.iter().all(|&b| has(a & b))),
        closed_complement: d.iter().all(|&a| has(space.complement(a))),
    })
}

/// Transfer of approximation pairs from a relation to a transitive extension.
#[derive(Debug)]
pub struct TauMap {
    base: Space,
    wide: Space,
}

impl TauMap {
    pub fn new(r: &BinRel, rw: &BinRel) -> Result<Self> {
        r.ensure_subrelation_of(rw)?;
        if !rw.is_transitive() {
            return Err(PraxError::NotTransitive);
        }
        Ok(Self { base: Space::new(r.clone()), wide: Space::new(rw.clone()) })
    }

    /// Extension by `R^#`.
    pub fn with_sharp(r: &BinRel) -> Self {
        Self::new(r, &r.sharp()).expect("a relation is contained in its transitive closure")
    }

    pub fn base(&self) -> &Space {
        &self.base
    }

    pub fn wide(&self) -> &Space {
        &self.wide
    }

    /// Union of the wide granules of the points of `g`.
    pub fn phi_granule(&self, g: Subset) -> Subset {
        g.iter().fold(Subset::EMPTY, |acc, z| acc | self.wide.succ(z))
    }

    /// Union of `phi_granule([x])` over base granules inside `y`.
    pub fn phi(&self, y: Subset) -> Subset {
        (0..self.base.n())
            .map(|x| self.base.succ(x))
            .filter(|g| g.is_subset(y))
            .fold(Subset::EMPTY, |acc, g| acc | self.phi_granule(g))
    }

    pub fn tau(&self, a: RoughPair) -> RoughPair {
        RoughPair::new(self.phi(a.lower), self.phi(a.upper))
    }

    /// Base pairs mapped onto `target`.
    pub fn co_rough(&self, base: &PvAlgebra, target: RoughPair) -> Vec<RoughPair> {
        base.elements().iter().copied().filter(|&p| self.tau(p) == target).collect()
    }
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
    fn h_operations_on_c3() {
        let sp = Space::new(fixtures::c3());
        let alg = HAlgebra::new(&sp).unwrap();
        let h = alg.h();
        let x = h.class_of(s(&[0]));
        assert_eq!(alg.u(x), h.class_of(s(&[0, 1])));
        assert_eq!(alg.l(x), x);
        assert_eq!(alg.oplus(x, alg.bottom()), x);
        assert_eq!(alg.odot(x, alg.top()), x);
        assert_eq!(alg.plus(x, x).unwrap(), x);
        assert_eq!(alg.times(x, x).unwrap(), x);
    }

    #[test]
    fn pv_bounds_and_complement() {
        let sp = Space::new(fixtures::c3());
        let pv = PvSpace::new(&sp).unwrap();
        let top = pv.alg.top();
        let bot = pv.alg.bottom();
        assert_eq!(pv.alg.wcomp(top).unwrap(), bot);
        assert_eq!(pv.alg.join(bot, top).unwrap(), top);
        assert_eq!(pv.pmeet(top, bot).unwrap(), bot);
    }

    #[test]
    fn weak_equalities() {
        let d: Result<u8> = Ok(1);
        let e: Result<u8> = Err(PraxError::Undefined);
        assert!(weak_eq(&d, &e));
        assert!(!weak_star_eq(&d, &e));
        assert!(weak_star_eq(&e, &e));
    }

    #[test]
    fn boolean_definites_on_c3() {
        let sp = Space::new(fixtures::c3());
        assert!(definite_boolean_report(&sp).unwrap().is_boolean());
    }

    #[test]
    fn tau_map_preserves_bounds_on_c3() {
        let c3 = fixtures::c3();
        let t = TauMap::with_sharp(&c3);
        let bot = RoughPair::new(Subset::EMPTY, Subset::EMPTY);
        let top = RoughPair::new(s(&[0, 1, 2]), s(&[0, 1, 2]));
        assert_eq!(t.tau(bot), bot);
        assert_eq!(t.tau(top), top);
    }

    #[test]
    fn tau_map_requires_transitive_superset() {
        let c3 = fixtures::c3();
        assert_eq!(TauMap::new(&c3, &c3).unwrap_err(), PraxError::NotTransitive);
        let d = BinRel::diagonal(Universe::numbered(3).unwrap());
        assert_eq!(TauMap::new(&c3, &d).unwrap_err(), PraxError::NotSubrelation);
    }

    #[test]
    fn filters_on_diagonal() {
        let sp = Space::new(BinRel::diagonal(Universe::numbered(2).unwrap()));
        let alg = HAlgebra::new(&sp).unwrap();
        let fs = alg.filters().unwrap();
        let top_only = Subset::singleton(alg.top());
        assert!(fs.contains(&top_only));
        assert!(alg.filter_profile(top_only).filter());
    }
}

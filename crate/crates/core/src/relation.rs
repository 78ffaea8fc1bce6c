//! Binary relations on a finite universe, their classification and derived relations.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{PraxError, Result};
use crate::set::{Subset, Universe};

/// Relation stored row-wise: `row(x)` holds every `y` with `R x y`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinRel {
    universe: Arc<Universe>,
    rows: Vec<Subset>,
}

impl fmt::Debug for BinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<_> = self
            .pairs()
            .map(|(x, y)| format!("({},{})", self.universe.label(x), self.universe.label(y)))
            .collect();
        write!(f, "BinRel[{}]", pairs.join(","))
    }
}

impl BinRel {
    pub fn empty(universe: Arc<Universe>) -> Self {
        let n = universe.len();
        Self { universe, rows: vec![Subset::EMPTY; n] }
    }

    pub fn diagonal(universe: Arc<Universe>) -> Self {
        let rows = (0..universe.len()).map(Subset::singleton).collect();
        Self { universe, rows }
    }

    pub fn full(universe: Arc<Universe>) -> Self {
        let n = universe.len();
        Self { rows: vec![Subset::full(n); n], universe }
    }

    pub fn from_rows(universe: Arc<Universe>, rows: Vec<Subset>) -> Result<Self> {
        let n = universe.len();
        if rows.len() != n {
            return Err(PraxError::UniverseMismatch);
        }
        for r in &rows {
            universe.check(*r)?;
        }
        Ok(Self { universe, rows })
    }

    pub fn from_index_pairs<I>(universe: Arc<Universe>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = universe.len();
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(PraxError::OutOfRange { index: i, n });
                }
            }
            r.rows[x] = r.rows[x].with(y);
        }
        Ok(r)
    }

    /// Builds from labelled pairs, optionally adding the diagonal.
    pub fn build<S: AsRef<str>>(
        universe: Arc<Universe>,
        pairs: &[(S, S)],
        reflexive_closure: bool,
    ) -> Result<Self> {
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((universe.index_of(a.as_ref())?, universe.index_of(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let r = Self::from_index_pairs(universe, idx)?;
        Ok(if reflexive_closure { r.reflexive_closure() } else { r })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `{y : R x y}`.
    pub fn row(&self, x: usize) -> Subset {
        self.rows[x]
    }

    /// `{y : R y x}`.
    pub fn col(&self, x: usize) -> Subset {
        (0..self.n()).filter(|&y| self.rows[y].contains(x)).collect()
    }

    pub fn rows(&self) -> &[Subset] {
        &self.rows
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    fn same_universe(&self, other: &BinRel) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(PraxError::UniverseMismatch)
        }
    }

    fn zip(&self, other: &BinRel, f: impl Fn(Subset, Subset) -> Subset) -> Result<BinRel> {
        self.same_universe(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| f(*a, *b)).collect();
        Ok(BinRel { universe: self.universe.clone(), rows })
    }

    pub fn union(&self, other: &BinRel) -> Result<BinRel> {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BinRel) -> Result<BinRel> {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &BinRel) -> Result<BinRel> {
        self.zip(other, |a, b| a - b)
    }

    pub fn is_subrelation(&self, other: &BinRel) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(*b)))
    }

    pub fn converse(&self) -> BinRel {
        let n = self.n();
        let mut rows = vec![Subset::EMPTY; n];
        for (x, y) in self.pairs() {
            rows[y] = rows[y].with(x);
        }
        BinRel { universe: self.universe.clone(), rows }
    }

    /// `R ∘ S`: pairs `(x, z)` with `R x y` and `S y z` for some `y`.
    pub fn compose(&self, other: &BinRel) -> Result<BinRel> {
        self.same_universe(other)?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().fold(Subset::EMPTY, |acc, y| acc | other.rows[y]))
            .collect();
        Ok(BinRel { universe: self.universe.clone(), rows })
    }

    pub fn reflexive_closure(&self) -> BinRel {
        let rows = self.rows.iter().enumerate().map(|(x, r)| r.with(x)).collect();
        BinRel { universe: self.universe.clone(), rows }
    }

    pub fn without_diagonal(&self) -> BinRel {
        let rows = self.rows.iter().enumerate().map(|(x, r)| r.without(x)).collect();
        BinRel { universe: self.universe.clone(), rows }
    }

    /// Symmetric part `R ∩ R⁻¹`.
    pub fn tau(&self) -> BinRel {
        let c = self.converse();
        self.intersection(&c).expect("same universe")
    }

    /// Union of all relational powers `R, R∘R, R∘R∘R, …`.
    pub fn sharp(&self) -> BinRel {
        let mut acc = self.clone();
        loop {
            let step = acc.compose(self).expect("same universe");
            let next = acc.union(&step).expect("same universe");
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    /// Induced relation on the points of `keep`, relabelled in order.
    pub fn restrict(&self, keep: Subset) -> BinRel {
        let pts: Vec<usize> = keep.iter().collect();
        let labels: Vec<String> = pts.iter().map(|&i| self.universe.label(i).to_string()).collect();
        let universe = Universe::new(labels).expect("non-empty distinct labels");
        let rows = pts
            .iter()
            .map(|&x| {
                pts.iter()
                    .enumerate()
                    .filter(|(_, &y)| self.contains(x, y))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        BinRel { universe, rows }
    }

    pub fn to_json(&self) -> RelationJson {
        RelationJson {
            universe: self.universe.labels().to_vec(),
            pairs: self
                .pairs()
                .map(|(x, y)| (self.universe.label(x).to_string(), self.universe.label(y).to_string()))
                .collect(),
            reflexive_closure: false,
        }
    }

    // Classification predicates.

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(x, y)| x == y || !self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n()).all(|x| self.rows[x].iter().all(|y| self.rows[y].is_subset(self.rows[x])))
    }

    /// `(R∘R) ∖ Δ ⊆ R`.
    pub fn is_weakly_transitive(&self) -> bool {
        let rr = self.compose(self).expect("same universe").without_diagonal();
        rr.is_subrelation(self).expect("same universe")
    }

    /// Symmetric part is weakly transitive.
    pub fn is_proto_transitive(&self) -> bool {
        self.tau().is_weakly_transitive()
    }

    /// `R x y, R y x, R y z, R z y` with `x, y, z` pairwise distinct give `R x z`.
    pub fn is_proto_transitive_elementwise(&self) -> bool {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.contains(x, y) || !self.contains(y, x) {
                    continue;
                }
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    if self.contains(y, z) && self.contains(z, y) && !self.contains(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `τ a b ∧ R b c → R a c` and `τ a b ∧ R c a → R c b`.
    pub fn is_semi_transitive(&self) -> bool {
        let t = self.tau();
        let ok = t.pairs().all(|(a, b)| {
            self.rows[b].is_subset(self.rows[a]) && self.col(a).is_subset(self.col(b))
        });
        ok
    }

    /// No `x` with `R^# x x`.
    pub fn is_acyclic(&self) -> bool {
        let s = self.sharp();
        (0..self.n()).all(|x| !s.contains(x, x))
    }

    pub fn is_quasi_order(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_quasi_order() && self.is_antisymmetric()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_quasi_order() && self.is_symmetric()
    }

    pub fn is_tolerance(&self) -> bool {
        self.is_reflexive() && self.is_symmetric()
    }

    /// Reflexive and proto-transitive.
    pub fn is_prax(&self) -> bool {
        self.is_reflexive() && self.is_proto_transitive()
    }

    pub fn classify(&self) -> RelationProfile {
        RelationProfile {
            reflexive: self.is_reflexive(),
            symmetric: self.is_symmetric(),
            antisymmetric: self.is_antisymmetric(),
            transitive: self.is_transitive(),
            weakly_transitive: self.is_weakly_transitive(),
            proto_transitive: self.is_proto_transitive(),
            proto_transitive_elementwise: self.is_proto_transitive_elementwise(),
            semi_transitive: self.is_semi_transitive(),
            acyclic: self.is_acyclic(),
            quasi_order: self.is_quasi_order(),
            partial_order: self.is_partial_order(),
            pseudo_order: self.is_reflexive() && self.is_antisymmetric(),
            equivalence: self.is_equivalence(),
            tolerance: self.is_tolerance(),
            prax: self.is_prax(),
        }
    }

    // Derived relations.

    /// Pairs of `R` not lying on a cycle of `R^#`.
    pub fn dot(&self) -> BinRel {
        let s = self.sharp();
        let rows = (0..self.n())
            .map(|a| self.rows[a].iter().filter(|&b| !(s.contains(a, b) && s.contains(b, a))).collect())
            .collect();
        BinRel { universe: self.universe.clone(), rows }
    }

    /// Strict neighbourhood inclusion in both directions over `R ∪ Δ`.
    pub fn lf(&self) -> BinRel {
        let o = self.reflexive_closure();
        let n = self.n();
        let succ: Vec<Subset> = (0..n).map(|x| o.col(x)).collect();
        let pred: Vec<Subset> = (0..n).map(|x| o.row(x)).collect();
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| succ[b].is_proper_subset(succ[a]) && pred[a].is_proper_subset(pred[b]))
                    .collect()
            })
            .collect();
        BinRel { universe: self.universe.clone(), rows }
    }

    /// `R^# ∩ (R^#)⁻¹`.
    pub fn cyc(&self) -> BinRel {
        self.sharp().tau()
    }

    /// `lf ∩ dot`.
    pub fn h(&self) -> BinRel {
        self.lf().intersection(&self.dot()).expect("same universe")
    }

    /// `R^# ∖ τ(R)`.
    pub fn hash_dot(&self) -> BinRel {
        self.sharp().difference(&self.tau()).expect("same universe")
    }

    /// `(R^#)` with its cyclic part removed, computed from the definition of `dot`.
    pub fn hash_dot_literal(&self) -> BinRel {
        self.sharp().dot()
    }

    /// `(R ∖ τ(R))^#`.
    pub fn dot_hash(&self) -> BinRel {
        self.difference(&self.tau()).expect("same universe").sharp()
    }

    /// `(R ∖ τ(R))^# ∪ τ(R)`.
    pub fn ortho_union(&self) -> BinRel {
        self.dot_hash().union(&self.tau()).expect("same universe")
    }

    /// Points involved in a non-trivial symmetric pair.
    pub fn symmetric_center(&self) -> Subset {
        self.tau().without_diagonal().pairs().map(|(x, _)| x).collect()
    }

    pub fn ensure_subrelation_of(&self, other: &BinRel) -> Result<()> {
        if self.is_subrelation(other)? {
            Ok(())
        } else {
            Err(PraxError::NotSubrelation)
        }
    }
}

/// Flags reported by [`BinRel::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationProfile {
    pub reflexive: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub weakly_transitive: bool,
    pub proto_transitive: bool,
    pub proto_transitive_elementwise: bool,
    pub semi_transitive: bool,
    pub acyclic: bool,
    pub quasi_order: bool,
    pub partial_order: bool,
    pub pseudo_order: bool,
    pub equivalence: bool,
    pub tolerance: bool,
    pub prax: bool,
}

/// Interchange form: `{"universe": [...], "pairs": [[x, y], ...], "reflexive_closure": bool}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub universe: Vec<String>,
    pub pairs: Vec<(String, String)>,
    #[serde(default)]
    pub reflexive_closure: bool,
}

impl RelationJson {
    pub fn to_relation(&self) -> Result<BinRel> {
        let u = Universe::new(self.universe.clone())?;
        BinRel::build(u, &self.pairs, self.reflexive_closure)
    }
}

/// Partition of the universe by an equivalence, with the induced relation on blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    /// Blocks ordered by their least member.
    pub classes: Vec<Subset>,
    /// `class_of[x]` indexes `classes`.
    pub class_of: Vec<usize>,
    /// `rel[i]` holds the block indices `j` with `(classes[i], classes[j])` related.
    pub rel: Vec<Subset>,
}

impl Quotient {
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.rel[i].contains(j)
    }
}

/// `ρ|α`: blocks `X, Y` of `alpha` are related iff some `b ∈ X`, `c ∈ Y` have `ρ b c`.
pub fn quotient_by(rho: &BinRel, alpha: &BinRel) -> Result<Quotient> {
    if !alpha.is_equivalence() {
        return Err(PraxError::NonEquivalenceTau);
    }
    rho.same_universe(alpha)?;
    let n = rho.n();
    let mut classes: Vec<Subset> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for x in 0..n {
        if class_of[x] == usize::MAX {
            let block = alpha.row(x);
            for y in block.iter() {
                class_of[y] = classes.len();
            }
            classes.push(block);
        }
    }
    let rel = classes
        .iter()
        .map(|&bx| {
            let image = bx.iter().fold(Subset::EMPTY, |acc, b| acc | rho.row(b));
            image.iter().map(|c| class_of[c]).collect()
        })
        .collect();
    Ok(Quotient { classes, class_of, rel })
}

/// `σ(Q) = Q | τ(Q)`.
pub fn sigma_quotient(q: &BinRel) -> Result<Quotient> {
    quotient_by(q, &q.tau())
}

/// Outcome of checking a strict order against the order axioms relative to `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoaProfile {
    pub po1: bool,
    pub po2: bool,
    pub po3: bool,
    pub po4: bool,
    pub po5: bool,
    /// PO1 to PO4.
    pub poa: bool,
    /// PO1, PO3, PO4.
    pub wpoa: bool,
    /// PO1 to PO5.
    pub ipoa: bool,
    /// `lt ∪ Δ` is an order-compatible quasi-order.
    pub lqo: bool,
}

/// Equal successor and predecessor neighbourhoods.
fn neighbourhood_equivalent(r: &BinRel, a: usize, b: usize) -> bool {
    r.col(a) == r.col(b) && r.row(a) == r.row(b)
}

pub fn poa_check(r: &BinRel, lt: &BinRel) -> Result<PoaProfile> {
    r.same_universe(lt)?;
    let s = r.sharp();
    let n = r.n();
    let po1 = lt.pairs().all(|(a, b)| s.contains(a, b));
    let po2 = lt.pairs().all(|(a, b)| !s.contains(b, a));
    let h = r.h();
    let po3 = h.pairs().all(|(a, b)| lt.contains(a, b));
    let po4 = (0..n).all(|a| {
        (0..n).all(|b| !neighbourhood_equivalent(r, a, b) || neighbourhood_equivalent(lt, a, b))
    });
    let po5 = lt.is_subrelation(r)?;
    let poa = po1 && po2 && po3 && po4;
    Ok(PoaProfile {
        po1,
        po2,
        po3,
        po4,
        po5,
        poa,
        wpoa: po1 && po3 && po4,
        ipoa: poa && po5,
        lqo: is_lqo(r, &lt.reflexive_closure())?,
    })
}

/// Quasi-order `q` whose off-diagonal pairs lie in `R^#` and whose strict pairs are never reversed in `R^#`.
pub fn is_lqo(r: &BinRel, q: &BinRel) -> Result<bool> {
    r.same_universe(q)?;
    if !q.is_quasi_order() {
        return Ok(false);
    }
    let s = r.sharp();
    Ok(q.pairs().all(|(a, b)| {
        let in_sharp = a == b || s.contains(a, b);
        let strict = !q.contains(b, a);
        in_sharp && !(strict && s.contains(b, a))
    }))
}

fn require_lqo(r: &BinRel, q: &BinRel) -> Result<()> {
    if is_lqo(r, q)? {
        Ok(())
    } else {
        Err(PraxError::NotInLqo)
    }
}

pub fn lqo_meet(r: &BinRel, a: &BinRel, b: &BinRel) -> Result<BinRel> {
    require_lqo(r, a)?;
    require_lqo(r, b)?;
    a.intersection(b)
}

pub fn lqo_join(r: &BinRel, a: &BinRel, b: &BinRel) -> Result<BinRel> {
    require_lqo(r, a)?;
    require_lqo(r, b)?;
    Ok(a.union(b)?.sharp())
}

/// Greatest element of the order-compatible quasi-orders: `R^# ∪ Δ`.
pub fn lqo_top(r: &BinRel) -> BinRel {
    r.sharp().reflexive_closure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c3_closure_and_profile() {
        let c3 = fixtures::c3();
        let s = c3.sharp();
        let expect = BinRel::from_index_pairs(
            c3.universe().clone(),
            [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        assert_eq!(s, expect);
        let p = c3.classify();
        assert!(p.reflexive && p.antisymmetric && !p.transitive && p.proto_transitive && p.prax);
        assert!(!p.weakly_transitive);
    }

    #[test]
    fn diagonal_is_partial_order() {
        let u = Universe::numbered(4).unwrap();
        let p = BinRel::diagonal(u).classify();
        assert!(p.partial_order && p.equivalence && p.transitive && !p.acyclic);
    }

    #[test]
    fn worked_relation_not_proto_transitive() {
        let r = fixtures::worked_relation();
        let p = r.classify();
        assert!(p.reflexive);
        assert!(!p.proto_transitive_elementwise);
        assert!(!p.proto_transitive);
        let u = r.universe();
        let (c, g, b) = (u.index_of("c").unwrap(), u.index_of("g").unwrap(), u.index_of("b").unwrap());
        assert!(r.contains(c, g) && r.contains(g, c) && r.contains(g, b) && r.contains(b, g));
        assert!(!r.contains(c, b));
    }

    #[test]
    fn quotient_of_c3_is_discrete() {
        let c3 = fixtures::c3();
        let q = sigma_quotient(&c3).unwrap();
        assert_eq!(q.classes.len(), 3);
        assert!(q.related(0, 1) && q.related(1, 2) && !q.related(0, 2));
    }

    #[test]
    fn quotient_rejects_non_equivalence_tau() {
        let u = Universe::numbered(3).unwrap();
        let t = BinRel::from_index_pairs(u, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(sigma_quotient(&t), Err(PraxError::NonEquivalenceTau));
    }

    #[test]
    fn poa_on_c3() {
        let c3 = fixtures::c3();
        let strict = c3.sharp().without_diagonal();
        let p = poa_check(&c3, &strict).unwrap();
        assert!(p.po1 && p.po2);
        let bad = BinRel::from_index_pairs(c3.universe().clone(), [(2, 0)]).unwrap();
        assert!(!poa_check(&c3, &bad).unwrap().po1);
    }

    #[test]
    fn lqo_lattice_ops() {
        let c3 = fixtures::c3();
        let top = lqo_top(&c3);
        assert!(is_lqo(&c3, &top).unwrap());
        let d = BinRel::diagonal(c3.universe().clone());
        assert_eq!(lqo_meet(&c3, &top, &d).unwrap(), d);
        assert_eq!(lqo_join(&c3, &top, &d).unwrap(), top);
        let rev = BinRel::from_index_pairs(c3.universe().clone(), [(0, 0), (1, 1), (2, 2), (1, 0)]).unwrap();
        assert_eq!(lqo_meet(&c3, &rev, &d), Err(PraxError::NotInLqo));
    }

    #[test]
    fn h_empty_for_reflexive() {
        assert!(fixtures::worked_relation().h().is_empty());
        assert!(fixtures::c3().h().is_empty());
    }

    #[test]
    fn symmetric_center_of_worked() {
        let r = fixtures::worked_relation();
        let k = r.symmetric_center();
        assert_eq!(r.universe().names(k), ["b", "c", "g", "h", "n"]);
    }

    #[test]
    fn restrict_relabels() {
        let c3 = fixtures::c3();
        let r = c3.restrict(Subset::from_indices([1, 2]));
        assert_eq!(r.universe().labels(), ["1", "2"]);
        assert!(r.contains(0, 1) && !r.contains(1, 0));
    }

    #[test]
    fn json_round_trip() {
        let c3 = fixtures::c3();
        let j = serde_json::to_string(&c3.to_json()).unwrap();
        let back: RelationJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_relation().unwrap(), c3);
    }
}

//! Neighbourhood granules of a relation, cached per relation in a [`Space`].

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{PraxError, Result};
use crate::relation::BinRel;
use crate::set::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GranuleKind {
    /// `{y : R y x}`.
    Succ,
    /// `{y : R x y}`.
    Pred,
    /// `{y : R y x ∧ R x y}`.
    Sym,
    /// `{y : R^{#·} y x}`.
    Ot,
    /// `{y : R^{#·} x y}`.
    OtI,
    /// `{y : R^{#·} y x ∧ R^{#·} x y}`.
    OtO,
}

impl GranuleKind {
    pub const ALL: [GranuleKind; 6] =
        [Self::Succ, Self::Pred, Self::Sym, Self::Ot, Self::OtI, Self::OtO];
}

/// A relation with its granulations computed once.
#[derive(Debug)]
pub struct Space {
    rel: BinRel,
    succ: Vec<Subset>,
    pred: Vec<Subset>,
    sym: Vec<Subset>,
    sharp: OnceLock<Box<Space>>,
    ot: OnceLock<[Vec<Subset>; 3]>,
}

impl Clone for Space {
    fn clone(&self) -> Self {
        Space::new(self.rel.clone())
    }
}

impl Space {
    pub fn new(rel: BinRel) -> Self {
        let n = rel.n();
        let succ: Vec<Subset> = (0..n).map(|x| rel.col(x)).collect();
        let pred: Vec<Subset> = (0..n).map(|x| rel.row(x)).collect();
        let sym = succ.iter().zip(&pred).map(|(a, b)| *a & *b).collect();
        Self { rel, succ, pred, sym, sharp: OnceLock::new(), ot: OnceLock::new() }
    }

    pub fn rel(&self) -> &BinRel {
        &self.rel
    }

    pub fn n(&self) -> usize {
        self.rel.n()
    }

    pub fn full(&self) -> Subset {
        self.rel.full_set()
    }

    pub fn complement(&self, a: Subset) -> Subset {
        a.complement(self.n())
    }

    pub fn check(&self, a: Subset) -> Result<()> {
        self.rel.universe().check(a)
    }

    /// Space of `R^#`.
    pub fn sharp(&self) -> &Space {
        self.sharp.get_or_init(|| Box::new(Space::new(self.rel.sharp())))
    }

    fn ot_granules(&self) -> &[Vec<Subset>; 3] {
        self.ot.get_or_init(|| {
            let hd = self.rel.hash_dot();
            let n = self.n();
            let ot: Vec<Subset> = (0..n).map(|x| hd.col(x)).collect();
            let oti: Vec<Subset> = (0..n).map(|x| hd.row(x)).collect();
            let oto = ot.iter().zip(&oti).map(|(a, b)| *a & *b).collect();
            [ot, oti, oto]
        })
    }

    pub fn granules(&self, kind: GranuleKind) -> &[Subset] {
        match kind {
            GranuleKind::Succ => &self.succ,
            GranuleKind::Pred => &self.pred,
            GranuleKind::Sym => &self.sym,
            GranuleKind::Ot => &self.ot_granules()[0],
            GranuleKind::OtI => &self.ot_granules()[1],
            GranuleKind::OtO => &self.ot_granules()[2],
        }
    }

    /// `[x]`.
    pub fn succ(&self, x: usize) -> Subset {
        self.succ[x]
    }

    /// `[x]_i`.
    pub fn pred(&self, x: usize) -> Subset {
        self.pred[x]
    }

    /// `[x]_o`.
    pub fn sym(&self, x: usize) -> Subset {
        self.sym[x]
    }

    pub fn nbhd(&self, x: usize, kind: GranuleKind) -> Result<Subset> {
        if x >= self.n() {
            return Err(PraxError::OutOfRange { index: x, n: self.n() });
        }
        Ok(self.granules(kind)[x])
    }

    /// Union of the successor granules of the points in `a`.
    pub fn succ_union(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| acc | self.succ[x])
    }
}

pub fn nbhd(r: &BinRel, x: usize, kind: GranuleKind) -> Result<Subset> {
    Space::new(r.clone()).nbhd(x, kind)
}

pub fn granulation(r: &BinRel, kind: GranuleKind) -> Vec<Subset> {
    Space::new(r.clone()).granules(kind).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn named(r: &BinRel, x: &str, kind: GranuleKind) -> Vec<String> {
        let u = r.universe();
        r.universe().names(nbhd(r, u.index_of(x).unwrap(), kind).unwrap())
    }

    #[test]
    fn worked_examples() {
        let r = fixtures::worked_relation();
        assert_eq!(named(&r, "a", GranuleKind::Succ), ["a", "h"]);
        assert_eq!(named(&r, "l", GranuleKind::Sym), ["l"]);
        assert_eq!(named(&r, "b", GranuleKind::Succ), ["a", "b", "g"]);
    }

    #[test]
    fn c3_successor_granulation() {
        let g = granulation(&fixtures::c3(), GranuleKind::Succ);
        let want: Vec<Subset> = vec![
            Subset::from_indices([0]),
            Subset::from_indices([0, 1]),
            Subset::from_indices([1, 2]),
        ];
        assert_eq!(g, want);
    }

    #[test]
    fn c3_ot_sym_is_empty() {
        let c3 = fixtures::c3();
        assert_eq!(nbhd(&c3, 1, GranuleKind::OtO).unwrap(), Subset::EMPTY);
        assert_eq!(nbhd(&c3, 2, GranuleKind::Ot).unwrap(), Subset::from_indices([0, 1]));
    }

    #[test]
    fn out_of_range() {
        assert!(nbhd(&fixtures::c3(), 3, GranuleKind::Succ).is_err());
    }
}

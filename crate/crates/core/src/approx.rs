//! Lower and upper approximations and the constructions built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{PraxError, Result};
use crate::granules::Space;
use crate::relation::BinRel;
use crate::set::{minimal, Subset};

/// Universes larger than this are refused by operations that scan the power set.
pub const POWERSET_LIMIT: usize = 12;

pub(crate) fn powerset_guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(PraxError::UniverseTooLarge { n, max })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ApproxKind {
    L,
    U,
    Lo,
    Uo,
    LPlus,
    UPlus,
    Li,
    Ui,
    TriUp,
    TriDown,
    Lx,
    Ux,
    LStar,
    UStar,
    LSharp,
    USharp,
    LHat,
    UHat,
}

impl ApproxKind {
    pub const ALL: [ApproxKind; 18] = [
        Self::L,
        Self::U,
        Self::Lo,
        Self::Uo,
        Self::LPlus,
        Self::UPlus,
        Self::Li,
        Self::Ui,
        Self::TriUp,
        Self::TriDown,
        Self::Lx,
        Self::Ux,
        Self::LStar,
        Self::UStar,
        Self::LSharp,
        Self::USharp,
        Self::LHat,
        Self::UHat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::L => "l",
            Self::U => "u",
            Self::Lo => "lo",
            Self::Uo => "uo",
            Self::LPlus => "l_plus",
            Self::UPlus => "u_plus",
            Self::Li => "li",
            Self::Ui => "ui",
            Self::TriUp => "tri_up",
            Self::TriDown => "tri_down",
            Self::Lx => "lx",
            Self::Ux => "ux",
            Self::LStar => "l_star",
            Self::UStar => "u_star",
            Self::LSharp => "l_sharp",
            Self::USharp => "u_sharp",
            Self::LHat => "l_hat",
            Self::UHat => "u_hat",
        }
    }
}

impl fmt::Display for ApproxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ApproxKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace('+', "_plus").replace('*', "_star").replace('#', "_sharp");
        ApproxKind::ALL
            .into_iter()
            .find(|k| k.name() == key || k.name().replace('_', "") == key)
            .ok_or_else(|| format!("unknown approximation `{s}`"))
    }
}

fn lower_by(granules: &[Subset], a: Subset) -> Subset {
    granules.iter().filter(|g| g.is_subset(a)).fold(Subset::EMPTY, |acc, g| acc | *g)
}

fn upper_by(granules: &[Subset], a: Subset) -> Subset {
    granules.iter().filter(|g| g.intersects(a)).fold(Subset::EMPTY, |acc, g| acc | *g)
}

/// Which kind of associated set to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssocKind {
    /// Members of `x` related to something outside `x`.
    F0,
    /// Points reached from `x` that relate to something outside `x`.
    F1,
    /// Members of `x` that something outside `x` relates to.
    Pi0,
    /// Points with granule inside `x` and not in `F0`.
    St,
    /// Members of `x` on which `R` is symmetric within `x`.
    Sym,
    /// Points outside `x` whose granule meets `x`.
    F0Alt,
}

impl Space {
    /// `∪{[x] : [x] ⊆ A}`.
    pub fn l(&self, a: Subset) -> Subset {
        lower_by(self.succ_granules(), a)
    }

    /// `∪{[x] : [x] ∩ A ≠ ∅}`.
    pub fn u(&self, a: Subset) -> Subset {
        upper_by(self.succ_granules(), a)
    }

    fn succ_granules(&self) -> &[Subset] {
        self.granules(crate::granules::GranuleKind::Succ)
    }

    fn sym_granules(&self) -> &[Subset] {
        self.granules(crate::granules::GranuleKind::Sym)
    }

    fn pred_granules(&self) -> &[Subset] {
        self.granules(crate::granules::GranuleKind::Pred)
    }

    /// Points `x` whose `τ`-blocks are joined by some pair of `R`.
    pub fn sigma_related(&self, x: usize, y: usize) -> bool {
        let target = self.sym(y);
        self.sym(x).iter().any(|b| self.rel().row(b).intersects(target))
    }

    fn star_upper(&self, a: Subset) -> Subset {
        let n = self.n();
        (0..n)
            .filter(|&x| self.succ(x).intersects(a))
            .filter(|&x| {
                (0..n).any(|y| {
                    x != y
                        && self.rel().contains(x, y)
                        && self.succ(y).is_subset(a)
                        && self.sigma_related(x, y)
                })
            })
            .fold(Subset::EMPTY, |acc, x| acc | self.succ(x))
    }

    fn star_lower(&self, a: Subset) -> Subset {
        let n = self.n();
        (0..n)
            .filter(|&x| self.succ(x).is_subset(a))
            .filter(|&x| (0..n).any(|y| x != y && self.succ(y).is_subset(a) && self.sigma_related(x, y)))
            .fold(Subset::EMPTY, |acc, x| acc | self.succ(x))
    }

    pub fn approx(&self, a: Subset, kind: ApproxKind) -> Subset {
        use ApproxKind::*;
        let n = self.n();
        match kind {
            L => self.l(a),
            U => self.u(a),
            Lo => lower_by(self.sym_granules(), a),
            Uo => upper_by(self.sym_granules(), a),
            LPlus => (0..n).filter(|&x| self.succ(x).is_subset(a)).collect(),
            UPlus => (0..n).filter(|&x| self.succ(x).intersects(a)).collect(),
            Li => lower_by(self.pred_granules(), a),
            Ui => upper_by(self.pred_granules(), a),
            TriUp => (0..n).filter(|&x| self.pred(x).intersects(a)).collect(),
            TriDown => (0..n).filter(|&x| self.pred(x).is_subset(a)).collect(),
            Lx => (0..n)
                .filter(|&x| self.sym(x).is_subset(a))
                .fold(Subset::EMPTY, |acc, x| acc | self.succ(x)),
            Ux => (0..n)
                .filter(|&x| self.sym(x).intersects(a))
                .fold(Subset::EMPTY, |acc, x| acc | self.succ(x)),
            LStar => self.star_lower(a),
            UStar => self.star_upper(a),
            LSharp => self.sharp().l(a),
            USharp => self.sharp().u(a),
            LHat => {
                let l = self.l(a);
                self.l(l - self.sharp().l(a))
            }
            UHat => {
                let us = self.sharp().u(a);
                self.sharp().u(us - self.u(a))
            }
        }
    }

    pub fn approx_checked(&self, a: Subset, kind: ApproxKind) -> Result<Subset> {
        self.check(a)?;
        Ok(self.approx(a, kind))
    }

    /// Subsets fixed by every listed approximation.
    pub fn definites(&self, kinds: &[ApproxKind]) -> Result<Vec<Subset>> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        Ok(Subset::all(self.n())
            .filter(|&a| kinds.iter().all(|&k| self.approx(a, k) == a))
            .collect())
    }

    /// Minimal `B ⊆ A^{l+}` whose granules cover `A^l`.
    pub fn skeletons(&self, a: Subset) -> Result<Vec<Subset>> {
        powerset_guard(self.n(), POWERSET_LIMIT)?;
        self.check(a)?;
        let base = self.approx(a, ApproxKind::LPlus);
        let target = self.l(a);
        let covers: Vec<Subset> = base.subsets().filter(|&b| self.succ_union(b) == target).collect();
        let mut out = minimal(&covers);
        out.sort_by(|x, y| x.len().cmp(&y.len()).then(x.lex_cmp(*y)));
        Ok(out)
    }

    pub fn associated(&self, x: Subset, kind: AssocKind) -> Result<Subset> {
        self.check(x)?;
        let n = self.n();
        let r = self.rel();
        let xc = self.complement(x);
        let f0 = |x: Subset| -> Subset { x.iter().filter(|&y| r.row(y).intersects(xc)).collect() };
        Ok(match kind {
            AssocKind::F0 => f0(x),
            AssocKind::F1 => (0..n)
                .filter(|&y| r.row(y).intersects(xc) && r.col(y).intersects(x))
                .collect(),
            AssocKind::Pi0 => x.iter().filter(|&y| r.col(y).intersects(xc)).collect(),
            AssocKind::St => {
                let f = f0(x);
                (0..n).filter(|&y| self.succ(y).is_subset(x) && !f.contains(y)).collect()
            }
            AssocKind::Sym => x
                .iter()
                .filter(|&y| x.iter().all(|z| r.contains(y, z) == r.contains(z, y)))
                .collect(),
            AssocKind::F0Alt => xc.iter().filter(|&y| self.succ(y).intersects(x)).collect(),
        })
    }
}

/// `{([x]_Q)^{l_R} : x ∈ S}`, indexed by `x`.
pub fn gpos(r: &BinRel, q: &BinRel) -> Result<Vec<Subset>> {
    q.ensure_subrelation_of(r)?;
    let sr = Space::new(r.clone());
    let sq = Space::new(q.clone());
    Ok((0..r.n()).map(|x| sr.l(sq.succ(x))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::relation::BinRel;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn worked_worked_values() {
        let sp = Space::new(fixtures::worked_relation());
        let u = sp.rel().universe().clone();
        let ahf = u.subset(["a", "h", "f"]).unwrap();
        assert_eq!(u.names(sp.approx(ahf, ApproxKind::L)), ["a", "f", "h"]);
        assert_eq!(u.names(sp.approx(ahf, ApproxKind::Lo)), ["a", "f"]);
        let l = u.subset(["l"]).unwrap();
        assert_eq!(sp.approx(l, ApproxKind::L), Subset::EMPTY);
        assert_eq!(u.names(sp.approx(l, ApproxKind::Lo)), ["l"]);
    }

    #[test]
    fn c3_values() {
        let sp = Space::new(fixtures::c3());
        assert_eq!(sp.approx(s(&[0]), ApproxKind::L), s(&[0]));
        assert_eq!(sp.approx(s(&[0]), ApproxKind::U), s(&[0, 1]));
        assert_eq!(sp.approx(s(&[0]), ApproxKind::UHat), s(&[0, 1, 2]));
        assert_eq!(sp.approx(s(&[0]), ApproxKind::LHat), Subset::EMPTY);
        assert_eq!(sp.approx(s(&[1, 2]), ApproxKind::L), s(&[1, 2]));
        assert_eq!(sp.approx(s(&[1, 2]), ApproxKind::LSharp), Subset::EMPTY);
    }

    #[test]
    fn c3_definites_and_skeletons() {
        let sp = Space::new(fixtures::c3());
        assert_eq!(sp.definites(&[ApproxKind::L, ApproxKind::U]).unwrap(), vec![Subset::EMPTY, s(&[0, 1, 2])]);
        assert_eq!(sp.skeletons(s(&[0, 1])).unwrap(), vec![s(&[1])]);
    }

    #[test]
    fn c3_associated() {
        let sp = Space::new(fixtures::c3());
        assert_eq!(sp.associated(s(&[0, 1]), AssocKind::F0).unwrap(), s(&[1]));
        assert_eq!(sp.associated(s(&[0, 1]), AssocKind::Pi0).unwrap(), Subset::EMPTY);
    }

    #[test]
    fn gpos_of_diagonal() {
        let c3 = fixtures::c3();
        let d = BinRel::diagonal(c3.universe().clone());
        assert_eq!(gpos(&c3, &d).unwrap(), vec![s(&[0]), Subset::EMPTY, Subset::EMPTY]);
        let big = BinRel::full(c3.universe().clone());
        assert!(matches!(gpos(&c3, &big), Err(PraxError::NotSubrelation)));
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("l+".parse::<ApproxKind>().unwrap(), ApproxKind::LPlus);
        assert_eq!("u_hat".parse::<ApproxKind>().unwrap(), ApproxKind::UHat);
        assert_eq!("lsharp".parse::<ApproxKind>().unwrap(), ApproxKind::LSharp);
        assert!("zz".parse::<ApproxKind>().is_err());
    }

    #[test]
    fn universe_checked() {
        let sp = Space::new(fixtures::c3());
        assert!(sp.approx_checked(Subset::singleton(5), ApproxKind::L).is_err());
    }
}

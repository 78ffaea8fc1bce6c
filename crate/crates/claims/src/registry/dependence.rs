//! Dependence degrees, PN-dependence and local bases.
//!
//! A law involving an undefined degree is checked only where every degree is defined.

use praxkit_core::dependence::{BetaMode, DepContext, NuFamily};
use praxkit_core::{Space, Subset};

use super::{on, prax, sub};
use crate::claim::{Claim, Found, Probe, Witness};
use crate::gen::Constraint;

pub(super) fn claims() -> Vec<Claim> {
    let eq = |f| on(Constraint::Equivalence, f);
    let refl = |f| on(Constraint::AllReflexive, f);
    vec![
        Claim::forall("DEP-CL-1", "β_i xy = x^l ∩ y^l = β_s xy", eq(cl1)),
        Claim::forall("DEP-CL-2", "βxx = x^l", eq(cl2)),
        Claim::forall("DEP-CL-3", "βxy = βyx", eq(cl3)),
        Claim::forall("DEP-CL-4", "β(βxy)x = βxy", eq(cl4)),
        Claim::forall("DEP-CL-5", "βxy ⊆ βx(y⊕z)", eq(cl5)),
        Claim::forall("DEP-CL-6", "y^l ⊆ z -> βxy ⊆ βxz", eq(cl6)),
        Claim::forall("DEP-CL-7", "βxy = βx^l y^l = βxy^l", eq(cl7)),
        Claim::forall("DEP-CL-8", "β0x = 0; βx1 = x^l", eq(cl8)),
        Claim::forall("DEP-CL-9", "x ⊆ y -> βxy = x^l", eq(cl9)),
        Claim::forall("DEP-VAG-1", "β_i xy = x^l ∩ y^l = β_s xy", refl(cl1)).expected_fail(),
        Claim::forall("DEP-VAG-2", "βxx = x^l; βxy = βyx", prax(vag2)),
        Claim::forall("DEP-VAG-3", "x ∩ y = 0 -> β_i xy = 0", prax(vag3)),
        Claim::exists("DEP-VAG-3-CONV", "β_i xy = 0 with x ∩ y ≠ 0", prax(vag3_conv)),
        Claim::forall("DEP-VAG-4", "β(βxy)x = βxy", prax(cl4)),
        Claim::forall("DEP-VAG-5", "βxy ⊆ βx(y⊕z)", prax(cl5)),
        Claim::forall("DEP-VAG-6", "y^l ⊆ z -> βxy ⊆ βxz", prax(cl6)),
        Claim::forall("DEP-VAG-7", "βxy = βx^l y^l = βxy^l", prax(cl7)),
        Claim::forall("DEP-VAG-8", "β0x = 0; βx1 = x^l", prax(cl8)),
        Claim::forall("DEP-VAG-9", "x ⊆ y -> βxy = x^l", prax(cl9)),
        Claim::forall("DEP-DU-1", "β^u xy ⊆ β^l xy", prax(du1)),
        Claim::forall("DEP-DU-2", "β^u xx ⊆ x^l; β^u xy = β^u yx", prax(du2)),
        Claim::forall("DEP-DU-3", "x ∩ y = 0 -> β^u xy = 0", prax(du3)),
        Claim::forall("DEP-DU-4", "β^u(β^u xy)x = β^u xy", prax(du4)),
        Claim::forall("DEP-DU-5", "β^u xy ⊆ β^u x(y⊕z)", prax(du5)),
        Claim::forall("DEP-DU-6", "y^l ⊆ z -> β^u xy ⊆ β^u xz", prax(du6)),
        Claim::forall("DEP-DU-7", "β^u xy = β^u x^l y^l; β^u xy^l ⊆ β^u x^u y^u", prax(du7)),
        Claim::forall("DEP-DU-8", "β^u 0x = 0; β^u x1 ⊆ x^l", prax(du8)),
        Claim::forall("DEP-DU-9", "x ⊆ y -> β^u zx ⊆ β^u zy", prax(du9)),
        Claim::forall("DEP-DU-10", "(β^u xy)^l = β^u xy", prax(du10)),
        Claim::forall("DEP-PN-1", "ς xx (x^l ≠ ∅)", prax(pn1)),
        Claim::forall("DEP-PN-2", "ς xy <-> ς yx", prax(pn2)),
        Claim::exists("DEP-PN-3", "ς xy & ς zy without ς xz", prax(pn3)),
        Claim::exists("DEP-PN-4a", "ς xy without ς x^u y^u", prax(pn4a)),
        Claim::exists("DEP-PN-4b", "ς x^u y^u without ς xy", prax(pn4b)),
        Claim::forall("DEP-PN-5", "x ∩ y = 0 -> ¬ς xy", prax(pn5)),
        Claim::forall("DEP-PN-6", "x ⊆ y -> ς xy", prax(pn6)),
        Claim::forall("DEP-BETA-PN", "βxy ≠ 0 -> ς xy", prax(beta_pn)),
        Claim::forall("DEP-BETA-PN-CL", "ς xy -> βxy ≠ 0", eq(beta_pn_cl)),
        Claim::exists("DEP-BETA-PN-CONV", "ς xy with βxy = 0", prax(beta_pn_conv)),
        Claim::forall("DEP-LB", "B_z = P_z", eq(local_bases)),
    ]
}

/// Degrees over the successor granulation with lower or upper definite values.
struct Beta {
    lower: DepContext,
    lower_sup: DepContext,
    upper: DepContext,
}

impl Beta {
    fn of(s: &Space) -> Option<Self> {
        Some(Self {
            lower: DepContext::on(s, NuFamily::DeltaL, BetaMode::Inf).ok()?,
            lower_sup: DepContext::on(s, NuFamily::DeltaL, BetaMode::Sup).ok()?,
            upper: DepContext::on(s, NuFamily::DeltaU, BetaMode::Inf).ok()?,
        })
    }

    fn l(&self, x: Subset, y: Subset) -> Option<Subset> {
        self.lower.beta(x, y).ok()
    }

    fn u(&self, x: Subset, y: Subset) -> Option<Subset> {
        self.upper.beta(x, y).ok()
    }
}

/// Searches `K`-tuples of subsets; `None` from `f` means some degree is undefined.
fn tuples<const K: usize>(
    s: &Space,
    p: &mut Probe,
    f: impl Fn(&Space, &Beta, [Subset; K]) -> Option<bool>,
) -> Found {
    let Some(b) = Beta::of(s) else { return Found::Skip };
    const NAMES: [&str; 3] = ["x", "y", "z"];
    p.find(1 << s.n(), |t: [usize; K]| {
        let a = t.map(|i| Subset::from_bits(i as u64));
        (f(s, &b, a) == Some(true)).then(|| {
            Witness::sets(&a.iter().enumerate().map(|(k, &v)| (NAMES[k], v)).collect::<Vec<_>>())
        })
    })
    .into()
}

fn cl1(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| {
        let want = s.l(x) & s.l(y);
        Some(b.l(x, y) != Some(want) || b.lower_sup.beta(x, y).ok() != Some(want))
    })
}

fn cl2(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x]| Some(b.l(x, x)? != s.l(x)))
}

fn cl3(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| Some(b.l(x, y)? != b.l(y, x)?))
}

fn cl4(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| {
        let v = b.l(x, y)?;
        Some(b.l(v, x)? != v)
    })
}

fn cl5(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y, z]| Some(!sub(b.l(x, y)?, b.l(x, y | z)?)))
}

fn cl6(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y, z]| Some(sub(s.l(y), z) && !sub(b.l(x, y)?, b.l(x, z)?)))
}

fn cl7(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| {
        let v = b.l(x, y)?;
        Some(v != b.l(s.l(x), s.l(y))? || v != b.l(x, s.l(y))?)
    })
}

fn cl8(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x]| Some(b.l(Subset::EMPTY, x)? != Subset::EMPTY || b.l(x, s.full())? != s.l(x)))
}

fn cl9(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| Some(sub(x, y) && b.l(x, y)? != s.l(x)))
}

fn vag2(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| Some(b.l(x, x)? != s.l(x) || b.l(x, y)? != b.l(y, x)?))
}

fn vag3(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| Some((x & y).is_empty() && !b.l(x, y)?.is_empty()))
}

fn vag3_conv(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| Some(b.l(x, y)?.is_empty() && !(x & y).is_empty()))
}

fn du1(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| Some(!sub(b.u(x, y)?, b.l(x, y)?)))
}

fn du2(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| Some(!sub(b.u(x, x)?, s.l(x)) || b.u(x, y)? != b.u(y, x)?))
}

fn du3(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| Some((x & y).is_empty() && !b.u(x, y)?.is_empty()))
}

fn du4(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y]| {
        let v = b.u(x, y)?;
        Some(b.u(v, x)? != v)
    })
}

fn du5(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y, z]| Some(!sub(b.u(x, y)?, b.u(x, y | z)?)))
}

fn du6(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y, z]| Some(sub(s.l(y), z) && !sub(b.u(x, y)?, b.u(x, z)?)))
}

fn du7(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| {
        let first = b.u(x, y)? != b.u(s.l(x), s.l(y))?;
        Some(first || !sub(b.u(x, s.l(y))?, b.u(s.u(x), s.u(y))?))
    })
}

fn du8(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x]| Some(!b.u(Subset::EMPTY, x)?.is_empty() || !sub(b.u(x, s.full())?, s.l(x))))
}

fn du9(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |_, b, [x, y, z]| Some(sub(x, y) && !sub(b.u(z, x)?, b.u(z, y)?)))
}

fn du10(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| {
        let v = b.u(x, y)?;
        Some(s.l(v) != v)
    })
}

fn pn1(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x]| Some(!s.l(x).is_empty() && !s.pn_dependent(x, x)))
}

fn pn2(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x, y]| Some(s.pn_dependent(x, y) != s.pn_dependent(y, x)))
}

fn pn3(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x, y, z]| {
        Some(s.pn_dependent(x, y) && s.pn_dependent(z, y) && !s.pn_dependent(x, z))
    })
}

fn pn4a(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x, y]| Some(s.pn_dependent(x, y) && !s.pn_dependent(s.u(x), s.u(y))))
}

fn pn4b(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x, y]| Some(s.pn_dependent(s.u(x), s.u(y)) && !s.pn_dependent(x, y)))
}

fn pn5(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x, y]| Some((x & y).is_empty() && s.pn_dependent(x, y)))
}

fn pn6(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, _, [x, y]| Some(sub(x, y) && !s.pn_dependent(x, y)))
}

fn beta_pn(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| Some(!b.l(x, y)?.is_empty() && !s.pn_dependent(x, y)))
}

fn beta_pn_cl(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| Some(s.pn_dependent(x, y) && b.l(x, y)?.is_empty()))
}

fn beta_pn_conv(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| Some(s.pn_dependent(x, y) && b.l(x, y)?.is_empty()))
}

fn local_bases(s: &Space, p: &mut Probe) -> Found {
    tuples(s, p, |s, b, [x, y]| {
        let lb = s.local_bases(x, y, b.l(x, y)?).ok()?;
        Some(lb.p != lb.b)
    })
}

//! Probabilistic dependence over exact rational spaces.

use praxkit_core::{ExactProbSpace, Rational, Subset};

use crate::claim::{Claim, Domain, Found, Probe};
use crate::hit;

pub(super) fn claims() -> Vec<Claim> {
    let prob = Domain::Prob;
    vec![
        Claim::forall("PRB-1", "π x y^c <-> σ y x", prob(prb1)).must_pass(),
        Claim::forall("PRB-2", "π x y <-> π y x", prob(prb2)).must_pass(),
        Claim::forall("PRB-3", "x ∩ y ≠ ∅ -> (π x a & π y a -> π (x∪y) a)", prob(prb3)).must_pass(),
        Claim::forall("PRB-4", "x ∩ y ≠ ∅ -> (σ x a & σ y a -> σ (x∪y) a)", prob(prb4)).must_pass(),
        Claim::forall("PRB-3-DISJ", "x ∩ y = ∅ -> (π x a & π y a -> π (x∪y) a)", prob(prb3_disjoint)),
        Claim::forall("PRB-4-DISJ", "x ∩ y = ∅ -> (σ x a & σ y a -> σ (x∪y) a)", prob(prb4_disjoint)),
        Claim::forall("PRB-5", "∅ ≠ x ⊆ y -> π x y", prob(prb5)).must_pass(),
        Claim::forall("PRB-6", "x ∩ y = ∅ -> σ x y (p(x)p(y) > 0)", prob(prb6)).must_pass(),
        Claim::forall("PRB-DXX", "0 ≤ ∂(x,x) ≤ 1/4", prob(dxx)).must_pass(),
        Claim::forall("PRB-DXC", "-1/4 ≤ ∂(x,x^c) ≤ 0", prob(dxc)).must_pass(),
    ]
}

fn events1(sp: &ExactProbSpace, p: &mut Probe, f: impl Fn(Subset) -> bool) -> Found {
    p.sets1(sp.n(), |x| hit!(f(x), "x" => x)).into()
}

fn events2(sp: &ExactProbSpace, p: &mut Probe, f: impl Fn(Subset, Subset) -> bool) -> Found {
    p.sets2(sp.n(), |x, y| hit!(f(x, y), "x" => x, "y" => y)).into()
}

fn events3(sp: &ExactProbSpace, p: &mut Probe, f: impl Fn(Subset, Subset, Subset) -> bool) -> Found {
    p.sets3(sp.n(), |x, y, a| hit!(f(x, y, a), "x" => x, "y" => y, "a" => a)).into()
}

fn prb1(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events2(sp, p, |x, y| sp.pi(x, sp.complement(y)) != sp.sigma(y, x))
}

fn prb2(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events2(sp, p, |x, y| sp.pi(x, y) != sp.pi(y, x))
}

fn prb3(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events3(sp, p, |x, y, a| x.intersects(y) && sp.pi(x, a) && sp.pi(y, a) && !sp.pi(x | y, a))
}

fn prb4(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events3(sp, p, |x, y, a| x.intersects(y) && sp.sigma(x, a) && sp.sigma(y, a) && !sp.sigma(x | y, a))
}

fn prb3_disjoint(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events3(sp, p, |x, y, a| !x.intersects(y) && sp.pi(x, a) && sp.pi(y, a) && !sp.pi(x | y, a))
}

fn prb4_disjoint(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events3(sp, p, |x, y, a| !x.intersects(y) && sp.sigma(x, a) && sp.sigma(y, a) && !sp.sigma(x | y, a))
}

fn prb5(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    events2(sp, p, |x, y| !x.is_empty() && x.is_subset(y) && !sp.pi(x, y))
}

fn prb6(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    let zero = Rational::from_integer(0);
    events2(sp, p, |x, y| !x.intersects(y) && sp.p(x) * sp.p(y) > zero && !sp.sigma(x, y))
}

fn dxx(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    let (zero, quarter) = (Rational::from_integer(0), Rational::new(1, 4));
    events1(sp, p, |x| {
        let d = sp.dep(x, x);
        d < zero || d > quarter
    })
}

fn dxc(sp: &ExactProbSpace, p: &mut Probe) -> Found {
    let (zero, quarter) = (Rational::from_integer(0), Rational::new(1, 4));
    events1(sp, p, |x| {
        let d = sp.dep(x, sp.complement(x));
        d < -quarter || d > zero
    })
}

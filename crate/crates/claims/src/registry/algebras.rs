//! Operations on rough objects, filters, the proto-vague partial algebra and the τ map.

use praxkit_core::algebra::{weak_eq, weak_star_eq, HAlgebra, PvSpace, TauMap};
use praxkit_core::rough::RoughPair;
use praxkit_core::{Result, Space, Subset};

use super::{incomparable, pairs_hit, pairs_witness, prax, sub};
use crate::claim::{Claim, Found, Probe, Witness};
use crate::hit;

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim::forall("HOP-L1", "(L1) LL(α) = L(α)", prax(l1)),
        Claim::forall("HOP-L2", "(L2) α ≤ β -> L(α) ≤ L(β)", prax(l2)),
        Claim::forall("HOP-L3", "(L3) L(α) = α -> α = {α^l}", prax(l3)),
        Claim::forall("HOP-U1", "(U1) U(α) ∩ UU(α) ≠ ∅ -> U(α) = UU(α)", prax(u1)),
        Claim::exists("HOP-U2", "(U2) UU(α) = ∅ does not force U(α) = ∅", prax(u2)),
        Claim::forall("HOP-U3", "(U3) α ≤ β -> U(α) ≤ U(β)", prax(u3)),
        Claim::forall("HOP-U4", "(U4) U(α) = α -> α = α^l = α^u", prax(u4)),
        Claim::forall("HOP-U5", "(U5) UL(α) ≤ U(α)", prax(u5)),
        Claim::forall("HOP-U6", "(U6) LU(α) = U(α)", prax(u6)),
        Claim::forall("HOP-CO1", "(CO1) α⊙β = β⊙α", prax(co1)),
        Claim::forall("HOP-CO2", "(CO2) α ≤ α⊙α", prax(co2)),
        Claim::forall("HOP-CO3", "(CO3) α ≤ α⊙⊤", prax(co3)),
        Claim::forall("HOP-CO4", "(CO4) α⊙α = α⊙(α⊙α) = α⊙⊤", prax(co4)),
        Claim::forall("HOP-AO1", "(AO1) α⊕β = β⊕α", prax(ao1)),
        Claim::forall("HOP-AO2", "(AO2) α ≤ α⊕β", prax(ao2)),
        Claim::forall("HOP-AO3", "(AO3) α ≤ α⊕⊥", prax(ao3)),
        Claim::forall("HOP-AO4", "(AO4) (α⊕α)⊕α = α⊕α", prax(ao4)),
        Claim::exists("HOP-AC", "(AC) α⊕(α⊙β) ≠ α in general", prax(ac)),
        Claim::forall("HOP-PLUS-I", "(+I) α+α = α", prax(plus_i)),
        Claim::forall("HOP-PLUS-C", "(+C) α+β = β+α", prax(plus_c)),
        Claim::forall("HOP-TIMES-I", "(cI) α×α = α", prax(times_i)),
        Claim::forall("HOP-TIMES-C", "(cC) α×β = β×α", prax(times_c)),
        Claim::forall("HOP-PLUS-IS", "(+Is) α ≤ β -> α+γ ≤ β+γ", prax(plus_is)),
        Claim::forall("HOP-TIMES-IS", "(cIs) α ≤ β -> α×γ ≤ β×γ", prax(times_is)),
        Claim::forall("HOP-PLUS-IN", "(+In) α ≤ β -> α ≤ α×β ≤ β", prax(plus_in)),
        Claim::forall("HOP-R1", "(R1) α+β ≤ α⊕β", prax(r1)),
        Claim::forall("HOP-MIX1", "(Mix1) α×β ≤ (α×β)⊕α", prax(mix1)),
        Claim::forall("HOP-PLUS-VARIANT", "+ with lower (A^l∩B^l)^l agrees with lower A^l∩B^l", prax(plus_variant)),
        Claim::forall("HOP-LAMBDA-LB", "LB([A],[B]) has a greatest element", prax(lambda_lb)),
        Claim::forall("HOP-LAMBDA-UB", "UB([A],[B]) has a least element", prax(lambda_ub)),
        Claim::forall("FLT-LATTICE", "filters of H form an atomistic bounded lattice", prax(filter_lattice)).cap(3),
        Claim::forall("PVA-1", "∨, ⊼ are total", prax(pv1)).must_pass(),
        Claim::forall("PVA-2", "∨ is idempotent, commutative, associative", prax(pv2)).must_pass(),
        Claim::forall("PVA-3", "∧ weak semilattice; weak distributive lattice with ∨", prax(pv3)).must_pass(),
        Claim::forall("PVA-4", "~~~α ≗* ~α", prax(pv4)).must_pass(),
        Claim::forall("PVA-5", "~(α∨β) ≗ ~α ∧ ~β", prax(pv5)).must_pass(),
        Claim::forall("PVA-6", "⊼ idempotent, commutative, associative; lattice with ∨", prax(pv6)).must_pass(),
        Claim::forall("PVA-7", "α⊼⊥ = α∧⊥ = ⊥; α∨⊥ = α; α⊼⊤ = α∧⊤ = α; α∨⊤ = ⊤", prax(pv7)).must_pass(),
        Claim::forall("PVA-8", "~(α∧β) = ~α∨~β -> ~(α⊼β) = ~α∨~β", prax(pv8)).must_pass(),
        Claim::forall("PVA-9a", "α∨(β⊼γ) ⊆ (α∨β)⊼(α∨γ)", prax(pv9a)).must_pass(),
        Claim::forall("PVA-2-DEF", "∨ laws wherever both sides are defined", prax(pv2_defined)),
        Claim::forall("PVA-6-DEF", "⊼ laws and absorption with ∨ wherever both sides are defined", prax(pv6_defined)),
        Claim::forall("PVA-9a-DEF", "α∨(β⊼γ) ⊆ (α∨β)⊼(α∨γ) wherever both sides are defined", prax(pv9a_defined)),
        Claim::exists("PVA-9b", "distributivity α∨(β⊼γ) = (α∨β)⊼(α∨γ) fails", prax(pv9b)).must_pass().extended(),
        Claim::forall("PVA-WCOMP", "X^{uu} = X^u -> ~(X^l, X^u) = (X^{uc}, X^{lc})", prax(wcomp_defined)),
        Claim::exists("PVA-SCEN-1", "A ⊂ B, A^u = B^u, A^{u_w} ⊂ B^{u_w}", prax(scen1)),
        Claim::exists("PVA-SCEN-2", "A ⊂ B, A^l = B^l, A^{l_w} ⊂ B^{l_w}", prax(scen2)),
        Claim::exists("PVA-SCEN-3", "A ⊂ B, A^{u_w} = B^{u_w}, A^u ⊂ B^u", prax(scen3)),
        Claim::exists("PVA-SCEN-4", "A ⊂ B, A^{l_w} = B^{l_w}, A^l ⊂ B^l", prax(scen4)),
        Claim::exists("PVA-SCEN-5", "A ∥ B, A^l = B^l, A^{l_w} ∥ B^{l_w}", prax(scen5)),
        Claim::exists("PVA-SCEN-6", "A ∥ B, A^{l_w} = B^{l_w}, A^l ∥ B^l", prax(scen6)),
        Claim::exists("PVA-SCEN-7", "A ∥ B, A^u = B^u, A^{u_w} ∥ B^{u_w}", prax(scen7)),
        Claim::exists("PVA-SCEN-8", "A ∥ B, A^{u_w} = B^{u_w}, A^u ∥ B^u", prax(scen8)),
        Claim::exists("PVA-SCEN-9", "A ⊂ B, equal l and u, A^{u_w} ⊂ B^{u_w} & A^{l_w} ⊂ B^{l_w}", prax(scen9)),
        Claim::forall("PVA-TAU-BOUNDS", "τ(⊥) = ⊥_w; τ(⊤) = ⊤_w", prax(tau_bounds)),
        Claim::forall("PVA-TAU-JOIN", "τ(α∨β) = τ(α)∨τ(β)", prax(tau_join)),
        Claim::forall("PVA-TAU-MEET", "τ(α∧β) ≗ τ(α)∧τ(β)", prax(tau_meet)),
        Claim::forall("PVA-PHI", "φ on granules is monotone along R and φ(A^l) = ∪[x]_w", prax(phi)),
    ]
}

macro_rules! halg {
    ($s:expr) => {
        match HAlgebra::new($s) {
            Ok(a) => a,
            Err(_) => return Found::Skip,
        }
    };
}

fn cls(a: &HAlgebra, i: usize) -> RoughPair {
    a.h().class(i).pair
}

/// Hit naming the classes involved.
fn cls_hit(a: &HAlgebra, cond: bool, names: &[(&str, usize)]) -> Option<Witness> {
    cond.then(|| pairs_witness(&names.iter().map(|&(k, i)| (k, cls(a, i))).collect::<Vec<_>>()))
}

/// Searches `K`-tuples of classes.
fn over<const K: usize>(
    s: &Space,
    p: &mut Probe,
    f: impl Fn(&HAlgebra, [usize; K]) -> bool,
) -> Found {
    let a = halg!(s);
    const NAMES: [&str; 3] = ["α", "β", "γ"];
    p.find(a.h().len(), |t: [usize; K]| {
        let names: Vec<(&str, usize)> = t.iter().enumerate().map(|(k, &i)| (NAMES[k], i)).collect();
        cls_hit(&a, f(&a, t), &names)
    })
    .into()
}

fn leq_r(a: &HAlgebra, x: usize, y: &Result<usize>) -> bool {
    y.as_ref().map_or(true, |&y| a.h().leq(x, y))
}

fn l1(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.l(a.l(i)) != a.l(i))
}

fn l2(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.h().leq(i, j) && !a.h().leq(a.l(i), a.l(j)))
}

fn l3(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.l(i) == i && a.h().class(i).members != [cls(a, i).lower])
}

fn u1(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| {
        let (u, uu) = (a.u(i), a.u(a.u(i)));
        let meet = a.h().class(u).members.iter().any(|m| a.h().class(uu).members.contains(m));
        meet && u != uu
    })
}

fn u2(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.u(a.u(i)) == a.bottom() && a.u(i) != a.bottom())
}

fn u3(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.h().leq(i, j) && !a.h().leq(a.u(i), a.u(j)))
}

fn u4(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| {
        let c = cls(a, i);
        a.u(i) == i && !(c.lower == c.upper && a.h().class(i).members == [c.lower])
    })
}

fn u5(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| !a.h().leq(a.u(a.l(i)), a.u(i)))
}

fn u6(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.l(a.u(i)) != a.u(i))
}

fn co1(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.odot(i, j) != a.odot(j, i))
}

fn co2(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| !a.h().leq(i, a.odot(i, i)))
}

fn co3(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| !a.h().leq(i, a.odot(i, a.top())))
}

fn co4(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| {
        let ii = a.odot(i, i);
        ii != a.odot(i, ii) || ii != a.odot(i, a.top())
    })
}

fn ao1(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.oplus(i, j) != a.oplus(j, i))
}

fn ao2(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| !a.h().leq(i, a.oplus(i, j)))
}

fn ao3(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| !a.h().leq(i, a.oplus(i, a.bottom())))
}

fn ao4(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.oplus(a.oplus(i, i), i) != a.oplus(i, i))
}

fn ac(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.oplus(i, a.odot(i, j)) != i)
}

fn plus_i(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.plus(i, i).ok() != Some(i))
}

fn plus_c(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| !weak_star_eq(&a.plus(i, j), &a.plus(j, i)))
}

fn times_i(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i]| a.times(i, i).ok() != Some(i))
}

fn times_c(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| !weak_star_eq(&a.times(i, j), &a.times(j, i)))
}

fn plus_is(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j, k]| {
        a.h().leq(i, j)
            && matches!((a.plus(i, k), a.plus(j, k)), (Ok(x), Ok(y)) if !a.h().leq(x, y))
    })
}

fn times_is(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j, k]| {
        a.h().leq(i, j)
            && matches!((a.times(i, k), a.times(j, k)), (Ok(x), Ok(y)) if !a.h().leq(x, y))
    })
}

fn plus_in(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| {
        a.h().leq(i, j) && a.times(i, j).map_or(true, |t| !(a.h().leq(i, t) && a.h().leq(t, j)))
    })
}

fn r1(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| {
        let o = a.oplus(i, j);
        a.plus(i, j).is_ok_and(|x| !a.h().leq(x, o))
    })
}

fn mix1(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.times(i, j).is_ok_and(|t| !leq_r(a, t, &Ok(a.oplus(t, i)))))
}

fn plus_variant(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| !weak_star_eq(&a.plus(i, j), &a.plus_variant(i, j)))
}

fn lambda_lb(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.lb(i, j).extremum.is_none())
}

fn lambda_ub(s: &Space, p: &mut Probe) -> Found {
    over(s, p, |a, [i, j]| a.ub(i, j).extremum.is_none())
}

fn filter_lattice(s: &Space, p: &mut Probe) -> Found {
    let a = halg!(s);
    p.tick();
    match a.filter_lattice_atomistic() {
        Ok(ok) => hit!(!ok).into(),
        Err(_) => Found::Skip,
    }
}

macro_rules! pv {
    ($s:expr) => {
        match PvSpace::new($s) {
            Ok(a) => a,
            Err(_) => return Found::Skip,
        }
    };
}

/// Searches `K`-tuples of realised pairs.
fn pv_over<const K: usize>(
    s: &Space,
    p: &mut Probe,
    f: impl Fn(&PvSpace, [RoughPair; K]) -> bool,
) -> Found {
    let v = pv!(s);
    let el = v.alg.elements();
    const NAMES: [&str; 3] = ["α", "β", "γ"];
    p.find(el.len(), |t: [usize; K]| {
        let args = t.map(|i| el[i]);
        let names: Vec<(&str, RoughPair)> = args.iter().enumerate().map(|(k, &x)| (NAMES[k], x)).collect();
        pairs_hit(f(&v, args), &names)
    })
    .into()
}

fn pv1(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b]| v.alg.join(a, b).is_err() || v.pmeet(a, b).is_err())
}

fn pv2(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| {
        let j = |x, y| v.alg.join(x, y);
        j(a, a).ok() != Some(a)
            || j(a, b).ok() != j(b, a).ok()
            || j(a, b).and_then(|x| j(x, c)).ok() != j(b, c).and_then(|y| j(a, y)).ok()
    })
}

fn pv3(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| {
        let m = |x, y| v.alg.meet(x, y);
        let j = |x, y| v.alg.join(x, y);
        let laws = [
            m(a, a).ok() == Some(a),
            weak_star_eq(&m(a, b), &m(b, a)),
            weak_eq(&m(a, b).and_then(|x| m(x, c)), &m(b, c).and_then(|y| m(a, y))),
            weak_eq(&m(a, b).and_then(|x| j(a, x)), &Ok(a)),
            weak_eq(&j(a, b).and_then(|x| m(a, x)), &Ok(a)),
            weak_eq(
                &m(b, c).and_then(|x| j(a, x)),
                &j(a, b).and_then(|x| j(a, c).and_then(|y| m(x, y))),
            ),
            weak_eq(
                &j(b, c).and_then(|x| m(a, x)),
                &m(a, b).and_then(|x| m(a, c).and_then(|y| j(x, y))),
            ),
        ];
        laws.iter().any(|ok| !ok)
    })
}

fn pv4(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a]| {
        let w = |x| v.alg.wcomp(x);
        let once = w(a);
        !weak_star_eq(&once.clone().and_then(w).and_then(w), &once)
    })
}

fn pv5(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b]| {
        let w = |x| v.alg.wcomp(x);
        let rhs = w(a).and_then(|x| w(b).and_then(|y| v.alg.meet(x, y)));
        !weak_eq(&v.alg.join(a, b).and_then(w), &rhs)
    })
}

fn pv6(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| {
        let m = |x, y| v.pmeet(x, y);
        let j = |x, y| v.alg.join(x, y);
        let laws = [
            m(a, a).ok() == Some(a),
            m(a, b).ok() == m(b, a).ok(),
            m(a, b).and_then(|x| m(x, c)).ok() == m(b, c).and_then(|y| m(a, y)).ok(),
            j(a, b).and_then(|x| m(a, x)).ok() == Some(a),
            m(a, b).and_then(|x| j(a, x)).ok() == Some(a),
        ];
        laws.iter().any(|ok| !ok)
    })
}

fn pv7(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a]| {
        let (bot, top) = (v.alg.bottom(), v.alg.top());
        let laws = [
            v.pmeet(a, bot).ok() == Some(bot),
            v.alg.meet(a, bot).ok() == Some(bot),
            v.alg.join(a, bot).ok() == Some(a),
            v.pmeet(a, top).ok() == Some(a),
            v.alg.meet(a, top).ok() == Some(a),
            v.alg.join(a, top).ok() == Some(top),
        ];
        laws.iter().any(|ok| !ok)
    })
}

fn pv8(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b]| {
        let w = |x| v.alg.wcomp(x);
        let rhs = w(a).and_then(|x| w(b).and_then(|y| v.alg.join(x, y))).ok();
        let premise = rhs.is_some() && v.alg.meet(a, b).and_then(w).ok() == rhs;
        premise && v.pmeet(a, b).and_then(w).ok() != rhs
    })
}

fn pv2_defined(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| {
        let j = |x, y| v.alg.join(x, y);
        !(weak_eq(&j(a, a), &Ok(a))
            && weak_eq(&j(a, b), &j(b, a))
            && weak_eq(&j(a, b).and_then(|x| j(x, c)), &j(b, c).and_then(|y| j(a, y))))
    })
}

fn pv6_defined(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| {
        let m = |x, y| v.pmeet(x, y);
        let j = |x, y| v.alg.join(x, y);
        !(weak_eq(&m(a, a), &Ok(a))
            && weak_eq(&m(a, b), &m(b, a))
            && weak_eq(&m(a, b).and_then(|x| m(x, c)), &m(b, c).and_then(|y| m(a, y)))
            && weak_eq(&j(a, b).and_then(|x| m(a, x)), &Ok(a))
            && weak_eq(&m(a, b).and_then(|x| j(a, x)), &Ok(a)))
    })
}

fn pv9a_defined(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| distrib_sides(v, a, b, c).is_some_and(|(l, r)| !l.leq(r)))
}

fn distrib_sides(v: &PvSpace, a: RoughPair, b: RoughPair, c: RoughPair) -> Option<(RoughPair, RoughPair)> {
    let lhs = v.pmeet(b, c).and_then(|x| v.alg.join(a, x)).ok()?;
    let rhs = v.alg.join(a, b).and_then(|x| v.alg.join(a, c).and_then(|y| v.pmeet(x, y))).ok()?;
    Some((lhs, rhs))
}

fn pv9a(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| distrib_sides(v, a, b, c).is_none_or(|(l, r)| !l.leq(r)))
}

fn pv9b(s: &Space, p: &mut Probe) -> Found {
    pv_over(s, p, |v, [a, b, c]| distrib_sides(v, a, b, c).is_some_and(|(l, r)| l != r))
}

fn wcomp_defined(s: &Space, p: &mut Probe) -> Found {
    let v = pv!(s);
    p.sets1(s.n(), |x| {
        let (l, u) = (s.l(x), s.u(x));
        let want = RoughPair::new(s.complement(u), s.complement(l));
        hit!(s.u(u) == u && v.alg.wcomp(RoughPair::new(l, u)).ok() != Some(want), "X" => x)
    })
    .into()
}

/// Pairs `A, B` with the lower or upper approximations of `R` and of `R^#`.
fn scenario(s: &Space, p: &mut Probe, f: impl Fn(&Space, &Space, Subset, Subset) -> bool) -> Found {
    let w = s.sharp();
    p.sets2(s.n(), |a, b| hit!(f(s, w, a, b), "A" => a, "B" => b)).into()
}

fn proper(a: Subset, b: Subset) -> bool {
    a.is_proper_subset(b)
}

fn scen1(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| proper(a, b) && s.u(a) == s.u(b) && proper(w.u(a), w.u(b)))
}

fn scen2(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| proper(a, b) && s.l(a) == s.l(b) && proper(w.l(a), w.l(b)))
}

fn scen3(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| proper(a, b) && w.u(a) == w.u(b) && proper(s.u(a), s.u(b)))
}

fn scen4(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| proper(a, b) && w.l(a) == w.l(b) && proper(s.l(a), s.l(b)))
}

fn scen5(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| incomparable(a, b) && s.l(a) == s.l(b) && incomparable(w.l(a), w.l(b)))
}

fn scen6(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| incomparable(a, b) && w.l(a) == w.l(b) && incomparable(s.l(a), s.l(b)))
}

fn scen7(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| incomparable(a, b) && s.u(a) == s.u(b) && incomparable(w.u(a), w.u(b)))
}

fn scen8(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| incomparable(a, b) && w.u(a) == w.u(b) && incomparable(s.u(a), s.u(b)))
}

fn scen9(s: &Space, p: &mut Probe) -> Found {
    scenario(s, p, |s, w, a, b| {
        proper(a, b) && s.rough_eq(a, b) && proper(w.u(a), w.u(b)) && proper(w.l(a), w.l(b))
    })
}

fn tau_bounds(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let t = TauMap::with_sharp(s.rel());
    let (bot, top) = (RoughPair::new(Subset::EMPTY, Subset::EMPTY), RoughPair::new(s.full(), s.full()));
    pairs_hit(t.tau(bot) != bot || t.tau(top) != top, &[("τ(⊥)", t.tau(bot)), ("τ(⊤)", t.tau(top))]).into()
}

fn tau_join(s: &Space, p: &mut Probe) -> Found {
    let t = TauMap::with_sharp(s.rel());
    pv_over(s, p, |v, [a, b]| {
        let lhs = v.alg.join(a, b).map(|x| t.tau(x)).ok();
        let (ta, tb) = (t.tau(a), t.tau(b));
        lhs != Some(RoughPair::new(ta.lower | tb.lower, ta.upper | tb.upper))
    })
}

fn tau_meet(s: &Space, p: &mut Probe) -> Found {
    let t = TauMap::with_sharp(s.rel());
    let Ok(wide) = PvSpace::new(t.wide()) else { return Found::Skip };
    pv_over(s, p, |v, [a, b]| {
        let lhs = v.alg.meet(a, b).map(|x| t.tau(x));
        !weak_eq(&lhs, &wide.alg.meet(t.tau(a), t.tau(b)))
    })
}

fn phi(s: &Space, p: &mut Probe) -> Found {
    let t = TauMap::with_sharp(s.rel());
    let granule = |x: usize| t.phi_granule(s.succ(x));
    if let Some(w) = p.find(s.n(), |[x, z]| {
        let (zx, xz) = (s.succ(x).contains(z), s.succ(z).contains(x));
        let bad = (zx && xz && granule(z) != granule(x)) || (zx && !sub(granule(z), granule(x)));
        hit!(bad, "x" => Subset::singleton(x), "z" => Subset::singleton(z))
    }) {
        return Found::Hit(w);
    }
    p.sets1(s.n(), |a| {
        let la = s.l(a);
        let direct = (0..s.n())
            .filter(|&x| sub(s.succ(x), la))
            .fold(Subset::EMPTY, |acc, x| acc | t.wide().succ(x));
        hit!(t.phi(la) != direct, "A" => a)
    })
    .into()
}

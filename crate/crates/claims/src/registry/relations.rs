//! Relation-level laws, granulations and the fixture checks.

use praxkit_core::fixtures;
use praxkit_core::relation::{is_lqo, lqo_join, lqo_meet, lqo_top, poa_check};
use praxkit_core::{ApproxKind, BinRel, Space, Subset};

use super::{on, prax};
use crate::claim::{Claim, Domain, Found, Probe, Witness};
use crate::gen::{self, Constraint};
use crate::hit;

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim::forall("REL-CHAIN", "transitive => weakly transitive; pτ(S) iff τ(R) ∈ EQ(S)", on(Constraint::AllReflexive, chain))
            .must_pass()
            .cap(4),
        Claim::forall("REL-PROTO-2WAY", "elementwise proto-transitivity = weak transitivity of τ(R)", on(Constraint::AllReflexive, proto_two_way))
            .cap(4),
        Claim::forall("REL-SHARP", "(R^#)^# = R^#; R ⊆ R^#; transitive R => R^# = R", on(Constraint::Any, sharp)).must_pass(),
        Claim::forall("REL-H-EMPTY", "R^h = ∅", prax(h_empty)).must_pass().extended(),
        Claim::forall("REL-DOT-HASH", "(R∖τ(R))^# ⊆ R^#∖τ(R)", prax(dot_hash)).must_pass().extended(),
        Claim::forall("REL-ORTHO", "((R∖τ(R))^# ∪ τ(R))^# = R^#", prax(ortho)).must_pass().extended(),
        Claim::forall("REL-DOT-ASYM", "¬(R^· ab & R^· ba)", prax(dot_asym)).must_pass(),
        Claim::forall("REL-DOT-TAU", "R^· ab <-> (R∖τ(R)) ab", prax(dot_tau)),
        Claim::forall("REL-DOT-NOCHAIN", "R^· ab & R^· bc -> ¬R^· ac", prax(dot_nochain)),
        Claim::forall("REL-HASHDOT", "R^{#·} = R^#∖τ(R)", prax(hash_dot)),
        Claim::forall("REL-DOT-MEET", "R^{·#} & R^{#·} xy <-> (R∖τ(R))^# xy", prax(dot_meet)),
        Claim::forall("REL-LF-PO", "R^lf ⊂ R and R^lf is a strict partial order", prax(lf_po)),
        Claim::forall("REL-POA", "R^h, R^{·lf} are IPOA; R^{·#}, R^{#·} are POA", prax(poa)),
        Claim::forall("LQO-TOP", "top of LQO(R) is R^#", prax(lqo_top_claim)),
        Claim::forall("LQO-OPS", "A & B, (A ∪ B)^# ∈ LQO(R)", prax(lqo_ops)).cap(3),
        Claim::forall("FIX-PRAX", "fixture P is proto-transitive", Domain::Fixture(fixtures::worked_relation, worked_prax)).expected_fail(),
        Claim::forall(
            "FIX-APPROX",
            "{a,h,f}^l = {a,h,f}; {a,h,f}^{l_o} = {a,f}; {l}^l = ∅; {l}^{l_o} = {l}",
            Domain::Fixture(fixtures::worked_relation, worked_approx),
        )
        .must_pass(),
        Claim::forall("GRN-SUBO", "[x]_o ⊆ [x]", prax(sub_o)).must_pass().sampled(),
        Claim::forall("GRN-OTO", "[x]_ot^o = {x}", prax(oto_literal)).expected_fail(),
        Claim::forall("GRN-OTO-SUB", "[x]_ot^o ⊆ {x}", prax(oto_sub)),
        Claim::forall("GRN-CONVERSE", "succ granulation of R = pred granulation of R^-1", on(Constraint::Any, converse))
            .must_pass(),
    ]
}

fn pair_note(r: &BinRel, what: &str, a: usize, b: usize) -> Witness {
    let u = r.universe();
    Witness::note(format!("{what} ({}, {})", u.label(a), u.label(b)))
}

/// First pair in `a` missing from `b`.
fn missing(a: &BinRel, b: &BinRel) -> Option<(usize, usize)> {
    a.pairs().find(|&(x, y)| !b.contains(x, y))
}

fn chain(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    if r.is_transitive() && !r.is_weakly_transitive() {
        return Found::Hit(Witness::note("transitive but not weakly transitive"));
    }
    if r.is_proto_transitive() != r.tau().is_equivalence() {
        return Found::Hit(Witness::note("proto-transitivity disagrees with τ(R) ∈ EQ"));
    }
    Found::Nothing
}

fn proto_two_way(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    hit!(r.is_proto_transitive() != r.is_proto_transitive_elementwise()).into()
}

fn sharp(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    let h = r.sharp();
    if h.sharp() != h {
        return Found::Hit(Witness::note("closure not idempotent"));
    }
    if let Some((a, b)) = missing(r, &h) {
        return Found::Hit(pair_note(r, "pair lost by closure", a, b));
    }
    hit!(r.is_transitive() && h != *r).into()
}

fn h_empty(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    r.h().pairs().next().map(|(a, b)| pair_note(r, "R^h", a, b)).into()
}

fn dot_hash(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    missing(&r.dot_hash(), &r.hash_dot()).map(|(a, b)| pair_note(r, "in (R∖τ)^# only", a, b)).into()
}

fn ortho(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    hit!(r.ortho_union().sharp() != r.sharp()).into()
}

fn dot_asym(s: &Space, p: &mut Probe) -> Found {
    let r = s.rel();
    let d = r.dot();
    p.find(r.n(), |[a, b]| (d.contains(a, b) && d.contains(b, a)).then(|| pair_note(r, "R^· both ways", a, b))).into()
}

fn dot_tau(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    let other = r.difference(&r.tau()).expect("same universe");
    hit!(r.dot() != other).into()
}

fn dot_nochain(s: &Space, p: &mut Probe) -> Found {
    let r = s.rel();
    let d = r.dot();
    p.find(r.n(), |[a, b, c]| {
        (d.contains(a, b) && d.contains(b, c) && d.contains(a, c)).then(|| {
            let u = r.universe();
            Witness::note(format!("R^· chain {} {} {}", u.label(a), u.label(b), u.label(c)))
        })
    })
    .into()
}

fn hash_dot(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    let (lit, formula) = (r.hash_dot_literal(), r.hash_dot());
    missing(&lit, &formula)
        .map(|(a, b)| pair_note(r, "literal only", a, b))
        .or_else(|| missing(&formula, &lit).map(|(a, b)| pair_note(r, "formula only", a, b)))
        .into()
}

fn dot_meet(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    let meet = r.dot().sharp().intersection(&r.hash_dot_literal()).expect("same universe");
    hit!(meet != r.dot_hash()).into()
}

fn lf_po(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    let lf = r.lf();
    if let Some((a, b)) = missing(&lf, r) {
        return Found::Hit(pair_note(r, "R^lf outside R", a, b));
    }
    hit!(!(lf.is_transitive() && lf.pairs().all(|(a, b)| a != b && !lf.contains(b, a)))).into()
}

fn poa(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    let checks = [
        ("R^h not IPOA", poa_check(r, &r.h()).map(|c| c.ipoa)),
        ("R^{·lf} not IPOA", poa_check(r, &r.dot().lf()).map(|c| c.ipoa)),
        ("R^{·#} not POA", poa_check(r, &r.dot().sharp()).map(|c| c.poa)),
        ("R^{#·} not POA", poa_check(r, &r.hash_dot_literal()).map(|c| c.poa)),
    ];
    for (what, ok) in checks {
        if !ok.unwrap_or(false) {
            return Found::Hit(Witness::note(what));
        }
    }
    Found::Nothing
}

fn lqo_top_claim(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let r = s.rel();
    hit!(!is_lqo(r, &lqo_top(r)).unwrap_or(false)).into()
}

fn lqo_ops(s: &Space, p: &mut Probe) -> Found {
    let r = s.rel();
    let Ok(candidates) = gen::enumerate_relations(r.n(), Constraint::QuasiOrder) else { return Found::Skip };
    let lqos: Vec<BinRel> = candidates
        .into_iter()
        .map(|q| BinRel::from_rows(r.universe().clone(), q.rows().to_vec()).expect("same size"))
        .filter(|q| is_lqo(r, q).unwrap_or(false))
        .collect();
    p.find(lqos.len(), |[i, j]| {
        let meet = lqo_meet(r, &lqos[i], &lqos[j]).and_then(|m| is_lqo(r, &m));
        let join = lqo_join(r, &lqos[i], &lqos[j]).and_then(|m| is_lqo(r, &m));
        (!meet.unwrap_or(false) || !join.unwrap_or(false)).then(|| Witness::note(format!("LQO pair {i}, {j}")))
    })
    .into()
}

fn worked_prax(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    hit!(!s.rel().is_prax()).into()
}

fn worked_approx(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let u = s.rel().universe();
    let (Ok(ahf), Ok(af), Ok(l)) = (u.subset(["a", "h", "f"]), u.subset(["a", "f"]), u.subset(["l"])) else {
        return Found::Skip;
    };
    let checks = [
        ("{a,h,f}^l", s.l(ahf), ahf),
        ("{a,h,f}^lo", s.approx(ahf, ApproxKind::Lo), af),
        ("{l}^l", s.l(l), Subset::EMPTY),
        ("{l}^lo", s.approx(l, ApproxKind::Lo), l),
    ];
    checks
        .iter()
        .find(|(_, got, want)| got != want)
        .map(|&(what, got, want)| Witness::sets(&[("got", got), ("expected", want)]).with_note(what))
        .into()
}

fn sub_o(s: &Space, p: &mut Probe) -> Found {
    p.find(s.n(), |[x]| hit!(!s.sym(x).is_subset(s.succ(x)), "x" => Subset::singleton(x))).into()
}

fn oto_literal(s: &Space, p: &mut Probe) -> Found {
    let ot = Space::new(s.rel().hash_dot_literal());
    p.find(s.n(), |[x]| hit!(ot.sym(x) != Subset::singleton(x), "x" => Subset::singleton(x), "granule" => ot.sym(x)))
        .into()
}

fn oto_sub(s: &Space, p: &mut Probe) -> Found {
    let ot = Space::new(s.rel().hash_dot());
    p.find(s.n(), |[x]| {
        hit!(!ot.sym(x).is_subset(Subset::singleton(x)), "x" => Subset::singleton(x), "granule" => ot.sym(x))
    })
    .into()
}

fn converse(s: &Space, p: &mut Probe) -> Found {
    let c = Space::new(s.rel().converse());
    p.find(s.n(), |[x]| hit!(s.succ(x) != c.pred(x), "x" => Subset::singleton(x))).into()
}

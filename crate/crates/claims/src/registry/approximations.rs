//! Approximation laws, scedastic approximations, associated sets, definite elements and
//! rough objects.

use praxkit_core::algebra::definite_boolean_report;
use praxkit_core::rough::{interval_decomposition, AtomType, PosetH};
use praxkit_core::ApproxKind::{self, *};
use praxkit_core::{AssocKind, Space, Subset};

use super::{prax, sub};
use crate::claim::{Claim, Found, Probe, Witness};
use crate::hit;

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim::forall("APP-BI", "(Bi) A^{ll} = A^l; A^u ⊆ A^{uu}", prax(bi)).must_pass().sampled(),
        Claim::forall("APP-LCUP", "(l-Cup) A^l ∪ B^l ⊆ (A∪B)^l", prax(lcup)).must_pass().sampled(),
        Claim::forall("APP-LCAP", "(l-Cap) (A∩B)^l ⊆ A^l ∩ B^l", prax(lcap)).must_pass().sampled(),
        Claim::forall("APP-UCUP", "(u-Cup) (A∪B)^u = A^u ∪ B^u", prax(ucup)).must_pass().sampled(),
        Claim::forall("APP-UCAP", "(u-Cap) (A∩B)^u ⊆ A^u ∩ B^u", prax(ucap)).must_pass().sampled(),
        Claim::forall("APP-DUAL", "(Dual) A^{lc} ⊆ A^{cu}", prax(dual)).must_pass().sampled(),
        Claim::forall("APP-LPLUS-CAP", "(A∩B)^{l+} = A^{l+} ∩ B^{l+}", prax(lplus_cap)).must_pass().sampled(),
        Claim::forall("APP-LPLUS-DUAL", "A^{l+c} = A^{cu+}", prax(lplus_dual)).must_pass().sampled(),
        Claim::forall("APP-CHAIN", "A^{l+} ⊆ A^l ⊆ A ⊆ A^{u_o} ⊆ A^{u+} ⊆ A^u", prax(chain)).must_pass().sampled(),
        Claim::forall("APP-SHARP-L", "(App) A^l ⊆ A^{l_#}", prax(sharp_l)).must_pass().sampled(),
        Claim::forall("APP-SHARP-U", "(App) A^u ⊆ A^{u_#}", prax(sharp_u)).must_pass().sampled(),
        Claim::forall("APP-LHAT-IDEM", "B^{l̂l̂} = B^{l̂}", prax(lhat_idem)).must_pass().sampled(),
        Claim::exists("APP-UHAT-SUB", "∃B: B^{ûû} ⊂ B^{û}", prax(uhat_sub)).must_pass(),
        Claim::forall("APP-UHAT-FIX-L", "B^{û} = B -> B^{l̂} = B", prax(uhat_fix_l)),
        Claim::exists("APP-LHAT-NOT-U", "B^{l̂} = B does not force B^{û} = B", prax(lhat_not_u)),
        Claim::forall("APP-UHAT-NEQ", "B^{ûû} ≠ B^{û}", prax(uhat_neq)),
        Claim::forall("APP-LSHARP-CHAIN", "A^{l_# l} = A^{l_#} = A^{l l_#} = A^{l_# l_#}", prax(lsharp_chain)),
        Claim::forall("APP-SCED-DIAG", "inclusion diagram of l, u, l_#, u_# composites", prax(sced_diag)),
        Claim::forall("APP-SCED", "A^{u_#} ≠ A^u -> A^{l̂} ⊆ A^{û}", prax(sced)),
        Claim::forall("ASSOC-PI0", "π0(x)^l = ∅; π0(x)^u ⊆ x^u ∖ x^l", prax(assoc_pi0)),
        Claim::forall("ASSOC-F0", "F0(x)^u ⊆ x^u", prax(assoc_f0)),
        Claim::forall("ASSOC-ST", "St(x)^l ⊆ x^l; F0(x) = ∅ -> St(x) = x^{l+}", prax(assoc_st)),
        Claim::forall("ASSOC-SYM", "Sym(x)^u ⊆ x^u; Sym(x)^l ⊆ x^l", prax(assoc_sym)),
        Claim::forall("ASSOC-F0-ALT", "F0'(x) ∩ x = ∅; F0'(x) ⊆ x^u", prax(assoc_f0_alt)),
        Claim::forall("DEF-BOOL", "δ_lu(S) with ∪, ∩, c, ∅, S is a Boolean lattice", prax(def_bool)).must_pass(),
        Claim::forall("RO-ORDER", "⪯ is a partial order on classes; ≈ is an equivalence", prax(ro_order)).must_pass(),
        Claim::forall("RO-INTERVALS", "each roughly-equal class is a union of intervals", prax(ro_intervals)).must_pass(),
        Claim::forall("RO-UPPER-CRIT", "upper definite => upper critical", prax(ro_upper_crit)),
        Claim::exists("RO-UPPER-CRIT-CONV", "upper critical but not upper definite", prax(ro_upper_crit_conv)),
        Claim::forall("H-ATOMIC", "every nonzero class of H lies above an atom", prax(h_atomic)).must_pass(),
        Claim::forall("H-ATOM-TYPES", "every atom of H has type 0, 1 or 2", prax(h_atom_types)).must_pass(),
    ]
}

fn ap(s: &Space, a: Subset, k: ApproxKind) -> Subset {
    s.approx(a, k)
}

fn lhat(s: &Space, a: Subset) -> Subset {
    ap(s, a, LHat)
}

fn uhat(s: &Space, a: Subset) -> Subset {
    ap(s, a, UHat)
}

fn bi(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| hit!(s.l(s.l(a)) != s.l(a) || !sub(s.u(a), s.u(s.u(a))), "A" => a)).into()
}

fn lcup(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |a, b| hit!(!sub(s.l(a) | s.l(b), s.l(a | b)), "A" => a, "B" => b)).into()
}

fn lcap(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |a, b| hit!(!sub(s.l(a & b), s.l(a) & s.l(b)), "A" => a, "B" => b)).into()
}

fn ucup(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |a, b| hit!(s.u(a | b) != s.u(a) | s.u(b), "A" => a, "B" => b)).into()
}

fn ucap(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |a, b| hit!(!sub(s.u(a & b), s.u(a) & s.u(b)), "A" => a, "B" => b)).into()
}

fn dual(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| hit!(!sub(s.complement(s.l(a)), s.u(s.complement(a))), "A" => a)).into()
}

fn lplus_cap(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |a, b| hit!(ap(s, a & b, LPlus) != ap(s, a, LPlus) & ap(s, b, LPlus), "A" => a, "B" => b)).into()
}

fn lplus_dual(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| hit!(s.complement(ap(s, a, LPlus)) != ap(s, s.complement(a), UPlus), "A" => a)).into()
}

fn chain(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| {
        let steps = [ap(s, a, LPlus), s.l(a), a, ap(s, a, Uo), ap(s, a, UPlus), s.u(a)];
        hit!(steps.windows(2).any(|w| !sub(w[0], w[1])), "A" => a)
    })
    .into()
}

fn sharp_l(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| hit!(!sub(s.l(a), ap(s, a, LSharp)), "A" => a, "A^l" => s.l(a), "A^l#" => ap(s, a, LSharp)))
        .into()
}

fn sharp_u(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| hit!(!sub(s.u(a), ap(s, a, USharp)), "A" => a)).into()
}

fn lhat_idem(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |b| hit!(lhat(s, lhat(s, b)) != lhat(s, b), "B" => b)).into()
}

fn uhat_sub(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |b| {
        let (h, hh) = (uhat(s, b), uhat(s, uhat(s, b)));
        hit!(hh.is_proper_subset(h), "B" => b, "B^û" => h, "B^ûû" => hh)
    })
    .into()
}

fn uhat_fix_l(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |b| hit!(uhat(s, b) == b && lhat(s, b) != b, "B" => b)).into()
}

fn lhat_not_u(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |b| hit!(lhat(s, b) == b && uhat(s, b) != b, "B" => b)).into()
}

fn uhat_neq(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |b| hit!(uhat(s, uhat(s, b)) == uhat(s, b), "B" => b)).into()
}

fn lsharp_chain(s: &Space, p: &mut Probe) -> Found {
    let sh = s.sharp();
    p.sets1(s.n(), |a| {
        let ls = sh.l(a);
        hit!(s.l(ls) != ls || sh.l(s.l(a)) != ls || sh.l(ls) != ls, "A" => a)
    })
    .into()
}

fn sced_diag(s: &Space, p: &mut Probe) -> Found {
    let sh = s.sharp();
    p.sets1(s.n(), |a| {
        let (l, u, ls, us) = (s.l(a), s.u(a), sh.l(a), sh.u(a));
        let edges = [
            (ls, l),
            (l, a),
            (a, u),
            (u, us),
            (ls, s.u(ls)),
            (s.u(ls), s.u(l)),
            (s.u(ls), sh.u(ls)),
            (sh.u(ls), us),
            (s.u(l), u),
        ];
        hit!(edges.iter().any(|&(x, y)| !sub(x, y)), "A" => a)
    })
    .into()
}

fn sced(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |a| hit!(ap(s, a, USharp) != s.u(a) && !sub(lhat(s, a), uhat(s, a)), "A" => a)).into()
}

fn assoc(s: &Space, x: Subset, k: AssocKind) -> Subset {
    s.associated(x, k).expect("subset within universe")
}

fn assoc_pi0(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| {
        let pi = assoc(s, x, AssocKind::Pi0);
        hit!(!s.l(pi).is_empty() || !sub(s.u(pi), s.u(x) - s.l(x)), "x" => x, "π0" => pi)
    })
    .into()
}

fn assoc_f0(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(!sub(s.u(assoc(s, x, AssocKind::F0)), s.u(x)), "x" => x)).into()
}

fn assoc_st(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| {
        let st = assoc(s, x, AssocKind::St);
        let f0 = assoc(s, x, AssocKind::F0);
        hit!(!sub(s.l(st), s.l(x)) || (f0.is_empty() && st != ap(s, x, LPlus)), "x" => x, "St" => st)
    })
    .into()
}

fn assoc_sym(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| {
        let sy = assoc(s, x, AssocKind::Sym);
        hit!(!sub(s.u(sy), s.u(x)) || !sub(s.l(sy), s.l(x)), "x" => x, "Sym" => sy)
    })
    .into()
}

fn assoc_f0_alt(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| {
        let f = assoc(s, x, AssocKind::F0Alt);
        hit!(f.intersects(x) || !sub(f, s.u(x)), "x" => x, "F0'" => f)
    })
    .into()
}

fn def_bool(s: &Space, p: &mut Probe) -> Found {
    let Ok(report) = definite_boolean_report(s) else { return Found::Skip };
    p.tick();
    if !report.is_boolean() {
        return Found::Hit(Witness::note(format!("{report:?}")));
    }
    let d = s.definites(&[ApproxKind::L, ApproxKind::U]).expect("guarded above");
    let full = s.full();
    let c = |a: Subset| s.complement(a);
    p.find(d.len(), |[i, j, k]| {
        let (a, b, e) = (d[i], d[j], d[k]);
        let laws = [
            a | (b & e) == (a | b) & (a | e),
            a & (b | e) == (a & b) | (a & e),
            a | (a & b) == a,
            a & (a | b) == a,
            a | c(a) == full,
            a & c(a) == Subset::EMPTY,
            c(a | b) == c(a) & c(b),
            c(a & b) == c(a) | c(b),
            c(c(a)) == a,
            a | Subset::EMPTY == a && a & full == a,
        ];
        hit!(laws.iter().any(|ok| !ok), "a" => a, "b" => b, "c" => e)
    })
    .into()
}

fn poset(s: &Space) -> Option<PosetH> {
    PosetH::new(s).ok()
}

fn ro_order(s: &Space, p: &mut Probe) -> Found {
    let Some(h) = poset(s) else { return Found::Skip };
    if let Some(w) = p.sets1(s.n(), |a| {
        let c = h.class(h.class_of(a));
        hit!(c.pair != s.rough_pair(a) || !c.members.contains(&a), "A" => a)
    }) {
        return Found::Hit(w);
    }
    p.find(h.len(), |[i, j, k]| {
        let refl = h.leq(i, i);
        let anti = !(h.leq(i, j) && h.leq(j, i)) || i == j;
        let trans = !(h.leq(i, j) && h.leq(j, k)) || h.leq(i, k);
        (!(refl && anti && trans)).then(|| Witness::note(format!("classes {i}, {j}, {k}")))
    })
    .into()
}

fn ro_intervals(s: &Space, p: &mut Probe) -> Found {
    let Some(h) = poset(s) else { return Found::Skip };
    p.find(h.len(), |[i]| {
        let members = &h.class(i).members;
        let parts = interval_decomposition(members);
        let covered = members.iter().all(|&z| parts.iter().any(|&(lo, hi)| sub(lo, z) && sub(z, hi)));
        let inside = parts.iter().all(|&(lo, hi)| (hi - lo).subsets().all(|d| members.contains(&(lo | d))));
        let pair = h.class(i).pair;
        (!(covered && inside)).then(|| Witness::sets(&[("l", pair.lower), ("u", pair.upper)]))
    })
    .into()
}

fn ro_upper_crit(s: &Space, p: &mut Probe) -> Found {
    let Ok(uc) = s.upper_critical_set() else { return Found::Skip };
    p.sets1(s.n(), |a| hit!(s.u(a) == a && !uc.contains(&a), "A" => a)).into()
}

fn ro_upper_crit_conv(s: &Space, p: &mut Probe) -> Found {
    let Ok(uc) = s.upper_critical_set() else { return Found::Skip };
    p.sets1(s.n(), |a| hit!(uc.contains(&a) && s.u(a) != a, "A" => a)).into()
}

fn h_atomic(s: &Space, p: &mut Probe) -> Found {
    let Some(h) = poset(s) else { return Found::Skip };
    p.tick();
    match h.atom_witnesses() {
        Ok(_) => Found::Nothing,
        Err(i) => {
            let pair = h.class(i).pair;
            Found::Hit(Witness::sets(&[("l", pair.lower), ("u", pair.upper)]).with_note("class without an atom below"))
        }
    }
}

fn h_atom_types(s: &Space, p: &mut Probe) -> Found {
    let Some(h) = poset(s) else { return Found::Skip };
    let atoms = h.atoms();
    p.find(atoms.len(), |[i]| {
        let pair = h.class(atoms[i]).pair;
        hit!(h.atom_type(s, atoms[i]) == AtomType::Unclassified, "l" => pair.lower, "u" => pair.upper)
    })
    .into()
}

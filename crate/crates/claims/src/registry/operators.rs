//! Laws of the heart, diamond, flat and curlyvee operators, closure systems and safe maps.

use praxkit_core::operators::{cco_profile, safe_map_table, FinitePoset, LexLeast};
use praxkit_core::{Space, Subset};

use super::{prax, sub};
use crate::claim::{Claim, Domain, Found, Probe, Witness};
use crate::hit;

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim::forall("NMR-01", "(Inclusion) x ⊆ x^♥", prax(inclusion)).must_pass(),
        Claim::forall("NMR-02", "(Non-Idempotence) x^♥ ⊆ x^{♥♥}", prax(non_idem)),
        Claim::forall("NMR-03", "(Cautious Monotony) x ⊆ y ⊆ x^♥ -> x^♥ ⊆ y^♥", prax(cautious)).must_pass(),
        Claim::forall("NMR-04", "(Supra Pseudo Classicality) x^u ⊆ x^♥", prax(supra)).must_pass(),
        Claim::forall("NMR-05", "(Top) S^♥ = S", prax(top)).must_pass(),
        Claim::forall("NMR-06", "(Sub Left Absorption) x^♥ ⊆ x^{u♥}", prax(sub_left)).must_pass().sampled(),
        Claim::forall("NMR-07", "(Sub Right Absorption) x^♥ ⊆ x^{♥u}", prax(sub_right)).must_pass().sampled(),
        Claim::exists("NMR-08", "⊡(No Left Logical Equivalence) x^u = y^u, x^♥ ≠ y^♥", prax(no_left_eq)).must_pass(),
        Claim::exists("NMR-09", "⊡(No Jump Equivalence) x^♥ = y^♥, x^l ≠ y^l", prax(no_jump_eq)).must_pass(),
        Claim::exists("NMR-10", "⊡(No Weakening) x ⊆ y^♥, z ⊆ x^u, z ⊄ y^♥", prax(no_weakening)).must_pass(),
        Claim::exists("NMR-11", "⊡(No subclassical cumulativity) x ⊆ y ⊆ x^u, x^♥ ≠ y^♥", prax(no_subclassical)).must_pass(),
        Claim::forall("NMR-12", "(Distributivity) x^♥ ∩ y^♥ ⊆ (x^u ∩ y^u)^♥", prax(distributivity)).must_pass(),
        Claim::forall(
            "NMR-13",
            "(Weak Distributivity) (x∪z)^♥ ∩ (y∪z)^♥ ⊆ (z ∪ (x^u ∩ y^u))^♥",
            prax(weak_distributivity),
        )
        .must_pass(),
        Claim::forall("NMR-14", "(Disjunction in Antecedent) (x∪y)^♥ ∩ (x∪z)^♥ ⊆ (x ∪ (y⊕z))^♥", prax(disjunction)),
        Claim::forall("NMR-15", "(Proof by Cases) (x∪y)^♥ ∩ (x∪y^c)^♥ ⊆ x^♥", prax(proof_by_cases)).must_pass(),
        Claim::forall("NMR-16", "(Conditionalization) y ⊆ (x∪z)^♥ -> (x ⟹ y) ⊆ z^♥", prax(conditionalization)).must_pass(),
        Claim::forall("NMR-16-CUT", "y ⊆ (x∪z)^♥ & x ⊆ z^♥ -> y ⊆ z^♥", prax(conditional_cut)),
        Claim::forall("NMR-17", "(subclassical subcumulativity) x ⊆ y ⊆ x^u -> x^♥ = y^♥", prax(subcumulativity)),
        Claim::forall("NMR-HEART-UPROP", "x^{♥u} ⊆ x^{u♥}", prax(heart_u)),
        Claim::forall("NMR-REGULAR", "the default choice function is regular", prax(regular)),
        Claim::forall("OPS-DIAMOND-INC", "(Inclusion) x ⊆ x^◊", prax(diamond_inc)),
        Claim::forall("OPS-DIAMOND-IDEM", "(Idempotence) x^{◊◊} = x^◊", prax(diamond_idem)),
        Claim::forall("OPS-DIAMOND-CUM", "(Cumulativity) x ⊆ y ⊆ x^◊ -> x^◊ = y^◊", prax(diamond_cum)),
        Claim::forall("OPS-DIAMOND-UPPER", "(Upper Inclusion) x^u ⊆ x^◊", prax(diamond_upper)),
        Claim::forall("OPS-DIAMOND-TOP", "(Top) S^◊ = S", prax(diamond_top)),
        Claim::forall("OPS-DIAMOND-L", "x^◊ = y^◊ -> x^l = y^l", prax(diamond_l)),
        Claim::forall("OPS-FLAT-U", "x^♭ = y^♭ -> x^u = y^u", prax(flat_u)),
        Claim::forall("OPS-CURLY-INC", "x^⋎ = x^{♥u}; x ⊆ x^⋎", prax(curly_inc)),
        Claim::forall("OPS-CURLY-IDEM", "x^{⋎⋎} = x^⋎", prax(curly_idem)),
        Claim::exists("CLS-U-NOT-BOUNDED", "𝒰(S) is not a bounded U-closure system", prax(u_not_bounded)),
        Claim::forall("CLS-HEART-LU", "♥(S) is a bounded LU-closure system for regular χ", prax(heart_lu)),
        Claim::forall("SAFE-CCO", "a safe map is a cautious closure operator", Domain::Poset(safe_cco)).cap(4),
    ]
}

/// `x^♥` for every subset under the default choice.
struct Hearts(Vec<Subset>);

impl Hearts {
    fn of(s: &Space) -> Option<Self> {
        s.heart_table(&LexLeast).ok().map(Hearts)
    }

    fn h(&self, x: Subset) -> Subset {
        self.0[x.bits() as usize]
    }
}

macro_rules! hearts {
    ($s:expr) => {
        match Hearts::of($s) {
            Some(h) => h,
            None => return Found::Skip,
        }
    };
}

fn inclusion(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets1(s.n(), |x| hit!(!sub(x, t.h(x)), "x" => x, "x^♥" => t.h(x))).into()
}

fn non_idem(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets1(s.n(), |x| hit!(!sub(t.h(x), t.h(t.h(x))), "x" => x)).into()
}

fn cautious(s: &Space, p: &mut Probe) -> Found {
    if !s.is_regular(&LexLeast).unwrap_or(false) {
        return Found::Skip;
    }
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(sub(x, y) && sub(y, t.h(x)) && !sub(t.h(x), t.h(y)), "x" => x, "y" => y)).into()
}

fn supra(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets1(s.n(), |x| hit!(!sub(s.u(x), t.h(x)), "x" => x)).into()
}

fn top(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let h = s.heart(s.full());
    hit!(h != s.full(), "S^♥" => h).into()
}

fn sub_left(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(!sub(s.heart(x), s.heart(s.u(x))), "x" => x)).into()
}

fn sub_right(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(!sub(s.heart(x), s.u(s.heart(x))), "x" => x)).into()
}

fn no_left_eq(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(s.u(x) == s.u(y) && t.h(x) != t.h(y), "x" => x, "y" => y)).into()
}

fn no_jump_eq(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(t.h(x) == t.h(y) && s.l(x) != s.l(y), "x" => x, "y" => y)).into()
}

fn no_weakening(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets3(s.n(), |x, y, z| {
        hit!(sub(x, t.h(y)) && sub(z, s.u(x)) && !sub(z, t.h(y)), "x" => x, "y" => y, "z" => z)
    })
    .into()
}

fn no_subclassical(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(sub(x, y) && sub(y, s.u(x)) && t.h(x) != t.h(y), "x" => x, "y" => y)).into()
}

fn distributivity(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(!sub(t.h(x) & t.h(y), t.h(s.u(x) & s.u(y))), "x" => x, "y" => y)).into()
}

fn weak_distributivity(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets3(s.n(), |x, y, z| {
        hit!(!sub(t.h(x | z) & t.h(y | z), t.h(z | (s.u(x) & s.u(y)))), "x" => x, "y" => y, "z" => z)
    })
    .into()
}

fn disjunction(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets3(s.n(), |x, y, z| hit!(!sub(t.h(x | y) & t.h(x | z), t.h(x | y | z)), "x" => x, "y" => y, "z" => z))
        .into()
}

fn proof_by_cases(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(!sub(t.h(x | y) & t.h(x | s.complement(y)), t.h(x)), "x" => x, "y" => y)).into()
}

fn conditionalization(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets3(s.n(), |x, y, z| {
        hit!(sub(y, t.h(x | z)) && !sub(s.complement(x) | y, t.h(z)), "x" => x, "y" => y, "z" => z)
    })
    .into()
}

fn conditional_cut(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets3(s.n(), |x, y, z| {
        let hz = t.h(z);
        hit!(sub(y, t.h(x | z)) && sub(x, hz) && !sub(y, hz), "x" => x, "y" => y, "z" => z)
    })
    .into()
}

fn subcumulativity(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets2(s.n(), |x, y| hit!(sub(x, y) && sub(y, s.u(x)) && t.h(x) != t.h(y), "x" => x, "y" => y)).into()
}

fn heart_u(s: &Space, p: &mut Probe) -> Found {
    let t = hearts!(s);
    p.sets1(s.n(), |x| hit!(!sub(s.u(t.h(x)), t.h(s.u(x))), "x" => x)).into()
}

fn regular(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    match s.is_regular(&LexLeast) {
        Ok(ok) => hit!(!ok).into(),
        Err(_) => Found::Skip,
    }
}

fn diamond_inc(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(!sub(x, s.diamond(x)), "x" => x)).into()
}

fn diamond_idem(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(s.diamond(s.diamond(x)) != s.diamond(x), "x" => x)).into()
}

fn diamond_cum(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |x, y| {
        let dx = s.diamond(x);
        hit!(sub(x, y) && sub(y, dx) && s.diamond(y) != dx, "x" => x, "y" => y)
    })
    .into()
}

fn diamond_upper(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(!sub(s.u(x), s.diamond(x)), "x" => x)).into()
}

fn diamond_top(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    hit!(s.diamond(s.full()) != s.full()).into()
}

fn diamond_l(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |x, y| hit!(s.diamond(x) == s.diamond(y) && s.l(x) != s.l(y), "x" => x, "y" => y)).into()
}

fn flat_u(s: &Space, p: &mut Probe) -> Found {
    p.sets2(s.n(), |x, y| hit!(s.flat(x) == s.flat(y) && s.u(x) != s.u(y), "x" => x, "y" => y)).into()
}

fn curly_inc(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| {
        let c = s.curlyvee(x);
        hit!(c != s.u(s.heart(x)) || !sub(x, c), "x" => x, "x^⋎" => c)
    })
    .into()
}

fn curly_idem(s: &Space, p: &mut Probe) -> Found {
    p.sets1(s.n(), |x| hit!(s.curlyvee(s.curlyvee(x)) != s.curlyvee(x), "x" => x)).into()
}

fn u_not_bounded(s: &Space, p: &mut Probe) -> Found {
    p.tick();
    let mut family: Vec<Subset> = Subset::all(s.n()).map(|x| s.u(x)).collect();
    family.sort();
    family.dedup();
    let c = s.closure_profile(&family);
    hit!(!(c.u_closure && c.bounded)).into()
}

fn heart_lu(s: &Space, p: &mut Probe) -> Found {
    if !s.is_regular(&LexLeast).unwrap_or(false) {
        return Found::Skip;
    }
    let t = hearts!(s);
    p.tick();
    let mut family = t.0.clone();
    family.sort();
    family.dedup();
    let c = s.closure_profile(&family);
    (!(c.lu_closure && c.bounded)).then(|| Witness::note(format!("{c:?}"))).into()
}

fn safe_cco(poset: &FinitePoset, p: &mut Probe) -> Found {
    p.tick();
    let profile = cco_profile(poset.n(), &safe_map_table(poset));
    (!profile.is_cco()).then(|| Witness::note(format!("{profile:?}"))).into()
}

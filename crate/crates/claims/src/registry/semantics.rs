//! The relation Υ on the transitive side and the falls-down predicate Π.

use praxkit_core::rough::RoughPair;
use praxkit_core::semantics::{DepSemantics, FallsDown};
use praxkit_core::{Space, Subset};

use super::{pairs_hit, prax};
use crate::claim::{Claim, Found, Probe, Witness};

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim::forall("SEM-UPS-1", "α = τ(α) -> Υαα", prax(ups1)).must_pass(),
        Claim::forall("SEM-UPS-2", "Υαγ -> γ ∧_w α = γ", prax(ups2)).must_pass(),
        Claim::forall("SEM-UPS-3", "Υαγ & Υγα -> α = γ", prax(ups3)).must_pass(),
        Claim::forall("SEM-UPS-4", "Υ⊥⊥ & Υ⊤⊤", prax(ups4)).must_pass(),
        Claim::forall("SEM-UPS-5", "Υαγ & Υβγ -> Υ(α ∨_w β)γ", prax(ups5)).must_pass(),
        Claim::forall("SEM-PI-1", "Παα", prax(pi1)).must_pass(),
        Claim::forall("SEM-PI-2", "Παμ & Πμα -> α = μ", prax(pi2)).must_pass(),
        Claim::forall("SEM-PI-3", "Παγ -> γ ⊆ α", prax(pi3)).must_pass(),
        Claim::exists("SEM-PI-CONV", "γ ⊆ α without Παγ", prax(pi_conv)),
        Claim::forall("SEM-PI-4", "α ≠ ⊥ & Παγ & Παμ -> β⁺(γ, μ) ≠ ⊥", prax(pi4)),
        Claim::forall("SEM-PI-5", "μ ∈ Π_α & μ ⊆ ν ⊆ α -> ν ∈ Π_α", prax(pi5)).must_pass(),
        Claim::forall("SEM-TAUBAR", "α ∈ ℛ ∩ ℛ_w <-> τ(α) = α", prax(tau_bar)),
    ]
}

/// The dependence semantics with `R_w = R^#` and its Υ pairs.
struct Ups {
    sem: DepSemantics,
    pairs: Vec<(RoughPair, RoughPair)>,
}

impl Ups {
    fn related(&self, a: RoughPair, g: RoughPair) -> bool {
        self.pairs.binary_search(&(a, g)).is_ok()
    }
}

fn ups_of(s: &Space) -> Result<Ups, Found> {
    let sem = DepSemantics::with_sharp(s.rel()).map_err(|_| Found::Skip)?;
    let pairs = sem.upsilon().map_err(|e| Found::Hit(Witness::note(format!("ϱ undefined: {e}"))))?;
    Ok(Ups { sem, pairs })
}

macro_rules! ups {
    ($s:expr, $p:expr) => {
        match ups_of($s) {
            Ok(u) => u,
            Err(f) => {
                $p.tick();
                return f;
            }
        }
    };
}

fn ups1(s: &Space, p: &mut Probe) -> Found {
    let u = ups!(s, p);
    let base = u.sem.base().elements();
    p.find(base.len(), |[i]| {
        let a = base[i];
        pairs_hit(u.sem.tau(a) == a && !u.related(a, a), &[("α", a)])
    })
    .into()
}

fn ups2(s: &Space, p: &mut Probe) -> Found {
    let u = ups!(s, p);
    p.find(u.pairs.len(), |[i]| {
        let (a, g) = u.pairs[i];
        pairs_hit(u.sem.wide().meet(g, a).ok() != Some(g), &[("α", a), ("γ", g)])
    })
    .into()
}

fn ups3(s: &Space, p: &mut Probe) -> Found {
    let u = ups!(s, p);
    p.find(u.pairs.len(), |[i]| {
        let (a, g) = u.pairs[i];
        pairs_hit(a != g && u.related(g, a), &[("α", a), ("γ", g)])
    })
    .into()
}

fn ups4(s: &Space, p: &mut Probe) -> Found {
    let u = ups!(s, p);
    p.tick();
    let (bot, top) = (u.sem.wide().bottom(), u.sem.wide().top());
    pairs_hit(!u.related(bot, bot) || !u.related(top, top), &[]).map(|w| w.with_note("Υ⊥⊥ or Υ⊤⊤ missing")).into()
}

fn ups5(s: &Space, p: &mut Probe) -> Found {
    let u = ups!(s, p);
    p.find(u.pairs.len(), |[i, j]| {
        let ((a, g), (b, h)) = (u.pairs[i], u.pairs[j]);
        if g != h {
            return None;
        }
        let join = u.sem.wide().join(a, b).ok();
        pairs_hit(join.is_none_or(|ab| !u.related(ab, g)), &[("α", a), ("β", b), ("γ", g)])
    })
    .into()
}

macro_rules! falls {
    ($s:expr) => {
        match FallsDown::new($s.rel()) {
            Ok(f) => f,
            Err(_) => return Found::Skip,
        }
    };
}

/// `Π_α` for every α, in the order of `pairs()`; a failure names the α with undefined degrees.
fn pi_sets(f: &FallsDown) -> Result<Vec<Vec<RoughPair>>, Found> {
    f.pairs()
        .iter()
        .map(|&a| {
            f.pi_set(a).map_err(|e| Found::Hit(pair_note(a, &format!("β⁺ undefined: {e}"))))
        })
        .collect()
}

fn pair_note(a: RoughPair, note: &str) -> Witness {
    pairs_hit(true, &[("α", a)]).expect("hit").with_note(note)
}

macro_rules! pis {
    ($f:expr, $p:expr) => {
        match pi_sets(&$f) {
            Ok(v) => v,
            Err(found) => {
                $p.tick();
                return found;
            }
        }
    };
}

fn pi1(s: &Space, p: &mut Probe) -> Found {
    let f = falls!(s);
    let sets = pis!(f, p);
    let el = f.pairs();
    p.find(el.len(), |[i]| pairs_hit(!sets[i].contains(&el[i]), &[("α", el[i])])).into()
}

fn pi2(s: &Space, p: &mut Probe) -> Found {
    let f = falls!(s);
    let sets = pis!(f, p);
    let el = f.pairs();
    p.find(el.len(), |[i, j]| {
        pairs_hit(i != j && sets[i].contains(&el[j]) && sets[j].contains(&el[i]), &[("α", el[i]), ("μ", el[j])])
    })
    .into()
}

fn pi3(s: &Space, p: &mut Probe) -> Found {
    let f = falls!(s);
    let sets = pis!(f, p);
    let el = f.pairs();
    p.find(el.len(), |[i]| {
        sets[i].iter().find(|g| !g.leq(el[i])).and_then(|&g| pairs_hit(true, &[("α", el[i]), ("γ", g)]))
    })
    .into()
}

fn pi_conv(s: &Space, p: &mut Probe) -> Found {
    let f = falls!(s);
    let sets = pis!(f, p);
    let el = f.pairs();
    p.find(el.len(), |[i, j]| {
        pairs_hit(el[j].leq(el[i]) && !sets[i].contains(&el[j]), &[("α", el[i]), ("γ", el[j])])
    })
    .into()
}

fn pi4(s: &Space, p: &mut Probe) -> Found {
    let f = falls!(s);
    let sets = pis!(f, p);
    let el = f.pairs();
    let bot = RoughPair::new(Subset::EMPTY, Subset::EMPTY);
    p.find(el.len(), |[i]| {
        if el[i] == bot {
            return None;
        }
        sets[i].iter().find_map(|&g| {
            sets[i].iter().find_map(|&m| {
                let b = f.beta_plus(g, m);
                pairs_hit(b.map_or(true, |b| b == bot), &[("α", el[i]), ("γ", g), ("μ", m)])
            })
        })
    })
    .into()
}

fn pi5(s: &Space, p: &mut Probe) -> Found {
    let f = falls!(s);
    let sets = pis!(f, p);
    let el = f.pairs();
    p.find(el.len(), |[i, k]| {
        let (a, v) = (el[i], el[k]);
        if !v.leq(a) || sets[i].contains(&v) {
            return None;
        }
        sets[i]
            .iter()
            .find(|m| m.leq(v))
            .and_then(|&m| pairs_hit(true, &[("α", a), ("μ", m), ("ν", v)]))
    })
    .into()
}

fn tau_bar(s: &Space, p: &mut Probe) -> Found {
    let Ok(sem) = DepSemantics::with_sharp(s.rel()) else { return Found::Skip };
    let base = sem.base().elements();
    p.find(base.len(), |[i]| {
        let a = base[i];
        pairs_hit(sem.wide().contains(a) != (sem.tau(a) == a), &[("α", a)])
    })
    .into()
}

//! Every registered claim, grouped by the module it exercises.

mod algebras;
mod approximations;
mod dependence;
mod operators;
mod probability;
mod relations;
mod semantics;

use praxkit_core::rough::RoughPair;
use praxkit_core::Subset;

use crate::claim::{Claim, Domain, RelEval, Witness};
use crate::gen::Constraint;

/// All claims in report order.
pub fn registry() -> Vec<Claim> {
    let mut v = Vec::new();
    v.extend(relations::claims());
    v.extend(approximations::claims());
    v.extend(operators::claims());
    v.extend(algebras::claims());
    v.extend(dependence::claims());
    v.extend(probability::claims());
    v.extend(semantics::claims());
    v
}

pub fn find(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}

fn prax(f: RelEval) -> Domain {
    Domain::Rel(Constraint::Prax, f)
}

fn on(c: Constraint, f: RelEval) -> Domain {
    Domain::Rel(c, f)
}

fn sub(a: Subset, b: Subset) -> bool {
    a.is_subset(b)
}

/// Neither set contains the other.
fn incomparable(a: Subset, b: Subset) -> bool {
    !a.is_subset(b) && !b.is_subset(a)
}

/// Witness naming the components of rough pairs.
fn pairs_witness(items: &[(&str, RoughPair)]) -> Witness {
    let mut w = Witness::default();
    for &(name, p) in items {
        w.sets.push((format!("{name}.l"), p.lower));
        w.sets.push((format!("{name}.u"), p.upper));
    }
    w
}

fn pairs_hit(cond: bool, items: &[(&str, RoughPair)]) -> Option<Witness> {
    cond.then(|| pairs_witness(items))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_nonempty() {
        let all = registry();
        let ids: HashSet<&str> = all.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), all.len());
        assert!(all.iter().all(|c| !c.statement.is_empty()));
        assert!(find("GRN-OTO").is_some());
    }
}

//! Small named relations used in examples and tests.

use crate::relation::BinRel;
use crate::set::Universe;

/// Reflexive three-point chain `Δ ∪ {(0,1), (1,2)}`.
pub fn c3() -> BinRel {
    let u = Universe::numbered(3).expect("valid universe");
    BinRel::from_index_pairs(u, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).expect("in range")
}

/// Nine-point relation on `{a,b,c,e,f,g,h,l,n}`, with the diagonal added.
pub fn worked_relation() -> BinRel {
    let u = Universe::new(["a", "b", "c", "e", "f", "g", "h", "l", "n"]).expect("valid universe");
    let pairs = [
        ("a", "a"),
        ("l", "l"),
        ("n", "n"),
        ("n", "h"),
        ("h", "n"),
        ("l", "n"),
        ("g", "c"),
        ("c", "g"),
        ("g", "l"),
        ("b", "g"),
        ("g", "b"),
        ("h", "g"),
        ("a", "b"),
        ("b", "c"),
        ("h", "a"),
        ("a", "c"),
    ];
    BinRel::build(u, &pairs, true).expect("labels exist")
}

/// Same pairs as [`worked_relation`] without adding the diagonal.
pub fn worked_raw() -> BinRel {
    let r = worked_relation();
    let mut pairs: Vec<(usize, usize)> = r.pairs().filter(|(x, y)| x != y).collect();
    let u = r.universe().clone();
    for l in ["a", "l", "n"] {
        let i = u.index_of(l).expect("label exists");
        pairs.push((i, i));
    }
    BinRel::from_index_pairs(u, pairs).expect("in range")
}

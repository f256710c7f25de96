//! Enumeration of Dynkin types for exhaustive checks.

use crate::rootsys::{Family, SimpleType};

/// Every simple type of rank at most `max_rank`, Bourbaki ranges
/// (`B2`, `C2` and `D4` onwards; `E6`..`E8`, `F4`, `G2`).
pub fn simple_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = SimpleType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

/// Every semisimple type of total rank at most `max_rank`, as a
/// non-decreasing list of simple types (so each isomorphism class of product
/// appears once, except that `B2` and `C2` are listed separately).
pub fn semisimple_types(max_rank: usize, keep: impl Fn(SimpleType) -> bool) -> Vec<Vec<SimpleType>> {
    let mut simple: Vec<SimpleType> = simple_types(max_rank).into_iter().filter(|&t| keep(t)).collect();
    simple.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend(&simple, 0, max_rank, &mut cur, &mut out);
    out
}

fn extend(
    simple: &[SimpleType],
    from: usize,
    budget: usize,
    cur: &mut Vec<SimpleType>,
    out: &mut Vec<Vec<SimpleType>>,
) {
    for k in from..simple.len() {
        let t = simple[k];
        if t.rank > budget {
            continue;
        }
        cur.push(t);
        out.push(cur.clone());
        extend(simple, k, budget - t.rank, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // A1..A4, B2..B4, C2..C4, D4, F4, G2
        assert_eq!(simple_types(4).len(), 4 + 3 + 3 + 1 + 1 + 1);
        // rank <= 2: A1, A2, B2, C2, G2, A1xA1
        assert_eq!(semisimple_types(2, |_| true).len(), 6);
        let laced = semisimple_types(3, SimpleType::is_simply_laced);
        // A1, A2, A3, A1xA1, A1xA2, A1xA1xA1
        assert_eq!(laced.len(), 6);
    }
}

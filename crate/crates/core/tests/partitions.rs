use std::collections::BTreeSet;

use diskgw::partitions::{
    automorphism_order, cell_dimension, cell_dimension_from_factors, cell_summary, enumerate_partitions,
    ordered_arrangements, Ghost, GhostPartition,
};

/// Independent enumeration: every sorted sequence of ghosts drawn from the
/// finite list of candidate ghost types, accepted when the sums match.
fn brute_force(g: u32, h: u32) -> BTreeSet<Vec<Ghost>> {
    let mut kinds: Vec<Ghost> = (1..=g).map(Ghost::Closed).collect();
    for gi in 0..=g {
        for hi in 1..=h {
            if 2 * gi + hi > 1 {
                kinds.push(Ghost::Open(gi, hi));
            }
        }
    }
    let mut out = BTreeSet::new();
    fn go(kinds: &[Ghost], start: usize, acc: &mut Vec<Ghost>, g: u32, h: u32, out: &mut BTreeSet<Vec<Ghost>>) {
        let genus: u32 = acc
            .iter()
            .map(|x| match x {
                Ghost::Closed(a) | Ghost::Open(a, _) => *a,
            })
            .sum();
        let bdry: u32 = 1 + acc
            .iter()
            .map(|x| match x {
                Ghost::Open(_, b) => b - 1,
                _ => 0,
            })
            .sum::<u32>();
        if genus > g || bdry > h {
            return;
        }
        if genus == g && bdry == h {
            out.insert(acc.clone());
        }
        for i in start..kinds.len() {
            // (0,1)-free kinds all add genus or boundary, so recursion ends
            acc.push(kinds[i]);
            go(kinds, i, acc, g, h, out);
            acc.pop();
        }
    }
    go(&kinds, 0, &mut Vec::new(), g, h, &mut out);
    out
}

fn sorted(p: &GhostPartition) -> Vec<Ghost> {
    let mut v = p.ghosts();
    v.sort();
    v
}

#[test]
fn enumeration_matches_brute_force() {
    for g in 0..=5 {
        for h in 1..=4 {
            let ours: BTreeSet<Vec<Ghost>> = enumerate_partitions(g, h).iter().map(sorted).collect();
            assert_eq!(ours.len(), enumerate_partitions(g, h).len(), "duplicates for ({g},{h})");
            assert_eq!(ours, brute_force(g, h), "({g},{h})");
        }
    }
}

#[test]
fn two_colored_partition_counts() {
    // coefficients of prod (1-x^k)^-2
    let counts: Vec<usize> = (0..=8).map(|g| enumerate_partitions(g, 1).len()).collect();
    assert_eq!(counts, [1, 2, 5, 10, 20, 36, 65, 110, 185]);
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

#[test]
fn arrangements_by_permutation_counting() {
    for g in 0..=5 {
        for h in 1..=2 {
            for p in enumerate_partitions(g, h) {
                let ghosts = p.ghosts();
                let all = permutations(&ghosts);
                let distinct: BTreeSet<Vec<Ghost>> = all.iter().cloned().collect();
                assert_eq!(ordered_arrangements(&p), distinct.len() as u64, "{p}");
                let fixing = all.len() / distinct.len();
                assert_eq!(automorphism_order(&p), fixing as u64, "{p}");
            }
        }
    }
}

#[test]
fn rank_identities() {
    for g in 0..=6 {
        for h in 1..=3 {
            for p in enumerate_partitions(g, h) {
                let s = cell_summary(&p);
                assert_eq!(s.ob_rank, 3 * (2 * g + h - 1), "{p}");
                assert_eq!(s.obf_rank, cell_dimension(&p), "{p}");
                assert_eq!(cell_dimension_from_factors(&p), Ok(cell_dimension(&p)), "{p}");
            }
        }
    }
}

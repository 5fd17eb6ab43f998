//! Exhaustive cross-checks of the fast algorithms against brute force on
//! every small tree.

use std::collections::HashSet;

use num_bigint::BigUint;
use treedist::generate::{all_rooted_trees, all_trees, all_trees_up_to};
use treedist::list::ListAssignment;
use treedist::oracle::{self, Bounds};
use treedist::{
    construct_distinguishing_coloring, construct_proper_distinguishing_coloring,
    count_distinguishing, count_list_distinguishing, count_proper_distinguishing,
    count_proper_list_distinguishing, distinguishing_chromatic_number, distinguishing_number,
    rank_proper_distinguishing, to_rooted, unrank_distinguishing, unrank_proper_distinguishing,
    Center, RootedTree, Tree, DEFAULT_CLASS_CAP,
};

fn rooted_up_to(n: usize) -> Vec<RootedTree> {
    (1..=n).flat_map(all_rooted_trees).collect()
}

#[test]
fn class_counts_match_enumeration() {
    for rt in rooted_up_to(6) {
        for k in 1..=3 {
            let fast = count_distinguishing(&rt, k, None);
            let brute =
                oracle::brute_count_classes(&rt, k, false, None, Bounds::default()).unwrap();
            assert_eq!(fast, brute, "D(T;{k}) on {}", rt.to_parens());
            let proper = count_proper_distinguishing(&rt, k, None).mul_u64(k, None);
            let brute = oracle::brute_count_classes(&rt, k, true, None, Bounds::default()).unwrap();
            assert_eq!(proper, brute, "k * D_chi(T;{k},1) on {}", rt.to_parens());
        }
    }
}

#[test]
fn center_reductions_match_enumeration() {
    for t in all_trees_up_to(6) {
        let rt = to_rooted(&t);
        for k in 1..=3 {
            let brute =
                oracle::brute_count_classes(&rt, k, false, None, Bounds::default()).unwrap();
            assert_eq!(count_distinguishing(&rt, k, None), brute);
        }
    }
}

#[test]
fn parameters_match_brute_force() {
    for t in all_trees_up_to(8) {
        let d = oracle::brute_distinguishing_number(&t, Bounds::default()).unwrap();
        let c = oracle::brute_chromatic_distinguishing_number(&t, Bounds::default()).unwrap();
        assert_eq!(distinguishing_number(&t), d, "D on {:?}", t.edges());
        assert_eq!(
            distinguishing_chromatic_number(&t),
            c,
            "chi_D on {:?}",
            t.edges()
        );
        assert!(c == d || c == d + 1);
    }
}

#[test]
fn constructed_colorings_verify() {
    for t in all_trees_up_to(9) {
        let phi = construct_distinguishing_coloring(&t, None).unwrap();
        assert!(phi.within_palette(distinguishing_number(&t)));
        assert!(oracle::is_distinguishing(&t, phi.as_slice()).unwrap());
        let psi = construct_proper_distinguishing_coloring(&t, None).unwrap();
        assert!(psi.within_palette(distinguishing_chromatic_number(&t)));
        assert!(oracle::is_proper(&t, psi.as_slice()), "{:?}", t.edges());
        assert!(oracle::is_distinguishing(&t, psi.as_slice()).unwrap());
    }
}

#[test]
fn unrank_enumerates_every_class_once() {
    for rt in rooted_up_to(6) {
        let group = oracle::rooted_automorphisms(&rt).unwrap();
        for k in 1..=3u64 {
            let count = count_distinguishing(&rt, k, None).to_u64().unwrap();
            let forms: HashSet<Vec<u32>> = (0..count)
                .map(|i| {
                    let phi = unrank_distinguishing(&rt, k, &BigUint::from(i)).unwrap();
                    group.canonical_form(phi.as_slice())
                })
                .collect();
            assert_eq!(forms.len() as u64, count, "{} at k = {k}", rt.to_parens());
            assert!(unrank_distinguishing(&rt, k, &BigUint::from(count)).is_err());
        }
    }
}

#[test]
fn proper_unrank_enumerates_every_class_once() {
    for rt in rooted_up_to(6) {
        let group = oracle::rooted_automorphisms(&rt).unwrap();
        for k in 2..=3u64 {
            let per_root = count_proper_distinguishing(&rt, k, None).to_u64().unwrap();
            let mut forms = HashSet::new();
            for root_color in 1..=k as u32 {
                for i in 0..per_root {
                    let idx = BigUint::from(i);
                    let phi = unrank_proper_distinguishing(&rt, k, root_color, &idx).unwrap();
                    assert_eq!(phi.get(rt.root()), root_color);
                    assert!(oracle::is_proper(rt.base(), phi.as_slice()));
                    assert!(group.is_distinguishing(phi.as_slice()));
                    assert_eq!(rank_proper_distinguishing(&rt, k, &phi).unwrap(), idx);
                    assert!(forms.insert(group.canonical_form(phi.as_slice())));
                }
            }
            let brute = oracle::brute_count_classes(&rt, k, true, None, Bounds::default()).unwrap();
            assert_eq!(brute.to_u64(), Some(forms.len() as u64));
        }
    }
}

/// Every list assignment on `rt` with lists drawn from the subsets of
/// `{1, 2}` of size `1..=2`, capped to keep the sweep small.
fn small_assignments(n: usize) -> Vec<ListAssignment> {
    let subsets = [vec![1], vec![2], vec![1, 2]];
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total.min(243) {
        let mut c = code;
        let lists = (0..n)
            .map(|_| {
                let s = subsets[c % 3].iter().copied().collect();
                c /= 3;
                s
            })
            .collect();
        out.push(ListAssignment::new(lists).unwrap());
    }
    out
}

#[test]
fn list_counts_match_enumeration() {
    for rt in rooted_up_to(5) {
        for lists in small_assignments(rt.len()) {
            let fast = count_list_distinguishing(&rt, &lists, DEFAULT_CLASS_CAP).unwrap();
            let brute = oracle::brute_count_classes(&rt, 0, false, Some(&lists), Bounds::default())
                .unwrap();
            assert_eq!(fast, brute, "{} with {:?}", rt.to_parens(), lists);
            let proper: BigUint = lists
                .list(rt.root())
                .iter()
                .map(|&i| {
                    count_proper_list_distinguishing(&rt, &lists, i, DEFAULT_CLASS_CAP)
                        .unwrap()
                        .into_value()
                })
                .sum();
            let brute =
                oracle::brute_count_classes(&rt, 0, true, Some(&lists), Bounds::default()).unwrap();
            assert_eq!(
                &proper,
                brute.value(),
                "proper on {} with {:?}",
                rt.to_parens(),
                lists
            );
        }
    }
}

#[test]
fn orbits_match_the_group() {
    for t in all_trees_up_to(8) {
        let rt = to_rooted(&t);
        let ours = rt.canon().orbits(&rt);
        let theirs = oracle::rooted_automorphisms(&rt).unwrap().orbits(rt.len());
        for a in 0..rt.len() {
            for b in 0..rt.len() {
                assert_eq!(
                    ours[a] == ours[b],
                    theirs[a] == theirs[b],
                    "{a}, {b} in {}",
                    rt.to_parens()
                );
            }
        }
    }
}

#[test]
fn codes_decide_isomorphism() {
    let trees: Vec<RootedTree> = rooted_up_to(6)
        .into_iter()
        .chain(all_trees_up_to(8).iter().map(to_rooted))
        .collect();
    let subtrees: Vec<RootedTree> = trees
        .iter()
        .flat_map(|rt| (0..rt.len()).map(move |v| rt.subtree(v)))
        .take(3000)
        .collect();
    for (i, a) in subtrees.iter().enumerate().step_by(7) {
        for b in subtrees.iter().skip(i).step_by(5) {
            let same = a.canonical_code(a.root()) == b.canonical_code(b.root());
            assert_eq!(
                same,
                oracle::is_isomorphic_rooted(a, b),
                "{} vs {}",
                a.to_parens(),
                b.to_parens()
            );
        }
    }
}

#[test]
fn groups_are_closed() {
    for t in all_trees_up_to(8) {
        let group = oracle::tree_automorphisms(&t).unwrap();
        assert!(group.contains_identity());
        assert!(group.is_closed());
        assert!(group.elements().iter().all(|a| a.preserves_adjacency(&t)));
    }
}

#[test]
fn rigid_halves_leave_at_most_a_swap() {
    let mut checked = 0;
    for n in 2..=10 {
        for t in all_trees(n) {
            if !matches!(t.center(), Center::Edge(..)) {
                continue;
            }
            let two = bipartition(&t);
            if oracle::is_distinguishing(&t, &two).unwrap() {
                checked += 1;
                assert!(
                    oracle::tree_automorphisms(&t).unwrap().order() <= 2,
                    "{:?}",
                    t.edges()
                );
            }
        }
    }
    assert!(checked > 0);
}

fn bipartition(t: &Tree) -> Vec<u32> {
    let mut colors = vec![0u32; t.len()];
    colors[0] = 1;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for w in t.neighbors(v) {
            if colors[w] == 0 {
                colors[w] = 3 - colors[v];
                stack.push(w);
            }
        }
    }
    colors
}

#[test]
fn subdivision_keeps_the_symmetry() {
    for t in all_trees_up_to(7) {
        let rt = to_rooted(&t);
        let group = oracle::tree_automorphisms(&t).unwrap();
        let rooted = oracle::rooted_automorphisms(&rt).unwrap();
        assert_eq!(group.order(), rooted.order(), "{:?}", t.edges());
        // every coloring with two colors, the subdivision vertex fresh
        for mask in 0u32..(1 << t.len()) {
            let colors: Vec<u32> = (0..t.len()).map(|v| 1 + (mask >> v & 1)).collect();
            let mut extended = colors.clone();
            if rt.subdivided() {
                extended.push(3);
            }
            assert_eq!(
                group.is_distinguishing(&colors),
                rooted.is_distinguishing(&extended)
            );
        }
    }
}

//! Tree families and random instances for tests and benchmarks.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::list::ListAssignment;
use crate::tree::{to_rooted, CanonicalCode, RootedTree, Tree};

/// The path on `n >= 1` vertices.
pub fn path(n: usize) -> Tree {
    assert!(n >= 1);
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges).expect("a path is a tree")
}

/// The star `K_{1,m}`, hub `0`.
pub fn star(m: usize) -> Tree {
    let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
    Tree::from_edges(m + 1, &edges).expect("a star is a tree")
}

fn unrooted_key(t: &Tree) -> CanonicalCode {
    let rt = to_rooted(t);
    rt.canonical_code(rt.root())
}

fn extend_by_leaf(t: &Tree, v: usize) -> Tree {
    let n = t.len();
    let mut edges = t.edges();
    edges.push((v, n));
    Tree::from_edges(n + 1, &edges).expect("adding a leaf keeps a tree")
}

/// One tree per isomorphism class on `n` vertices (`n >= 1`), with labels
/// `0..n`.
pub fn all_trees(n: usize) -> Vec<Tree> {
    assert!(n >= 1);
    let mut level = vec![Tree::single("0")];
    for _ in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.len() {
                let grown = extend_by_leaf(t, v);
                if seen.insert(unrooted_key(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// All trees on `1..=max_n` vertices, smallest first.
pub fn all_trees_up_to(max_n: usize) -> Vec<Tree> {
    (1..=max_n).flat_map(all_trees).collect()
}

/// One rooted tree per isomorphism class on `n` vertices (root `0`).
pub fn all_rooted_trees(n: usize) -> Vec<RootedTree> {
    assert!(n >= 1);
    let mut level = vec![Tree::single("0")];
    for _ in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.len() {
                let grown = extend_by_leaf(t, v);
                if seen.insert(RootedTree::new(grown.clone(), 0).canonical_code(0)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|t| RootedTree::new(t, 0)).collect()
}

/// A uniformly random labeled tree on `n` vertices, decoded from a random
/// Prufer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1);
    if n <= 2 {
        return path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a leaf is always left");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Tree::from_edges(n, &edges).expect("a Prufer sequence decodes to a tree")
}

/// Random lists of size `k` drawn from the colors `1..=universe`.
pub fn random_uniform_lists<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    universe: u32,
    rng: &mut R,
) -> ListAssignment {
    assert!(k >= 1 && k <= universe as usize);
    let colors: Vec<u32> = (1..=universe).collect();
    let lists = (0..n)
        .map(|_| {
            colors
                .choose_multiple(rng, k)
                .copied()
                .collect::<BTreeSet<u32>>()
        })
        .collect();
    ListAssignment::new(lists).expect("lists are nonempty")
}

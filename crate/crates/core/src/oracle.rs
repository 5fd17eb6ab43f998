//! Brute-force ground truth for small trees.
//!
//! Nothing here uses canonical codes, centers, or child classes: automorphisms
//! are found by backtracking over adjacency-preserving maps, colorings are
//! enumerated exhaustively, and isomorphism is tested by direct matching.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::bigcount::BigCount;
use crate::list::ListAssignment;
use crate::tree::{RootedTree, Tree};

pub const DEFAULT_GROUP_BOUND: usize = 1_000_000;
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("automorphism group has more than {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("enumeration of {size} colorings exceeds the bound {bound}")]
    EnumerationTooLarge { size: String, bound: u64 },
    #[error("coloring has {got} entries for {expected} vertices")]
    WrongLength { got: usize, expected: usize },
}

/// Enumeration limits. Exceeding either one is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub group: usize,
    pub enumeration: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            group: DEFAULT_GROUP_BOUND,
            enumeration: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

/// A vertex permutation, `image[v]` being where `v` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Automorphism {
        Automorphism {
            image: (0..n).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Automorphism {
        Automorphism { image }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Automorphism { image }
    }

    pub fn preserves_adjacency(&self, t: &Tree) -> bool {
        t.edges().into_iter().all(|(u, v)| {
            let (a, b) = (self.image[u], self.image[v]);
            t.neighbors(a).any(|w| w == b)
        })
    }

    /// Whether `colors` is constant along this permutation.
    pub fn preserves(&self, colors: &[u32]) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(v, &w)| colors[v] == colors[w])
    }
}

/// An explicitly listed automorphism group.
#[derive(Debug, Clone)]
pub struct AutGroup {
    elements: Vec<Automorphism>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn contains(&self, a: &Automorphism) -> bool {
        self.elements.contains(a)
    }

    pub fn contains_identity(&self) -> bool {
        self.elements.iter().any(Automorphism::is_identity)
    }

    /// Closure under composition and inverses.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&Automorphism> = self.elements.iter().collect();
        self.elements.iter().all(|a| {
            set.contains(&a.inverse()) && self.elements.iter().all(|b| set.contains(&a.compose(b)))
        })
    }

    /// True iff every non-identity element moves some color.
    pub fn is_distinguishing(&self, colors: &[u32]) -> bool {
        self.elements
            .iter()
            .all(|a| a.is_identity() || !a.preserves(colors))
    }

    /// The lexicographically least image of `colors` under the group; equal
    /// exactly for equivalent colorings.
    pub fn canonical_form(&self, colors: &[u32]) -> Vec<u32> {
        self.elements
            .iter()
            .map(|a| {
                (0..colors.len())
                    .map(|v| colors[a.apply(v)])
                    .collect::<Vec<u32>>()
            })
            .min()
            .expect("the group contains the identity")
    }

    /// Whether some element maps one coloring onto the other.
    pub fn equivalent(&self, a: &[u32], b: &[u32]) -> bool {
        self.elements
            .iter()
            .any(|g| (0..a.len()).all(|v| a[g.apply(v)] == b[v]))
    }

    /// Orbit id per vertex: the smallest vertex of its orbit.
    pub fn orbits(&self, n: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = (0..n).collect();
        for a in &self.elements {
            for v in 0..n {
                let w = a.apply(v);
                orbit[w] = orbit[w].min(v);
            }
        }
        orbit
    }
}

struct Search<'a> {
    adj: Vec<Vec<usize>>,
    colors: Option<&'a [u32]>,
    order: Vec<usize>,
    bfs_parent: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(t: &'a Tree, start: usize, colors: Option<&'a [u32]>) -> Self {
        let n = t.len();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| t.neighbors(v).collect()).collect();
        let mut order = Vec::with_capacity(n);
        let mut bfs_parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    bfs_parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        Search {
            adj,
            colors,
            order,
            bfs_parent,
            image: vec![usize::MAX; n],
            used: vec![false; n],
        }
    }

    fn compatible(&self, v: usize, w: usize) -> bool {
        !self.used[w]
            && self.adj[v].len() == self.adj[w].len()
            && self.colors.is_none_or(|c| c[v] == c[w])
    }

    /// Extends the map along the BFS order; calls `found` on every complete
    /// automorphism and stops as soon as it returns `true`.
    fn extend(&mut self, i: usize, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == self.order.len() {
            return found(&self.image);
        }
        let v = self.order[i];
        let p = self.bfs_parent[v];
        let targets: Vec<usize> = self.adj[self.image[p]].to_vec();
        for w in targets {
            if self.compatible(v, w) {
                self.image[v] = w;
                self.used[w] = true;
                let stop = self.extend(i + 1, found);
                self.used[w] = false;
                self.image[v] = usize::MAX;
                if stop {
                    return true;
                }
            }
        }
        false
    }

    /// Runs the search with `start` sent to every compatible vertex (or only
    /// to itself when it is fixed).
    fn run(&mut self, fixed: bool, found: &mut dyn FnMut(&[usize]) -> bool) {
        let start = self.order[0];
        let n = self.order.len();
        let targets: Vec<usize> = if fixed { vec![start] } else { (0..n).collect() };
        for w in targets {
            if self.compatible(start, w) {
                self.image[start] = w;
                self.used[w] = true;
                let stop = self.extend(1, found);
                self.used[w] = false;
                self.image[start] = usize::MAX;
                if stop {
                    return;
                }
            }
        }
    }
}

/// All automorphisms of `t`, or those fixing `fixed` when given.
pub fn enumerate_automorphisms(
    t: &Tree,
    fixed: Option<usize>,
    bound: usize,
) -> Result<AutGroup, OracleError> {
    let mut search = Search::new(t, fixed.unwrap_or(0), None);
    let mut elements = Vec::new();
    let mut overflow = false;
    search.run(fixed.is_some(), &mut |image| {
        if elements.len() == bound {
            overflow = true;
            return true;
        }
        elements.push(Automorphism::from_images(image.to_vec()));
        false
    });
    if overflow {
        return Err(OracleError::GroupTooLarge { bound });
    }
    Ok(AutGroup { elements })
}

pub fn tree_automorphisms(t: &Tree) -> Result<AutGroup, OracleError> {
    enumerate_automorphisms(t, None, DEFAULT_GROUP_BOUND)
}

/// Root-fixing automorphisms of a rooted tree.
pub fn rooted_automorphisms(rt: &RootedTree) -> Result<AutGroup, OracleError> {
    enumerate_automorphisms(rt.base(), Some(rt.root()), DEFAULT_GROUP_BOUND)
}

/// A non-identity automorphism preserving `colors`, if one exists.
pub fn color_preserving_automorphism(
    t: &Tree,
    colors: &[u32],
    fixed: Option<usize>,
) -> Option<Automorphism> {
    let mut search = Search::new(t, fixed.unwrap_or(0), Some(colors));
    let mut hit = None;
    search.run(fixed.is_some(), &mut |image| {
        if image.iter().enumerate().any(|(i, &j)| i != j) {
            hit = Some(Automorphism::from_images(image.to_vec()));
            true
        } else {
            false
        }
    });
    hit
}

/// True iff no nontrivial automorphism of `t` preserves `colors`.
pub fn is_distinguishing(t: &Tree, colors: &[u32]) -> Result<bool, OracleError> {
    check_len(colors, t.len())?;
    Ok(color_preserving_automorphism(t, colors, None).is_none())
}

/// Distinguishing with respect to root-fixing automorphisms.
pub fn is_distinguishing_rooted(rt: &RootedTree, colors: &[u32]) -> Result<bool, OracleError> {
    check_len(colors, rt.len())?;
    Ok(color_preserving_automorphism(rt.base(), colors, Some(rt.root())).is_none())
}

pub fn is_proper(t: &Tree, colors: &[u32]) -> bool {
    t.edges().into_iter().all(|(u, v)| colors[u] != colors[v])
}

fn check_len(colors: &[u32], n: usize) -> Result<(), OracleError> {
    if colors.len() == n {
        Ok(())
    } else {
        Err(OracleError::WrongLength {
            got: colors.len(),
            expected: n,
        })
    }
}

/// Counts equivalence classes (under root-fixing automorphisms) of
/// distinguishing colorings of `rt`, drawn from `[k]` or from `lists`, by
/// enumerating every coloring.
pub fn brute_count_classes(
    rt: &RootedTree,
    k: u64,
    proper: bool,
    lists: Option<&ListAssignment>,
    bounds: Bounds,
) -> Result<BigCount, OracleError> {
    let n = rt.len();
    let domains: Vec<Vec<u32>> = match lists {
        Some(l) => (0..n)
            .map(|v| l.list(v).iter().copied().collect())
            .collect(),
        None => vec![(1..=k as u32).collect(); n],
    };
    let mut size: u128 = 1;
    for d in &domains {
        size = size.saturating_mul(d.len() as u128);
    }
    if size > bounds.enumeration as u128 {
        return Err(OracleError::EnumerationTooLarge {
            size: size.to_string(),
            bound: bounds.enumeration,
        });
    }
    if domains.iter().any(Vec::is_empty) {
        return Ok(BigCount::zero());
    }
    let group = enumerate_automorphisms(rt.base(), Some(rt.root()), bounds.group)?;
    let t = rt.base();
    let mut digits = vec![0usize; n];
    let mut colors: Vec<u32> = domains.iter().map(|d| d[0]).collect();
    let mut classes: HashSet<Vec<u32>> = HashSet::new();
    loop {
        if (!proper || is_proper(t, &colors)) && group.is_distinguishing(&colors) {
            classes.insert(group.canonical_form(&colors));
        }
        // next coloring in mixed radix
        let mut i = 0;
        loop {
            if i == n {
                return Ok(BigCount::exact(classes.len() as u64));
            }
            digits[i] += 1;
            if digits[i] < domains[i].len() {
                colors[i] = domains[i][digits[i]];
                break;
            }
            digits[i] = 0;
            colors[i] = domains[i][0];
            i += 1;
        }
    }
}

/// Whether some (proper) distinguishing coloring of `t` uses at most `k`
/// colors. Colorings are enumerated up to renaming of colors (restricted
/// growth strings along a BFS order), which both properties are invariant
/// under.
pub fn exists_distinguishing_coloring(
    t: &Tree,
    k: u64,
    proper: bool,
    bounds: Bounds,
) -> Result<bool, OracleError> {
    let n = t.len();
    let mut order = Vec::with_capacity(n);
    let mut bfs_parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                bfs_parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    struct Walk<'a> {
        t: &'a Tree,
        order: Vec<usize>,
        bfs_parent: Vec<usize>,
        colors: Vec<u32>,
        k: u32,
        proper: bool,
        visited: u64,
        bound: u64,
    }

    impl Walk<'_> {
        fn go(&mut self, i: usize, used: u32) -> Result<bool, OracleError> {
            if i == self.order.len() {
                self.visited += 1;
                if self.visited > self.bound {
                    return Err(OracleError::EnumerationTooLarge {
                        size: format!(">{}", self.bound),
                        bound: self.bound,
                    });
                }
                return Ok(color_preserving_automorphism(self.t, &self.colors, None).is_none());
            }
            let v = self.order[i];
            let top = (used + 1).min(self.k);
            for c in 1..=top {
                if self.proper && i > 0 && self.colors[self.bfs_parent[v]] == c {
                    continue;
                }
                self.colors[v] = c;
                if self.go(i + 1, used.max(c))? {
                    return Ok(true);
                }
            }
            self.colors[v] = 0;
            Ok(false)
        }
    }

    let mut walk = Walk {
        t,
        order,
        bfs_parent,
        colors: vec![0; n],
        k: k as u32,
        proper,
        visited: 0,
        bound: bounds.enumeration,
    };
    walk.go(0, 0)
}

/// Least `k` admitting a distinguishing `k`-coloring, by direct search.
pub fn brute_distinguishing_number(t: &Tree, bounds: Bounds) -> Result<u64, OracleError> {
    for k in 1..=t.len() as u64 {
        if exists_distinguishing_coloring(t, k, false, bounds)? {
            return Ok(k);
        }
    }
    unreachable!("coloring every vertex differently distinguishes")
}

/// Least `k` admitting a proper distinguishing `k`-coloring, by direct search.
pub fn brute_chromatic_distinguishing_number(t: &Tree, bounds: Bounds) -> Result<u64, OracleError> {
    for k in 1..=t.len() as u64 {
        if exists_distinguishing_coloring(t, k, true, bounds)? {
            return Ok(k);
        }
    }
    unreachable!("coloring every vertex differently is proper and distinguishing")
}

/// Root-to-root isomorphism test by matching children recursively.
pub fn is_isomorphic_rooted(a: &RootedTree, b: &RootedTree) -> bool {
    if a.len() != b.len() {
        return false;
    }
    iso_at(a, a.root(), b, b.root())
}

fn subtree_size(rt: &RootedTree, v: usize) -> usize {
    1 + rt
        .children(v)
        .iter()
        .map(|&c| subtree_size(rt, c))
        .sum::<usize>()
}

fn iso_at(a: &RootedTree, u: usize, b: &RootedTree, v: usize) -> bool {
    let (cu, cv) = (a.children(u), b.children(v));
    if cu.len() != cv.len() || subtree_size(a, u) != subtree_size(b, v) {
        return false;
    }
    // isomorphism is an equivalence relation, so greedy matching suffices
    let mut taken = vec![false; cv.len()];
    for &x in cu {
        let hit = (0..cv.len()).find(|&j| !taken[j] && iso_at(a, x, b, cv[j]));
        match hit {
            Some(j) => taken[j] = true,
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{parse_parens, to_rooted};

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    fn star(m: usize) -> Tree {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Tree::from_edges(m + 1, &edges).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(tree_automorphisms(&path(3)).unwrap().order(), 2);
        assert_eq!(tree_automorphisms(&star(3)).unwrap().order(), 6);
        assert_eq!(tree_automorphisms(&path(1)).unwrap().order(), 1);
        assert_eq!(tree_automorphisms(&path(2)).unwrap().order(), 2);
    }

    #[test]
    fn smallest_asymmetric_tree_is_rigid() {
        let t = Tree::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        let g = tree_automorphisms(&t).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains_identity());
        // exhaustive confirmation over all 7! permutations is cheap at this size
        let mut rigid = true;
        let mut perm: Vec<usize> = (0..7).collect();
        heap_permutations(&mut perm, 7, &mut |p| {
            let a = Automorphism::from_images(p.to_vec());
            if !a.is_identity() && a.preserves_adjacency(&t) {
                rigid = false;
            }
        });
        assert!(rigid);
    }

    fn heap_permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == 1 {
            f(p);
            return;
        }
        for i in 0..k {
            heap_permutations(p, k - 1, f);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }

    #[test]
    fn groups_are_closed() {
        for t in [path(5), star(4), path(6)] {
            let g = tree_automorphisms(&t).unwrap();
            assert!(g.is_closed());
            assert!(g.elements().iter().all(|a| a.preserves_adjacency(&t)));
        }
    }

    #[test]
    fn group_bound_is_enforced() {
        assert_eq!(
            enumerate_automorphisms(&star(5), None, 100).unwrap_err(),
            OracleError::GroupTooLarge { bound: 100 }
        );
        assert_eq!(
            enumerate_automorphisms(&star(5), None, 120)
                .unwrap()
                .order(),
            120
        );
    }

    #[test]
    fn distinguishing_predicates() {
        let p2 = path(2);
        assert!(is_distinguishing(&p2, &[1, 2]).unwrap());
        assert!(!is_distinguishing(&p2, &[1, 1]).unwrap());
        let k13 = star(3);
        assert!(is_distinguishing(&k13, &[1, 1, 2, 3]).unwrap());
        let g = tree_automorphisms(&k13).unwrap();
        assert!(g.is_distinguishing(&[1, 1, 2, 3]));
        assert!(!g.is_distinguishing(&[1, 1, 2, 2]));
        assert!(is_proper(&p2, &[1, 2]));
        assert!(!is_proper(&p2, &[1, 1]));
        assert!(is_proper(&k13, &[4, 1, 1, 2]));
        assert!(is_distinguishing(&p2, &[1]).is_err());
    }

    #[test]
    fn brute_counts() {
        let b = Bounds::default();
        let leaf = parse_parens("()").unwrap();
        assert_eq!(
            brute_count_classes(&leaf, 4, false, None, b)
                .unwrap()
                .to_u64(),
            Some(4)
        );
        let star2 = parse_parens("(()())").unwrap();
        assert_eq!(
            brute_count_classes(&star2, 2, false, None, b)
                .unwrap()
                .to_u64(),
            Some(2)
        );
        assert_eq!(
            brute_count_classes(&star2, 3, true, None, b)
                .unwrap()
                .to_u64(),
            Some(3)
        );
        let big = to_rooted(&path(30));
        assert!(matches!(
            brute_count_classes(&big, 3, false, None, b),
            Err(OracleError::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn brute_parameters() {
        let b = Bounds::default();
        assert_eq!(brute_distinguishing_number(&path(1), b).unwrap(), 1);
        assert_eq!(
            brute_chromatic_distinguishing_number(&path(1), b).unwrap(),
            1
        );
        assert_eq!(brute_distinguishing_number(&path(2), b).unwrap(), 2);
        assert_eq!(brute_distinguishing_number(&star(3), b).unwrap(), 3);
        assert_eq!(
            brute_chromatic_distinguishing_number(&star(3), b).unwrap(),
            4
        );
        assert_eq!(brute_distinguishing_number(&path(4), b).unwrap(), 2);
        assert_eq!(
            brute_chromatic_distinguishing_number(&path(4), b).unwrap(),
            2
        );
        assert_eq!(brute_distinguishing_number(&path(6), b).unwrap(), 2);
        assert_eq!(
            brute_chromatic_distinguishing_number(&path(3), b).unwrap(),
            3
        );
    }

    #[test]
    fn rooted_isomorphism() {
        let leaf = parse_parens("()").unwrap();
        assert!(is_isomorphic_rooted(&leaf, &leaf.clone()));
        let center = parse_parens("(()())").unwrap();
        let end = parse_parens("((()))").unwrap();
        assert!(!is_isomorphic_rooted(&center, &end));
        let a = parse_parens("((())()(()()))").unwrap();
        let b = parse_parens("((()())()(()))").unwrap();
        assert!(is_isomorphic_rooted(&a, &b));
    }
}

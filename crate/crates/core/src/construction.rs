//! Distinguishing parameters, witness colorings, and the certificate for
//! `chi_D(T) = D(T) + 1`.
//!
//! # Canonical order of classes
//!
//! The classes counted by `D(T_x; k)` are indexed as follows. The index of a
//! colored subtree at `v` is `(color(v) - 1) * P + c`, where `P` is the
//! number of choices below `v` and `c` combines one digit per child class in
//! mixed radix, the first class (in code order) being most significant. The
//! digit of a class of `m` siblings whose subtrees have ranks
//! `a_1 > a_2 > ... > a_m` is the colex rank `sum_t C(a_t, m - t + 1)`, and
//! the canonical representative gives the `t`-th sibling (in child order)
//! the rank `a_t`.
//!
//! Proper colorings with a fixed root color use the same scheme, except a
//! child's option `o` stands for color `q`-th of `[k] \ {parent color}`
//! (ascending, `q = o / D_chi(child)`) and sub-index `o % D_chi(child)`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::bigcount::{binomial_exact, BigCount};
use crate::colored::{distinguishes, distinguishes_rooted};
use crate::count::{saturating_by_shape, saturating_positive, CountTable};
use crate::tree::{to_rooted, Canon, Center, RootedTree, Tree};

/// Color id used for the extra color introduced by [`properize`]; rendered
/// as `*`.
pub const STAR: u32 = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("index {index} out of range: there are {count} classes")]
    IndexOutOfRange { index: String, count: String },
    #[error("vertex {vertex} has color {color}, outside the palette 1..={k}")]
    ColorOutOfPalette { vertex: usize, color: u32, k: u64 },
    #[error("coloring does not distinguish the tree")]
    NotDistinguishing,
    #[error("coloring is not proper")]
    NotProper,
    #[error("coloring has {got} entries for {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("{k} colors are too few, at least {needed} are needed")]
    TooFewColors { k: u64, needed: u64 },
    #[error("number of colors must be positive")]
    ZeroColors,
}

/// A vertex coloring, `colors[v]` for internal id `v`. Color `0` is the
/// reserved [`STAR`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Coloring {
        Coloring { colors }
    }

    pub fn get(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Whether every color lies in `1..=k`.
    pub fn within_palette(&self, k: u64) -> bool {
        self.colors.iter().all(|&c| c >= 1 && u64::from(c) <= k)
    }

    /// Drops vertices without an origin (the subdivision vertex) and
    /// reindexes by origin.
    pub fn restrict_to_origin(&self, rt: &RootedTree) -> Coloring {
        let n = (0..rt.len()).filter(|&v| rt.origin(v).is_some()).count();
        let mut colors = vec![0; n];
        for v in 0..rt.len() {
            if let Some(o) = rt.origin(v) {
                colors[o] = self.colors[v];
            }
        }
        Coloring { colors }
    }
}

pub fn render_color(c: u32) -> String {
    if c == STAR {
        "*".to_string()
    } else {
        c.to_string()
    }
}

/// Least `k` in `lo..=hi` with `positive(k)`, assuming `positive` is
/// monotone and holds at `hi`. Doubles the step from `lo` and then bisects.
fn least_positive(lo: u64, hi: u64, mut positive: impl FnMut(u64) -> bool) -> u64 {
    debug_assert!(lo <= hi);
    if positive(lo) {
        return lo;
    }
    let mut bad = lo;
    let mut step = 1;
    let mut good = loop {
        let cand = lo.saturating_add(step).min(hi);
        if cand == hi || positive(cand) {
            break cand;
        }
        bad = cand;
        step *= 2;
    };
    while good - bad > 1 {
        let mid = bad + (good - bad) / 2;
        if positive(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

fn search_cap(rt: &RootedTree) -> u64 {
    rt.len() as u64 + 1
}

/// Siblings that are leaves need pairwise different colors, so `D` is at
/// least the largest number of leaf children at one vertex.
fn leaf_sibling_bound(canon: &Canon) -> u64 {
    canon
        .shapes()
        .flat_map(|s| s.children().iter())
        .filter(|&&(child, _)| canon.shape(child).is_leaf())
        .map(|&(_, m)| u64::from(m))
        .max()
        .unwrap_or(1)
}

/// Least `k` with `D(rt; k) > 0`, using counts saturated at `n + 1`.
pub fn distinguishing_number_rooted(rt: &RootedTree) -> u64 {
    let cap = search_cap(rt);
    let canon = rt.canon();
    let lo = leaf_sibling_bound(canon);
    least_positive(lo, (rt.len() as u64).max(lo), |k| {
        saturating_positive(canon, k, cap, false)
    })
}

/// Least `k` with `D_chi(rt; k, 1) > 0`.
pub fn distinguishing_chromatic_number_rooted(rt: &RootedTree) -> u64 {
    let lo = distinguishing_number_rooted(rt);
    least_proper(rt, lo)
}

fn least_proper(rt: &RootedTree, lo: u64) -> u64 {
    let cap = search_cap(rt);
    let canon = rt.canon();
    let hi = (rt.len() as u64).max(lo);
    least_positive(lo, hi, |k| saturating_positive(canon, k, cap, true))
}

/// `D(T)`, via the center reduction.
pub fn distinguishing_number(t: &Tree) -> u64 {
    distinguishing_number_rooted(&to_rooted(t))
}

/// `chi_D(T)`.
///
/// With a central vertex this is the rooted value. With a central edge `uv`
/// it is 2 when both halves are rigid (then the proper 2-coloring is
/// distinguishing), and otherwise the rooted value on the subdivided tree,
/// which is then at least 3.
pub fn distinguishing_chromatic_number(t: &Tree) -> u64 {
    let rt = to_rooted(t);
    let d = distinguishing_number_rooted(&rt);
    match t.center() {
        Center::Vertex(_) => least_proper(&rt, d),
        Center::Edge(u, v) => {
            if halves_rigid(&rt, u, v) {
                2
            } else {
                least_proper(&rt, d.max(3))
            }
        }
    }
}

fn halves_rigid(rt: &RootedTree, u: usize, v: usize) -> bool {
    let table = saturating_by_shape(rt.canon(), 1, search_cap(rt), false);
    [u, v].iter().all(|&h| table[rt.shape(h) as usize] == 1)
}

/// Both parameters at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parameters {
    pub distinguishing: u64,
    pub chromatic: u64,
}

pub fn parameters(t: &Tree) -> Parameters {
    Parameters {
        distinguishing: distinguishing_number(t),
        chromatic: distinguishing_chromatic_number(t),
    }
}

/// Witness that `chi_D(T) = D(T) + 1`: a vertex `x` of the center reduction
/// and a class `S` of its children with `(k - 1) * D_chi(T_u; k, 1) < |S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Vertex of the center reduction (never the subdivision vertex).
    pub x: usize,
    /// Children of `x` with pairwise isomorphic subtrees.
    pub members: Vec<usize>,
    pub k: u64,
    /// `D(T) = 1` on a tree with an edge; `members` is empty.
    pub degenerate: bool,
    /// `D_chi(T_u; k, 1)` for `u` in `members`.
    pub proper_count: BigUint,
}

impl Certificate {
    /// `(k - 1) * proper_count`.
    pub fn lhs(&self) -> BigUint {
        &self.proper_count * BigUint::from(self.k.saturating_sub(1))
    }

    /// Whether the defining inequality holds (always for degenerate ones).
    pub fn holds(&self) -> bool {
        self.degenerate || self.lhs() < BigUint::from(self.members.len())
    }
}

/// The certificate, present exactly when `chi_D(T) = D(T) + 1`.
///
/// The subdivision vertex of an edge-centered tree is not searched: when its
/// two children violate the bound while nothing below does, `k = 2` and both
/// halves are rigid, so `chi_D(T) = 2 = D(T)`.
pub fn chi_certificate(t: &Tree) -> Option<Certificate> {
    let rt = to_rooted(t);
    let k = distinguishing_number_rooted(&rt);
    if k == 1 {
        return (t.len() >= 2).then(|| Certificate {
            x: rt.root(),
            members: Vec::new(),
            k,
            degenerate: true,
            proper_count: BigUint::zero(),
        });
    }
    // a violated class has (k - 1) * dchi < |S| <= n, so dchi is exact there
    let table = saturating_by_shape(rt.canon(), k, search_cap(&rt), true);
    for &x in rt.bfs_order() {
        if Some(x) == rt.subdivision_vertex() {
            continue;
        }
        for class in rt.child_classes(x) {
            let dchi = table[class.shape() as usize];
            if dchi.saturating_mul(k - 1) < class.len() as u64 {
                return Some(Certificate {
                    x,
                    members: class.members().to_vec(),
                    k,
                    degenerate: false,
                    proper_count: BigUint::from(dchi),
                });
            }
        }
    }
    None
}

/// Largest `a` in `lo..=hi` with `C(a, t) <= n`.
fn largest_binomial_at_most(n: &BigUint, t: u64, lo: BigUint, hi: BigUint) -> BigUint {
    let (mut lo, mut hi) = (lo, hi);
    while lo < hi {
        let mid = (&lo + &hi + 1u32) >> 1;
        if binomial_exact(&mid, t, None).value() <= n {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    lo
}

/// The `index`-th `m`-subset of `0..d` in colex order, largest element first.
fn unrank_combination(index: &BigUint, m: usize, d: &BigUint) -> Vec<BigUint> {
    let mut rest = index.clone();
    let mut out = Vec::with_capacity(m);
    let mut hi = d - 1u32;
    for t in (1..=m as u64).rev() {
        let a = if t == 1 {
            rest.clone()
        } else {
            largest_binomial_at_most(&rest, t, BigUint::from(t - 1), hi.clone())
        };
        rest -= binomial_exact(&a, t, None).into_value();
        if a > BigUint::zero() {
            hi = &a - 1u32;
        }
        out.push(a);
    }
    out
}

/// Colex rank of a set given in ascending order.
fn rank_combination(ascending: &[BigUint]) -> BigUint {
    ascending
        .iter()
        .enumerate()
        .map(|(i, a)| binomial_exact(a, i as u64 + 1, None).into_value())
        .sum()
}

fn exact_table(rt: &RootedTree, k: u64) -> CountTable {
    CountTable::new(rt.canon(), k, None)
}

fn choices(table: &CountTable, rt: &RootedTree, v: usize, proper: bool) -> Vec<BigUint> {
    rt.child_classes(v)
        .iter()
        .map(|class| {
            let per_child = if proper {
                table.proper(class.shape()).mul_u64(table.k() - 1, None)
            } else {
                table.distinguishing(class.shape()).clone()
            };
            per_child.binomial(class.len() as u64, None).into_value()
        })
        .collect()
}

fn product(xs: &[BigUint]) -> BigUint {
    xs.iter().fold(BigUint::one(), |acc, x| acc * x)
}

/// Splits `index` into one digit per class, first class most significant.
fn split_digits(mut index: BigUint, radices: &[BigUint]) -> Vec<BigUint> {
    let mut digits = vec![BigUint::zero(); radices.len()];
    for (j, r) in radices.iter().enumerate().rev() {
        digits[j] = &index % r;
        index /= r;
    }
    digits
}

fn join_digits(digits: &[BigUint], radices: &[BigUint]) -> BigUint {
    digits
        .iter()
        .zip(radices)
        .fold(BigUint::zero(), |acc, (d, r)| acc * r + d)
}

fn out_of_range(index: &BigUint, count: &BigUint) -> ConstructError {
    ConstructError::IndexOutOfRange {
        index: index.to_string(),
        count: count.to_string(),
    }
}

fn check_k(k: u64) -> Result<(), ConstructError> {
    if k == 0 {
        Err(ConstructError::ZeroColors)
    } else {
        Ok(())
    }
}

/// Canonical representative of the `index`-th class of distinguishing
/// `k`-colorings of `rt`.
pub fn unrank_distinguishing(
    rt: &RootedTree,
    k: u64,
    index: &BigUint,
) -> Result<Coloring, ConstructError> {
    check_k(k)?;
    let table = exact_table(rt, k);
    let total = table.d(rt, rt.root()).value().clone();
    if index >= &total {
        return Err(out_of_range(index, &total));
    }
    let mut colors = vec![0u32; rt.len()];
    let mut stack = vec![(rt.root(), index.clone())];
    while let Some((v, idx)) = stack.pop() {
        let radices = choices(&table, rt, v, false);
        let below = product(&radices);
        let color = (&idx / &below).to_u32().expect("color fits") + 1;
        colors[v] = color;
        let digits = split_digits(idx % &below, &radices);
        for (class, digit) in rt.child_classes(v).iter().zip(digits) {
            let d = table.distinguishing(class.shape()).value();
            let ranks = unrank_combination(&digit, class.len(), d);
            for (&member, rank) in class.members().iter().zip(ranks) {
                stack.push((member, rank));
            }
        }
    }
    Ok(Coloring { colors })
}

/// Index of the class of `coloring` in the canonical order; inverse of
/// [`unrank_distinguishing`] and constant on equivalent colorings.
pub fn rank_distinguishing(
    rt: &RootedTree,
    k: u64,
    coloring: &Coloring,
) -> Result<BigUint, ConstructError> {
    check_k(k)?;
    check_palette(rt, k, coloring)?;
    let table = exact_table(rt, k);
    let mut rank = vec![BigUint::zero(); rt.len()];
    for &v in rt.bfs_order().iter().rev() {
        let radices = choices(&table, rt, v, false);
        let mut digits = Vec::with_capacity(radices.len());
        for class in rt.child_classes(v) {
            let mut ranks: Vec<BigUint> =
                class.members().iter().map(|&c| rank[c].clone()).collect();
            ranks.sort();
            if ranks.windows(2).any(|w| w[0] == w[1]) {
                return Err(ConstructError::NotDistinguishing);
            }
            digits.push(rank_combination(&ranks));
        }
        let below = product(&radices);
        rank[v] = BigUint::from(coloring.get(v) - 1) * below + join_digits(&digits, &radices);
    }
    Ok(std::mem::take(&mut rank[rt.root()]))
}

fn check_palette(rt: &RootedTree, k: u64, coloring: &Coloring) -> Result<(), ConstructError> {
    if coloring.len() != rt.len() {
        return Err(ConstructError::WrongLength {
            got: coloring.len(),
            expected: rt.len(),
        });
    }
    for (v, &c) in coloring.as_slice().iter().enumerate() {
        if c == 0 || u64::from(c) > k {
            return Err(ConstructError::ColorOutOfPalette {
                vertex: v,
                color: c,
                k,
            });
        }
    }
    Ok(())
}

/// The `q`-th color (0-based) of `1..=k` with `skip` removed.
fn nth_color_avoiding(q: u64, skip: u32) -> u32 {
    let c = q as u32 + 1;
    if c < skip {
        c
    } else {
        c + 1
    }
}

fn index_avoiding(color: u32, skip: u32) -> u64 {
    if color < skip {
        u64::from(color) - 1
    } else {
        u64::from(color) - 2
    }
}

fn unrank_proper_into(
    rt: &RootedTree,
    table: &CountTable,
    v: usize,
    root_color: u32,
    index: BigUint,
    colors: &mut [u32],
) {
    let mut stack = vec![(v, root_color, index)];
    while let Some((v, color, idx)) = stack.pop() {
        colors[v] = color;
        let radices = choices(table, rt, v, true);
        let digits = split_digits(idx, &radices);
        for (class, digit) in rt.child_classes(v).iter().zip(digits) {
            let sub = table.proper(class.shape()).value();
            let options = sub * BigUint::from(table.k() - 1);
            let chosen = unrank_combination(&digit, class.len(), &options);
            for (&member, option) in class.members().iter().zip(chosen) {
                let q = (&option / sub).to_u64().expect("color index fits");
                let child_color = nth_color_avoiding(q, color);
                stack.push((member, child_color, option % sub));
            }
        }
    }
}

/// Canonical representative of the `index`-th class of proper distinguishing
/// `k`-colorings of `rt` whose root has `root_color`.
pub fn unrank_proper_distinguishing(
    rt: &RootedTree,
    k: u64,
    root_color: u32,
    index: &BigUint,
) -> Result<Coloring, ConstructError> {
    check_k(k)?;
    if root_color == 0 || u64::from(root_color) > k {
        return Err(ConstructError::ColorOutOfPalette {
            vertex: rt.root(),
            color: root_color,
            k,
        });
    }
    let table = exact_table(rt, k);
    let total = table.dchi(rt, rt.root()).value().clone();
    if index >= &total {
        return Err(out_of_range(index, &total));
    }
    let mut colors = vec![0u32; rt.len()];
    unrank_proper_into(
        rt,
        &table,
        rt.root(),
        root_color,
        index.clone(),
        &mut colors,
    );
    Ok(Coloring { colors })
}

/// Index of a proper distinguishing coloring among those with the same root
/// color; inverse of [`unrank_proper_distinguishing`].
pub fn rank_proper_distinguishing(
    rt: &RootedTree,
    k: u64,
    coloring: &Coloring,
) -> Result<BigUint, ConstructError> {
    check_k(k)?;
    check_palette(rt, k, coloring)?;
    if !crate::colored::is_proper(rt.base(), coloring.as_slice()) {
        return Err(ConstructError::NotProper);
    }
    let table = exact_table(rt, k);
    let mut rank = vec![BigUint::zero(); rt.len()];
    for &v in rt.bfs_order().iter().rev() {
        let radices = choices(&table, rt, v, true);
        let mut digits = Vec::with_capacity(radices.len());
        for class in rt.child_classes(v) {
            let sub = table.proper(class.shape()).value();
            let mut options: Vec<BigUint> = class
                .members()
                .iter()
                .map(|&c| {
                    let q = index_avoiding(coloring.get(c), coloring.get(v));
                    BigUint::from(q) * sub + &rank[c]
                })
                .collect();
            options.sort();
            if options.windows(2).any(|w| w[0] == w[1]) {
                return Err(ConstructError::NotDistinguishing);
            }
            digits.push(rank_combination(&options));
        }
        rank[v] = join_digits(&digits, &radices);
    }
    Ok(std::mem::take(&mut rank[rt.root()]))
}

/// Turns a distinguishing coloring into a proper distinguishing one with one
/// extra color: top-down, a child whose color equals its parent's new color
/// is recolored [`STAR`].
pub fn properize(rt: &RootedTree, coloring: &Coloring) -> Result<Coloring, ConstructError> {
    if coloring.len() != rt.len() {
        return Err(ConstructError::WrongLength {
            got: coloring.len(),
            expected: rt.len(),
        });
    }
    if let Some(v) = coloring.as_slice().iter().position(|&c| c == STAR) {
        return Err(ConstructError::ColorOutOfPalette {
            vertex: v,
            color: STAR,
            k: u64::from(coloring.as_slice().iter().copied().max().unwrap_or(0)),
        });
    }
    if !distinguishes_rooted(rt, coloring.as_slice()) {
        return Err(ConstructError::NotDistinguishing);
    }
    let mut out = coloring.as_slice().to_vec();
    for &v in rt.bfs_order() {
        for &u in rt.children(v) {
            out[u] = if out[v] == coloring.get(u) {
                STAR
            } else {
                coloring.get(u)
            };
        }
    }
    Ok(Coloring { colors: out })
}

/// [`properize`] for an unrooted tree: the coloring is rooted at the central
/// vertex, or at one end of the central edge. The result is proper, so no
/// automorphism swaps the ends of a central edge, and it is distinguishing.
pub fn properize_tree(t: &Tree, coloring: &Coloring) -> Result<Coloring, ConstructError> {
    if coloring.len() != t.len() {
        return Err(ConstructError::WrongLength {
            got: coloring.len(),
            expected: t.len(),
        });
    }
    if !distinguishes(t, coloring.as_slice()) {
        return Err(ConstructError::NotDistinguishing);
    }
    let root = match t.center() {
        Center::Vertex(x) => x,
        Center::Edge(u, _) => u,
    };
    properize(&RootedTree::new(t.clone(), root), coloring)
}

/// A distinguishing `k`-coloring of `t` (default `k = D(T)`): the class of
/// index 0 on the center reduction, restricted to `t`.
pub fn construct_distinguishing_coloring(
    t: &Tree,
    k: Option<u64>,
) -> Result<Coloring, ConstructError> {
    let rt = to_rooted(t);
    let needed = distinguishing_number_rooted(&rt);
    let k = k.unwrap_or(needed);
    check_k(k)?;
    if k < needed {
        return Err(ConstructError::TooFewColors { k, needed });
    }
    let phi = unrank_distinguishing(&rt, k, &BigUint::zero())?;
    Ok(phi.restrict_to_origin(&rt))
}

/// A proper distinguishing `k`-coloring of `t` (default `k = chi_D(T)`).
///
/// For a central edge `uv` the halves are colored separately with roots `1`
/// and `2`, which keeps `uv` proper and rules out automorphisms swapping
/// the halves.
pub fn construct_proper_distinguishing_coloring(
    t: &Tree,
    k: Option<u64>,
) -> Result<Coloring, ConstructError> {
    let needed = distinguishing_chromatic_number(t);
    let k = k.unwrap_or(needed);
    check_k(k)?;
    if k < needed {
        return Err(ConstructError::TooFewColors { k, needed });
    }
    let rt = to_rooted(t);
    let table = exact_table(&rt, k);
    let mut colors = vec![0u32; rt.len()];
    match t.center() {
        Center::Vertex(x) => {
            unrank_proper_into(&rt, &table, x, 1, BigUint::zero(), &mut colors);
        }
        Center::Edge(u, v) => {
            unrank_proper_into(&rt, &table, u, 1, BigUint::zero(), &mut colors);
            unrank_proper_into(&rt, &table, v, 2, BigUint::zero(), &mut colors);
        }
    }
    Ok(Coloring { colors }.restrict_to_origin(&rt))
}

/// Exact `D(T'; k)` and `k * D_chi(T'; k, 1)` on a rooted tree.
pub fn exact_counts(rt: &RootedTree, k: u64) -> (BigCount, BigCount) {
    let table = exact_table(rt, k);
    let d = table.d(rt, rt.root()).clone();
    let p = table.dchi(rt, rt.root()).mul_u64(k, None);
    (d, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{distinguishes, is_proper};
    use crate::tree::parse_parens;

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    fn star(m: usize) -> Tree {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Tree::from_edges(m + 1, &edges).unwrap()
    }

    fn double_star() -> Tree {
        Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn least_positive_search() {
        for target in 1..=40u64 {
            for hi in target..=45 {
                assert_eq!(least_positive(1, hi, |k| k >= target), target);
            }
        }
        assert_eq!(least_positive(3, 3, |_| true), 3);
    }

    #[test]
    fn distinguishing_numbers() {
        assert_eq!(distinguishing_number(&path(1)), 1);
        assert_eq!(distinguishing_number(&path(2)), 2);
        assert_eq!(distinguishing_number(&star(3)), 3);
        assert_eq!(distinguishing_number(&path(6)), 2);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(distinguishing_chromatic_number(&path(1)), 1);
        assert_eq!(distinguishing_chromatic_number(&path(2)), 2);
        assert_eq!(distinguishing_chromatic_number(&path(3)), 3);
        assert_eq!(distinguishing_chromatic_number(&path(4)), 2);
        assert_eq!(distinguishing_chromatic_number(&double_star()), 3);
        assert_eq!(distinguishing_chromatic_number(&star(3)), 4);
    }

    #[test]
    fn certificates() {
        let c = chi_certificate(&star(3)).unwrap();
        assert_eq!((c.x, c.members.len(), c.k), (0, 3, 3));
        assert_eq!(c.lhs(), BigUint::from(2u32));
        assert!(c.holds() && !c.degenerate);

        assert!(chi_certificate(&path(6)).is_none());
        assert!(chi_certificate(&path(2)).is_none());
        assert!(chi_certificate(&path(4)).is_none());
        assert!(chi_certificate(&path(1)).is_none());

        let rigid = Tree::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        let c = chi_certificate(&rigid).unwrap();
        assert!(c.degenerate && c.members.is_empty() && c.k == 1);
    }

    #[test]
    fn unrank_examples() {
        let leaf = parse_parens("()").unwrap();
        assert_eq!(
            unrank_distinguishing(&leaf, 3, &BigUint::from(1u32))
                .unwrap()
                .as_slice(),
            [2]
        );
        assert!(matches!(
            unrank_distinguishing(&leaf, 3, &BigUint::from(3u32)),
            Err(ConstructError::IndexOutOfRange { .. })
        ));
        let star2 = parse_parens("(()())").unwrap();
        let a = unrank_distinguishing(&star2, 2, &BigUint::zero()).unwrap();
        let b = unrank_distinguishing(&star2, 2, &BigUint::one()).unwrap();
        assert_eq!(a.as_slice(), [1, 2, 1]);
        assert_eq!(b.as_slice(), [2, 2, 1]);
    }

    #[test]
    fn rank_examples() {
        let leaf = parse_parens("()").unwrap();
        assert_eq!(
            rank_distinguishing(&leaf, 3, &Coloring::new(vec![2])).unwrap(),
            BigUint::one()
        );
        let star2 = parse_parens("(()())").unwrap();
        // swapping the leaves gives an equivalent coloring
        let r1 = rank_distinguishing(&star2, 2, &Coloring::new(vec![2, 1, 2])).unwrap();
        let r2 = rank_distinguishing(&star2, 2, &Coloring::new(vec![2, 2, 1])).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(
            rank_distinguishing(&star2, 2, &Coloring::new(vec![1, 1, 1])),
            Err(ConstructError::NotDistinguishing)
        );
        assert!(matches!(
            rank_distinguishing(&star2, 2, &Coloring::new(vec![1, 3, 1])),
            Err(ConstructError::ColorOutOfPalette { color: 3, .. })
        ));
    }

    #[test]
    fn combination_roundtrip() {
        let d = BigUint::from(9u32);
        for m in 1..=4usize {
            let total = binomial_exact(&d, m as u64, None)
                .into_value()
                .to_u64()
                .unwrap();
            let mut previous: Option<Vec<BigUint>> = None;
            for i in 0..total {
                let set = unrank_combination(&BigUint::from(i), m, &d);
                assert!(set.windows(2).all(|w| w[0] > w[1]));
                assert!(set[0] < d);
                let mut asc = set.clone();
                asc.reverse();
                assert_eq!(rank_combination(&asc), BigUint::from(i));
                if let Some(p) = previous {
                    assert_ne!(p, set);
                }
                previous = Some(set);
            }
        }
    }

    #[test]
    fn proper_unrank_examples() {
        let leaf = parse_parens("()").unwrap();
        assert_eq!(
            unrank_proper_distinguishing(&leaf, 3, 2, &BigUint::zero())
                .unwrap()
                .as_slice(),
            [2]
        );
        let p3 = parse_parens("(()())").unwrap();
        let phi = unrank_proper_distinguishing(&p3, 3, 1, &BigUint::zero()).unwrap();
        let mut leaves = vec![phi.get(1), phi.get(2)];
        leaves.sort();
        assert_eq!((phi.get(0), leaves), (1, vec![2, 3]));
        assert!(matches!(
            unrank_proper_distinguishing(&p3, 2, 1, &BigUint::zero()),
            Err(ConstructError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            unrank_proper_distinguishing(&p3, 3, 4, &BigUint::zero()),
            Err(ConstructError::ColorOutOfPalette { .. })
        ));
        assert_eq!(
            rank_proper_distinguishing(&p3, 3, &phi).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn properize_examples() {
        let star2 = parse_parens("(()())").unwrap();
        let phi = Coloring::new(vec![1, 1, 2]);
        let out = properize(&star2, &phi).unwrap();
        assert_eq!(out.as_slice(), [1, STAR, 2]);
        let proper = Coloring::new(vec![1, 2, 3]);
        assert_eq!(properize(&star2, &proper).unwrap(), proper);
        assert_eq!(
            properize(&star2, &Coloring::new(vec![1, 1, 1])),
            Err(ConstructError::NotDistinguishing)
        );
        assert!(matches!(
            properize(&star2, &Coloring::new(vec![1, 2])),
            Err(ConstructError::WrongLength { .. })
        ));
    }

    #[test]
    fn properize_chain() {
        // a chain of equal colors alternates between the color and STAR
        let p = parse_parens("(((())))").unwrap();
        let out = properize(&p, &Coloring::new(vec![1, 1, 1, 1])).unwrap();
        assert_eq!(out.as_slice(), [1, STAR, 1, STAR]);
    }

    #[test]
    fn constructed_witnesses() {
        let k13 = star(3);
        let phi = construct_distinguishing_coloring(&k13, Some(3)).unwrap();
        let mut leaves: Vec<u32> = (1..4).map(|v| phi.get(v)).collect();
        leaves.sort();
        assert_eq!(leaves, [1, 2, 3]);
        assert!(distinguishes(&k13, phi.as_slice()));

        let p2 = path(2);
        let phi = construct_distinguishing_coloring(&p2, Some(2)).unwrap();
        assert_ne!(phi.get(0), phi.get(1));
        assert_eq!(
            construct_distinguishing_coloring(&p2, Some(1)),
            Err(ConstructError::TooFewColors { k: 1, needed: 2 })
        );

        for t in [path(4), path(5), double_star(), star(4), path(1)] {
            let phi = construct_proper_distinguishing_coloring(&t, None).unwrap();
            assert!(is_proper(&t, phi.as_slice()));
            assert!(distinguishes(&t, phi.as_slice()));
            assert_eq!(
                phi.num_colors() as u64,
                distinguishing_chromatic_number(&t).min(t.len() as u64)
            );
        }
    }

    #[test]
    fn exact_count_pair() {
        let (d, p) = exact_counts(&parse_parens("(()())").unwrap(), 2);
        assert_eq!(d.to_u64(), Some(2));
        assert_eq!(p.to_u64(), Some(0));
    }
}

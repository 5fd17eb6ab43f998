//! Exact class counts of distinguishing colorings of rooted trees.
//!
//! `D(T_x; k) = k * prod_j C(D(T_{u_j}; k), |C_j|)` over the child classes of
//! the root, and for proper colorings with the root color fixed
//! `D_chi(T_x; k, 1) = prod_j C((k - 1) * D_chi(T_{u_j}; k, 1), |C_j|)`.
//! Both are evaluated once per shape, so isomorphic subtrees share work.

use num_bigint::BigUint;

use crate::bigcount::BigCount;
use crate::tree::{Canon, RootedTree, ShapeId};

pub use crate::bigcount::binomial_exact;

/// `C(a, b)`, zero when `a < b`, saturating at `cap`.
pub fn binomial(a: &BigCount, b: u64, cap: Option<&BigUint>) -> BigCount {
    a.binomial(b, cap)
}

/// Per-shape counts for one `k`.
///
/// `distinguishing[s] = D(T_s; k)` and `proper[s] = D_chi(T_s; k, 1)`.
#[derive(Debug, Clone)]
pub struct CountTable {
    k: u64,
    distinguishing: Vec<BigCount>,
    proper: Vec<BigCount>,
}

impl CountTable {
    pub fn new(canon: &Canon, k: u64, cap: Option<&BigUint>) -> CountTable {
        CountTable {
            k,
            distinguishing: distinguishing_by_shape(canon, k, cap),
            proper: proper_by_shape(canon, k, cap),
        }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn distinguishing(&self, shape: ShapeId) -> &BigCount {
        &self.distinguishing[shape as usize]
    }

    pub fn proper(&self, shape: ShapeId) -> &BigCount {
        &self.proper[shape as usize]
    }

    pub fn d(&self, rt: &RootedTree, v: usize) -> &BigCount {
        self.distinguishing(rt.shape(v))
    }

    pub fn dchi(&self, rt: &RootedTree, v: usize) -> &BigCount {
        self.proper(rt.shape(v))
    }
}

/// `D(T_s; k)` for every shape `s`, ascending ids being a bottom-up order.
pub fn distinguishing_by_shape(canon: &Canon, k: u64, cap: Option<&BigUint>) -> Vec<BigCount> {
    assert!(k >= 1, "k must be positive");
    let mut table: Vec<BigCount> = Vec::with_capacity(canon.num_shapes());
    for shape in canon.shapes() {
        let mut acc = BigCount::exact(k).clamp(cap);
        for &(child, mult) in shape.children() {
            if acc.is_zero() {
                break;
            }
            let choose = table[child as usize].binomial(mult as u64, cap);
            acc = acc.mul(&choose, cap);
        }
        table.push(acc);
    }
    table
}

/// `D_chi(T_s; k, 1)` for every shape `s`.
pub fn proper_by_shape(canon: &Canon, k: u64, cap: Option<&BigUint>) -> Vec<BigCount> {
    assert!(k >= 1, "k must be positive");
    let mut table: Vec<BigCount> = Vec::with_capacity(canon.num_shapes());
    for shape in canon.shapes() {
        let mut acc = BigCount::one();
        for &(child, mult) in shape.children() {
            if acc.is_zero() {
                break;
            }
            let options = table[child as usize].mul_u64(k - 1, cap);
            acc = acc.mul(&options.binomial(mult as u64, cap), cap);
        }
        table.push(acc);
    }
    table
}

/// `C(a, b)` clamped at `cap`, where `a = cap` stands for any value at
/// least `cap`. Sound whenever `b < cap`.
fn binomial_saturating(a: u64, b: u64, cap: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * u128::from(a - i) / u128::from(i + 1);
        if acc >= u128::from(cap) {
            return cap;
        }
    }
    acc as u64
}

/// Per-shape counts saturated at `cap` in machine words: `D(T_s; k)`, or
/// `D_chi(T_s; k, 1)` when `proper`. This is the fast path of the parameter
/// searches; `cap` must exceed every class size.
pub fn saturating_by_shape(canon: &Canon, k: u64, cap: u64, proper: bool) -> Vec<u64> {
    assert!(k >= 1, "k must be positive");
    let mut table: Vec<u64> = Vec::with_capacity(canon.num_shapes());
    for shape in canon.shapes() {
        let mut acc = if proper { 1 } else { k.min(cap) };
        for &(child, mult) in shape.children() {
            if acc == 0 {
                break;
            }
            let d = table[child as usize];
            let options = if proper {
                d.saturating_mul(k - 1).min(cap)
            } else {
                d
            };
            let choose = binomial_saturating(options, mult as u64, cap);
            acc = acc.saturating_mul(choose).min(cap);
        }
        table.push(acc);
    }
    table
}

/// Whether the whole tree has a positive saturated count at `k`. A zero
/// at any shape propagates to the root, since every shape of `canon` occurs
/// in the tree, so the scan stops at the first one.
pub fn saturating_positive(canon: &Canon, k: u64, cap: u64, proper: bool) -> bool {
    assert!(k >= 1, "k must be positive");
    let mut table: Vec<u64> = Vec::with_capacity(canon.num_shapes());
    for shape in canon.shapes() {
        let mut acc = if proper { 1 } else { k.min(cap) };
        for &(child, mult) in shape.children() {
            let d = table[child as usize];
            let options = if proper {
                d.saturating_mul(k - 1).min(cap)
            } else {
                d
            };
            acc = acc
                .saturating_mul(binomial_saturating(options, mult as u64, cap))
                .min(cap);
        }
        if acc == 0 {
            return false;
        }
        table.push(acc);
    }
    true
}

/// Class sizes never exceed `n - 1`, so an internal cap of at least `n`
/// keeps every saturated binomial sound.
fn working_cap(rt: &RootedTree, cap: Option<&BigUint>) -> Option<BigUint> {
    cap.map(|c| c.clone().max(BigUint::from(rt.len())))
}

/// `D(T_x; k)`: classes of distinguishing `k`-colorings of `rt` under
/// root-fixing automorphisms. With a cap the result is exact below the cap
/// and saturated otherwise.
pub fn count_distinguishing(rt: &RootedTree, k: u64, cap: Option<&BigUint>) -> BigCount {
    let work = working_cap(rt, cap);
    let table = distinguishing_by_shape(rt.canon(), k, work.as_ref());
    table[rt.shape(rt.root()) as usize].clone().clamp(cap)
}

/// `D_chi(T_x; k, 1)`: classes of proper distinguishing `k`-colorings with the
/// root color fixed. Multiply by `k` for all proper distinguishing classes.
pub fn count_proper_distinguishing(rt: &RootedTree, k: u64, cap: Option<&BigUint>) -> BigCount {
    let work = working_cap(rt, cap);
    let table = proper_by_shape(rt.canon(), k, work.as_ref());
    table[rt.shape(rt.root()) as usize].clone().clamp(cap)
}

//! Canonical codes of colored rooted trees.
//!
//! A colored subtree is interned as its root color plus the sorted multiset
//! of its children's colored ids, so two colored rooted trees are equivalent
//! exactly when they receive the same id.

use std::collections::HashMap;

use crate::tree::{to_rooted, RootedTree, ShapeId, Tree};

pub type ColoredId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredEntry {
    pub color: u32,
    pub children: Vec<ColoredId>,
    pub shape: ShapeId,
}

#[derive(Debug, Clone, Default)]
pub struct ColoredInterner {
    ids: HashMap<(u32, Vec<ColoredId>), ColoredId>,
    entries: Vec<ColoredEntry>,
}

impl ColoredInterner {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns a colored tree whose root has `color`, children `children` (in
    /// any order) and uncolored shape `shape`.
    pub fn intern(
        &mut self,
        color: u32,
        mut children: Vec<ColoredId>,
        shape: ShapeId,
    ) -> ColoredId {
        children.sort_unstable();
        let key = (color, children);
        if let Some(&id) = self.ids.get(&key) {
            return id;
        }
        let id = self.entries.len() as ColoredId;
        self.entries.push(ColoredEntry {
            color: key.0,
            children: key.1.clone(),
            shape,
        });
        self.ids.insert(key, id);
        id
    }

    pub fn entry(&self, id: ColoredId) -> &ColoredEntry {
        &self.entries[id as usize]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parenthesised rendering with colors, e.g. `1(2()3())`.
    pub fn render(&self, id: ColoredId) -> String {
        let e = self.entry(id);
        let mut parts: Vec<String> = e.children.iter().map(|&c| self.render(c)).collect();
        parts.sort();
        format!("{}({})", e.color, parts.concat())
    }
}

/// Colored id of every rooted subtree of `rt` under `colors`.
pub fn colored_ids(rt: &RootedTree, colors: &[u32]) -> (ColoredInterner, Vec<ColoredId>) {
    let mut interner = ColoredInterner::new();
    let mut ids = vec![0; rt.len()];
    for &v in rt.bfs_order().iter().rev() {
        let children = rt.children(v).iter().map(|&c| ids[c]).collect();
        ids[v] = interner.intern(colors[v], children, rt.shape(v));
    }
    (interner, ids)
}

/// Whether `colors` distinguishes the rooted tree: at every vertex, siblings
/// with isomorphic subtrees must carry inequivalent colorings.
pub fn distinguishes_rooted(rt: &RootedTree, colors: &[u32]) -> bool {
    if colors.len() != rt.len() {
        return false;
    }
    let (_, ids) = colored_ids(rt, colors);
    rt.bfs_order().iter().all(|&v| {
        rt.child_classes(v).iter().all(|class| {
            let mut seen: Vec<ColoredId> = class.members().iter().map(|&c| ids[c]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    })
}

/// Whether `colors` distinguishes the unrooted tree `t`. The center is fixed
/// by every automorphism, so this is the rooted check on the center
/// reduction with the subdivision vertex given a color of its own.
pub fn distinguishes(t: &Tree, colors: &[u32]) -> bool {
    if colors.len() != t.len() {
        return false;
    }
    let rt = to_rooted(t);
    let mut extended = colors.to_vec();
    if rt.subdivided() {
        let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
        extended.push(fresh);
    }
    distinguishes_rooted(&rt, &extended)
}

pub fn is_proper(t: &Tree, colors: &[u32]) -> bool {
    colors.len() == t.len() && t.edges().into_iter().all(|(u, v)| colors[u] != colors[v])
}

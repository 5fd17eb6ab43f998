//! Unrooted and rooted trees, parsing, centers, and AHU canonical structure.
//!
//! Every rooted tree carries a lazily built [`Canon`]: one interned shape per
//! isomorphism class of rooted subtree, plus the partition of each vertex's
//! children into classes of isomorphic subtrees. Everything downstream
//! (counting, ranking, list representatives, orbits) is keyed by shape ids.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use hashbrown::HashTable;
use rustc_hash::FxHasher;
use thiserror::Error;

/// Label given to the vertex inserted when the center of a tree is an edge.
pub const CENTER_LABEL: &str = "⟨center⟩";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("empty input")]
    Empty,
    #[error("input is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("edge {0} -- {1} closes a cycle")]
    Cycle(String, String),
    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(String, String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> TreeError {
    TreeError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Input encodings understood by [`parse_tree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    /// One edge per line, two whitespace separated labels. `#` starts a comment.
    EdgeList,
    /// Balanced parentheses, one `(` per vertex, children nested.
    Parens,
}

/// Result of [`parse_tree`]: edge lists describe unrooted trees, parenthesis
/// strings describe rooted ones.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // one per input, never stored in bulk
pub enum Parsed {
    Unrooted(Tree),
    Rooted(RootedTree),
}

impl Parsed {
    /// The underlying unrooted tree.
    pub fn tree(&self) -> &Tree {
        match self {
            Parsed::Unrooted(t) => t,
            Parsed::Rooted(rt) => rt.base(),
        }
    }

    /// The rooted tree the counting operations run on: the given rooted tree,
    /// or the center reduction of an unrooted one.
    pub fn rooted(&self) -> RootedTree {
        match self {
            Parsed::Unrooted(t) => to_rooted(t),
            Parsed::Rooted(rt) => rt.clone(),
        }
    }
}

pub fn parse_tree(text: &str, format: Format) -> Result<Parsed, TreeError> {
    match format {
        Format::EdgeList => parse_edge_list(text).map(Parsed::Unrooted),
        Format::Parens => parse_parens(text).map(Parsed::Rooted),
    }
}

/// Parses the edge-list format. A line holding a single label declares an
/// isolated vertex, which is only valid for the one-vertex tree.
pub fn parse_edge_list(text: &str) -> Result<Tree, TreeError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&id) = index.get(label) {
            return id;
        }
        let id = labels.len();
        labels.push(label.to_string());
        index.insert(label.to_string(), id);
        id
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokens_with_columns(line);
        match tokens.as_slice() {
            [] => {}
            [(_, a)] => {
                intern(a, &mut labels);
            }
            [(_, a), (_, b)] => {
                let u = intern(a, &mut labels);
                let v = intern(b, &mut labels);
                edges.push((u, v));
            }
            [_, _, (col, extra), ..] => {
                return Err(syntax(
                    lineno + 1,
                    *col,
                    format!("unexpected token `{extra}`, expected two labels per line"),
                ));
            }
        }
    }
    if labels.is_empty() {
        return Err(TreeError::Empty);
    }
    Tree::build(labels, &edges)
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((line[..s].chars().count() + 1, &line[s..]));
    }
    out
}

/// Parses the parenthesis format into a rooted tree. Vertices are labelled by
/// their preorder index.
pub fn parse_parens(text: &str) -> Result<RootedTree, TreeError> {
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut closed_root = false;
    let (mut line, mut column) = (1, 0);
    for ch in text.chars() {
        column += 1;
        match ch {
            '\n' => {
                line += 1;
                column = 0;
            }
            c if c.is_whitespace() => {}
            '(' => {
                if closed_root {
                    return Err(syntax(line, column, "input describes more than one tree"));
                }
                parent.push(stack.last().copied());
                stack.push(parent.len() - 1);
            }
            ')' => {
                if stack.pop().is_none() {
                    return Err(syntax(line, column, "unmatched `)`"));
                }
                if stack.is_empty() {
                    closed_root = true;
                }
            }
            other => {
                return Err(syntax(
                    line,
                    column,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    if parent.is_empty() {
        return Err(TreeError::Empty);
    }
    if !stack.is_empty() {
        return Err(syntax(
            line,
            column,
            format!("{} unclosed `(`", stack.len()),
        ));
    }
    let labels = (0..parent.len()).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = parent
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.map(|p| (p, v)))
        .collect();
    let tree = Tree::build(labels, &edges)?;
    Ok(RootedTree::new(tree, 0))
}

/// A finite unrooted tree over dense internal ids `0..n`, each carrying an
/// external label.
#[derive(Debug, Clone)]
pub struct Tree {
    // labels are shared with derived trees; `extra` holds labels of vertices
    // appended by a derivation (the subdivision vertex)
    labels: Arc<Vec<String>>,
    extra: Vec<String>,
    // a final appended vertex whose label (a fresh center label) is picked on
    // first use, since that needs a scan over all labels
    fresh: Option<OnceLock<String>>,
    index: Arc<OnceLock<HashMap<String, usize>>>,
    offsets: Arc<[u32]>,
    nbrs: Arc<[u32]>,
}

impl Tree {
    pub fn single(label: impl Into<String>) -> Tree {
        Tree::from_parts(Arc::new(vec![label.into()]), Vec::new(), &[])
    }

    /// Tree on `n` vertices labelled `"0".."n-1"`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Tree::build(labels, edges)
    }

    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Tree, TreeError> {
        let text: String = edges
            .iter()
            .map(|(a, b)| format!("{} {}\n", a.as_ref(), b.as_ref()))
            .collect();
        parse_edge_list(&text)
    }

    fn build(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        let n = labels.len();
        let mut dsu = Dsu::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(TreeError::SelfLoop(labels[u].clone()));
            }
            if !dsu.union(u, v) {
                let same = |&(a, b): &(usize, usize)| (a, b) == (u, v) || (a, b) == (v, u);
                if edges[..i].iter().any(same) {
                    return Err(TreeError::DuplicateEdge(
                        labels[u].clone(),
                        labels[v].clone(),
                    ));
                }
                return Err(TreeError::Cycle(labels[u].clone(), labels[v].clone()));
            }
        }
        if dsu.components > 1 {
            return Err(TreeError::Disconnected {
                components: dsu.components,
            });
        }
        Ok(Tree::from_parts(Arc::new(labels), Vec::new(), edges))
    }

    /// Compressed adjacency from a validated edge list; neighbors keep the
    /// order in which edges are listed.
    fn from_parts(labels: Arc<Vec<String>>, extra: Vec<String>, edges: &[(usize, usize)]) -> Tree {
        let n = labels.len() + extra.len();
        let mut offsets = vec![0u32; n + 1];
        for &(u, v) in edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut nbrs = vec![0u32; 2 * edges.len()];
        for &(u, v) in edges {
            nbrs[cursor[u] as usize] = v as u32;
            cursor[u] += 1;
            nbrs[cursor[v] as usize] = u as u32;
            cursor[v] += 1;
        }
        Tree {
            labels,
            extra,
            fresh: None,
            index: Arc::new(OnceLock::new()),
            offsets: offsets.into(),
            nbrs: nbrs.into(),
        }
    }

    /// This tree with edge `uv` replaced by a path through a new vertex `n`,
    /// which keeps the adjacency order otherwise.
    fn subdivide(&self, u: usize, v: usize) -> Tree {
        let n = self.len();
        let mut offsets = Vec::with_capacity(n + 2);
        offsets.extend_from_slice(&self.offsets);
        offsets.push(self.offsets[n] + 2);
        let mut nbrs = Vec::with_capacity(self.nbrs.len() + 2);
        nbrs.extend_from_slice(&self.nbrs);
        for (a, b) in [(u, v), (v, u)] {
            let slot = (self.offsets[a]..self.offsets[a + 1])
                .find(|&i| nbrs[i as usize] == b as u32)
                .expect("uv is an edge");
            nbrs[slot as usize] = n as u32;
        }
        nbrs.extend([u as u32, v as u32]);
        let mut extra = self.extra.clone();
        let fresh = match &self.fresh {
            // the lazy label must stay last, so settle the older one
            Some(_) => {
                extra.push(self.fresh_label().expect("fresh").to_string());
                Some(OnceLock::new())
            }
            None => Some(OnceLock::new()),
        };
        Tree {
            labels: Arc::clone(&self.labels),
            extra,
            fresh,
            index: Arc::clone(&self.index),
            offsets: offsets.into(),
            nbrs: nbrs.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Labels in id order.
    pub fn labels(&self) -> impl ExactSizeIterator<Item = &str> + '_ {
        (0..self.len()).map(|v| self.label(v))
    }

    pub fn label(&self, v: usize) -> &str {
        if let Some(l) = self.labels.get(v) {
            return l;
        }
        match self.extra.get(v - self.labels.len()) {
            Some(l) => l,
            None => {
                assert!(v < self.len(), "vertex {v} out of range");
                self.fresh_label().expect("vertex past the labels is fresh")
            }
        }
    }

    fn fresh_label(&self) -> Option<&str> {
        let cell = self.fresh.as_ref()?;
        Some(cell.get_or_init(|| {
            let mut label = CENTER_LABEL.to_string();
            while self.labels.iter().chain(&self.extra).any(|l| *l == label) {
                label.push('\'');
            }
            label
        }))
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        let index = self.index.get_or_init(|| {
            self.labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i))
                .collect()
        });
        index
            .get(label)
            .copied()
            .or_else(|| {
                self.extra
                    .iter()
                    .position(|l| l == label)
                    .map(|i| self.labels.len() + i)
            })
            .or_else(|| (self.fresh_label() == Some(label)).then(|| self.len() - 1))
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + Clone + '_ {
        self.nbrs[self.offsets[v] as usize..self.offsets[v + 1] as usize]
            .iter()
            .map(|&w| w as usize)
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for u in 0..self.len() {
            out.extend(self.neighbors(u).filter(|&v| u < v).map(|v| (u, v)));
        }
        out
    }

    /// Renders the tree in edge-list format.
    pub fn to_edge_list(&self) -> String {
        if self.len() == 1 {
            return format!("{}\n", self.label(0));
        }
        self.edges()
            .into_iter()
            .map(|(u, v)| format!("{} {}\n", self.label(u), self.label(v)))
            .collect()
    }

    /// Center by repeatedly stripping all leaves.
    pub fn center(&self) -> Center {
        let n = self.len();
        if n == 1 {
            return Center::Vertex(0);
        }
        // Strip leaves layer by layer. A vertex's live neighbors are tracked
        // as the XOR of their ids, so a leaf finds its one live neighbor
        // without reading the adjacency lists.
        let mut degree: Vec<u32> = self.offsets.windows(2).map(|w| w[1] - w[0]).collect();
        let mut link: Vec<u32> = (0..n)
            .map(|v| {
                self.nbrs[self.offsets[v] as usize..self.offsets[v + 1] as usize]
                    .iter()
                    .fold(0, |x, &w| x ^ w)
            })
            .collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut next = Vec::new();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            next.clear();
            for &v in &layer {
                let w = link[v] as usize;
                link[w] ^= v as u32;
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
            std::mem::swap(&mut layer, &mut next);
        }
        match layer.as_slice() {
            [x] => Center::Vertex(*x),
            [a, b] => Center::Edge((*a).min(*b), (*a).max(*b)),
            _ => unreachable!("a tree has a center of one or two vertices"),
        }
    }
}

struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }
}

/// The center of a tree: a single vertex or the two ends of an edge (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    Vertex(usize),
    Edge(usize, usize),
}

impl Center {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            Center::Vertex(x) => vec![x],
            Center::Edge(u, v) => vec![u, v],
        }
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, Center::Edge(..))
    }
}

/// A tree with a distinguished root. `base` may contain one synthetic vertex
/// (the subdivision of a central edge); `origin` maps every vertex back to
/// the tree it was derived from.
#[derive(Debug, Clone)]
pub struct RootedTree {
    base: Tree,
    root: usize,
    // all per-vertex data except `pos` is indexed by breadth-first position;
    // the children of position `p` sit at `first_child[p]..+child_count[p]`
    parent: Vec<u32>,
    first_child: Vec<u32>,
    child_count: Vec<u32>,
    depth: Vec<u32>,
    pos: Vec<u32>,
    order: Vec<usize>,
    subdivision: Option<usize>,
    // ids in the original tree when they differ from ours
    origin: Option<Vec<u32>>,
    canon: OnceLock<Canon>,
}

const NO_PARENT: u32 = u32::MAX;

impl RootedTree {
    /// Roots `base` at `root`. Children keep the adjacency order of `base`.
    pub fn new(base: Tree, root: usize) -> RootedTree {
        RootedTree::assemble(base, root, None, None)
    }

    fn assemble(
        base: Tree,
        root: usize,
        subdivision: Option<usize>,
        origin: Option<Vec<u32>>,
    ) -> RootedTree {
        let n = base.len();
        assert!(n < NO_PARENT as usize, "tree too large");
        let mut parent = vec![NO_PARENT; n];
        let mut first_child = vec![0; n];
        let mut child_count = vec![0; n];
        let mut depth = vec![0; n];
        let mut pos = vec![NO_PARENT; n];
        let mut order = Vec::with_capacity(n);
        order.push(root);
        pos[root] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            let first = order.len();
            for w in base.neighbors(v) {
                if pos[w] == NO_PARENT {
                    pos[w] = order.len() as u32;
                    order.push(w);
                }
            }
            for q in first..order.len() {
                parent[q] = head as u32;
                depth[q] = depth[head] + 1;
            }
            first_child[head] = first as u32;
            child_count[head] = (order.len() - first) as u32;
            head += 1;
        }
        RootedTree {
            base,
            root,
            parent,
            first_child,
            child_count,
            pos,
            order,
            depth,
            subdivision,
            origin,
            canon: OnceLock::new(),
        }
    }

    /// Positions of the children of the vertex at breadth-first position `p`.
    fn child_positions(&self, p: usize) -> std::ops::Range<usize> {
        let first = self.first_child[p] as usize;
        first..first + self.child_count[p] as usize
    }

    pub fn base(&self) -> &Tree {
        &self.base
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        let p = self.parent[self.pos[v] as usize];
        (p != NO_PARENT).then(|| self.order[p as usize])
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.order[self.child_positions(self.pos[v] as usize)]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.child_count[self.pos[v] as usize] == 0
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[self.pos[v] as usize] as usize
    }

    /// Vertices in breadth-first order from the root; reversed it is a valid
    /// bottom-up order.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    pub fn subdivided(&self) -> bool {
        self.subdivision.is_some()
    }

    pub fn subdivision_vertex(&self) -> Option<usize> {
        self.subdivision
    }

    /// Id of `v` in the tree this rooted tree was derived from, `None` for
    /// the synthetic subdivision vertex.
    pub fn origin(&self, v: usize) -> Option<usize> {
        if self.subdivision == Some(v) {
            return None;
        }
        Some(self.origin.as_ref().map_or(v, |m| m[v] as usize))
    }

    pub fn label(&self, v: usize) -> &str {
        self.base.label(v)
    }

    /// Canonical structure, computed on first use.
    pub fn canon(&self) -> &Canon {
        self.canon.get_or_init(|| Canon::build(self))
    }

    pub fn shape(&self, v: usize) -> ShapeId {
        self.canon().shape_of(v)
    }

    pub fn canonical_code(&self, v: usize) -> CanonicalCode {
        let canon = self.canon();
        canon.code(canon.shape_of(v))
    }

    pub fn child_classes(&self, v: usize) -> ChildClasses<'_> {
        self.canon().classes(v)
    }

    /// Vertices of the rooted subtree at `v`, in breadth-first order.
    pub fn subtree_vertices(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(self.children(out[i]));
            i += 1;
        }
        out
    }

    /// The rooted subtree at `v` as a standalone rooted tree. Its `origin`
    /// maps back to vertex ids of `self`.
    pub fn subtree(&self, v: usize) -> RootedTree {
        let verts = self.subtree_vertices(v);
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let labels: Vec<String> = verts.iter().map(|&w| self.label(w).to_string()).collect();
        let edges: Vec<(usize, usize)> = verts
            .iter()
            .skip(1)
            .map(|&w| (local[&self.parent(w).expect("non-root")], local[&w]))
            .collect();
        let tree = Tree::build(labels, &edges).expect("a subtree of a tree is a tree");
        let origin = verts.iter().map(|&w| w as u32).collect();
        RootedTree::assemble(tree, 0, None, Some(origin))
    }

    /// Renders the rooted tree in parenthesis format, children in order.
    pub fn to_parens(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        let mut stack = vec![(self.root, 0usize)];
        out.push('(');
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&c) = self.children(v).get(*next) {
                *next += 1;
                out.push('(');
                stack.push((c, 0));
            } else {
                out.push(')');
                stack.pop();
            }
        }
        out
    }
}

/// Roots a tree at its center. A central edge `uv` is subdivided by a new
/// vertex (id `n`, label [`CENTER_LABEL`]) which becomes the root, with the
/// children `u` then `v`.
pub fn to_rooted(t: &Tree) -> RootedTree {
    match t.center() {
        Center::Vertex(x) => RootedTree::new(t.clone(), x),
        Center::Edge(u, v) => {
            let n = t.len();
            RootedTree::assemble(t.subdivide(u, v), n, Some(n), None)
        }
    }
}

/// Interned id of an isomorphism class of rooted trees.
pub type ShapeId = u32;

/// A rooted tree up to isomorphism: the multiset of child shapes, listed in
/// ascending code order with multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape<'a> {
    children: &'a [(ShapeId, u32)],
    size: usize,
}

impl<'a> Shape<'a> {
    pub fn children(&self) -> &'a [(ShapeId, u32)] {
        self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// Children of one vertex whose rooted subtrees are pairwise isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChildClass<'a> {
    shape: ShapeId,
    members: &'a [usize],
}

impl<'a> ChildClass<'a> {
    pub fn shape(&self) -> ShapeId {
        self.shape
    }

    /// Members in the order they appear among the parent's children.
    pub fn members(&self) -> &'a [usize] {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ClassSpan {
    shape: ShapeId,
    start: u32,
    len: u32,
}

/// The child classes of one vertex, in code order.
#[derive(Debug, Clone, Copy)]
pub struct ChildClasses<'a> {
    spans: &'a [ClassSpan],
    members: &'a [usize],
}

impl<'a> ChildClasses<'a> {
    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<ChildClass<'a>> {
        self.spans.get(i).map(|s| self.view(s))
    }

    fn view(&self, s: &ClassSpan) -> ChildClass<'a> {
        let start = s.start as usize;
        ChildClass {
            shape: s.shape,
            members: &self.members[start..start + s.len as usize],
        }
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = ChildClass<'a>> + 'a {
        let this = *self;
        this.spans.iter().map(move |s| this.view(s))
    }
}

impl<'a> IntoIterator for ChildClasses<'a> {
    type Item = ChildClass<'a>;
    type IntoIter = Box<dyn ExactSizeIterator<Item = ChildClass<'a>> + 'a>;

    fn into_iter(self) -> Self::IntoIter {
        Box::new(self.iter())
    }
}

/// AHU canonical form of a rooted tree in balanced-parenthesis notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shapes of all rooted subtrees of one rooted tree plus the child class
/// partition at every vertex.
///
/// Shape ids are assigned bottom-up, so every child shape id is smaller than
/// its parent's. Classes at a vertex are ordered by the lexicographic order
/// of their codes (with `(` before `)`).
#[derive(Debug, Clone)]
pub struct Canon {
    // by breadth-first position
    shape_at: Vec<ShapeId>,
    pos: Vec<u32>,
    // children of shape `s` are `kids[kid_start[s]..kid_start[s + 1]]`
    kids: Vec<(ShapeId, u32)>,
    kid_start: Vec<u32>,
    sizes: Vec<usize>,
    spans: Vec<ClassSpan>,
    // spans of position `p` are `spans[span_range[p].0..span_range[p].1]`
    span_range: Vec<(u32, u32)>,
    members: Vec<usize>,
}

const OPEN: bool = false;
const CLOSE: bool = true;

impl Canon {
    fn build(rt: &RootedTree) -> Canon {
        let n = rt.len();
        let mut canon = Canon {
            shape_at: vec![0; n],
            pos: rt.pos.clone(),
            kids: Vec::new(),
            kid_start: vec![0],
            sizes: Vec::new(),
            spans: Vec::with_capacity(n),
            span_range: vec![(0, 0); n],
            members: Vec::with_capacity(n.saturating_sub(1)),
        };
        // shape ids keyed by their child lists, which live in `canon.kids`
        let mut interner: HashTable<ShapeId> = HashTable::new();
        let hash_key = |key: &[(ShapeId, u32)]| {
            let mut h = FxHasher::default();
            key.hash(&mut h);
            h.finish()
        };
        let mut leaf: Option<ShapeId> = None;
        let mut stars: Vec<ShapeId> = Vec::new();
        let mut scratch: Vec<(ShapeId, usize)> = Vec::new();
        let mut groups: Vec<(ShapeId, usize, usize)> = Vec::new();
        let mut key: Vec<(ShapeId, u32)> = Vec::new();
        for p in (0..n).rev() {
            let kids = rt.child_positions(p);
            if kids.is_empty() {
                let id = *leaf.get_or_insert_with(|| {
                    let id = canon.push_shape(&[]);
                    interner.insert_unique(hash_key(&[]), id, |_| unreachable!("empty table"));
                    id
                });
                canon.shape_at[p] = id;
                let at = canon.spans.len() as u32;
                canon.span_range[p] = (at, at);
                continue;
            }
            scratch.clear();
            scratch.extend(kids.map(|q| (canon.shape_at[q], q)));
            scratch.sort_unstable();
            groups.clear();
            for (i, &(s, _)) in scratch.iter().enumerate() {
                match groups.last_mut() {
                    Some(g) if g.0 == s => g.2 += 1,
                    _ => groups.push((s, i, 1)),
                }
            }
            if groups.len() > 1 {
                groups.sort_by(|a, b| canon.compare(a.0, b.0));
            }
            let first = canon.spans.len() as u32;
            key.clear();
            for &(s, at, len) in &groups {
                canon.spans.push(ClassSpan {
                    shape: s,
                    start: canon.members.len() as u32,
                    len: len as u32,
                });
                canon
                    .members
                    .extend(scratch[at..at + len].iter().map(|&(_, q)| rt.order[q]));
                key.push((s, len as u32));
            }
            canon.span_range[p] = (first, canon.spans.len() as u32);
            // stars of leaves are common enough to skip the table for
            let star = (Some(key[0].0) == leaf && key.len() == 1).then(|| key[0].1 as usize);
            if let Some(&id) = star
                .and_then(|m| stars.get(m))
                .filter(|&&id| id != ShapeId::MAX)
            {
                canon.shape_at[p] = id;
                continue;
            }
            let h = hash_key(&key);
            let id = match interner.find(h, |&id| canon.shape(id).children == key.as_slice()) {
                Some(&id) => id,
                None => {
                    let id = canon.push_shape(&key);
                    let (kids, starts) = (&canon.kids, &canon.kid_start);
                    interner.insert_unique(h, id, |&id| {
                        hash_key(
                            &kids[starts[id as usize] as usize..starts[id as usize + 1] as usize],
                        )
                    });
                    id
                }
            };
            if let Some(m) = star {
                if stars.len() <= m {
                    stars.resize(m + 1, ShapeId::MAX);
                }
                stars[m] = id;
            }
            canon.shape_at[p] = id;
        }
        canon
    }

    fn push_shape(&mut self, children: &[(ShapeId, u32)]) -> ShapeId {
        let id = self.sizes.len() as ShapeId;
        let size = 1 + children
            .iter()
            .map(|&(s, m)| m as usize * self.sizes[s as usize])
            .sum::<usize>();
        self.sizes.push(size);
        self.kids.extend_from_slice(children);
        self.kid_start.push(self.kids.len() as u32);
        id
    }

    pub fn shape_of(&self, v: usize) -> ShapeId {
        self.shape_at[self.pos[v] as usize]
    }

    pub fn shape(&self, id: ShapeId) -> Shape<'_> {
        let i = id as usize;
        Shape {
            children: &self.kids[self.kid_start[i] as usize..self.kid_start[i + 1] as usize],
            size: self.sizes[i],
        }
    }

    /// All shapes in id order.
    pub fn shapes(&self) -> impl ExactSizeIterator<Item = Shape<'_>> + '_ {
        (0..self.num_shapes() as ShapeId).map(|id| self.shape(id))
    }

    pub fn num_shapes(&self) -> usize {
        self.sizes.len()
    }

    pub fn classes(&self, v: usize) -> ChildClasses<'_> {
        let (a, b) = self.span_range[self.pos[v] as usize];
        ChildClasses {
            spans: &self.spans[a as usize..b as usize],
            members: &self.members,
        }
    }

    fn symbols(&self, id: ShapeId) -> Symbols<'_> {
        Symbols {
            canon: self,
            stack: Vec::new(),
            enter: Some(id),
        }
    }

    /// Lexicographic comparison of the codes of two shapes, streamed so that
    /// it stops at the first differing symbol.
    pub fn compare(&self, mut a: ShapeId, mut b: ShapeId) -> Ordering {
        // Codes are prefix-free, so comparing "(" X ")" with "(" Y ")" is
        // decided by the first differing child, or by which child list ends
        // first (`)` sorts after `(`, so the shorter list is greater).
        'descend: loop {
            if a == b {
                return Ordering::Equal;
            }
            let (xs, ys) = (self.shape(a).children, self.shape(b).children);
            let (mut i, mut j) = (0, 0);
            let (mut left_x, mut left_y) =
                (xs.first().map_or(0, |c| c.1), ys.first().map_or(0, |c| c.1));
            while i < xs.len() && j < ys.len() {
                if xs[i].0 != ys[j].0 {
                    a = xs[i].0;
                    b = ys[j].0;
                    continue 'descend;
                }
                let step = left_x.min(left_y);
                left_x -= step;
                left_y -= step;
                if left_x == 0 {
                    i += 1;
                    left_x = xs.get(i).map_or(0, |c| c.1);
                }
                if left_y == 0 {
                    j += 1;
                    left_y = ys.get(j).map_or(0, |c| c.1);
                }
            }
            return match (i < xs.len(), j < ys.len()) {
                (false, false) => Ordering::Equal,
                (false, true) => Ordering::Greater,
                (true, _) => Ordering::Less,
            };
        }
    }

    pub fn code(&self, id: ShapeId) -> CanonicalCode {
        CanonicalCode(
            self.symbols(id)
                .map(|s| if s == OPEN { '(' } else { ')' })
                .collect(),
        )
    }

    /// Orbit id per vertex under the root-fixing automorphism group: two
    /// vertices share an orbit iff their parents do and their subtrees are
    /// isomorphic.
    pub fn orbits(&self, rt: &RootedTree) -> Vec<usize> {
        let mut orbit = vec![0usize; rt.len()];
        let mut ids: HashMap<(usize, ShapeId), usize> = HashMap::new();
        for &v in rt.bfs_order() {
            if let Some(p) = rt.parent(v) {
                let next = ids.len() + 1;
                orbit[v] = *ids.entry((orbit[p], self.shape_of(v))).or_insert(next);
            }
        }
        orbit
    }
}

struct Symbols<'a> {
    canon: &'a Canon,
    // (shape, index into its children, copies of that child already emitted)
    stack: Vec<(ShapeId, usize, u32)>,
    enter: Option<ShapeId>,
}

impl Iterator for Symbols<'_> {
    type Item = bool;

    fn next(&mut self) -> Option<bool> {
        if let Some(s) = self.enter.take() {
            self.stack.push((s, 0, 0));
            return Some(OPEN);
        }
        let top = self.stack.last_mut()?;
        let children = self.canon.shape(top.0).children;
        if top.1 < children.len() {
            let (child, mult) = children[top.1];
            top.2 += 1;
            if top.2 == mult {
                top.1 += 1;
                top.2 = 0;
            }
            self.stack.push((child, 0, 0));
            Some(OPEN)
        } else {
            self.stack.pop();
            Some(CLOSE)
        }
    }
}

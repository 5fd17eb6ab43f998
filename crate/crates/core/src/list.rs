//! List-distinguishing colorings: exact class counts and witnesses.
//!
//! Every subtree gets the explicit set of colored ids of its
//! distinguishing colorings (one per class), built bottom-up. For a child
//! class of `m` siblings, a valid choice is a set of `m` distinct colored
//! ids that can be matched to the siblings with each id available to its
//! sibling. Sizes are bounded by a class cap; exceeding it is an error.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::bigcount::BigCount;
use crate::colored::{ColoredId, ColoredInterner};
use crate::construction::Coloring;
use crate::tree::{Center, RootedTree, Tree, CENTER_LABEL};

pub const DEFAULT_CLASS_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("vertex {vertex} has an empty list")]
    EmptyList { vertex: String },
    #[error("{got} lists for {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("more than {cap} representative classes at vertex {vertex}")]
    ClassCapExceeded { vertex: String, cap: usize },
    #[error("color {color} is not in the list of the root")]
    ColorNotInList { color: u32 },
    #[error("lists are not all of size {k}")]
    NonUniform { k: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no list for vertex {vertex}")]
    MissingVertex { vertex: String },
    #[error("unknown vertex {vertex}")]
    UnknownVertex { vertex: String },
    #[error("vertex {vertex} listed twice")]
    DuplicateVertex { vertex: String },
}

/// A nonempty list of color ids per vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<u32>>) -> Result<ListAssignment, ListError> {
        if let Some(v) = lists.iter().position(BTreeSet::is_empty) {
            return Err(ListError::EmptyList {
                vertex: v.to_string(),
            });
        }
        Ok(ListAssignment { lists })
    }

    /// The list `{1..k}` on each of `n` vertices.
    pub fn uniform_palette(n: usize, k: u32) -> ListAssignment {
        assert!(k >= 1, "palette must be nonempty");
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn list(&self, v: usize) -> &BTreeSet<u32> {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// The common list size, if all lists have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.lists.first()?.len();
        self.lists.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn all_identical(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// Parses `label: c1,c2,...` lines for the vertices of `t`. Blank lines
    /// and `#` comments are skipped. Lines with the label [`CENTER_LABEL`]
    /// are accepted and returned separately.
    pub fn parse(
        text: &str,
        t: &Tree,
    ) -> Result<(ListAssignment, Option<BTreeSet<u32>>), ListError> {
        let mut lists: Vec<Option<BTreeSet<u32>>> = vec![None; t.len()];
        let mut center = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (label, colors) = line.rsplit_once(':').ok_or_else(|| ListError::Syntax {
                line: line_no,
                message: "expected `label: c1,c2,...`".to_string(),
            })?;
            let label = label.trim();
            let mut set = BTreeSet::new();
            for c in colors.split(',').map(str::trim).filter(|c| !c.is_empty()) {
                let color: u32 = c.parse().map_err(|_| ListError::Syntax {
                    line: line_no,
                    message: format!("`{c}` is not a color id"),
                })?;
                if color == 0 {
                    return Err(ListError::Syntax {
                        line: line_no,
                        message: "color ids start at 1".to_string(),
                    });
                }
                set.insert(color);
            }
            if set.is_empty() {
                return Err(ListError::EmptyList {
                    vertex: label.to_string(),
                });
            }
            let slot = match t.vertex(label) {
                Some(v) => &mut lists[v],
                None if label == CENTER_LABEL => &mut center,
                None => {
                    return Err(ListError::UnknownVertex {
                        vertex: label.to_string(),
                    })
                }
            };
            if slot.is_some() {
                return Err(ListError::DuplicateVertex {
                    vertex: label.to_string(),
                });
            }
            *slot = Some(set);
        }
        let lists = lists
            .into_iter()
            .enumerate()
            .map(|(v, l)| {
                l.ok_or_else(|| ListError::MissingVertex {
                    vertex: t.label(v).to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((ListAssignment { lists }, center))
    }

    /// Lists indexed by the vertices of `rt`, read through its origin map.
    /// The subdivision vertex, if any, gets `extra`.
    pub fn for_rooted(
        &self,
        rt: &RootedTree,
        extra: BTreeSet<u32>,
    ) -> Result<ListAssignment, ListError> {
        let lists = (0..rt.len())
            .map(|v| match rt.origin(v) {
                Some(o) => self.lists[o].clone(),
                None => extra.clone(),
            })
            .collect();
        ListAssignment::new(lists)
    }

    fn check_len(&self, n: usize) -> Result<(), ListError> {
        if self.lists.len() == n {
            Ok(())
        } else {
            Err(ListError::WrongLength {
                got: self.lists.len(),
                expected: n,
            })
        }
    }
}

/// Distinct colored ids chosen for one child class, ascending.
type Choice = Vec<ColoredId>;

/// Representative colorings of every subtree, one colored id per class.
///
/// Without properness each vertex has one set; with properness there is a
/// set per root color.
#[derive(Debug, Clone)]
pub struct RepresentativeSet {
    proper: bool,
    interner: ColoredInterner,
    sets: Vec<HashMap<u32, HashSet<ColoredId>>>,
}

impl RepresentativeSet {
    /// Builds the sets for every non-root vertex of `rt` (the root's set is
    /// never materialized).
    pub fn build(
        rt: &RootedTree,
        lists: &ListAssignment,
        proper: bool,
        class_cap: usize,
    ) -> Result<RepresentativeSet, ListError> {
        lists.check_len(rt.len())?;
        let mut reps = RepresentativeSet {
            proper,
            interner: ColoredInterner::new(),
            sets: vec![HashMap::new(); rt.len()],
        };
        for &v in rt.bfs_order().iter().rev() {
            if v == rt.root() {
                continue;
            }
            reps.fill(rt, lists, v, class_cap)?;
        }
        Ok(reps)
    }

    fn fill(
        &mut self,
        rt: &RootedTree,
        lists: &ListAssignment,
        v: usize,
        cap: usize,
    ) -> Result<(), ListError> {
        let exceeded = || ListError::ClassCapExceeded {
            vertex: rt.label(v).to_string(),
            cap,
        };
        let shape = rt.shape(v);
        if self.proper {
            for &c in lists.list(v) {
                let per_class = self.choices(rt, v, Some(c), cap)?;
                let mut set = HashSet::new();
                for combo in product_of(&per_class, cap).ok_or_else(exceeded)? {
                    set.insert(self.interner.intern(c, combo, shape));
                }
                if !set.is_empty() {
                    self.sets[v].insert(c, set);
                }
            }
            let total: usize = self.sets[v].values().map(HashSet::len).sum();
            if total > cap {
                return Err(exceeded());
            }
        } else {
            let per_class = self.choices(rt, v, None, cap)?;
            let combos = product_of(&per_class, cap).ok_or_else(exceeded)?;
            if combos.len().saturating_mul(lists.list(v).len()) > cap {
                return Err(exceeded());
            }
            let mut set = HashSet::new();
            for &c in lists.list(v) {
                for combo in &combos {
                    set.insert(self.interner.intern(c, combo.clone(), shape));
                }
            }
            self.sets[v].insert(0, set);
        }
        Ok(())
    }

    /// Ids available to a child whose parent has color `parent_color`.
    fn available(&self, u: usize, parent_color: Option<u32>) -> Vec<ColoredId> {
        let mut out: Vec<ColoredId> = match parent_color {
            None => self.sets[u]
                .get(&0)
                .map(|s| s.iter().copied().collect())
                .unwrap_or_default(),
            Some(p) => self.sets[u]
                .iter()
                .filter(|(&c, _)| c != p)
                .flat_map(|(_, s)| s.iter().copied())
                .collect(),
        };
        out.sort_unstable();
        out
    }

    fn is_available(&self, u: usize, id: ColoredId, parent_color: Option<u32>) -> bool {
        match parent_color {
            None => self.sets[u].get(&0).is_some_and(|s| s.contains(&id)),
            Some(p) => {
                let c = self.interner.entry(id).color;
                c != p && self.sets[u].get(&c).is_some_and(|s| s.contains(&id))
            }
        }
    }

    /// All valid choices for each child class of `v`, in class order.
    fn choices(
        &self,
        rt: &RootedTree,
        v: usize,
        parent_color: Option<u32>,
        cap: usize,
    ) -> Result<Vec<Vec<Choice>>, ListError> {
        rt.child_classes(v)
            .iter()
            .map(|class| {
                let avail: Vec<Vec<ColoredId>> = class
                    .members()
                    .iter()
                    .map(|&u| self.available(u, parent_color))
                    .collect();
                matchable_subsets(&avail, cap).ok_or_else(|| ListError::ClassCapExceeded {
                    vertex: rt.label(v).to_string(),
                    cap,
                })
            })
            .collect()
    }

    /// Assigns the ids of `choice` to the members of a class.
    fn assign(
        &self,
        members: &[usize],
        choice: &[ColoredId],
        parent_color: Option<u32>,
    ) -> Vec<(usize, ColoredId)> {
        let adj: Vec<Vec<usize>> = choice
            .iter()
            .map(|&id| {
                (0..members.len())
                    .filter(|&i| self.is_available(members[i], id, parent_color))
                    .collect()
            })
            .collect();
        let matched =
            perfect_matching(&adj, members.len()).expect("choices always admit a matching");
        matched
            .into_iter()
            .enumerate()
            .map(|(i, slot)| (members[slot], choice[i]))
            .collect()
    }

    /// Writes the coloring encoded by `id` onto the subtree at `v`.
    fn decode(&self, rt: &RootedTree, v: usize, id: ColoredId, colors: &mut [u32]) {
        let mut stack = vec![(v, id)];
        while let Some((v, id)) = stack.pop() {
            let entry = self.interner.entry(id);
            colors[v] = entry.color;
            let parent_color = self.proper.then_some(entry.color);
            for class in rt.child_classes(v) {
                let ids: Vec<ColoredId> = entry
                    .children
                    .iter()
                    .copied()
                    .filter(|&c| self.interner.entry(c).shape == class.shape())
                    .collect();
                stack.extend(self.assign(class.members(), &ids, parent_color));
            }
        }
    }

    /// Colors the root `color` and the rest by the first valid choice per
    /// class. `false` when some class has no choice.
    fn decode_root(
        &self,
        rt: &RootedTree,
        root: usize,
        color: u32,
        cap: usize,
        colors: &mut [u32],
    ) -> Result<bool, ListError> {
        let parent_color = self.proper.then_some(color);
        let per_class = self.choices(rt, root, parent_color, cap)?;
        if per_class.iter().any(Vec::is_empty) {
            return Ok(false);
        }
        colors[root] = color;
        for (class, options) in rt.child_classes(root).iter().zip(&per_class) {
            for (u, id) in self.assign(class.members(), &options[0], parent_color) {
                self.decode(rt, u, id, colors);
            }
        }
        Ok(true)
    }

    /// Number of representatives at `v` with root color `color` (any color
    /// when not proper).
    fn size_at(&self, v: usize, color: Option<u32>) -> usize {
        match color {
            Some(c) if self.proper => self.sets[v].get(&c).map_or(0, HashSet::len),
            _ => self.sets[v].values().map(HashSet::len).sum(),
        }
    }
}

/// Cartesian product of per-class choices, flattened, or `None` past `cap`.
fn product_of(per_class: &[Vec<Choice>], cap: usize) -> Option<Vec<Vec<ColoredId>>> {
    let mut out: Vec<Vec<ColoredId>> = vec![Vec::new()];
    for options in per_class {
        if out.len().saturating_mul(options.len()) > cap {
            return None;
        }
        out = out
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.extend_from_slice(o);
                    next
                })
            })
            .collect();
    }
    Some(out)
}

/// All sets of `avail.len()` distinct ids that can be matched to the slots
/// with each id taken from its slot's list, or `None` past `cap`.
fn matchable_subsets(avail: &[Vec<ColoredId>], cap: usize) -> Option<Vec<Choice>> {
    let m = avail.len();
    if avail.iter().all(|a| a == &avail[0]) {
        return combinations(&avail[0], m, cap);
    }
    let mut union: Vec<ColoredId> = avail.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    let slots_of: Vec<Vec<usize>> = union
        .iter()
        .map(|id| {
            (0..m)
                .filter(|&s| avail[s].binary_search(id).is_ok())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    let ok = subsets_dfs(&union, &slots_of, m, 0, &mut chosen, &mut out, cap);
    ok.then_some(out)
}

fn subsets_dfs(
    union: &[ColoredId],
    slots_of: &[Vec<usize>],
    m: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Choice>,
    cap: usize,
) -> bool {
    if chosen.len() == m {
        if out.len() == cap {
            return false;
        }
        out.push(chosen.iter().map(|&i| union[i]).collect());
        return true;
    }
    let need = m - chosen.len();
    for i in start..union.len() {
        if union.len() - i < need {
            break;
        }
        chosen.push(i);
        let adj: Vec<Vec<usize>> = chosen.iter().map(|&j| slots_of[j].clone()).collect();
        if perfect_matching(&adj, m).is_some()
            && !subsets_dfs(union, slots_of, m, i + 1, chosen, out, cap)
        {
            return false;
        }
        chosen.pop();
    }
    true
}

fn combinations(items: &[ColoredId], m: usize, cap: usize) -> Option<Vec<Choice>> {
    let n = items.len();
    if m > n {
        return Some(Vec::new());
    }
    let count =
        crate::bigcount::binomial_exact(&BigUint::from(n), m as u64, Some(&BigUint::from(cap + 1)));
    if count.is_saturated() || count.value() > &BigUint::from(cap) {
        return None;
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(pos) = (0..m).rev().find(|&p| idx[p] != p + n - m) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..m {
            idx[q] = idx[q - 1] + 1;
        }
    }
    Some(out)
}

/// Matches every left vertex `i` to a distinct right vertex in `adj[i]` (of
/// `right` total). Returns the partner of each left vertex.
fn perfect_matching(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[i] {
            if !seen[r] {
                seen[r] = true;
                if owner[r].is_none_or(|o| augment(o, adj, seen, owner)) {
                    owner[r] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for i in 0..adj.len() {
        let mut seen = vec![false; right];
        if !augment(i, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut partner = vec![0; adj.len()];
    for (r, o) in owner.into_iter().enumerate() {
        if let Some(i) = o {
            partner[i] = r;
        }
    }
    Some(partner)
}

fn root_product(
    rt: &RootedTree,
    reps: &RepresentativeSet,
    parent_color: Option<u32>,
    cap: usize,
) -> Result<BigUint, ListError> {
    let per_class = reps.choices(rt, rt.root(), parent_color, cap)?;
    Ok(per_class
        .iter()
        .fold(BigUint::one(), |acc, c| acc * BigUint::from(c.len())))
}

/// `D(T_x; L)`: classes of distinguishing `L`-colorings of `rt` under
/// root-fixing automorphisms.
pub fn count_list_distinguishing(
    rt: &RootedTree,
    lists: &ListAssignment,
    class_cap: usize,
) -> Result<BigCount, ListError> {
    let reps = RepresentativeSet::build(rt, lists, false, class_cap)?;
    let below = root_product(rt, &reps, None, class_cap)?;
    Ok(BigCount::exact(
        below * BigUint::from(lists.list(rt.root()).len()),
    ))
}

/// `D_chi(T_x; L, i)`: classes of proper distinguishing `L`-colorings of
/// `rt` whose root has color `i`.
pub fn count_proper_list_distinguishing(
    rt: &RootedTree,
    lists: &ListAssignment,
    i: u32,
    class_cap: usize,
) -> Result<BigCount, ListError> {
    lists.check_len(rt.len())?;
    if !lists.list(rt.root()).contains(&i) {
        return Err(ListError::ColorNotInList { color: i });
    }
    let reps = RepresentativeSet::build(rt, lists, true, class_cap)?;
    Ok(BigCount::exact(root_product(
        rt,
        &reps,
        Some(i),
        class_cap,
    )?))
}

/// Outcome of [`check_orbit_list_equality`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCheck {
    /// Whether every orbit carries a single list.
    pub equality_expected: bool,
    /// Two vertices in one orbit with different lists.
    pub witness: Option<(usize, usize)>,
}

/// Whether lists are constant on the orbits of the root-fixing group, which
/// for uniform size-`k` lists decides `D(T_x; L) = D(T_x; k)` (when the
/// former is positive).
pub fn check_orbit_list_equality(
    rt: &RootedTree,
    lists: &ListAssignment,
    k: usize,
) -> Result<OrbitCheck, ListError> {
    lists.check_len(rt.len())?;
    if lists.uniform_size() != Some(k) {
        return Err(ListError::NonUniform { k });
    }
    let orbits = rt.canon().orbits(rt);
    let mut first: HashMap<usize, usize> = HashMap::new();
    for &v in rt.bfs_order() {
        let rep = *first.entry(orbits[v]).or_insert(v);
        if lists.list(rep) != lists.list(v) {
            return Ok(OrbitCheck {
                equality_expected: false,
                witness: Some((rep, v)),
            });
        }
    }
    Ok(OrbitCheck {
        equality_expected: true,
        witness: None,
    })
}

/// A distinguishing `L`-coloring of `t` (proper if asked), or `None` when
/// none exists.
pub fn construct_list_distinguishing_coloring(
    t: &Tree,
    lists: &ListAssignment,
    proper: bool,
    class_cap: usize,
) -> Result<Option<Coloring>, ListError> {
    lists.check_len(t.len())?;
    let rt = crate::tree::to_rooted(t);
    let mut colors = vec![0u32; rt.len()];
    let center = t.center();
    // automorphisms of t fix the subdivision vertex, so its color is free;
    // the proper edge-center case colors the halves directly
    let extra = match center {
        Center::Edge(u, _) => BTreeSet::from([*lists.list(u).first().expect("nonempty")]),
        Center::Vertex(_) => BTreeSet::new(),
    };
    let rl = lists.for_rooted(&rt, extra)?;
    let reps = RepresentativeSet::build(&rt, &rl, proper, class_cap)?;
    let found = match (proper, center) {
        (true, Center::Edge(u, v)) => {
            let mut pick = None;
            'outer: for &i in rl.list(u) {
                if reps.size_at(u, Some(i)) == 0 {
                    continue;
                }
                for &j in rl.list(v) {
                    if i != j && reps.size_at(v, Some(j)) > 0 {
                        pick = Some((i, j));
                        break 'outer;
                    }
                }
            }
            match pick {
                Some((i, j)) => {
                    for (h, c) in [(u, i), (v, j)] {
                        let id = *reps.sets[h][&c].iter().min().expect("nonempty");
                        reps.decode(&rt, h, id, &mut colors);
                    }
                    true
                }
                None => false,
            }
        }
        (true, Center::Vertex(_)) => {
            let mut ok = false;
            for &i in rl.list(rt.root()) {
                if reps.decode_root(&rt, rt.root(), i, class_cap, &mut colors)? {
                    ok = true;
                    break;
                }
            }
            ok
        }
        (false, _) => {
            let c = *rl.list(rt.root()).first().expect("nonempty");
            reps.decode_root(&rt, rt.root(), c, class_cap, &mut colors)?
        }
    };
    Ok(found.then(|| Coloring::new(colors).restrict_to_origin(&rt)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{distinguishes, is_proper};
    use crate::tree::parse_parens;

    fn lists(ls: &[&[u32]]) -> ListAssignment {
        ListAssignment::new(ls.iter().map(|l| l.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn star_counts() {
        let star2 = parse_parens("(()())").unwrap();
        let same = lists(&[&[1, 2], &[1, 2], &[1, 2]]);
        assert_eq!(
            count_list_distinguishing(&star2, &same, DEFAULT_CLASS_CAP)
                .unwrap()
                .to_u64(),
            Some(2)
        );
        let split = lists(&[&[1, 2], &[1, 2], &[3, 4]]);
        assert_eq!(
            count_list_distinguishing(&star2, &split, DEFAULT_CLASS_CAP)
                .unwrap()
                .to_u64(),
            Some(8)
        );
        let forced = lists(&[&[1, 2], &[5], &[5]]);
        assert_eq!(
            count_list_distinguishing(&star2, &forced, DEFAULT_CLASS_CAP)
                .unwrap()
                .to_u64(),
            Some(0)
        );
    }

    #[test]
    fn proper_counts() {
        let leaf = parse_parens("()").unwrap();
        let l = lists(&[&[4, 7]]);
        assert_eq!(
            count_proper_list_distinguishing(&leaf, &l, 7, DEFAULT_CLASS_CAP)
                .unwrap()
                .to_u64(),
            Some(1)
        );
        let p3 = parse_parens("(()())").unwrap();
        let three = ListAssignment::uniform_palette(3, 3);
        assert_eq!(
            count_proper_list_distinguishing(&p3, &three, 1, DEFAULT_CLASS_CAP)
                .unwrap()
                .to_u64(),
            Some(1)
        );
        let two = ListAssignment::uniform_palette(3, 2);
        assert_eq!(
            count_proper_list_distinguishing(&p3, &two, 1, DEFAULT_CLASS_CAP)
                .unwrap()
                .to_u64(),
            Some(0)
        );
        assert_eq!(
            count_proper_list_distinguishing(&p3, &two, 3, DEFAULT_CLASS_CAP),
            Err(ListError::ColorNotInList { color: 3 })
        );
    }

    #[test]
    fn matchable_subsets_respect_lists() {
        // slot 0 may take 1 or 2, slot 1 only 2
        let subsets = matchable_subsets(&[vec![1, 2], vec![2]], 100).unwrap();
        assert_eq!(subsets, vec![vec![1, 2]]);
        let subsets = matchable_subsets(&[vec![1, 2, 3], vec![1, 2, 3]], 100).unwrap();
        assert_eq!(subsets.len(), 3);
        assert!(matchable_subsets(&[vec![1, 2, 3], vec![1, 2, 3]], 2).is_none());
        assert!(matchable_subsets(&[vec![1], vec![1]], 100)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn class_cap_is_enforced() {
        let star = parse_parens("(()()()())").unwrap();
        let l = ListAssignment::uniform_palette(5, 9);
        assert!(matches!(
            count_list_distinguishing(&star, &l, 50),
            Err(ListError::ClassCapExceeded { .. })
        ));
        assert_eq!(
            count_list_distinguishing(&star, &l, 1000).unwrap().to_u64(),
            Some(9 * 126)
        );
    }

    #[test]
    fn orbit_checks() {
        let star2 = parse_parens("(()())").unwrap();
        let same = lists(&[&[1, 2], &[1, 2], &[1, 2]]);
        assert!(
            check_orbit_list_equality(&star2, &same, 2)
                .unwrap()
                .equality_expected
        );
        let split = lists(&[&[1, 2], &[1, 2], &[3, 4]]);
        let c = check_orbit_list_equality(&star2, &split, 2).unwrap();
        assert_eq!((c.equality_expected, c.witness), (false, Some((1, 2))));
        let ragged = lists(&[&[1], &[1, 2], &[3, 4]]);
        assert_eq!(
            check_orbit_list_equality(&star2, &ragged, 2),
            Err(ListError::NonUniform { k: 2 })
        );
    }

    #[test]
    fn witnesses() {
        let star2 = Tree::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let same = ListAssignment::uniform_palette(3, 2);
        let phi = construct_list_distinguishing_coloring(&star2, &same, false, DEFAULT_CLASS_CAP)
            .unwrap()
            .unwrap();
        assert!(distinguishes(&star2, phi.as_slice()));
        let ones = ListAssignment::uniform_palette(3, 1);
        assert_eq!(
            construct_list_distinguishing_coloring(&star2, &ones, false, DEFAULT_CLASS_CAP)
                .unwrap(),
            None
        );

        let p4 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let phi = construct_list_distinguishing_coloring(
            &p4,
            &ListAssignment::uniform_palette(4, 2),
            true,
            DEFAULT_CLASS_CAP,
        )
        .unwrap()
        .unwrap();
        assert!(is_proper(&p4, phi.as_slice()));
        assert!(distinguishes(&p4, phi.as_slice()));
    }

    #[test]
    fn parse_lists() {
        let t = Tree::from_labeled_edges(&[("a", "b")]).unwrap();
        let (l, center) = ListAssignment::parse("a: 1, 2\n# note\nb: 3\n⟨center⟩: 5", &t).unwrap();
        assert_eq!(l.list(0), &BTreeSet::from([1, 2]));
        assert_eq!(l.list(1), &BTreeSet::from([3]));
        assert_eq!(center, Some(BTreeSet::from([5])));
        assert!(matches!(
            ListAssignment::parse("a: 1", &t),
            Err(ListError::MissingVertex { .. })
        ));
        assert!(matches!(
            ListAssignment::parse("a 1\nb: 2", &t),
            Err(ListError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            ListAssignment::parse("a: x\nb: 2", &t),
            Err(ListError::Syntax { .. })
        ));
        assert!(matches!(
            ListAssignment::parse("a: 1\nc: 2\nb: 1", &t),
            Err(ListError::UnknownVertex { .. })
        ));
        assert!(matches!(
            ListAssignment::parse("a: 1\na: 2\nb: 1", &t),
            Err(ListError::DuplicateVertex { .. })
        ));
    }
}

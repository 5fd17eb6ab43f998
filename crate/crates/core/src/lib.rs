//! Exact counting and construction of distinguishing colorings of trees.
//!
//! A coloring is distinguishing when no nontrivial automorphism preserves
//! it. This crate computes the distinguishing number `D(T)` and the
//! distinguishing chromatic number `chi_D(T)` of a tree, counts equivalence
//! classes of (proper, list) distinguishing colorings exactly, builds
//! witness colorings, and checks everything against brute-force oracles.
//!
//! ```
//! use treedist::{distinguishing_number, distinguishing_chromatic_number, parse_edge_list};
//!
//! let star = parse_edge_list("hub a\nhub b\nhub c").unwrap();
//! assert_eq!(distinguishing_number(&star), 3);
//! assert_eq!(distinguishing_chromatic_number(&star), 4);
//! ```

pub mod bigcount;
pub mod colored;
pub mod construction;
pub mod count;
pub mod generate;
pub mod list;
pub mod oracle;
pub mod selftest;
pub mod tree;

pub use bigcount::BigCount;
pub use construction::{
    chi_certificate, construct_distinguishing_coloring, construct_proper_distinguishing_coloring,
    distinguishing_chromatic_number, distinguishing_number, parameters, properize, properize_tree,
    rank_distinguishing, rank_proper_distinguishing, unrank_distinguishing,
    unrank_proper_distinguishing, Certificate, Coloring, ConstructError, Parameters, STAR,
};
pub use count::{count_distinguishing, count_proper_distinguishing, CountTable};
pub use list::{
    check_orbit_list_equality, construct_list_distinguishing_coloring, count_list_distinguishing,
    count_proper_list_distinguishing, ListAssignment, ListError, OrbitCheck, DEFAULT_CLASS_CAP,
};
pub use tree::{
    parse_edge_list, parse_parens, parse_tree, to_rooted, CanonicalCode, Center, Format, Parsed,
    RootedTree, Tree, TreeError, CENTER_LABEL,
};

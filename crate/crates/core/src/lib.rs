//! Inverses of trees with perfect matchings.
//!
//! An invertible tree (one with a perfect matching) has an adjacency matrix
//! whose inverse has entries in `{0, ±1}`. This crate builds that inverse
//! combinatorially, checks it against exact integer elimination, relates its
//! signs to switching on fundamental cuts, and studies the tree-exchange
//! operation together with the partial order it generates on isomorphism
//! classes of invertible trees.

pub mod canon;
pub mod charpoly;
pub mod enumeration;
pub mod error;
pub mod exchange;
pub mod inverse;
pub mod matching;
pub mod matrix;
pub mod poly;
pub mod poset;
pub mod roots;
pub mod spectral;
pub mod tree;
pub mod verify;

pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use charpoly::{char_poly, CharPoly};
pub use enumeration::{enumerate_invertible, enumerate_trees, TreeClassSet};
pub use error::{Error, Result};
pub use exchange::{
    exchange_candidates, fundamental_cycle, is_rooted_product_k2, is_self_inverse, tree_exchange,
    verify_exchange_lemma, witness_non_minimal, ExchangeMove,
};
pub use inverse::{
    exact_inverse, fundamental_cut, inverse_entry, inverse_signed_graph, signed_tree_image,
    underlying_graph, verify_godsil, Cut, InvertibleTree, Sign, SignedGraph, SimpleGraph,
};
pub use matching::{is_alternating, perfect_matching, Involution, Matching};
pub use matrix::IntMatrix;
pub use poset::{build_poset, HassePoset};
pub use spectral::{median_eigenvalue, spectrum, Spectrum};
pub use tree::{parse_tree, Edge, Tree, VertexPath};

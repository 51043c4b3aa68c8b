//! Exact combinatorics of graph colorings: chromatic polynomials and
//! chromatic symmetric functions through broken-circuit subset expansions,
//! the corresponding characteristic polynomials of matroids, and the
//! chromatic sum of transitive digraphs over 2-path-free arc subsets.
//!
//! Everything is computed with arbitrary-precision integers and verified
//! against independent brute-force oracles; see [`verify`] for the full
//! identity catalog and the `polychrome` binary for the command-line
//! front end.
//!
//! # Example
//!
//! ```
//! use polychrome::graph::Graph;
//! use polychrome::chromatic::chromatic_polynomial_subset;
//!
//! let triangle = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
//! let chi = chromatic_polynomial_subset(&triangle).unwrap();
//! assert_eq!(chi.to_string(), "2*x - 3*x^2 + x^3");
//! assert_eq!(chi.eval_u64(3), 6.into());
//! ```

pub mod broken_circuits;
pub mod chromatic;
pub mod corpus;
pub mod digraph;
pub mod error;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};

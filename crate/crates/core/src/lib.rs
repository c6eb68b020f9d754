//! Benzenoid molecular graphs and their k-distance degree ("leap")
//! topological indices.
//!
//! The crate builds zigzag, rhombic and arbitrary hexagonal systems on an
//! exact integer lattice, computes k-distance degrees by depth-truncated
//! BFS, evaluates leap and classical degree-based indices and their
//! polynomials, and checks published closed forms and tables against the
//! computed values.
//!
//! ```
//! use benzleap::{benzenoid, graph::k_degree_profile, index::{compute_index, IndexKind}};
//!
//! let z2 = benzenoid::zigzag(2).unwrap();
//! let profile = k_degree_profile(&z2.graph, 2).unwrap();
//! let lm1 = compute_index(&z2.graph, &profile, IndexKind::Lm1).unwrap();
//! assert_eq!(lm1.as_int(), Some(148));
//! ```

pub mod benzenoid;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod graph;
pub mod index;
pub mod verify;

pub use closed_form::Family;
pub use error::{Error, Result};

//! Safe sets, strong safe sets and in-dominating sets in digraphs.
//!
//! A non-empty vertex set `S` of a digraph `D` is *safe* when every strong
//! component `M` of `D - S` has an arc into some strong component of `D[S]`,
//! and `|M| <= |N|` for every strong component `N` of `D[S]` that `M` has an
//! arc into. It is a *strong* safe set when `D[S]` is itself strong.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation. File formats, the command-line tool and anything that touches
//! the clock or threads live in the `safeset` crate.
//!
//! Layout:
//! - [`graph`], [`scc`], [`structure`]: the digraph type, strong components
//!   and the structural parameters (connectivity, independence number, lsc).
//! - [`verify`]: certificate-producing checkers.
//! - [`solvers`]: brute-force oracles, the component-chain dynamic program for
//!   semicomplete digraphs, bounded in-dominating search, feedback vertex
//!   sets and the exhaustive extremal tournament scan.
//! - [`generators`]: tournament families and seeded random instances.
//! - [`reductions`]: hardness gadgets with solution maps in both directions.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod mask;
pub mod reductions;
pub mod rng;
pub mod scc;
pub mod solvers;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Digraph;
pub use scc::{scc_decompose, Condensation};
pub use solvers::{SetSize, SolveResult};
pub use structure::{classify, independence_number, lsc, vertex_connectivity, Classification};
pub use verify::{Certificate, Violation};

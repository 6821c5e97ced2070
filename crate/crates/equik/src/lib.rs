//! Exact computations with finite group actions.
//!
//! The crate provides, over exact rational and cyclotomic arithmetic:
//!
//! * permutation groups with conjugacy classes, centralizers and cosets
//!   ([`group`]);
//! * ordinary character tables of small groups ([`chartab`]);
//! * an inductively defined family of GF(2) subspaces attached to an ordered
//!   basis ([`f2`]);
//! * case-by-case subgroup catalogues for the groups S3, S4, S5 and
//!   elementary abelian 2-groups ([`catalogue`]);
//! * the pairing set M(H), coset-multiplicity functions and the unique
//!   expansion of an integral class function in them ([`mdecomp`]);
//! * finite G-sets assembled from transitive pieces ([`gset`]);
//! * the convolution algebra of equivariant vector bundles on Y x Y
//!   ([`kconv`]).
//!
//! See the `examples/` directory for one runnable example per capability and
//! the `equik` binary for the command line interface.

pub mod catalogue;
pub mod chartab;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod f2;
pub mod gset;
pub mod group;
pub mod io;
pub mod kconv;
pub mod mdecomp;
pub mod perm;
pub mod ratmat;

pub use error::{Error, Result};
pub use group::{Group, Subgroup};
pub use perm::Perm;

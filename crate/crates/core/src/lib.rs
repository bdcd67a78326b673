//! RSK correspondences on Ferrers shapes, driven by Greene-Kleitman
//! invariants of weighted acyclic digraphs.
//!
//! The crate provides:
//!
//! - [`shapes`]: integer partitions, Ferrers boxes, diagonals, hooks,
//!   fillings / reverse plane partitions, and interval bipartitions with the
//!   row/column labelling they induce.
//! - [`gk`]: the Greene-Kleitman invariant engine on weighted DAGs, with an
//!   exact min-cost-flow solver, an independent brute-force oracle, and
//!   antichain width by closure plus matching.
//! - [`coxeter`]: Coxeter elements of the symmetric group and the
//!   Auslander-Reiten quivers they induce on transpositions, with diagonal
//!   slices.
//! - [`rsk`]: the classical diagonal-wise correspondence from fillings to
//!   reverse plane partitions, its Coxeter-parametrized family on AR slices,
//!   the element for which the two coincide, and a search-based inverse.
//! - [`io`], [`dot`]: JSON schemas and Graphviz emission.
//! - [`verify`]: the invariant battery behind the CLI's `verify` command.
//!
//! All types are immutable values after construction and every operation is
//! a pure function, so everything can be shared freely across threads.

pub mod coxeter;
pub mod dot;
pub mod gk;
pub mod io;
pub mod rng;
pub mod rsk;
pub mod shapes;
pub mod verify;

pub use coxeter::{ArQuiver, ArSlice, CoxeterElement, CoxeterError, Permutation};
pub use gk::{
    antichain_width, gk_bruteforce, gk_invariant, gk_invariant_with_witnesses, max_weight_paths,
    max_weight_profile, weight_of, GkResult, GraphError, PathTuple, WeightedDag,
};
pub use rsk::{
    coxeter_rsk, gansner_rsk, invert_rsk, special_coxeter, CoxeterRskMap, GansnerMap,
    LiftedFilling, RskError, RskVariant, ShapeGraph,
};
pub use shapes::{Cell, Diagonal, Filling, IntervalBipartition, Partition, ShapeError};

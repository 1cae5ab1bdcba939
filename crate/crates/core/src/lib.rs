//! Soft sets over finite universes.
//!
//! A soft set assigns nonempty subsets of a universe to some of the
//! parameters of a parameter space. This crate provides the value types
//! ([`Context`], [`SoftSet`]), the set algebra on them ([`algebra`]), an
//! executable catalog of algebraic laws with exhaustive and randomized
//! checking ([`laws`]), a small expression language ([`expr`]), a text
//! format for workspaces of named soft sets ([`io`]) and the command-line
//! front end ([`cli`]).

pub mod algebra;
pub mod cli;
pub mod expr;
pub mod fixtures;
pub mod io;
pub mod laws;
pub mod model;
pub mod objects;

pub use algebra::{complement, difference, equals, intersection, subset, union};
pub use io::{load_workspace, render_workspace, Workspace};
pub use model::{Context, ContextRef, ModelError, SoftSet};
pub use objects::{ObjectId, ObjectSet, ParamId};

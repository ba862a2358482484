//! Polynomial kernels for H-free edge deletion.
//!
//! Given a finite family `H` of connected graphs, a graph `G` and a budget
//! `k`, the problem asks whether deleting at most `k` edges leaves no induced
//! copy of any member of `H`. This crate provides
//!
//! * graph primitives with stable labels ([`graph`]),
//! * induced-subgraph search for the family ([`patterns`]),
//! * exact solvers and the layered deletion-set trace ([`solver`]),
//! * Ramsey bounds for the degree cap ([`ramsey`]),
//! * the bounded-degree and clique-free kernels ([`kernel`], [`bounds`]),
//! * file format, generators and safety campaigns ([`format`], [`generate`],
//!   [`verify`]).

pub mod bounds;
mod dense;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod patterns;
pub mod ramsey;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{endpoints_of, Edge, EdgeSet, Graph, Vertex, VertexSet};
pub use kernel::{
    apply_rule0, apply_rule0_with_delta, apply_rule1, kernelize_bounded_degree, kernelize_ktfree, kernelize_starfree,
    HostClass, KernelParams, KernelResult, RuleApplied,
};
pub use patterns::{builtin_pattern, enumerate_induced, find_one_induced, occupied_vertices, Embedding, PatternFamily};
pub use solver::{mhds_trace, solve_branching, solve_bruteforce, DeletionTrace, ProblemInstance, Solution};

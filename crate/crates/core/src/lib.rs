//! Exact counting and certified numeric machinery for rainbow-triangle
//! bounds in edge-colored graphs.
//!
//! Three areas, each exact where it counts:
//!
//! * [`graph`] — simple graphs and edge colorings with exact triangle,
//!   induced-H and happy-triple counters, rainbow-triangle detection, and
//!   the two rational triangle-count lower bounds;
//! * [`happy`] — the happy-triple maximum `C(l,2) + C(k-l+1,2)`, its convex
//!   relaxation, the dynamic-programming upper-bound table with its sweep
//!   verifier, an exhaustive small-case oracle, and the extremal
//!   constructions attaining the bound;
//! * [`feasibility`] — the two nonlinear condition systems certifying pairs
//!   (1+δ, t) as triangular, grid-plus-bisection minimizers for δ and t,
//!   and the auxiliary quadratic bounds on the edge count.
//!
//! ```
//! use rainbow_bounds::{build_dp_table, f_bound, verify_lemma};
//!
//! let table = build_dp_table(103).unwrap();
//! assert_eq!(table.entry(103, 52), f_bound(103, 52).unwrap());
//! assert!(verify_lemma(&table, 103).unwrap().is_empty());
//! ```

pub mod error;
pub mod feasibility;
pub mod graph;
pub mod happy;

pub use error::{Error, Result};
pub use feasibility::{
    appendix_a_bound, appendix_a_quadratic, check_thm31, check_thm41, minimize_delta, minimize_t,
    r_ge5_k_bound, Condition, FeasibilityReport, KBoundSweep, ParameterPoint, SearchResult,
    TheoremId, DEFAULT_BISECT_TOL, DEFAULT_CH_CONSTANT, DEFAULT_DELTA_GRID_2D, DEFAULT_EPS_GRID,
    DEFAULT_EPS_GRID_2D, DEFAULT_MARGIN,
};
pub use graph::{
    goodman_lower_bound, refined_lower_bound, EdgeColoredGraph, Graph, TriangleBoundInputs,
};
pub use happy::{
    brute_force_max_happy, build_dp_table, convex_argmin, default_oracle_cap,
    extremal_construction, f_bound, verify_lemma, ConvexBound, DpTable, OracleResult,
    ORACLE_MAX_EDGES,
};

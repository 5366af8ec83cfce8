//! Exact continued fractions, Ford circles and best approximations of the
//! second kind.
//!
//! Real numbers are either exact [`Rational`]s or infinite coefficient
//! streams ([`CfStream`]); every predicate is decided by exact comparison.
//! [`theorem_u_check`] evaluates the five equivalent characterisations of a
//! convergent for one pair `(x, α)`, and [`verify_sweep`] runs it over a grid.

pub mod cf;
pub mod error;
pub mod ford;
pub mod rational;
pub mod real;
pub mod render;
pub mod verify;

pub use cf::{
    cf_of_rational, cf_of_real, convergent_ordering_check, convergents, value, ContinuedFraction, Convergent,
    Recurrence, Tail,
};
pub use error::{Error, Result};
pub use ford::{
    are_tangent, ford_circle, gap_relation, generic_tangent_radius, horocircle_gap, lemma_q_check, lemma_x_check,
    tangent_horocircle, tangent_horocircle_radius, FordCircle, GapRelation, HoroRadius, Horocircle,
};
pub use rational::{fractions_in, Rational};
pub use real::{
    compare_linear_forms, compare_real, golden_ratio, sqrt_real, CfStream, PartialQuotients, PeriodicPartials,
    RealNumber, DEFAULT_PULL_LIMIT,
};
pub use render::{render_chain, render_ford_field, render_statement_v, RenderSpec};
pub use verify::{
    cf_chain, is_best_approx_2nd, is_best_approx_2nd_with, is_chain_member, is_convergent, is_nearby, is_nearby_with,
    penultimate_witness, statement_v_witness, theorem_u_check, theorem_u_check_with, verify_sweep, ChainEntry,
    Search, SweepParams, SweepReport, TheoremUReport, Window,
};

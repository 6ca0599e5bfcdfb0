//! Exact counts of colored ball sequences.
//!
//! A sequence of `k` balls is colored from a palette of `n` distinguishable
//! colors. A ball is *matched* when some other ball has its color, a color is
//! *repeated* when at least two balls carry it, and a ball is a *repeat* when
//! its color already appeared earlier in the sequence. This crate counts
//! sequences by these statistics in exact integer arithmetic and checks every
//! closed form against exhaustive enumeration.
//!
//! ```
//! use colorseq::{problem1_matches_fixed_length, z_count, SequenceClass};
//!
//! // Five balls, three colors, exactly four matched balls.
//! assert_eq!(problem1_matches_fixed_length(5, 3, 4), 120u32);
//! assert_eq!(z_count(SequenceClass::new(5, 3, 4, 1)), 30u32);
//! assert_eq!(z_count(SequenceClass::new(5, 3, 4, 2)), 90u32);
//! ```
//!
//! The guide in `book/` walks through the derivation; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod arith;
pub mod cli;
pub mod count;
pub mod error;
pub mod oracle;
pub mod problems;
pub mod sequence;
pub mod surjective;
pub mod table;

pub use arith::{binomial, falling_factorial};
pub use count::Count;
pub use error::{Error, Result};
pub use problems::{
    distribution_table, problem1_matches_fixed_length, problem2_matches_any_length,
    problem3_repeats_fixed_length, problem4_repeats_any_length,
};
pub use sequence::{feasibility, z_count, Constraint, FeasibilityReport, SequenceClass};
pub use surjective::doubly_surjective_count;
pub use table::DistributionTable;

// The guide's chapters are attached to empty modules so that `cargo test
// --doc` compiles and runs every listing in them. One module per chapter
// keeps failures traceable to a file.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/cells.md")]
    mod cells {}
    #[doc = include_str!("../../../book/src/surjective.md")]
    mod surjective {}
    #[doc = include_str!("../../../book/src/aggregates.md")]
    mod aggregates {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

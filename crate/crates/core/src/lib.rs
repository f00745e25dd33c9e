//! Exact enumeration of excursion sequences for octant and quadrant lattice
//! walks.
//!
//! Every sequence can be produced by several independent pipelines: walk
//! counting ([`walks`]), constant terms of Laurent polynomials ([`laurent`]),
//! P-recurrences and differential operators ([`holonomic`]) and closed-form
//! power series ([`series`]). [`verify`] cross-checks them.
//!
//! ```
//! use chamberseq::{binomial_transform, count_excursions, hesitating_model, octant_g2_model};
//!
//! let t3 = count_excursions(&octant_g2_model(), 9);
//! let e3 = count_excursions(&hesitating_model(), 9);
//! assert_eq!(binomial_transform(&t3, 1).unwrap().terms(), e3.terms());
//! ```

pub mod error;
pub mod holonomic;
pub mod laurent;
pub mod pipeline;
pub mod sequence;
pub mod series;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};
pub use holonomic::{DiffOperator, PRecurrence, Poly};
pub use laurent::{constant_term, ct_sequence, g2_kernel, lp_mul, sl3_kernel, LaurentPoly};
pub use pipeline::{generate, Method, Model};
pub use sequence::{binomial_transform, compare_prefix, reference, ReferenceTable, Sequence};
pub use series::{bt_series, PowerSeries};
pub use verify::{Scope, VerificationReport};
pub use walks::{
    apply_unimodular, count_excursions, hesitating_model, octant_g2_model, with_extra_zero_steps,
    LinearForm, Step, WalkModel,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/walks.md")]
    mod walks {}
    #[doc = include_str!("../../../book/src/constant_terms.md")]
    mod constant_terms {}
    #[doc = include_str!("../../../book/src/recurrences.md")]
    mod recurrences {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/closed_forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/quadrant.md")]
    mod quadrant {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}

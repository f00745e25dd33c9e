//! Holonomic machinery: P-recurrences and polynomial differential operators.

pub mod operator;
pub mod poly;
pub mod recurrence;

pub use operator::{
    apply_operator, c2_operator, diff_to_rec, e3_operator, l3, l6, q_operator, q_recurrence_check,
    q_stated_recurrence, weyl_mul, DiffOperator,
};
pub use poly::Poly;
pub use recurrence::{
    c2_recurrence, e3_recurrence, resolve_uniform_parameters, t3_recurrence, uniform_recurrence,
    PRecurrence, UniformMatch,
};

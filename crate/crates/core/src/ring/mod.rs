//! The scalar ring: Laurent polynomials in `q` over Q, their fraction field,
//! and q-combinatorics.

mod cyclotomic;
mod laurent;
mod qcomb;
mod ratfunc;
pub(crate) mod upoly;

pub use cyclotomic::vanishes_at_root_of_unity;
pub(crate) use laurent::owned_binops;
pub use laurent::{divide_exact, LaurentPoly};
pub use num_rational::BigRational;
pub use qcomb::{q_factorial, q_factorial_single, q_falling, q_int, q_int_signed, MultiIndex};
pub use ratfunc::RatFunc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("q-integer of negative argument {0}")]
    NegativeQInt(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("({num}) is not divisible by ({den}) in Q[q, q^-1]")]
    InexactDivision { num: String, den: String },
}

/// `q − q⁻¹`, the denominator of every commutator `[E_i, F_i]`.
pub fn q_minus_qinv() -> LaurentPoly {
    &LaurentPoly::q() - &LaurentPoly::q_pow(-1)
}

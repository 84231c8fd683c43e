//! Exact computer algebra for a quantized function-space calculus: the
//! quadratic `w`-algebra, q-difference operators, the wave operator, the
//! Dirac operators `D±`, and oracles in a fragment of `U_q(sl₄)` that check
//! them independently.
//!
//! All arithmetic is exact over Q(q).

pub mod aq;
pub mod dirac;
pub mod par;
pub mod parse;
pub mod qcalc;
pub mod ring;
pub(crate) mod ser;
pub mod suites;
pub mod transform;
pub mod uq;
pub mod verma;

//! Exact arithmetic over `Q(q,t)`.

mod letters;
mod ratfunc;
mod text;
mod zpoly;

pub use letters::{omega_eval, pochhammer, q_pochhammer, MonomialLetter, MonomialSum};
pub use num_rational::BigRational;
pub use ratfunc::{qt_combine, qt_eval, QTPoly, QTRational, QtOp};

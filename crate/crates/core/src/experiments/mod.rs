//! The three worked experiments and the random instance generators used by
//! tests and the command-line tools.

pub mod condnum;
pub mod delay;
pub mod rkhs;
pub mod synthetic;

//! Exact-arithmetic computational algebra for the symmetric group:
//! Dunkl and Cherednik operators, nonsymmetric Jack polynomials over the
//! rational-function field ℚ(κ), and the classification of singular
//! polynomials (existence indices, uniqueness data, critical pairs, and
//! nonexistence witnesses) at desk scale.

pub mod checks;
pub mod comb;
pub mod jack;
pub mod linalg;
pub mod ops;
pub mod poly;
pub mod scalar;
pub mod singular;

pub use scalar::{Rational, RationalFunctionK, Scalar, UniPolyK};

use std::sync::atomic::{AtomicUsize, Ordering};

static THREADS: AtomicUsize = AtomicUsize::new(1);

/// Sets the worker-thread count used by parallelizable kernels
/// (currently the singular-space matrix assembly). Defaults to 1.
pub fn set_threads(n: usize) {
    THREADS.store(n.max(1), Ordering::Relaxed);
}

pub fn threads() -> usize {
    THREADS.load(Ordering::Relaxed)
}

//! Exact-arithmetic verification laboratory for the Hodge–GUE correspondence.
//!
//! The crate computes the genus expansion of the GUE free energy with even
//! couplings and the special cubic Hodge free energies as truncated formal
//! series over the rationals, checks the correspondence identities between
//! them symbolically (at the jet level) and series-wise, and independently
//! validates the matrix-model side against brute-force ribbon-graph
//! enumeration.
//!
//! Layers, bottom up:
//!
//! * [`rational`] — arbitrary-precision rationals plus the small number-theory
//!   helpers (binomials, harmonic numbers, Bernoulli numbers).
//! * [`laurent`] — the coefficient ring: Laurent polynomials in `x` with an
//!   optional Laurent polynomial multiplying `log x`.
//! * [`series`] — truncated multivariate power series over that ring, with a
//!   graded fixed-point solver, log/exp, and genus-indexed families.
//! * [`jet`] — differential polynomials in jet variables `v, v1, v2, …`, the
//!   total-derivative operator, the built-in free energies, jet substitution
//!   into series, and the `cosh` genus-mixing operator.
//! * [`genus0`] — the genus-zero story: the planar string equations, closed
//!   forms for both free energies, the coupling substitution and the residual
//!   of the genus-zero identity.
//! * [`theta`] — the two-point-function route to the genus-zero GUE free
//!   energy, used as an independent cross-check.
//! * [`correspond`] — the genus-by-genus correspondence: jet identities,
//!   derivation of the higher Hodge energies, Bernoulli constant checks and
//!   the full series comparison.
//! * [`partition`], [`hodge`] — partitions, the Q-matrix, extraction of
//!   combined cubic Hodge integrals and the explicit free-energy assembly.
//! * [`ribbon`] — the combinatorial ground truth: perfect-matching census of
//!   ribbon graphs binned by genus.
//!
//! All values are immutable and all operations are pure functions; with the
//! default `parallel` feature the data-parallel inner loops use rayon, and
//! without it they fall back to equivalent sequential code.

pub mod correspond;
pub mod genus0;
pub mod hodge;
pub mod jet;
pub mod laurent;
pub mod partition;
pub(crate) mod par;
pub mod rational;
pub mod report;
pub mod ribbon;
pub mod series;
pub mod theta;

pub use laurent::LaurentLog;
pub use partition::Partition;
pub use rational::Rational;
pub use series::{GenusSeries, SeriesElement, SeriesError, SeriesRing};

//! Exact enumeration of bicellular (two-face) bicolored maps.
//!
//! Everything is exact arithmetic over arbitrary-precision rationals: the
//! genus distribution polynomial of maps with face lengths `p` and `n-p`
//! and white vertex degree distribution `mu` is computed three independent
//! ways (a closed formula, a symmetric-group character sum, and brute-force
//! permutation enumeration), and the analytic claims about its zeros and
//! coefficient log-concavity are decided exactly via Sturm sequences.

pub mod bicellular;
pub mod charlib;
pub mod charsum;
pub mod combinat;
pub mod error;
pub mod oracle;
pub mod zeros;

pub use combinat::{Partition, Permutation, RatPoly, Rational, YSeries};
pub use error::Error;

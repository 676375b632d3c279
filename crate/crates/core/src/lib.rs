//! Correlations of two-qubit states measured by linear relative entropy and
//! by Hilbert-Schmidt distance.
//!
//! The crate works on a symmetric two-parameter X-state family, for which the
//! closest product, classical and classical-product states are known in closed
//! form, and checks every closed form against a brute-force search over the
//! corresponding state sets.
//!
//! ```
//! use lincorr::{full_report, XParams};
//!
//! let r = full_report(XParams::new(0.5, 0.5).unwrap());
//! assert!((r.t2 - 0.75).abs() < 1e-12);
//! assert!((r.t2 - r.d2 - r.c2 + r.l2).abs() < 1e-12);
//! ```

pub mod cli;
pub mod closest;
pub mod correlations;
pub mod error;
pub mod fano;
pub mod lentropy;
pub mod matcore;
pub mod oracle;
pub mod sampling;
pub mod xfamily;

pub use closest::{closest_set, solve_a3, ClosestSet};
pub use correlations::{full_report, CorrelationReport};
pub use error::{Error, Result};
pub use fano::{fano_distance_sq, from_fano, to_fano, FanoTensor};
pub use matcore::{HermitianOp2, HermitianOp4, QubitPairDensity};
pub use oracle::{OracleResult, SearchConfig};
pub use xfamily::{make_state, Branch, BranchTag, XParams};

use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A transition row failed validation (negative entry, bad length,
    /// probability mass off by more than 1e-14, mass on negative states).
    InvalidChain { state: usize, detail: String },
    /// Detailed balance is inconsistent across two paths.
    NotReversible { residual: f64 },
    /// The transition graph on the requested states is disconnected.
    ZeroProbabilityEdge { state: usize },
    /// Operation requires a tridiagonal (bandwidth 1) chain.
    BandwidthTooLarge { bandwidth: usize },
    /// The symmetric eigensolver did not converge.
    EigenFailure,
    /// A tridiagonal truncation produced eigenvalues closer than 1e-12.
    DegenerateSpectrum { gap: f64 },
    /// A reconstructed off-diagonal coefficient satisfied `b^2 <= 1e-12`:
    /// the measure is supported on fewer points than requested.
    IllConditioned { index: usize },
    /// The generated Krylov subspace degenerated (`b_j < 1e-12`).
    Breakdown { step: usize },
    /// Adaptive quadrature exhausted its budget with residual above 1e-8.
    QuadratureNotConverged { residual: f64 },
    /// Evaluation point is on (or within 1e-12 of) the measure support.
    PoleOnSupport,
    /// Gauss exactness precondition `2n - 1 >= t + i + j` failed.
    DegreeTooHigh { required: usize, available: usize },
    /// Argument outside the domain of the requested branch or map.
    OutsideDomain { value: f64 },
    /// A forward recurrence cannot be solved: leading band entry is zero.
    SingularLeadingBand { state: usize },
    /// Truncation refinement did not converge to the requested tolerance.
    NotConverged,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidChain { state, detail } => {
                write!(f, "invalid transition row at state {state}: {detail}")
            }
            Error::NotReversible { residual } => {
                write!(f, "detailed balance violated (residual {residual:e})")
            }
            Error::ZeroProbabilityEdge { state } => {
                write!(
                    f,
                    "state {state} is not reachable from 0 along positive edges"
                )
            }
            Error::BandwidthTooLarge { bandwidth } => {
                write!(
                    f,
                    "operation requires bandwidth 1, chain has bandwidth {bandwidth}"
                )
            }
            Error::EigenFailure => write!(f, "symmetric eigensolver failed to converge"),
            Error::DegenerateSpectrum { gap } => {
                write!(
                    f,
                    "eigenvalues of a tridiagonal truncation nearly coincide (gap {gap:e})"
                )
            }
            Error::IllConditioned { index } => {
                write!(f, "moment problem degenerate at coefficient b_{index}")
            }
            Error::Breakdown { step } => write!(f, "Krylov subspace degenerated at step {step}"),
            Error::QuadratureNotConverged { residual } => {
                write!(f, "quadrature budget exhausted (residual {residual:e})")
            }
            Error::PoleOnSupport => write!(f, "evaluation point lies on the measure support"),
            Error::DegreeTooHigh {
                required,
                available,
            } => {
                write!(
                    f,
                    "integrand degree {required} exceeds Gauss exactness {available}"
                )
            }
            Error::OutsideDomain { value } => write!(f, "argument {value} outside domain"),
            Error::SingularLeadingBand { state } => {
                write!(f, "leading band entry P({state}, {state}+m) is zero")
            }
            Error::NotConverged => write!(f, "truncation refinement did not converge"),
        }
    }
}

impl core::error::Error for Error {}

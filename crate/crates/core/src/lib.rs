//! Exact-arithmetic toolkit for comparing two invariants attached to a module
//! over the preprojective algebra of an ADE quiver:
//!
//! * the coordinate ring of the torus-fixed-point subscheme of the associated
//!   MV-type cycle, presented as a finite quotient `k[a_ij, b_ik] / I(M)` and
//!   measured by its dimension and weight-graded Hilbert series
//!   ([`ring`], [`groebner`]);
//! * cohomological invariants of the quiver Grassmannian of the module: Euler
//!   characteristics by direct-sum convolution and Poincaré polynomials by
//!   finite-field point counts ([`grass`], [`count`]).
//!
//! Everything is computed over exact rationals or prime fields; there is no
//! floating point anywhere. [`verify`] glues the two sides together and
//! produces machine-readable reports.

pub mod cartan;
pub mod count;
pub mod error;
pub mod field;
pub mod grass;
pub mod groebner;
pub mod matrix;
pub mod modfile;
pub mod poly;
pub mod quiver;
pub mod ring;
pub mod series;
pub mod verify;
pub mod weyl;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Tunable resource limits with the library's default desk-scale values.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest Weyl group that `weyl::WeylGroup::enumerate` will build.
    pub weyl_bound: usize,
    /// Brute-force subspace enumeration requires `sum(d_i) <= brute_dim_bound`.
    pub brute_dim_bound: usize,
    /// Upper bound on the product of per-vertex subspace counts that the
    /// brute-force enumerator is willing to walk.
    pub brute_work_budget: u128,
    /// `verify::scan` refuses dimension boxes with more than this many cells.
    pub scan_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            weyl_bound: 100_000,
            brute_dim_bound: 8,
            brute_work_budget: 20_000_000,
            scan_bound: 20_000,
        }
    }
}

//! Exact-arithmetic kernel for rational polyhedral cones and the affine
//! semigroups they cut out.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; there is not a single floating-point number in the crate.
//! The main pipeline is:
//!
//! 1. [`cone`] — build a pointed rational cone from integer generators,
//!    compute its primitive extreme rays, the dual cone, and the full
//!    face lattice.
//! 2. [`hilbert`] — compute the Hilbert basis of the dual semigroup
//!    `C^∨ ∩ M` and enumerate semigroup elements by degree.
//! 3. [`ideal`] — monomial primes attached to faces, their ordinary
//!    powers, valuation ideals, and two independent symbolic-power
//!    membership oracles.
//! 4. [`invariant`] — uniform containment multipliers, divisor class
//!    group via Smith normal form, F-signature as an exact polytope
//!    volume, and the containment/sharpness verification drivers.
//! 5. [`family`] — constructors for the Veronese, hypersurface, and
//!    Segre-Veronese example families together with their predicted
//!    invariants for golden testing.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON, and the command-line
//! front end live in the companion `toric-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cone;
pub mod error;
pub mod family;
pub mod hilbert;
pub mod ideal;
pub mod invariant;
pub mod lattice;

pub use cone::{Classification, Cone, Face};
pub use error::{Error, Result};
pub use hilbert::SemigroupBasis;
pub use ideal::{MonomialIdeal, MonomialPrime};
pub use lattice::{IntegerMatrix, LatticeVector, SmithDecomposition};

//! Positroids from decorated permutations.
//!
//! A positroid is a matroid whose bases are cut out by a Grassmann necklace
//! through the Gale order. This crate models positroids combinatorially and
//! computes with them at two speeds:
//!
//! - a brute-force [`OracleMatroid`] that reduces every notion (rank,
//!   closure, flats, separability, duality) to scans over an explicit basis
//!   list, used as ground truth in every test, and
//! - fast permutation-level engines for ranks of arbitrary subsets (interval
//!   ranks, natural rank bounds over non-crossing partitions, the push
//!   procedure), for flats (cover criteria by bridge intervals), and for the
//!   facet systems of the matroid and independent-set polytopes.
//!
//! The `book/` directory of the repository walks through the theory; its
//! code blocks compile and run as this crate's doc tests (see [`guide`]).
//!
//! ```
//! use positroid::{DecoratedPermutation, Positroid, Subset};
//!
//! let perm: DecoratedPermutation = "2 8 6 7 9 4 5 14 13 3 10 11 1 12".parse().unwrap();
//! let p = Positroid::from_permutation(perm);
//! let gs = p.ground_set();
//! assert_eq!(p.d(), 7);
//!
//! let e = Subset::from_labels(&gs, [1, 2, 3, 8, 9, 10]).unwrap();
//! assert_eq!(p.rank(e).unwrap(), 3);
//! ```

pub mod cyclic;
mod error;
pub mod facets;
pub mod flats;
pub mod guide;
pub mod necklace;
pub mod oracle;
pub mod perm;
mod positroid;
pub mod rank;
pub mod verify;

pub use cyclic::{CyclicInterval, Decomposition, GroundSet, Subset, MAX_GROUND_SIZE};
pub use error::{Error, ErrorClass, Result};
pub use facets::{FacetSystem, FlatFamily, Inequality, InequalityKind, PolytopeMode, Sense};
pub use flats::{BridgeInterval, FlatRecord};
pub use necklace::GrassmannNecklace;
pub use oracle::OracleMatroid;
pub use perm::{Color, DecoratedPermutation};
pub use positroid::{Positroid, BASIS_ENUM_LIMIT};
pub use rank::{NonCrossingPartition, PushOutcome, PushState};
pub use verify::{VerifyOptions, VerifyReport};

//! Exact chromatic polynomials of multigraphs and orbital chromatic
//! polynomials of the `n`-cycle under its rotation and dihedral groups.
//!
//! All arithmetic is exact: polynomial coefficients are arbitrary-precision
//! rationals, and every closed form is paired with a generic route
//! (deletion–contraction over quotient graphs) and with a brute-force
//! orbit counter in [`oracle`].
//!
//! ```
//! use orbital_chromatic::{chroma, permgroup, multigraph::Multigraph};
//!
//! let c6 = Multigraph::cycle(6).unwrap();
//! let group = permgroup::PermGroup::automorphisms_of_cycle(6).unwrap();
//! let by_definition = chroma::orbital_by_definition(&c6, &group).unwrap();
//! assert_eq!(by_definition, chroma::orbital_full_closed(6).unwrap());
//! ```

pub mod chroma;
pub mod cli;
mod error;
pub mod exactpoly;
pub mod multigraph;
pub mod numtheory;
pub mod oracle;
pub mod permgroup;

pub use error::{Error, Result};
pub use exactpoly::RationalPoly;
pub use multigraph::{Multigraph, Shape};
pub use permgroup::{PermGroup, Permutation};

//! Exact computations in the Green ring, the Grothendieck ring and the stable
//! Green ring of a finite dimensional pointed rank one Hopf algebra of
//! non-nilpotent type, built from a group datum `(G, χ, g, 1)` with `G` abelian.
//!
//! Every multiplication rule used by [`green_ring`] can be re-derived by the
//! brute-force module realizations in [`oracle`].

pub mod catalog;
pub mod cyclotomic;
pub mod datum;
pub mod error;
pub mod green_ring;
pub mod grothendieck;
pub mod lattice;
pub mod oracle;
pub mod poly;
pub mod radford;
pub mod radical;
pub mod ring;
pub mod stable;

pub use catalog::{Catalog, IndecLabel};
pub use datum::{validate_datum, CharacterIndex, Datum, GroupDatum};
pub use error::{Error, Result};
pub use green_ring::{GreenRing, RingElement};
pub use lattice::{IntMatrix, Lattice};
pub use ring::CommutativeRing;

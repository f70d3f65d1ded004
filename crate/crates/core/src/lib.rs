//! Finite one-sided dirings and their left modules.
//!
//! A *left diring* is an abelian group carrying two distributive products, the
//! left product `x ⇀· y` ([`DiringTable::lprod`]) and the right product
//! `x ↼· y` ([`DiringTable::rprod`]), which together form a dimonoid with a
//! left bar-unit. Everything here works on explicit operation tables over
//! element indices `0..n`, with index 0 always the zero element.
//!
//! The crate covers the halo calculus, ideals and quotients, left modules and
//! their 3-irreducibility, 3-primitive ideals and the 3-radical, plus an
//! exhaustive census of small structures used to check the theory.

pub mod analysis;
pub mod census;
pub mod diring;
pub mod error;
pub mod format;
pub mod group;
pub mod ideal;
pub mod iso;
pub mod left_module;
pub mod mask;
pub mod props;
pub mod radical;
pub mod report;

/// Index of an element inside its owning structure.
pub type Elem = usize;
/// A square or rectangular operation table, `table[x][y]`.
pub type Table = Vec<Vec<Elem>>;

pub use diring::{DiringTable, Product, Side};
pub use error::{Error, Result};
pub use group::FiniteAbelianGroup;
pub use left_module::LeftModuleTable;
pub use mask::SubsetMask;
pub use report::{ValidationReport, Violation};

//! Finite loops given by multiplication tables, with a focus on C-loops.
//!
//! - [`LoopTable`]: validated tables, inner maps, subloops, normality, quotients.
//! - [`identities`] and [`invariants`]: identity checks with witnesses, nuclei,
//!   center, associators, normal subloops.
//! - [`extension`]: C-factor sets over abelian groups, extensions built from
//!   them, and factor sets read back off C-loops.
//! - [`steiner`]: Steiner triple systems, blocks and block-based factor sets.
//! - [`cayley_dickson`]: signed basis loops of the Cayley-Dickson algebras.

pub mod abelian;
pub mod cayley_dickson;
pub mod cfs;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod groups;
pub mod identities;
pub mod invariants;
pub mod iso;
pub mod perm;
pub mod report;
pub mod steiner;
pub mod table;

pub use abelian::{AbelianGroup, Automorphism, GroupElement, ThetaMap};
pub use cayley_dickson::{SignedElement, SignedTable};
pub use error::{Error, Result};
pub use extension::{extract_factor_set, Extension, Extraction, FactorSet, ValidFactorSet};
pub use identities::{Identity, IdentityReport};
pub use perm::Permutation;
pub use steiner::{Block, SteinerTripleSystem};
pub use table::{Element, LoopTable, Quotient};

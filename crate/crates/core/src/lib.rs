//! Permutation statistics, r-level Euler-Mahonian insertion bijections, and
//! exhaustive verification of the identities they imply.

pub mod error;
pub mod insertion;
pub mod labeling;
pub mod stats;
pub mod transfer;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use insertion::{InsertionCase, InversionResult};
pub use labeling::{Scheme, SpaceLabeling};
pub use stats::{LevelClass, StatVector};
pub use transfer::InsertionCode;
pub use word::{Permutation, Word};

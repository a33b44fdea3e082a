//! Linear codes over `Z_m` under pomset block metrics, with exact
//! MacWilliams-type identities for their weight enumerators.
//!
//! The ambient space `Z_m^n` is split into blocks ([`BlockStructure`]). A
//! vector's weight is the cardinality of the ideal generated by its Lee block
//! support in a [`Pomset`] whose points index the blocks.

pub mod block;
pub mod code;
pub mod cyclotomic;
pub mod enumerator;
pub mod error;
pub mod macwilliams;
pub mod pomset;

pub use block::{
    lee_block_support, lee_weight, min_distance, pomset_block_distance, pomset_block_weight, BlockStructure, CodeVector,
};
pub use code::{LinearCode, DEFAULT_BUDGET};
pub use cyclotomic::{as_integer, cyclo, kernel_sum, CycloNum, CyclotomicField};
pub use enumerator::{weight_enumerator, WeightEnumerator};
pub use error::{Error, Result};
pub use macwilliams::*;
pub use pomset::{Element, Mset, Pomset, PomsetKind, RelationPair, SumMode};

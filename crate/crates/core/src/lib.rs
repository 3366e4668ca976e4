//! Finite partial orders and their linear extensions.
//!
//! * [`order`]: validated posets, transitive closure, restriction, and the
//!   total order induced by listing elements in sequence.
//! * [`extension`]: one-pair extension, linearization with deterministic
//!   tie-breaking, the forced-pair pipeline that combines them, and
//!   exhaustive enumeration and counting of linear extensions.
//! * [`constructions`]: total orders with a prescribed block layout, the
//!   interleaving that makes one set strictly dense in another, and the
//!   density test itself.
//! * [`format`] and [`cli`]: the text formats and the `ordext` command.
//!
//! Relations are stored in strict form; `x <= y` means `x == y` or
//! `less_than(x, y)`.

mod bits;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod extension;
pub mod format;
pub mod order;
pub mod policy;

pub use constructions::{
    bipartition_order, dense_interleave, density_gap, is_dense, partition_block_order, Bijection, Partition,
};
pub use error::{OrderError, Result};
pub use extension::{
    count_linear_extensions, count_linear_extensions_capped, enumerate_linear_extensions, extend_with_pair,
    linear_extension, szpilrajn, Enumeration, ExtensionCertificate, ForcedPair,
};
pub use order::{
    ids, order_from_enumeration, transitive_closure, validate, ElementId, LinearOrder, Poset, StrictRelation,
};
pub use policy::TieBreakPolicy;

pub mod autiso;
pub mod classify;
pub mod error;
pub mod graph;
pub mod matchsym;
pub mod permgroup;
pub mod polygonal;
pub mod voltage;

pub use error::{Error, Result};
pub use graph::{Graph, Matching};
pub use permgroup::{BlockSystem, PermGroup, Permutation};

pub(crate) fn serialize_biguint<S: serde::Serializer>(
    value: &num_bigint::BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

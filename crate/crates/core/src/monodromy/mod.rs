//! Branched covers of curves described by permutation monodromy.

mod cover;
mod group;
mod parse;
mod permutation;

use thiserror::Error;

pub use cover::{build_dihedral_cover, reflection, riemann_hurwitz, BranchedCover};
pub(crate) use cover::is_odd_prime;
pub use group::{Classification, GroupDescriptor, DEFAULT_MAX_GROUP_ORDER};
pub use parse::{parse_cover, parse_cycles};
pub use permutation::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("image list is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("sheet {point} out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("permutation of degree {found} where degree {expected} was expected")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cover must have positive degree")]
    ZeroDegree,
    #[error("branch point {0} has identity monodromy")]
    IdentityBranch(usize),
    #[error("product of the branch monodromy is not the identity")]
    ProductNotIdentity,
    #[error("monodromy group is not transitive (cover is disconnected)")]
    NotTransitive,
    #[error("malformed monodromy data: 2g - 2 = {euler} does not give a genus")]
    MalformedGenus { euler: i128 },
    #[error("group enumeration exceeded {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("element list is not closed under composition")]
    NotAGroup,
    #[error("subgroup is not contained in the monodromy group")]
    SubgroupNotContained,
    #[error("need g >= 2 and p an odd prime, got g = {g}, p = {p}")]
    InvalidParameters { g: u64, p: u64 },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

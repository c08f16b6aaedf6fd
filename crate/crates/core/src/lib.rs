//! Chermak-Delgado lattices of small finite groups.
//!
//! Groups are index-based multiplication structures ([`Group`]) built from
//! Cayley tables, permutation generators, named families, or direct and
//! wreath products. Subgroups are bit masks ([`Subgroup`]); every subgroup of
//! a group up to a few hundred elements can be enumerated, and from that the
//! Chermak-Delgado lattice ([`cd_lattice`]) with its centrally large members.
//!
//! Dihedral and quaternion groups are named by order: `D8` has 8 elements.

pub mod cache;
pub mod cd;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod group;
pub mod mask;
pub mod named;
pub mod perm;
pub mod products;
pub mod report;
pub mod spec;
pub mod subgroup;
pub mod theorems;

pub use cd::{cd_lattice, cl_subgroups, lattice_isomorphic, max_measure, measure, CdMember, CdResult, Measure, SubgroupCensus};
pub use corpus::corpus_group;
pub use error::{Error, Result};
pub use group::{Family, Group, Provenance};
pub use mask::Mask;
pub use named::named_group;
pub use perm::{Perm, PermutationGenSet};
pub use products::{direct_product, wreath_cyclic, DirectProductMeta, ProductMeta, WreathMeta};
pub use report::{export_dot, Report, VerifyReport};
pub use spec::GroupSpec;
pub use theorems::{run_check, verify_all, Outcome, Verdict};
pub use subgroup::{
    all_subgroups, center, centralizer, closure, normal_closure, normalizer, subnormal_defect, Limits, Subgroup, SubgroupSet,
};

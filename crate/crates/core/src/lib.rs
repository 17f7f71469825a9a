//! Exact combinatorics behind the character theory of finite symplectic
//! groups: unipotent class labels and their component groups, two-row
//! symbols with shift equivalence and addition, the combinatorial Springer
//! correspondence with its wave-front rule, a machine check of a
//! multiplicity-one identity for cuspidal characters, and the labelling of
//! quasi-isolated rational series by brute-forced Weyl group data.
//!
//! Everything is exact integer arithmetic — no floats anywhere near the
//! mathematics — and every operation either validates its input or is total
//! on values validated at construction.

pub mod cuspidal;
pub mod partition;
pub mod springer;
pub mod symbol;
pub mod weyl;

pub use cuspidal::{sweep, verify_multiplicity_one, CuspidalDatum, VerificationReport};
pub use partition::{Bipartition, Partition, SymplecticClassLabel};
pub use springer::{springer, springer_inverse, wavefront_partition, SpringerImage};
pub use symbol::{Symbol, SymbolClass};
pub use weyl::{harish_chandra_levi, series_labels, weyl_group, SignedPermutation, WeylGroup};

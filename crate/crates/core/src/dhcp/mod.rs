//! Dual Harish-Chandra pairs `(J, V)`: validation, the Hopf superalgebra
//! `H(J, V)` in normal form, and recovery of the pair from a
//! super-cocommutative Hopf superalgebra.

mod build;
pub mod examples;
mod morphism;
mod recover;
mod verify;

pub use build::{build_h, pair_basis, pair_basis_names, primitive_spot_check, PairHopf, PairKey};
pub use morphism::{check_dhcp_morphism, check_morphism_normal, check_short_exact_dhcp, is_dhcp_isomorphism, DhcpMorphism};
pub use recover::{recover_pair, roundtrip_pair, RecoveredPair};
pub use verify::{from_lie_superalgebra, verify_dhcp};

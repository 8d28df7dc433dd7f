//! Harish-Chandra pairs `(C, W)` with `C` a finite-dimensional commutative
//! Hopf algebra, the Hopf superalgebra `A(C, W)` and the way back.

mod build;
mod data;
pub mod examples;
mod graded;
mod morphism;
mod recover;

pub use build::{build_a, build_a_morphism, pair_h_a, psi_prime, wedge_labels, AResult, HaPairing, PsiPrime};
pub use data::{associated_dhcp, verify_hcp, HcpData};
pub use graded::{verify_graded_pairing, GradedKey, GradedPair, GradedPairs, GradedVec};
pub use morphism::{check_conormal_hcp, check_hcp_morphism, check_short_exact_hcp, is_hcp_isomorphism, HcpMorphism};
pub use recover::{beta_roundtrip, recover_hcp, roundtrip_hcp, unipotence_check, Beta, RecoveredHcp, Unipotence};

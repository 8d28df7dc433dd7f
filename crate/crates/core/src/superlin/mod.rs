//! Exact scalars, sparse vectors and matrices, super vector spaces and
//! bilinear pairings.

pub mod field;
pub mod matrix;
pub mod pairing;
pub mod space;
pub mod sparse;

pub use field::{Field, Scalar};
pub use matrix::{Echelon, Matrix};
pub use pairing::{annihilator, koszul_swap, tensor_pairing, PairingData};
pub use space::SuperSpace;
pub use sparse::{SparseVec, Vector};

/// `(-1)^{ab}` as a boolean "is negative".
pub fn koszul(a: u8, b: u8) -> bool {
    a & b & 1 == 1
}

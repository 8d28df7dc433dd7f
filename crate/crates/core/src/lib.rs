pub mod error;
pub mod superlin;

pub use error::{Error, Result};
pub mod freegraded;
pub mod hopfcore;
pub mod report;
pub mod rewrite;
pub mod dhcp;
pub mod hcp;
pub mod schema;

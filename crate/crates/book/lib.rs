// The guide's chapters live in book/src. Including them here lets
// `cargo test` run every snippet as a doc-test.

#[doc = include_str!("../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../book/src/fields.md")]
pub mod fields {}
#[doc = include_str!("../../book/src/hopf.md")]
pub mod hopf {}
#[doc = include_str!("../../book/src/rewriting.md")]
pub mod rewriting {}
#[doc = include_str!("../../book/src/build_h.md")]
pub mod build_h {}
#[doc = include_str!("../../book/src/build_a.md")]
pub mod build_a {}
#[doc = include_str!("../../book/src/roundtrips.md")]
pub mod roundtrips {}
#[doc = include_str!("../../book/src/json_cli.md")]
pub mod json_cli {}

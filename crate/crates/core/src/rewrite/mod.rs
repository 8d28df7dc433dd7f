//! Rewriting in `J`-rings generated by odd letters: the word order, normal
//! forms and resolution of overlap ambiguities.

mod enveloping;
mod hopf;
mod overlaps;
mod presentation;
mod word;

pub use enveloping::{Enveloping, Monomial};
pub use hopf::{CocommutativeHopf, FiniteJ};
pub use overlaps::{Ambiguity, OverlapReport};
pub use presentation::{MixedElement, NormalElement, Presentation};
pub use word::{misordered_pairs, word_order, Letter, MixedWord, WordOrder};

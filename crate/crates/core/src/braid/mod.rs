//! Braid words, pure braids and the operations the closure maps are built
//! on: A-generators, inclusions, shifts, tensor products, strand doubling
//! and the Artin action on a free group.

mod free;
mod generators;
mod parse;
mod random;
mod word;

pub use free::{artin_action, FreeEndo, FreeGroupWord, FreeLetter};
pub use generators::{a_word, AGenerator};
pub use parse::{parse_word, tokenize, Token};
pub use random::{random_a_generator, random_pure_braid};
pub use word::{
    max_letters, set_max_letters, Letter, Permutation, PureBraid, SigmaWord, DEFAULT_MAX_LETTERS,
};

//! Free groups `F_n`, their automorphisms, and their action on
//! `Hom(F_n, SU(2))`.
//!
//! Generator `X_i` is the letter `+i`, its inverse `-i` (1-based). In the
//! textual syntax `A` is `X_1`, `B` is `X_2`, ..., and lowercase letters are
//! inverses.

mod abelian;
mod catalog;
mod embed;
mod endo;
mod rep;
mod word;

pub use abelian::{abelianization_matrix, IntMatrix};
pub use catalog::{named_generators, Catalog};
pub use embed::{iota, stabilize};
pub use endo::{apply_endo, compose, Automorphism, Endomorphism};
pub use rep::{act_on_rep, evaluate, Representation};
pub use word::{boundary_word, reduce, Word};

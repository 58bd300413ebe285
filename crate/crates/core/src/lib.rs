//! Combinatorics of the branching rule from `gl_{2n}` to `sp_{2n}`: tableaux
//! and words, crystal operators, the type-AII reduction algorithms,
//! jeu-de-taquin and promotion, and a character-theoretic oracle for the
//! branching multiplicities.

pub mod aii;
pub mod character;
pub mod crystal;
pub mod enumerate;
pub mod error;
pub mod insertion;
pub mod jdt;
pub mod n2;
pub mod promotion;
pub mod shape;
pub mod tableau;
pub mod verify;
pub mod word;

pub use crystal::{Crystal, Rank, SpWeight, Tensor};
pub use error::{Error, Result};
pub use shape::{Cell, Diagram, Partition};
pub use tableau::Tableau;
pub use word::Word;

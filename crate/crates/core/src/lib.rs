//! Finite effect algebras: axiom verification, structural analysis (sharp,
//! meager and hypermeager elements, center, blocks, homogeneity, sharp
//! domination), and extraction and reconstruction of the representing triple
//! `(Sh(E), Mea(E), h)`.

pub mod algebra;
pub mod bitset;
pub mod catalog;
pub mod error;
pub mod format;
pub mod iso;
pub mod report;
pub mod structure;
pub mod suite;
pub mod table;
pub mod triple;

pub use algebra::{
    verify_effect_algebra, verify_generalized, Axiom, FiniteEffectAlgebra,
    FiniteGeneralizedEffectAlgebra, OrdValue, PartialAlgebra, Verdict, Violation,
};
pub use bitset::ElementSet;
pub use error::{Error, HypothesisFailure, InputError, Result};
pub use table::{ElementId, PartialOpTable};

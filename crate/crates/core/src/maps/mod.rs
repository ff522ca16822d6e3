//! Structure-preserving maps: normal pseudo-functors of 2-categories,
//! pseudo-double functors, Cat-valued presheaves, pseudo-natural
//! transformations and modifications, plus equivalence-witness search and
//! bounded enumeration.

mod cat_psfun;
mod dbl_functor;
mod enumerate;
mod equivalence;
mod functor2;
mod psnat;

pub use cat_psfun::{validate_cat_psfun, CatPsFun};
pub use dbl_functor::{validate_ps_dbl_functor, PsDblFunctor};
pub use enumerate::{enumerate_functors, enumerate_modifications, enumerate_psnats};
pub use equivalence::{
    equivalence_witness, is_equivalence_direct, validate_equiv_witness, EquivWitness,
};
pub use functor2::{validate_pseudofunctor2, PseudoFunctor2};
pub use psnat::{compose_psnat, validate_modification, validate_psnat, Modif, PsNat};

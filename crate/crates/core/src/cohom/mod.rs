//! Galois 2-cocycles with values in `Q(mu_inf)^*`, their class orders, splitting maps and
//! the characters attached to them.

mod character;
mod cocycle;
mod group;
mod split;
mod value;

pub use character::{adjust_splitting_map, epsilon_character, splitting_field_of, Adjustment, CharacterMap};
pub use cocycle::{class_order, coboundary_of, is_cocycle, ClassOrder, Cocycle2, CocycleVerdict};
pub use group::FiniteGroup;
pub use split::{split_cocycle, SplittingMap};
pub use value::{CoefficientBasis, MultiplicativeValue};

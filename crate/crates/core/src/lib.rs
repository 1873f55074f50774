//! Exact algebra behind the construction of GL2-type varieties from their
//! absolutely simple factors: Galois 2-cocycles and splitting maps, quaternion
//! algebras over `Q`, centralizers in matrix algebras over them, and the
//! dimension bookkeeping of building blocks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod cohom;
pub mod csa;
pub mod cyclo;
mod error;
pub mod linalg;
pub mod matalg;
pub mod pipeline;
pub mod snf;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

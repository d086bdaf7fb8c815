//! Core algebra of hereditarily finite partial functions.
//!
//! The central objects are *hereditarily finite partial functions*: finite
//! graphs of argument/value pairs whose arguments and values are themselves
//! such functions, grounded in the empty (nowhere-defined) function. All
//! values live in a [`kernel::FunUniverse`], which hash-conses every graph so
//! that extensional equality coincides with handle equality.
//!
//! On top of the kernel sit:
//!
//! * [`hierarchy`] — the stage-by-stage construction of the function
//!   universe, fevels (function-theoretic levels), and the counting
//!   recurrence for stage sizes;
//! * [`sets`] — a mirror universe of hereditarily finite sets with levels,
//!   Kuratowski pairs and the two-valued application table;
//! * [`translate`] — the structure-preserving maps between the two
//!   universes, one direction per sort;
//! * [`category`] — hereditarily finite functions as arrows of a category,
//!   with a bounded universal-property check for products;
//! * [`encodings`] — currying, relations, ordered pairs and ordinals encoded
//!   as functions;
//! * [`modelcheck`] — finite structures and exhaustive second-order
//!   evaluation of the axiom systems the library is organised around.
//!
//! The crate is `no_std` (with `alloc`); everything that talks to the
//! outside world lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod category;
pub mod encodings;
mod error;
pub mod hierarchy;
pub mod kernel;
pub mod modelcheck;
pub mod sets;
pub mod translate;

pub use error::Error;
pub use kernel::{FunUniverse, HfFun};
pub use sets::{HfSet, SetUniverse};

/// Re-export of the big-integer type used by [`hierarchy::count_p`].
pub use num_bigint::BigUint;

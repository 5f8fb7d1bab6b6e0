//! Rough sets over finite approximation spaces and the three-valued
//! Łukasiewicz algebras they form.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`info_table`]: information tables and their indiscernibility partition;
//! - [`approximation`]: lower/upper approximations and the monadic laws;
//! - [`rough`]: the algebra of rough sets and the larger algebra of Moisil pairs;
//! - [`lukasiewicz`]: table-driven finite algebras and exhaustive law checkers;
//! - [`representation`]: prime filters and the embedding of a finite algebra
//!   into the rough sets of its prime-filter space;
//! - [`monteiro`]: rough equality as a congruence, the quotient algebra, and
//!   three-valued membership functions.
//!
//! Every `verify_*` / `check_*` function quantifies over a finite domain and
//! returns a [`Report`] carrying the first counterexample of each failed law.

#![no_std]

extern crate alloc;

pub mod approximation;
pub mod error;
pub mod info_table;
pub mod lukasiewicz;
pub mod monteiro;
pub mod partition;
pub mod report;
pub mod representation;
pub mod rough;
pub mod set;

pub use error::Error;
pub use info_table::{InformationTable, TableError};
pub use lukasiewicz::{FiniteAlgebra, ThreeValuedAlgebra};
pub use monteiro::ThreeValue;
pub use partition::Partition;
pub use report::{Check, Counterexample, Report, Status, Witness};
pub use rough::{MoisilPair, RoughSet};
pub use set::ObjectSet;

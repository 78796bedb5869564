//! Visibly irreducible decompositions of polynomials over small finite fields.
//!
//! A decomposition `f = f_1 + ... + f_r` is *visibly irreducible* when every
//! irreducible of degree at most `deg f / 2` divides all but exactly one
//! summand and exactly one summand has full degree: then no low-degree factor
//! can divide `f`, so `f` is irreducible by inspection.
//!
//! The crate is `no_std` (it needs `alloc`). Modules, bottom up:
//!
//! - [`ffield`]: small fields `F_{p^k}` and towers over them.
//! - [`poly`]: univariate polynomials, trial-division factorization, counting.
//! - [`forms`]: binary forms and the `PGL₂(F_q)` action, orbits, stabilizers.
//! - [`vid`]: verification, bounds, exhaustive search, shapes and instances.
//! - [`theorems`]: one verifier per classification claim, returning reports.
#![no_std]

extern crate alloc;

pub mod error;
pub mod ffield;
pub mod forms;
pub mod poly;
pub mod theorems;
pub mod vid;

pub use error::{Error, Result};
pub use ffield::{make_extension, make_field, Elem, FieldSpec};
pub use forms::{Form, Pgl, ProjForm};
pub use poly::Poly;

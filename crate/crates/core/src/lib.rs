//! Worldview solving for ground epistemic logic programs.
//!
//! The crate is organized bottom-up:
//!
//! * [`atom`] and [`program`] hold the program model: interned atoms, literals,
//!   rules and programs, plus interpretations and assumptions in [`interp`].
//! * [`fold`] removes truth constants.
//! * [`semantics`] is a self-contained stable-model engine for objective
//!   (K-free) programs, including assumptions and cautious consequences.
//! * [`normal_form`] pushes negation out of the scope of `K`.
//! * [`transform`] builds the objective companion programs (`T0`, `G0`, the
//!   propagation rules and `G1`).
//! * [`solver`] runs the generate-and-test loop.
//! * [`oracle`] holds the brute-force reference semantics used for
//!   verification.
//! * [`family`] generates the propagation benchmark family.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod atom;
mod engine;
pub mod family;
pub mod fold;
mod fmt;
pub mod interp;
pub mod normal_form;
pub mod oracle;
pub mod program;
pub mod semantics;
pub mod solver;
pub mod transform;

pub use atom::{AtomId, Origin, SymbolError, SymbolTable};
pub use interp::{Assumption, BeliefInterpretation, Interpretation};
pub use program::{Constant, Literal, Negation, ObjLiteral, Program, Rule, SubjLiteral};

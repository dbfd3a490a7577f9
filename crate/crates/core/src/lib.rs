//! Exact computational engines for bifiltered knot complexes over GF(2).
//!
//! The crate is organized around a small pipeline:
//!
//! * [`f2`] — sparse GF(2) linear algebra, homology of graded complexes,
//!   and connecting homomorphisms of short exact sequences;
//! * [`cfk`] — bifiltered complexes (finite models of a knot's full Floer
//!   complex), the torus-knot staircase corpus, and stratum extraction;
//! * [`surgery`] — per-Spin^c homology of large integer surgeries and the
//!   knot Floer table of the surgery-core knot;
//! * [`contact`] — (non)vanishing criteria for the contact invariants of
//!   open books and of surgery cores, including rational slopes;
//! * [`farey`] — exact slope arithmetic on the Farey tessellation and the
//!   Legendrian surgery planner;
//! * [`heegaard`] — Alexander-grading arithmetic from relative periodic
//!   domains, winding-region distinctness, and cable order arithmetic.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cfk;
pub mod contact;
pub mod error;
pub mod f2;
pub mod farey;
pub mod heegaard;
pub mod surgery;

pub use error::{Error, Result};

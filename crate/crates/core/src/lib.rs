//! Exact models of the Schur algebra `S(n, d)` and the q-Schur algebra
//! `S_v(n, d)` acting on tensor space.

pub mod error;
pub mod hecke;
pub mod bases;
pub mod cli;
pub mod ring;
pub mod rootvectors;
pub mod tensormodel;
pub mod verify;

pub use error::{Result, SchurError};

//! Exact construction and verification of small pointed Hopf algebras.
//!
//! The crate is layered bottom-up: finite fields and linear algebra
//! ([`gf`]), free algebras ([`freealg`]), rewriting ([`rewrite`]),
//! finite-dimensional quotients ([`findim`]), Hopf structure ([`hopf`]),
//! Nichols algebras ([`nichols`]), the family catalog ([`catalog`]) and
//! verification campaigns ([`harness`]).

pub mod freealg;
pub mod gf;
pub mod findim;
pub mod rewrite;
pub mod hopf;
pub mod nichols;
pub mod catalog;
pub mod harness;

//! Exact enumeration and analysis of palstars.
//!
//! A *palstar* is a concatenation of nonempty even-length palindromes
//! (`appall` = `appa` + `ll`); a *prime* palstar cannot be split into two or
//! more nonempty palstars, and every palstar factors uniquely into primes.
//! This crate counts palstars exactly, factors them, and pins down the
//! exponential growth rate of their counts with certified rational
//! enclosures.
//!
//! - [`words`]: alphabets, words, borders, and brute-force enumeration
//!   oracles
//! - [`factor`]: palstar recognition and unique prime-palstar factorization
//! - [`counting`]: exact sequences u_k(n) and p_k(n), the same sequences as
//!   polynomials in the alphabet size k, and the identity U P = 2P - 1
//! - [`gf`]: certified enclosures of the dominant singularity rho_k, the
//!   growth constant alpha_k = 1/rho_k, and the amplitude C_k
//! - [`asymptotics`]: expansions of 1/alpha_k and alpha_k in powers of 1/k
//! - [`verify`]: cross-check suites pairing every computation with an
//!   independent oracle
//!
//! Every capability has a runnable demo under `examples/`; the `palstar`
//! binary exposes the same functionality as subcommands.

pub mod asymptotics;
pub mod cli;
pub mod counting;
pub mod error;
pub mod factor;
pub mod gf;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, Word};

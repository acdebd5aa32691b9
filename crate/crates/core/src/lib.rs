//! Exact computation of newform Galois orbit counts and local-type counts.
//!
//! The library has four layers:
//!
//! - [`arith`]: exact rationals, dense rational linear algebra, integer
//!   characteristic polynomials, and integer polynomial factorization;
//! - [`localtypes`]: the closed-form local-type count LO(N) (prime-power
//!   formulas plus multiplicativity) and a character-orbit oracle for its
//!   divisor-count ingredients;
//! - [`modsym`]: weight-k modular symbols for Gamma_0(N) with trivial
//!   nebentypus in the +1 quotient, with cusp/boundary structure, Hecke
//!   operators, degeneracy maps, new subspaces, and Atkin-Lehner involutions;
//! - [`orbits`]: decomposition of the new cuspidal subspace into Galois
//!   orbits, CM detection, Atkin-Lehner signs, and the count NCM(N, k);
//! - [`harness`]: scan orchestration, the on-disk matrix cache, TSV
//!   reporting, and the NCM = LO verification verdict.

pub mod arith;
pub mod harness;
pub mod localtypes;
pub mod modsym;
pub mod orbits;

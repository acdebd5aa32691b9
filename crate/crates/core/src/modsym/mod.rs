//! Weight-k modular symbols for Gamma_0(N) with trivial nebentypus, in the
//! +1 sign quotient: space construction, cuspidal and new subspaces, Hecke
//! operators, degeneracy maps, and Atkin-Lehner involutions.

pub mod cusps;
pub mod dims;
pub mod heilbronn;
pub mod ops;
pub mod p1;
pub mod polyact;
pub mod space;

pub use cusps::{cusp_count, Cusp};
pub use dims::{dim_cusp_formula, dim_new_formula, genus, index_mu};
pub use ops::{
    atkin_lehner, degeneracy_lower, hecke_ambient, hecke_matrix, hecke_power_ambient,
    new_subspace, restrict_to, restrict_to_new, NewSubspace, OpName, OperatorMatrix,
};
pub use p1::P1Index;
pub use space::{build_space, SymbolSpace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("W_{q} is not defined at level {level}: Q must be an exact prime-power divisor")]
    BadAtkinLehnerQ { q: u64, level: u64 },
    #[error("no degeneracy map from level {level} to {target} with parameter {t}")]
    BadDegeneracy { level: u64, target: u64, t: u64 },
}

/// Enumerate P^1(Z/N).
pub fn p1_enumerate(level: u64) -> P1Index {
    P1Index::new(level)
}

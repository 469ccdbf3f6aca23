//! Automorphism-orbit statistics of finite modules over discrete valuation rings.
//!
//! A finite module over a discrete valuation ring `R` with residue field of
//! size `q` decomposes as `A = ⊕ (R/π^{λ_i})^{ρ_i}` for a unique shape
//! `λ = (λ_1^{ρ_1} > λ_2^{ρ_2} > …)`. The orbits of the automorphism group
//! `G = Aut(A)` on `A` are classified by order ideals of a fundamental poset,
//! and many orbit statistics — orbit cardinalities, characteristic-submodule
//! sizes, stabilizer-orbit counts — are integer polynomials in `q`.
//!
//! This crate computes those statistics exactly:
//!
//! * [`partition`] — module shapes and their transformations.
//! * [`poset`] — the fundamental poset, order ideals in boundary form,
//!   and the ideal predicates (height zero, principal, realized).
//! * [`lattice`] — enumeration of the ideal lattice of a shape, inclusion,
//!   and its Möbius function.
//! * [`poly`] — exact integer polynomials in the counting variable `q`.
//! * [`counting`] — characteristic-submodule sizes, orbit sizes by Möbius
//!   inversion, and canonical orbit representatives.
//! * [`heightzero`] — closed-form stabilizer-orbit polynomials for
//!   height-zero principal ideals, with their coefficient interpretation.
//! * [`oracle`] — brute-force ground truth over concrete modules at `q = p`:
//!   stabilizer-orbit equivalence and counting, plus a raw automorphism
//!   enumeration tier for tiny instances.
//! * [`interp`] — exact rational interpolation of oracle samples back to
//!   polynomials, identity verification, and the positivity scan.
//! * [`records`] — cached results and reference tables as line records.

pub mod counting;
pub mod error;
pub mod heightzero;
pub mod interp;
pub mod lattice;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod poset;
pub mod records;

pub use counting::{canonical_element, char_submodule_size, orbit_size, CanonicalElement};
pub use error::{Error, Result};
pub use interp::{conjecture_scan, n_lambda_poly, verify_identities, SamplePlan};
pub use lattice::IdealLattice;
pub use oracle::{ModuleSpace, OracleConfig, StabilizerContext};
pub use partition::Partition;
pub use poly::IntPoly;
pub use poset::{GenericIdeal, OrderIdeal, PosetPoint};
pub use records::ComputationRecord;

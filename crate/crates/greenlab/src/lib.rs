//! greenlab — a numerical laboratory for Green functions of discrete
//! divergence-form elliptic systems.
//!
//! The object of study is the lattice operator `A = grad^T a grad` built from
//! a per-site coefficient tensor field `a` on a finite domain (box, strip, or
//! torus), with forward-difference gradients and zero-extension Dirichlet
//! boundary conditions. The crate computes Green bundles (columns of the
//! inverse aimed at unit sources), measures their decay through fitted power
//! laws and exponential rates, and cross-checks everything against
//! independent oracles: dense factorizations, hand-solved stencils, image
//! sums, and separation-of-variables rates.
//!
//! Module map:
//! - [`lattice`]: domains, site indexing, interior masks, annulus geometry;
//! - [`coeff`]: coefficient tensor fields (constant, two-phase ensembles,
//!   linear elasticity, a radial De Giorgi-type example) and axiom checks;
//! - [`operator`]: assembly of the divergence-form operator and the
//!   higher-order regularizer, plus coercivity diagnostics;
//! - [`solver`]: preconditioned conjugate gradients, a fast-transform Poisson
//!   solver, and a dense factorization oracle;
//! - [`green`]: Green bundles, their gradients, the regularization family,
//!   and structural identities (symmetry, representation formula);
//! - [`estimates`]: decay estimatorsertain with fitted exponents, annealed
//!   Monte Carlo means, Caccioppoli and outer-norm batteries;
//! - [`corrector`]: the corrector equation on finite environment spaces,
//!   effective tensors, and the series/direct cross-validation;
//! - [`config`]/[`report`]/[`runner`]: the config-driven experiment runner
//!   behind the `greenlab` binary.
//!
//! Everything is deterministic: coefficient samples are pure functions of
//! (seed, sample index, site), solves use fixed reduction orders, and re-runs
//! of an experiment produce byte-identical reports regardless of the worker
//! count (see [`par`]).

pub mod config;
pub mod coeff;
pub mod corrector;
pub mod error;
pub mod estimates;
pub mod green;
pub mod lattice;
pub mod operator;
pub mod par;
pub mod report;
pub mod rng;
pub mod runner;
pub mod solver;

pub use error::{Error, Result};

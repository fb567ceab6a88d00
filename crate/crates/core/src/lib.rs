//! fatpoints — exact verification toolkit for linear systems of fat points
//! in projective n-space and the symbolic-power invariants built from them.
//!
//! The library answers questions of the form "is the system of degree-d
//! hypersurfaces with prescribed multiplicities at s very general points
//! empty?" with explicit, reproducible certificates (prime, seed, rank), and
//! stacks the classical bound pipelines on top: initial degrees
//! alpha(I^(m)) of symbolic powers, Waldschmidt-constant bounds, the
//! Chudnovsky inequality, a regularity-based containment criterion, and a
//! Cremona reduction calculus cross-validated against the interpolation
//! oracle.
//!
//! ## Where to start
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── combinatorial_lemma.rs    # k^n <= C(kn-n, n) and 3^n <= C(2n, n), exactly
//! ├── regularity_scan.rs        # n*floor(s^(1/n)) >= n + r scans in P^4
//! ├── system_dimension.rs       # dimension + certification of single systems
//! ├── alpha_search.rs           # alpha(I^(m)) for 5 general points in P^2
//! ├── waldschmidt_bounds.rs     # sampled upper bounds vs floor lower bound
//! ├── chudnovsky.rs             # alpha(I^(m))/m >= (alpha(I)+n-1)/n verdicts
//! ├── containment_criterion.rs  # alpha(I^(nm)) >= (n-1)m + m*reg(I) checks
//! ├── floor_bound.rs            # emptiness of (km-1; m^(x k^n)) instances
//! ├── seventy_one_points.rs     # the 71-point certificates in P^4
//! └── cremona_reduction.rs      # reduction chains + oracle cross-check
//! ```
//!
//! Run one with `cargo run --release --example alpha_search`.
//!
//! The same operations are exposed by the `fatpoints` binary; see the README
//! or `fatpoints --help`. `fatpoints verify-paper` runs the whole
//! verification suite in one shot.
//!
//! ## Certification semantics
//!
//! Random evaluation points are a one-sided oracle: the rank of an
//! interpolation matrix at any specialization is at most the generic rank,
//! so *full column rank at one random point set certifies generic
//! emptiness* ([`systems::Certification::CertifiedEmpty`]), while a rank
//! deficit is evidence of nonemptiness, not proof
//! ([`systems::Certification::EmpiricalNonEmpty`]). A positive virtual count
//! (more monomials than conditions) certifies nonemptiness unconditionally
//! ([`systems::Certification::NonEmptyByCount`]). Every report records the
//! prime and seeds used, so any certificate can be reproduced independently.

pub mod comb;
pub mod cremona;
pub mod error;
pub mod field;
pub mod matrix;
pub mod systems;
pub mod waldschmidt;

pub mod cli;

pub use error::{Error, Result};
pub use field::{PrimeField, MERSENNE61};
pub use matrix::{EchelonBuilder, FieldMatrix, RankResult};
pub use systems::{
    is_empty_certified, sample_points, system_dimension, Certification, EmptinessCertificate,
    LinearSystemSpec, PointSet, SearchConfig, SystemDimension, DEFAULT_SEED,
};
pub use waldschmidt::{
    alpha_symbolic, chudnovsky_check, containment_criterion_check, verify_71_lemma,
    verify_floor_instance, waldschmidt_report, AlphaResult, ChudnovskyRecord, ContainmentVerdict,
    Lemma71Report, WaldschmidtReport,
};

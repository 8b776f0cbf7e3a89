//! Pseudo-random ±1 matrices from binary linear codes, and the machinery to
//! measure how fast their empirical spectral distributions converge to the
//! Marchenko-Pastur law.
//!
//! A binary linear code C of length n with dual distance ≥ 5 is mapped through
//! the character ψ: β ↦ (−1)^β to a set D = ψ(C) of ±1 rows. A p×n matrix Φ
//! with rows drawn uniformly and independently from D has Gram matrix
//! G = (1/n)ΦΦ* whose eigenvalue distribution approaches the Marchenko-Pastur
//! law with ratio y = p/n. This crate provides:
//!
//! * [`gf`] — exact GF(2^m) arithmetic on bitmask elements,
//! * [`codes`] — the APN power-function code family, first-order Reed-Muller
//!   controls, dual-distance computation, and codeword enumeration,
//! * [`specmat`] — sample matrices, Gram spectra, and resolvent-identity
//!   verification utilities,
//! * [`mplaw`] — Marchenko-Pastur density/CDF/Stieltjes analytics,
//! * [`metrics`] — empirical spectral measures, the interval-sup distance,
//!   Stieltjes-transform estimation, and exact character-sum moment oracles,
//! * [`experiments`] — seeded Monte Carlo sweeps: convergence rate, negative
//!   controls, concentration, and perturbation scaling.
//!
//! All randomness flows through the documented [`rng::SplitMix64`] generator,
//! so every experiment is reproducible bit-for-bit from its master seed.

pub mod codes;
pub mod experiments;
pub mod gf;
pub mod linalg;
pub mod metrics;
pub mod mplaw;
pub mod quad;
pub mod rng;
pub mod specmat;

pub use codes::{DualDistance, LinearCode, SignalRow};
// pub use experiments::{ExperimentConfig, ExperimentRecord, Family, RateFitResult};
pub use gf::FieldSpec;
// pub use metrics::{Esd, TransformSample};
// pub use mplaw::{MpParams, SpectralDomainPoint};
// pub use specmat::{GramSpectrum, SampleMatrix};

//! Exact-arithmetic analysis of Boolean functions through their Cayley
//! graphs: Walsh/Fourier spectra, strongly-regular-graph verification, the
//! bent / lambda = mu correspondence, and vectorial (multi-output) functions
//! with symmetric-difference support algebra.
//!
//! Everything is integer arithmetic; there is no floating point in the
//! crate. The truth-table bit order is fixed globally: table index i is the
//! input point b(i), the n-bit expansion of i with variable x1 in the most
//! significant bit.

mod bits;

pub mod boolfn;
pub mod cayley;
pub mod error;
pub mod genlab;
pub mod reference;
pub mod srg;
pub mod transform;
pub mod vectorial;

pub use boolfn::{
    affine_functions, dot, nonlinearity_brute_force, BentVerdict, BooleanFunction, PointSet,
};
pub use cayley::{
    adjacency_rank, adjacency_rank_by_elimination, component_count, gf2_span_dim,
    spectrum_symmetry_report, CayleyGraph, SpectrumSymmetry,
};
pub use error::{Error, Guards, Result};
pub use genlab::{enumerate_bent, mm_bent, nyberg_vectorial_bent, random_function, Permutation};
pub use srg::{
    check_srg, params_from_spectrum, predicted_bent_params, published_example_discrepancy,
    spectrum_from_params, srg_lambda_eq_mu, srg_lambda_eq_mu_for_set, BentFamilies, LambdaMuCheck,
    PublishedDiscrepancy, SrgOutcome, SrgParams, SrgSpectrum, SrgViolation,
};
pub use transform::{
    cayley_eigenvalues, fourier, signed_walsh, FourierSpectrum, SignedWalshSpectrum,
};
pub use vectorial::{
    affine_map_distance, component_combination, is_vectorial_bent, min_combination_nonlinearity,
    nary_symmetric_difference, support_regularity_report, symmetric_difference,
    vectorial_bent_check, SubsetReport, VectorialBentCheck, VectorialFunction,
};

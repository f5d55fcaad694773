//! Exact matrix models of the q-Schur algebra on tensor space and the maps from
//! the skein and BMW algebras into it.

mod alpha;
mod embed;
mod element;
mod matrix;
mod rank;
mod suite;
mod tensor;
mod validate;

pub use alpha::{alpha, alpha_path, hat, hat_identity, lambda_of, padding, specialize, theta, theta_generator, theta_word, Route};
pub use embed::{bmw_dimension, gen_name, hecke_failures, hecke_generator, loop_composed_holds, loop_square_holds, route_mismatches, spanning_set, theta_rank};
pub use element::{Op, Path, SchurElement, Space};
pub use rank::{bareiss_rank, rank_of_span};
pub use suite::{bmw_relation_suite, hecke_block, oriented_word, skein_relation_holds, skein_relations, SkeinRelation};
pub use matrix::{build_rep, build_rep_bounded, max_dim_from_env, SchurMatrix, Symbol, TensorContext, DEFAULT_MAX_DIM};
pub use tensor::{
    apply_divided, apply_divided_in, apply_generator, apply_generator_in, bar, basis_vec, content, wedge_basis, weight_basis,
    weight_dim, weights, Encoding, GlWeight, Letters, Seq, Subsets, TVec,
};
pub use validate::{divided_power_failures, presentation_failures};

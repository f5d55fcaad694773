//! Jaeger's expansion of the Kauffman polynomial in HOMFLY-PT terms, at the level
//! of links and at the level of algebras.

mod element;
mod link;
mod psi;
mod relations;

pub use element::{BmwElement, LinComb, SkeinElement};
pub use link::{framed_homfly, jaeger_kauffman, link_resolutions, LocalPicture, Resolution, P_SLICE};
pub use psi::{
    bmw_factors, bmw_monomial, bmw_product, crossing_translate, pic_downup, pic_lr, pic_rl, pic_updown, pic_vertex, psi,
    psi_generator, psi_identity, psi_resolve, psi_table, BmwGen, CrossingKind, Translated,
};
pub use relations::{
    bmw_relations, digon_coefficient, kink_coefficient, kink_word, r3_coefficient, relation_images, BmwRelation, R3_LHS,
    R3_RHS,
};

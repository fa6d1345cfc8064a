//! Bound quivers built from groups, from other bound quivers, and the
//! assemblies realizing several groups on one algebra.

mod action;
mod coproduct;
mod families;
mod product;
mod theorems;

pub use action::{quotient_by_action, ActionFile, GroupActionSpec};
pub use coproduct::{component_prefix, coproduct, coproduct_all, GluedQuiver, GLUE_VERTEX};
pub use families::{
    cover_arrow, cover_vertex, ladder, ladder_cover, loop_family, loop_name, normalize_relators,
    parallel_arrows_example, quiver_from_group, relator_classes, single_vertex,
};
pub use product::{
    product, product_projection_word, product_projection_word_right, product_vertex_name, ProductArrow, ProductQuiver,
};
pub use theorems::{
    certify, realize, theorem_a_instance, theorem_b_instance, GroupExpr, PresentationCheck, Realization,
    TheoremInstance, TheoremReport,
};

//! Explicit comparison maps from iterated cones and cylinders to orientals
//! and cubes, with the checks that certify them as isomorphisms.

mod faces;
mod phi;
mod verify;

pub use faces::{eta, lifting_identities_exhaustive, lifting_identities_sampled, vee};
pub use phi::{comparison_chain, phi_cone, phi_cube, phi_cylinder, phi_oriental, Comparison};
pub use verify::{action_compatibility, disjointness_check, verify_functor_iso};

//! Labeled triangulations of spheres and the degree of the simplicial map
//! their vertex colouring induces onto the boundary of a simplex.

pub mod constructions;
pub mod degree;
pub mod io;
pub mod par;
pub mod search;
pub mod simplicial;

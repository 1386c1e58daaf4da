//! Cellular resolutions of monomial ideals over GF(p).
//!
//! Given a monomial ideal and a CW complex whose cellular chain complex
//! supports its minimal free resolution, [`pipeline::run_pipeline`] finds a
//! basis of the resolution with minimal-support boundaries, turns it into an
//! integer change of cell basis, and produces a complex `Y` whose face poset
//! supports the resolution, together with a certificate of every check made
//! along the way.

pub mod corpus;
pub mod cwposet;
pub mod exactlin;
pub mod monoid;
pub mod pipeline;
pub mod rescomplex;
mod wire;

//! Exact symbolic computation in the localized equivariant Grothendieck ring
//! of varieties, with motivic integration over SNC resolution data, torus
//! localization and the degree-zero DT series of `A^3`.
//!
//! - [`ring`]: classes, the ⊙ product, Υ units, specializations, parser.
//! - [`snc`]: integrals, volume series, nearby and vanishing cycles.
//! - [`localization`]: virtual indices and fixed-point sums.
//! - [`hilbert`]: plane partitions, tangent characters, refined series.

pub mod hilbert;
pub mod linalg;
pub mod localization;
pub mod ring;
pub mod series;
pub mod snc;

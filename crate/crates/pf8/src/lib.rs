//! Construction of pairing-friendly elliptic curve families with embedding
//! degree 8 and CM discriminant 1, via cubic substitutions into the 8th
//! cyclotomic polynomial.
//!
//! The pipeline runs in four stages:
//! 1. [`cyclo8`] solves u(ω) = ζ₈ for a cubic u over Q, given ω ∈ Q(ζ₈).
//! 2. [`zfactor`] factors Φ₈(u(x)) over Q to obtain subgroup polynomials r.
//! 3. [`family`] assembles and validates candidate triples (t, r, q).
//! 4. [`curvegen`] instantiates concrete curves Y² = X³ + aX over F_q and
//!    verifies them end to end.

pub mod cyclo8;
pub mod numpoly;
pub mod zfactor;

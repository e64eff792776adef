//! Instance generators and reference oracles for exercising `ncpath-core`.
//!
//! The crate has three parts, all deterministic:
//!
//! * [`canon`] — canonical forms and isomorphism-free enumeration of all
//!   graphs up to eight vertices, for appeal-to-exhaustion tests;
//! * [`generate`] — seeded random members of the supported graph classes,
//!   constructed so that membership holds by design rather than by
//!   rejection, plus an index into the exhaustive enumeration;
//! * [`oracle`] — brute-force answers (forbidden subgraphs, domination
//!   minima, Hamiltonicity, minimum-leaf counts) computed from raw
//!   adjacency with none of the structural machinery under test.
//!
//! Everything is pure: no global state, no timing dependence, and every
//! random choice flows from an explicit 64-bit seed through ChaCha8, so a
//! failing case replays from its spec alone.

pub mod canon;
pub mod generate;
pub mod oracle;

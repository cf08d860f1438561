//! Combinatorics of extended T-systems for type-A strong duality data.
//!
//! The crate implements, with exact integer arithmetic throughout:
//!
//! * [`roots`] — the root system `A_n`: interval roots, reflections, inversion sequences;
//! * [`quiver`] — untwisted and twisted height functions, repetition quivers, the window
//!   `Γ^ξ`, compatible readings, the labelling `φ_ξ` and the duality `D`;
//! * [`lusztig`] — Lusztig data, 2-moves and 3-moves, star duality, and the map `ρ`
//!   translating twisted-adapted data to untwisted-adapted data;
//! * [`reineke`] — Reineke's formula for `ε_j` and `ε*_j` (with a min-cut solver from
//!   [`closure`] and a brute-force reference);
//! * [`snakes`] — snake and prime-snake positions, Q/R sequences, prime factorization and
//!   the twisted-to-untwisted translation `P ↦ P†`;
//! * [`tsystem`] — extended T-system relations and the `tfd` predictions that justify them;
//! * [`realize`] — dominant-monomial realizations of snake modules;
//! * [`io`] — the JSON formats shared by the CLI and the Python bindings;
//! * [`verify`] — seeded randomized property suites.
//!
//! Half-integers (the `k` coordinate of twisted quivers) are stored doubled everywhere.

pub mod closure;
pub mod error;
pub mod io;
pub mod lusztig;
pub mod quiver;
pub mod realize;
pub mod reineke;
pub mod roots;
pub mod snakes;
pub mod tsystem;
pub mod verify;

pub use error::{Error, Result};
pub use lusztig::{Carrier, VertexDatum, WordDatum};
pub use quiver::{Flavor, HeightFunction, Region, Vertex};
pub use roots::{Root, TypeA};

//! Crystal and canonical bases for `U_q^-(gl_∞)` and for the symmetric-crystal
//! module `V_θ(0)`, computed with exact arithmetic in ℚ(q).
//!
//! The crate is organized bottom-up:
//!
//! * [`qcoeff`]: Laurent polynomials, rational functions and the bar involution.
//! * [`mseg`]: segments, multisegments and the type-A crystal on them.
//! * [`theta`]: θ-restricted multisegments and the symmetric crystal.
//! * [`freealg`]: `U_q^-` modelled by word vectors, the bilinear form, PBW
//!   elements and modified root operators.
//! * [`thetamod`]: `V_θ(0) = U_q^- / Σ U_q^-(f_k − f_{−k})` with its
//!   `B_θ`-action.
//! * [`canonical`]: bar matrices, lower and upper global bases and
//!   multiplicity polynomials.
//! * [`graph`] and [`verify`]: crystal graphs and the verification suites
//!   driven by the command-line front end.

pub mod canonical;
pub mod config;
pub mod error;
pub mod freealg;
pub mod graph;
pub mod linalg;
pub mod mseg;
pub mod qcoeff;
pub mod theta;
pub mod thetamod;
pub mod verify;

pub use error::{Error, Result};
pub use mseg::{Multisegment, Segment, Window};
pub use qcoeff::{LaurentPoly, RatFunc};

//! Exact continued fractions and the Stern–Brocot diagram.
//!
//! The diagram has a vertex `ν(p/q) = (p/q, 1/q)` for every reduced fraction
//! and an edge between any two fractions `p/q`, `r/s` with `ps - rq = ±1`.
//! This crate provides
//!
//! - [`rational`]: extended rationals (including `1/0`), Farey pairs, `ν`;
//! - [`contfrac`] and [`matrix`]: evaluation through products of
//!   `X_a = (0 1; 1 a)`, standard expansions, convergents, Möbius maps;
//! - [`diagram`]: finite windows, funnels, vertex indices, SVG output;
//! - [`lines`]: the families `α_m` obtained by freeing one term, and the two
//!   lines through `(γ, 0)` that carry all of their vertices;
//! - [`links`]: 4-plat diagrams and Schubert's classification of 2-bridge links;
//! - [`cli`]: the `sbd` command line.
//!
//! All arithmetic is exact; floating point appears only in SVG output.
//!
//! ```
//! use sternbrocot::{contfrac::{evaluate, CfSequence}, rational::ExtendedRational};
//!
//! let seq: CfSequence = "[-1;2,3]".parse().unwrap();
//! assert_eq!(evaluate(&seq), ExtendedRational::new(-4, 7).unwrap());
//! ```

pub mod cli;
pub mod contfrac;
pub mod diagram;
pub mod error;
pub mod lines;
pub mod links;
pub mod matrix;
pub mod rational;

pub use contfrac::{convergents, evaluate, standard_expansion, CfSequence};
pub use diagram::{funnel, verify_hatcher, Diagram, Funnel};
pub use error::{Error, Result};
pub use lines::{ExtendedLine, LineFamily, Side};
pub use matrix::IntMat2;
pub use rational::{is_farey_pair, mediant, nu, ExtendedRational, PlanePoint};

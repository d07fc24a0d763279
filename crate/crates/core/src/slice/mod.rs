//! Lax coslices `a/X`, lax slices `X/b` and lax bislices `a/X/b`.
//!
//! A coslice cell is a pair `(x, x̄)` of a cell `x` of `X` and a certificate
//! `x̄` one dimension up, whose boundary is fixed by the whiskering functors
//! `M_n`, `P_n` of the boundary tower; the alternation between even and odd
//! levels is kept as two explicit code paths. Slices are computed as duals of
//! coslices of the dual.

mod bislice;
mod lax;
pub mod suites;

pub use bislice::Bislice;
pub use lax::{Lax, Side, Whisker};

//! Effective Shintani fundamental domains for totally real fields of narrow class number one,
//! the resulting decomposition of Hecke L-values at conductor `pO_F`, and an exact finite
//! formula for class numbers of the CM extensions `F(sqrt(-p))`.
#![no_std]
// index loops read closest to the matrix formulas they implement
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod exact;
pub mod ff;
pub mod numfield;
pub mod realalg;
pub mod lfun;
pub mod shintani;

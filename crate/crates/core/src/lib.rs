//! Core models for a dispersively coupled transmon-resonator system.
//!
//! Everything in this crate is pure computation over caller-supplied data:
//! no files, no clocks, no global state. Angular frequency (rad/s) is the
//! internal unit for every frequency-like quantity; conversion to and from
//! the linear MHz/GHz values used in reports happens in [`units::Frequency`]
//! and nowhere else. Transcendental math goes through `libm` so results are
//! identical across platforms.
//!
//! The companion `cqed-cli` crate carries file formats, reports and the
//! command-line front end.

#![no_std]

extern crate alloc;

pub mod consts;
pub mod detector;
pub mod dispersive;
pub mod em;
pub mod error;
pub mod extraction;
pub mod fit;
pub mod measurement;
pub mod qml;
pub mod stats;
pub mod uncert;
pub mod units;

pub use error::{Error, Result};
pub use uncert::Uncertain;
pub use units::{Frequency, MeasuredFrequency};

#[cfg(test)]
pub(crate) mod testutil {
    /// Asserts `|a - b| <= tol * max(|a|, |b|, 1e-300)`.
    pub fn assert_rel(a: f64, b: f64, tol: f64) {
        let scale = a.abs().max(b.abs()).max(1e-300);
        assert!(
            (a - b).abs() <= tol * scale,
            "relative mismatch: {a} vs {b} (tol {tol})"
        );
    }

    pub fn assert_abs(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol,
            "absolute mismatch: {a} vs {b} (tol {tol})"
        );
    }
}

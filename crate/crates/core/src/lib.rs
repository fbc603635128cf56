//! Performance analysis of a dual-hop THz-RF decode-and-forward link.
//!
//! The THz hop sees α-μ fading, molecular absorption and antenna pointing
//! errors; the RF hop sees α-μ fading. End-to-end SNR is the minimum of the
//! two hop SNRs. Every metric (outage, SNR moments, ergodic capacity, BER) is
//! available three ways: closed form (Meijer-G based), numerical quadrature
//! over the derived densities, and Monte Carlo.

pub mod analytic;
pub mod channel;
pub mod cli;
pub mod error;
pub mod mc;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};

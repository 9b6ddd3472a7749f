//! Standard-library companion to `stabkit-core`: JSON/CSV wire formats and
//! a thread-pooled driver for the certified controller search. The
//! `stabkit` binary in this crate exposes every core operation as a
//! subcommand.

pub mod driver;
pub mod wire;

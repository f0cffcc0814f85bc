//! Acceptance suite for the settop workspace. The criteria live in
//! `settop::suite`; this crate hosts the `acceptance` test target that
//! runs them after the library tests.

//! Independent reference models used by integration and acceptance tests.
//! Nothing here calls into the crate under test.
#![allow(dead_code)]

pub mod alu;
pub mod layout;
pub mod ringq;

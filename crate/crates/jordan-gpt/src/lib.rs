//! JSON model descriptors, check suites and reports for `jordan-gpt-core`,
//! and the `jordan-gpt` command line.

pub mod cli;
pub mod descriptor;
pub mod report;
pub mod suites;

pub use descriptor::{BackendSpec, Descriptor, DescriptorError};
pub use report::{Check, Report};

//! File formats, seeded random graphs, the reproduction sweep and the
//! command line for [`ksrd_core`].

pub mod cli;
pub mod format;
pub mod random;
pub mod repro;

//! Symplectic fermions at central charge `-2`.
//!
//! * [`fockspace`]: exact mode algebra on the logarithmic Fock spaces.
//! * [`virasoro`]: Sugawara modes and exact identity checks.
//! * [`geometry`]: simply connected domains charted onto the disk, Dirichlet Green's functions.
//! * [`correlators`]: numeric correlation functions of ground fields and of arbitrary basis fields.
//! * [`exprdsl`]: text syntax for states and correlator queries.
//! * [`cli`]: the `symfer` command-line front end.
//!
//! Runnable examples:
//!
//! ```text
//! cargo run --example fock_space
//! cargo run --example sugawara
//! cargo run --example staggered_module
//! cargo run --example green_functions
//! cargo run --example ground_correlators
//! cargo run --example mode_extraction
//! cargo run --example query_dsl
//! cargo run --example covariance
//! ```

pub mod fockspace;
pub mod virasoro;
pub mod geometry;
pub mod correlators;
pub mod exprdsl;
pub mod cli;

//! Classification of Hadamard 2-(2p+1, p, (p-1)/2) designs and Hadamard
//! matrices of order 2p+2 that admit an automorphism of odd prime order p,
//! together with the self-dual codes over GF(2), GF(3) and GF(5) they span.

pub mod canon;
pub mod codes;
pub mod construct;
pub mod error;
pub mod gf;
pub mod io;
pub mod pipeline;
pub mod search;

pub use error::{Error, Result};

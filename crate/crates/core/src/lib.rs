//! Growth of free inverse monoids, computed exactly.
//!
//! Elements of the free inverse monoid `FIM(X)` are modelled as Munn trees:
//! a finite subtree of the Cayley graph of the free group on `X` containing
//! the identity, together with a designated vertex. On top of that model the
//! crate provides
//!
//! - [`words`]: free-group words, free reduction and the text encoding;
//! - [`munn`]: Munn trees, multiplication, inversion, lengths and geodesics;
//! - [`counting`]: exact closed-form counts (Fuss–Catalan numbers, `|M(t,k)|`,
//!   sphere, ball and idempotent sizes);
//! - [`oracle`]: brute-force enumerators that never touch the closed forms;
//! - [`growth`]: the growth polynomial, its certified maximal root, the
//!   idempotent growth rate, the variational function `h` and the
//!   irreducibility certificates;
//! - [`cli`]: the `fim` command-line front end.
//!
//! Every count is an exact big integer. Real-valued results are
//! [`growth::PrecisionReal`] values carrying an explicit error bound.

pub mod axioms;
pub mod cli;
pub mod counting;
pub mod error;
pub mod growth;
pub mod munn;
pub mod oracle;
pub mod words;

pub use error::{Error, Result};
pub use munn::MunnTree;
pub use words::{Letter, ReducedWord};

//! Exact ordinary, outer and reduced Kronecker products of characters of the
//! symmetric groups, together with checkers for classification results about
//! reduced Kronecker products.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: partitions, compositions and diagram operations;
//! * [`characters`]: conjugacy classes and Murnaghan–Nakayama character tables;
//! * [`products`]: Kronecker, Littlewood–Richardson and reduced Kronecker
//!   products, Jacobi–Trudi straightening and closed-form expansions;
//! * [`analysis`]: cc-types, one-box pairs, classification predicates,
//!   lower bounds, equality scans and monotonicity/saturation probes;
//! * [`cli`]: the `redkron` command line and its verification suites.
//!
//! ```
//! use redkron::{partition, products::Kernel};
//!
//! let kernel = Kernel::new();
//! let product = kernel.reduced_product(&partition![1, 1], &partition![2]).unwrap();
//! assert_eq!(
//!     product.to_string(),
//!     "[1]+[2]+2[1,1]+[3]+2[2,1]+[1,1,1]+[3,1]+[2,1,1]"
//! );
//! ```

pub mod analysis;
pub mod characters;
pub mod cli;
pub mod error;
pub mod partition;
pub mod products;

pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use products::{Decomposition, Kernel};

//! Presentations of the equivariant K-rings and cohomology rings of type-A
//! Springer varieties, with exact tools to verify them: Gröbner bases over
//! the rationals, fixed-point localization, and specialization maps.

pub mod cli;
pub mod error;
pub mod fixed_points;
pub mod groebner;
pub mod identities;
pub mod partition;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Partition, PhiMap};
pub use presentation::{Flavor, IdealPresentation};

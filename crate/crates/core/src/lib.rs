//! Exact-arithmetic enumeration and verification kernels: Ferrers-graph
//! bond lattices and their characteristic polynomials, ID forests,
//! D-permutations, surjective staircases, Genocchi-family generating
//! functions, the associated hyperplane arrangements, and drop-statistic
//! permutation models — every identity checked by at least two independent
//! routes at desk scale.

pub mod bond;
pub mod checks;
pub mod dperm;
pub mod drops;
pub mod error;
pub mod ferrers;
pub mod genfun;
pub mod geom;
pub mod idtree;
pub mod perm;
pub mod poly;
pub mod report;
pub mod routes;
pub mod series;
pub mod setpart;
pub mod staircase;

pub use error::{Error, Result};
pub use poly::{Int, Poly, Rat};

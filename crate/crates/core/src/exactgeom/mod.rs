//! Exact geometry over Q(√5): field elements, points, isometries and the
//! three full Platonic point groups.

mod field;
mod group;
mod vector;

pub use field::FieldElement;
pub use group::{orbit, orthogonal_stabilizer, PlatonicKind, PointGroup};
pub use vector::{Isometry, Vec3};

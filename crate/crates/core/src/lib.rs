pub mod analysis;
pub mod doubling;
pub mod enumerator;
pub mod error;
pub mod export;
pub mod exactgeom;
pub mod flagmap;
pub mod solids;
pub mod tracer;

pub use error::{Error, Result};
pub use exactgeom::{FieldElement, Isometry, PlatonicKind, PointGroup, Vec3};

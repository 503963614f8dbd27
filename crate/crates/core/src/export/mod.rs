//! File emitters: meshes, tables and verification reports.

mod mesh;
mod report;
mod table;

pub use mesh::{decimal, FaceMode, MeshDocument};
pub use report::{verify_family, CheckResult, VerifyReport};
pub use table::{read_json_table, render_table, TableFormat, TableRow, TABLE_SCHEMA};

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::analysis::planarity;
use crate::error::Error;
use crate::exactgeom::{FieldElement, Vec3};
use crate::tracer::GeometricPolyhedron;

/// How a (generally skew) face is written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FaceMode {
    /// Triangles from an appended centroid vertex to each face edge.
    #[default]
    Fan,
    /// A closed `l` polyline through the face vertices.
    Polyline,
}

impl FromStr for FaceMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "fan" => Ok(FaceMode::Fan),
            "polyline" => Ok(FaceMode::Polyline),
            _ => Err(Error::Parse(format!("face mode must be fan or polyline, got {s:?}"))),
        }
    }
}

impl fmt::Display for FaceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FaceMode::Fan => "fan",
            FaceMode::Polyline => "polyline",
        })
    }
}

/// Twelve significant digits, shortest form.
pub fn decimal(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        "0".to_string()
    } else {
        format!("{rounded}")
    }
}

/// A polyhedron at a concrete λ, ready to be written as OBJ text.
#[derive(Clone, Debug)]
pub struct MeshDocument {
    pub family_id: String,
    pub lambda: FieldElement,
    pub edge_length: u32,
    pub shape: String,
    pub vertices: Vec<Vec3>,
    pub faces: Vec<Vec<usize>>,
    /// Exact planarity of each face, checked before any rounding.
    pub planar: Vec<bool>,
}

impl MeshDocument {
    pub fn new(family_id: &str, p: &GeometricPolyhedron, lambda: &FieldElement) -> MeshDocument {
        MeshDocument {
            family_id: family_id.to_string(),
            lambda: lambda.clone(),
            edge_length: p.config().edge_length,
            shape: p.shape().map(|s| s.to_string()).unwrap_or_default(),
            vertices: p.positions(lambda),
            faces: p.faces().to_vec(),
            planar: planarity(p, lambda),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn planar_faces(&self) -> usize {
        self.planar.iter().filter(|&&b| b).count()
    }

    fn centroid(&self, face: &[usize]) -> Vec3 {
        let sum = face.iter().fold(Vec3::zero(), |acc, &v| &acc + &self.vertices[v]);
        sum.scale(&FieldElement::from_ratios(1, face.len() as i64, 0, 1))
    }

    pub fn to_obj(&self, mode: FaceMode) -> String {
        let mut out = String::new();
        let edges: usize = self.faces.iter().map(Vec::len).sum::<usize>() / 2;
        let _ = writeln!(out, "# family {}", self.family_id);
        let _ = writeln!(out, "# lambda {}", self.lambda);
        let _ = writeln!(out, "# edge_length {}", self.edge_length);
        let _ = writeln!(out, "# shape {}", self.shape);
        let _ = writeln!(out, "# face_vector {} {} {}", self.vertex_count(), edges, self.face_count());
        let _ = writeln!(out, "# planar_faces {}/{}", self.planar_faces(), self.face_count());
        let _ = writeln!(out, "# mode {mode}");
        let write_vertex = |out: &mut String, v: &Vec3| {
            let [x, y, z] = v.to_f64();
            let _ = writeln!(out, "# exact ({}, {}, {})", v.x(), v.y(), v.z());
            let _ = writeln!(out, "v {} {} {}", decimal(x), decimal(y), decimal(z));
        };
        for v in &self.vertices {
            write_vertex(&mut out, v);
        }
        let n = self.vertex_count();
        match mode {
            FaceMode::Fan => {
                let _ = writeln!(out, "# face centroids");
                for face in &self.faces {
                    write_vertex(&mut out, &self.centroid(face));
                }
                for (k, face) in self.faces.iter().enumerate() {
                    let _ = writeln!(out, "g face{k}");
                    let c = n + k + 1;
                    for i in 0..face.len() {
                        let (a, b) = (face[i] + 1, face[(i + 1) % face.len()] + 1);
                        let _ = writeln!(out, "f {a} {b} {c}");
                    }
                }
            }
            FaceMode::Polyline => {
                for (k, face) in self.faces.iter().enumerate() {
                    let _ = writeln!(out, "g face{k}");
                    let idx: Vec<String> = face.iter().chain(face.first()).map(|v| (v + 1).to_string()).collect();
                    let _ = writeln!(out, "l {}", idx.join(" "));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::build_family;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(decimal(1.0), "1");
        assert_eq!(decimal(-0.0), "0");
        assert_eq!(decimal(1.618033988749895), "1.61803398875");
        assert_eq!(decimal(1234.5678901234567), "1234.56789012");
    }

    #[test]
    fn obj_records_match_counts() {
        let p = build_family("tetO-rr").unwrap();
        let doc = MeshDocument::new("tetO-rr", &p, &FieldElement::from_int(2));
        let fan = doc.to_obj(FaceMode::Fan);
        let count = |text: &str, prefix: &str| text.lines().filter(|l| l.starts_with(prefix)).count();
        assert_eq!(count(&fan, "v "), 8 + 6);
        assert_eq!(count(&fan, "g "), 6);
        assert_eq!(count(&fan, "f "), 24);
        let poly = doc.to_obj(FaceMode::Polyline);
        assert_eq!(count(&poly, "v "), 8);
        assert_eq!(count(&poly, "l "), 6);
        assert!(fan.contains("# planar_faces 0/6"));
    }
}

//! The exhaustive scan over vertex configurations and face shapes.
//!
//! Family ids are `<configuration tag>-<shape letters>`, for example
//! `tetO-rr`, `oct-rl`, `dod4-rr`, `ico1-hrsr`. Configuration tags are
//! `tetA` and `tetO` (aligned and opposed tetrahedra), `oct`, and
//! `cube<d>`, `dod<d>`, `ico<d>` with `d` the combinatorial edge length.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{find_planar_lambda, symmetry_group, symmetry_report, SymmetryReport};
use crate::doubling::{catalogue, double, Index1Polyhedron};
use crate::error::Error;
use crate::exactgeom::{FieldElement, PlatonicKind};
use crate::flagmap::{ComplexError, SchlafliData};
use crate::solids::{Alignment, Frame, Precheck, PrecheckFailure, SolidKind, VertexConfiguration};
use crate::tracer::{assemble_with, AssemblyError, FaceShape, GeometricPolyhedron, TurnSymbol, TurnTable};

/// Number of families the scan must produce.
pub const EXPECTED_FAMILIES: usize = 22;

/// Representatives of the face shapes over the alphabet for `choices`
/// candidates, modulo reversal `[a,b] → [b′,a′]` and orbit swap
/// `[a,b] → [b,a]`. Each representative is the least member of its class.
pub fn shape_classes(choices: usize) -> Vec<FaceShape> {
    let reps: BTreeSet<FaceShape> = FaceShape::all(choices).into_iter().map(class_representative).collect();
    reps.into_iter().collect()
}

/// Least member of the class of `shape` under reversal and swap.
pub fn class_representative(shape: FaceShape) -> FaceShape {
    let class = [shape, shape.reversed(), shape.swapped(), shape.swapped().reversed()];
    class.into_iter().min().expect("non-empty class")
}

/// Why a configuration or shape was discarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    PrecheckCount,
    Antipodal,
    NoEdges,
    FaceNotSimple,
    EdgeDegree,
    Disconnected,
    VertexFigure,
    Diamond,
    Uncovered,
    NotRegular,
    #[serde(rename = "index-not-2")]
    IndexNot2,
}

impl RejectReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::PrecheckCount => "precheck-count",
            RejectReason::Antipodal => "antipodal",
            RejectReason::NoEdges => "no-edges",
            RejectReason::FaceNotSimple => "face-not-simple",
            RejectReason::EdgeDegree => "edge-degree",
            RejectReason::Disconnected => "disconnected",
            RejectReason::VertexFigure => "vertex-figure",
            RejectReason::Diamond => "diamond",
            RejectReason::Uncovered => "uncovered",
            RejectReason::NotRegular => "not-regular",
            RejectReason::IndexNot2 => "index-not-2",
        }
    }

    fn of_precheck(f: &PrecheckFailure) -> RejectReason {
        match f {
            PrecheckFailure::Antipodal { .. } => RejectReason::Antipodal,
            PrecheckFailure::CandidateCount { .. } => RejectReason::PrecheckCount,
            PrecheckFailure::NoEdges => RejectReason::NoEdges,
        }
    }

    fn of_complex(e: &ComplexError) -> RejectReason {
        match e {
            ComplexError::FaceTooShort { .. }
            | ComplexError::VertexOutOfRange { .. }
            | ComplexError::RepeatedVertex { .. } => RejectReason::FaceNotSimple,
            ComplexError::Disconnected { .. } => RejectReason::Disconnected,
            ComplexError::EdgeDegree { .. } => RejectReason::EdgeDegree,
            ComplexError::VertexFigure { .. } => RejectReason::VertexFigure,
            ComplexError::Diamond { .. } | ComplexError::FlagDisconnected { .. } => RejectReason::Diamond,
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectionRecord {
    pub configuration: String,
    pub description: String,
    /// `None` when the configuration failed before any face was traced.
    pub shape: Option<FaceShape>,
    pub reason: RejectReason,
    pub detail: String,
}

/// One row of the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub family_id: String,
    pub configuration: String,
    pub base: SolidKind,
    pub alignment: Alignment,
    pub schlafli_type: String,
    pub schlafli: SchlafliData,
    pub face_vector: (usize, usize, usize),
    pub edge_length: u32,
    pub face_shape: FaceShape,
    pub generator: Option<String>,
    pub genus: usize,
    pub orientable: bool,
    /// Genus and type, e.g. `R3:{6,4}_6`.
    pub census: String,
    pub planar_lambda: Option<FieldElement>,
    pub symmetry: PlatonicKind,
}

/// An accepted family with the data behind its record.
#[derive(Clone, Debug)]
pub struct Family {
    pub record: FamilyRecord,
    pub polyhedron: GeometricPolyhedron,
    pub report: SymmetryReport,
    /// Whether the traced complex is isomorphic to the doubled generator.
    pub doubling_verified: Option<bool>,
}

impl Family {
    pub fn id(&self) -> &str {
        &self.record.family_id
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub families: Vec<Family>,
    pub rejections: Vec<RejectionRecord>,
}

impl Enumeration {
    pub fn family(&self, id: &str) -> Option<&Family> {
        self.families.iter().find(|f| f.id() == id)
    }

    pub fn records(&self) -> Vec<FamilyRecord> {
        self.families.iter().map(|f| f.record.clone()).collect()
    }
}

pub fn family_id(config: &VertexConfiguration, shape: FaceShape) -> String {
    format!("{}-{}", config.tag(), shape.compact())
}

fn parse_tag(tag: &str) -> Result<VertexConfiguration, Error> {
    let split = tag.find(|c: char| c.is_ascii_digit()).unwrap_or(tag.len());
    let (name, digits) = tag.split_at(split);
    let d: u32 = if digits.is_empty() {
        1
    } else {
        digits.parse().map_err(|_| Error::UnknownFamily(tag.to_string()))?
    };
    let (kind, alignment) = match name {
        "tetA" => (SolidKind::Tetrahedron, Alignment::Aligned),
        "tetO" => (SolidKind::Tetrahedron, Alignment::Opposed),
        "oct" => (SolidKind::Octahedron, Alignment::Aligned),
        "cube" if !digits.is_empty() => (SolidKind::Cube, Alignment::Aligned),
        "dod" if !digits.is_empty() => (SolidKind::Dodecahedron, Alignment::Aligned),
        "ico" if !digits.is_empty() => (SolidKind::Icosahedron, Alignment::Aligned),
        _ => return Err(Error::UnknownFamily(tag.to_string())),
    };
    if d == 0 {
        return Err(Error::UnknownFamily(tag.to_string()));
    }
    Ok(VertexConfiguration::new(kind, alignment, d))
}

/// Splits a family id into its configuration and face shape. Either
/// orientation of a shape class is accepted.
pub fn parse_family_id(id: &str) -> Result<(VertexConfiguration, FaceShape), Error> {
    let (tag, letters) = id.split_once('-').ok_or_else(|| Error::UnknownFamily(id.to_string()))?;
    let config = parse_tag(tag)?;
    let shape: FaceShape = letters.parse().map_err(|_| Error::UnknownFamily(id.to_string()))?;
    let alphabet = TurnSymbol::alphabet(config.base.valency() - 1);
    if !alphabet.contains(&shape.a) || !alphabet.contains(&shape.b) {
        return Err(Error::UnknownFamily(id.to_string()));
    }
    Ok((config, shape))
}

/// Traces the polyhedron named by a family id (at generic λ).
pub fn build_family(id: &str) -> Result<GeometricPolyhedron, Error> {
    let (config, shape) = parse_family_id(id)?;
    let frame = Frame::new(config);
    if let Precheck::Reject(why) = frame.precheck() {
        return Err(Error::InvalidArgument(format!("{id}: {why}")));
    }
    let table = TurnTable::build(&frame)?;
    assemble_with(frame, &table, shape).map_err(|e| Error::InvalidArgument(format!("{id}: {e}")))
}

/// Traces and fully analyses one family. Fails with the rejection reason
/// if the id does not name an accepted family.
pub fn analyze_family(id: &str) -> Result<Family, Error> {
    let (config, shape) = parse_family_id(id)?;
    let frame = Frame::new(config);
    if let Precheck::Reject(why) = frame.precheck() {
        return Err(Error::InvalidArgument(format!("{id}: rejected ({}): {why}", RejectReason::of_precheck(&why))));
    }
    let table = TurnTable::build(&frame)?;
    match evaluate(&frame, &table, shape)? {
        Outcome::Accepted(f) => Ok(*f),
        Outcome::Rejected(r) => Err(Error::InvalidArgument(format!("{id}: rejected ({}): {}", r.reason, r.detail))),
    }
}

/// Both orientations `[a,b]` and `[b,a]` of a family; the second is the
/// polyhedron with the two vertex orbits exchanged.
pub fn orientations(family: &Family) -> Result<[GeometricPolyhedron; 2], Error> {
    let config = family.polyhedron.config();
    let swapped = family.record.face_shape.swapped();
    let other = build_family(&family_id(config, swapped))?;
    Ok([family.polyhedron.clone(), other])
}

/// Catalogue member whose doubling has exactly the faces of `p` or of the
/// orbit-swapped orientation `swapped`.
fn find_generator(p: &GeometricPolyhedron, swapped: Option<&GeometricPolyhedron>) -> Option<&'static Index1Polyhedron> {
    let targets: Vec<HashSet<Vec<usize>>> = std::iter::once(p).chain(swapped).map(GeometricPolyhedron::face_keys).collect();
    catalogue().iter().find(|q| {
        double(q).is_ok_and(|d| d.config() == p.config() && targets.iter().any(|t| *t == d.face_keys()))
    })
}

enum Outcome {
    Accepted(Box<Family>),
    Rejected(RejectionRecord),
}

fn rejection(config: &VertexConfiguration, shape: Option<FaceShape>, reason: RejectReason, detail: String) -> Outcome {
    Outcome::Rejected(RejectionRecord {
        configuration: config.tag(),
        description: config.to_string(),
        shape,
        reason,
        detail,
    })
}

fn evaluate(frame: &Frame, table: &TurnTable, shape: FaceShape) -> Result<Outcome, Error> {
    let config = frame.config().clone();
    let p = match assemble_with(frame.clone(), table, shape) {
        Ok(p) => p,
        Err(AssemblyError::Complex(e)) => return Ok(rejection(&config, Some(shape), RejectReason::of_complex(&e), e.to_string())),
        Err(e @ AssemblyError::Uncovered { .. }) => {
            return Ok(rejection(&config, Some(shape), RejectReason::Uncovered, e.to_string()))
        }
        Err(AssemblyError::Precheck(f)) => return Ok(rejection(&config, Some(shape), RejectReason::of_precheck(&f), f.to_string())),
        Err(AssemblyError::Trace(e)) => return Err(Error::Internal(format!("{}: {e}", family_id(&config, shape)))),
    };
    if !p.complex().is_regular() {
        let aut = p.complex().automorphism_group().len();
        let detail = format!("|Aut| = {aut} < {} flags", p.complex().flag_count());
        return Ok(rejection(&config, Some(shape), RejectReason::NotRegular, detail));
    }
    let sym = symmetry_group(&p);
    let report = symmetry_report(&p, &sym);
    if report.index != Some(2) || report.under_group.flags != 2 {
        let detail = format!("|G| = {}, |Γ| = {}, flag orbits {}", report.group_order, report.automorphism_order, report.under_group.flags);
        return Ok(rejection(&config, Some(shape), RejectReason::IndexNot2, detail));
    }
    let s = p.complex().schlafli();
    let swapped = (shape.swapped() != shape).then(|| assemble_with(frame.clone(), table, shape.swapped()).ok()).flatten();
    let generator = find_generator(&p, swapped.as_ref());
    let doubling_verified = generator.map(|q| double(q).is_ok_and(|d| d.complex().is_isomorphic(p.complex())));
    let planar = find_planar_lambda(&p);
    let record = FamilyRecord {
        family_id: family_id(&config, shape),
        configuration: config.tag(),
        base: config.base,
        alignment: config.alignment,
        schlafli_type: s.type_symbol(),
        schlafli: s,
        face_vector: s.face_vector,
        edge_length: config.edge_length,
        face_shape: shape,
        generator: generator.map(|q| q.name().to_string()),
        genus: s.genus,
        orientable: s.orientable,
        census: format!("R{}:{}", s.genus, s.type_symbol()),
        planar_lambda: planar.unique().cloned(),
        symmetry: sym.ambient().kind(),
    };
    Ok(Outcome::Accepted(Box::new(Family { record, polyhedron: p, report, doubling_verified })))
}

fn scan_configuration(config: VertexConfiguration) -> Result<Vec<Outcome>, Error> {
    let frame = Frame::new(config.clone());
    if let Precheck::Reject(why) = frame.precheck() {
        return Ok(vec![rejection(&config, None, RejectReason::of_precheck(&why), why.to_string())]);
    }
    let table = TurnTable::build(&frame)?;
    let choices = frame.solid().valency() - 1;
    shape_classes(choices).into_iter().map(|shape| evaluate(&frame, &table, shape)).collect()
}

/// Every configuration and shape class, without checking the total.
pub fn scan() -> Result<Enumeration, Error> {
    let per_config: Vec<Vec<Outcome>> =
        VertexConfiguration::scan_space().into_par_iter().map(scan_configuration).collect::<Result<_, _>>()?;
    let mut families = Vec::new();
    let mut rejections = Vec::new();
    for outcome in per_config.into_iter().flatten() {
        match outcome {
            Outcome::Accepted(f) => families.push(*f),
            Outcome::Rejected(r) => rejections.push(r),
        }
    }
    families.sort_by_key(|f| (f.record.symmetry, f.record.base, f.record.alignment, f.record.edge_length, f.record.face_shape));
    Ok(Enumeration { families, rejections })
}

/// The full classification. Fails if the scan does not produce exactly
/// [`EXPECTED_FAMILIES`] families or a generator's doubling disagrees with
/// the traced family.
pub fn enumerate_all() -> Result<Enumeration, Error> {
    let e = scan()?;
    if e.families.len() != EXPECTED_FAMILIES {
        let ids: Vec<&str> = e.families.iter().map(Family::id).collect();
        return Err(Error::Internal(format!(
            "expected {EXPECTED_FAMILIES} families, found {}: {}",
            ids.len(),
            ids.join(", ")
        )));
    }
    if let Some(bad) = e.families.iter().find(|f| f.doubling_verified == Some(false)) {
        return Err(Error::Internal(format!(
            "{} is not isomorphic to the doubled {}",
            bad.id(),
            bad.record.generator.as_deref().unwrap_or("?")
        )));
    }
    Ok(e)
}

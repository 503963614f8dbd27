//! The eighteen finite regular polyhedra of index 1, and the doubling
//! construction that turns each of them into an index-2 polyhedron.
//!
//! Doubling places a second copy `V◇ = λV` of the vertex set and replaces
//! every edge `v0 v1` by the two crossing edges `v0 v1◇` and `v0◇ v1`.

use std::sync::OnceLock;

use thiserror::Error;

use crate::flagmap::{ComplexError, FlagComplex, PetrieError, SchlafliData};
use crate::solids::{Alignment, Frame, Solid, SolidKind, VertexConfiguration};
use crate::tracer::{assemble_single, AssemblyError, GeometricPolyhedron, TurnSymbol};

/// A regular polyhedron whose symmetry group is flag-transitive.
#[derive(Clone, Debug)]
pub struct Index1Polyhedron {
    name: String,
    solid: SolidKind,
    edge_length: u32,
    complex: FlagComplex,
    schlafli: SchlafliData,
}

impl Index1Polyhedron {
    fn new(name: impl Into<String>, solid: SolidKind, edge_length: u32, complex: FlagComplex) -> Index1Polyhedron {
        let schlafli = complex.schlafli();
        Index1Polyhedron { name: name.into(), solid, edge_length, complex, schlafli }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Solid whose vertices the polyhedron uses.
    pub fn solid(&self) -> SolidKind {
        self.solid
    }

    /// Graph distance in the solid spanned by each edge.
    pub fn edge_length(&self) -> u32 {
        self.edge_length
    }

    pub fn complex(&self) -> &FlagComplex {
        &self.complex
    }

    pub fn schlafli(&self) -> &SchlafliData {
        &self.schlafli
    }

    pub fn is_petrie_dual(&self) -> bool {
        self.name.starts_with("Petrie-dual of ")
    }

    fn petrie(&self) -> Result<Index1Polyhedron, PetrieError> {
        let dual = self.complex.petrie_dual()?;
        Ok(Index1Polyhedron::new(format!("Petrie-dual of {}", self.name), self.solid, self.edge_length, dual))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DoublingError {
    #[error("edge graph of {0} is bipartite; doubling gives a compound")]
    Bipartite(String),
    #[error("doubled faces of {name} are not a polyhedron: {source}")]
    Invalid { name: String, source: ComplexError },
}

/// Faces of the five Platonic and four Kepler-Poinsot polyhedra, traced
/// with a constant turn on the vertices of a solid.
const SEEDS: [(&str, SolidKind, u32, TurnSymbol); 9] = [
    ("Cube", SolidKind::Cube, 1, TurnSymbol::R),
    ("Tetrahedron", SolidKind::Tetrahedron, 1, TurnSymbol::R),
    ("Octahedron", SolidKind::Octahedron, 1, TurnSymbol::R),
    ("Dodecahedron", SolidKind::Dodecahedron, 1, TurnSymbol::R),
    ("Great Stellated Dodecahedron", SolidKind::Dodecahedron, 4, TurnSymbol::R),
    ("Small Stellated Dodecahedron", SolidKind::Icosahedron, 2, TurnSymbol::Hr),
    ("Icosahedron", SolidKind::Icosahedron, 1, TurnSymbol::Hr),
    ("Great Dodecahedron", SolidKind::Icosahedron, 1, TurnSymbol::Sr),
    ("Great Icosahedron", SolidKind::Icosahedron, 2, TurnSymbol::Sr),
];

fn build_catalogue() -> Result<Vec<Index1Polyhedron>, String> {
    let mut out = Vec::with_capacity(18);
    for (name, solid, d, turn) in SEEDS {
        let complex = assemble_single(Solid::new(solid), d, turn).map_err(|e: AssemblyError| format!("{name}: {e}"))?;
        let q = Index1Polyhedron::new(name, solid, d, complex);
        if !q.complex.is_regular() {
            return Err(format!("{name} is not regular"));
        }
        let pd = q.petrie().map_err(|e| format!("Petrie-dual of {name}: {e}"))?;
        if !pd.complex.is_regular() {
            return Err(format!("{} is not regular", pd.name));
        }
        out.push(q);
        out.push(pd);
    }
    Ok(out)
}

/// The 18 finite regular polyhedra of index 1: Platonic solids,
/// Kepler-Poinsot polyhedra and their Petrie-duals.
pub fn catalogue() -> &'static [Index1Polyhedron] {
    static CATALOGUE: OnceLock<Vec<Index1Polyhedron>> = OnceLock::new();
    CATALOGUE.get_or_init(|| build_catalogue().unwrap_or_else(|e| panic!("index-1 catalogue is invalid: {e}")))
}

/// Looks up a catalogue member by name, ignoring case.
pub fn find(name: &str) -> Option<&'static Index1Polyhedron> {
    catalogue().iter().find(|q| q.name.eq_ignore_ascii_case(name))
}

fn is_bipartite(n: usize, edges: &[[usize; 2]]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &[a, b] in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let c = colour[u].unwrap_or(false);
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(d) if d == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Faces of the doubled polyhedron on labels `0..n` (V) and `n..2n` (V◇).
pub fn doubled_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for face in faces {
        let p = face.len();
        let decorate = |i: usize, start_starred: bool| {
            let starred = (i % 2 == 1) != start_starred;
            face[i % p] + if starred { n } else { 0 }
        };
        if p % 2 == 0 {
            out.push((0..p).map(|i| decorate(i, false)).collect());
            out.push((0..p).map(|i| decorate(i, true)).collect());
        } else {
            // Odd faces are tracked twice, with the decoration flipped on the
            // second pass.
            out.push((0..2 * p).map(|i| decorate(i, false)).collect());
        }
    }
    out
}

/// Index-2 polyhedron generated from `q`.
///
/// Cube-based seeds have a bipartite edge graph: their vertices split into
/// two opposed tetrahedra, and rescaling one of them gives a polyhedron
/// isomorphic to `q`.
pub fn double(q: &Index1Polyhedron) -> Result<GeometricPolyhedron, DoublingError> {
    let n = q.complex.vertex_count();
    if is_bipartite(n, q.complex.edges()) {
        if q.solid != SolidKind::Cube {
            return Err(DoublingError::Bipartite(q.name.clone()));
        }
        let frame = Frame::new(VertexConfiguration::new(SolidKind::Tetrahedron, Alignment::Opposed, 1));
        let cube = Solid::new(SolidKind::Cube);
        // Cube vertex -> tetO label: a tetrahedron vertex keeps its index,
        // its negative becomes the partner label.
        let relabel: Vec<usize> = (0..n)
            .map(|c| {
                let p = cube.vertex(c);
                let tet = frame.solid();
                (0..tet.vertex_count())
                    .find(|&i| tet.vertex(i) == p)
                    .or_else(|| (0..tet.vertex_count()).find(|&i| &-tet.vertex(i) == p).map(|i| i + tet.vertex_count()))
                    .expect("cube vertex lies on the tetrahedron or its negative")
            })
            .collect();
        let faces = q.complex.faces().iter().map(|f| f.iter().map(|&v| relabel[v]).collect()).collect();
        let complex = FlagComplex::from_faces(2 * frame.orbit_size(), faces)
            .map_err(|source| DoublingError::Invalid { name: q.name.clone(), source })?;
        return Ok(GeometricPolyhedron::new(frame, None, complex));
    }
    let frame = Frame::new(VertexConfiguration::new(q.solid, Alignment::Aligned, q.edge_length));
    let complex = FlagComplex::from_faces(2 * n, doubled_faces(n, q.complex.faces()))
        .map_err(|source| DoublingError::Invalid { name: q.name.clone(), source })?;
    Ok(GeometricPolyhedron::new(frame, None, complex))
}

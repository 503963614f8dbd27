//! Vertex sets of the Platonic solids, their edge-graph metrics, and the
//! two-orbit vertex configurations built on them.
//!
//! A configuration places the second vertex orbit `S◇` at `λ·S` (aligned) or
//! `−λ·S` (opposed, tetrahedron only). Vertices of the resulting polyhedron
//! are labelled `0..n` for `S` and `n..2n` for `S◇`, with label `n + i`
//! sitting on the same ray as `i` (aligned) or the opposite ray (opposed).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactgeom::{FieldElement, PlatonicKind, Vec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SolidKind {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl SolidKind {
    pub const ALL: [SolidKind; 5] = [
        SolidKind::Tetrahedron,
        SolidKind::Cube,
        SolidKind::Octahedron,
        SolidKind::Dodecahedron,
        SolidKind::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "Tetrahedron",
            SolidKind::Cube => "Cube",
            SolidKind::Octahedron => "Octahedron",
            SolidKind::Dodecahedron => "Dodecahedron",
            SolidKind::Icosahedron => "Icosahedron",
        }
    }

    /// Full symmetry group of the solid.
    pub fn group_kind(self) -> PlatonicKind {
        match self {
            SolidKind::Tetrahedron => PlatonicKind::Tetrahedral,
            SolidKind::Cube | SolidKind::Octahedron => PlatonicKind::Octahedral,
            SolidKind::Dodecahedron | SolidKind::Icosahedron => PlatonicKind::Icosahedral,
        }
    }

    /// Vertex valency `q`.
    pub fn valency(self) -> usize {
        match self {
            SolidKind::Tetrahedron | SolidKind::Cube | SolidKind::Dodecahedron => 3,
            SolidKind::Octahedron => 4,
            SolidKind::Icosahedron => 5,
        }
    }

    /// Exact vertex coordinates.
    pub fn vertices(self) -> Vec<Vec3> {
        let signs = [1i64, -1];
        let zero = FieldElement::zero;
        match self {
            SolidKind::Tetrahedron => cube_points().into_iter().filter(|v| sign_product(v) > 0).collect(),
            SolidKind::Cube => cube_points(),
            SolidKind::Octahedron => {
                let mut out = Vec::new();
                for axis in 0..3 {
                    for s in signs {
                        let mut c = [0, 0, 0];
                        c[axis] = s;
                        out.push(Vec3::from_ints(c[0], c[1], c[2]));
                    }
                }
                out
            }
            SolidKind::Icosahedron => {
                let t = FieldElement::tau();
                let mut out = Vec::new();
                for shift in 0..3 {
                    for s1 in signs {
                        for s2 in signs {
                            let c = [zero(), FieldElement::from_int(s1), &t * &FieldElement::from_int(s2)];
                            out.push(rotate_coords(c, shift));
                        }
                    }
                }
                out
            }
            SolidKind::Dodecahedron => {
                let t = FieldElement::tau();
                let t_inv = t.inv().expect("tau is invertible");
                // Cyclic permutations of (0, ±τ, ±1/τ): the dual of the
                // icosahedron above, so both share one [3,5].
                let mut out = cube_points();
                for shift in 0..3 {
                    for s1 in signs {
                        for s2 in signs {
                            let c = [
                                zero(),
                                &t * &FieldElement::from_int(s1),
                                &t_inv * &FieldElement::from_int(s2),
                            ];
                            out.push(rotate_coords(c, shift));
                        }
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn cube_points() -> Vec<Vec3> {
    let mut out = Vec::with_capacity(8);
    for x in [1, -1] {
        for y in [1, -1] {
            for z in [1, -1] {
                out.push(Vec3::from_ints(x, y, z));
            }
        }
    }
    out
}

fn sign_product(v: &Vec3) -> i32 {
    v.0.iter().map(|c| if c.is_negative() { -1 } else { 1 }).product()
}

fn rotate_coords(c: [FieldElement; 3], shift: usize) -> Vec3 {
    let [a, b, d] = c;
    match shift {
        0 => Vec3::new(a, b, d),
        1 => Vec3::new(d, a, b),
        _ => Vec3::new(b, d, a),
    }
}

/// Exact points with the graph joining pairs at minimal non-zero distance,
/// and all-pairs breadth-first distances on that graph.
#[derive(Clone, Debug)]
pub struct PointGraph {
    points: Vec<Vec3>,
    neighbors: Vec<Vec<usize>>,
    distance: Vec<Vec<u32>>,
}

impl PointGraph {
    pub fn new(points: Vec<Vec3>) -> PointGraph {
        let n = points.len();
        let d2 = |i: usize, j: usize| (&points[i] - &points[j]).norm2();
        let min = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| d2(i, j))
            .min()
            .unwrap_or_default();
        let neighbors: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).filter(|&j| j != i && d2(i, j) == min).collect()).collect();
        let distance = (0..n).map(|s| bfs(&neighbors, s)).collect();
        PointGraph { points, neighbors, distance }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Vec3 {
        &self.points[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn distance(&self, i: usize, j: usize) -> u32 {
        self.distance[i][j]
    }

    pub fn diameter(&self) -> u32 {
        self.distance.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of points at each distance from `i`.
    pub fn distance_profile(&self, i: usize) -> Vec<usize> {
        let mut out = vec![0; self.diameter() as usize + 1];
        for &d in &self.distance[i] {
            out[d as usize] += 1;
        }
        out
    }

    /// Index of the point `−p_i`, if present.
    pub fn antipode(&self, i: usize) -> Option<usize> {
        let target = -&self.points[i];
        self.points.iter().position(|p| *p == target)
    }

    pub fn index_of(&self, p: &Vec3) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }
}

fn bfs(neighbors: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; neighbors.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in &neighbors[u] {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// A Platonic solid with its vertex graph.
#[derive(Clone, Debug)]
pub struct Solid {
    kind: SolidKind,
    graph: PointGraph,
}

impl Solid {
    pub fn new(kind: SolidKind) -> Solid {
        Solid { kind, graph: PointGraph::new(kind.vertices()) }
    }

    pub fn kind(&self) -> SolidKind {
        self.kind
    }

    pub fn graph(&self) -> &PointGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.len()
    }

    pub fn vertex(&self, i: usize) -> &Vec3 {
        self.graph.point(i)
    }

    pub fn vertices(&self) -> &[Vec3] {
        self.graph.points()
    }

    pub fn valency(&self) -> usize {
        self.kind.valency()
    }

    /// Vertices at graph distance `d` from `cur`, except `prev`.
    pub fn successors(&self, prev: usize, cur: usize, d: u32) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&w| w != prev && self.graph.distance(cur, w) == d)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Alignment {
    /// `S◇ = λ·S`.
    Aligned,
    /// `S◇ = −λ·S`; tetrahedron only.
    Opposed,
}

/// The orbit ratio. Combinatorial work uses [`Lambda::Generic`]: two
/// vertices coincide only when they carry the same label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum Lambda {
    #[default]
    Generic,
    Exact(FieldElement),
}

/// Base solid, alignment, combinatorial edge length and orbit ratio.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexConfiguration {
    pub base: SolidKind,
    pub alignment: Alignment,
    pub edge_length: u32,
    pub lambda: Lambda,
}

impl VertexConfiguration {
    pub fn new(base: SolidKind, alignment: Alignment, edge_length: u32) -> VertexConfiguration {
        assert!(
            alignment == Alignment::Aligned || base == SolidKind::Tetrahedron,
            "only tetrahedra can be opposed"
        );
        VertexConfiguration { base, alignment, edge_length, lambda: Lambda::Generic }
    }

    pub fn with_lambda(mut self, lambda: FieldElement) -> VertexConfiguration {
        self.lambda = Lambda::Exact(lambda);
        self
    }

    /// Short tag used in family ids: `tetA`, `tetO`, `oct`, `cube1`,
    /// `dod4`, `ico2`, ...
    pub fn tag(&self) -> String {
        let d = self.edge_length;
        match (self.base, self.alignment) {
            (SolidKind::Tetrahedron, Alignment::Opposed) if d == 1 => "tetO".into(),
            (SolidKind::Tetrahedron, Alignment::Opposed) => format!("tetO{d}"),
            (SolidKind::Tetrahedron, _) if d == 1 => "tetA".into(),
            (SolidKind::Tetrahedron, _) => format!("tetA{d}"),
            (SolidKind::Octahedron, _) if d == 1 => "oct".into(),
            (SolidKind::Octahedron, _) => format!("oct{d}"),
            (SolidKind::Cube, _) => format!("cube{d}"),
            (SolidKind::Dodecahedron, _) => format!("dod{d}"),
            (SolidKind::Icosahedron, _) => format!("ico{d}"),
        }
    }

    /// Every configuration the enumeration scans, including those later
    /// rejected: aligned configurations at each graph distance `1..=diam`,
    /// opposed tetrahedra at each odd cube distance.
    pub fn scan_space() -> Vec<VertexConfiguration> {
        let mut out = Vec::new();
        for kind in SolidKind::ALL {
            let diam = Solid::new(kind).graph().diameter();
            for d in 1..=diam {
                out.push(VertexConfiguration::new(kind, Alignment::Aligned, d));
            }
            if kind == SolidKind::Tetrahedron {
                for d in [1, 3] {
                    out.push(VertexConfiguration::new(kind, Alignment::Opposed, d));
                }
            }
        }
        out
    }
}

impl fmt::Display for VertexConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let align = match self.alignment {
            Alignment::Aligned => "aligned",
            Alignment::Opposed => "opposed",
        };
        write!(f, "{} {align}, edge length {}", self.base, self.edge_length)
    }
}

/// Which vertex orbit a label belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orbit {
    Base,
    Second,
}

/// Labelled vertex set of a configuration together with the reference
/// graph used for combinatorial lengths: the edge graph of `S` when aligned,
/// the cube on `S ∪ −S` when opposed.
#[derive(Clone, Debug)]
pub struct Frame {
    config: VertexConfiguration,
    solid: Solid,
    reference: PointGraph,
}

impl Frame {
    pub fn new(config: VertexConfiguration) -> Frame {
        let solid = Solid::new(config.base);
        let reference = match config.alignment {
            Alignment::Aligned => solid.graph().clone(),
            Alignment::Opposed => {
                let mut pts = solid.vertices().to_vec();
                pts.extend(solid.vertices().iter().map(|v| -v));
                PointGraph::new(pts)
            }
        };
        Frame { config, solid, reference }
    }

    pub fn config(&self) -> &VertexConfiguration {
        &self.config
    }

    pub fn solid(&self) -> &Solid {
        &self.solid
    }

    pub fn reference(&self) -> &PointGraph {
        &self.reference
    }

    /// Vertices per orbit.
    pub fn orbit_size(&self) -> usize {
        self.solid.vertex_count()
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.orbit_size()
    }

    pub fn orbit(&self, label: usize) -> Orbit {
        if label < self.orbit_size() {
            Orbit::Base
        } else {
            Orbit::Second
        }
    }

    /// `i ↦ i◇` and back.
    pub fn partner(&self, label: usize) -> usize {
        let n = self.orbit_size();
        if label < n {
            label + n
        } else {
            label - n
        }
    }

    /// Reference-graph vertex onto which the label projects.
    pub fn point_of(&self, label: usize) -> usize {
        match self.config.alignment {
            Alignment::Aligned => label % self.orbit_size(),
            Alignment::Opposed => label,
        }
    }

    /// Label in `orbit` projecting onto reference point `point`, if any.
    pub fn label_at(&self, point: usize, orbit: Orbit) -> Option<usize> {
        let n = self.orbit_size();
        match (self.config.alignment, orbit) {
            (Alignment::Aligned, Orbit::Base) => Some(point),
            (Alignment::Aligned, Orbit::Second) => Some(point + n),
            (Alignment::Opposed, Orbit::Base) => (point < n).then_some(point),
            (Alignment::Opposed, Orbit::Second) => (point >= n).then_some(point),
        }
    }

    /// Projection of the label onto the reference sphere.
    pub fn direction(&self, label: usize) -> &Vec3 {
        self.reference.point(self.point_of(label))
    }

    /// Exact position at orbit ratio `lambda`.
    pub fn position(&self, label: usize, lambda: &FieldElement) -> Vec3 {
        let n = self.orbit_size();
        let v = self.solid.vertex(label % n);
        match (label < n, self.config.alignment) {
            (true, _) => v.clone(),
            (false, Alignment::Aligned) => v.scale(lambda),
            (false, Alignment::Opposed) => (-v).scale(lambda),
        }
    }

    pub fn positions(&self, lambda: &FieldElement) -> Vec<Vec3> {
        (0..self.vertex_count()).map(|l| self.position(l, lambda)).collect()
    }

    /// Combinatorial length between two labels.
    pub fn comb_distance(&self, a: usize, b: usize) -> u32 {
        self.reference.distance(self.point_of(a), self.point_of(b))
    }

    /// Labels of the other orbit at combinatorial distance `d` from `cur`,
    /// excluding the backtrack vertex `prev`.
    pub fn successor_candidates(&self, prev: usize, cur: usize) -> Vec<usize> {
        let other = match self.orbit(cur) {
            Orbit::Base => Orbit::Second,
            Orbit::Second => Orbit::Base,
        };
        let d = self.config.edge_length;
        let here = self.point_of(cur);
        (0..self.reference.len())
            .filter(|&j| self.reference.distance(here, j) == d)
            .filter_map(|j| self.label_at(j, other))
            .filter(|&w| w != prev)
            .collect()
    }

    /// All directed edges from `S` to `S◇` of the configuration's length.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        let n = self.orbit_size();
        let mut out = Vec::new();
        for s in 0..n {
            for t in n..2 * n {
                if self.comb_distance(s, t) == self.config.edge_length {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// The two labels project onto opposite points of the reference sphere.
    pub fn antipodal(&self, a: usize, b: usize) -> bool {
        self.direction(a).opposite_direction(self.direction(b))
    }

    /// Structural filter applied before any face is traced.
    pub fn precheck(&self) -> Precheck {
        let expected = self.solid.valency() - 1;
        let edges = self.directed_edges();
        if edges.is_empty() {
            return Precheck::Reject(PrecheckFailure::NoEdges);
        }
        for &(s, t) in &edges {
            if self.antipodal(s, t) {
                return Precheck::Reject(PrecheckFailure::Antipodal { from: s, to: t });
            }
        }
        for &(s, t) in &edges {
            for (prev, cur) in [(s, t), (t, s)] {
                let found = self.successor_candidates(prev, cur).len();
                if found != expected {
                    return Precheck::Reject(PrecheckFailure::CandidateCount { at: cur, found, expected });
                }
            }
        }
        Precheck::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrecheckFailure {
    /// Some edge of the configuration joins opposite rays.
    Antipodal { from: usize, to: usize },
    /// A vertex has the wrong number of continuation candidates.
    CandidateCount { at: usize, found: usize, expected: usize },
    /// No pair of vertices realises the edge length.
    NoEdges,
}

impl fmt::Display for PrecheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrecheckFailure::Antipodal { from, to } => {
                write!(f, "edge {from}-{to} joins vertices collinear with the centre")
            }
            PrecheckFailure::CandidateCount { at, found, expected } => {
                write!(f, "vertex {at} has {found} continuation candidates, expected {expected}")
            }
            PrecheckFailure::NoEdges => write!(f, "no vertex pair realises this edge length"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Precheck {
    Pass,
    Reject(PrecheckFailure),
}

impl Precheck {
    pub fn passed(&self) -> bool {
        matches!(self, Precheck::Pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aligned(kind: SolidKind, d: u32) -> Frame {
        Frame::new(VertexConfiguration::new(kind, Alignment::Aligned, d))
    }

    #[test]
    fn solid_sizes_and_valencies() {
        let expect = [
            (SolidKind::Tetrahedron, 4, 6),
            (SolidKind::Cube, 8, 12),
            (SolidKind::Octahedron, 6, 12),
            (SolidKind::Dodecahedron, 20, 30),
            (SolidKind::Icosahedron, 12, 30),
        ];
        for (kind, f0, f1) in expect {
            let s = Solid::new(kind);
            assert_eq!(s.vertex_count(), f0, "{kind}");
            let edges: usize = (0..f0).map(|i| s.graph().neighbors(i).len()).sum::<usize>() / 2;
            assert_eq!(edges, f1, "{kind}");
            assert!((0..f0).all(|i| s.graph().neighbors(i).len() == kind.valency()));
        }
    }

    #[test]
    fn vertex_sets_are_single_group_orbits() {
        use crate::exactgeom::PointGroup;
        for kind in SolidKind::ALL {
            let verts = kind.vertices();
            let group = PointGroup::shared(kind.group_kind());
            let orbit = group.orbit(&verts[0]);
            assert_eq!(orbit.len(), verts.len(), "{kind}");
            assert!(orbit.iter().all(|p| verts.contains(p)), "{kind}");
        }
    }

    #[test]
    fn dodecahedron_distances() {
        let s = Solid::new(SolidKind::Dodecahedron);
        for i in 0..20 {
            assert_eq!(s.graph().distance_profile(i), vec![1, 3, 6, 6, 3, 1]);
            let a = s.graph().antipode(i).unwrap();
            assert_eq!(s.graph().distance(i, a), 5);
            assert_eq!(s.graph().distance(i, i), 0);
        }
    }

    #[test]
    fn opposed_tetrahedra_cube_metric() {
        let f = Frame::new(VertexConfiguration::new(SolidKind::Tetrahedron, Alignment::Opposed, 1));
        assert_eq!(f.reference().len(), 8);
        // Every S vertex is cube-adjacent to three S◇ vertices and opposite to its own partner.
        for s in 0..4 {
            let near: Vec<_> = (4..8).filter(|&t| f.comb_distance(s, t) == 1).collect();
            assert_eq!(near.len(), 3);
            assert_eq!(f.comb_distance(s, f.partner(s)), 3);
            assert!(f.antipodal(s, f.partner(s)));
        }
    }

    #[test]
    fn candidate_counts() {
        let ico = aligned(SolidKind::Icosahedron, 1);
        let (s, t) = ico.directed_edges()[0];
        assert_eq!(ico.successor_candidates(s, t).len(), 4);
        let oct = aligned(SolidKind::Octahedron, 1);
        let (s, t) = oct.directed_edges()[0];
        assert_eq!(oct.successor_candidates(s, t).len(), 3);
        let dod = aligned(SolidKind::Dodecahedron, 4);
        let (s, t) = dod.directed_edges()[0];
        assert_eq!(dod.successor_candidates(s, t).len(), 2);
    }

    #[test]
    fn prechecks() {
        let dod2 = aligned(SolidKind::Dodecahedron, 2).precheck();
        assert!(matches!(dod2, Precheck::Reject(PrecheckFailure::CandidateCount { found: 5, expected: 2, .. })));
        assert!(aligned(SolidKind::Dodecahedron, 4).precheck().passed());
        assert!(matches!(
            aligned(SolidKind::Icosahedron, 3).precheck(),
            Precheck::Reject(PrecheckFailure::Antipodal { .. })
        ));
        let passing: Vec<String> = VertexConfiguration::scan_space()
            .into_iter()
            .filter(|c| Frame::new(c.clone()).precheck().passed())
            .map(|c| c.tag())
            .collect();
        assert_eq!(passing, ["tetA", "tetO", "cube1", "cube2", "oct", "dod1", "dod4", "ico1", "ico2"]);
    }

    #[test]
    fn positions_follow_alignment() {
        let t = FieldElement::tau();
        let a = aligned(SolidKind::Icosahedron, 1);
        assert_eq!(a.position(12, &t), a.solid().vertex(0).scale(&t));
        let o = Frame::new(VertexConfiguration::new(SolidKind::Tetrahedron, Alignment::Opposed, 1));
        assert_eq!(o.position(5, &t), (-o.solid().vertex(1)).scale(&t));
        assert_eq!(o.direction(5), &-o.solid().vertex(1));
    }
}

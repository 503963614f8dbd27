//! Geometric symmetry of traced and doubled polyhedra.
//!
//! Symmetries are searched inside the full point group of the base solid.
//! With a generic orbit ratio an isometry acts on labels: it permutes the
//! base solid and moves each partner label along with its base vertex.

mod planar;
pub mod poly;

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

pub use planar::{find_planar_lambda, planarity, PlanarSearch};

use crate::exactgeom::{orthogonal_stabilizer, FieldElement, Isometry, PlatonicKind, PointGroup, Vec3};
use crate::flagmap::{canonical_cycle, FlagComplex};
use crate::solids::Frame;
use crate::tracer::GeometricPolyhedron;

/// Vertex permutation induced on `points` by `g`, if `g` maps the set onto
/// itself.
pub fn point_permutation(g: &Isometry, points: &[Vec3]) -> Option<Vec<usize>> {
    let index: HashMap<&Vec3, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    points.iter().map(|p| index.get(&g.apply(p)).copied()).collect()
}

/// Label permutation of a configuration induced by `g` at generic orbit
/// ratio: `i ↦ π(i)` on the base solid and `n+i ↦ n+π(i)`.
pub fn label_permutation(frame: &Frame, g: &Isometry) -> Option<Vec<usize>> {
    let pi = point_permutation(g, frame.solid().vertices())?;
    let n = pi.len();
    Some((0..2 * n).map(|l| if l < n { pi[l] } else { n + pi[l - n] }).collect())
}

/// Flag permutation induced by a vertex permutation, if it maps faces to
/// faces.
pub fn induced_flag_permutation(complex: &FlagComplex, perm: &[usize]) -> Option<Vec<usize>> {
    let face_index: HashMap<Vec<usize>, usize> =
        complex.faces().iter().enumerate().map(|(i, f)| (canonical_cycle(f), i)).collect();
    let edge_index = complex.edge_index();
    let flag_index: HashMap<(usize, usize, usize), usize> =
        complex.flags().iter().enumerate().map(|(i, f)| ((f.vertex, f.edge, f.face), i)).collect();
    let face_map: Vec<usize> = complex
        .faces()
        .iter()
        .map(|f| face_index.get(&canonical_cycle(&f.iter().map(|&v| perm[v]).collect::<Vec<_>>())).copied())
        .collect::<Option<_>>()?;
    let edge_map: Vec<usize> = complex
        .edges()
        .iter()
        .map(|&[a, b]| {
            let (x, y) = (perm[a], perm[b]);
            edge_index.get(&[x.min(y), x.max(y)]).copied()
        })
        .collect::<Option<_>>()?;
    complex
        .flags()
        .iter()
        .map(|f| flag_index.get(&(perm[f.vertex], edge_map[f.edge], face_map[f.face])).copied())
        .collect()
}

/// Symmetries of a polyhedron as elements of an ambient point group.
#[derive(Clone, Debug)]
pub struct Symmetry {
    ambient: &'static PointGroup,
    elements: Vec<usize>,
    vertex_perms: Vec<Vec<usize>>,
    flag_perms: Vec<Vec<usize>>,
}

impl Symmetry {
    pub fn ambient(&self) -> &'static PointGroup {
        self.ambient
    }

    /// Indices into the ambient group.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn isometry(&self, k: usize) -> &Isometry {
        self.ambient.element(self.elements[k])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_proper(&self, k: usize) -> bool {
        self.ambient.is_proper(self.elements[k])
    }

    pub fn rotation_order(&self) -> usize {
        (0..self.order()).filter(|&k| self.is_proper(k)).count()
    }

    pub fn vertex_permutation(&self, k: usize) -> &[usize] {
        &self.vertex_perms[k]
    }

    pub fn flag_permutation(&self, k: usize) -> &[usize] {
        &self.flag_perms[k]
    }

    /// The symmetry group is the whole ambient group.
    pub fn is_full_ambient(&self) -> bool {
        self.order() == self.ambient.order()
    }
}

/// Full point group of the base solid.
pub fn ambient_kind(frame: &Frame) -> PlatonicKind {
    frame.solid().kind().group_kind()
}

fn collect_symmetry(
    complex: &FlagComplex,
    ambient: &'static PointGroup,
    perm_of: impl Fn(&Isometry) -> Option<Vec<usize>>,
) -> Symmetry {
    let mut elements = Vec::new();
    let mut vertex_perms = Vec::new();
    let mut flag_perms = Vec::new();
    for (i, g) in ambient.elements().iter().enumerate() {
        let Some(perm) = perm_of(g) else { continue };
        if let Some(flags) = induced_flag_permutation(complex, &perm) {
            elements.push(i);
            vertex_perms.push(perm);
            flag_perms.push(flags);
        }
    }
    Symmetry { ambient, elements, vertex_perms, flag_perms }
}

/// Symmetry group at generic orbit ratio.
pub fn symmetry_group(p: &GeometricPolyhedron) -> Symmetry {
    let frame = p.frame();
    let ambient = PointGroup::shared(ambient_kind(frame));
    collect_symmetry(p.complex(), ambient, |g| label_permutation(frame, g))
}

/// Symmetry group at a concrete orbit ratio, found from coordinates.
///
/// Tetrahedral configurations are searched in `[3,4]`, so that extra
/// symmetry appearing at special ratios (two opposed tetrahedra of equal
/// size form a cube) is detected.
pub fn symmetry_group_at(p: &GeometricPolyhedron, lambda: &FieldElement) -> Symmetry {
    let kind = match ambient_kind(p.frame()) {
        PlatonicKind::Tetrahedral => PlatonicKind::Octahedral,
        k => k,
    };
    let points = p.positions(lambda);
    collect_symmetry(p.complex(), PointGroup::shared(kind), |g| point_permutation(g, &points))
}

/// Number of orbits of the permutation group generated by `perms` on
/// `0..n`.
pub fn orbit_count<'a>(n: usize, perms: impl IntoIterator<Item = &'a [usize]>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for perm in perms {
        for (x, &y) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

/// Orbit counts under a set of symmetries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCounts {
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

fn orbit_counts(complex: &FlagComplex, sym: &Symmetry, keep: impl Fn(usize) -> bool) -> OrbitCounts {
    let chosen: Vec<usize> = (0..sym.order()).filter(|&k| keep(k)).collect();
    let flags = orbit_count(complex.flag_count(), chosen.iter().map(|&k| sym.flag_permutation(k)));
    // Vertex, edge and face maps read off the flag maps.
    let project = |part: fn(&crate::flagmap::Flag) -> usize, size: usize| -> Vec<Vec<usize>> {
        chosen
            .iter()
            .map(|&k| {
                let fp = sym.flag_permutation(k);
                let mut m = vec![0; size];
                for (x, f) in complex.flags().iter().enumerate() {
                    m[part(f)] = part(&complex.flags()[fp[x]]);
                }
                m
            })
            .collect()
    };
    let (f0, f1, f2) = complex.face_vector();
    let v = project(|f| f.vertex, f0);
    let e = project(|f| f.edge, f1);
    let fc = project(|f| f.face, f2);
    OrbitCounts {
        flags,
        vertices: orbit_count(f0, v.iter().map(Vec::as_slice)),
        edges: orbit_count(f1, e.iter().map(Vec::as_slice)),
        faces: orbit_count(f2, fc.iter().map(Vec::as_slice)),
    }
}

/// Summary of `G(P)`, `G⁺(P)` and `Γ(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    /// Coxeter symbol of the ambient group.
    pub ambient: String,
    pub group_order: usize,
    pub rotation_order: usize,
    pub automorphism_order: usize,
    /// `|Γ(P)| / |G(P)|` when the quotient is exact.
    pub index: Option<usize>,
    pub full_platonic: bool,
    pub under_group: OrbitCounts,
    pub under_rotations: OrbitCounts,
}

pub fn symmetry_report(p: &GeometricPolyhedron, sym: &Symmetry) -> SymmetryReport {
    let complex = p.complex();
    let aut = complex.automorphism_group().len();
    let g = sym.order();
    SymmetryReport {
        ambient: sym.ambient().kind().coxeter_symbol().to_string(),
        group_order: g,
        rotation_order: sym.rotation_order(),
        automorphism_order: aut,
        index: (g > 0 && aut.is_multiple_of(g)).then(|| aut / g),
        full_platonic: sym.is_full_ambient(),
        under_group: orbit_counts(complex, sym, |_| true),
        under_rotations: orbit_counts(complex, sym, |k| sym.is_proper(k)),
    }
}

/// Structure of the stabilizer of one face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceStabilizer {
    pub face: usize,
    pub p: usize,
    pub order: usize,
    pub rotation_order: usize,
    pub reflections: usize,
    /// `G_F⁺` contains an element of order `|G_F⁺|`.
    pub rotations_cyclic: bool,
    /// Every mirror fixes two opposite vertices of the face.
    pub mirrors_through_vertices: bool,
}

impl FaceStabilizer {
    /// `G_F ≅ D_{p/2}` realised by `p/2` mirrors through opposite vertices,
    /// and `G_F⁺ ≅ C_{p/2}`.
    pub fn is_expected(&self) -> bool {
        let half = self.p / 2;
        self.p.is_multiple_of(2)
            && self.order == self.p
            && self.rotation_order == half
            && self.reflections == half
            && self.rotations_cyclic
            && self.mirrors_through_vertices
    }
}

pub fn face_stabilizer(p: &GeometricPolyhedron, sym: &Symmetry, face: usize) -> FaceStabilizer {
    let cycle = &p.faces()[face];
    let key = canonical_cycle(cycle);
    let len = cycle.len();
    let mut order = 0;
    let mut rotations = Vec::new();
    let mut reflections = 0;
    let mut mirrors_ok = true;
    for k in 0..sym.order() {
        let perm = sym.vertex_permutation(k);
        let image: Vec<usize> = cycle.iter().map(|&v| perm[v]).collect();
        if canonical_cycle(&image) != key {
            continue;
        }
        order += 1;
        let g = sym.isometry(k);
        if sym.is_proper(k) {
            rotations.push(g);
            continue;
        }
        if g.is_plane_reflection() {
            reflections += 1;
            let fixed: Vec<usize> = (0..len).filter(|&i| perm[cycle[i]] == cycle[i]).collect();
            let through_vertices = fixed.len() == 2 && fixed[1] - fixed[0] == len / 2;
            let flips_edge = (0..len).any(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % len]);
                perm[a] == b && perm[b] == a
            });
            mirrors_ok &= through_vertices && !flips_edge;
        }
    }
    let rotation_order = rotations.len();
    let rotations_cyclic = rotations.iter().any(|g| g.order(rotation_order.max(1)) == Some(rotation_order));
    FaceStabilizer {
        face,
        p: len,
        order,
        rotation_order,
        reflections,
        rotations_cyclic,
        mirrors_through_vertices: mirrors_ok,
    }
}

/// Stabilizer of one representative from each face orbit under `G(P)`.
pub fn face_stabilizer_check(p: &GeometricPolyhedron, sym: &Symmetry) -> Result<Vec<FaceStabilizer>, FaceStabilizer> {
    let faces = p.faces().len();
    let mut seen = vec![false; faces];
    let keys: HashMap<Vec<usize>, usize> = p.faces().iter().enumerate().map(|(i, f)| (canonical_cycle(f), i)).collect();
    let mut out = Vec::new();
    for f in 0..faces {
        if seen[f] {
            continue;
        }
        for k in 0..sym.order() {
            let perm = sym.vertex_permutation(k);
            let image: Vec<usize> = p.faces()[f].iter().map(|&v| perm[v]).collect();
            if let Some(&j) = keys.get(&canonical_cycle(&image)) {
                seen[j] = true;
            }
        }
        let stab = face_stabilizer(p, sym, f);
        if !stab.is_expected() {
            return Err(stab);
        }
        out.push(stab);
    }
    Ok(out)
}

/// First edge whose endpoints lie on opposite rays from the centre.
pub fn find_antipodal_edge(points: &[Vec3], edges: &[[usize; 2]]) -> Option<[usize; 2]> {
    edges.iter().copied().find(|&[a, b]| points[a].opposite_direction(&points[b]))
}

/// No edge joins vertices collinear with the centre. Uses the projected
/// directions, which do not depend on the (positive) orbit ratio.
pub fn no_antipodal_edges(p: &GeometricPolyhedron) -> Result<(), [usize; 2]> {
    let frame = p.frame();
    let dirs: Vec<Vec3> = (0..frame.vertex_count()).map(|l| frame.direction(l).clone()).collect();
    match find_antipodal_edge(&dirs, p.complex().edges()) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// For every vertex, `σ2²` (and `σ2` itself when `q` is odd) is induced by
/// a symmetry; `σ2` must then be a rotation. Returns the first failing
/// vertex.
pub fn vertex_rotation_check(p: &GeometricPolyhedron, sym: &Symmetry) -> Result<(), usize> {
    let c = p.complex();
    let perms: HashMap<&[usize], usize> = (0..sym.order()).map(|k| (sym.flag_permutation(k), k)).collect();
    let q = c.schlafli().q;
    let (r1, r2) = (c.involution(1), c.involution(2));
    let mut done = HashSet::new();
    for (x, flag) in c.flags().iter().enumerate() {
        if !done.insert(flag.vertex) {
            continue;
        }
        let once = r2[r1[x]];
        let twice = r2[r1[once]];
        let sq = c.automorphism_sending(x, twice).ok_or(flag.vertex)?;
        if !perms.contains_key(sq.as_slice()) {
            return Err(flag.vertex);
        }
        if q % 2 == 1 {
            let s2 = c.automorphism_sending(x, once).ok_or(flag.vertex)?;
            match perms.get(s2.as_slice()) {
                Some(&k) if sym.is_proper(k) => {}
                _ => return Err(flag.vertex),
            }
        }
    }
    Ok(())
}

/// The Petrie-dual on the same labelled vertices, when it is a polyhedron.
pub fn petrie_dual_polyhedron(p: &GeometricPolyhedron) -> Option<GeometricPolyhedron> {
    let dual = p.complex().petrie_dual().ok()?;
    Some(GeometricPolyhedron::new(p.frame().clone(), None, dual))
}

/// `G(P)` equals `G` of the Petrie-dual, as subsets of the ambient group.
/// `None` when the Petrie-dual is not a polyhedron.
pub fn petrie_symmetry_preserved(p: &GeometricPolyhedron, sym: &Symmetry) -> Option<bool> {
    let dual = petrie_dual_polyhedron(p)?;
    let other = symmetry_group(&dual);
    Some(other.elements() == sym.elements())
}

/// A ratio that is neither 0, 1 nor a small rational, used to sample the
/// generic case with coordinates.
pub fn sample_generic_lambda() -> FieldElement {
    FieldElement::from_ratios(7, 5, 1, 3)
}

/// The stabilizer in O(3) of the two-orbit vertex set at a generic ratio
/// coincides with the ambient Platonic group.
pub fn ambient_is_full_stabilizer(frame: &Frame) -> bool {
    let points = frame.positions(&sample_generic_lambda());
    let stab = orthogonal_stabilizer(&points);
    let ambient = PointGroup::shared(ambient_kind(frame));
    stab.len() == ambient.order() && stab.iter().all(|g| ambient.contains(g))
}

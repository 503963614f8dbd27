//! Abstract polyhedra as flag complexes.
//!
//! A complex is built from a vertex count and a list of face cycles. Each
//! flag is a mutually incident (vertex, edge, face) triple and the three
//! involutions `r0`, `r1`, `r2` change the vertex, the edge or the face of a
//! flag while keeping the other two. Everything else (automorphisms,
//! Schläfli data, Petrie-duals, isomorphism) is computed from these three
//! permutations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Canonical form of a cyclic sequence: lexicographic minimum over all
/// rotations of the cycle and of its reversal.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
    for seq in [cycle, &reversed[..]] {
        for start in 0..n {
            let cand: Vec<usize> = (0..n).map(|k| seq[(start + k) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Why a face list does not describe a polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face {face} has fewer than three vertices")]
    FaceTooShort { face: usize },
    #[error("face {face} refers to vertex {vertex}, out of range")]
    VertexOutOfRange { face: usize, vertex: usize },
    #[error("face {face} visits vertex {vertex} more than once")]
    RepeatedVertex { face: usize, vertex: usize },
    #[error("not connected: {witness}")]
    Disconnected { witness: String },
    #[error("edge {edge:?} lies in {faces} faces")]
    EdgeDegree { edge: [usize; 2], faces: usize },
    #[error("vertex figure at {vertex} is not a single cycle (cycle lengths {cycles:?})")]
    VertexFigure { vertex: usize, cycles: Vec<usize> },
    #[error("diamond condition fails at flag {flag}")]
    Diamond { flag: usize },
    #[error("flags are not strongly connected (orbit of flag 0 has {reached} of {total})")]
    FlagDisconnected { reached: usize, total: usize },
}

/// Schläfli type `{p,q}_r` together with counts and topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchlafliData {
    pub p: usize,
    pub q: usize,
    /// Length of the Petrie polygons.
    pub petrie: usize,
    pub face_vector: (usize, usize, usize),
    pub orientable: bool,
    /// Orientable genus, or the number of cross-caps when non-orientable.
    pub genus: usize,
}

impl SchlafliData {
    pub fn euler_characteristic(&self) -> i64 {
        let (f0, f1, f2) = self.face_vector;
        f0 as i64 - f1 as i64 + f2 as i64
    }

    /// `{p,q}_r`.
    pub fn type_symbol(&self) -> String {
        format!("{{{},{}}}_{}", self.p, self.q, self.petrie)
    }
}

impl fmt::Display for SchlafliData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (f0, f1, f2) = self.face_vector;
        write!(f, "{} ({f0},{f1},{f2}) ", self.type_symbol())?;
        if self.orientable {
            write!(f, "orientable genus {}", self.genus)
        } else {
            write!(f, "non-orientable genus {}", self.genus)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    pub vertex: usize,
    pub edge: usize,
    pub face: usize,
}

/// A validated finite abstract polyhedron.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    vertex_count: usize,
    faces: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
    flags: Vec<Flag>,
    r: [Vec<usize>; 3],
}

/// Serialized form: `{"vertices": n, "faces": [[v, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub faces: Vec<Vec<usize>>,
}

fn edge_key(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

/// Connected components of an undirected graph given by adjacency lists.
fn component_count(adj: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let mut comp = vec![usize::MAX; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (count, comp)
}

impl FlagComplex {
    /// Builds and validates a polyhedron from face cycles.
    ///
    /// Checks, in order: face well-formedness; connectivity of the edge
    /// graph; no edge in more than two faces; when every edge lies in exactly
    /// two faces, every vertex figure a single cycle of length at least
    /// three; connectivity of the face-adjacency graph; every edge in exactly
    /// two faces; the diamond condition and flag-connectedness. Vertex
    /// figures are only unions of cycles once edges have degree two, which
    /// is why that check is conditional and comes early: a split figure is a
    /// local degeneracy even when it also splits the faces apart.
    pub fn from_faces(vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<FlagComplex, ComplexError> {
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(ComplexError::FaceTooShort { face: fi });
            }
            let mut seen = HashSet::new();
            for &v in face {
                if v >= vertex_count {
                    return Err(ComplexError::VertexOutOfRange { face: fi, vertex: v });
                }
                if !seen.insert(v) {
                    return Err(ComplexError::RepeatedVertex { face: fi, vertex: v });
                }
            }
        }

        let mut edge_ids: HashMap<[usize; 2], usize> = HashMap::new();
        let mut edges = Vec::new();
        // (face, position) occurrences of each edge.
        let mut occurrences: Vec<Vec<(usize, usize)>> = Vec::new();
        for (fi, face) in faces.iter().enumerate() {
            let p = face.len();
            for i in 0..p {
                let key = edge_key(face[i], face[(i + 1) % p]);
                let id = *edge_ids.entry(key).or_insert_with(|| {
                    edges.push(key);
                    occurrences.push(Vec::new());
                    edges.len() - 1
                });
                occurrences[id].push((fi, i));
            }
        }

        // Edge graph over all vertices.
        let mut vadj = vec![Vec::new(); vertex_count];
        for &[a, b] in &edges {
            vadj[a].push(b);
            vadj[b].push(a);
        }
        let (vcomp, comp) = component_count(&vadj);
        if vcomp != 1 {
            let witness = (0..vertex_count).find(|&v| comp[v] != comp[0]).unwrap_or(0);
            return Err(ComplexError::Disconnected {
                witness: format!("edge graph has {vcomp} components; vertex {witness} unreachable from vertex 0"),
            });
        }
        for (id, occ) in occurrences.iter().enumerate() {
            if occ.len() > 2 {
                return Err(ComplexError::EdgeDegree { edge: edges[id], faces: occ.len() });
            }
        }
        let all_double = occurrences.iter().all(|occ| occ.len() == 2);

        // Vertex figures: nodes are the edges at v, each face through v links
        // its two edges at v.
        let mut figure: Vec<HashMap<usize, Vec<usize>>> = vec![HashMap::new(); vertex_count];
        for face in &faces {
            let p = face.len();
            for i in 0..p {
                let v = face[i];
                let e_in = edge_ids[&edge_key(face[(i + p - 1) % p], v)];
                let e_out = edge_ids[&edge_key(v, face[(i + 1) % p])];
                figure[v].entry(e_in).or_default().push(e_out);
                figure[v].entry(e_out).or_default().push(e_in);
            }
        }
        for (v, fig) in figure.iter().enumerate().filter(|_| all_double) {
            let cycles = figure_cycles(fig);
            if cycles.len() != 1 || cycles[0] < 3 {
                return Err(ComplexError::VertexFigure { vertex: v, cycles });
            }
        }

        // Face-adjacency graph.
        let mut fadj = vec![Vec::new(); faces.len()];
        for occ in &occurrences {
            for &(f, _) in occ {
                for &(g, _) in occ {
                    if f != g {
                        fadj[f].push(g);
                    }
                }
            }
        }
        let (fcomp, comp) = component_count(&fadj);
        if fcomp != 1 {
            let witness = (0..faces.len()).find(|&f| comp[f] != comp[0]).unwrap_or(0);
            return Err(ComplexError::Disconnected {
                witness: format!("face-adjacency graph has {fcomp} components; face {witness} unreachable from face 0"),
            });
        }

        for (id, occ) in occurrences.iter().enumerate() {
            if occ.len() != 2 {
                return Err(ComplexError::EdgeDegree { edge: edges[id], faces: occ.len() });
            }
        }

        // Flags: face f, position i, side s -> base[f] + 2i + s.
        let mut base = Vec::with_capacity(faces.len());
        let mut total = 0;
        for face in &faces {
            base.push(total);
            total += 2 * face.len();
        }
        let mut flags = Vec::with_capacity(total);
        for (fi, face) in faces.iter().enumerate() {
            let p = face.len();
            for i in 0..p {
                let e = edge_ids[&edge_key(face[i], face[(i + 1) % p])];
                flags.push(Flag { vertex: face[i], edge: e, face: fi });
                flags.push(Flag { vertex: face[(i + 1) % p], edge: e, face: fi });
            }
        }
        let mut r0 = vec![0; total];
        let mut r1 = vec![0; total];
        let mut r2 = vec![0; total];
        for (fi, face) in faces.iter().enumerate() {
            let p = face.len();
            for i in 0..p {
                let x0 = base[fi] + 2 * i;
                let x1 = x0 + 1;
                r0[x0] = x1;
                r0[x1] = x0;
                r1[x0] = base[fi] + 2 * ((i + p - 1) % p) + 1;
                r1[x1] = base[fi] + 2 * ((i + 1) % p);
            }
        }
        for (id, occ) in occurrences.iter().enumerate() {
            let [(f, i), (g, j)] = [occ[0], occ[1]];
            for s in 0..2 {
                let x = base[f] + 2 * i + s;
                let v = flags[x].vertex;
                let y = if flags[base[g] + 2 * j].vertex == v { base[g] + 2 * j } else { base[g] + 2 * j + 1 };
                debug_assert_eq!(flags[y].edge, id);
                r2[x] = y;
                r2[y] = x;
            }
        }

        let complex = FlagComplex { vertex_count, faces, edges, flags, r: [r0, r1, r2] };
        complex.check_flag_structure()?;
        Ok(complex)
    }

    fn check_flag_structure(&self) -> Result<(), ComplexError> {
        let n = self.flags.len();
        for x in 0..n {
            for r in &self.r {
                if r[x] == x || r[r[x]] != x {
                    return Err(ComplexError::Diamond { flag: x });
                }
            }
            let y = self.r[0][self.r[2][x]];
            if y == x || self.r[0][self.r[2][y]] != x {
                return Err(ComplexError::Diamond { flag: x });
            }
        }
        let reached = self.orbit_of(0, &[0, 1, 2]).len();
        if reached != n {
            return Err(ComplexError::FlagDisconnected { reached, total: n });
        }
        Ok(())
    }

    /// Flags reachable from `start` using the listed involutions.
    pub fn orbit_of(&self, start: usize, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.flags.len()];
        seen[start] = true;
        let mut out = vec![start];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            k += 1;
            for &g in gens {
                let y = self.r[g][x];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    /// The involution `r_i` as a permutation of flag indices.
    pub fn involution(&self, i: usize) -> &[usize] {
        &self.r[i]
    }

    pub fn face_vector(&self) -> (usize, usize, usize) {
        (self.vertex_count, self.edges.len(), self.faces.len())
    }

    /// Index of the flag with the given incidences, if it exists.
    pub fn find_flag(&self, vertex: usize, edge: usize, face: usize) -> Option<usize> {
        let p = self.faces[face].len();
        let base: usize = self.faces[..face].iter().map(|f| 2 * f.len()).sum();
        (base..base + 2 * p).find(|&x| self.flags[x].vertex == vertex && self.flags[x].edge == edge)
    }

    pub fn edge_index(&self) -> HashMap<[usize; 2], usize> {
        self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { vertices: self.vertex_count, faces: self.faces.clone() }
    }

    pub fn from_json(json: &ComplexJson) -> Result<FlagComplex, ComplexError> {
        FlagComplex::from_faces(json.vertices, json.faces.clone())
    }

    /// The automorphism sending flag `base` to flag `image`, if any.
    pub fn automorphism_sending(&self, base: usize, image: usize) -> Option<Vec<usize>> {
        self.extend_map(self, base, image)
    }

    /// The flag bijection sending `base` to `image` and commuting with all
    /// three involutions, if one exists.
    fn extend_map(&self, other: &FlagComplex, base: usize, image: usize) -> Option<Vec<usize>> {
        let n = self.flags.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[base] = image;
        used[image] = true;
        let mut queue = VecDeque::from([base]);
        while let Some(x) = queue.pop_front() {
            for i in 0..3 {
                let y = self.r[i][x];
                let target = other.r[i][map[x]];
                if map[y] == usize::MAX {
                    if used[target] {
                        return None;
                    }
                    map[y] = target;
                    used[target] = true;
                    queue.push_back(y);
                } else if map[y] != target {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// All automorphisms, as flag permutations. Element 0 is the identity.
    pub fn automorphism_group(&self) -> Vec<Vec<usize>> {
        (0..self.flags.len())
            .into_par_iter()
            .filter_map(|t| self.extend_map(self, 0, t))
            .collect()
    }

    /// Flag-transitive automorphism group.
    pub fn is_regular(&self) -> bool {
        (0..self.flags.len()).into_par_iter().all(|t| self.extend_map(self, 0, t).is_some())
    }

    pub fn is_isomorphic(&self, other: &FlagComplex) -> bool {
        self.isomorphism(other).is_some()
    }

    /// A flag bijection to `other` commuting with `r0`, `r1`, `r2`.
    pub fn isomorphism(&self, other: &FlagComplex) -> Option<Vec<usize>> {
        if self.flags.len() != other.flags.len() || self.face_vector() != other.face_vector() {
            return None;
        }
        (0..other.flags.len()).into_par_iter().find_map_first(|t| self.extend_map(other, 0, t))
    }

    /// Order of the permutation obtained by composing the listed involutions
    /// (applied left to right).
    fn word_order(&self, word: &[usize]) -> usize {
        let n = self.flags.len();
        let step = |x: usize| word.iter().fold(x, |acc, &i| self.r[i][acc]);
        let mut seen = vec![false; n];
        let mut order = 1usize;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            loop {
                seen[x] = true;
                len += 1;
                x = step(x);
                if x == s {
                    break;
                }
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// Two-colouring of the flags with every `r_i` swapping colours.
    pub fn orientation(&self) -> Option<Vec<bool>> {
        let n = self.flags.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        colour[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            let c = colour[x].expect("coloured");
            for r in &self.r {
                match colour[r[x]] {
                    None => {
                        colour[r[x]] = Some(!c);
                        queue.push_back(r[x]);
                    }
                    Some(d) if d == c => return None,
                    Some(_) => {}
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }

    /// `p` and `q` are the orders of `r0 r1` and `r1 r2`; the Petrie length
    /// is the order of `r0 r1 r2`.
    pub fn schlafli(&self) -> SchlafliData {
        let (f0, f1, f2) = self.face_vector();
        let orientable = self.is_orientable();
        let chi = f0 as i64 - f1 as i64 + f2 as i64;
        let genus = if orientable { (2 - chi) / 2 } else { 2 - chi };
        SchlafliData {
            p: self.word_order(&[0, 1]),
            q: self.word_order(&[1, 2]),
            petrie: self.word_order(&[0, 1, 2]),
            face_vector: (f0, f1, f2),
            orientable,
            genus: genus.max(0) as usize,
        }
    }

    /// Vertex sequences of all Petrie polygons, each listed once.
    pub fn petrie_polygons(&self) -> Result<Vec<Vec<usize>>, PetrieError> {
        let n = self.flags.len();
        let mut visited = vec![false; n];
        let mut keys = HashSet::new();
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                visited[x] = true;
                cycle.push(self.flags[x].vertex);
                x = self.r[2][self.r[1][self.r[0][x]]];
                if x == start {
                    break;
                }
            }
            let mut seen = HashSet::new();
            if let Some(&v) = cycle.iter().find(|&&v| !seen.insert(v)) {
                return Err(PetrieError::RevisitsVertex { vertex: v, length: cycle.len() });
            }
            if keys.insert(canonical_cycle(&cycle)) {
                out.push(cycle);
            }
        }
        Ok(out)
    }

    /// Same vertices and edges, with the Petrie polygons as faces.
    pub fn petrie_dual(&self) -> Result<FlagComplex, PetrieError> {
        let polygons = self.petrie_polygons()?;
        FlagComplex::from_faces(self.vertex_count, polygons).map_err(PetrieError::Invalid)
    }
}

/// Obstructions to forming the Petrie-dual.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PetrieError {
    #[error("a Petrie polygon of length {length} revisits vertex {vertex}")]
    RevisitsVertex { vertex: usize, length: usize },
    #[error("Petrie polygons do not form a polyhedron: {0}")]
    Invalid(ComplexError),
}

/// Lengths of the cycles of a 2-regular multigraph given as adjacency lists
/// (parallel links appear twice).
fn figure_cycles(adj: &HashMap<usize, Vec<usize>>) -> Vec<usize> {
    if adj.values().any(|n| n.len() != 2) {
        // Not 2-regular: report the node degrees instead of cycle lengths.
        let mut degs: Vec<usize> = adj.values().map(Vec::len).collect();
        degs.sort_unstable();
        return degs;
    }
    // Every component of a 2-regular graph is a cycle.
    let mut nodes: Vec<usize> = adj.keys().copied().collect();
    nodes.sort_unstable();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &s in &nodes {
        if !seen.insert(s) {
            continue;
        }
        let mut stack = vec![s];
        let mut len = 0;
        while let Some(x) = stack.pop() {
            len += 1;
            for &y in &adj[&x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cube() -> FlagComplex {
        // Vertices: bit 0 = x, bit 1 = y, bit 2 = z.
        let faces = vec![
            vec![0, 1, 3, 2],
            vec![4, 6, 7, 5],
            vec![0, 4, 5, 1],
            vec![2, 3, 7, 6],
            vec![0, 2, 6, 4],
            vec![1, 5, 7, 3],
        ];
        FlagComplex::from_faces(8, faces).unwrap()
    }

    pub(crate) fn octahedron() -> FlagComplex {
        // 0,1 = ±x; 2,3 = ±y; 4,5 = ±z.
        let mut faces = Vec::new();
        for x in [0, 1] {
            for y in [2, 3] {
                for z in [4, 5] {
                    faces.push(vec![x, y, z]);
                }
            }
        }
        FlagComplex::from_faces(6, faces).unwrap()
    }

    #[test]
    fn canonical_cycles() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[3, 2, 1]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[2, 5, 1, 7]), vec![1, 5, 2, 7]);
        assert_eq!(canonical_cycle(&[2, 5, 1, 7]), canonical_cycle(&[7, 1, 5, 2]));
    }

    #[test]
    fn cube_complex() {
        let c = cube();
        assert_eq!(c.flag_count(), 48);
        assert_eq!(c.automorphism_group().len(), 48);
        assert!(c.is_regular());
        let s = c.schlafli();
        assert_eq!((s.p, s.q, s.petrie), (4, 3, 6));
        assert_eq!(s.genus, 0);
        assert!(s.orientable);
    }

    #[test]
    fn dihedron_rejected() {
        let err = FlagComplex::from_faces(3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap_err();
        assert!(matches!(err, ComplexError::VertexFigure { cycles, .. } if cycles == vec![2]));
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            FlagComplex::from_faces(3, vec![vec![0, 1]]),
            Err(ComplexError::FaceTooShort { face: 0 })
        ));
        assert!(matches!(
            FlagComplex::from_faces(4, vec![vec![0, 1, 0, 2]]),
            Err(ComplexError::RepeatedVertex { face: 0, vertex: 0 })
        ));
        // Two disjoint tetrahedra.
        let mut faces = Vec::new();
        for off in [0, 4] {
            for skip in 0..4 {
                faces.push((0..4).filter(|&i| i != skip).map(|i| i + off).collect());
            }
        }
        assert!(matches!(FlagComplex::from_faces(8, faces), Err(ComplexError::Disconnected { .. })));
        // A single triangle: connected, but every edge has one face.
        assert!(matches!(
            FlagComplex::from_faces(3, vec![vec![0, 1, 2]]),
            Err(ComplexError::EdgeDegree { faces: 1, .. })
        ));
    }

    #[test]
    fn petrie_duality() {
        let c = cube();
        let pd = c.petrie_dual().unwrap();
        assert_eq!(pd.face_vector(), (8, 12, 4));
        let s = pd.schlafli();
        assert_eq!((s.p, s.q, s.petrie), (6, 3, 4));
        assert_eq!(pd.automorphism_group().len(), 48);
        let back = pd.petrie_dual().unwrap();
        assert!(back.is_isomorphic(&c));

        let o = octahedron();
        assert!(o.petrie_dual().unwrap().petrie_dual().unwrap().is_isomorphic(&o));
        assert!(!c.is_isomorphic(&o));
    }

    #[test]
    fn relabelled_cube_is_isomorphic() {
        let c = cube();
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        let faces = c.faces().iter().map(|f| f.iter().map(|&v| perm[v]).collect()).collect();
        let d = FlagComplex::from_faces(8, faces).unwrap();
        assert!(c.is_isomorphic(&d));
    }

    #[test]
    fn asymmetric_subdivision_is_not_regular() {
        // Cube with one square split into two triangles.
        let mut faces: Vec<Vec<usize>> = cube().faces().to_vec();
        let sq = faces.remove(0);
        faces.push(vec![sq[0], sq[1], sq[2]]);
        faces.push(vec![sq[0], sq[2], sq[3]]);
        let c = FlagComplex::from_faces(8, faces).unwrap();
        assert!(!c.is_regular());
        assert!(c.automorphism_group().len() < c.flag_count());
        assert_eq!(c.flag_count() % c.automorphism_group().len(), 0);
    }

    #[test]
    fn json_round_trip() {
        let c = cube();
        let text = serde_json::to_string(&c.to_json()).unwrap();
        let back: ComplexJson = serde_json::from_str(&text).unwrap();
        let d = FlagComplex::from_json(&back).unwrap();
        assert_eq!(d.faces(), c.faces());
    }
}

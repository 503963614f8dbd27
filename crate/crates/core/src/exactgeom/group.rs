//! The full Platonic point groups `[3,3]`, `[3,4]` and `[3,5]`, generated
//! exactly by closure from seed reflections.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{FieldElement, Isometry, Vec3};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlatonicKind {
    /// `[3,3]`, full tetrahedral.
    Tetrahedral,
    /// `[3,4]`, full octahedral.
    Octahedral,
    /// `[3,5]`, full icosahedral.
    Icosahedral,
}

impl PlatonicKind {
    pub const ALL: [PlatonicKind; 3] =
        [PlatonicKind::Tetrahedral, PlatonicKind::Octahedral, PlatonicKind::Icosahedral];

    pub fn order(self) -> usize {
        match self {
            PlatonicKind::Tetrahedral => 24,
            PlatonicKind::Octahedral => 48,
            PlatonicKind::Icosahedral => 120,
        }
    }

    pub fn coxeter_symbol(self) -> &'static str {
        match self {
            PlatonicKind::Tetrahedral => "[3,3]",
            PlatonicKind::Octahedral => "[3,4]",
            PlatonicKind::Icosahedral => "[3,5]",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PlatonicKind::Tetrahedral => "tetrahedral",
            PlatonicKind::Octahedral => "octahedral",
            PlatonicKind::Icosahedral => "icosahedral",
        }
    }

    /// Generating reflections. The tetrahedral seeds fix the tetrahedron with
    /// vertices of even sign product; the icosahedral mirror is orthogonal to
    /// the edge midpoint `(1, τ², τ)` of the icosahedron `(0, ±1, ±τ)`.
    fn seeds(self) -> Vec<Isometry> {
        let swap_xy = Isometry::from_int_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        let swap_yz = Isometry::from_int_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]]);
        let flip_x = Isometry::from_int_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        match self {
            PlatonicKind::Tetrahedral => {
                let half_turn = Isometry::from_int_rows([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
                vec![swap_xy, swap_yz, half_turn]
            }
            PlatonicKind::Octahedral => vec![flip_x, swap_xy, swap_yz],
            PlatonicKind::Icosahedral => {
                let cycle = Isometry::from_int_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
                let t = FieldElement::tau();
                let n = Vec3::new(FieldElement::one(), &t * &t, t);
                vec![flip_x, cycle, Isometry::reflection(&n)]
            }
        }
    }
}

impl fmt::Display for PlatonicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.coxeter_symbol())
    }
}

/// A finite group of exact isometries, with its rotation subgroup marked.
#[derive(Clone, Debug)]
pub struct PointGroup {
    kind: PlatonicKind,
    elements: Vec<Isometry>,
    proper: Vec<bool>,
    index: HashMap<Isometry, usize>,
}

impl PointGroup {
    /// Closes the seed set under composition. Element 0 is the identity and
    /// the order is deterministic.
    pub fn generate(kind: PlatonicKind) -> Result<PointGroup, Error> {
        let seeds = kind.seeds();
        if let Some(bad) = seeds.iter().find(|m| !m.is_orthogonal()) {
            return Err(Error::Internal(format!("non-orthogonal seed {bad:?}")));
        }
        let mut elements = vec![Isometry::identity()];
        let mut index: HashMap<Isometry, usize> = HashMap::new();
        index.insert(Isometry::identity(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &seeds {
                let g = s.compose(&elements[i]);
                if index.contains_key(&g) {
                    continue;
                }
                if elements.len() == kind.order() {
                    return Err(Error::Internal(format!(
                        "closure of {kind} seeds exceeds order {}",
                        kind.order()
                    )));
                }
                index.insert(g.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(g);
            }
        }
        if elements.len() != kind.order() {
            return Err(Error::Internal(format!(
                "closure of {kind} seeds has order {} (expected {})",
                elements.len(),
                kind.order()
            )));
        }
        let proper = elements.iter().map(Isometry::is_proper).collect();
        Ok(PointGroup { kind, elements, proper, index })
    }

    /// Process-wide copy of the group, generated on first use.
    pub fn shared(kind: PlatonicKind) -> &'static PointGroup {
        static GROUPS: [OnceLock<PointGroup>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let slot = match kind {
            PlatonicKind::Tetrahedral => 0,
            PlatonicKind::Octahedral => 1,
            PlatonicKind::Icosahedral => 2,
        };
        GROUPS[slot].get_or_init(|| PointGroup::generate(kind).expect("exact seeds close to the known order"))
    }

    pub fn kind(&self) -> PlatonicKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Isometry] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Isometry {
        &self.elements[i]
    }

    pub fn is_proper(&self, i: usize) -> bool {
        self.proper[i]
    }

    pub fn position(&self, g: &Isometry) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Isometry) -> bool {
        self.index.contains_key(g)
    }

    /// Indices of the rotations (determinant +1).
    pub fn rotation_indices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.proper[i]).collect()
    }

    pub fn rotations(&self) -> impl Iterator<Item = &Isometry> {
        self.elements.iter().zip(&self.proper).filter(|(_, p)| **p).map(|(g, _)| g)
    }

    pub fn orbit(&self, p: &Vec3) -> Vec<Vec3> {
        orbit(p, self.elements.iter())
    }

    pub fn rotation_orbit(&self, p: &Vec3) -> Vec<Vec3> {
        orbit(p, self.rotations())
    }
}

/// De-duplicated orbit of `p`, in first-visit order.
pub fn orbit<'a>(p: &Vec3, group: impl IntoIterator<Item = &'a Isometry>) -> Vec<Vec3> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in group {
        let q = g.apply(p);
        if seen.insert(q.clone()) {
            out.push(q);
        }
    }
    out
}

/// Every isometry of O(3) fixing the origin and mapping the finite point set
/// onto itself, found by brute force over images of a spanning triple.
///
/// This does not assume any ambient group; it is used to confirm that the
/// Platonic groups are the full stabilizers of the configurations.
pub fn orthogonal_stabilizer(points: &[Vec3]) -> Vec<Isometry> {
    let set: HashSet<&Vec3> = points.iter().collect();
    let Some((b0, b1, b2)) = spanning_triple(points) else {
        return Vec::new();
    };
    let basis = [&points[b0], &points[b1], &points[b2]];
    let gram = |u: &Vec3, v: &Vec3| u.dot(v);
    // B^{-1} via the adjugate: rows of the inverse are (b1×b2, b2×b0, b0×b1)/det,
    // read as columns.
    let det = Vec3::triple(basis[0], basis[1], basis[2]);
    let det_inv = det.inv().expect("spanning triple");
    let adj = [
        basis[1].cross(basis[2]).scale(&det_inv),
        basis[2].cross(basis[0]).scale(&det_inv),
        basis[0].cross(basis[1]).scale(&det_inv),
    ];
    let mut found = Vec::new();
    for x0 in points.iter().filter(|x| x.norm2() == basis[0].norm2()) {
        for x1 in points.iter().filter(|x| gram(x, x0) == gram(basis[1], basis[0]) && x.norm2() == basis[1].norm2()) {
            for x2 in points.iter().filter(|x| {
                x.norm2() == basis[2].norm2()
                    && gram(x, x0) == gram(basis[2], basis[0])
                    && gram(x, x1) == gram(basis[2], basis[1])
            }) {
                // M = X · B^{-1}, where B^{-1} has the adjugate vectors as rows.
                let images = [x0, x1, x2];
                let mut rows: [[FieldElement; 3]; 3] = Default::default();
                for (i, row) in rows.iter_mut().enumerate() {
                    for (j, cell) in row.iter_mut().enumerate() {
                        let mut acc = FieldElement::zero();
                        for k in 0..3 {
                            acc += &(&images[k].0[i] * &adj[k].0[j]);
                        }
                        *cell = acc;
                    }
                }
                let m = Isometry::from_rows(rows);
                if m.is_orthogonal() && points.iter().all(|p| set.contains(&m.apply(p))) {
                    found.push(m);
                }
            }
        }
    }
    found
}

fn spanning_triple(points: &[Vec3]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            let c = points[i].cross(&points[j]);
            if c.is_zero() {
                continue;
            }
            if let Some(k) = (j + 1..n).find(|&k| !c.dot(&points[k]).is_zero()) {
                return Some((i, j, k));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for kind in PlatonicKind::ALL {
            let g = PointGroup::generate(kind).unwrap();
            assert_eq!(g.order(), kind.order());
            assert_eq!(g.rotation_indices().len() * 2, kind.order());
            assert!(g.elements().iter().all(Isometry::is_orthogonal));
            assert!(g.element(0).is_identity());
        }
    }

    #[test]
    fn central_inversion_membership() {
        let minus_i = Isometry::central_inversion();
        let tet = PointGroup::generate(PlatonicKind::Tetrahedral).unwrap();
        let oct = PointGroup::generate(PlatonicKind::Octahedral).unwrap();
        let ico = PointGroup::generate(PlatonicKind::Icosahedral).unwrap();
        assert!(!tet.contains(&minus_i));
        assert!(oct.contains(&minus_i));
        assert!(ico.contains(&minus_i));
        // −I is the product of the three coordinate-plane reflections.
        let fx = Isometry::from_int_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let fy = Isometry::from_int_rows([[1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        let fz = Isometry::from_int_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]]);
        assert_eq!(fx.compose(&fy).compose(&fz), minus_i);
        assert!(oct.contains(&fx) && oct.contains(&fy) && oct.contains(&fz));
    }

    #[test]
    fn closure_under_composition() {
        let g = PointGroup::generate(PlatonicKind::Icosahedral).unwrap();
        for a in g.elements().iter().step_by(7) {
            assert!(g.contains(&a.inverse()));
            for b in g.elements().iter().step_by(11) {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn orbits() {
        let g = PointGroup::generate(PlatonicKind::Icosahedral).unwrap();
        let t = FieldElement::tau();
        let v = Vec3::new(FieldElement::zero(), FieldElement::one(), t);
        assert_eq!(g.orbit(&v).len(), 12);
        assert_eq!(g.orbit(&Vec3::zero()), vec![Vec3::zero()]);
        let tet = PointGroup::generate(PlatonicKind::Tetrahedral).unwrap();
        // Generic point of the fundamental cone x > y > z > 0 region.
        assert_eq!(tet.orbit(&Vec3::from_ints(5, 3, 1)).len(), 24);
        assert_eq!(tet.rotation_orbit(&Vec3::from_ints(5, 3, 1)).len(), 12);
    }

    #[test]
    fn cube_stabilizer_in_o3() {
        let cube: Vec<Vec3> = [-1, 1]
            .iter()
            .flat_map(|&x| [-1, 1].iter().flat_map(move |&y| [-1, 1].iter().map(move |&z| Vec3::from_ints(x, y, z))))
            .collect();
        let stab = orthogonal_stabilizer(&cube);
        assert_eq!(stab.len(), 48);
        let oct = PointGroup::generate(PlatonicKind::Octahedral).unwrap();
        assert!(stab.iter().all(|m| oct.contains(m)));
    }
}

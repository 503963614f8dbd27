//! Points and linear isometries over Q(√5).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::FieldElement;

/// A point (or vector) of Euclidean 3-space with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vec3(pub [FieldElement; 3]);

impl Vec3 {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Self {
        Vec3([x, y, z])
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Vec3::default()
    }

    pub fn x(&self) -> &FieldElement {
        &self.0[0]
    }

    pub fn y(&self) -> &FieldElement {
        &self.0[1]
    }

    pub fn z(&self) -> &FieldElement {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    pub fn dot(&self, other: &Vec3) -> FieldElement {
        let [a, b, c] = &self.0;
        let [x, y, z] = &other.0;
        &(&(a * x) + &(b * y)) + &(c * z)
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        let [a, b, c] = &self.0;
        let [x, y, z] = &other.0;
        Vec3::new(&(b * z) - &(c * y), &(c * x) - &(a * z), &(a * y) - &(b * x))
    }

    pub fn norm2(&self) -> FieldElement {
        self.dot(self)
    }

    pub fn scale(&self, k: &FieldElement) -> Vec3 {
        Vec3(self.0.clone().map(|c| &c * k))
    }

    /// `det[a; b; c]`, the signed volume `a · (b × c)`.
    pub fn triple(a: &Vec3, b: &Vec3, c: &Vec3) -> FieldElement {
        a.dot(&b.cross(c))
    }

    /// Same ray from the origin (both non-zero).
    pub fn same_direction(&self, other: &Vec3) -> bool {
        !self.is_zero() && !other.is_zero() && self.cross(other).is_zero() && self.dot(other).is_positive()
    }

    /// Opposite rays from the origin.
    pub fn opposite_direction(&self, other: &Vec3) -> bool {
        !self.is_zero() && !other.is_zero() && self.cross(other).is_zero() && self.dot(other).is_negative()
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.0[0].to_f64(), self.0[1].to_f64(), self.0[2].to_f64()]
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, rhs: &Vec3) -> Vec3 {
        Vec3::new(&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1], &self.0[2] + &rhs.0[2])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: &Vec3) -> Vec3 {
        Vec3::new(&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1], &self.0[2] - &rhs.0[2])
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3(self.0.clone().map(|c| -c))
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A linear isometry of 3-space, stored as an exact 3×3 matrix acting on
/// column vectors. Improper isometries have determinant −1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    rows: [[FieldElement; 3]; 3],
}

impl Isometry {
    /// Builds a matrix from rows without checking orthogonality.
    pub fn from_rows(rows: [[FieldElement; 3]; 3]) -> Self {
        Isometry { rows }
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Self {
        Isometry { rows: rows.map(|r| r.map(FieldElement::from_int)) }
    }

    pub fn identity() -> Self {
        Isometry::from_int_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// The central inversion `−I`.
    pub fn central_inversion() -> Self {
        Isometry::from_int_rows([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    }

    /// Reflection in the plane through the origin with normal `n`.
    pub fn reflection(n: &Vec3) -> Self {
        let nn = n.norm2();
        let two_over = (&FieldElement::from_int(2) * &nn.inv().expect("non-zero normal")).clone();
        let mut rows: [[FieldElement; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let delta = if i == j { FieldElement::one() } else { FieldElement::zero() };
                *cell = &delta - &(&(&n.0[i] * &n.0[j]) * &two_over);
            }
        }
        Isometry { rows }
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.rows[i][j]
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let r = &self.rows;
        Vec3::new(
            Vec3(r[0].clone()).dot(v),
            Vec3(r[1].clone()).dot(v),
            Vec3(r[2].clone()).dot(v),
        )
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Isometry) -> Isometry {
        let mut rows: [[FieldElement; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = FieldElement::zero();
                for k in 0..3 {
                    acc += &(&self.rows[i][k] * &rhs.rows[k][j]);
                }
                *cell = acc;
            }
        }
        Isometry { rows }
    }

    pub fn transpose(&self) -> Isometry {
        let r = &self.rows;
        let mut rows: [[FieldElement; 3]; 3] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = r[j][i].clone();
            }
        }
        Isometry { rows }
    }

    /// Inverse of an orthogonal matrix.
    pub fn inverse(&self) -> Isometry {
        self.transpose()
    }

    pub fn determinant(&self) -> FieldElement {
        Vec3::triple(
            &Vec3(self.rows[0].clone()),
            &Vec3(self.rows[1].clone()),
            &Vec3(self.rows[2].clone()),
        )
    }

    pub fn trace(&self) -> FieldElement {
        &(&self.rows[0][0] + &self.rows[1][1]) + &self.rows[2][2]
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().compose(self) == Isometry::identity()
    }

    pub fn is_proper(&self) -> bool {
        self.determinant().is_positive()
    }

    pub fn is_identity(&self) -> bool {
        *self == Isometry::identity()
    }

    /// Order in the orthogonal group, or `None` beyond `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut power = self.clone();
        for k in 1..=limit {
            if power.is_identity() {
                return Some(k);
            }
            power = power.compose(self);
        }
        None
    }

    /// A plane reflection: involutive, improper, trace 1.
    pub fn is_plane_reflection(&self) -> bool {
        !self.is_proper() && self.trace().is_one() && self.compose(self).is_identity()
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "[[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]]",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]
        )
    }
}

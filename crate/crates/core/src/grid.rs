//! Geometry of the square grid `G(Z²)`: nodes, parity, distance, diagonals,
//! and the automorphism group of the grid.
//!
//! Coordinates follow the reading order of printed grids: `x` grows to the
//! right, `y` grows downward, and the first printed row is `y = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A node of `Z²`, or a displacement between two nodes.
/// Serialized as `[x, y]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Vec2 {
    pub x: i64,
    pub y: i64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Vec2 { x, y }
    }

    /// `x + y`, the quantity whose parity decides the node's parity.
    pub fn coordinate_sum(self) -> i64 {
        self.x + self.y
    }

    pub fn l1_norm(self) -> i64 {
        self.x.abs() + self.y.abs()
    }
}

impl From<[i64; 2]> for Vec2 {
    fn from([x, y]: [i64; 2]) -> Self {
        Vec2 { x, y }
    }
}

impl From<Vec2> for [i64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<Vec2> for i64 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self * rhs.x, self * rhs.y)
    }
}

/// Unit steps to the four neighbors, in the fixed order E, W, S, N.
pub const NEIGHBOR_STEPS: [Vec2; 4] = [
    Vec2::new(1, 0),
    Vec2::new(-1, 0),
    Vec2::new(0, 1),
    Vec2::new(0, -1),
];

/// The four neighbors of `v` in the order E, W, S, N.
pub fn neighbors(v: Vec2) -> [Vec2; 4] {
    NEIGHBOR_STEPS.map(|d| v + d)
}

pub fn l1_distance(u: Vec2, v: Vec2) -> i64 {
    (u - v).l1_norm()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

pub fn parity(v: Vec2) -> Parity {
    if v.coordinate_sum().rem_euclid(2) == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Orientation of a diagonal. A right diagonal is `{v + i(1,1)}`, a left
/// diagonal is `{v + i(1,-1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Right,
    Left,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::Right, Orientation::Left];

    /// Step between consecutive nodes of a diagonal of this orientation.
    pub fn generator(self) -> Vec2 {
        match self {
            Orientation::Right => Vec2::new(1, 1),
            Orientation::Left => Vec2::new(1, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Right => "right",
            Orientation::Left => "left",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Index of the diagonal through `v`: `x - y` for right diagonals (constant
/// along `(1,1)`), `x + y` for left diagonals (constant along `(1,-1)`).
pub fn diagonal_index(v: Vec2, o: Orientation) -> i64 {
    match o {
        Orientation::Right => v.x - v.y,
        Orientation::Left => v.x + v.y,
    }
}

/// An element of the point group D4: a signed permutation matrix acting on
/// column vectors, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointOp {
    m: [[i64; 2]; 2],
}

impl PointOp {
    pub const IDENTITY: PointOp = PointOp { m: [[1, 0], [0, 1]] };
    /// `(x, y) -> (-y, x)`.
    pub const ROT90: PointOp = PointOp { m: [[0, -1], [1, 0]] };
    pub const ROT180: PointOp = PointOp { m: [[-1, 0], [0, -1]] };
    /// `(x, y) -> (y, -x)`.
    pub const ROT270: PointOp = PointOp { m: [[0, 1], [-1, 0]] };
    /// `(x, y) -> (-x, y)`.
    pub const FLIP_X: PointOp = PointOp { m: [[-1, 0], [0, 1]] };
    /// `(x, y) -> (x, -y)`.
    pub const FLIP_Y: PointOp = PointOp { m: [[1, 0], [0, -1]] };
    /// `(x, y) -> (y, x)`.
    pub const TRANSPOSE: PointOp = PointOp { m: [[0, 1], [1, 0]] };
    /// `(x, y) -> (-y, -x)`.
    pub const ANTI_TRANSPOSE: PointOp = PointOp { m: [[0, -1], [-1, 0]] };

    /// Builds a point operation from a matrix, if it is one of the eight
    /// elements of D4.
    pub fn from_matrix(m: [[i64; 2]; 2]) -> Option<PointOp> {
        let op = PointOp { m };
        d4_elements().contains(&op).then_some(op)
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        Vec2::new(
            self.m[0][0] * v.x + self.m[0][1] * v.y,
            self.m[1][0] * v.x + self.m[1][1] * v.y,
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PointOp) -> PointOp {
        let a = self.m;
        let b = other.m;
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        PointOp { m }
    }

    /// Orthogonal, so the inverse is the transpose.
    pub fn inverse(&self) -> PointOp {
        let m = self.m;
        PointOp {
            m: [[m[0][0], m[1][0]], [m[0][1], m[1][1]]],
        }
    }

    pub fn determinant(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Where the diagonal `(o, index)` lands under this operation.
    pub fn map_diagonal(&self, o: Orientation, index: i64) -> (Orientation, i64) {
        let image_step = self.apply(o.generator());
        let image_orientation = if image_step.x == image_step.y {
            Orientation::Right
        } else {
            Orientation::Left
        };
        let on_diagonal = Vec2::new(index, 0);
        let image = self.apply(on_diagonal);
        (image_orientation, diagonal_index(image, image_orientation))
    }
}

/// The eight elements of D4: identity, the three rotations, then the four
/// reflections.
pub fn d4_elements() -> [PointOp; 8] {
    [
        PointOp::IDENTITY,
        PointOp::ROT90,
        PointOp::ROT180,
        PointOp::ROT270,
        PointOp::FLIP_X,
        PointOp::FLIP_Y,
        PointOp::TRANSPOSE,
        PointOp::ANTI_TRANSPOSE,
    ]
}

/// An automorphism of `G(Z²)`: `v ↦ point·v + shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridAutomorphism {
    pub point: PointOp,
    pub shift: Vec2,
}

impl GridAutomorphism {
    pub const IDENTITY: GridAutomorphism = GridAutomorphism {
        point: PointOp::IDENTITY,
        shift: Vec2::ZERO,
    };

    pub fn new(point: PointOp, shift: Vec2) -> Self {
        GridAutomorphism { point, shift }
    }

    pub fn translation(shift: Vec2) -> Self {
        GridAutomorphism::new(PointOp::IDENTITY, shift)
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        self.point.apply(v) + self.shift
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GridAutomorphism) -> GridAutomorphism {
        GridAutomorphism {
            point: self.point.compose(&other.point),
            shift: self.point.apply(other.shift) + self.shift,
        }
    }

    pub fn inverse(&self) -> GridAutomorphism {
        let inv = self.point.inverse();
        GridAutomorphism {
            point: inv,
            shift: -inv.apply(self.shift),
        }
    }
}

//! Full-rank sublattices of `Z²` kept in Hermite normal form.
//!
//! Every lattice is stored as the basis `p1 = (w, 0)`, `p2 = (s, h)` with
//! `w > 0`, `h > 0`, `0 <= s < w`. Its fundamental domain is the box
//! `0 <= x < w`, `0 <= y < h`, indexed row-major.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::grid::{PointOp, Vec2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    width: i64,
    shear: i64,
    height: i64,
}

impl Lattice {
    /// The lattice `[[w, 0], [s, h]]`; `s` is reduced modulo `w`.
    pub fn new(width: i64, height: i64, shear: i64) -> Result<Lattice, Error> {
        if width <= 0 || height <= 0 {
            return Err(Error::DegenerateLattice(format!(
                "width and height must be positive, got {width}x{height}"
            )));
        }
        Ok(Lattice {
            width,
            shear: shear.rem_euclid(width),
            height,
        })
    }

    pub fn rectangular(width: i64, height: i64) -> Result<Lattice, Error> {
        Lattice::new(width, height, 0)
    }

    /// The lattice spanned by two vectors; rejects a zero determinant.
    pub fn from_basis(p1: Vec2, p2: Vec2) -> Result<Lattice, Error> {
        if p1.x * p2.y - p1.y * p2.x == 0 {
            return Err(Error::DegenerateLattice(format!(
                "periods {p1} and {p2} have zero determinant"
            )));
        }
        Lattice::generated_by([p1, p2])
    }

    /// The lattice generated by an arbitrary set of vectors. Fails unless the
    /// vectors span a full-rank lattice.
    pub fn generated_by(vectors: impl IntoIterator<Item = Vec2>) -> Result<Lattice, Error> {
        // `pivot` carries the vector of least positive |y| seen so far,
        // `width` the gcd of all x-only vectors.
        let mut pivot: Option<Vec2> = None;
        let mut width = 0i64;
        for v in vectors {
            let mut v = v;
            if let Some(mut p) = pivot {
                while v.y != 0 {
                    let q = Integer::div_floor(&p.y, &v.y);
                    let r = p - q * v;
                    p = v;
                    v = r;
                }
                pivot = Some(p);
            } else if v.y != 0 {
                pivot = Some(v);
                continue;
            }
            width = width.gcd(&v.x);
        }
        let Some(mut p) = pivot else {
            return Err(Error::DegenerateLattice(
                "vectors do not span two dimensions".into(),
            ));
        };
        if width == 0 {
            return Err(Error::DegenerateLattice(
                "vectors do not span two dimensions".into(),
            ));
        }
        if p.y < 0 {
            p = -p;
        }
        Lattice::new(width, p.y, p.x)
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn shear(&self) -> i64 {
        self.shear
    }

    pub fn p1(&self) -> Vec2 {
        Vec2::new(self.width, 0)
    }

    pub fn p2(&self) -> Vec2 {
        Vec2::new(self.shear, self.height)
    }

    pub fn basis(&self) -> [Vec2; 2] {
        [self.p1(), self.p2()]
    }

    /// Number of cells in the fundamental domain, `|Z² / L|`.
    pub fn index(&self) -> usize {
        (self.width * self.height) as usize
    }

    /// The representative of `v` in the fundamental domain.
    pub fn reduce(&self, v: Vec2) -> Vec2 {
        let k = v.y.div_euclid(self.height);
        let y = v.y - k * self.height;
        let x = (v.x - k * self.shear).rem_euclid(self.width);
        Vec2::new(x, y)
    }

    /// Row-major position of `v`'s representative.
    pub fn cell_index(&self, v: Vec2) -> usize {
        let r = self.reduce(v);
        (r.y * self.width + r.x) as usize
    }

    pub fn cell(&self, index: usize) -> Vec2 {
        let i = index as i64;
        Vec2::new(i % self.width, i / self.width)
    }

    /// Fundamental-domain representatives in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Vec2> + '_ {
        (0..self.index()).map(|i| self.cell(i))
    }

    pub fn contains(&self, v: Vec2) -> bool {
        self.reduce(v) == Vec2::ZERO
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis().iter().all(|&p| self.contains(p))
    }

    /// The image `g·L`.
    pub fn transformed(&self, g: &PointOp) -> Lattice {
        Lattice::generated_by(self.basis().map(|p| g.apply(p)))
            .expect("point operations preserve rank")
    }

    /// Sublattice of vectors with even coordinate sum (index 1 or 2).
    pub fn even_sublattice(&self) -> Lattice {
        let [p1, p2] = self.basis();
        let odd = |v: Vec2| v.coordinate_sum().rem_euclid(2) == 1;
        let gens = match (odd(p1), odd(p2)) {
            (false, false) => [p1, p2],
            (true, false) => [2 * p1, p2],
            (false, true) => [p1, 2 * p2],
            (true, true) => [p1 + p2, 2 * p1],
        };
        Lattice::generated_by(gens).expect("even sublattice has full rank")
    }

    pub fn is_even(&self) -> bool {
        self.basis()
            .iter()
            .all(|p| p.coordinate_sum().rem_euclid(2) == 0)
    }

    /// gcd of the diagonal index increments of the basis: diagonals of the
    /// given orientation fall into this many classes under translation by `L`.
    pub fn diagonal_modulus(&self, o: crate::grid::Orientation) -> i64 {
        let [p1, p2] = self.basis();
        let d = |v: Vec2| crate::grid::diagonal_index(v, o);
        d(p1).gcd(&d(p2))
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.p1(), self.p2())
    }
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [[self.width, 0], [self.shear, self.height]].serialize(serializer)
    }
}

/// All lattices of the given index, in normal form.
pub fn lattices_of_index(index: i64) -> Vec<Lattice> {
    let mut out = Vec::new();
    for w in 1..=index {
        if index % w != 0 {
            continue;
        }
        let h = index / w;
        for s in 0..w {
            out.push(Lattice::new(w, h, s).expect("positive dimensions"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::d4_elements;
    use proptest::prelude::*;

    #[test]
    fn normal_form_of_diagonal_basis() {
        let l = Lattice::from_basis(Vec2::new(2, 2), Vec2::new(2, -2)).unwrap();
        assert_eq!((l.width(), l.shear(), l.height()), (4, 2, 2));
        assert_eq!(l.index(), 8);
    }

    #[test]
    fn checkerboard_translations() {
        let l = Lattice::from_basis(Vec2::new(1, 1), Vec2::new(1, -1)).unwrap();
        assert_eq!((l.width(), l.shear(), l.height()), (2, 1, 1));
    }

    #[test]
    fn zero_determinant_rejected() {
        assert!(Lattice::from_basis(Vec2::new(2, 0), Vec2::new(2, 0)).is_err());
        assert!(Lattice::from_basis(Vec2::new(1, 1), Vec2::new(-2, -2)).is_err());
    }

    #[test]
    fn lemma_family_lattice() {
        let l = Lattice::from_basis(Vec2::new(7, 0), Vec2::new(3, 1)).unwrap();
        assert_eq!((l.width(), l.shear(), l.height()), (7, 3, 1));
    }

    #[test]
    fn lattice_counts_by_index() {
        // sigma(n): number of index-n sublattices of Z²
        let sigma = [1, 3, 4, 7, 6, 12, 8, 15];
        for (n, &s) in sigma.iter().enumerate() {
            assert_eq!(lattices_of_index(n as i64 + 1).len(), s);
        }
    }

    fn arb_lattice() -> impl Strategy<Value = Lattice> {
        (1i64..7, 1i64..7, 0i64..7).prop_map(|(w, h, s)| Lattice::new(w, h, s).unwrap())
    }

    proptest! {
        #[test]
        fn reduce_is_a_projection(l in arb_lattice(), x in -40i64..40, y in -40i64..40) {
            let v = Vec2::new(x, y);
            let r = l.reduce(v);
            prop_assert!(l.contains(v - r));
            prop_assert!(r.x >= 0 && r.x < l.width() && r.y >= 0 && r.y < l.height());
            prop_assert_eq!(l.reduce(v + l.p1()), r);
            prop_assert_eq!(l.reduce(v - l.p2()), r);
        }

        #[test]
        fn basis_change_keeps_lattice(l in arb_lattice(), a in -3i64..3, b in -3i64..3) {
            let [p1, p2] = l.basis();
            // unimodular change p1' = p1 + a p2, p2' = p2 + b p1'
            let q1 = p1 + a * p2;
            let q2 = p2 + b * q1;
            prop_assert_eq!(Lattice::from_basis(q1, q2).unwrap(), l);
        }

        #[test]
        fn transformed_has_same_index(l in arb_lattice(), i in 0usize..8) {
            let g = d4_elements()[i];
            let t = l.transformed(&g);
            prop_assert_eq!(t.index(), l.index());
            for p in l.basis() {
                prop_assert!(t.contains(g.apply(p)));
            }
        }

        #[test]
        fn even_sublattice_is_even(l in arb_lattice()) {
            let e = l.even_sublattice();
            prop_assert!(e.is_even());
            prop_assert!(l.contains_lattice(&e));
            let expected = if l.is_even() { l.index() } else { 2 * l.index() };
            prop_assert_eq!(e.index(), expected);
        }
    }
}

//! Color-preserving automorphisms and orbit colorings.
//!
//! If `φ = (g, t)` preserves `F`, then `φ` conjugates the translation group
//! `L_F` of `F` onto `g·L_F`, which must again be the translation group. So
//! only point parts with `g·L_F = L_F` need to be tried, and the shift only
//! matters modulo `L_F`. This makes the search finite and complete.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::PeriodicColoring;
use crate::error::Error;
use crate::grid::{d4_elements, l1_distance, GridAutomorphism, Vec2};
use crate::lattice::Lattice;

/// The color-preserving automorphisms of a coloring, modulo its maximal
/// period lattice. Shifts are reduced into the fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerGroup {
    lattice: Lattice,
    elements: Vec<GridAutomorphism>,
}

impl StabilizerGroup {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn elements(&self) -> &[GridAutomorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Reduces the shift of `a` modulo the lattice.
    pub fn normalize(&self, a: &GridAutomorphism) -> GridAutomorphism {
        GridAutomorphism::new(a.point, self.lattice.reduce(a.shift))
    }

    pub fn contains(&self, a: &GridAutomorphism) -> bool {
        self.elements.binary_search(&self.normalize(a)).is_ok()
    }

    /// Closure under composition and inverses, checked by multiplication.
    pub fn is_group(&self) -> bool {
        self.contains(&GridAutomorphism::IDENTITY)
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }
}

pub fn stabilizer(f: &PeriodicColoring) -> StabilizerGroup {
    let f = f.reduced();
    let lattice = *f.lattice();
    let candidates: Vec<GridAutomorphism> = d4_elements()
        .into_iter()
        .filter(|g| lattice.transformed(g) == lattice)
        .flat_map(|g| lattice.cells().map(move |t| GridAutomorphism::new(g, t)))
        .collect();
    let mut elements: Vec<GridAutomorphism> = candidates
        .into_par_iter()
        .filter(|a| preserves(&f, a))
        .collect();
    elements.sort();
    StabilizerGroup { lattice, elements }
}

fn preserves(f: &PeriodicColoring, a: &GridAutomorphism) -> bool {
    f.lattice()
        .cells()
        .zip(f.cells())
        .all(|(v, &c)| f.color_at(a.apply(v)) == c)
}

/// Orbits of the stabilizer on the cells of the maximal period lattice.
/// Each orbit is sorted row-major; orbits are ordered by their least cell.
pub fn orbits(f: &PeriodicColoring) -> Vec<Vec<Vec2>> {
    orbits_of(&stabilizer(f))
}

fn orbits_of(group: &StabilizerGroup) -> Vec<Vec<Vec2>> {
    let lattice = group.lattice;
    let n = lattice.index();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in &group.elements {
        for i in 0..n {
            let j = lattice.cell_index(a.apply(lattice.cell(i)));
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut out: Vec<Vec<Vec2>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(lattice.cell(i));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub orbit: bool,
    pub num_orbits: usize,
    pub stabilizer_order: usize,
    /// Two cells of one color in different orbits.
    pub counterexample_pair: Option<(Vec2, Vec2)>,
}

pub fn orbit_report(f: &PeriodicColoring) -> OrbitReport {
    let group = stabilizer(f);
    let orbits = orbits_of(&group);
    let mut first_of_color = vec![None; f.num_colors()];
    let mut counterexample_pair = None;
    for orbit in &orbits {
        let v = orbit[0];
        let slot = &mut first_of_color[f.color_at(v).index()];
        match slot {
            None => *slot = Some(v),
            Some(u) => {
                counterexample_pair = Some((*u, v));
                break;
            }
        }
    }
    OrbitReport {
        orbit: counterexample_pair.is_none(),
        num_orbits: orbits.len(),
        stabilizer_order: group.order(),
        counterexample_pair,
    }
}

/// Whether the color classes are exactly the orbits of the stabilizer.
pub fn is_orbit(f: &PeriodicColoring) -> bool {
    orbits(f).len() == f.num_colors()
}

/// A color-preserving automorphism sending `x` to `y` exactly, if any.
pub fn find_automorphism(
    f: &PeriodicColoring,
    x: Vec2,
    y: Vec2,
) -> Result<Option<GridAutomorphism>, Error> {
    if f.color_at(x) != f.color_at(y) {
        return Err(Error::Precondition(format!(
            "{x} and {y} have different colors"
        )));
    }
    let group = stabilizer(f);
    let lattice = group.lattice;
    Ok(group
        .elements
        .iter()
        .find(|a| lattice.contains(a.apply(x) - y))
        .map(|a| GridAutomorphism::new(a.point, a.shift + y - a.apply(x))))
}

/// Checks that any two nodes of one color have isomorphically colored
/// balls of the given radius. On failure returns the first pair `(x, y)`
/// for which no automorphism maps the ball around `x` onto the ball around `y`.
pub fn ball_similar(f: &PeriodicColoring, radius: i64) -> Result<(), (Vec2, Vec2)> {
    let f = f.reduced();
    let ball: Vec<Vec2> = (-radius..=radius)
        .flat_map(|dy| (-radius..=radius).map(move |dx| Vec2::new(dx, dy)))
        .filter(|&d| l1_distance(d, Vec2::ZERO) <= radius)
        .collect();
    let cells: Vec<Vec2> = f.lattice().cells().collect();
    for &x in &cells {
        for &y in &cells {
            if f.color_at(x) != f.color_at(y) {
                continue;
            }
            let found = d4_elements().iter().any(|g| {
                let a = GridAutomorphism::new(*g, y - g.apply(x));
                ball.iter().all(|&d| f.color_at(a.apply(x + d)) == f.color_at(x + d))
            });
            if !found {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::grid::PointOp;

    #[test]
    fn constant_has_full_group() {
        let f = fixtures::constant();
        let g = stabilizer(&f);
        assert_eq!(g.order(), 8);
        assert!(g.is_group());
        assert_eq!(orbits(&f).len(), 1);
        assert!(is_orbit(&f));
    }

    #[test]
    fn checkerboard_group() {
        let f = fixtures::checkerboard();
        let g = stabilizer(&f);
        // 8 point parts times the even translations modulo the lattice
        assert_eq!(g.order(), 8);
        assert!(g.is_group());
        assert_eq!(orbits(&f).len(), 2);
    }

    #[test]
    fn stripes_lose_quarter_turns() {
        let f = fixtures::stripes(3);
        let g = stabilizer(&f);
        assert!(g.elements().iter().all(|a| a.point != PointOp::ROT90));
        assert!(g.is_group());
        assert!(is_orbit(&f));
    }

    #[test]
    fn orbits_are_monochromatic() {
        for fx in fixtures::list() {
            let f = fixtures::get(fx.id).unwrap();
            for orbit in orbits(&f) {
                let c = f.color_at(orbit[0]);
                assert!(orbit.iter().all(|&v| f.color_at(v) == c), "{}", fx.id);
            }
        }
    }

    #[test]
    fn automorphism_maps_exactly() {
        let f = fixtures::lemma2_family_b(7).unwrap();
        assert_eq!(
            find_automorphism(&f, Vec2::new(2, 5), Vec2::new(2, 5)).unwrap().map(|a| a.apply(Vec2::new(2, 5))),
            Some(Vec2::new(2, 5))
        );
        let x = Vec2::new(0, 0);
        let y = Vec2::new(3, 1);
        let a = find_automorphism(&f, x, y).unwrap().unwrap();
        assert_eq!(a.apply(x), y);
        assert!(find_automorphism(&f, x, Vec2::new(1, 0)).is_err());
    }

    #[test]
    fn ball_similarity_of_orbit_colorings() {
        for f in [fixtures::checkerboard(), fixtures::stripes(4), fixtures::lemma2_family_b(8).unwrap()] {
            for r in 1..=3 {
                assert_eq!(ball_similar(&f, r), Ok(()));
            }
        }
    }
}

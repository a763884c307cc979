//! Finite rectangular pieces of colorings, for experiments with colorings
//! that are not periodic. Cells may be masked (`None`).

use crate::coloring::{ColorId, PeriodicColoring};
use crate::error::Error;
use crate::grid::Vec2;
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowColoring {
    origin: Vec2,
    width: usize,
    height: usize,
    cells: Vec<Option<ColorId>>,
}

impl WindowColoring {
    /// Panics if `cells` does not have `width * height` entries.
    pub fn new(origin: Vec2, width: usize, height: usize, cells: Vec<Option<ColorId>>) -> Self {
        assert_eq!(cells.len(), width * height, "window dimensions do not match cells");
        WindowColoring {
            origin,
            width,
            height,
            cells,
        }
    }

    pub fn origin(&self) -> Vec2 {
        self.origin
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn offset(&self, v: Vec2) -> Option<usize> {
        let d = v - self.origin;
        let inside = (0..self.width as i64).contains(&d.x) && (0..self.height as i64).contains(&d.y);
        inside.then(|| d.y as usize * self.width + d.x as usize)
    }

    pub fn contains(&self, v: Vec2) -> bool {
        self.offset(v).is_some()
    }

    /// The color at an absolute node; `None` outside the window or if masked.
    pub fn get(&self, v: Vec2) -> Option<ColorId> {
        self.offset(v).and_then(|i| self.cells[i])
    }

    pub fn set(&mut self, v: Vec2, color: Option<ColorId>) {
        let i = self.offset(v).expect("node outside window");
        self.cells[i] = color;
    }

    /// Absolute coordinates of all nodes, row-major.
    pub fn nodes(&self) -> impl Iterator<Item = Vec2> + '_ {
        (0..self.height as i64)
            .flat_map(move |y| (0..self.width as i64).map(move |x| self.origin + Vec2::new(x, y)))
    }

    /// Nodes whose four neighbors all lie in the window.
    pub fn interior(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.nodes().filter(|&v| {
            crate::grid::neighbors(v).iter().all(|&u| self.contains(u))
        })
    }

    /// Reads a periodic coloring back out of the window, assuming `lattice`
    /// consists of periods. Every cell class must be seen, without conflicts.
    pub fn to_periodic(&self, lattice: Lattice) -> Result<PeriodicColoring, Error> {
        let mut cells: Vec<Option<ColorId>> = vec![None; lattice.index()];
        for v in self.nodes() {
            let Some(c) = self.get(v) else { continue };
            let slot = &mut cells[lattice.cell_index(v)];
            match slot {
                Some(d) if *d != c => {
                    return Err(Error::InvalidArgument(format!(
                        "window is not periodic under {lattice}: conflict at {v}"
                    )))
                }
                _ => *slot = Some(c),
            }
        }
        let cells: Option<Vec<ColorId>> = cells.into_iter().collect();
        let cells = cells.ok_or_else(|| {
            Error::InvalidArgument("window does not cover every cell class".into())
        })?;
        PeriodicColoring::from_fn(lattice, |v| cells[lattice.cell_index(v)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::c;

    #[test]
    fn interior_of_three_by_three() {
        let w = WindowColoring::new(Vec2::new(5, -2), 3, 3, vec![Some(c(1)); 9]);
        let inner: Vec<Vec2> = w.interior().collect();
        assert_eq!(inner, vec![Vec2::new(6, -1)]);
    }

    #[test]
    fn masked_cells_read_as_none() {
        let mut w = WindowColoring::new(Vec2::ZERO, 2, 2, vec![Some(c(1)); 4]);
        w.set(Vec2::new(1, 1), None);
        assert_eq!(w.get(Vec2::new(1, 1)), None);
        assert_eq!(w.get(Vec2::new(2, 0)), None);
        assert_eq!(w.get(Vec2::new(0, 1)), Some(c(1)));
    }
}

//! Color sequences along diagonals, and shifts of whole classes of diagonals.
//!
//! A shift moves every diagonal of one residue class (index `≡ r mod m`)
//! along itself. Shifting a single diagonal would break periodicity, so
//! single-diagonal experiments work on finite windows instead.

use serde::Serialize;

use crate::coloring::{ColorId, PeriodicColoring};
use crate::error::Error;
use crate::grid::{diagonal_index, Orientation, Vec2};
use crate::lattice::Lattice;
use crate::window::WindowColoring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagonalKind {
    OneColor,
    /// Two colors taking turns: `abab...`.
    BinaryAlternating,
    /// Two colors in any other pattern, such as `aaab...`.
    Binary,
    Other,
}

impl DiagonalKind {
    /// One-color and alternating diagonals: those whose shift by one step
    /// is the identity or exchanges two colors along the diagonal.
    pub fn is_special(self) -> bool {
        matches!(self, DiagonalKind::OneColor | DiagonalKind::BinaryAlternating)
    }
}

/// The colors met along one diagonal, starting from the node `(index, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalDescriptor {
    pub orientation: Orientation,
    pub index: i64,
    /// One minimal period of the sequence.
    pub colors: Vec<ColorId>,
}

impl DiagonalDescriptor {
    pub fn period(&self) -> usize {
        self.colors.len()
    }

    pub fn kind(&self) -> DiagonalKind {
        let mut distinct = self.colors.clone();
        distinct.sort();
        distinct.dedup();
        match (distinct.len(), self.colors.len()) {
            (1, _) => DiagonalKind::OneColor,
            (2, 2) => DiagonalKind::BinaryAlternating,
            (2, _) => DiagonalKind::Binary,
            _ => DiagonalKind::Other,
        }
    }
}

/// Least `k > 0` with `k·g` in the lattice.
fn lattice_step(lattice: &Lattice, o: Orientation) -> usize {
    let g = o.generator();
    (1..=lattice.index() as i64)
        .find(|&k| lattice.contains(k * g))
        .expect("some multiple of g up to the index lies in the lattice") as usize
}

pub fn diagonal_sequence(f: &PeriodicColoring, o: Orientation, index: i64) -> DiagonalDescriptor {
    let g = o.generator();
    let start = Vec2::new(index, 0);
    let k = lattice_step(f.lattice(), o);
    let seq: Vec<ColorId> = (0..k as i64).map(|i| f.color_at(start + i * g)).collect();
    let period = (1..=k)
        .find(|&p| k.is_multiple_of(p) && (0..k).all(|i| seq[i] == seq[(i + p) % k]))
        .expect("k itself is a period");
    DiagonalDescriptor {
        orientation: o,
        index,
        colors: seq[..period].to_vec(),
    }
}

/// A class of diagonals `{index ≡ residue mod modulus}` that the maximal
/// period lattice permutes among themselves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalClass {
    pub orientation: Orientation,
    pub residue: i64,
    pub modulus: i64,
    pub kind: DiagonalKind,
    pub colors: Vec<ColorId>,
}

/// Every diagonal class of both orientations, classified.
pub fn diagonal_classes(f: &PeriodicColoring) -> Vec<DiagonalClass> {
    let f = f.reduced();
    let mut out = Vec::new();
    for o in Orientation::ALL {
        let modulus = f.lattice().diagonal_modulus(o);
        for residue in 0..modulus {
            let d = diagonal_sequence(&f, o, residue);
            out.push(DiagonalClass {
                orientation: o,
                residue,
                modulus,
                kind: d.kind(),
                colors: d.colors,
            });
        }
    }
    out
}

/// The one-color and alternating two-color diagonal classes.
pub fn find_special_diagonals(f: &PeriodicColoring) -> Vec<DiagonalClass> {
    diagonal_classes(f)
        .into_iter()
        .filter(|d| d.kind.is_special())
        .collect()
}

/// `F'(v) = F(v - t·g)` on diagonals with index `≡ r (mod m)`, `F` elsewhere.
/// Every period of `F` must move diagonals by a multiple of `m`.
pub fn shift_residue_class(
    f: &PeriodicColoring,
    o: Orientation,
    r: i64,
    m: i64,
    t: i64,
) -> Result<PeriodicColoring, Error> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("modulus must be positive, got {m}")));
    }
    let periods = f.maximal_periods();
    if let Some(vector) = periods
        .basis()
        .into_iter()
        .find(|&p| diagonal_index(p, o) % m != 0)
    {
        return Err(Error::IncompatibleModulus { modulus: m, vector });
    }
    let g = o.generator();
    let r = r.rem_euclid(m);
    let cells = f
        .lattice()
        .cells()
        .map(|v| {
            if diagonal_index(v, o).rem_euclid(m) == r {
                f.color_at(v - t * g)
            } else {
                f.color_at(v)
            }
        })
        .collect();
    PeriodicColoring::from_cells(*f.lattice(), cells, f.tokens().to_vec())
}

/// Moves everything beyond the diagonal `cut` by `t` steps along the
/// diagonals. Cells whose source falls outside the window become masked.
pub fn shift_half_plane(w: &WindowColoring, o: Orientation, cut: i64, t: i64) -> WindowColoring {
    let g = o.generator();
    let cells = w
        .nodes()
        .map(|v| {
            if diagonal_index(v, o) > cut {
                w.get(v - t * g)
            } else {
                w.get(v)
            }
        })
        .collect();
    WindowColoring::new(w.origin(), w.width(), w.height(), cells)
}

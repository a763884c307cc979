//! Colorings transcribed from printed grids, with their printed quotient
//! matrices, plus a few generated colorings used as controls.
//!
//! Grids are stored verbatim as PCG files under `fixtures/`. Two of them
//! needed a reading step: `h` is printed turned by 45 degrees and is stored
//! in upright coordinates, and `i` is rebuilt from its printed matrix
//! because the printed grid is not legible.

use crate::coloring::{ColorId, PeriodicColoring};
use crate::error::Error;
use crate::grid::Vec2;
use crate::lattice::Lattice;
use crate::perfect::QuotientMatrix;

#[derive(Clone, Copy, Debug)]
pub struct FixtureInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub text: &'static str,
    /// The matrix printed beside the grid, verbatim, in the grid's numbering.
    pub printed_quotient: Option<&'static [&'static [u32]]>,
    /// Entries of the printed matrix known to be misprinted:
    /// `(row, column, printed, corrected)`, 1-based.
    pub errata: &'static [(usize, usize, u32, u32)],
    pub covering: bool,
    /// Only set where the orbit property is known independently.
    pub orbit: Option<bool>,
}

impl FixtureInfo {
    pub fn coloring(&self) -> PeriodicColoring {
        crate::pcg::parse(self.text).expect("fixture texts parse")
    }

    /// The printed matrix with errata applied.
    pub fn corrected_quotient(&self) -> Option<QuotientMatrix> {
        let printed = self.printed_quotient?;
        let mut rows: Vec<Vec<u32>> = printed.iter().map(|r| r.to_vec()).collect();
        for &(i, j, _, fixed) in self.errata {
            rows[i - 1][j - 1] = fixed;
        }
        Some(QuotientMatrix::new(rows).expect("corrected matrices have row sums 4"))
    }
}

macro_rules! fixture_text {
    ($file:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/", $file))
    };
}

const PRINTED_B: &[&[u32]] = &[
    &[0, 2, 2, 0, 0, 0, 0, 0, 0, 0],
    &[1, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    &[1, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    &[0, 1, 1, 0, 0, 0, 2, 0, 0, 0],
    &[0, 1, 1, 0, 0, 0, 1, 1, 0, 0],
    &[0, 1, 1, 0, 0, 0, 0, 2, 0, 0],
    &[0, 0, 0, 2, 1, 0, 0, 0, 1, 0],
    &[0, 0, 0, 0, 1, 2, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 4, 0, 0, 0],
    &[0, 0, 0, 0, 0, 0, 0, 4, 0, 0],
];

const PRINTED_C: &[&[u32]] = &[
    &[0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
    &[0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
    &[1, 1, 0, 0, 0, 0, 1, 1, 0, 0],
    &[1, 1, 0, 0, 0, 0, 0, 1, 1, 0],
    &[1, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    &[1, 1, 0, 0, 0, 0, 1, 0, 0, 1],
    &[0, 0, 2, 0, 0, 2, 0, 0, 0, 0],
    &[0, 0, 2, 2, 0, 0, 0, 0, 0, 0],
    &[0, 0, 0, 2, 2, 0, 0, 0, 0, 0],
    &[0, 0, 0, 0, 2, 2, 0, 0, 0, 0],
];

const PRINTED_D: &[&[u32]] = &[
    &[0, 0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 0, 2, 1, 1, 0],
    &[0, 0, 0, 0, 0, 0, 2, 0, 2],
    &[0, 0, 0, 0, 0, 0, 0, 2, 2],
    &[1, 1, 2, 0, 0, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0, 0],
    &[1, 1, 1, 0, 1, 0, 0, 0, 0],
    &[1, 1, 0, 1, 1, 0, 0, 0, 0],
];

const PRINTED_E: &[&[u32]] = &[
    &[0, 0, 0, 0, 0, 0, 0, 4],
    &[0, 0, 0, 0, 0, 1, 1, 2],
    &[0, 0, 0, 0, 0, 1, 1, 2],
    &[0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 4, 0, 0, 0, 0],
    &[0, 1, 1, 2, 0, 0, 0, 0],
    &[0, 1, 1, 2, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0],
];

const PRINTED_F: &[&[u32]] = &[
    &[0, 0, 0, 0, 0, 0, 0, 0, 2, 2],
    &[0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 0, 1, 1, 1, 1, 0],
    &[0, 0, 0, 0, 0, 1, 1, 1, 0, 1],
    &[0, 0, 0, 2, 2, 0, 0, 0, 0, 0],
    &[0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    &[0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    &[1, 1, 1, 0, 1, 0, 0, 0, 0, 0],
];

const PRINTED_G: &[&[u32]] = &[
    &[0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2],
    &[0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1],
    &[0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1],
    &[0, 0, 0, 0, 0, 1, 2, 1, 0, 0, 0],
    &[0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1],
    &[0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0],
    &[0, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0],
    &[0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    &[1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0],
];

const PRINTED_II_BASE: &[&[u32]] = &[
    &[0, 0, 0, 4],
    &[0, 0, 0, 4],
    &[0, 0, 0, 4],
    &[2, 1, 1, 0],
];

const PRINTED_H: &[&[u32]] = &[
    &[0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 1, 1, 1, 1],
    &[0, 0, 0, 0, 1, 1, 1, 1],
    &[1, 1, 1, 1, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0, 0],
];

const PRINTED_I: &[&[u32]] = &[
    &[0, 0, 1, 1, 1, 1, 0, 0],
    &[0, 0, 1, 1, 1, 1, 0, 0],
    &[1, 1, 0, 0, 0, 0, 1, 1],
    &[1, 1, 0, 0, 0, 0, 1, 1],
    &[1, 1, 0, 0, 0, 0, 2, 0],
    &[1, 1, 0, 0, 0, 0, 0, 2],
    &[0, 0, 1, 1, 2, 0, 0, 0],
    &[0, 0, 1, 1, 0, 2, 0, 0],
];

const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo {
        id: "b",
        description: "10 colors, 8x8 cell",
        text: fixture_text!("b.pcg"),
        printed_quotient: Some(PRINTED_B),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "c",
        description: "10 colors, 4x4 cell",
        text: fixture_text!("c.pcg"),
        printed_quotient: Some(PRINTED_C),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "d",
        description: "9 colors, 4x8 cell",
        text: fixture_text!("d.pcg"),
        printed_quotient: Some(PRINTED_D),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "e",
        description: "8 colors, 6x6 cell",
        text: fixture_text!("e.pcg"),
        printed_quotient: Some(PRINTED_E),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "f",
        description: "10 colors, 6x6 cell",
        text: fixture_text!("f.pcg"),
        printed_quotient: Some(PRINTED_F),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "g",
        description: "11 colors, 6x6 cell",
        text: fixture_text!("g.pcg"),
        printed_quotient: Some(PRINTED_G),
        // printed row 10 sums to 3; row 5 and detailed balance force S[10][5] = 2
        errata: &[(10, 5, 1, 2)],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "h",
        description: "covering of K_{4,4} with twin colors; stored upright",
        text: fixture_text!("h.pcg"),
        printed_quotient: Some(PRINTED_H),
        errata: &[],
        covering: true,
        orbit: None,
    },
    FixtureInfo {
        id: "i",
        description: "8 colors; grid rebuilt from the printed matrix",
        text: fixture_text!("i.pcg"),
        printed_quotient: Some(PRINTED_I),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "II-base",
        description: "4 colors, three mutually twin colors",
        text: fixture_text!("II-base.pcg"),
        printed_quotient: Some(PRINTED_II_BASE),
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "V-a",
        description: "9 colors; unshifted base of a diagonal-shift family",
        text: fixture_text!("V-a.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "V-b",
        description: "10 colors, 8x8 cell",
        text: fixture_text!("V-b.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "VIb-iii",
        description: "9 colors, 6x6 cell",
        text: fixture_text!("VIb-iii.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "VIb-iv",
        description: "10 colors, 6x6 cell",
        text: fixture_text!("VIb-iv.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "VIb-v",
        description: "11 colors, 6x6 cell",
        text: fixture_text!("VIb-v.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: None,
    },
    FixtureInfo {
        id: "L1-a",
        description: "16-color covering, periods (4,0) (0,4)",
        text: fixture_text!("L1-a.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: true,
        orbit: None,
    },
    FixtureInfo {
        id: "L1-b",
        description: "16-color covering, periods (4,0) (0,8)",
        text: fixture_text!("L1-b.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: true,
        orbit: None,
    },
    FixtureInfo {
        id: "3-17-2",
        description: "3 colors, non-orbit, no binary or one-color diagonal",
        text: fixture_text!("3-17-2.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: Some(false),
    },
    FixtureInfo {
        id: "3-17-3",
        description: "3 colors, non-orbit, same matrix as 3-17-2",
        text: fixture_text!("3-17-3.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: Some(false),
    },
    FixtureInfo {
        id: "8-150-1",
        description: "8 colors, {0,1} matrix, not orbit",
        text: fixture_text!("8-150-1.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: Some(false),
    },
    FixtureInfo {
        id: "8-150-2",
        description: "8 colors, same matrix as 8-150-1, orbit",
        text: fixture_text!("8-150-2.pcg"),
        printed_quotient: None,
        errata: &[],
        covering: false,
        orbit: Some(true),
    },
];

pub fn list() -> &'static [FixtureInfo] {
    FIXTURES
}

pub fn info(id: &str) -> Result<&'static FixtureInfo, Error> {
    FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownFixture(id.to_string()))
}

pub fn get(id: &str) -> Result<PeriodicColoring, Error> {
    Ok(info(id)?.coloring())
}

/// `F(x, y) = ((x - 3y) mod α) + 1` with periods `(α, 0)` and `(3, 1)`.
pub fn lemma2_family_b(alpha: i64) -> Result<PeriodicColoring, Error> {
    if alpha < 5 || alpha == 6 {
        return Err(Error::InvalidArgument(format!(
            "alpha must be 5 or at least 7, got {alpha}"
        )));
    }
    let lattice = Lattice::from_basis(Vec2::new(alpha, 0), Vec2::new(3, 1))?;
    PeriodicColoring::from_fn(lattice, |v| {
        ColorId::new((v.x - 3 * v.y).rem_euclid(alpha) as u32 + 1)
    })
}

/// Color 1 on even nodes, color 2 on odd nodes.
pub fn checkerboard() -> PeriodicColoring {
    let lattice = Lattice::from_basis(Vec2::new(1, 1), Vec2::new(1, -1)).expect("full rank");
    PeriodicColoring::from_fn(lattice, |v| ColorId::new(v.coordinate_sum().rem_euclid(2) as u32 + 1))
        .expect("both colors occur")
}

pub fn constant() -> PeriodicColoring {
    PeriodicColoring::from_fn(Lattice::rectangular(1, 1).expect("unit lattice"), |_| ColorId::new(1))
        .expect("one color")
}

/// Vertical stripes `F(x, y) = (x mod k) + 1`.
pub fn stripes(k: i64) -> PeriodicColoring {
    assert!(k >= 1, "stripes need at least one color");
    let lattice = Lattice::rectangular(k, 1).expect("positive width");
    PeriodicColoring::from_fn(lattice, |v| ColorId::new(v.x.rem_euclid(k) as u32 + 1))
        .expect("every color occurs")
}

//! Exhaustive search for perfect colorings on a torus `Z²/L`.
//!
//! Cells are assigned in row-major order. Cell 0 always gets color 1 (any
//! coloring can be translated so), and without a prescribed quotient new
//! colors appear in increasing order. A node's row of neighbor counts is
//! established by the first node of its color whose four neighbors are all
//! assigned; every partial neighborhood must stay below that row.
//! Point-group symmetry is left to the final canonical deduplication.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{numeric_tokens, ColorId, PeriodicColoring};
use crate::diagonal::{find_special_diagonals, DiagonalClass};
use crate::error::Error;
use crate::lattice::Lattice;
use crate::orbit::is_orbit;
use crate::perfect::{check, is_bipartite, QuotientMatrix, Violation};
use crate::twins::{is_covering, twin_pairs};

/// Largest number of colors the search supports.
pub const MAX_COLORS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub lattice: Lattice,
    pub max_colors: usize,
    /// Colors are then exactly `1..=n` with this matrix.
    pub quotient: Option<QuotientMatrix>,
    /// Use exactly `max_colors` colors rather than at most.
    pub surjective: bool,
}

impl SearchSpec {
    pub fn new(lattice: Lattice, max_colors: usize) -> SearchSpec {
        SearchSpec {
            lattice,
            max_colors,
            quotient: None,
            surjective: true,
        }
    }

    pub fn at_most(mut self) -> SearchSpec {
        self.surjective = false;
        self
    }

    /// Fixes the quotient; the color count becomes its size.
    pub fn with_quotient(mut self, s: QuotientMatrix) -> SearchSpec {
        self.max_colors = s.n();
        self.surjective = true;
        self.quotient = Some(s);
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.max_colors == 0 || self.max_colors > self.lattice.index() {
            return Err(Error::InvalidArgument(format!(
                "color count {} must lie in 1..={}",
                self.max_colors,
                self.lattice.index()
            )));
        }
        if self.max_colors > MAX_COLORS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_COLORS} colors are supported"
            )));
        }
        if let Some(s) = &self.quotient {
            if s.n() != self.max_colors || !self.surjective {
                return Err(Error::InvalidArgument(
                    "a prescribed quotient fixes the exact color count".into(),
                ));
            }
        }
        Ok(())
    }
}

struct Search<'a> {
    spec: &'a SearchSpec,
    k: usize,
    nbr: Vec<[usize; 4]>,
    assign: Vec<u8>,
    rows: Vec<[u8; MAX_COLORS]>,
    known: Vec<bool>,
    used: usize,
}

impl<'a> Search<'a> {
    fn new(spec: &'a SearchSpec) -> Search<'a> {
        let lattice = spec.lattice;
        let nbr = lattice
            .cells()
            .map(|v| crate::grid::neighbors(v).map(|u| lattice.cell_index(u)))
            .collect();
        let k = spec.max_colors;
        let mut rows = vec![[0u8; MAX_COLORS]; k];
        let mut known = vec![false; k];
        if let Some(s) = &spec.quotient {
            for (i, row) in s.rows().iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    rows[i][j] = x as u8;
                }
                known[i] = true;
            }
        }
        Search {
            spec,
            k,
            nbr,
            assign: vec![0; lattice.index()],
            rows,
            known,
            used: 0,
        }
    }

    fn choices(&self, cell: usize) -> std::ops::RangeInclusive<u8> {
        if cell == 0 {
            return 1..=1;
        }
        let top = if self.spec.quotient.is_some() {
            self.k
        } else {
            (self.used + 1).min(self.k)
        };
        1..=top as u8
    }

    /// Assigns `color` to `cell`; on success returns the colors whose rows
    /// this step established.
    fn place(&mut self, cell: usize, color: u8) -> Option<Vec<usize>> {
        let prev_used = self.used;
        self.assign[cell] = color;
        self.used = self.used.max(color as usize);
        let mut affected = [cell; 5];
        affected[1..].copy_from_slice(&self.nbr[cell]);
        let mut established = Vec::new();
        for (n, &j) in affected.iter().enumerate() {
            if affected[..n].contains(&j) || self.assign[j] == 0 {
                continue;
            }
            let c = self.assign[j] as usize - 1;
            let mut counts = [0u8; MAX_COLORS];
            let mut complete = true;
            for &u in &self.nbr[j] {
                match self.assign[u] {
                    0 => complete = false,
                    d => counts[d as usize - 1] += 1,
                }
            }
            let ok = if self.known[c] {
                let row = &self.rows[c];
                if complete {
                    counts[..self.k] == row[..self.k]
                } else {
                    counts[..self.k].iter().zip(&row[..self.k]).all(|(a, b)| a <= b)
                }
            } else {
                if complete {
                    self.rows[c] = counts;
                    self.known[c] = true;
                    established.push(c);
                }
                true
            };
            if !ok {
                self.undo(cell, &established, prev_used);
                return None;
            }
        }
        Some(established)
    }

    fn undo(&mut self, cell: usize, established: &[usize], prev_used: usize) {
        self.assign[cell] = 0;
        self.used = prev_used;
        for &c in established {
            self.known[c] = false;
        }
    }

    fn leaf(&self) -> Option<String> {
        let colors_used = if self.spec.quotient.is_some() {
            let mut seen = vec![false; self.k];
            for &a in &self.assign {
                seen[a as usize - 1] = true;
            }
            seen.iter().filter(|&&s| s).count()
        } else {
            self.used
        };
        if self.spec.surjective && colors_used != self.k {
            return None;
        }
        let cells = self.assign.iter().map(|&a| ColorId::new(a as u32)).collect();
        let f = PeriodicColoring::from_cells(self.spec.lattice, cells, numeric_tokens(colors_used))
            .expect("colors are contiguous");
        debug_assert!(check(&f).is_ok());
        Some(f.canonical())
    }

    fn run(&mut self, cell: usize, out: &mut BTreeSet<String>) {
        if cell == self.assign.len() {
            if let Some(c) = self.leaf() {
                out.insert(c);
            }
            return;
        }
        let prev_used = self.used;
        for color in self.choices(cell) {
            if let Some(est) = self.place(cell, color) {
                self.run(cell + 1, out);
                self.undo(cell, &est, prev_used);
            }
        }
    }

    /// Consistent assignments of the first `depth` cells.
    fn prefixes(&mut self, cell: usize, depth: usize, out: &mut Vec<Vec<u8>>) {
        if cell == depth {
            out.push(self.assign[..depth].to_vec());
            return;
        }
        let prev_used = self.used;
        for color in self.choices(cell) {
            if let Some(est) = self.place(cell, color) {
                self.prefixes(cell + 1, depth, out);
                self.undo(cell, &est, prev_used);
            }
        }
    }
}

/// Canonical strings of all perfect colorings matching `spec`, sorted.
pub fn enumerate_canonical(spec: &SearchSpec) -> Result<Vec<String>, Error> {
    spec.validate()?;
    let cells = spec.lattice.index();
    let depth = cells.min(4);
    let mut prefixes = Vec::new();
    Search::new(spec).prefixes(0, depth, &mut prefixes);
    let found: BTreeSet<String> = prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut search = Search::new(spec);
            for (cell, &color) in prefix.iter().enumerate() {
                search
                    .place(cell, color)
                    .expect("prefixes were consistent when generated");
            }
            let mut out = BTreeSet::new();
            search.run(depth, &mut out);
            out
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.into_iter().collect())
}

/// All perfect colorings having `spec.lattice` among their periods, up to
/// equivalence, in canonical form and sorted by canonical text. With a
/// prescribed quotient the results match it up to renaming colors.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<PeriodicColoring>, Error> {
    Ok(enumerate_canonical(spec)?
        .iter()
        .map(|c| crate::pcg::parse(c).expect("canonical text parses"))
        .collect())
}

/// Filters every assignment through `check`. Only for small tori.
pub fn brute_oracle(spec: &SearchSpec) -> Result<Vec<String>, Error> {
    spec.validate()?;
    let cells = spec.lattice.index();
    let k = spec.max_colors;
    if cells > 12 || k > 4 {
        return Err(Error::Precondition(format!(
            "brute force needs at most 12 cells and 4 colors, got {cells} and {k}"
        )));
    }
    let total = (k as u64).pow(cells as u32);
    let found: BTreeSet<String> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut code = code;
            let raw: Vec<usize> = (0..cells)
                .map(|_| {
                    let d = (code % k as u64) as usize;
                    code /= k as u64;
                    d
                })
                .collect();
            let mut present = vec![false; k];
            for &d in &raw {
                present[d] = true;
            }
            let n = present.iter().filter(|&&p| p).count();
            if spec.surjective && n != k {
                return None;
            }
            let f = if spec.quotient.is_some() {
                let cells = raw.iter().map(|&d| ColorId::from_index(d)).collect();
                PeriodicColoring::from_cells(spec.lattice, cells, numeric_tokens(k)).ok()?
            } else {
                PeriodicColoring::from_labels(spec.lattice, |v| raw[spec.lattice.cell_index(v)])
            };
            let s = check(&f).ok()?;
            if spec.quotient.as_ref().is_some_and(|q| *q != s) {
                return None;
            }
            Some(f.canonical())
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// Everything the library can say about one coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub canonical: String,
    pub perfect: bool,
    pub violation: Option<Violation>,
    pub quotient: Option<QuotientMatrix>,
    pub bipartite: bool,
    pub twins: Vec<(ColorId, ColorId)>,
    pub covering: bool,
    pub diagonals: Vec<DiagonalClass>,
    pub orbit: bool,
    pub maximal_periods: Lattice,
}

pub fn classify(f: &PeriodicColoring) -> ClassificationReport {
    let (quotient, violation) = match check(f) {
        Ok(s) => (Some(s), None),
        Err(v) => (None, Some(v)),
    };
    ClassificationReport {
        canonical: f.canonical(),
        perfect: quotient.is_some(),
        violation,
        bipartite: is_bipartite(f),
        twins: quotient.as_ref().map(twin_pairs).unwrap_or_default(),
        covering: quotient.as_ref().is_some_and(is_covering),
        diagonals: find_special_diagonals(f),
        orbit: is_orbit(f),
        maximal_periods: f.maximal_periods(),
        quotient,
    }
}

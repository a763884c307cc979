//! Periodic colorings of `Z²` and their equivalence.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grid::{d4_elements, GridAutomorphism, Vec2};
use crate::lattice::Lattice;
use crate::window::WindowColoring;
use crate::Rational;

/// A color, numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(u32);

impl ColorId {
    /// Panics on zero; colors are numbered from 1.
    pub fn new(id: u32) -> ColorId {
        assert!(id >= 1, "color ids start at 1");
        ColorId(id)
    }

    pub fn from_index(index: usize) -> ColorId {
        ColorId(index as u32 + 1)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand for building color ids in tests and fixtures.
pub fn c(id: u32) -> ColorId {
    ColorId::new(id)
}

/// A bijection on the colors `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPermutation {
    image: Vec<ColorId>,
}

impl ColorPermutation {
    pub fn new(image: Vec<ColorId>) -> Result<ColorPermutation, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for c in &image {
            let i = c.index();
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 1..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(ColorPermutation { image })
    }

    pub fn identity(n: usize) -> ColorPermutation {
        ColorPermutation {
            image: (0..n).map(ColorId::from_index).collect(),
        }
    }

    pub fn apply(&self, c: ColorId) -> ColorId {
        self.image[c.index()]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn inverse(&self) -> ColorPermutation {
        let mut image = vec![ColorId(1); self.image.len()];
        for (i, c) in self.image.iter().enumerate() {
            image[c.index()] = ColorId::from_index(i);
        }
        ColorPermutation { image }
    }
}

/// A coloring of `Z²` that is periodic under a lattice, stored as the colors
/// of the lattice's fundamental domain (row-major), together with the tokens
/// used to print each color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicColoring {
    lattice: Lattice,
    cells: Vec<ColorId>,
    tokens: Vec<String>,
}

impl PeriodicColoring {
    /// Builds a coloring from fundamental-domain cells. Every color in
    /// `1..=tokens.len()` must occur and no other color may.
    pub fn from_cells(
        lattice: Lattice,
        cells: Vec<ColorId>,
        tokens: Vec<String>,
    ) -> Result<PeriodicColoring, Error> {
        if cells.len() != lattice.index() {
            return Err(Error::InvalidArgument(format!(
                "expected {} cells, got {}",
                lattice.index(),
                cells.len()
            )));
        }
        let n = tokens.len();
        let mut seen = vec![false; n];
        for c in &cells {
            let i = c.index();
            if i >= n {
                return Err(Error::InvalidArgument(format!(
                    "color {c} out of range 1..={n}"
                )));
            }
            seen[i] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!(
                "color {} has empty support",
                ColorId::from_index(missing)
            )));
        }
        Ok(PeriodicColoring {
            lattice,
            cells,
            tokens,
        })
    }

    /// Builds a coloring with numeric tokens from a function on the
    /// fundamental domain.
    pub fn from_fn(lattice: Lattice, f: impl Fn(Vec2) -> ColorId) -> Result<PeriodicColoring, Error> {
        let cells: Vec<ColorId> = lattice.cells().map(f).collect();
        let n = cells.iter().map(|c| c.get()).max().unwrap_or(0) as usize;
        PeriodicColoring::from_cells(lattice, cells, numeric_tokens(n))
    }

    /// Builds a coloring from arbitrary labels, numbering colors by first
    /// occurrence in row-major order.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone + ToString>(
        lattice: Lattice,
        f: impl Fn(Vec2) -> T,
    ) -> PeriodicColoring {
        let mut ids: HashMap<T, ColorId> = HashMap::new();
        let mut tokens = Vec::new();
        let cells = lattice
            .cells()
            .map(|v| {
                let label = f(v);
                *ids.entry(label.clone()).or_insert_with(|| {
                    tokens.push(label.to_string());
                    ColorId::from_index(tokens.len() - 1)
                })
            })
            .collect();
        PeriodicColoring {
            lattice,
            cells,
            tokens,
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn cells(&self) -> &[ColorId] {
        &self.cells
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, c: ColorId) -> &str {
        &self.tokens[c.index()]
    }

    pub fn num_colors(&self) -> usize {
        self.tokens.len()
    }

    pub fn colors(&self) -> impl Iterator<Item = ColorId> {
        (0..self.tokens.len()).map(ColorId::from_index)
    }

    /// Resolves a printed token (or, failing that, a numeric id) to a color.
    pub fn color_by_token(&self, token: &str) -> Result<ColorId, Error> {
        if let Some(i) = self.tokens.iter().position(|t| t == token) {
            return Ok(ColorId::from_index(i));
        }
        match token.parse::<u32>() {
            Ok(id) if id >= 1 && (id as usize) <= self.num_colors() => Ok(ColorId(id)),
            _ => Err(Error::UnknownColor(token.to_string())),
        }
    }

    pub fn color_at(&self, v: Vec2) -> ColorId {
        self.cells[self.lattice.cell_index(v)]
    }

    /// Fundamental-domain cells of one color, row-major.
    pub fn support(&self, c: ColorId) -> Vec<Vec2> {
        self.lattice
            .cells()
            .zip(&self.cells)
            .filter(|(_, &d)| d == c)
            .map(|(v, _)| v)
            .collect()
    }

    /// Whether translating by `t` leaves the coloring unchanged.
    pub fn is_period(&self, t: Vec2) -> bool {
        self.lattice
            .cells()
            .zip(&self.cells)
            .all(|(v, &col)| self.color_at(v + t) == col)
    }

    /// The lattice of all translations preserving the coloring.
    pub fn maximal_periods(&self) -> Lattice {
        let periods = self.lattice.cells().filter(|&t| t != Vec2::ZERO && self.is_period(t));
        Lattice::generated_by(self.lattice.basis().into_iter().chain(periods))
            .expect("contains a full-rank lattice")
    }

    /// The same coloring of `Z²`, stored over another lattice. `lattice` must
    /// consist of periods of the coloring.
    pub fn with_lattice(&self, lattice: Lattice) -> Result<PeriodicColoring, Error> {
        if let Some(p) = lattice.basis().into_iter().find(|&p| !self.is_period(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not a period")));
        }
        let cells = lattice.cells().map(|v| self.color_at(v)).collect();
        PeriodicColoring::from_cells(lattice, cells, self.tokens.clone())
    }

    /// The same coloring stored over its maximal period lattice.
    pub fn reduced(&self) -> PeriodicColoring {
        self.with_lattice(self.maximal_periods())
            .expect("maximal periods are periods")
    }

    /// The coloring `G` with `G(a(v)) = F(v)`.
    pub fn transformed(&self, a: &GridAutomorphism) -> PeriodicColoring {
        let lattice = self.lattice.transformed(&a.point);
        let inv = a.inverse();
        let cells = lattice.cells().map(|u| self.color_at(inv.apply(u))).collect();
        PeriodicColoring {
            lattice,
            cells,
            tokens: self.tokens.clone(),
        }
    }

    /// The coloring `v ↦ F(v + t)`.
    pub fn translated(&self, t: Vec2) -> PeriodicColoring {
        let cells = self.lattice.cells().map(|v| self.color_at(v + t)).collect();
        PeriodicColoring {
            lattice: self.lattice,
            cells,
            tokens: self.tokens.clone(),
        }
    }

    /// The coloring `v ↦ π(F(v))`; tokens travel with their colors.
    pub fn permuted(&self, pi: &ColorPermutation) -> Result<PeriodicColoring, Error> {
        if pi.len() != self.num_colors() {
            return Err(Error::InvalidArgument(format!(
                "permutation of {} colors applied to {} colors",
                pi.len(),
                self.num_colors()
            )));
        }
        let mut tokens = vec![String::new(); self.num_colors()];
        for c in self.colors() {
            tokens[pi.apply(c).index()] = self.tokens[c.index()].clone();
        }
        let cells = self.cells.iter().map(|&c| pi.apply(c)).collect();
        PeriodicColoring::from_cells(self.lattice, cells, tokens)
    }

    /// Renumbers colors by first occurrence and uses the numbers as tokens.
    pub fn relabeled(&self) -> PeriodicColoring {
        let mut map = vec![None; self.num_colors()];
        let mut next = 0;
        let cells = self
            .cells
            .iter()
            .map(|c| {
                *map[c.index()].get_or_insert_with(|| {
                    next += 1;
                    ColorId(next)
                })
            })
            .collect();
        PeriodicColoring {
            lattice: self.lattice,
            cells,
            tokens: numeric_tokens(self.num_colors()),
        }
    }

    /// Least PCG rendering over the point group, translations modulo the
    /// maximal periods, and first-occurrence relabeling.
    pub fn canonical(&self) -> String {
        let base = self.reduced();
        let mut best: Option<String> = None;
        for g in d4_elements() {
            let image = base.transformed(&GridAutomorphism::new(g, Vec2::ZERO));
            for t in image.lattice.cells() {
                let text = render_relabeled(&image, t);
                if best.as_ref().is_none_or(|b| text < *b) {
                    best = Some(text);
                }
            }
        }
        best.expect("the point group is nonempty")
    }

    /// The coloring in canonical form.
    pub fn canonicalized(&self) -> PeriodicColoring {
        crate::pcg::parse(&self.canonical()).expect("canonical rendering parses")
    }

    pub fn equivalent(&self, other: &PeriodicColoring) -> bool {
        self.num_colors() == other.num_colors() && self.canonical() == other.canonical()
    }

    pub fn window(&self, origin: Vec2, width: usize, height: usize) -> WindowColoring {
        let cells = (0..height as i64)
            .flat_map(|y| (0..width as i64).map(move |x| Vec2::new(x, y)))
            .map(|d| Some(self.color_at(origin + d)))
            .collect();
        WindowColoring::new(origin, width, height, cells)
    }

    /// Share of each color in the fundamental domain.
    pub fn densities(&self) -> Vec<Rational> {
        let mut counts = vec![0i128; self.num_colors()];
        for c in &self.cells {
            counts[c.index()] += 1;
        }
        let total = self.cells.len() as i128;
        counts.into_iter().map(|k| Ratio::new(k, total)).collect()
    }
}

pub(crate) fn numeric_tokens(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// PCG text of `v ↦ F(v + t)` with colors renumbered by first occurrence.
fn render_relabeled(f: &PeriodicColoring, t: Vec2) -> String {
    let lattice = f.lattice();
    let mut map = vec![0u32; f.num_colors()];
    let mut next = 0;
    let mut out = crate::pcg::header(lattice);
    for y in 0..lattice.height() {
        for x in 0..lattice.width() {
            let c = f.color_at(Vec2::new(x, y) + t);
            let slot = &mut map[c.index()];
            if *slot == 0 {
                next += 1;
                *slot = next;
            }
            if x > 0 {
                out.push(' ');
            }
            out.push_str(&slot.to_string());
        }
        out.push('\n');
    }
    out
}

//! Twin colors, coverings, and the dichotomy for coverings: a covering
//! coloring either has twin colors or is an orbit coloring.

use serde::Serialize;

use crate::coloring::{numeric_tokens, ColorId, PeriodicColoring};
use crate::error::Error;
use crate::grid::Vec2;
use crate::orbit::is_orbit;
use crate::perfect::{quotient, QuotientMatrix};

/// Unordered pairs `a < b` with `S[a][j] = S[b][j]` for every `j ∉ {a, b}`.
pub fn twin_pairs(s: &QuotientMatrix) -> Vec<(ColorId, ColorId)> {
    pairs(s, |a, b| twin_mismatch(s, a, b).is_none())
}

/// Pairs `a < b` whose rows are identical.
pub fn equal_rows(s: &QuotientMatrix) -> Vec<(ColorId, ColorId)> {
    pairs(s, |a, b| s.row(a) == s.row(b))
}

fn pairs(s: &QuotientMatrix, keep: impl Fn(ColorId, ColorId) -> bool) -> Vec<(ColorId, ColorId)> {
    let mut out = Vec::new();
    for a in s.colors() {
        for b in s.colors().filter(|&b| b > a) {
            if keep(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn twin_mismatch(s: &QuotientMatrix, a: ColorId, b: ColorId) -> Option<ColorId> {
    s.colors()
        .filter(|&j| j != a && j != b)
        .find(|&j| s.get(a, j) != s.get(b, j))
}

/// Recolors `b` as `a`. Colors above `b` move down by one. Tokens are kept,
/// except that numeric tokens `1..=n` become `1..=n-1`.
pub fn merge(f: &PeriodicColoring, a: ColorId, b: ColorId) -> Result<PeriodicColoring, Error> {
    let s = quotient(f)?;
    for c in [a, b] {
        if c.index() >= s.n() {
            return Err(Error::UnknownColor(c.to_string()));
        }
    }
    if a == b {
        return Err(Error::InvalidArgument("cannot merge a color with itself".into()));
    }
    if let Some(column) = twin_mismatch(&s, a, b) {
        return Err(Error::NotTwins { a, b, column });
    }
    let renumber = |c: ColorId| {
        let c = if c == b { a } else { c };
        if c > b {
            ColorId::new(c.get() - 1)
        } else {
            c
        }
    };
    let cells = f.cells().iter().map(|&c| renumber(c)).collect();
    // numeric tokens follow the ids so that the result reads back the same
    let tokens = if f.tokens() == numeric_tokens(f.num_colors()) {
        numeric_tokens(f.num_colors() - 1)
    } else {
        f.colors()
            .filter(|&c| c != b)
            .map(|c| f.token(c).to_string())
            .collect()
    };
    PeriodicColoring::from_cells(*f.lattice(), cells, tokens)
}

/// The graph whose adjacency matrix is a covering quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetGraph {
    adjacency: Vec<Vec<bool>>,
}

impl TargetGraph {
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacent(&self, a: ColorId, b: ColorId) -> bool {
        self.adjacency[a.index()][b.index()]
    }

    pub fn neighbors(&self, a: ColorId) -> Vec<ColorId> {
        (0..self.n())
            .filter(|&j| self.adjacency[a.index()][j])
            .map(ColorId::from_index)
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().flatten().filter(|&&x| x).count() / 2
    }
}

/// `Some(T)` iff `S` is a symmetric {0,1}-matrix with zero diagonal.
pub fn covering_target(s: &QuotientMatrix) -> Option<TargetGraph> {
    let n = s.n();
    let rows = s.rows();
    for i in 0..n {
        if rows[i][i] != 0 {
            return None;
        }
        for j in 0..n {
            if rows[i][j] > 1 || rows[i][j] != rows[j][i] {
                return None;
            }
        }
    }
    Some(TargetGraph {
        adjacency: rows
            .iter()
            .map(|r| r.iter().map(|&x| x == 1).collect())
            .collect(),
    })
}

pub fn is_covering(s: &QuotientMatrix) -> bool {
    covering_target(s).is_some()
}

/// Offsets at which a covering without equal rows never repeats a color.
pub const CLAIM6_OFFSETS: [Vec2; 16] = [
    Vec2::new(0, 1),
    Vec2::new(0, -1),
    Vec2::new(1, 0),
    Vec2::new(-1, 0),
    Vec2::new(1, 1),
    Vec2::new(1, -1),
    Vec2::new(-1, 1),
    Vec2::new(-1, -1),
    Vec2::new(0, 2),
    Vec2::new(0, -2),
    Vec2::new(2, 0),
    Vec2::new(-2, 0),
    Vec2::new(2, 2),
    Vec2::new(2, -2),
    Vec2::new(-2, 2),
    Vec2::new(-2, -2),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "result")]
pub enum Claim6 {
    Holds,
    Counterexample { node: Vec2, offset: Vec2, color: ColorId },
}

/// Scans every cell and offset in [`CLAIM6_OFFSETS`]. Only defined for
/// coverings without equal rows.
pub fn claim6_check(f: &PeriodicColoring) -> Result<Claim6, Error> {
    let s = quotient(f)?;
    if !is_covering(&s) {
        return Err(Error::Precondition("quotient is not a covering".into()));
    }
    if let Some((a, b)) = equal_rows(&s).first() {
        return Err(Error::Precondition(format!("rows {a} and {b} are equal")));
    }
    for v in f.lattice().cells() {
        let color = f.color_at(v);
        if let Some(&offset) = CLAIM6_OFFSETS.iter().find(|&&d| f.color_at(v + d) == color) {
            return Ok(Claim6::Counterexample { node: v, offset, color });
        }
    }
    Ok(Claim6::Holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    #[serde(rename = "covering")]
    pub is_covering: bool,
    #[serde(rename = "twins")]
    pub twin_pairs: Vec<(ColorId, ColorId)>,
    #[serde(rename = "orbit")]
    pub is_orbit: bool,
    #[serde(rename = "dichotomy")]
    pub dichotomy_holds: bool,
}

pub fn theorem1_audit(f: &PeriodicColoring) -> Result<DichotomyReport, Error> {
    let s = quotient(f)?;
    let is_covering = is_covering(&s);
    let twin_pairs = twin_pairs(&s);
    let is_orbit = is_orbit(f);
    Ok(DichotomyReport {
        dichotomy_holds: !is_covering || is_orbit || !twin_pairs.is_empty(),
        is_covering,
        twin_pairs,
        is_orbit,
    })
}

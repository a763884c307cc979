//! The perfect-coloring predicate and invariants of the quotient matrix.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::coloring::{ColorId, PeriodicColoring};
use crate::error::Error;
use crate::grid::{neighbors, parity, Parity, Vec2};
use crate::window::WindowColoring;
use crate::Rational;

/// Degree of the grid graph.
pub const DEGREE: u32 = 4;

/// `S[i][j]`: the number of `j`-colored neighbors of any `i`-colored node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientMatrix {
    rows: Vec<Vec<u32>>,
}

impl QuotientMatrix {
    /// Accepts a square matrix whose rows sum to 4.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<QuotientMatrix, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty quotient matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            let sum: u32 = row.iter().sum();
            if sum != DEGREE {
                return Err(Error::InvalidArgument(format!(
                    "row {} sums to {sum}, expected {DEGREE}",
                    i + 1
                )));
            }
        }
        Ok(QuotientMatrix { rows })
    }

    /// Parses whitespace-separated rows, one per line.
    pub fn parse(text: &str) -> Result<QuotientMatrix, Error> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::parse(i + 1, format!("bad entry '{t}'"))))
                .collect::<Result<Vec<u32>, Error>>()?;
            rows.push(row);
        }
        QuotientMatrix::new(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, a: ColorId, b: ColorId) -> u32 {
        self.rows[a.index()][b.index()]
    }

    pub fn row(&self, a: ColorId) -> &[u32] {
        &self.rows[a.index()]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn colors(&self) -> impl Iterator<Item = ColorId> {
        (0..self.n()).map(ColorId::from_index)
    }

    /// `P S P⁻¹` where `P` sends color `c` to `pi(c)`.
    pub fn permuted(&self, pi: &crate::coloring::ColorPermutation) -> QuotientMatrix {
        let n = self.n();
        let mut rows = vec![vec![0; n]; n];
        for a in self.colors() {
            for b in self.colors() {
                rows[pi.apply(a).index()][pi.apply(b).index()] = self.get(a, b);
            }
        }
        QuotientMatrix { rows }
    }

    /// Whether some relabeling of colors turns `self` into `other`.
    pub fn equal_up_to_permutation(&self, other: &QuotientMatrix) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let n = self.n();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            s: &QuotientMatrix,
            t: &QuotientMatrix,
            i: usize,
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            let n = s.n();
            if i == n {
                return true;
            }
            for j in 0..n {
                if used[j] || s.rows[i][i] != t.rows[j][j] {
                    continue;
                }
                let consistent = (0..i).all(|k| {
                    s.rows[i][k] == t.rows[j][image[k]] && s.rows[k][i] == t.rows[image[k]][j]
                });
                if !consistent {
                    continue;
                }
                image[i] = j;
                used[j] = true;
                if extend(s, t, i + 1, image, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        extend(self, other, 0, &mut image, &mut used)
    }
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for QuotientMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

/// A node whose neighborhood disagrees with the row established for its color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub node: Vec2,
    pub color: ColorId,
    /// The established row for `color`, or empty if there is none.
    pub expected: Vec<u32>,
    pub observed: [ColorId; 4],
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let observed: Vec<String> = self.observed.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "node {} of color {} has neighbors {{{}}}, expected row {:?}",
            self.node,
            self.color,
            observed.join(","),
            self.expected
        )
    }
}

/// Colors of the four neighbors of `v`, in E, W, S, N order.
pub fn profile(f: &PeriodicColoring, v: Vec2) -> [ColorId; 4] {
    neighbors(v).map(|u| f.color_at(u))
}

fn count_row(n: usize, colors: &[ColorId]) -> Vec<u32> {
    let mut row = vec![0; n];
    for c in colors {
        row[c.index()] += 1;
    }
    row
}

/// The quotient matrix, or the first violation in row-major order of the
/// fundamental domain.
pub fn check(f: &PeriodicColoring) -> Result<QuotientMatrix, Violation> {
    let n = f.num_colors();
    let mut rows: Vec<Option<Vec<u32>>> = vec![None; n];
    for v in f.lattice().cells() {
        let color = f.color_at(v);
        let observed = profile(f, v);
        let row = count_row(n, &observed);
        match &rows[color.index()] {
            None => rows[color.index()] = Some(row),
            Some(expected) if *expected != row => {
                return Err(Violation {
                    node: v,
                    color,
                    expected: expected.clone(),
                    observed,
                })
            }
            Some(_) => {}
        }
    }
    let rows = rows.into_iter().map(|r| r.expect("every color occurs")).collect();
    Ok(QuotientMatrix { rows })
}

pub fn is_perfect(f: &PeriodicColoring) -> bool {
    check(f).is_ok()
}

/// `check` with the violation folded into [`Error`].
pub fn quotient(f: &PeriodicColoring) -> Result<QuotientMatrix, Error> {
    check(f).map_err(|v| Error::NotPerfect(Box::new(v)))
}

/// Number of walks `v = v0, v1, ..., vk` with `F(vi) = colors[i-1]`.
/// Walks are counted on the torus `Z²/L`, which lifts them one-to-one.
pub fn path_count(f: &PeriodicColoring, v: Vec2, colors: &[ColorId]) -> Result<u128, Error> {
    quotient(f)?;
    if colors.is_empty() {
        return Err(Error::InvalidArgument("empty color sequence".into()));
    }
    let lattice = f.lattice();
    let mut counts = vec![0u128; lattice.index()];
    counts[lattice.cell_index(v)] = 1;
    for &c in colors {
        let mut next = vec![0u128; lattice.index()];
        for (i, &k) in counts.iter().enumerate() {
            if k == 0 {
                continue;
            }
            for u in neighbors(lattice.cell(i)) {
                if f.color_at(u) == c {
                    let j = lattice.cell_index(u);
                    next[j] = next[j]
                        .checked_add(k)
                        .ok_or_else(|| Error::Overflow("walk count".into()))?;
                }
            }
        }
        counts = next;
    }
    Ok(counts.iter().sum())
}

/// `S[b][b1] * S[b1][b2] * ... * S[b(k-1)][bk]`.
pub fn path_product(s: &QuotientMatrix, b: ColorId, colors: &[ColorId]) -> u128 {
    let mut prev = b;
    let mut product = 1u128;
    for &c in colors {
        product *= s.get(prev, c) as u128;
        prev = c;
    }
    product
}

/// `(S^k)[b][b']`, the number of length-`k` walks from a `b`-node to `b'`-nodes.
pub fn dk(s: &QuotientMatrix, b: ColorId, b2: ColorId, k: u32) -> Result<u128, Error> {
    let n = s.n();
    let mut row = vec![0u128; n];
    row[b.index()] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; n];
        for (i, &r) in row.iter().enumerate() {
            if r == 0 {
                continue;
            }
            for (j, &e) in s.rows[i].iter().enumerate() {
                let add = r
                    .checked_mul(e as u128)
                    .and_then(|x| x.checked_add(next[j]))
                    .ok_or_else(|| Error::Overflow(format!("S^{k}")))?;
                next[j] = add;
            }
        }
        row = next;
    }
    Ok(row[b2.index()])
}

/// The positive solution of `S[i][j] P[i] = S[j][i] P[j]` with `ΣP = 1`.
pub fn stationary(s: &QuotientMatrix) -> Result<Vec<Rational>, Error> {
    let n = s.n();
    let mut p: Vec<Option<Rational>> = vec![None; n];
    p[0] = Some(Ratio::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let pi = p[i].expect("queued colors have weights");
        for j in 0..n {
            let (sij, sji) = (s.rows[i][j], s.rows[j][i]);
            if sij == 0 && sji == 0 {
                continue;
            }
            if sij == 0 || sji == 0 {
                return Err(Error::Precondition(format!(
                    "S[{}][{}] = {sij} but S[{}][{}] = {sji}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
            let pj = pi * Ratio::new(sij as i128, sji as i128);
            match p[j] {
                None => {
                    p[j] = Some(pj);
                    queue.push_back(j);
                }
                Some(existing) if existing != pj => {
                    return Err(Error::Precondition(format!(
                        "detailed balance is inconsistent between colors {} and {}",
                        i + 1,
                        j + 1
                    )))
                }
                Some(_) => {}
            }
        }
    }
    let p: Option<Vec<Rational>> = p.into_iter().collect();
    let p = p.ok_or_else(|| Error::Precondition("color graph is disconnected".into()))?;
    let total = p.iter().fold(Rational::zero(), |acc, x| acc + x);
    Ok(p.into_iter().map(|x| x / total).collect())
}

/// Counts `(k, l)` of colors `a` and `b` among a node's neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NodeType {
    pub k: u32,
    pub l: u32,
}

impl fmt::Display for NodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.k, self.l)
    }
}

pub fn node_type(f: &PeriodicColoring, v: Vec2, a: ColorId, b: ColorId) -> Result<NodeType, Error> {
    if a == b {
        return Err(Error::Precondition("node types need two distinct colors".into()));
    }
    for c in [a, b] {
        if c.index() >= f.num_colors() {
            return Err(Error::UnknownColor(c.to_string()));
        }
    }
    let p = profile(f, v);
    let count = |c| p.iter().filter(|&&d| d == c).count() as u32;
    Ok(NodeType {
        k: count(a),
        l: count(b),
    })
}

fn parities(f: &PeriodicColoring) -> Vec<[bool; 2]> {
    let even = f.lattice().even_sublattice();
    let mut seen = vec![[false; 2]; f.num_colors()];
    for v in even.cells() {
        let k = match parity(v) {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        seen[f.color_at(v).index()][k] = true;
    }
    seen
}

/// Whether every color class lies on nodes of a single parity.
pub fn is_bipartite(f: &PeriodicColoring) -> bool {
    parities(f).iter().all(|s| !(s[0] && s[1]))
}

/// Splits every mixed-parity color into an even and an odd subcolor.
pub fn refine_bipartite(f: &PeriodicColoring) -> PeriodicColoring {
    let seen = parities(f);
    if seen.iter().all(|s| !(s[0] && s[1])) {
        return f.clone();
    }
    let lattice = f.lattice().even_sublattice();
    PeriodicColoring::from_labels(lattice, |v| {
        let c = f.color_at(v);
        let token = f.token(c);
        if seen[c.index()] == [true, true] {
            match parity(v) {
                Parity::Even => format!("{token}e"),
                Parity::Odd => format!("{token}o"),
            }
        } else {
            token.to_string()
        }
    })
}

/// Checks the interior nodes of a window against `S`. Nodes with a masked
/// neighbor, or masked themselves, are skipped.
pub fn verify_window(w: &WindowColoring, s: &QuotientMatrix) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in w.interior() {
        let Some(color) = w.get(v) else { continue };
        let observed: Option<Vec<ColorId>> = neighbors(v).iter().map(|&u| w.get(u)).collect();
        let Some(observed) = observed else { continue };
        let observed: [ColorId; 4] = observed.try_into().expect("four neighbors");
        let known = color.index() < s.n() && observed.iter().all(|c| c.index() < s.n());
        let expected = if color.index() < s.n() {
            s.row(color).to_vec()
        } else {
            Vec::new()
        };
        if !known || count_row(s.n(), &observed) != expected {
            out.push(Violation {
                node: v,
                color,
                expected,
                observed,
            });
        }
    }
    out
}

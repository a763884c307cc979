//! The PCG v1 text format.
//!
//! ```text
//! # pcg v1
//! periods (4,0) (0,4)
//! 4 1 4 1
//! 2 4 3 4
//! 4 1 4 1
//! 3 4 2 4
//! ```
//!
//! Row `r`, column `c` is node `(c, r)`. Lines starting with `#` after the
//! first are comments. The periods may be any basis; the rows must cover the
//! normal-form cell `[[w,0],[s,h]]` of the lattice they span.
//!
//! If the tokens are exactly the numbers `1..=n` they are used as color ids.
//! Otherwise colors are numbered by first occurrence in row-major order.

use std::collections::HashMap;

use serde::Serialize;

use crate::coloring::{ColorId, PeriodicColoring};
use crate::error::Error;
use crate::grid::Vec2;
use crate::lattice::Lattice;

pub const MAGIC: &str = "# pcg v1";

pub fn parse(text: &str) -> Result<PeriodicColoring, Error> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, MAGIC)) => {}
        Some((n, _)) => return Err(Error::parse(n, format!("expected '{MAGIC}'"))),
        None => return Err(Error::parse(1, "empty input")),
    }
    let mut body = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (n, header) = body
        .next()
        .ok_or_else(|| Error::parse(2, "missing periods line"))?;
    let (p1, p2) = parse_periods(header).map_err(|m| Error::parse(n, m))?;
    let lattice = Lattice::from_basis(p1, p2)?;

    let mut rows: Vec<Vec<&str>> = Vec::new();
    let mut last_line = n;
    for (n, line) in body {
        let row: Vec<&str> = line.split_whitespace().collect();
        if let Some(bad) = row.iter().find(|t| !valid_token(t)) {
            return Err(Error::parse(n, format!("invalid token '{bad}'")));
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::parse(
                    n,
                    format!("ragged row: {} tokens, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
        last_line = n;
    }
    if rows.len() != lattice.height() as usize {
        return Err(Error::parse(
            last_line,
            format!("periods need {} rows, found {}", lattice.height(), rows.len()),
        ));
    }
    if rows[0].len() != lattice.width() as usize {
        return Err(Error::parse(
            last_line,
            format!(
                "periods need {} columns, found {}",
                lattice.width(),
                rows[0].len()
            ),
        ));
    }

    let tokens: Vec<&str> = rows.into_iter().flatten().collect();
    Ok(from_tokens(lattice, &tokens))
}

/// Parses a stream of PCG blocks, each starting with the `# pcg v1` line.
pub fn parse_many(text: &str) -> Result<Vec<PeriodicColoring>, Error> {
    let mut blocks: Vec<(usize, String)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim() == MAGIC {
            blocks.push((i, String::new()));
        } else if blocks.is_empty() {
            if line.trim().is_empty() {
                continue;
            }
            return Err(Error::parse(i + 1, format!("expected '{MAGIC}'")));
        }
        let block = &mut blocks.last_mut().expect("just pushed").1;
        block.push_str(line);
        block.push('\n');
    }
    blocks
        .into_iter()
        .map(|(offset, b)| {
            parse(&b).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse {
                    line: line + offset,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

fn from_tokens(lattice: Lattice, tokens: &[&str]) -> PeriodicColoring {
    let mut distinct: Vec<&str> = Vec::new();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for &t in tokens {
        seen.entry(t).or_insert_with(|| {
            distinct.push(t);
            distinct.len() - 1
        });
    }
    let n = distinct.len();
    let numeric = distinct.iter().all(|t| {
        !t.starts_with('0') && t.parse::<usize>().is_ok_and(|v| (1..=n).contains(&v))
    });
    if numeric {
        let cells = tokens
            .iter()
            .map(|t| ColorId::new(t.parse().expect("checked numeric")))
            .collect();
        let names = (1..=n).map(|i| i.to_string()).collect();
        PeriodicColoring::from_cells(lattice, cells, names).expect("ids are exactly 1..=n")
    } else {
        let cells = tokens.iter().map(|t| ColorId::from_index(seen[t])).collect();
        let names = distinct.into_iter().map(String::from).collect();
        PeriodicColoring::from_cells(lattice, cells, names).expect("first-occurrence ids")
    }
}

fn valid_token(t: &str) -> bool {
    t.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn parse_periods(line: &str) -> Result<(Vec2, Vec2), String> {
    let rest = line
        .strip_prefix("periods")
        .ok_or("expected 'periods (x,y) (x,y)'")?;
    let compact: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
    let mut vectors = Vec::new();
    let mut s = compact.as_str();
    while !s.is_empty() {
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or("malformed period vector")?;
        let (x, y) = inner.0.split_once(',').ok_or("period vector needs two components")?;
        let parse = |t: &str| t.parse::<i64>().map_err(|_| format!("bad integer '{t}'"));
        vectors.push(Vec2::new(parse(x)?, parse(y)?));
        s = inner.1;
    }
    match vectors[..] {
        [p1, p2] => Ok((p1, p2)),
        _ => Err(format!("expected two period vectors, found {}", vectors.len())),
    }
}

pub(crate) fn header(lattice: &Lattice) -> String {
    format!("{MAGIC}\nperiods {}\n", lattice)
}

/// Renders with the coloring's own tokens, over its stored lattice.
pub fn render(f: &PeriodicColoring) -> String {
    render_with(f, |c| f.token(c).to_string())
}

/// Renders with numeric color ids in place of tokens.
pub fn render_ids(f: &PeriodicColoring) -> String {
    render_with(f, |c| c.to_string())
}

fn render_with(f: &PeriodicColoring, token: impl Fn(ColorId) -> String) -> String {
    let lattice = f.lattice();
    let mut out = header(lattice);
    for row in f.cells().chunks(lattice.width() as usize) {
        let line: Vec<String> = row.iter().map(|&c| token(c)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// The JSON shape `{"periods":[[w,0],[s,h]],"rows":[["t",...],...]}`.
#[derive(Debug, Clone, Serialize)]
pub struct ColoringJson {
    pub periods: Lattice,
    pub rows: Vec<Vec<String>>,
}

impl From<&PeriodicColoring> for ColoringJson {
    fn from(f: &PeriodicColoring) -> Self {
        ColoringJson {
            periods: *f.lattice(),
            rows: f
                .cells()
                .chunks(f.lattice().width() as usize)
                .map(|row| row.iter().map(|&c| f.token(c).to_string()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::c;
    use proptest::prelude::*;

    const CASE_TWO: &str = "# pcg v1\nperiods (4,0) (0,4)\n4 1 4 1\n2 4 3 4\n4 1 4 1\n3 4 2 4\n";

    #[test]
    fn parses_case_two() {
        let f = parse(CASE_TWO).unwrap();
        assert_eq!(f.num_colors(), 4);
        assert_eq!(f.cells().len(), 16);
        assert_eq!(f.color_at(Vec2::new(0, 0)), c(4));
    }

    #[test]
    fn constant_and_comments() {
        let f = parse("# pcg v1\n# a comment\nperiods (1,0) (0,1)\n\nx\n").unwrap();
        assert_eq!(f.num_colors(), 1);
        assert_eq!(f.token(c(1)), "x");
    }

    #[test]
    fn letters_numbered_by_first_occurrence() {
        let f = parse("# pcg v1\nperiods (2,0) (0,1)\nB A\n").unwrap();
        assert_eq!(f.color_at(Vec2::new(0, 0)), c(1));
        assert_eq!(f.token(c(1)), "B");
        // 2..3 is not 1..n, so these are relabeled too
        let g = parse("# pcg v1\nperiods (2,0) (0,1)\n3 2\n").unwrap();
        assert_eq!(g.token(c(1)), "3");
    }

    #[test]
    fn sheared_periods_are_normalized() {
        let f = parse("# pcg v1\nperiods (2,2) (2,-2)\n1 2 1 2\n2 1 2 1\n").unwrap();
        assert_eq!(f.lattice().shear(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            "periods (1,0) (0,1)\n1\n",
            "# pcg v1\nperiods (2,0) (2,0)\n1 2\n",
            "# pcg v1\nperiods (2,0) (0,2)\n1 2\n1\n",
            "# pcg v1\nperiods (2,0) (0,2)\n1 2\n",
            "# pcg v1\nperiods (2,0) (0,1)\n1 2 1\n",
            "# pcg v1\nperiods (2,0)\n1 2\n",
            "# pcg v1\nperiods (2,0) (0,1)\n1 -\n",
            "# pcg v1\n",
        ];
        for text in cases {
            assert!(parse(text).is_err(), "{text:?}");
        }
        assert!(matches!(
            parse(cases[1]),
            Err(Error::DegenerateLattice(_))
        ));
    }

    #[test]
    fn many_blocks() {
        let text = format!("{CASE_TWO}\n{CASE_TWO}");
        assert_eq!(parse_many(&text).unwrap().len(), 2);
        assert_eq!(parse_many("").unwrap().len(), 0);
    }

    #[test]
    fn json_shape() {
        let f = parse("# pcg v1\nperiods (2,0) (1,1)\na b\n").unwrap();
        let json = serde_json::to_string(&ColoringJson::from(&f)).unwrap();
        assert_eq!(json, r#"{"periods":[[2,0],[1,1]],"rows":[["a","b"]]}"#);
    }

    proptest! {
        #[test]
        fn round_trip(w in 1i64..6, h in 1i64..6, s in 0i64..6, seed in proptest::collection::vec(0u32..4, 36),
                      probes in proptest::collection::vec((-50i64..50, -50i64..50), 1000)) {
            let lattice = Lattice::new(w, h, s).unwrap();
            let f = PeriodicColoring::from_labels(lattice, |v| format!("t{}", seed[(v.y * w + v.x) as usize]));
            let g = parse(&render(&f)).unwrap();
            for (x, y) in probes {
                let v = Vec2::new(x, y);
                prop_assert_eq!(f.token(f.color_at(v)), g.token(g.color_at(v)));
            }
            let ids = parse(&render_ids(&f)).unwrap();
            prop_assert_eq!(ids.cells(), f.cells());
        }
    }
}

//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use pcg_core::coloring::c;
use pcg_core::diagonal::{find_special_diagonals, shift_residue_class};
use pcg_core::enumerate::{brute_oracle, enumerate, enumerate_canonical, SearchSpec};
use pcg_core::grid::neighbors;
use pcg_core::lattice::lattices_of_index;
use pcg_core::orbit::is_orbit;
use pcg_core::perfect::{check, dk, path_product, refine_bipartite, stationary};
use pcg_core::twins::{claim6_check, equal_rows, is_covering, merge, theorem1_audit, twin_pairs, Claim6};
use pcg_core::{fixtures, ColorId, Lattice, PeriodicColoring, QuotientMatrix, Rational, Vec2};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn matrix(rows: &[&[u32]]) -> QuotientMatrix {
    QuotientMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn all_fixtures() -> Vec<(&'static str, PeriodicColoring)> {
    fixtures::list().iter().map(|fx| (fx.id, fx.coloring())).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn a1() -> Outcome {
    let f = fixtures::get("II-base").map_err(|e| e.to_string())?;
    let s = check(&f).map_err(|v| v.to_string())?;
    let want = matrix(&[&[0, 0, 0, 4], &[0, 0, 0, 4], &[0, 0, 0, 4], &[2, 1, 1, 0]]);
    ensure(s == want, || format!("got {s}"))?;
    Ok(format!("S = {:?}", s.rows()))
}

fn a2() -> Outcome {
    let mut compared = 0;
    for fx in fixtures::list() {
        let s = check(&fx.coloring()).map_err(|v| format!("{}: {v}", fx.id))?;
        if let Some(printed) = fx.corrected_quotient() {
            ensure(s == printed, || format!("{}: computed {s} differs from printed {printed}", fx.id))?;
            compared += 1;
        }
    }
    Ok(format!("{} fixtures perfect, {compared} equal their printed matrices", fixtures::list().len()))
}

fn a3() -> Outcome {
    for (id, w, h) in [("L1-a", 4, 4), ("L1-b", 4, 8)] {
        let got = fixtures::get(id).unwrap().maximal_periods();
        let want = Lattice::rectangular(w, h).unwrap();
        ensure(got == want, || format!("{id}: maximal periods {got}, expected {want}"))?;
    }
    Ok("L1-a (4,0) (0,4); L1-b (4,0) (0,8)".into())
}

fn a4() -> Outcome {
    let f1 = fixtures::get("8-150-1").unwrap();
    let f2 = fixtures::get("8-150-2").unwrap();
    let (s1, s2) = (check(&f1).map_err(|v| v.to_string())?, check(&f2).map_err(|v| v.to_string())?);
    ensure(s1 == s2, || format!("quotients differ: {s1} vs {s2}"))?;
    ensure(s1.rows().iter().flatten().all(|&e| e <= 1), || "not a {0,1}-matrix".into())?;
    ensure(!is_orbit(&f1), || "8-150-1 is orbit".into())?;
    ensure(is_orbit(&f2), || "8-150-2 is not orbit".into())?;
    Ok("equal {0,1} quotients; orbit false / true".into())
}

fn a5() -> Outcome {
    let f2 = fixtures::get("3-17-2").unwrap();
    let f3 = fixtures::get("3-17-3").unwrap();
    let s = check(&f2).map_err(|v| v.to_string())?;
    ensure(check(&f3).ok() == Some(s.clone()), || "quotients differ".into())?;
    ensure(equal_rows(&s).is_empty(), || "matrix has equal rows".into())?;
    for (id, f) in [("3-17-2", &f2), ("3-17-3", &f3)] {
        let r = refine_bipartite(f);
        let rs = check(&r).map_err(|v| format!("{id} refined: {v}"))?;
        let twins = twin_pairs(&rs);
        ensure(twins.is_empty(), || format!("{id} refined has twins {twins:?}"))?;
        ensure(!is_orbit(f), || format!("{id} is orbit"))?;
    }
    Ok(format!("common S of size {}, refinements twin-free, both non-orbit", s.n()))
}

/// Every coloring found on lattices of index up to 16 with at most 5 colors
/// whose quotient is a covering.
fn enumerated_coverings() -> Vec<PeriodicColoring> {
    let mut out = Vec::new();
    for index in 1..=16 {
        for lattice in lattices_of_index(index) {
            let k = 5.min(lattice.index());
            for f in enumerate(&SearchSpec::new(lattice, k).at_most()).unwrap() {
                if is_covering(&check(&f).unwrap()) {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn a6(coverings: &[PeriodicColoring]) -> Outcome {
    let mut fixtures_seen = 0;
    for (id, f) in all_fixtures() {
        let audit = theorem1_audit(&f).map_err(|e| format!("{id}: {e}"))?;
        if audit.is_covering {
            fixtures_seen += 1;
            ensure(audit.dichotomy_holds, || format!("{id}: {audit:?}"))?;
        }
    }
    for f in coverings {
        let audit = theorem1_audit(f).map_err(|e| e.to_string())?;
        ensure(audit.dichotomy_holds, || format!("{}: {audit:?}", f.canonical()))?;
    }
    ensure(!coverings.is_empty(), || "enumeration found no coverings".into())?;
    Ok(format!("{fixtures_seen} covering fixtures, {} enumerated coverings", coverings.len()))
}

fn a7() -> Outcome {
    for (id, f) in all_fixtures() {
        let s = check(&f).map_err(|v| format!("{id}: {v}"))?;
        let p = stationary(&s).map_err(|e| format!("{id}: {e}"))?;
        ensure(p == f.densities(), || format!("{id}: stationary {p:?} vs densities {:?}", f.densities()))?;
        let total: Rational = p.iter().sum();
        ensure(total == Rational::from_integer(1), || format!("{id}: sum {total}"))?;
        for i in s.colors() {
            for j in s.colors() {
                let lhs = Rational::from_integer(s.get(i, j) as i128) * p[i.index()];
                let rhs = Rational::from_integer(s.get(j, i) as i128) * p[j.index()];
                ensure(lhs == rhs, || format!("{id}: balance fails at ({i},{j})"))?;
            }
        }
    }
    Ok("stationary vector equals densities for every fixture".into())
}

/// Walks on Z² itself, without using periodicity.
fn grid_walks(f: &PeriodicColoring, v: Vec2, colors: &[ColorId]) -> u128 {
    match colors.split_first() {
        None => 1,
        Some((&c, rest)) => neighbors(v)
            .iter()
            .filter(|&&u| f.color_at(u) == c)
            .map(|&u| grid_walks(f, u, rest))
            .sum(),
    }
}

fn grid_walks_to(f: &PeriodicColoring, v: Vec2, k: u32, target: ColorId) -> u128 {
    if k == 0 {
        return (f.color_at(v) == target) as u128;
    }
    neighbors(v).iter().map(|&u| grid_walks_to(f, u, k - 1, target)).sum()
}

fn sequences(n: usize, len: usize) -> Vec<Vec<ColorId>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..n).map(move |i| {
                    let mut t = s.clone();
                    t.push(ColorId::from_index(i));
                    t
                })
            })
            .collect();
    }
    out
}

fn a8() -> Outcome {
    let mut checked = 0u64;
    for (id, f) in all_fixtures() {
        let s = check(&f).map_err(|v| format!("{id}: {v}"))?;
        let seqs: Vec<Vec<ColorId>> = (1..=3).flat_map(|len| sequences(s.n(), len)).collect();
        for v in f.lattice().cells() {
            let b = f.color_at(v);
            for seq in &seqs {
                let (got, want) = (grid_walks(&f, v, seq), path_product(&s, b, seq));
                ensure(got == want, || format!("{id}: {v} {seq:?}: grid {got}, product {want}"))?;
                checked += 1;
            }
            for k in 0..=4 {
                for target in s.colors() {
                    let want = dk(&s, b, target, k).map_err(|e| e.to_string())?;
                    let got = grid_walks_to(&f, v, k, target);
                    ensure(got == want, || format!("{id}: {v} k={k} to {target}: grid {got}, S^k {want}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} walk counts agree"))
}

fn a9() -> Outcome {
    let f = fixtures::get("II-base").unwrap();
    let m = merge(&f, c(1), c(2)).map_err(|e| e.to_string())?;
    let s = check(&m).map_err(|v| v.to_string())?;
    ensure(s == matrix(&[&[0, 0, 4], &[0, 0, 4], &[3, 1, 0]]), || format!("merged S = {s}"))?;
    let mut merges = 0;
    for (id, f) in all_fixtures() {
        let s = check(&f).unwrap();
        for (a, b) in twin_pairs(&s) {
            let m = merge(&f, a, b).map_err(|e| format!("{id} {a}+{b}: {e}"))?;
            check(&m).map_err(|v| format!("{id} {a}+{b}: {v}"))?;
            merges += 1;
        }
    }
    Ok(format!("II-base 1+2 gives the 3:1 matrix; {merges} twin merges re-verify"))
}

fn a10() -> Outcome {
    for alpha in [5, 7, 8, 9, 10] {
        let f = fixtures::lemma2_family_b(alpha).map_err(|e| e.to_string())?;
        check(&f).map_err(|v| format!("alpha={alpha}: {v}"))?;
        ensure(f.num_colors() == alpha as usize, || format!("alpha={alpha}: {} colors", f.num_colors()))?;
        let l = f.maximal_periods();
        ensure(l.contains(Vec2::new(3, 1)) && l.contains(Vec2::new(alpha, 0)), || {
            format!("alpha={alpha}: maximal periods {l}")
        })?;
        ensure(is_orbit(&f), || format!("alpha={alpha}: not orbit"))?;
    }
    ensure(fixtures::lemma2_family_b(6).is_err(), || "alpha=6 accepted".into())?;
    Ok("alpha 5,7,8,9,10 perfect orbit colorings; 6 rejected".into())
}

fn a11() -> Outcome {
    let mut total = 0;
    for (w, h, k) in [(2, 2, 4), (3, 3, 4), (4, 2, 4)] {
        for spec in [
            SearchSpec::new(Lattice::rectangular(w, h).unwrap(), k).at_most(),
            SearchSpec::new(Lattice::rectangular(w, h).unwrap(), 3),
        ] {
            let fast = enumerate_canonical(&spec).map_err(|e| e.to_string())?;
            let slow = brute_oracle(&spec).map_err(|e| e.to_string())?;
            ensure(fast == slow, || format!("{w}x{h}: search {} vs brute {}", fast.len(), slow.len()))?;
            total += fast.len();
        }
    }
    Ok(format!("{total} classes agree on 2x2, 3x3, 4x2"))
}

fn a12() -> Outcome {
    let h = fixtures::get("h").unwrap();
    ensure(!find_special_diagonals(&h).is_empty(), || "h has no special diagonals".into())?;
    let mut shifted = 0;
    for (id, f) in all_fixtures() {
        let s = check(&f).unwrap();
        for d in find_special_diagonals(&f) {
            let g = shift_residue_class(&f, d.orientation, d.residue, d.modulus, 1)
                .map_err(|e| format!("{id}: {e}"))?;
            let t = check(&g).map_err(|v| format!("{id} {} r={} m={}: {v}", d.orientation, d.residue, d.modulus))?;
            ensure(t.equal_up_to_permutation(&s), || format!("{id}: quotient changed to {t}"))?;
            shifted += 1;
        }
    }
    Ok(format!("{shifted} special classes shifted, all perfect with the same quotient"))
}

fn a13(coverings: &[PeriodicColoring]) -> Outcome {
    let mut checked = 0;
    let fixture_coverings = all_fixtures().into_iter().map(|(id, f)| (id.to_string(), f));
    let enumerated = coverings.iter().map(|f| (f.canonical(), f.clone()));
    for (id, f) in fixture_coverings.chain(enumerated) {
        let s = check(&f).unwrap();
        if !is_covering(&s) || !equal_rows(&s).is_empty() {
            continue;
        }
        match claim6_check(&f).map_err(|e| format!("{id}: {e}"))? {
            Claim6::Holds => checked += 1,
            bad => return Err(format!("{id}: {bad:?}")),
        }
    }
    ensure(checked > 0, || "no coverings without equal rows".into())?;
    Ok(format!("{checked} coverings without equal rows satisfy the distance claim"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let coverings = enumerated_coverings();
    let criteria: Vec<Criterion> = vec![
        ("A1", Box::new(a1)),
        ("A2", Box::new(a2)),
        ("A3", Box::new(a3)),
        ("A4", Box::new(a4)),
        ("A5", Box::new(a5)),
        ("A6", Box::new(|| a6(&coverings))),
        ("A7", Box::new(a7)),
        ("A8", Box::new(a8)),
        ("A9", Box::new(a9)),
        ("A10", Box::new(a10)),
        ("A11", Box::new(a11)),
        ("A12", Box::new(a12)),
        ("A13", Box::new(|| a13(&coverings))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("{name} PASS {detail}"),
            Err(why) => {
                failed += 1;
                println!("{name} FAIL {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

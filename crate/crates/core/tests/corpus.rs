use pcg_core::perfect::check;
use pcg_core::{fixtures, orbit::is_orbit, pcg, twins::is_covering};

#[test]
fn every_fixture_is_perfect() {
    for fx in fixtures::list() {
        let f = fx.coloring();
        assert!(check(&f).is_ok(), "{}: {:?}", fx.id, check(&f).err());
    }
}

#[test]
fn printed_matrices_match_after_errata() {
    for fx in fixtures::list() {
        let Some(want) = fx.corrected_quotient() else { continue };
        assert_eq!(check(&fx.coloring()).unwrap(), want, "{}", fx.id);
    }
}

#[test]
fn errata_differ_from_print() {
    let g = fixtures::info("g").unwrap();
    let printed = g.printed_quotient.unwrap();
    for &(i, j, was, fixed) in g.errata {
        assert_eq!(printed[i - 1][j - 1], was);
        assert_ne!(was, fixed);
        let s = check(&g.coloring()).unwrap();
        assert_eq!(s.rows()[i - 1][j - 1], fixed);
    }
}

#[test]
fn metadata_agrees_with_computation() {
    for fx in fixtures::list() {
        let f = fx.coloring();
        assert_eq!(is_covering(&check(&f).unwrap()), fx.covering, "{}", fx.id);
        if let Some(orbit) = fx.orbit {
            assert_eq!(is_orbit(&f), orbit, "{}", fx.id);
        }
    }
}

#[test]
fn fixtures_round_trip_through_text() {
    for fx in fixtures::list() {
        let f = fx.coloring();
        let g = pcg::parse(&pcg::render(&f)).unwrap();
        assert_eq!(f, g, "{}", fx.id);
        assert!(f.equivalent(&g));
    }
    let all: String = fixtures::list().iter().map(|fx| fx.text).collect::<Vec<_>>().join("\n");
    assert_eq!(pcg::parse_many(&all).unwrap().len(), fixtures::list().len());
}

#[test]
fn distinct_fixtures_are_inequivalent() {
    let ids = ["8-150-1", "8-150-2", "3-17-2", "3-17-3", "L1-a", "L1-b"];
    for (i, a) in ids.iter().enumerate() {
        for b in &ids[i + 1..] {
            let (f, g) = (fixtures::get(a).unwrap(), fixtures::get(b).unwrap());
            assert!(!f.equivalent(&g), "{a} ~ {b}");
        }
    }
}

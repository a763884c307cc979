use pcg_core::coloring::ColorPermutation;
use pcg_core::enumerate::{classify, enumerate, SearchSpec};
use pcg_core::grid::d4_elements;
use pcg_core::orbit::{orbits, stabilizer};
use pcg_core::perfect::{check, stationary};
use pcg_core::twins::{merge, twin_pairs};
use pcg_core::{fixtures, ColorId, GridAutomorphism, Lattice, PeriodicColoring, Vec2};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn fixture() -> impl Strategy<Value = PeriodicColoring> {
    (0..fixtures::list().len()).prop_map(|i| fixtures::list()[i].coloring())
}

fn motion() -> impl Strategy<Value = GridAutomorphism> {
    (0usize..8, -20i64..20, -20i64..20)
        .prop_map(|(g, x, y)| GridAutomorphism::new(d4_elements()[g], Vec2::new(x, y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn motions_preserve_the_quotient(f in fixture(), a in motion()) {
        let g = f.transformed(&a);
        prop_assert_eq!(check(&g).unwrap(), check(&f).unwrap());
        prop_assert!(g.equivalent(&f));
        for v in f.lattice().cells() {
            prop_assert_eq!(g.color_at(a.apply(v)), f.color_at(v));
        }
    }

    #[test]
    fn relabeling_permutes_the_quotient(f in fixture(), seed in any::<u64>()) {
        let mut image: Vec<ColorId> = f.colors().collect();
        image.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let pi = ColorPermutation::new(image).unwrap();
        let g = f.permuted(&pi).unwrap();
        prop_assert_eq!(check(&g).unwrap(), check(&f).unwrap().permuted(&pi));
        prop_assert_eq!(g.canonical(), f.canonical());
    }

    #[test]
    fn refining_the_lattice_changes_nothing(f in fixture(), a in 1i64..3, b in 1i64..3) {
        let [p1, p2] = f.lattice().basis();
        let finer = Lattice::from_basis(a * p1, b * p2).unwrap();
        let g = f.with_lattice(finer).unwrap();
        prop_assert_eq!(check(&g).unwrap(), check(&f).unwrap());
        prop_assert_eq!(g.maximal_periods(), f.maximal_periods());
        prop_assert_eq!(g.densities(), f.densities());
    }

    #[test]
    fn stabilizer_elements_preserve_colors(f in fixture()) {
        let group = stabilizer(&f);
        prop_assert!(group.is_group());
        for a in group.elements() {
            for v in f.lattice().cells() {
                prop_assert_eq!(f.color_at(a.apply(v)), f.color_at(v));
            }
        }
        let cells: usize = orbits(&f).iter().map(Vec::len).sum();
        prop_assert_eq!(cells, f.maximal_periods().index());
    }

    #[test]
    fn twin_merges_keep_densities_summed(f in fixture()) {
        let s = check(&f).unwrap();
        let p = stationary(&s).unwrap();
        for (a, b) in twin_pairs(&s) {
            let m = merge(&f, a, b).unwrap();
            let q = stationary(&check(&m).unwrap()).unwrap();
            prop_assert_eq!(q[a.index()], p[a.index()] + p[b.index()]);
        }
    }

    #[test]
    fn enumerated_colorings_are_perfect_and_canonical(w in 1i64..4, h in 1i64..4, k in 1usize..4) {
        let lattice = Lattice::rectangular(w, h).unwrap();
        prop_assume!(k <= lattice.index());
        for f in enumerate(&SearchSpec::new(lattice, k).at_most()).unwrap() {
            let report = classify(&f);
            prop_assert!(report.perfect);
            prop_assert_eq!(&report.canonical, &f.canonical());
            prop_assert!(f.num_colors() <= k);
        }
    }
}

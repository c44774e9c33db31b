mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use rectcount::fill_table;
use rectcount::oracle::{
    canonical_encoding, census, enumerate_grid_tilings, ClassMap, GridTiling, Oracle, Rect,
    Symmetry,
};
use std::sync::OnceLock;

fn five_tile_classes() -> &'static ClassMap {
    static CLASSES: OnceLock<ClassMap> = OnceLock::new();
    CLASSES.get_or_init(|| Oracle::default().enumerate_rectangulations(5).unwrap())
}

/// Re-embeds `tiling` on a larger grid by sending grid line `i` to
/// `xs[i]` / `ys[i]`; both maps must be strictly increasing.
fn stretch(tiling: &GridTiling, xs: &[u32], ys: &[u32]) -> GridTiling {
    let tiles = tiling
        .tiles()
        .iter()
        .map(|t| {
            Rect::new(
                xs[t.x0 as usize],
                ys[t.y0 as usize],
                xs[t.x1 as usize],
                ys[t.y1 as usize],
            )
        })
        .collect();
    GridTiling::new(
        xs[tiling.width() as usize],
        ys[tiling.height() as usize],
        tiles,
    )
    .unwrap()
}

fn increasing(gaps: &[u32]) -> Vec<u32> {
    let mut out = vec![0];
    for g in gaps {
        out.push(out.last().unwrap() + g);
    }
    out
}

#[test]
fn class_counts_through_six() {
    let oracle = Oracle::default();
    let counts: Vec<usize> = (1..=6)
        .map(|m| oracle.enumerate_rectangulations(m).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 6, 25, 128, 758]);

    let six = oracle.enumerate_rectangulations(6).unwrap();
    let by_s = |s| six.values().filter(|c| c.stats.s == s).count();
    assert_eq!((by_s(0), by_s(1), by_s(2)), (642, 114, 2));
}

#[test]
fn census_matches_recursion_through_six() {
    let table = fill_table(6).unwrap();
    let report = Oracle::default().cross_check(6, &table).unwrap();
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    assert!(report.invariant_violations.is_empty());
    assert!(report.is_clean());
    assert_eq!(report.total_classes(), 1 + 2 + 6 + 25 + 128 + 758);

    let four = census(&Oracle::default().enumerate_rectangulations(4).unwrap());
    let total: BigUint = four.values().sum();
    assert_eq!(total, BigUint::from(25u32));
}

#[test]
fn every_class_satisfies_cell_relations() {
    let oracle = Oracle::default();
    for m in 1..=6 {
        for entry in oracle.enumerate_rectangulations(m).unwrap().values() {
            let st = entry.stats;
            assert_eq!(st.k, 2 * st.m + 2 - st.s);
            assert_eq!(st.k + st.m, st.e + 1);
            assert!(st.r < st.m && st.s < st.m);
        }
    }
}

#[test]
fn symmetric_counts() {
    let oracle = Oracle::default();
    let s: Vec<BigUint> = (1..=6)
        .map(|n| oracle.d8_symmetric_count(n).unwrap())
        .collect();
    let want: Vec<BigUint> = [1u32, 0, 0, 1, 0, 0]
        .into_iter()
        .map(BigUint::from)
        .collect();
    assert_eq!(s, want);
}

#[test]
fn every_grid_tiling_lands_in_a_known_class() {
    let oracle = Oracle::default();
    let classes = oracle.enumerate_rectangulations(5).unwrap();
    // grids wider than m are outside the sweep but realize the same classes
    for t in enumerate_grid_tilings(7, 2, 5) {
        assert!(classes.contains_key(&canonical_encoding(&t)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn encoding_survives_monotone_rescaling(
        idx in 0usize..128,
        xgaps in proptest::collection::vec(1u32..4, 5),
        ygaps in proptest::collection::vec(1u32..4, 5),
    ) {
        let classes = five_tile_classes();
        let (key, entry) = classes.iter().nth(idx).unwrap();
        let t = &entry.representative;
        let xs = increasing(&xgaps[..t.width() as usize]);
        let ys = increasing(&ygaps[..t.height() as usize]);
        prop_assert_eq!(&canonical_encoding(&stretch(t, &xs, &ys)), key);
    }

    #[test]
    fn symmetry_images_keep_m_and_s(idx in 0usize..128, g in 0usize..8) {
        let classes = five_tile_classes();
        let entry = classes.values().nth(idx).unwrap();
        let image = entry.representative.transformed(Symmetry::all()[g]);
        let target = &classes[&canonical_encoding(&image)];
        prop_assert_eq!(target.stats.m, entry.stats.m);
        prop_assert_eq!(target.stats.s, entry.stats.s);
    }
}

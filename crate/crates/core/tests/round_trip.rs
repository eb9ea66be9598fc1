mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sunlet_crossings::cli::format::{read_drawing, read_graph, write_drawing, write_graph};
use sunlet_crossings::construction::{construct_sunlet_drawing, sunlet_geometry, upper_bound};
use sunlet_crossings::drawing::{
    crossing_count, export_svg, geometric_to_combinatorial, import_svg, validate_good_drawing, SvgSource,
};
use sunlet_crossings::heuristic_solver::heuristic_minimize;

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn construction_survives_json(n in 3usize..8, m in 1usize..6) {
        let d = construct_sunlet_drawing(n, m).unwrap();
        let text = write_drawing(&d);
        let back = read_drawing(&text).unwrap();
        prop_assert!(validate_good_drawing(&back).is_valid());
        prop_assert_eq!(crossing_count(&back).unwrap(), upper_bound(n, m).unwrap());
        prop_assert_eq!(write_drawing(&back), text);
    }

    #[test]
    fn heuristic_drawings_survive_json(n in 5usize..8, extra in 0usize..8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, n + extra);
        prop_assume!(g.is_connected());
        let gt = write_graph(&g);
        prop_assert_eq!(&read_graph(&gt).unwrap(), &g);
        let d = heuristic_minimize(&g, None, 1, seed).unwrap();
        let text = write_drawing(&d);
        let back = read_drawing(&text).unwrap();
        // rotations come back rotated to start at their smallest name
        prop_assert_eq!(&back.crossings, &d.crossings);
        prop_assert_eq!(validate_good_drawing(&back).is_valid(), validate_good_drawing(&d).is_valid());
        prop_assert_eq!(write_drawing(&back), text);
    }
}

#[test]
fn svg_round_trip_recounts_crossings() {
    let geo = sunlet_geometry(6, 3).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s6k13.svg");
    export_svg(SvgSource::Geometric(&geo), &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let back = import_svg(&text).unwrap();
    assert_eq!(back.base, geo.base);
    let d = geometric_to_combinatorial(&back).unwrap();
    assert!(validate_good_drawing(&d).is_valid());
    assert_eq!(crossing_count(&d).unwrap(), 18);
}

#[test]
fn schematic_svg_of_a_combinatorial_drawing() {
    let d = construct_sunlet_drawing(4, 2).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4k12.svg");
    export_svg(SvgSource::Combinatorial(&d), &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    assert_eq!(text.matches("data-vertex=").count(), d.base.vertex_count());
}

mod common;

use common::{mutate_alternation, mutate_duplicate_pair, mutate_genus_one, mutate_incident_pair};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sunlet_crossings::construction::construct_sunlet_drawing;
use sunlet_crossings::drawing::{validate_good_drawing, ViolationKind};
use sunlet_crossings::heuristic_solver::heuristic_minimize;

#[test]
fn every_mutant_is_rejected_with_its_category() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut counts = [0usize; 4];
    for n in 3..=6 {
        for m in 2..=4 {
            let c = construct_sunlet_drawing(n, m).unwrap();
            let h = heuristic_minimize(&c.base, None, 2, n as u64 * 31 + m as u64).unwrap();
            for d in [c, h] {
                assert!(validate_good_drawing(&d).is_valid());
                for p in 0..d.crossings.len() {
                    let r = validate_good_drawing(&mutate_duplicate_pair(&d, p));
                    assert!(r.has(ViolationKind::RepeatedPair), "{r:?}");
                    counts[0] += 1;
                    if let Some(x) = mutate_incident_pair(&d, p) {
                        let r = validate_good_drawing(&x);
                        assert!(r.has(ViolationKind::SharedEndpoint), "{r:?}");
                        counts[1] += 1;
                    }
                    let r = validate_good_drawing(&mutate_alternation(&d, p));
                    assert!(r.has(ViolationKind::NonTransversal), "{r:?}");
                    counts[2] += 1;
                }
                let x = mutate_genus_one(&d, &mut rng).expect("some transposition has genus 1");
                let r = validate_good_drawing(&x);
                assert!(r.has(ViolationKind::NotPlane), "{r:?}");
                assert_eq!(r.genus, Some(1));
                counts[3] += 1;
            }
        }
    }
    assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
}

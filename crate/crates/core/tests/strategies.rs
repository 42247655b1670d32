use copthrottle::chordal::{ball_cover_strategy, chordal_capture_fast};
use copthrottle::families::{cycle, path, random_chordal, random_connected, random_tree};
use copthrottle::game::solve_placement;
use copthrottle::graph::{distances_from_set, Graph};
use copthrottle::strategy::{certify_strategy, feedback_bound, staged_decomposition, StagedParams};
use copthrottle::{Budget, CopConfig, GameValue, Error};

fn exact(g: &Graph, cops: &[usize]) -> GameValue {
    let s = CopConfig::new(cops.to_vec()).unwrap();
    solve_placement(g, &s, Budget::default()).unwrap().0
}

fn within(value: GameValue, bound: u32) -> bool {
    value.finite().is_some_and(|v| v <= bound)
}

#[test]
fn ball_cover_holds_on_random_chordal_graphs() {
    for seed in 0..300 {
        let g = random_chordal(5 + (seed as usize % 12), seed).unwrap();
        for h in g.vertices() {
            let s = CopConfig::new(vec![h]).unwrap();
            let ecc = distances_from_set(&g, &[h]).unwrap().max().finite().unwrap() as u32;
            let cert = ball_cover_strategy(&g, &s, ecc, Budget::default()).unwrap();
            assert!(cert.validated, "seed {seed} home {h}");
            assert!(cert.claimed_bound >= ecc);
            if seed < 60 {
                assert_eq!(exact(&g, &[h]), GameValue::Finite(cert.claimed_bound));
            }
            assert_eq!(chordal_capture_fast(&g, &s).unwrap(), GameValue::Finite(ecc));
        }
        let pair = vec![0, g.n() - 1];
        let reach = distances_from_set(&g, &pair).unwrap().max().finite().unwrap() as u32;
        let s = CopConfig::new(pair.clone()).unwrap();
        let cert = ball_cover_strategy(&g, &s, reach, Budget::default()).unwrap();
        assert!(cert.validated);
        assert!(within(exact(&g, &pair), cert.claimed_bound));
    }
}

#[test]
fn ball_cover_rejects_bad_inputs() {
    let s = CopConfig::new(vec![0]).unwrap();
    let b = Budget::default();
    assert!(matches!(ball_cover_strategy(&cycle(4).unwrap(), &s, 2, b), Err(Error::NotChordal(_))));
    assert!(matches!(ball_cover_strategy(&path(5), &s, 1, b), Err(Error::CoverViolated(2))));
}

#[test]
fn feedback_certificates_are_sound() {
    for seed in 0..25 {
        let g = random_connected(9, 0.15, seed).unwrap();
        let cert = feedback_bound(&g, Budget::default()).unwrap();
        assert!(cert.validated, "seed {seed}");
        if cert.cops.len() <= 3 {
            assert!(within(exact(&g, &cert.cops), cert.claimed_bound));
        }
        let t = random_tree(14, seed).unwrap();
        let cert = feedback_bound(&t, Budget::default()).unwrap();
        assert!(cert.validated);
        assert!(cert.cost() < 4 + 3);
    }
}

#[test]
fn staged_certificates_are_sound() {
    let params = StagedParams { long_len: 4, guard_r1: 1, star_deg: 3, mid_len: 2, guard_r2: 1, reserve: None };
    for seed in 0..25 {
        let g = random_connected(10, 0.12, seed).unwrap();
        let cert = staged_decomposition(&g, params, Budget::default()).unwrap();
        assert!(cert.validated && cert.complete, "seed {seed}");
        if cert.cops.len() <= 4 {
            assert!(within(exact(&g, &cert.cops), cert.claimed_bound));
        }
        let cert = staged_decomposition(&g, StagedParams::from_lambert(g.n()).unwrap(), Budget::default()).unwrap();
        assert!(cert.validated);
    }
}

#[test]
fn certificate_edge_cases() {
    let g = cycle(4).unwrap();
    let lazy = copthrottle::strategy::PlacementCertificate::new(
        vec![0],
        vec![copthrottle::strategy::Stage::Stationary { cops: vec![0] }],
        10,
    )
    .unwrap();
    let out = certify_strategy(&g, &lazy).unwrap();
    assert!(!out.valid && out.worst_rounds.is_none());
    let all = copthrottle::strategy::PlacementCertificate::new(
        vec![0, 1, 2, 3],
        vec![copthrottle::strategy::Stage::Stationary { cops: vec![0, 1, 2, 3] }],
        0,
    )
    .unwrap();
    let out = certify_strategy(&g, &all).unwrap();
    assert!(out.valid && out.worst_rounds == Some(0));
    let s = CopConfig::new(vec![2]).unwrap();
    let cert = ball_cover_strategy(&path(5), &s, 2, Budget::default()).unwrap();
    assert_eq!(certify_strategy(&path(5), &cert).unwrap().worst_rounds, Some(2));
}


/// A chordal graph where one cop at distance at most two from every vertex
/// still needs three rounds: vertex 0 is farthest from 3 but is no corner.
#[test]
fn distance_formula_can_undershoot_on_chordal_graphs() {
    let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 4), (0, 6), (1, 2), (1, 3), (1, 6), (2, 3), (2, 4), (2, 5)]).unwrap();
    assert!(copthrottle::chordal::is_chordal(&g));
    let s = CopConfig::new(vec![3]).unwrap();
    assert_eq!(chordal_capture_fast(&g, &s).unwrap(), GameValue::Finite(2));
    assert_eq!(exact(&g, &[3]), GameValue::Finite(3));
    let cert = ball_cover_strategy(&g, &s, 2, Budget::default()).unwrap();
    assert!(cert.validated);
    assert_eq!(cert.claimed_bound, 3);
}

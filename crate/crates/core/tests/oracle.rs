mod common;

use common::{boundary, brute_capture_time, finite, is_chordal, is_cop_win, max_dist, radius, INF};
use copthrottle::chordal::{is_chordal as lib_chordal, lexbfs_order};
use copthrottle::game::{cop_number, solve};
use copthrottle::graph::enumerate::connected_graphs_up_to;
use copthrottle::graph::{boundary_vertices, distances_from_set, radius as lib_radius};
use copthrottle::{Budget, CopConfig};

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(n, k - 1) {
        let lo = rest.last().copied().unwrap_or(0);
        for v in lo..n {
            let mut s = rest.clone();
            s.push(v);
            out.push(s);
        }
    }
    out
}

#[test]
fn engine_matches_brute_force_on_all_small_connected_graphs() {
    let graphs = connected_graphs_up_to(6).unwrap();
    assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21 + 112);
    for g in &graphs {
        for k in 1..=2 {
            let table = solve(g, k, Budget::default()).unwrap();
            for s in multisets(g.n(), k) {
                let engine = finite(table.capture_time(&CopConfig::new(s.clone()).unwrap()).unwrap());
                let brute = brute_capture_time(g, &s);
                assert_eq!(engine, brute, "graph {:?}, placement {s:?}", g.edges().collect::<Vec<_>>());
                if brute != INF {
                    assert!(brute as usize >= max_dist(g, &s).unwrap(), "robber can stand still");
                }
            }
        }
    }
}

#[test]
fn cop_win_and_chordal_match_structural_oracles() {
    for g in connected_graphs_up_to(7).unwrap() {
        let c = cop_number(&g, Budget::default()).unwrap();
        assert_eq!(c == 1, is_cop_win(&g), "{:?}", g.edges().collect::<Vec<_>>());
        assert_eq!(lib_chordal(&g), is_chordal(&g));
        assert_eq!(lexbfs_order(&g).chordal, is_chordal(&g));
        if is_chordal(&g) {
            assert_eq!(c, 1, "chordal graphs are cop-win");
        }
    }
}

#[test]
fn distances_boundary_and_radius_match() {
    for g in connected_graphs_up_to(6).unwrap() {
        assert_eq!(lib_radius(&g).finite(), radius(&g));
        for v in g.vertices() {
            assert_eq!(boundary_vertices(&g, v).unwrap(), boundary(&g, v));
            assert_eq!(distances_from_set(&g, &[v]).unwrap().max().finite(), max_dist(&g, &[v]));
        }
    }
}

#[test]
fn three_cop_values_match_on_the_petersen_graph() {
    let g = copthrottle::families::petersen();
    let table = solve(&g, 3, Budget::default()).unwrap();
    for s in [[0, 2, 6], [0, 1, 2], [0, 0, 0], [5, 7, 9]] {
        let engine = finite(table.capture_time(&CopConfig::new(s.to_vec()).unwrap()).unwrap());
        assert_eq!(engine, brute_capture_time(&g, &s), "placement {s:?}");
    }
}

mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use sternbrocot::diagram::{funnel, vertex_index, Diagram};
use sternbrocot::rational::ExtendedRational;

type Tri = [(i64, i64); 3];

fn diagram_triangles(d: &Diagram) -> BTreeSet<Tri> {
    d.triangles()
        .iter()
        .map(|t| [to_i64(&t[0]), to_i64(&t[1]), to_i64(&t[2])])
        .collect()
}

#[test]
fn vertices_match_gcd_scan() {
    for (lo, hi) in [
        ((0, 1), (1, 1)),
        ((-2, 1), (1, 1)),
        ((1, 3), (1, 2)),
        ((-7, 4), (5, 3)),
    ] {
        for max_den in [1, 2, 5, 12, 30] {
            let Ok(d) = Diagram::build(&er(lo.0, lo.1), &er(hi.0, hi.1), max_den) else {
                continue;
            };
            let want = fractions_in(lo, hi, max_den as i64);
            let got: Vec<(i64, i64)> = d.vertices().iter().map(to_i64).collect();
            let mut want_sorted = want.clone();
            want_sorted.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
            assert_eq!(got, want_sorted, "window {lo:?}..{hi:?} max_den {max_den}");
            assert_eq!(got.len(), gcd_scan_count(lo, hi, max_den as i64));
        }
    }
}

#[test]
fn triangles_match_brute_force() {
    for (lo, hi, max_den) in [
        ((0, 1), (1, 1), 12),
        ((-1, 1), (1, 1), 9),
        ((2, 5), (3, 4), 15),
    ] {
        let d = Diagram::build(&er(lo.0, lo.1), &er(hi.0, hi.1), max_den).unwrap();
        let fracs = fractions_in(lo, hi, max_den as i64);
        let brute: BTreeSet<Tri> = brute_triples(&fracs).into_iter().collect();
        assert_eq!(diagram_triangles(&d), brute, "window {lo:?}..{hi:?}");
        let edges: BTreeSet<_> = d
            .edges()
            .iter()
            .map(|(a, b)| (to_i64(a), to_i64(b)))
            .collect();
        let mut brute_edges = BTreeSet::new();
        for (i, a) in fracs.iter().enumerate() {
            for b in &fracs[i + 1..] {
                if farey(*a, *b) {
                    let (x, y) = if lt(*a, *b) { (*a, *b) } else { (*b, *a) };
                    brute_edges.insert((x, y));
                }
            }
        }
        assert_eq!(edges, brute_edges);
    }
}

#[test]
fn edges_do_not_cross_on_negative_windows() {
    let d = Diagram::build(&er(-3, 2), &er(1, 2), 12).unwrap();
    let l: i128 = 27720;
    let segs: Vec<_> = d
        .edges()
        .iter()
        .map(|(a, b)| (nu_scaled(to_i64(a), l), nu_scaled(to_i64(b), l)))
        .collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            assert!(
                !open_segments_meet(segs[i].0, segs[i].1, segs[j].0, segs[j].1),
                "{:?} {:?}",
                d.edges()[i],
                d.edges()[j]
            );
        }
    }
}

#[test]
fn segment_oracle_sanity() {
    let p = |x: i128, y: i128| (x, y);
    assert!(open_segments_meet(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
    assert!(!open_segments_meet(p(0, 0), p(1, 1), p(1, 1), p(2, 0)));
    assert!(open_segments_meet(p(0, 0), p(2, 0), p(1, 0), p(3, 0)));
    assert!(!open_segments_meet(p(0, 0), p(1, 0), p(1, 0), p(2, 0)));
    assert!(open_segments_meet(p(0, 0), p(2, 0), p(1, 0), p(1, 5)));
}

#[test]
fn funnels_match_the_ray_oracle_for_large_denominators() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = Diagram::build(&er(0, 1), &er(1, 1), 150).unwrap();
    let tris: Vec<Tri> = diagram_triangles(&d).into_iter().collect();
    for _ in 0..150 {
        let q = rng.gen_range(61..=150i64);
        let p = rng.gen_range(1..q);
        let alpha = ExtendedRational::new(p, q).unwrap();
        let (p, q) = to_i64(&alpha);
        let f = funnel(&alpha).unwrap();
        let oracle: BTreeSet<Tri> = ray_triangles(&tris, (p, q)).into_iter().collect();
        let mine: BTreeSet<Tri> = f
            .triangles()
            .iter()
            .map(|t| [to_i64(&t[0]), to_i64(&t[1]), to_i64(&t[2])])
            .collect();
        assert_eq!(mine, oracle, "{alpha}");
        let edges = triangle_edges(&oracle.iter().copied().collect::<Vec<_>>());
        for v in f.vertices() {
            let want = crossing_index(&edges, to_i64(&v), (p, q));
            assert_eq!(vertex_index(&f, &v).unwrap(), want, "{alpha} at {v}");
        }
    }
}

#[test]
fn translated_funnels_are_translates() {
    for (p, q) in [(2, 7), (13, 30), (5, 8)] {
        let base = funnel(&er(p, q)).unwrap();
        for k in [-3i64, 1, 4] {
            let moved = funnel(&er(p + k * q, q)).unwrap();
            let shifted: Vec<_> = base
                .triangles()
                .iter()
                .map(|t| t.clone().map(|v| v.translate(&k.into())))
                .collect();
            assert_eq!(moved.triangles(), shifted.as_slice());
        }
    }
}

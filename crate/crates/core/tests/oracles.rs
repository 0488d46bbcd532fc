//! Library invariants against the independent oracles in `common`.

mod common;

use common::oracles::{
    exhaustive_bracket, oracle_jones, render, v2_from_jones, v3_from_jones, Poly,
};
use common::{corpus, fixture_braid, knot_fixtures};
use shortcircuit::closure::{parse_gauss_code, short_circuit_close, simplify};
use shortcircuit::invariants::{casson_v2, jones, kauffman_bracket, vassiliev_v3, LaurentPoly};

fn as_poly(p: &LaurentPoly) -> Poly {
    p.terms().map(|(e, c)| (e as i64, c)).collect()
}

#[test]
fn oracle_reproduces_tabulated_jones() {
    for (name, f) in knot_fixtures() {
        let d = short_circuit_close(&fixture_braid(&f)).unwrap();
        let v = oracle_jones(&d);
        assert_eq!(render(&v, "t"), f.jones, "{name}");
        assert_eq!(v2_from_jones(&v), f.v2, "{name}");
        assert_eq!(v3_from_jones(&v), f.v3, "{name}");
    }
}

#[test]
fn oracle_kinks() {
    let pos = parse_gauss_code("O1+ U1+").unwrap();
    let expected: Poly = [(3, -1)].into_iter().collect();
    assert_eq!(exhaustive_bracket(&pos), expected);
    assert_eq!(oracle_jones(&pos), [(0, 1)].into_iter().collect());
}

#[test]
fn fixtures_match_library() {
    for (name, f) in knot_fixtures() {
        let b = fixture_braid(&f);
        let d = short_circuit_close(&b).unwrap();
        assert_eq!(jones(&d, 40).unwrap().to_string(), f.jones, "{name}");
        assert_eq!(casson_v2(&d), f.v2, "{name}");
        assert_eq!(vassiliev_v3(&d), f.v3, "{name}");
        assert_eq!(
            shortcircuit::closure::bridge_upper_bound(&b),
            f.bridge_upper_bound,
            "{name}"
        );
    }
}

#[test]
fn bracket_matches_state_enumeration() {
    let mut checked = 0;
    for (label, d) in corpus(101, 400, 12) {
        if d.crossing_count() > 12 {
            continue;
        }
        assert_eq!(
            as_poly(&kauffman_bracket(&d, 40).unwrap()),
            exhaustive_bracket(&d),
            "{label}"
        );
        checked += 1;
    }
    assert!(checked > 300);
}

#[test]
fn jones_and_vassiliev_match_jones_derivatives() {
    for (label, d) in corpus(202, 300, 14) {
        if d.crossing_count() > 14 {
            continue;
        }
        let v = oracle_jones(&d);
        assert_eq!(as_poly(&jones(&d, 40).unwrap()), v, "{label}");
        assert_eq!(casson_v2(&d), v2_from_jones(&v), "{label}");
        assert_eq!(vassiliev_v3(&d), v3_from_jones(&v), "{label}");
    }
}

#[test]
fn simplified_diagrams_keep_oracle_values() {
    for (label, d) in corpus(303, 200, 12) {
        let s = simplify(&d);
        assert!(s.crossing_count() <= d.crossing_count());
        if d.crossing_count() <= 12 {
            assert_eq!(oracle_jones(&s), oracle_jones(&d), "{label}");
        }
    }
}

#[test]
fn mirror_and_connected_sum() {
    let c = corpus(404, 120, 8);
    for w in c.windows(2) {
        let (a, b) = (&w[0].1, &w[1].1);
        let m = a.mirror();
        assert_eq!(casson_v2(&m), casson_v2(a));
        assert_eq!(vassiliev_v3(&m), -vassiliev_v3(a));
        assert_eq!(
            jones(&m, 40).unwrap(),
            jones(a, 40).unwrap().invert_variable()
        );
        let s = a.connect_sum(b);
        assert_eq!(casson_v2(&s), casson_v2(a) + casson_v2(b));
        assert_eq!(vassiliev_v3(&s), vassiliev_v3(a) + vassiliev_v3(b));
        assert_eq!(
            jones(&s, 40).unwrap(),
            jones(a, 40).unwrap().mul(&jones(b, 40).unwrap()).unwrap()
        );
    }
    let t = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let zero = t.connect_sum(&t.mirror());
    assert_eq!(vassiliev_v3(&zero), 0);
    assert_eq!(casson_v2(&zero), 2);
}

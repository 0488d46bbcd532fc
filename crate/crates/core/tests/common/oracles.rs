//! Oracles that share no code with the library's invariant evaluation.
//!
//! The bracket is summed over all `2^c` states straight from the PD code,
//! with the usual convention for `X(a,b,c,d)` listed counterclockwise from
//! the incoming under-arc: the A-smoothing joins `a–b` and `c–d`, the
//! B-smoothing `a–d` and `b–c`. The long knot is closed up by identifying
//! its two open arcs. `v2` and `v3` are read off derivatives of the Jones
//! polynomial at `t = 1`.

use std::collections::BTreeMap;

use shortcircuit::closure::LongKnotDiagram;

/// Integer Laurent polynomial as exponent → coefficient.
pub type Poly = BTreeMap<i64, i128>;

fn add(p: &mut Poly, e: i64, c: i128) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            add(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Kauffman bracket in `A` by full state enumeration, normalized so the
/// unknot is 1.
pub fn exhaustive_bracket(d: &LongKnotDiagram) -> Poly {
    let pd = d.crossings();
    let n = pd.len();
    assert!(n <= 20, "exhaustive enumeration is for small diagrams");
    // arc 2n is arc 0
    let arcs = (2 * n).max(1);
    let label = |x: usize| x % arcs;
    let delta: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut delta_pow = vec![[(0i64, 1i128)].into_iter().collect::<Poly>()];
    for k in 1..=n + 1 {
        let next = mul(&delta_pow[k - 1], &delta);
        delta_pow.push(next);
    }
    let mut total = Poly::new();
    for state in 0u64..(1u64 << n) {
        let mut parent: Vec<usize> = (0..arcs).collect();
        let mut a_minus_b = 0i64;
        for (k, x) in pd.iter().enumerate() {
            let [a, b, c, e] = x.pd.map(label);
            let pairs = if state >> k & 1 == 0 {
                a_minus_b += 1;
                [(a, b), (c, e)]
            } else {
                a_minus_b -= 1;
                [(a, e), (b, c)]
            };
            for (p, q) in pairs {
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                parent[rp] = rq;
            }
        }
        let loops = (0..arcs).filter(|&x| find(&mut parent, x) == x).count();
        for (&e, &c) in &delta_pow[loops - 1] {
            add(&mut total, e + a_minus_b, c);
        }
    }
    total
}

/// Jones polynomial in `t` from a bracket: `(-A^3)^-w ⟨D⟩` with
/// `A^-4 = t`.
pub fn jones_from_bracket(bracket: &Poly, writhe: i64) -> Poly {
    let sign: i128 = if writhe % 2 == 0 { 1 } else { -1 };
    let mut out = Poly::new();
    for (&e, &c) in bracket {
        let a_exp = e - 3 * writhe;
        assert_eq!(a_exp % 4, 0, "knot Jones polynomial has integral exponents");
        add(&mut out, -a_exp / 4, sign * c);
    }
    out
}

pub fn oracle_jones(d: &LongKnotDiagram) -> Poly {
    let w: i64 = d.signs().iter().map(|&s| s as i64).sum();
    jones_from_bracket(&exhaustive_bracket(d), w)
}

fn falling(p: &Poly, k: i64) -> i128 {
    p.iter()
        .map(|(&e, &c)| c * (0..k).map(|i| (e - i) as i128).product::<i128>())
        .sum()
}

/// Second Conway coefficient from `V''(1) = -6 a_2`.
pub fn v2_from_jones(v: &Poly) -> i64 {
    let d2 = falling(v, 2);
    assert_eq!(d2 % 6, 0);
    (-d2 / 6) as i64
}

/// Degree-3 invariant from `-(V'''(1) + 3 V''(1)) / 36`, which is `+1` on
/// the right-handed trefoil.
pub fn v3_from_jones(v: &Poly) -> i64 {
    let s = falling(v, 3) + 3 * falling(v, 2);
    assert_eq!(s % 36, 0);
    (-s / 36) as i64
}

/// Renders like the library's polynomial display, for comparing with
/// fixture strings.
pub fn render(p: &Poly, var: &str) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(&e, &c)| {
            if e == 0 {
                format!("{c}")
            } else {
                format!("{c}*{var}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

//! Cross-checks against brute-force oracles that share no code path with the
//! library routines they test.

use std::cmp::Ordering;

use fordapprox_core::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn q(n: i64, d: i64) -> RealNumber {
    RealNumber::Rational(r(n, d))
}

/// Reduced fractions with `den <= max_den` in `[lo, hi]`, as `(num, den)`.
fn grid(lo: i64, hi: i64, max_den: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d in 1..=max_den {
        for c in lo * d..=hi * d {
            if c.gcd(&d) == 1 {
                out.push((c, d));
            }
        }
    }
    out
}

/// Best approximation of the second kind straight from the definition:
/// every reduced `c/d` with `d <= b` in a wide numerator range, `|dα − c|`
/// computed in exact integers scaled by `den(α)`.
fn best_approx_oracle(x: (i64, i64), alpha: (i64, i64)) -> bool {
    let (a, b) = x;
    let (p, s) = alpha;
    let own = (b * p - a * s).abs();
    for d in 1..=b {
        let centre = d * p / s;
        for c in centre - 3 * d - 5..=centre + 3 * d + 5 {
            if c.gcd(&d) != 1 || (c, d) == (a, b) {
                continue;
            }
            let other = (d * p - c * s).abs();
            if other <= own {
                return false;
            }
        }
    }
    true
}

#[test]
fn best_approx_matches_definition_oracle() {
    for &(a, b) in &grid(-1, 2, 10) {
        for &(p, s) in &grid(0, 1, 10) {
            let expected = best_approx_oracle((a, b), (p, s));
            assert_eq!(is_best_approx_2nd(&r(a, b), &q(p, s)).unwrap(), expected, "x={a}/{b} α={p}/{s}");
        }
    }
}

/// `α` lies strictly between `x` and `y`, compared as cross-multiplied i64.
fn strictly_between(alpha: (i64, i64), x: (i64, i64), y: (i64, i64)) -> bool {
    let lt = |u: (i64, i64), v: (i64, i64)| u.0 * v.1 < v.0 * u.1;
    (lt(x, alpha) && lt(alpha, y)) || (lt(y, alpha) && lt(alpha, x))
}

/// Tangent neighbours of `x` with larger denominator, up to `12·b`.
fn tangent_smaller_neighbours(x: (i64, i64)) -> Vec<(i64, i64)> {
    let (a, b) = x;
    let mut out = Vec::new();
    for d in b + 1..=12 * b {
        for c in a * d / b - 2..=a * d / b + 2 {
            if (a * d - b * c).abs() == 1 {
                out.push((c, d));
            }
        }
    }
    out
}

#[test]
fn witness_matches_tangent_enumeration() {
    for &(a, b) in &grid(-1, 2, 9) {
        for &(p, s) in &grid(0, 1, 9) {
            let neighbours = tangent_smaller_neighbours((a, b));
            let found = statement_v_witness(&r(a, b), &q(p, s)).unwrap();
            if (a, b) == (p, s) {
                // Any neighbour qualifies; the convention picks the right-hand one
                // of least denominator.
                let best = neighbours
                    .iter()
                    .filter(|&&(c, d)| c * b > a * d)
                    .min_by_key(|&&(_, d)| d)
                    .unwrap();
                assert_eq!(found, Some(r(best.0, best.1)));
                continue;
            }
            let exists = neighbours.iter().any(|&y| strictly_between((p, s), (a, b), y));
            assert_eq!(found.is_some(), exists, "x={a}/{b} α={p}/{s}");
            if let Some(y) = found {
                let y = (y.numer().to_i64().unwrap(), y.denom().to_i64().unwrap());
                assert!(neighbours.contains(&y));
                assert!(strictly_between((p, s), (a, b), y));
            }
        }
    }
}

#[test]
fn witness_absent_for_one_third_against_three_fifths() {
    // Every right neighbour of 1/3 with denominator in (3, 36] sits at or below 2/5.
    let right: Vec<_> = tangent_smaller_neighbours((1, 3))
        .into_iter()
        .filter(|&(c, d)| 3 * c > d)
        .collect();
    assert!(right.iter().all(|&(c, d)| 5 * c <= 2 * d), "{right:?}");
    assert_eq!(statement_v_witness(&r(1, 3), &q(3, 5)).unwrap(), None);
}

/// Farey sequence by the next-term recurrence, independent of `fractions_in`.
fn farey_len(n: i64) -> usize {
    let (mut a, mut b, mut c, mut d) = (0, 1, 1, n);
    let mut len = 1;
    while c <= n {
        let k = (n + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
        len += 1;
    }
    let _ = (a, b);
    len
}

fn totient(n: i64) -> i64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as i64
}

#[test]
fn farey_counts_agree() {
    for n in 1..=40 {
        let by_totient = 1 + (1..=n).map(totient).sum::<i64>();
        assert_eq!(farey_len(n) as i64, by_totient, "n={n}");
        assert_eq!(fractions_in(&r(0, 1), &r(1, 1), n as u64).len() as i64, by_totient, "n={n}");
    }
    assert_eq!(farey_len(5), 11);
    assert_eq!(farey_len(50), 775);
}

/// Sign of `p/s − √n` from `p² − n·s²`.
fn cmp_sqrt(n: i64, p: &BigInt, s: &BigInt) -> Ordering {
    if p.is_negative() {
        return Ordering::Greater;
    }
    (BigInt::from(n) * s * s).cmp(&(p * p))
}

/// Continued fraction of `√n` from two rational bounds obtained by bisection
/// on `p² <> n·q²`: the common prefix of the two expansions belongs to `√n`.
fn sqrt_partials_by_bisection(n: i64, terms: usize) -> Vec<BigInt> {
    let scale = BigInt::from(10u32).pow(60);
    let (mut lo, mut hi) = (BigInt::from(0), BigInt::from(n) * &scale);
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / 2u32;
        if &mid * &mid <= BigInt::from(n) * &scale * &scale {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let expand = |num: BigInt| {
        let cf = cf_of_rational(&Rational::new(num, scale.clone()).unwrap());
        let mut all = vec![cf.b0().clone()];
        if let Tail::Finite(p) = cf.tail() {
            all.extend(p.iter().cloned());
        }
        all
    };
    let (a, b) = (expand(lo), expand(hi));
    let common: Vec<BigInt> = a.iter().zip(&b).take_while(|(x, y)| x == y).map(|(x, _)| x.clone()).collect();
    assert!(common.len() > terms, "bisection too coarse");
    common[..=terms].to_vec()
}

#[test]
fn sqrt_streams_match_bisection() {
    for n in [2, 3, 5, 6, 7, 8, 10, 13, 19, 31, 46, 94] {
        let oracle = sqrt_partials_by_bisection(n, 20);
        let cf = cf_of_real(&sqrt_real(n).unwrap());
        let mut got = vec![cf.b0().clone()];
        if let Tail::Infinite(s) = cf.tail() {
            got.extend(s.partials().take(20).map(Result::unwrap));
        }
        assert_eq!(got, oracle, "sqrt {n}");
    }
}

#[test]
fn sqrt_comparisons_match_squares() {
    for n in [2, 3, 5, 7, 11] {
        let alpha = sqrt_real(n).unwrap();
        for s in 1..=40i64 {
            for p in 0..=4 * s {
                let x = r(p, s);
                let expected = cmp_sqrt(n, x.numer(), x.denom());
                assert_eq!(compare_real(&alpha, &x).unwrap(), expected, "√{n} vs {p}/{s}");
            }
        }
    }
}

#[test]
fn golden_comparisons_match_squares() {
    // φ vs p/s  ⇔  (2p − s)² vs 5s² with 2p − s > 0.
    let phi = golden_ratio();
    for s in 1..=60i64 {
        for p in s..=2 * s {
            let t = 2 * p - s;
            let expected = (5 * s * s).cmp(&(t * t));
            assert_eq!(compare_real(&phi, &r(p, s)).unwrap(), expected, "{p}/{s}");
        }
    }
}

#[test]
fn linear_forms_match_direct_arithmetic() {
    // α rational: |dα − c| scaled by den(α).
    for &(p, s) in &grid(-1, 1, 6) {
        for d in 1..=5i64 {
            for b in 1..=5i64 {
                for c in -6..=6i64 {
                    for a in -6..=6i64 {
                        let lhs = (d * p - c * s).abs();
                        let rhs = (b * p - a * s).abs();
                        let got = compare_linear_forms(
                            &BigInt::from(d),
                            &BigInt::from(c),
                            &BigInt::from(b),
                            &BigInt::from(a),
                            &q(p, s),
                        )
                        .unwrap();
                        assert_eq!(got, lhs.cmp(&rhs));
                    }
                }
            }
        }
    }
}

#[test]
fn linear_forms_at_sqrt_two_match_squares() {
    // |dα − c| vs |bα − a| at α = √2: squares give (d² − b²)·2 + (c² − a²)
    // against 2(dc − ba)·√2, decided by squaring once more.
    let alpha = sqrt_real(2).unwrap();
    let sign = |v: i64| v.cmp(&0);
    for d in 1..=4i64 {
        for b in 1..=4i64 {
            for c in -3..=6i64 {
                for a in -3..=6i64 {
                    let lhs = 2 * (d * d - b * b) + (c * c - a * a);
                    let rhs = 2 * (d * c - b * a);
                    // lhs vs rhs·√2
                    let expected = match (sign(lhs), sign(rhs)) {
                        (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
                        (l, r) if l != r && !(l == Ordering::Equal || r == Ordering::Equal) => l,
                        (l, Ordering::Equal) => l,
                        (Ordering::Equal, r) => r.reverse(),
                        (l, _) => {
                            let c2 = (lhs * lhs).cmp(&(2 * rhs * rhs));
                            if l == Ordering::Greater { c2 } else { c2.reverse() }
                        }
                    };
                    let got = compare_linear_forms(
                        &BigInt::from(d),
                        &BigInt::from(c),
                        &BigInt::from(b),
                        &BigInt::from(a),
                        &alpha,
                    )
                    .unwrap();
                    assert_eq!(got, expected, "d={d} c={c} b={b} a={a}");
                }
            }
        }
    }
}

#[test]
fn pruned_search_agrees_with_exhaustive() {
    let wide = Search::Exhaustive { reach: 4 };
    for &(a, b) in &grid(-1, 2, 8) {
        let x = r(a, b);
        for &(p, s) in &grid(0, 1, 8) {
            let alpha = q(p, s);
            assert_eq!(
                is_best_approx_2nd(&x, &alpha).unwrap(),
                is_best_approx_2nd_with(&x, &alpha, wide).unwrap()
            );
            assert_eq!(is_nearby(&x, &alpha).unwrap(), is_nearby_with(&x, &alpha, wide).unwrap());
        }
        for alpha in [golden_ratio(), sqrt_real(2).unwrap(), "cf:0;(2)".parse().unwrap()] {
            assert_eq!(
                is_best_approx_2nd(&x, &alpha).unwrap(),
                is_best_approx_2nd_with(&x, &alpha, wide).unwrap()
            );
            assert_eq!(is_nearby(&x, &alpha).unwrap(), is_nearby_with(&x, &alpha, wide).unwrap());
        }
    }
}

#[test]
fn small_sweep_counts_match_cf_engine() {
    let params = SweepParams {
        max_den_x: 5,
        max_den_alpha: 5,
        window: Window { lo: r(0, 1), hi: r(1, 1) },
        search: Search::Pruned,
    };
    let report = verify_sweep(&params).unwrap();
    assert!(report.is_consistent());
    let (xs, alphas) = verify::sweep_points(&params);
    assert_eq!(report.total_checked as usize, xs.len() * alphas.len());
    for summary in &report.per_alpha {
        let convs = cf_of_rational(&summary.alpha).all_convergents().unwrap();
        let expected = convs
            .iter()
            .map(Convergent::value)
            .filter(|c| !c.is_integer() && c.denom() <= &BigInt::from(5))
            .count();
        assert_eq!(summary.convergent_hits, expected, "α={}", summary.alpha);
    }
}

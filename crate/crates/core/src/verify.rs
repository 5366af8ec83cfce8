//! Best approximations of the second kind, the nearby predicate, the
//! tangent-witness search and the five-way equivalence checker.
//!
//! # Candidate pruning
//!
//! Both `is_best_approx_2nd` and `is_nearby` quantify over every rational
//! `c/d` with `d <= b`. For a fixed `d`, `|dα − c|` grows as `c` moves away
//! from `dα`, so the two nearest integers on each side of `dα`, namely
//! `⌊dα⌋ − 1 ..= ⌊dα⌋ + 2`, dominate every other `c`: the nearest one on
//! each side survives removing `(d, c) = (b, a)`. A non-reduced `c/d = c'/d'`
//! satisfies `|dα − c| = k·|d'α − c'|` with `d' < d`, so including it is
//! harmless, and it cannot equal `a/b` because `d <= b`. The same bound
//! carries over to horocircle radii, which are `½(dα − c)²`.
//! [`Search::Exhaustive`] drops the pruning so sweeps can validate it.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cf::{ContinuedFraction, Convergent, Recurrence};
use crate::error::Result;
use crate::ford::{ford_circle, tangent_horocircle_radius, FordCircle};
use crate::rational::{fractions_in, Rational};
use crate::real::{compare_linear_forms, RealNumber};

/// How candidate numerators are enumerated for each denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Search {
    /// The four integers around `dα`.
    #[default]
    Pruned,
    /// Every `c` with `|c/d − α| <= reach` (plus one on each side).
    Exhaustive { reach: u32 },
}

impl Search {
    fn numerators(self, alpha: &RealNumber, d: &BigInt) -> Result<impl Iterator<Item = BigInt>> {
        let fl = alpha.floor_of_multiple(d)?;
        let spread = match self {
            Search::Pruned => BigInt::one(),
            Search::Exhaustive { reach } => d * reach + 1u32,
        };
        let last = &fl + &spread + 1u32;
        Ok(std::iter::successors(Some(&fl - &spread), move |c| (c < &last).then(|| c + 1u32)))
    }
}

impl fmt::Display for Search {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Search::Pruned => f.write_str("pruned"),
            Search::Exhaustive { reach } => write!(f, "exhaustive:{reach}"),
        }
    }
}

impl Serialize for Search {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One member of the continued fraction chain.
#[derive(Clone, Debug)]
pub struct ChainEntry {
    pub index: usize,
    pub convergent: Convergent,
    pub circle: FordCircle,
}

impl ChainEntry {
    fn from_convergent(convergent: Convergent) -> Self {
        ChainEntry {
            index: convergent.index(),
            circle: ford_circle(&convergent.value()),
            convergent,
        }
    }
}

/// The Ford circles of the first `count` convergents of `α`.
pub fn cf_chain(alpha: &RealNumber, count: usize) -> Result<Vec<ChainEntry>> {
    let convs = ContinuedFraction::of_real(alpha).convergents(count)?;
    Ok(convs.into_iter().map(ChainEntry::from_convergent).collect())
}

/// Chain members whose radius is at least `min_radius`, that is with
/// `B_n <= max_den`. Always terminates: `B_n` grows from index 1 on, and a
/// rational `α` has finitely many convergents.
pub fn cf_chain_to_den(alpha: &RealNumber, max_den: &BigInt) -> Result<Vec<ChainEntry>> {
    let convs = convergents_to_den(alpha, max_den)?;
    Ok(convs.into_iter().map(ChainEntry::from_convergent).collect())
}

fn convergents_to_den(alpha: &RealNumber, max_den: &BigInt) -> Result<Vec<Convergent>> {
    match alpha {
        RealNumber::Rational(q) => {
            let mut all = ContinuedFraction::of_rational(q).all_convergents()?;
            all.retain(|c| c.den() <= max_den);
            Ok(all)
        }
        RealNumber::Stream(s) => {
            let mut rec = Recurrence::new(s.b0().clone());
            let mut out = vec![rec.current()];
            for b in s.partials() {
                let next = rec.push(&b?);
                if next.den() > max_den {
                    break;
                }
                out.push(next);
            }
            Ok(out)
        }
    }
}

/// Whether `x` is one of the convergents of `α`.
pub fn is_convergent(x: &Rational, alpha: &RealNumber) -> Result<bool> {
    Ok(convergents_to_den(alpha, x.denom())?.iter().any(|c| &c.value() == x))
}

/// Whether `C_x` belongs to the continued fraction chain of `α`.
pub fn is_chain_member(x: &Rational, alpha: &RealNumber) -> Result<bool> {
    let target = ford_circle(x);
    Ok(cf_chain_to_den(alpha, x.denom())?.iter().any(|e| e.circle == target))
}

/// Whether `x = a/b` is a best approximation of the second kind of `α`:
/// `|bα − a| < |dα − c|` for every other `c/d` with `d <= b`.
pub fn is_best_approx_2nd(x: &Rational, alpha: &RealNumber) -> Result<bool> {
    is_best_approx_2nd_with(x, alpha, Search::Pruned)
}

pub fn is_best_approx_2nd_with(x: &Rational, alpha: &RealNumber, search: Search) -> Result<bool> {
    let (a, b) = (x.numer(), x.denom());
    let mut d = BigInt::one();
    while &d <= b {
        for c in search.numerators(alpha, &d)? {
            if &d == b && &c == a {
                continue;
            }
            // A tie with another rational already disqualifies x.
            if compare_linear_forms(&d, &c, b, a, alpha)? != Ordering::Greater {
                return Ok(false);
            }
        }
        d += 1u32;
    }
    Ok(true)
}

/// Whether `C_x` is nearby to `α`: every other Ford circle at least as large
/// has a strictly larger tangent horocircle at `α`.
pub fn is_nearby(x: &Rational, alpha: &RealNumber) -> Result<bool> {
    is_nearby_with(x, alpha, Search::Pruned)
}

pub fn is_nearby_with(x: &Rational, alpha: &RealNumber, search: Search) -> Result<bool> {
    let own = tangent_horocircle_radius(alpha, x);
    let b = x.denom();
    let mut d = BigInt::one();
    while &d <= b {
        for c in search.numerators(alpha, &d)? {
            let z = Rational::new(c, d.clone())?;
            if &z == x {
                continue;
            }
            let other = tangent_horocircle_radius(alpha, &z);
            if other.compare(&own)? != Ordering::Greater {
                return Ok(false);
            }
        }
        d += 1u32;
    }
    Ok(true)
}

/// `(c, d)` with `C_{c/d}` tangent to `C_{a/b}`, `c/d` on the requested side,
/// and `d` the least denominator above `b`. That `d` lies in `(b, 2b]`.
fn smallest_smaller_neighbour(x: &Rational, right: bool) -> (BigInt, BigInt) {
    let (a, b) = (x.numer(), x.denom());
    if b.is_one() {
        // (2a ± 1)/2
        let c = a * 2u32 + if right { 1 } else { -1 };
        return (c, BigInt::from(2));
    }
    // a·u ≡ 1 (mod b)
    let u = a.extended_gcd(b).x.mod_floor(b);
    // right: c·b − a·d = 1 ⇒ d ≡ −u;  left: a·d − c·b = 1 ⇒ d ≡ u
    let residue = if right { (-&u).mod_floor(b) } else { u };
    let d = b + residue;
    let c = if right { (a * &d + 1u32) / b } else { (a * &d - 1u32) / b };
    (c, d)
}

/// A Ford circle `C_y` tangent to `C_x`, smaller than it, with `α = x` or
/// `α` strictly between `x` and `y`.
///
/// Smaller tangent neighbours of `x` on one side are `(c + ka)/(d + kb)`,
/// `k >= 0`, and they approach `x` as `k` grows; the one with least
/// denominator reaches furthest, so it is the only candidate worth testing.
/// When `α = x` the right-hand one is returned.
pub fn statement_v_witness(x: &Rational, alpha: &RealNumber) -> Result<Option<Rational>> {
    let side = alpha.cmp_rational(x)?;
    let (c, d) = smallest_smaller_neighbour(x, side != Ordering::Less);
    let y = Rational::new(c, d)?;
    if side == Ordering::Equal || alpha.strictly_between(x, &y)? {
        Ok(Some(y))
    } else {
        Ok(None)
    }
}

/// Outcome of checking all five equivalent statements for one `(x, α)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremUReport {
    pub x: Rational,
    pub alpha: String,
    #[serde(rename = "isInteger")]
    pub is_integer: bool,
    /// `x` is a convergent of `α`.
    pub stmt_i: bool,
    /// `C_x` is in the continued fraction chain of `α`.
    pub stmt_ii: bool,
    /// `x` is a best approximation of the second kind.
    pub stmt_iii: bool,
    /// `C_x` is nearby to `α`.
    pub stmt_iv: bool,
    /// A smaller tangent `C_y` brackets `α` with `C_x`.
    pub stmt_v: bool,
    pub witness: Option<Rational>,
    pub consistent: bool,
}

impl TheoremUReport {
    fn assemble(x: &Rational, alpha: &RealNumber, statements: [bool; 4], witness: Option<Rational>) -> Self {
        let [stmt_i, stmt_ii, stmt_iii, stmt_iv] = statements;
        let stmt_v = witness.is_some();
        let is_integer = x.is_integer();
        // For integers only the two definitional equivalences are asserted.
        let consistent = if is_integer {
            stmt_i == stmt_ii && stmt_iii == stmt_iv
        } else {
            stmt_i == stmt_ii && stmt_ii == stmt_iii && stmt_iii == stmt_iv && stmt_iv == stmt_v
        };
        TheoremUReport {
            x: x.clone(),
            alpha: alpha.describe(),
            is_integer,
            stmt_i,
            stmt_ii,
            stmt_iii,
            stmt_iv,
            stmt_v,
            witness,
            consistent,
        }
    }
}

pub fn theorem_u_check(x: &Rational, alpha: &RealNumber) -> Result<TheoremUReport> {
    theorem_u_check_with(x, alpha, Search::Pruned)
}

pub fn theorem_u_check_with(x: &Rational, alpha: &RealNumber, search: Search) -> Result<TheoremUReport> {
    let statements = [
        is_convergent(x, alpha)?,
        is_chain_member(x, alpha)?,
        is_best_approx_2nd_with(x, alpha, search)?,
        is_nearby_with(x, alpha, search)?,
    ];
    let witness = statement_v_witness(x, alpha)?;
    Ok(TheoremUReport::assemble(x, alpha, statements, witness))
}

/// Per-`α` state shared by every `x` in a sweep.
struct AlphaContext {
    alpha: RealNumber,
    convergents: Vec<Rational>,
    chain: Vec<FordCircle>,
}

impl AlphaContext {
    fn new(alpha: Rational) -> Result<Self> {
        let convergents: Vec<Rational> = ContinuedFraction::of_rational(&alpha)
            .all_convergents()?
            .iter()
            .map(Convergent::value)
            .collect();
        let chain = convergents.iter().map(ford_circle).collect();
        Ok(AlphaContext {
            alpha: RealNumber::Rational(alpha),
            convergents,
            chain,
        })
    }

    fn check(&self, x: &Rational, search: Search) -> Result<TheoremUReport> {
        let circle = ford_circle(x);
        let statements = [
            self.convergents.contains(x),
            self.chain.contains(&circle),
            is_best_approx_2nd_with(x, &self.alpha, search)?,
            is_nearby_with(x, &self.alpha, search)?,
        ];
        let witness = statement_v_witness(x, &self.alpha)?;
        Ok(TheoremUReport::assemble(x, &self.alpha, statements, witness))
    }
}

/// Sweep bounds: every non-integer reduced `x` with `den <= max_den_x` in
/// `(lo − 1, hi + 1)` against every reduced `α` with `den <= max_den_alpha`
/// in `[lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepParams {
    #[serde(rename = "maxDenX")]
    pub max_den_x: u64,
    #[serde(rename = "maxDenAlpha")]
    pub max_den_alpha: u64,
    pub window: Window,
    pub search: Search,
}

/// The half-open interval `[lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: Rational,
    pub hi: Rational,
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSummary {
    pub alpha: Rational,
    /// Number of swept `x` that are convergents of `alpha`.
    pub convergent_hits: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub params: SweepParams,
    #[serde(rename = "totalChecked")]
    pub total_checked: u64,
    pub inconsistencies: Vec<TheoremUReport>,
    /// Wall-clock seconds.
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
    #[serde(skip)]
    pub per_alpha: Vec<AlphaSummary>,
}

fn as_seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SweepReport {
    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }
}

pub fn sweep_points(params: &SweepParams) -> (Vec<Rational>, Vec<Rational>) {
    let Window { lo, hi } = &params.window;
    let one = Rational::one();
    let (x_lo, x_hi) = (lo - &one, hi + &one);
    let xs = fractions_in(&x_lo, &x_hi, params.max_den_x)
        .into_iter()
        .filter(|x| !x.is_integer() && &x_lo < x && x < &x_hi)
        .collect();
    let alphas = fractions_in(lo, hi, params.max_den_alpha)
        .into_iter()
        .filter(|a| a < hi)
        .collect();
    (xs, alphas)
}

/// Runs [`theorem_u_check`] over the whole grid. `α` values are processed in
/// parallel; the report does not depend on scheduling.
pub fn verify_sweep(params: &SweepParams) -> Result<SweepReport> {
    let start = Instant::now();
    let (xs, alphas) = sweep_points(params);
    let per_alpha: Vec<(AlphaSummary, Vec<TheoremUReport>)> = alphas
        .into_par_iter()
        .map(|alpha| {
            let ctx = AlphaContext::new(alpha.clone())?;
            let mut hits = 0;
            let mut bad = Vec::new();
            for x in &xs {
                let report = ctx.check(x, params.search)?;
                hits += usize::from(report.stmt_i);
                if !report.consistent {
                    bad.push(report);
                }
            }
            Ok((
                AlphaSummary {
                    alpha,
                    convergent_hits: hits,
                },
                bad,
            ))
        })
        .collect::<Result<_>>()?;
    let total_checked = (xs.len() * per_alpha.len()) as u64;
    let mut summaries = Vec::with_capacity(per_alpha.len());
    let mut inconsistencies = Vec::new();
    for (summary, bad) in per_alpha {
        summaries.push(summary);
        inconsistencies.extend(bad);
    }
    Ok(SweepReport {
        params: params.clone(),
        total_checked,
        inconsistencies,
        elapsed: start.elapsed(),
        per_alpha: summaries,
    })
}

/// `(u, v) = (A_N − A_{N−1}, B_N − B_{N−1})` for a rational `α` with `N >= 1`,
/// together with the penultimate convergent. `None` for integers.
pub fn penultimate_witness(alpha: &Rational) -> Result<Option<(Rational, BigInt, BigInt)>> {
    let convs = ContinuedFraction::of_rational(alpha).all_convergents()?;
    let n = convs.len();
    if n < 2 {
        return Ok(None);
    }
    let (last, prev) = (&convs[n - 1], &convs[n - 2]);
    let u = last.num() - prev.num();
    let v = last.den() - prev.den();
    debug_assert!(!v.is_zero() && !v.is_negative());
    Ok(Some((prev.value(), u, v)))
}

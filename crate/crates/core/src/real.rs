//! Real numbers as exact rationals or as infinite continued-fraction
//! coefficient streams, with terminating exact comparisons.
//!
//! An irrational `α` is only ever inspected through the bracket formed by two
//! consecutive convergents `C_n`, `C_{n+1}`: `α` lies strictly between them and
//! the bracket shrinks to `α`. Every comparison keeps pulling coefficients
//! until the bracket decides it, up to a pull limit.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cf::Recurrence;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default cap on coefficient pulls for a single comparison.
pub const DEFAULT_PULL_LIMIT: usize = 10_000;

/// A restartable source of partial quotients `b_1, b_2, …`.
///
/// Implementations must be deterministic: every call to [`partials`] yields
/// the same sequence from the start.
///
/// [`partials`]: PartialQuotients::partials
pub trait PartialQuotients: fmt::Debug + Send + Sync {
    fn partials(&self) -> Box<dyn Iterator<Item = BigInt> + Send + '_>;

    /// `(prefix, period)` for eventually periodic sources.
    fn periodic_block(&self) -> Option<(&[BigInt], &[BigInt])> {
        None
    }
}

/// Partial quotients of the form `prefix, period, period, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicPartials {
    prefix: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl PeriodicPartials {
    pub fn new(prefix: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::StreamEnded);
        }
        if let Some(bad) = prefix.iter().chain(&period).find(|b| !b.is_positive()) {
            return Err(Error::InvalidPartialQuotient(bad.to_string()));
        }
        Ok(PeriodicPartials { prefix, period })
    }
}

impl PartialQuotients for PeriodicPartials {
    fn partials(&self) -> Box<dyn Iterator<Item = BigInt> + Send + '_> {
        Box::new(self.prefix.iter().chain(self.period.iter().cycle()).cloned())
    }

    fn periodic_block(&self) -> Option<(&[BigInt], &[BigInt])> {
        Some((&self.prefix, &self.period))
    }
}

/// An infinite continued fraction `[b0; b1, b2, …]`, hence an irrational.
#[derive(Clone)]
pub struct CfStream {
    b0: BigInt,
    source: Arc<dyn PartialQuotients>,
    label: String,
    pull_limit: usize,
}

impl CfStream {
    pub fn new(b0: impl Into<BigInt>, source: Arc<dyn PartialQuotients>, label: impl Into<String>) -> Self {
        CfStream {
            b0: b0.into(),
            source,
            label: label.into(),
            pull_limit: DEFAULT_PULL_LIMIT,
        }
    }

    /// `[b0; prefix…, (period…)]`, labelled in the `cf:` text syntax.
    pub fn periodic(b0: impl Into<BigInt>, prefix: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        let b0 = b0.into();
        let join = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let label = if prefix.is_empty() {
            format!("cf:{b0};({})", join(&period))
        } else {
            format!("cf:{b0};{},({})", join(&prefix), join(&period))
        };
        let source = PeriodicPartials::new(prefix, period)?;
        Ok(CfStream::new(b0, Arc::new(source), label))
    }

    pub fn with_pull_limit(mut self, limit: usize) -> Self {
        self.pull_limit = limit;
        self
    }

    pub fn b0(&self) -> &BigInt {
        &self.b0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn pull_limit(&self) -> usize {
        self.pull_limit
    }

    pub fn periodic_block(&self) -> Option<(&[BigInt], &[BigInt])> {
        self.source.periodic_block()
    }

    /// Whether both streams denote the same point.
    pub fn same_point(&self, other: &CfStream) -> bool {
        (Arc::ptr_eq(&self.source, &other.source) && self.b0 == other.b0) || self.label == other.label
    }

    /// Validated partial quotients, failing once the pull limit is reached.
    pub fn partials(&self) -> Partials<'_> {
        Partials {
            inner: self.source.partials(),
            pulled: 0,
            limit: self.pull_limit,
        }
    }

    pub(crate) fn brackets(&self) -> Brackets<'_> {
        Brackets {
            partials: self.partials(),
            rec: Recurrence::new(self.b0.clone()),
        }
    }
}

impl fmt::Debug for CfStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CfStream")
            .field("label", &self.label)
            .field("b0", &self.b0)
            .finish_non_exhaustive()
    }
}

/// Iterator over a stream's partial quotients with validation and a pull cap.
pub struct Partials<'a> {
    inner: Box<dyn Iterator<Item = BigInt> + Send + 'a>,
    pulled: usize,
    limit: usize,
}

impl Iterator for Partials<'_> {
    type Item = Result<BigInt>;

    fn next(&mut self) -> Option<Result<BigInt>> {
        if self.pulled >= self.limit {
            return Some(Err(Error::RefinementExhausted(self.limit)));
        }
        self.pulled += 1;
        Some(match self.inner.next() {
            None => Err(Error::StreamEnded),
            Some(b) if !b.is_positive() => Err(Error::InvalidPartialQuotient(b.to_string())),
            Some(b) => Ok(b),
        })
    }
}

/// Successive open intervals `(lo, hi)` bounded by consecutive convergents.
pub(crate) struct Brackets<'a> {
    partials: Partials<'a>,
    rec: Recurrence,
}

impl Brackets<'_> {
    pub(crate) fn next_bracket(&mut self) -> Result<(Rational, Rational)> {
        let prev = self.rec.current().value();
        let b = self.partials.next().expect("partials never ends")?;
        let next = self.rec.push(&b).value();
        Ok(if prev < next { (prev, next) } else { (next, prev) })
    }
}

/// A real number: either an exact rational or an irrational given by its
/// continued-fraction coefficients.
#[derive(Clone, Debug)]
pub enum RealNumber {
    Rational(Rational),
    Stream(CfStream),
}

impl RealNumber {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealNumber::Rational(q) => Some(q),
            RealNumber::Stream(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, RealNumber::Rational(_))
    }

    /// Text form in the `<real-spec>` grammar accepted by [`FromStr`].
    pub fn describe(&self) -> String {
        match self {
            RealNumber::Rational(q) => q.to_string(),
            RealNumber::Stream(s) => s.label.clone(),
        }
    }

    /// Same point: equal rationals, or streams with the same source.
    pub fn same_point(&self, other: &RealNumber) -> bool {
        match (self, other) {
            (RealNumber::Rational(p), RealNumber::Rational(q)) => p == q,
            (RealNumber::Stream(s), RealNumber::Stream(t)) => s.same_point(t),
            _ => false,
        }
    }

    /// Ordering of `self` relative to `q`.
    pub fn cmp_rational(&self, q: &Rational) -> Result<Ordering> {
        match self {
            RealNumber::Rational(p) => Ok(p.cmp(q)),
            RealNumber::Stream(s) => {
                let mut brackets = s.brackets();
                loop {
                    let (lo, hi) = brackets.next_bracket()?;
                    if *q <= lo {
                        return Ok(Ordering::Greater);
                    }
                    if *q >= hi {
                        return Ok(Ordering::Less);
                    }
                }
            }
        }
    }

    /// `true` iff `self` lies in the open interval bounded by `x` and `y`.
    pub fn strictly_between(&self, x: &Rational, y: &Rational) -> Result<bool> {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        Ok(self.cmp_rational(lo)? == Ordering::Greater && self.cmp_rational(hi)? == Ordering::Less)
    }

    /// `floor(d · self)`.
    pub fn floor_of_multiple(&self, d: &BigInt) -> Result<BigInt> {
        match self {
            RealNumber::Rational(q) => Ok(q.mul_int(d).floor()),
            RealNumber::Stream(s) => {
                let mut brackets = s.brackets();
                loop {
                    let (lo, hi) = brackets.next_bracket()?;
                    let (fl, fh) = (lo.mul_int(d).floor(), hi.mul_int(d).floor());
                    if fl == fh {
                        return Ok(fl);
                    }
                }
            }
        }
    }

    /// Sign of `c2·t² + c1·t + c0` at `t = self`.
    ///
    /// For a stream the quadratic is bounded over each convergent bracket
    /// until the bound excludes zero. If `self` is a root the bracket never
    /// decides and the pull limit is reported.
    pub fn sign_of_quadratic(&self, c2: &Rational, c1: &Rational, c0: &Rational) -> Result<Ordering> {
        let eval = |t: &Rational| c2 * &t.square() + c1 * t + c0.clone();
        match self {
            RealNumber::Rational(t) => Ok(eval(t).signum()),
            RealNumber::Stream(s) => {
                if c2.is_zero() && c1.is_zero() && c0.is_zero() {
                    return Ok(Ordering::Equal);
                }
                let vertex = (!c2.is_zero())
                    .then(|| (-c1).checked_div(&c2.mul_int(&BigInt::from(2))))
                    .flatten();
                let mut brackets = s.brackets();
                loop {
                    let (lo, hi) = brackets.next_bracket()?;
                    let mut values = vec![eval(&lo), eval(&hi)];
                    if let Some(v) = vertex.as_ref().filter(|v| lo < **v && **v < hi) {
                        values.push(eval(v));
                    }
                    let min = values.iter().min().expect("non-empty");
                    let max = values.iter().max().expect("non-empty");
                    if min.is_positive() {
                        return Ok(Ordering::Greater);
                    }
                    if max.is_negative() {
                        return Ok(Ordering::Less);
                    }
                }
            }
        }
    }

    /// A convergent of `self` with denominator at least `min_den`, or
    /// `self` itself when rational.
    pub fn approximation(&self, min_den: &BigInt) -> Result<Rational> {
        match self {
            RealNumber::Rational(q) => Ok(q.clone()),
            RealNumber::Stream(s) => {
                let mut rec = Recurrence::new(s.b0.clone());
                let mut partials = s.partials();
                while rec.current().den() < min_den {
                    let b = partials.next().expect("partials never ends")?;
                    rec.push(&b);
                }
                Ok(rec.current().value())
            }
        }
    }
}

impl From<Rational> for RealNumber {
    fn from(q: Rational) -> Self {
        RealNumber::Rational(q)
    }
}

impl From<CfStream> for RealNumber {
    fn from(s: CfStream) -> Self {
        RealNumber::Stream(s)
    }
}

impl fmt::Display for RealNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Three-way comparison of `α` against the rational `q`.
pub fn compare_real(alpha: &RealNumber, q: &Rational) -> Result<Ordering> {
    alpha.cmp_rational(q)
}

/// Compares `|dα − c|` with `|bα − a|` exactly.
///
/// The sign of each linear form is read off from the position of `α`
/// relative to `c/d` and `a/b`; the difference of the absolute values is
/// then again linear in `α`, so one more rational comparison settles it.
pub fn compare_linear_forms(
    d: &BigInt,
    c: &BigInt,
    b: &BigInt,
    a: &BigInt,
    alpha: &RealNumber,
) -> Result<Ordering> {
    assert!(d.is_positive() && b.is_positive(), "linear form denominators must be positive");
    if let RealNumber::Rational(p) = alpha {
        // Scale both forms by den(p).
        let lhs = (d * p.numer() - c * p.denom()).abs();
        let rhs = (b * p.numer() - a * p.denom()).abs();
        return Ok(lhs.cmp(&rhs));
    }
    let sign = |o: Ordering| match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    };
    let s1 = BigInt::from(sign(alpha.cmp_rational(&Rational::new(c.clone(), d.clone())?)?));
    let s2 = BigInt::from(sign(alpha.cmp_rational(&Rational::new(a.clone(), b.clone())?)?));
    // |dα − c| − |bα − a| = k·α − m
    let k = &s1 * d - &s2 * b;
    let m = &s1 * c - &s2 * a;
    if k.is_zero() {
        return Ok(BigInt::zero().cmp(&m));
    }
    let root = Rational::new(m, k.clone())?;
    let ord = alpha.cmp_rational(&root)?;
    Ok(if k.is_positive() { ord } else { ord.reverse() })
}

/// `√n` as the periodic stream produced by the `(m, d, a)` surd recurrence.
pub fn sqrt_real(n: impl Into<BigInt>) -> Result<RealNumber> {
    let n = n.into();
    if n <= BigInt::one() {
        return Err(Error::NotQuadraticIrrational(n.to_string()));
    }
    let a0 = n.sqrt();
    if &a0 * &a0 == n {
        return Err(Error::NotQuadraticIrrational(n.to_string()));
    }
    let (mut m, mut d, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let last = &a0 * 2u32;
    let mut period = Vec::new();
    loop {
        m = &d * &a - &m;
        d = (&n - &m * &m) / &d;
        a = (&a0 + &m) / &d;
        period.push(a.clone());
        if a == last {
            break;
        }
    }
    let source = PeriodicPartials::new(Vec::new(), period)?;
    Ok(RealNumber::Stream(CfStream::new(a0, Arc::new(source), format!("sqrt:{n}"))))
}

/// The golden ratio `[1; 1, 1, …]`.
pub fn golden_ratio() -> RealNumber {
    let source = PeriodicPartials::new(Vec::new(), vec![BigInt::one()]).expect("valid period");
    RealNumber::Stream(CfStream::new(1, Arc::new(source), "golden"))
}

const GRAMMAR: &str = "<p>/<q> | golden | sqrt:<n> | cf:<b0>;<b1>,<b2>,…[,(<periodic block>)]";

impl FromStr for RealNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed real {s:?}; expected {GRAMMAR}"));
        if s == "golden" {
            return Ok(golden_ratio());
        }
        if let Some(n) = s.strip_prefix("sqrt:") {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            return sqrt_real(n);
        }
        if let Some(body) = s.strip_prefix("cf:") {
            return parse_cf(body).map_err(|e| match e {
                Error::Parse(_) => bad(),
                other => other,
            });
        }
        s.parse::<Rational>().map(RealNumber::Rational).map_err(|e| match e {
            Error::Parse(_) => bad(),
            other => other,
        })
    }
}

fn parse_cf(body: &str) -> Result<RealNumber> {
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(t.to_string()));
    let (b0, rest) = match body.split_once(';') {
        Some((b0, rest)) => (parse_int(b0)?, rest.trim()),
        None => (parse_int(body)?, ""),
    };
    let (listed, period) = match rest.find('(') {
        Some(open) => {
            let block = rest[open..]
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(rest.to_string()))?;
            let head = rest[..open].trim().trim_end_matches(',');
            let period = block.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
            (head, Some(period))
        }
        None => (rest, None),
    };
    let partials = if listed.trim().is_empty() {
        Vec::new()
    } else {
        listed.split(',').map(parse_int).collect::<Result<Vec<_>>>()?
    };
    match period {
        Some(period) => Ok(RealNumber::Stream(CfStream::periodic(b0, partials, period)?)),
        None => {
            let cf = crate::cf::ContinuedFraction::finite(b0, partials)?;
            Ok(RealNumber::Rational(cf.value()?))
        }
    }
}

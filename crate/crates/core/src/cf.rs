//! Continued fraction expansion, normalization and the convergent recurrence.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::{CfStream, RealNumber};

/// The convergent `A_n / B_n` of index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    index: usize,
    num: BigInt,
    den: BigInt,
}

impl Convergent {
    pub fn index(&self) -> usize {
        self.index
    }

    /// `A_n`
    pub fn num(&self) -> &BigInt {
        &self.num
    }

    /// `B_n`
    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.num.clone(), self.den.clone()).expect("B_n >= 1")
    }
}

impl fmt::Display for Convergent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `A_n = b_n A_{n−1} + A_{n−2}`, `B_n = b_n B_{n−1} + B_{n−2}`, seeded with
/// `A_{−1} = 1, B_{−1} = 0, A_0 = b_0, B_0 = 1`.
#[derive(Clone, Debug)]
pub struct Recurrence {
    prev: (BigInt, BigInt),
    cur: (BigInt, BigInt),
    index: usize,
}

impl Recurrence {
    pub fn new(b0: BigInt) -> Self {
        Recurrence {
            prev: (BigInt::one(), BigInt::zero()),
            cur: (b0, BigInt::one()),
            index: 0,
        }
    }

    pub fn current(&self) -> Convergent {
        Convergent {
            index: self.index,
            num: self.cur.0.clone(),
            den: self.cur.1.clone(),
        }
    }

    pub fn push(&mut self, b: &BigInt) -> Convergent {
        let num = b * &self.cur.0 + &self.prev.0;
        let den = b * &self.cur.1 + &self.prev.1;
        self.prev = std::mem::replace(&mut self.cur, (num, den));
        self.index += 1;
        self.current()
    }
}

#[derive(Clone, Debug)]
pub enum Tail {
    Finite(Vec<BigInt>),
    Infinite(CfStream),
}

/// `[b0; b1, b2, …]`. Finite expansions with `N >= 1` always end in `b_N >= 2`.
#[derive(Clone, Debug)]
pub struct ContinuedFraction {
    b0: BigInt,
    tail: Tail,
}

impl ContinuedFraction {
    /// Builds a finite expansion, merging a trailing `1` into its predecessor.
    pub fn finite(b0: impl Into<BigInt>, mut partials: Vec<BigInt>) -> Result<Self> {
        let mut b0 = b0.into();
        if let Some(bad) = partials.iter().find(|b| !b.is_positive()) {
            return Err(Error::InvalidPartialQuotient(bad.to_string()));
        }
        if partials.last().is_some_and(One::is_one) {
            partials.pop();
            *partials.last_mut().unwrap_or(&mut b0) += 1;
        }
        Ok(ContinuedFraction {
            b0,
            tail: Tail::Finite(partials),
        })
    }

    pub fn infinite(stream: CfStream) -> Self {
        ContinuedFraction {
            b0: stream.b0().clone(),
            tail: Tail::Infinite(stream),
        }
    }

    /// The expansion of `x` by the Euclidean algorithm.
    pub fn of_rational(x: &Rational) -> Self {
        let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
        let mut coeffs = Vec::new();
        while !q.is_zero() {
            let (b, rem) = p.div_mod_floor(&q);
            coeffs.push(b);
            p = std::mem::replace(&mut q, rem);
        }
        let b0 = coeffs.remove(0);
        ContinuedFraction::finite(b0, coeffs).expect("Euclidean quotients after the first are positive")
    }

    pub fn of_real(alpha: &RealNumber) -> Self {
        match alpha {
            RealNumber::Rational(q) => ContinuedFraction::of_rational(q),
            RealNumber::Stream(s) => ContinuedFraction::infinite(s.clone()),
        }
    }

    pub fn b0(&self) -> &BigInt {
        &self.b0
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.tail, Tail::Finite(_))
    }

    /// `N + 1` for finite expansions.
    pub fn len(&self) -> Option<usize> {
        match &self.tail {
            Tail::Finite(p) => Some(p.len() + 1),
            Tail::Infinite(_) => None,
        }
    }

    /// The first `count` convergents `A_0/B_0, …`.
    pub fn convergents(&self, count: usize) -> Result<Vec<Convergent>> {
        if count == 0 {
            return Ok(Vec::new());
        }
        let mut rec = Recurrence::new(self.b0.clone());
        let mut out = Vec::with_capacity(count);
        out.push(rec.current());
        match &self.tail {
            Tail::Finite(partials) => {
                if count > partials.len() + 1 {
                    return Err(Error::ExpansionExhausted);
                }
                out.extend(partials[..count - 1].iter().map(|b| rec.push(b)));
            }
            Tail::Infinite(stream) => {
                for b in stream.partials().take(count - 1) {
                    out.push(rec.push(&b?));
                }
            }
        }
        Ok(out)
    }

    /// All convergents of a finite expansion.
    pub fn all_convergents(&self) -> Result<Vec<Convergent>> {
        self.convergents(self.len().ok_or(Error::NoFiniteValue)?)
    }

    /// The final convergent `A_N / B_N`.
    pub fn value(&self) -> Result<Rational> {
        let all = self.all_convergents()?;
        Ok(all.last().expect("at least b0").value())
    }
}

impl fmt::Display for ContinuedFraction {
    /// `[b0;b1,…,bN]`, or the first ten partials followed by `…` for an
    /// infinite expansion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.b0)?;
        let shown: Vec<String> = match &self.tail {
            Tail::Finite(p) => p.iter().map(ToString::to_string).collect(),
            Tail::Infinite(s) => s
                .partials()
                .take(10)
                .map(|b| b.map_or_else(|e| e.to_string(), |b| b.to_string()))
                .chain(std::iter::once("…".to_string()))
                .collect(),
        };
        if !shown.is_empty() {
            write!(f, ";{}", shown.join(","))?;
        }
        f.write_str("]")
    }
}

pub fn cf_of_rational(x: &Rational) -> ContinuedFraction {
    ContinuedFraction::of_rational(x)
}

pub fn cf_of_real(alpha: &RealNumber) -> ContinuedFraction {
    ContinuedFraction::of_real(alpha)
}

pub fn convergents(cf: &ContinuedFraction, count: usize) -> Result<Vec<Convergent>> {
    cf.convergents(count)
}

pub fn value(cf: &ContinuedFraction) -> Result<Rational> {
    cf.value()
}

/// Checks that `convs` interleave around `α`: even-indexed convergents
/// increase strictly from below, odd-indexed ones decrease strictly from
/// above, and only the last listed convergent may equal `α`.
pub fn convergent_ordering_check(convs: &[Convergent], alpha: &RealNumber) -> Result<bool> {
    let mut last_even: Option<Rational> = None;
    let mut last_odd: Option<Rational> = None;
    for (pos, conv) in convs.iter().enumerate() {
        if conv.index() != pos {
            return Ok(false);
        }
        let q = conv.value();
        let is_last = pos + 1 == convs.len();
        let side = alpha.cmp_rational(&q)?;
        let (expected, slot) = if pos % 2 == 0 {
            (Ordering::Greater, &mut last_even)
        } else {
            (Ordering::Less, &mut last_odd)
        };
        if side != expected && !(is_last && side == Ordering::Equal) {
            return Ok(false);
        }
        if let Some(prev) = slot.as_ref() {
            // Moving toward α from this side means the comparison flips.
            if prev.cmp(&q) != expected.reverse() {
                return Ok(false);
            }
        }
        *slot = Some(q);
    }
    Ok(true)
}

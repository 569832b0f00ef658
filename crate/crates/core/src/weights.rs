//! Dominant weights of SL2 as base-p digit strings.
//!
//! A dominant weight `r >= 0` is stored as its little-endian base-`p`
//! expansion `r = r_0 + r_1 p + ... + r_n p^n`. By Steinberg's tensor
//! product theorem the digits are exactly the restricted factors of
//! `L(r) = L(r_0) ⊗ L(r_1)^[1] ⊗ ... ⊗ L(r_n)^[n]`, so every operation in
//! this crate works on digits rather than on integer values. Values are
//! unbounded; decimal strings are the interchange format for anything that
//! does not fit in a machine word.
//!
//! The zero weight (the trivial module `K`) is the empty digit string.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// The characteristic `p` of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeChar(u32);

impl PrimeChar {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u64::from(u32::MAX) {
            return Err(Error::InvalidPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::InvalidPrime(p));
            }
            d += 1;
        }
        Ok(PrimeChar(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `p - 2`, the partner of the trivial weight under the dot action.
    #[inline]
    pub fn p_minus_two(self) -> u32 {
        self.0 - 2
    }

    /// `p - 1`, the Steinberg weight.
    #[inline]
    pub fn steinberg(self) -> u32 {
        self.0 - 1
    }

    pub fn check_digit(self, digit: u32) -> Result<u32> {
        if digit < self.0 {
            Ok(digit)
        } else {
            Err(Error::InvalidDigit { digit, p: self.0 })
        }
    }
}

impl fmt::Display for PrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A dominant weight in canonical little-endian base-p form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    digits: Vec<u32>,
    p: PrimeChar,
}

impl Weight {
    pub fn zero(p: PrimeChar) -> Self {
        Weight {
            digits: Vec::new(),
            p,
        }
    }

    /// Builds a weight from little-endian digits, dropping trailing zeros.
    pub fn from_digits(digits: impl Into<Vec<u32>>, p: PrimeChar) -> Result<Self> {
        let mut digits = digits.into();
        for &d in &digits {
            p.check_digit(d)?;
        }
        trim(&mut digits);
        Ok(Weight { digits, p })
    }

    pub fn from_u64(mut n: u64, p: PrimeChar) -> Self {
        let base = u64::from(p.get());
        let mut digits = Vec::new();
        while n > 0 {
            digits.push((n % base) as u32);
            n /= base;
        }
        Weight { digits, p }
    }

    pub fn from_decimal(s: &str, p: PrimeChar) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidWeight(format!(
                "{s:?} is not a nonnegative decimal integer"
            )));
        }
        if s.len() <= 19 {
            // fits in u64
            return Ok(Weight::from_u64(s.parse().expect("checked digits"), p));
        }
        let n = BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| Error::InvalidWeight(s.to_string()))?;
        let mut digits = if p.get() <= 256 {
            n.to_radix_le(p.get()).into_iter().map(u32::from).collect()
        } else {
            let mut n = n;
            let mut out = Vec::new();
            while n.bits() > 0 {
                let r = &n % p.get();
                out.push(r.try_into().expect("remainder below p"));
                n /= p.get();
            }
            out
        };
        trim(&mut digits);
        Ok(Weight { digits, p })
    }

    /// Parses either a decimal integer or a digit literal `[d0,d1,...]`,
    /// optionally suffixed with `@p`.
    pub fn parse(s: &str, p: PrimeChar) -> Result<Self> {
        let s = s.trim();
        if !s.starts_with('[') {
            return Self::from_decimal(s, p);
        }
        let (body, at) = match s.rsplit_once('@') {
            Some((body, q)) => (body.trim(), Some(q.trim())),
            None => (s, None),
        };
        if let Some(q) = at {
            let q: u64 = q
                .parse()
                .map_err(|_| Error::InvalidWeight(format!("bad prime suffix in {s:?}")))?;
            if q != u64::from(p.get()) {
                return Err(Error::InvalidWeight(format!(
                    "digit literal {s:?} is written for p = {q}, expected p = {p}"
                )));
            }
        }
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidWeight(format!("malformed digit literal {s:?}")))?;
        let mut digits = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let d: u32 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidWeight(format!("bad digit {tok:?} in {s:?}")))?;
                digits.push(d);
            }
        }
        Self::from_digits(digits, p)
    }

    #[inline]
    pub fn p(&self) -> PrimeChar {
        self.p
    }

    #[inline]
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Digit `i`, zero beyond the expansion.
    #[inline]
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn to_u64(&self) -> Option<u64> {
        let base = u64::from(self.p.get());
        self.digits.iter().rev().try_fold(0u64, |acc, &d| {
            acc.checked_mul(base)?.checked_add(u64::from(d))
        })
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_u64().and_then(|v| i64::try_from(v).ok())
    }

    pub fn to_biguint(&self) -> BigUint {
        let base = BigUint::from(self.p.get());
        self.digits
            .iter()
            .rev()
            .fold(BigUint::from(0u32), |acc, &d| acc * &base + d)
    }

    /// Exact decimal value.
    pub fn to_decimal(&self) -> String {
        match self.to_u64() {
            Some(v) => v.to_string(),
            None => self.to_biguint().to_string(),
        }
    }

    /// Digit literal such as `[3,2,1]@5`.
    pub fn to_literal(&self) -> String {
        let body: Vec<String> = self.digits.iter().map(u32::to_string).collect();
        format!("[{}]@{}", body.join(","), self.p)
    }

    /// The nonzero restricted factors `(r_i, i)` of the Steinberg decomposition.
    pub fn steinberg_factors(&self) -> Vec<(u32, usize)> {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| (d, i))
            .collect()
    }

    /// `V^[d]`: multiplies the weight by `p^d`.
    pub fn frobenius_twist(&self, d: usize) -> Weight {
        if self.is_zero() || d == 0 {
            return self.clone();
        }
        let mut digits = vec![0; d];
        digits.extend_from_slice(&self.digits);
        Weight { digits, p: self.p }
    }

    /// Writes `w = s^[d]` with `s_0 != 0`; the zero weight gives `(0, 0)`.
    pub fn untwist_maximal(&self) -> (Weight, usize) {
        let d = self.digits.iter().take_while(|&&x| x == 0).count();
        if d == self.digits.len() {
            return (Weight::zero(self.p), 0);
        }
        let s = Weight {
            digits: self.digits[d..].to_vec(),
            p: self.p,
        };
        (s, d)
    }

    /// Splits `r = r_0 ⊗ r'^[1]` into `(r_0, r')`.
    pub fn split_head(&self) -> (u32, Weight) {
        match self.digits.split_first() {
            None => (0, Weight::zero(self.p)),
            Some((&r0, rest)) => (
                r0,
                Weight {
                    digits: rest.to_vec(),
                    p: self.p,
                },
            ),
        }
    }

    /// Shared-suffix view of [`split_head`](Self::split_head) for recursions.
    #[inline]
    pub(crate) fn tail_digits(digits: &[u32]) -> (u32, &[u32]) {
        match digits.split_first() {
            None => (0, digits),
            Some((&d, rest)) => (d, rest),
        }
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by `p`, then by numeric value.
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.digits.len().cmp(&other.digits.len()))
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

impl FromStr for PrimeChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{s:?} is not a prime")))?;
        PrimeChar::new(p)
    }
}

fn trim(digits: &mut Vec<u32>) {
    while digits.last() == Some(&0) {
        digits.pop();
    }
}

/// `padic_expand` on a decimal string.
pub fn padic_expand(n: &str, p: PrimeChar) -> Result<Weight> {
    Weight::from_decimal(n, p)
}

pub fn padic_collapse(w: &Weight) -> String {
    w.to_decimal()
}

/// Element of the rank-one Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylElement {
    Identity,
    Reflection,
}

/// `w . λ = w(λ + ρ) - ρ` with `ρ = 1`.
pub fn dot_action(w: WeylElement, lambda: i64) -> i64 {
    match w {
        WeylElement::Identity => lambda,
        WeylElement::Reflection => -lambda - 2,
    }
}

/// Linkage for the first Frobenius kernel on restricted digits:
/// `a = b` or `a + b = p - 2`.
pub fn g1_linked(a: u32, b: u32, p: PrimeChar) -> Result<bool> {
    p.check_digit(a)?;
    p.check_digit(b)?;
    Ok(a == b || a + b == p.p_minus_two())
}

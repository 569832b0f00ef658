//! Closed-form digit rules for `Ext^1` between irreducibles.
//!
//! `Ext^1_G(L(r), L(s))` is one-dimensional exactly when the base-p
//! expansions of `r` and `s` agree except at two adjacent positions
//! `k, k+1`, where `r_k + s_k = p - 2` and `r_{k+1} = s_{k+1} ± 1`, all
//! digits staying in `[0, p-1]`. Everything else in this module is a
//! specialization of that rule.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::weights::{PrimeChar, Weight};

/// Result of the Ext^1 digit rule, with the position `k` that witnesses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ext1 {
    pub dim: u8,
    pub witness_k: Option<usize>,
}

impl Ext1 {
    const ZERO: Ext1 = Ext1 {
        dim: 0,
        witness_k: None,
    };
}

fn check_same_p(r: &Weight, s: &Weight) -> Result<PrimeChar> {
    if r.p() != s.p() {
        return Err(Error::CharMismatch(r.p().get(), s.p().get()));
    }
    Ok(r.p())
}

/// Digit-level form of the rule. Any admissible `k` is unique: `k + 1` must
/// be the highest position where the digits differ.
pub(crate) fn cline_digits(r: &[u32], s: &[u32], p: PrimeChar) -> Option<usize> {
    let len = r.len().max(s.len());
    let at = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    let hi = (0..len).rev().find(|&i| at(r, i) != at(s, i))?;
    if hi == 0 {
        return None;
    }
    let k = hi - 1;
    if (0..k).any(|i| at(r, i) != at(s, i)) {
        return None;
    }
    let (rk, sk) = (at(r, k), at(s, k));
    let (rk1, sk1) = (at(r, hi), at(s, hi));
    (rk + sk == p.p_minus_two() && rk1.abs_diff(sk1) == 1).then_some(k)
}

/// `dim Ext^1_G(L(r), L(s))` by the digit rule.
pub fn cline_ext1(r: &Weight, s: &Weight) -> Result<Ext1> {
    let p = check_same_p(r, s)?;
    Ok(match cline_digits(r.digits(), s.digits(), p) {
        Some(k) => Ext1 {
            dim: 1,
            witness_k: Some(k),
        },
        None => Ext1::ZERO,
    })
}

/// `dim H^1(G, L(r)) = dim Ext^1_G(K, L(r))`.
pub fn h1_dim(r: &Weight) -> u8 {
    u8::from(cline_digits(&[], r.digits(), r.p()).is_some())
}

pub(crate) fn hom_l1_digits(x: &[u32], y: &[u32]) -> bool {
    let (x0, xr) = Weight::tail_digits(x);
    let (y0, yr) = Weight::tail_digits(y);
    x0.abs_diff(y0) == 1 && trimmed_eq(xr, yr)
}

/// `dim Hom_G(L(x), L(1) ⊗ L(y))`.
///
/// The composition factors of `L(1) ⊗ L(y)` in the socle are `L(y ± 1)`
/// with the sign restricted to digits in range; for `y_0 = p - 1` the only
/// simple submodule is `L((p-2) + p y')`.
pub fn hom_with_tensor_l1(x: &Weight, y: &Weight) -> Result<u8> {
    check_same_p(x, y)?;
    Ok(u8::from(hom_l1_digits(x.digits(), y.digits())))
}

/// `dim H^1(G, L(1) ⊗ L(r)) = dim Ext^1_G(L(1), L(r))`.
pub fn h1_of_l1_tensor(r: &Weight) -> u8 {
    u8::from(cline_digits(&[1], r.digits(), r.p()).is_some())
}

/// All `r` with at most `max_digits` digits and `Ext^1(L(r), L(s)) != 0`,
/// built position by position.
pub fn list_ext1_partners(s: &Weight, max_digits: usize) -> Result<BTreeSet<Weight>> {
    if max_digits < s.len() + 1 {
        return Err(Error::InvalidArgument(format!(
            "max_digits = {max_digits} must be at least {} for s = {s}",
            s.len() + 1
        )));
    }
    let p = s.p();
    let mut padded = s.digits().to_vec();
    padded.resize(max_digits, 0);

    let mut out = BTreeSet::new();
    for k in 0..max_digits - 1 {
        let (sk, sk1) = (padded[k], padded[k + 1]);
        if sk > p.p_minus_two() {
            continue;
        }
        let above = (sk1 + 1 < p.get()).then_some(sk1 + 1);
        let below = sk1.checked_sub(1);
        for rk1 in above.into_iter().chain(below) {
            let mut r = padded.clone();
            r[k] = p.p_minus_two() - sk;
            r[k + 1] = rk1;
            out.insert(Weight::from_digits(r, p)?);
        }
    }
    Ok(out)
}

fn trimmed_eq(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|i| a.get(i).copied().unwrap_or(0) == b.get(i).copied().unwrap_or(0))
}

//! Low-degree terms of the Lyndon–Hochschild–Serre spectral sequence for
//! `G_1 ◁ G`:
//!
//! ```text
//! E_2^{nm} = H^n(G, H^m(G_1, V)^[-1])  =>  H^{n+m}(G, V)
//! ```
//!
//! For `V = L(r) = L(r_0) ⊗ L(r')^[1]` the coefficient module untwists to
//! `H^m(G_1, L(r_0))^[-1] ⊗ L(r')`, and the `G_1` factor is one of the
//! induced modules from [`crate::g1`]. Every entry needed for `H^1`, `H^2`
//! and `Ext^1` is then either a recursion on `r'` or a `Hom`/`Ext^1` digit
//! rule. All differentials touching these entries vanish (parity on the
//! `m` index, plus the `E_3` argument at `p = 2` recorded as the `(3,0)`
//! entry), so the `E_2` values are the answer.
//!
//! This path is independent of the closed-form classification in
//! [`crate::classification`]; the two are compared in the sweeps.

use std::fmt;

use crate::error::{Error, Result};
use crate::ext_one::{cline_digits, hom_l1_digits};
use crate::g1::{g1_coh_pair, g1_coh_restricted};
use crate::weights::{PrimeChar, Weight};

/// Why an `E_2` entry has the value it has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// `G_1`-cohomology of `K` or `L(p-2)` is an induced module.
    CfK,
    /// The Steinberg module is `G_1`-projective.
    Steinberg,
    /// `Hom_{G_1}(L(a), L(a)) = K`.
    Schur,
    /// `r_0` is not `G_1`-linked to `0`.
    Linkage,
    /// `r_0` is linked to `0` but `m` has the wrong parity.
    Parity,
    /// Reduces to the same question for `L(r')`.
    Recursion,
}

impl Justification {
    pub fn as_str(self) -> &'static str {
        match self {
            Justification::CfK => "CfK",
            Justification::Steinberg => "Steinberg",
            Justification::Schur => "Schur",
            Justification::Linkage => "Linkage",
            Justification::Parity => "Parity",
            Justification::Recursion => "Recursion",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Entry {
    pub n: u32,
    pub m: u32,
    pub dim: u8,
    /// `H^m(G_1, L(r_0))^[-1] ⊗ L(r')` in words, or `"zero"`.
    pub coefficient: String,
    pub justification: Justification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Even,
    Odd,
    None,
}

impl ParityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ParityClass::Even => "even",
            ParityClass::Odd => "odd",
            ParityClass::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSReport {
    pub weight: Weight,
    pub entries: Vec<E2Entry>,
    pub h1: u8,
    pub h2: u8,
    pub parity: ParityClass,
}

impl SSReport {
    pub fn p(&self) -> PrimeChar {
        self.weight.p()
    }

    pub fn entry(&self, n: u32, m: u32) -> Option<&E2Entry> {
        self.entries.iter().find(|e| e.n == n && e.m == m)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &E2Entry> {
        self.entries.iter().filter(|e| e.dim > 0)
    }
}

fn inconsistent(what: &str, digits: &[u32], p: PrimeChar, sum: u8) -> Error {
    let w = Weight::from_digits(digits.to_vec(), p)
        .map(|w| w.to_decimal())
        .unwrap_or_default();
    Error::InternalInconsistency(format!("{what} for L({w}) at p = {p} sums to {sum}"))
}

/// Whether `H^m(G_1, L(r0))` is nonzero.
fn g1_present(m: u32, r0: u32, p: PrimeChar) -> bool {
    g1_coh_restricted(m, r0, p)
        .map(|v| v.present)
        .unwrap_or(false)
}

/// Whether the digit string is the weight `v`.
fn is_value(digits: &[u32], v: u64, p: PrimeChar) -> bool {
    let base = u64::from(p.get());
    let mut rest = v;
    for &d in digits {
        if rest % base != u64::from(d) {
            return false;
        }
        rest /= base;
    }
    rest == 0
}

fn h1_digits(r: &[u32], p: PrimeChar) -> Result<u8> {
    if r.is_empty() {
        return Ok(0);
    }
    let (r0, rest) = Weight::tail_digits(r);
    // E_2^{10} = H^1(G, L(r')) when H^0(G_1, L(r0)) = K
    let e10 = if g1_present(0, r0, p) {
        h1_digits(rest, p)?
    } else {
        0
    };
    // E_2^{01} = Hom_G(L(1), L(r')) when H^1(G_1, L(r0))^[-1] = H^0(1)
    let e01 = u8::from(g1_present(1, r0, p) && is_value(rest, 1, p));
    let sum = e10 + e01;
    if sum > 1 {
        return Err(inconsistent("E2^{10} + E2^{01}", r, p, sum));
    }
    Ok(sum)
}

/// Degree-2 anti-diagonal `(E^{20}, E^{11}, E^{02})` of `L(r)`.
fn h2_terms(r: &[u32], p: PrimeChar) -> Result<[u8; 3]> {
    if r.is_empty() {
        // H^2(G, K) = 0
        return Ok([0; 3]);
    }
    let (r0, rest) = Weight::tail_digits(r);
    let e20 = if g1_present(0, r0, p) {
        h2_digits(rest, p)?
    } else {
        0
    };
    // H^1(G, L(1) ⊗ L(r')) = Ext^1_G(L(1), L(r'))
    let e11 = u8::from(g1_present(1, r0, p) && cline_digits(&[1], rest, p).is_some());
    // Hom_G(L(r'), H^0(2)): the socle of H^0(2) is L(2) for every p.
    let e02 = u8::from(g1_present(2, r0, p) && is_value(rest, 2, p));
    Ok([e20, e11, e02])
}

fn h2_digits(r: &[u32], p: PrimeChar) -> Result<u8> {
    let terms = h2_terms(r, p)?;
    let sum: u8 = terms.iter().sum();
    if sum > 1 {
        return Err(inconsistent("E2^{20} + E2^{11} + E2^{02}", r, p, sum));
    }
    Ok(sum)
}

fn ext1_digits(r: &[u32], s: &[u32], p: PrimeChar) -> Result<u8> {
    if r == s {
        return Ok(0);
    }
    let (r0, r_rest) = Weight::tail_digits(r);
    let (s0, s_rest) = Weight::tail_digits(s);
    // E_2^{10} = Ext^1_G(L(r'), L(s')) when Hom_{G_1}(L(r0), L(s0)) = K
    let e10 = if g1_coh_pair(0, r0, s0, p)?.present {
        ext1_digits(r_rest, s_rest, p)?
    } else {
        0
    };
    // E_2^{01} = Hom_G(L(r'), L(1) ⊗ L(s'))
    let e01 = u8::from(g1_coh_pair(1, r0, s0, p)?.present && hom_l1_digits(r_rest, s_rest));
    let sum = e10 + e01;
    if sum > 1 {
        return Err(Error::InternalInconsistency(format!(
            "E2^{{10}} + E2^{{01}} for Ext^1 at p = {p} sums to {sum}"
        )));
    }
    Ok(sum)
}

/// `dim H^1(G, L(r)) = E_2^{10} + E_2^{01}`.
pub fn h1_via_ss(r: &Weight) -> Result<u8> {
    h1_digits(r.digits(), r.p())
}

/// `dim H^2(G, L(r)) = E_2^{20} + E_2^{11} + E_2^{02}`.
pub fn h2_via_ss(r: &Weight) -> Result<u8> {
    h2_digits(r.digits(), r.p())
}

/// `dim Ext^1_G(L(r), L(s))` from the spectral sequence of `L(r) ⊗ L(s)`.
pub fn ext1_via_ss(r: &Weight, s: &Weight) -> Result<u8> {
    if r.p() != s.p() {
        return Err(Error::CharMismatch(r.p().get(), s.p().get()));
    }
    ext1_digits(r.digits(), s.digits(), r.p())
}

fn coefficient(m: u32, r0: u32, rest: &Weight) -> (bool, String) {
    let p = rest.p();
    if !g1_present(m, r0, p) {
        return (false, "zero".to_string());
    }
    let desc = if m == 0 {
        format!("L({rest})")
    } else {
        format!("H0({m}) ⊗ L({rest})")
    };
    (true, desc)
}

fn vanishing_reason(m: u32, r0: u32, p: PrimeChar) -> Justification {
    if r0 == p.steinberg() && m > 0 {
        Justification::Steinberg
    } else if r0 == 0 || r0 == p.p_minus_two() {
        Justification::Parity
    } else {
        Justification::Linkage
    }
}

/// The computed region of the `E_2` page for `L(r)`.
///
/// Positions `(n, m)` with `n + m <= 2` are always present. `(3, 0)` is
/// listed only when `E_2^{02} != 0`, where it records that the `d_3` target
/// `H^3(G, L(2))` vanishes.
pub fn e2_report(r: &Weight) -> Result<SSReport> {
    let p = r.p();
    let (r0, rest) = r.split_head();
    let digits = rest.digits();

    let mut entries = Vec::with_capacity(7);
    let mut push = |n: u32, m: u32, dim: u8, present: bool, coeff: String, why: Justification| {
        debug_assert!(present || dim == 0);
        entries.push(E2Entry {
            n,
            m,
            dim,
            coefficient: coeff,
            justification: if present {
                why
            } else {
                vanishing_reason(m, r0, p)
            },
        });
    };

    let (c, desc) = coefficient(0, r0, &rest);
    push(
        0,
        0,
        u8::from(c && rest.is_zero()),
        c,
        desc.clone(),
        Justification::Schur,
    );
    let e10 = if c { h1_digits(digits, p)? } else { 0 };
    push(1, 0, e10, c, desc.clone(), Justification::Recursion);

    let (c1, desc1) = coefficient(1, r0, &rest);
    let e01 = u8::from(c1 && is_value(digits, 1, p));
    push(0, 1, e01, c1, desc1, Justification::CfK);

    let [e20, e11, e02] = if r.is_zero() {
        [0; 3]
    } else {
        h2_terms(r.digits(), p)?
    };
    push(2, 0, e20, c, desc.clone(), Justification::Recursion);
    push(
        1,
        1,
        e11,
        c1,
        coefficient(1, r0, &rest).1,
        Justification::CfK,
    );
    let (c2, desc2) = coefficient(2, r0, &rest);
    push(0, 2, e02, c2, desc2, Justification::CfK);
    if e02 > 0 {
        push(3, 0, 0, c, desc, Justification::Recursion);
    }

    let h1 = e10 + e01;
    let h2 = e20 + e11 + e02;
    if h1 > 1 {
        return Err(inconsistent("E2^{10} + E2^{01}", r.digits(), p, h1));
    }
    if h2 > 1 {
        return Err(inconsistent(
            "E2^{20} + E2^{11} + E2^{02}",
            r.digits(),
            p,
            h2,
        ));
    }

    let even = entries.iter().any(|e| e.dim > 0 && e.m % 2 == 0);
    let odd = entries.iter().any(|e| e.dim > 0 && e.m % 2 == 1);
    let parity = match (even, odd) {
        (true, true) => return Err(Error::MixedParity(r.to_decimal())),
        (true, false) => ParityClass::Even,
        (false, true) => ParityClass::Odd,
        (false, false) => ParityClass::None,
    };

    Ok(SSReport {
        weight: r.clone(),
        entries,
        h1,
        h2,
        parity,
    })
}

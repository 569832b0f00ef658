//! Cohomology of the first Frobenius kernel `G_1` with restricted
//! coefficients, untwisted to a `G`-module.
//!
//! Nonzero values are always induced modules `H^0(m)` where `m` is the
//! cohomological degree:
//!
//! * `H^{2i}(G_1, K)^[-1] = H^0(2i)`
//! * `H^{2i+1}(G_1, L(p-2))^[-1] = H^0(2i+1)`
//! * zero for every other restricted coefficient.

use crate::error::{Error, Result};
use crate::weights::PrimeChar;

/// `H^m(G_1, M)^[-1]`, either zero or `H^0(weight)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct G1CohValue {
    pub present: bool,
    pub weight: u32,
}

impl G1CohValue {
    pub const ABSENT: G1CohValue = G1CohValue {
        present: false,
        weight: 0,
    };

    pub fn induced(m: u32) -> Self {
        G1CohValue {
            present: true,
            weight: m,
        }
    }
}

/// `H^m(G_1, L(r0))^[-1]` for a restricted digit `r0`.
///
/// At `p = 2` the trivial weight is also `p - 2`, so both parities occur.
pub fn g1_coh_restricted(m: u32, r0: u32, p: PrimeChar) -> Result<G1CohValue> {
    p.check_digit(r0)?;
    let even = m.is_multiple_of(2);
    let from_trivial = r0 == 0 && even;
    let from_partner = r0 == p.p_minus_two() && !even;
    Ok(if from_trivial || from_partner {
        G1CohValue::induced(m)
    } else {
        G1CohValue::ABSENT
    })
}

/// `Ext^i_{G_1}(St, St)`: the Steinberg module is projective over `G_1`.
pub fn steinberg_ext_g1(i: u32) -> u8 {
    u8::from(i == 0)
}

/// `H^m(G_1, L(a) ⊗ L(b))^[-1]` for `m ∈ {0, 1}`.
///
/// Degree 0 is `Hom_{G_1}(L(a), L(b))`, which is `K` iff `a = b`. In degree 1
/// only `a + b = p - 2` contributes, through the direct summand `L(p-2)`.
pub fn g1_coh_pair(m: u32, a: u32, b: u32, p: PrimeChar) -> Result<G1CohValue> {
    p.check_digit(a)?;
    p.check_digit(b)?;
    let present = match m {
        0 => a == b,
        1 => a + b == p.p_minus_two() && !(a == p.steinberg() && b == p.steinberg()),
        _ => return Err(Error::UnsupportedDegree(m)),
    };
    Ok(if present {
        G1CohValue::induced(m)
    } else {
        G1CohValue::ABSENT
    })
}

//! Closed-form classification of `H^1` and `H^2` for irreducible modules,
//! the Ext^1 witnesses behind the H^2 families, and the verification sweep
//! comparing every closed form against the spectral-sequence path.
//!
//! `H^2(G, L(w)) = K` exactly for Frobenius twists of
//!
//! * `2p`
//! * `2p^2 - 2p - 2` (`p > 2`)
//! * `2p - 2 + (2p - 2) p^e` with `e > 1`
//!
//! and vanishes otherwise. Matching is done on digit patterns so `e` and the
//! twist are unbounded.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::ext_one::{cline_digits, cline_ext1, h1_dim};
use crate::spectral::{e2_report, ext1_via_ss, h1_via_ss, h2_via_ss};
use crate::weights::{PrimeChar, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H2Kind {
    /// `2p`
    TwoP,
    /// `2p^2 - 2p - 2`, only for `p > 2`
    TwoPSqMinus,
    /// `2p - 2 + (2p - 2) p^e`, `e > 1`
    TwoFamily { e: usize },
}

impl fmt::Display for H2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H2Kind::TwoP => f.write_str("2p"),
            H2Kind::TwoPSqMinus => f.write_str("2p^2-2p-2"),
            H2Kind::TwoFamily { e } => write!(f, "2p-2+(2p-2)p^e, e={e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Family {
    pub kind: H2Kind,
    pub base_weight: Weight,
    pub twist: usize,
}

/// Which family (if any) `w` belongs to.
pub fn h2_family_of(w: &Weight) -> Option<H2Family> {
    let p = w.p();
    let (s, d) = w.untwist_maximal();
    let digits = s.digits();
    let (pm2, pm3) = (p.p_minus_two(), p.get().wrapping_sub(3));

    let family = |kind, base_len: usize| {
        // the base weight may start with zero digits that were stripped
        let lead = base_len - digits.len();
        (d >= lead).then(|| H2Family {
            kind,
            base_weight: s.frobenius_twist(lead),
            twist: d - lead,
        })
    };

    if p.get() == 2 {
        // 2p = [0,0,1] and 2 + 2^{e+1} = [0,1,0,..,0,1] after the leading zero.
        return match digits {
            [1] => family(H2Kind::TwoP, 3),
            [1, mid @ .., 1] if !mid.is_empty() && mid.iter().all(|&x| x == 0) => {
                family(H2Kind::TwoFamily { e: mid.len() + 1 }, digits.len() + 1)
            }
            _ => None,
        };
    }

    match digits {
        [2] => family(H2Kind::TwoP, 2),
        [a, b, 1] if *a == pm2 && *b == pm3 => family(H2Kind::TwoPSqMinus, 3),
        [a, 1, mid @ .., c, 1] if *a == pm2 && *c == pm2 && mid.iter().all(|&x| x == 0) => {
            family(H2Kind::TwoFamily { e: mid.len() + 2 }, digits.len())
        }
        _ => None,
    }
}

/// `dim H^2(G, L(w))` from the classification.
pub fn h2_closed_form(w: &Weight) -> u8 {
    u8::from(h2_family_of(w).is_some())
}

/// `dim H^1(G, L(w))`: 1 iff `w = (2p - 2) p^d`.
pub fn h1_closed_form(w: &Weight) -> u8 {
    let (s, _) = w.untwist_maximal();
    let p = w.p();
    let hit = if p.get() == 2 {
        // 2p - 2 = 2 = [0,1] untwists to [1] with one stripped zero
        s.digits() == [1] && w.len() >= 2
    } else {
        s.digits() == [p.p_minus_two(), 1]
    };
    u8::from(hit)
}

/// `(2p - 2) p^k`.
fn h1_generator(p: PrimeChar, k: usize) -> Weight {
    let mut digits = vec![0; k];
    digits.extend([p.p_minus_two(), 1]);
    Weight::from_digits(digits, p).expect("digits below p")
}

/// Irreducibles `W` with `H^1(G, W) != 0` and `Ext^1(W, L(w)) != 0`.
pub fn corollary2_witnesses(w: &Weight) -> BTreeSet<Weight> {
    let p = w.p();
    (0..=w.len() + 1)
        .map(|k| h1_generator(p, k))
        .filter(|x| cline_digits(x.digits(), w.digits(), p).is_some())
        .collect()
}

/// True for `p = 2` and `w = 4 * 2^d`, the case Corollary-2-style witnesses
/// are not expected to exist.
pub fn is_witness_exception(w: &Weight) -> bool {
    w.p().get() == 2
        && matches!(
            h2_family_of(w),
            Some(H2Family {
                kind: H2Kind::TwoP,
                ..
            })
        )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MismatchKind {
    H1 {
        closed_form: u8,
        cline: u8,
        spectral: u8,
    },
    H2 {
        closed_form: u8,
        spectral: u8,
    },
    Witnesses {
        h2: u8,
        count: usize,
    },
    Ext1 {
        s: String,
        cline: u8,
        spectral: u8,
        reversed: u8,
    },
    /// The spectral path itself reported a violated invariant.
    Inconsistency(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub weight: String,
    pub kind: MismatchKind,
}

impl Mismatch {
    pub fn is_inconsistency(&self) -> bool {
        matches!(self.kind, MismatchKind::Inconsistency(_))
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MismatchKind::H1 {
                closed_form,
                cline,
                spectral,
            } => write!(
                f,
                "L({}): h1 closed form {closed_form}, digit rule {cline}, spectral {spectral}",
                self.weight
            ),
            MismatchKind::H2 {
                closed_form,
                spectral,
            } => write!(
                f,
                "L({}): h2 closed form {closed_form}, spectral {spectral}",
                self.weight
            ),
            MismatchKind::Witnesses { h2, count } => {
                write!(f, "L({}): h2 = {h2} but {count} witnesses", self.weight)
            }
            MismatchKind::Ext1 {
                s,
                cline,
                spectral,
                reversed,
            } => write!(
                f,
                "Ext1(L({}), L({s})): digit rule {cline}, spectral {spectral}, reversed {reversed}",
                self.weight
            ),
            MismatchKind::Inconsistency(msg) => write!(f, "L({}): {msg}", self.weight),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub p: PrimeChar,
    pub max_weight: u64,
    pub pair_max: Option<u64>,
    pub weights_checked: u64,
    pub pairs_checked: u64,
    pub h1_positive: Vec<u64>,
    pub h2_positive: Vec<u64>,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn has_inconsistency(&self) -> bool {
        self.mismatches.iter().any(Mismatch::is_inconsistency)
    }
}

struct WeightCheck {
    h1: bool,
    h2: bool,
    mismatches: Vec<Mismatch>,
}

fn check_weight(n: u64, p: PrimeChar) -> WeightCheck {
    let w = Weight::from_u64(n, p);
    let weight = n.to_string();
    let mut mismatches = Vec::new();
    let mut flag = |kind| {
        mismatches.push(Mismatch {
            weight: weight.clone(),
            kind,
        })
    };

    let h1c = h1_closed_form(&w);
    let h1d = h1_dim(&w);
    let h2c = h2_closed_form(&w);
    match h1_via_ss(&w) {
        Ok(h1s) if h1c == h1d && h1d == h1s => {}
        Ok(h1s) => flag(MismatchKind::H1 {
            closed_form: h1c,
            cline: h1d,
            spectral: h1s,
        }),
        Err(e) => flag(MismatchKind::Inconsistency(e.to_string())),
    }
    match h2_via_ss(&w) {
        Ok(h2s) if h2s == h2c => {}
        Ok(h2s) => flag(MismatchKind::H2 {
            closed_form: h2c,
            spectral: h2s,
        }),
        Err(e) => flag(MismatchKind::Inconsistency(e.to_string())),
    }
    match e2_report(&w) {
        Ok(rep) if rep.h1 == h1c && rep.h2 == h2c => {}
        Ok(rep) => flag(MismatchKind::Inconsistency(format!(
            "E2 report gives h1 = {}, h2 = {}",
            rep.h1, rep.h2
        ))),
        Err(e) => flag(MismatchKind::Inconsistency(e.to_string())),
    }
    if h2c == 1 {
        let count = corollary2_witnesses(&w).len();
        if (count == 0) != is_witness_exception(&w) {
            flag(MismatchKind::Witnesses { h2: h2c, count });
        }
    }
    WeightCheck {
        h1: h1c == 1,
        h2: h2c == 1,
        mismatches,
    }
}

fn check_pairs_for(r: u64, pair_max: u64, p: PrimeChar) -> Vec<Mismatch> {
    let rw = Weight::from_u64(r, p);
    let mut out = Vec::new();
    for s in 0..=pair_max {
        let sw = Weight::from_u64(s, p);
        let cline = cline_ext1(&rw, &sw).map(|e| e.dim).unwrap_or(u8::MAX);
        let reversed = cline_ext1(&sw, &rw).map(|e| e.dim).unwrap_or(u8::MAX);
        match ext1_via_ss(&rw, &sw) {
            Ok(spectral) if spectral == cline && cline == reversed => {}
            Ok(spectral) => out.push(Mismatch {
                weight: r.to_string(),
                kind: MismatchKind::Ext1 {
                    s: s.to_string(),
                    cline,
                    spectral,
                    reversed,
                },
            }),
            Err(e) => out.push(Mismatch {
                weight: r.to_string(),
                kind: MismatchKind::Inconsistency(format!("Ext1 with L({s}): {e}")),
            }),
        }
    }
    out
}

/// Compares every closed form against the spectral path for all weights
/// `0..=max_weight`, and Ext^1 for all pairs `0..=pair_max`.
///
/// Work is split across the current rayon pool; results come back in weight
/// order regardless of the number of threads.
pub fn verify_sweep(p: PrimeChar, max_weight: u64, pair_max: Option<u64>) -> VerificationReport {
    let checks: Vec<WeightCheck> = (0..=max_weight)
        .into_par_iter()
        .map(|n| check_weight(n, p))
        .collect();

    let mut h1_positive = Vec::new();
    let mut h2_positive = Vec::new();
    let mut mismatches = Vec::new();
    for (n, c) in (0..=max_weight).zip(checks) {
        if c.h1 {
            h1_positive.push(n);
        }
        if c.h2 {
            h2_positive.push(n);
        }
        mismatches.extend(c.mismatches);
    }

    let mut pairs_checked = 0;
    if let Some(pm) = pair_max {
        let pair_mismatches: Vec<Vec<Mismatch>> = (0..=pm)
            .into_par_iter()
            .map(|r| check_pairs_for(r, pm, p))
            .collect();
        mismatches.extend(pair_mismatches.into_iter().flatten());
        pairs_checked = (pm + 1) * (pm + 1);
    }

    VerificationReport {
        p,
        max_weight,
        pair_max,
        weights_checked: max_weight + 1,
        pairs_checked,
        h1_positive,
        h2_positive,
        mismatches,
    }
}

//! Formal characters of SL2-modules.
//!
//! A character is a finitely supported map from integer weights to
//! multiplicities. Tensor products convolve characters, and because the
//! dominant weights of SL2 are totally ordered, a module character splits
//! into irreducible characters by repeatedly stripping the highest weight.
//! This gives a brute-force check on every tensor-product statement the
//! digit rules rely on.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weights::{PrimeChar, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    support: BTreeMap<i64, u64>,
    p: PrimeChar,
}

impl Character {
    pub fn zero(p: PrimeChar) -> Self {
        Character {
            support: BTreeMap::new(),
            p,
        }
    }

    /// The trivial character `{0: 1}`.
    pub fn trivial(p: PrimeChar) -> Self {
        Self::from_pairs([(0, 1)], p)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>, p: PrimeChar) -> Self {
        let mut c = Character::zero(p);
        for (wt, m) in pairs {
            c.add(wt, m);
        }
        c
    }

    pub fn p(&self) -> PrimeChar {
        self.p
    }

    pub fn support(&self) -> &BTreeMap<i64, u64> {
        &self.support
    }

    pub fn multiplicity(&self, weight: i64) -> u64 {
        self.support.get(&weight).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.support.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.support
            .iter()
            .all(|(&wt, &m)| self.multiplicity(-wt) == m)
    }

    fn add(&mut self, weight: i64, mult: u64) {
        if mult > 0 {
            *self.support.entry(weight).or_insert(0) += mult;
        }
    }

    /// Subtracts `k * other`; fails if any multiplicity would go negative.
    fn subtract_scaled(&mut self, other: &Character, k: u64) -> Result<()> {
        for (&wt, &m) in &other.support {
            let have = self.multiplicity(wt);
            let take = m * k;
            if take > have {
                return Err(Error::NotAModuleCharacter(format!(
                    "multiplicity of weight {wt} would become negative"
                )));
            }
            if have == take {
                self.support.remove(&wt);
            } else {
                self.support.insert(wt, have - take);
            }
        }
        Ok(())
    }

    pub fn plus(&self, other: &Character) -> Result<Character> {
        same_p(self, other)?;
        let mut out = self.clone();
        for (&wt, &m) in &other.support {
            out.add(wt, m);
        }
        Ok(out)
    }

    pub fn scaled(&self, k: u64) -> Character {
        let mut out = Character::zero(self.p);
        for (&wt, &m) in &self.support {
            out.add(wt, m * k);
        }
        out
    }

    /// Frobenius twist at the level of characters: every weight times `p`.
    pub fn scale_by_p(&self) -> Character {
        let p = i64::from(self.p.get());
        Character {
            support: self.support.iter().map(|(&wt, &m)| (wt * p, m)).collect(),
            p: self.p,
        }
    }

    /// Character of the tensor product.
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        same_p(self, other)?;
        let mut out = Character::zero(self.p);
        for (&a, &ma) in &self.support {
            for (&b, &mb) in &other.support {
                out.add(a + b, ma * mb);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Character {
    /// `weight:mult` pairs from the highest weight down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .support
            .iter()
            .rev()
            .map(|(w, m)| format!("{w}:{m}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn same_p(a: &Character, b: &Character) -> Result<()> {
    if a.p != b.p {
        return Err(Error::CharMismatch(a.p.get(), b.p.get()));
    }
    Ok(())
}

/// Character of the induced module `H^0(m)`: weights `m, m-2, ..., -m`.
pub fn weyl_character(m: u64, p: PrimeChar) -> Character {
    let m = m as i64;
    Character::from_pairs((0..=m).map(|j| (m - 2 * j, 1)), p)
}

/// Character of `L(w)`, the product of the twisted restricted factors.
pub fn irreducible_character(w: &Weight) -> Result<Character> {
    let p = w.p();
    if w.to_i64().is_none() {
        return Err(Error::Overflow(w.to_decimal()));
    }
    let mut out = Character::trivial(p);
    let mut scale: i64 = 1;
    for (i, &d) in w.digits().iter().enumerate() {
        if i > 0 {
            scale *= i64::from(p.get());
        }
        if d == 0 {
            continue;
        }
        let factor = Character {
            support: weyl_character(u64::from(d), p)
                .support
                .into_iter()
                .map(|(wt, m)| (wt * scale, m))
                .collect(),
            p,
        };
        out = out.tensor(&factor)?;
    }
    debug_assert!(out.is_symmetric());
    Ok(out)
}

/// Composition factors of a module character, by highest-weight stripping.
pub fn decompose(c: &Character) -> Result<BTreeMap<Weight, u64>> {
    let p = c.p;
    let mut rest = c.clone();
    let mut factors = BTreeMap::new();
    while let Some((&top, &k)) = rest.support.iter().next_back() {
        if top < 0 {
            return Err(Error::NotAModuleCharacter(format!(
                "leftover character has highest weight {top} < 0"
            )));
        }
        let mu = Weight::from_u64(top as u64, p);
        rest.subtract_scaled(&irreducible_character(&mu)?, k)?;
        factors.insert(mu, k);
    }
    Ok(factors)
}

/// `χ(L(1)) · χ(L(s))`.
pub fn l1_tensor(s: &Weight) -> Result<Character> {
    weyl_character(1, s.p()).tensor(&irreducible_character(s)?)
}

//! Elements of `Zh (x) H+` written in the alphabets `Z` (first slot) and `Zp`
//! (second slot). The second slot is polynomial and harmonic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::basis::{self, TIndex};
use crate::error::{Error, Result};
use crate::poly::Alphabet;
use crate::qi::Qi;
use crate::zh::Zh;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorElement {
    f: Zh,
}

impl TensorElement {
    /// Checks the alphabets, that `Zp` carries no denominator, and that the
    /// `Zp` Laplacian annihilates `f`.
    pub fn new(f: Zh) -> Result<Self> {
        if f.uses(Alphabet::W) {
            return Err(Error::Alphabet(Alphabet::W));
        }
        if f.den(Alphabet::Zp) > 0 {
            return Err(Error::Invalid("second slot must be polynomial".into()));
        }
        if !f.is_harmonic(Alphabet::Zp) {
            return Err(Error::NotHarmonic(Alphabet::Zp));
        }
        Ok(TensorElement { f })
    }

    pub(crate) fn new_unchecked(f: Zh) -> Self {
        TensorElement { f }
    }

    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `a (x) b` with both factors given in alphabet `Z`.
    pub fn pure(a: &Zh, b: &Zh) -> Result<Self> {
        Self::new(a * &b.rename(Alphabet::Z, Alphabet::Zp))
    }

    pub fn as_zh(&self) -> &Zh {
        &self.f
    }

    pub fn into_zh(self) -> Zh {
        self.f
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    pub fn scale(&self, c: &Qi) -> Self {
        TensorElement { f: self.f.scale(c) }
    }

    /// Second slot expanded in harmonic `t(Zp)`; values are first-slot coefficients in `Z`.
    pub fn slots(&self) -> BTreeMap<TIndex, Zh> {
        basis::expand_parametric(&self.f, Alphabet::Zp)
    }

    pub fn from_slots(slots: &BTreeMap<TIndex, Zh>) -> Result<Self> {
        if slots.keys().any(|i| i.k != 0) {
            return Err(Error::Invalid("second-slot indices must have k = 0".into()));
        }
        Self::new(basis::reconstruct_parametric(slots, Alphabet::Zp))
    }

    pub fn is_harmonic_first(&self) -> bool {
        self.f.is_harmonic(Alphabet::Z)
    }

    /// Exchange the two slots. Needs the first slot to be harmonic and polynomial.
    pub fn swap(&self) -> Result<Self> {
        Self::new(self.f.swap_alphabets(Alphabet::Z, Alphabet::Zp))
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, o: &TensorElement) -> TensorElement {
        TensorElement { f: &self.f + &o.f }
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, o: &TensorElement) -> TensorElement {
        TensorElement { f: &self.f - &o.f }
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

//! Nonnegative arbitrary-precision counts with optional saturation.
//!
//! A saturated count records only that the true value is at least the cap it
//! was clamped to. Saturation propagates through products and binomials and
//! never hides positivity.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigCount {
    value: BigUint,
    saturated: bool,
}

impl BigCount {
    pub fn zero() -> BigCount {
        BigCount::exact(BigUint::zero())
    }

    pub fn one() -> BigCount {
        BigCount::exact(BigUint::one())
    }

    pub fn exact(value: impl Into<BigUint>) -> BigCount {
        BigCount {
            value: value.into(),
            saturated: false,
        }
    }

    /// A count known only to be at least `cap`.
    pub fn saturated_at(cap: &BigUint) -> BigCount {
        BigCount {
            value: cap.clone(),
            saturated: true,
        }
    }

    /// Clamps an exact value against `cap`.
    pub fn capped(value: BigUint, cap: Option<&BigUint>) -> BigCount {
        match cap {
            Some(c) if &value >= c => BigCount::saturated_at(c),
            _ => BigCount::exact(value),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.value.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.saturated {
            None
        } else {
            self.value.to_u64()
        }
    }

    /// Re-clamps against a (possibly smaller) cap.
    pub fn clamp(self, cap: Option<&BigUint>) -> BigCount {
        match cap {
            Some(c) if &self.value >= c => BigCount::saturated_at(c),
            _ => self,
        }
    }

    pub fn mul(&self, other: &BigCount, cap: Option<&BigUint>) -> BigCount {
        if self.is_zero() || other.is_zero() {
            return BigCount::zero();
        }
        let value = &self.value * &other.value;
        let mut out = BigCount::capped(value, cap);
        if (self.saturated || other.saturated) && !out.saturated {
            // a saturated factor times a positive one is still at least its cap
            out.saturated = true;
        }
        out
    }

    pub fn mul_u64(&self, factor: u64, cap: Option<&BigUint>) -> BigCount {
        self.mul(&BigCount::exact(factor), cap)
    }

    /// Binomial coefficient `C(self, b)`, zero when `self < b`.
    ///
    /// For a saturated `self` the result is saturated whenever `1 <= b` and
    /// `b` is below the cap, since then `C(a, b) >= C(cap, b) >= cap`. When
    /// `b` reaches the cap the value is undetermined and the result is
    /// reported saturated so positivity is never lost; the counting routines
    /// keep their internal cap above every class size and never hit that case.
    pub fn binomial(&self, b: u64, cap: Option<&BigUint>) -> BigCount {
        if b == 0 {
            return BigCount::one();
        }
        if self.saturated {
            return BigCount::saturated_at(&self.value);
        }
        binomial_exact(&self.value, b, cap)
    }
}

/// `C(a, b)` clamped at `cap`. Stops early once a partial product reaches the
/// cap: with `b' = min(b, a - b)` the sequence `C(a, 1..=b')` is increasing.
pub fn binomial_exact(a: &BigUint, b: u64, cap: Option<&BigUint>) -> BigCount {
    let b_big = BigUint::from(b);
    match a.cmp(&b_big) {
        Ordering::Less => return BigCount::zero(),
        Ordering::Equal => return BigCount::capped(BigUint::one(), cap),
        Ordering::Greater => {}
    }
    let rest = a - &b_big;
    let steps = if rest < b_big {
        rest.to_u64().expect("smaller than a u64")
    } else {
        b
    };
    let mut acc = BigUint::one();
    for i in 0..steps {
        acc *= a - BigUint::from(i);
        acc /= BigUint::from(i + 1);
        if let Some(c) = cap {
            if &acc >= c {
                return BigCount::saturated_at(c);
            }
        }
    }
    BigCount::exact(acc)
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount::exact(v)
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount::exact(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.saturated {
            write!(f, ">={}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

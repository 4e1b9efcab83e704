//! Counter arithmetic for the three numeric modes.

use std::cmp::Ordering;
use std::f64::consts::LN_2;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{NumericMode, WeightValues};

/// A nonnegative path count stored as its natural logarithm. Zero is
/// `-inf`; addition is log-sum-exp.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogCount(pub f64);

impl fmt::Display for LogCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Arithmetic needed by the path-count recurrences and the extraction
/// algorithms.
pub trait PathCount: Clone + Send + Sync + fmt::Debug + 'static {
    const MODE: NumericMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn from_u64(x: u64) -> Self;
    /// False after a float overflow.
    fn is_finite(&self) -> bool;
    /// Value on the linear scale (may be `inf` for huge exact or log values).
    fn to_linear(&self) -> f64;
    /// Natural logarithm of the value (`-inf` for zero).
    fn to_ln(&self) -> f64;
    fn compare(&self, other: &Self) -> Ordering;
    /// Equality used for ties: exact for integers, relative `1e-12` for floats.
    fn ties(&self, other: &Self) -> bool;

    fn into_values(values: Vec<Self>) -> WeightValues;
    fn slice(values: &WeightValues) -> Option<&[Self]>;

    fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    /// Sum of `values[i]` over `indices`.
    fn sum_at(values: &[Self], indices: &[u32]) -> Self {
        let mut acc = Self::zero();
        for &i in indices {
            acc.add_assign(&values[i as usize]);
        }
        acc
    }
}

/// Relative tolerance for float ties.
pub const TIE_EPSILON: f64 = 1e-12;

impl PathCount for f64 {
    const MODE: NumericMode = NumericMode::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add_assign(&mut self, other: &Self) {
        *self += *other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_u64(x: u64) -> Self {
        x as f64
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn to_linear(&self) -> f64 {
        *self
    }
    fn to_ln(&self) -> f64 {
        self.ln()
    }
    fn compare(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }
    fn ties(&self, other: &Self) -> bool {
        self == other || (self - other).abs() <= TIE_EPSILON * self.abs().max(other.abs())
    }
    fn into_values(values: Vec<Self>) -> WeightValues {
        WeightValues::Float(values)
    }
    fn slice(values: &WeightValues) -> Option<&[Self]> {
        match values {
            WeightValues::Float(v) => Some(v),
            _ => None,
        }
    }
}

impl PathCount for BigUint {
    const MODE: NumericMode = NumericMode::Exact;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_u64(x: u64) -> Self {
        BigUint::from(x)
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn to_linear(&self) -> f64 {
        self.to_f64().unwrap_or(f64::INFINITY)
    }
    fn to_ln(&self) -> f64 {
        big_ln(self)
    }
    fn compare(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn ties(&self, other: &Self) -> bool {
        self == other
    }
    fn into_values(values: Vec<Self>) -> WeightValues {
        WeightValues::Exact(values)
    }
    fn slice(values: &WeightValues) -> Option<&[Self]> {
        match values {
            WeightValues::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl PathCount for LogCount {
    const MODE: NumericMode = NumericMode::Log;

    fn zero() -> Self {
        LogCount(f64::NEG_INFINITY)
    }
    fn one() -> Self {
        LogCount(0.0)
    }
    fn add_assign(&mut self, other: &Self) {
        let (a, b) = (self.0, other.0);
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        self.0 = if lo == f64::NEG_INFINITY {
            hi
        } else {
            hi + (lo - hi).exp().ln_1p()
        };
    }
    fn mul(&self, other: &Self) -> Self {
        LogCount(self.0 + other.0)
    }
    /// One exponential per term and a single logarithm, scaled by the
    /// largest term.
    fn sum_at(values: &[Self], indices: &[u32]) -> Self {
        let hi = indices
            .iter()
            .map(|&i| values[i as usize].0)
            .fold(f64::NEG_INFINITY, f64::max);
        if hi.is_infinite() {
            return LogCount(hi);
        }
        let scaled: f64 = indices.iter().map(|&i| (values[i as usize].0 - hi).exp()).sum();
        LogCount(hi + scaled.ln())
    }
    fn from_u64(x: u64) -> Self {
        LogCount((x as f64).ln())
    }
    fn is_finite(&self) -> bool {
        self.0 < f64::INFINITY && !self.0.is_nan()
    }
    fn to_linear(&self) -> f64 {
        self.0.exp()
    }
    fn to_ln(&self) -> f64 {
        self.0
    }
    fn compare(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
    fn ties(&self, other: &Self) -> bool {
        self.0 == other.0 || (self.0 - other.0).abs() <= TIE_EPSILON
    }
    fn into_values(values: Vec<Self>) -> WeightValues {
        WeightValues::Log(values)
    }
    fn slice(values: &WeightValues) -> Option<&[Self]> {
        match values {
            WeightValues::Log(v) => Some(v),
            _ => None,
        }
    }
}

/// Natural logarithm of an arbitrary-size integer.
pub fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * LN_2
}

/// `a / b` as a float, accurate even when both exceed the float range.
pub fn big_ratio(a: &BigUint, b: &BigUint) -> f64 {
    let shift = b.bits().saturating_sub(60);
    let (a, b) = (a >> shift, b >> shift);
    a.to_f64().unwrap_or(f64::INFINITY) / b.to_f64().unwrap_or(f64::INFINITY)
}

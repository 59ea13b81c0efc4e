//! Truncated formal power series in one variable `t`.
//!
//! A series keeps the powers `t^0 ..= t^N` where `N` is its truncation order.
//! Coefficients are sparse: an absent exponent is an exact zero. Binary
//! operations truncate to the smaller of the two orders and never extend
//! precision.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    order: usize,
    coeffs: BTreeMap<usize, T>,
    even: bool,
}

impl<T: Scalar> Series<T> {
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: BTreeMap::new(),
            even: true,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_coeffs(order, [(0, c)])
    }

    /// `c * t^k`, or zero if `k` exceeds the order.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        Self::from_coeffs(order, [(k, c)])
    }

    /// Build from `(exponent, coefficient)` pairs. Exponents above `order` are
    /// dropped; repeated exponents are summed.
    pub fn from_coeffs<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, T)>,
    {
        let mut coeffs: BTreeMap<usize, T> = BTreeMap::new();
        for (k, c) in terms {
            if k > order {
                continue;
            }
            let slot = coeffs.entry(k).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        Self::normalized(order, coeffs)
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_dense(order: usize, coeffs: Vec<T>) -> Self {
        Self::from_coeffs(order, coeffs.into_iter().enumerate())
    }

    fn normalized(order: usize, mut coeffs: BTreeMap<usize, T>) -> Self {
        coeffs.retain(|&k, c| k <= order && !c.is_zero());
        let even = coeffs.keys().all(|k| k % 2 == 0);
        Series { order, coeffs, even }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether every nonzero coefficient sits on an even power of `t`.
    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drop every power above `order`. Never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::normalized(
            order,
            self.coeffs.range(..=order).map(|(&k, c)| (k, c.clone())).collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::normalized(
            self.order,
            self.coeffs.iter().map(|(&k, c)| (k, c.clone() * s.clone())).collect(),
        )
    }

    fn dense(&self, len: usize) -> Vec<T> {
        let mut v = vec![T::zero(); len];
        for (&k, c) in self.coeffs.range(..len) {
            v[k] = c.clone();
        }
        v
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out: BTreeMap<usize, T> = BTreeMap::new();
        for (&i, a) in self.coeffs.range(..=order) {
            for (&j, b) in other.coeffs.range(..=order - i) {
                let slot = out.entry(i + j).or_insert_with(T::zero);
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Self::normalized(order, out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = self.truncate(order).coeffs;
        for (&k, c) in other.coeffs.range(..=order) {
            let slot = out.entry(k).or_insert_with(T::zero);
            *slot = slot.clone() + c.clone();
        }
        Self::normalized(order, out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiplicative inverse, solving the triangular system term by term.
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order;
        let a = self.dense(n + 1);
        let inv0 = T::one() / a0;
        let mut b: Vec<T> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for k in 1..=n {
            let mut acc = T::zero();
            for j in self.coeffs.range(1..=k).map(|(&j, _)| j) {
                acc = acc + a[j].clone() * b[k - j].clone();
            }
            b.push(-(acc * inv0.clone()));
        }
        Ok(Self::from_dense(n, b))
    }

    /// `exp(a)` for `a(0) = 0`, via `k b_k = sum_j j a_j b_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::BadConstantTerm("exp requires a zero constant term"));
        }
        let n = self.order;
        let a = self.dense(n + 1);
        let mut b: Vec<T> = Vec::with_capacity(n + 1);
        b.push(T::one());
        for k in 1..=n {
            let mut acc = T::zero();
            for j in self.coeffs.range(1..=k).map(|(&j, _)| j) {
                acc = acc + T::from_int(j as i64) * a[j].clone() * b[k - j].clone();
            }
            b.push(acc / T::from_int(k as i64));
        }
        Ok(Self::from_dense(n, b))
    }

    /// `log(a)` for `a(0) = 1`, via `k b_k = k a_k - sum_{j<k} j b_j a_{k-j}`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::BadConstantTerm("log requires constant term one"));
        }
        let n = self.order;
        let a = self.dense(n + 1);
        let mut b: Vec<T> = vec![T::zero(); n + 1];
        for k in 1..=n {
            let mut acc = T::from_int(k as i64) * a[k].clone();
            for j in 1..k {
                if !a[k - j].is_zero() {
                    acc = acc - T::from_int(j as i64) * b[j].clone() * a[k - j].clone();
                }
            }
            b[k] = acc / T::from_int(k as i64);
        }
        Ok(Self::from_dense(n, b))
    }

    /// Integer power, using the inverse for negative exponents.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        Series::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        Series::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        Series::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series::neg(self)
    }
}

pub fn series_mul<T: Scalar>(a: &Series<T>, b: &Series<T>) -> Series<T> {
    a.mul(b)
}

pub fn series_inv<T: Scalar>(a: &Series<T>) -> Result<Series<T>> {
    a.inv()
}

pub fn series_exp<T: Scalar>(a: &Series<T>) -> Result<Series<T>> {
    a.exp()
}

pub fn series_log<T: Scalar>(a: &Series<T>) -> Result<Series<T>> {
    a.log()
}

/// `sin(t/2) / (t/2)` through `t^order`; the `t^(2k)` coefficient is
/// `(-1)^k / (4^k (2k+1)!)`.
pub fn sin_half_series<T: Scalar>(order: usize) -> Series<T> {
    let mut terms = Vec::new();
    let mut c = T::one();
    let mut k = 0usize;
    while 2 * k <= order {
        terms.push((2 * k, c.clone()));
        k += 1;
        let step = 4 * (2 * k as i64) * (2 * k as i64 + 1);
        c = -c / T::from_int(step);
    }
    Series::from_coeffs(order, terms)
}

/// Bernoulli number `B_n` from `sum_{k=0}^{n} C(n+1,k) B_k = 0`, `B_0 = 1`
/// (so `B_1 = -1/2`).
pub fn bernoulli<T: Scalar>(n: usize) -> T {
    bernoulli_table::<T>(n).pop().expect("table has n+1 entries")
}

/// `B_0 ..= B_n`.
pub fn bernoulli_table<T: Scalar>(n: usize) -> Vec<T> {
    let mut b: Vec<T> = vec![T::one()];
    for m in 1..=n {
        // binom(m+1, k) built incrementally
        let mut binom = T::one();
        let mut acc = T::zero();
        for (k, bk) in b.iter().enumerate() {
            acc = acc + binom.clone() * bk.clone();
            binom = binom * T::from_int((m + 1 - k) as i64) / T::from_int(k as i64 + 1);
        }
        b.push(-acc / T::from_int(m as i64 + 1));
    }
    b
}

pub mod json {
    //! `[[exponent, "p/q"], ...]` encoding of rational series.

    use serde_json::Value;

    use crate::error::{Error, Result};
    use crate::rational;
    use crate::PowerSeries;

    pub fn to_json(s: &PowerSeries) -> Value {
        Value::Array(
            s.terms()
                .map(|(k, c)| Value::Array(vec![Value::from(k), Value::from(rational::format(c))]))
                .collect(),
        )
    }

    /// Inverse of [`to_json`]; the truncation order is not part of the
    /// encoding and must be supplied.
    pub fn from_json(v: &Value, order: usize) -> Result<PowerSeries> {
        let bad = || Error::ParseRational(v.to_string());
        let items = v.as_array().ok_or_else(bad)?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let k = pair[0].as_u64().ok_or_else(bad)? as usize;
            let c = rational::parse(pair[1].as_str().ok_or_else(bad)?)?;
            terms.push((k, c));
        }
        Ok(PowerSeries::from_coeffs(order, terms))
    }
}

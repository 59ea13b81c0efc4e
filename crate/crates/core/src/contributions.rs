//! Contributions `C(g,h)` of degree-one disk covers.
//!
//! Every closed ghost of genus `g_i` contributes a factor `m * alpha_{g_i}`,
//! where `m = mu(N_0, N_0^R) / 2` is the normal Maslov factor of the disk.
//! Summing over closed-only partitions weighted by `1/|Aut|` gives `C(g,1)`;
//! the sum resums to the coefficients of `(sin(t/2) / (t/2))^{-1}`, with
//! `C(g,1)` read off at `t^{2g}` so that the empty partition gives
//! `C(0,1) = 1`. Open ghosts contribute nothing, so `C(g,h) = 0` for `h > 1`.
//!
//! The coefficients `alpha_g` are extracted from
//! `m * alpha_g = -[t^{2g}] log(sin(t/2) / (t/2))`. Products `m * alpha_g`
//! do not depend on `m`.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::moduli::DiskMaslov;
use crate::partitions::{automorphism_order, enumerate_partitions};
use crate::rational::{self, map_as_strings};
use crate::scalar::Scalar;
use crate::series::{sin_half_series, Series};
use crate::Rational;

/// `m = -1`: tangent Maslov index 2 and a Lagrangian of Maslov class zero.
pub fn default_maslov_factor() -> Rational {
    DiskMaslov::STANDARD.half_normal()
}

/// `alpha_1 ..= alpha_max_g` for the Maslov factor `m`.
pub fn alpha_coefficients<T: Scalar>(max_g: usize, m: &T) -> Result<BTreeMap<usize, T>> {
    if m.is_zero() {
        return Err(Error::ZeroMaslovFactor);
    }
    let log = sin_half_series::<T>(2 * max_g).log()?;
    Ok((1..=max_g).map(|g| (g, -log.coeff(2 * g) / m.clone())).collect())
}

fn ghost_factors<T: Scalar>(max_g: usize, m: &T) -> Result<Vec<T>> {
    let alpha = alpha_coefficients(max_g, m)?;
    Ok(std::iter::once(T::zero())
        .chain(alpha.into_values().map(|a| m.clone() * a))
        .collect())
}

/// `C(g,h)`: zero for `h > 1`, otherwise the automorphism-weighted sum over
/// closed-only partitions of `g`.
pub fn contribution<T: Scalar>(g: u32, h: u32, m: &T) -> Result<T> {
    if m.is_zero() {
        return Err(Error::ZeroMaslovFactor);
    }
    if h != 1 {
        return Ok(T::zero());
    }
    let factors = ghost_factors(g as usize, m)?;
    Ok(closed_partition_sum(g, &factors))
}

fn closed_partition_sum<T: Scalar>(g: u32, factors: &[T]) -> T {
    enumerate_partitions(g, 1)
        .iter()
        .filter(|p| p.is_closed_only())
        .map(|p| {
            let product = p
                .closed()
                .iter()
                .fold(T::one(), |acc, &gi| acc * factors[gi as usize].clone());
            product / T::from_u64(automorphism_order(p)).expect("automorphism order embeds")
        })
        .fold(T::zero(), |acc, x| acc + x)
}

/// `C~(g,1)`: sum over ordered compositions `g_1 + ... + g_r = g` of
/// `prod m * alpha_{g_i}`.
pub fn contribution_ordered<T: Scalar>(g: u32, m: &T) -> Result<T> {
    Ok(contribution_ordered_by_length(g, m)?
        .into_iter()
        .fold(T::zero(), |acc, x| acc + x))
}

/// The ordered sum split by the number of parts: entry `r` sums over
/// compositions of `g` with exactly `r` parts.
pub fn contribution_ordered_by_length<T: Scalar>(g: u32, m: &T) -> Result<Vec<T>> {
    if m.is_zero() {
        return Err(Error::ZeroMaslovFactor);
    }
    let g = g as usize;
    let factors = ghost_factors(g, m)?;
    // by_len[n][r]: compositions of n into r parts
    let mut by_len: Vec<Vec<T>> = vec![vec![T::zero(); g + 1]; g + 1];
    by_len[0][0] = T::one();
    for n in 1..=g {
        for r in 1..=n {
            let mut acc = T::zero();
            for last in 1..=n - r + 1 {
                acc = acc + by_len[n - last][r - 1].clone() * factors[last].clone();
            }
            by_len[n][r] = acc;
        }
    }
    Ok(by_len.swap_remove(g))
}

/// `(sin(t/2) / (t/2))^{-1}` through `t^{2 max_g}`.
pub fn gf_series<T: Scalar>(max_g: usize) -> Series<T> {
    sin_half_series::<T>(2 * max_g)
        .inv()
        .expect("sin(t/2)/(t/2) has constant term 1")
}

/// Whether the partition sum and the series inversion agree on every
/// `C(g,1)`, `0 <= g <= max_g`. Meaningful only for exact scalars.
pub fn verify_generating_function<T: Scalar>(max_g: usize, m: &T) -> Result<bool> {
    let series = gf_series::<T>(max_g);
    for g in 0..=max_g {
        if contribution(g as u32, 1, m)? != series.coeff(2 * g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C(1,1) = m * alpha_1`, the single closed torus ghost.
pub fn special_case_11<T: Scalar>(m: &T) -> Result<T> {
    let alpha = alpha_coefficients(1, m)?;
    Ok(m.clone() * alpha[&1].clone())
}

/// `alpha_g` and `C(g,1)` up to a maximum genus, for a fixed `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table<T> {
    pub m: T,
    pub alpha: BTreeMap<usize, T>,
    pub contrib: BTreeMap<usize, T>,
    pub max_genus: usize,
}

impl<T: Scalar> Table<T> {
    pub fn build(max_genus: usize, m: T) -> Result<Self> {
        let alpha = alpha_coefficients(max_genus, &m)?;
        let factors = ghost_factors(max_genus, &m)?;
        let contrib = (0..=max_genus)
            .map(|g| (g, closed_partition_sum(g as u32, &factors)))
            .collect();
        Ok(Table {
            m,
            alpha,
            contrib,
            max_genus,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    #[serde(with = "rational::as_string")]
    m: Rational,
    #[serde(with = "map_as_strings")]
    alpha: BTreeMap<usize, Rational>,
    #[serde(with = "map_as_strings")]
    contrib: BTreeMap<usize, Rational>,
}

impl Serialize for Table<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            m: self.m.clone(),
            alpha: self.alpha.clone(),
            contrib: self.contrib.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Table<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TableRepr::deserialize(d)?;
        let max_genus = r.contrib.keys().next_back().copied().unwrap_or(0);
        let complete = (0..=max_genus).all(|g| r.contrib.contains_key(&g))
            && (1..=max_genus).all(|g| r.alpha.contains_key(&g))
            && r.alpha.len() == max_genus;
        if !complete {
            return Err(serde::de::Error::custom(
                "table must list alpha for 1..=G and contrib for 0..=G",
            ));
        }
        Ok(Table {
            m: r.m,
            alpha: r.alpha,
            contrib: r.contrib,
            max_genus,
        })
    }
}

//! Maslov index of a loop of totally real frames.
//!
//! A loop is a cyclic sequence of `n x n` complex matrices whose columns span
//! a totally real subspace. The Maslov index is the winding number of
//! `det(A)^2` around the origin. Determinants are computed exactly over the
//! Gaussian rationals and the winding is counted exactly by signed crossings
//! of the positive real axis, so no phase is ever approximated.

use num_complex::Complex;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational;
use crate::Rational;

pub type ComplexRational = Complex<Rational>;

#[derive(Clone, Debug, PartialEq)]
pub struct FrameLoop {
    n: usize,
    /// Row-major `n x n` matrices.
    samples: Vec<Vec<ComplexRational>>,
}

impl FrameLoop {
    pub fn new(n: usize, samples: Vec<Vec<ComplexRational>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedLoop("dimension must be positive".into()));
        }
        if samples.is_empty() {
            return Err(Error::MalformedLoop("loop needs at least one sample".into()));
        }
        if let Some(k) = samples.iter().position(|m| m.len() != n * n) {
            return Err(Error::MalformedLoop(format!(
                "sample {k} does not have {} entries",
                n * n
            )));
        }
        Ok(FrameLoop { n, samples })
    }

    /// Sample `frame(theta)` at `theta = 2 pi k / count`. Entries are rounded
    /// to the nearest multiple of `2^-30` and stored exactly.
    pub fn from_fn<F>(n: usize, count: usize, frame: F) -> Result<Self>
    where
        F: Fn(f64) -> Vec<Complex<f64>>,
    {
        let samples = (0..count)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
                frame(theta).into_iter().map(exact_complex).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, samples)
    }

    /// The same frame at every sample.
    pub fn constant(matrix: Vec<ComplexRational>, n: usize, count: usize) -> Result<Self> {
        Self::new(n, vec![matrix; count])
    }

    /// Tangent frame `i e^{i theta}` along the boundary of the unit disk.
    pub fn disk_tangent(count: usize) -> Result<Self> {
        Self::from_fn(1, count, |t| vec![Complex::new(0.0, 1.0) * Complex::from_polar(1.0, t)])
    }

    /// The real line `e^{i theta/2} R` turning once; `det^2 = e^{i theta}`.
    pub fn half_turn(count: usize) -> Result<Self> {
        Self::from_fn(1, count, |t| vec![Complex::from_polar(1.0, t / 2.0)])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Vec<ComplexRational>] {
        &self.samples
    }

    /// Block-diagonal sum, sample by sample. Both loops need the same length.
    pub fn direct_sum(&self, other: &FrameLoop) -> Result<FrameLoop> {
        if self.len() != other.len() {
            return Err(Error::MalformedLoop(format!(
                "direct sum of loops with {} and {} samples",
                self.len(),
                other.len()
            )));
        }
        let n = self.n + other.n;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| {
                let mut m = vec![ComplexRational::zero(); n * n];
                for i in 0..self.n {
                    for j in 0..self.n {
                        m[i * n + j] = a[i * self.n + j].clone();
                    }
                }
                for i in 0..other.n {
                    for j in 0..other.n {
                        m[(self.n + i) * n + self.n + j] = b[i * other.n + j].clone();
                    }
                }
                m
            })
            .collect();
        FrameLoop::new(n, samples)
    }

    pub fn to_json(&self) -> Value {
        let samples: Vec<Value> = self
            .samples
            .iter()
            .map(|m| {
                Value::Array(
                    m.iter()
                        .map(|z| json!([rational::format(&z.re), rational::format(&z.im)]))
                        .collect(),
                )
            })
            .collect();
        json!({ "n": self.n, "samples": samples })
    }

    /// Parse `{"n": int, "samples": [[[re, im], ...], ...]}`. Entries may be
    /// `"p/q"` strings, decimal strings or JSON numbers.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |why: &str| Error::MalformedLoop(why.to_string());
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing integer field \"n\""))? as usize;
        let samples = v
            .get("samples")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field \"samples\""))?;
        let samples = samples
            .iter()
            .map(|m| {
                m.as_array()
                    .ok_or_else(|| bad("sample is not an array"))?
                    .iter()
                    .map(|z| {
                        let pair = z
                            .as_array()
                            .filter(|p| p.len() == 2)
                            .ok_or_else(|| bad("entry is not [re, im]"))?;
                        Ok(Complex::new(json_rational(&pair[0])?, json_rational(&pair[1])?))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, samples)
    }
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(x) => rational::parse(&x.to_string()),
        other => Err(Error::ParseRational(other.to_string())),
    }
}

const SAMPLE_GRID_BITS: i32 = 30;

fn exact_complex(z: Complex<f64>) -> Result<ComplexRational> {
    let scale = 2f64.powi(SAMPLE_GRID_BITS);
    let conv = |x: f64| {
        let snapped = (x * scale).round();
        if !snapped.is_finite() {
            return Err(Error::MalformedLoop(format!("non-finite entry {x}")));
        }
        let num = num_bigint::BigInt::from(snapped as i64);
        Ok(Rational::new(num, num_bigint::BigInt::from(1u64 << SAMPLE_GRID_BITS)))
    };
    Ok(Complex::new(conv(z.re)?, conv(z.im)?))
}

/// Determinant by Gaussian elimination over the Gaussian rationals.
pub fn determinant(n: usize, matrix: &[ComplexRational]) -> ComplexRational {
    let mut a: Vec<ComplexRational> = matrix.to_vec();
    let mut det = ComplexRational::new(Rational::from_integer(1.into()), Rational::zero());
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return ComplexRational::zero();
        };
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col].clone();
        det *= p.clone();
        for r in col + 1..n {
            let f = a[r * n + col].clone() / p.clone();
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let v = a[col * n + j].clone() * f.clone();
                a[r * n + j] -= v;
            }
        }
    }
    det
}

/// Winding number of `theta -> det(A(theta))^2` around zero.
pub fn maslov_index(loop_: &FrameLoop) -> Result<i64> {
    let phases = loop_
        .samples
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let d = determinant(loop_.n, m);
            if d.is_zero() {
                Err(Error::DegenerateFrame(k))
            } else {
                Ok(d.clone() * d)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    winding_number(&phases)
}

/// Exact winding of the closed polygon through `points` around the origin.
///
/// Consecutive points must differ in argument by strictly less than `pi`;
/// a step through the opposite ray is reported as undersampled.
pub fn winding_number(points: &[ComplexRational]) -> Result<i64> {
    let s = points.len();
    let mut winding = 0i64;
    for k in 0..s {
        let a = &points[k];
        let b = &points[(k + 1) % s];
        // b * conj(a) on the negative real axis <=> a jump of exactly pi
        let w = b.clone() * a.conj();
        if w.im.is_zero() && w.re.is_negative() {
            return Err(Error::UndersampledLoop(k, (k + 1) % s));
        }
        let cross = &a.re * &b.im - &a.im * &b.re;
        let up = !a.im.is_positive() && b.im.is_positive();
        let down = a.im.is_positive() && !b.im.is_positive();
        if up && cross.is_positive() {
            winding += 1;
        } else if down && cross.is_negative() {
            winding -= 1;
        }
    }
    Ok(winding)
}

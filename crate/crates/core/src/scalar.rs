use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient field for series and contribution arithmetic.
///
/// Anything with field operations and a way to embed small integers
/// qualifies: [`crate::Rational`] for exact work, `f64`/`f32` for quick
/// numerical checks. Equality is only meaningful for exact types.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer must embed in scalar")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Scalar for T where T: Num + Clone + Debug + Neg<Output = T> + FromPrimitive {}

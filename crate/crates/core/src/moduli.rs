//! Topological types of (possibly bordered) domains and the dimension and
//! index arithmetic attached to them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus, boundary components and marked points of a domain.
///
/// `boundary == 0` is a closed type; otherwise `boundary_marks` has one
/// entry per boundary component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TopologicalType {
    pub genus: u32,
    pub boundary: u32,
    pub interior_marks: u32,
    pub boundary_marks: Vec<u32>,
}

impl TopologicalType {
    pub fn closed(genus: u32, marks: u32) -> Self {
        TopologicalType {
            genus,
            boundary: 0,
            interior_marks: marks,
            boundary_marks: Vec::new(),
        }
    }

    /// Open type with `boundary_marks.len()` boundary components.
    pub fn open(genus: u32, interior_marks: u32, boundary_marks: Vec<u32>) -> Self {
        TopologicalType {
            genus,
            boundary: boundary_marks.len() as u32,
            interior_marks,
            boundary_marks,
        }
    }

    /// Open type `(g,h)` with all `m` boundary marks on the first component.
    pub fn open_with(genus: u32, boundary: u32, interior_marks: u32, m: u32) -> Self {
        assert!(boundary >= 1, "open type needs a boundary component");
        let mut marks = vec![0; boundary as usize];
        marks[0] = m;
        Self::open(genus, interior_marks, marks)
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == 0
    }

    pub fn total_boundary_marks(&self) -> u32 {
        self.boundary_marks.iter().sum()
    }

    /// Complex dimension for closed types, real dimension for open ones,
    /// before any stability check.
    fn raw_dim(&self) -> i64 {
        let n = self.interior_marks as i64;
        if self.is_closed() {
            3 * self.genus as i64 - 3 + n
        } else {
            let doubled = 2 * self.genus as i64 + self.boundary as i64 - 1;
            3 * doubled - 3 + 2 * n + self.total_boundary_marks() as i64
        }
    }

    pub fn is_stable(&self) -> bool {
        self.is_well_formed() && self.raw_dim() >= 0
    }

    fn is_well_formed(&self) -> bool {
        self.boundary_marks.len() == self.boundary as usize
    }
}

impl fmt::Display for TopologicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_closed() {
            write!(f, "({}, n={})", self.genus, self.interior_marks)
        } else {
            write!(
                f,
                "(({},{}), n={}, m={:?})",
                self.genus, self.boundary, self.interior_marks, self.boundary_marks
            )
        }
    }
}

/// Real dimension of the moduli space of domains of type `t`:
/// `3(2g+h-1) - 3 + 2n + sum m` for open types, `2(3g-3+n)` for closed ones.
pub fn moduli_dim(t: &TopologicalType) -> Result<u32> {
    if !t.is_stable() {
        return Err(Error::UnstableType(t.to_string()));
    }
    let d = t.raw_dim();
    Ok(if t.is_closed() { 2 * d } else { d } as u32)
}

/// Genus `2g+h-1` of the complex double of an open type.
pub fn double_genus(t: &TopologicalType) -> Result<u32> {
    if t.is_closed() {
        return Err(Error::ClosedType);
    }
    Ok(2 * t.genus + t.boundary - 1)
}

/// Same as [`double_genus`] for a bare `(g,h)` pair, `h >= 1`.
pub fn doubled(genus: u32, boundary: u32) -> u32 {
    debug_assert!(boundary >= 1);
    2 * genus + boundary - 1
}

/// Index of a real Cauchy-Riemann operator on a bundle pair of the given
/// rank over a surface of the given Euler characteristic.
pub fn riemann_roch_index(rank: u32, euler_char: i64, maslov: i64) -> i64 {
    rank as i64 * euler_char + maslov
}

/// Maslov data of the embedded disk split into tangent and normal parts.
///
/// The two signed quantities are kept side by side; nothing here fixes an
/// orientation convention beyond `tangent + normal = total`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiskMaslov {
    /// `mu(T Sigma_0, T dSigma_0)`.
    pub tangent: i64,
    /// `mu(u_0^* TM, u_0^* TL)`.
    pub total: i64,
}

impl DiskMaslov {
    /// Tangent index 2 of the disk boundary, Maslov class zero for `L`.
    pub const STANDARD: DiskMaslov = DiskMaslov { tangent: 2, total: 0 };

    /// `mu(N_0, N_0^R) = total - tangent`.
    pub fn normal(&self) -> i64 {
        self.total - self.tangent
    }

    /// `mu(N_0, N_0^R) / 2`, the per-ghost factor `m`.
    pub fn half_normal(&self) -> crate::Rational {
        crate::Rational::new(self.normal().into(), 2.into())
    }

    /// `mu(T Sigma_0, T dSigma_0) / 2`.
    pub fn half_tangent(&self) -> crate::Rational {
        crate::Rational::new(self.tangent.into(), 2.into())
    }

    /// Indices of the tangent, normal and full linearizations at the disk,
    /// whose Euler characteristic is 1 (ranks 1, 2, 3).
    pub fn linearization_indices(&self) -> (i64, i64, i64) {
        (
            riemann_roch_index(1, 1, self.tangent),
            riemann_roch_index(2, 1, self.normal()),
            riemann_roch_index(3, 1, self.total),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_examples() {
        assert_eq!(moduli_dim(&TopologicalType::closed(1, 1)), Ok(2));
        assert_eq!(moduli_dim(&TopologicalType::open(1, 0, vec![1])), Ok(4));
        assert_eq!(moduli_dim(&TopologicalType::open(0, 0, vec![3])), Ok(0));
        assert_eq!(moduli_dim(&TopologicalType::closed(0, 3)), Ok(0));
        assert_eq!(moduli_dim(&TopologicalType::open(0, 1, vec![1])), Ok(0));
        assert_eq!(moduli_dim(&TopologicalType::closed(2, 1)), Ok(8));
    }

    #[test]
    fn unstable_types_are_errors() {
        for t in [
            TopologicalType::closed(0, 2),
            TopologicalType::open(0, 0, vec![2]),
            TopologicalType::open(0, 0, vec![1]),
            TopologicalType::open(0, 1, vec![0]),
        ] {
            assert!(matches!(moduli_dim(&t), Err(Error::UnstableType(_))), "{t}");
        }
    }

    #[test]
    fn double_genus_examples() {
        assert_eq!(double_genus(&TopologicalType::open_with(1, 1, 0, 0)), Ok(2));
        assert_eq!(double_genus(&TopologicalType::open_with(4, 1, 0, 0)), Ok(8));
        assert_eq!(double_genus(&TopologicalType::open_with(0, 1, 0, 0)), Ok(0));
        assert_eq!(double_genus(&TopologicalType::closed(3, 0)), Err(Error::ClosedType));
    }

    #[test]
    fn open_dimension_equals_doubled_closed_dimension() {
        for g in 0..5 {
            for h in 1..5 {
                for n in 0..3 {
                    for m in 0..4 {
                        let t = TopologicalType::open_with(g, h, n, m);
                        let doubled = TopologicalType::closed(double_genus(&t).unwrap(), 2 * n + m);
                        match (moduli_dim(&t), moduli_dim(&doubled)) {
                            (Ok(a), Ok(b)) => assert_eq!(2 * a, b, "{t}"),
                            (a, b) => assert_eq!(a.is_ok(), b.is_ok(), "{t}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(riemann_roch_index(1, 1, 2), 3);
        assert_eq!(riemann_roch_index(2, 1, -2), 0);
        assert_eq!(riemann_roch_index(3, 1, 0), 3);
    }

    #[test]
    fn standard_disk_maslov() {
        let d = DiskMaslov::STANDARD;
        assert_eq!(d.normal(), -2);
        assert_eq!(d.linearization_indices(), (3, 0, 3));
        assert_eq!(d.half_normal(), crate::Rational::from_integer((-1).into()));
        assert_eq!(d.half_tangent(), crate::Rational::from_integer(1.into()));
    }
}

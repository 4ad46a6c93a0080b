use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Determinants below this magnitude are treated as singular.
pub const SINGULARITY_FLOOR: f64 = 1e-300;

/// Dense complex 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl ComplexMatrix2 {
    pub const IDENTITY: ComplexMatrix2 = ComplexMatrix2 {
        m11: Complex64::new(1.0, 0.0),
        m12: Complex64::new(0.0, 0.0),
        m21: Complex64::new(0.0, 0.0),
        m22: Complex64::new(1.0, 0.0),
    };

    pub fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        ComplexMatrix2 { m11, m12, m21, m22 }
    }

    pub fn from_real(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Self::new(m11.into(), m12.into(), m21.into(), m22.into())
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> Complex64 {
        self.m11 + self.m22
    }

    pub fn is_finite(&self) -> bool {
        [self.m11, self.m12, self.m21, self.m22].iter().all(|z| z.is_finite())
    }

    /// Largest entry-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix2) -> f64 {
        [
            self.m11 - other.m11,
            self.m12 - other.m12,
            self.m21 - other.m21,
            self.m22 - other.m22,
        ]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
    }

    pub fn inverse(&self) -> Result<ComplexMatrix2> {
        invert_2x2(self)
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn mul(self, b: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2 {
            m11: self.m11 * b.m11 + self.m12 * b.m21,
            m12: self.m11 * b.m12 + self.m12 * b.m22,
            m21: self.m21 * b.m11 + self.m22 * b.m21,
            m22: self.m21 * b.m12 + self.m22 * b.m22,
        }
    }
}

/// Closed-form inverse via the adjugate.
pub fn invert_2x2(m: &ComplexMatrix2) -> Result<ComplexMatrix2> {
    let det = m.det();
    if !(det.norm() >= SINGULARITY_FLOOR) {
        return Err(Error::SingularMatrix(det.norm()));
    }
    let inv = det.inv();
    Ok(ComplexMatrix2 {
        m11: m.m22 * inv,
        m12: -m.m12 * inv,
        m21: -m.m21 * inv,
        m22: m.m11 * inv,
    })
}

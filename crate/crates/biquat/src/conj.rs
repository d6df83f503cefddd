//! The three conjugations and what they extract.
//!
//! A biquaternion has two independent unary symmetries: negating the vector
//! part (`conj`) and conjugating the complex coefficients (`complex_conj`).
//! Composing them gives `total_conj`. Signed sums of `q` under these maps
//! isolate the four geometric parts, and sandwiching with `i, j, k` isolates
//! the Cartesian components using multiplication and addition alone.

use crate::biquaternion::{BasisElement, Biquaternion};
use crate::complex::Complex;

impl Biquaternion {
    /// Negates the vector part: `W - Xi - Yj - Zk`.
    ///
    /// Anti-homomorphism: `(pq).conj() = q.conj() * p.conj()`. Acts on the
    /// real and imaginary quaternions independently.
    pub fn conj(self) -> Biquaternion {
        Biquaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// Conjugates each complex coefficient: `q_r - I q_i`.
    ///
    /// Preserves products in order: `(pq).complex_conj() = p.complex_conj()
    /// * q.complex_conj()`. This touches only the coefficients, never the
    /// basis directions; some authors fold vector negation into their one
    /// "biquaternion conjugate", which here is the separate
    /// [`Biquaternion::total_conj`].
    pub fn complex_conj(self) -> Biquaternion {
        Biquaternion {
            w: self.w.conj(),
            x: self.x.conj(),
            y: self.y.conj(),
            z: self.z.conj(),
        }
    }

    /// Both conjugations at once; they commute, so the order is irrelevant.
    pub fn total_conj(self) -> Biquaternion {
        self.complex_conj().conj()
    }
}

/// `-1/2 (q + iqi + jqj + kqk)`, which equals [`Biquaternion::conj`] exactly:
/// the sandwich products only permute and flip components, and the grouped
/// sums cancel same-magnitude floats, so no rounding occurs.
pub fn conjugate_via_involutions(q: Biquaternion) -> Biquaternion {
    let i = BasisElement::BivI.biquaternion();
    let j = BasisElement::BivJ.biquaternion();
    let k = BasisElement::BivK.biquaternion();
    // (q + iqi) + (jqj + kqk), then scale; each group cancels exactly
    ((q + i * q * i) + (j * q * j + k * q * k)) * -0.5
}

/// The four Cartesian components recovered by sandwich sums:
/// `W = 1/4 (q - iqi - jqj - kqk)`, `X = 1/(4i) (q - iqi + jqj + kqk)`, and
/// the `j`, `k` analogues. Exact for the same reason as
/// [`conjugate_via_involutions`].
pub fn components_via_involutions(q: Biquaternion) -> (Complex, Complex, Complex, Complex) {
    let i = BasisElement::BivI.biquaternion();
    let j = BasisElement::BivJ.biquaternion();
    let k = BasisElement::BivK.biquaternion();
    let iqi = i * q * i;
    let jqj = j * q * j;
    let kqk = k * q * k;
    // groupings pair terms whose components cancel or double exactly
    let tw = ((q - iqi) - (jqj + kqk)) * 0.25;
    let tx = ((q - iqi) + (jqj + kqk)) * 0.25;
    let ty = ((q + iqi) + (kqk - jqj)) * 0.25;
    let tz = ((q + iqi) + (jqj - kqk)) * 0.25;
    // tw = W·1, tx = X·i, …; divide out the basis factor on the left
    let w = tw.scalar_part();
    let x = (-i * tx).scalar_part();
    let y = (-j * ty).scalar_part();
    let z = (-k * tz).scalar_part();
    (w, x, y, z)
}

/// The real scalar `w_r` by an eight-term sandwich sum:
/// `1/8 (q + q* - iqi - iq*i - jqj - jq*j - kqk - kq*k)` where `q*` is the
/// complex conjugate. Exact.
pub fn real_scalar_via_involutions(q: Biquaternion) -> f64 {
    let i = BasisElement::BivI.biquaternion();
    let j = BasisElement::BivJ.biquaternion();
    let k = BasisElement::BivK.biquaternion();
    let isolate = |q: Biquaternion| ((q - i * q * i) - (j * q * j + k * q * k)) * 0.25;
    let t = (isolate(q) + isolate(q.complex_conj())) * 0.5;
    t.w.re
}

/// A biquaternion split along the grade axes: real scalar, real vector
/// coefficients (`i, j, k` with real weights), imaginary vector coefficients,
/// imaginary scalar. The parts sum to the original exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricParts {
    /// `w_r`, on the basis direction `1`.
    pub scalar: Biquaternion,
    /// `x_r i + y_r j + z_r k`.
    pub bivector: Biquaternion,
    /// `I (x_i i + y_i j + z_i k)`.
    pub vector: Biquaternion,
    /// `w_i I`.
    pub pseudoscalar: Biquaternion,
}

impl GeometricParts {
    pub fn sum(&self) -> Biquaternion {
        (self.scalar + self.bivector) + (self.vector + self.pseudoscalar)
    }
}

/// Grade projection by quarter-sums of the conjugates:
///
/// ```text
/// scalar       = 1/4 (q + q̄ + q* + q̄*)
/// bivector     = 1/4 (q - q̄ + q* - q̄*)
/// vector       = 1/4 (q - q̄ - q* + q̄*)
/// pseudoscalar = 1/4 (q + q̄ - q* - q̄*)
/// ```
///
/// Each is exact: the grouped sums double or cancel equal floats.
pub fn geometric_parts_via_conjugates(q: Biquaternion) -> GeometricParts {
    let qc = q.conj();
    let cc = q.complex_conj();
    let tc = q.total_conj();
    GeometricParts {
        scalar: ((q + qc) + (cc + tc)) * 0.25,
        bivector: ((q - qc) + (cc - tc)) * 0.25,
        vector: ((q - qc) - (cc - tc)) * 0.25,
        pseudoscalar: ((q + qc) - (cc + tc)) * 0.25,
    }
}

//! Alternative representations and the two polar decompositions.
//!
//! A biquaternion can be regrouped without loss as complex-scalar-plus-axis
//! (`A + ξB`), real-plus-imaginary quaternions (`q_r + I q_i`), a
//! Cayley-Dickson pair, or a per-part scalar/axis split. On top of those sit
//! two genuinely different polar forms: the Hamilton form `R e^{ξΘ}` with a
//! complex angle around a pure axis, and the complex form `Q e^{IΨ}` with a
//! quaternion angle around the commuting unit `I`. Both fail exactly on
//! divisors of zero, which have no modulus to factor out.

use crate::biquaternion::{BasisElement, Biquaternion};
use crate::complex::Complex;
use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

/// Cosine and sine of a complex angle, as a pair.
pub fn complex_trig(z: Complex) -> (Complex, Complex) {
    (z.cos(), z.sin())
}

/// `A + ξB`: complex scalar, complex length, and a unit pure axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexFormI {
    /// The scalar coefficient `W`.
    pub a: Complex,
    /// Principal square root of `X² + Y² + Z²`.
    pub b: Complex,
    /// `vector(q) / B`, a root of -1; the conventional `i` when the vector
    /// part is zero.
    pub xi: Biquaternion,
    pub axis_defaulted: bool,
}

impl ComplexFormI {
    pub fn reconstruct(&self) -> Biquaternion {
        Biquaternion::from_complex(self.a) + self.xi.scale(self.b)
    }
}

/// `q_r + I q_i`: the biquaternion as two real quaternions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexFormII {
    pub qr: Quaternion,
    pub qi: Quaternion,
}

impl ComplexFormII {
    pub fn reconstruct(&self) -> Biquaternion {
        Biquaternion::from_parts(self.qr, self.qi)
    }
}

/// `(w + x i) + (y + z i) j`: two complex-coefficient pairs, the second
/// attached by a right factor of `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CayleyDicksonForm {
    /// Coefficients `(w, x)` of `w + x i`.
    pub c1: (Complex, Complex),
    /// Coefficients `(y, z)` of `y + z i`.
    pub c2: (Complex, Complex),
}

impl CayleyDicksonForm {
    /// Multiplies the grouping back out; `(y + z i) j = y j + z k`, so this
    /// is exact.
    pub fn reconstruct(&self) -> Biquaternion {
        let head = Biquaternion::new(self.c1.0, self.c1.1, Complex::ZERO, Complex::ZERO);
        let tail = Biquaternion::new(self.c2.0, self.c2.1, Complex::ZERO, Complex::ZERO);
        head + tail * BasisElement::BivJ.biquaternion()
    }
}

/// `(α + μβ) + I(γ + νδ)`: each of the real and imaginary quaternions split
/// into scalar plus length-times-axis, with nonnegative lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticForm {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    /// Unit pure axis of the real part, `i` by convention when `β = 0`.
    pub mu: Quaternion,
    /// Unit pure axis of the imaginary part, `i` by convention when `δ = 0`.
    pub nu: Quaternion,
    pub mu_defaulted: bool,
    pub nu_defaulted: bool,
}

impl SymplecticForm {
    pub fn reconstruct(&self) -> Biquaternion {
        Biquaternion::from_parts(
            Quaternion::scalar(self.alpha) + self.mu * self.beta,
            Quaternion::scalar(self.gamma) + self.nu * self.delta,
        )
    }
}

/// `q = R e^{ξΘ} = R (cos Θ + ξ sin Θ)`: complex modulus and complex angle
/// around a pure-axis root of -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonPolar {
    /// `R`, the principal complex modulus.
    pub modulus: Complex,
    /// `ξ`, a root of -1 (sign-flipped if needed to keep `Re Θ ∈ [0, π]`).
    pub axis: Biquaternion,
    /// `Θ`, the complex angle.
    pub angle: Complex,
    /// `r = |R|`, shared by both polar forms.
    pub radius: f64,
    /// `φ = arg R`, so `R = r e^{Iφ}`.
    pub phase: f64,
    pub axis_defaulted: bool,
}

impl HamiltonPolar {
    pub fn reconstruct(&self) -> Biquaternion {
        let (c, s) = complex_trig(self.angle);
        (Biquaternion::from_complex(c) + self.axis.scale(s)).scale(self.modulus)
    }
}

/// `q = Q e^{IΨ} = Q (cos Ψ + I sin Ψ)`: real quaternion modulus and
/// quaternion angle around the commuting unit `I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPolar {
    /// `Q`, real within tolerance by construction.
    pub modulus: Quaternion,
    /// `Ψ`, the quaternion angle.
    pub angle: Quaternion,
    /// `r = |Q|`, shared by both polar forms.
    pub radius: f64,
    /// Angle of the real polar form of `Q`, in `[0, π]`.
    pub theta: f64,
    /// Unit pure axis of `Q`, `i` by convention when `Q` is a real scalar.
    pub axis: Quaternion,
    pub axis_defaulted: bool,
}

impl ComplexPolar {
    pub fn reconstruct(&self) -> Biquaternion {
        Biquaternion::from_quaternion(self.modulus)
            * Biquaternion::from_parts(self.angle.cos(), self.angle.sin())
    }
}

/// Exponential by scalar/vector split: for `q = W + V` with
/// `B = √(X² + Y² + Z²)`,
///
/// ```text
/// exp(q) = e^W (cos B + (V/B) sin B)   when B ≠ 0
///        = e^W (1 + V)                 when B = 0, V ≠ 0 (V nilpotent)
///        = e^W                         when V = 0
/// ```
///
/// The nilpotent branch is the series collapsing after the linear term.
pub fn exp(q: Biquaternion, tol: Tolerance) -> Result<Biquaternion, Error> {
    let v = q.vector_part();
    let ew = q.w.exp();
    let result = if v.is_zero(tol) {
        Biquaternion::from_complex(ew)
    } else {
        let b = (q.x * q.x + q.y * q.y + q.z * q.z).sqrt();
        if tol.is_zero_scaled(b.abs(), v.euclid_norm()) {
            (Biquaternion::ONE + v).scale(ew)
        } else {
            (Biquaternion::from_complex(b.cos()) + v.scale(b.recip() * b.sin())).scale(ew)
        }
    };
    if result.is_finite() {
        Ok(result)
    } else {
        Err(Error::Overflow)
    }
}

/// Splits off the complex scalar and a unit pure axis: `q = A + ξB`.
///
/// Nilpotent vector parts have `B = 0` with `V ≠ 0`, so no axis exists and
/// the conversion fails.
pub fn to_complex_form_i(q: Biquaternion, tol: Tolerance) -> Result<ComplexFormI, Error> {
    let v = q.vector_part();
    if v.is_zero(tol) {
        return Ok(ComplexFormI {
            a: q.w,
            b: Complex::ZERO,
            xi: BasisElement::BivI.biquaternion(),
            axis_defaulted: true,
        });
    }
    let b = (q.x * q.x + q.y * q.y + q.z * q.z).sqrt();
    if tol.is_zero_scaled(b.abs(), v.euclid_norm()) {
        return Err(Error::NilpotentVectorPart);
    }
    Ok(ComplexFormI { a: q.w, b, xi: v.scale(b.recip()), axis_defaulted: false })
}

/// Splits into real and imaginary quaternions. Exact.
pub fn to_complex_form_ii(q: Biquaternion) -> ComplexFormII {
    ComplexFormII { qr: q.real_part(), qi: q.imag_part() }
}

/// Regroups the four complex coefficients into the Cayley-Dickson pairs.
/// Exact.
pub fn to_cayley_dickson(q: Biquaternion) -> CayleyDicksonForm {
    CayleyDicksonForm { c1: (q.w, q.x), c2: (q.y, q.z) }
}

fn scalar_axis_split(p: Quaternion, tol: Tolerance) -> (f64, f64, Quaternion, bool) {
    let len = p.vector_norm();
    if tol.is_zero_scaled(len, p.modulus()) {
        (p.w, 0.0, Quaternion::I, true)
    } else {
        (p.w, len, p.vector() * (1.0 / len), false)
    }
}

/// Splits each of `q_r, q_i` into scalar plus axis-times-length:
/// `q = (α + μβ) + I(γ + νδ)` with `β, δ ≥ 0` and unit pure axes.
pub fn to_symplectic(q: Biquaternion, tol: Tolerance) -> SymplecticForm {
    let (alpha, beta, mu, mu_defaulted) = scalar_axis_split(q.real_part(), tol);
    let (gamma, delta, nu, nu_defaulted) = scalar_axis_split(q.imag_part(), tol);
    SymplecticForm { alpha, beta, gamma, delta, mu, nu, mu_defaulted, nu_defaulted }
}

/// Hamilton polar form `q = R e^{ξΘ}`.
///
/// `R` is the principal square root of `A² + B²` (the semi-norm), `Θ` comes
/// from the principal complex logarithm of `(A + IB)/R`, and `ξ` flips sign
/// if needed so that `Re Θ ∈ [0, π]`.
pub fn hamilton_polar(q: Biquaternion, tol: Tolerance) -> Result<HamiltonPolar, Error> {
    let form = to_complex_form_i(q, tol)?;
    let modulus = (form.a * form.a + form.b * form.b).sqrt();
    if tol.is_zero_scaled(modulus.abs(), q.euclid_norm()) {
        return Err(Error::DivisorOfZero);
    }
    // (A + IB)/R lies on the complex unit circle; its log is purely an angle
    let w = (form.a + Complex::I * form.b) * modulus.recip();
    let mut angle = -(Complex::I * w.ln());
    let mut axis = form.xi;
    if angle.re < 0.0 {
        angle = -angle;
        axis = -axis;
    }
    Ok(HamiltonPolar {
        modulus,
        axis,
        angle,
        radius: modulus.abs(),
        phase: modulus.arg(),
        axis_defaulted: form.axis_defaulted,
    })
}

/// Complex polar form `q = Q e^{IΨ}`, with the real part divided on the left:
/// `Ψ = arctan(q_r⁻¹ q_i)` and `Q = q e^{-IΨ}`.
///
/// Divisors of zero are exactly the inputs where `q_r⁻¹ q_i` is a unit pure
/// quaternion, the singularity of the arctangent; they are rejected up front.
pub fn complex_polar(q: Biquaternion, tol: Tolerance) -> Result<ComplexPolar, Error> {
    if q.is_zero(tol) || tol.is_zero_scaled(q.semi_norm().abs(), q.euclid_norm_sq()) {
        return Err(Error::DivisorOfZero);
    }
    let qr = q.real_part();
    let qi = q.imag_part();
    let angle = if tol.is_zero_scaled(qr.modulus(), q.euclid_norm()) {
        Quaternion::scalar(std::f64::consts::FRAC_PI_2)
    } else {
        let t = qr.inverse(tol)? * qi;
        t.atan(tol).map_err(|e| match e {
            Error::ArctanSingularity => Error::DivisorOfZero,
            other => other,
        })?
    };
    // Q = q e^{-IΨ} = q (cos Ψ - I sin Ψ)
    let q_bi = q * Biquaternion::from_parts(angle.cos(), -angle.sin());
    let modulus = q_bi.real_part();
    let (radius, theta, axis) = modulus.polar();
    let (axis, axis_defaulted) = match axis {
        Some(a) => (a, false),
        None => (Quaternion::I, true),
    };
    Ok(ComplexPolar { modulus, angle, radius, theta, axis, axis_defaulted })
}

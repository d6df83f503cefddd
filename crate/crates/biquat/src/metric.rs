//! Inner product, norms, and the orthogonality taxonomy.
//!
//! The bilinear inner product `⟨p,q⟩ = ½(p̄q + q̄p)` is complex-valued, and
//! `⟨q,q⟩` gives the semi-norm `W² + X² + Y² + Z²`. The semi-norm can vanish
//! on nonzero elements (divisors of zero), so it is not a true norm; taking
//! the absolute value of its principal square root gives the unique
//! multiplicative real norm.
//!
//! Splitting `p = p_r + I p_i` turns the complex inner product into four real
//! 4-space dot products, and which of those vanish grades "orthogonal" into
//! strictly stronger and weaker senses.

use crate::biquaternion::{BasisElement, Biquaternion};
use crate::complex::Complex;
use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

impl Biquaternion {
    /// `W² + X² + Y² + Z²`, equal to the scalar of `q q̄`.
    ///
    /// Complex-valued, and zero exactly when the real and imaginary parts
    /// have equal 4-space norms and are perpendicular:
    /// `Re = ‖q_r‖ - ‖q_i‖`, `Im = 2⟨q_r, q_i⟩`.
    pub fn semi_norm(self) -> Complex {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Principal square root of the semi-norm, in the closed right
    /// half-plane.
    pub fn modulus(self) -> Complex {
        self.semi_norm().sqrt()
    }

    /// `|modulus(q)|`: the unique real multiplicative norm. Zero on divisors
    /// of zero, so only a semi-metric on the full algebra.
    pub fn real_norm(self) -> f64 {
        self.modulus().abs()
    }
}

/// The four real dot products hiding inside `⟨p,q⟩`, plus their exact
/// reassembly `total = (rr - ii) + I(ri + ir)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerProductBreakdown {
    /// `⟨p_r, q_r⟩` in real 4-space.
    pub rr: f64,
    /// `⟨p_i, q_i⟩`.
    pub ii: f64,
    /// `⟨p_r, q_i⟩`.
    pub ri: f64,
    /// `⟨p_i, q_r⟩`.
    pub ir: f64,
    /// `(rr - ii) + I(ri + ir)`, built from the fields bit for bit.
    pub total: Complex,
}

/// Splits `⟨p,q⟩` into its four real 4-space dot products.
pub fn inner_breakdown(p: Biquaternion, q: Biquaternion) -> InnerProductBreakdown {
    let rr = p.real_part().dot(q.real_part());
    let ii = p.imag_part().dot(q.imag_part());
    let ri = p.real_part().dot(q.imag_part());
    let ir = p.imag_part().dot(q.real_part());
    InnerProductBreakdown { rr, ii, ri, ir, total: Complex::new(rr - ii, ri + ir) }
}

/// `⟨p,q⟩ = ½(p̄q + q̄p)`: symmetric, additive, homogeneous over the complex
/// scalars, and equal to the sum of the elementwise coefficient products
/// `W_p W_q + X_p X_q + Y_p Y_q + Z_p Z_q`.
pub fn inner_product(p: Biquaternion, q: Biquaternion) -> Complex {
    inner_breakdown(p, q).total
}

/// For pure `u, v` the inner product collapses to `-½(uv + vu)`.
///
/// Fails with `NotPure` when a scalar part is nonzero under `tol`.
pub fn inner_product_pure(
    u: Biquaternion,
    v: Biquaternion,
    tol: Tolerance,
) -> Result<Complex, Error> {
    if !u.is_pure(tol) || !v.is_pure(tol) {
        return Err(Error::NotPure);
    }
    Ok(((u * v + v * u) * -0.5).scalar_part())
}

/// How strongly two biquaternions are orthogonal, judged by which of the four
/// real dot products in the breakdown vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrthogonalityClass {
    /// All four dots vanish.
    Strongest,
    /// `rr = ii = 0` and `ri = -ir ≠ 0`.
    WeakerI,
    /// `ri = ir = 0` and `rr = ii ≠ 0`.
    WeakerII,
    /// No single dot vanishes; the total cancels pairwise.
    Weakest,
    /// `⟨p,q⟩ ≠ 0`.
    NotOrthogonal,
}

impl OrthogonalityClass {
    pub fn is_orthogonal(self) -> bool {
        self != OrthogonalityClass::NotOrthogonal
    }

    pub fn name(self) -> &'static str {
        match self {
            OrthogonalityClass::Strongest => "strongest",
            OrthogonalityClass::WeakerI => "weaker-i",
            OrthogonalityClass::WeakerII => "weaker-ii",
            OrthogonalityClass::Weakest => "weakest",
            OrthogonalityClass::NotOrthogonal => "not-orthogonal",
        }
    }
}

/// Classifies the orthogonality of `p` and `q` and returns the evidence.
///
/// Zero tests are scaled by the product of the Euclidean 8-space lengths, not
/// the real norms, because the real norm vanishes on divisors of zero and
/// those appear as legitimate companions here.
pub fn classify_orthogonality(
    p: Biquaternion,
    q: Biquaternion,
    tol: Tolerance,
) -> (OrthogonalityClass, InnerProductBreakdown) {
    let b = inner_breakdown(p, q);
    let scale = p.euclid_norm() * q.euclid_norm();
    let z = |t: f64| tol.is_zero_scaled(t, scale);
    let class = if z(b.rr) && z(b.ii) && z(b.ri) && z(b.ir) {
        OrthogonalityClass::Strongest
    } else if z(b.rr) && z(b.ii) && z(b.ri + b.ir) {
        OrthogonalityClass::WeakerI
    } else if z(b.ri) && z(b.ir) && z(b.rr - b.ii) {
        OrthogonalityClass::WeakerII
    } else if z(b.rr - b.ii) && z(b.ri + b.ir) {
        OrthogonalityClass::Weakest
    } else {
        OrthogonalityClass::NotOrthogonal
    };
    (class, b)
}

/// Which orthogonal-companion construction to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompanionRecipe {
    /// Needs `p = p₁ + I p₁ i` with `p₁` a real quaternion; companion is
    /// `p₁ j + I p₁ k`.
    Strongest,
    /// Companion `p i`.
    WeakerI,
    /// Companion `p (Ii)`.
    WeakerII,
    /// Companion `p (i + Ij)`, always a divisor of zero.
    Weakest,
}

/// Builds a `q` orthogonal to `p` in the requested sense.
///
/// The product recipes give `⟨p,q⟩ = 0` for every nonzero `p` because
/// `p̄ p = ‖p‖` is central and the pure factor anticommutes with its own
/// conjugate. Degenerate inputs (for instance a real `p` for `WeakerI`) still
/// yield an orthogonal companion but can land in a stronger class than asked.
pub fn orthogonal_companion(
    p: Biquaternion,
    recipe: CompanionRecipe,
    tol: Tolerance,
) -> Result<Biquaternion, Error> {
    if p.is_zero(tol) {
        return Err(Error::DegenerateInput("companion construction needs a nonzero input"));
    }
    match recipe {
        CompanionRecipe::WeakerI => Ok(p * BasisElement::BivI.biquaternion()),
        CompanionRecipe::WeakerII => Ok(p * BasisElement::VecI.biquaternion()),
        CompanionRecipe::Weakest => {
            Ok(p * (BasisElement::BivI.biquaternion() + BasisElement::VecJ.biquaternion()))
        }
        CompanionRecipe::Strongest => {
            let p1 = p.real_part();
            let want = p1 * Quaternion::I;
            let err = (p.imag_part() - want).modulus();
            if !tol.is_zero_scaled(err, p.euclid_norm()) {
                return Err(Error::DegenerateInput(
                    "the strongest companion needs p = p1 + I(p1 i) with p1 a real quaternion",
                ));
            }
            Ok(Biquaternion::from_parts(p1 * Quaternion::J, p1 * Quaternion::K))
        }
    }
}

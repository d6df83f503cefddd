//! Complex scalars. The imaginary unit is written `I` throughout the crate;
//! it commutes with the quaternion units `i`, `j`, `k`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::tolerance::Tolerance;

/// A complex number `re + im·I`.
///
/// Non-finite components are representable and propagate IEEE-style; the
/// operations that can overflow (`exp`, expression evaluation) check
/// `is_finite` at their boundaries and report instead of panicking.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(self) -> Self {
        Complex { re: self.re, im: -self.im }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn abs_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Argument in `(-π, π]`.
    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn recip(self) -> Self {
        Complex::ONE / self
    }

    /// Principal square root: the branch with `Re ≥ 0`, ties on the imaginary
    /// axis resolved to `Im ≥ 0`. So `sqrt(-1) = I`, never `-I`.
    pub fn sqrt(self) -> Self {
        if self.im == 0.0 {
            // Real axis handled exactly, including -0.0 imaginary parts,
            // so the tie rule cannot be broken by a signed zero.
            return if self.re >= 0.0 {
                Complex { re: self.re.sqrt(), im: 0.0 }
            } else {
                Complex { re: 0.0, im: (-self.re).sqrt() }
            };
        }
        let t = ((self.abs() + self.re.abs()) * 0.5).sqrt();
        if self.re >= 0.0 {
            Complex { re: t, im: self.im / (2.0 * t) }
        } else {
            Complex { re: self.im.abs() / (2.0 * t), im: t.copysign(self.im) }
        }
    }

    /// Principal logarithm: imaginary part in `(-π, π]`.
    pub fn ln(self) -> Self {
        Complex { re: self.abs().ln(), im: self.arg() }
    }

    pub fn exp(self) -> Self {
        let r = self.re.exp();
        Complex { re: r * self.im.cos(), im: r * self.im.sin() }
    }

    /// `cos(x + yI) = cos x cosh y - I sin x sinh y`.
    pub fn cos(self) -> Self {
        Complex {
            re: self.re.cos() * self.im.cosh(),
            im: -self.re.sin() * self.im.sinh(),
        }
    }

    /// `sin(x + yI) = sin x cosh y + I cos x sinh y`.
    pub fn sin(self) -> Self {
        Complex {
            re: self.re.sin() * self.im.cosh(),
            im: self.re.cos() * self.im.sinh(),
        }
    }

    /// Principal arctangent. Real part in `[-π/2, π/2]`; the poles sit at
    /// `±I`, the branch cuts along the imaginary axis beyond them.
    pub fn atan(self) -> Self {
        let (x, y) = (self.re, self.im);
        Complex {
            re: 0.5 * (2.0 * x).atan2(1.0 - x * x - y * y),
            im: 0.25 * ((x * x + (y + 1.0) * (y + 1.0)) / (x * x + (y - 1.0) * (y - 1.0))).ln(),
        }
    }

    /// `|self - other| <= max(abs_eps, rel_eps * max(|self|, |other|))`.
    pub fn approx_eq(self, other: Complex, tol: Tolerance) -> bool {
        tol.is_zero_scaled((self - other).abs(), self.abs().max(other.abs()))
    }

    pub fn scale(self, s: f64) -> Self {
        Complex { re: self.re * s, im: self.im * s }
    }
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::new(re, 0.0)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -self.re, im: -self.im }
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    fn mul(self, rhs: f64) -> Complex {
        self.scale(rhs)
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        // Smith's algorithm: robust against intermediate over/underflow.
        if rhs.re.abs() >= rhs.im.abs() {
            let r = rhs.im / rhs.re;
            let d = rhs.re + rhs.im * r;
            Complex { re: (self.re + self.im * r) / d, im: (self.im - self.re * r) / d }
        } else {
            let r = rhs.re / rhs.im;
            let d = rhs.re * r + rhs.im;
            Complex { re: (self.re * r + self.im) / d, im: (self.im * r - self.re) / d }
        }
    }
}

/// Canonical form: `0`, `2`, `-2`, `I`, `-I`, `2I`, `1+2I`, `1-2I`.
/// Reals use the shortest decimal that round-trips.
impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex { re, im } = *self;
        if re == 0.0 && im == 0.0 {
            return write!(f, "0");
        }
        if im == 0.0 {
            return write!(f, "{re}");
        }
        let imag = |f: &mut fmt::Formatter<'_>, v: f64| -> fmt::Result {
            if v == 1.0 {
                write!(f, "I")
            } else if v == -1.0 {
                write!(f, "-I")
            } else {
                write!(f, "{v}I")
            }
        };
        if re == 0.0 {
            return imag(f, im);
        }
        write!(f, "{re}")?;
        if im < 0.0 {
            write!(f, "-")?;
            imag(f, -im)
        } else {
            write!(f, "+")?;
            imag(f, im)
        }
    }
}

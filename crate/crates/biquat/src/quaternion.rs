//! Real quaternions: the subalgebra with real coefficients on `(1, i, j, k)`.
//!
//! A non-real quaternion `a + μb` (with `μ` its unit axis and `b > 0`) lives
//! in a copy of the complex plane, so complex functions with real
//! coefficients lift componentwise: evaluate at `a + ib` and map the result
//! back onto `μ`. `cos`, `sin` and `atan` below use exactly that lift.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::complex::Complex;
use crate::error::Error;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quaternion = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    /// Panics on non-finite components.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        assert!(
            w.is_finite() && x.is_finite() && y.is_finite() && z.is_finite(),
            "non-finite quaternion component"
        );
        Quaternion { w, x, y, z }
    }

    pub fn scalar(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    pub fn pure(x: f64, y: f64, z: f64) -> Self {
        Quaternion::new(0.0, x, y, z)
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Negates the vector part.
    pub fn conj(self) -> Self {
        Quaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// Componentwise Euclidean inner product of all four coefficients.
    pub fn dot(self, other: Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// The algebra's norm: the *sum of squared components*, `q q̄`.
    pub fn norm(self) -> f64 {
        self.dot(self)
    }

    /// Euclidean length, `sqrt(norm)`.
    pub fn modulus(self) -> f64 {
        self.norm().sqrt()
    }

    pub fn vector(self) -> Quaternion {
        Quaternion { w: 0.0, ..self }
    }

    pub fn vector_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_pure(self, tol: Tolerance) -> bool {
        tol.is_zero_scaled(self.w, self.modulus())
    }

    /// `q̄ / (q q̄)`.
    pub fn inverse(self, tol: Tolerance) -> Result<Quaternion, Error> {
        let n = self.norm();
        if tol.is_zero(n.sqrt()) {
            return Err(Error::ZeroInput);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Unit vector part, or `None` when the vector part vanishes.
    pub fn axis(self) -> Option<Quaternion> {
        let b = self.vector_norm();
        if b == 0.0 {
            None
        } else {
            Some(self.vector().scale(1.0 / b))
        }
    }

    /// Polar split `q = r e^{μθ} = r (cos θ + μ sin θ)`: returns
    /// `(r, θ, axis)` with `r ≥ 0`, `θ ∈ [0, π]` (`π` only for negative
    /// reals) and `axis = None` when the vector part vanishes.
    pub fn polar(self) -> (f64, f64, Option<Quaternion>) {
        let r = self.modulus();
        let b = self.vector_norm();
        (r, b.atan2(self.w), self.axis())
    }

    /// Cosine through the complex-plane lift of `w + μb`.
    pub fn cos(self) -> Quaternion {
        let b = self.vector_norm();
        let c = Complex::new(self.w, b).cos();
        match self.axis() {
            None => Quaternion::scalar(c.re),
            Some(mu) => Quaternion::scalar(c.re) + mu.scale(c.im),
        }
    }

    /// Sine through the complex-plane lift of `w + μb`.
    pub fn sin(self) -> Quaternion {
        let b = self.vector_norm();
        let s = Complex::new(self.w, b).sin();
        match self.axis() {
            None => Quaternion::scalar(s.re),
            Some(mu) => Quaternion::scalar(s.re) + mu.scale(s.im),
        }
    }

    /// Arctangent through the complex-plane lift. Pure-real input needs no
    /// axis and returns the real arctangent; input at the complex pole
    /// (scalar ≈ 0, vector length ≈ 1) has no finite value.
    pub fn atan(self, tol: Tolerance) -> Result<Quaternion, Error> {
        let b = self.vector_norm();
        match self.axis() {
            None => Ok(Quaternion::scalar(self.w.atan())),
            Some(mu) => {
                if tol.is_zero(self.w) && tol.eq(b, 1.0) {
                    return Err(Error::ArctanSingularity);
                }
                let t = Complex::new(self.w, b).atan();
                Ok(Quaternion::scalar(t.re) + mu.scale(t.im))
            }
        }
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion { w: self.w * s, x: self.x * s, y: self.y * s, z: self.z * s }
    }

    pub fn approx_eq(self, other: Quaternion, tol: Tolerance) -> bool {
        tol.is_zero_scaled((self - other).modulus(), self.modulus().max(other.modulus()))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion { w: self.w + rhs.w, x: self.x + rhs.x, y: self.y + rhs.y, z: self.z + rhs.z }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion { w: self.w - rhs.w, x: self.x - rhs.x, y: self.y - rhs.y, z: self.z - rhs.z }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        let p = self;
        Quaternion {
            w: p.w * q.w + (-(p.x * q.x) - p.y * q.y - p.z * q.z),
            x: (p.w * q.x + p.x * q.w) + (p.y * q.z - p.z * q.y),
            y: (p.w * q.y + p.y * q.w) + (p.z * q.x - p.x * q.z),
            z: (p.w * q.z + p.z * q.w) + (p.x * q.y - p.y * q.x),
        }
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, unit) in [(self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")] {
            if v == 0.0 {
                continue;
            }
            let mag = v.abs();
            if first {
                if v < 0.0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if v < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1.0 || unit.is_empty() {
                write!(f, "{mag}")?;
            }
            write!(f, "{unit}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

//! The biquaternion type and its ring operations.
//!
//! Storage is Cartesian: four complex coefficients `w, x, y, z` on
//! `(1, i, j, k)`. Expanded over the reals the algebra has eight basis
//! directions, ordered by grade as `(1, iI, jI, kI, i, j, k, I)`; that
//! ordering is used by [`Biquaternion::to_reals`] and the rendered basis
//! table.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::complex::Complex;
use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

/// One of the eight real basis directions, in grade order: the scalar `1`,
/// the vectors `iI, jI, kI`, the bivectors `i, j, k`, the pseudoscalar `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    One,
    VecI,
    VecJ,
    VecK,
    BivI,
    BivJ,
    BivK,
    Pseudo,
}

impl BasisElement {
    /// All eight directions in table order.
    pub const ALL: [BasisElement; 8] = [
        BasisElement::One,
        BasisElement::VecI,
        BasisElement::VecJ,
        BasisElement::VecK,
        BasisElement::BivI,
        BasisElement::BivJ,
        BasisElement::BivK,
        BasisElement::Pseudo,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BasisElement::One => "1",
            BasisElement::VecI => "iI",
            BasisElement::VecJ => "jI",
            BasisElement::VecK => "kI",
            BasisElement::BivI => "i",
            BasisElement::BivJ => "j",
            BasisElement::BivK => "k",
            BasisElement::Pseudo => "I",
        }
    }

    /// Index in table order, `0..8`.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|e| *e == self).unwrap()
    }

    /// Which of `1, i, j, k` this direction carries (0 through 3).
    fn quat_axis(self) -> usize {
        match self {
            BasisElement::One | BasisElement::Pseudo => 0,
            BasisElement::VecI | BasisElement::BivI => 1,
            BasisElement::VecJ | BasisElement::BivJ => 2,
            BasisElement::VecK | BasisElement::BivK => 3,
        }
    }

    /// Whether the direction carries a factor of `I`.
    fn has_complex_factor(self) -> bool {
        matches!(
            self,
            BasisElement::VecI | BasisElement::VecJ | BasisElement::VecK | BasisElement::Pseudo
        )
    }

    fn from_parts(axis: usize, complex_factor: bool) -> BasisElement {
        match (axis, complex_factor) {
            (0, false) => BasisElement::One,
            (1, false) => BasisElement::BivI,
            (2, false) => BasisElement::BivJ,
            (3, false) => BasisElement::BivK,
            (0, true) => BasisElement::Pseudo,
            (1, true) => BasisElement::VecI,
            (2, true) => BasisElement::VecJ,
            (3, true) => BasisElement::VecK,
            _ => unreachable!(),
        }
    }

    /// The direction embedded as a biquaternion with coefficient 1.
    pub fn biquaternion(self) -> Biquaternion {
        let mut r = [0.0; 8];
        r[self.index()] = 1.0;
        Biquaternion::from_reals(r)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Product on `1, i, j, k` by axis index: returns `(sign, axis)`.
fn hamilton(a: usize, b: usize) -> (i8, usize) {
    match (a, b) {
        (0, b) => (1, b),
        (a, 0) => (1, a),
        (a, b) if a == b => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

/// Product of two basis directions: a sign and a direction.
///
/// `I` commutes with everything and `I² = -1`, so the quaternion factors
/// multiply by the Hamilton rules, the `I` factors cancel into a sign.
pub fn basis_product(a: BasisElement, b: BasisElement) -> (i8, BasisElement) {
    let (sign, axis) = hamilton(a.quat_axis(), b.quat_axis());
    let both_complex = a.has_complex_factor() && b.has_complex_factor();
    let sign = if both_complex { -sign } else { sign };
    let complex_factor = a.has_complex_factor() ^ b.has_complex_factor();
    (sign, BasisElement::from_parts(axis, complex_factor))
}

/// A quaternion with complex coefficients: `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Biquaternion {
    pub w: Complex,
    pub x: Complex,
    pub y: Complex,
    pub z: Complex,
}

impl Biquaternion {
    pub const ZERO: Biquaternion =
        Biquaternion { w: Complex::ZERO, x: Complex::ZERO, y: Complex::ZERO, z: Complex::ZERO };
    pub const ONE: Biquaternion =
        Biquaternion { w: Complex::ONE, x: Complex::ZERO, y: Complex::ZERO, z: Complex::ZERO };

    pub fn new(w: Complex, x: Complex, y: Complex, z: Complex) -> Self {
        Biquaternion { w, x, y, z }
    }

    pub fn from_real(w: f64) -> Self {
        Biquaternion { w: Complex::new(w, 0.0), ..Self::ZERO }
    }

    pub fn from_complex(w: Complex) -> Self {
        Biquaternion { w, ..Self::ZERO }
    }

    pub fn from_quaternion(q: Quaternion) -> Self {
        Biquaternion {
            w: Complex::new(q.w, 0.0),
            x: Complex::new(q.x, 0.0),
            y: Complex::new(q.y, 0.0),
            z: Complex::new(q.z, 0.0),
        }
    }

    /// `re + I im` from two real quaternions.
    pub fn from_parts(re: Quaternion, im: Quaternion) -> Self {
        Biquaternion {
            w: Complex::new(re.w, im.w),
            x: Complex::new(re.x, im.x),
            y: Complex::new(re.y, im.y),
            z: Complex::new(re.z, im.z),
        }
    }

    /// Coefficients on `(1, iI, jI, kI, i, j, k, I)`, the table order.
    pub fn from_reals(r: [f64; 8]) -> Self {
        Biquaternion {
            w: Complex::new(r[0], r[7]),
            x: Complex::new(r[4], r[1]),
            y: Complex::new(r[5], r[2]),
            z: Complex::new(r[6], r[3]),
        }
    }

    /// Inverse of [`Biquaternion::from_reals`].
    pub fn to_reals(self) -> [f64; 8] {
        [self.w.re, self.x.im, self.y.im, self.z.im, self.x.re, self.y.re, self.z.re, self.w.im]
    }

    pub fn basis(e: BasisElement) -> Self {
        e.biquaternion()
    }

    /// The real quaternion of real parts, `q_r` in `q = q_r + I q_i`.
    pub fn real_part(self) -> Quaternion {
        Quaternion::new(self.w.re, self.x.re, self.y.re, self.z.re)
    }

    /// The real quaternion of imaginary parts, `q_i` in `q = q_r + I q_i`.
    pub fn imag_part(self) -> Quaternion {
        Quaternion::new(self.w.im, self.x.im, self.y.im, self.z.im)
    }

    /// The complex coefficient of `1`.
    pub fn scalar_part(self) -> Complex {
        self.w
    }

    /// Everything except the scalar: `x i + y j + z k`.
    pub fn vector_part(self) -> Biquaternion {
        Biquaternion { w: Complex::ZERO, ..self }
    }

    /// Euclidean length over all eight real components. This is the natural
    /// scale for zero tests; it vanishes only at zero, unlike the semi-norm.
    pub fn euclid_norm_sq(self) -> f64 {
        self.w.abs_sq() + self.x.abs_sq() + self.y.abs_sq() + self.z.abs_sq()
    }

    pub fn euclid_norm(self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn is_zero(self, tol: Tolerance) -> bool {
        tol.is_zero(self.euclid_norm())
    }

    pub fn is_pure(self, tol: Tolerance) -> bool {
        tol.is_zero_scaled(self.w.abs(), self.euclid_norm())
    }

    pub fn approx_eq(self, other: Biquaternion, tol: Tolerance) -> bool {
        tol.is_zero_scaled(
            (self - other).euclid_norm(),
            self.euclid_norm().max(other.euclid_norm()),
        )
    }

    /// Componentwise complex scaling.
    pub fn scale(self, s: Complex) -> Self {
        Biquaternion { w: self.w * s, x: self.x * s, y: self.y * s, z: self.z * s }
    }

    /// `a p + b q` with complex coefficients, checked for overflow.
    pub fn linear_combine(
        a: Complex,
        p: Biquaternion,
        b: Complex,
        q: Biquaternion,
    ) -> Result<Biquaternion, Error> {
        let r = p.scale(a) + q.scale(b);
        if r.is_finite() {
            Ok(r)
        } else {
            Err(Error::Overflow)
        }
    }

    /// Product with an overflow check; `*` is the unchecked form.
    pub fn checked_mul(self, rhs: Biquaternion) -> Result<Biquaternion, Error> {
        let r = self * rhs;
        if r.is_finite() {
            Ok(r)
        } else {
            Err(Error::Overflow)
        }
    }

    /// `q̄ / ‖q‖`. Fails on zero and on divisors of zero, which have no
    /// inverse at all.
    pub fn inverse(self, tol: Tolerance) -> Result<Biquaternion, Error> {
        if self.is_zero(tol) {
            return Err(Error::ZeroInput);
        }
        let n = self.semi_norm();
        if tol.is_zero_scaled(n.abs(), self.euclid_norm_sq()) {
            return Err(Error::DivisorOfZero);
        }
        Ok(self.conj().scale(n.recip()))
    }

    /// Integer power; negative exponents go through [`Biquaternion::inverse`].
    pub fn powi(self, n: i32, tol: Tolerance) -> Result<Biquaternion, Error> {
        let (mut base, mut n) = if n < 0 {
            (self.inverse(tol)?, n.unsigned_abs())
        } else {
            (self, n as u32)
        };
        let mut acc = Biquaternion::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        if acc.is_finite() {
            Ok(acc)
        } else {
            Err(Error::Overflow)
        }
    }
}

impl From<f64> for Biquaternion {
    fn from(w: f64) -> Self {
        Biquaternion::from_real(w)
    }
}

impl From<Complex> for Biquaternion {
    fn from(w: Complex) -> Self {
        Biquaternion::from_complex(w)
    }
}

impl From<Quaternion> for Biquaternion {
    fn from(q: Quaternion) -> Self {
        Biquaternion::from_quaternion(q)
    }
}

impl Add for Biquaternion {
    type Output = Biquaternion;
    fn add(self, rhs: Biquaternion) -> Biquaternion {
        Biquaternion {
            w: self.w + rhs.w,
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl Sub for Biquaternion {
    type Output = Biquaternion;
    fn sub(self, rhs: Biquaternion) -> Biquaternion {
        Biquaternion {
            w: self.w - rhs.w,
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl Neg for Biquaternion {
    type Output = Biquaternion;
    fn neg(self) -> Biquaternion {
        Biquaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl Mul for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, q: Biquaternion) -> Biquaternion {
        let p = self;
        // Each component groups its scalar-sourced terms before its
        // vector-vector terms, so the four parts of the scalar/vector product
        // split sum back to this value bit for bit.
        Biquaternion {
            w: p.w * q.w + (-(p.x * q.x) - p.y * q.y - p.z * q.z),
            x: (p.w * q.x + p.x * q.w) + (p.y * q.z - p.z * q.y),
            y: (p.w * q.y + p.y * q.w) + (p.z * q.x - p.x * q.z),
            z: (p.w * q.z + p.z * q.w) + (p.x * q.y - p.y * q.x),
        }
    }
}

impl Mul<Complex> for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, rhs: Complex) -> Biquaternion {
        self.scale(rhs)
    }
}

impl Mul<f64> for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, rhs: f64) -> Biquaternion {
        self.scale(Complex::new(rhs, 0.0))
    }
}

impl Mul<Biquaternion> for Complex {
    type Output = Biquaternion;
    fn mul(self, rhs: Biquaternion) -> Biquaternion {
        rhs.scale(self)
    }
}

/// Canonical form: complex coefficients in `w, x(i), y(j), z(k)` order, zero
/// components omitted, mixed coefficients parenthesized, reals printed with
/// the shortest decimal that round-trips. Examples: `0`, `2 + 2Ii`,
/// `(1+2I) + (3-4I)k`, `i - Ij`.
impl fmt::Display for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, unit) in [(self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")] {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let mixed = c.re != 0.0 && c.im != 0.0;
            // pure coefficients pull their sign out of the term
            let (neg, body) = if mixed { (false, c) } else { (c.re < 0.0 || c.im < 0.0, -c) };
            let c = if neg { body } else { c };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mixed {
                write!(f, "({c})")?;
            } else if c.re != 0.0 {
                if c.re != 1.0 || unit.is_empty() {
                    write!(f, "{}", c.re)?;
                }
            } else if c.im == 1.0 {
                write!(f, "I")?;
            } else {
                write!(f, "{}I", c.im)?;
            }
            write!(f, "{unit}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

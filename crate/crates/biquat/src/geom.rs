//! The geometric-algebra reading of a biquaternion.
//!
//! Splitting every coefficient into real and imaginary parts sorts the eight
//! real directions into four grades: the real scalar (grade S), the real
//! `i, j, k` span as bivectors (B), the imaginary `Ii, Ij, Ik` span as
//! geometric vectors (V), and the imaginary unit `I` as the pseudoscalar (P).
//! On that reading the algebra supplies a wedge product, a dual, and a
//! grade-signature table for products, all derived here from the basis
//! products rather than copied from any published table.

use std::fmt;

use crate::biquaternion::{basis_product, BasisElement, Biquaternion};
use crate::complex::Complex;
use crate::tolerance::Tolerance;

/// One of the four grades of the multivector view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grade {
    Scalar,
    Bivector,
    Vector,
    Pseudoscalar,
}

impl Grade {
    pub const ALL: [Grade; 4] =
        [Grade::Scalar, Grade::Bivector, Grade::Vector, Grade::Pseudoscalar];

    pub fn letter(self) -> char {
        match self {
            Grade::Scalar => 'S',
            Grade::Bivector => 'B',
            Grade::Vector => 'V',
            Grade::Pseudoscalar => 'P',
        }
    }

    fn bit(self) -> u8 {
        match self {
            Grade::Scalar => 1,
            Grade::Bivector => 2,
            Grade::Vector => 4,
            Grade::Pseudoscalar => 8,
        }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl BasisElement {
    /// The grade a basis direction belongs to.
    pub fn grade(self) -> Grade {
        match self {
            BasisElement::One => Grade::Scalar,
            BasisElement::BivI | BasisElement::BivJ | BasisElement::BivK => Grade::Bivector,
            BasisElement::VecI | BasisElement::VecJ | BasisElement::VecK => Grade::Vector,
            BasisElement::Pseudo => Grade::Pseudoscalar,
        }
    }
}

/// A set of grades, printed like `S+B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GradeSet(u8);

impl GradeSet {
    pub const EMPTY: GradeSet = GradeSet(0);

    pub fn of(grades: &[Grade]) -> GradeSet {
        let mut s = GradeSet::EMPTY;
        for g in grades {
            s.insert(*g);
        }
        s
    }

    pub fn insert(&mut self, g: Grade) {
        self.0 |= g.bit();
    }

    pub fn contains(self, g: Grade) -> bool {
        self.0 & g.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn grades(self) -> impl Iterator<Item = Grade> {
        Grade::ALL.into_iter().filter(move |g| self.contains(*g))
    }
}

impl fmt::Display for GradeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in self.grades() {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

/// A biquaternion sorted by grade: real scalar, real `i,j,k` coefficients,
/// imaginary `i,j,k` coefficients (the weights on `Ii, Ij, Ik`), and the
/// coefficient of `I`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    pub scalar: f64,
    pub bivector: [f64; 3],
    pub vector: [f64; 3],
    pub pseudoscalar: f64,
}

impl Multivector {
    /// The grades whose coefficient blocks are nonzero relative to the whole.
    pub fn grades(&self, tol: Tolerance) -> GradeSet {
        let b = self.bivector;
        let v = self.vector;
        let bnorm = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
        let vnorm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let scale = (self.scalar * self.scalar
            + bnorm * bnorm
            + vnorm * vnorm
            + self.pseudoscalar * self.pseudoscalar)
            .sqrt();
        let mut set = GradeSet::EMPTY;
        for (g, mag) in [
            (Grade::Scalar, self.scalar.abs()),
            (Grade::Bivector, bnorm),
            (Grade::Vector, vnorm),
            (Grade::Pseudoscalar, self.pseudoscalar.abs()),
        ] {
            if !tol.is_zero_scaled(mag, scale) {
                set.insert(g);
            }
        }
        set
    }
}

/// Reads a biquaternion into its multivector form. Exact: the coefficients
/// are copied, never recomputed.
pub fn decompose(q: Biquaternion) -> Multivector {
    Multivector {
        scalar: q.w.re,
        bivector: [q.x.re, q.y.re, q.z.re],
        vector: [q.x.im, q.y.im, q.z.im],
        pseudoscalar: q.w.im,
    }
}

/// Exact inverse of [`decompose`].
pub fn compose(mv: Multivector) -> Biquaternion {
    Biquaternion::from_reals([
        mv.scalar,
        mv.vector[0],
        mv.vector[1],
        mv.vector[2],
        mv.bivector[0],
        mv.bivector[1],
        mv.bivector[2],
        mv.pseudoscalar,
    ])
}

/// `p ∧ q = ½(pq - qp)`: the antisymmetric half of the product. Scalar
/// factors drop out, so only the vector parts contribute; on pure inputs it
/// is the cross product of the `i,j,k` coefficient triples.
pub fn wedge(p: Biquaternion, q: Biquaternion) -> Biquaternion {
    (p * q - q * p) * 0.5
}

/// Multiplication by the pseudoscalar `I` (central, so the side is
/// irrelevant): bivector ↔ vector, scalar ↔ pseudoscalar, with
/// `dual(dual(q)) = -q` from `I² = -1`.
pub fn dual(q: Biquaternion) -> Biquaternion {
    q * Complex::I
}

/// The grades that can appear in a product of two pure-grade elements,
/// found by expanding every basis pair of those grades.
pub fn grades_of_product(g1: Grade, g2: Grade) -> GradeSet {
    let mut set = GradeSet::EMPTY;
    for a in BasisElement::ALL.into_iter().filter(|e| e.grade() == g1) {
        for b in BasisElement::ALL.into_iter().filter(|e| e.grade() == g2) {
            let (_, e) = basis_product(a, b);
            set.insert(e.grade());
        }
    }
    set
}

/// The four scalar/vector cross terms of a product:
/// `pq = S(p)S(q) + S(p)V(q) + S(q)V(p) + V(p)V(q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductDecomposition {
    pub ss: Biquaternion,
    pub sv: Biquaternion,
    pub vs: Biquaternion,
    pub vv: Biquaternion,
}

impl ProductDecomposition {
    /// Reassembles the full product. The association mirrors the component
    /// grouping inside `Mul`, so this equals `p * q` bit for bit.
    pub fn sum(&self) -> Biquaternion {
        ((self.ss + self.sv) + self.vs) + self.vv
    }
}

/// Splits `pq` into scalar-scalar, scalar-vector, vector-scalar and
/// vector-vector parts. The `vv` part further splits as
/// `-⟨V(p),V(q)⟩ + wedge(V(p), V(q))`.
pub fn product_decomposition(p: Biquaternion, q: Biquaternion) -> ProductDecomposition {
    ProductDecomposition {
        ss: Biquaternion::from_complex(p.w * q.w),
        sv: p.w * q.vector_part(),
        vs: q.w * p.vector_part(),
        vv: p.vector_part() * q.vector_part(),
    }
}

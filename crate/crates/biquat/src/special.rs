//! Special elements: roots of -1, divisors of zero, idempotents, nilpotents.
//!
//! Because the semi-norm is complex and can vanish on nonzero elements, the
//! algebra has structure a division algebra cannot: nonzero `q` with
//! `q² = 0`, solutions of `q² = q` other than 0 and 1, and a two-parameter
//! family of roots of -1. Every predicate here evaluates both the defining
//! equation and the structural characterization and only reports membership
//! when the two agree, so a tolerance misconfiguration shows up as a
//! disagreement instead of a silent wrong answer.

use crate::biquaternion::Biquaternion;
use crate::complex::Complex;
use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

/// Evidence for and against `q² = -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCheck {
    /// `q² + 1` vanishes under the tolerance.
    pub by_squaring: bool,
    /// `q` matches the structural description of a root: pure with
    /// perpendicular parts and unit norm difference, or one of the two
    /// non-pure roots `±I`.
    pub by_structure: bool,
    /// Scalar part below tolerance. False exactly for the `±I` roots, which
    /// are the trivial complex case rather than biquaternion roots proper.
    pub is_pure: bool,
    /// `⟨q_r, q_i⟩` in 4-space; vanishes for pure roots.
    pub part_dot: f64,
    /// `‖q_r‖ - ‖q_i‖` (sums of squares); equals 1 for pure roots.
    pub norm_difference: f64,
    /// Euclidean length of `q² + 1`.
    pub square_residual: f64,
}

impl RootCheck {
    /// True when both routes agree that `q` is a root.
    pub fn is_root(&self) -> bool {
        self.by_squaring && self.by_structure
    }
}

/// Tests `q² = -1` by squaring and by the structural constraints, returning
/// the residuals either way.
pub fn check_root_of_minus_one(q: Biquaternion, tol: Tolerance) -> RootCheck {
    let scale = q.euclid_norm_sq().max(1.0);
    let square_residual = (q * q + Biquaternion::ONE).euclid_norm();
    let by_squaring = tol.is_zero_scaled(square_residual, scale);
    let is_pure = q.is_pure(tol);
    let part_dot = q.real_part().dot(q.imag_part());
    let norm_difference = q.real_part().norm() - q.imag_part().norm();
    let by_structure = if is_pure {
        tol.is_zero_scaled(part_dot, scale) && tol.is_zero_scaled(norm_difference - 1.0, scale)
    } else {
        let i = Biquaternion::from_complex(Complex::I);
        q.approx_eq(i, tol) || q.approx_eq(-i, tol)
    };
    RootCheck { by_squaring, by_structure, is_pure, part_dot, norm_difference, square_residual }
}

pub fn is_root_of_minus_one(q: Biquaternion, tol: Tolerance) -> bool {
    check_root_of_minus_one(q, tol).is_root()
}

fn require_unit_pure(q: Quaternion, tol: Tolerance, what: &'static str) -> Result<(), Error> {
    if !q.is_pure(tol) || !tol.eq(q.norm(), 1.0) {
        return Err(Error::ConstraintViolation(what));
    }
    Ok(())
}

/// Builds the general pure root `b μ + d I ν` from perpendicular unit pure
/// axes and a hyperbolic weight pair with `b² - d² = 1`.
pub fn make_root(
    mu: Quaternion,
    nu: Quaternion,
    b: f64,
    d: f64,
    tol: Tolerance,
) -> Result<Biquaternion, Error> {
    require_unit_pure(mu, tol, "mu must be a unit pure quaternion")?;
    require_unit_pure(nu, tol, "nu must be a unit pure quaternion")?;
    if !tol.is_zero_scaled(mu.dot(nu), 1.0) {
        return Err(Error::ConstraintViolation("mu and nu must be perpendicular"));
    }
    if !tol.eq(b * b - d * d, 1.0) {
        return Err(Error::ConstraintViolation("the weights must satisfy b^2 - d^2 = 1"));
    }
    Ok(Biquaternion::from_parts(mu * b, nu * d))
}

/// Divides a pure biquaternion by its modulus, yielding a root of -1.
///
/// Pure nilpotents have modulus zero while being nonzero themselves, so they
/// admit no such normalization and are rejected as `NilpotentInput`.
pub fn normalize_pure(q: Biquaternion, tol: Tolerance) -> Result<Biquaternion, Error> {
    if q.is_zero(tol) {
        return Err(Error::ZeroInput);
    }
    if !q.is_pure(tol) {
        return Err(Error::NotPure);
    }
    let m = q.modulus();
    if tol.is_zero_scaled(m.abs(), q.euclid_norm()) {
        return Err(Error::NilpotentInput);
    }
    Ok(q.scale(m.recip()))
}

/// True when `q` is nonzero with vanishing semi-norm, checked both directly
/// and through the equivalent part condition `‖q_r‖ = ‖q_i‖, ⟨q_r,q_i⟩ = 0`.
pub fn is_divisor_of_zero(q: Biquaternion, tol: Tolerance) -> bool {
    if tol.is_zero(q.euclid_norm()) {
        return false;
    }
    let scale = q.euclid_norm_sq();
    let by_semi_norm = tol.is_zero_scaled(q.semi_norm().abs(), scale);
    let by_parts = tol.is_zero_scaled(q.real_part().norm() - q.imag_part().norm(), scale)
        && tol.is_zero_scaled(q.real_part().dot(q.imag_part()), scale);
    by_semi_norm && by_parts
}

/// Which of the two idempotents to build from a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `½ ± ½ ξI` for a root `ξ` of -1: the only idempotents in the algebra.
/// The trivial root `ξ = ±I` yields the trivial idempotents 0 and 1.
pub fn make_idempotent(xi: Biquaternion, sign: Sign, tol: Tolerance) -> Result<Biquaternion, Error> {
    if !is_root_of_minus_one(xi, tol) {
        return Err(Error::NotARoot);
    }
    Ok(Biquaternion::from_real(0.5) + (xi * Complex::I) * (0.5 * sign.factor()))
}

/// `q² = q`, cross-checked against the normal form `½ + ½ξI`: peeling the
/// shape off (`ξ = -2I(q - ½)`) must recover a root of -1. The trivial
/// idempotents 0 and 1 peel to the trivial roots `±I`.
pub fn is_idempotent(q: Biquaternion, tol: Tolerance) -> bool {
    let scale = (q.euclid_norm_sq() + q.euclid_norm()).max(1.0);
    let defining = tol.is_zero_scaled((q * q - q).euclid_norm(), scale);
    let xi = (q - Biquaternion::from_real(0.5)) * Complex::new(0.0, -2.0);
    defining && is_root_of_minus_one(xi, tol)
}

/// `q ≠ 0` with `q² = 0`, cross-checked against the structural fact that
/// nilpotents are exactly the pure divisors of zero.
pub fn is_nilpotent(q: Biquaternion, tol: Tolerance) -> bool {
    if tol.is_zero(q.euclid_norm()) {
        return false;
    }
    let defining = tol.is_zero_scaled((q * q).euclid_norm(), q.euclid_norm_sq());
    defining && q.is_pure(tol) && is_divisor_of_zero(q, tol)
}

/// `scale·(μ + Iν)` for perpendicular unit pure axes: the general nilpotent.
pub fn make_nilpotent(
    mu: Quaternion,
    nu: Quaternion,
    scale: Complex,
    tol: Tolerance,
) -> Result<Biquaternion, Error> {
    require_unit_pure(mu, tol, "mu must be a unit pure quaternion")?;
    require_unit_pure(nu, tol, "nu must be a unit pure quaternion")?;
    if !tol.is_zero_scaled(mu.dot(nu), 1.0) {
        return Err(Error::ConstraintViolation("mu and nu must be perpendicular"));
    }
    if tol.is_zero(scale.abs()) {
        return Err(Error::ConstraintViolation("the scale must be nonzero"));
    }
    Ok(Biquaternion::from_parts(mu, nu).scale(scale))
}

/// Rescales a non-pure divisor of zero into an idempotent by dividing by
/// twice its scalar part. Pure divisors are nilpotents and stay nilpotent
/// under every scaling, so no idempotent multiple exists for them.
pub fn idempotent_from_divisor(p: Biquaternion, tol: Tolerance) -> Result<Biquaternion, Error> {
    if !is_divisor_of_zero(p, tol) {
        return Err(Error::NotDivisor);
    }
    if p.is_pure(tol) {
        return Err(Error::PureDivisor);
    }
    Ok(p.scale((p.scalar_part() * 2.0).recip()))
}

/// Everything the library can say about one value at a glance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub is_zero: bool,
    pub is_real_quaternion: bool,
    pub is_imaginary: bool,
    pub is_pure: bool,
    pub is_root_of_minus_one: bool,
    pub is_divisor_of_zero: bool,
    pub is_idempotent: bool,
    pub is_nilpotent: bool,
    /// `‖q_r‖` (sum of squares), one of the two divisor diagnostics.
    pub real_part_norm: f64,
    /// `‖q_i‖`.
    pub imag_part_norm: f64,
    /// `⟨q_r, q_i⟩`, the other divisor diagnostic.
    pub part_dot: f64,
}

pub fn classify(q: Biquaternion, tol: Tolerance) -> Classification {
    let scale = q.euclid_norm();
    Classification {
        is_zero: q.is_zero(tol),
        is_real_quaternion: tol.is_zero_scaled(q.imag_part().modulus(), scale),
        is_imaginary: tol.is_zero_scaled(q.real_part().modulus(), scale),
        is_pure: q.is_pure(tol),
        is_root_of_minus_one: is_root_of_minus_one(q, tol),
        is_divisor_of_zero: is_divisor_of_zero(q, tol),
        is_idempotent: is_idempotent(q, tol),
        is_nilpotent: is_nilpotent(q, tol),
        real_part_norm: q.real_part().norm(),
        imag_part_norm: q.imag_part().norm(),
        part_dot: q.real_part().dot(q.imag_part()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquaternion::BasisElement;

    const TOL: Tolerance = Tolerance { abs_eps: 1e-12, rel_eps: 1e-9 };

    fn unit(e: BasisElement) -> Biquaternion {
        e.biquaternion()
    }

    fn nilpotent() -> Biquaternion {
        unit(BasisElement::BivI) + unit(BasisElement::VecJ)
    }

    #[test]
    fn basis_roots() {
        let check = check_root_of_minus_one(unit(BasisElement::BivI), TOL);
        assert!(check.is_root());
        assert!(check.is_pure);
        assert_eq!(check.part_dot, 0.0);
        assert_eq!(check.norm_difference, 1.0);
        assert_eq!(check.square_residual, 0.0);
    }

    // √2·i + Ij squares to 2i² + (Ij)² + √2(i(Ij) + (Ij)i) = -2 + 1 + 0 = -1
    #[test]
    fn hyperbolic_root() {
        let q = unit(BasisElement::BivI) * 2.0_f64.sqrt() + unit(BasisElement::VecJ);
        let check = check_root_of_minus_one(q, TOL);
        assert!(check.is_root());
        assert!(TOL.eq(check.norm_difference, 1.0));
    }

    #[test]
    fn pseudoscalar_is_the_trivial_root() {
        for q in [unit(BasisElement::Pseudo), -unit(BasisElement::Pseudo)] {
            let check = check_root_of_minus_one(q, TOL);
            assert!(check.is_root());
            // flagged: a complex root, not a pure biquaternion one
            assert!(!check.is_pure);
        }
    }

    #[test]
    fn non_roots() {
        assert!(!is_root_of_minus_one(Biquaternion::ONE, TOL));
        assert!(!is_root_of_minus_one(nilpotent(), TOL));
        assert!(!is_root_of_minus_one(unit(BasisElement::BivI) * 2.0, TOL));
    }

    #[test]
    fn complex_conj_of_root_is_root() {
        let q = make_root(Quaternion::J, Quaternion::K, 1.25, 0.75, TOL).unwrap();
        assert!(is_root_of_minus_one(q, TOL));
        assert!(is_root_of_minus_one(q.complex_conj(), TOL));
    }

    #[test]
    fn make_root_examples() {
        assert_eq!(
            make_root(Quaternion::I, Quaternion::J, 1.0, 0.0, TOL).unwrap(),
            unit(BasisElement::BivI)
        );
        let r2 = 2.0_f64.sqrt();
        let q = make_root(Quaternion::I, Quaternion::J, r2, 1.0, TOL).unwrap();
        assert_eq!(q, unit(BasisElement::BivI) * r2 + unit(BasisElement::VecJ));
        assert!(is_root_of_minus_one(q, TOL));
    }

    #[test]
    fn make_root_rejects_bad_inputs() {
        let r2 = 2.0_f64.sqrt();
        assert!(matches!(
            make_root(Quaternion::I, Quaternion::I, r2, 1.0, TOL),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            make_root(Quaternion::I * 2.0, Quaternion::J, 1.0, 0.0, TOL),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            make_root(Quaternion::new(1.0, 1.0, 0.0, 0.0), Quaternion::J, 1.0, 0.0, TOL),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            make_root(Quaternion::I, Quaternion::J, 2.0, 1.0, TOL),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn normalize_pure_examples() {
        let q = unit(BasisElement::BivI) * 3.0;
        assert_eq!(normalize_pure(q, TOL).unwrap(), unit(BasisElement::BivI));

        // semi-norm of 2i + Ij is 4 - 1 = 3
        let q = unit(BasisElement::BivI) * 2.0 + unit(BasisElement::VecJ);
        let xi = normalize_pure(q, TOL).unwrap();
        assert!((xi * xi).approx_eq(-Biquaternion::ONE, TOL));
        assert!(xi.semi_norm().approx_eq(Complex::ONE, TOL));
        assert!(is_root_of_minus_one(xi, TOL));

        assert_eq!(normalize_pure(nilpotent(), TOL), Err(Error::NilpotentInput));
        assert_eq!(normalize_pure(Biquaternion::ZERO, TOL), Err(Error::ZeroInput));
        assert_eq!(normalize_pure(Biquaternion::ONE, TOL), Err(Error::NotPure));
    }

    #[test]
    fn divisor_examples() {
        assert!(is_divisor_of_zero(Biquaternion::ONE + unit(BasisElement::VecI), TOL));
        assert!(is_divisor_of_zero(nilpotent(), TOL));
        let real = Biquaternion::from_quaternion(Quaternion::new(1.0, -2.0, 3.0, 0.5));
        assert!(!is_divisor_of_zero(real, TOL));
        assert!(!is_divisor_of_zero(Biquaternion::ZERO, TOL));
        assert!(!is_divisor_of_zero(unit(BasisElement::VecI), TOL));
    }

    #[test]
    fn products_with_divisors_stay_divisors() {
        let d = Biquaternion::ONE + unit(BasisElement::VecI);
        let q = Biquaternion::from_reals([0.3, -1.2, 0.7, 2.5, -0.4, 1.9, -3.1, 0.6]);
        let prod = q * d;
        assert!(is_divisor_of_zero(prod, TOL) || prod.is_zero(TOL));
    }

    #[test]
    fn make_idempotent_examples() {
        let i = unit(BasisElement::BivI);
        let e = make_idempotent(i, Sign::Plus, TOL).unwrap();
        assert_eq!(e, Biquaternion::from_real(0.5) + unit(BasisElement::VecI) * 0.5);
        assert_eq!(e * e, e);

        // the trivial root collapses to the trivial idempotents
        let trivial = unit(BasisElement::Pseudo);
        assert_eq!(make_idempotent(trivial, Sign::Plus, TOL).unwrap(), Biquaternion::ZERO);
        assert_eq!(make_idempotent(trivial, Sign::Minus, TOL).unwrap(), Biquaternion::ONE);

        let r2 = 2.0_f64.sqrt();
        let xi = make_root(Quaternion::I, Quaternion::J, r2, 1.0, TOL).unwrap();
        let e = make_idempotent(xi, Sign::Plus, TOL).unwrap();
        // ½ + (√2/2)Ii - ½j
        let expect = Biquaternion::from_real(0.5) + unit(BasisElement::VecI) * (r2 / 2.0)
            - unit(BasisElement::BivJ) * 0.5;
        assert!(e.approx_eq(expect, TOL));
        assert!((e * e).approx_eq(e, TOL));
        assert!(is_divisor_of_zero(e, TOL));

        assert_eq!(make_idempotent(i * 2.0, Sign::Plus, TOL), Err(Error::NotARoot));
    }

    #[test]
    fn idempotent_predicate() {
        let e = Biquaternion::from_real(0.5) + unit(BasisElement::VecI) * 0.5;
        assert!(is_idempotent(e, TOL));
        assert!(is_idempotent(Biquaternion::ONE, TOL));
        assert!(is_idempotent(Biquaternion::ZERO, TOL));
        assert!(!is_idempotent(e * 0.9, TOL));
        assert!(!is_idempotent(unit(BasisElement::BivI), TOL));
        // every nontrivial idempotent sits at scalar part ½ and divides zero
        assert!(TOL.eq(e.scalar_part().re, 0.5));
        assert!(is_divisor_of_zero(e, TOL));
    }

    #[test]
    fn nilpotent_predicate_and_scaling() {
        assert!(is_nilpotent(nilpotent(), TOL));
        assert!(is_nilpotent(nilpotent() * 2.0, TOL));
        assert!(is_nilpotent(nilpotent() * Complex::new(1.0, 2.0), TOL));
        assert!(!is_nilpotent(Biquaternion::ONE, TOL));
        assert!(!is_nilpotent(unit(BasisElement::VecI), TOL));
        assert!(!is_nilpotent(Biquaternion::ZERO, TOL));
        // nilpotents are pure divisors of zero
        assert!(nilpotent().is_pure(TOL) && is_divisor_of_zero(nilpotent(), TOL));
    }

    #[test]
    fn make_nilpotent_examples() {
        assert_eq!(
            make_nilpotent(Quaternion::I, Quaternion::J, Complex::ONE, TOL).unwrap(),
            nilpotent()
        );
        // 2I(j + Ik) = -2k + 2Ij
        let n = make_nilpotent(Quaternion::J, Quaternion::K, Complex::new(0.0, 2.0), TOL).unwrap();
        assert_eq!(n, unit(BasisElement::VecJ) * 2.0 - unit(BasisElement::BivK) * 2.0);
        assert_eq!(n * n, Biquaternion::ZERO);
        assert!(matches!(
            make_nilpotent(Quaternion::I, Quaternion::I, Complex::ONE, TOL),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            make_nilpotent(Quaternion::I, Quaternion::J, Complex::ZERO, TOL),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn idempotent_from_divisor_examples() {
        let p = Biquaternion::ONE + unit(BasisElement::VecI);
        let e = Biquaternion::from_real(0.5) + unit(BasisElement::VecI) * 0.5;
        assert_eq!(idempotent_from_divisor(p, TOL).unwrap(), e);
        // complex scaling cancels out
        let scaled = idempotent_from_divisor(p * 3.0, TOL).unwrap();
        assert!(scaled.approx_eq(e, TOL));
        assert!(is_idempotent(scaled, TOL));

        assert_eq!(idempotent_from_divisor(nilpotent(), TOL), Err(Error::PureDivisor));
        assert_eq!(idempotent_from_divisor(Biquaternion::ONE, TOL), Err(Error::NotDivisor));
    }

    #[test]
    fn classify_reports_structure() {
        let c = classify(nilpotent(), TOL);
        assert!(c.is_pure && c.is_nilpotent && c.is_divisor_of_zero);
        assert!(!c.is_zero && !c.is_idempotent && !c.is_root_of_minus_one);
        assert_eq!(c.real_part_norm, 1.0);
        assert_eq!(c.imag_part_norm, 1.0);
        assert_eq!(c.part_dot, 0.0);

        let c = classify(Biquaternion::from_quaternion(Quaternion::new(1.0, 2.0, 0.0, 0.0)), TOL);
        assert!(c.is_real_quaternion && !c.is_imaginary && !c.is_divisor_of_zero);

        let c = classify(unit(BasisElement::VecI), TOL);
        assert!(c.is_imaginary && c.is_pure && !c.is_divisor_of_zero);

        let c = classify(Biquaternion::ZERO, TOL);
        assert!(c.is_zero && !c.is_nilpotent && !c.is_divisor_of_zero);
        assert!(c.is_idempotent);
    }
}

//! Deterministic random generators for tests and the identity checker.
//!
//! Everything is driven by a ChaCha8 stream cipher so that a (seed, stream)
//! pair fully determines the output on every platform. Structured samplers
//! (roots of -1, nilpotents, divisors of zero) build elements satisfying
//! their defining constraint by construction, then the callers can assert
//! the constraint independently.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::biquaternion::Biquaternion;
use crate::quaternion::Quaternion;

/// A reproducible generator: `seed` selects the run, `stream` the substream.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Uniform coefficients in [-2, 2).
pub fn biquaternion(r: &mut impl Rng) -> Biquaternion {
    Biquaternion::from_reals(std::array::from_fn(|_| r.random_range(-2.0..2.0)))
}

/// Uniform coefficients in [-0.8, 0.8); small enough that exponentials and
/// 20-term power series stay well-conditioned.
pub fn small_biquaternion(r: &mut impl Rng) -> Biquaternion {
    Biquaternion::from_reals(std::array::from_fn(|_| r.random_range(-0.8..0.8)))
}

/// Uniform coefficients in [-2, 2).
pub fn quaternion(r: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        r.random_range(-2.0..2.0),
        r.random_range(-2.0..2.0),
        r.random_range(-2.0..2.0),
        r.random_range(-2.0..2.0),
    )
}

/// Uniform direction on the pure-quaternion sphere, by rejection from the
/// unit ball.
pub fn unit_pure_quaternion(r: &mut impl Rng) -> Quaternion {
    loop {
        let v = Quaternion::pure(
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
        );
        let n = v.modulus();
        if (0.1..=1.0).contains(&n) {
            return v * (1.0 / n);
        }
    }
}

/// A unit pure quaternion orthogonal to `u` (which must be unit pure).
pub fn perpendicular_unit_pure(r: &mut impl Rng, u: Quaternion) -> Quaternion {
    loop {
        let w = unit_pure_quaternion(r);
        let v = w - u * u.dot(w);
        let n = v.modulus();
        if n > 0.1 {
            return v * (1.0 / n);
        }
    }
}

/// A nontrivial pure root of -1: `ξ = μ cosh t + I ν sinh t` with `μ ⊥ ν`.
/// At `t = 0` this degenerates gracefully to a real unit pure.
pub fn root_of_minus_one(r: &mut impl Rng) -> Biquaternion {
    let mu = unit_pure_quaternion(r);
    let nu = perpendicular_unit_pure(r, mu);
    let t: f64 = r.random_range(0.0..2.0);
    Biquaternion::from_parts(mu * t.cosh(), nu * t.sinh())
}

/// A nonzero nilpotent: `s(μ + Iν)` with `μ ⊥ ν` unit pures.
pub fn nilpotent(r: &mut impl Rng) -> Biquaternion {
    let mu = unit_pure_quaternion(r);
    let nu = perpendicular_unit_pure(r, mu);
    let s = r.random_range(0.2..2.0) * if r.random_range(0..2) == 0 { 1.0 } else { -1.0 };
    Biquaternion::from_parts(mu * s, nu * s)
}

/// A divisor of zero, generally not pure: `a + I(au)` has equal-length
/// orthogonal parts for any quaternion `a` and unit pure `u`.
pub fn divisor_of_zero(r: &mut impl Rng) -> Biquaternion {
    let a = loop {
        let a = quaternion(r);
        if a.modulus() > 0.3 {
            break a;
        }
    };
    let u = unit_pure_quaternion(r);
    Biquaternion::from_parts(a, a * u)
}

/// A biquaternion bounded away from the divisor-of-zero cone, hence
/// comfortably invertible.
pub fn invertible(r: &mut impl Rng) -> Biquaternion {
    loop {
        let q = biquaternion(r);
        if q.semi_norm().abs() > 1e-2 * q.euclid_norm_sq() {
            return q;
        }
    }
}

/// A pure biquaternion bounded away from the nilpotent cone, so it has a
/// usable axis.
pub fn pure_non_nilpotent(r: &mut impl Rng) -> Biquaternion {
    loop {
        let v = biquaternion(r).vector_part();
        let b2 = v.x * v.x + v.y * v.y + v.z * v.z;
        if b2.abs() > 1e-2 * v.euclid_norm_sq() {
            return v;
        }
    }
}

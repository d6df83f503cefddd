//! Shared oracles for the integration suites: the transcribed basis product
//! grid and seeded samplers whose components stay in fixed ranges.

#![allow(dead_code)]

use biquat::{BasisElement, Biquaternion, Quaternion};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The expected 8x8 basis product grid, transcribed by hand: row element
/// times column element in the order `1, iI, jI, kI, i, j, k, I`.
pub const BASIS_TABLE: [[&str; 8]; 8] = [
    ["1", "iI", "jI", "kI", "i", "j", "k", "I"],
    ["iI", "1", "-k", "j", "-I", "kI", "-jI", "-i"],
    ["jI", "k", "1", "-i", "-kI", "-I", "iI", "-j"],
    ["kI", "-j", "i", "1", "jI", "-iI", "-I", "-k"],
    ["i", "-I", "kI", "-jI", "-1", "k", "-j", "iI"],
    ["j", "-kI", "-I", "iI", "-k", "-1", "i", "jI"],
    ["k", "jI", "-iI", "-I", "j", "-i", "-1", "kI"],
    ["I", "-i", "-j", "-k", "iI", "jI", "kI", "-1"],
];

/// Decodes a table cell like `-jI` into the exact biquaternion it denotes.
pub fn cell_value(cell: &str) -> Biquaternion {
    let (sign, symbol) = match cell.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, cell),
    };
    let element = BasisElement::ALL
        .into_iter()
        .find(|e| e.symbol() == symbol)
        .unwrap_or_else(|| panic!("unknown basis symbol {symbol:?}"));
    element.biquaternion() * sign
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    biquat::sample::rng(seed, stream)
}

/// A biquaternion with all eight real components uniform in [-1, 1].
pub fn uniform_unit_box(r: &mut ChaCha8Rng) -> Biquaternion {
    Biquaternion::from_reals(std::array::from_fn(|_| r.random_range(-1.0..=1.0)))
}

/// A quaternion with components uniform in [-1, 1].
pub fn uniform_quaternion(r: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        r.random_range(-1.0..=1.0),
        r.random_range(-1.0..=1.0),
        r.random_range(-1.0..=1.0),
        r.random_range(-1.0..=1.0),
    )
}

/// A unit pure quaternion, rejection-sampled away from the origin.
pub fn unit_axis(r: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let v = Quaternion::pure(
            r.random_range(-1.0..=1.0),
            r.random_range(-1.0..=1.0),
            r.random_range(-1.0..=1.0),
        );
        let m = v.modulus();
        if m > 0.2 {
            return v * (1.0 / m);
        }
    }
}

/// A constructed divisor of zero `a + I(a·u)` with `u` a unit pure axis;
/// `a` is rejection-sampled to keep the divisor well away from zero.
pub fn constructed_divisor(r: &mut ChaCha8Rng) -> Biquaternion {
    let u = unit_axis(r);
    loop {
        let a = uniform_quaternion(r);
        if a.modulus() > 0.3 {
            return Biquaternion::from_parts(a, a * u);
        }
    }
}

pub fn max_abs_diff(a: Biquaternion, b: Biquaternion) -> f64 {
    (a - b).euclid_norm()
}

pub fn rel_diff(a: Biquaternion, b: Biquaternion) -> f64 {
    (a - b).euclid_norm() / 1.0_f64.max(a.euclid_norm()).max(b.euclid_norm())
}

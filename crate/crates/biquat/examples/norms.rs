//! The complex semi-norm, its square root, and the real norm built on top.

use biquat::{Biquaternion, Quaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let p = Biquaternion::from_parts(Quaternion::new(1.0, 0.0, 2.0, 0.0), Quaternion::K);
    let q = Biquaternion::from_parts(Quaternion::I, Quaternion::new(0.5, 0.0, 0.0, -1.0));

    // the semi-norm q q̄ is a complex number, not a length
    println!("p          = {p}");
    println!("semi(p)    = {}", p.semi_norm());
    println!("modulus(p) = {}", p.modulus());
    println!("real(p)    = {}", p.real_norm());
    assert!((p * p.conj()).approx_eq(Biquaternion::from_complex(p.semi_norm()), tol));

    // multiplicative, like the quaternion norm it generalizes
    let lhs = (p * q).semi_norm();
    let rhs = p.semi_norm() * q.semi_norm();
    println!("\nsemi(pq)       = {lhs}");
    println!("semi(p)semi(q) = {rhs}");
    assert!(lhs.approx_eq(rhs, tol));
    assert!(((p * q).real_norm() - p.real_norm() * q.real_norm()).abs() < 1e-9);

    // |semi| splits across the two real quaternion parts:
    // Re = ||q_r|| - ||q_i||, Im = 2<q_r, q_i>
    let s = q.semi_norm();
    let re = q.real_part().norm() - q.imag_part().norm();
    let im = 2.0 * q.real_part().dot(q.imag_part());
    println!("\nsemi(q) = {s}, recomputed from the parts: {re} + {im} I");
    assert!((s.re - re).abs() < 1e-12 && (s.im - im).abs() < 1e-12);

    // a vanishing semi-norm is exactly the zero-divisor condition
    let d = Biquaternion::from_parts(Quaternion::I, Quaternion::J);
    println!("\nd = {d}: semi(d) = {}, real(d) = {}", d.semi_norm(), d.real_norm());
    assert_eq!(d.semi_norm().abs(), 0.0);
    assert!(biquat::special::is_divisor_of_zero(d, tol));
    assert!(d.euclid_norm() > 0.0, "Euclidean length still sees it");
}

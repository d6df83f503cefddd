//! Two polar decompositions of the same value: complex modulus around a
//! pure axis, or quaternion modulus around the commuting unit I.

use biquat::repr::{complex_polar, hamilton_polar};
use biquat::{Biquaternion, Complex, Quaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();

    // q = R e^{xi Theta}: R and Theta complex, xi a root of -1
    let q = Biquaternion::from_parts(Quaternion::I, Quaternion::scalar(2.0));
    let h = hamilton_polar(q, tol).unwrap();
    println!("q = {q}");
    println!("  R = {}, Theta = {}, xi = {}", h.modulus, h.angle, h.axis);
    println!("  radius |R| = {:.6}, phase arg R = {:.6}", h.radius, h.phase);
    assert!(h.reconstruct().approx_eq(q, tol));

    // q = Q e^{I Psi}: Q and Psi real quaternions
    let p = Biquaternion::from_parts(Quaternion::scalar(2.0), Quaternion::I);
    let c = complex_polar(p, tol).unwrap();
    println!("\np = {p}");
    println!("  Q = {}, Psi = {}", c.modulus, c.angle);
    println!("  radius |Q| = {:.6}, theta = {:.6}, axis = {}", c.radius, c.theta, c.axis);
    assert!(c.reconstruct().approx_eq(p, tol));

    // both radii are the same number: |semi-norm|^(1/2)
    let r = Biquaternion::from_reals([1.0, 0.5, -2.0, 0.0, 3.0, 0.0, 1.0, -0.25]);
    let h = hamilton_polar(r, tol).unwrap();
    let c = complex_polar(r, tol).unwrap();
    println!("\nshared radius on a generic value: {:.9} vs {:.9}", h.radius, c.radius);
    assert!((h.radius - c.radius).abs() < 1e-9);
    assert!((h.radius - r.semi_norm().abs().sqrt()).abs() < 1e-9);

    // the exponential merges both angles back into the value
    let exp = biquat::repr::exp(
        Biquaternion::from_complex(Complex::new(0.0, h.phase)) + h.axis.scale(h.angle),
        tol,
    )
    .unwrap();
    assert!(exp.scale(Complex::new(h.radius, 0.0)).approx_eq(r, tol));
    println!("r == |R| exp(I phase + xi Theta) confirmed");

    // zero divisors have |semi| = 0: no polar form exists
    let d = Biquaternion::ONE + Biquaternion::from_parts(Quaternion::ZERO, Quaternion::I);
    match hamilton_polar(d, tol) {
        Err(e) => println!("\n{d} has no polar form: {e}"),
        Ok(_) => unreachable!(),
    }
    assert!(complex_polar(d, tol).is_err());
}

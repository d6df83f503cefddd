//! Products, inverses, and the elements that refuse to be inverted.

use biquat::{Biquaternion, Complex, Quaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();

    let p = Biquaternion::from_parts(Quaternion::new(1.0, 2.0, 0.0, 0.0), Quaternion::K);
    let q = Biquaternion::new(
        Complex::new(0.5, -1.0),
        Complex::ZERO,
        Complex::ONE,
        Complex::new(0.0, 2.0),
    );
    println!("p      = {p}");
    println!("q      = {q}");
    println!("p + q  = {}", p + q);
    println!("p * q  = {}", p * q);
    println!("q * p  = {}", q * p);
    assert!(p * q != q * p, "generic elements do not commute");

    // the commuting unit I, as a value: scaling by I maps i -> iI and so on
    let capital_i = Biquaternion::from_complex(Complex::I);
    println!("I * p  = {}", capital_i * p);
    assert_eq!(capital_i * p, p * capital_i);

    let inv = p.inverse(tol).unwrap();
    println!("p^-1   = {inv}");
    println!("p p^-1 = {}", p * inv);
    assert!((p * inv).approx_eq(Biquaternion::ONE, tol));

    // powers reuse the inverse for negative exponents
    let cube = p.powi(3, tol).unwrap();
    assert!(cube.approx_eq(p * p * p, tol));
    assert!(p.powi(-1, tol).unwrap().approx_eq(inv, tol));

    // i + Ij is nonzero yet squares to zero, so it cannot have an inverse
    let n = Biquaternion::from_parts(Quaternion::I, Quaternion::J);
    println!("n      = {n}");
    println!("n * n  = {}", n * n);
    match n.inverse(tol) {
        Err(e) => println!("n^-1   : {e}"),
        Ok(_) => unreachable!("a zero divisor must not invert"),
    }
}

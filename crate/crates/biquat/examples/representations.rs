//! One value, four ways to write it down, and the exact roads back.

use biquat::repr::{to_cayley_dickson, to_complex_form_i, to_complex_form_ii, to_symplectic};
use biquat::{Biquaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let q = Biquaternion::from_reals([1.0, 0.5, -2.0, 0.0, 3.0, 0.0, 1.0, -0.25]);
    println!("q = {q}\n");

    // A + xi B: complex scalar plus complex length along a pure axis
    let f = to_complex_form_i(q, tol).unwrap();
    println!("scalar + axis:   A = {}, B = {}, xi = {}", f.a, f.b, f.xi);
    assert!(f.reconstruct().approx_eq(q, tol));
    assert!((f.xi * f.xi).approx_eq(-Biquaternion::ONE, tol), "the axis is a root of -1");

    // q_r + I q_i: two real quaternions
    let f = to_complex_form_ii(q);
    println!("real + imag:     q_r = {}, q_i = {}", f.qr, f.qi);
    assert_eq!(f.reconstruct(), q);

    // (w + x i) + (y + z i) j: complex pairs around a right factor of j
    let f = to_cayley_dickson(q);
    println!("pair form:       c1 = ({}, {}), c2 = ({}, {})", f.c1.0, f.c1.1, f.c2.0, f.c2.1);
    assert_eq!(f.reconstruct(), q);

    // (alpha + mu beta) + I (gamma + nu delta): scalar/length/axis per part
    let f = to_symplectic(q, tol);
    println!(
        "split polar:     alpha = {}, beta = {:.4}, mu = {}\n                 gamma = {}, delta = {:.4}, nu = {}",
        f.alpha, f.beta, f.mu, f.gamma, f.delta, f.nu
    );
    assert!(f.reconstruct().approx_eq(q, tol));
    assert!(f.beta >= 0.0 && f.delta >= 0.0, "lengths are nonnegative, axes carry the sign");

    // a real scalar has no vector direction; the axis defaults to i and says so
    let f = to_symplectic(Biquaternion::from_real(2.0), tol);
    assert!(f.mu_defaulted && f.nu_defaulted);
    println!("\ndegenerate input 2: mu and nu default to {} (flagged)", f.mu);
}

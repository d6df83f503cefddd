//! Roots of -1, idempotents, and nilpotents: the elements real quaternions
//! cannot supply, and the constructions that produce them on demand.

use biquat::special::{
    check_root_of_minus_one, classify, idempotent_from_divisor, make_idempotent, make_nilpotent,
    make_root, Sign,
};
use biquat::{Biquaternion, Complex, Quaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();

    // roots of -1: mu cosh(t) + I nu sinh(t) for perpendicular unit axes.
    // b^2 - d^2 = 1 keeps the square at exactly -1.
    let mu = Quaternion::I;
    let nu = Quaternion::J;
    let (b, d) = (1.25f64.cosh(), 1.25f64.sinh());
    let root = make_root(mu, nu, b, d, tol).unwrap();
    println!("root    = {root}");
    println!("root^2  = {}", root * root);
    let check = check_root_of_minus_one(root, tol);
    assert!(check.is_root());
    println!(
        "check   : pure={}, <q_r,q_i>={:+.1e}, ||q_r||-||q_i||={:.3}",
        check.is_pure, check.part_dot, check.norm_difference
    );

    // each root splits 1 into two complementary idempotents
    let plus = make_idempotent(root, Sign::Plus, tol).unwrap();
    let minus = make_idempotent(root, Sign::Minus, tol).unwrap();
    println!("\ne+      = {plus}");
    println!("e-      = {minus}");
    assert!((plus * plus).approx_eq(plus, tol));
    assert!((minus * minus).approx_eq(minus, tol));
    assert!((plus + minus).approx_eq(Biquaternion::ONE, tol));
    assert!((plus * minus).euclid_norm() < 1e-12, "complementary pair annihilates");

    // nilpotents: (mu + I nu) scaled by anything, perpendicular unit axes
    let n = make_nilpotent(mu, nu, Complex::new(2.0, -0.5), tol).unwrap();
    println!("\nn       = {n}");
    println!("n^2     = {}", n * n);
    assert_eq!(n * n, Biquaternion::ZERO);

    // any zero divisor with nonzero scalar part rescales to an idempotent
    let divisor = plus * 3.0;
    let back = idempotent_from_divisor(divisor, tol).unwrap();
    assert!(back.approx_eq(plus, tol));

    // the one-stop summary
    let c = classify(plus, tol);
    println!("\nclassify(e+): idempotent={}, divisor_of_zero={}", c.is_idempotent, c.is_divisor_of_zero);
    let c = classify(n, tol);
    println!("classify(n):  nilpotent={}, pure={}", c.is_nilpotent, c.is_pure);
}

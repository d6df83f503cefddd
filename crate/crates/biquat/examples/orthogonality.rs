//! Orthogonality comes in four strengths, depending on which of the four
//! real dot products inside `<p,q>` vanish on their own.

use biquat::metric::{classify_orthogonality, inner_product, orthogonal_companion, CompanionRecipe};
use biquat::{Biquaternion, Quaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();

    // self inner product = semi-norm
    let q = Biquaternion::from_parts(Quaternion::new(1.0, 2.0, 0.0, 0.0), Quaternion::K);
    assert!(inner_product(q, q).approx_eq(q.semi_norm(), tol));

    // each recipe builds a companion in its class. Strongest constrains the
    // input shape to p1 + I p1 i; the others just need enough interaction
    // between the real and imaginary parts to keep the single dots nonzero.
    let p1 = Quaternion::new(0.7, -0.3, 1.1, 0.4);
    let strongest_p = Biquaternion::from_parts(p1, p1 * Quaternion::I);
    let mixed = Biquaternion::from_parts(Quaternion::new(1.0, 2.0, 0.0, 0.0), Quaternion::ONE);
    let mixed2 = mixed + Biquaternion::from_parts(Quaternion::ZERO, Quaternion::J);
    for (recipe, p) in [
        (CompanionRecipe::Strongest, strongest_p),
        (CompanionRecipe::WeakerI, mixed),
        (CompanionRecipe::WeakerII, mixed),
        (CompanionRecipe::Weakest, mixed2),
    ] {
        let c = orthogonal_companion(p, recipe, tol).unwrap();
        let (class, b) = classify_orthogonality(p, c, tol);
        println!(
            "{recipe:?}: companion of {p} is {c}\n  class {:<14} dots rr={:+.3} ii={:+.3} ri={:+.3} ir={:+.3}",
            class.name(),
            b.rr,
            b.ii,
            b.ri,
            b.ir
        );
        assert!(class.is_orthogonal());
        assert!(inner_product(p, c).abs() < 1e-9);
        let expected = match recipe {
            CompanionRecipe::Strongest => "strongest",
            CompanionRecipe::WeakerI => "weaker-i",
            CompanionRecipe::WeakerII => "weaker-ii",
            CompanionRecipe::Weakest => "weakest",
        };
        assert_eq!(class.name(), expected, "these inputs realize each class exactly");
    }

    // non-orthogonal pairs report their evidence too
    let (class, b) = classify_orthogonality(q, q + Biquaternion::ONE, tol);
    println!("\nq vs q+1: class {}, total = {}", class.name(), b.total);
    assert!(!class.is_orthogonal());
}

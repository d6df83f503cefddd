//! The eight real directions carry the grade structure of 3-space geometric
//! algebra: scalar, vector (iI, jI, kI), bivector (i, j, k), pseudoscalar (I).

use biquat::geom::{
    compose, decompose, dual, grades_of_product, product_decomposition, wedge, Grade,
};
use biquat::{BasisElement, Biquaternion, Quaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();

    let q = Biquaternion::from_reals([1.0, 2.0, 0.0, 0.0, 0.0, 3.0, 0.0, -0.5]);
    let mv = decompose(q);
    println!("q = {q}");
    println!("  scalar {:?}  vector {:?}  bivector {:?}  pseudo {:?}", mv.scalar, mv.vector, mv.bivector, mv.pseudoscalar);
    println!("  grades present: {}", mv.grades(tol));
    assert_eq!(compose(mv), q);

    // the pseudoscalar is the product of the three vector directions
    let (e1, e2, e3) = (
        BasisElement::VecI.biquaternion(),
        BasisElement::VecJ.biquaternion(),
        BasisElement::VecK.biquaternion(),
    );
    assert_eq!(e1 * e2 * e3, BasisElement::Pseudo.biquaternion());
    println!("\n(iI)(jI)(kI) = I");

    // wedge of two vectors: antisymmetric, grade 2
    let u = Biquaternion::from_parts(Quaternion::ZERO, Quaternion::pure(1.0, 2.0, 0.0));
    let v = Biquaternion::from_parts(Quaternion::ZERO, Quaternion::pure(0.0, 1.0, -1.0));
    let w = wedge(u, v);
    println!("u ^ v = {w}");
    assert_eq!(wedge(v, u), -w);
    assert!(decompose(w).grades(tol).contains(Grade::Bivector));

    // multiplying by I swaps vector <-> bivector and scalar <-> pseudoscalar
    let d = dual(q);
    println!("dual(q) = {d}");
    assert_eq!(dual(d), -q, "double dual = multiplication by I^2");

    // which grades can a product land in
    for (g1, g2) in [
        (Grade::Vector, Grade::Vector),
        (Grade::Vector, Grade::Bivector),
        (Grade::Bivector, Grade::Pseudoscalar),
    ] {
        println!("{:?} * {:?} -> {}", g1, g2, grades_of_product(g1, g2));
    }

    // the product splits along scalar/vector lines, and for pure vectors
    // the vector-vector term is -<u,v> + u ^ v
    let pd = product_decomposition(u, v);
    assert_eq!(pd.sum(), u * v);
    let dot = biquat::metric::inner_product_pure(u, v, tol).unwrap();
    assert!((Biquaternion::from_complex(-dot) + w).approx_eq(pd.vv, tol));
    println!("\nuv = -<u,v> + u^v with <u,v> = {dot}");
}

//! The three conjugates, how they compose, and what they can extract.

use biquat::conj::{components_via_involutions, conjugate_via_involutions};
use biquat::{Biquaternion, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let q = Biquaternion::from_reals([1.0, -0.5, 2.0, 0.0, 3.0, 0.25, -1.0, 0.75]);
    println!("q    = {q}");
    println!("q̄    = {}   (vector flip)", q.conj());
    println!("q*   = {}   (coefficient conjugation)", q.complex_conj());
    println!("q̄*   = {}   (both)", q.total_conj());

    // the three commute pairwise and each is an involution
    assert_eq!(q.conj().complex_conj(), q.complex_conj().conj());
    assert_eq!(q.conj().complex_conj(), q.total_conj());
    assert_eq!(q.total_conj().total_conj(), q);
    assert_eq!(conjugate_via_involutions(q), q.conj());

    // over products: q̄ and q̄* reverse the factors, q* does not
    let p = Biquaternion::from_reals([0.0, 1.0, 0.0, -2.0, 0.5, 0.0, 1.5, 0.0]);
    assert!((p * q).conj().approx_eq(q.conj() * p.conj(), tol));
    assert!((p * q).total_conj().approx_eq(q.total_conj() * p.total_conj(), tol));
    assert!((p * q).complex_conj().approx_eq(p.complex_conj() * q.complex_conj(), tol));
    println!("\nconj(pq) = conj(q) conj(p)      reversing");
    println!("tot(pq)  = tot(q) tot(p)        reversing");
    println!("cc(pq)   = cc(p) cc(q)          order-preserving");

    // sums and differences of conjugates isolate each complex coefficient
    let (w, x, y, z) = components_via_involutions(q);
    println!("\nextracted coefficients: W = {w}, X = {x}, Y = {y}, Z = {z}");
    assert_eq!(Biquaternion::new(w, x, y, z), q);

    // quarter-sums sort the eight real coefficients into the four grades
    let parts = biquat::conj::geometric_parts_via_conjugates(q);
    println!("\ngrade split by conjugate quarter-sums:");
    println!("  scalar       = {}", parts.scalar);
    println!("  vector       = {}", parts.vector);
    println!("  bivector     = {}", parts.bivector);
    println!("  pseudoscalar = {}", parts.pseudoscalar);
    assert_eq!(parts.sum(), q);
}

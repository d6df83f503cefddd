//! Acceptance gate: one test per shipped claim, each printing a PASS line.
//! Oracles are independent of the code under test: the basis grid is a hand
//! transcription, grade sets are re-derived through floating-point products,
//! and the polar worked examples are frozen closed-form values.

mod common;

use std::process::Command;
use std::time::Instant;

use biquat::conj::{components_via_involutions, conjugate_via_involutions};
use biquat::geom::{decompose, wedge, Grade, GradeSet};
use biquat::repr::{complex_polar, hamilton_polar};
use biquat::special::{
    is_idempotent, make_idempotent, make_nilpotent, make_root, normalize_pure, Sign,
};
use biquat::{basis_product, tables, BasisElement, Biquaternion, Complex, Quaternion, Tolerance};
use common::*;
use rand::Rng;

const TOL: Tolerance = Tolerance { abs_eps: 1e-12, rel_eps: 1e-9 };

#[test]
fn criterion_01_basis_products_match_the_transcribed_table() {
    for (ri, &row) in BasisElement::ALL.iter().enumerate() {
        for (ci, &col) in BasisElement::ALL.iter().enumerate() {
            let expected = cell_value(BASIS_TABLE[ri][ci]);
            let by_mul = row.biquaternion() * col.biquaternion();
            assert_eq!(by_mul, expected, "{} * {} (full product)", row, col);
            let (sign, element) = basis_product(row, col);
            let by_table = element.biquaternion() * sign as f64;
            assert_eq!(by_table, expected, "{} * {} (symbolic product)", row, col);
        }
    }
    println!("criterion 01 PASS: all 64 basis products match the transcribed grid exactly");
}

#[test]
fn criterion_02_conjugate_product_rule() {
    let mut worst2 = 0.0_f64;
    let mut worst5 = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(42, n);
        let (p, q) = (uniform_unit_box(r), uniform_unit_box(r));
        worst2 = worst2.max(max_abs_diff((p * q).conj(), q.conj() * p.conj()));

        let f: [Biquaternion; 5] = std::array::from_fn(|_| uniform_unit_box(r));
        let product = (((f[0] * f[1]) * f[2]) * f[3]) * f[4];
        let reversed = (((f[4].conj() * f[3].conj()) * f[2].conj()) * f[1].conj()) * f[0].conj();
        worst5 = worst5.max(max_abs_diff(product.conj(), reversed));
    }
    assert!(worst2 <= 1e-10, "pair rule residual {worst2:e}");
    assert!(worst5 <= 1e-10, "5-factor rule residual {worst5:e}");
    println!(
        "criterion 02 PASS: conjugate product rule residuals {worst2:.1e} (pairs) / {worst5:.1e} (5 factors)"
    );
}

#[test]
fn criterion_03_component_extraction_and_involution_conjugate() {
    let mut worst = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(43, n);
        let q = uniform_unit_box(r);
        let (w, x, y, z) = components_via_involutions(q);
        for (got, want) in [(w, q.w), (x, q.x), (y, q.y), (z, q.z)] {
            worst = worst.max((got - want).abs());
        }
        worst = worst.max(max_abs_diff(conjugate_via_involutions(q), q.conj()));
    }
    assert!(worst <= 1e-12, "involution residual {worst:e}");
    println!("criterion 03 PASS: involution component extraction residual {worst:.1e}");
}

#[test]
fn criterion_04_rule_of_the_norms_including_divisors() {
    let mut worst = 0.0_f64;
    let mut worst_divisor_norm = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(44, n);
        let p = uniform_unit_box(r);
        let q = if n < 1_000 { constructed_divisor(r) } else { uniform_unit_box(r) };
        let lhs = (p * q).semi_norm();
        let rhs = p.semi_norm() * q.semi_norm();
        worst = worst.max((lhs - rhs).abs() / 1.0_f64.max(lhs.abs()).max(rhs.abs()));
        if n < 1_000 {
            worst_divisor_norm = worst_divisor_norm.max(lhs.abs());
        }
    }
    assert!(worst <= 1e-9, "rule of the norms residual {worst:e}");
    assert!(worst_divisor_norm <= 1e-10, "divisor product semi-norm {worst_divisor_norm:e}");
    println!(
        "criterion 04 PASS: rule of the norms residual {worst:.1e}, divisor products at {worst_divisor_norm:.1e}"
    );
}

#[test]
fn criterion_05_norm_splits_by_parts() {
    let mut worst = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(45, n);
        let q = uniform_unit_box(r);
        let semi = q.semi_norm();
        let (qr, qi) = (q.real_part(), q.imag_part());
        worst = worst.max((semi.re - (qr.norm() - qi.norm())).abs());
        worst = worst.max((semi.im - 2.0 * qr.dot(qi)).abs());
    }
    assert!(worst <= 1e-10, "norm split residual {worst:e}");
    println!("criterion 05 PASS: real/imaginary norm split residual {worst:.1e}");
}

#[test]
fn criterion_06_complex_conjugate_commutation() {
    let mut worst = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(46, n);
        let q = uniform_unit_box(r);
        let cc = q.complex_conj();
        worst = worst.max(max_abs_diff((q * cc).complex_conj(), cc * q));
    }
    assert!(worst <= 1e-10, "conjugate-pair relation residual {worst:e}");

    // the three classes that commute outright: real quaternions, imaginary
    // biquaternions, and parts sharing a common axis
    let mut worst_exc = 0.0_f64;
    for class in 0..3 {
        for n in 0..1_000 {
            let r = &mut rng(47 + class, n);
            let q = match class {
                0 => Biquaternion::from_parts(uniform_quaternion(r), Quaternion::ZERO),
                1 => Biquaternion::from_parts(Quaternion::ZERO, uniform_quaternion(r)),
                _ => {
                    let axis = unit_axis(r);
                    let (a, b): (f64, f64) =
                        (r.random_range(-1.0..=1.0), r.random_range(-1.0..=1.0));
                    let (c, d): (f64, f64) =
                        (r.random_range(-1.0..=1.0), r.random_range(-1.0..=1.0));
                    Biquaternion::from_parts(
                        Quaternion::new(a, 0.0, 0.0, 0.0) + axis * b,
                        Quaternion::new(c, 0.0, 0.0, 0.0) + axis * d,
                    )
                }
            };
            let cc = q.complex_conj();
            worst_exc = worst_exc.max(max_abs_diff(q * cc, cc * q));
        }
    }
    assert!(worst_exc <= 1e-10, "exception class residual {worst_exc:e}");
    println!(
        "criterion 06 PASS: conjugate commutation residual {worst:.1e}, exception classes {worst_exc:.1e}"
    );
}

#[test]
fn criterion_07_roots_of_minus_one() {
    let mut worst_square = 0.0_f64;
    let mut worst_constraints = 0.0_f64;
    let mut worst_unit = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(48, n);

        // constructed roots square to -1
        let mu = unit_axis(r);
        let nu = {
            // orthogonalize a second axis against mu
            loop {
                let v = unit_axis(r);
                let w = v - mu * v.dot(mu);
                if w.modulus() > 0.2 {
                    break w * (1.0 / w.modulus());
                }
            }
        };
        let d: f64 = r.random_range(-1.5..=1.5);
        let b = (1.0 + d * d).sqrt();
        let root = make_root(mu, nu, b, d, TOL).expect("constructed inputs are valid");
        worst_square = worst_square.max(max_abs_diff(root * root, -Biquaternion::ONE));

        // normalized pures satisfy both defining constraints
        let pure = biquat::sample::pure_non_nilpotent(r);
        let xi = normalize_pure(pure, TOL).expect("sampler avoids nilpotents");
        let (re, im) = (xi.real_part(), xi.imag_part());
        worst_constraints = worst_constraints.max(re.dot(im).abs());
        worst_constraints = worst_constraints.max((re.norm() - im.norm() - 1.0).abs());

        // any invertible element over its modulus has unit semi-norm
        let q = biquat::sample::invertible(r);
        let unit = q.scale(q.modulus().recip());
        worst_unit = worst_unit.max((unit.semi_norm() - Complex::ONE).abs());
    }
    assert!(worst_square <= 1e-10, "root square residual {worst_square:e}");
    assert!(worst_constraints <= 1e-9, "root constraint residual {worst_constraints:e}");
    assert!(worst_unit <= 1e-9, "unit semi-norm residual {worst_unit:e}");
    println!(
        "criterion 07 PASS: root squares {worst_square:.1e}, constraints {worst_constraints:.1e}, unit semi-norm {worst_unit:.1e}"
    );
}

#[test]
fn criterion_08_idempotents_and_nilpotents() {
    let mut worst_idem = 0.0_f64;
    let mut worst_nil = 0.0_f64;
    for n in 0..10_000 {
        let r = &mut rng(49, n);
        let xi = biquat::sample::root_of_minus_one(r);
        let sign = if n % 2 == 0 { Sign::Plus } else { Sign::Minus };
        let e = make_idempotent(xi, sign, TOL).expect("sampled a root");
        worst_idem = worst_idem.max(max_abs_diff(e * e, e));

        let mu = biquat::sample::unit_pure_quaternion(r);
        let nu = biquat::sample::perpendicular_unit_pure(r, mu);
        let scale = Complex::new(r.random_range(-1.0..=1.0), r.random_range(-1.0..=1.0));
        if scale.abs() > 0.1 {
            let nil = make_nilpotent(mu, nu, scale, TOL).expect("constructed inputs are valid");
            worst_nil = worst_nil.max((nil * nil).euclid_norm());
        }
    }
    assert!(worst_idem <= 1e-10, "idempotent square residual {worst_idem:e}");
    assert!(worst_nil <= 1e-10, "nilpotent square residual {worst_nil:e}");

    // no false positives: random elements are never within tolerance
    let search_tol = Tolerance { abs_eps: 1e-9, rel_eps: 1e-9 };
    let mut checked = 0_u32;
    for n in 0..100_000 {
        let r = &mut rng(50, n);
        let q = biquat::sample::biquaternion(r);
        if max_abs_diff(q * q, q) <= 1e-3 {
            continue; // an accidental near-idempotent is not a valid probe
        }
        checked += 1;
        assert!(!is_idempotent(q, search_tol), "false positive at sample {n}: {q}");
    }
    assert!(checked >= 99_000, "the search space collapsed: only {checked} probes");
    println!(
        "criterion 08 PASS: idempotent squares {worst_idem:.1e}, nilpotent squares {worst_nil:.1e}, {checked} probes without a false positive"
    );
}

#[test]
fn criterion_09_polar_roundtrips() {
    let mut worst_h = 0.0_f64;
    let mut worst_c = 0.0_f64;
    let mut worst_r = 0.0_f64;
    let mut kept = 0_u32;
    for n in 0..10_000 {
        let r = &mut rng(51, n);
        let q = biquat::sample::biquaternion(r);
        if q.semi_norm().abs() <= 1e-6 * q.euclid_norm_sq() {
            continue; // too close to the divisor cone for either polar form
        }
        kept += 1;
        let h = hamilton_polar(q, TOL).expect("rejected the divisor cone");
        let c = complex_polar(q, TOL).expect("rejected the divisor cone");
        worst_h = worst_h.max(max_abs_diff(h.reconstruct(), q) / q.euclid_norm());
        worst_c = worst_c.max(max_abs_diff(c.reconstruct(), q) / q.euclid_norm());
        worst_r = worst_r.max((h.radius - c.radius).abs());
    }
    assert!(kept >= 9_900, "rejection removed too many samples: {kept}");
    assert!(worst_h <= 1e-8, "scalar-axis polar roundtrip residual {worst_h:e}");
    assert!(worst_c <= 1e-8, "complex-phase polar roundtrip residual {worst_c:e}");
    assert!(worst_r <= 1e-9, "shared radius residual {worst_r:e}");

    // worked example 1: i + 2I
    let q1 = BasisElement::BivI.biquaternion() + BasisElement::Pseudo.biquaternion() * 2.0;
    let h = hamilton_polar(q1, TOL).unwrap();
    let s3 = 3.0_f64.sqrt();
    assert!((h.modulus - Complex::new(0.0, s3)).abs() <= 1e-12);
    assert!((h.angle - Complex::new(0.0, -s3.ln())).abs() <= 1e-12);
    assert!(max_abs_diff(h.axis, BasisElement::BivI.biquaternion()) <= 1e-12);
    assert!((h.radius - s3).abs() <= 1e-12);
    assert!(max_abs_diff(h.reconstruct(), q1) <= 1e-12);

    // worked example 2: 2 + Ii
    let q2 = Biquaternion::from_real(2.0) + BasisElement::VecI.biquaternion();
    let c = complex_polar(q2, TOL).unwrap();
    assert!((c.modulus - Quaternion::new(s3, 0.0, 0.0, 0.0)).modulus() <= 1e-12);
    assert!((c.angle - Quaternion::pure(0.5_f64.atanh(), 0.0, 0.0)).modulus() <= 1e-12);
    assert!((c.radius - s3).abs() <= 1e-12);
    assert!(max_abs_diff(c.reconstruct(), q2) <= 1e-12);

    println!(
        "criterion 09 PASS: polar roundtrips {worst_h:.1e} / {worst_c:.1e}, radii agree to {worst_r:.1e}, worked examples exact to 1e-12"
    );
}

#[test]
fn criterion_10_geometric_suite() {
    // the pseudoscalar factors into the three vector directions, exactly
    let (vi, vj, vk) = (
        BasisElement::VecI.biquaternion(),
        BasisElement::VecJ.biquaternion(),
        BasisElement::VecK.biquaternion(),
    );
    assert_eq!((vi * vj) * vk, BasisElement::Pseudo.biquaternion());

    // wedge grade rules on every ordered perpendicular pair of unit axes
    let axes = [Quaternion::I, Quaternion::J, Quaternion::K];
    for &u in &axes {
        for &v in &axes {
            if u == v {
                continue;
            }
            let cross = (u * v - v * u) * 0.5;
            let vec_u = Biquaternion::from_parts(Quaternion::ZERO, u);
            let vec_v = Biquaternion::from_parts(Quaternion::ZERO, v);
            let biv_u = Biquaternion::from_quaternion(u);
            let biv_v = Biquaternion::from_quaternion(v);
            assert_eq!(wedge(vec_u, vec_v), Biquaternion::from_quaternion(-cross));
            assert_eq!(wedge(vec_u, biv_v), Biquaternion::from_parts(Quaternion::ZERO, cross));
            assert_eq!(wedge(biv_u, vec_v), Biquaternion::from_parts(Quaternion::ZERO, cross));
            assert_eq!(wedge(biv_u, biv_v), Biquaternion::from_quaternion(cross));
        }
    }

    // grade composition re-derived through floating-point products
    for g1 in Grade::ALL {
        for g2 in Grade::ALL {
            let mut expected = GradeSet::EMPTY;
            for e1 in BasisElement::ALL.into_iter().filter(|e| e.grade() == g1) {
                for e2 in BasisElement::ALL.into_iter().filter(|e| e.grade() == g2) {
                    let m = decompose(e1.biquaternion() * e2.biquaternion());
                    if m.scalar != 0.0 {
                        expected.insert(Grade::Scalar);
                    }
                    if m.bivector != [0.0; 3] {
                        expected.insert(Grade::Bivector);
                    }
                    if m.vector != [0.0; 3] {
                        expected.insert(Grade::Vector);
                    }
                    if m.pseudoscalar != 0.0 {
                        expected.insert(Grade::Pseudoscalar);
                    }
                }
            }
            assert_eq!(
                biquat::geom::grades_of_product(g1, g2),
                expected,
                "grade set for {g1} * {g2}"
            );
        }
    }

    // exactly one discrepancy against the conventional table, up to symmetry
    let discrepancies = tables::grade_table_discrepancies();
    assert_eq!(discrepancies.len(), 2);
    let mut cells: Vec<(char, char)> =
        discrepancies.iter().map(|(a, b, _, _)| (a.letter(), b.letter())).collect();
    cells.sort();
    assert_eq!(cells, vec![('B', 'V'), ('V', 'B')]);
    for (_, _, derived, conventional) in &discrepancies {
        assert_eq!(*derived, GradeSet::of(&[Grade::Vector, Grade::Pseudoscalar]));
        assert_eq!(*conventional, GradeSet::of(&[Grade::Bivector, Grade::Pseudoscalar]));
    }
    let rendered = tables::render_grade_table();
    assert_eq!(rendered.matches("note:").count(), 2);

    println!(
        "criterion 10 PASS: pseudoscalar product exact, wedge grades exact, grade table re-derived, one discrepancy (B, V) up to symmetry"
    );
}

#[test]
fn criterion_11_cli_behavior() {
    let bin = env!("CARGO_BIN_EXE_biquat");

    // the full verify run: under ten seconds, exit 0, reproducible stdout
    let start = Instant::now();
    let run1 = Command::new(bin)
        .args(["verify", "--seed", "42", "--samples", "10000"])
        .output()
        .expect("spawn verify");
    let elapsed = start.elapsed();
    assert!(run1.status.success(), "verify failed: {}", String::from_utf8_lossy(&run1.stdout));
    assert!(elapsed.as_secs_f64() < 10.0, "verify took {elapsed:?}");
    let text = String::from_utf8(run1.stdout.clone()).unwrap();
    assert!(text.contains("identities passed"));
    assert!(!text.contains("FAIL"));
    let run2 = Command::new(bin)
        .args(["verify", "--seed", "42", "--samples", "10000"])
        .output()
        .expect("spawn verify");
    assert_eq!(run1.stdout, run2.stdout, "verify stdout is not reproducible");

    // canonical zero
    let eval = Command::new(bin).args(["eval", "(i+Ij)^2"]).output().expect("spawn eval");
    assert!(eval.status.success());
    assert_eq!(String::from_utf8(eval.stdout).unwrap(), "0\n");

    // syntax error corpus: column numbers and exit code 2
    let corpus = [
        ("conj(", 6),
        ("2 +", 4),
        ("2 3", 3),
        ("walrus(1)", 1),
        ("inner(1)", 1),
        ("conj 1", 6),
        ("(1 + i", 7),
        ("q", 1),
        ("2^i", 3),
        ("2.", 2),
    ];
    for (text, column) in corpus {
        let out = Command::new(bin).args(["eval", text]).output().expect("spawn eval");
        assert_eq!(out.status.code(), Some(2), "exit code for {text:?}");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert!(
            stderr.contains(&format!("syntax error at column {column}:")),
            "column report for {text:?}: {stderr}"
        );
    }

    println!(
        "criterion 11 PASS: verify ran in {:.2}s with reproducible output, canonical zero printed, 10-case syntax corpus reports columns",
        elapsed.as_secs_f64()
    );
}

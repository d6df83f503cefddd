//! Seeded numerical checking of the algebra's identities.
//!
//! Every identity draws its samples from a ChaCha8 stream keyed by
//! `(seed, identity index << 32 | sample index)`, so runs are reproducible
//! sample by sample and the rendered report is byte-identical across runs
//! with the same options. Residuals are relative: Euclidean distance divided
//! by `max(1, ‖lhs‖, ‖rhs‖)`.

use rand_chacha::ChaCha8Rng;

use crate::biquaternion::{BasisElement, Biquaternion};
use crate::complex::Complex;
use crate::conj::{
    components_via_involutions, conjugate_via_involutions, geometric_parts_via_conjugates,
    real_scalar_via_involutions,
};
use crate::geom::{decompose, dual, product_decomposition, wedge};
use crate::metric::{
    inner_breakdown, inner_product, inner_product_pure, orthogonal_companion, CompanionRecipe,
};
use crate::quaternion::Quaternion;
use crate::repr::{
    complex_polar, exp, hamilton_polar, to_cayley_dickson, to_complex_form_i, to_complex_form_ii,
    to_symplectic,
};
use crate::sample;
use crate::special::{is_root_of_minus_one, make_idempotent, normalize_pure, Sign};
use crate::tolerance::Tolerance;

/// One checkable law: a short name, the law as text, and a sampler returning
/// the relative residual for one random instance.
pub struct Identity {
    pub name: &'static str,
    pub law: &'static str,
    run: fn(&mut ChaCha8Rng) -> f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 42, samples: 10_000, tol: 1e-9 }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub name: &'static str,
    pub law: &'static str,
    pub samples: usize,
    pub max_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub options: VerifyOptions,
    pub identities: Vec<IdentityReport>,
    pub pass: bool,
}

const TOL: Tolerance = Tolerance { abs_eps: 1e-12, rel_eps: 1e-9 };

fn residual(a: Biquaternion, b: Biquaternion) -> f64 {
    (a - b).euclid_norm() / 1.0_f64.max(a.euclid_norm()).max(b.euclid_norm())
}

fn complex_residual(a: Complex, b: Complex) -> f64 {
    (a - b).abs() / 1.0_f64.max(a.abs()).max(b.abs())
}

fn scalar_residual(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1.0_f64.max(a.abs()).max(b.abs())
}

/// Bounded away from the divisor cone and, unless the vector part is
/// negligible, from the nilpotent-vector cone; safe for both polar forms.
fn polar_friendly(r: &mut ChaCha8Rng) -> Biquaternion {
    loop {
        let q = sample::biquaternion(r);
        if q.semi_norm().abs() <= 1e-2 * q.euclid_norm_sq() {
            continue;
        }
        if q.real_part().modulus() <= 0.05 * q.euclid_norm() {
            continue;
        }
        let v = q.vector_part();
        let b2 = v.x * v.x + v.y * v.y + v.z * v.z;
        if v.is_zero(TOL) || b2.abs() > 1e-2 * v.euclid_norm_sq() {
            return q;
        }
    }
}

/// The list of checked identities, in report order.
pub fn identities() -> Vec<Identity> {
    vec![
        Identity {
            name: "mul-associative",
            law: "(pq)r = p(qr)",
            run: |r| {
                let (p, q, s) =
                    (sample::biquaternion(r), sample::biquaternion(r), sample::biquaternion(r));
                residual((p * q) * s, p * (q * s))
            },
        },
        Identity {
            name: "mul-distributive",
            law: "p(q + r) = pq + pr",
            run: |r| {
                let (p, q, s) =
                    (sample::biquaternion(r), sample::biquaternion(r), sample::biquaternion(r));
                residual(p * (q + s), p * q + p * s)
            },
        },
        Identity {
            name: "conj-product",
            law: "conj(pq) = conj(q) conj(p)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                residual((p * q).conj(), q.conj() * p.conj())
            },
        },
        Identity {
            name: "conj-product-5",
            law: "conj(pqstu) = conj(u) conj(t) conj(s) conj(q) conj(p)",
            run: |r| {
                let f: [Biquaternion; 5] = std::array::from_fn(|_| sample::biquaternion(r));
                let product = (((f[0] * f[1]) * f[2]) * f[3]) * f[4];
                let reversed =
                    (((f[4].conj() * f[3].conj()) * f[2].conj()) * f[1].conj()) * f[0].conj();
                residual(product.conj(), reversed)
            },
        },
        Identity {
            name: "cconj-product",
            law: "cconj(pq) = cconj(p) cconj(q)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                residual((p * q).complex_conj(), p.complex_conj() * q.complex_conj())
            },
        },
        Identity {
            name: "bconj-product",
            law: "bconj(pq) = bconj(q) bconj(p)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                residual((p * q).total_conj(), q.total_conj() * p.total_conj())
            },
        },
        Identity {
            name: "conj-involutive",
            law: "conj(conj(q)) = cconj(cconj(q)) = bconj(bconj(q)) = q",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(q.conj().conj(), q)
                    .max(residual(q.complex_conj().complex_conj(), q))
                    .max(residual(q.total_conj().total_conj(), q))
            },
        },
        Identity {
            name: "component-extraction",
            law: "W, X, Y, Z recovered from the four unit involutions of q",
            run: |r| {
                let q = sample::biquaternion(r);
                let (w, x, y, z) = components_via_involutions(q);
                complex_residual(w, q.w)
                    .max(complex_residual(x, q.x))
                    .max(complex_residual(y, q.y))
                    .max(complex_residual(z, q.z))
            },
        },
        Identity {
            name: "conj-via-involutions",
            law: "conj(q) = -(q + iqi + jqj + kqk)/2",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(conjugate_via_involutions(q), q.conj())
            },
        },
        Identity {
            name: "real-scalar-isolation",
            law: "w_r isolated by the involution sum of q and cconj(q)",
            run: |r| {
                let q = sample::biquaternion(r);
                scalar_residual(real_scalar_via_involutions(q), q.w.re)
            },
        },
        Identity {
            name: "quarter-sum-parts",
            law: "conjugate quarter-sums give the S, B, V, P parts",
            run: |r| {
                let q = sample::biquaternion(r);
                let parts = geometric_parts_via_conjugates(q);
                let mv = decompose(q);
                let [bx, by, bz] = mv.bivector;
                let [vx, vy, vz] = mv.vector;
                residual(parts.scalar, Biquaternion::from_real(mv.scalar))
                    .max(residual(parts.bivector, Biquaternion::from_quaternion(Quaternion::pure(bx, by, bz))))
                    .max(residual(
                        parts.vector,
                        Biquaternion::from_parts(Quaternion::ZERO, Quaternion::pure(vx, vy, vz)),
                    ))
                    .max(residual(
                        parts.pseudoscalar,
                        Biquaternion::from_complex(Complex::new(0.0, mv.pseudoscalar)),
                    ))
            },
        },
        Identity {
            name: "quarter-sums-recompose",
            law: "S + B + V + P = q",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(geometric_parts_via_conjugates(q).sum(), q)
            },
        },
        Identity {
            name: "cconj-commutation",
            law: "cconj(q) q = cconj(q cconj(q)) componentwise",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(q.complex_conj() * q, (q * q.complex_conj()).complex_conj())
            },
        },
        Identity {
            name: "semi-norm-product",
            law: "‖pq‖ = ‖p‖ ‖q‖ (complex semi-norm)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                complex_residual((p * q).semi_norm(), p.semi_norm() * q.semi_norm())
            },
        },
        Identity {
            name: "real-norm-product",
            law: "|pq| = |p| |q| (real norm)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                scalar_residual((p * q).real_norm(), p.real_norm() * q.real_norm())
            },
        },
        Identity {
            name: "norm-via-conjugate",
            law: "q conj(q) = ‖q‖ + 0 vector",
            run: |r| {
                let q = sample::biquaternion(r);
                let v = q * q.conj();
                complex_residual(v.scalar_part(), q.semi_norm())
                    .max(v.vector_part().euclid_norm() / q.euclid_norm_sq().max(1.0))
            },
        },
        Identity {
            name: "norm-re-im-split",
            law: "Re ‖q‖ = ‖q_r‖ - ‖q_i‖ and Im ‖q‖ = 2⟨q_r, q_i⟩",
            run: |r| {
                let q = sample::biquaternion(r);
                let semi = q.semi_norm();
                let (qr, qi) = (q.real_part(), q.imag_part());
                scalar_residual(semi.re, qr.norm() - qi.norm())
                    .max(scalar_residual(semi.im, 2.0 * qr.dot(qi)))
            },
        },
        Identity {
            name: "inner-self",
            law: "⟨q, q⟩ = ‖q‖",
            run: |r| {
                let q = sample::biquaternion(r);
                complex_residual(inner_product(q, q), q.semi_norm())
            },
        },
        Identity {
            name: "inner-breakdown",
            law: "⟨p, q⟩ = (rr - ii) + I(ri + ir)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                let b = inner_breakdown(p, q);
                let claim = Complex::new(b.rr - b.ii, b.ri + b.ir);
                let direct = ((p.conj() * q + q.conj() * p) * 0.5).scalar_part();
                complex_residual(direct, claim).max(complex_residual(inner_product(p, q), claim))
            },
        },
        Identity {
            name: "divisor-kills-norm",
            law: "‖pd‖ = 0 when d is a divisor of zero",
            run: |r| {
                let p = sample::biquaternion(r);
                let d = sample::divisor_of_zero(r);
                let pd = p * d;
                pd.semi_norm().abs() / pd.euclid_norm_sq().max(1.0)
            },
        },
        Identity {
            name: "companion-products",
            law: "⟨p, pu⟩ = 0 for u ∈ {i, Ii, i + Ij}",
            run: |r| {
                let p = sample::invertible(r);
                let mut worst = 0.0_f64;
                for recipe in
                    [CompanionRecipe::WeakerI, CompanionRecipe::WeakerII, CompanionRecipe::Weakest]
                {
                    let q = orthogonal_companion(p, recipe, TOL).expect("nonzero input");
                    let scale = (p.euclid_norm() * q.euclid_norm()).max(1.0);
                    worst = worst.max(inner_product(p, q).abs() / scale);
                }
                worst
            },
        },
        Identity {
            name: "companion-strongest",
            law: "p = p₁ + I p₁ i and q = p₁ j + I p₁ k have all four dots 0",
            run: |r| {
                let p1 = sample::quaternion(r);
                let p = Biquaternion::from_parts(p1, p1 * Quaternion::I);
                let q = Biquaternion::from_parts(p1 * Quaternion::J, p1 * Quaternion::K);
                let b = inner_breakdown(p, q);
                let scale = (p.euclid_norm() * q.euclid_norm()).max(1.0);
                b.rr.abs().max(b.ii.abs()).max(b.ri.abs()).max(b.ir.abs()) / scale
            },
        },
        Identity {
            name: "root-squares",
            law: "ξ² = -1 for sampled roots of -1",
            run: |r| {
                let xi = sample::root_of_minus_one(r);
                residual(xi * xi, -Biquaternion::ONE)
            },
        },
        Identity {
            name: "root-constraints",
            law: "Re ξ ⊥ Im ξ and ‖Re ξ‖ - ‖Im ξ‖ = 1",
            run: |r| {
                let xi = sample::root_of_minus_one(r);
                let (re, im) = (xi.real_part(), xi.imag_part());
                let scale = xi.euclid_norm_sq().max(1.0);
                (re.dot(im).abs() / scale).max(scalar_residual(re.norm() - im.norm(), 1.0))
            },
        },
        Identity {
            name: "normalize-pure",
            law: "normalize_pure(p)² = -1 for non-nilpotent pure p",
            run: |r| {
                let p = sample::pure_non_nilpotent(r);
                let xi = normalize_pure(p, TOL).expect("sampler avoids nilpotents");
                residual(xi * xi, -Biquaternion::ONE)
            },
        },
        Identity {
            name: "idempotent-squares",
            law: "(½ ± ½ξI)² = ½ ± ½ξI",
            run: |r| {
                let xi = sample::root_of_minus_one(r);
                let e = make_idempotent(xi, Sign::Plus, TOL).expect("sampled a root");
                residual(e * e, e)
            },
        },
        Identity {
            name: "idempotent-pair",
            law: "(½ + ½ξI)(½ - ½ξI) = 0",
            run: |r| {
                let xi = sample::root_of_minus_one(r);
                let plus = make_idempotent(xi, Sign::Plus, TOL).expect("sampled a root");
                let minus = make_idempotent(xi, Sign::Minus, TOL).expect("sampled a root");
                residual(plus * minus, Biquaternion::ZERO)
            },
        },
        Identity {
            name: "nilpotent-squares",
            law: "n² = 0 for sampled nilpotents",
            run: |r| {
                let n = sample::nilpotent(r);
                residual(n * n, Biquaternion::ZERO)
            },
        },
        Identity {
            name: "divisor-structure",
            law: "divisors satisfy ‖q_r‖ = ‖q_i‖ and ⟨q_r, q_i⟩ = 0",
            run: |r| {
                let d = sample::divisor_of_zero(r);
                let (dr, di) = (d.real_part(), d.imag_part());
                let scale = d.euclid_norm_sq().max(1.0);
                ((dr.norm() - di.norm()).abs() / scale).max(dr.dot(di).abs() / scale)
            },
        },
        Identity {
            name: "wedge-antisymmetric",
            law: "p∧q = -(q∧p)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                residual(wedge(p, q), -wedge(q, p))
            },
        },
        Identity {
            name: "wedge-grades",
            law: "V∧V is grade B; V∧B is grade V",
            run: |r| {
                let u = sample::unit_pure_quaternion(r);
                let v = sample::perpendicular_unit_pure(r, u);
                let cross = (u * v - v * u) * 0.5;
                let vec_u = Biquaternion::from_parts(Quaternion::ZERO, u);
                let vec_v = Biquaternion::from_parts(Quaternion::ZERO, v);
                let biv_v = Biquaternion::from_quaternion(v);
                residual(wedge(vec_u, vec_v), Biquaternion::from_quaternion(-cross)).max(residual(
                    wedge(vec_u, biv_v),
                    Biquaternion::from_parts(Quaternion::ZERO, cross),
                ))
            },
        },
        Identity {
            name: "dual-dual",
            law: "dual(dual(q)) = -q",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(dual(dual(q)), -q)
            },
        },
        Identity {
            name: "dual-central",
            law: "dual(q) = qI = Iq",
            run: |r| {
                let q = sample::biquaternion(r);
                let i = BasisElement::Pseudo.biquaternion();
                residual(dual(q), q * i).max(residual(dual(q), i * q))
            },
        },
        Identity {
            name: "product-decomposition",
            law: "pq = S(p)S(q) + S(p)V(q) + S(q)V(p) + V(p)V(q)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                residual(product_decomposition(p, q).sum(), p * q)
            },
        },
        Identity {
            name: "vector-product-split",
            law: "V(p)V(q) = -⟨V(p), V(q)⟩ + V(p)∧V(q)",
            run: |r| {
                let (p, q) = (sample::biquaternion(r), sample::biquaternion(r));
                let (vp, vq) = (p.vector_part(), q.vector_part());
                let sym = inner_product_pure(vp, vq, TOL).expect("vector parts are pure");
                let expected = Biquaternion::from_complex(-sym) + wedge(vp, vq);
                residual(product_decomposition(p, q).vv, expected)
            },
        },
        Identity {
            name: "pseudoscalar-triple",
            law: "(Ii)(Ij)(Ik) = I",
            run: |_| {
                let (ii, jj, kk) = (
                    BasisElement::VecI.biquaternion(),
                    BasisElement::VecJ.biquaternion(),
                    BasisElement::VecK.biquaternion(),
                );
                residual((ii * jj) * kk, BasisElement::Pseudo.biquaternion())
            },
        },
        Identity {
            name: "exp-series",
            law: "exp(q) matches the 20-term power series",
            run: |r| {
                let q = sample::small_biquaternion(r);
                let mut term = Biquaternion::ONE;
                let mut series = Biquaternion::ONE;
                for n in 1..20 {
                    term = term * q * (1.0 / n as f64);
                    series = series + term;
                }
                residual(exp(q, TOL).expect("bounded input"), series)
            },
        },
        Identity {
            name: "exp-nilpotent",
            law: "exp(n) = 1 + n for nilpotent n",
            run: |r| {
                let n = sample::nilpotent(r);
                residual(exp(n, TOL).expect("bounded input"), Biquaternion::ONE + n)
            },
        },
        Identity {
            name: "hamilton-roundtrip",
            law: "R(cos Θ + ξ sin Θ) = q",
            run: |r| {
                let q = polar_friendly(r);
                let h = hamilton_polar(q, TOL).expect("sampler avoids degenerate inputs");
                residual(h.reconstruct(), q)
            },
        },
        Identity {
            name: "complex-polar-roundtrip",
            law: "Q(cos Ψ + I sin Ψ) = q",
            run: |r| {
                let q = polar_friendly(r);
                let c = complex_polar(q, TOL).expect("sampler avoids divisors");
                residual(c.reconstruct(), q)
            },
        },
        Identity {
            name: "polar-radii-agree",
            law: "both polar forms share r = |q|",
            run: |r| {
                let q = polar_friendly(r);
                let h = hamilton_polar(q, TOL).expect("sampler avoids degenerate inputs");
                let c = complex_polar(q, TOL).expect("sampler avoids divisors");
                scalar_residual(h.radius, q.real_norm())
                    .max(scalar_residual(c.radius, q.real_norm()))
            },
        },
        Identity {
            name: "exp-angle-merge",
            law: "exp(Iφ) exp(ξΘ) = exp(Iφ + ξΘ)",
            run: |r| {
                let q = polar_friendly(r);
                let h = hamilton_polar(q, TOL).expect("sampler avoids degenerate inputs");
                let phase = Biquaternion::from_complex(Complex::new(h.phase.cos(), h.phase.sin()));
                let turn = exp(h.axis.scale(h.angle), TOL).expect("bounded angle");
                let merged = exp(
                    Biquaternion::from_complex(Complex::new(0.0, h.phase)) + h.axis.scale(h.angle),
                    TOL,
                )
                .expect("bounded angle");
                residual(phase * turn, merged)
            },
        },
        Identity {
            name: "regroup-roundtrips",
            law: "complex form II and the Cayley-Dickson pair reconstruct q",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(to_complex_form_ii(q).reconstruct(), q)
                    .max(residual(to_cayley_dickson(q).reconstruct(), q))
            },
        },
        Identity {
            name: "symplectic-roundtrip",
            law: "(α + μβ) + I(γ + νδ) = q",
            run: |r| {
                let q = sample::biquaternion(r);
                residual(to_symplectic(q, TOL).reconstruct(), q)
            },
        },
        Identity {
            name: "scalar-axis-roundtrip",
            law: "A + ξB = q with ξ² = -1",
            run: |r| {
                let q = polar_friendly(r);
                let f = to_complex_form_i(q, TOL).expect("sampler avoids nilpotent vectors");
                let mut worst = residual(f.reconstruct(), q);
                if !f.axis_defaulted {
                    worst = worst.max(residual(f.xi * f.xi, -Biquaternion::ONE));
                    debug_assert!(is_root_of_minus_one(f.xi, TOL));
                }
                worst
            },
        },
    ]
}

/// Runs every identity over `options.samples` seeded samples.
pub fn run(options: VerifyOptions) -> VerifyReport {
    let mut reports = Vec::new();
    let mut pass = true;
    for (idx, id) in identities().into_iter().enumerate() {
        let mut max_residual = 0.0_f64;
        for s in 0..options.samples {
            let mut r = sample::rng(options.seed, ((idx as u64) << 32) | s as u64);
            let res = (id.run)(&mut r);
            max_residual = if res.is_nan() { f64::INFINITY } else { max_residual.max(res) };
        }
        let ok = max_residual <= options.tol;
        pass &= ok;
        reports.push(IdentityReport {
            name: id.name,
            law: id.law,
            samples: options.samples,
            max_residual,
            pass: ok,
        });
    }
    VerifyReport { options, identities: reports, pass }
}

/// Deterministic text rendering; no timing information, so equal options
/// give byte-identical output.
pub fn render(report: &VerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "identity check: seed {}, samples {}, tolerance {:e}\n\n",
        report.options.seed, report.options.samples, report.options.tol
    ));
    let width = report.identities.iter().map(|i| i.name.len()).max().unwrap_or(0);
    for id in &report.identities {
        out.push_str(&format!(
            "{}  {:<width$}  max residual {:>8}  {}\n",
            if id.pass { "PASS" } else { "FAIL" },
            id.name,
            format!("{:.1e}", id.max_residual),
            id.law,
        ));
    }
    let passed = report.identities.iter().filter(|i| i.pass).count();
    out.push_str(&format!("\n{passed} of {} identities passed\n", report.identities.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions { seed: 42, samples: 60, tol: 1e-9 }
    }

    #[test]
    fn all_identities_pass_at_default_tolerance() {
        let report = run(quick());
        for id in &report.identities {
            assert!(id.pass, "{} failed with max residual {:e}", id.name, id.max_residual);
        }
        assert!(report.pass);
    }

    #[test]
    fn rendering_is_reproducible() {
        let a = render(&run(quick()));
        let b = render(&run(quick()));
        assert_eq!(a, b);
        assert!(a.contains("PASS"));
        assert!(a.ends_with("identities passed\n"));
    }

    #[test]
    fn impossible_tolerance_fails_inexact_identities() {
        let report = run(VerifyOptions { seed: 42, samples: 20, tol: 1e-300 });
        assert!(!report.pass);
        let line = render(&report);
        assert!(line.contains("FAIL"));
    }

    #[test]
    fn the_suite_is_broad() {
        assert!(identities().len() >= 30);
    }
}

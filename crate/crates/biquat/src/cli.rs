//! Command implementations behind the `biquat` binary.
//!
//! Each `cmd_*` function is a pure text-in, text-out wrapper so the binary
//! stays a thin argument parser and the behavior is testable in-process.
//! Exit codes: 0 success, 1 evaluation or domain error, 2 syntax error,
//! 3 verification failure.

use serde_json::json;

use crate::biquaternion::Biquaternion;
use crate::expr::{evaluate, ExprError};
use crate::geom::decompose;
use crate::repr::{
    complex_polar, hamilton_polar, to_cayley_dickson, to_complex_form_i, to_complex_form_ii,
    to_symplectic,
};
use crate::special::{classify, Classification};
use crate::tolerance::Tolerance;
use crate::verify::{render, run, VerifyOptions, VerifyReport};
use crate::{error::Error, tables};

const TOL: Tolerance = Tolerance { abs_eps: 1e-12, rel_eps: 1e-9 };

/// What a command produced, and how the process should report it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Exit 0, text on stdout.
    Success(String),
    /// Exit 1, text on stderr: the input parsed but could not be evaluated
    /// or represented (division by a divisor of zero, nilpotent axis, ...).
    EvalError(String),
    /// Exit 2, text on stderr: the input did not parse.
    SyntaxError(String),
    /// Exit 3, report on stdout: at least one identity exceeded tolerance.
    VerifyFailed(String),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Success(_) => 0,
            Outcome::EvalError(_) => 1,
            Outcome::SyntaxError(_) => 2,
            Outcome::VerifyFailed(_) => 3,
        }
    }

    pub fn text(&self) -> &str {
        match self {
            Outcome::Success(t)
            | Outcome::EvalError(t)
            | Outcome::SyntaxError(t)
            | Outcome::VerifyFailed(t) => t,
        }
    }

    /// True when the text belongs on stderr rather than stdout.
    pub fn is_error_output(&self) -> bool {
        matches!(self, Outcome::EvalError(_) | Outcome::SyntaxError(_))
    }
}

fn eval_text(text: &str) -> Result<Biquaternion, Outcome> {
    evaluate(text, TOL).map_err(|e| match e {
        ExprError::Syntax(s) => Outcome::SyntaxError(s.to_string()),
        ExprError::Eval(e) => Outcome::EvalError(e.to_string()),
    })
}

fn domain_error(e: Error) -> Outcome {
    Outcome::EvalError(format!("error: {e}"))
}

fn reals_json(q: Biquaternion) -> serde_json::Map<String, serde_json::Value> {
    let mut map = serde_json::Map::new();
    for (name, c) in [("w", q.w), ("x", q.x), ("y", q.y), ("z", q.z)] {
        map.insert(format!("{name}_re"), json!(c.re));
        map.insert(format!("{name}_im"), json!(c.im));
    }
    map
}

fn classification_flags(c: &Classification) -> [(&'static str, bool); 8] {
    [
        ("zero", c.is_zero),
        ("real_quaternion", c.is_real_quaternion),
        ("imaginary", c.is_imaginary),
        ("pure", c.is_pure),
        ("root_of_minus_one", c.is_root_of_minus_one),
        ("divisor_of_zero", c.is_divisor_of_zero),
        ("idempotent", c.is_idempotent),
        ("nilpotent", c.is_nilpotent),
    ]
}

pub fn cmd_eval(text: &str, json_out: bool) -> Outcome {
    let q = match eval_text(text) {
        Ok(q) => q,
        Err(o) => return o,
    };
    if json_out {
        Outcome::Success(serde_json::Value::Object(reals_json(q)).to_string())
    } else {
        Outcome::Success(q.to_string())
    }
}

pub fn cmd_classify(text: &str, json_out: bool) -> Outcome {
    let q = match eval_text(text) {
        Ok(q) => q,
        Err(o) => return o,
    };
    let c = classify(q, TOL);
    if json_out {
        let mut map = reals_json(q);
        for (name, flag) in classification_flags(&c) {
            map.insert(format!("is_{name}"), json!(flag));
        }
        return Outcome::Success(serde_json::Value::Object(map).to_string());
    }
    let mut lines = vec![format!("value: {q}")];
    for (name, flag) in classification_flags(&c) {
        lines.push(format!("{name}={flag}"));
    }
    Outcome::Success(lines.join("\n"))
}

/// The `--form` argument of `repr`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReprForm {
    Cartesian,
    ScalarVector,
    ComplexFormI,
    ComplexFormII,
    CayleyDickson,
    Symplectic,
    HamiltonPolar,
    ComplexPolar,
    Geometric,
}

impl ReprForm {
    pub const NAMES: [&'static str; 9] =
        ["cartesian", "sv", "cf1", "cf2", "cd", "sym", "hpolar", "cpolar", "geom"];

    pub fn parse(s: &str) -> Result<ReprForm, String> {
        match s {
            "cartesian" => Ok(ReprForm::Cartesian),
            "sv" => Ok(ReprForm::ScalarVector),
            "cf1" => Ok(ReprForm::ComplexFormI),
            "cf2" => Ok(ReprForm::ComplexFormII),
            "cd" => Ok(ReprForm::CayleyDickson),
            "sym" => Ok(ReprForm::Symplectic),
            "hpolar" => Ok(ReprForm::HamiltonPolar),
            "cpolar" => Ok(ReprForm::ComplexPolar),
            "geom" => Ok(ReprForm::Geometric),
            other => {
                Err(format!("unknown form `{other}`: expected one of {}", Self::NAMES.join(", ")))
            }
        }
    }
}

pub fn cmd_repr(text: &str, form: ReprForm) -> Outcome {
    let q = match eval_text(text) {
        Ok(q) => q,
        Err(o) => return o,
    };
    let rendered = match form {
        ReprForm::Cartesian => q.to_string(),
        ReprForm::ScalarVector => {
            format!("scalar: {}\nvector: {}", q.scalar_part(), q.vector_part())
        }
        ReprForm::ComplexFormI => match to_complex_form_i(q, TOL) {
            Err(e) => return domain_error(e),
            Ok(f) => {
                let mut s = format!(
                    "q = A + ξB with ξ² = -1\nA = {}\nB = {}\nξ = {}",
                    f.a, f.b, f.xi
                );
                if f.axis_defaulted {
                    s.push_str("\nnote: vector part is zero, axis defaults to i");
                }
                s
            }
        },
        ReprForm::ComplexFormII => {
            let f = to_complex_form_ii(q);
            format!("q = q_r + I q_i\nq_r = {}\nq_i = {}", f.qr, f.qi)
        }
        ReprForm::CayleyDickson => {
            let f = to_cayley_dickson(q);
            format!(
                "q = (c + di) + (e + fi)j\nc = {}\nd = {}\ne = {}\nf = {}",
                f.c1.0, f.c1.1, f.c2.0, f.c2.1
            )
        }
        ReprForm::Symplectic => {
            let f = to_symplectic(q, TOL);
            let mut s = format!(
                "q = (α + μβ) + I(γ + νδ) with μ, ν unit pure\nα = {}\nβ = {}\nμ = {}\nγ = {}\nδ = {}\nν = {}",
                f.alpha, f.beta, f.mu, f.gamma, f.delta, f.nu
            );
            if f.mu_defaulted {
                s.push_str("\nnote: real vector part is zero, μ defaults to i");
            }
            if f.nu_defaulted {
                s.push_str("\nnote: imaginary vector part is zero, ν defaults to i");
            }
            s
        }
        ReprForm::HamiltonPolar => match hamilton_polar(q, TOL) {
            Err(e) => return domain_error(e),
            Ok(h) => {
                let mut s = format!(
                    "q = R(cos Θ + ξ sin Θ)\nR = {}\nΘ = {}\nξ = {}\nr = {}\nφ = {}",
                    h.modulus, h.angle, h.axis, h.radius, h.phase
                );
                if h.axis_defaulted {
                    s.push_str("\nnote: vector part is zero, axis defaults to i");
                }
                s
            }
        },
        ReprForm::ComplexPolar => match complex_polar(q, TOL) {
            Err(e) => return domain_error(e),
            Ok(c) => {
                let mut s = format!(
                    "q = Q exp(IΨ), Q a real quaternion\nQ = {}\nΨ = {}\nr = {}\nΘ = {}\naxis = {}",
                    c.modulus, c.angle, c.radius, c.theta, c.axis
                );
                if c.axis_defaulted {
                    s.push_str("\nnote: Q is real, axis defaults to i");
                }
                s
            }
        },
        ReprForm::Geometric => {
            let m = decompose(q);
            format!(
                "S = {}\nB = [{}, {}, {}]\nV = [{}, {}, {}]\nP = {}",
                m.scalar,
                m.bivector[0],
                m.bivector[1],
                m.bivector[2],
                m.vector[0],
                m.vector[1],
                m.vector[2],
                m.pseudoscalar
            )
        }
    };
    Outcome::Success(rendered)
}

/// The table selected by `tables {--basis|--grades}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Basis,
    Grades,
}

pub fn cmd_tables(which: TableKind) -> Outcome {
    let text = match which {
        TableKind::Basis => tables::render_basis_table(),
        TableKind::Grades => tables::render_grade_table(),
    };
    Outcome::Success(text.trim_end_matches('\n').to_string())
}

fn verify_json(report: &VerifyReport) -> serde_json::Value {
    json!({
        "seed": report.options.seed,
        "samples": report.options.samples,
        "tolerance": report.options.tol,
        "pass": report.pass,
        "identities": report
            .identities
            .iter()
            .map(|i| {
                json!({
                    "name": i.name,
                    "law": i.law,
                    "samples": i.samples,
                    "max_residual": i.max_residual,
                    "pass": i.pass,
                })
            })
            .collect::<Vec<_>>(),
    })
}

/// Runs the identity suite. Stdout is a pure function of the options; the
/// binary reports wall time on stderr to keep it that way.
pub fn cmd_verify(options: VerifyOptions, json_out: bool) -> Outcome {
    let report = run(options);
    let text = if json_out {
        verify_json(&report).to_string()
    } else {
        render(&report).trim_end_matches('\n').to_string()
    };
    if report.pass {
        Outcome::Success(text)
    } else {
        Outcome::VerifyFailed(text)
    }
}

//! Error type shared by the fallible operations.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    /// A result component became non-finite.
    #[error("arithmetic overflow: a component is no longer finite")]
    Overflow,

    #[error("zero input where a nonzero value is required")]
    ZeroInput,

    /// Vanishing semi-norm. Such elements have no multiplicative inverse and
    /// no polar form.
    #[error("divisor of zero: ‖q_r‖ = ‖q_i‖ and ⟨q_r, q_i⟩ = 0, so the value is not invertible")]
    DivisorOfZero,

    /// The vector part is nonzero but its coefficient square sum vanishes,
    /// so no unit axis can be extracted.
    #[error("nilpotent vector part: X² + Y² + Z² = 0 while (X, Y, Z) ≠ 0, so the axis is undefined")]
    NilpotentVectorPart,

    /// Pure input whose modulus vanishes; it cannot be normalized.
    #[error("nilpotent input: the modulus is zero though the value is not")]
    NilpotentInput,

    /// Arctangent evaluated at its pole (scalar ≈ 0, vector length ≈ 1).
    #[error("arctangent singularity: the argument has scalar ≈ 0 and vector length ≈ 1")]
    ArctanSingularity,

    #[error("not a pure value: the scalar part is nonzero")]
    NotPure,

    #[error("not a root of -1: the input does not square to -1")]
    NotARoot,

    #[error("not a divisor of zero: the semi-norm does not vanish")]
    NotDivisor,

    /// A pure divisor of zero is nilpotent; no scaling of it is idempotent.
    #[error("pure divisor of zero: the scalar part vanishes, so no idempotent scaling exists")]
    PureDivisor,

    #[error("constraint violation: {0}")]
    ConstraintViolation(&'static str),

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
}

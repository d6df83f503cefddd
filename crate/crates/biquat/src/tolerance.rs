//! Float comparison policy. Every approximate predicate in the crate funnels
//! through one of these three checks.

/// Absolute and relative comparison thresholds.
///
/// Two floats are considered equal when
/// `|a - b| <= max(abs_eps, rel_eps * max(|a|, |b|))`: the absolute floor
/// keeps comparisons near zero meaningful, the relative part scales with the
/// operands. Zero tests against a known magnitude use
/// [`Tolerance::is_zero_scaled`] with that magnitude as the scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs_eps: 1e-12, rel_eps: 1e-9 }
    }
}

impl Tolerance {
    /// Panics unless both thresholds are positive and finite.
    pub fn new(abs_eps: f64, rel_eps: f64) -> Self {
        assert!(
            abs_eps > 0.0 && rel_eps > 0.0 && abs_eps.is_finite() && rel_eps.is_finite(),
            "tolerances must be positive and finite"
        );
        Tolerance { abs_eps, rel_eps }
    }

    /// Both thresholds set to the same `eps`.
    pub fn uniform(eps: f64) -> Self {
        Self::new(eps, eps)
    }

    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs_eps.max(self.rel_eps * a.abs().max(b.abs()))
    }

    /// `a ≈ 0` with no scale context; reduces to `|a| <= abs_eps`.
    pub fn is_zero(&self, a: f64) -> bool {
        a.abs() <= self.abs_eps
    }

    /// `a ≈ 0` relative to a caller-supplied magnitude.
    pub fn is_zero_scaled(&self, a: f64, scale: f64) -> bool {
        a.abs() <= self.abs_eps.max(self.rel_eps * scale.abs())
    }
}

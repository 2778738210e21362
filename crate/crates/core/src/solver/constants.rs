use std::collections::BTreeMap;

use serde::Serialize;

use crate::branching::SigmaConstants;
use crate::error::{Error, Result};

/// The constants `(α, β, γ, δ, ε, L)` with derived `C = L / γ`,
/// `ℓ = 3C² + 1` and `ζ = 2α + 2β + 2δ + ε`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstantSchedule {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
    #[serde(rename = "L")]
    pub big_l: f64,
}

impl Default for ConstantSchedule {
    /// γ = 0.01, L = 3, α = min(1/50, γ/(104C³))/2, β = 0.06, δ = 0.001,
    /// ε = 0.005.
    fn default() -> Self {
        let gamma = 0.01;
        let big_l = 3.0;
        let c: f64 = big_l / gamma;
        let alpha = (1.0f64 / 50.0).min(gamma / (104.0 * c.powi(3))) / 2.0;
        ConstantSchedule { alpha, beta: 0.06, gamma, delta: 0.001, epsilon: 0.005, big_l }
    }
}

impl ConstantSchedule {
    pub fn c(&self) -> f64 {
        self.big_l / self.gamma
    }

    /// Largest size of a small component, `⌊C⌋`.
    pub fn small_component_cap(&self) -> usize {
        self.c().floor() as usize
    }

    /// `⌈3C² + 1⌉`, saturating for absurd inputs.
    pub fn ell(&self) -> usize {
        let c = self.c();
        let l = (3.0 * c * c + 1.0).ceil();
        if l.is_finite() && l < usize::MAX as f64 {
            l as usize
        } else {
            usize::MAX
        }
    }

    pub fn zeta(&self) -> f64 {
        2.0 * self.alpha + 2.0 * self.beta + 2.0 * self.delta + self.epsilon
    }

    pub fn sigma(&self) -> SigmaConstants {
        SigmaConstants::standard()
    }

    /// Reads `key = value` lines (`alpha`, `beta`, `gamma`, `delta`,
    /// `epsilon`, `L`); `#` starts a comment. Missing keys keep the
    /// defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = ConstantSchedule::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::Parse { line: no + 1, message: format!("constants: {msg}") };
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
            let value: f64 = value.trim().parse().map_err(|_| bad("value is not a number"))?;
            let slot = match key.trim() {
                "alpha" => &mut c.alpha,
                "beta" => &mut c.beta,
                "gamma" => &mut c.gamma,
                "delta" => &mut c.delta,
                "epsilon" => &mut c.epsilon,
                "L" => &mut c.big_l,
                other => return Err(bad(&format!("unknown key `{other}`"))),
            };
            *slot = value;
        }
        Ok(c)
    }

    pub fn as_map(&self) -> BTreeMap<&'static str, f64> {
        BTreeMap::from([
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("delta", self.delta),
            ("epsilon", self.epsilon),
            ("L", self.big_l),
        ])
    }
}

/// Every violated inequality of the schedule, by name; empty when valid.
/// Comparisons are negated so that NaN fails them.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn validate_constants(c: &ConstantSchedule) -> Vec<String> {
    let mut out = Vec::new();
    for (name, v) in [("α", c.alpha), ("β", c.beta), ("γ", c.gamma), ("δ", c.delta), ("ε", c.epsilon)] {
        if !(v > 0.0 && v < 1.0) {
            out.push(format!("0 < {name} < 1"));
        }
    }
    if !(c.alpha < 1.0 / 48.0) {
        out.push("α < 1/48".into());
    }
    if !(c.beta > 0.0 && c.beta < 1.0 / 16.0) {
        out.push("0 < β < 1/16".into());
    }
    if !(c.big_l > 2.0) {
        out.push("L > 2".into());
    }
    if !(c.alpha < c.gamma / (104.0 * c.c().powi(3))) {
        out.push("α < γ/(104C³)".into());
    }
    if !(c.alpha < c.gamma) {
        out.push("α < γ".into());
    }
    if !(2.0 * c.delta < c.epsilon) {
        out.push("2δ < ε".into());
    }
    if !(c.zeta() < 1.0) {
        out.push("ζ = 2α+2β+2δ+ε < 1".into());
    }
    out
}

/// The inequalities the forced modes keep. Forced B.1 only needs positive,
/// finite constants; forced B.2 also needs `L > 2`, `γ ≤ 1` and the
/// `α < γ/(104C³)` bound the small-side candidate enumeration relies on.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn validate_forced(c: &ConstantSchedule, b2: bool) -> Vec<String> {
    let mut out = Vec::new();
    for (name, v) in [("α", c.alpha), ("β", c.beta), ("γ", c.gamma), ("δ", c.delta), ("ε", c.epsilon), ("L", c.big_l)]
    {
        if !(v.is_finite() && v > 0.0) {
            out.push(format!("{name} > 0"));
        }
    }
    if b2 {
        if !(c.big_l > 2.0) {
            out.push("L > 2".into());
        }
        if !(c.gamma <= 1.0) {
            out.push("γ ≤ 1".into());
        }
        if !(c.alpha < c.gamma / (104.0 * c.c().powi(3))) {
            out.push("α < γ/(104C³)".into());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_schedule_is_valid() {
        let c = ConstantSchedule::default();
        assert!(validate_constants(&c).is_empty(), "{:?}", validate_constants(&c));
        assert_eq!(c.c(), 300.0);
        assert_eq!(c.ell(), 270_001);
        assert!((c.alpha - 1.78e-12).abs() < 1e-14);
    }

    #[test]
    fn violations_are_named() {
        let c = ConstantSchedule { alpha: 0.02, beta: 0.06, gamma: 0.1, delta: 0.05, epsilon: 0.08, big_l: 3.0 };
        let v = validate_constants(&c);
        assert!(v.contains(&"α < γ/(104C³)".to_string()));
        let two = ConstantSchedule { big_l: 2.0, ..ConstantSchedule::default() };
        assert!(validate_constants(&two).contains(&"L > 2".to_string()));
    }

    #[test]
    fn parse_key_values() {
        let c = ConstantSchedule::parse("# test\nalpha = 0.5\n\nL=4 # big\n").unwrap();
        assert_eq!(c.alpha, 0.5);
        assert_eq!(c.big_l, 4.0);
        assert_eq!(c.beta, 0.06);
        assert!(ConstantSchedule::parse("alpha 0.5").is_err());
        assert!(ConstantSchedule::parse("kappa = 1").is_err());
        assert!(matches!(ConstantSchedule::parse("\nbeta = x"), Err(Error::Parse { line: 2, .. })));
        assert!(ConstantSchedule::parse("beta = x").is_err());
    }
}

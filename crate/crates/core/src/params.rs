//! Device and control parameter records, unit conventions, and validation.
//!
//! Internal unit system: `omega_m = 1`. All rates and frequencies are stored
//! in units of `omega_m`, times in units of `1/omega_m`, energies in units of
//! `hbar*omega_m`. SI enters only through [`PhysicalParams::omega_m`] (rad/s),
//! the bath temperature, and the kelvin-valued effective temperature.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Physical constants (CODATA 2018).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    /// Reduced Planck constant, J*s.
    pub hbar: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            hbar: 1.054_571_817e-34,
            k_b: 1.380_649e-23,
        }
    }
}

/// Fixed device constants. Rates are in units of `omega_m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Mechanical angular frequency in rad/s; the unit of every other rate.
    pub omega_m: f64,
    /// Mechanical dissipation rate.
    pub gamma: f64,
    /// Decay rate of the driven mirror.
    pub kappa1: f64,
    /// Decay rate of the detection mirror.
    pub kappa2: f64,
    /// Total cavity decay rate, `kappa1 + kappa2`.
    pub kappa: f64,
    /// Laser detuning from cavity resonance.
    pub delta: f64,
    /// Linearized optomechanical coupling strength.
    pub g: f64,
    /// Homodyne detection efficiency.
    pub eta_d: f64,
    /// Ambient bath temperature, K.
    pub t_bath: f64,
    /// Thermal occupation of the mechanical bath at `t_bath`.
    pub n_t: f64,
}

impl PhysicalParams {
    /// Builds a parameter record, deriving `kappa` and the bath occupation.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        omega_m: f64,
        gamma: f64,
        kappa1: f64,
        kappa2: f64,
        delta: f64,
        g: f64,
        eta_d: f64,
        t_bath: f64,
    ) -> Self {
        let n_t = thermal_occupation(t_bath, omega_m, &Constants::default());
        Self {
            omega_m,
            gamma,
            kappa1,
            kappa2,
            kappa: kappa1 + kappa2,
            delta,
            g,
            eta_d,
            t_bath,
            n_t,
        }
    }

    /// Returns a copy with the detuning and coupling replaced (the two knobs
    /// of the feedback-free control plane).
    pub fn with_drive(&self, delta: f64, g: f64) -> Self {
        Self { delta, g, ..*self }
    }

    /// Checks every structural invariant; violations are data, not failures.
    pub fn validate(&self) -> ValidationResult {
        let mut violations = Vec::new();
        let mut check = |ok: bool, name: &str| {
            if !ok {
                violations.push(name.to_string());
            }
        };
        check(self.omega_m > 0.0, "omega_m > 0");
        check(
            (self.kappa - (self.kappa1 + self.kappa2)).abs() == 0.0,
            "kappa = kappa1 + kappa2",
        );
        check(self.gamma > 0.0, "gamma > 0");
        check(self.kappa1 >= 0.0, "kappa1 >= 0");
        check(self.kappa2 > 0.0, "kappa2 > 0");
        check(self.g >= 0.0, "G >= 0");
        check(self.eta_d > 0.0 && self.eta_d <= 1.0, "0 < eta_d <= 1");
        check(self.t_bath > 0.0, "T_bath > 0");
        check(self.n_t >= 0.0, "n_T >= 0");
        ValidationResult { violations }
    }

    /// Parses a plain-text `name = value` config (one entry per line,
    /// `#` comments). Unknown keys are rejected.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut kv: BTreeMap<String, f64> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidConfig(format!("line {}: expected `name = value`", lineno + 1))
            })?;
            let key = key.trim().to_string();
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::InvalidConfig(format!("line {}: bad number for `{key}`", lineno + 1))
            })?;
            if kv.insert(key.clone(), value).is_some() {
                return Err(Error::InvalidConfig(format!("duplicate key `{key}`")));
            }
        }
        let mut take = |name: &str| -> Result<f64> {
            kv.remove(name)
                .ok_or_else(|| Error::InvalidConfig(format!("missing key `{name}`")))
        };
        let omega_m = take("omega_m")?;
        let gamma = take("gamma")?;
        let kappa1 = take("kappa1")?;
        let kappa2 = take("kappa2")?;
        let delta = take("Delta")?;
        let g = take("G")?;
        let eta_d = take("eta_d")?;
        let t_bath = take("T_bath")?;
        let mut p = Self::new(omega_m, gamma, kappa1, kappa2, delta, g, eta_d, t_bath);
        if let Some(kappa) = kv.remove("kappa") {
            p.kappa = kappa;
        }
        if let Some(n_t) = kv.remove("n_T") {
            p.n_t = n_t;
        }
        if let Some(key) = kv.keys().next() {
            return Err(Error::InvalidConfig(format!("unknown key `{key}`")));
        }
        Ok(p)
    }

    /// Reads a config file in the format of [`Self::from_config_str`].
    pub fn from_config_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
        Self::from_config_str(&text)
    }
}

/// Outcome of [`PhysicalParams::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationResult {
    violations: Vec<String>,
}

impl ValidationResult {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Names of the violated constraints, in declaration order.
    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

/// The two steerable feedback knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeedbackParams {
    /// Dimensionless feedback gain.
    pub g_fb: f64,
    /// Total feedback phase, rad (homodyne phase folded with the delay).
    pub phi: f64,
}

impl FeedbackParams {
    pub fn new(g_fb: f64, phi: f64) -> Self {
        Self { g_fb, phi }
    }

    /// Feedback switched off.
    pub fn off() -> Self {
        Self { g_fb: 0.0, phi: 0.0 }
    }

    /// Builds the total phase from the homodyne phase and the loop delay
    /// (in units of `1/omega_m`): `phi = theta_fb - Delta * tau_fb`.
    pub fn from_homodyne(g_fb: f64, theta_fb: f64, tau_fb: f64, delta: f64) -> Self {
        Self {
            g_fb,
            phi: theta_fb - delta * tau_fb,
        }
    }
}

/// Bose-Einstein occupation of a mode at `omega` (rad/s) in a bath at
/// `t_bath` kelvin.
pub fn thermal_occupation(t_bath: f64, omega: f64, c: &Constants) -> f64 {
    let x = c.hbar * omega / (c.k_b * t_bath);
    1.0 / x.exp_m1()
}

/// Shipped parameter presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preset {
    /// Unresolved-sideband operating point: `kappa = 2`, `G = 0.1`,
    /// `Delta = 1`, room-temperature bath.
    Fig3,
    /// Resolved sideband, weak coupling: `kappa = 0.1`, `G = 0.01`.
    AppBWeak,
    /// Resolved sideband at the adiabatic limit: `kappa = 0.1`, `G = 0.1`.
    AppBStrong,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Fig3, Preset::AppBWeak, Preset::AppBStrong];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Fig3 => "fig3",
            Preset::AppBWeak => "appB-weak",
            Preset::AppBStrong => "appB-strong",
        }
    }

    pub fn params(&self) -> PhysicalParams {
        let omega_m = 2.0 * std::f64::consts::PI * 1e5;
        match self {
            Preset::Fig3 => PhysicalParams::new(omega_m, 1e-4, 1.0, 1.0, 1.0, 0.1, 0.9, 300.0),
            Preset::AppBWeak => {
                PhysicalParams::new(omega_m, 1e-4, 0.05, 0.05, 1.0, 0.01, 0.9, 300.0)
            }
            Preset::AppBStrong => {
                PhysicalParams::new(omega_m, 1e-4, 0.05, 0.05, 1.0, 0.1, 0.9, 300.0)
            }
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown preset `{s}`")))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn fig3_preset_validates() {
        let p = Preset::Fig3.params();
        assert!(p.validate().is_ok());
        assert_eq!(p.kappa, 2.0);
        assert_eq!(p.eta_d, 0.9);
    }

    #[test]
    fn kappa_sum_mismatch_is_named() {
        let mut p = Preset::Fig3.params();
        p.kappa = 3.0;
        let v = p.validate();
        assert!(!v.is_ok());
        assert_eq!(v.violations(), &["kappa = kappa1 + kappa2".to_string()]);
    }

    #[test]
    fn zero_efficiency_is_a_violation() {
        let mut p = Preset::Fig3.params();
        p.eta_d = 0.0;
        let v = p.validate();
        assert!(v.violations().iter().any(|s| s == "0 < eta_d <= 1"));
    }

    #[test]
    fn occupation_inverts_ln2_exactly() {
        // hbar*omega/(k_B*T) = ln 2  =>  n = 1/(2 - 1) = 1
        let c = Constants::default();
        let omega = 2.0 * std::f64::consts::PI * 1e5;
        let t = c.hbar * omega / (c.k_b * std::f64::consts::LN_2);
        assert_relative_eq!(thermal_occupation(t, omega, &c), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn room_temperature_occupation() {
        let c = Constants::default();
        let omega = 2.0 * std::f64::consts::PI * 1e5;
        let n = thermal_occupation(300.0, omega, &c);
        assert_relative_eq!(n, 6.25e7, max_relative = 1e-3);
        // classical limit cross-check
        let classical = c.k_b * 300.0 / (c.hbar * omega);
        assert_relative_eq!(n, classical - 0.5, max_relative = 1e-7);
    }

    #[test]
    fn occupation_vanishes_at_low_temperature() {
        let c = Constants::default();
        let omega = 2.0 * std::f64::consts::PI * 1e5;
        assert_eq!(thermal_occupation(1e-9, omega, &c), 0.0);
    }

    #[test]
    fn config_roundtrip_and_unknown_key() {
        let p = Preset::AppBWeak.params();
        let text = format!(
            "# resolved sideband\nomega_m = {:e}\ngamma = 1e-4\nkappa1 = 0.05\n\
             kappa2 = 0.05\nDelta = 1\nG = 0.01\neta_d = 0.9\nT_bath = 300\n",
            p.omega_m
        );
        let q = PhysicalParams::from_config_str(&text).unwrap();
        assert_eq!(p, q);
        assert!(PhysicalParams::from_config_str("bogus = 1\n").is_err());
    }

    proptest! {
        #[test]
        fn homodyne_phase_roundtrip(theta in -10.0..10.0f64, tau in 0.0..10.0f64, delta in -2.0..2.0f64) {
            let fb = FeedbackParams::from_homodyne(0.3, theta, tau, delta);
            prop_assert_eq!(fb.phi, theta - delta * tau);
        }

        #[test]
        fn occupation_monotonicity(t in 1.0..500.0f64, omega in 1e4..1e7f64) {
            let c = Constants::default();
            let n = thermal_occupation(t, omega, &c);
            prop_assert!(thermal_occupation(t * 1.01, omega, &c) > n);
            prop_assert!(thermal_occupation(t, omega * 1.01, &c) < n);
        }
    }
}

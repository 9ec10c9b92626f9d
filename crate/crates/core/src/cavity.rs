//! The feedback-dressed cavity.
//!
//! Amplitude feedback from the homodyne photocurrent reshapes the cavity into
//! an effective one with modified linewidth, detuning, and input-noise
//! statistics. Everything downstream (responses, spectra, mechanical
//! parameters) is a closed-form function of this record.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{FeedbackParams, PhysicalParams};

/// Below this magnitude the dressed response denominator is treated as a pole.
pub const POLE_THRESHOLD: f64 = 1e-12;

/// Complex feedback parameter `mu = 2 sqrt(eta_d kappa1 kappa2) g_fb e^{-i phi}`.
pub fn feedback_mu(p: &PhysicalParams, fb: &FeedbackParams) -> Complex64 {
    let magnitude = 2.0 * (p.eta_d * p.kappa1 * p.kappa2).sqrt() * fb.g_fb;
    magnitude * Complex64::new(0.0, -fb.phi).exp()
}

/// Feedback-dressed cavity record.
///
/// Invariants (in units of `omega_m`):
/// * `mu = (kappa - kappa_eff) + i (delta - delta_eff)`
/// * `n_eff = |mu|^2 / (4 eta_d kappa_eff kappa2)`
/// * `m_eff = n_eff (1 - 2 eta_d kappa2 / mu)`, zero at `mu = 0` by continuity
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCavity {
    /// Complex feedback parameter.
    pub mu: Complex64,
    /// Effective linewidth, strictly positive.
    pub kappa_eff: f64,
    /// Effective detuning.
    pub delta_eff: f64,
    /// Mean excitation number of the effective input noise.
    pub n_eff: f64,
    /// Self-correlation of the effective input noise.
    pub m_eff: Complex64,
}

impl EffectiveCavity {
    /// Dresses the cavity with the given feedback settings.
    ///
    /// Fails with [`Error::DegenerateCavity`] when the effective gain closes
    /// the linewidth (`kappa_eff <= 0`).
    pub fn new(p: &PhysicalParams, fb: &FeedbackParams) -> Result<Self> {
        let mu = feedback_mu(p, fb);
        let kappa_eff = p.kappa - mu.re;
        let delta_eff = p.delta - mu.im;
        if kappa_eff <= 0.0 {
            return Err(Error::DegenerateCavity { kappa_eff });
        }
        let n_eff = mu.norm_sqr() / (4.0 * p.eta_d * kappa_eff * p.kappa2);
        let m_eff = if mu == Complex64::ZERO {
            Complex64::ZERO
        } else {
            n_eff * (Complex64::ONE - 2.0 * p.eta_d * p.kappa2 / mu)
        };
        Ok(Self {
            mu,
            kappa_eff,
            delta_eff,
            n_eff,
            m_eff,
        })
    }

    /// Bare susceptibility of the dressed cavity,
    /// `1 / (kappa_eff + i (delta_eff - omega))`.
    pub fn susceptibility(&self, omega: f64) -> Complex64 {
        Complex64::new(self.kappa_eff, self.delta_eff - omega).inv()
    }

    /// Denominator shared by both response functions,
    /// `1 - |mu|^2 chi(omega) chi(-omega)*`.
    fn response_denominator(&self, omega: f64) -> Complex64 {
        let chi_p = self.susceptibility(omega);
        let chi_m = self.susceptibility(-omega).conj();
        Complex64::ONE - self.mu.norm_sqr() * chi_p * chi_m
    }

    fn checked_denominator(&self, omega: f64) -> Result<Complex64> {
        let den = self.response_denominator(omega);
        if den.norm() < POLE_THRESHOLD {
            return Err(Error::ResponsePole {
                omega,
                denominator: den.norm(),
            });
        }
        Ok(den)
    }

    /// Response function of the cavity quadrature:
    /// `chi(w) [1 + mu chi(-w)*] / (1 - |mu|^2 chi(w) chi(-w)*)`.
    pub fn quadrature_response(&self, omega: f64) -> Result<Complex64> {
        let den = self.checked_denominator(omega)?;
        let chi_p = self.susceptibility(omega);
        let chi_m = self.susceptibility(-omega).conj();
        Ok(chi_p * (Complex64::ONE + self.mu * chi_m) / den)
    }

    /// Response function of the cavity field operator:
    /// `chi(w) [1 - mu* chi(-w)*] / (1 - |mu|^2 chi(w) chi(-w)*)`.
    pub fn field_response(&self, omega: f64) -> Result<Complex64> {
        let den = self.checked_denominator(omega)?;
        let chi_p = self.susceptibility(omega);
        let chi_m = self.susceptibility(-omega).conj();
        Ok(chi_p * (Complex64::ONE - self.mu.conj() * chi_m) / den)
    }

    /// Power spectrum of the cavity amplitude quadrature.
    pub fn quadrature_spectrum(&self, omega: f64) -> Result<f64> {
        let lam_p = self.quadrature_response(omega)?;
        let lam_m = self.quadrature_response(-omega)?;
        let s = (self.n_eff + 1.0) * lam_p.norm_sqr()
            + self.n_eff * lam_m.norm_sqr()
            + 2.0 * (self.m_eff * lam_p * lam_m).re;
        Ok(2.0 * self.kappa_eff * s)
    }
}

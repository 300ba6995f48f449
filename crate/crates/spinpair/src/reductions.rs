//! Catalog of the named special cases of the XYZ chain, their closed-form
//! concurrences, and the critical-threshold solvers.
//!
//! Each case formula below is the general block closed form specialized by
//! hand and validated against the numeric pipeline on dense grids (see the
//! acceptance suite). A handful of printed variants of these formulas that
//! fail that cross-check are cataloged in TYPO_LEDGER.md together with the
//! corrected forms used here.

use crate::concurrence::{log_entanglement_margin, thermal_concurrence_closed};
use crate::error::{Error, Result};
use crate::model::{ModelParams, Temperature};

use std::fmt;

/// Couplings closer than this are treated as equal when classifying, and
/// fields smaller than this as inactive.
pub const CLASSIFY_TOL: f64 = 1e-12;

/// Exchange symmetry class of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(clippy::upper_case_acronyms)]
pub enum ModelTag {
    /// Jx = Jy = 0
    Ising,
    /// Jx = Jy, Jz = 0
    XX,
    /// Jx != Jy, Jz = 0
    XY,
    /// Jx = Jy = Jz
    XXX,
    /// Jx = Jy != Jz
    XXZ,
    /// fully anisotropic
    XYZ,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModelTag::Ising => "Ising",
            ModelTag::XX => "XX",
            ModelTag::XY => "XY",
            ModelTag::XXX => "XXX",
            ModelTag::XXZ => "XXZ",
            ModelTag::XYZ => "XYZ",
        };
        f.write_str(s)
    }
}

/// Sign regime of the case-defining coupling: Jz for Ising, J for XX/XXX/XXZ,
/// the common sign of the couplings for XY/XYZ. `Mixed` covers sign patterns
/// the sections do not name (and the degenerate zero coupling).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Antiferromagnetic,
    Ferromagnetic,
    Mixed,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::Antiferromagnetic => "antiferromagnetic",
            Regime::Ferromagnetic => "ferromagnetic",
            Regime::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

/// Which of B, b, D are switched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ActiveFields {
    pub field: bool,
    pub imbalance: bool,
    pub dm: bool,
}

impl fmt::Display for ActiveFields {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = Vec::new();
        if self.field {
            names.push("B");
        }
        if self.imbalance {
            names.push("b");
        }
        if self.dm {
            names.push("D");
        }
        if names.is_empty() {
            f.write_str("pure")
        } else {
            f.write_str(&names.join("+"))
        }
    }
}

/// A classified model case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelCase {
    pub tag: ModelTag,
    pub regime: Regime,
    pub active: ActiveFields,
}

impl fmt::Display for ModelCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ({})", self.tag, self.regime, self.active)
    }
}

fn sign_regime(x: f64) -> Regime {
    if x > CLASSIFY_TOL {
        Regime::Antiferromagnetic
    } else if x < -CLASSIFY_TOL {
        Regime::Ferromagnetic
    } else {
        Regime::Mixed
    }
}

/// Deterministic classification of a parameter set into its model case.
pub fn classify(params: &ModelParams) -> ModelCase {
    let eq = |a: f64, b: f64| (a - b).abs() <= CLASSIFY_TOL;
    let zero = |a: f64| a.abs() <= CLASSIFY_TOL;

    let tag = if zero(params.jx) && zero(params.jy) {
        ModelTag::Ising
    } else if eq(params.jx, params.jy) {
        if zero(params.jz) {
            ModelTag::XX
        } else if eq(params.jx, params.jz) {
            ModelTag::XXX
        } else {
            ModelTag::XXZ
        }
    } else if zero(params.jz) {
        ModelTag::XY
    } else {
        ModelTag::XYZ
    };

    let regime = match tag {
        ModelTag::Ising => sign_regime(params.jz),
        ModelTag::XX | ModelTag::XXX | ModelTag::XXZ => sign_regime(params.jx),
        ModelTag::XY => match (sign_regime(params.jx), sign_regime(params.jy)) {
            (Regime::Antiferromagnetic, Regime::Antiferromagnetic) => Regime::Antiferromagnetic,
            (Regime::Ferromagnetic, Regime::Ferromagnetic) => Regime::Ferromagnetic,
            _ => Regime::Mixed,
        },
        ModelTag::XYZ => {
            let signs = (
                sign_regime(params.jx),
                sign_regime(params.jy),
                sign_regime(params.jz),
            );
            match signs {
                (
                    Regime::Antiferromagnetic,
                    Regime::Antiferromagnetic,
                    Regime::Antiferromagnetic,
                ) => Regime::Antiferromagnetic,
                (Regime::Ferromagnetic, Regime::Ferromagnetic, Regime::Ferromagnetic) => {
                    Regime::Ferromagnetic
                }
                _ => Regime::Mixed,
            }
        }
    };

    ModelCase {
        tag,
        regime,
        active: ActiveFields {
            field: params.field.abs() > CLASSIFY_TOL,
            imbalance: params.field_imbalance.abs() > CLASSIFY_TOL,
            dm: params.dm.abs() > CLASSIFY_TOL,
        },
    }
}

fn check_case(case: &ModelCase, params: &ModelParams) -> Result<()> {
    let classified = classify(params);
    if classified != *case {
        return Err(Error::CaseMismatch {
            given: case.to_string(),
            classified: classified.to_string(),
        });
    }
    Ok(())
}

/// Closed-form thermal concurrence of a cataloged case.
///
/// The catalog covers the pure, +B, +b and +D variants that have printed
/// closed forms: Ising (all four), XX (pure/B/D), XY (pure/D), XXX
/// (pure/B/D), XXZ (pure/D), XYZ (pure/D). Combinations outside the catalog
/// return [`Error::NoClosedForm`]; the general lambda route
/// ([`thermal_concurrence_closed`]) covers those.
pub fn closed_form_concurrence(
    case: &ModelCase,
    params: &ModelParams,
    kt: Temperature,
) -> Result<f64> {
    check_case(case, params)?;
    let d = params.derived()?;
    let t = kt.beta();

    // Extreme coupling/temperature ratios are delegated to the general
    // closed form, which evaluates in log space; the printed per-case forms
    // below are algebraically identical to it.
    if (0.5 * params.jz.abs() + d.mu.max(d.nu)) * t > 350.0 {
        return thermal_concurrence_closed(params, kt);
    }

    let active = case.active;
    let clamp = |x: f64| x.max(0.0);

    let value = match (case.tag, active.field, active.imbalance, active.dm) {
        // Ising: the mu block carries no exchange, so the two lambdas of
        // that block are equal and the top pair can never split them; no
        // entanglement without DM coupling.
        (ModelTag::Ising, _, _, false) => 0.0,
        (ModelTag::Ising, false, false, true) => {
            let x = (params.dm.abs() * t).sinh() - (-params.jz * t).exp();
            clamp(x / ((params.dm.abs() * t).cosh() + (-params.jz * t).exp()))
        }

        // XX: sinh(nu/kT) against 1; the homogeneous field only enters the
        // partition function, which is why it cannot move the critical
        // temperature.
        (ModelTag::XX, false, false, false) => {
            let x = (params.jx.abs() * t).sinh() - 1.0;
            clamp(x / ((params.jx.abs() * t).cosh() + 1.0))
        }
        (ModelTag::XX, true, false, false) => {
            let x = (params.jx.abs() * t).sinh() - 1.0;
            clamp(x / ((params.jx.abs() * t).cosh() + (params.field * t).cosh()))
        }
        (ModelTag::XX, false, false, true) => {
            let w = params.jx.hypot(params.dm);
            clamp(((w * t).sinh() - 1.0) / ((w * t).cosh() + 1.0))
        }

        // XY: the larger of |J+|, |J-| sets the dominant lambda; the form is
        // even in both, which also covers the ferromagnetic and mixed-sign
        // patterns.
        (ModelTag::XY, false, false, false) => {
            let hi = d.j_plus.abs().max(d.j_minus.abs());
            let lo = d.j_plus.abs().min(d.j_minus.abs());
            clamp(((hi * t).sinh() - (lo * t).cosh()) / ((hi * t).cosh() + (lo * t).cosh()))
        }
        (ModelTag::XY, false, false, true) => {
            let w = d.j_plus.hypot(params.dm);
            let hi = w.max(d.j_minus.abs());
            let lo = w.min(d.j_minus.abs());
            clamp(((hi * t).sinh() - (lo * t).cosh()) / ((hi * t).cosh() + (lo * t).cosh()))
        }

        // XXX: compact exponential forms.
        (ModelTag::XXX, false, false, false) => {
            let x = (2.0 * params.jx * t).exp();
            clamp((x - 3.0) / (x + 3.0))
        }
        (ModelTag::XXX, true, false, false) => {
            let x = (2.0 * params.jx * t).exp();
            clamp((x - 3.0) / (x + 1.0 + 2.0 * (params.field * t).cosh()))
        }
        (ModelTag::XXX, false, false, true) => {
            let w = params.jx.hypot(params.dm);
            let e = (-params.jx * t).exp();
            clamp(((w * t).sinh() - e) / ((w * t).cosh() + e))
        }

        // XXZ: same shape with the z coupling in the exponential weight.
        (ModelTag::XXZ, false, false, false) => {
            let e = (-params.jz * t).exp();
            clamp(((params.jx.abs() * t).sinh() - e) / ((params.jx.abs() * t).cosh() + e))
        }
        (ModelTag::XXZ, false, false, true) => {
            let w = params.jx.hypot(params.dm);
            let e = (-params.jz * t).exp();
            clamp(((w * t).sinh() - e) / ((w * t).cosh() + e))
        }

        // XYZ: both blocks can carry the dominant lambda, so the closed form
        // is the larger of the two branch numerators over the shared
        // denominator. The first branch dominates in the antiferromagnetic
        // pattern, the second in the ferromagnetic one.
        (ModelTag::XYZ, false, false, false) => {
            xyz_branch_max(params.jz, d.j_minus, d.j_plus.abs(), t)
        }
        (ModelTag::XYZ, false, false, true) => {
            xyz_branch_max(params.jz, d.j_minus, d.j_plus.hypot(params.dm), t)
        }

        _ => return Err(Error::NoClosedForm(case.to_string())),
    };
    Ok(value)
}

/// max of the two XYZ branch numerators over the shared denominator:
/// `n1 = e^{+Jz t/2} sinh(nu t) - e^{-Jz t/2} cosh(J- t)`,
/// `n2 = e^{-Jz t/2} sinh(|J-| t) - e^{+Jz t/2} cosh(nu t)`,
/// `den = e^{-Jz t/2} cosh(J- t) + e^{+Jz t/2} cosh(nu t)`,
/// where `nu` is |J+| for the pure case or sqrt(J+^2 + D^2) with DM coupling.
fn xyz_branch_max(jz: f64, j_minus: f64, nu: f64, t: f64) -> f64 {
    let p = (-0.5 * jz * t).exp();
    let q = (0.5 * jz * t).exp();
    let n1 = q * (nu * t).sinh() - p * (j_minus * t).cosh();
    let n2 = p * (j_minus.abs() * t).sinh() - q * (nu * t).cosh();
    let den = p * (j_minus * t).cosh() + q * (nu * t).cosh();
    (n1.max(n2) / den).max(0.0)
}

/// The sign function whose positivity marks the entangled region of the XYZ
/// case (plotted against temperature for the anisotropic figures):
/// `max(sinh(nu/kT) - e^{-Jz/kT} cosh(J-/kT), sinh(|J-|/kT) - e^{+Jz/kT} cosh(nu/kT))`.
pub fn entanglement_indicator(params: &ModelParams, kt: Temperature) -> Result<f64> {
    let d = params.derived()?;
    let t = kt.beta();
    let nu = d.j_plus.hypot(params.dm);
    let f1 = (nu * t).sinh() - (-params.jz * t).exp() * (d.j_minus * t).cosh();
    let f2 = (d.j_minus.abs() * t).sinh() - (params.jz * t).exp() * (nu * t).cosh();
    Ok(f1.max(f2))
}

/// A solved critical threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    /// Thermal concurrence is positive exactly for kT below this value.
    CriticalTemperature(f64),
    /// Smallest D >= 0 with positive concurrence at the given temperature.
    CriticalDm(f64),
    /// The concurrence vanishes identically over the solved-for variable.
    NoneExists,
}

impl Threshold {
    pub fn value(&self) -> Option<f64> {
        match self {
            Threshold::CriticalTemperature(v) | Threshold::CriticalDm(v) => Some(*v),
            Threshold::NoneExists => None,
        }
    }
}

const SOLVE_REL_TOL: f64 = 1e-10;
const VERIFY_EPS: f64 = 1e-4;

/// Critical temperature of a case: the kT below which the thermal state is
/// entangled.
///
/// XX (with b = 0) and XXX antiferromagnetic (with D = b = 0) have analytic
/// values sqrt(J^2+D^2)/asinh(1) and 2J/ln 3; every other case is solved by
/// bracketed bisection on the log entanglement margin. Returns
/// [`Threshold::NoneExists`] when the concurrence vanishes for every
/// temperature (pure Ising, ferromagnetic XXX, ...).
pub fn critical_temperature(case: &ModelCase, params: &ModelParams) -> Result<Threshold> {
    check_case(case, params)?;

    // analytic values where the entanglement condition inverts in closed form
    if case.tag == ModelTag::XX && !case.active.imbalance {
        let w = params.jx.hypot(params.dm);
        return verified_tc(params, w / 1.0f64.asinh());
    }
    if case.tag == ModelTag::XXX
        && case.regime == Regime::Antiferromagnetic
        && !case.active.dm
        && !case.active.imbalance
    {
        return verified_tc(params, 2.0 * params.jx / 3.0f64.ln());
    }

    let margin = |kt_val: f64| -> Result<f64> {
        log_entanglement_margin(params, Temperature::new(kt_val)?)
    };

    // Scan a log grid for the largest sign change of the margin.
    let scale = params.max_abs();
    if scale == 0.0 {
        return Ok(Threshold::NoneExists);
    }
    let (lo_exp, hi_exp, steps) = (-6.0f64, 4.0f64, 400usize);
    let grid_kt = |i: usize| scale * 10f64.powf(lo_exp + (hi_exp - lo_exp) * i as f64 / steps as f64);
    let mut bracket = None;
    let mut prev = margin(grid_kt(0))?;
    for i in 1..=steps {
        let cur = margin(grid_kt(i))?;
        if prev > 0.0 && cur <= 0.0 {
            bracket = Some((grid_kt(i - 1), grid_kt(i)));
        }
        prev = cur;
    }
    let Some((mut lo, mut hi)) = bracket else {
        return Ok(Threshold::NoneExists);
    };
    for _ in 0..200 {
        if hi - lo <= SOLVE_REL_TOL * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if margin(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    verified_tc(params, 0.5 * (lo + hi))
}

fn verified_tc(params: &ModelParams, ktc: f64) -> Result<Threshold> {
    if !ktc.is_finite() || ktc <= 0.0 {
        return Err(Error::Solver(format!("non-positive critical kT {ktc}")));
    }
    let below = thermal_concurrence_closed(params, Temperature::new(ktc * (1.0 - VERIFY_EPS))?)?;
    let above = thermal_concurrence_closed(params, Temperature::new(ktc * (1.0 + VERIFY_EPS))?)?;
    if below <= 0.0 || above != 0.0 {
        return Err(Error::Solver(format!(
            "critical temperature {ktc} failed verification (C below = {below}, C above = {above})"
        )));
    }
    Ok(Threshold::CriticalTemperature(ktc))
}

/// Smallest D >= 0 with positive concurrence at fixed temperature, holding
/// every other parameter fixed (the DM coupling in `params` is the starting
/// point of the classification only and is not part of the answer).
///
/// Returns `CriticalDm(0)` when the state is already entangled without DM
/// coupling, and `NoneExists` if no bracket up to 2^60 times the parameter
/// scale turns the margin positive.
pub fn critical_dm(case: &ModelCase, params: &ModelParams, kt: Temperature) -> Result<Threshold> {
    check_case(case, params)?;
    let margin = |dm: f64| -> Result<f64> { log_entanglement_margin(&params.with_dm(dm), kt) };

    if margin(0.0)? > 0.0 {
        return Ok(Threshold::CriticalDm(0.0));
    }

    let mut hi = (10.0 * kt.kt()).max(10.0 * params.max_abs()).max(1.0);
    let mut bracketed = false;
    for _ in 0..60 {
        if margin(hi)? > 0.0 {
            bracketed = true;
            break;
        }
        hi *= 2.0;
    }
    if !bracketed {
        return Ok(Threshold::NoneExists);
    }

    let mut lo = 0.0f64;
    for _ in 0..200 {
        if hi - lo <= SOLVE_REL_TOL * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if margin(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let dc = 0.5 * (lo + hi);
    let just_above =
        thermal_concurrence_closed(&params.with_dm(dc * (1.0 + VERIFY_EPS)), kt)?;
    if just_above <= 0.0 {
        return Err(Error::Solver(format!(
            "critical DM coupling {dc} failed verification (C just above = {just_above})"
        )));
    }
    Ok(Threshold::CriticalDm(dc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concurrence::thermal_concurrence_numeric;

    fn kt(x: f64) -> Temperature {
        Temperature::new(x).unwrap()
    }

    fn case_of(p: &ModelParams) -> ModelCase {
        classify(p)
    }

    #[test]
    fn classify_examples() {
        let c = classify(&ModelParams::xxx(1.0));
        assert_eq!(c.tag, ModelTag::XXX);
        assert_eq!(c.regime, Regime::Antiferromagnetic);
        assert_eq!(c.active, ActiveFields::default());

        let c = classify(&ModelParams::xx(1.0).with_dm(2.0));
        assert_eq!(c.tag, ModelTag::XX);
        assert!(c.active.dm && !c.active.field && !c.active.imbalance);

        let c = classify(&ModelParams::exchange(1.0, 2.0, 3.0));
        assert_eq!(c.tag, ModelTag::XYZ);
        assert_eq!(c.regime, Regime::Antiferromagnetic);

        let c = classify(&ModelParams::exchange(-1.0, -2.0, -3.0));
        assert_eq!(c.regime, Regime::Ferromagnetic);

        let c = classify(&ModelParams::exchange(1.0, -2.0, 3.0));
        assert_eq!(c.regime, Regime::Mixed);

        // tolerance: couplings equal to within 1e-12 classify as equal
        let c = classify(&ModelParams::exchange(1.0, 1.0 + 5e-13, 0.0));
        assert_eq!(c.tag, ModelTag::XX);

        let c = classify(&ModelParams::ising(0.0));
        assert_eq!(c.tag, ModelTag::Ising);
        assert_eq!(c.regime, Regime::Mixed);
    }

    #[test]
    fn case_mismatch_is_rejected() {
        let p = ModelParams::xxx(1.0);
        let wrong = classify(&ModelParams::xx(1.0));
        assert!(matches!(
            closed_form_concurrence(&wrong, &p, kt(1.0)),
            Err(Error::CaseMismatch { .. })
        ));
    }

    #[test]
    fn uncataloged_combination_is_reported() {
        let p = ModelParams::xx(1.0).with_field(1.0).with_dm(1.0);
        assert!(matches!(
            closed_form_concurrence(&case_of(&p), &p, kt(1.0)),
            Err(Error::NoClosedForm(_))
        ));
        // inhomogeneous field is only cataloged for Ising
        let p = ModelParams::xxx(1.0).with_field_imbalance(0.5);
        assert!(matches!(
            closed_form_concurrence(&case_of(&p), &p, kt(1.0)),
            Err(Error::NoClosedForm(_))
        ));
    }

    #[test]
    fn ising_family_has_no_entanglement_without_dm() {
        for p in [
            ModelParams::ising(1.0),
            ModelParams::ising(-2.0),
            ModelParams::ising(1.5).with_field(1.0),
            ModelParams::ising(1.5).with_field_imbalance(0.7),
        ] {
            for kt_val in [0.1, 0.5, 1.0, 5.0] {
                let c = closed_form_concurrence(&case_of(&p), &p, kt(kt_val)).unwrap();
                assert_eq!(c, 0.0);
            }
        }
    }

    #[test]
    fn frozen_case_values() {
        // XX antiferromagnet, J = kT = 1: (sinh 1 - 1)/(cosh 1 + 1)
        let p = ModelParams::xx(1.0);
        let expected = (1f64.sinh() - 1.0) / (1f64.cosh() + 1.0);
        let c = closed_form_concurrence(&case_of(&p), &p, kt(1.0)).unwrap();
        assert!((c - expected).abs() < 1e-15);
        assert!((expected - 0.06889329077704602).abs() < 1e-15);

        // Ising + DM, Jz = D = kT = 1: (sinh 1 - 1/e)/(cosh 1 + 1/e)
        let p = ModelParams::ising(1.0).with_dm(1.0);
        let expected = (1f64.sinh() - (-1f64).exp()) / (1f64.cosh() + (-1f64).exp());
        let c = closed_form_concurrence(&case_of(&p), &p, kt(1.0)).unwrap();
        assert!((c - expected).abs() < 1e-15);
        assert!((expected - 0.42246918845518766).abs() < 1e-15);
    }

    #[test]
    fn case_formulas_track_the_numeric_pipeline() {
        // one representative point per cataloged case
        let points = [
            ModelParams::ising(1.3).with_dm(0.8),
            ModelParams::xx(0.9),
            ModelParams::xx(-1.2).with_field(0.7),
            ModelParams::xx(1.1).with_dm(1.4),
            ModelParams::exchange(2.0, 0.5, 0.0),
            ModelParams::exchange(-2.0, -0.5, 0.0).with_dm(0.9),
            ModelParams::xxx(1.4),
            ModelParams::xxx(1.4).with_field(1.1),
            ModelParams::xxx(-0.8).with_dm(2.0),
            ModelParams::xxz(1.0, 0.7),
            ModelParams::xxz(-1.0, -2.0).with_dm(2.2),
            ModelParams::exchange(1.0, 2.0, 3.0),
            ModelParams::exchange(-1.0, -2.0, -3.0).with_dm(1.5),
        ];
        for p in points {
            for kt_val in [0.3, 1.0, 2.7] {
                let closed = closed_form_concurrence(&case_of(&p), &p, kt(kt_val)).unwrap();
                let numeric = thermal_concurrence_numeric(&p, kt(kt_val))
                    .unwrap()
                    .concurrence;
                assert!(
                    (closed - numeric).abs() < 1e-9,
                    "{p:?} at kT={kt_val}: closed {closed} vs numeric {numeric}"
                );
            }
        }
    }

    #[test]
    fn critical_temperature_examples() {
        // XXX antiferromagnet: kTc = 2J/ln 3
        let p = ModelParams::xxx(1.0);
        let tc = critical_temperature(&case_of(&p), &p).unwrap();
        assert_eq!(tc, Threshold::CriticalTemperature(2.0 / 3f64.ln()));

        // XX: kTc = 1/asinh(1), for any homogeneous field
        let p = ModelParams::xx(1.0);
        let tc = critical_temperature(&case_of(&p), &p).unwrap().value().unwrap();
        assert!((tc - 1.0 / 1f64.asinh()).abs() < 1e-14);
        let p = ModelParams::xx(1.0).with_field(2.0);
        let tc_b = critical_temperature(&case_of(&p), &p).unwrap().value().unwrap();
        assert_eq!(tc, tc_b);

        // pure Ising never entangles
        let p = ModelParams::ising(1.0);
        assert_eq!(
            critical_temperature(&case_of(&p), &p).unwrap(),
            Threshold::NoneExists
        );

        // ferromagnetic XXX never entangles
        let p = ModelParams::xxx(-1.0);
        assert_eq!(
            critical_temperature(&case_of(&p), &p).unwrap(),
            Threshold::NoneExists
        );
    }

    #[test]
    fn critical_temperature_xyz_by_bisection() {
        let p = ModelParams::exchange(1.0, 2.0, 3.0);
        let tc = critical_temperature(&case_of(&p), &p).unwrap().value().unwrap();
        // the margin changes sign at the solved value
        let c_below = thermal_concurrence_closed(&p, kt(tc * 0.9999)).unwrap();
        let c_above = thermal_concurrence_closed(&p, kt(tc * 1.0001)).unwrap();
        assert!(c_below > 0.0 && c_above == 0.0);
        // frozen from an independent bisection on the sign function
        assert!((tc - 3.5561931500347335).abs() < 1e-8);
    }

    #[test]
    fn critical_dm_examples() {
        // Ising antiferromagnet Jz = 1, kT = 1: D_min = asinh(e^{-1})
        let p = ModelParams::ising(1.0);
        let dc = critical_dm(&case_of(&p), &p, kt(1.0)).unwrap().value().unwrap();
        let expected = (-1f64).exp().asinh();
        assert!((dc - expected).abs() < 1e-9 * expected.max(1.0));
        assert!((expected - 0.3600496446091037).abs() < 1e-15);

        // XXX ferromagnet J = -1 at kT = 0.05: the entanglement condition
        // sinh(sqrt(J^2+D^2)/kT) > e^{|J|/kT} inverts to
        // D_c = sqrt((kT asinh(e^{|J|/kT}))^2 - J^2).
        let p = ModelParams::xxx(-1.0);
        let kt_val = 0.05;
        let dc = critical_dm(&case_of(&p), &p, kt(kt_val)).unwrap().value().unwrap();
        let expected = ((kt_val * (1.0f64 / kt_val).exp().asinh()).powi(2) - 1.0).sqrt();
        assert!((dc - expected).abs() < 1e-8, "dc {dc} vs {expected}");
        assert!((expected - 0.26554820765877923).abs() < 1e-12);

        // XXZ ferromagnet J = -1, Jz = -2: D_c -> sqrt(Jz^2 - J^2) = sqrt(3)
        // in the zero-temperature limit; at kT = 0.05 it sits within 0.05.
        let p = ModelParams::xxz(-1.0, -2.0);
        let dc = critical_dm(&case_of(&p), &p, kt(0.05)).unwrap().value().unwrap();
        assert!((dc - 3f64.sqrt()).abs() < 0.05, "dc {dc}");
        // and the closed inversion pins it tighter
        let expected = ((0.05 * (2.0f64 / 0.05).exp().asinh()).powi(2) - 1.0).sqrt();
        assert!((dc - expected).abs() < 1e-8);

        // already entangled at D = 0
        let p = ModelParams::xxx(1.0);
        assert_eq!(
            critical_dm(&case_of(&p), &p, kt(1.0)).unwrap(),
            Threshold::CriticalDm(0.0)
        );
    }

    #[test]
    fn entanglement_indicator_sign_matches_concurrence() {
        let p = ModelParams::exchange(1.0, 2.0, 3.0);
        for kt_val in [0.5, 2.0, 3.5, 4.0, 10.0] {
            let f = entanglement_indicator(&p, kt(kt_val)).unwrap();
            let c = thermal_concurrence_closed(&p, kt(kt_val)).unwrap();
            assert_eq!(f > 0.0, c > 0.0, "kT = {kt_val}");
        }
        // ferromagnetic pattern uses the second branch
        let p = ModelParams::exchange(-1.0, -2.0, -3.0);
        for kt_val in [0.3, 1.0, 2.0] {
            let f = entanglement_indicator(&p, kt(kt_val)).unwrap();
            let c = thermal_concurrence_closed(&p, kt(kt_val)).unwrap();
            assert_eq!(f > 0.0, c > 0.0, "kT = {kt_val}");
        }
    }
}

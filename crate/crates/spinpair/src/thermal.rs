//! Thermal (Gibbs) state of the two-qubit chain.
//!
//! The equilibrium state at temperature T is rho = exp(-H/kT)/Z. Because H
//! splits into two 2x2 blocks whose squares are proportional to the identity,
//! the exponential has an exact cosh/sinh form; [`gibbs_closed`] implements
//! it entry by entry. [`gibbs_numeric`] builds the same state from the
//! numeric eigendecomposition instead and is the oracle the closed form is
//! tested against.
//!
//! Both paths subtract the ground-state energy before exponentiating, so
//! arbitrarily small temperatures are handled without overflow.

use crate::error::{Error, Result};
use crate::linalg::{eigh, C64, Mat4, Vec4};
use crate::model::{ModelParams, Temperature};
use crate::spectral::numeric_spectrum;

/// Arguments of exp() beyond this are computed in shifted (log-space) form.
const EXP_ARG_LIMIT: f64 = 700.0;

/// Below this value of (block invariant)/kT the ratio sinh(x)/x is evaluated
/// by its Taylor series; keeps relative error near machine precision across
/// the removable singularity at x = 0.
const SMALL_RATIO_ARG: f64 = 1e-8;

/// `(c / r) * sinh(r * t)` with the removable singularity at `r = 0`.
///
/// Callers guarantee `|c| <= r` (c is one component of the quadrature pair
/// that makes up r), so the result is always finite when `sinh(r t)` is.
pub(crate) fn ratio_sinh(c: f64, r: f64, t: f64) -> f64 {
    let x = r * t;
    if x < SMALL_RATIO_ARG {
        // sinh(x)/x = 1 + x^2/6 + x^4/120 + O(x^6)
        c * t * (1.0 + (x * x / 6.0) * (1.0 + x * x / 20.0))
    } else {
        (c / r) * x.sinh()
    }
}

/// Partition function Z = Tr exp(-H/kT), stored in scaled form
/// `Z = scaled * exp(log_shift)` so that extreme coupling/temperature ratios
/// stay representable.
#[derive(Debug, Clone, Copy)]
pub struct PartitionValue {
    scaled: f64,
    log_shift: f64,
}

impl PartitionValue {
    /// The plain value of Z. May overflow to infinity for extreme ratios;
    /// use [`PartitionValue::ln`] in that regime.
    pub fn value(&self) -> f64 {
        self.scaled * self.log_shift.exp()
    }

    pub fn ln(&self) -> f64 {
        self.scaled.ln() + self.log_shift
    }

    /// Mantissa in (0, 4]: the sum of the shifted Boltzmann weights.
    pub fn scaled(&self) -> f64 {
        self.scaled
    }

    pub fn log_shift(&self) -> f64 {
        self.log_shift
    }
}

/// Closed-form partition function
/// `Z = 2 [exp(-Jz/2kT) cosh(mu/kT) + exp(Jz/2kT) cosh(nu/kT)]`.
pub fn partition_function(params: &ModelParams, kt: Temperature) -> Result<PartitionValue> {
    let d = params.derived()?;
    let t = kt.beta();
    let half_jz = 0.5 * params.jz;
    // Boltzmann weights shifted by the ground energy E0 = min(E1, E3):
    // the four closed-form energies are Jz/2 -+ mu and -Jz/2 -+ nu.
    let e0 = (half_jz - d.mu).min(-half_jz - d.nu);
    let w = |e: f64| (-(e - e0) * t).exp();
    let scaled = w(half_jz - d.mu) + w(half_jz + d.mu) + w(-half_jz - d.nu) + w(-half_jz + d.nu);
    Ok(PartitionValue {
        scaled,
        log_shift: -e0 * t,
    })
}

#[derive(Debug, Clone, Copy)]
struct SpectralDecomp {
    probs: [f64; 4],
    basis: [Vec4; 4],
}

/// A validated two-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite.
///
/// States built by the library (thermal states, pure states, unitary
/// conjugates) carry their spectral decomposition, which lets the
/// concurrence pipeline form matrix square roots without losing the small
/// eigenvalues to rounding.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    m: Mat4,
    decomp: Option<SpectralDecomp>,
}

impl DensityMatrix {
    /// Validates an arbitrary matrix as a density matrix. Tolerances are
    /// 1e-9 on Hermiticity and trace and -1e-9 on the smallest eigenvalue.
    pub fn from_matrix(m: Mat4) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InvalidDensityMatrix("non-finite entries".into()));
        }
        let dev = m.hermiticity_deviation();
        if dev > 1e-9 {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (deviation {dev:.3e})"
            )));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace {} != 1",
                tr.re
            )));
        }
        let (vals, vecs) = eigh(&m);
        if vals[0] < -1e-9 {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {:.3e}",
                vals[0]
            )));
        }
        let probs = [
            vals[0].max(0.0),
            vals[1].max(0.0),
            vals[2].max(0.0),
            vals[3].max(0.0),
        ];
        Ok(DensityMatrix {
            m,
            decomp: Some(SpectralDecomp { probs, basis: vecs }),
        })
    }

    /// The pure state |psi><psi| (psi is normalized first).
    pub fn pure(state: &Vec4) -> Result<Self> {
        let n = state.norm();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::InvalidDensityMatrix(
                "pure state must have nonzero finite norm".into(),
            ));
        }
        let psi = state.scaled(C64::new(1.0 / n, 0.0));
        // complete {psi} to an orthonormal basis by Gram-Schmidt over the
        // standard basis; the extra vectors carry zero probability.
        let mut basis = [psi, Vec4::zero(), Vec4::zero(), Vec4::zero()];
        let mut filled = 1;
        for k in 0..4 {
            if filled == 4 {
                break;
            }
            let mut w = Vec4::basis(k);
            for b in basis.iter().take(filled) {
                let overlap = b.dot(&w);
                for i in 0..4 {
                    w.e[i] -= overlap * b.e[i];
                }
            }
            if w.norm() > 1e-6 {
                basis[filled] = w.normalized();
                filled += 1;
            }
        }
        debug_assert_eq!(filled, 4);
        Ok(DensityMatrix {
            m: psi.outer(&psi),
            decomp: Some(SpectralDecomp {
                probs: [1.0, 0.0, 0.0, 0.0],
                basis,
            }),
        })
    }

    /// The maximally mixed state I/4.
    pub fn maximally_mixed() -> Self {
        DensityMatrix {
            m: Mat4::identity().scaled(0.25),
            decomp: Some(SpectralDecomp {
                probs: [0.25; 4],
                basis: [
                    Vec4::basis(0),
                    Vec4::basis(1),
                    Vec4::basis(2),
                    Vec4::basis(3),
                ],
            }),
        }
    }

    pub(crate) fn from_decomposition(probs: [f64; 4], basis: [Vec4; 4]) -> Self {
        let mut m = Mat4::zero();
        for (p, v) in probs.iter().zip(basis.iter()) {
            if *p != 0.0 {
                m = m + v.outer(v).scaled(*p);
            }
        }
        DensityMatrix {
            m,
            decomp: Some(SpectralDecomp { probs, basis }),
        }
    }

    pub(crate) fn trusted(m: Mat4) -> Self {
        DensityMatrix { m, decomp: None }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m.e[i][j]
    }

    /// Eigenvalues of the state, ascending (clamped at zero).
    pub fn eigenvalues(&self) -> [f64; 4] {
        match &self.decomp {
            Some(d) => {
                let mut p = d.probs;
                p.sort_by(f64::total_cmp);
                p
            }
            None => {
                let (vals, _) = eigh(&self.m);
                vals.map(|x| x.max(0.0))
            }
        }
    }

    /// The PSD square root of the state.
    pub fn sqrt_matrix(&self) -> Mat4 {
        let (probs, basis) = match &self.decomp {
            Some(d) => (d.probs, d.basis),
            None => {
                let (vals, vecs) = eigh(&self.m);
                (vals.map(|x| x.max(0.0)), vecs)
            }
        };
        let mut m = Mat4::zero();
        for (p, v) in probs.iter().zip(basis.iter()) {
            if *p > 0.0 {
                m = m + v.outer(v).scaled(p.sqrt());
            }
        }
        m
    }

    /// The state u rho u^dagger for a (verified) unitary u. The spectral
    /// decomposition is transported exactly, so the conjugated state is as
    /// accurate as the original.
    pub fn unitary_conjugate(&self, u: &Mat4) -> Result<Self> {
        let dev = (u.adjoint() * *u - Mat4::identity()).max_abs();
        if !(dev <= 1e-10) {
            return Err(Error::NotUnitary { deviation: dev });
        }
        match &self.decomp {
            Some(d) => {
                let basis = [
                    u.mul_vec(&d.basis[0]),
                    u.mul_vec(&d.basis[1]),
                    u.mul_vec(&d.basis[2]),
                    u.mul_vec(&d.basis[3]),
                ];
                Ok(DensityMatrix::from_decomposition(d.probs, basis))
            }
            None => Ok(DensityMatrix {
                m: *u * self.m * u.adjoint(),
                decomp: None,
            }),
        }
    }

    /// Purity Tr(rho^2); 1/4 for the maximally mixed state, 1 for pure.
    pub fn purity(&self) -> f64 {
        (self.m * self.m).trace().re
    }

    /// Fidelity overlap <psi|rho|psi> with a normalized pure state.
    pub fn fidelity_with_pure(&self, psi: &Vec4) -> f64 {
        psi.dot(&self.m.mul_vec(psi)).re
    }

    /// Largest violation of the density-matrix invariants, used by tests:
    /// (hermiticity deviation, |trace - 1|, most negative eigenvalue).
    pub fn invariant_violations(&self) -> (f64, f64, f64) {
        let herm = self.m.hermiticity_deviation();
        let tr = (self.m.trace() - C64::new(1.0, 0.0)).norm();
        let (vals, _) = eigh(&self.m);
        (herm, tr, vals[0].min(0.0))
    }
}

/// Closed-form Gibbs state from the block cosh/sinh exponential.
///
/// For moderate arguments the eight nonzero entries are assembled exactly as
/// the block exponential dictates:
///
/// ```text
/// A11 = e^{-Jz/2kT} [cosh(mu/kT) - (B/mu) sinh(mu/kT)]      A14 = A41 = -e^{-Jz/2kT} (J-/mu) sinh(mu/kT)
/// A44 = e^{-Jz/2kT} [cosh(mu/kT) + (B/mu) sinh(mu/kT)]
/// A22 = e^{+Jz/2kT} [cosh(nu/kT) - (b/nu) sinh(nu/kT)]      A23 = -e^{+Jz/2kT} ((J+ + iD)/nu) sinh(nu/kT)
/// A33 = e^{+Jz/2kT} [cosh(nu/kT) + (b/nu) sinh(nu/kT)]      A32 = conj(A23)
/// ```
///
/// divided by Z. When any of |Jz|/2, mu, nu exceeds 700 kT the same entries
/// are formed from ground-shifted Boltzmann weights instead, which never
/// overflows.
pub fn gibbs_closed(params: &ModelParams, kt: Temperature) -> Result<DensityMatrix> {
    let d = params.derived()?;
    let t = kt.beta();
    let half_jz = 0.5 * params.jz;

    if half_jz.abs().max(d.mu).max(d.nu) * t > EXP_ARG_LIMIT {
        return Ok(gibbs_closed_shifted(params, kt));
    }

    let z = partition_function(params, kt)?.value();
    let p = (-half_jz * t).exp();
    let q = (half_jz * t).exp();
    let cosh_mu = (d.mu * t).cosh();
    let cosh_nu = (d.nu * t).cosh();
    let field_s = ratio_sinh(params.field, d.mu, t);
    let jminus_s = ratio_sinh(d.j_minus, d.mu, t);
    let db_s = ratio_sinh(params.field_imbalance, d.nu, t);
    let offdiag = C64::new(
        ratio_sinh(d.j_plus, d.nu, t),
        ratio_sinh(params.dm, d.nu, t),
    );

    let mut m = Mat4::zero();
    m.e[0][0] = (p * (cosh_mu - field_s) / z).into();
    m.e[3][3] = (p * (cosh_mu + field_s) / z).into();
    m.e[0][3] = (-p * jminus_s / z).into();
    m.e[3][0] = m.e[0][3];
    m.e[1][1] = (q * (cosh_nu - db_s) / z).into();
    m.e[2][2] = (q * (cosh_nu + db_s) / z).into();
    m.e[1][2] = offdiag * (-q / z);
    m.e[2][1] = m.e[1][2].conj();
    Ok(DensityMatrix::trusted(m))
}

/// Ground-shifted form of the closed Gibbs state: identical algebra with the
/// cosh/sinh pairs rewritten as shifted Boltzmann weights w_i in (0, 1].
fn gibbs_closed_shifted(params: &ModelParams, kt: Temperature) -> DensityMatrix {
    let d = params.derived().expect("validated by caller");
    let t = kt.beta();
    let half_jz = 0.5 * params.jz;
    let energies = [
        half_jz - d.mu,
        half_jz + d.mu,
        -half_jz - d.nu,
        -half_jz + d.nu,
    ];
    let e0 = energies.iter().fold(f64::INFINITY, |m, &e| m.min(e));
    let w = energies.map(|e| (-(e - e0) * t).exp());
    let z = w.iter().sum::<f64>();

    // ratios c/r with the 0/0 convention for an exactly degenerate block
    let safe = |c: f64, r: f64| if r == 0.0 { 0.0 } else { c / r };
    let rb = safe(params.field, d.mu);
    let rj = safe(d.j_minus, d.mu);
    let rdb = safe(params.field_imbalance, d.nu);
    let rc = C64::new(safe(d.j_plus, d.nu), safe(params.dm, d.nu));

    let mut m = Mat4::zero();
    m.e[0][0] = ((w[0] * (1.0 - rb) + w[1] * (1.0 + rb)) / (2.0 * z)).into();
    m.e[3][3] = ((w[0] * (1.0 + rb) + w[1] * (1.0 - rb)) / (2.0 * z)).into();
    m.e[0][3] = (-rj * (w[0] - w[1]) / (2.0 * z)).into();
    m.e[3][0] = m.e[0][3];
    m.e[1][1] = ((w[2] * (1.0 - rdb) + w[3] * (1.0 + rdb)) / (2.0 * z)).into();
    m.e[2][2] = ((w[2] * (1.0 + rdb) + w[3] * (1.0 - rdb)) / (2.0 * z)).into();
    m.e[1][2] = rc * (-(w[2] - w[3]) / (2.0 * z));
    m.e[2][1] = m.e[1][2].conj();
    DensityMatrix::trusted(m)
}

/// Gibbs state from the numeric spectrum:
/// rho = sum_i exp(-(E_i - E0)/kT) |psi_i><psi_i| / Z.
pub fn gibbs_numeric(h: &Mat4, kt: Temperature) -> Result<DensityMatrix> {
    let spectrum = numeric_spectrum(h)?;
    let t = kt.beta();
    let e0 = spectrum.ground_energy();
    let raw = spectrum.energies().map(|e| (-(e - e0) * t).exp());
    let z: f64 = raw.iter().sum();
    let probs = raw.map(|w| w / z);
    let basis = [
        spectrum.levels[0].state,
        spectrum.levels[1].state,
        spectrum.levels[2].state,
        spectrum.levels[3].state,
    ];
    Ok(DensityMatrix::from_decomposition(probs, basis))
}

/// Detects whether a matrix has the Hamiltonian's block zero pattern
/// (nonzero entries only at 11, 14, 22, 23, 32, 33, 41, 44).
pub fn has_block_pattern(m: &Mat4, tol: f64) -> bool {
    const ALLOWED: [(usize, usize); 8] = [
        (0, 0),
        (0, 3),
        (1, 1),
        (1, 2),
        (2, 1),
        (2, 2),
        (3, 0),
        (3, 3),
    ];
    for i in 0..4 {
        for j in 0..4 {
            if !ALLOWED.contains(&(i, j)) && m.e[i][j].norm() > tol {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;

    fn kt(x: f64) -> Temperature {
        Temperature::new(x).unwrap()
    }

    #[test]
    fn partition_function_trivial_cases() {
        // H = 0 -> Z = 4
        let z = partition_function(&ModelParams::default(), kt(1.0)).unwrap();
        assert!((z.value() - 4.0).abs() < 1e-14);

        // Jz = 2 -> H = diag(1,-1,-1,1), Z = 2(e + 1/e) = 6.172322539260975
        let z = partition_function(&ModelParams::ising(2.0), kt(1.0)).unwrap();
        assert!((z.value() - 6.172322539260975).abs() < 1e-12);

        // XX with J = 1 -> Z = 2(1 + cosh 1) = 5.086161269630487
        let z = partition_function(&ModelParams::xx(1.0), kt(1.0)).unwrap();
        assert!((z.value() - 5.086161269630487).abs() < 1e-12);
    }

    #[test]
    fn partition_function_matches_numeric_trace() {
        let p = ModelParams::exchange(1.0, 2.0, 3.0)
            .with_field(0.5)
            .with_field_imbalance(0.25)
            .with_dm(0.75);
        let h = p.hamiltonian().unwrap();
        let temp = kt(0.8);
        let s = numeric_spectrum(&h).unwrap();
        let tr: f64 = s.energies().iter().map(|e| (-e / 0.8).exp()).sum();
        let z = partition_function(&p, temp).unwrap().value();
        assert!((z - tr).abs() <= 1e-10 * tr);
    }

    #[test]
    fn partition_log_form_survives_extreme_ratios() {
        // |Jz|/2kT = 5e5: value() overflows but ln() stays exact
        let z = partition_function(&ModelParams::ising(1000.0), kt(1e-3)).unwrap();
        assert!(z.value().is_infinite());
        // ln Z -> Jz/2kT + ln 2 for the dominant pair
        let expected = 500_000.0 + 2f64.ln();
        assert!((z.ln() - expected).abs() < 1e-6);
        assert!(z.scaled() > 0.0 && z.scaled() <= 4.0);
    }

    #[test]
    fn gibbs_closed_trivial_cases() {
        // H = 0 -> I/4
        let rho = gibbs_closed(&ModelParams::default(), kt(1.0)).unwrap();
        assert!((rho.matrix().clone() - Mat4::identity().scaled(0.25)).max_abs() < 1e-15);

        // Jz = 2, kT = 1 -> diag(e^-1, e, e, e^-1)/Z
        let rho = gibbs_closed(&ModelParams::ising(2.0), kt(1.0)).unwrap();
        let z = 2.0 * ((1.0f64).exp() + (-1.0f64).exp());
        for (k, expect) in [(-1.0f64), 1.0, 1.0, -1.0].iter().enumerate() {
            assert!((rho.entry(k, k).re - expect.exp() / z).abs() < 1e-14);
        }
    }

    #[test]
    fn gibbs_closed_matches_numeric_at_frozen_point() {
        let p = ModelParams::exchange(1.0, 2.0, 3.0)
            .with_field(0.5)
            .with_field_imbalance(0.25)
            .with_dm(0.75);
        let temp = kt(0.8);
        let closed = gibbs_closed(&p, temp).unwrap();
        let numeric = gibbs_numeric(&p.hamiltonian().unwrap(), temp).unwrap();
        assert!((closed.matrix().clone() - numeric.matrix().clone()).max_abs() < 1e-10);

        // spot values frozen from an independent eigendecomposition pipeline
        assert!((closed.entry(0, 0).re - 1.9533174211719432e-3).abs() < 1e-12);
        assert!((closed.entry(0, 3).re - 1.960250745317988e-3).abs() < 1e-12);
        let r23 = closed.entry(1, 2);
        assert!((r23.re - -0.42638456099901634).abs() < 1e-12);
        assert!((r23.im - -0.2131922804995082).abs() < 1e-12);
    }

    #[test]
    fn off_diagonal_modulus_and_phase() {
        // |rho23| = sqrt(J+^2 + D^2)/nu * sinh(nu/kT) * e^{Jz/2kT} / Z and
        // the phase is that of -(J+ + iD).
        let p = ModelParams::exchange(1.0, 2.0, 3.0)
            .with_field(0.5)
            .with_field_imbalance(0.25)
            .with_dm(0.75);
        let temp = kt(0.8);
        let d = p.derived().unwrap();
        let rho = gibbs_closed(&p, temp).unwrap();
        let z = partition_function(&p, temp).unwrap().value();
        let expected = d.j_plus.hypot(p.dm) / d.nu * (d.nu / 0.8).sinh() * (p.jz / 1.6).exp() / z;
        let r23 = rho.entry(1, 2);
        assert!((r23.norm() - expected).abs() < 1e-12);
        let phase_expected = C64::new(-d.j_plus, -p.dm).arg();
        assert!((r23.arg() - phase_expected).abs() < 1e-12);
    }

    #[test]
    fn shifted_and_direct_closed_forms_agree() {
        // a point where both evaluation regimes are valid
        let p = ModelParams::xxx(1.0).with_dm(0.5);
        let temp = kt(0.02);
        let direct = gibbs_closed(&p, temp).unwrap();
        let shifted = gibbs_closed_shifted(&p, temp);
        assert!((direct.matrix().clone() - shifted.matrix().clone()).max_abs() < 1e-13);
    }

    #[test]
    fn extreme_temperature_uses_shifted_form() {
        // (|Jz|/2 + nu)/kT far beyond exp range; entries must stay finite
        let p = ModelParams::xxx(1.0);
        let rho = gibbs_closed(&p, kt(1e-4)).unwrap();
        assert!(rho.matrix().is_finite());
        let (herm, tr, neg) = rho.invariant_violations();
        assert!(herm < 1e-12 && tr < 1e-12 && neg > -1e-12);
        // ground state of the XXX antiferromagnet is the singlet
        let singlet = Vec4::from_reals([0.0, 1.0, -1.0, 0.0]).normalized();
        assert!(rho.fidelity_with_pure(&singlet) > 1.0 - 1e-9);
    }

    #[test]
    fn gibbs_numeric_trivial_cases() {
        let rho = gibbs_numeric(&Mat4::zero(), kt(1.0)).unwrap();
        assert!((rho.matrix().clone() - Mat4::identity().scaled(0.25)).max_abs() < 1e-15);

        // kT -> 0 with a unique ground state: projector onto it
        let p = ModelParams::xxx(1.0);
        let rho = gibbs_numeric(&p.hamiltonian().unwrap(), kt(1e-3)).unwrap();
        let singlet = Vec4::from_reals([0.0, 1.0, -1.0, 0.0]).normalized();
        assert!(rho.fidelity_with_pure(&singlet) >= 1.0 - 1e-6);

        let tr = rho.matrix().trace();
        assert!((tr.re - 1.0).abs() < 1e-12 && tr.im.abs() < 1e-12);
    }

    #[test]
    fn thermal_state_commutes_with_hamiltonian() {
        let p = ModelParams::exchange(-1.5, 2.0, 0.7)
            .with_field(1.1)
            .with_field_imbalance(-0.4)
            .with_dm(0.9);
        let h = p.hamiltonian().unwrap();
        let rho = gibbs_closed(&p, kt(0.6)).unwrap();
        let comm = h * rho.matrix().clone() - rho.matrix().clone() * h;
        assert!(comm.max_abs() < 1e-10);
    }

    #[test]
    fn gibbs_states_keep_the_block_pattern() {
        let p = ModelParams::exchange(2.0, -1.0, 0.5)
            .with_field(0.3)
            .with_field_imbalance(0.2)
            .with_dm(1.5);
        let rho = gibbs_closed(&p, kt(1.0)).unwrap();
        assert!(has_block_pattern(rho.matrix(), 1e-15));
        let rho = gibbs_numeric(&p.hamiltonian().unwrap(), kt(1.0)).unwrap();
        assert!(has_block_pattern(rho.matrix(), 1e-14));
    }

    #[test]
    fn from_matrix_validates() {
        assert!(DensityMatrix::from_matrix(Mat4::identity().scaled(0.25)).is_ok());
        // wrong trace
        assert!(DensityMatrix::from_matrix(Mat4::identity()).is_err());
        // not PSD: diag(0.75, 0.75, -0.25, -0.25)
        assert!(DensityMatrix::from_matrix(Mat4::diag([0.75, 0.75, -0.25, -0.25])).is_err());
        // not Hermitian
        let mut m = Mat4::identity().scaled(0.25);
        m.e[0][1] = C64::new(0.1, 0.0);
        assert!(DensityMatrix::from_matrix(m).is_err());
    }

    #[test]
    fn unitary_conjugate_requires_unitary() {
        let rho = DensityMatrix::maximally_mixed();
        assert!(rho.unitary_conjugate(&Mat4::identity()).is_ok());
        assert!(rho.unitary_conjugate(&Mat4::identity().scaled(2.0)).is_err());
    }
}

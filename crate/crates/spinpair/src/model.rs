//! Model parameters and the two-qubit Hamiltonian.
//!
//! The model is the general XYZ Heisenberg exchange between two qubits, with
//! a homogeneous z-axis field `B`, an inhomogeneous (differential) field `b`,
//! and a Dzyaloshinskii-Moriya coupling `D` along z:
//!
//! ```text
//! H = 1/2 [ Jx sx(1)sx(2) + Jy sy(1)sy(2) + Jz sz(1)sz(2)
//!           + (B+b) sz(1) + (B-b) sz(2) + D (sx(1)sy(2) - sy(1)sx(2)) ]
//! ```
//!
//! In the computational basis |00>, |01>, |10>, |11> (with sz|0> = +|0>) the
//! matrix splits into two 2x2 blocks: {|00>,|11>} governed by the derived
//! pair (B, J-) and {|01>,|10>} by (b, J+, D). All closed forms downstream
//! are written in terms of the block invariants `mu` and `nu`.

use crate::error::{Error, Result};
use crate::linalg::{C64, Mat4};

/// Couplings and fields of the two-qubit model. All quantities are energies
/// in the same (arbitrary) unit as `kT`; the Boltzmann constant is absorbed.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ModelParams {
    /// Exchange coupling along x.
    pub jx: f64,
    /// Exchange coupling along y.
    pub jy: f64,
    /// Exchange coupling along z.
    pub jz: f64,
    /// Homogeneous z field B (same on both qubits).
    pub field: f64,
    /// Inhomogeneous z field b (opposite sign on the two qubits).
    pub field_imbalance: f64,
    /// Dzyaloshinskii-Moriya coupling strength D (z component).
    pub dm: f64,
}

impl ModelParams {
    /// Exchange-only parameters; fields and DM coupling zero.
    pub fn exchange(jx: f64, jy: f64, jz: f64) -> Self {
        ModelParams {
            jx,
            jy,
            jz,
            ..Default::default()
        }
    }

    /// Isotropic XXX model with coupling `j`.
    pub fn xxx(j: f64) -> Self {
        Self::exchange(j, j, j)
    }

    /// Planar isotropic XX model with coupling `j`.
    pub fn xx(j: f64) -> Self {
        Self::exchange(j, j, 0.0)
    }

    /// Axially symmetric XXZ model.
    pub fn xxz(j: f64, jz: f64) -> Self {
        Self::exchange(j, j, jz)
    }

    /// Single-axis Ising model.
    pub fn ising(jz: f64) -> Self {
        Self::exchange(0.0, 0.0, jz)
    }

    pub fn with_field(mut self, field: f64) -> Self {
        self.field = field;
        self
    }

    pub fn with_field_imbalance(mut self, field_imbalance: f64) -> Self {
        self.field_imbalance = field_imbalance;
        self
    }

    pub fn with_dm(mut self, dm: f64) -> Self {
        self.dm = dm;
        self
    }

    /// Rejects NaN or infinite entries.
    pub fn validate(&self) -> Result<()> {
        let named = [
            ("jx", self.jx),
            ("jy", self.jy),
            ("jz", self.jz),
            ("field", self.field),
            ("field_imbalance", self.field_imbalance),
            ("dm", self.dm),
        ];
        for (name, value) in named {
            if !value.is_finite() {
                return Err(Error::NonFiniteParam { name, value });
            }
        }
        Ok(())
    }

    /// Largest parameter magnitude; a crude energy scale for solvers.
    pub fn max_abs(&self) -> f64 {
        [
            self.jx,
            self.jy,
            self.jz,
            self.field,
            self.field_imbalance,
            self.dm,
        ]
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Derived block invariants for these parameters.
    pub fn derived(&self) -> Result<Derived> {
        self.validate()?;
        let j_plus = 0.5 * (self.jx + self.jy);
        let j_minus = 0.5 * (self.jx - self.jy);
        Ok(Derived {
            j_plus,
            j_minus,
            mu: self.field.hypot(j_minus),
            nu: self.field_imbalance.hypot(j_plus).hypot(self.dm),
        })
    }

    /// The two-qubit Hamiltonian in the computational basis.
    ///
    /// Only eight entries are nonzero: the diagonal, the (0,3)/(3,0) corner
    /// pair carrying J-, and the (1,2)/(2,1) pair carrying J+ and D.
    pub fn hamiltonian(&self) -> Result<Mat4> {
        let d = self.derived()?;
        let mut h = Mat4::zero();
        let half_jz = 0.5 * self.jz;
        h.e[0][0] = (half_jz + self.field).into();
        h.e[1][1] = (-half_jz + self.field_imbalance).into();
        h.e[2][2] = (-half_jz - self.field_imbalance).into();
        h.e[3][3] = (half_jz - self.field).into();
        h.e[0][3] = d.j_minus.into();
        h.e[3][0] = d.j_minus.into();
        h.e[1][2] = C64::new(d.j_plus, self.dm);
        h.e[2][1] = C64::new(d.j_plus, -self.dm);
        Ok(h)
    }
}

/// Combinations of the couplings that control the two invariant blocks:
/// `mu` (the {|00>,|11>} block) and `nu` (the {|01>,|10>} block).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derived {
    /// (Jx + Jy) / 2
    pub j_plus: f64,
    /// (Jx - Jy) / 2
    pub j_minus: f64,
    /// sqrt(B^2 + J-^2), always >= max(|B|, |J-|)
    pub mu: f64,
    /// sqrt(b^2 + J+^2 + D^2), always >= max(|b|, |J+|, |D|)
    pub nu: f64,
}

/// Thermal energy kT > 0 (Boltzmann constant absorbed into the unit).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperature {
    kt: f64,
}

impl Temperature {
    pub fn new(kt: f64) -> Result<Self> {
        if !kt.is_finite() || kt <= 0.0 {
            return Err(Error::InvalidTemperature(kt));
        }
        Ok(Temperature { kt })
    }

    pub fn kt(self) -> f64 {
        self.kt
    }

    /// Inverse temperature 1/kT.
    pub fn beta(self) -> f64 {
        1.0 / self.kt
    }
}

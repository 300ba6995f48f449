//! Dense 4x4 complex linear algebra.
//!
//! Everything this crate needs fits in fixed-size 4x4 Hermitian problems, so
//! the matrix type and the two spectral routines (cyclic Jacobi
//! eigendecomposition and one-sided Jacobi SVD) are implemented here directly.
//! Jacobi iterations on a 4x4 converge quadratically in a handful of sweeps
//! and are backward stable, which is what the cross-path oracle tests rely on.

use num_complex::Complex64;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

pub type C64 = Complex64;

pub const C_ZERO: C64 = Complex64::new(0.0, 0.0);
pub const C_ONE: C64 = Complex64::new(1.0, 0.0);

/// A 4-component complex vector (a two-qubit state in the computational basis
/// |00>, |01>, |10>, |11>).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec4 {
    pub e: [C64; 4],
}

impl Vec4 {
    pub fn zero() -> Self {
        Vec4 { e: [C_ZERO; 4] }
    }

    pub fn basis(k: usize) -> Self {
        let mut v = Vec4::zero();
        v.e[k] = C_ONE;
        v
    }

    pub fn from_reals(r: [f64; 4]) -> Self {
        Vec4 {
            e: [r[0].into(), r[1].into(), r[2].into(), r[3].into()],
        }
    }

    /// Inner product `<self|other>` (conjugate-linear in `self`).
    pub fn dot(&self, other: &Vec4) -> C64 {
        let mut s = C_ZERO;
        for k in 0..4 {
            s += self.e[k].conj() * other.e[k];
        }
        s
    }

    pub fn norm_sqr(&self) -> f64 {
        self.e.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scaled(&self, z: C64) -> Vec4 {
        let mut v = *self;
        for k in 0..4 {
            v.e[k] *= z;
        }
        v
    }

    pub fn normalized(&self) -> Vec4 {
        let n = self.norm();
        self.scaled(C64::new(1.0 / n, 0.0))
    }

    /// Outer product `|self><other|`.
    pub fn outer(&self, other: &Vec4) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] = self.e[i] * other.e[j].conj();
            }
        }
        m
    }

    /// Multiplies by the phase that makes the first component of modulus
    /// above `tol` real and positive. Leaves the zero vector untouched.
    pub fn phase_fixed(&self, tol: f64) -> Vec4 {
        for k in 0..4 {
            let z = self.e[k];
            if z.norm() > tol {
                return self.scaled(z.conj() / z.norm());
            }
        }
        *self
    }
}

/// A dense 4x4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4 {
    pub e: [[C64; 4]; 4],
}

impl Index<(usize, usize)> for Mat4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.e[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.e[i][j]
    }
}

impl Mat4 {
    pub fn zero() -> Self {
        Mat4 {
            e: [[C_ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for k in 0..4 {
            m.e[k][k] = C_ONE;
        }
        m
    }

    pub fn diag(d: [f64; 4]) -> Self {
        let mut m = Mat4::zero();
        for k in 0..4 {
            m.e[k][k] = d[k].into();
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec4 {
        Vec4 {
            e: [self.e[0][j], self.e[1][j], self.e[2][j], self.e[3][j]],
        }
    }

    pub fn columns(&self) -> [Vec4; 4] {
        [
            self.column(0),
            self.column(1),
            self.column(2),
            self.column(3),
        ]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] = self.e[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Mat4 {
        let mut m = *self;
        for row in m.e.iter_mut() {
            for z in row.iter_mut() {
                *z = z.conj();
            }
        }
        m
    }

    pub fn scaled(&self, x: f64) -> Mat4 {
        let mut m = *self;
        for row in m.e.iter_mut() {
            for z in row.iter_mut() {
                *z *= x;
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1] + self.e[2][2] + self.e[3][3]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation from Hermiticity, `max |m[i][j] - conj(m[j][i])|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                dev = dev.max((self.e[i][j] - self.e[j][i].conj()).norm());
            }
        }
        dev
    }

    pub fn is_finite(&self) -> bool {
        self.e
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn mul_vec(&self, v: &Vec4) -> Vec4 {
        let mut out = Vec4::zero();
        for i in 0..4 {
            let mut s = C_ZERO;
            for j in 0..4 {
                s += self.e[i][j] * v.e[j];
            }
            out.e[i] = s;
        }
        out
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] += rhs.e[i][j];
            }
        }
        m
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.e[i][j] -= rhs.e[i][j];
            }
        }
        m
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.e[i][k];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..4 {
                    m.e[i][j] += a * rhs.e[k][j];
                }
            }
        }
        m
    }
}

/// The 2x2 complex Jacobi rotation that annihilates the off-diagonal entry of
/// the Hermitian block [[app, apq], [conj(apq), aqq]]. Returns `(c, s_phase)`
/// so that the unitary is [[c, -s_phase], [conj(s_phase), c]].
fn jacobi_rotation(app: f64, aqq: f64, apq: C64) -> (f64, C64) {
    let babs = apq.norm();
    let phase = apq / babs;
    let tau = (app - aqq) / (2.0 * babs);
    let t = if tau == 0.0 {
        1.0
    } else if tau.abs() > 1e150 {
        // avoids overflow in tau^2; the small-angle limit of the formula
        0.5 / tau
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, phase * (t * c))
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order with matching orthonormal
/// eigenvectors; each eigenvector phase is fixed so that its first
/// significant component is real and positive. The input is symmetrized
/// before iterating, so tiny Hermiticity violations are tolerated.
pub fn eigh(m: &Mat4) -> ([f64; 4], [Vec4; 4]) {
    // (m + m^dagger)/2: exact for Hermitian input.
    let mut a = (*m + m.adjoint()).scaled(0.5);
    let mut v = Mat4::identity();
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);

    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..3 {
            for q in (p + 1)..4 {
                off += a.e[p][q].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a.e[p][q];
                if apq.norm() <= 1e-300 {
                    continue;
                }
                let (c, s_ph) = jacobi_rotation(a.e[p][p].re, a.e[q][q].re, apq);
                let mut g = Mat4::identity();
                g.e[p][p] = c.into();
                g.e[p][q] = -s_ph;
                g.e[q][p] = s_ph.conj();
                g.e[q][q] = c.into();
                a = g.adjoint() * a * g;
                v = v * g;
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    let evals = [a.e[0][0].re, a.e[1][1].re, a.e[2][2].re, a.e[3][3].re];
    order.sort_by(|&i, &j| evals[i].total_cmp(&evals[j]));

    let mut values = [0.0f64; 4];
    let mut vectors = [Vec4::zero(); 4];
    for (slot, &k) in order.iter().enumerate() {
        values[slot] = evals[k];
        vectors[slot] = v.column(k).phase_fixed(1e-8);
    }
    (values, vectors)
}

/// Singular values of a 4x4 complex matrix, descending, by one-sided Jacobi.
///
/// Columns are rotated pairwise until mutually orthogonal; the singular
/// values are then the column norms. This avoids forming A^dagger A, so small
/// singular values keep full absolute accuracy.
pub fn singular_values(m: &Mat4) -> [f64; 4] {
    let mut cols = m.columns();
    for _sweep in 0..100 {
        let mut rotated = false;
        for i in 0..3 {
            for j in (i + 1)..4 {
                let g11 = cols[i].norm_sqr();
                let g22 = cols[j].norm_sqr();
                if g11 == 0.0 || g22 == 0.0 {
                    continue;
                }
                let g12 = cols[i].dot(&cols[j]);
                if g12.norm() <= 1e-15 * (g11 * g22).sqrt() {
                    continue;
                }
                rotated = true;
                let (c, s_ph) = jacobi_rotation(g11, g22, g12);
                let (ci, cj) = (cols[i], cols[j]);
                for k in 0..4 {
                    cols[i].e[k] = c * ci.e[k] + s_ph.conj() * cj.e[k];
                    cols[j].e[k] = -s_ph * ci.e[k] + c * cj.e[k];
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv = [
        cols[0].norm(),
        cols[1].norm(),
        cols[2].norm(),
        cols[3].norm(),
    ];
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

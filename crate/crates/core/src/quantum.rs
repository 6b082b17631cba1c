//! Quantum-mechanical consistency checks for the bond representation.
//!
//! The radial factor `R(r) = r/r₀` together with `V(r) = E − α₀/r²`,
//! `α₀ = ħ²/2μ·[l(l+1) − 2]`, solves the radial Schrödinger equation, and
//! `e^{imϑ}` solves the azimuthal one. Both are checked here with central
//! second-order finite differences, boundary points excluded.
//!
//! The two-level part treats `|Ψ_L⟩, |Ψ_R⟩` as a basis: rotations act
//! trivially, inversions swap the handed states, and the parity states
//! `(|Ψ_L⟩ ± |Ψ_R⟩)/√2` are eigenvectors of every operator.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use num_complex::Complex64;

use crate::algebra::{Kind, Operator};
use crate::error::{ChiralError, Result};

/// Tolerance for state normalization and proportionality.
pub const STATE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    l: u32,
    energy: f64,
    r0: f64,
    hbar2_over_2mu: f64,
    alpha_shift: f64,
}

impl RadialProblem {
    /// Dimensionless defaults: `r₀ = 1`, `ħ²/2μ = 1`.
    pub fn new(l: u32, energy: f64) -> Result<Self> {
        if !energy.is_finite() {
            return Err(ChiralError::Argument(format!("energy must be finite, got {energy}")));
        }
        Ok(Self { l, energy, r0: 1.0, hbar2_over_2mu: 1.0, alpha_shift: 0.0 })
    }

    pub fn with_r0(mut self, r0: f64) -> Result<Self> {
        if !(r0 > 0.0 && r0.is_finite()) {
            return Err(ChiralError::Argument(format!("r0 must be positive, got {r0}")));
        }
        self.r0 = r0;
        Ok(self)
    }

    pub fn with_hbar2_over_2mu(mut self, value: f64) -> Result<Self> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(ChiralError::Argument(format!("hbar^2/2mu must be positive, got {value}")));
        }
        self.hbar2_over_2mu = value;
        Ok(self)
    }

    /// Adds `delta` to `α₀`; the radial factor then no longer solves the equation.
    pub fn with_alpha_shift(mut self, delta: f64) -> Self {
        self.alpha_shift = delta;
        self
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn alpha0(&self) -> f64 {
        let l = self.l as f64;
        self.hbar2_over_2mu * (l * (l + 1.0) - 2.0) + self.alpha_shift
    }

    pub fn radial_factor(&self, r: f64) -> f64 {
        r / self.r0
    }

    pub fn potential(&self, r: f64) -> f64 {
        self.energy - self.alpha0() / (r * r)
    }
}

fn check_grid(r_min: f64, r_max: f64, samples: usize) -> Result<()> {
    if !(r_min > 0.0) {
        return Err(ChiralError::Argument(format!("rMin must be > 0, got {r_min}")));
    }
    if !(r_max > r_min) {
        return Err(ChiralError::Argument(format!("rMax must exceed rMin, got [{r_min}, {r_max}]")));
    }
    if samples < 3 {
        return Err(ChiralError::Argument(format!("need at least 3 samples, got {samples}")));
    }
    Ok(())
}

/// Max |residual| of the radial equation over the interior of a uniform grid.
pub fn radial_residual(p: &RadialProblem, r_min: f64, r_max: f64, samples: usize) -> Result<f64> {
    check_grid(r_min, r_max, samples)?;
    let h = (r_max - r_min) / (samples - 1) as f64;
    let radius = |i: usize| r_min + i as f64 * h;
    let values: Vec<f64> = (0..samples).map(|i| p.radial_factor(radius(i))).collect();
    let ll = (p.l * (p.l + 1)) as f64;
    let worst = (1..samples - 1)
        .map(|i| {
            let r = radius(i);
            let v = values[i];
            let d1 = (values[i + 1] - values[i - 1]) / (2.0 * h);
            let d2 = (values[i + 1] - 2.0 * v + values[i - 1]) / (h * h);
            let kinetic = -p.hbar2_over_2mu * (d2 + 2.0 / r * d1 - ll * v / (r * r));
            (kinetic + p.potential(r) * v - p.energy * v).abs()
        })
        .fold(0.0, f64::max);
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refinement {
    pub coarse: f64,
    pub fine: f64,
    pub coarse_samples: usize,
    pub fine_samples: usize,
}

impl Refinement {
    /// `coarse / fine`; 16 for a clean second-order scheme.
    pub fn reduction(&self) -> f64 {
        self.coarse / self.fine
    }
}

/// Number of samples with four times as many grid intervals.
pub fn refined_samples(samples: usize) -> usize {
    4 * (samples - 1) + 1
}

pub fn radial_refinement(p: &RadialProblem, r_min: f64, r_max: f64, samples: usize) -> Result<Refinement> {
    let fine_samples = refined_samples(samples);
    Ok(Refinement {
        coarse: radial_residual(p, r_min, r_max, samples)?,
        fine: radial_residual(p, r_min, r_max, fine_samples)?,
        coarse_samples: samples,
        fine_samples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AzimuthalProblem {
    pub m: i32,
}

impl AzimuthalProblem {
    pub fn new(m: i32) -> Self {
        Self { m }
    }

    pub fn solution(&self, angle: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.m as f64 * angle)
    }
}

/// Max |Φ″ + m²Φ| for `Φ = e^{imϑ}` sampled at `samples` points over `[0, 2π)`.
pub fn azimuthal_residual(p: &AzimuthalProblem, samples: usize) -> Result<f64> {
    if samples < 3 {
        return Err(ChiralError::Argument(format!("need at least 3 samples, got {samples}")));
    }
    let h = TAU / samples as f64;
    let phi: Vec<Complex64> = (0..samples).map(|k| p.solution(k as f64 * h)).collect();
    let m2 = (p.m as f64).powi(2);
    let worst = (1..samples - 1)
        .map(|k| {
            let d2 = (phi[k + 1] - phi[k] * 2.0 + phi[k - 1]) / (h * h);
            (d2 + phi[k] * m2).norm()
        })
        .fold(0.0, f64::max);
    Ok(worst)
}

/// Closed-form truncation error of the three-point stencil on `e^{imϑ}`:
/// `|m² − 4 sin²(mh/2)/h²|` with `h = 2π/samples`.
pub fn azimuthal_truncation(m: i32, samples: usize) -> f64 {
    let h = TAU / samples as f64;
    let m = m as f64;
    (m * m - 4.0 * (m * h / 2.0).sin().powi(2) / (h * h)).abs()
}

pub fn azimuthal_refinement(p: &AzimuthalProblem, samples: usize) -> Result<Refinement> {
    let fine_samples = 4 * samples;
    Ok(Refinement {
        coarse: azimuthal_residual(p, samples)?,
        fine: azimuthal_residual(p, fine_samples)?,
        coarse_samples: samples,
        fine_samples,
    })
}

/// Bond energies `E_j` of one centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyVector([f64; 4]);

impl EnergyVector {
    pub fn new(energies: [f64; 4]) -> Result<Self> {
        if energies.iter().any(|e| !e.is_finite()) {
            return Err(ChiralError::Argument(format!("energies must be finite: {energies:?}")));
        }
        Ok(Self(energies))
    }

    pub fn degenerate(e: f64) -> Result<Self> {
        Self::new([e; 4])
    }

    pub fn values(&self) -> [f64; 4] {
        self.0
    }
}

/// Whether `diag(E)` commutes with the operator's matrix (within 1e-12).
pub fn hamiltonian_commutes(energies: &EnergyVector, op: &Operator) -> bool {
    let e = energies.0;
    let m = op.matrix();
    (0..4).all(|i| {
        (0..4).all(|j| {
            let hp = e[i] * m[i][j] as f64;
            let ph = m[i][j] as f64 * e[j];
            (hp - ph).abs() <= STATE_EPS
        })
    })
}

/// Amplitudes on `|Ψ_L⟩` and `|Ψ_R⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralState {
    pub left: Complex64,
    pub right: Complex64,
}

impl ChiralState {
    pub fn new(left: Complex64, right: Complex64) -> Result<Self> {
        let s = Self { left, right };
        if (s.norm_sqr() - 1.0).abs() > STATE_EPS {
            return Err(ChiralError::Invariant(format!("state norm^2 is {}, not 1", s.norm_sqr())));
        }
        Ok(s)
    }

    pub fn left_handed() -> Self {
        Self { left: Complex64::new(1.0, 0.0), right: Complex64::new(0.0, 0.0) }
    }

    pub fn right_handed() -> Self {
        Self { left: Complex64::new(0.0, 0.0), right: Complex64::new(1.0, 0.0) }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.left.norm_sqr() + self.right.norm_sqr()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &ChiralState) -> Complex64 {
        self.left.conj() * other.left + self.right.conj() * other.right
    }

    pub fn scaled(&self, s: f64) -> ChiralState {
        ChiralState { left: self.left * s, right: self.right * s }
    }

    pub fn approx_eq(&self, other: &ChiralState) -> bool {
        (self.left - other.left).norm() <= STATE_EPS && (self.right - other.right).norm() <= STATE_EPS
    }
}

/// Rotations leave the state alone; inversions swap the handed amplitudes.
pub fn chiral_action(op: &Operator, s: &ChiralState) -> ChiralState {
    match op.kind() {
        Kind::Rotation => *s,
        Kind::Inversion => ChiralState { left: s.right, right: s.left },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Plus,
    Minus,
}

/// `(|Ψ+⟩, |Ψ−⟩)` with `|Ψ±⟩ = (|Ψ_L⟩ ± |Ψ_R⟩)/√2`.
pub fn parity_states() -> (ChiralState, ChiralState) {
    let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
    (ChiralState { left: a, right: a }, ChiralState { left: a, right: -a })
}

pub fn parity_state(which: Parity) -> ChiralState {
    let (plus, minus) = parity_states();
    match which {
        Parity::Plus => plus,
        Parity::Minus => minus,
    }
}

/// The sign `s` with `op|Ψ±⟩ = s|Ψ±⟩`.
pub fn parity_eigenphase(op: &Operator, which: Parity) -> Result<i8> {
    let state = parity_state(which);
    let out = chiral_action(op, &state);
    if out.approx_eq(&state) {
        Ok(1)
    } else if out.approx_eq(&state.scaled(-1.0)) {
        Ok(-1)
    } else {
        Err(ChiralError::Invariant(format!("{} mixes the {which:?} parity state", op.id())))
    }
}

pub type Matrix2 = [[f64; 2]; 2];

fn mat2_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Symmetric tunnelling Hamiltonian in the (L, R) basis. `asym` is a
/// parity-odd energy splitting between the handed states.
pub fn two_state_hamiltonian(even_e: f64, odd_delta: f64, asym: f64) -> Matrix2 {
    [[even_e + asym, odd_delta], [odd_delta, even_e - asym]]
}

/// Swap of the handed states.
pub const PARITY_MATRIX: Matrix2 = [[0.0, 1.0], [1.0, 0.0]];

/// `[P, H] = PH − HP`.
pub fn hund_commutator(even_e: f64, odd_delta: f64, asym: f64) -> Matrix2 {
    let h = two_state_hamiltonian(even_e, odd_delta, asym);
    let ph = mat2_mul(&PARITY_MATRIX, &h);
    let hp = mat2_mul(&h, &PARITY_MATRIX);
    [[ph[0][0] - hp[0][0], ph[0][1] - hp[0][1]], [ph[1][0] - hp[1][0], ph[1][1] - hp[1][1]]]
}

pub fn is_zero_matrix(m: &Matrix2, tol: f64) -> bool {
    m.iter().flatten().all(|x| x.abs() <= tol)
}

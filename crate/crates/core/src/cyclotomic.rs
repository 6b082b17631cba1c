//! Exact arithmetic in the ring of integers of the 12th cyclotomic field.
//!
//! Every eigenvalue of a 4×4 permutation matrix is a root of unity of order
//! 1, 2, 3 or 4, and all of them live in `Z[ζ]` with `ζ = e^{2πi/12}`. An
//! element is stored as `a0 + a1·ζ + a2·ζ² + a3·ζ³` reduced modulo the
//! cyclotomic polynomial `ζ⁴ − ζ² + 1`, so the representation is canonical
//! and structural equality is exact equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Cyclotomic12 {
    coeffs: [i64; 4],
}

impl Cyclotomic12 {
    pub const ZERO: Self = Self { coeffs: [0; 4] };
    pub const ONE: Self = Self { coeffs: [1, 0, 0, 0] };

    pub fn from_int(n: i64) -> Self {
        Self { coeffs: [n, 0, 0, 0] }
    }

    /// `ζ^k` for any integer `k`.
    pub fn root_of_unity(k: i64) -> Self {
        let k = k.rem_euclid(12);
        let zeta = Self { coeffs: [0, 1, 0, 0] };
        (0..k).fold(Self::ONE, |acc, _| acc * zeta)
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 4]
    }

    fn reduce(mut wide: [i64; 7]) -> Self {
        // ζ^d = ζ^(d-2) − ζ^(d-4) for d ≥ 4
        for d in (4..7).rev() {
            let c = wide[d];
            if c != 0 {
                wide[d] = 0;
                wide[d - 2] += c;
                wide[d - 4] -= c;
            }
        }
        Self { coeffs: [wide[0], wide[1], wide[2], wide[3]] }
    }

    pub fn to_complex(&self) -> Complex64 {
        (0..4).fold(Complex64::new(0.0, 0.0), |acc, k| {
            let angle = std::f64::consts::PI * k as f64 / 6.0;
            acc + Complex64::from_polar(self.coeffs[k] as f64, angle)
        })
    }

    pub fn pow(self, exp: u32) -> Self {
        (0..exp).fold(Self::ONE, |acc, _| acc * self)
    }
}

impl Add for Cyclotomic12 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.coeffs;
        for (a, b) in c.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        Self { coeffs: c }
    }
}

impl Sub for Cyclotomic12 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic12 {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl Mul for Cyclotomic12 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut wide = [0i64; 7];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                wide[i + j] += a * b;
            }
        }
        Self::reduce(wide)
    }
}

impl fmt::Display for Cyclotomic12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}ζ"),
                _ => format!("{c}ζ^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

//! Internal-state rotations applied before each tunneling pulse.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A unitary matrix is accepted when no entry of `U† U - 1` exceeds this.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

/// A 2x2 unitary acting on the internal (two-level) degree of freedom.
///
/// Unitarity is checked once at construction, so applying a coin never has to
/// fail. Entries are stored row-major: `entries[row][col]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinOperator {
    entries: [[Complex64; 2]; 2],
}

impl CoinOperator {
    /// Validates unitarity and wraps the matrix.
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let deviation = unitarity_deviation(&entries);
        if deviation > UNITARITY_TOLERANCE {
            return Err(Error::NonUnitaryCoin { deviation });
        }
        Ok(CoinOperator { entries })
    }

    /// The balanced coin `[[1, 1], [1, -1]] / sqrt(2)`.
    pub fn hadamard() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        CoinOperator {
            entries: [[h, h], [h, -h]],
        }
    }

    /// The trivial coin; useful for isolating the tunneling pulses in tests.
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        CoinOperator {
            entries: [[one, zero], [zero, one]],
        }
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    /// Matrix-vector product on one internal-state pair.
    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.entries[0][0] * v[0] + self.entries[0][1] * v[1],
            self.entries[1][0] * v[0] + self.entries[1][1] * v[1],
        ]
    }
}

/// Largest absolute entry of `U† U - 1`.
fn unitarity_deviation(u: &[[Complex64; 2]; 2]) -> f64 {
    let mut worst: f64 = 0.0;
    for row in 0..2 {
        for col in 0..2 {
            // (U† U)[row][col] = sum_k conj(U[k][row]) * U[k][col]
            let sum: Complex64 = u.iter().map(|u_k| u_k[row].conj() * u_k[col]).sum();
            let expected = if row == col { 1.0 } else { 0.0 };
            worst = worst.max((sum - expected).norm());
        }
    }
    worst
}

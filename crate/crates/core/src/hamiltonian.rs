//! The 8×8 Stark-Zeeman matrix
//!
//! ```text
//! H = | A₁ − A₂    −C     |
//!     |   −C     A₁ + A₂  |
//! ```
//!
//! with `A₁ = (B̃/10) diag(−3, −1, 1, 3)`, `A₂ = (Δ̃/10) I` and `C = (Ẽ/10) M(θ)`.
//! The first four basis states form the `A₁ − A₂` block.

use std::fmt;

use crate::units::ScaledParameters;

pub type Block4 = [[f64; 4]; 4];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockMatrices {
    pub a1: Block4,
    pub a2: Block4,
    pub c: Block4,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricMatrix8 {
    pub entries: [[f64; 8]; 8],
}

/// `M(θ)`: `2(cos θ J_z + sin θ J_x)` for J = 3/2.
fn stark_block(theta: f64) -> Block4 {
    let (s, c) = theta.sin_cos();
    let r3 = 3f64.sqrt();
    [
        [-3.0 * c, r3 * s, 0.0, 0.0],
        [r3 * s, -c, 2.0 * s, 0.0],
        [0.0, 2.0 * s, c, r3 * s],
        [0.0, 0.0, r3 * s, 3.0 * c],
    ]
}

pub fn build_blocks(p: &ScaledParameters) -> BlockMatrices {
    let mut a1 = [[0.0; 4]; 4];
    let mut a2 = [[0.0; 4]; 4];
    for (i, m) in [-3.0, -1.0, 1.0, 3.0].into_iter().enumerate() {
        a1[i][i] = p.b_tilde / 10.0 * m;
        a2[i][i] = p.delta_tilde / 10.0;
    }
    let mut c = stark_block(p.theta);
    for row in c.iter_mut() {
        for v in row.iter_mut() {
            *v *= p.e_tilde / 10.0;
        }
    }
    BlockMatrices { a1, a2, c }
}

pub fn assemble(blocks: &BlockMatrices) -> SymmetricMatrix8 {
    let mut h = [[0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            h[i][j] = blocks.a1[i][j] - blocks.a2[i][j];
            h[i + 4][j + 4] = blocks.a1[i][j] + blocks.a2[i][j];
            h[i][j + 4] = -blocks.c[i][j];
            h[i + 4][j] = -blocks.c[i][j];
        }
    }
    SymmetricMatrix8 { entries: h }
}

impl SymmetricMatrix8 {
    pub fn from_params(p: &ScaledParameters) -> Self {
        assemble(&build_blocks(p))
    }

    pub fn zeros() -> Self {
        Self { entries: [[0.0; 8]; 8] }
    }

    pub fn trace(&self) -> f64 {
        (0..8).map(|i| self.entries[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0f64;
        for i in 0..8 {
            for j in (i + 1)..8 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i]).abs());
            }
        }
        worst
    }
}

/// Eight lines of eight space-separated values.
impl fmt::Display for SymmetricMatrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|v| format!("{v:.12e}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

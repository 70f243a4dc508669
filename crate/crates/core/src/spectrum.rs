//! Closed-form eigenvalues.
//!
//! The characteristic polynomial of the matrix is even in λ, so it is a
//! quartic in `m = λ²`. Solving that quartic gives the eight eigenvalues as
//! `±√m`, labelled λ₁ ≥ … ≥ λ₈.

use crate::algebra::{determinant, solve_quartic, Polynomial};
use crate::error::{Error, Result};
use crate::hamiltonian::SymmetricMatrix8;
use crate::units::ScaledParameters;

/// `P(λ) = |H − λI| = Σ pₖ λᵏ`, monic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPoly {
    pub p: [f64; 9],
}

impl CharPoly {
    pub fn eval(&self, lambda: f64) -> f64 {
        self.p.iter().rev().fold(0.0, |acc, &c| acc * lambda + c)
    }

    /// Largest odd coefficient relative to the largest coefficient.
    pub fn oddness(&self) -> f64 {
        let max = self.p.iter().fold(0f64, |m, c| m.max(c.abs()));
        let odd = [1, 3, 5, 7].iter().fold(0f64, |m, &k| m.max(self.p[k].abs()));
        odd / max
    }

    /// `Q(m) = m⁴ + p₆m³ + p₄m² + p₂m + p₀`.
    pub fn quartic_in_square(&self) -> Polynomial {
        Polynomial::new(vec![self.p[0], self.p[2], self.p[4], self.p[6], 1.0])
    }
}

/// Faddeev–LeVerrier trace recursion.
pub fn characteristic_polynomial(m: &SymmetricMatrix8) -> Result<CharPoly> {
    let asym = m.max_asymmetry();
    let scale = m.entries.iter().flatten().fold(0f64, |a, v| a.max(v.abs()));
    if asym > 1e-12 * scale.max(1.0) {
        return Err(Error::Asymmetric(asym));
    }
    let a = &m.entries;
    let mut p = [0.0; 9];
    p[8] = 1.0;
    let mut mk = [[0.0; 8]; 8];
    for k in 1..=8 {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = [[0.0; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                next[i][j] = (0..8).map(|l| a[i][l] * mk[l][j]).sum();
            }
            next[i][i] += p[9 - k];
        }
        mk = next;
        let tr: f64 = (0..8).map(|i| (0..8).map(|l| a[i][l] * mk[l][i]).sum::<f64>()).sum();
        p[8 - k] = -tr / k as f64;
    }
    Ok(CharPoly { p })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    /// Descending: `lambdas[0]` is λ₁.
    pub lambdas: [f64; 8],
    pub config: ScaledParameters,
}

impl Spectrum {
    pub fn lambda(&self, label: usize) -> Result<f64> {
        if !(1..=8).contains(&label) {
            return Err(Error::LabelOutOfRange(label));
        }
        Ok(self.lambdas[label - 1])
    }

    /// `δ₋₃/₂ = λ₄ − λ₅`.
    pub fn gap(&self) -> f64 {
        self.lambdas[3] - self.lambdas[4]
    }

    /// `max |λᵢ + λ₉₋ᵢ|`.
    pub fn pairing_defect(&self) -> f64 {
        (0..4).fold(0f64, |m, i| m.max((self.lambdas[i] + self.lambdas[7 - i]).abs()))
    }
}

/// Rounding turns a near-double root in `m` into a conjugate pair with an
/// imaginary part of order √ε; such pairs are taken as a real double root.
const IMAG_TOL: f64 = 1e-6;
const NEG_TOL: f64 = 1e-8;

fn polish_real(q: &Polynomial, m: f64) -> f64 {
    let mut best = m;
    let mut best_res = q.eval(m).abs();
    for _ in 0..4 {
        if best_res == 0.0 {
            break;
        }
        let (v, dv) = q.eval_with_derivative(best.into());
        if dv.re == 0.0 {
            break;
        }
        let next = best - v.re / dv.re;
        let res = q.eval(next).abs();
        if res < best_res {
            best = next;
            best_res = res;
        } else {
            break;
        }
    }
    best
}

pub fn analytic_eigenvalues(p: &ScaledParameters) -> Result<Spectrum> {
    let h = SymmetricMatrix8::from_params(p);
    let mut cp = characteristic_polynomial(&h)?;
    // The trace recursion loses the constant term when an eigenvalue is
    // near zero; the pivoted determinant keeps its relative accuracy.
    cp.p[0] = determinant(&h.entries);
    let q = cp.quartic_in_square();
    let roots = solve_quartic(&q)?;
    let scale = roots.values().iter().fold(0f64, |a, z| a.max(z.norm())).max(f64::MIN_POSITIVE);
    let mut ms = [0.0; 4];
    for (slot, z) in ms.iter_mut().zip(roots.values()) {
        if z.im.abs() > IMAG_TOL * scale {
            return Err(Error::NonRealSpectrum { re: z.re, im: z.im });
        }
        let m = polish_real(&q, z.re);
        if m < -NEG_TOL * scale {
            return Err(Error::NonRealSpectrum { re: m, im: z.im });
        }
        *slot = m.max(0.0);
    }
    let mut lambdas = [0.0; 8];
    for (i, m) in ms.iter().enumerate() {
        let l = m.sqrt();
        lambdas[2 * i] = l;
        lambdas[2 * i + 1] = -l;
    }
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok(Spectrum { lambdas, config: *p })
}

pub fn eigenvalue_at(p: &ScaledParameters, label: usize) -> Result<f64> {
    if !(1..=8).contains(&label) {
        return Err(Error::LabelOutOfRange(label));
    }
    analytic_eigenvalues(p)?.lambda(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric_eigenvalues;
    use crate::units::Scaling;

    const DELTA: f64 = 8.335;

    fn params(b: f64, e: f64, theta: f64) -> ScaledParameters {
        ScaledParameters::new(b, e, DELTA, theta).unwrap()
    }

    #[test]
    fn zero_matrix_polynomial() {
        let cp = characteristic_polynomial(&SymmetricMatrix8::zeros()).unwrap();
        let mut want = [0.0; 9];
        want[8] = 1.0;
        assert_eq!(cp.p, want);
    }

    #[test]
    fn zero_field_polynomial() {
        let cp = characteristic_polynomial(&SymmetricMatrix8::from_params(&params(0.0, 0.0, 0.7))).unwrap();
        let a = -(0.8335f64 * 0.8335);
        // (m + a)⁴ in m = λ²
        let want = [a.powi(4), 0.0, 4.0 * a.powi(3), 0.0, 6.0 * a * a, 0.0, 4.0 * a, 0.0, 1.0];
        for (x, y) in cp.p.iter().zip(want) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }

    #[test]
    fn constant_term_is_determinant() {
        let h = SymmetricMatrix8::from_params(&params(3.1, 2.4, 1.1));
        let cp = characteristic_polynomial(&h).unwrap();
        let det = determinant(&h.entries);
        assert!((cp.p[0] - det).abs() <= 1e-10 * det.abs());
        assert!(cp.oddness() < 1e-9);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let mut h = SymmetricMatrix8::zeros();
        h.entries[0][1] = 1.0;
        assert!(matches!(characteristic_polynomial(&h), Err(Error::Asymmetric(_))));
    }

    #[test]
    fn zero_field_spectrum() {
        let s = analytic_eigenvalues(&params(0.0, 0.0, 0.0)).unwrap();
        for (i, l) in s.lambdas.iter().enumerate() {
            let want = if i < 4 { 0.8335 } else { -0.8335 };
            assert!((l - want).abs() < 1e-12);
        }
        assert!((eigenvalue_at(&params(0.0, 0.0, 0.0), 1).unwrap() - 0.8335).abs() < 1e-12);
    }

    #[test]
    fn labels_checked() {
        let p = params(1.0, 1.0, 1.0);
        assert_eq!(eigenvalue_at(&p, 0), Err(Error::LabelOutOfRange(0)));
        assert_eq!(eigenvalue_at(&p, 9), Err(Error::LabelOutOfRange(9)));
    }

    #[test]
    fn zero_gap_at_zero_field_crossing() {
        let sc = Scaling::default();
        let b1 = sc.delta_tilde() / 3.0;
        let l4 = eigenvalue_at(&params(b1, 0.0, 0.4), 4).unwrap();
        assert!(l4.abs() < 1e-9);
        let b = sc.b_tilde(0.05);
        let s = analytic_eigenvalues(&params(b, 0.0, 0.0)).unwrap();
        let mut want: Vec<f64> = [-3.0, -1.0, 1.0, 3.0]
            .iter()
            .flat_map(|m| [m * b / 10.0 - 0.8335, m * b / 10.0 + 0.8335])
            .collect();
        want.sort_by(|a, b| b.total_cmp(a));
        for (a, w) in s.lambdas.iter().zip(want) {
            assert!((a - w).abs() < 1e-12);
        }
    }

    #[test]
    fn matches_jacobi() {
        for &(b, e, t) in &[(2.8, 1.2, 0.3), (13.0, 7.9, 2.0), (0.4, 8.3, 1.5708), (8.0, 0.01, 0.9)] {
            let p = params(b, e, t);
            let s = analytic_eigenvalues(&p).unwrap();
            let j = symmetric_eigenvalues(&SymmetricMatrix8::from_params(&p).entries).unwrap();
            for (a, b) in s.lambdas.iter().zip(j) {
                assert!((a - b).abs() < 1e-11 * s.lambdas[0], "{a} vs {b}");
            }
            assert!(s.pairing_defect() < 1e-12);
            assert!(s.gap() >= 0.0);
        }
    }
}

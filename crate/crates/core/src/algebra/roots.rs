//! Aberth–Ehrlich simultaneous iteration for arbitrary real polynomials.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::poly::{ComplexRootSet, Polynomial};
use crate::error::{Error, Result};

const MAX_ITER: usize = 2000;
const RESIDUAL_TOL: f64 = 1e-8;
const MERGE_TOL: f64 = 1e-8;

/// All complex roots of `p`, sorted by (re, im) with near-coincident roots
/// merged into multiplicities.
pub fn numeric_roots(p: &Polynomial) -> Result<ComplexRootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Err(Error::DegreeMismatch { expected: 1, actual: 0 });
    }
    let coeffs = p.coeffs();
    let zeros = coeffs.iter().take_while(|&&c| c == 0.0).count();
    let reduced = Polynomial::new(coeffs[zeros..].to_vec());
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let n = reduced.degree();
    if n == 1 {
        let k = reduced.coeffs();
        roots.push(Complex64::new(-k[0] / k[1], 0.0));
    } else if n > 1 {
        roots.extend(aberth(&reduced));
    }
    let worst = roots.iter().map(|&z| p.scaled_residual(z)).fold(0f64, f64::max);
    if !worst.is_finite() || worst > RESIDUAL_TOL {
        return Err(Error::RootFinding(worst));
    }
    Ok(ComplexRootSet::from_values(roots).merged(MERGE_TOL))
}

fn aberth(p: &Polynomial) -> Vec<Complex64> {
    let n = p.degree();
    let k = p.coeffs();
    let lead = k[n];
    // Rescale x = s·y so the roots sit near the unit circle.
    let s = (0..n)
        .filter(|&j| k[j] != 0.0)
        .map(|j| (k[j] / lead).abs().powf(1.0 / (n - j) as f64))
        .fold(0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let scaled = Polynomial::new(
        k.iter()
            .enumerate()
            .map(|(j, &a)| a / lead * s.powi(j as i32 - n as i32))
            .collect(),
    );
    let rho = scaled.coeffs()[0].abs().powf(1.0 / n as f64).clamp(0.1, 1.0);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(rho, (2 * j + 1) as f64 * PI / n as f64 + 0.4))
        .collect();
    // The offset breaks the symmetry that stalls on even polynomials; the
    // conjugate structure is restored by the final symmetrisation.
    for _ in 0..MAX_ITER {
        let mut biggest = 0f64;
        let old = z.clone();
        for i in 0..n {
            let (v, dv) = scaled.eval_with_derivative(old[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = if dv.norm() == 0.0 { v / 1e-12 } else { v / dv };
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = old[i] - old[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[i] = old[i] - w;
                biggest = biggest.max(w.norm() / old[i].norm().max(1e-300));
            }
        }
        if biggest < 4.0 * f64::EPSILON {
            break;
        }
    }
    let mut out: Vec<Complex64> = z.into_iter().map(|y| polish(p, y * s)).collect();
    for x in out.iter_mut() {
        if x.im.abs() <= 1e-12 * x.norm() && p.scaled_residual(Complex64::new(x.re, 0.0)) <= RESIDUAL_TOL {
            x.im = 0.0;
        }
    }
    out
}

fn polish(p: &Polynomial, z: Complex64) -> Complex64 {
    let mut best = z;
    let mut best_res = p.eval_complex(z).norm();
    for _ in 0..3 {
        let (v, dv) = p.eval_with_derivative(best);
        if best_res == 0.0 || dv.norm() == 0.0 {
            break;
        }
        let next = best - v / dv;
        let res = p.eval_complex(next).norm();
        if res < best_res {
            best = next;
            best_res = res;
        } else {
            break;
        }
    }
    best
}

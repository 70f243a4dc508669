//! Closed-form solvers for degree 2, 3 and 4.

use num_complex::Complex64;

use super::poly::{ComplexRootSet, Polynomial};
use crate::error::{Error, Result};

/// Depressed coefficients below this multiple of the natural scale are
/// treated as exact zeros, so multiple roots stay multiple.
const SNAP: f64 = 1e-13;

/// Residual above which a resolvent branch is rejected.
const BRANCH_TOL: f64 = 1e-8;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn check_degree(p: &Polynomial, n: usize) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, actual: p.degree() });
    }
    Ok(())
}

/// Roots of `z² + b z + c` without cancellation.
fn quadratic(b: Complex64, c0: Complex64) -> [Complex64; 2] {
    let sq = (b * b - c0 * 4.0).sqrt();
    let (sp, sm) = (b + sq, b - sq);
    let big = if sp.norm() >= sm.norm() { sp } else { sm };
    if big.norm() == 0.0 {
        return [-b / 2.0, -b / 2.0];
    }
    let z1 = -big / 2.0;
    [z1, c0 / z1]
}

fn newton_polish(p: &Polynomial, z: Complex64, iters: usize) -> Complex64 {
    let mut best = z;
    let mut best_res = p.eval_complex(z).norm();
    let mut cur = z;
    for _ in 0..iters {
        if best_res == 0.0 {
            break;
        }
        let (v, dv) = p.eval_with_derivative(cur);
        if dv.norm() == 0.0 {
            break;
        }
        cur -= v / dv;
        let res = p.eval_complex(cur).norm();
        if res < best_res {
            best = cur;
            best_res = res;
        } else {
            break;
        }
    }
    best
}

pub fn solve_quadratic(p: &Polynomial) -> Result<ComplexRootSet> {
    check_degree(p, 2)?;
    let m = p.monic();
    let k = m.coeffs();
    Ok(ComplexRootSet::from_values(quadratic(c(k[1]), c(k[0]))))
}

/// Cardano's formula with the second cube root taken as `-p/(3u)`.
pub fn solve_cubic(p: &Polynomial) -> Result<ComplexRootSet> {
    check_degree(p, 3)?;
    let m = p.monic();
    let k = m.coeffs();
    let (a, b, c0) = (k[2], k[1], k[0]);
    let dp = b - a * a / 3.0;
    let dq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c0;
    let h = (dq / 2.0).powi(2) + (dp / 3.0).powi(3);
    let w = if h >= 0.0 {
        let s = h.sqrt();
        c(-dq / 2.0 - dq.signum() * s)
    } else {
        Complex64::new(-dq / 2.0, (-h).sqrt())
    };
    let u = if h >= 0.0 { c(w.re.cbrt()) } else { w.cbrt() };
    let v = if u.norm() == 0.0 { c(0.0) } else { -dp / (u * 3.0) };
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let omega2 = omega.conj();
    let shift = a / 3.0;
    let mut ts = [u + v, omega * u + omega2 * v, omega2 * u + omega * v];
    if h >= 0.0 {
        ts[0].im = 0.0;
        if h == 0.0 {
            ts[1].im = 0.0;
            ts[2].im = 0.0;
        }
    } else {
        for t in ts.iter_mut() {
            t.im = 0.0;
        }
    }
    let roots = ts.map(|t| newton_polish(&m, t - shift, 3));
    Ok(ComplexRootSet::from_values(roots))
}

/// `u⁴ + q u² + r u + s` with `x = u - shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    pub q: f64,
    pub r: f64,
    pub s: f64,
    pub shift: f64,
}

impl DepressedQuartic {
    /// Discriminant of the depressed quartic.
    pub fn discriminant(&self) -> f64 {
        let (q, r, s) = (self.q, self.r, self.s);
        256.0 * s.powi(3) - 128.0 * q * q * s * s + 144.0 * q * r * r * s - 27.0 * r.powi(4)
            + 16.0 * q.powi(4) * s
            - 4.0 * q.powi(3) * r * r
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.s, self.r, self.q, 0.0, 1.0])
    }
}

/// Remove the cubic term of a monic quartic.
pub fn depress_quartic(p: &Polynomial) -> Result<DepressedQuartic> {
    check_degree(p, 4)?;
    let lead = p.leading();
    if (lead - 1.0).abs() > 1e-12 {
        return Err(Error::NotMonic(lead));
    }
    let k = p.coeffs();
    let (c3, c2, c1, c0) = (k[3], k[2], k[1], k[0]);
    Ok(DepressedQuartic {
        q: c2 - 3.0 * c3 * c3 / 8.0,
        r: (8.0 * c1 - 4.0 * c2 * c3 + c3.powi(3)) / 8.0,
        s: c0 - c3 * (64.0 * c1 - 16.0 * c2 * c3 + 3.0 * c3.powi(3)) / 256.0,
        shift: c3 / 4.0,
    })
}

/// Deflate `zeros` exact roots at the origin and solve what is left.
fn with_zero_roots(m: &Polynomial, zeros: usize) -> Result<ComplexRootSet> {
    let rest = Polynomial::new(m.coeffs()[zeros..].to_vec());
    let mut vals = match rest.degree() {
        3 => solve_cubic(&rest)?.values(),
        2 => solve_quadratic(&rest)?.values(),
        1 => vec![c(-rest.coeffs()[0] / rest.coeffs()[1])],
        _ => Vec::new(),
    };
    vals.extend(std::iter::repeat_n(c(0.0), zeros));
    Ok(ComplexRootSet::from_values(vals))
}

/// Ferrari's method through the resolvent cubic
/// `y³ + 2q y² + (q² - 4s) y - r² = 0`.
///
/// Every resolvent root is tried in turn; the first whose roots have small
/// residuals on the input is returned.
pub fn solve_quartic(p: &Polynomial) -> Result<ComplexRootSet> {
    check_degree(p, 4)?;
    let m = p.monic();
    let zeros = m.coeffs().iter().take_while(|&&a| a == 0.0).count();
    if zeros > 0 {
        return with_zero_roots(&m, zeros);
    }
    let mut d = depress_quartic(&m)?;
    let t = m
        .coeffs()
        .iter()
        .take(4)
        .enumerate()
        .map(|(k, a)| a.abs().powf(1.0 / (4 - k) as f64))
        .fold(0f64, f64::max);
    if d.q.abs() <= SNAP * t * t {
        d.q = 0.0;
    }
    if d.r.abs() <= SNAP * t.powi(3) {
        d.r = 0.0;
    }
    if d.s.abs() <= SNAP * t.powi(4) {
        d.s = 0.0;
    }

    let finish = |us: [Complex64; 4]| -> (ComplexRootSet, f64) {
        let xs = us.map(|u| newton_polish(&m, u - d.shift, 3));
        let worst = xs.iter().map(|&x| m.scaled_residual(x)).fold(0f64, f64::max);
        (ComplexRootSet::from_values(xs), worst)
    };

    if d.r == 0.0 {
        let mut disc = d.q * d.q - 4.0 * d.s;
        if disc.abs() <= SNAP * (d.q * d.q).max(4.0 * d.s.abs()) {
            disc = 0.0;
        }
        let sq = if disc >= 0.0 { c(disc.sqrt()) } else { Complex64::new(0.0, (-disc).sqrt()) };
        let big = if d.q >= 0.0 { -(c(d.q) + sq) / 2.0 } else { -(c(d.q) - sq) / 2.0 };
        let z = if big.norm() == 0.0 { [c(0.0), c(0.0)] } else { [big, c(d.s) / big] };
        let (a, b) = (z[0].sqrt(), z[1].sqrt());
        let (set, worst) = finish([a, -a, b, -b]);
        if worst <= BRANCH_TOL {
            return Ok(set);
        }
        return Err(Error::BranchValidation(worst));
    }

    let resolvent = Polynomial::new(vec![-d.r * d.r, d.q * d.q - 4.0 * d.s, 2.0 * d.q, 1.0]);
    let mut ys: Vec<Complex64> = solve_cubic(&resolvent)?.values();
    ys.sort_by(|a, b| b.re.total_cmp(&a.re));
    let mut best: Option<(ComplexRootSet, f64)> = None;
    for y in ys {
        if y.norm() == 0.0 {
            continue;
        }
        let alpha = y.sqrt();
        let beta = (c(d.q) + y - d.r / alpha) / 2.0;
        let gamma = (c(d.q) + y + d.r / alpha) / 2.0;
        let [u1, u2] = quadratic(alpha, beta);
        let [u3, u4] = quadratic(-alpha, gamma);
        let (set, worst) = finish([u1, u2, u3, u4]);
        if worst <= BRANCH_TOL {
            return Ok(set);
        }
        if best.as_ref().is_none_or(|(_, w)| worst < *w) {
            best = Some((set, worst));
        }
    }
    Err(Error::BranchValidation(best.map_or(f64::INFINITY, |(_, w)| w)))
}

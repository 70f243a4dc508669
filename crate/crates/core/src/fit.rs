//! Power-law fits for the gap scaling analysis.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitModel {
    /// `y = a xᵖ`, least squares in log-log space.
    PowerInE,
    /// `y = a |sin θ|ᵖ` with `a` fixed to the data maximum and `p` fitted to
    /// the amplitude-scaled shape.
    PowerInSinTheta,
}

impl FitModel {
    pub fn label(self) -> &'static str {
        match self {
            FitModel::PowerInE => "power-in-e",
            FitModel::PowerInSinTheta => "power-in-sin-theta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub model: FitModel,
    pub coefficient: f64,
    pub exponent: f64,
    /// Relative RMS residual.
    pub rms_residual: f64,
    /// Range of the independent variable that was fitted.
    pub window: (f64, f64),
    pub points: usize,
}

const MIN_POINTS: usize = 5;

fn window(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

fn check_lengths(xs: &[f64], ys: &[f64]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::Fit(format!("{} abscissae but {} values", xs.len(), ys.len())));
    }
    if xs.len() < MIN_POINTS {
        return Err(Error::Fit(format!("need at least {MIN_POINTS} points, got {}", xs.len())));
    }
    Ok(())
}

pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    check_lengths(xs, ys)?;
    if let Some(k) = (0..xs.len()).find(|&k| !(xs[k] > 0.0 && ys[k] > 0.0)) {
        return Err(Error::Fit(format!("non-positive point ({}, {}) in log fit window", xs[k], ys[k])));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = xs.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Fit("all abscissae equal".into()));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let exponent = sxy / sxx;
    let coefficient = (my - exponent * mx).exp();
    let rms = (xs
        .iter()
        .zip(ys)
        .map(|(x, y)| ((coefficient * x.powf(exponent) - y) / y).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    Ok(FitResult {
        model: FitModel::PowerInE,
        coefficient,
        exponent,
        rms_residual: rms,
        window: window(xs),
        points: xs.len(),
    })
}

/// RMS of `amp |sin θ|ᵖ − y` over `amp = max y`, relative to `amp`.
pub fn sin_shape_rms(thetas: &[f64], ys: &[f64], exponent: f64) -> f64 {
    let amp = ys.iter().fold(0f64, |m, &y| m.max(y));
    let ms = thetas
        .iter()
        .zip(ys)
        .map(|(t, y)| (amp * t.sin().abs().powf(exponent) - y).powi(2))
        .sum::<f64>()
        / ys.len() as f64;
    ms.sqrt() / amp
}

pub fn fit_sin_power(thetas: &[f64], ys: &[f64]) -> Result<FitResult> {
    check_lengths(thetas, ys)?;
    if ys.iter().any(|&y| !(y >= 0.0)) {
        return Err(Error::Fit("negative or undefined value in fit window".into()));
    }
    let amp = ys.iter().fold(0f64, |m, &y| m.max(y));
    if amp <= 0.0 {
        return Err(Error::Fit("all values are zero".into()));
    }
    let (exponent, _) = golden_section_min(|p| sin_shape_rms(thetas, ys, p), 0.1, 6.0, 1e-10);
    Ok(FitResult {
        model: FitModel::PowerInSinTheta,
        coefficient: amp,
        exponent,
        rms_residual: sin_shape_rms(thetas, ys, exponent),
        window: window(thetas),
        points: thetas.len(),
    })
}

/// Minimum of a unimodal `f` on `[a, b]`; returns `(x, f(x))`.
pub fn golden_section_min(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (a.min(b), a.max(b));
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..300 {
        if (b - a).abs() <= tol * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exact_cubic() {
        let xs: Vec<f64> = (1..=10).map(|k| k as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x * x * x).collect();
        let r = fit_power_law(&xs, &ys).unwrap();
        assert!((r.exponent - 3.0).abs() < 1e-6);
        assert!((r.coefficient - 2.0).abs() < 1e-9);
        assert!(r.rms_residual < 1e-12);
        assert_eq!(r.window, (1.0, 10.0));
    }

    #[test]
    fn rejects_bad_input() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert!(fit_power_law(&xs, &xs).is_err());
        let xs = [1.0, 2.0, 3.0, 4.0, 5.0];
        let ys = [1.0, 2.0, 0.0, 4.0, 5.0];
        assert!(matches!(fit_power_law(&xs, &ys), Err(Error::Fit(_))));
    }

    #[test]
    fn sin_shape_recovers_exponent() {
        let ts: Vec<f64> = (1..60).map(|k| k as f64 * PI / 60.0).collect();
        for p in [1.0, 2.0, 3.0] {
            let ys: Vec<f64> = ts.iter().map(|t| 0.7 * t.sin().powf(p)).collect();
            let r = fit_sin_power(&ts, &ys).unwrap();
            assert!((r.exponent - p).abs() < 1e-6, "{}", r.exponent);
            assert!((r.coefficient - 0.7).abs() < 1e-3);
        }
    }

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, fx) = golden_section_min(|x| (x - 1.25).powi(2) + 3.0, -4.0, 9.0, 1e-12);
        assert!((x - 1.25).abs() < 1e-6);
        assert!((fx - 3.0).abs() < 1e-12);
    }
}

//! The discriminant `D = ∏_{i<j} (λᵢ − λⱼ)²` and its factorization
//! `D = f₀ f₁ f₂²`.
//!
//! `f₁` and `f₂` are polynomials in `B̃²` whose coefficients depend on
//! `(Δ̃, Ẽ, θ)`. Two of the reference `f₂` coefficients contain misprints; the
//! corrected forms are used by default and the printed ones are kept behind
//! [`Transcription::AsPrinted`] so the audit can show the difference.

use std::fmt;

use crate::algebra::{solve_linear, Polynomial};
use crate::error::{Error, Result};
use crate::hamiltonian::SymmetricMatrix8;
use crate::sampling::{random_configs, SampleBox};
use crate::spectrum::{analytic_eigenvalues, Spectrum};
use crate::units::{ScaledParameters, Scaling};

/// Floor for relative comparisons near roots.
pub const REL_FLOOR: f64 = 1e-30;

/// `|a − b| / max(|a|, |b|, floor)`.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(REL_FLOOR)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminantFactors {
    pub f0: f64,
    pub f1: f64,
    pub f2: f64,
    pub product: f64,
}

/// `f₀ = (√3 / (156250 · 2^{1/4}))⁸ B̃⁸ = 81 B̃⁸ / (2¹⁰ 5⁵⁶)`.
pub fn eval_f0(p: &ScaledParameters) -> f64 {
    let k = 3f64.sqrt() / (156_250.0 * 2f64.powf(0.25));
    (k * p.b_tilde).powi(8)
}

/// Double-double value `hi + lo` for the `f₁` evaluation, which cancels to
/// many digits near its roots.
#[derive(Clone, Copy)]
struct Dd(f64, f64);

impl Dd {
    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        Dd(s, (a - (s - bb)) + (b - bb))
    }

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.0, o.0);
        let lo = s.1 + self.1 + o.1;
        Dd::two_sum(s.0, lo)
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.0 * o.0;
        let err = self.0.mul_add(o.0, -p);
        Dd::two_sum(p, err + self.0 * o.1 + self.1 * o.0)
    }

    fn k(self, c: f64) -> Dd {
        self.mul(Dd(c, 0.0))
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd(v, 0.0)
    }
}

/// `f₁ = 81B̃⁸ − 36[9 cos2θ Ẽ² + 5Δ̃²]B̃⁶ + …`, evaluated in double-double.
pub fn eval_f1(p: &ScaledParameters) -> f64 {
    let d = |v: f64| Dd::from(v);
    let c2 = d((2.0 * p.theta).cos());
    let c4 = d((4.0 * p.theta).cos());
    let b2 = d(p.b_tilde).mul(d(p.b_tilde));
    let e2 = d(p.e_tilde).mul(d(p.e_tilde));
    let d2 = d(p.delta_tilde).mul(d(p.delta_tilde));
    let (b4, e4, d4) = (b2.mul(b2), e2.mul(e2), d2.mul(d2));
    let t8 = b4.mul(b4).k(81.0);
    let t6 = c2.mul(e2).k(9.0).add(d2.k(5.0)).mul(b4.mul(b2)).k(-36.0);
    let t4 = d4
        .k(59.0)
        .add(c4.add(d(2.0)).mul(e4).k(81.0))
        .add(c2.k(-2.0).add(d(7.0)).mul(d2.mul(e2)).k(54.0))
        .mul(b4)
        .k(2.0);
    let inner = d4
        .k(5.0)
        .add(e2.k(9.0).add(d2.k(-7.0)).mul(e2).mul(c2))
        .add(d2.mul(e2).k(21.0));
    let t2 = d2.add(e2.k(9.0)).mul(inner).mul(b2).k(-4.0);
    let c0 = d4.add(e4.k(9.0)).add(d2.mul(e2).k(10.0));
    let t0 = c0.mul(c0);
    let total = t8.add(t6).add(t4).add(t2).add(t0);
    total.0 + total.1
}

/// Which version of the `f₂` coefficients to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Transcription {
    /// Verified against the eigenvalue product.
    #[default]
    Corrected,
    /// Literal published text: `72 cos⁴θ Ẽ⁴` in `g₁₆` and `1675 cos 2θ` in the
    /// `Δ̃⁶Ẽ²` bracket of `g₄` (correct values 9 and 16752).
    AsPrinted,
}

/// `g₀, g₂, …, g₁₆`; `g[k]` multiplies `B̃^{2k}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GCoefficients {
    pub g: [f64; 9],
}

impl GCoefficients {
    pub fn new(delta: f64, e: f64, theta: f64) -> Self {
        Self::with_transcription(delta, e, theta, Transcription::Corrected)
    }

    pub fn from_params(p: &ScaledParameters) -> Self {
        Self::new(p.delta_tilde, p.e_tilde, p.theta)
    }

    pub fn with_transcription(delta: f64, e: f64, theta: f64, tr: Transcription) -> Self {
        let d = delta;
        let c = theta.cos();
        let [c2, c4, c6, c8, c10] = [2.0, 4.0, 6.0, 8.0, 10.0].map(|n: f64| (n * theta).cos());
        let (k16, k4) = match tr {
            Transcription::Corrected => (9.0, 16752.0),
            Transcription::AsPrinted => (72.0, 1675.0),
        };
        let dp = |n: i32| d.powi(n);
        let ep = |n: i32| e.powi(n);
        let cc = |n: i32| c.powi(n);

        let g16 = 8192.0 * (dp(4) + 5.0 * (1.0 + c2) * dp(2) * ep(2) + k16 * cc(4) * ep(4));
        let g14 = -2048.0
            * (9.0 * cc(4) * (9.0 + 41.0 * c2) * ep(6)
                + 10.0 * dp(6)
                + cc(2) * (247.0 + 343.0 * c2) * dp(2) * ep(4)
                + 150.0 * cc(2) * dp(4) * ep(2));
        let g12 = 64.0
            * (264.0 * dp(8)
                + 240.0 * (15.0 + 7.0 * c2) * dp(6) * ep(2)
                + 2.0 * (7613.0 + 9308.0 * c2 + 1311.0 * c4) * dp(4) * ep(4)
                + 9.0 * cc(4) * (3155.0 + 2052.0 * c2 + 2481.0 * c4) * ep(8)
                + 4.0 * cc(2) * (8599.0 + 13060.0 * c2 + 3501.0 * c4) * dp(2) * ep(6));
        let g10 = -32.0
            * (160.0 * dp(10)
                + 16.0 * (203.0 + 47.0 * c2) * dp(8) * ep(2)
                + 4.0 * (5685.0 + 3884.0 * c2 + 631.0 * c4) * dp(6) * ep(4)
                + 36.0 * cc(4) * (1620.0 + 5367.0 * c2 + 1188.0 * c4 + 1025.0 * c6) * ep(10)
                + 4.0 * cc(2) * (39498.0 + 56409.0 * c2 + 27750.0 * c4 + 2903.0 * c6) * dp(2) * ep(8)
                + (72962.0 + 100955.0 * c2 + 33550.0 * c4 + 4533.0 * c6) * dp(4) * ep(6));
        let g8 = 8.0
            * (64.0 * dp(12)
                + 192.0 * dp(10) * ep(2) * (9.0 + c2)
                + 8.0 * dp(8) * ep(4) * (2193.0 + 1012.0 * c2 + 339.0 * c4)
                + 16.0 * dp(6) * ep(6) * (5651.0 + 6444.0 * c2 + 3093.0 * c4 + 252.0 * c6)
                + 72.0 * ep(12) * cc(4) * (8253.0 + 6804.0 * c2 + 7786.0 * c4 + 900.0 * c6 + 625.0 * c8)
                + 4.0 * dp(2) * ep(10) * cc(2)
                    * (199593.0 + 305817.0 * c2 + 135562.0 * c4 + 38183.0 * c6 + 1165.0 * c8)
                + dp(4) * ep(8) * (305959.0 + 533164.0 * c2 + 289236.0 * c4 + 55892.0 * c6 + 3077.0 * c8));
        let g6 = (-dp(10) * (64.0 + 2816.0 * c2 + 2240.0 * c4)
            - 16.0 * dp(8) * ep(2) * (354.0 + 4215.0 * c2 + 3326.0 * c4 + 105.0 * c6)
            - 1152.0 * ep(10) * cc(4) * (1620.0 + 5367.0 * c2 + 1188.0 * c4 + 1025.0 * c6)
            - 64.0 * dp(2) * ep(8) * cc(2) * (67824.0 + 129141.0 * c2 + 44446.0 * c4 + 12779.0 * c6 - 1070.0 * c8)
            - 4.0 * dp(6) * ep(4) * (38821.0 + 159112.0 * c2 + 117620.0 * c4 + 11768.0 * c6 - 921.0 * c8)
            + dp(4)
                * ep(6)
                * (-1413318.0 - 3053506.0 * c2 - 1941176.0 * c4 - 392525.0 * c6 + 11646.0 * c8 + 4879.0 * c10))
            * ep(4);
        let g4 = 4.0
            * (1575.0 * dp(8)
                + dp(8) * (1616.0 * c2 + 844.0 * c4)
                + 144.0 * ep(8) * cc(4) * (3155.0 + 2052.0 * c2 + 2481.0 * c4)
                + 8.0 * dp(2) * ep(6) * cc(2) * (91042.0 + 69141.0 * c2 + 52350.0 * c4 - 11253.0 * c6)
                + 432.0 * dp(8) * c6
                + dp(4) * ep(4) * (198181.0 + 249080.0 * c2 + 118740.0 * c4 + 38536.0 * c6 - 21113.0 * c8)
                + 2.0 * dp(6) * ep(2) * (15185.0 + k4 * c2 + 8580.0 * c4 + 3856.0 * c6 - 2133.0 * c8)
                - 243.0 * dp(8) * c8)
            * ep(8);
        let g2 = 512.0
            * cc(2)
            * (dp(6) * (3.0 - 64.0 * c2) - 36.0 * ep(6) * cc(2) * (9.0 + 41.0 * c2)
                + 21.0 * dp(6) * c4
                + 2.0 * dp(4) * ep(2) * (-3.0 - 436.0 * c2 + 139.0 * c4)
                + 4.0 * dp(2) * ep(4) * (-118.0 - 655.0 * c2 + 183.0 * c4))
            * ep(12);
        let g0 = 4096.0 * ep(16) * (dp(2) + 9.0 * ep(2)) * cc(2) * (5.0 * dp(2) + ep(2) + (-3.0 * dp(2) + ep(2)) * c2);
        Self { g: [g0, g2, g4, g6, g8, g10, g12, g14, g16] }
    }

    /// Coefficient by its published index (0, 2, …, 16).
    pub fn get(&self, index: usize) -> Option<f64> {
        (index % 2 == 0 && index <= 16).then(|| self.g[index / 2])
    }

    /// Flip the sign of `g_index`; used to check that the audit catches and
    /// localizes a corrupted coefficient.
    pub fn with_sign_flip(mut self, index: usize) -> Result<Self> {
        if index % 2 != 0 || index > 16 {
            return Err(Error::InvalidParameter(format!("no coefficient g{index}")));
        }
        self.g[index / 2] = -self.g[index / 2];
        Ok(self)
    }

    /// `f₂` as an octic in `x = B̃²`.
    pub fn polynomial_in_square(&self) -> Polynomial {
        Polynomial::new(self.g.to_vec())
    }

    pub fn eval(&self, b_tilde: f64) -> f64 {
        let x = b_tilde * b_tilde;
        self.g.iter().rev().fold(0.0, |acc, &g| acc * x + g)
    }
}

pub fn eval_f2(p: &ScaledParameters) -> f64 {
    GCoefficients::from_params(p).eval(p.b_tilde)
}

pub fn factors(p: &ScaledParameters) -> DiscriminantFactors {
    let (f0, f1, f2) = (eval_f0(p), eval_f1(p), eval_f2(p));
    DiscriminantFactors { f0, f1, f2, product: f0 * f1 * f2 * f2 }
}

/// Differences at rounding level are exact degeneracies.
fn pair_differences(s: &Spectrum) -> impl Iterator<Item = f64> + '_ {
    let l = &s.lambdas;
    let tol = 8.0 * f64::EPSILON * l[0].abs().max(l[7].abs());
    (0..8).flat_map(move |i| {
        ((i + 1)..8).map(move |j| {
            let d = (l[i] - l[j]).abs();
            if d <= tol {
                0.0
            } else {
                d
            }
        })
    })
}

/// `∏_{i<j} (λᵢ − λⱼ)²`.
pub fn discriminant_from_eigenvalues(s: &Spectrum) -> f64 {
    pair_differences(s).map(|d| d * d).product()
}

/// Natural log of the eigenvalue product, accumulated term by term;
/// `-inf` at a degeneracy.
pub fn log_discriminant_from_eigenvalues(s: &Spectrum) -> f64 {
    pair_differences(s).map(|d| 2.0 * d.ln()).sum()
}

/// `f₂` from the spectrum alone: `(2⁵ 5²⁴ / 9) · disc(Q) / B̃⁴`, where
/// `disc(Q) = ∏_{i<j≤4} (λᵢ² − λⱼ²)²`. Undefined at `B̃ = 0`.
pub fn f2_from_spectrum(s: &Spectrum) -> Option<f64> {
    let b = s.config.b_tilde;
    if b == 0.0 {
        return None;
    }
    let m: Vec<f64> = s.lambdas[..4].iter().map(|l| l * l).collect();
    let mut d = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            d *= (m[i] - m[j]).powi(2);
        }
    }
    Some(2f64.powi(5) * 5f64.powi(24) / 9.0 * d / b.powi(4))
}

/// `512 B̃⁸Δ̃⁴(4B̃⁴ − 5B̃²Δ̃² + Δ̃⁴)²`, the `f₂` of the field-free-E case.
pub fn f2_zero_field(b_tilde: f64, delta: f64) -> f64 {
    let (b2, d2) = (b_tilde * b_tilde, delta * delta);
    512.0 * b2.powi(4) * d2 * d2 * (4.0 * b2 * b2 - 5.0 * b2 * d2 + d2 * d2).powi(2)
}

/// Quartic in `x = B̃²` whose square gives `f₂` for parallel or antiparallel
/// fields, up to `512(Δ̃⁴ + 10Δ̃²Ẽ² + 9Ẽ⁴)`.
pub fn parallel_quartic(delta: f64, e: f64) -> Polynomial {
    let (d2, e2) = (delta * delta, e * e);
    Polynomial::new(vec![
        4.0 * e2.powi(4),
        -5.0 * e2 * e2 * (d2 + 5.0 * e2),
        d2 * d2 + 10.0 * d2 * e2 + 42.0 * e2 * e2,
        -5.0 * (d2 + 5.0 * e2),
        4.0,
    ])
}

/// Quartic in `x = B̃²` appearing once (unsquared) in `f₂` for perpendicular
/// fields.
pub fn perpendicular_quartic(delta: f64, e: f64) -> Polynomial {
    let (d2, e2) = (delta * delta, e * e);
    Polynomial::new(vec![
        e2.powi(4),
        e2 * e2 * (d2 + 4.0 * e2),
        d2 * d2 + 8.0 * d2 * e2 + 6.0 * e2 * e2,
        -2.0 * (d2 - 2.0 * e2),
        1.0,
    ])
}

/// Reduced `f₂` for θ = 0 or π.
pub fn f2_parallel(p: &ScaledParameters) -> f64 {
    let (d2, e2) = (p.delta_tilde.powi(2), p.e_tilde.powi(2));
    let x = p.b_tilde.powi(2);
    512.0 * (d2 * d2 + 10.0 * d2 * e2 + 9.0 * e2 * e2) * parallel_quartic(p.delta_tilde, p.e_tilde).eval(x).powi(2)
}

/// Reduced `f₂` for θ = π/2:
/// `512 B̃⁴Δ̃⁴(−4B̃² + Δ̃² + 8Ẽ²)² · (quartic in B̃²)`.
pub fn f2_perpendicular(p: &ScaledParameters) -> f64 {
    let (d2, e2) = (p.delta_tilde.powi(2), p.e_tilde.powi(2));
    let x = p.b_tilde.powi(2);
    512.0 * x * x * d2 * d2 * (-4.0 * x + d2 + 8.0 * e2).powi(2) * perpendicular_quartic(p.delta_tilde, p.e_tilde).eval(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityReport {
    pub f1_value: f64,
    /// `10⁸ det H`.
    pub det_value: f64,
    /// `5⁸ ∏ (λᵢ − λ₉₋ᵢ)²`.
    pub pair_product: f64,
    pub max_rel_error: f64,
}

pub fn determinant_identity_check(p: &ScaledParameters) -> Result<IdentityReport> {
    let f1_value = eval_f1(p);
    let h = SymmetricMatrix8::from_params(p);
    let det_value = 1e8 * crate::algebra::determinant(&h.entries);
    let s = analytic_eigenvalues(p)?;
    let pair_product = 5f64.powi(8) * (0..4).map(|i| (s.lambdas[i] - s.lambdas[7 - i]).powi(2)).product::<f64>();
    let rel = rel_diff;
    let max_rel_error = rel(f1_value, det_value).max(rel(f1_value, pair_product)).max(rel(det_value, pair_product));
    Ok(IdentityReport { f1_value, det_value, pair_product, max_rel_error })
}

/// Options for [`audit`].
#[derive(Debug, Clone, PartialEq)]
pub struct AuditOptions {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub identity_tolerance: f64,
    pub transcription: Transcription,
    /// Fault injection: flip the sign of this coefficient.
    pub flip_sign: Option<usize>,
    /// Restrict the sample to `E = 0`.
    pub zero_field_only: bool,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 20_240_601,
            tolerance: 1e-6,
            identity_tolerance: 1e-8,
            transcription: Transcription::Corrected,
            flip_sign: None,
            zero_field_only: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub samples: usize,
    pub transcription: Transcription,
    pub flip_sign: Option<usize>,
    pub tolerance: f64,
    /// Worst `|D − f₀f₁f₂²|` relative deviation.
    pub max_product_rel: f64,
    pub worst_config: Option<ScaledParameters>,
    /// Worst deviation among `f₁`, `10⁸ det H` and the pair product.
    pub max_identity_rel: f64,
    /// Worst deviation of `f₂` from the zero-field closed form over `E = 0`
    /// configurations.
    pub zero_field_rel: f64,
    /// `(index, scaled deviation)` of coefficients that disagree with the
    /// fitted octic, worst first.
    pub suspects: Vec<(usize, f64)>,
    pub passed: bool,
}

fn coefficients(p: &ScaledParameters, opts: &AuditOptions) -> Result<GCoefficients> {
    let g = GCoefficients::with_transcription(p.delta_tilde, p.e_tilde, p.theta, opts.transcription);
    match opts.flip_sign {
        Some(k) => g.with_sign_flip(k),
        None => Ok(g),
    }
}

/// Probe points `(Ẽ/Δ̃, θ)` for coefficient localization.
const PROBES: [(f64, f64); 2] = [(0.6, 1.0), (0.3, 2.2)];
const SUSPECT_TOL: f64 = 1e-8;

/// Fit `f₂` from the spectrum as an octic in `x = B̃²` at `Δ̃ = 1` and compare
/// each coefficient with the transcription. Deviations are scaled by the
/// size of the fitted function on the sampled interval.
pub fn localize(opts: &AuditOptions) -> Result<Vec<(usize, f64)>> {
    const N: usize = 9;
    let x_max = 2.5;
    let mut worst = [0f64; N];
    for (e, theta) in PROBES {
        let mut vander = [[0.0; N]; N];
        let mut ys = [0.0; N];
        for i in 0..N {
            let u = (1.0 - ((2 * i + 1) as f64 * std::f64::consts::PI / (2 * N) as f64).cos()) / 2.0;
            let p = ScaledParameters::new((u * x_max).sqrt(), e, 1.0, theta)?;
            let s = analytic_eigenvalues(&p)?;
            ys[i] = f2_from_spectrum(&s).expect("probe field is nonzero");
            for (k, v) in vander[i].iter_mut().enumerate() {
                *v = u.powi(k as i32);
            }
        }
        let fit = solve_linear(&vander, &ys).ok_or_else(|| Error::Fit("singular probe system".into()))?;
        let g = coefficients(&ScaledParameters::new(1.0, e, 1.0, theta)?, opts)?;
        let ref_scale = ys.iter().fold(0f64, |m, y| m.max(y.abs()));
        for k in 0..N {
            let dev = (fit[k] - g.g[k] * x_max.powi(k as i32)).abs() / ref_scale;
            worst[k] = worst[k].max(dev);
        }
    }
    let mut out: Vec<(usize, f64)> = worst
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > SUSPECT_TOL)
        .map(|(k, &d)| (2 * k, d))
        .collect();
    out.sort_by(|a, b| b.1.total_cmp(&a.1));
    Ok(out)
}

/// Compare `f₀f₁f₂²` with the eigenvalue product over a deterministic
/// sample, check the determinant identity, and localize any coefficient
/// that disagrees.
pub fn audit(scaling: &Scaling, opts: &AuditOptions) -> Result<AuditReport> {
    let mut configs = random_configs(scaling, &SampleBox::default(), opts.samples, opts.seed);
    if opts.zero_field_only {
        for p in configs.iter_mut() {
            *p = p.with_e_tilde(0.0);
        }
    }
    let mut max_product_rel = 0f64;
    let mut worst_config = None;
    let mut max_identity_rel = 0f64;
    let mut zero_field_rel = 0f64;
    for p in &configs {
        let s = analytic_eigenvalues(p)?;
        let d = discriminant_from_eigenvalues(&s);
        let f2 = coefficients(p, opts)?.eval(p.b_tilde);
        let product = eval_f0(p) * eval_f1(p) * f2 * f2;
        let dev = rel_diff(d, product);
        if dev > max_product_rel || worst_config.is_none() {
            max_product_rel = max_product_rel.max(dev);
            worst_config = Some(*p);
        }
        max_identity_rel = max_identity_rel.max(determinant_identity_check(p)?.max_rel_error);
        if p.e_tilde == 0.0 {
            zero_field_rel = zero_field_rel.max(rel_diff(f2, f2_zero_field(p.b_tilde, p.delta_tilde)));
        }
    }
    let suspects = localize(opts)?;
    let passed = max_product_rel <= opts.tolerance
        && max_identity_rel <= opts.identity_tolerance
        && (!opts.zero_field_only || zero_field_rel <= 1e-12);
    Ok(AuditReport {
        samples: configs.len(),
        transcription: opts.transcription,
        flip_sign: opts.flip_sign,
        tolerance: opts.tolerance,
        max_product_rel,
        worst_config,
        max_identity_rel,
        zero_field_rel,
        suspects,
        passed,
    })
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "samples: {}", self.samples)?;
        let tr = match self.transcription {
            Transcription::Corrected => "corrected",
            Transcription::AsPrinted => "as-printed",
        };
        writeln!(f, "transcription: {tr}")?;
        match self.flip_sign {
            Some(k) => writeln!(f, "injected_fault: g{k} sign flip")?,
            None => writeln!(f, "injected_fault: none")?,
        }
        writeln!(f, "tolerance: {:e}", self.tolerance)?;
        writeln!(f, "max_product_rel: {:.3e}", self.max_product_rel)?;
        if let Some(p) = self.worst_config {
            writeln!(
                f,
                "worst_config: b_tilde={:.6} e_tilde={:.6} theta={:.6}",
                p.b_tilde, p.e_tilde, p.theta
            )?;
        }
        writeln!(f, "max_identity_rel: {:.3e}", self.max_identity_rel)?;
        writeln!(f, "zero_field_rel: {:.3e}", self.zero_field_rel)?;
        if self.suspects.is_empty() {
            writeln!(f, "suspect_coefficients: none")?;
        } else {
            let list: Vec<String> = self.suspects.iter().map(|(k, d)| format!("g{k}({d:.2e})")).collect();
            writeln!(f, "suspect_coefficients: {}", list.join(" "))?;
        }
        writeln!(f, "status: {}", if self.passed { "pass" } else { "fail" })
    }
}

//! Crossings and avoided crossings.
//!
//! Real roots of the discriminant in `x = B̃²` are true crossings; complex
//! roots mark avoided crossings near `B̃ = Re √x`. The `f₁` factor is a quartic
//! in `x` and is handled in closed form through its resolvent cubic, which
//! gives the field `B₁` of the `δ₋₃/₂` avoided crossing and the gap there.
//! The `f₂` factor is an octic and is solved numerically, except at θ = 0,
//! π/2 and π where it factors.
//!
//! Every candidate location is classified on the spectrum itself: the
//! closing eigenvalue pair is identified at the seed, its gap is scanned
//! around the seed, and the nearest local minimum is refined.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{depress_quartic, numeric_roots, solve_quartic, symmetric_eigenvalues, Polynomial};
use crate::discriminant::{parallel_quartic, perpendicular_quartic, GCoefficients};
use crate::error::{Error, Result};
use crate::fit::golden_section_min;
use crate::hamiltonian::SymmetricMatrix8;
use crate::spectrum::analytic_eigenvalues;
use crate::units::{ScaledParameters, Scaling};

/// Gap below which a located minimum counts as a true crossing.
pub const CROSSING_THRESHOLD: f64 = 1e-7;
const BRANCH_TOL: f64 = 1e-8;
/// Double roots (θ = 0, π) are only located to about √ε.
const BRANCH_TOL_DOUBLE: f64 = 1e-6;
/// Below `VIETA_SWITCH · |q|` the printed imaginary parts are 0/0.
const VIETA_SWITCH: f64 = 1e-8;

/// `F₁ = f₁/81 = x⁴ + c₆x³ + c₄x² + c₂x + c₀`, `x = B̃²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F1Quartic {
    pub c6: f64,
    pub c4: f64,
    pub c2: f64,
    pub c0: f64,
}

impl F1Quartic {
    pub fn new(p: &ScaledParameters) -> Self {
        let (d2, e2) = (p.delta_tilde.powi(2), p.e_tilde.powi(2));
        let c2t = (2.0 * p.theta).cos();
        let c4t = (4.0 * p.theta).cos();
        Self {
            c6: -20.0 / 9.0 * d2 - 4.0 * e2 * c2t,
            c4: 118.0 / 81.0 * d2 * d2 + 4.0 / 3.0 * (7.0 - 2.0 * c2t) * e2 * d2 + 2.0 * e2 * e2 * (2.0 + c4t),
            c2: -4.0 * (d2 + 9.0 * e2) / 81.0
                * (5.0 * d2 * d2 + 9.0 * c2t * e2 * e2 - 7.0 * (c2t - 3.0) * d2 * e2),
            c0: (d2 * d2 + 9.0 * e2 * e2 + 10.0 * d2 * e2).powi(2) / 81.0,
        }
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.c0, self.c2, self.c4, self.c6, 1.0])
    }

    /// `81 F₁(B̃²)`.
    pub fn f1(&self, b_tilde: f64) -> f64 {
        81.0 * self.polynomial().eval(b_tilde * b_tilde)
    }
}

pub fn f1_quartic(p: &ScaledParameters) -> F1Quartic {
    F1Quartic::new(p)
}

/// `G_c = 32Δ̃⁶ + 16Ẽ²Δ̃⁴(25 − 23 cos2θ) + 576Ẽ⁴Δ̃² sin²θ(7 − cos2θ) + 2592Ẽ⁶ sin²θ cos⁴θ`.
pub fn g_c(delta: f64, e: f64, theta: f64) -> f64 {
    let (s2, c, c2) = (theta.sin().powi(2), theta.cos(), (2.0 * theta).cos());
    32.0 * delta.powi(6)
        + 16.0 * e * e * delta.powi(4) * (25.0 - 23.0 * c2)
        + 576.0 * e.powi(4) * delta * delta * s2 * (7.0 - c2)
        + 2592.0 * e.powi(6) * s2 * c.powi(4)
}

/// `Δ_c = −(2/3)²(32/3)⁹(Δ̃Ẽ²)⁴(Δ̃² + 9Ẽ²)³ sin⁸θ · G_c`.
pub fn delta_c_printed(delta: f64, e: f64, theta: f64) -> f64 {
    -(2.0f64 / 3.0).powi(2)
        * (32.0f64 / 3.0).powi(9)
        * (delta * e * e).powi(4)
        * (delta * delta + 9.0 * e * e).powi(3)
        * theta.sin().powi(8)
        * g_c(delta, e, theta)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventData {
    /// Depressed quartic `u⁴ + q u² + r u + s`, `x = u − c₆/4`.
    pub q: f64,
    pub r: f64,
    pub s: f64,
    pub delta_c: f64,
    pub g_c: f64,
    pub c_r: f64,
    /// Cube root entering `C_r`; complex when the radicand is negative.
    pub d_b: Complex64,
    /// True when `Ẽ` exceeds the critical field, which flips the sign of
    /// `√C_r` in the tracked branch.
    pub above_critical: bool,
    /// True when the imaginary parts come from the product/sum form rather
    /// than the printed `r/(4√C_r)` expressions.
    pub vieta: bool,
}

impl ResolventData {
    /// `−27 · 2²⁴ · disc(u⁴ + qu² + ru + s)`; equals the printed `Δ_c`.
    pub fn delta_c_generic(&self) -> f64 {
        let d = crate::algebra::DepressedQuartic { q: self.q, r: self.r, s: self.s, shift: 0.0 };
        -27.0 * 2f64.powi(24) * d.discriminant()
    }

    fn sign(&self) -> f64 {
        if self.above_critical {
            1.0
        } else {
            -1.0
        }
    }

    /// `Im²` of the tracked and the other conjugate pair.
    fn im2_pairs(&self) -> (f64, f64) {
        let (q, r, c) = (self.q, self.r, self.c_r);
        if self.vieta {
            // The two Im² values are the roots of z² − (q + 2C)z + (s − Cq − 3C²);
            // the tracked branch is the smaller one.
            let sum = q + 2.0 * c;
            let prod = self.s - c * q - 3.0 * c * c;
            let disc = (sum * sum - 4.0 * prod).max(0.0).sqrt();
            let big = if sum >= 0.0 { (sum + disc) / 2.0 } else { (sum - disc) / 2.0 };
            let small = if big != 0.0 { prod / big } else { 0.0 };
            let (lo, hi) = if small <= big { (small, big) } else { (big, small) };
            (lo, hi)
        } else {
            let t = r / (4.0 * c.sqrt());
            let sg = self.sign();
            (sg * t + c + q / 2.0, -sg * t + c + q / 2.0)
        }
    }

    /// `(Re u, Im² u)` of the pair that carries `B₁`.
    pub fn tracked(&self) -> (f64, f64) {
        (self.sign() * self.c_r.sqrt(), self.im2_pairs().0)
    }

    /// The four roots of the depressed quartic rebuilt from `C_r`.
    pub fn depressed_roots(&self) -> [Complex64; 4] {
        let (t, o) = self.im2_pairs();
        let a = self.sign() * self.c_r.sqrt();
        let st = Complex64::new(-t, 0.0).sqrt();
        let so = Complex64::new(-o, 0.0).sqrt();
        [Complex64::from(a) + st, Complex64::from(a) - st, Complex64::from(-a) + so, Complex64::from(-a) - so]
    }
}

/// `Ẽ_c = Δ̃ / √(1 − 2 cos 2θ)`, defined for θ ∈ (π/6, 5π/6).
pub fn critical_field(theta: f64, delta_tilde: f64) -> Result<f64> {
    let den = 1.0 - 2.0 * (2.0 * theta).cos();
    if !(den > 1e-15) {
        return Err(Error::NoCriticalField(theta));
    }
    Ok(delta_tilde / den.sqrt())
}

fn is_above_critical(p: &ScaledParameters) -> bool {
    critical_field(p.theta, p.delta_tilde).is_ok_and(|ec| p.e_tilde > ec)
}

/// Depress `F₁`, evaluate `Δ_c`, `G_c`, and pick the `C_r` branch whose
/// reconstructed roots match the numeric roots of `F₁`.
pub fn resolvent_analysis(f: &F1Quartic, p: &ScaledParameters) -> Result<ResolventData> {
    let poly = f.polynomial();
    let dq = depress_quartic(&poly)?;
    let (q, r, s) = (dq.q, dq.r, dq.s);
    let rad = 12.0 * q.powi(3) * r * r + 81.0 * r.powi(4) - 48.0 * q * (q.powi(3) + 9.0 * r * r) * s
        + 384.0 * q * q * s * s
        - 768.0 * s.powi(3);
    let inner = Complex64::from(2.0 / 3.0 * q.powi(3) + 9.0 * r * r - 24.0 * q * s) + Complex64::from(rad).sqrt();
    let d_b0 = 3f64.cbrt() * inner.cbrt();
    let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let mut cands: Vec<(Complex64, Complex64)> = (0..3)
        .map(|k| {
            let db = d_b0 * omega.powu(k);
            let cr = if db.norm() == 0.0 {
                Complex64::from(-q / 6.0)
            } else {
                2f64.cbrt() / (24.0 * db) * (2.0 * q * q + 24.0 * s) + 2f64.powf(2.0 / 3.0) / 24.0 * db
                    - q / 6.0
            };
            (db, cr)
        })
        .collect();
    cands.sort_by(|a, b| b.1.re.total_cmp(&a.1.re));

    let numeric = numeric_roots(&poly)?;
    let scale = numeric.values().iter().fold(0f64, |m, z| m.max(z.norm()));
    let base = ResolventData {
        q,
        r,
        s,
        delta_c: delta_c_printed(p.delta_tilde, p.e_tilde, p.theta),
        g_c: g_c(p.delta_tilde, p.e_tilde, p.theta),
        c_r: 0.0,
        d_b: d_b0,
        above_critical: is_above_critical(p),
        vieta: false,
    };
    let tol = if numeric.merged(1e-6).roots().len() < 4 { BRANCH_TOL_DOUBLE } else { BRANCH_TOL };
    let mut best = f64::INFINITY;
    for (db, cr) in cands {
        let mag = cr.norm().max(q.abs());
        if cr.im.abs() > 1e-8 * mag || cr.re < -1e-8 * mag {
            continue;
        }
        let c_r = cr.re.max(0.0);
        let data = ResolventData { c_r, d_b: db, vieta: c_r < VIETA_SWITCH * q.abs(), ..base };
        let xs = data.depressed_roots().map(|u| u - dq.shift);
        let rebuilt = crate::algebra::ComplexRootSet::from_values(xs);
        let mismatch = rebuilt.max_mismatch(&numeric, scale);
        if mismatch <= tol {
            return Ok(data);
        }
        best = best.min(mismatch);
    }
    Err(Error::BranchValidation(best))
}

/// `B̃₁`, the location of the `δ₋₃/₂` avoided crossing, from
/// `B̃₁ = √((Re + √(Re² + Im²))/2)`.
pub fn b1_exact_tilde(p: &ScaledParameters) -> Result<f64> {
    if p.e_tilde == 0.0 {
        return Ok(p.delta_tilde / 3.0);
    }
    let f = F1Quartic::new(p);
    let res = resolvent_analysis(&f, p)?;
    let (re_u, im2) = res.tracked();
    let re = re_u - f.c6 / 4.0;
    let im2 = im2.max(0.0);
    let modulus = (re * re + im2).sqrt();
    Ok(((re + modulus) / 2.0).max(0.0).sqrt())
}

pub fn b1_exact(sc: &Scaling, p: &ScaledParameters) -> Result<f64> {
    Ok(sc.tesla(b1_exact_tilde(p)?))
}

/// `B̃₁ ≈ Δ̃/3 + 3(3 + cos 2θ)Ẽ²/(8Δ̃)`.
pub fn b1_approx_tilde(p: &ScaledParameters) -> f64 {
    p.delta_tilde / 3.0 + 3.0 * (3.0 + (2.0 * p.theta).cos()) * p.e_tilde.powi(2) / (8.0 * p.delta_tilde)
}

pub fn b1_approx(sc: &Scaling, p: &ScaledParameters) -> f64 {
    sc.tesla(b1_approx_tilde(p))
}

/// `δ₋₃/₂ = λ₄ − λ₅ = 2λ₄` at `B̃₁`.
pub fn gap_delta_3_2(p: &ScaledParameters) -> Result<f64> {
    let b = b1_exact_tilde(p)?;
    let s = analytic_eigenvalues(&p.with_b_tilde(b))?;
    Ok((2.0 * s.lambdas[3]).max(0.0))
}

/// Descending eigenvalues from the Jacobi solver. Near exact degeneracies
/// the closed form splits levels by about √ε, which would blur the
/// crossing threshold, so classification uses the iterative path.
pub fn eigenvalues(p: &ScaledParameters) -> [f64; 8] {
    symmetric_eigenvalues(&SymmetricMatrix8::from_params(p).entries).expect("the Stark-Zeeman matrix is symmetric")
}

/// `λᵢ − λⱼ` for 1-based labels `i < j`.
pub fn pair_gap(p: &ScaledParameters, b_tilde: f64, pair: (usize, usize)) -> f64 {
    let l = eigenvalues(&p.with_b_tilde(b_tilde));
    l[pair.0 - 1] - l[pair.1 - 1]
}

/// Golden-section minimum of the pair gap on `[lo, hi]` (B̃ units).
pub fn min_gap_search(p: &ScaledParameters, pair: (usize, usize), lo: f64, hi: f64) -> (f64, f64) {
    golden_section_min(|b| pair_gap(p, b, pair), lo, hi, 1e-13)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossingKind {
    RealCrossing,
    Avoided,
}

impl CrossingKind {
    pub fn label(self) -> &'static str {
        match self {
            CrossingKind::RealCrossing => "real-crossing",
            CrossingKind::Avoided => "avoided",
        }
    }
}

/// Which factor of the discriminant produced a record, in priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossingSource {
    F1Analytic,
    F2Analytic,
    F2Numeric,
    /// The `B̃⁸` factor: Kramers degeneracy at zero magnetic field.
    F0Analytic,
}

impl CrossingSource {
    pub fn label(self) -> &'static str {
        match self {
            CrossingSource::F1Analytic => "f1-analytic",
            CrossingSource::F2Analytic => "f2-analytic",
            CrossingSource::F2Numeric => "f2-numeric",
            CrossingSource::F0Analytic => "f0-analytic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingRecord {
    /// Refined minimum of the pair gap, tesla.
    pub b_location: f64,
    /// `Re √x` of the discriminant root that seeded the record, tesla.
    pub root_location: f64,
    pub kind: CrossingKind,
    /// 1-based eigenvalue labels, `pair.0 < pair.1`.
    pub pair: (usize, usize),
    /// Internal units; zero for real crossings.
    pub gap: f64,
    pub source: CrossingSource,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingOptions {
    pub include_mirror: bool,
    pub threshold: f64,
    pub scan_points: usize,
    /// Smallest half-width of the scan window, B̃ units.
    pub min_window: f64,
}

impl Default for CrossingOptions {
    fn default() -> Self {
        Self { include_mirror: false, threshold: CROSSING_THRESHOLD, scan_points: 201, min_window: 0.02 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairRule {
    /// `(i, 9 − i)`: the only pairs `f₁` can close.
    Opposite,
    /// Adjacent labels other than `(4, 5)`.
    NonOpposite,
}

fn candidate_pairs(rule: PairRule) -> Vec<(usize, usize)> {
    match rule {
        PairRule::Opposite => (1..=4).map(|i| (i, 9 - i)).collect(),
        PairRule::NonOpposite => (1..8).filter(|&i| i != 4).map(|i| (i, i + 1)).collect(),
    }
}

/// Pair with the smallest gap; ties within `tol` go to the lowest labels so
/// exactly degenerate levels give a stable answer.
fn closest_pair(l: &[f64; 8], rule: PairRule, tol: f64) -> (usize, usize) {
    let pairs = candidate_pairs(rule);
    let gap = |p: &(usize, usize)| l[p.0 - 1] - l[p.1 - 1];
    let min = pairs.iter().map(gap).fold(f64::INFINITY, f64::min);
    *pairs.iter().find(|p| gap(p) <= min + tol).unwrap()
}

fn zero_field_record(sc: &Scaling, p: &ScaledParameters, rule: PairRule, source: CrossingSource, opts: &CrossingOptions) -> CrossingRecord {
    let l = eigenvalues(&p.with_b_tilde(0.0));
    let pair = closest_pair(&l, rule, opts.threshold);
    let gap = l[pair.0 - 1] - l[pair.1 - 1];
    let kind = if gap < opts.threshold { CrossingKind::RealCrossing } else { CrossingKind::Avoided };
    let _ = sc;
    CrossingRecord {
        b_location: 0.0,
        root_location: 0.0,
        kind,
        pair,
        gap: if kind == CrossingKind::RealCrossing { 0.0 } else { gap },
        source,
    }
}

/// Turn one discriminant root `x = B̃²` into a record, or `None` when no local
/// gap minimum lies near `Re √x`.
fn record_from_root(
    sc: &Scaling,
    p: &ScaledParameters,
    x: Complex64,
    x_scale: f64,
    rule: PairRule,
    source: CrossingSource,
    opts: &CrossingOptions,
) -> Option<CrossingRecord> {
    if x.norm() <= 1e-10 * x_scale {
        return Some(zero_field_record(sc, p, rule, source, opts));
    }
    if x.re < 0.0 && x.im.abs() <= 1e-10 * x_scale {
        return None;
    }
    let w = x.sqrt();
    let seed = w.re;
    if seed <= 0.0 {
        return None;
    }
    let pair = closest_pair(&eigenvalues(&p.with_b_tilde(seed)), rule, 0.0);
    let half = (2.0 * w.im.abs()).max(opts.min_window);
    let lo = (seed - half).max(0.0);
    let hi = seed + half;
    let n = opts.scan_points.max(5);
    let grid: Vec<f64> = (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect();
    let gaps: Vec<f64> = grid.iter().map(|&b| pair_gap(p, b, pair)).collect();
    let k = (1..n - 1)
        .filter(|&k| gaps[k] <= gaps[k - 1] && gaps[k] <= gaps[k + 1])
        .min_by(|&a, &b| (grid[a] - seed).abs().total_cmp(&(grid[b] - seed).abs()))?;
    let (b, gap) = min_gap_search(p, pair, grid[k - 1], grid[k + 1]);
    let kind = if gap < opts.threshold { CrossingKind::RealCrossing } else { CrossingKind::Avoided };
    Some(CrossingRecord {
        b_location: sc.tesla(b),
        root_location: sc.tesla(seed),
        kind,
        pair,
        gap: if kind == CrossingKind::RealCrossing { 0.0 } else { gap.max(0.0) },
        source,
    })
}

fn records_from_roots(
    sc: &Scaling,
    p: &ScaledParameters,
    roots: &[Complex64],
    rule: PairRule,
    source: CrossingSource,
    opts: &CrossingOptions,
) -> Vec<CrossingRecord> {
    let x_scale = roots.iter().fold(0f64, |m, z| m.max(z.norm())).max(p.delta_tilde.powi(2));
    let mut out: Vec<CrossingRecord> = roots
        .iter()
        .filter(|z| z.im >= 0.0 || z.im.abs() <= 1e-10 * x_scale)
        .filter_map(|&z| record_from_root(sc, p, z, x_scale, rule, source, opts))
        .collect();
    finish(&mut out, opts);
    out
}

/// Sort, merge duplicates (same pair within 1e-6 T, higher-priority source
/// wins) and optionally add negative-field mirrors.
fn finish(records: &mut Vec<CrossingRecord>, opts: &CrossingOptions) {
    records.sort_by(|a, b| a.source.cmp(&b.source).then(a.b_location.total_cmp(&b.b_location)));
    let mut kept: Vec<CrossingRecord> = Vec::new();
    for r in records.drain(..) {
        let dup = kept
            .iter()
            .any(|k| k.pair == r.pair && (k.b_location - r.b_location).abs() <= 1e-6);
        if !dup {
            kept.push(r);
        }
    }
    if opts.include_mirror {
        let mirrors: Vec<CrossingRecord> = kept
            .iter()
            .filter(|r| r.b_location > 0.0)
            .map(|r| CrossingRecord { b_location: -r.b_location, root_location: -r.root_location, ..*r })
            .collect();
        kept.extend(mirrors);
    }
    kept.sort_by(|a, b| a.b_location.total_cmp(&b.b_location).then(a.pair.cmp(&b.pair)));
    *records = kept;
}

/// Records from the four roots of `f₁` in `x = B̃²`, solved in closed form.
pub fn f1_crossings(sc: &Scaling, p: &ScaledParameters, opts: &CrossingOptions) -> Result<Vec<CrossingRecord>> {
    let roots = solve_quartic(&F1Quartic::new(p).polynomial())?;
    Ok(records_from_roots(sc, p, &roots.values(), PairRule::Opposite, CrossingSource::F1Analytic, opts))
}

/// Records from the numeric roots of the octic `f₂(x)`.
pub fn f2_crossings(sc: &Scaling, p: &ScaledParameters, opts: &CrossingOptions) -> Result<Vec<CrossingRecord>> {
    let poly = GCoefficients::from_params(p).polynomial_in_square();
    let roots = numeric_roots(&poly)?;
    Ok(records_from_roots(sc, p, &roots.values(), PairRule::NonOpposite, CrossingSource::F2Numeric, opts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    Parallel,
    Perpendicular,
    Antiparallel,
}

impl SpecialCase {
    pub fn angle(self) -> f64 {
        match self {
            SpecialCase::Parallel => 0.0,
            SpecialCase::Perpendicular => PI / 2.0,
            SpecialCase::Antiparallel => PI,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpecialCase::Parallel => "parallel",
            SpecialCase::Perpendicular => "perpendicular",
            SpecialCase::Antiparallel => "antiparallel",
        }
    }

    /// The case whose angle is within 1e-12 of `theta`.
    pub fn from_theta(theta: f64) -> Option<Self> {
        [SpecialCase::Parallel, SpecialCase::Perpendicular, SpecialCase::Antiparallel]
            .into_iter()
            .find(|c| (theta - c.angle()).abs() <= 1e-12)
    }
}

/// Roots in `x = B̃²` of the factored `f₂` at θ ∈ {0, π/2, π}.
pub fn f2_special_roots(p: &ScaledParameters, case: SpecialCase) -> Result<Vec<Complex64>> {
    if (p.theta - case.angle()).abs() > 1e-12 {
        return Err(Error::AngleMismatch { theta: p.theta, case: case.label() });
    }
    let (d, e) = (p.delta_tilde, p.e_tilde);
    let mut roots = Vec::new();
    match case {
        SpecialCase::Parallel | SpecialCase::Antiparallel => {
            roots.extend(solve_quartic(&parallel_quartic(d, e).monic())?.values());
        }
        SpecialCase::Perpendicular => {
            roots.push(Complex64::new(0.0, 0.0));
            roots.push(Complex64::new((d * d + 8.0 * e * e) / 4.0, 0.0));
            roots.extend(solve_quartic(&perpendicular_quartic(d, e))?.values());
        }
    }
    Ok(roots)
}

pub fn f2_special(
    sc: &Scaling,
    p: &ScaledParameters,
    case: SpecialCase,
    opts: &CrossingOptions,
) -> Result<Vec<CrossingRecord>> {
    let roots = f2_special_roots(p, case)?;
    Ok(records_from_roots(sc, p, &roots, PairRule::NonOpposite, CrossingSource::F2Analytic, opts))
}

/// All crossings at fixed `(Ẽ, θ)`: the zero-field Kramers degeneracy, the
/// `f₁` records and the `f₂` records (factored form at the special angles,
/// numeric otherwise; both when they overlap, analytic preferred).
pub fn crossing_catalog(sc: &Scaling, p: &ScaledParameters, opts: &CrossingOptions) -> Result<Vec<CrossingRecord>> {
    let base = CrossingOptions { include_mirror: false, ..*opts };
    let mut all = vec![zero_field_record(sc, p, PairRule::NonOpposite, CrossingSource::F0Analytic, &base)];
    all.extend(f1_crossings(sc, p, &base)?);
    if let Some(case) = SpecialCase::from_theta(p.theta) {
        all.extend(f2_special(sc, p, case, &base)?);
    }
    all.extend(f2_crossings(sc, p, &base)?);
    finish(&mut all, opts);
    Ok(all)
}

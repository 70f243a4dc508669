use std::cmp::Ordering;

use num_complex::Complex64;

/// Real polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

/// Leading coefficients within this fraction of the largest one are dropped.
const TRIM: f64 = 1e-14;

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        let max = coeffs.iter().fold(0f64, |m, c| m.max(c.abs()));
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() <= TRIM * max) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    /// Monic polynomial with the given real roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (k, &a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= r * a;
            }
            c = next;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0f64, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative at `z`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `Σ |a_k| |z|^k`, the natural scale for the residual at `z`.
    pub fn residual_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs())
    }

    pub fn scaled_residual(&self, z: Complex64) -> f64 {
        let s = self.residual_scale(z);
        if s == 0.0 {
            0.0
        } else {
            self.eval_complex(z).norm() / s
        }
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading();
        Self {
            coeffs: self.coeffs.iter().map(|c| c / lead).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Roots with multiplicities, ordered by (real part, imaginary part).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexRootSet {
    roots: Vec<Root>,
}

fn order(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl ComplexRootSet {
    pub fn from_values(values: impl IntoIterator<Item = Complex64>) -> Self {
        let mut roots: Vec<Root> = values
            .into_iter()
            .map(|value| Root { value, multiplicity: 1 })
            .collect();
        roots.sort_by(|a, b| order(&a.value, &b.value));
        Self { roots }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Total count including multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Every root repeated according to its multiplicity.
    pub fn values(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
            .collect()
    }

    /// Merge roots closer than `rel_tol · max(|a|, |b|)`; the merged value is
    /// the multiplicity-weighted mean.
    pub fn merged(&self, rel_tol: f64) -> Self {
        let mut out: Vec<Root> = Vec::new();
        for r in &self.roots {
            let hit = out.iter_mut().find(|c| {
                let scale = c.value.norm().max(r.value.norm());
                (c.value - r.value).norm() <= rel_tol * scale
            });
            match hit {
                Some(c) => {
                    let m = (c.multiplicity + r.multiplicity) as f64;
                    c.value = (c.value * c.multiplicity as f64 + r.value * r.multiplicity as f64) / m;
                    c.multiplicity += r.multiplicity;
                }
                None => out.push(*r),
            }
        }
        out.sort_by(|a, b| order(&a.value, &b.value));
        Self { roots: out }
    }

    /// True when every root has a conjugate partner within `rel_tol`.
    pub fn is_conjugate_closed(&self, rel_tol: f64) -> bool {
        let vals = self.values();
        let mut used = vec![false; vals.len()];
        for i in 0..vals.len() {
            if used[i] {
                continue;
            }
            let target = vals[i].conj();
            let tol = rel_tol * vals[i].norm().max(1e-300);
            if (target - vals[i]).norm() <= tol {
                used[i] = true;
                continue;
            }
            let partner = (0..vals.len()).find(|&j| j != i && !used[j] && (vals[j] - target).norm() <= tol);
            match partner {
                Some(j) => {
                    used[i] = true;
                    used[j] = true;
                }
                None => return false,
            }
        }
        true
    }

    /// Multiset comparison: greedy nearest matching, returns the worst
    /// distance scaled by `max(|a|, floor)`.
    pub fn max_mismatch(&self, other: &Self, floor: f64) -> f64 {
        let a = self.values();
        let mut b = other.values();
        if a.len() != b.len() {
            return f64::INFINITY;
        }
        let mut worst = 0f64;
        for z in a {
            let (k, d) = b
                .iter()
                .enumerate()
                .map(|(k, w)| (k, (z - w).norm()))
                .min_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            worst = worst.max(d / z.norm().max(floor));
            b.swap_remove(k);
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_negligible_leading_terms() {
        let p = Polynomial::new(vec![1.0, 2.0, 1e-20]);
        assert_eq!(p.degree(), 1);
        assert!(Polynomial::new(vec![0.0, 0.0]).is_zero());
    }

    #[test]
    fn from_roots_expands() {
        let p = Polynomial::from_roots(&[1.0, 2.0, 3.0]);
        assert_eq!(p.coeffs(), &[-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(p.eval(2.0), 0.0);
    }

    #[test]
    fn merge_sums_multiplicity() {
        let set = ComplexRootSet::from_values([
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0 + 1e-10, 0.0),
            Complex64::new(2.0, 0.0),
        ]);
        let m = set.merged(1e-8);
        assert_eq!(m.roots().len(), 2);
        assert_eq!(m.roots()[0].multiplicity, 2);
        assert_eq!(m.count(), 3);
    }

    #[test]
    fn conjugate_closure() {
        let ok = ComplexRootSet::from_values([Complex64::new(1.0, 2.0), Complex64::new(1.0, -2.0), Complex64::new(3.0, 0.0)]);
        assert!(ok.is_conjugate_closed(1e-9));
        let bad = ComplexRootSet::from_values([Complex64::new(1.0, 2.0), Complex64::new(1.0, -2.1)]);
        assert!(!bad.is_conjugate_closed(1e-9));
    }
}

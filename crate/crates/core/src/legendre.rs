//! Legendre polynomial algebra.
//!
//! Evaluation via the three-term recurrence, Gauss-Legendre quadrature,
//! projection onto expansion coefficients, and the coefficient-space product
//! of two expansions built on precomputed triple-product coefficients.
//!
//! Throughout the crate a series stores *expansion* coefficients, i.e.
//! `g(t) = sum_l coeffs[l] * P_l(t)`. With that convention the coefficient
//! sequence of a pointwise product is the weighted convolution implemented by
//! [`convolve`].

use num_complex::Complex64;

use crate::error::Error;

/// Evaluate `P_0(t) .. P_lmax(t)` with the three-term recurrence
/// `(n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}`.
pub fn legendre_all(l_max: usize, t: f64) -> Result<Vec<f64>, Error> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::OutOfDomain {
            what: "Legendre argument",
            value: t,
            lo: -1.0,
            hi: 1.0,
        });
    }
    let mut p = Vec::with_capacity(l_max + 1);
    p.push(1.0);
    if l_max == 0 {
        return Ok(p);
    }
    p.push(t);
    for n in 1..l_max {
        let next = ((2 * n + 1) as f64 * t * p[n] - n as f64 * p[n - 1]) / (n + 1) as f64;
        p.push(next);
    }
    Ok(p)
}

/// `P_n(t)` and `P_n'(t)` in one recurrence pass. Used by the quadrature
/// root-finder; no domain check because Newton iterates stay in (-1, 1).
fn legendre_with_derivative(n: usize, t: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = t;
    for k in 1..n {
        let p_next = ((2 * k + 1) as f64 * t * p - k as f64 * p_prev) / (k + 1) as f64;
        p_prev = p;
        p = p_next;
    }
    // P_n'(t) = n (t P_n - P_{n-1}) / (t^2 - 1)
    let dp = n as f64 * (t * p - p_prev) / (t * t - 1.0);
    (p, dp)
}

/// Gauss-Legendre rule on `[-1, 1]`: nodes are the roots of `P_q`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate a scalar function over `[-1, 1]`.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }
}

/// Build the `q`-point Gauss-Legendre rule by Newton iteration on `P_q`
/// starting from Chebyshev-point guesses. Exact for polynomials of degree
/// `<= 2q - 1`.
pub fn gauss_legendre(q: usize) -> Result<QuadratureRule, Error> {
    if q == 0 {
        return Err(Error::InvalidArgument("quadrature size must be >= 1".into()));
    }
    let mut nodes = vec![0.0; q];
    let mut weights = vec![0.0; q];
    let half = q / 2;
    for i in 0..half + (q % 2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
        let mut converged = false;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(q, z);
            let dz = p / d;
            z -= dz;
            if dz.abs() <= 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::RootFindDiverged { degree: q });
        }
        // Derivative at the converged node gives the weight.
        let (_, dp) = legendre_with_derivative(q, z);
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        weights[i] = w;
        nodes[q - 1 - i] = z;
        weights[q - 1 - i] = w;
    }
    if q % 2 == 1 {
        // Middle node is exactly zero for odd q.
        nodes[half] = 0.0;
        let (_, d) = legendre_with_derivative(q, 0.0);
        weights[half] = 2.0 / (d * d);
    }
    Ok(QuadratureRule { nodes, weights })
}

/// A finite Legendre expansion with complex coefficients:
/// `g(t) = sum_l coeffs[l] P_l(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreSeries {
    coeffs: Vec<Complex64>,
}

impl LegendreSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("series needs at least one coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, Error> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            coeffs: vec![Complex64::ZERO; len.max(1)],
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coefficient of `P_l`; zero beyond the stored length.
    pub fn get(&self, l: usize) -> Complex64 {
        self.coeffs.get(l).copied().unwrap_or(Complex64::ZERO)
    }

    /// Degree after trimming exactly-zero trailing coefficients.
    pub fn degree(&self) -> usize {
        let mut d = self.coeffs.len() - 1;
        while d > 0 && self.coeffs[d] == Complex64::ZERO {
            d -= 1;
        }
        d
    }

    /// Synthesis: `sum_l coeffs[l] P_l(t)`.
    pub fn eval(&self, t: f64) -> Result<Complex64, Error> {
        let p = legendre_all(self.coeffs.len() - 1, t)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&p)
            .map(|(&c, &pl)| c * pl)
            .sum())
    }

    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Sum of coefficient magnitudes; a cheap bound on `sup |g|`.
    pub fn one_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        let mut coeffs = vec![Complex64::ZERO; n];
        for (l, c) in coeffs.iter_mut().enumerate() {
            *c = self.get(l) + other.get(l);
        }
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        let mut coeffs = vec![Complex64::ZERO; n];
        for (l, c) in coeffs.iter_mut().enumerate() {
            *c = self.get(l) - other.get(l);
        }
        Self { coeffs }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    /// `self += factor * other`, growing if needed.
    pub fn add_scaled(&mut self, other: &Self, factor: f64) {
        if other.len() > self.coeffs.len() {
            self.coeffs.resize(other.len(), Complex64::ZERO);
        }
        for (l, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[l] += c * factor;
        }
    }

    /// Truncate or zero-pad to exactly `len` coefficients.
    pub fn resized(&self, len: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len.max(1), Complex64::ZERO);
        Self { coeffs }
    }
}

/// Expansion coefficients of samples taken at the nodes of `rule`:
/// `coeffs[l] = (2l+1)/2 * sum_q w_q g(t_q) P_l(t_q)`.
///
/// Exact for polynomials `g` of degree `<= n` whenever the rule integrates
/// degree `n + deg(g)` exactly.
pub fn project(
    samples: &[Complex64],
    rule: &QuadratureRule,
    n: usize,
) -> Result<LegendreSeries, Error> {
    if samples.len() != rule.len() {
        return Err(Error::InvalidArgument(format!(
            "{} samples for a {}-node rule",
            samples.len(),
            rule.len()
        )));
    }
    if rule.len() < n + 1 {
        return Err(Error::InvalidArgument(format!(
            "rule with {} nodes cannot resolve degree {}",
            rule.len(),
            n
        )));
    }
    let mut coeffs = vec![Complex64::ZERO; n + 1];
    for (q, (&t, &w)) in rule.nodes().iter().zip(rule.weights()).enumerate() {
        let p = legendre_all(n, t)?;
        let gw = samples[q] * w;
        for l in 0..=n {
            coeffs[l] += gw * p[l];
        }
    }
    for (l, c) in coeffs.iter_mut().enumerate() {
        *c *= (2 * l + 1) as f64 / 2.0;
    }
    LegendreSeries::new(coeffs)
}

/// Normalized triple-product coefficient
/// `Gamma(L; l1, l2) = (2L+1)/2 * integral P_L P_l1 P_l2 dt`.
///
/// Zero when `l1 + l2 + L` is odd or the triangle inequality fails. Inside
/// the support it is evaluated with the closed form
/// `integral = 2/(2s+1) * A(s-l1) A(s-l2) A(s-L) / A(s)` where `2s` is the
/// index sum and `A(m) = (2m-1)!!/m!`, computed in log space.
pub fn triple_product_coeff(l_out: usize, l1: usize, l2: usize) -> f64 {
    let sum = l_out + l1 + l2;
    if sum % 2 != 0 {
        return 0.0;
    }
    let s = sum / 2;
    if l_out > l1 + l2 || l1 > l_out + l2 || l2 > l_out + l1 {
        return 0.0;
    }
    let ln_a = ln_a_table(s);
    gamma_from_table(&ln_a, l_out, l1, l2)
}

/// `ln A(m)` for `m = 0..=m_max`, `A(m) = (2m-1)!!/m!`.
fn ln_a_table(m_max: usize) -> Vec<f64> {
    let mut ln_a = Vec::with_capacity(m_max + 1);
    ln_a.push(0.0);
    for m in 1..=m_max {
        let prev = ln_a[m - 1];
        ln_a.push(prev + ((2 * m - 1) as f64 / m as f64).ln());
    }
    ln_a
}

/// Closed-form evaluation assuming parity and triangle checks already passed.
fn gamma_from_table(ln_a: &[f64], l_out: usize, l1: usize, l2: usize) -> f64 {
    let s = (l_out + l1 + l2) / 2;
    let ln = ln_a[s - l1] + ln_a[s - l2] + ln_a[s - l_out] - ln_a[s];
    (2 * l_out + 1) as f64 / (2 * s + 1) as f64 * ln.exp()
}

const DENSE_STORAGE_LIMIT: usize = 128;

#[derive(Debug, Clone)]
enum TableStorage {
    /// `values[(l1 * (d+1) + l2) * (2d+1) + L]`, zeros stored outside support.
    Dense(Vec<f64>),
    /// Per-(l1, l2) runs of the in-support values `L = |l1-l2|, |l1-l2|+2, ...`.
    Triangle { offsets: Vec<usize>, values: Vec<f64> },
}

/// Precomputed `Gamma(L; l1, l2)` for all `l1, l2 <= max_degree` and every
/// in-support `L <= l1 + l2`.
///
/// Storage is dense up to `max_degree = 128` and triangle-compressed above;
/// either way the footprint grows like `O(max_degree^3)` (dense:
/// `(d+1)^2 (2d+1)` entries, compressed about a sixth of that).
#[derive(Debug, Clone)]
pub struct TripleProductTable {
    max_degree: usize,
    storage: TableStorage,
}

impl TripleProductTable {
    pub fn build(max_degree: usize) -> Self {
        let storage = if max_degree <= DENSE_STORAGE_LIMIT {
            Self::build_dense(max_degree)
        } else {
            Self::build_triangle(max_degree)
        };
        Self { max_degree, storage }
    }

    fn build_dense(d: usize) -> TableStorage {
        let ln_a = ln_a_table(2 * d);
        let stride = 2 * d + 1;
        let mut values = vec![0.0; (d + 1) * (d + 1) * stride];
        for l1 in 0..=d {
            for l2 in 0..=d {
                let base = (l1 * (d + 1) + l2) * stride;
                let lo = l1.abs_diff(l2);
                let hi = l1 + l2;
                let mut l_out = lo;
                while l_out <= hi {
                    values[base + l_out] = gamma_from_table(&ln_a, l_out, l1, l2);
                    l_out += 2;
                }
            }
        }
        TableStorage::Dense(values)
    }

    fn build_triangle(d: usize) -> TableStorage {
        let ln_a = ln_a_table(2 * d);
        let mut offsets = Vec::with_capacity((d + 1) * (d + 1) + 1);
        offsets.push(0);
        let mut total = 0;
        for l1 in 0..=d {
            for l2 in 0..=d {
                total += l1.min(l2) + 1;
                offsets.push(total);
            }
        }
        let mut values = vec![0.0; total];
        for l1 in 0..=d {
            for l2 in 0..=d {
                let base = offsets[l1 * (d + 1) + l2];
                let lo = l1.abs_diff(l2);
                for i in 0..=l1.min(l2) {
                    values[base + i] = gamma_from_table(&ln_a, lo + 2 * i, l1, l2);
                }
            }
        }
        TableStorage::Triangle { offsets, values }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `Gamma(L; l1, l2)`. Requires `l1, l2 <= max_degree`; out-of-support
    /// `L` returns exact zero.
    pub fn get(&self, l_out: usize, l1: usize, l2: usize) -> f64 {
        assert!(
            l1 <= self.max_degree && l2 <= self.max_degree,
            "table indices ({l1}, {l2}) exceed max_degree {}",
            self.max_degree
        );
        if (l_out + l1 + l2) % 2 != 0 || l_out > l1 + l2 || l_out < l1.abs_diff(l2) {
            return 0.0;
        }
        match &self.storage {
            TableStorage::Dense(values) => {
                let d = self.max_degree;
                values[(l1 * (d + 1) + l2) * (2 * d + 1) + l_out]
            }
            TableStorage::Triangle { offsets, values } => {
                let base = offsets[l1 * (self.max_degree + 1) + l2];
                values[base + (l_out - l1.abs_diff(l2)) / 2]
            }
        }
    }

    /// Test hook for the validation suite's negative control: shifts one
    /// stored entry by `delta`.
    #[doc(hidden)]
    pub fn perturb_entry(&mut self, l_out: usize, l1: usize, l2: usize, delta: f64) {
        match &mut self.storage {
            TableStorage::Dense(values) => {
                let d = self.max_degree;
                values[(l1 * (d + 1) + l2) * (2 * d + 1) + l_out] += delta;
            }
            TableStorage::Triangle { offsets, values } => {
                let base = offsets[l1 * (self.max_degree + 1) + l2];
                values[base + (l_out - l1.abs_diff(l2)) / 2] += delta;
            }
        }
    }
}

/// Coefficient-space product: the expansion coefficients of
/// `u(t) * v(t)` given the expansions of the factors,
/// `out[L] = sum_{l1, l2} Gamma(L; l1, l2) u[l1] v[l2]`.
///
/// Requires `table.max_degree >= deg(u) + deg(v)`; output has length
/// `deg(u) + deg(v) + 1`.
pub fn convolve(
    u: &LegendreSeries,
    v: &LegendreSeries,
    table: &TripleProductTable,
) -> Result<LegendreSeries, Error> {
    let du = u.degree();
    let dv = v.degree();
    if table.max_degree() < du + dv {
        return Err(Error::TableTooSmall {
            needed: du + dv,
            max_degree: table.max_degree(),
        });
    }
    let mut out = vec![Complex64::ZERO; du + dv + 1];
    for l1 in 0..=du {
        let cu = u.get(l1);
        if cu == Complex64::ZERO {
            continue;
        }
        for l2 in 0..=dv {
            let c = cu * v.get(l2);
            if c == Complex64::ZERO {
                continue;
            }
            let lo = l1.abs_diff(l2);
            let hi = l1 + l2;
            let mut l_out = lo;
            while l_out <= hi {
                out[l_out] += table.get(l_out, l1, l2) * c;
                l_out += 2;
            }
        }
    }
    LegendreSeries::new(out)
}

use std::collections::BTreeMap;
use std::fmt;

use crate::polyring::Monomial;

/// `N(t) / Π (1 − t^{w_i})` where the `w_i` are the variable degrees. The
/// numerator is a Laurent polynomial so that shifted modules fit too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: BTreeMap<i64, i64>,
    weights: Vec<u32>,
}

impl HilbertSeries {
    /// `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_numerator(coeffs: Vec<i64>, weights: Vec<u32>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (k as i64, c)), weights)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>, weights: Vec<u32>) -> Self {
        let mut numerator = BTreeMap::new();
        for (k, c) in terms {
            *numerator.entry(k).or_insert(0) += c;
        }
        numerator.retain(|_, c| *c != 0);
        HilbertSeries { numerator, weights }
    }

    pub fn zero(weights: Vec<u32>) -> Self {
        Self::from_terms([], weights)
    }

    /// Nonzero numerator coefficients keyed by exponent.
    pub fn numerator(&self) -> &BTreeMap<i64, i64> {
        &self.numerator
    }

    /// Dense numerator coefficients from `t^0`; `None` if any exponent is negative.
    pub fn numerator_coefficients(&self) -> Option<Vec<i64>> {
        let top = match self.numerator.keys().next_back() {
            None => return Some(Vec::new()),
            Some(&k) => k,
        };
        if *self.numerator.keys().next().unwrap() < 0 {
            return None;
        }
        Some((0..=top).map(|k| self.numerator.get(&k).copied().unwrap_or(0)).collect())
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.weights, other.weights);
        Self::from_terms(self.numerator.iter().chain(other.numerator.iter()).map(|(&k, &c)| (k, c)), self.weights.clone())
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.add(&other.scaled(-1))
    }

    pub fn scaled(&self, c: i64) -> HilbertSeries {
        Self::from_terms(self.numerator.iter().map(|(&k, &v)| (k, v * c)), self.weights.clone())
    }

    /// Multiplies by `t^a` (the series of `M(−a)`).
    pub fn shifted(&self, a: i64) -> HilbertSeries {
        Self::from_terms(self.numerator.iter().map(|(&k, &v)| (k + a, v)), self.weights.clone())
    }

    /// Number of monomials of each degree `0..=max`.
    fn monomial_counts(&self, max: i64) -> Vec<i64> {
        let mut counts = vec![0i64; max.max(0) as usize + 1];
        counts[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            if w == 0 {
                continue;
            }
            for e in w..counts.len() {
                counts[e] += counts[e - w];
            }
        }
        if max < 0 {
            counts.clear();
        }
        counts
    }

    /// Coefficient of `t^d` in the expanded series.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        let counts = self.monomial_counts(d - self.numerator.keys().next().copied().unwrap_or(0));
        self.numerator
            .iter()
            .filter(|(&k, _)| k <= d)
            .map(|(&k, &c)| c * counts[(d - k) as usize])
            .sum()
    }

    pub fn hilbert_function_range(&self, from: i64, to: i64) -> Vec<i64> {
        (from..=to).map(|d| self.hilbert_function(d)).collect()
    }

    /// With all variable degrees one: `(dim, h)` where `N = (1 − t)^{n − dim} h`
    /// and `h(1) ≠ 0`. `None` for weighted rings or the zero series.
    pub fn reduced(&self) -> Option<(usize, BTreeMap<i64, i64>)> {
        if self.is_zero() || self.weights.iter().any(|&w| w != 1) {
            return None;
        }
        let n = self.weights.len();
        let low = *self.numerator.keys().next().unwrap();
        let mut coeffs: Vec<i64> = {
            let top = *self.numerator.keys().next_back().unwrap();
            (low..=top).map(|k| self.numerator.get(&k).copied().unwrap_or(0)).collect()
        };
        let mut divided = 0;
        while divided < n && coeffs.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t): h_k = sum_{i<=k} c_i
            let mut acc = 0;
            let mut h = Vec::with_capacity(coeffs.len() - 1);
            for &c in &coeffs[..coeffs.len() - 1] {
                acc += c;
                h.push(acc);
            }
            coeffs = h;
            divided += 1;
        }
        let h = coeffs.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(i, c)| (low + i as i64, c)).collect();
        Some((n - divided, h))
    }
}

impl fmt::Display for HilbertSeries {
    /// Writes the numerator, e.g. `1 - 3t^2 + 2t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            return write!(f, "0");
        }
        for (i, (&k, &c)) in self.numerator.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

/// Numerator of the Hilbert series of `R/(gens)` for a monomial ideal, by
/// the pivot recursion `N(M) = N(M + (x)) + t^{deg x} N(M : x)`.
pub fn monomial_numerator(gens: &[Monomial], weights: &[u32]) -> Vec<i64> {
    let mut out = numerator_rec(minimize(gens.to_vec()), weights);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[u32]) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1];
        for m in &gens {
            let d = m.degree(weights) as usize;
            let mut f = vec![0; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most non-coprime generators
    let n = weights.len();
    let mut occurrences = vec![0usize; n];
    for m in gens.iter().filter(|m| m.exponents().iter().filter(|&&e| e > 0).count() > 1) {
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                occurrences[v] += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&v| (occurrences[v], std::cmp::Reverse(v))).expect("variables");
    let xm = Monomial::variable(n, x);
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exponents()[x] == 0).cloned().collect();
    plus.push(xm.clone());
    let quotient: Vec<Monomial> =
        gens.iter().map(|m| if m.exponents()[x] > 0 { m.div(&xm) } else { m.clone() }).collect();
    let mut out = numerator_rec(minimize(plus), weights);
    let q = numerator_rec(minimize(quotient), weights);
    poly_add_shifted(&mut out, &q, weights[x] as usize);
    out
}

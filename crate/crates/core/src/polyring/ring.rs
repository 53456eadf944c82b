use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::CoefficientField;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Largest exponent/degree accepted when building polynomials.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

const AUX_PREFIX: &str = "@";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingMode {
    /// Positively graded by the variable weights.
    Graded,
    /// No grading is used; graded-only operations refuse these rings.
    Affine,
}

/// A polynomial ring `k[x_1, ..., x_n]` together with its active term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
    mode: RingMode,
    field: CoefficientField,
    order: MonomialOrder,
    degree_cap: u32,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(field: CoefficientField, names: &[S], mode: RingMode) -> Result<RingRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let weights = vec![1; names.len()];
        Self::build_checked(field, names, weights, mode, MonomialOrder::Grevlex, DEFAULT_DEGREE_CAP, false)
    }

    /// Standard graded ring (all variables of degree one) with grevlex.
    pub fn graded<S: AsRef<str>>(field: CoefficientField, names: &[S]) -> Result<RingRef> {
        Self::new(field, names, RingMode::Graded)
    }

    pub fn affine<S: AsRef<str>>(field: CoefficientField, names: &[S]) -> Result<RingRef> {
        Self::new(field, names, RingMode::Affine)
    }

    /// Graded ring with the standard variable names `x0, ..., x{n-1}`.
    pub fn standard(field: CoefficientField, nvars: usize) -> RingRef {
        let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
        Self::graded(field, &names).expect("standard names are valid")
    }

    fn build(
        field: CoefficientField,
        names: Vec<String>,
        weights: Vec<u32>,
        mode: RingMode,
        order: MonomialOrder,
        degree_cap: u32,
    ) -> Result<RingRef> {
        // rings derived from an existing ring may keep its auxiliary names
        Self::build_checked(field, names, weights, mode, order, degree_cap, true)
    }

    fn build_checked(
        field: CoefficientField,
        names: Vec<String>,
        weights: Vec<u32>,
        mode: RingMode,
        order: MonomialOrder,
        degree_cap: u32,
        internal: bool,
    ) -> Result<RingRef> {
        let mut seen = HashSet::new();
        for full in &names {
            let n = full.strip_prefix(AUX_PREFIX).filter(|_| internal).unwrap_or(full);
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(full.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if weights.len() != names.len() {
            return Err(Error::InvalidRing("one weight per variable required".into()));
        }
        if mode == RingMode::Graded && weights.contains(&0) {
            return Err(Error::InvalidRing("graded rings need positive variable degrees".into()));
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > names.len() {
                return Err(Error::InvalidRing(format!("elimination block {k} exceeds the variable count")));
            }
        }
        Ok(Arc::new(Ring {
            names,
            weights,
            mode,
            field,
            order,
            degree_cap,
        }))
    }

    pub fn with_weights(&self, weights: &[u32]) -> Result<RingRef> {
        Self::build(self.field, self.names.clone(), weights.to_vec(), self.mode, self.order, self.degree_cap)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Self::build(self.field, self.names.clone(), self.weights.clone(), self.mode, order, self.degree_cap)
    }

    pub fn with_mode(&self, mode: RingMode) -> Result<RingRef> {
        Self::build(self.field, self.names.clone(), self.weights.clone(), mode, self.order, self.degree_cap)
    }

    pub fn with_degree_cap(&self, cap: u32) -> RingRef {
        Arc::new(Ring { degree_cap: cap, ..self.clone() })
    }

    /// New ring whose variables are `front` followed by the current ones.
    pub fn extended_front<S: AsRef<str>>(
        &self,
        front: &[S],
        mode: RingMode,
        order: MonomialOrder,
    ) -> Result<RingRef> {
        let mut names: Vec<String> = front.iter().map(|s| s.as_ref().to_string()).collect();
        let mut weights = vec![1; names.len()];
        names.extend(self.names.iter().cloned());
        weights.extend(self.weights.iter().copied());
        Self::build(self.field, names, weights, mode, order, self.degree_cap)
    }

    /// Affine ring with `count` auxiliary variables `@t0, @t1, ...` in front
    /// and an elimination order for them. User input cannot name these.
    pub(crate) fn with_auxiliary_front(&self, count: usize) -> RingRef {
        let mut names: Vec<String> = (0..count).map(|i| format!("{AUX_PREFIX}t{i}")).collect();
        let mut weights = vec![1; count];
        names.extend(self.names.iter().cloned());
        weights.extend(self.weights.iter().copied());
        let order = MonomialOrder::Elimination(count);
        Self::build_checked(self.field, names, weights, RingMode::Affine, order, self.degree_cap, true)
            .expect("auxiliary names are fresh")
    }

    /// Same ring with variables permuted: new variable `i` is old `perm[i]`.
    pub fn permuted(&self, perm: &[usize], order: MonomialOrder) -> Result<RingRef> {
        let names = perm.iter().map(|&i| self.names[i].clone()).collect();
        let weights = perm.iter().map(|&i| self.weights[i]).collect();
        Self::build(self.field, names, weights, self.mode, order, self.degree_cap)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn is_graded(&self) -> bool {
        self.mode == RingMode::Graded
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b, &self.weights)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.degree(&self.weights)
    }

    pub fn require_graded(&self) -> Result<()> {
        if self.is_graded() {
            Ok(())
        } else {
            Err(Error::ModeMismatch { expected: "graded" })
        }
    }

    /// Same variables, field and weights (orders may differ).
    pub fn same_variables(&self, other: &Ring) -> bool {
        self.names == other.names && self.weights == other.weights && self.field == other.field
    }

    /// All monomials of weighted degree `d`, in descending ring order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut cur = Monomial::one(n);
        fn rec(i: usize, left: u32, w: &[u32], cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut e = 0u32;
            loop {
                cur.exponents_mut()[i] = e as u16;
                rec(i + 1, left - e * w[i], w, cur, out);
                e += 1;
                if w[i] == 0 || e * w[i] > left {
                    break;
                }
            }
            cur.exponents_mut()[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(cur);
            }
            return out;
        }
        rec(0, d, &self.weights, &mut cur, &mut out);
        out.sort_by(|a, b| self.compare(b, a));
        out
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {} [{}]", self.field, self.names.join(", "))
    }
}

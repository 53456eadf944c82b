use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::Error;

/// Term orders. Variables are ranked by declaration: the first is largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, graded by the ring's variable weights.
    Grevlex,
    Lex,
    /// The first `k` variables form a block compared first; grevlex inside
    /// each block.
    Elimination(usize),
}

fn grevlex_slice(a: &[u16], b: &[u16], weights: &[u32]) -> Ordering {
    let da: u32 = a.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
    let db: u32 = b.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Grevlex => grevlex_slice(a, b, weights),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex_slice(&a[..k], &b[..k], &weights[..k])
                    .then_with(|| grevlex_slice(&a[k..], &b[k..], &weights[k..]))
            }
        }
    }

    /// Whether the order refines the (weighted) degree.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::Elimination(0))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => s
                .strip_prefix("elim(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Elimination)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown monomial order `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_hand_example() {
        // y^2 against x*z in k[x,y,z]
        let w = [1, 1, 1];
        assert_eq!(
            MonomialOrder::Grevlex.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1]), &w),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Grevlex.compare(&m(&[1, 1, 1]), &m(&[1, 1, 1]), &w),
            Ordering::Equal
        );
    }

    #[test]
    fn lex_hand_example() {
        let w = [1, 1];
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 5]), &w), Ordering::Greater);
    }

    #[test]
    fn elimination_ranks_first_block() {
        let w = [1, 1, 1];
        let order = MonomialOrder::Elimination(1);
        assert_eq!(order.compare(&m(&[1, 0, 0]), &m(&[0, 4, 4]), &w), Ordering::Greater);
        assert_eq!(order.compare(&m(&[1, 2, 0]), &m(&[1, 0, 1]), &w), Ordering::Greater);
    }

    #[test]
    fn parses_names() {
        assert_eq!("grevlex".parse::<MonomialOrder>().unwrap(), MonomialOrder::Grevlex);
        assert_eq!("elim(2)".parse::<MonomialOrder>().unwrap(), MonomialOrder::Elimination(2));
        assert!("revlex".parse::<MonomialOrder>().is_err());
    }
}

//! Monomials as exponent vectors.

use std::fmt;

/// A monomial in `n` variables, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The single variable `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "dimension mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders with the given variable names, e.g. `x1^2*x3`.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("x{}", i + 1));
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{}^{}", name, e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.exps.len()).map(|i| format!("x{}", i)).collect();
        write!(f, "{}", self.format(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn mul_adds_exponents() {
        // x1x2 * x3 = x1x2x3
        assert_eq!(m(&[1, 1, 0]).mul(&m(&[0, 0, 1])), m(&[1, 1, 1]));
        // m * 1 = m
        assert_eq!(m(&[2, 0, 1]).mul(&Monomial::one(3)), m(&[2, 0, 1]));
        // x1^2 * x1 = x1^3
        assert_eq!(m(&[2]).mul(&m(&[1])), m(&[3]));
    }

    #[test]
    fn divisibility() {
        // x1x3 | x1x2x3
        assert!(m(&[1, 0, 1]).divides(&m(&[1, 1, 1])));
        // x1x4 does not divide x1x2x3
        assert!(!m(&[1, 0, 0, 1]).divides(&m(&[1, 1, 1, 0])));
        // 1 | m for any m
        assert!(Monomial::one(4).divides(&m(&[3, 0, 1, 2])));
    }

    #[test]
    fn lcm_is_componentwise_max() {
        assert_eq!(m(&[1, 1, 0]).lcm(&m(&[1, 0, 1])), m(&[1, 1, 1]));
        let a = m(&[2, 1]);
        assert_eq!(a.lcm(&a), a);
        assert_eq!(a.lcm(&Monomial::one(2)), a);
    }

    #[test]
    fn div_into_inverts_mul() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 1, 3]);
        assert_eq!(a.div_into(&a.mul(&b)), Some(b.clone()));
        assert_eq!(b.div_into(&a), None);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mismatched_dimensions_panic() {
        m(&[1, 0]).mul(&m(&[1, 0, 0]));
    }
}

//! Sparse multivariate polynomials with exact coefficients.

use crate::field::{Coefficient, FieldSpec};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use std::cmp::Ordering;

/// A nonzero coefficient attached to a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coefficient,
    pub mono: Monomial,
}

/// Terms strictly decreasing under the active monomial order, no zero
/// coefficients. The empty term list is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Normalizes: sorts descending under `ord`, merges equal monomials,
    /// drops zero coefficients.
    pub fn from_terms(mut terms: Vec<Term>, ord: &MonomialOrder) -> Self {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| ord.compare(&b.mono, &a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = merged.last_mut() {
                if last.mono == t.mono {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                    continue;
                }
            }
            merged.push(t);
        }
        Polynomial { terms: merged }
    }

    pub fn constant(c: Coefficient, nvars: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: vec![Term {
                coeff: c,
                mono: Monomial::one(nvars),
            }],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Merge-adds two polynomials sorted under the same order.
    pub fn add(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            if i == self.terms.len() {
                out.push(other.terms[j].clone());
                j += 1;
                continue;
            }
            if j == other.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            match ord.compare(&self.terms[i].mono, &other.terms[j].mono) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].coeff.add(&other.terms[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: self.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn sub(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        self.add(&other.neg(), ord)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies by the term `c * m`. Order of terms is preserved.
    pub fn scale(&self, c: &Coefficient, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(&self.scale(&t.coeff, &t.mono), ord);
        }
        acc
    }

    /// Scales so the leading coefficient is 1. No-op on zero.
    pub fn monic(&self, nvars: usize) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv(), &Monomial::one(nvars)),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// True when all terms share the same total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    /// Appends one fresh variable and lifts every term to the maximal degree.
    pub fn homogenize(&self, ord: &MonomialOrder) -> Polynomial {
        let Some(maxdeg) = self.total_degree() else {
            return Polynomial::zero();
        };
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = t.mono.exponents().to_vec();
                exps.push(maxdeg - t.mono.degree());
                Term {
                    coeff: t.coeff.clone(),
                    mono: Monomial::new(exps),
                }
            })
            .collect();
        Polynomial::from_terms(terms, ord)
    }

    /// Renders terms in stored order, e.g. `x1^2*x3 - 2*x2`.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = crate::field::is_negative(&t.coeff);
            let mag = if neg { t.coeff.neg() } else { t.coeff.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if t.mono.is_one() {
                out.push_str(&format!("{}", mag));
            } else if mag.is_one() {
                out.push_str(&t.mono.format(names));
            } else {
                out.push_str(&format!("{}*{}", mag, t.mono.format(names)));
            }
        }
        out
    }
}

/// Convenience constructor from `(i64 coefficient, exponent vector)` pairs.
pub fn poly(field: FieldSpec, ord: &MonomialOrder, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|(c, e)| Term {
                coeff: field.from_i64(*c),
                mono: Monomial::new(e.to_vec()),
            })
            .collect(),
        ord,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const F: FieldSpec = FieldSpec::Prime(32003);
    const ORD: MonomialOrder = MonomialOrder::GrevLex;

    #[test]
    fn cancellation() {
        // (x1x2 - x2^2) + x2^2 = x1x2
        let p = poly(F, &ORD, &[(1, &[1, 1]), (-1, &[0, 2])]);
        let q = poly(F, &ORD, &[(1, &[0, 2])]);
        assert_eq!(p.add(&q, &ORD), poly(F, &ORD, &[(1, &[1, 1])]));
        assert!(p.sub(&p, &ORD).is_zero());
    }

    #[test]
    fn leading_data_under_grevlex() {
        let p = poly(F, &ORD, &[(-1, &[0, 2]), (1, &[1, 1])]);
        assert_eq!(p.leading_monomial(), Some(&Monomial::new(vec![1, 1])));
        assert!(Polynomial::zero().leading_term().is_none());
    }

    #[test]
    fn scale_identity() {
        let p = poly(F, &ORD, &[(3, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(p.scale(&F.one(), &Monomial::one(2)), p);
    }

    #[test]
    fn homogeneity() {
        assert!(poly(F, &ORD, &[(1, &[1, 1]), (-1, &[0, 2])]).is_homogeneous());
        let p = poly(F, &ORD, &[(1, &[2, 0]), (-1, &[0, 1])]);
        assert!(!p.is_homogeneous());
        // x1^2 - x2*h
        let h = p.homogenize(&ORD);
        assert_eq!(h, poly(F, &ORD, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]));
        assert!(h.is_homogeneous());
    }

    #[test]
    fn monic_normalization() {
        let p = poly(F, &ORD, &[(7, &[2, 0]), (14, &[0, 1])]);
        let m = p.monic(2);
        assert!(m.leading_coeff().unwrap().is_one());
        assert_eq!(m.terms()[1].coeff, F.from_i64(2));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-20i64..20, proptest::collection::vec(0u32..4, 3)), 0..6)
            .prop_map(|ts| {
                Polynomial::from_terms(
                    ts.into_iter()
                        .map(|(c, e)| Term {
                            coeff: F.from_i64(c),
                            mono: Monomial::new(e),
                        })
                        .collect(),
                    &ORD,
                )
            })
    }

    fn is_normalized(p: &Polynomial) -> bool {
        p.terms().iter().all(|t| !t.coeff.is_zero())
            && p.terms()
                .windows(2)
                .all(|w| ORD.compare(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.add(&q, &ORD), q.add(&p, &ORD));
            prop_assert_eq!(p.add(&q, &ORD).add(&r, &ORD), p.add(&q.add(&r, &ORD), &ORD));
            prop_assert!(p.sub(&p, &ORD).is_zero());
            // distributivity of term scaling over addition
            let c = F.from_i64(5);
            let m = Monomial::new(vec![1, 0, 2]);
            prop_assert_eq!(
                p.add(&q, &ORD).scale(&c, &m),
                p.scale(&c, &m).add(&q.scale(&c, &m), &ORD)
            );
            prop_assert!(is_normalized(&p.add(&q, &ORD)));
            prop_assert!(is_normalized(&p.mul(&q, &ORD)));
        }
    }
}

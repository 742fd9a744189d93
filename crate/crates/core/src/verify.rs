//! Independent verification: plain Buchberger, Groebner-basis checks, and a
//! brute-force enumerator of the minimal signature/leading-monomial classes.
//!
//! Everything here is deliberately simple and separate from the engine's
//! reduction path; the test suites use it as the ground truth.

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::pair::{is_top_reducible, PairData};
use crate::poly::Polynomial;
use crate::sigorder::{check_compatibility, CompatibilityStatus, ModuleMonomial, SignatureOrder};
use std::cmp::Ordering;
use thiserror::Error;

/// `(lcm/lt(g1)) g1 - (lcm/lt(g2)) g2`. Panics on zero input.
pub fn s_polynomial(g1: &Polynomial, g2: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let t1 = g1.leading_term().expect("s_polynomial of zero");
    let t2 = g2.leading_term().expect("s_polynomial of zero");
    let lcm = t1.mono.lcm(&t2.mono);
    let a = g1.scale(&t1.coeff.inv(), &t1.mono.div_into(&lcm).unwrap());
    let b = g2.scale(&t2.coeff.inv(), &t2.mono.div_into(&lcm).unwrap());
    a.sub(&b, ord)
}

/// Full multivariate division remainder: no remainder term is divisible by
/// any leading term of `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let mut rest = p.clone();
    let mut remainder: Vec<crate::poly::Term> = Vec::new();
    'outer: while let Some(t) = rest.leading_term().cloned() {
        for g in basis {
            if let Some(gt) = g.leading_term() {
                if gt.mono.divides(&t.mono) {
                    let m = gt.mono.div_into(&t.mono).unwrap();
                    let lam = t.coeff.div(&gt.coeff);
                    rest = rest.sub(&g.scale(&lam, &m), ord);
                    continue 'outer;
                }
            }
        }
        remainder.push(t.clone());
        rest = rest.sub(&Polynomial::from_terms(vec![t], ord), ord);
    }
    Polynomial::from_terms(remainder, ord)
}

/// Classical pair-queue Buchberger with no pair criteria, first-in order.
/// Output polynomials are monic; zero inputs are dropped.
pub fn buchberger(f: &[Polynomial], ord: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in f {
        if !p.is_zero() {
            let nvars = p.leading_monomial().unwrap().nvars();
            basis.push(p.monic(nvars));
        }
    }
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            queue.push((j, i));
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let (i, j) = queue[head];
        head += 1;
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if !r.is_zero() {
            let nvars = r.leading_monomial().unwrap().nvars();
            let r = r.monic(nvars);
            for k in 0..basis.len() {
                queue.push((k, basis.len()));
            }
            basis.push(r);
        }
    }
    basis
}

/// Every S-polynomial of the set normal-forms to zero.
pub fn is_groebner_basis(basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|p| !p.is_zero()).collect();
    for i in 0..nonzero.len() {
        for j in 0..i {
            let s = s_polynomial(nonzero[i], nonzero[j], ord);
            if !normal_form(&s, basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Drops leading monomials divisible by another member of the set.
pub fn minimalize_leading_monomials(basis: &[Polynomial]) -> Vec<Monomial> {
    let lms: Vec<&Monomial> = basis.iter().filter_map(|p| p.leading_monomial()).collect();
    let mut keep: Vec<Monomial> = Vec::new();
    for (i, m) in lms.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(j, o)| o.divides(m) && (*o != *m || j < i));
        if !redundant {
            keep.push((*m).clone());
        }
    }
    keep
}

/// Leading-ideal equality by mutual divisibility of the minimalized
/// leading-monomial sets.
pub fn leading_ideal_equal(g1: &[Polynomial], g2: &[Polynomial], _ord: &MonomialOrder) -> bool {
    let a = minimalize_leading_monomials(g1);
    let b = minimalize_leading_monomials(g2);
    let covers =
        |xs: &[Monomial], ys: &[Monomial]| ys.iter().all(|y| xs.iter().any(|x| x.divides(y)));
    covers(&a, &b) && covers(&b, &a)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force enumeration requires compatible orders ({0})")]
    IncompatibleOrders(String),
    #[error("zero input polynomial at position {0}")]
    ZeroInput(usize),
}

/// Result of the brute-force enumeration up to a signature degree bound.
#[derive(Debug)]
pub struct TrbOracle {
    /// Minimal-class representatives: (signature, leading monomial), with
    /// signature degree within the requested bound. Leading monomials are monic.
    pub classes: Vec<(ModuleMonomial, Monomial)>,
    /// The fully reduced form of every enumerated signature
    /// (`None` marks a syzygy signature).
    pub reduced: Vec<(ModuleMonomial, Option<Monomial>)>,
    /// Every (signature, leading monomial) that was reducible at some point
    /// during the enumeration, used by the reducibility property check.
    pub reducible_seen: Vec<(ModuleMonomial, Monomial)>,
}

impl TrbOracle {
    /// Every recorded reducible pair is top reducible by some class
    /// representative.
    pub fn all_reducible_covered(&self, sord: &SignatureOrder) -> bool {
        self.reducible_seen.iter().all(|(sig, lm)| {
            self.classes.iter().any(|(bsig, blm)| {
                blm.divides(lm)
                    && sord.compare(&bsig.mul_mono(&blm.div_into(lm).unwrap()), sig)
                        == Ordering::Less
            })
        })
    }
}

/// Exhaustively top-reduces `(s, x^a f_i)` for every module monomial `s` up
/// to `degree_bound`, in ascending signature order, then groups the reduced
/// forms by similarity and keeps the divisibility-minimal signatures.
pub fn brute_force_trb(
    f: &[Polynomial],
    nvars: usize,
    ord: &MonomialOrder,
    sord: &SignatureOrder,
    degree_bound: u32,
) -> Result<TrbOracle, OracleError> {
    brute_force_trb_with_scan(f, nvars, ord, sord, degree_bound, false)
}

/// Same enumeration with the reducer scan reversed; exposed so tests can
/// confirm the reduced forms are independent of the reduction path.
pub fn brute_force_trb_with_scan(
    f: &[Polynomial],
    nvars: usize,
    ord: &MonomialOrder,
    sord: &SignatureOrder,
    degree_bound: u32,
    reverse_scan: bool,
) -> Result<TrbOracle, OracleError> {
    for (i, p) in f.iter().enumerate() {
        if p.is_zero() {
            return Err(OracleError::ZeroInput(i));
        }
    }
    let verdict = check_compatibility(ord, sord, nvars, f.len());
    if verdict.status != CompatibilityStatus::Compatible {
        return Err(OracleError::IncompatibleOrders(verdict.detail));
    }

    // Margin so that every reducer a bounded signature can need is computed.
    let degs: Vec<u32> = f.iter().map(|p| p.total_degree().unwrap()).collect();
    let spread = degs.iter().max().unwrap() - degs.iter().min().unwrap();
    let ext_bound = degree_bound + spread;

    let mut sigs: Vec<ModuleMonomial> = Vec::new();
    for exps in exponents_up_to(nvars, ext_bound) {
        for index in 0..f.len() {
            sigs.push(ModuleMonomial {
                mono: Monomial::new(exps.clone()),
                index,
            });
        }
    }
    sigs.sort_by(|a, b| sord.compare(a, b));

    let mut forms: Vec<PairData> = Vec::new();
    let mut reduced = Vec::new();
    let mut reducible_seen = Vec::new();
    for sig in &sigs {
        let mut cur = PairData {
            sig: sig.clone(),
            sig_coeff: f[sig.index].leading_coeff().unwrap().field().one(),
            v: f[sig.index].mul_monomial(&sig.mono),
            u_full: None,
            initial: sig.mono.is_one(),
        };
        'reduce: loop {
            let candidates: Box<dyn Iterator<Item = &PairData>> = if reverse_scan {
                Box::new(forms.iter().rev())
            } else {
                Box::new(forms.iter())
            };
            for q in candidates {
                if is_top_reducible(sord, &cur, q) {
                    reducible_seen.push((cur.sig.clone(), cur.lm().unwrap().clone()));
                    cur = crate::pair::top_reduce_step(ord, sord, &cur, q);
                    continue 'reduce;
                }
            }
            break;
        }
        reduced.push((sig.clone(), cur.lm().cloned()));
        forms.push(cur.monic(nvars));
    }

    // Group certified reduced forms by similarity; keep signatures that no
    // other group member's signature properly divides.
    let certified: Vec<(&ModuleMonomial, &Monomial)> = reduced
        .iter()
        .filter(|(s, _)| s.mono.degree() <= degree_bound)
        .filter_map(|(s, lm)| lm.as_ref().map(|m| (s, m)))
        .collect();
    let similar = |a: (&ModuleMonomial, &Monomial), b: (&ModuleMonomial, &Monomial)| {
        a.0.mul_mono(b.1) == b.0.mul_mono(a.1)
    };
    let mut classes = Vec::new();
    for &(s, lm) in &certified {
        let minimal = certified.iter().all(|&(s2, lm2)| {
            if (s2, lm2) == (s, lm) || !similar((s, lm), (s2, lm2)) {
                true
            } else {
                !(s2.divides(s) && s2 != s)
            }
        });
        if minimal && !classes.contains(&(s.clone(), lm.clone())) {
            classes.push((s.clone(), lm.clone()));
        }
    }
    // Reducibility witnesses outside the certified range are dropped.
    reducible_seen.retain(|(s, _)| s.mono.degree() <= degree_bound);
    Ok(TrbOracle {
        classes,
        reduced,
        reducible_seen,
    })
}

fn exponents_up_to(nvars: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for partial in &out {
            let used: u32 = partial.iter().sum();
            for e in 0..=(bound - used) {
                let mut v = partial.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

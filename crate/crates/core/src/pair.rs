//! Pairs `(u, v)` with `u . f = v`, their order, reductions and joint pairs.
//!
//! By default a pair stores only its signature `lm(u)` (with the coefficient
//! of that term) next to the polynomial part `v`; the reduction rules
//! guarantee the signature never changes. The full module element `u` is
//! tracked only in verification mode.

use crate::field::Coefficient;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::sigorder::{ModuleMonomial, SignatureOrder};
use std::cmp::Ordering;

/// Stable identifier into an append-only pair store owned by one engine run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairId(pub usize);

/// A stored pair. `v.is_zero()` marks a syzygy pair.
#[derive(Clone, Debug)]
pub struct PairData {
    pub sig: ModuleMonomial,
    /// Coefficient of the `sig` term of `u`; kept in sync by reductions.
    pub sig_coeff: Coefficient,
    pub v: Polynomial,
    /// Full module element, populated only in verification mode.
    pub u_full: Option<Vec<Polynomial>>,
    /// True for the pairs `(E_i, f_i)` seeding a run.
    pub initial: bool,
}

impl PairData {
    /// The initial pair `(E_i, f_i)`.
    pub fn initial(index: usize, f_i: &Polynomial, nvars: usize, d: usize, track: bool) -> Self {
        let field = f_i
            .leading_coeff()
            .expect("initial pair needs a nonzero polynomial")
            .field();
        let u_full = track.then(|| {
            (0..d)
                .map(|j| {
                    if j == index {
                        Polynomial::constant(field.one(), nvars)
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        });
        PairData {
            sig: ModuleMonomial::unit(nvars, index),
            sig_coeff: field.one(),
            v: f_i.clone(),
            u_full,
            initial: true,
        }
    }

    pub fn is_syzygy(&self) -> bool {
        self.v.is_zero()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.v.leading_monomial()
    }

    pub fn lc(&self) -> Option<&Coefficient> {
        self.v.leading_coeff()
    }

    /// The multiplied pair value `m * self`.
    pub fn scaled_by(&self, m: &Monomial) -> PairData {
        PairData {
            sig: self.sig.mul_mono(m),
            sig_coeff: self.sig_coeff.clone(),
            v: self.v.mul_monomial(m),
            u_full: self
                .u_full
                .as_ref()
                .map(|u| u.iter().map(|p| p.mul_monomial(m)).collect()),
            initial: self.initial && m.is_one(),
        }
    }

    /// Scales so that `lc(v) = 1`; no-op on syzygy pairs.
    pub fn monic(mut self, nvars: usize) -> PairData {
        if let Some(lc) = self.lc().cloned() {
            if !lc.is_one() {
                let inv = lc.inv();
                let one = Monomial::one(nvars);
                self.v = self.v.scale(&inv, &one);
                self.sig_coeff = self.sig_coeff.mul(&inv);
                if let Some(u) = &mut self.u_full {
                    for p in u.iter_mut() {
                        *p = p.scale(&inv, &one);
                    }
                }
            }
        }
        self
    }
}

/// Signature of the multiplied pair `[m, p]`.
pub fn sig_of(m: &Monomial, p: &PairData) -> ModuleMonomial {
    p.sig.mul_mono(m)
}

/// The pair order: compares `lm(v1) * sig(p2)` against `lm(v2) * sig(p1)`
/// under the signature order. `Equal` means the pairs are similar.
///
/// Panics when either pair is syzygy (the order is undefined there).
pub fn pair_compare(sord: &SignatureOrder, p1: &PairData, p2: &PairData) -> Ordering {
    let lm1 = p1.lm().expect("pair order undefined on syzygy pairs");
    let lm2 = p2.lm().expect("pair order undefined on syzygy pairs");
    sord.compare(&p2.sig.mul_mono(lm1), &p1.sig.mul_mono(lm2))
}

/// Same signature and same leading monomial.
pub fn is_equivalent(p1: &PairData, p2: &PairData) -> bool {
    p1.sig == p2.sig && p1.lm() == p2.lm()
}

/// `lm(p1) sig(p2) = lm(p2) sig(p1)`; requires non-syzygy pairs.
pub fn is_similar(p1: &PairData, p2: &PairData) -> bool {
    let (Some(lm1), Some(lm2)) = (p1.lm(), p2.lm()) else {
        return false;
    };
    p1.sig.mul_mono(lm2) == p2.sig.mul_mono(lm1)
}

/// `p1` is top reducible by `p2`: both non-syzygy, `lm(p2) | lm(p1)` and
/// `p1` strictly below `p2` in the pair order.
pub fn is_top_reducible(sord: &SignatureOrder, p1: &PairData, p2: &PairData) -> bool {
    let (Some(lm1), Some(lm2)) = (p1.lm(), p2.lm()) else {
        return false;
    };
    lm2.divides(lm1) && pair_compare(sord, p1, p2) == Ordering::Less
}

/// Top reducibility relaxed to allow similar pairs with non-proportional
/// leading data. Top reducible always implies regular reducible.
pub fn is_regular_reducible(sord: &SignatureOrder, p1: &PairData, p2: &PairData) -> bool {
    let (Some(lm1), Some(lm2)) = (p1.lm(), p2.lm()) else {
        return false;
    };
    if !lm2.divides(lm1) {
        return false;
    }
    match pair_compare(sord, p1, p2) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            // Similar pairs: reducible unless the leading data are proportional.
            let c1 = p1.lc().unwrap();
            let c2 = p2.lc().unwrap();
            p1.sig_coeff.mul(c2) != p2.sig_coeff.mul(c1)
        }
    }
}

/// Replaces `p1` by `p1 - (lt(p1)/lt(p2)) * p2`. The signature is preserved;
/// the leading monomial strictly drops (or the result becomes syzygy).
///
/// Panics unless `is_top_reducible(p1, p2)` holds.
pub fn top_reduce_step(
    ord: &MonomialOrder,
    sord: &SignatureOrder,
    p1: &PairData,
    p2: &PairData,
) -> PairData {
    assert!(
        is_top_reducible(sord, p1, p2),
        "top reduction precondition violated"
    );
    subtract_multiple(ord, p1, p2, false)
}

/// The regular-reduction variant: also accepts similar reducers with
/// non-proportional leading data, updating the signature coefficient.
pub fn regular_reduce_step(
    ord: &MonomialOrder,
    sord: &SignatureOrder,
    p1: &PairData,
    p2: &PairData,
) -> PairData {
    assert!(
        is_regular_reducible(sord, p1, p2),
        "regular reduction precondition violated"
    );
    let equal_sig = pair_compare(sord, p1, p2) == Ordering::Equal;
    subtract_multiple(ord, p1, p2, equal_sig)
}

fn subtract_multiple(
    ord: &MonomialOrder,
    p1: &PairData,
    p2: &PairData,
    equal_sig: bool,
) -> PairData {
    let m = p2
        .lm()
        .unwrap()
        .div_into(p1.lm().unwrap())
        .expect("leading monomial must divide");
    let lam = p1.lc().unwrap().div(p2.lc().unwrap());
    let v = p1.v.sub(&p2.v.scale(&lam, &m), ord);
    let sig_coeff = if equal_sig {
        p1.sig_coeff.sub(&lam.mul(&p2.sig_coeff))
    } else {
        p1.sig_coeff.clone()
    };
    debug_assert!(!sig_coeff.is_zero(), "signature term cancelled");
    let u_full = match (&p1.u_full, &p2.u_full) {
        (Some(u1), Some(u2)) => Some(
            u1.iter()
                .zip(u2)
                .map(|(a, b)| a.sub(&b.scale(&lam, &m), ord))
                .collect(),
        ),
        _ => None,
    };
    PairData {
        sig: p1.sig.clone(),
        sig_coeff,
        v,
        u_full,
        initial: p1.initial,
    }
}

/// Which input carries a joint multiplied pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JPairCarrier {
    First,
    Second,
}

/// The joint multiplied pair of two pairs: the pair-order-smaller input,
/// multiplied up to the lcm of the leading monomials. Empty when either
/// input is syzygy or the two are similar.
pub fn j_pair(
    sord: &SignatureOrder,
    p1: &PairData,
    p2: &PairData,
) -> Option<(Monomial, JPairCarrier)> {
    let (Some(lm1), Some(lm2)) = (p1.lm(), p2.lm()) else {
        return None;
    };
    let lcm = lm1.lcm(lm2);
    match pair_compare(sord, p1, p2) {
        Ordering::Equal => None,
        Ordering::Less => Some((lm1.div_into(&lcm).unwrap(), JPairCarrier::First)),
        Ordering::Greater => Some((lm2.div_into(&lcm).unwrap(), JPairCarrier::Second)),
    }
}

/// The signature `max(sig(v2 p1), sig(v1 p2))` of the cross product of two
/// stored pairs; empty when the two sides coincide.
pub fn koszul_signature(
    sord: &SignatureOrder,
    p1: &PairData,
    p2: &PairData,
) -> Option<ModuleMonomial> {
    let (Some(lm1), Some(lm2)) = (p1.lm(), p2.lm()) else {
        return None;
    };
    let a = p1.sig.mul_mono(lm2);
    let b = p2.sig.mul_mono(lm1);
    match sord.compare(&a, &b) {
        Ordering::Equal => None,
        Ordering::Less => Some(b),
        Ordering::Greater => Some(a),
    }
}

/// Verification-mode check: `u . f = v` exactly and the signature-order
/// leading term of `u` is `sig` with coefficient `sig_coeff`.
pub fn check_pair_invariant(
    p: &PairData,
    f: &[Polynomial],
    ord: &MonomialOrder,
    sord: &SignatureOrder,
) -> bool {
    let Some(u) = &p.u_full else {
        panic!("check_pair_invariant requires module tracking");
    };
    let mut dot = Polynomial::zero();
    for (u_i, f_i) in u.iter().zip(f) {
        dot = dot.add(&u_i.mul(f_i, ord), ord);
    }
    if dot != p.v {
        return false;
    }
    match module_leading_term(u, sord) {
        Some((sig, coeff)) => sig == p.sig && coeff == p.sig_coeff,
        None => false,
    }
}

/// The signature-order maximal term of a module element.
pub fn module_leading_term(
    u: &[Polynomial],
    sord: &SignatureOrder,
) -> Option<(ModuleMonomial, Coefficient)> {
    let mut best: Option<(ModuleMonomial, Coefficient)> = None;
    for (i, p) in u.iter().enumerate() {
        for t in p.terms() {
            let cand = ModuleMonomial {
                mono: t.mono.clone(),
                index: i,
            };
            match &best {
                Some((b, _)) if sord.compare(&cand, b) != Ordering::Greater => {}
                _ => best = Some((cand, t.coeff.clone())),
            }
        }
    }
    best
}

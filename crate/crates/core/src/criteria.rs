//! Pair-rejection criteria and their shared state (rule list, syzygy set).
//!
//! A criterion returns `true` when the multiplied pair is *blocked*. Bundles
//! evaluate their criteria in order, syzygy-type first; the engine records
//! which predicate fired.

use crate::monomial::Monomial;
use crate::pair::{is_equivalent, pair_compare, PairData, PairId};
use crate::sigorder::{ModuleMonomial, SignatureOrder};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CriterionKind {
    Syzygy,
    Rewritten,
    ESyzygy,
    ERewritten,
    SRewritten,
    GSyzygy,
    Signature,
    Mpair,
}

impl CriterionKind {
    pub fn name(&self) -> &'static str {
        match self {
            CriterionKind::Syzygy => "syzygy",
            CriterionKind::Rewritten => "rewritten",
            CriterionKind::ESyzygy => "esyzygy",
            CriterionKind::ERewritten => "erewritten",
            CriterionKind::SRewritten => "srewritten",
            CriterionKind::GSyzygy => "gsyzygy",
            CriterionKind::Signature => "signature",
            CriterionKind::Mpair => "mpair",
        }
    }

    pub fn all() -> [CriterionKind; 8] {
        [
            CriterionKind::Syzygy,
            CriterionKind::Rewritten,
            CriterionKind::ESyzygy,
            CriterionKind::ERewritten,
            CriterionKind::SRewritten,
            CriterionKind::GSyzygy,
            CriterionKind::Signature,
            CriterionKind::Mpair,
        ]
    }
}

/// Active predicates in evaluation order.
#[derive(Clone, Debug)]
pub struct CriterionConfig {
    pub kinds: Vec<CriterionKind>,
}

/// Signatures known to head syzygies; blocks anything they divide.
#[derive(Clone, Debug, Default)]
pub struct SyzygySet {
    sigs: Vec<ModuleMonomial>,
}

impl SyzygySet {
    pub fn insert(&mut self, sig: ModuleMonomial) {
        if !self.sigs.contains(&sig) {
            self.sigs.push(sig);
        }
    }

    pub fn blocks(&self, sig: &ModuleMonomial) -> bool {
        self.sigs.iter().any(|s| s.divides(sig))
    }

    pub fn iter(&self) -> impl Iterator<Item = &ModuleMonomial> {
        self.sigs.iter()
    }

    pub fn len(&self) -> usize {
        self.sigs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigs.is_empty()
    }
}

/// The rewrite rule list: most recently prepended first. Entries are pair
/// ids so a slot can be substituted in place after its reduction finishes.
#[derive(Clone, Debug, Default)]
pub struct RulesList {
    entries: Vec<PairId>,
}

impl RulesList {
    pub fn prepend(&mut self, id: PairId) {
        self.entries.insert(0, id);
    }

    /// Replaces the most recent occurrence of `old` by `new`.
    pub fn substitute(&mut self, old: PairId, new: PairId) -> bool {
        if let Some(slot) = self.entries.iter_mut().find(|e| **e == old) {
            *slot = new;
            true
        } else {
            false
        }
    }

    /// The first (most recent) entry whose signature divides `sig`.
    pub fn first_divisor(&self, store: &[PairData], sig: &ModuleMonomial) -> Option<PairId> {
        self.entries
            .iter()
            .copied()
            .find(|id| store[id.0].sig.divides(sig))
    }

    pub fn entries(&self) -> &[PairId] {
        &self.entries
    }
}

/// Blocked when some stored pair with a larger component index has a leading
/// monomial dividing the signature's monomial part.
pub fn syzygy_criterion(store: &[PairData], done: &[PairId], sig: &ModuleMonomial) -> bool {
    done.iter().any(|id| {
        let p1 = &store[id.0];
        match p1.lm() {
            Some(lm) => p1.sig.index > sig.index && lm.divides(&sig.mono),
            None => false,
        }
    })
}

/// Blocked when the first rule whose signature divides `sig` is not the
/// pair's own carrier. Identity is storage identity.
pub fn rewritten_criterion(
    store: &[PairData],
    rules: &RulesList,
    sig: &ModuleMonomial,
    carrier: PairId,
) -> bool {
    match rules.first_divisor(store, sig) {
        Some(first) => first != carrier,
        None => false,
    }
}

/// Divisibility test against the bundle's syzygy-signature set.
pub fn esyzygy_criterion(syzygies: &SyzygySet, sig: &ModuleMonomial) -> bool {
    syzygies.blocks(sig)
}

/// Blocked when some stored pair's signature divides `sig` and is strictly
/// above the carrier's signature.
pub fn erewritten_criterion(
    store: &[PairData],
    done: &[PairId],
    sord: &SignatureOrder,
    sig: &ModuleMonomial,
    carrier_sig: &ModuleMonomial,
) -> bool {
    done.iter().any(|id| {
        let p = &store[id.0];
        p.sig.divides(sig) && sord.compare(&p.sig, carrier_sig) == Ordering::Greater
    })
}

/// The strengthened rewriting test: the first clause is the plain
/// signature-divisor test, the second blocks signatures whose witnessing
/// multiple over another stored pair of the same index and signature degree
/// has already left the queue. The pair's own carrier is excluded from the
/// second clause (it was removed from the queue by the selection itself).
pub fn srewritten_criterion(
    store: &[PairData],
    done: &[PairId],
    sord: &SignatureOrder,
    sig: &ModuleMonomial,
    carrier: PairId,
    in_todo: impl Fn(&Monomial, PairId) -> bool,
) -> bool {
    let carrier_sig = &store[carrier.0].sig;
    if erewritten_criterion(store, done, sord, sig, carrier_sig) {
        return true;
    }
    done.iter().any(|id| {
        if *id == carrier {
            return false;
        }
        let p2 = &store[id.0];
        if p2.is_syzygy() {
            return false;
        }
        let Some(m2) = p2.sig.div_into(sig) else {
            return false;
        };
        p2.sig.index == carrier_sig.index
            && p2.sig.mono.degree() == carrier_sig.mono.degree()
            && !in_todo(&m2, *id)
    })
}

/// Divisibility test against the syzygy set (stored syzygy signatures plus
/// the cross-product signatures of stored pairs).
pub fn gsyzygy_criterion(syzygies: &SyzygySet, sig: &ModuleMonomial) -> bool {
    syzygies.blocks(sig)
}

/// Blocked when a pair with the same signature already passed this test in
/// the current run.
pub fn signature_criterion(
    passed: &std::collections::HashSet<ModuleMonomial>,
    sig: &ModuleMonomial,
) -> bool {
    passed.contains(sig)
}

/// `[mult, carrier]` is the minimal multiplied pair of the stored set for
/// its signature: among all stored-pair multiples with the same signature
/// and a proper multiplier, the carrier is pair-order minimal, with similar
/// ties broken toward the larger carrier signature. Equivalent carriers do
/// not compete.
pub fn is_m_pair(
    store: &[PairData],
    done: &[PairId],
    sord: &SignatureOrder,
    mult: &Monomial,
    carrier: PairId,
) -> bool {
    assert!(!mult.is_one(), "m-pair requires a proper multiplier");
    let p0 = &store[carrier.0];
    let s = p0.sig.mul_mono(mult);
    for id in done {
        if *id == carrier {
            continue;
        }
        let p = &store[id.0];
        if p.is_syzygy() {
            continue;
        }
        let Some(m) = p.sig.div_into(&s) else {
            continue;
        };
        if m.is_one() || is_equivalent(p, p0) {
            continue;
        }
        match pair_compare(sord, p0, p) {
            Ordering::Less => {}
            Ordering::Equal => {
                if sord.compare(&p0.sig, &p.sig) != Ordering::Greater {
                    return false;
                }
            }
            Ordering::Greater => return false,
        }
    }
    true
}

/// Blocked when the multiplied pair is neither initial nor an M-pair.
pub fn mpair_criterion(
    store: &[PairData],
    done: &[PairId],
    sord: &SignatureOrder,
    mult: &Monomial,
    carrier: PairId,
    is_initial: bool,
) -> bool {
    if is_initial {
        return false;
    }
    if mult.is_one() {
        // A proper multiplier is part of the M-pair definition.
        return true;
    }
    !is_m_pair(store, done, sord, mult, carrier)
}

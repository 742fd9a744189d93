//! The generic signature-driven main loop and the shipped strategy bundles.
//!
//! One run owns an append-only pair store, a queue of pending multiplied
//! pairs keyed by signature, and the list of accepted results. Bundles
//! differ in three places: the criteria, the reduction routine, and the
//! store check.

use crate::criteria::{self, CriterionConfig, CriterionKind, RulesList, SyzygySet};
use crate::field::Coefficient;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::pair::{
    self, is_equivalent, j_pair, koszul_signature, pair_compare, JPairCarrier, PairData, PairId,
};
use crate::poly::Polynomial;
use crate::sigorder::{
    check_compatibility, f5_compare, CompatibilityStatus, ModuleMonomial, SignatureOrder,
};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducerKind {
    /// Reduce only by stored multiples that themselves pass the bundle's criteria.
    Filtered,
    /// Reduce by any stored pair.
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStoreKind {
    /// Reject non-initial results equivalent to the reduction input.
    RejectUnreduced,
    /// Reject results equivalent to a monomial multiple of a stored pair.
    RejectStoredMultiple,
    /// Accept everything.
    AlwaysTrue,
}

/// A named combination of criteria, reducer and store check, together with
/// the preconditions it puts on the input and the orders.
#[derive(Clone, Debug)]
pub struct StrategyBundle {
    pub name: &'static str,
    pub criteria: CriterionConfig,
    pub reducer: ReducerKind,
    pub check_store: CheckStoreKind,
    pub requires_homogeneous: bool,
    pub requires_pot: bool,
    pub requires_graded_order: bool,
    pub requires_compatible: bool,
    /// Maintain the rewrite-rule list and pre-selection staging.
    uses_rules: bool,
    /// Populate the syzygy set with `lm(p) E_i` for dominated components.
    tracks_index_syzygies: bool,
    /// Populate the syzygy set with stored syzygy signatures and
    /// cross-product signatures; store syzygy pairs in the result list.
    tracks_koszul: bool,
}

impl StrategyBundle {
    pub fn f5() -> Self {
        StrategyBundle {
            name: "f5",
            criteria: CriterionConfig {
                kinds: vec![CriterionKind::Syzygy, CriterionKind::Rewritten],
            },
            reducer: ReducerKind::Filtered,
            check_store: CheckStoreKind::RejectUnreduced,
            requires_homogeneous: true,
            requires_pot: true,
            requires_graded_order: true,
            requires_compatible: false,
            uses_rules: true,
            tracks_index_syzygies: false,
            tracks_koszul: false,
        }
    }

    pub fn ef5() -> Self {
        StrategyBundle {
            name: "ef5",
            criteria: CriterionConfig {
                kinds: vec![CriterionKind::ESyzygy, CriterionKind::ERewritten],
            },
            reducer: ReducerKind::Filtered,
            check_store: CheckStoreKind::RejectUnreduced,
            requires_homogeneous: true,
            requires_pot: false,
            requires_graded_order: true,
            requires_compatible: false,
            uses_rules: false,
            tracks_index_syzygies: true,
            tracks_koszul: false,
        }
    }

    /// The ef5 bundle with the strengthened rewriting test swapped in.
    pub fn ef5_with_srewritten() -> Self {
        StrategyBundle {
            name: "srewritten",
            criteria: CriterionConfig {
                kinds: vec![CriterionKind::ESyzygy, CriterionKind::SRewritten],
            },
            ..Self::ef5()
        }
    }

    pub fn gvw() -> Self {
        StrategyBundle {
            name: "gvw",
            criteria: CriterionConfig {
                kinds: vec![CriterionKind::GSyzygy, CriterionKind::Signature],
            },
            reducer: ReducerKind::Top,
            check_store: CheckStoreKind::RejectStoredMultiple,
            requires_homogeneous: false,
            requires_pot: false,
            requires_graded_order: false,
            requires_compatible: false,
            uses_rules: false,
            tracks_index_syzygies: false,
            tracks_koszul: true,
        }
    }

    pub fn mj() -> Self {
        StrategyBundle {
            name: "mj",
            criteria: CriterionConfig {
                kinds: vec![CriterionKind::GSyzygy, CriterionKind::Mpair],
            },
            reducer: ReducerKind::Top,
            check_store: CheckStoreKind::AlwaysTrue,
            requires_homogeneous: false,
            requires_pot: false,
            requires_graded_order: false,
            requires_compatible: true,
            uses_rules: false,
            tracks_index_syzygies: false,
            tracks_koszul: true,
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "f5" => Some(Self::f5()),
            "ef5" => Some(Self::ef5()),
            "gvw" => Some(Self::gvw()),
            "mj" => Some(Self::mj()),
            "srewritten" => Some(Self::ef5_with_srewritten()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Selection cap; hitting it reports `terminated = false`.
    pub max_steps: u64,
    /// Carry the full module element through every reduction.
    pub track_module: bool,
    /// Use regular reductions instead of top reductions (gvw/mj only).
    pub regular_reductions: bool,
    /// Assert, at every selection, that each leading monomial admits at most
    /// one criteria-passing stored multiple below the current signature.
    /// Expensive; used by property tests on small fixtures.
    pub check_unique_reducer: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_steps: 1_000_000,
            track_module: false,
            regular_reductions: false,
            check_unique_reducer: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("input list is empty")]
    EmptyInput,
    #[error("zero input polynomial at position {0}")]
    ZeroInputPolynomial(usize),
    #[error("{algorithm} requires homogeneous input; use --homogenize")]
    HomogeneityRequired { algorithm: String },
    #[error("{algorithm} requires the position-over-term signature order (--sig-order pot)")]
    PotRequired { algorithm: String },
    #[error("{algorithm} requires a degree-graded monomial order (grlex or grevlex)")]
    GradedOrderRequired { algorithm: String },
    #[error("{algorithm} requires compatible orders: {detail}")]
    CompatibleOrdersRequired { algorithm: String, detail: String },
    #[error("max_steps must be at least 1")]
    ZeroStepCap,
}

/// Per-run counters.
#[derive(Clone, Debug, Default)]
pub struct Stats {
    pub selections: u64,
    pub blocked: BTreeMap<&'static str, u64>,
    pub reductions_performed: u64,
    pub reduction_steps: u64,
    pub stored: u64,
    pub syzygies_found: u64,
    pub jpairs_generated: u64,
    pub steps_used: u64,
    pub terminated: bool,
}

impl Stats {
    pub fn blocked_total(&self) -> u64 {
        self.blocked.values().sum()
    }
}

/// What happened to one selected multiplied pair.
#[derive(Clone, Debug)]
pub enum SelectionOutcome {
    Blocked(CriterionKind),
    Reduced {
        output_lm: Option<Monomial>,
        stored: bool,
    },
}

#[derive(Clone, Debug)]
pub struct SelectionRecord {
    pub sig: ModuleMonomial,
    pub value_lm: Monomial,
    pub outcome: SelectionOutcome,
}

/// An accepted result pair.
#[derive(Clone, Debug)]
pub struct DonePair {
    pub sig: ModuleMonomial,
    pub sig_coeff: Coefficient,
    /// Monic polynomial part; zero marks a syzygy entry.
    pub poly: Polynomial,
    pub u_full: Option<Vec<Polynomial>>,
    pub initial: bool,
}

impl DonePair {
    pub fn lm(&self) -> Option<&Monomial> {
        self.poly.leading_monomial()
    }
}

#[derive(Clone, Debug)]
pub struct EngineResult {
    pub done: Vec<DonePair>,
    pub stats: Stats,
    pub selections: Vec<SelectionRecord>,
}

impl EngineResult {
    /// Non-syzygy polynomial parts, in storage order.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.done
            .iter()
            .filter(|p| !p.poly.is_zero())
            .map(|p| p.poly.clone())
            .collect()
    }

    /// (signature, leading monomial) of the non-syzygy results.
    pub fn signature_lm_pairs(&self) -> Vec<(ModuleMonomial, Monomial)> {
        self.done
            .iter()
            .filter_map(|p| p.lm().map(|lm| (p.sig.clone(), lm.clone())))
            .collect()
    }

    pub fn blocked_signatures(&self, kind: CriterionKind) -> Vec<ModuleMonomial> {
        self.selections
            .iter()
            .filter_map(|r| match r.outcome {
                SelectionOutcome::Blocked(k) if k == kind => Some(r.sig.clone()),
                _ => None,
            })
            .collect()
    }

    /// Signatures that reached the reducer, with the reduced leading monomial.
    pub fn reduced_signatures(&self) -> Vec<(ModuleMonomial, Option<Monomial>)> {
        self.selections
            .iter()
            .filter_map(|r| match &r.outcome {
                SelectionOutcome::Reduced { output_lm, .. } => {
                    Some((r.sig.clone(), output_lm.clone()))
                }
                _ => None,
            })
            .collect()
    }
}

struct TodoEntry {
    mult: Monomial,
    pair: PairId,
    /// Rule-list staging flag (f5 bundle only).
    staged: bool,
    initial: bool,
    seq: u64,
}

struct Engine<'a> {
    bundle: &'a StrategyBundle,
    opts: &'a RunOptions,
    ord: &'a MonomialOrder,
    sord: &'a SignatureOrder,
    nvars: usize,
    d: usize,
    store: Vec<PairData>,
    todo: Vec<TodoEntry>,
    done: Vec<PairId>,
    rules: RulesList,
    syzygies: SyzygySet,
    passed_signatures: HashSet<ModuleMonomial>,
    stats: Stats,
    selections: Vec<SelectionRecord>,
    seq: u64,
}

/// Runs the main loop with the given bundle over the input list.
pub fn run(
    bundle: &StrategyBundle,
    f: &[Polynomial],
    nvars: usize,
    ord: &MonomialOrder,
    sord: &SignatureOrder,
    opts: &RunOptions,
) -> Result<EngineResult, EngineError> {
    if f.is_empty() {
        return Err(EngineError::EmptyInput);
    }
    if opts.max_steps == 0 {
        return Err(EngineError::ZeroStepCap);
    }
    for (i, p) in f.iter().enumerate() {
        if p.is_zero() {
            return Err(EngineError::ZeroInputPolynomial(i));
        }
    }
    if bundle.requires_homogeneous && !f.iter().all(|p| p.is_homogeneous()) {
        return Err(EngineError::HomogeneityRequired {
            algorithm: bundle.name.into(),
        });
    }
    if bundle.requires_pot && !matches!(sord, SignatureOrder::Pot(_)) {
        return Err(EngineError::PotRequired {
            algorithm: bundle.name.into(),
        });
    }
    if bundle.requires_graded_order && !ord.is_graded() {
        return Err(EngineError::GradedOrderRequired {
            algorithm: bundle.name.into(),
        });
    }
    if bundle.requires_compatible {
        let verdict = check_compatibility(ord, sord, nvars, f.len());
        if verdict.status != CompatibilityStatus::Compatible {
            return Err(EngineError::CompatibleOrdersRequired {
                algorithm: bundle.name.into(),
                detail: verdict.detail,
            });
        }
    }

    let mut engine = Engine {
        bundle,
        opts,
        ord,
        sord,
        nvars,
        d: f.len(),
        store: Vec::new(),
        todo: Vec::new(),
        done: Vec::new(),
        rules: RulesList::default(),
        syzygies: SyzygySet::default(),
        passed_signatures: HashSet::new(),
        stats: Stats::default(),
        selections: Vec::new(),
        seq: 0,
    };
    for (i, p) in f.iter().enumerate() {
        let pd = PairData::initial(i, p, nvars, f.len(), opts.track_module);
        engine.store.push(pd);
        engine.push_todo(Monomial::one(nvars), PairId(i), true);
    }
    engine.main_loop();
    let stats = engine.stats.clone();
    let done = engine
        .done
        .iter()
        .map(|id| {
            let p = &engine.store[id.0];
            DonePair {
                sig: p.sig.clone(),
                sig_coeff: p.sig_coeff.clone(),
                poly: p.v.clone(),
                u_full: p.u_full.clone(),
                initial: p.initial,
            }
        })
        .collect();
    Ok(EngineResult {
        done,
        stats,
        selections: engine.selections,
    })
}

impl<'a> Engine<'a> {
    fn main_loop(&mut self) {
        loop {
            if self.todo.is_empty() {
                self.stats.terminated = true;
                break;
            }
            if self.stats.selections >= self.opts.max_steps {
                self.stats.terminated = false;
                break;
            }
            if self.bundle.uses_rules {
                self.pre_selection_update();
            }
            if self.opts.check_unique_reducer && self.bundle.reducer == ReducerKind::Filtered {
                self.assert_unique_reducers();
            }
            let entry = self.pop_min();
            self.stats.selections += 1;
            let sig = self.store[entry.pair.0].sig.mul_mono(&entry.mult);
            let value_lm = self.store[entry.pair.0].lm().unwrap().mul(&entry.mult);

            if let Some(kind) = self.first_blocking_criterion(&entry, true) {
                *self.stats.blocked.entry(kind.name()).or_insert(0) += 1;
                self.selections.push(SelectionRecord {
                    sig,
                    value_lm,
                    outcome: SelectionOutcome::Blocked(kind),
                });
                continue;
            }

            let value = if entry.mult.is_one() {
                self.store[entry.pair.0].clone()
            } else {
                self.store[entry.pair.0].scaled_by(&entry.mult)
            };
            self.stats.reductions_performed += 1;
            let out = self.reduce(value.clone()).monic(self.nvars);
            let output_lm = out.lm().cloned();
            let oid = PairId(self.store.len());
            self.store.push(out);
            if self.bundle.uses_rules && entry.staged {
                self.rules.substitute(entry.pair, oid);
            }
            let accept = self.check_store(oid, &value);
            if accept {
                self.accept(oid);
            }
            self.selections.push(SelectionRecord {
                sig,
                value_lm,
                outcome: SelectionOutcome::Reduced {
                    output_lm,
                    stored: accept,
                },
            });
        }
        self.stats.steps_used = self.stats.selections;
    }

    fn push_todo(&mut self, mult: Monomial, pair: PairId, initial: bool) {
        // Queue semantics are set-like: identical multiplied pairs collapse.
        if self.todo.iter().any(|e| e.pair == pair && e.mult == mult) {
            return;
        }
        self.seq += 1;
        self.todo.push(TodoEntry {
            mult,
            pair,
            staged: false,
            initial,
            seq: self.seq,
        });
    }

    /// Removes and returns an entry of minimal signature; ties go to the
    /// pair-order-smaller carrier, then to insertion order.
    fn pop_min(&mut self) -> TodoEntry {
        let mut best = 0;
        for i in 1..self.todo.len() {
            let a = &self.todo[i];
            let b = &self.todo[best];
            let sa = self.store[a.pair.0].sig.mul_mono(&a.mult);
            let sb = self.store[b.pair.0].sig.mul_mono(&b.mult);
            let ord = self.sord.compare(&sa, &sb).then_with(|| {
                pair_compare(self.sord, &self.store[a.pair.0], &self.store[b.pair.0])
                    .then(a.seq.cmp(&b.seq))
            });
            if ord == Ordering::Less {
                best = i;
            }
        }
        self.todo.swap_remove(best)
    }

    /// Before every selection: stage each queue entry that is minimal in the
    /// index-major/degree-minor preorder and passes the criteria, replacing
    /// it by its own value with multiplier 1 and prepending that value to
    /// the rule list.
    fn pre_selection_update(&mut self) {
        if self.todo.is_empty() {
            return;
        }
        let key = |e: &TodoEntry, store: &[PairData]| {
            let p = &store[e.pair.0];
            (p.sig.index, e.mult.degree() + p.lm().unwrap().degree())
        };
        let min_key = {
            let mut it = self.todo.iter().map(|e| key(e, &self.store));
            let first = it.next().unwrap();
            self.todo
                .iter()
                .map(|e| key(e, &self.store))
                .fold(first, |acc, k| {
                    if f5_compare(k.0, k.1, acc.0, acc.1) == Ordering::Less {
                        k
                    } else {
                        acc
                    }
                })
        };
        for i in 0..self.todo.len() {
            let k = key(&self.todo[i], &self.store);
            if k != min_key || self.todo[i].staged {
                continue;
            }
            let entry_view = &self.todo[i];
            let entry_probe = TodoEntry {
                mult: entry_view.mult.clone(),
                pair: entry_view.pair,
                staged: entry_view.staged,
                initial: entry_view.initial,
                seq: entry_view.seq,
            };
            if self.first_blocking_criterion(&entry_probe, false).is_some() {
                continue;
            }
            let vid = if self.todo[i].mult.is_one() {
                self.todo[i].pair
            } else {
                let value = self.store[self.todo[i].pair.0].scaled_by(&self.todo[i].mult);
                self.store.push(value);
                PairId(self.store.len() - 1)
            };
            self.todo[i].mult = Monomial::one(self.nvars);
            self.todo[i].pair = vid;
            self.todo[i].staged = true;
            self.rules.prepend(vid);
        }
    }

    /// First criterion in bundle order that blocks `[mult, pair]`;
    /// `record` marks evaluation of a selected pair (feeds the signature
    /// criterion's memory) as opposed to a reducer-eligibility probe.
    fn first_blocking_criterion(
        &mut self,
        entry: &TodoEntry,
        record: bool,
    ) -> Option<CriterionKind> {
        let sig = self.store[entry.pair.0].sig.mul_mono(&entry.mult);
        for kind in self.bundle.criteria.kinds.clone() {
            let blocked = match kind {
                CriterionKind::Syzygy => criteria::syzygy_criterion(&self.store, &self.done, &sig),
                CriterionKind::Rewritten => {
                    criteria::rewritten_criterion(&self.store, &self.rules, &sig, entry.pair)
                }
                CriterionKind::ESyzygy => criteria::esyzygy_criterion(&self.syzygies, &sig),
                CriterionKind::ERewritten => criteria::erewritten_criterion(
                    &self.store,
                    &self.done,
                    self.sord,
                    &sig,
                    &self.store[entry.pair.0].sig,
                ),
                CriterionKind::SRewritten => {
                    let todo = &self.todo;
                    criteria::srewritten_criterion(
                        &self.store,
                        &self.done,
                        self.sord,
                        &sig,
                        entry.pair,
                        |m, id| todo.iter().any(|e| e.pair == id && e.mult == *m),
                    )
                }
                CriterionKind::GSyzygy => criteria::gsyzygy_criterion(&self.syzygies, &sig),
                CriterionKind::Signature => {
                    let blocked = criteria::signature_criterion(&self.passed_signatures, &sig);
                    if !blocked && record {
                        self.passed_signatures.insert(sig.clone());
                    }
                    blocked
                }
                CriterionKind::Mpair => criteria::mpair_criterion(
                    &self.store,
                    &self.done,
                    self.sord,
                    &entry.mult,
                    entry.pair,
                    entry.initial,
                ),
            };
            if blocked {
                return Some(kind);
            }
        }
        None
    }

    /// Applies reduction steps by stored pairs until none applies.
    fn reduce(&mut self, mut cur: PairData) -> PairData {
        let regular = self.opts.regular_reductions && self.bundle.reducer == ReducerKind::Top;
        'outer: loop {
            if cur.is_syzygy() {
                return cur;
            }
            for idx in 0..self.done.len() {
                let qid = self.done[idx];
                let applies = {
                    let q = &self.store[qid.0];
                    if regular {
                        pair::is_regular_reducible(self.sord, &cur, q)
                    } else {
                        pair::is_top_reducible(self.sord, &cur, q)
                    }
                };
                if !applies {
                    continue;
                }
                if self.bundle.reducer == ReducerKind::Filtered {
                    let m = self.store[qid.0]
                        .lm()
                        .unwrap()
                        .div_into(cur.lm().unwrap())
                        .unwrap();
                    let probe = TodoEntry {
                        mult: m,
                        pair: qid,
                        staged: false,
                        initial: false,
                        seq: 0,
                    };
                    if self.first_blocking_criterion(&probe, false).is_some() {
                        continue;
                    }
                }
                let q = &self.store[qid.0];
                cur = if regular {
                    pair::regular_reduce_step(self.ord, self.sord, &cur, q)
                } else {
                    pair::top_reduce_step(self.ord, self.sord, &cur, q)
                };
                self.stats.reduction_steps += 1;
                continue 'outer;
            }
            return cur;
        }
    }

    fn check_store(&self, oid: PairId, input: &PairData) -> bool {
        let out = &self.store[oid.0];
        match self.bundle.check_store {
            CheckStoreKind::RejectUnreduced => out.initial || !is_equivalent(out, input),
            CheckStoreKind::RejectStoredMultiple => {
                let Some(lm) = out.lm() else { return true };
                !self.done.iter().any(|id| {
                    let q = &self.store[id.0];
                    match q.lm() {
                        Some(qlm) if qlm.divides(lm) => {
                            q.sig.mul_mono(&qlm.div_into(lm).unwrap()) == out.sig
                        }
                        _ => false,
                    }
                })
            }
            CheckStoreKind::AlwaysTrue => true,
        }
    }

    fn accept(&mut self, oid: PairId) {
        if self.store[oid.0].is_syzygy() {
            self.stats.syzygies_found += 1;
            if self.bundle.tracks_koszul {
                self.syzygies.insert(self.store[oid.0].sig.clone());
                self.done.push(oid);
            }
            return;
        }
        // Joint pairs against every previously stored pair, then the
        // syzygy-set updates, then the append.
        for idx in 0..self.done.len() {
            let qid = self.done[idx];
            if self.store[qid.0].is_syzygy() {
                continue;
            }
            if let Some((m, carrier)) = j_pair(self.sord, &self.store[oid.0], &self.store[qid.0]) {
                let (m, cid) = match carrier {
                    JPairCarrier::First => (m, oid),
                    JPairCarrier::Second => (m, qid),
                };
                let before = self.todo.len();
                self.push_todo(m, cid, false);
                if self.todo.len() > before {
                    self.stats.jpairs_generated += 1;
                }
            }
        }
        if self.bundle.tracks_koszul {
            for idx in 0..self.done.len() {
                let qid = self.done[idx];
                if self.store[qid.0].is_syzygy() {
                    continue;
                }
                if let Some(s) = koszul_signature(self.sord, &self.store[oid.0], &self.store[qid.0])
                {
                    self.syzygies.insert(s);
                }
            }
        }
        if self.bundle.tracks_index_syzygies {
            // lm(p) E_i for every component whose initial pair sits below p.
            let lm = self.store[oid.0].lm().unwrap().clone();
            for i in 0..self.d {
                if pair_compare(self.sord, &self.store[i], &self.store[oid.0]) == Ordering::Less {
                    self.syzygies.insert(ModuleMonomial {
                        mono: lm.clone(),
                        index: i,
                    });
                }
            }
        }
        self.done.push(oid);
        self.stats.stored += 1;
    }

    /// For every monomial below the reachable degree, at most one stored
    /// multiple with considered signature passes the criteria.
    fn assert_unique_reducers(&mut self) {
        let Some(next) = self.peek_min_sig() else {
            return;
        };
        let max_deg = self
            .done
            .iter()
            .filter_map(|id| self.store[id.0].lm().map(|m| m.degree()))
            .max()
            .unwrap_or(0)
            + 2;
        let mut targets: Vec<Monomial> = Vec::new();
        for exps in all_exponents(self.nvars, max_deg) {
            targets.push(Monomial::new(exps));
        }
        for t in &targets {
            let mut hits = 0;
            for id in self.done.clone() {
                let q = &self.store[id.0];
                let Some(qlm) = q.lm() else { continue };
                let Some(m) = qlm.div_into(t) else { continue };
                let sig = q.sig.mul_mono(&m);
                if self.sord.compare(&sig, &next) != Ordering::Less {
                    continue;
                }
                let probe = TodoEntry {
                    mult: m,
                    pair: id,
                    staged: false,
                    initial: false,
                    seq: 0,
                };
                if self.first_blocking_criterion(&probe, false).is_none() {
                    hits += 1;
                }
            }
            assert!(
                hits <= 1,
                "monomial {:?} has {} criteria-passing reducers",
                t,
                hits
            );
        }
    }

    fn peek_min_sig(&self) -> Option<ModuleMonomial> {
        self.todo
            .iter()
            .map(|e| self.store[e.pair.0].sig.mul_mono(&e.mult))
            .min_by(|a, b| self.sord.compare(a, b))
    }
}

fn all_exponents(nvars: usize, bound: u32) -> Vec<Vec<u32>> {
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

/// The fixed two-generator instance whose regular run diverges under the
/// degree-reversed signature order: `f1 = x2 x3`, `f2 = x1^2 x3 - x1 x2 x3`
/// over GF(32003) in three variables.
pub fn nontermination_demo_input() -> (Vec<Polynomial>, usize) {
    let field = crate::field::FieldSpec::Prime(32003);
    let ord = MonomialOrder::GrevLex;
    let f = vec![
        crate::poly::poly(field, &ord, &[(1, &[0, 1, 1])]),
        crate::poly::poly(field, &ord, &[(1, &[2, 0, 1]), (-1, &[1, 1, 1])]),
    ];
    (f, 3)
}

/// Leading monomials of the diverging family: `x1 * x2^(t+1) * x3`, t >= 1.
pub fn nontermination_family_lm(t: u32) -> Monomial {
    Monomial::new(vec![1, t + 1, 1])
}

/// Runs the gvw bundle on the fixed witness instance with the
/// degree-reversed signature order and the given step cap.
pub fn nontermination_demo(max_steps: u64) -> EngineResult {
    let (f, nvars) = nontermination_demo_input();
    let ord = MonomialOrder::GrevLex;
    let sord = SignatureOrder::degree_reversed(ord.clone());
    let opts = RunOptions {
        max_steps,
        ..RunOptions::default()
    };
    run(&StrategyBundle::gvw(), &f, nvars, &ord, &sord, &opts)
        .expect("demo instance satisfies the gvw preconditions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::pair::{check_pair_invariant, module_leading_term};
    use crate::poly::poly;
    use crate::verify::{brute_force_trb, is_groebner_basis, leading_ideal_equal};

    const F: FieldSpec = FieldSpec::Prime(32003);
    const ORD: MonomialOrder = MonomialOrder::GrevLex;

    fn pot() -> SignatureOrder {
        SignatureOrder::pot(ORD)
    }

    /// x1x4, x1x2 - x2^2, x1x3 - x3^2 in four variables.
    fn example_gens() -> Vec<Polynomial> {
        vec![
            poly(F, &ORD, &[(1, &[1, 0, 0, 1])]),
            poly(F, &ORD, &[(1, &[1, 1, 0, 0]), (-1, &[0, 2, 0, 0])]),
            poly(F, &ORD, &[(1, &[1, 0, 1, 0]), (-1, &[0, 0, 2, 0])]),
        ]
    }

    /// The five-variable variant: f2 = x1x2x5 - x2^2x5.
    fn variant_gens() -> Vec<Polynomial> {
        vec![
            poly(F, &ORD, &[(1, &[1, 0, 0, 1, 0])]),
            poly(F, &ORD, &[(1, &[1, 1, 0, 0, 1]), (-1, &[0, 2, 0, 0, 1])]),
            poly(F, &ORD, &[(1, &[1, 0, 1, 0, 0]), (-1, &[0, 0, 2, 0, 0])]),
        ]
    }

    fn mm(exps: &[u32], index: usize) -> ModuleMonomial {
        ModuleMonomial {
            mono: Monomial::new(exps.to_vec()),
            index,
        }
    }

    fn sig_lm_set(result: &EngineResult) -> Vec<(ModuleMonomial, Monomial)> {
        let mut v = result.signature_lm_pairs();
        v.sort_by_key(|(s, m)| (s.index, s.mono.exponents().to_vec(), m.exponents().to_vec()));
        v
    }

    /// The seven pairs listed for the worked example; the last one is the
    /// non-minimal member similar to the fifth.
    fn example_seven() -> Vec<(ModuleMonomial, Monomial)> {
        vec![
            (mm(&[0; 4], 2), Monomial::new(vec![1, 0, 1, 0])),
            (mm(&[0; 4], 1), Monomial::new(vec![1, 1, 0, 0])),
            (mm(&[0, 0, 1, 0], 1), Monomial::new(vec![0, 2, 1, 0])),
            (mm(&[0; 4], 0), Monomial::new(vec![1, 0, 0, 1])),
            (mm(&[0, 0, 1, 0], 0), Monomial::new(vec![0, 0, 2, 1])),
            (mm(&[0, 1, 0, 0], 0), Monomial::new(vec![0, 2, 0, 1])),
            (mm(&[0, 1, 1, 0], 0), Monomial::new(vec![0, 1, 2, 1])),
        ]
    }

    fn sorted(mut v: Vec<(ModuleMonomial, Monomial)>) -> Vec<(ModuleMonomial, Monomial)> {
        v.sort_by_key(|(s, m)| (s.index, s.mono.exponents().to_vec(), m.exponents().to_vec()));
        v
    }

    #[test]
    fn f5_reproduces_all_seven_example_pairs() {
        let f = example_gens();
        let r = run(
            &StrategyBundle::f5(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(r.stats.terminated);
        assert_eq!(sig_lm_set(&r), sorted(example_seven()));
        assert!(is_groebner_basis(&r.basis(), &ORD));
    }

    #[test]
    fn ef5_reproduces_all_seven_example_pairs() {
        let f = example_gens();
        let r = run(
            &StrategyBundle::ef5(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(r.stats.terminated);
        assert_eq!(sig_lm_set(&r), sorted(example_seven()));
    }

    // The gvw store check rejects the seventh pair: it is equivalent to
    // x2 times the fifth stored pair, so the run keeps the six minimal
    // classes. The signature is still processed (reduced, then rejected).
    #[test]
    fn gvw_processes_seventh_but_stores_six() {
        let f = example_gens();
        let r = run(
            &StrategyBundle::gvw(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(r.stats.terminated);
        let mut expected = example_seven();
        let seventh = expected.pop().unwrap();
        assert_eq!(sig_lm_set(&r), sorted(expected));
        let reduced = r.reduced_signatures();
        assert!(reduced
            .iter()
            .any(|(s, lm)| *s == seventh.0 && lm.as_ref() == Some(&seventh.1)));
        assert!(is_groebner_basis(&r.basis(), &ORD));
        let oracle = crate::verify::buchberger(&f, &ORD);
        assert!(leading_ideal_equal(&r.basis(), &oracle, &ORD));
    }

    #[test]
    fn mj_stores_exactly_the_minimal_classes() {
        let f = example_gens();
        let r = run(
            &StrategyBundle::mj(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(r.stats.terminated);
        let mut expected = example_seven();
        expected.pop();
        assert_eq!(sig_lm_set(&r), sorted(expected));
        let oracle = brute_force_trb(&f, 4, &ORD, &pot(), 4).unwrap();
        assert_eq!(sorted(oracle.classes.clone()), sig_lm_set(&r));
    }

    #[test]
    fn single_generator_any_bundle() {
        let f = vec![poly(F, &ORD, &[(1, &[1, 0])])];
        for bundle in [
            StrategyBundle::f5(),
            StrategyBundle::ef5(),
            StrategyBundle::gvw(),
            StrategyBundle::mj(),
        ] {
            let r = run(&bundle, &f, 2, &ORD, &pot(), &RunOptions::default()).unwrap();
            assert!(r.stats.terminated);
            assert_eq!(r.done.len(), 1);
            assert_eq!(r.stats.selections, 1);
        }
    }

    #[test]
    fn bundle_constraints_are_enforced() {
        let inhomogeneous = vec![poly(F, &ORD, &[(1, &[2, 0]), (-1, &[0, 1])])];
        assert!(matches!(
            run(
                &StrategyBundle::f5(),
                &inhomogeneous,
                2,
                &ORD,
                &pot(),
                &RunOptions::default()
            ),
            Err(EngineError::HomogeneityRequired { .. })
        ));
        let f = example_gens();
        let schreyer = SignatureOrder::schreyer(ORD, &f).unwrap();
        assert!(matches!(
            run(
                &StrategyBundle::f5(),
                &f,
                4,
                &ORD,
                &schreyer,
                &RunOptions::default()
            ),
            Err(EngineError::PotRequired { .. })
        ));
        let bad = SignatureOrder::degree_reversed(ORD);
        assert!(matches!(
            run(
                &StrategyBundle::mj(),
                &f,
                4,
                &ORD,
                &bad,
                &RunOptions::default()
            ),
            Err(EngineError::CompatibleOrdersRequired { .. })
        ));
        let zero_in = vec![Polynomial::zero()];
        assert!(matches!(
            run(
                &StrategyBundle::gvw(),
                &zero_in,
                2,
                &ORD,
                &pot(),
                &RunOptions::default()
            ),
            Err(EngineError::ZeroInputPolynomial(0))
        ));
    }

    // The strength chain on the five-variable variant: mj blocks the
    // signature x2x3x5*E1 through the m-pair test and never reduces it,
    // while ef5 processes and stores it; the strengthened rewriting
    // configuration also processes it (its second clause does not apply).
    #[test]
    fn mpair_blocks_where_rewriting_does_not() {
        let f = variant_gens();
        let target = mm(&[0, 1, 1, 0, 1], 0);

        let mj = run(
            &StrategyBundle::mj(),
            &f,
            5,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(mj.stats.terminated);
        assert!(mj
            .blocked_signatures(CriterionKind::Mpair)
            .contains(&target));
        assert!(!mj.done.iter().any(|p| p.sig == target));
        assert!(!mj.reduced_signatures().iter().any(|(s, _)| *s == target));

        let ef5 = run(
            &StrategyBundle::ef5(),
            &f,
            5,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        let expected_lm = Monomial::new(vec![0, 1, 2, 1, 1]);
        assert!(ef5
            .done
            .iter()
            .any(|p| p.sig == target && p.lm() == Some(&expected_lm)));

        let srw = run(
            &StrategyBundle::ef5_with_srewritten(),
            &f,
            5,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(srw.reduced_signatures().iter().any(|(s, _)| *s == target));
    }

    // On the original example the strengthened rewriting test blocks the
    // seventh signature that the plain rewriting test lets through.
    #[test]
    fn srewritten_blocks_seventh_signature() {
        let f = example_gens();
        let seventh = mm(&[0, 1, 1, 0], 0);
        let srw = run(
            &StrategyBundle::ef5_with_srewritten(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(srw
            .blocked_signatures(CriterionKind::SRewritten)
            .contains(&seventh));
        assert!(!srw.done.iter().any(|p| p.sig == seventh));
        let ef5 = run(
            &StrategyBundle::ef5(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(ef5.done.iter().any(|p| p.sig == seventh));
    }

    // Processed-signature counts realize the strength chain on the fixtures:
    // signature >= erewritten >= srewritten >= mpair.
    #[test]
    fn strength_chain_counts() {
        for (f, nv) in [(example_gens(), 4), (variant_gens(), 5)] {
            let count = |bundle: &StrategyBundle| {
                let r = run(bundle, &f, nv, &ORD, &pot(), &RunOptions::default()).unwrap();
                assert!(r.stats.terminated);
                r.reduced_signatures().len()
            };
            let sig = count(&StrategyBundle::gvw());
            let erw = count(&StrategyBundle::ef5());
            let srw = count(&StrategyBundle::ef5_with_srewritten());
            let mpair = count(&StrategyBundle::mj());
            assert!(sig >= erw, "{} < {}", sig, erw);
            assert!(erw >= srw, "{} < {}", erw, srw);
            assert!(srw >= mpair, "{} < {}", srw, mpair);
        }
    }

    #[test]
    fn stats_invariants() {
        let f = example_gens();
        for bundle in [
            StrategyBundle::f5(),
            StrategyBundle::ef5(),
            StrategyBundle::gvw(),
            StrategyBundle::mj(),
        ] {
            let r = run(&bundle, &f, 4, &ORD, &pot(), &RunOptions::default()).unwrap();
            assert_eq!(
                r.stats.selections,
                r.stats.blocked_total() + r.stats.reductions_performed,
                "{}",
                bundle.name
            );
            assert!(r.stats.stored <= r.stats.reductions_performed);
            assert_eq!(r.stats.steps_used, r.stats.selections);
        }
    }

    // Selected signatures never decrease, and every accepted non-initial
    // store sits strictly below its selected source in the pair order.
    #[test]
    fn monotone_loop_measures() {
        let f = example_gens();
        for bundle in [
            StrategyBundle::f5(),
            StrategyBundle::gvw(),
            StrategyBundle::mj(),
        ] {
            let r = run(&bundle, &f, 4, &ORD, &pot(), &RunOptions::default()).unwrap();
            let sord = pot();
            for w in r.selections.windows(2) {
                assert_ne!(sord.compare(&w[1].sig, &w[0].sig), Ordering::Less);
            }
            for rec in &r.selections {
                if let SelectionOutcome::Reduced {
                    output_lm: Some(out),
                    stored: true,
                } = &rec.outcome
                {
                    // same signature, smaller or equal lm; strict unless initial
                    assert_ne!(ORD.compare(out, &rec.value_lm), Ordering::Greater);
                }
            }
        }
    }

    // Module tracking: u . f = v with the signature equal to the leading
    // term of u, for every stored pair and every bundle.
    #[test]
    fn tracked_runs_satisfy_pair_invariant() {
        let f = example_gens();
        let opts = RunOptions {
            track_module: true,
            ..RunOptions::default()
        };
        for bundle in [
            StrategyBundle::f5(),
            StrategyBundle::ef5(),
            StrategyBundle::gvw(),
            StrategyBundle::mj(),
        ] {
            let r = run(&bundle, &f, 4, &ORD, &pot(), &opts).unwrap();
            for p in &r.done {
                let pd = PairData {
                    sig: p.sig.clone(),
                    sig_coeff: p.sig_coeff.clone(),
                    v: p.poly.clone(),
                    u_full: p.u_full.clone(),
                    initial: p.initial,
                };
                assert!(
                    check_pair_invariant(&pd, &f, &ORD, &pot()),
                    "{}",
                    bundle.name
                );
            }
        }
    }

    // Every signature in the gvw syzygy set heads an actual syzygy: the
    // cross product v2*p1 - v1*p2 of tracked stored pairs cancels its
    // polynomial part and its module part leads exactly at the recorded
    // signature.
    #[test]
    fn koszul_entries_are_syzygy_signatures() {
        let f = example_gens();
        let opts = RunOptions {
            track_module: true,
            ..RunOptions::default()
        };
        let r = run(&StrategyBundle::gvw(), &f, 4, &ORD, &pot(), &opts).unwrap();
        let sord = pot();
        let stored: Vec<&DonePair> = r.done.iter().filter(|p| !p.poly.is_zero()).collect();
        let mut checked = 0;
        for (i, p1) in stored.iter().enumerate() {
            for p2 in stored.iter().skip(i + 1) {
                let a = p1.sig.mul_mono(p2.lm().unwrap());
                let b = p2.sig.mul_mono(p1.lm().unwrap());
                if a == b {
                    continue;
                }
                let expected = if sord.compare(&a, &b) == Ordering::Greater {
                    a
                } else {
                    b
                };
                // u = v2 * u1 - v1 * u2
                let u: Vec<Polynomial> = p1
                    .u_full
                    .as_ref()
                    .unwrap()
                    .iter()
                    .zip(p2.u_full.as_ref().unwrap())
                    .map(|(u1, u2)| p2.poly.mul(u1, &ORD).sub(&p1.poly.mul(u2, &ORD), &ORD))
                    .collect();
                let mut dot = Polynomial::zero();
                for (ui, fi) in u.iter().zip(&f) {
                    dot = dot.add(&ui.mul(fi, &ORD), &ORD);
                }
                assert!(dot.is_zero());
                let (lead, _) = module_leading_term(&u, &sord).unwrap();
                assert_eq!(lead, expected);
                checked += 1;
            }
        }
        assert!(checked >= 10);
    }

    // Replacing top reductions by regular reductions changes nothing
    // observable: per selected signature the outputs carry identical
    // (signature, leading monomial).
    #[test]
    fn regular_reductions_match_top_reductions() {
        let f = example_gens();
        let top = run(
            &StrategyBundle::gvw(),
            &f,
            4,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        let reg_opts = RunOptions {
            regular_reductions: true,
            ..RunOptions::default()
        };
        let reg = run(&StrategyBundle::gvw(), &f, 4, &ORD, &pot(), &reg_opts).unwrap();
        assert_eq!(top.reduced_signatures(), reg.reduced_signatures());
        assert_eq!(sig_lm_set(&top), sig_lm_set(&reg));
    }

    // At most one criteria-passing stored multiple per leading monomial,
    // checked exhaustively at every selection of the rule-list bundle.
    #[test]
    fn unique_reducer_lemma_on_fixtures() {
        let opts = RunOptions {
            check_unique_reducer: true,
            ..RunOptions::default()
        };
        let r = run(
            &StrategyBundle::f5(),
            &example_gens(),
            4,
            &ORD,
            &pot(),
            &opts,
        )
        .unwrap();
        assert!(r.stats.terminated);
        let r = run(
            &StrategyBundle::f5(),
            &variant_gens(),
            5,
            &ORD,
            &pot(),
            &opts,
        )
        .unwrap();
        assert!(r.stats.terminated);
    }

    #[test]
    fn nontermination_demo_diverges_and_pot_terminates() {
        let demo = nontermination_demo(300);
        assert!(!demo.stats.terminated);
        let family: Vec<&DonePair> = demo
            .done
            .iter()
            .filter(|p| {
                p.lm().map_or(false, |lm| {
                    (1..40).any(|t| *lm == nontermination_family_lm(t))
                })
            })
            .collect();
        assert!(family.len() >= 20, "only {} family members", family.len());
        // family members are pairwise non-equivalent
        for (i, a) in family.iter().enumerate() {
            for b in family.iter().skip(i + 1) {
                assert!(!(a.sig == b.sig && a.lm() == b.lm()));
            }
        }
        // the cap is a cap: shorter runs also fail to terminate
        assert!(!nontermination_demo(1).stats.terminated);
        // the same ideal under the position order terminates quickly
        let (f, nvars) = nontermination_demo_input();
        let r = run(
            &StrategyBundle::gvw(),
            &f,
            nvars,
            &ORD,
            &pot(),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(r.stats.terminated);
        assert!(is_groebner_basis(&r.basis(), &ORD));
    }

    // All four bundles match the enumeration oracle on the worked example:
    // the oracle classes are covered by every bundle, and the mj results
    // are exactly the oracle classes.
    #[test]
    fn bundles_cover_oracle_classes() {
        let f = example_gens();
        let oracle = brute_force_trb(&f, 4, &ORD, &pot(), 4).unwrap();
        for bundle in [
            StrategyBundle::f5(),
            StrategyBundle::ef5(),
            StrategyBundle::gvw(),
            StrategyBundle::mj(),
        ] {
            let r = run(&bundle, &f, 4, &ORD, &pot(), &RunOptions::default()).unwrap();
            let got = r.signature_lm_pairs();
            for class in &oracle.classes {
                assert!(got.contains(class), "{} misses {:?}", bundle.name, class);
            }
        }
    }

    // The parameterized signature orders drive full runs: ef5 under both
    // Schreyer flavors and the degree order, gvw under grlex, and mj under
    // a component-blind matrix encoding of grevlex. Every output matches
    // the Buchberger oracle.
    #[test]
    fn parameterized_orders_run_end_to_end() {
        let f = example_gens();
        let oracle = crate::verify::buchberger(&f, &ORD);
        let orders = [
            SignatureOrder::schreyer(ORD, &f).unwrap(),
            SignatureOrder::schreyer_paper_literal(ORD, &f).unwrap(),
            SignatureOrder::degree_first(ORD, &f).unwrap(),
        ];
        for sord in &orders {
            let r = run(
                &StrategyBundle::ef5(),
                &f,
                4,
                &ORD,
                sord,
                &RunOptions::default(),
            )
            .unwrap();
            assert!(r.stats.terminated);
            assert!(leading_ideal_equal(&r.basis(), &oracle, &ORD));
        }

        let grlex = MonomialOrder::GrLex;
        let r = run(
            &StrategyBundle::gvw(),
            &f,
            4,
            &grlex,
            &SignatureOrder::pot(grlex.clone()),
            &RunOptions::default(),
        )
        .unwrap();
        assert!(r.stats.terminated);
        let grlex_oracle = crate::verify::buchberger(&f, &grlex);
        assert!(leading_ideal_equal(&r.basis(), &grlex_oracle, &grlex));

        // term-over-position: grevlex rows padded with zero component columns
        let mut rows = ORD.canonical_matrix(4);
        for row in &mut rows {
            row.extend([0, 0, 0]);
        }
        let top = SignatureOrder::custom_matrix(rows, 4, 3).unwrap();
        assert_eq!(
            check_compatibility(&ORD, &top, 4, 3).status,
            CompatibilityStatus::Compatible
        );
        for bundle in [StrategyBundle::gvw(), StrategyBundle::mj()] {
            let r = run(&bundle, &f, 4, &ORD, &top, &RunOptions::default()).unwrap();
            assert!(r.stats.terminated, "{}", bundle.name);
            assert!(
                leading_ideal_equal(&r.basis(), &oracle, &ORD),
                "{}",
                bundle.name
            );
        }
    }

    #[test]
    fn duplicate_generators_collapse() {
        let g = poly(F, &ORD, &[(1, &[1, 1, 0]), (-1, &[0, 2, 0])]);
        let f = vec![g.clone(), g.clone()];
        for bundle in [
            StrategyBundle::f5(),
            StrategyBundle::ef5(),
            StrategyBundle::gvw(),
            StrategyBundle::mj(),
        ] {
            let r = run(&bundle, &f, 3, &ORD, &pot(), &RunOptions::default()).unwrap();
            assert!(r.stats.terminated, "{}", bundle.name);
            assert!(
                leading_ideal_equal(&r.basis(), &[g.clone()], &ORD),
                "{}",
                bundle.name
            );
            assert_eq!(r.stats.syzygies_found, 1, "{}", bundle.name);
        }
    }

    #[test]
    fn constant_generator_yields_the_unit_ideal() {
        let f = vec![
            poly(F, &ORD, &[(5, &[0, 0])]),
            poly(F, &ORD, &[(1, &[2, 0]), (1, &[0, 1])]),
        ];
        for bundle in [StrategyBundle::gvw(), StrategyBundle::mj()] {
            let r = run(&bundle, &f, 2, &ORD, &pot(), &RunOptions::default()).unwrap();
            assert!(r.stats.terminated);
            assert!(r
                .basis()
                .iter()
                .any(|p| p.leading_monomial() == Some(&Monomial::one(2))));
        }
    }

    // gvw and mj accept arbitrary (inhomogeneous) input; a seeded sweep
    // stays in agreement with the oracle.
    #[test]
    fn inhomogeneous_sweep_matches_oracle() {
        let params = crate::random::RandomIdealParams {
            homogeneous: false,
            ..crate::random::RandomIdealParams::default()
        };
        for seed in 200..230 {
            let (nvars, gens) = crate::random::random_ideal(seed, &params, &ORD);
            let oracle = crate::verify::buchberger(&gens, &ORD);
            for bundle in [StrategyBundle::gvw(), StrategyBundle::mj()] {
                let r = run(&bundle, &gens, nvars, &ORD, &pot(), &RunOptions::default()).unwrap();
                assert!(r.stats.terminated, "seed {} {}", seed, bundle.name);
                assert!(
                    leading_ideal_equal(&r.basis(), &oracle, &ORD),
                    "seed {} {}",
                    seed,
                    bundle.name
                );
            }
        }
    }

    // Distinct runs share no mutable state and every value is Send + Sync,
    // so concurrent runs behave exactly like sequential ones.
    #[test]
    fn concurrent_runs_match_sequential_runs() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Polynomial>();
        assert_send_sync::<Monomial>();
        assert_send_sync::<Coefficient>();
        assert_send_sync::<ModuleMonomial>();
        assert_send_sync::<SignatureOrder>();
        assert_send_sync::<StrategyBundle>();
        assert_send_sync::<EngineResult>();

        let f = example_gens();
        let sequential: Vec<Vec<(ModuleMonomial, Monomial)>> = ["f5", "ef5", "gvw", "mj"]
            .iter()
            .map(|name| {
                let bundle = StrategyBundle::by_name(name).unwrap();
                let r = run(&bundle, &f, 4, &ORD, &pot(), &RunOptions::default()).unwrap();
                sig_lm_set(&r)
            })
            .collect();
        let handles: Vec<_> = ["f5", "ef5", "gvw", "mj"]
            .iter()
            .map(|name| {
                let f = f.clone();
                let name = name.to_string();
                std::thread::spawn(move || {
                    let bundle = StrategyBundle::by_name(&name).unwrap();
                    let r = run(&bundle, &f, 4, &ORD, &pot(), &RunOptions::default()).unwrap();
                    sig_lm_set(&r)
                })
            })
            .collect();
        for (h, expected) in handles.into_iter().zip(sequential) {
            assert_eq!(h.join().unwrap(), expected);
        }
    }
}

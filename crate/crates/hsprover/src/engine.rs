//! The given-clause saturation loop.
//!
//! A DISCOUNT-style loop: passive clauses are not used as simplifiers. Each
//! iteration picks a passive clause by weight (with a periodic age pick so
//! no clause starves), simplifies it against the active set, applies the
//! definition rule, generates all base inferences with the active clauses,
//! and accumulates background clauses for the Close check. Close runs every
//! `close_period` iterations, whenever a new ground background unit arrives,
//! and at quiescence.
//!
//! Every kept clause carries a proof step (rule, premises, pivotal
//! substitution); refutations can be replayed by re-executing each rule and
//! comparing conclusions up to variable renaming.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrd};
use std::sync::Arc;
use std::time::Instant;

use crate::abstraction::{
    is_gbt, unabstract, unabstracted_bg_terms, weakly_abstract,
};
use crate::bg::lk::{lk_saturate, LkVerdict};
use crate::calculus::{
    close_check, define, equality_factoring, equality_resolution, rename_clause, superposition,
    CalcCtx, CloseVerdict, DefinitionTable, Rule,
};
use crate::clause::Clause;
use crate::ordering::{fin_compare, Cmp, Precedence};
use crate::simplify::{simplify_once, BgSimpMode, SimpConfig, SimpOutcome, SimpRule};
use crate::subst::Substitution;
use crate::sym::{self, Level, OpId};
use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Axiom,
    Hypothesis,
    NegatedConjecture,
}

#[derive(Clone, Debug)]
pub struct InputClause {
    pub name: String,
    pub role: Role,
    pub clause: Clause,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefineMode {
    Off,
    Standard,
    /// Reckless definition introduction in a pre-derivation (ground
    /// background-sorted inputs only), then standard during the run.
    RecklessPre,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionStrategy {
    /// Select nothing; maximality governs all rules.
    Nothing,
    /// Select one negative foreground literal of largest weight.
    LargestNegative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sufficiency {
    /// The input was ground background-sorted and the pre-derivation ran.
    GbtCertified,
    /// The user asserted sufficient completeness.
    Asserted,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub bg_simp: BgSimpMode,
    pub define_mode: DefineMode,
    pub selection: SelectionStrategy,
    pub close_period: usize,
    pub age_interleave: usize,
    pub max_seconds: Option<f64>,
    pub max_clauses: usize,
    pub max_steps: usize,
    pub assume_sufficiently_complete: bool,
    /// Linear-arithmetic saturation mode: domain elements are abstracted
    /// too, replacements must be suitable, and the accumulated background
    /// set is additionally monitored by the shifted-order transformation.
    pub lia_mode: bool,
    pub precedence_override: Vec<String>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            bg_simp: BgSimpMode::Cautious,
            define_mode: DefineMode::Standard,
            selection: SelectionStrategy::Nothing,
            close_period: 10,
            age_interleave: 5,
            max_seconds: None,
            max_clauses: 200_000,
            max_steps: 100_000,
            assume_sufficiently_complete: false,
            lia_mode: false,
            precedence_override: Vec::new(),
            cancel: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum RuleTag {
    Input { name: String, role: Role },
    Abstraction,
    EqualityResolution,
    NegativeSuperposition,
    PositiveSuperposition,
    EqualityFactoring,
    DefineDefinition { param: OpId, target: Term },
    DefineReplacement { param: OpId, target: Term },
    Simp(SimpRule),
    Close,
    LkRefute,
}

impl RuleTag {
    pub fn name(&self) -> String {
        match self {
            RuleTag::Input { role, .. } => format!("input({role:?})").to_lowercase(),
            RuleTag::Abstraction => "abstraction".into(),
            RuleTag::EqualityResolution => "equality_resolution".into(),
            RuleTag::NegativeSuperposition => "negative_superposition".into(),
            RuleTag::PositiveSuperposition => "positive_superposition".into(),
            RuleTag::EqualityFactoring => "equality_factoring".into(),
            RuleTag::DefineDefinition { .. } => "define".into(),
            RuleTag::DefineReplacement { .. } => "define_replace".into(),
            RuleTag::Simp(r) => format!("simp({})", r.name()),
            RuleTag::Close => "close".into(),
            RuleTag::LkRefute => "lia_close".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StepRecord {
    pub id: usize,
    pub rule: RuleTag,
    pub premises: Vec<usize>,
    pub clause: Clause,
    pub pivotal: Option<Substitution>,
    pub from_conjecture: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resource {
    Time,
    Clauses,
    Steps,
    Cancelled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Refutation { empty: usize },
    Saturated,
    ResourceOut(Resource),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Stats {
    pub generated: usize,
    pub kept: usize,
    pub picks: usize,
    pub close_calls: usize,
    pub simp_steps: usize,
    pub define_steps: usize,
    pub elapsed_secs: f64,
}

#[derive(Clone, Debug)]
pub struct ProverResult {
    pub outcome: Outcome,
    pub sufficiency: Sufficiency,
    pub guard_fired: bool,
    pub stats: Stats,
    pub log: Vec<StepRecord>,
    pub config: EngineConfig,
}

impl ProverResult {
    pub fn refutation_from_conjecture(&self) -> bool {
        match self.outcome {
            Outcome::Refutation { empty } => self.log[empty].from_conjecture,
            _ => false,
        }
    }
}

enum AddOutcome {
    Added(usize),
    Duplicate,
    Empty(usize),
}

pub struct Prover {
    cfg: EngineConfig,
    prec: Precedence,
    simp_cfg: SimpConfig,
    log: Vec<StepRecord>,
    passive: Vec<usize>,
    active: Vec<usize>,
    seen: HashSet<String>,
    bg_accumulator: Vec<usize>,
    definitions: DefinitionTable,
    sufficiency: Sufficiency,
    /// Ground background terms of the unabstracted preprocessed clauses;
    /// the termination guard in certified mode checks every generated
    /// clause against this bound.
    guard_bound: Vec<Term>,
    guard_fired: bool,
    new_bg_since_close: bool,
    new_ground_bg_unit: bool,
    picks_at_last_close: usize,
    stats: Stats,
    started: Instant,
}

fn build_precedence(cfg: &EngineConfig, inputs: &[InputClause]) -> Precedence {
    if cfg.precedence_override.is_empty() {
        return Precedence::new();
    }
    // Resolve override names against the operators occurring in the input.
    let mut ops: Vec<OpId> = Vec::new();
    fn collect(t: &Term, ops: &mut Vec<OpId>) {
        if let Some(op) = t.top_op() {
            if !ops.contains(&op) {
                ops.push(op);
            }
        }
        for a in t.args() {
            collect(a, ops);
        }
    }
    let mut occurring = Vec::new();
    for ic in inputs {
        for l in &ic.clause.literals {
            collect(&l.lhs, &mut occurring);
            collect(&l.rhs, &mut occurring);
        }
    }
    for name in &cfg.precedence_override {
        if let Some(op) = occurring.iter().find(|op| sym::op_name(**op) == *name) {
            ops.push(*op);
        }
    }
    Precedence::with_overrides(&ops)
}

impl Prover {
    pub fn new(cfg: EngineConfig, inputs: &[InputClause]) -> Prover {
        let prec = build_precedence(&cfg, inputs);
        let simp_cfg = SimpConfig {
            mode: cfg.bg_simp,
            suitable_only: cfg.lia_mode,
            abstract_domain_elements: cfg.lia_mode,
        };
        Prover {
            prec,
            simp_cfg,
            log: Vec::new(),
            passive: Vec::new(),
            active: Vec::new(),
            seen: HashSet::new(),
            bg_accumulator: Vec::new(),
            definitions: DefinitionTable::new(),
            sufficiency: Sufficiency::Unknown,
            guard_bound: Vec::new(),
            guard_fired: false,
            new_bg_since_close: false,
            new_ground_bg_unit: false,
            picks_at_last_close: 0,
            stats: Stats::default(),
            started: Instant::now(),
            cfg,
        }
    }

    fn ctx(&self) -> CalcCtx<'_> {
        CalcCtx {
            prec: &self.prec,
            abstract_domain_elements: self.cfg.lia_mode,
        }
    }

    fn clause(&self, id: usize) -> &Clause {
        &self.log[id].clause
    }

    fn record(
        &mut self,
        rule: RuleTag,
        premises: Vec<usize>,
        clause: Clause,
        pivotal: Option<Substitution>,
    ) -> usize {
        let id = self.log.len();
        let from_conjecture = match &rule {
            RuleTag::Input { role, .. } => *role == Role::NegatedConjecture,
            _ => premises.iter().any(|p| self.log[*p].from_conjecture),
        };
        self.log.push(StepRecord {
            id,
            rule,
            premises,
            clause,
            pivotal,
            from_conjecture,
        });
        id
    }

    /// Records a derived clause and queues it, deduplicating variants. In
    /// certified mode the background-term guard is checked here.
    fn add_clause(
        &mut self,
        rule: RuleTag,
        premises: Vec<usize>,
        clause: Clause,
        pivotal: Option<Substitution>,
    ) -> AddOutcome {
        self.stats.generated += 1;
        if clause.is_empty() {
            let id = self.record(rule, premises, clause, pivotal);
            return AddOutcome::Empty(id);
        }
        let key = clause.canonical_key();
        if !self.seen.insert(key) {
            return AddOutcome::Duplicate;
        }
        // Tautologies are redundant from birth.
        if crate::simplify::is_tautology(&clause) {
            return AddOutcome::Duplicate;
        }
        if self.sufficiency == Sufficiency::GbtCertified {
            self.check_guard(&clause);
        }
        let is_bg = clause.is_bg();
        let is_ground_unit = is_bg && clause.is_unit() && clause.is_ground();
        let id = self.record(rule, premises, clause, pivotal);
        if is_bg {
            self.bg_accumulator.push(id);
            self.new_bg_since_close = true;
            if is_ground_unit {
                self.new_ground_bg_unit = true;
            }
        }
        self.passive.push(id);
        self.stats.kept += 1;
        AddOutcome::Added(id)
    }

    /// In certified mode every background term of an unabstracted generated
    /// clause must stay under the size bound of the preprocessed input.
    fn check_guard(&mut self, clause: &Clause) {
        for t in unabstracted_bg_terms(clause) {
            let covered = if t.is_ground() {
                self.guard_bound.iter().any(|s| {
                    s.is_ground() && matches!(fin_compare(&self.prec, s, &t), Cmp::Gt | Cmp::Eq)
                })
            } else {
                self.guard_bound.contains(&t)
            };
            if !covered {
                self.guard_fired = true;
            }
        }
    }

    /// Weak abstraction of the input, followed (in reckless mode on ground
    /// background-sorted input) by exhaustive definition introduction until
    /// every clause either has no background-sorted foreground operator or
    /// is an abstracted definition.
    pub fn preprocess(&mut self, inputs: Vec<InputClause>) {
        let gbt_input = inputs.iter().all(|ic| is_gbt(&ic.clause));
        self.sufficiency = if self.cfg.assume_sufficiently_complete {
            Sufficiency::Asserted
        } else if self.cfg.define_mode == DefineMode::RecklessPre && gbt_input {
            Sufficiency::GbtCertified
        } else {
            Sufficiency::Unknown
        };

        let mut working: Vec<usize> = Vec::new();
        for ic in inputs {
            let input_id = self.record(
                RuleTag::Input {
                    name: ic.name.clone(),
                    role: ic.role,
                },
                vec![],
                ic.clause.clone(),
                None,
            );
            let abstracted = weakly_abstract(&ic.clause, self.cfg.lia_mode);
            let id = if abstracted == ic.clause {
                input_id
            } else {
                self.record(RuleTag::Abstraction, vec![input_id], abstracted, None)
            };
            working.push(id);
        }

        if self.sufficiency == Sufficiency::GbtCertified {
            working = self.pre_derivation(working);
        }

        for id in working {
            let clause = self.clause(id).clone();
            if clause.is_empty() {
                // An empty input clause; the loop will notice immediately.
                self.passive.push(id);
                continue;
            }
            self.seen.insert(clause.canonical_key());
            if clause.is_bg() {
                self.bg_accumulator.push(id);
                self.new_bg_since_close = true;
                if clause.is_unit() && clause.is_ground() {
                    self.new_ground_bg_unit = true;
                }
            }
            self.passive.push(id);
        }

        // The guard bound: background terms of the preprocessed clauses.
        let mut bound = Vec::new();
        for id in &self.passive {
            for t in unabstracted_bg_terms(self.clause(*id)) {
                if !bound.contains(&t) {
                    bound.push(t);
                }
            }
        }
        self.guard_bound = bound;
    }

    fn has_bg_sorted_fg_op(c: &Clause) -> bool {
        fn walk(t: &Term) -> bool {
            if let Some(op) = t.top_op() {
                if sym::op_level(op) == Level::Foreground
                    && sym::sort_level(t.sort()) == Level::Background
                {
                    return true;
                }
            }
            t.args().iter().any(walk)
        }
        c.literals.iter().any(|l| walk(&l.lhs) || walk(&l.rhs))
    }

    fn is_abstracted_definition(c: &Clause) -> bool {
        let u = unabstract(c);
        if u.literals.len() != 1 || !u.literals[0].positive || !u.is_ground() {
            return false;
        }
        let l = &u.literals[0];
        let head_is_def = |t: &Term, other: &Term| {
            match t.top_op() {
                Some(op) => {
                    sym::op_level(op) == Level::Foreground
                        && sym::sort_level(t.sort()) == Level::Background
                        && t.args().iter().all(|a| !Self::has_bg_sorted_fg_op_term(a))
                        && other.class() != crate::term::TermClass::Foreground
                }
                None => false,
            }
        };
        head_is_def(&l.lhs, &l.rhs) || head_is_def(&l.rhs, &l.lhs)
    }

    fn has_bg_sorted_fg_op_term(t: &Term) -> bool {
        if let Some(op) = t.top_op() {
            if sym::op_level(op) == Level::Foreground
                && sym::sort_level(t.sort()) == Level::Background
            {
                return true;
            }
        }
        t.args().iter().any(Self::has_bg_sorted_fg_op_term)
    }

    /// Exhaustive reckless definition introduction over the initial set.
    fn pre_derivation(&mut self, mut working: Vec<usize>) -> Vec<usize> {
        let mut out = Vec::new();
        while let Some(id) = working.pop() {
            let clause = self.clause(id).clone();
            if !Self::has_bg_sorted_fg_op(&clause) || Self::is_abstracted_definition(&clause) {
                out.push(id);
                continue;
            }
            let ctx = CalcCtx {
                prec: &self.prec,
                abstract_domain_elements: self.cfg.lia_mode,
            };
            let Some(di) = define(&ctx, &clause, &mut self.definitions, true) else {
                out.push(id);
                continue;
            };
            self.stats.define_steps += 1;
            let def_id = self.record(
                RuleTag::DefineDefinition {
                    param: di.parameter,
                    target: di.defined_term.clone(),
                },
                vec![id],
                di.definition.clone(),
                None,
            );
            let repl_id = self.record(
                RuleTag::DefineReplacement {
                    param: di.parameter,
                    target: di.defined_term.clone(),
                },
                vec![id],
                di.replacement.clone(),
                None,
            );
            working.push(def_id);
            working.push(repl_id);
        }
        out.reverse();
        out
    }

    fn over_resources(&self) -> Option<Resource> {
        if let Some(cancel) = &self.cfg.cancel {
            if cancel.load(AtomicOrd::Relaxed) {
                return Some(Resource::Cancelled);
            }
        }
        if let Some(limit) = self.cfg.max_seconds {
            if self.started.elapsed().as_secs_f64() >= limit {
                return Some(Resource::Time);
            }
        }
        if self.log.len() >= self.cfg.max_clauses {
            return Some(Resource::Clauses);
        }
        if self.stats.picks >= self.cfg.max_steps {
            return Some(Resource::Steps);
        }
        None
    }

    fn close_due(&self) -> bool {
        self.new_ground_bg_unit
            || (self.new_bg_since_close
                && self.stats.picks >= self.picks_at_last_close + self.cfg.close_period)
            || (self.new_bg_since_close && self.stats.picks == 0)
    }

    /// Runs the Close check (and the linear-arithmetic monitor in that
    /// mode) over the accumulated background clauses.
    fn run_close(&mut self) -> Option<usize> {
        self.new_bg_since_close = false;
        self.new_ground_bg_unit = false;
        self.picks_at_last_close = self.stats.picks;
        if self.bg_accumulator.is_empty() {
            return None;
        }
        self.stats.close_calls += 1;
        let ids = self.bg_accumulator.clone();
        let clauses: Vec<Clause> = ids.iter().map(|i| self.clause(*i).clone()).collect();
        match close_check(&clauses) {
            Ok(CloseVerdict::Unsat(core)) => {
                let premises: Vec<usize> = core.iter().map(|i| ids[*i]).collect();
                let id = self.record(RuleTag::Close, premises, Clause::empty(), None);
                Some(id)
            }
            Ok(CloseVerdict::Open) => {
                if self.cfg.lia_mode {
                    let unabs: Vec<Clause> = clauses.iter().map(unabstract).collect();
                    if let Ok((_, LkVerdict::UnsatOverZ)) = lk_saturate(&unabs) {
                        let id = self.record(RuleTag::LkRefute, ids, Clause::empty(), None);
                        return Some(id);
                    }
                }
                None
            }
            Err(_) => None,
        }
    }

    fn pick(&mut self) -> Option<usize> {
        if self.passive.is_empty() {
            return None;
        }
        let by_age = self.cfg.age_interleave > 0
            && self.stats.picks % self.cfg.age_interleave == self.cfg.age_interleave - 1;
        let best = if by_age {
            self.passive.iter().enumerate().min_by_key(|(_, id)| **id)
        } else {
            self.passive
                .iter()
                .enumerate()
                .min_by_key(|(_, id)| (self.clause(**id).weight(), **id))
        };
        let (idx, _) = best.map(|(i, id)| (i, *id))?;
        Some(self.passive.swap_remove(idx))
    }

    fn select_literals(&self, c: &Clause) -> Vec<usize> {
        match self.cfg.selection {
            SelectionStrategy::Nothing => Vec::new(),
            SelectionStrategy::LargestNegative => {
                let mut best: Option<(u32, usize)> = None;
                for (i, l) in c.literals.iter().enumerate() {
                    if l.positive || !l.is_fg() {
                        continue;
                    }
                    let w = l.lhs.weight() + l.rhs.weight();
                    if best.map(|(bw, _)| w > bw).unwrap_or(true) {
                        best = Some((w, i));
                    }
                }
                best.map(|(_, i)| vec![i]).unwrap_or_default()
            }
        }
    }

    fn active_pairs(&self) -> Vec<(usize, Clause)> {
        self.active
            .iter()
            .map(|id| (*id, self.clause(*id).clone()))
            .collect()
    }

    pub fn saturate(&mut self) -> ProverResult {
        let outcome = self.saturate_inner();
        self.stats.elapsed_secs = self.started.elapsed().as_secs_f64();
        if self.guard_fired && self.sufficiency == Sufficiency::GbtCertified {
            self.sufficiency = Sufficiency::Unknown;
        }
        ProverResult {
            outcome,
            sufficiency: self.sufficiency,
            guard_fired: self.guard_fired,
            stats: self.stats,
            log: std::mem::take(&mut self.log),
            config: self.cfg.clone(),
        }
    }

    fn saturate_inner(&mut self) -> Outcome {
        // Inputs may already contain the empty clause.
        if let Some(id) = self.passive.iter().find(|id| self.clause(**id).is_empty()) {
            return Outcome::Refutation { empty: *id };
        }
        loop {
            if let Some(r) = self.over_resources() {
                return Outcome::ResourceOut(r);
            }
            if self.close_due() {
                if let Some(empty) = self.run_close() {
                    return Outcome::Refutation { empty };
                }
            }
            let Some(given) = self.pick() else {
                if let Some(empty) = self.run_close() {
                    return Outcome::Refutation { empty };
                }
                return Outcome::Saturated;
            };
            self.stats.picks += 1;

            // Forward simplification to a fixpoint.
            let mut cur = given;
            let mut discarded = false;
            let actives = self.active_pairs();
            for _ in 0..500 {
                let outcome = simplify_once(self.clause(cur), &actives, &self.simp_cfg, &self.prec);
                match outcome {
                    None => break,
                    Some(SimpOutcome::Deleted { .. }) => {
                        discarded = true;
                        break;
                    }
                    Some(SimpOutcome::Replaced { clause, rule, by }) => {
                        self.stats.simp_steps += 1;
                        let mut premises = vec![cur];
                        premises.extend(by);
                        match self.add_simplified(rule, premises, clause) {
                            AddOutcome::Added(id) => cur = id,
                            AddOutcome::Duplicate => {
                                discarded = true;
                                break;
                            }
                            AddOutcome::Empty(id) => {
                                return Outcome::Refutation { empty: id };
                            }
                        }
                    }
                }
            }
            if discarded {
                continue;
            }

            // The definition rule applies to the simplified given clause.
            if self.cfg.define_mode != DefineMode::Off {
                let clause = self.clause(cur).clone();
                let ctx = CalcCtx {
                    prec: &self.prec,
                    abstract_domain_elements: self.cfg.lia_mode,
                };
                if let Some(di) = define(&ctx, &clause, &mut self.definitions, false) {
                    self.stats.define_steps += 1;
                    let d = self.add_clause(
                        RuleTag::DefineDefinition {
                            param: di.parameter,
                            target: di.defined_term.clone(),
                        },
                        vec![cur],
                        di.definition,
                        None,
                    );
                    if let AddOutcome::Empty(id) = d {
                        return Outcome::Refutation { empty: id };
                    }
                    let r = self.add_clause(
                        RuleTag::DefineReplacement {
                            param: di.parameter,
                            target: di.defined_term.clone(),
                        },
                        vec![cur],
                        di.replacement,
                        None,
                    );
                    if let AddOutcome::Empty(id) = r {
                        return Outcome::Refutation { empty: id };
                    }
                    continue;
                }
            }

            // Fix the selection for the lifetime of the clause.
            let selection = self.select_literals(self.clause(cur));
            self.log[cur].clause.selected = selection;
            let given_clause = self.clause(cur).clone();

            // Backward simplification of the active set by the new clause.
            let mut removed = Vec::new();
            for (slot, aid) in self.active.clone().into_iter().enumerate() {
                let a = self.clause(aid).clone();
                match simplify_once(&a, &[(cur, given_clause.clone())], &self.simp_cfg, &self.prec)
                {
                    None => {}
                    Some(SimpOutcome::Deleted { .. }) => removed.push(slot),
                    Some(SimpOutcome::Replaced { clause, rule, by }) => {
                        self.stats.simp_steps += 1;
                        removed.push(slot);
                        let mut premises = vec![aid];
                        premises.extend(by);
                        if let AddOutcome::Empty(id) = self.add_simplified(rule, premises, clause)
                        {
                            return Outcome::Refutation { empty: id };
                        }
                    }
                }
            }
            for slot in removed.into_iter().rev() {
                self.active.remove(slot);
            }

            // Generating inferences: the given clause against itself and
            // every active clause.
            let mut conclusions: Vec<(RuleTag, Vec<usize>, Clause, Substitution)> = Vec::new();
            {
                let ctx = self.ctx();
                for inf in equality_resolution(&ctx, &given_clause) {
                    conclusions.push((
                        RuleTag::EqualityResolution,
                        vec![cur],
                        inf.conclusion,
                        inf.pivotal,
                    ));
                }
                for inf in equality_factoring(&ctx, &given_clause) {
                    conclusions.push((
                        RuleTag::EqualityFactoring,
                        vec![cur],
                        inf.conclusion,
                        inf.pivotal,
                    ));
                }
                let mut partners: Vec<(usize, Clause)> = self.active_pairs();
                partners.push((cur, given_clause.clone()));
                for (aid, a) in &partners {
                    for positive in [false, true] {
                        // Given as the equation premise.
                        let renamed = rename_clause(a);
                        for inf in superposition(&ctx, &given_clause, &renamed, positive) {
                            conclusions.push((
                                tag_of(inf.rule),
                                vec![cur, *aid],
                                inf.conclusion,
                                inf.pivotal,
                            ));
                        }
                        if *aid != cur {
                            // Given as the rewritten premise.
                            let renamed = rename_clause(&given_clause);
                            for inf in superposition(&ctx, a, &renamed, positive) {
                                conclusions.push((
                                    tag_of(inf.rule),
                                    vec![*aid, cur],
                                    inf.conclusion,
                                    inf.pivotal,
                                ));
                            }
                        }
                    }
                }
            }
            for (tag, premises, clause, pivotal) in conclusions {
                if let AddOutcome::Empty(id) =
                    self.add_clause(tag, premises, clause, Some(pivotal))
                {
                    return Outcome::Refutation { empty: id };
                }
            }

            self.active.push(cur);
        }
    }

    fn add_simplified(
        &mut self,
        rule: SimpRule,
        premises: Vec<usize>,
        clause: Clause,
    ) -> AddOutcome {
        self.add_clause(RuleTag::Simp(rule), premises, clause, None)
    }
}

fn tag_of(rule: Rule) -> RuleTag {
    match rule {
        Rule::EqualityResolution => RuleTag::EqualityResolution,
        Rule::NegativeSuperposition => RuleTag::NegativeSuperposition,
        Rule::PositiveSuperposition => RuleTag::PositiveSuperposition,
        Rule::EqualityFactoring => RuleTag::EqualityFactoring,
    }
}

/// Runs the prover on a set of input clauses.
pub fn prove(inputs: Vec<InputClause>, cfg: EngineConfig) -> ProverResult {
    let mut prover = Prover::new(cfg, &inputs);
    prover.preprocess(inputs);
    prover.saturate()
}

/// Ids of all ancestors of a step, including the step itself, ascending.
pub fn proof_ancestors(log: &[StepRecord], root: usize) -> Vec<usize> {
    let mut seen = vec![false; log.len()];
    let mut stack = vec![root];
    while let Some(id) = stack.pop() {
        if seen[id] {
            continue;
        }
        seen[id] = true;
        stack.extend(log[id].premises.iter().copied());
    }
    (0..log.len()).filter(|i| seen[*i]).collect()
}

/// Renders the derivation of the empty clause, topologically ordered.
pub fn explain(result: &ProverResult) -> Option<String> {
    let Outcome::Refutation { empty } = result.outcome else {
        return None;
    };
    let mut out = String::new();
    for id in proof_ancestors(&result.log, empty) {
        let step = &result.log[id];
        let mut line = format!("{:>4}. {}  [{}", id, step.clause, step.rule.name());
        if !step.premises.is_empty() {
            line.push(' ');
            line.push_str(
                &step
                    .premises
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        line.push(']');
        if let Some(sigma) = &step.pivotal {
            if !sigma.is_empty() {
                line.push_str(&format!(" {sigma}"));
            }
        }
        out.push_str(&line);
        out.push('\n');
    }
    Some(out)
}

#[derive(Debug, thiserror::Error)]
#[error("replay failed at step {step}: {reason}")]
pub struct ReplayError {
    pub step: usize,
    pub reason: String,
}

/// Re-executes every rule in the refutation on its recorded premises and
/// checks that the recorded conclusion is reproduced (up to variable
/// renaming).
pub fn replay(result: &ProverResult) -> Result<(), ReplayError> {
    let Outcome::Refutation { empty } = result.outcome else {
        return Err(ReplayError {
            step: 0,
            reason: "not a refutation".into(),
        });
    };
    let cfg = &result.config;
    let inputs: Vec<InputClause> = result
        .log
        .iter()
        .filter_map(|s| match &s.rule {
            RuleTag::Input { name, role } => Some(InputClause {
                name: name.clone(),
                role: *role,
                clause: s.clause.clone(),
            }),
            _ => None,
        })
        .collect();
    let prec = build_precedence(cfg, &inputs);
    let simp_cfg = SimpConfig {
        mode: cfg.bg_simp,
        suitable_only: cfg.lia_mode,
        abstract_domain_elements: cfg.lia_mode,
    };
    let ctx = CalcCtx {
        prec: &prec,
        abstract_domain_elements: cfg.lia_mode,
    };
    let matches = |derived: &Clause, recorded: &Clause| {
        derived.alpha_eq_ordered(recorded) || derived.alpha_eq_multiset(recorded)
    };
    let mut replay_defs = DefinitionTable::new();
    let log = &result.log;
    for id in proof_ancestors(log, empty) {
        let step = &log[id];
        let fail = |reason: String| ReplayError { step: id, reason };
        let premise = |i: usize| -> &Clause { &log[step.premises[i]].clause };
        match &step.rule {
            RuleTag::Input { .. } => {}
            RuleTag::Abstraction => {
                let derived = weakly_abstract(premise(0), cfg.lia_mode);
                if !matches(&derived, &step.clause) {
                    return Err(fail("abstraction mismatch".into()));
                }
            }
            RuleTag::EqualityResolution => {
                let infs = equality_resolution(&ctx, premise(0));
                if !infs.iter().any(|i| matches(&i.conclusion, &step.clause)) {
                    return Err(fail("no matching equality resolution inference".into()));
                }
            }
            RuleTag::EqualityFactoring => {
                let infs = equality_factoring(&ctx, premise(0));
                if !infs.iter().any(|i| matches(&i.conclusion, &step.clause)) {
                    return Err(fail("no matching equality factoring inference".into()));
                }
            }
            RuleTag::NegativeSuperposition | RuleTag::PositiveSuperposition => {
                let positive = matches!(step.rule, RuleTag::PositiveSuperposition);
                let renamed = rename_clause(premise(1));
                let infs = superposition(&ctx, premise(0), &renamed, positive);
                if !infs.iter().any(|i| matches(&i.conclusion, &step.clause)) {
                    return Err(fail("no matching superposition inference".into()));
                }
            }
            RuleTag::DefineDefinition { param, target }
            | RuleTag::DefineReplacement { param, target } => {
                replay_defs.seed(target.clone(), *param);
                let di = define(&ctx, premise(0), &mut replay_defs, true)
                    .ok_or_else(|| fail("definition rule not applicable".into()))?;
                let derived = match step.rule {
                    RuleTag::DefineDefinition { .. } => di.definition,
                    _ => di.replacement,
                };
                if !matches(&derived, &step.clause) {
                    return Err(fail("definition conclusion mismatch".into()));
                }
            }
            RuleTag::Simp(rule) => {
                let actives: Vec<(usize, Clause)> = step.premises[1..]
                    .iter()
                    .map(|p| (*p, log[*p].clause.clone()))
                    .collect();
                match simplify_once(premise(0), &actives, &simp_cfg, &prec) {
                    Some(SimpOutcome::Replaced {
                        clause,
                        rule: got,
                        ..
                    }) if got == *rule && matches(&clause, &step.clause) => {}
                    other => {
                        return Err(fail(format!(
                            "simplification mismatch: expected {rule:?}, got {other:?}"
                        )))
                    }
                }
            }
            RuleTag::Close => {
                let clauses: Vec<Clause> =
                    step.premises.iter().map(|p| log[*p].clause.clone()).collect();
                match close_check(&clauses) {
                    Ok(CloseVerdict::Unsat(_)) => {}
                    other => return Err(fail(format!("close not reproducible: {other:?}"))),
                }
            }
            RuleTag::LkRefute => {
                let clauses: Vec<Clause> = step
                    .premises
                    .iter()
                    .map(|p| unabstract(&log[*p].clause))
                    .collect();
                match lk_saturate(&clauses) {
                    Ok((_, LkVerdict::UnsatOverZ)) => {}
                    other => {
                        return Err(fail(format!("lia refutation not reproducible: {other:?}")))
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clause::Literal;
    use crate::sym::{builtins, new_parameter, Level, Signature, VarKind, Variable};

    fn gt(l: Term, r: Term) -> Literal {
        let b = builtins();
        Literal::eq(
            Term::app(b.less, vec![r, l]),
            Term::app(b.true_less, vec![]),
        )
    }

    fn input(name: &str, clause: Clause) -> InputClause {
        InputClause {
            name: name.into(),
            role: Role::Axiom,
            clause,
        }
    }

    fn assert_refutes(inputs: Vec<InputClause>, cfg: EngineConfig) -> ProverResult {
        let result = prove(inputs, cfg);
        assert!(
            matches!(result.outcome, Outcome::Refutation { .. }),
            "expected a refutation, got {:?} after {} picks",
            result.outcome,
            result.stats.picks
        );
        replay(&result).expect("refutation must replay");
        result
    }

    #[test]
    fn motivating_example_needs_define() {
        // { f(1) < f(1) } closes via a definition for f(1).
        let b = builtins();
        let mut sig = Signature::new();
        let f = sig
            .declare_op("en_f", vec![b.int], b.int, Level::Foreground)
            .unwrap();
        let f1 = Term::app(f, vec![Term::int(1)]);
        let clause = Clause::new(vec![Literal::eq(
            Term::app(b.less, vec![f1.clone(), f1]),
            Term::app(b.true_less, vec![]),
        )]);
        let result = assert_refutes(vec![input("c1", clause)], EngineConfig::default());
        let Outcome::Refutation { empty } = result.outcome else {
            unreachable!()
        };
        let steps = proof_ancestors(&result.log, empty);
        assert!(steps.iter().any(|i| matches!(
            result.log[*i].rule,
            RuleTag::DefineDefinition { .. } | RuleTag::DefineReplacement { .. }
        )));
        assert!(steps
            .iter()
            .any(|i| matches!(result.log[*i].rule, RuleTag::Close)));
    }

    #[test]
    fn equality_factoring_is_needed() {
        // { a+b = a, c != b | c != 0, c = b | c = 0 } refutes via factoring.
        let b = builtins();
        let mut sig = Signature::new();
        let alpha = Term::app(new_parameter("alpha_en", b.int), vec![]);
        let beta = Term::app(new_parameter("beta_en", b.int), vec![]);
        let c_const = Term::app(
            sig.declare_op("en_c", vec![], b.int, Level::Foreground)
                .unwrap(),
            vec![],
        );
        let clauses = vec![
            input(
                "c1",
                Clause::new(vec![Literal::eq(
                    Term::app(b.plus, vec![alpha.clone(), beta.clone()]),
                    alpha.clone(),
                )]),
            ),
            input(
                "c2",
                Clause::new(vec![
                    Literal::neq(c_const.clone(), beta.clone()),
                    Literal::neq(c_const.clone(), Term::int(0)),
                ]),
            ),
            input(
                "c3",
                Clause::new(vec![
                    Literal::eq(c_const.clone(), beta.clone()),
                    Literal::eq(c_const.clone(), Term::int(0)),
                ]),
            ),
        ];
        let result = assert_refutes(clauses, EngineConfig::default());
        let Outcome::Refutation { empty } = result.outcome else {
            unreachable!()
        };
        let steps = proof_ancestors(&result.log, empty);
        assert!(steps
            .iter()
            .any(|i| matches!(result.log[*i].rule, RuleTag::EqualityFactoring)));
    }

    #[test]
    fn define_chain_example() {
        // { P(0), f(x) > 0 | ~P(x), Q(f(x)), ~Q(x) | 0 > x }.
        let b = builtins();
        let mut sig = Signature::new();
        let f = sig
            .declare_op("en_f2", vec![b.int], b.int, Level::Foreground)
            .unwrap();
        let (p, true_p) = sig
            .declare_predicate("en_p", vec![b.int], Level::Foreground)
            .unwrap();
        let (q, true_q) = sig
            .declare_predicate("en_q", vec![b.int], Level::Foreground)
            .unwrap();
        let tp = Term::app(true_p, vec![]);
        let tq = Term::app(true_q, vec![]);
        let x1 = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let x2 = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let x3 = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let clauses = vec![
            input(
                "c1",
                Clause::new(vec![Literal::eq(Term::app(p, vec![Term::int(0)]), tp.clone())]),
            ),
            input(
                "c2",
                Clause::new(vec![
                    gt(Term::app(f, vec![x1.clone()]), Term::int(0)),
                    Literal::neq(Term::app(p, vec![x1.clone()]), tp.clone()),
                ]),
            ),
            input(
                "c3",
                Clause::new(vec![Literal::eq(
                    Term::app(q, vec![Term::app(f, vec![x2.clone()])]),
                    tq.clone(),
                )]),
            ),
            input(
                "c4",
                Clause::new(vec![
                    Literal::neq(Term::app(q, vec![x3.clone()]), tq.clone()),
                    gt(Term::int(0), x3.clone()),
                ]),
            ),
        ];
        let result = assert_refutes(clauses, EngineConfig::default());
        let Outcome::Refutation { empty } = result.outcome else {
            unreachable!()
        };
        let steps = proof_ancestors(&result.log, empty);
        assert!(steps.iter().any(|i| matches!(
            result.log[*i].rule,
            RuleTag::DefineDefinition { .. } | RuleTag::DefineReplacement { .. }
        )));
        assert!(steps
            .iter()
            .any(|i| matches!(result.log[*i].rule, RuleTag::Close)));
    }

    #[test]
    fn weak_abstraction_keeps_domain_elements_in_place() {
        // { 1+1 = 2, (1+1)+c != 2+c }.
        let b = builtins();
        let mut sig = Signature::new();
        let c_const = Term::app(
            sig.declare_op("en_c2", vec![], b.int, Level::Foreground)
                .unwrap(),
            vec![],
        );
        let two = Term::int(2);
        let one_one = Term::app(b.plus, vec![Term::int(1), Term::int(1)]);
        let clauses = vec![
            input(
                "c1",
                Clause::new(vec![Literal::eq(one_one.clone(), two.clone())]),
            ),
            input(
                "c2",
                Clause::new(vec![Literal::neq(
                    Term::app(b.plus, vec![one_one, c_const.clone()]),
                    Term::app(b.plus, vec![two, c_const]),
                )]),
            ),
        ];
        assert_refutes(clauses, EngineConfig::default());
    }

    #[test]
    fn ordinary_variable_abstraction_example() {
        // { P(1+y), ~P(1+c) }.
        let b = builtins();
        let mut sig = Signature::new();
        let (p, true_p) = sig
            .declare_predicate("en_p2", vec![b.int], Level::Foreground)
            .unwrap();
        let tp = Term::app(true_p, vec![]);
        let c_const = Term::app(
            sig.declare_op("en_c3", vec![], b.int, Level::Foreground)
                .unwrap(),
            vec![],
        );
        let y = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let clauses = vec![
            input(
                "c1",
                Clause::new(vec![Literal::eq(
                    Term::app(p, vec![Term::app(b.plus, vec![Term::int(1), y])]),
                    tp.clone(),
                )]),
            ),
            input(
                "c2",
                Clause::new(vec![Literal::neq(
                    Term::app(p, vec![Term::app(b.plus, vec![Term::int(1), c_const])]),
                    tp,
                )]),
            ),
        ];
        assert_refutes(clauses, EngineConfig::default());
    }

    #[test]
    fn saturation_reports_satisfiable_on_gbt() {
        let b = builtins();
        let mut sig = Signature::new();
        let (p, true_p) = sig
            .declare_predicate("en_p3", vec![b.int], Level::Foreground)
            .unwrap();
        let clause = Clause::new(vec![Literal::eq(
            Term::app(p, vec![Term::int(0)]),
            Term::app(true_p, vec![]),
        )]);
        let cfg = EngineConfig {
            define_mode: DefineMode::RecklessPre,
            ..EngineConfig::default()
        };
        let result = prove(vec![input("c1", clause)], cfg);
        assert_eq!(result.outcome, Outcome::Saturated);
        assert_eq!(result.sufficiency, Sufficiency::GbtCertified);
        assert!(!result.guard_fired);
    }

    #[test]
    fn timeout_zero_resources_out() {
        let cfg = EngineConfig {
            max_seconds: Some(0.0),
            ..EngineConfig::default()
        };
        let b = builtins();
        let clause = Clause::new(vec![Literal::eq(Term::int(0), Term::int(0))]);
        let _ = b;
        let result = prove(vec![input("c1", clause)], cfg);
        assert_eq!(result.outcome, Outcome::ResourceOut(Resource::Time));
    }
}

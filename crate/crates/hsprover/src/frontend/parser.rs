//! Recursive-descent parser for the typed clausal format.
//!
//! The format is a TFF-like clausal subset: `tff(name, type, decl).` items
//! declare sorts, operators, predicates and parameters; `tff(name, role,
//! clause).` items carry disjunctions of literals with an optional typed
//! quantifier prefix. Native extensions: `^X` marks an abstraction-kind
//! variable and `?X` an ordinary one (unmarked background variables follow
//! the configured default), and a trailing `parameter` annotation declares a
//! free background constant. Includes are resolved relative to the input
//! file, then the include path list, then `HSP_INCLUDE_PATH`.

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use thiserror::Error;

use crate::clause::{Clause, Literal};
use crate::engine::{InputClause, Role};
use crate::sym::{self, Level, OpId, Signature, SortId, VarKind, Variable};
use crate::term::Term;

use super::lexer::{tokenize, Pos, Tok};
use super::problem::{Declaration, ProblemFile};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{0}")]
    Lex(#[from] super::lexer::LexError),
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: sort error: {msg}")]
    Sort { pos: Pos, msg: String },
    #[error("{pos}: undeclared symbol `{name}`")]
    Undeclared { pos: Pos, name: String },
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("include cycle through `{0}`")]
    IncludeCycle(String),
}

#[derive(Clone, Debug)]
pub struct ParseOptions {
    /// Kind given to unmarked background-sorted variables.
    pub int_var_kind: VarKind,
    pub include_dirs: Vec<PathBuf>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            int_var_kind: VarKind::Abstraction,
            include_dirs: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
enum PTerm {
    Var {
        marker: Option<VarKind>,
        name: String,
        pos: Pos,
    },
    Int(BigInt),
    App {
        name: String,
        args: Vec<PTerm>,
        pos: Pos,
    },
}

#[derive(Clone, Debug)]
enum PLit {
    Atom { neg: bool, term: PTerm },
    Eq { neg: bool, lhs: PTerm, rhs: PTerm },
    False,
}

struct Builder {
    opts: ParseOptions,
    sig: Signature,
    declarations: Vec<(String, Declaration)>,
    clauses: Vec<InputClause>,
    predicates: HashMap<OpId, OpId>,
    predicate_sorts: HashSet<SortId>,
    included: HashSet<PathBuf>,
}

struct P<'a> {
    toks: &'a [(Tok, Pos)],
    i: usize,
}

impl<'a> P<'a> {
    fn pos(&self) -> Pos {
        self.toks
            .get(self.i)
            .map(|(_, p)| *p)
            .unwrap_or(Pos { line: 0, col: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(t, _)| t.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            other => {
                self.i = self.i.saturating_sub(1);
                self.err(format!("expected {tok:?}, found {other:?}"))
            }
        }
    }

    fn word(&mut self) -> Result<(String, bool, Pos), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Word(w, upper)) => Ok((w, upper, pos)),
            other => {
                self.i = self.i.saturating_sub(1);
                self.err(format!("expected a name, found {other:?}"))
            }
        }
    }
}

pub fn parse_problem_text(text: &str, opts: &ParseOptions) -> Result<ProblemFile, ParseError> {
    let mut b = Builder::new(opts.clone());
    b.parse_text(text, None)?;
    Ok(b.finish())
}

pub fn parse_problem_file(path: &Path, opts: &ParseOptions) -> Result<ProblemFile, ParseError> {
    let mut b = Builder::new(opts.clone());
    b.parse_path(path)?;
    Ok(b.finish())
}

impl Builder {
    fn new(opts: ParseOptions) -> Builder {
        Builder {
            opts,
            sig: Signature::new(),
            declarations: Vec::new(),
            clauses: Vec::new(),
            predicates: HashMap::new(),
            predicate_sorts: HashSet::new(),
            included: HashSet::new(),
        }
    }

    fn finish(self) -> ProblemFile {
        ProblemFile {
            signature: self.sig,
            declarations: self.declarations,
            clauses: self.clauses,
            predicates: self.predicates,
        }
    }

    fn parse_path(&mut self, path: &Path) -> Result<(), ParseError> {
        let canonical = path.canonicalize().unwrap_or_else(|_| path.to_path_buf());
        if !self.included.insert(canonical) {
            return Err(ParseError::IncludeCycle(path.display().to_string()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        self.parse_text(&text, path.parent())
    }

    fn resolve_include(&self, name: &str, base: Option<&Path>) -> PathBuf {
        let direct = PathBuf::from(name);
        if direct.is_absolute() && direct.exists() {
            return direct;
        }
        if let Some(base) = base {
            let p = base.join(name);
            if p.exists() {
                return p;
            }
        }
        for dir in &self.opts.include_dirs {
            let p = dir.join(name);
            if p.exists() {
                return p;
            }
        }
        if let Ok(env) = std::env::var("HSP_INCLUDE_PATH") {
            for dir in env.split(':') {
                if dir.is_empty() {
                    continue;
                }
                let p = Path::new(dir).join(name);
                if p.exists() {
                    return p;
                }
            }
        }
        direct
    }

    fn parse_text(&mut self, text: &str, base: Option<&Path>) -> Result<(), ParseError> {
        let toks = tokenize(text)?;
        let mut p = P { toks: &toks, i: 0 };
        while p.peek().is_some() {
            let (head, _, _) = p.word()?;
            match head.as_str() {
                "include" => {
                    p.expect(Tok::LParen)?;
                    let name = match p.next() {
                        Some(Tok::SQuoted(s)) => s,
                        _ => return p.err("expected a quoted include path"),
                    };
                    p.expect(Tok::RParen)?;
                    p.expect(Tok::Dot)?;
                    let resolved = self.resolve_include(&name, base);
                    self.parse_path(&resolved)?;
                }
                "tff" => self.parse_tff(&mut p)?,
                other => {
                    return p.err(format!("expected `tff` or `include`, found `{other}`"));
                }
            }
        }
        Ok(())
    }

    fn parse_tff(&mut self, p: &mut P) -> Result<(), ParseError> {
        p.expect(Tok::LParen)?;
        let name = match p.next() {
            Some(Tok::Word(w, _)) => w,
            Some(Tok::Int(v)) => v.to_string(),
            Some(Tok::SQuoted(s)) => s,
            _ => return p.err("expected a formula name"),
        };
        p.expect(Tok::Comma)?;
        let (kind, _, kpos) = p.word()?;
        p.expect(Tok::Comma)?;
        match kind.as_str() {
            "type" => self.parse_declaration(p)?,
            "axiom" | "hypothesis" | "negated_conjecture" => {
                let role = match kind.as_str() {
                    "axiom" => Role::Axiom,
                    "hypothesis" => Role::Hypothesis,
                    _ => Role::NegatedConjecture,
                };
                let clause = self.parse_clause(p)?;
                self.clauses.push(InputClause { name, role, clause });
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: kpos,
                    msg: format!(
                        "unsupported role `{other}` (expected type, axiom, hypothesis \
                         or negated_conjecture)"
                    ),
                })
            }
        }
        p.expect(Tok::RParen)?;
        p.expect(Tok::Dot)?;
        Ok(())
    }

    fn lookup_sort(&self, name: &str, pos: Pos) -> Result<SortId, ParseError> {
        self.sig
            .lookup_sort(name)
            .ok_or_else(|| ParseError::Undeclared {
                pos,
                name: name.to_string(),
            })
    }

    fn parse_declaration(&mut self, p: &mut P) -> Result<(), ParseError> {
        let (name, _, npos) = p.word()?;
        p.expect(Tok::Colon)?;
        // Sort declaration.
        if let Some(Tok::Word(w, _)) = p.peek() {
            if w == "$tType" {
                p.next();
                let sort = self
                    .sig
                    .declare_sort(&name, Level::Foreground)
                    .map_err(|msg| ParseError::Syntax { pos: npos, msg })?;
                self.declarations.push((name, Declaration::Sort(sort)));
                return Ok(());
            }
        }
        // Argument sorts.
        let mut args = Vec::new();
        let result_word;
        if p.peek() == Some(&Tok::LParen) {
            p.next();
            loop {
                let (w, _, wpos) = p.word()?;
                args.push(self.lookup_sort(&w, wpos)?);
                match p.next() {
                    Some(Tok::Star) => continue,
                    Some(Tok::RParen) => break,
                    _ => return p.err("expected `*` or `)` in argument sorts"),
                }
            }
            p.expect(Tok::Arrow)?;
            let (w, _, _) = p.word()?;
            result_word = w;
        } else {
            let (w, _, wpos) = p.word()?;
            if p.peek() == Some(&Tok::Arrow) {
                p.next();
                args.push(self.lookup_sort(&w, wpos)?);
                let (r, _, _) = p.word()?;
                result_word = r;
            } else {
                result_word = w;
            }
        }
        // Optional `parameter` annotation.
        let mut parameter = false;
        if p.peek() == Some(&Tok::Comma) {
            p.next();
            let (w, _, wpos) = p.word()?;
            if w == "parameter" {
                parameter = true;
            } else {
                return Err(ParseError::Syntax {
                    pos: wpos,
                    msg: format!("unknown declaration annotation `{w}`"),
                });
            }
        }
        if result_word == "$o" {
            if parameter {
                return Err(ParseError::Syntax {
                    pos: npos,
                    msg: "predicates cannot be parameters".into(),
                });
            }
            let (pred, tru) = self
                .sig
                .declare_predicate(&name, args, Level::Foreground)
                .map_err(|msg| ParseError::Syntax { pos: npos, msg })?;
            self.predicates.insert(pred, tru);
            self.predicate_sorts.insert(sym::op_result_sort(pred));
            self.declarations.push((name, Declaration::Predicate(pred)));
            return Ok(());
        }
        let result = self.lookup_sort(&result_word, npos)?;
        if parameter {
            if !args.is_empty() {
                return Err(ParseError::Syntax {
                    pos: npos,
                    msg: "parameters must be constants".into(),
                });
            }
            let op = self
                .sig
                .declare_parameter(&name, result)
                .map_err(|msg| ParseError::Syntax { pos: npos, msg })?;
            self.declarations.push((name, Declaration::Parameter(op)));
        } else {
            let op = self
                .sig
                .declare_op(&name, args, result, Level::Foreground)
                .map_err(|msg| ParseError::Syntax { pos: npos, msg })?;
            self.declarations.push((name, Declaration::Op(op)));
        }
        Ok(())
    }

    fn parse_clause(&mut self, p: &mut P) -> Result<Clause, ParseError> {
        // Optional typed quantifier prefix.
        let mut bound: HashMap<String, (SortId, Option<VarKind>)> = HashMap::new();
        if p.peek() == Some(&Tok::Bang) {
            p.next();
            p.expect(Tok::LBracket)?;
            loop {
                let marker = match p.peek() {
                    Some(Tok::Caret) => {
                        p.next();
                        Some(VarKind::Abstraction)
                    }
                    Some(Tok::Question) => {
                        p.next();
                        Some(VarKind::Ordinary)
                    }
                    _ => None,
                };
                let (name, _, _) = p.word()?;
                p.expect(Tok::Colon)?;
                let (sw, _, spos) = p.word()?;
                let sort = self.lookup_sort(&sw, spos)?;
                bound.insert(name, (sort, marker));
                match p.next() {
                    Some(Tok::Comma) => continue,
                    Some(Tok::RBracket) => break,
                    _ => return p.err("expected `,` or `]` in quantifier"),
                }
            }
            p.expect(Tok::Colon)?;
        }
        let mut parens = 0usize;
        while p.peek() == Some(&Tok::LParen) {
            p.next();
            parens += 1;
        }
        let mut lits = Vec::new();
        loop {
            lits.push(self.parse_literal(p)?);
            // Closing parentheses may appear before `|` or at the end.
            while parens > 0 && p.peek() == Some(&Tok::RParen) {
                // Only consume if it closes the clause grouping, not the
                // enclosing tff(...) wrapper: grouping parens are tracked.
                p.next();
                parens -= 1;
            }
            if p.peek() == Some(&Tok::Pipe) {
                p.next();
                while p.peek() == Some(&Tok::LParen) {
                    p.next();
                    parens += 1;
                }
                continue;
            }
            break;
        }
        if parens != 0 {
            return p.err("unbalanced parentheses in clause");
        }
        self.build_clause(lits, bound, p.pos())
    }

    fn parse_literal(&mut self, p: &mut P) -> Result<PLit, ParseError> {
        let neg = if p.peek() == Some(&Tok::Tilde) {
            p.next();
            true
        } else {
            false
        };
        // A negated parenthesized equation: ~(a = b).
        if neg && p.peek() == Some(&Tok::LParen) {
            p.next();
            let lhs = self.parse_term(p)?;
            let lit = match p.next() {
                Some(Tok::Equal) => PLit::Eq {
                    neg: true,
                    lhs,
                    rhs: self.parse_term(p)?,
                },
                Some(Tok::NotEqual) => PLit::Eq {
                    neg: false,
                    lhs,
                    rhs: self.parse_term(p)?,
                },
                _ => return p.err("expected `=` or `!=`"),
            };
            p.expect(Tok::RParen)?;
            return Ok(lit);
        }
        if !neg {
            if let Some(Tok::Word(w, _)) = p.peek() {
                if w == "$false" {
                    p.next();
                    return Ok(PLit::False);
                }
            }
        }
        let lhs = self.parse_term(p)?;
        match p.peek() {
            Some(Tok::Equal) => {
                p.next();
                let rhs = self.parse_term(p)?;
                Ok(PLit::Eq { neg, lhs, rhs })
            }
            Some(Tok::NotEqual) => {
                p.next();
                let rhs = self.parse_term(p)?;
                if neg {
                    return p.err("`~` cannot be combined with `!=`");
                }
                Ok(PLit::Eq {
                    neg: true,
                    lhs,
                    rhs,
                })
            }
            _ => Ok(PLit::Atom { neg, term: lhs }),
        }
    }

    fn parse_term(&mut self, p: &mut P) -> Result<PTerm, ParseError> {
        match p.peek() {
            Some(Tok::Caret) => {
                p.next();
                let (name, _, pos) = p.word()?;
                Ok(PTerm::Var {
                    marker: Some(VarKind::Abstraction),
                    name,
                    pos,
                })
            }
            Some(Tok::Question) => {
                p.next();
                let (name, _, pos) = p.word()?;
                Ok(PTerm::Var {
                    marker: Some(VarKind::Ordinary),
                    name,
                    pos,
                })
            }
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(v)) = p.next() else {
                    unreachable!()
                };
                Ok(PTerm::Int(v))
            }
            Some(Tok::Word(..)) => {
                let (name, upper, pos) = p.word()?;
                if upper && !name.starts_with('$') {
                    return Ok(PTerm::Var {
                        marker: None,
                        name,
                        pos,
                    });
                }
                let mut args = Vec::new();
                if p.peek() == Some(&Tok::LParen) {
                    p.next();
                    loop {
                        args.push(self.parse_term(p)?);
                        match p.next() {
                            Some(Tok::Comma) => continue,
                            Some(Tok::RParen) => break,
                            _ => return p.err("expected `,` or `)` in arguments"),
                        }
                    }
                }
                Ok(PTerm::App { name, args, pos })
            }
            other => p.err(format!("expected a term, found {other:?}")),
        }
    }

    fn builtin_op(&self, name: &str) -> Option<OpId> {
        let b = sym::builtins();
        match name {
            "$sum" => Some(b.plus),
            "$difference" => Some(b.minus),
            "$uminus" => Some(b.uminus),
            "$product" => Some(b.times),
            "$less" => Some(b.less),
            "$lesseq" => Some(b.leq),
            _ => None,
        }
    }

    fn op_for(&self, name: &str, pos: Pos) -> Result<OpId, ParseError> {
        if let Some(op) = self.builtin_op(name) {
            return Ok(op);
        }
        self.sig
            .lookup_op(name)
            .ok_or_else(|| ParseError::Undeclared {
                pos,
                name: name.to_string(),
            })
    }

    /// One inference pass: propagates expected sorts into variables.
    fn constrain(
        &self,
        t: &PTerm,
        expected: Option<SortId>,
        vars: &mut HashMap<String, SortId>,
        changed: &mut bool,
    ) -> Result<(), ParseError> {
        match t {
            PTerm::Var { name, pos, .. } => {
                if let Some(s) = expected {
                    match vars.get(name) {
                        None => {
                            vars.insert(name.clone(), s);
                            *changed = true;
                        }
                        Some(prev) if *prev != s => {
                            return Err(ParseError::Sort {
                                pos: *pos,
                                msg: format!(
                                    "variable {name} used with sorts {} and {}",
                                    sym::sort_name(*prev),
                                    sym::sort_name(s)
                                ),
                            })
                        }
                        _ => {}
                    }
                }
                Ok(())
            }
            PTerm::Int(_) => Ok(()),
            PTerm::App { name, args, pos } => {
                let op = match name.as_str() {
                    "$greater" | "$greatereq" => {
                        // Swapped-argument encodings of the builtins.
                        if name == "$greater" {
                            sym::builtins().less
                        } else {
                            sym::builtins().leq
                        }
                    }
                    _ => self.op_for(name, *pos)?,
                };
                let arg_sorts = sym::op_arg_sorts(op);
                if arg_sorts.len() != args.len() {
                    return Err(ParseError::Sort {
                        pos: *pos,
                        msg: format!(
                            "`{name}` expects {} arguments, got {}",
                            arg_sorts.len(),
                            args.len()
                        ),
                    });
                }
                for (a, s) in args.iter().zip(arg_sorts) {
                    self.constrain(a, Some(s), vars, changed)?;
                }
                Ok(())
            }
        }
    }

    fn pterm_sort(&self, t: &PTerm, vars: &HashMap<String, SortId>) -> Option<SortId> {
        match t {
            PTerm::Var { name, .. } => vars.get(name).copied(),
            PTerm::Int(_) => Some(sym::builtins().int),
            PTerm::App { name, .. } => match name.as_str() {
                "$greater" => Some(sym::builtins().o_less),
                "$greatereq" => Some(sym::builtins().o_leq),
                _ => {
                    let op = self.builtin_op(name).or_else(|| self.sig.lookup_op(name))?;
                    Some(sym::op_result_sort(op))
                }
            },
        }
    }

    fn build_term(
        &self,
        t: &PTerm,
        vars: &HashMap<String, SortId>,
        markers: &HashMap<String, Option<VarKind>>,
        built: &mut HashMap<String, Variable>,
    ) -> Result<Term, ParseError> {
        match t {
            PTerm::Var { name, pos, .. } => {
                if let Some(v) = built.get(name) {
                    return Ok(Term::var(*v));
                }
                let sort = *vars.get(name).ok_or_else(|| ParseError::Sort {
                    pos: *pos,
                    msg: format!("cannot infer the sort of variable {name}"),
                })?;
                let is_bg = sym::sort_level(sort) == Level::Background;
                let kind = match markers.get(name).copied().flatten() {
                    Some(VarKind::Abstraction) => {
                        if !is_bg {
                            return Err(ParseError::Sort {
                                pos: *pos,
                                msg: format!(
                                    "abstraction variable {name} must have a background sort"
                                ),
                            });
                        }
                        VarKind::Abstraction
                    }
                    Some(VarKind::Ordinary) => VarKind::Ordinary,
                    None => {
                        if is_bg {
                            self.opts.int_var_kind
                        } else {
                            VarKind::Ordinary
                        }
                    }
                };
                let v = Variable::fresh(sort, kind);
                built.insert(name.clone(), v);
                Ok(Term::var(v))
            }
            PTerm::Int(v) => Ok(Term::int(v.clone())),
            PTerm::App { name, args, pos } => {
                let (op, swap) = match name.as_str() {
                    "$greater" => (sym::builtins().less, true),
                    "$greatereq" => (sym::builtins().leq, true),
                    _ => (self.op_for(name, *pos)?, false),
                };
                let mut built_args = Vec::with_capacity(args.len());
                for a in args {
                    built_args.push(self.build_term(a, vars, markers, built)?);
                }
                if swap {
                    built_args.reverse();
                }
                // Argument sorts were checked during inference.
                for (a, s) in built_args.iter().zip(sym::op_arg_sorts(op)) {
                    if a.sort() != s {
                        return Err(ParseError::Sort {
                            pos: *pos,
                            msg: format!("ill-sorted argument of `{name}`"),
                        });
                    }
                }
                Ok(Term::app(op, built_args))
            }
        }
    }

    fn is_predicate_op(&self, op: OpId) -> bool {
        let b = sym::builtins();
        op == b.less || op == b.leq || self.predicates.contains_key(&op)
    }

    fn build_clause(
        &mut self,
        lits: Vec<PLit>,
        bound: HashMap<String, (SortId, Option<VarKind>)>,
        end: Pos,
    ) -> Result<Clause, ParseError> {
        // Sort inference to a fixpoint.
        let mut vars: HashMap<String, SortId> = HashMap::new();
        let mut markers: HashMap<String, Option<VarKind>> = HashMap::new();
        for (name, (sort, marker)) in &bound {
            vars.insert(name.clone(), *sort);
            markers.insert(name.clone(), *marker);
        }
        let collect_markers = |t: &PTerm, markers: &mut HashMap<String, Option<VarKind>>| {
            fn walk(t: &PTerm, markers: &mut HashMap<String, Option<VarKind>>) {
                match t {
                    PTerm::Var { marker, name, .. } => {
                        let entry = markers.entry(name.clone()).or_insert(None);
                        if entry.is_none() {
                            *entry = *marker;
                        }
                    }
                    PTerm::App { args, .. } => {
                        for a in args {
                            walk(a, markers);
                        }
                    }
                    PTerm::Int(_) => {}
                }
            }
            walk(t, markers);
        };
        for l in &lits {
            match l {
                PLit::Atom { term, .. } => collect_markers(term, &mut markers),
                PLit::Eq { lhs, rhs, .. } => {
                    collect_markers(lhs, &mut markers);
                    collect_markers(rhs, &mut markers);
                }
                PLit::False => {}
            }
        }
        loop {
            let mut changed = false;
            for l in &lits {
                match l {
                    PLit::False => {}
                    PLit::Atom { term, .. } => {
                        self.constrain(term, None, &mut vars, &mut changed)?
                    }
                    PLit::Eq { lhs, rhs, .. } => {
                        self.constrain(lhs, None, &mut vars, &mut changed)?;
                        self.constrain(rhs, None, &mut vars, &mut changed)?;
                        if let Some(s) = self.pterm_sort(lhs, &vars) {
                            self.constrain(rhs, Some(s), &mut vars, &mut changed)?;
                        }
                        if let Some(s) = self.pterm_sort(rhs, &vars) {
                            self.constrain(lhs, Some(s), &mut vars, &mut changed)?;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut built_vars: HashMap<String, Variable> = HashMap::new();
        let mut literals = Vec::new();
        for l in &lits {
            match l {
                PLit::False => {}
                PLit::Atom { neg, term } => {
                    let t = self.build_term(term, &vars, &markers, &mut built_vars)?;
                    let Some(op) = t.top_op() else {
                        return Err(ParseError::Sort {
                            pos: end,
                            msg: "a variable cannot be an atom".into(),
                        });
                    };
                    if !self.is_predicate_op(op) {
                        return Err(ParseError::Sort {
                            pos: end,
                            msg: format!("`{}` is not a predicate", sym::op_name(op)),
                        });
                    }
                    let b = sym::builtins();
                    let tru = if op == b.less {
                        b.true_less
                    } else if op == b.leq {
                        b.true_leq
                    } else {
                        self.predicates[&op]
                    };
                    literals.push(Literal::new(t, Term::app(tru, vec![]), !neg));
                }
                PLit::Eq { neg, lhs, rhs } => {
                    let a = self.build_term(lhs, &vars, &markers, &mut built_vars)?;
                    let c = self.build_term(rhs, &vars, &markers, &mut built_vars)?;
                    for side in [&a, &c] {
                        if let Some(op) = side.top_op() {
                            if self.is_predicate_op(op) {
                                return Err(ParseError::Sort {
                                    pos: end,
                                    msg: "predicate atoms cannot appear in equations".into(),
                                });
                            }
                        }
                    }
                    if a.sort() != c.sort() {
                        return Err(ParseError::Sort {
                            pos: end,
                            msg: format!(
                                "equation between different sorts {} and {}",
                                sym::sort_name(a.sort()),
                                sym::sort_name(c.sort())
                            ),
                        });
                    }
                    literals.push(Literal::new(a, c, !neg));
                }
            }
        }
        Ok(Clause::new(literals))
    }
}

use crate::closure::Order;
use crate::poly::{Field, MonomialOrder};

/// Source text of a polynomial, with the column where it starts.
/// Equality ignores the position.
#[derive(Clone, Debug, Eq)]
pub struct Text {
    pub text: String,
    pub col: usize,
}

impl PartialEq for Text {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl Text {
    pub fn new(text: impl Into<String>, col: usize) -> Text {
        Text { text: text.into(), col }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealArg {
    Name(String),
    Literal(Vec<Text>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureExpr {
    Identity,
    Indiscrete,
    Radical,
    IntClosure,
    Bf,
    Vop,
    Unmixed,
    RatliffRush,
    FrobSp,
    MTimes,
    /// Frobenius closure, optionally with its own bound on `e`.
    Frob(Option<u32>),
    Stage(u32),
    Sat(IdealArg),
    ModClosure(IdealArg),
    Quotient(IdealArg),
    Colon(Text),
    Delta(Vec<IdealArg>),
    Meet(Vec<ClosureExpr>),
    Union(Vec<ClosureExpr>),
    Hull(Box<ClosureExpr>),
    Cw(Box<ClosureExpr>),
    Cf(Box<ClosureExpr>),
    Contract(String, Box<ClosureExpr>),
    /// A closure defined earlier in the session.
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Lattice(String),
    Family(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Axioms,
    Basics,
    Semiprime,
    Exhaustive,
    Star,
    Hash,
    Persistence,
    Nakayama,
    Special,
    Decomposition,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::Axioms,
        CheckKind::Basics,
        CheckKind::Semiprime,
        CheckKind::Exhaustive,
        CheckKind::Star,
        CheckKind::Hash,
        CheckKind::Persistence,
        CheckKind::Nakayama,
        CheckKind::Special,
        CheckKind::Decomposition,
    ];

    pub fn keyword(&self) -> &'static str {
        match self {
            CheckKind::Axioms => "axioms",
            CheckKind::Basics => "basics",
            CheckKind::Semiprime => "semiprime",
            CheckKind::Exhaustive => "exhaustive",
            CheckKind::Star => "star",
            CheckKind::Hash => "hash",
            CheckKind::Persistence => "persistence",
            CheckKind::Nakayama => "nakayama",
            CheckKind::Special => "special",
            CheckKind::Decomposition => "decomposition",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Spread,
    Reductions,
    Core,
}

impl ReportKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            ReportKind::Spread => "spread",
            ReportKind::Reductions => "reductions",
            ReportKind::Core => "core",
        }
    }
}

/// Optional trailing clauses of a `check` command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Clauses {
    pub along: Option<String>,
    pub by: Option<Text>,
    pub with: Option<ClosureExpr>,
    pub expect_violation: bool,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: String, field: Field, vars: Vec<String>, order: Option<MonomialOrder>, relations: Vec<Text> },
    Ideal { name: String, gens: Vec<Text>, ring: String },
    Map { name: String, source: String, target: String, images: Vec<(String, Text)> },
    Closure { name: String, expr: ClosureExpr },
    Check { kind: CheckKind, closure: ClosureExpr, target: Target, clauses: Clauses },
    Compute { closure: ClosureExpr, ideal: String },
    Member { poly: Text, closure: ClosureExpr, ideal: String },
    Report { kind: ReportKind, closure: ClosureExpr, ideal: String, ring: String },
    Census { closure: ClosureExpr, ring: String },
    Compare { left: ClosureExpr, right: ClosureExpr, target: Target, expect: Option<Order> },
}

impl Stmt {
    /// Commands produce records; the other statements only define names.
    pub fn is_command(&self) -> bool {
        !matches!(self, Stmt::Ring { .. } | Stmt::Ideal { .. } | Stmt::Map { .. } | Stmt::Closure { .. })
    }
}

/// A statement with its 1-based source position. Equality ignores the position.
#[derive(Clone, Debug, Eq)]
pub struct Statement {
    pub line: usize,
    pub col: usize,
    pub stmt: Stmt,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.stmt == other.stmt
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub statements: Vec<Statement>,
}

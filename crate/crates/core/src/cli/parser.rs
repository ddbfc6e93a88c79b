//! Session language. One statement per line, `#` starts a comment.
//!
//! ```text
//! ring R = poly(F2; x, y | x^2, x*y, y^2)
//! ring Q = poly(QQ; x, y; lex)
//! ideal I = (x, y) in R
//! map f : R -> S = [x -> x, y -> y]
//! closure c = meet(radical, sat((x)))
//! check KIND CL on lattice(R) | family(I, J) [along f] [by POLY] [with CL] [expect violation] [strict]
//! compute CL(I)
//! member POLY in CL(I)
//! report spread|reductions|core CL I in R
//! census CL on lattice(R)
//! compare CL CL on lattice(R) | family(I, J) [expect =|<=|>=|incomparable]
//! ```

use super::ast::*;
use crate::closure::Order;
use crate::error::{Error, Result};
use crate::poly::{Field, MonomialOrder};

pub fn parse_session(text: &str) -> Result<Session> {
    let mut statements = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut c = Cursor { src: line.as_bytes(), pos: 0, line: n + 1 };
        c.ws();
        if c.at_end() {
            continue;
        }
        if let Some(bad) = line.bytes().position(|b| !b.is_ascii()) {
            c.pos = bad;
            return Err(c.err("non-ASCII character"));
        }
        let col = c.pos + 1;
        let stmt = c.statement()?;
        c.ws();
        if !c.at_end() {
            return Err(c.err("unexpected trailing input"));
        }
        statements.push(Statement { line: n + 1, col, stmt });
    }
    Ok(Session { statements })
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_ident_char(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.pos + 1, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(|&b| is_ident_start(b)) {
            return Err(self.err("expected a name"));
        }
        while self.src.get(self.pos).is_some_and(|&b| is_ident_char(b)) {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let save = self.pos;
        self.ws();
        let at = self.pos;
        match self.ident() {
            Ok(w) if w == kw => Ok(()),
            _ => {
                self.pos = at;
                let e = self.err(format!("expected `{kw}`"));
                self.pos = save;
                Err(e)
            }
        }
    }

    /// Consumes `kw` if it is the next word.
    fn eat_keyword(&mut self, kw: &str) -> bool {
        let save = self.pos;
        if self.keyword(kw).is_ok() {
            true
        } else {
            self.pos = save;
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.err("expected a number")
        })
    }

    /// Raw text up to the next `,`, `)` or `]` outside brackets.
    fn text(&mut self) -> Result<Text> {
        self.ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(&b) = self.src.get(self.pos) {
            match b {
                b'(' | b'[' => depth += 1,
                b')' | b']' if depth == 0 => break,
                b')' | b']' => depth -= 1,
                b',' if depth == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        let text = String::from_utf8_lossy(&self.src[start..self.pos]).trim_end().to_string();
        if text.is_empty() {
            self.pos = start;
            return Err(self.err("expected a polynomial"));
        }
        Ok(Text::new(text, start + 1))
    }

    /// A run of non-whitespace characters.
    fn token(&mut self) -> Result<Text> {
        self.ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| !b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a polynomial"));
        }
        Ok(Text::new(String::from_utf8_lossy(&self.src[start..self.pos]), start + 1))
    }

    /// `item (, item)*` up to `close`; empty lists are allowed.
    fn list<T>(&mut self, close: &str, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn statement(&mut self) -> Result<Stmt> {
        let save = self.pos;
        let head = self.ident()?;
        match head.as_str() {
            "ring" => self.ring(),
            "ideal" => {
                let name = self.ident()?;
                self.expect("=")?;
                self.expect("(")?;
                let gens = self.list(")", Cursor::text)?;
                self.keyword("in")?;
                Ok(Stmt::Ideal { name, gens, ring: self.ident()? })
            }
            "map" => {
                let name = self.ident()?;
                self.expect(":")?;
                let source = self.ident()?;
                self.expect("->")?;
                let target = self.ident()?;
                self.expect("=")?;
                self.expect("[")?;
                let images = self.list("]", |c| {
                    let v = c.ident()?;
                    c.expect("->")?;
                    Ok((v, c.text()?))
                })?;
                Ok(Stmt::Map { name, source, target, images })
            }
            "closure" => {
                let name = self.ident()?;
                self.expect("=")?;
                Ok(Stmt::Closure { name, expr: self.expr()? })
            }
            "check" => self.check(),
            "compute" => {
                let closure = self.expr()?;
                Ok(Stmt::Compute { closure, ideal: self.applied()? })
            }
            "member" => {
                let poly = self.token()?;
                self.keyword("in")?;
                let closure = self.expr()?;
                Ok(Stmt::Member { poly, closure, ideal: self.applied()? })
            }
            "report" => {
                let kind = match self.ident()?.as_str() {
                    "spread" => ReportKind::Spread,
                    "reductions" => ReportKind::Reductions,
                    "core" => ReportKind::Core,
                    _ => return Err(self.err("expected `spread`, `reductions` or `core`")),
                };
                let closure = self.expr()?;
                let ideal = self.ident()?;
                self.keyword("in")?;
                Ok(Stmt::Report { kind, closure, ideal, ring: self.ident()? })
            }
            "census" => {
                let closure = self.expr()?;
                self.keyword("on")?;
                let Target::Lattice(ring) = self.target()? else {
                    return Err(self.err("a census runs on a lattice"));
                };
                Ok(Stmt::Census { closure, ring })
            }
            "compare" => {
                let left = self.expr()?;
                let right = self.expr()?;
                self.keyword("on")?;
                let target = self.target()?;
                let expect = if self.eat_keyword("expect") { Some(self.order()?) } else { None };
                Ok(Stmt::Compare { left, right, target, expect })
            }
            _ => {
                self.pos = save;
                self.ws();
                Err(self.err(format!("unknown statement `{head}`")))
            }
        }
    }

    /// `(NAME)` after a closure in `compute` and `member`.
    fn applied(&mut self) -> Result<String> {
        self.expect("(")?;
        let name = self.ident()?;
        self.expect(")")?;
        Ok(name)
    }

    fn ring(&mut self) -> Result<Stmt> {
        let name = self.ident()?;
        self.expect("=")?;
        self.keyword("poly")?;
        self.expect("(")?;
        self.ws();
        let at = self.pos;
        let field_name = self.ident()?;
        let field = match field_name.as_str() {
            "QQ" => Field::Rational,
            f if f.starts_with('F') => {
                let p = f[1..].parse::<u32>().ok().and_then(|p| Field::prime(p).ok());
                p.ok_or_else(|| {
                    self.pos = at;
                    self.err(format!("`{f}` is not a prime field"))
                })?
            }
            _ => {
                self.pos = at;
                return Err(self.err("expected a field, `QQ` or `F<p>`"));
            }
        };
        self.expect(";")?;
        let mut vars = vec![self.ident()?];
        while self.eat(",") {
            vars.push(self.ident()?);
        }
        let mut order = None;
        if self.eat(";") {
            order = Some(match self.ident()?.as_str() {
                "lex" => MonomialOrder::Lex,
                "grevlex" => MonomialOrder::GrevLex,
                _ => return Err(self.err("expected `lex` or `grevlex`")),
            });
        }
        let relations = if self.eat("|") {
            self.list(")", Cursor::text)?
        } else {
            self.expect(")")?;
            Vec::new()
        };
        Ok(Stmt::Ring { name, field, vars, order, relations })
    }

    fn order(&mut self) -> Result<Order> {
        self.ws();
        for (text, order) in [("<=", Order::Less), (">=", Order::Greater), ("=", Order::Equal)] {
            if self.eat(text) {
                return Ok(order);
            }
        }
        if self.eat_keyword("incomparable") {
            return Ok(Order::Incomparable);
        }
        Err(self.err("expected `=`, `<=`, `>=` or `incomparable`"))
    }

    fn target(&mut self) -> Result<Target> {
        self.ws();
        match self.ident()?.as_str() {
            "lattice" => {
                self.expect("(")?;
                let r = self.ident()?;
                self.expect(")")?;
                Ok(Target::Lattice(r))
            }
            "family" => {
                self.expect("(")?;
                Ok(Target::Family(self.list(")", Cursor::ident)?))
            }
            _ => Err(self.err("expected `lattice(..)` or `family(..)`")),
        }
    }

    fn check(&mut self) -> Result<Stmt> {
        self.ws();
        let at = self.pos;
        let word = self.ident()?;
        let Some(kind) = CheckKind::ALL.into_iter().find(|k| k.keyword() == word) else {
            self.pos = at;
            return Err(self.err(format!("unknown check `{word}`")));
        };
        let closure = self.expr()?;
        self.keyword("on")?;
        let target = self.target()?;
        let mut clauses = Clauses::default();
        loop {
            self.ws();
            if self.at_end() {
                break;
            }
            let at = self.pos;
            match self.ident()?.as_str() {
                "along" => clauses.along = Some(self.ident()?),
                "by" => clauses.by = Some(self.token()?),
                "with" => clauses.with = Some(self.expr()?),
                "expect" => {
                    self.keyword("violation")?;
                    clauses.expect_violation = true;
                }
                "strict" => clauses.strict = true,
                other => {
                    self.pos = at;
                    return Err(self.err(format!("unknown clause `{other}`")));
                }
            }
        }
        Ok(Stmt::Check { kind, closure, target, clauses })
    }

    fn ideal_arg(&mut self) -> Result<IdealArg> {
        if self.eat("(") {
            Ok(IdealArg::Literal(self.list(")", Cursor::text)?))
        } else {
            Ok(IdealArg::Name(self.ident()?))
        }
    }

    fn unary(&mut self) -> Result<Box<ClosureExpr>> {
        self.expect("(")?;
        let e = self.expr()?;
        self.expect(")")?;
        Ok(Box::new(e))
    }

    fn expr(&mut self) -> Result<ClosureExpr> {
        let name = self.ident()?;
        Ok(match name.as_str() {
            "identity" => ClosureExpr::Identity,
            "indiscrete" => ClosureExpr::Indiscrete,
            "radical" => ClosureExpr::Radical,
            "intclosure" => ClosureExpr::IntClosure,
            "bf" => ClosureExpr::Bf,
            "vop" => ClosureExpr::Vop,
            "unmixed" => ClosureExpr::Unmixed,
            "ratliffrush" => ClosureExpr::RatliffRush,
            "frobsp" => ClosureExpr::FrobSp,
            "mtimes" => ClosureExpr::MTimes,
            "frob" => {
                // `frob(3)` bounds e; `frob(I)` in `compute` is an application
                let save = self.pos;
                if self.eat("(") && self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    let e = self.number()?;
                    self.expect(")")?;
                    ClosureExpr::Frob(Some(e))
                } else {
                    self.pos = save;
                    ClosureExpr::Frob(None)
                }
            }
            "stage" => {
                self.expect("(")?;
                let e = self.number()?;
                self.expect(")")?;
                ClosureExpr::Stage(e)
            }
            "sat" | "modclosure" | "quotient" => {
                self.expect("(")?;
                let a = self.ideal_arg()?;
                self.expect(")")?;
                match name.as_str() {
                    "sat" => ClosureExpr::Sat(a),
                    "modclosure" => ClosureExpr::ModClosure(a),
                    _ => ClosureExpr::Quotient(a),
                }
            }
            "colon" => {
                self.expect("(")?;
                let f = self.text()?;
                self.expect(")")?;
                ClosureExpr::Colon(f)
            }
            "delta" => {
                self.expect("[")?;
                let gens = self.list("]", Cursor::ideal_arg)?;
                if gens.is_empty() {
                    return Err(self.err("delta needs at least one ideal"));
                }
                ClosureExpr::Delta(gens)
            }
            "meet" | "union" => {
                self.expect("(")?;
                let parts = self.list(")", Cursor::expr)?;
                if name == "meet" {
                    ClosureExpr::Meet(parts)
                } else {
                    ClosureExpr::Union(parts)
                }
            }
            "hull" => ClosureExpr::Hull(self.unary()?),
            "cw" => ClosureExpr::Cw(self.unary()?),
            "cf" => ClosureExpr::Cf(self.unary()?),
            "contract" => {
                self.expect("(")?;
                let map = self.ident()?;
                self.expect(",")?;
                let inner = self.expr()?;
                self.expect(")")?;
                ClosureExpr::Contract(map, Box::new(inner))
            }
            _ => ClosureExpr::Ref(name),
        })
    }
}

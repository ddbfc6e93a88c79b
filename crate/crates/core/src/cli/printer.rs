//! Canonical text for sessions. Printing and re-parsing gives an equal session.

use std::fmt;

use super::ast::*;
use crate::poly::MonomialOrder;

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl fmt::Display for IdealArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealArg::Name(n) => f.write_str(n),
            IdealArg::Literal(gens) => write!(f, "({})", join(gens)),
        }
    }
}

impl fmt::Display for ClosureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ClosureExpr::*;
        match self {
            Identity => f.write_str("identity"),
            Indiscrete => f.write_str("indiscrete"),
            Radical => f.write_str("radical"),
            IntClosure => f.write_str("intclosure"),
            Bf => f.write_str("bf"),
            Vop => f.write_str("vop"),
            Unmixed => f.write_str("unmixed"),
            RatliffRush => f.write_str("ratliffrush"),
            FrobSp => f.write_str("frobsp"),
            MTimes => f.write_str("mtimes"),
            Frob(None) => f.write_str("frob"),
            Frob(Some(e)) => write!(f, "frob({e})"),
            Stage(e) => write!(f, "stage({e})"),
            Sat(a) => write!(f, "sat({a})"),
            ModClosure(a) => write!(f, "modclosure({a})"),
            Quotient(a) => write!(f, "quotient({a})"),
            Colon(p) => write!(f, "colon({p})"),
            Delta(gens) => write!(f, "delta[{}]", join(gens)),
            Meet(parts) => write!(f, "meet({})", join(parts)),
            Union(parts) => write!(f, "union({})", join(parts)),
            Hull(d) => write!(f, "hull({d})"),
            Cw(c) => write!(f, "cw({c})"),
            Cf(c) => write!(f, "cf({c})"),
            Contract(m, c) => write!(f, "contract({m}, {c})"),
            Ref(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Lattice(r) => write!(f, "lattice({r})"),
            Target::Family(names) => write!(f, "family({})", names.join(", ")),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring { name, field, vars, order, relations } => {
                write!(f, "ring {name} = poly({field}; {}", vars.join(", "))?;
                match order {
                    Some(MonomialOrder::Lex) => f.write_str("; lex")?,
                    Some(MonomialOrder::GrevLex) => f.write_str("; grevlex")?,
                    _ => {}
                }
                if !relations.is_empty() {
                    write!(f, " | {}", join(relations))?;
                }
                f.write_str(")")
            }
            Stmt::Ideal { name, gens, ring } => write!(f, "ideal {name} = ({}) in {ring}", join(gens)),
            Stmt::Map { name, source, target, images } => {
                let images: Vec<String> = images.iter().map(|(v, t)| format!("{v} -> {t}")).collect();
                write!(f, "map {name} : {source} -> {target} = [{}]", images.join(", "))
            }
            Stmt::Closure { name, expr } => write!(f, "closure {name} = {expr}"),
            Stmt::Check { kind, closure, target, clauses } => {
                write!(f, "check {} {closure} on {target}", kind.keyword())?;
                if let Some(m) = &clauses.along {
                    write!(f, " along {m}")?;
                }
                if let Some(p) = &clauses.by {
                    write!(f, " by {p}")?;
                }
                if let Some(w) = &clauses.with {
                    write!(f, " with {w}")?;
                }
                if clauses.expect_violation {
                    f.write_str(" expect violation")?;
                }
                if clauses.strict {
                    f.write_str(" strict")?;
                }
                Ok(())
            }
            Stmt::Compute { closure, ideal } => write!(f, "compute {closure}({ideal})"),
            Stmt::Member { poly, closure, ideal } => write!(f, "member {poly} in {closure}({ideal})"),
            Stmt::Report { kind, closure, ideal, ring } => {
                write!(f, "report {} {closure} {ideal} in {ring}", kind.keyword())
            }
            Stmt::Census { closure, ring } => write!(f, "census {closure} on lattice({ring})"),
            Stmt::Compare { left, right, target, expect } => {
                write!(f, "compare {left} {right} on {target}")?;
                match expect {
                    Some(o) => write!(f, " expect {o}"),
                    None => Ok(()),
                }
            }
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.stmt)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_session;

    #[test]
    fn printing_round_trips() {
        let text = "ring R = poly(F3;x,y|x^2,  y^3)\nring Q = poly(QQ; a; lex)\nideal I = (x , y) in R\n\
                    map f : R -> R = [x -> x, y -> x+y]\n\
                    closure c = meet(hull(colon(x)), delta[(x, y), I], cw(vop), cf(union(frob(2), stage(1))))\n\
                    check hash c on family(I) by x+1 with frobsp expect violation strict\n\
                    member x*y in contract(f, intclosure)(I)\nreport core frob I in R\n\
                    census quotient((x)) on lattice(R)\ncompare c bf on lattice(R) expect incomparable\ncompute sat(I)(I)\n";
        let s = parse_session(text).unwrap();
        let printed = s.to_string();
        let again = parse_session(&printed).unwrap();
        assert_eq!(s, again);
        assert_eq!(printed, again.to_string());
    }
}

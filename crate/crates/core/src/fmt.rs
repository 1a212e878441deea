// Textual form of programs, matching the input grammar of the command-line
// front end:
//
//   a | b :- c, not d, not not e, K f, not K not g.
//   {a} :- b.
//   :- K g.
//   #false.

use core::fmt::{self, Display, Formatter, Write};

use crate::atom::SymbolTable;
use crate::program::{Constant, Literal, Negation, ObjLiteral, Program, Rule, Term};

fn write_negation(f: &mut Formatter<'_>, neg: Negation) -> fmt::Result {
    for _ in 0..neg.depth() {
        f.write_str("not ")?;
    }
    Ok(())
}

fn write_obj(f: &mut Formatter<'_>, l: &ObjLiteral, symbols: &SymbolTable) -> fmt::Result {
    write_negation(f, l.neg)?;
    match l.term {
        Term::Atom(a) => f.write_str(symbols.name(a)),
        Term::Const(Constant::Top) => f.write_str("#true"),
        Term::Const(Constant::Bot) => f.write_str("#false"),
    }
}

fn write_literal(f: &mut Formatter<'_>, l: &Literal, symbols: &SymbolTable) -> fmt::Result {
    match l {
        Literal::Obj(o) => write_obj(f, o, symbols),
        Literal::Subj(s) => {
            write_negation(f, s.neg)?;
            f.write_str("K ")?;
            write_obj(f, &s.inner, symbols)
        }
    }
}

/// Borrowing adapter that prints a rule with names from a symbol table.
pub struct RuleDisplay<'a> {
    rule: &'a Rule,
    symbols: &'a SymbolTable,
}

impl Rule {
    pub fn display<'a>(&'a self, symbols: &'a SymbolTable) -> RuleDisplay<'a> {
        RuleDisplay { rule: self, symbols }
    }
}

impl Display for RuleDisplay<'_> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let r = self.rule;
        let body = r.choice_body();
        if r.choice {
            write!(f, "{{{}}}", self.symbols.name(r.head[0]))?;
        } else if r.head.is_empty() {
            if body.is_empty() {
                return f.write_str("#false.");
            }
        } else {
            for (i, a) in r.head.iter().enumerate() {
                if i > 0 {
                    f.write_str(" | ")?;
                }
                f.write_str(self.symbols.name(*a))?;
            }
        }
        if !body.is_empty() {
            if r.head.is_empty() {
                f.write_str(":- ")?;
            } else {
                f.write_str(" :- ")?;
            }
            for (i, l) in body.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write_literal(f, l, self.symbols)?;
            }
        }
        f.write_char('.')
    }
}

impl Display for Program {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for r in self.rules() {
            writeln!(f, "{}", r.display(self.symbols()))?;
        }
        Ok(())
    }
}

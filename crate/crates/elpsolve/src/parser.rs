//! Reader for the textual program format.
//!
//! ```text
//! program   := { rule } ;
//! rule      := ( head [ ":-" body ] | ":-" body ) "." ;
//! head      := atomlist | "{" atom "}" | "#false" ;
//! atomlist  := atom { ("|" | ";") atom } ;
//! body      := literal { "," literal } ;
//! literal   := [ "not" [ "not" ] ] ( atom | "#true" | "#false" | subj ) ;
//! subj      := "K" [ "not" [ "not" ] ] ( atom | "#true" | "#false" ) ;
//! ```
//!
//! Atoms are lower-case identifiers, optionally followed by a tuple of
//! ground terms such as `d(1,x)`. `%` starts a comment. After parsing,
//! constants are folded away and the symbol table only keeps atoms that
//! still occur, in order of first occurrence.

use std::fmt;

use elp_core::atom::is_reserved;
use elp_core::fold::fold_constants;
use elp_core::{
    AtomId, Constant, Literal, Negation, ObjLiteral, Program, Rule, SubjLiteral, SymbolTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    ReservedPrefix,
    ChoiceHeadWidth,
    DuplicateRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub severity: Severity,
    pub kind: DiagnosticKind,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {level}: {}", self.line, self.column, self.message)
    }
}

/// A parsed program and the warnings it produced.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub program: Program,
    pub warnings: Vec<ParseDiagnostic>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    K,
    Not,
    True,
    False,
    If,
    Dot,
    Comma,
    Or,
    LBrace,
    RBrace,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Atom(a) => write!(f, "atom `{a}`"),
            Tok::K => f.write_str("`K`"),
            Tok::Not => f.write_str("`not`"),
            Tok::True => f.write_str("`#true`"),
            Tok::False => f.write_str("`#false`"),
            Tok::If => f.write_str("`:-`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Or => f.write_str("`|`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
    line: usize,
    column: usize,
}

type Spanned = (Tok, Pos);

fn error(pos: Pos, kind: DiagnosticKind, message: impl Into<String>) -> ParseDiagnostic {
    ParseDiagnostic { line: pos.line, column: pos.column, message: message.into(), severity: Severity::Error, kind }
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self { chars: text.char_indices().peekable(), text, line: 1, column: 1 }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn offset(&mut self) -> usize {
        self.chars.peek().map_or(self.text.len(), |&(i, _)| i)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c == '%' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn word(&mut self) -> &'a str {
        let start = self.offset();
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        let end = self.offset();
        &self.text[start..end]
    }

    /// A ground term inside an atom's argument tuple, appended to `out`
    /// without whitespace.
    fn term(&mut self, out: &mut String) -> Result<(), ParseDiagnostic> {
        self.skip_trivia();
        let pos = self.pos();
        match self.peek() {
            Some('"') => {
                out.push(self.bump().unwrap_or('"'));
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\n') | None => {
                            return Err(error(pos, DiagnosticKind::Syntax, "unterminated string"));
                        }
                        Some(c) => out.push(c),
                    }
                }
                out.push('"');
            }
            Some('-') => {
                self.bump();
                out.push('-');
                if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(error(pos, DiagnosticKind::Syntax, "expected a number after `-`"));
                }
                out.push_str(self.word());
            }
            Some(c) if c.is_ascii_digit() => out.push_str(self.word()),
            Some(c) if c.is_ascii_lowercase() => {
                out.push_str(self.word());
                if self.peek() == Some('(') {
                    self.tuple(out)?;
                }
            }
            Some(c) if c.is_ascii_uppercase() || c == '_' => {
                return Err(error(pos, DiagnosticKind::Syntax, "variables are not supported; input must be ground"));
            }
            _ => return Err(error(pos, DiagnosticKind::Syntax, "expected a term")),
        }
        Ok(())
    }

    fn tuple(&mut self, out: &mut String) -> Result<(), ParseDiagnostic> {
        self.bump();
        out.push('(');
        loop {
            self.term(out)?;
            self.skip_trivia();
            let pos = self.pos();
            match self.bump() {
                Some(',') => out.push(','),
                Some(')') => {
                    out.push(')');
                    return Ok(());
                }
                _ => return Err(error(pos, DiagnosticKind::Syntax, "expected `,` or `)` in argument list")),
            }
        }
    }

    fn next(&mut self) -> Result<Spanned, ParseDiagnostic> {
        self.skip_trivia();
        let pos = self.pos();
        let Some(c) = self.peek() else {
            return Ok((Tok::Eof, pos));
        };
        let single = |tok| Ok((tok, pos));
        match c {
            '.' => {
                self.bump();
                single(Tok::Dot)
            }
            ',' => {
                self.bump();
                single(Tok::Comma)
            }
            '|' | ';' => {
                self.bump();
                single(Tok::Or)
            }
            '{' => {
                self.bump();
                single(Tok::LBrace)
            }
            '}' => {
                self.bump();
                single(Tok::RBrace)
            }
            ':' => {
                self.bump();
                if self.peek() == Some('-') {
                    self.bump();
                    single(Tok::If)
                } else {
                    Err(error(pos, DiagnosticKind::Syntax, "expected `:-`"))
                }
            }
            '#' => {
                self.bump();
                match self.word() {
                    "true" => single(Tok::True),
                    "false" => single(Tok::False),
                    w => Err(error(pos, DiagnosticKind::Syntax, format!("unknown directive `#{w}`"))),
                }
            }
            c if c.is_ascii_lowercase() => {
                let w = self.word();
                if w == "not" {
                    return single(Tok::Not);
                }
                let mut name = w.to_string();
                if self.peek() == Some('(') {
                    self.tuple(&mut name)?;
                }
                single(Tok::Atom(name))
            }
            c if c.is_ascii_uppercase() || c == '_' => {
                let w = self.word();
                if w == "K" {
                    single(Tok::K)
                } else {
                    Err(error(pos, DiagnosticKind::Syntax, format!("`{w}` is not an atom; input must be ground")))
                }
            }
            c => {
                self.bump();
                Err(error(pos, DiagnosticKind::Syntax, format!("unexpected character `{c}`")))
            }
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Spanned,
    symbols: SymbolTable,
}

#[derive(Clone, Copy)]
enum Head {
    Atoms,
    Choice,
    Constraint,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseDiagnostic> {
        let mut lexer = Lexer::new(text);
        let tok = lexer.next()?;
        Ok(Self { lexer, tok, symbols: SymbolTable::new() })
    }

    fn advance(&mut self) -> Result<Spanned, ParseDiagnostic> {
        let next = self.lexer.next()?;
        Ok(std::mem::replace(&mut self.tok, next))
    }

    fn unexpected(&self, wanted: &str) -> ParseDiagnostic {
        error(self.tok.1, DiagnosticKind::Syntax, format!("expected {wanted}, found {}", self.tok.0))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseDiagnostic> {
        if self.tok.0 == tok {
            self.advance()?;
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn intern(&mut self, name: &str, pos: Pos) -> Result<AtomId, ParseDiagnostic> {
        let base = name.split('(').next().unwrap_or(name);
        if is_reserved(base) {
            return Err(error(
                pos,
                DiagnosticKind::ReservedPrefix,
                format!("atom `{name}` uses a reserved prefix (k_, kp_, kpn_, not1_, not2_)"),
            ));
        }
        self.symbols.user(name).map_err(|e| error(pos, DiagnosticKind::ReservedPrefix, e.to_string()))
    }

    fn atom(&mut self) -> Result<AtomId, ParseDiagnostic> {
        match self.tok.clone() {
            (Tok::Atom(name), pos) => {
                self.advance()?;
                self.intern(&name, pos)
            }
            _ => Err(self.unexpected("an atom")),
        }
    }

    fn negations(&mut self) -> Result<Negation, ParseDiagnostic> {
        let mut depth = 0u8;
        while self.tok.0 == Tok::Not {
            if depth == 2 {
                return Err(error(self.tok.1, DiagnosticKind::Syntax, "at most two `not` may precede a literal"));
            }
            depth += 1;
            self.advance()?;
        }
        Ok(Negation::from_depth(depth).expect("depth checked"))
    }

    fn objective(&mut self, neg: Negation) -> Result<ObjLiteral, ParseDiagnostic> {
        let lit = match self.tok.0 {
            Tok::True => ObjLiteral::constant(Constant::Top, neg),
            Tok::False => ObjLiteral::constant(Constant::Bot, neg),
            Tok::Atom(_) => {
                let a = self.atom()?;
                return Ok(ObjLiteral { neg, ..ObjLiteral::atom(a) });
            }
            _ => return Err(self.unexpected("an atom, `#true` or `#false`")),
        };
        self.advance()?;
        Ok(lit)
    }

    fn literal(&mut self) -> Result<Literal, ParseDiagnostic> {
        let outer = self.negations()?;
        if self.tok.0 == Tok::K {
            self.advance()?;
            let inner = self.negations()?;
            let inner = self.objective(inner)?;
            Ok(SubjLiteral::new(inner, outer).into())
        } else {
            Ok(self.objective(outer)?.into())
        }
    }

    fn body(&mut self) -> Result<Vec<Literal>, ParseDiagnostic> {
        let mut body = vec![self.literal()?];
        while self.tok.0 == Tok::Comma {
            self.advance()?;
            body.push(self.literal()?);
        }
        Ok(body)
    }

    fn rule(&mut self) -> Result<(Rule, Pos), ParseDiagnostic> {
        let start = self.tok.1;
        let mut head = Vec::new();
        let kind = match self.tok.0 {
            Tok::If => Head::Constraint,
            Tok::False => {
                self.advance()?;
                Head::Constraint
            }
            Tok::LBrace => {
                self.advance()?;
                head.push(self.atom()?);
                if matches!(self.tok.0, Tok::Or | Tok::Comma) {
                    return Err(error(
                        self.tok.1,
                        DiagnosticKind::ChoiceHeadWidth,
                        "a choice rule has exactly one head atom",
                    ));
                }
                self.expect(Tok::RBrace, "`}`")?;
                Head::Choice
            }
            Tok::Atom(_) => {
                head.push(self.atom()?);
                while self.tok.0 == Tok::Or {
                    self.advance()?;
                    let a = self.atom()?;
                    if !head.contains(&a) {
                        head.push(a);
                    }
                }
                Head::Atoms
            }
            _ => return Err(self.unexpected("a rule")),
        };
        let body = if self.tok.0 == Tok::If {
            self.advance()?;
            self.body()?
        } else if self.tok.0 == Tok::Dot {
            Vec::new()
        } else {
            return Err(self.unexpected("`:-` or `.`"));
        };
        self.expect(Tok::Dot, "`.`")?;
        let rule = match kind {
            Head::Choice => Rule::choice(head[0], body),
            Head::Atoms | Head::Constraint => Rule::new(head, body),
        };
        Ok((rule, start))
    }

    /// Skips to just after the next `.` so parsing can resume.
    fn recover(&mut self) {
        loop {
            match self.advance() {
                Ok((Tok::Dot | Tok::Eof, _)) => return,
                Ok(_) => {}
                Err(_) => {
                    if self.lexer.peek().is_none() {
                        self.tok = (Tok::Eof, self.lexer.pos());
                        return;
                    }
                }
            }
        }
    }
}

/// Rebuilds `program` over a fresh table holding only the atoms that occur
/// in it, in order of first occurrence.
fn compact(program: &Program) -> Program {
    let old = program.symbols();
    let mut symbols = SymbolTable::new();
    let map = |a: AtomId, symbols: &mut SymbolTable| symbols.user(old.name(a)).expect("names were valid");
    let rules = program
        .rules()
        .iter()
        .map(|r| {
            let head = r.head.iter().map(|&a| map(a, &mut symbols)).collect();
            let body = r
                .body
                .iter()
                .map(|l| {
                    let obj = |o: ObjLiteral, symbols: &mut SymbolTable| match o.as_atom() {
                        Some(a) => ObjLiteral { neg: o.neg, ..ObjLiteral::atom(map(a, symbols)) },
                        None => o,
                    };
                    match *l {
                        Literal::Obj(o) => obj(o, &mut symbols).into(),
                        Literal::Subj(s) => SubjLiteral::new(obj(s.inner, &mut symbols), s.neg).into(),
                    }
                })
                .collect();
            Rule { head, body, choice: r.choice }
        })
        .collect();
    Program::with_rules(symbols, rules)
}

/// Parses a whole program. On failure every error found is returned, one
/// per malformed rule.
pub fn parse_program(text: &str) -> Result<Parsed, Vec<ParseDiagnostic>> {
    let mut parser = Parser::new(text).map_err(|e| vec![e])?;
    let mut rules: Vec<(Rule, Pos)> = Vec::new();
    let mut errors = Vec::new();
    while parser.tok.0 != Tok::Eof {
        match parser.rule() {
            Ok(r) => rules.push(r),
            Err(e) => {
                errors.push(e);
                parser.recover();
            }
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let mut warnings = Vec::new();
    for (i, (r, pos)) in rules.iter().enumerate() {
        if rules[..i].iter().any(|(s, _)| s == r) {
            warnings.push(ParseDiagnostic {
                line: pos.line,
                column: pos.column,
                message: "duplicate rule".into(),
                severity: Severity::Warning,
                kind: DiagnosticKind::DuplicateRule,
            });
        }
    }
    let program = Program::with_rules(parser.symbols, rules.into_iter().map(|(r, _)| r).collect());
    Ok(Parsed { program: compact(&fold_constants(&program)), warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Program {
        parse_program(text).unwrap().program
    }

    fn errors(text: &str) -> Vec<ParseDiagnostic> {
        parse_program(text).unwrap_err()
    }

    #[test]
    fn program_one() {
        let p = parse("b :- K a.");
        assert_eq!(p.to_string(), "b :- K a.\n");
        let b = p.symbols().lookup("b").unwrap();
        let a = p.symbols().lookup("a").unwrap();
        assert_eq!(p.rules(), [Rule::new(vec![b], vec![SubjLiteral::k(a, Negation::None).into()])]);
    }

    #[test]
    fn negation_inside_k() {
        let p = parse("a :- not K not a.");
        assert!(!p.is_normal_form());
        assert_eq!(p.to_string(), "a :- not K not a.\n");
    }

    #[test]
    fn reserved_prefix() {
        let e = errors("k_x :- a.");
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].kind, DiagnosticKind::ReservedPrefix);
        assert_eq!((e[0].line, e[0].column), (1, 1));
        assert_eq!(errors("a :- not not2_b(1).")[0].kind, DiagnosticKind::ReservedPrefix);
    }

    #[test]
    fn choice_width() {
        let e = errors("{a, b}.");
        assert_eq!(e[0].kind, DiagnosticKind::ChoiceHeadWidth);
        assert_eq!(errors("{a | b}.")[0].kind, DiagnosticKind::ChoiceHeadWidth);
    }

    #[test]
    fn choice_is_desugared() {
        let p = parse("{a} :- b.");
        let a = p.symbols().lookup("a").unwrap();
        let b = p.symbols().lookup("b").unwrap();
        assert_eq!(p.rules()[0].body, [ObjLiteral::atom(b).into(), ObjLiteral::not_not(a).into()]);
        assert!(p.rules()[0].choice);
    }

    #[test]
    fn every_rule_shape() {
        let text = "% comment\n\
                    a | b; c.\n\
                    d(1,x) :- not a, not not b, K c, not K not d(1,x), not not K not not a.\n\
                    :- K d(1,x).\n\
                    #false :- a.\n\
                    {e}.\n";
        assert_eq!(
            parse(text).to_string(),
            "a | b | c.\n\
             d(1,x) :- not a, not not b, K c, not K not d(1,x), not not K not not a.\n\
             :- K d(1,x).\n\
             :- a.\n\
             {e}.\n"
        );
    }

    #[test]
    fn constants_are_folded() {
        assert_eq!(parse("a :- #true, b.").to_string(), "a :- b.\n");
        assert_eq!(parse("a :- K #false.").to_string(), "");
        assert_eq!(parse("a :- not K #true.").to_string(), "");
        assert_eq!(parse("a :- not #false.").to_string(), "a.\n");
        assert_eq!(parse("#false.").to_string(), "#false.\n");
        // c only occurred in the dropped rule
        let p = parse("a :- b. c :- #false.");
        assert!(p.symbols().lookup("c").is_none());
    }

    #[test]
    fn tuples_are_normalized() {
        let p = parse("p( 1 , f(x, \"s t\"), -2 ).");
        assert_eq!(p.to_string(), "p(1,f(x,\"s t\"),-2).\n");
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = errors("a :- b\nc.");
        assert_eq!(e.len(), 1);
        assert_eq!((e[0].line, e[0].column), (2, 1));
        let e = errors("a :- X.");
        assert_eq!((e[0].line, e[0].column), (1, 6));
        let e = errors("a :- not not not b.");
        assert_eq!(e[0].column, 14);
        assert!(errors("a :- .").len() == 1);
    }

    #[test]
    fn errors_are_collected_per_rule() {
        let e = errors("a :- . b :- K . c.\nk_d.");
        assert_eq!(e.len(), 3);
        assert_eq!(e[2].kind, DiagnosticKind::ReservedPrefix);
        assert_eq!(e[2].line, 2);
    }

    #[test]
    fn duplicate_rules_warn() {
        let parsed = parse_program("a :- b.\nc.\na :- b.").unwrap();
        assert_eq!(parsed.warnings.len(), 1);
        assert_eq!(parsed.warnings[0].line, 3);
        assert_eq!(parsed.warnings[0].severity, Severity::Warning);
        assert_eq!(parsed.program.len(), 3);
    }

    #[test]
    fn empty_input() {
        assert!(parse("").is_empty());
        assert!(parse("  % nothing\n").is_empty());
    }
}

//! S-expression reader and printer for the file formats.
//!
//! Atoms are symbols, naturals, or double-quoted strings; `;` starts a line
//! comment.  Every node remembers the line and column it started on, so the
//! loaders above this layer can point at the offending clause.  The printer
//! emits the canonical spelling: reading its output back yields the same
//! tree, and printing a freshly read canonical file reproduces it byte for
//! byte.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SExpr {
    pub line: usize,
    pub col: usize,
    pub kind: SExprKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SExprKind {
    Sym(String),
    Nat(usize),
    Str(String),
    List(Vec<SExpr>),
}

/// Trees compare by content; where they were read from does not matter.
impl PartialEq for SExpr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for SExpr {}

impl SExpr {
    pub fn sym(name: impl Into<String>) -> SExpr {
        SExpr { line: 0, col: 0, kind: SExprKind::Sym(name.into()) }
    }

    pub fn nat(n: usize) -> SExpr {
        SExpr { line: 0, col: 0, kind: SExprKind::Nat(n) }
    }

    pub fn str(text: impl Into<String>) -> SExpr {
        SExpr { line: 0, col: 0, kind: SExprKind::Str(text.into()) }
    }

    pub fn list(items: Vec<SExpr>) -> SExpr {
        SExpr { line: 0, col: 0, kind: SExprKind::List(items) }
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    pub fn as_sym(&self) -> Result<&str> {
        match &self.kind {
            SExprKind::Sym(s) => Ok(s),
            other => Err(self.err(format!("expected a symbol, found {}", brief(other)))),
        }
    }

    pub fn as_nat(&self) -> Result<usize> {
        match &self.kind {
            SExprKind::Nat(n) => Ok(*n),
            other => Err(self.err(format!("expected a natural number, found {}", brief(other)))),
        }
    }

    /// Symbols and strings both serve as names; naturals do not.
    pub fn as_name(&self) -> Result<&str> {
        match &self.kind {
            SExprKind::Sym(s) | SExprKind::Str(s) => Ok(s),
            other => Err(self.err(format!("expected a name, found {}", brief(other)))),
        }
    }

    pub fn as_list(&self) -> Result<&[SExpr]> {
        match &self.kind {
            SExprKind::List(items) => Ok(items),
            other => Err(self.err(format!("expected a list, found {}", brief(other)))),
        }
    }

    /// The head symbol of a list form, e.g. `gen1` in `(gen1 u 2 1)`.
    pub fn head(&self) -> Result<&str> {
        let items = self.as_list()?;
        match items.first() {
            Some(first) => first.as_sym(),
            None => Err(self.err("expected a non-empty list")),
        }
    }

    /// The elements after the head.
    pub fn tail(&self) -> Result<&[SExpr]> {
        Ok(&self.as_list()?[1..])
    }

    /// Like `tail`, but insists on an exact argument count.
    pub fn args(&self, n: usize) -> Result<&[SExpr]> {
        let tail = self.tail()?;
        if tail.len() != n {
            return Err(self.err(format!(
                "({} ...) takes {} argument{}, found {}",
                self.head()?,
                n,
                if n == 1 { "" } else { "s" },
                tail.len()
            )));
        }
        Ok(tail)
    }
}

fn brief(kind: &SExprKind) -> String {
    match kind {
        SExprKind::Sym(s) => format!("the symbol {s}"),
        SExprKind::Nat(n) => format!("the number {n}"),
        SExprKind::Str(s) => format!("the string {s:?}"),
        SExprKind::List(_) => "a list".into(),
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn fail(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn form(&mut self) -> Result<SExpr> {
        self.skip_blank();
        let (line, col) = (self.line, self.col);
        let kind = match self.chars.peek() {
            None => return Err(self.fail("unexpected end of input")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match self.chars.peek() {
                        Some(')') => {
                            self.bump();
                            break;
                        }
                        None => {
                            return Err(Error::Parse {
                                line,
                                col,
                                msg: "unclosed parenthesis".into(),
                            })
                        }
                        Some(_) => items.push(self.form()?),
                    }
                }
                SExprKind::List(items)
            }
            Some(')') => return Err(self.fail("unmatched closing parenthesis")),
            Some('"') => SExprKind::Str(self.string()?),
            Some(_) => self.atom()?,
        };
        Ok(SExpr { line, col, kind })
    }

    fn string(&mut self) -> Result<String> {
        self.bump();
        let mut out = String::new();
        loop {
            match self.bump() {
                None => return Err(self.fail("unterminated string")),
                Some('"') => return Ok(out),
                Some('\\') => match self.bump() {
                    Some('"') => out.push('"'),
                    Some('\\') => out.push('\\'),
                    Some('n') => out.push('\n'),
                    Some('t') => out.push('\t'),
                    other => {
                        return Err(self.fail(format!("unknown string escape {other:?}")))
                    }
                },
                Some(c) => out.push(c),
            }
        }
    }

    fn atom(&mut self) -> Result<SExprKind> {
        let mut word = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';') {
                break;
            }
            word.push(c);
            self.bump();
        }
        if word.chars().all(|c| c.is_ascii_digit()) {
            return match word.parse::<usize>() {
                Ok(n) => Ok(SExprKind::Nat(n)),
                Err(_) => Err(self.fail(format!("number {word} is out of range"))),
            };
        }
        Ok(SExprKind::Sym(word))
    }
}

/// Reads exactly one form; trailing whitespace and comments are fine,
/// anything else is an error.
pub fn parse(text: &str) -> Result<SExpr> {
    let mut reader = Reader::new(text);
    let form = reader.form()?;
    reader.skip_blank();
    if reader.chars.peek().is_some() {
        return Err(reader.fail("trailing input after the first form"));
    }
    Ok(form)
}

/// Single-line spelling with one space between siblings.
pub fn print_compact(expr: &SExpr) -> String {
    let mut out = String::new();
    write_compact(expr, &mut out);
    out
}

fn write_compact(expr: &SExpr, out: &mut String) {
    match &expr.kind {
        SExprKind::Sym(s) => out.push_str(s),
        SExprKind::Nat(n) => out.push_str(&n.to_string()),
        SExprKind::Str(s) => {
            out.push('"');
            for c in s.chars() {
                match c {
                    '"' => out.push_str("\\\""),
                    '\\' => out.push_str("\\\\"),
                    '\n' => out.push_str("\\n"),
                    '\t' => out.push_str("\\t"),
                    c => out.push(c),
                }
            }
            out.push('"');
        }
        SExprKind::List(items) => {
            out.push('(');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write_compact(item, out);
            }
            out.push(')');
        }
    }
}

/// Two-level layout used for whole files: the head line carries the form
/// name and any leading atoms, every list clause then gets its own indented
/// line.  Nested clauses stay compact.
pub fn print_clauses(expr: &SExpr) -> String {
    let items = match &expr.kind {
        SExprKind::List(items) if items.iter().any(|i| matches!(i.kind, SExprKind::List(_))) => {
            items
        }
        _ => return format!("{}\n", print_compact(expr)),
    };
    let mut out = String::from("(");
    let mut on_head_line = true;
    for (i, item) in items.iter().enumerate() {
        match &item.kind {
            SExprKind::List(_) => {
                out.push_str("\n  ");
                out.push_str(&print_compact(item));
                on_head_line = false;
            }
            _ => {
                if i > 0 && on_head_line {
                    out.push(' ');
                }
                out.push_str(&print_compact(item));
            }
        }
    }
    out.push_str(")\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reading_the_printed_form_gives_the_same_tree() {
        let expr = SExpr::list(vec![
            SExpr::sym("theory"),
            SExpr::sym("Bin"),
            SExpr::list(vec![SExpr::sym("gen1"), SExpr::sym("tensor"), SExpr::nat(2), SExpr::nat(1)]),
            SExpr::str("a \"quoted\"\nvalue"),
        ]);
        let text = print_compact(&expr);
        let back = parse(&text).unwrap();
        assert_eq!(back.kind, expr.kind);
        assert_eq!(print_compact(&back), text);
    }

    #[test]
    fn printing_a_parsed_clause_file_reproduces_it() {
        let text = "(theory Bin\n  (gen1 tensor 2 1)\n  (rel1 (gen tensor) (gen tensor)))\n";
        let expr = parse(text).unwrap();
        assert_eq!(print_clauses(&expr), text);
    }

    #[test]
    fn errors_carry_the_position_of_the_problem() {
        let err = parse("(a\n  (b !ok\n").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!((line, col), (2, 3));
            }
            other => panic!("expected a parse error, got {other}"),
        }
        let err = parse("(a) (b)").unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (1, 5));
                assert!(msg.contains("trailing"));
            }
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn comments_and_strings_tokenize() {
        let expr = parse("; heading\n(a 12 \"x;y\" b) ; trailing\n").unwrap();
        let items = expr.as_list().unwrap();
        assert_eq!(items.len(), 4);
        assert_eq!(items[1].as_nat().unwrap(), 12);
        assert_eq!(items[2].as_name().unwrap(), "x;y");
        assert_eq!(items[3].as_sym().unwrap(), "b");
    }
}

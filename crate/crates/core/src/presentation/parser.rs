//! Lexer and recursive-descent parser for the `.alg` description language.
//!
//! ```text
//! algebra L { vertices: 1, 2, 3; arrows: a:1->2, b:2->3; relations: a*b; }
//! extension E { base: L; total: G; map: a => a; }
//! let T = P(1) + P(2) + S(3);
//! ```
//!
//! Syntax errors and the semantic checks that only need the text (duplicate
//! names, dangling vertices, relation shape) are reported with a position.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl ParseError {
    fn at(pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError { pos, message: message.into(), expected: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Number(u64),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Number(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

const SYMBOLS: [&str; 14] = ["->", "=>", "{", "}", ":", ";", ",", "*", "+", "-", "(", ")", "=", "⊕"];

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            col += i - start;
            let tok = if word.chars().all(|c| c.is_ascii_digit()) {
                match word.parse() {
                    Ok(n) => Tok::Number(n),
                    Err(_) => return Err(ParseError::at(pos, format!("number `{word}` is too large"))),
                }
            } else {
                Tok::Word(word)
            };
            out.push((tok, pos));
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
            return Err(ParseError::at(pos, format!("unexpected character `{c}`")));
        };
        let n = sym.chars().count();
        i += n;
        col += n;
        out.push((Tok::Sym(sym), pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// A name together with where it was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: Name,
    pub source: Name,
    pub target: Name,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationDecl {
    pub pos: Pos,
    pub terms: Vec<(i64, Vec<Name>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub name: Name,
    pub vertices: Vec<Name>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<RelationDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDecl {
    pub name: Option<Name>,
    pub base: Name,
    pub total: Name,
    pub map: Vec<(Name, Name)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Projective(Name),
    Simple(Name),
    Injective(Name),
    Ref(Name),
    Zero,
}

/// A formal direct sum `n₁ A₁ + n₂ A₂ + …` of module atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleExpr {
    pub terms: Vec<(usize, Atom)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetDecl {
    pub name: Name,
    pub expr: ModuleExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Algebra(AlgebraDecl),
    Extension(ExtensionDecl),
    Let(LetDecl),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: format!("unexpected {}", self.peek()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(t) if t == w)
    }

    fn sym(&mut self, s: &str) -> Result<Pos, ParseError> {
        if self.is_sym(s) {
            Ok(self.bump().1)
        } else {
            self.fail(&[&format!("`{s}`")])
        }
    }

    fn keyword(&mut self, w: &str) -> Result<(), ParseError> {
        if self.is_word(w) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{w}`")])
        }
    }

    /// An identifier; vertex names may also be plain numbers.
    fn name(&mut self, what: &str) -> Result<Name, ParseError> {
        match self.peek().clone() {
            Tok::Word(w) => {
                let pos = self.bump().1;
                Ok(Name { text: w, pos })
            }
            Tok::Number(n) => {
                let pos = self.bump().1;
                Ok(Name { text: n.to_string(), pos })
            }
            _ => self.fail(&[what]),
        }
    }

    fn section_header(&mut self, w: &str) -> Result<(), ParseError> {
        self.keyword(w)?;
        self.sym(":")?;
        Ok(())
    }

    /// Comma-separated items until `;`; the list may be empty.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Parser) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if self.is_sym(";") {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.is_sym(",") {
                self.bump();
            } else if self.is_sym(";") {
                self.bump();
                return Ok(out);
            } else {
                return self.fail(&["`,`", "`;`"]);
            }
        }
    }

    fn algebra(&mut self) -> Result<AlgebraDecl, ParseError> {
        self.keyword("algebra")?;
        let name = self.name("algebra name")?;
        self.sym("{")?;
        self.section_header("vertices")?;
        let vertices = self.list(|p| p.name("vertex name"))?;
        self.section_header("arrows")?;
        let arrows = self.list(|p| {
            let name = p.name("arrow name")?;
            p.sym(":")?;
            let source = p.name("vertex name")?;
            p.sym("->")?;
            let target = p.name("vertex name")?;
            Ok(ArrowDecl { name, source, target })
        })?;
        let mut relations = Vec::new();
        if self.is_word("relations") {
            self.section_header("relations")?;
            relations = self.list(Parser::relation)?;
        }
        if !self.is_sym("}") {
            return self.fail(if relations.is_empty() { &["`relations`", "`}`"] } else { &["`}`"] });
        }
        self.bump();
        Ok(AlgebraDecl { name, vertices, arrows, relations })
    }

    fn relation(&mut self) -> Result<RelationDecl, ParseError> {
        let pos = self.pos();
        let mut terms = Vec::new();
        let mut sign = 1;
        if self.is_sym("-") {
            self.bump();
            sign = -1;
        }
        loop {
            let mut coeff = sign;
            if let Tok::Number(n) = *self.peek() {
                self.bump();
                if self.is_sym("*") {
                    self.bump();
                }
                coeff *= i64::try_from(n).map_err(|_| ParseError::at(pos, "coefficient too large"))?;
            }
            let mut path = vec![self.name("arrow name")?];
            while self.is_sym("*") {
                self.bump();
                path.push(self.name("arrow name")?);
            }
            terms.push((coeff, path));
            if self.is_sym("+") {
                self.bump();
                sign = 1;
            } else if self.is_sym("-") {
                self.bump();
                sign = -1;
            } else {
                return Ok(RelationDecl { pos, terms });
            }
        }
    }

    fn extension(&mut self) -> Result<ExtensionDecl, ParseError> {
        self.keyword("extension")?;
        let name = if self.is_sym("{") { None } else { Some(self.name("extension name")?) };
        self.sym("{")?;
        self.section_header("base")?;
        let base = self.name("algebra name")?;
        self.sym(";")?;
        self.section_header("total")?;
        let total = self.name("algebra name")?;
        self.sym(";")?;
        let mut map = Vec::new();
        if self.is_word("map") {
            self.section_header("map")?;
            map = self.list(|p| {
                let from = p.name("base name")?;
                p.sym("=>")?;
                let to = p.name("total name")?;
                Ok((from, to))
            })?;
        }
        if !self.is_sym("}") {
            return self.fail(if map.is_empty() { &["`map`", "`}`"] } else { &["`}`"] });
        }
        self.bump();
        Ok(ExtensionDecl { name, base, total, map })
    }

    fn module_expr(&mut self) -> Result<ModuleExpr, ParseError> {
        let mut terms = Vec::new();
        loop {
            let mut mult = 1;
            if let Tok::Number(n) = *self.peek() {
                let pos = self.bump().1;
                if n == 0 && !self.is_sym("*") && !matches!(self.peek(), Tok::Word(_)) {
                    terms.push((1, Atom::Zero));
                    if self.next_summand() {
                        continue;
                    }
                    return Ok(ModuleExpr { terms });
                }
                mult = usize::try_from(n).map_err(|_| ParseError::at(pos, "multiplicity too large"))?;
                if self.is_sym("*") {
                    self.bump();
                }
            }
            let head = self.name("module atom")?;
            let atom = match head.text.as_str() {
                "P" | "S" | "I" if self.is_sym("(") => {
                    self.bump();
                    let v = self.name("vertex name")?;
                    self.sym(")")?;
                    match head.text.as_str() {
                        "P" => Atom::Projective(v),
                        "S" => Atom::Simple(v),
                        _ => Atom::Injective(v),
                    }
                }
                _ => Atom::Ref(head),
            };
            terms.push((mult, atom));
            if !self.next_summand() {
                return Ok(ModuleExpr { terms });
            }
        }
    }

    fn next_summand(&mut self) -> bool {
        if self.is_sym("+") || self.is_sym("⊕") {
            self.bump();
            true
        } else {
            false
        }
    }

    fn let_decl(&mut self) -> Result<LetDecl, ParseError> {
        self.keyword("let")?;
        let name = self.name("module name")?;
        self.sym("=")?;
        let expr = self.module_expr()?;
        self.sym(";")?;
        Ok(LetDecl { name, expr })
    }

    fn file(&mut self) -> Result<Vec<Decl>, ParseError> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Tok::Eof => return Ok(out),
                Tok::Word(w) if w == "algebra" => out.push(Decl::Algebra(self.algebra()?)),
                Tok::Word(w) if w == "extension" => out.push(Decl::Extension(self.extension()?)),
                Tok::Word(w) if w == "let" => out.push(Decl::Let(self.let_decl()?)),
                _ => return self.fail(&["`algebra`", "`extension`", "`let`"]),
            }
        }
    }
}

/// Parses a whole file and runs the positional semantic checks.
pub fn parse(src: &str) -> Result<Vec<Decl>, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let decls = p.file()?;
    check(&decls)?;
    Ok(decls)
}

/// Parses a standalone module expression such as `P(1) + 2 S(3)`.
pub fn parse_module_expr(src: &str) -> Result<ModuleExpr, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.module_expr()?;
    if *p.peek() != Tok::Eof {
        return p.fail(&["`+`", "end of input"]);
    }
    Ok(e)
}

fn check(decls: &[Decl]) -> Result<(), ParseError> {
    let mut algebras: Vec<&AlgebraDecl> = Vec::new();
    let mut modules: HashSet<&str> = HashSet::new();
    let mut extensions: HashSet<&str> = HashSet::new();
    for d in decls {
        match d {
            Decl::Algebra(a) => {
                if algebras.iter().any(|b| b.name.text == a.name.text) {
                    return Err(ParseError::at(a.name.pos, format!("duplicate algebra `{}`", a.name.text)));
                }
                check_algebra(a)?;
                algebras.push(a);
            }
            Decl::Extension(e) => {
                if let Some(n) = &e.name {
                    if !extensions.insert(&n.text) {
                        return Err(ParseError::at(n.pos, format!("duplicate extension `{}`", n.text)));
                    }
                }
                for side in [&e.base, &e.total] {
                    if !algebras.iter().any(|a| a.name.text == side.text) {
                        return Err(ParseError::at(side.pos, format!("unknown algebra `{}`", side.text)));
                    }
                }
            }
            Decl::Let(l) => {
                for (_, atom) in &l.expr.terms {
                    if let Atom::Ref(r) = atom {
                        if !modules.contains(r.text.as_str()) {
                            return Err(ParseError::at(r.pos, format!("unknown module `{}`", r.text)));
                        }
                    }
                }
                if !modules.insert(&l.name.text) {
                    return Err(ParseError::at(l.name.pos, format!("duplicate module `{}`", l.name.text)));
                }
            }
        }
    }
    Ok(())
}

fn check_algebra(a: &AlgebraDecl) -> Result<(), ParseError> {
    let mut seen = HashSet::new();
    for v in &a.vertices {
        if !seen.insert(&v.text) {
            return Err(ParseError::at(v.pos, format!("duplicate vertex `{}`", v.text)));
        }
    }
    let mut arrows: Vec<&ArrowDecl> = Vec::new();
    for arr in &a.arrows {
        if arrows.iter().any(|b| b.name.text == arr.name.text) {
            return Err(ParseError::at(arr.name.pos, format!("duplicate arrow `{}`", arr.name.text)));
        }
        for end in [&arr.source, &arr.target] {
            if !seen.contains(&end.text) {
                return Err(ParseError::at(end.pos, format!("undeclared vertex `{}`", end.text)));
            }
        }
        arrows.push(arr);
    }
    for rel in &a.relations {
        let mut ends: Option<(&str, &str)> = None;
        for (_, path) in &rel.terms {
            let mut resolved = Vec::new();
            for n in path {
                let Some(arr) = arrows.iter().find(|b| b.name.text == n.text) else {
                    return Err(ParseError::at(n.pos, format!("unknown arrow `{}`", n.text)));
                };
                resolved.push(*arr);
            }
            if resolved.len() < 2 {
                return Err(ParseError::at(path[0].pos, "relation paths must have length at least 2"));
            }
            for (k, w) in resolved.windows(2).enumerate() {
                if w[0].target.text != w[1].source.text {
                    return Err(ParseError::at(
                        path[k + 1].pos,
                        format!("arrows `{}` and `{}` do not compose", w[0].name.text, w[1].name.text),
                    ));
                }
            }
            let st = (resolved[0].source.text.as_str(), resolved.last().unwrap().target.text.as_str());
            match ends {
                None => ends = Some(st),
                Some(e) if e != st => {
                    return Err(ParseError::at(path[0].pos, "relation terms are not parallel"));
                }
                _ => {}
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_linear_a3() {
        let d = parse("algebra L { vertices: 1,2,3; arrows: a:1->2, b:2->3; relations: a*b; }").unwrap();
        let Decl::Algebra(a) = &d[0] else { panic!() };
        assert_eq!(a.vertices.len(), 3);
        assert_eq!(a.arrows.len(), 2);
        let (coeff, path) = &a.relations[0].terms[0];
        assert_eq!(*coeff, 1);
        let texts: Vec<&str> = path.iter().map(|n| n.text.as_str()).collect();
        assert_eq!(texts, ["a", "b"]);
        assert_eq!(path[0].pos, Pos { line: 1, col: 65 });
    }

    #[test]
    fn field_as_algebra() {
        let d = parse("algebra K { vertices: 1; arrows: ; }").unwrap();
        let Decl::Algebra(a) = &d[0] else { panic!() };
        assert!(a.arrows.is_empty() && a.relations.is_empty());
    }

    #[test]
    fn coefficients_and_signs() {
        let src = "algebra Q { vertices: 1,2,3,4; arrows: a:1->2, b:2->4, c:1->3, d:3->4;\n relations: a*b - 2 c*d; }";
        let d = parse(src).unwrap();
        let Decl::Algebra(a) = &d[0] else { panic!() };
        let coeffs: Vec<i64> = a.relations[0].terms.iter().map(|t| t.0).collect();
        assert_eq!(coeffs, [1, -2]);
    }

    #[test]
    fn non_parallel_relation_is_rejected() {
        let src =
            "algebra Q { vertices: 1,2,3,4,5; arrows: a:1->2, b:2->3, c:1->4, d:4->5;\n relations: a*b + 2 c*d; }";
        let e = parse(src).unwrap_err();
        assert!(e.message.contains("not parallel"));
        assert_eq!(e.pos.line, 2);
    }

    #[test]
    fn reports_position_and_expectation() {
        let e = parse("algebra L {\n  vertices: 1 2;\n}").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, col: 15 });
        assert_eq!(e.expected, ["`,`", "`;`"]);
        let e = parse("algebra L { vertices: 1; arrows: a:1->9; }").unwrap_err();
        assert!(e.message.contains("undeclared vertex `9`"));
    }

    #[test]
    fn semantic_errors() {
        for (src, needle) in [
            ("algebra L { vertices: 1, 1; arrows: ; }", "duplicate vertex"),
            ("algebra L { vertices: 1; arrows: a:1->1, a:1->1; }", "duplicate arrow"),
            ("algebra L { vertices: 1,2; arrows: a:1->2; relations: a*x; }", "unknown arrow"),
            ("algebra L { vertices: 1,2; arrows: a:1->2; relations: a*a; }", "do not compose"),
            ("algebra L { vertices: 1,2; arrows: a:1->2; relations: a; }", "length at least 2"),
            ("extension { base: X; total: Y; }", "unknown algebra"),
            ("let T = U;", "unknown module"),
        ] {
            let e = parse(src).unwrap_err();
            assert!(e.message.contains(needle), "{src}: {e}");
        }
    }

    #[test]
    fn extensions_and_lets() {
        let src = "# comment\nalgebra L { vertices: 1,2; arrows: a:1->2; }\n\
                   algebra G { vertices: 1,2; arrows: a:1->2, b:2->1; relations: a*b; }\n\
                   extension E { base: L; total: G; map: a => a; }\n\
                   let U = S(2) + P(2);\nlet V = 2 U ⊕ I(1) + 0;";
        let d = parse(src).unwrap();
        assert_eq!(d.len(), 5);
        let Decl::Let(v) = &d[4] else { panic!() };
        assert_eq!(v.expr.terms.len(), 3);
        assert_eq!(v.expr.terms[0].0, 2);
        assert_eq!(v.expr.terms[2].1, Atom::Zero);
    }

    #[test]
    fn standalone_module_expression() {
        let e = parse_module_expr("P(1) + S(3)").unwrap();
        assert_eq!(e.terms.len(), 2);
        assert!(parse_module_expr("P(1) S(3)").is_err());
        assert!(parse_module_expr("Q(").is_err());
    }
}

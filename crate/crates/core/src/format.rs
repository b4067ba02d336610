//! The ideal-description text format.
//!
//! ```text
//! ring S = QQ[z0, z1, z2, z3];
//! // twisted cubic
//! ideal I = z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2;
//! ```
//!
//! Fields are `QQ` or `ZZ/p`; a variable may carry a weight as `x:2`.
//! Coefficients are `INT` or `INT/INT`, written before the monomial with or
//! without `*`. A term may be a bare coefficient and the first term may
//! carry a sign.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldDescriptor};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingDescriptor, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line, column: col });
            col += i - start;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Int(digits.parse().expect("ascii digits")), line, column: col });
            col += i - start;
        } else if "=[],;:+-*^/".contains(c) {
            out.push(Token { tok: Tok::Sym(c), line, column: col });
            i += 1;
            col += 1;
        } else {
            return Err(parse_error(line, col, format!("unexpected character '{c}'")));
        }
    }
    out.push(Token { tok: Tok::Eof, line, column: col });
    Ok(out)
}

/// One term as read: sign, coefficient `num/den` and `(variable, exponent)`
/// factors, before any field arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermAst {
    pub negative: bool,
    pub num: BigInt,
    pub den: BigInt,
    pub factors: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorAst {
    pub terms: Vec<TermAst>,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub generators: Vec<GeneratorAst>,
    pub line: usize,
}

/// A parsed source file. Coefficients stay as integers until the ideals
/// are built over a concrete coefficient type.
#[derive(Clone, Debug)]
pub struct SourceFile {
    pub ring_name: String,
    pub ring: Ring,
    pub ideals: Vec<IdealDecl>,
}

/// Ideals built from a [`SourceFile`].
#[derive(Clone)]
pub struct Parsed<K> {
    pub ring_name: String,
    pub ring: Ring,
    pub ideals: Vec<(String, Ideal<K>)>,
    pub warnings: Vec<String>,
}

impl<K: Coeff> std::fmt::Debug for Parsed<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Parsed")
            .field("ring_name", &self.ring_name)
            .field("ideals", &self.ideals)
            .field("warnings", &self.warnings)
            .finish()
    }
}

impl<K: Coeff> Parsed<K> {
    pub fn ideal(&self, name: &str) -> Result<&Ideal<K>> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
            .ok_or_else(|| {
                let known: Vec<&str> = self.ideals.iter().map(|(n, _)| n.as_str()).collect();
                Error::Precondition(format!("no ideal named '{name}' (declared: {})", known.join(", ")))
            })
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> Error {
        let t = self.peek();
        parse_error(t.line, t.column, format!("expected {expected}, found {}", t.tok.describe()))
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<Token> {
        if self.is_sym(c) {
            Ok(self.bump())
        } else {
            Err(self.error_here(&format!("'{c}'")))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Token)> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump()))
            }
            _ => Err(self.error_here(what)),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<Token> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => Ok(self.bump()),
            _ => Err(self.error_here(&format!("'{kw}'"))),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(BigInt, Token)> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                Ok((n, self.bump()))
            }
            _ => Err(self.error_here(what)),
        }
    }

    fn small_int(&mut self, what: &str, max: u64) -> Result<u64> {
        let (n, t) = self.expect_int(what)?;
        u64::try_from(&n)
            .ok()
            .filter(|&v| v <= max)
            .ok_or_else(|| parse_error(t.line, t.column, format!("{what} {n} is out of range (at most {max})")))
    }

    fn ring_decl(&mut self) -> Result<(String, Ring)> {
        self.expect_keyword("ring")?;
        let (name, _) = self.expect_ident("a ring name")?;
        self.expect_sym('=')?;
        let (fname, ft) = self.expect_ident("a field (QQ or ZZ/p)")?;
        let field = match fname.as_str() {
            "QQ" => FieldDescriptor::Rationals,
            "ZZ" => {
                self.expect_sym('/')?;
                let (p, pt) = self.expect_int("a prime")?;
                let p = u32::try_from(&p).map_err(|_| parse_error(pt.line, pt.column, format!("characteristic {p} is too large")))?;
                FieldDescriptor::prime(p).map_err(|e| parse_error(pt.line, pt.column, e.to_string()))?
            }
            other => return Err(parse_error(ft.line, ft.column, format!("unknown field '{other}' (QQ or ZZ/p)"))),
        };
        let open = self.expect_sym('[')?;
        let mut names = Vec::new();
        let mut weights = Vec::new();
        loop {
            let (v, vt) = self.expect_ident("a variable name")?;
            if names.contains(&v) {
                return Err(parse_error(vt.line, vt.column, format!("duplicate variable '{v}'")));
            }
            let w = if self.is_sym(':') {
                self.bump();
                let w = self.small_int("weight", u16::MAX as u64)?;
                if w == 0 {
                    return Err(parse_error(vt.line, vt.column, "weights must be positive"));
                }
                w as u32
            } else {
                1
            };
            names.push(v);
            weights.push(w);
            if self.is_sym(',') {
                self.bump();
            } else {
                break;
            }
        }
        self.expect_sym(']')?;
        self.expect_sym(';')?;
        if names.len() > MAX_VARS {
            return Err(parse_error(open.line, open.column, format!("at most {MAX_VARS} variables are supported")));
        }
        let ring = RingDescriptor::new(field, names, weights, MonomialOrder::DegRevLex)
            .map_err(|e| parse_error(open.line, open.column, e.to_string()))?;
        Ok((name, ring))
    }

    fn term(&mut self, ring: &Ring, negative: bool) -> Result<TermAst> {
        let mut t = TermAst { negative, num: BigInt::one(), den: BigInt::one(), factors: Vec::new() };
        let mut have_coeff = false;
        if let Tok::Int(_) = self.peek().tok {
            let (num, _) = self.expect_int("a coefficient")?;
            t.num = num;
            if self.is_sym('/') {
                self.bump();
                let (den, dt) = self.expect_int("a denominator")?;
                if den.is_zero() {
                    return Err(parse_error(dt.line, dt.column, "zero denominator"));
                }
                t.den = den;
            }
            have_coeff = true;
            if self.is_sym('*') {
                self.bump();
            } else if !matches!(self.peek().tok, Tok::Ident(_)) {
                return Ok(t);
            }
        }
        loop {
            let (v, vt) = self.expect_ident(if have_coeff || !t.factors.is_empty() { "a variable" } else { "a term" })?;
            let var = ring
                .names()
                .iter()
                .position(|n| *n == v)
                .ok_or_else(|| parse_error(vt.line, vt.column, format!("unknown variable '{v}'")))?;
            let e = if self.is_sym('^') {
                self.bump();
                self.small_int("exponent", u16::MAX as u64)? as u32
            } else {
                1
            };
            t.factors.push((var, e));
            if self.is_sym('*') {
                self.bump();
            } else {
                return Ok(t);
            }
        }
    }

    fn poly(&mut self, ring: &Ring) -> Result<GeneratorAst> {
        let start = self.peek().clone();
        let mut terms = Vec::new();
        let mut negative = false;
        if self.is_sym('-') || self.is_sym('+') {
            negative = self.bump().tok == Tok::Sym('-');
        }
        loop {
            terms.push(self.term(ring, negative)?);
            if self.is_sym('+') || self.is_sym('-') {
                negative = self.bump().tok == Tok::Sym('-');
            } else {
                break;
            }
        }
        Ok(GeneratorAst { terms, line: start.line, column: start.column })
    }

    fn ideal_decl(&mut self, ring: &Ring) -> Result<IdealDecl> {
        let kw = self.expect_keyword("ideal")?;
        let (name, _) = self.expect_ident("an ideal name")?;
        self.expect_sym('=')?;
        let mut generators = vec![self.poly(ring)?];
        while self.is_sym(',') {
            self.bump();
            generators.push(self.poly(ring)?);
        }
        self.expect_sym(';')?;
        Ok(IdealDecl { name, generators, line: kw.line })
    }
}

/// Parses a source file; errors carry `line:column` (1-based).
pub fn parse_source(src: &str) -> Result<SourceFile> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let (ring_name, ring) = p.ring_decl()?;
    let mut ideals: Vec<IdealDecl> = Vec::new();
    loop {
        if p.peek().tok == Tok::Eof && !ideals.is_empty() {
            break;
        }
        let at = p.peek().clone();
        let decl = p.ideal_decl(&ring)?;
        if ideals.iter().any(|d| d.name == decl.name) {
            return Err(parse_error(at.line, at.column, format!("ideal '{}' declared twice", decl.name)));
        }
        ideals.push(decl);
    }
    Ok(SourceFile { ring_name, ring, ideals })
}

fn build_poly<K: Coeff>(ring: &Ring, g: &GeneratorAst) -> Result<Polynomial<K>> {
    let field = ring.field();
    let mut terms = Vec::with_capacity(g.terms.len());
    for t in &g.terms {
        let mut exps = [0u16; MAX_VARS];
        for &(v, e) in &t.factors {
            let total = exps[v] as u32 + e;
            exps[v] = u16::try_from(total)
                .map_err(|_| parse_error(g.line, g.column, format!("exponent of {} exceeds {}", ring.names()[v], u16::MAX)))?;
        }
        let num = if t.negative { -t.num.clone() } else { t.num.clone() };
        let c = K::from_ratio(&num, &t.den, field).map_err(|e| parse_error(g.line, g.column, e.to_string()))?;
        terms.push((ring.monomial(&exps[..ring.num_vars()]), c));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

impl SourceFile {
    pub fn field(&self) -> FieldDescriptor {
        self.ring.field()
    }

    /// Builds every ideal. An inhomogeneous generator is an error under
    /// `strict`; otherwise it is replaced by its homogeneous components
    /// and a warning is recorded.
    pub fn build<K: Coeff>(&self, strict: bool) -> Result<Parsed<K>> {
        let mut ideals = Vec::new();
        let mut warnings = Vec::new();
        for decl in &self.ideals {
            let mut gens = Vec::new();
            for g in &decl.generators {
                let p: Polynomial<K> = build_poly(&self.ring, g)?;
                if p.is_homogeneous() {
                    gens.push(p);
                } else if strict {
                    return Err(parse_error(g.line, g.column, format!("generator {p} is not homogeneous")));
                } else {
                    warnings.push(format!(
                        "{}:{}: generator {p} of {} is not homogeneous; using its homogeneous components",
                        g.line, g.column, decl.name
                    ));
                    gens.extend(p.homogeneous_components());
                }
            }
            ideals.push((decl.name.clone(), Ideal::new(&self.ring, gens)?));
        }
        Ok(Parsed { ring_name: self.ring_name.clone(), ring: self.ring.clone(), ideals, warnings })
    }
}

/// Parses and builds in one step.
pub fn parse<K: Coeff>(src: &str, strict: bool) -> Result<Parsed<K>> {
    parse_source(src)?.build(strict)
}

/// `ring S = QQ[z0, z1];` with weights written as `x:2` when not 1.
pub fn print_ring(name: &str, ring: &Ring) -> String {
    let vars: Vec<String> = ring
        .names()
        .iter()
        .zip(ring.weights())
        .map(|(n, &w)| if w == 1 { n.clone() } else { format!("{n}:{w}") })
        .collect();
    format!("ring {name} = {}[{}];\n", ring.field(), vars.join(", "))
}

/// One generator per line after the first.
pub fn print_ideal<K: Coeff>(name: &str, ideal: &Ideal<K>) -> String {
    let gens: Vec<String> = if ideal.generators().is_empty() {
        vec!["0".into()]
    } else {
        ideal.generators().iter().map(|g| g.to_string()).collect()
    };
    format!("ideal {name} = {};\n", gens.join(",\n    "))
}

pub fn print_source<K: Coeff>(ring_name: &str, ring: &Ring, ideals: &[(&str, &Ideal<K>)]) -> String {
    let mut out = print_ring(ring_name, ring);
    for (name, ideal) in ideals {
        out.push_str(&print_ideal(name, ideal));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn position(e: Error) -> (usize, usize) {
        match e {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("not a parse error: {other:?}"),
        }
    }

    #[test]
    fn twisted_cubic() {
        let src = "ring S = QQ[z0,z1,z2,z3]; ideal I = z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2;";
        let p = parse::<Rational>(src, true).unwrap();
        let i = p.ideal("I").unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(i.generators()[0].to_string(), "-z1^2 + z0*z2");
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn prime_field_conic() {
        let p = parse::<Fp>("ring S = ZZ/32003[x,y];\nideal J = x^2 + y^2;", false).unwrap();
        assert_eq!(p.ring.field(), FieldDescriptor::Prime(32003));
        assert_eq!(p.ideal("J").unwrap().generators()[0].to_string(), "x^2 + y^2");
    }

    #[test]
    fn dangling_operator() {
        let e = parse_source("ring S = QQ[z0];\nideal I = z0 +").unwrap_err();
        assert_eq!(position(e), (2, 15));
        let e = parse_source("ideal I = z0 +").unwrap_err();
        assert_eq!(position(e), (1, 1));
    }

    #[test]
    fn semantic_errors_have_positions() {
        let e = parse_source("ring S = QQ[x,y];\nideal I = x*w;").unwrap_err();
        assert_eq!(position(e), (2, 13));
        let e = parse_source("ring S = QQ[x,y];\nideal I = 1/0 x;").unwrap_err();
        assert_eq!(position(e), (2, 13));
        let e = parse_source("ring S = ZZ/4[x];\nideal I = x;").unwrap_err();
        assert_eq!(position(e), (1, 13));
        assert!(matches!(parse_source("ring S = QQ[x] ideal I = x;"), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_weights_and_extensions() {
        let src = "// header\nring R = QQ[x:2, y]; // weighted\nideal A = -1/2*x + 3 y^2, 2;\n";
        let p = parse::<Rational>(src, true).unwrap();
        assert_eq!(p.ring.weights(), &[2, 1]);
        let a = p.ideal("A").unwrap();
        assert_eq!(a.generators()[0].to_string(), "-1/2 x + 3 y^2");
        assert!(a.is_unit());
    }

    #[test]
    fn inhomogeneous_warns_or_fails() {
        let src = "ring S = QQ[x,y];\nideal I = x^2 + y;";
        let p = parse::<Rational>(src, false).unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(p.ideal("I").unwrap().generators().len(), 2);
        assert_eq!(position(parse::<Rational>(src, true).unwrap_err()), (2, 11));
    }

    #[test]
    fn print_then_parse() {
        let src = "ring S = QQ[a, b:3];\nideal I = 1/3 a^3 - b,\n    a^6;\nideal Z = 0;\n";
        let p = parse::<Rational>(src, true).unwrap();
        let refs: Vec<(&str, &Ideal<Rational>)> = p.ideals.iter().map(|(n, i)| (n.as_str(), i)).collect();
        let text = print_source(&p.ring_name, &p.ring, &refs);
        assert_eq!(text, src);
    }
}

//! The `.lialg` text format for bracket tables.
//!
//! ```text
//! # comment
//! algebra esv
//! family L degree n
//! family Y degree n+1/2
//! bracket [L(m), L(n)] = (n - m) * L(m+n)
//! bracket [L(n), Y(p)] = (p - n/2) * Y(n+p)
//! bracket [M(n), Y(p)] = 0
//! ```
//!
//! One declaration per line. A bracket rule binds one index symbol per side;
//! each term on the right is an affine coefficient in those two symbols times
//! a family evaluated at exactly their sum, so every rule respects the
//! grading by construction. Multi-term coefficients must be parenthesized.
//! Family names are `L`, `M`, `N`, `Y`; `Y` is the half-integer family.
//!
//! Only one order of each family pair may be given. [`compile_spec`] fills in
//! the other by antisymmetry and rejects same-family rules that are not
//! antisymmetric under swapping the indices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::basis::{basis_window, BasisVector, Family};
use crate::bracket::Bracket;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::{fmt_rat, int, is_negative, Rational};

const BUILTIN_ESV: &str = include_str!("../fixtures/esv.lialg");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UndeclaredFamily,
    NonAdditiveIndex,
    DuplicateRule,
    NonAffine,
    BadDeclaration,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

/// `constant + left * i + right * j`, where `i`, `j` are the index symbols
/// bound on the left and right of a rule.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Affine {
    pub constant: Rational,
    pub left: Rational,
    pub right: Rational,
}

impl Affine {
    fn constant(c: Rational) -> Self {
        Self {
            constant: c,
            ..Default::default()
        }
    }

    pub fn is_constant(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn eval(&self, i: &Rational, j: &Rational) -> Rational {
        &self.constant + &self.left * i + &self.right * j
    }

    /// Same polynomial with the two symbols exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            constant: self.constant.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            constant: &self.constant + &o.constant,
            left: &self.left + &o.left,
            right: &self.right + &o.right,
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        Self {
            constant: &self.constant * c,
            left: &self.left * c,
            right: &self.right * c,
        }
    }

    fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, i: &str, j: &str) -> fmt::Result {
        let parts: Vec<(Rational, Option<&str>)> = [
            (self.left.clone(), Some(i)),
            (self.right.clone(), Some(j)),
            (self.constant.clone(), None),
        ]
        .into_iter()
        .filter(|(c, _)| !c.is_zero())
        .collect();
        if parts.is_empty() {
            return f.write_str("0");
        }
        let wrap = parts.len() > 1;
        if wrap {
            f.write_str("(")?;
        }
        for (n, (c, sym)) in parts.iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match sym {
                Some(s) if abs.is_one() => f.write_str(s)?,
                Some(s) => write!(f, "{}*{s}", fmt_rat(&abs))?,
                None => f.write_str(&fmt_rat(&abs))?,
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeShape {
    Integer,
    HalfInteger,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTerm {
    pub coeff: Affine,
    pub target: Family,
}

/// `[F(i), G(j)] = Σ coeff_k(i, j) · H_k(i+j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketRule {
    pub left: Family,
    pub left_sym: String,
    pub right: Family,
    pub right_sym: String,
    pub terms: Vec<RuleTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub families: Vec<(Family, DegreeShape)>,
    pub rules: Vec<BracketRule>,
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.name)?;
        for (fam, shape) in &self.families {
            let s = match shape {
                DegreeShape::Integer => "n",
                DegreeShape::HalfInteger => "n+1/2",
            };
            writeln!(f, "family {fam} degree {s}")?;
        }
        for r in &self.rules {
            write!(
                f,
                "bracket [{}({}), {}({})] = ",
                r.left, r.left_sym, r.right, r.right_sym
            )?;
            if r.terms.is_empty() {
                f.write_str("0")?;
            }
            for (n, t) in r.terms.iter().enumerate() {
                if n > 0 {
                    f.write_str(" + ")?;
                }
                if t.coeff != Affine::constant(Rational::one()) {
                    t.coeff.write(f, &r.left_sym, &r.right_sym)?;
                    f.write_str(" * ")?;
                }
                write!(f, "{}({}+{})", t.target, r.left_sym, r.right_sym)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(i64),
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::LBrack => f.write_str("`[`"),
            Tok::RBrack => f.write_str("`]`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Eq => f.write_str("`=`"),
        }
    }
}

fn lex(line: &str, lineno: usize) -> std::result::Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse::<i64>().map_err(|_| ParseError {
                line: lineno,
                column: col,
                kind: ParseErrorKind::Syntax,
                message: format!("integer literal `{s}` is too large"),
            })?;
            out.push((Tok::Num(n), col));
            continue;
        }
        let t = match c {
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '=' => Tok::Eq,
            _ => {
                return Err(ParseError {
                    line: lineno,
                    column: col,
                    kind: ParseErrorKind::Syntax,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((t, col));
        i += 1;
    }
    Ok(out)
}

struct LineParser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    families: BTreeMap<Family, DegreeShape>,
    syms: (String, String),
}

type PResult<T> = std::result::Result<T, ParseError>;

impl LineParser {
    fn err(&self, kind: ParseErrorKind, col: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: col,
            kind,
            message: message.into(),
        }
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|t| &t.0)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> PResult<()> {
        let col = self.col();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(self.err(ParseErrorKind::Syntax, col, format!("expected {want}, found {t}"))),
            None => Err(self.err(
                ParseErrorKind::Syntax,
                col,
                format!("expected {want}, found end of line"),
            )),
        }
    }

    fn ident(&mut self) -> PResult<(String, usize)> {
        let col = self.col();
        match self.next() {
            Some(Tok::Ident(s)) => Ok((s, col)),
            Some(t) => Err(self.err(ParseErrorKind::Syntax, col, format!("expected a name, found {t}"))),
            None => Err(self.err(ParseErrorKind::Syntax, col, "expected a name, found end of line")),
        }
    }

    fn finish(&self) -> PResult<()> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some((t, col)) => Err(self.err(ParseErrorKind::Syntax, *col, format!("unexpected {t}"))),
        }
    }

    fn family(&mut self) -> PResult<Family> {
        let (name, col) = self.ident()?;
        let fam = Family::from_name(&name).ok_or_else(|| {
            self.err(
                ParseErrorKind::UndeclaredFamily,
                col,
                format!("unknown family `{name}`"),
            )
        })?;
        if !self.families.contains_key(&fam) {
            return Err(self.err(
                ParseErrorKind::UndeclaredFamily,
                col,
                format!("family `{name}` is not declared"),
            ));
        }
        Ok(fam)
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> PResult<Affine> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.product()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.add(&self.product()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    // product := unary (('*' | '/') unary)*, stopping before `* F(`
    fn product(&mut self) -> PResult<Affine> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) if !self.family_app_follows(1) => {
                    let col = self.col();
                    self.next();
                    let rhs = self.unary()?;
                    acc = self.mul(&acc, &rhs, col)?;
                }
                Some(Tok::Slash) => {
                    let col = self.col();
                    self.next();
                    let rhs = self.unary()?;
                    if !rhs.is_constant() || rhs.constant.is_zero() {
                        return Err(self.err(
                            ParseErrorKind::NonAffine,
                            col,
                            "division is only allowed by a nonzero constant",
                        ));
                    }
                    acc = acc.scale(&rhs.constant.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn mul(&self, a: &Affine, b: &Affine, col: usize) -> PResult<Affine> {
        if a.is_constant() {
            Ok(b.scale(&a.constant))
        } else if b.is_constant() {
            Ok(a.scale(&b.constant))
        } else {
            Err(self.err(
                ParseErrorKind::NonAffine,
                col,
                "coefficients must be affine in the index symbols",
            ))
        }
    }

    fn unary(&mut self) -> PResult<Affine> {
        let col = self.col();
        match self.next() {
            Some(Tok::Minus) => Ok(self.unary()?.neg()),
            Some(Tok::Num(n)) => Ok(Affine::constant(int(n))),
            Some(Tok::Ident(s)) => {
                if s == self.syms.0 {
                    Ok(Affine {
                        left: Rational::one(),
                        ..Default::default()
                    })
                } else if s == self.syms.1 {
                    Ok(Affine {
                        right: Rational::one(),
                        ..Default::default()
                    })
                } else {
                    Err(self.err(ParseErrorKind::Syntax, col, format!("unknown index symbol `{s}`")))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(self.err(ParseErrorKind::Syntax, col, format!("unexpected {t}"))),
            None => Err(self.err(ParseErrorKind::Syntax, col, "unexpected end of line")),
        }
    }

    fn family_app_follows(&self, offset: usize) -> bool {
        matches!(
            (self.toks.get(self.pos + offset), self.toks.get(self.pos + offset + 1)),
            (Some((Tok::Ident(s), _)), Some((Tok::LParen, _))) if Family::from_name(s).is_some()
        )
    }

    /// `H(i+j)`; the index must be exactly the sum of the bound symbols.
    fn family_app(&mut self) -> PResult<Family> {
        let fam = self.family()?;
        self.expect(Tok::LParen)?;
        let col = self.col();
        let idx = self.sum()?;
        self.expect(Tok::RParen)?;
        let additive = Affine {
            constant: Rational::zero(),
            left: Rational::one(),
            right: Rational::one(),
        };
        if idx != additive {
            return Err(self.err(
                ParseErrorKind::NonAdditiveIndex,
                col,
                format!("target index must be {}+{}", self.syms.0, self.syms.1),
            ));
        }
        Ok(fam)
    }

    fn term(&mut self, sign: Rational) -> PResult<RuleTerm> {
        if self.family_app_follows(0) {
            let target = self.family_app()?;
            return Ok(RuleTerm {
                coeff: Affine::constant(sign),
                target,
            });
        }
        let coeff = self.product()?.scale(&sign);
        self.expect(Tok::Star)?;
        let target = self.family_app()?;
        Ok(RuleTerm { coeff, target })
    }

    fn rhs(&mut self) -> PResult<Vec<RuleTerm>> {
        if self.peek() == Some(&Tok::Num(0)) && self.peek2().is_none() {
            self.next();
            return Ok(Vec::new());
        }
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            sign = int(-1);
        }
        terms.push(self.term(sign)?);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    terms.push(self.term(Rational::one())?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    terms.push(self.term(int(-1))?);
                }
                _ => break,
            }
        }
        Ok(terms)
    }
}

/// Parses and validates a `.lialg` document.
pub fn parse_spec(text: &str) -> std::result::Result<AlgebraSpec, ParseError> {
    let mut name: Option<String> = None;
    let mut families: BTreeMap<Family, DegreeShape> = BTreeMap::new();
    let mut family_order = Vec::new();
    let mut rules: Vec<BracketRule> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let toks = lex(raw, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let end_col = raw.chars().count() + 1;
        let mut p = LineParser {
            toks,
            pos: 0,
            line: lineno,
            end_col,
            families: families.clone(),
            syms: (String::new(), String::new()),
        };
        let (kw, kw_col) = p.ident()?;
        match kw.as_str() {
            "algebra" => {
                let (nm, col) = p.ident()?;
                p.finish()?;
                if name.is_some() {
                    return Err(p.err(ParseErrorKind::BadDeclaration, col, "algebra name declared twice"));
                }
                name = Some(nm);
            }
            "family" => {
                let (fname, col) = p.ident()?;
                let fam = Family::from_name(&fname).ok_or_else(|| {
                    p.err(
                        ParseErrorKind::BadDeclaration,
                        col,
                        format!("unknown family `{fname}` (expected L, M, N or Y)"),
                    )
                })?;
                let (kw2, c2) = p.ident()?;
                if kw2 != "degree" {
                    return Err(p.err(ParseErrorKind::Syntax, c2, format!("expected `degree`, found `{kw2}`")));
                }
                p.ident()?;
                let shape = if p.peek().is_some() {
                    p.expect(Tok::Plus)?;
                    p.expect(Tok::Num(1))?;
                    p.expect(Tok::Slash)?;
                    p.expect(Tok::Num(2))?;
                    DegreeShape::HalfInteger
                } else {
                    DegreeShape::Integer
                };
                p.finish()?;
                if (shape == DegreeShape::HalfInteger) != fam.is_half() {
                    return Err(p.err(
                        ParseErrorKind::BadDeclaration,
                        col,
                        format!("family `{fam}` cannot have this degree shape"),
                    ));
                }
                if families.insert(fam, shape).is_some() {
                    return Err(p.err(
                        ParseErrorKind::BadDeclaration,
                        col,
                        format!("family `{fam}` declared twice"),
                    ));
                }
                family_order.push((fam, shape));
            }
            "bracket" => {
                p.expect(Tok::LBrack)?;
                let left = p.family()?;
                p.expect(Tok::LParen)?;
                let (ls, _) = p.ident()?;
                p.expect(Tok::RParen)?;
                p.expect(Tok::Comma)?;
                let right = p.family()?;
                p.expect(Tok::LParen)?;
                let (rs, rcol) = p.ident()?;
                p.expect(Tok::RParen)?;
                p.expect(Tok::RBrack)?;
                if ls == rs {
                    return Err(p.err(ParseErrorKind::Syntax, rcol, "the two index symbols must differ"));
                }
                let eq_col = p.col();
                p.expect(Tok::Eq)?;
                p.syms = (ls.clone(), rs.clone());
                let terms = p.rhs()?;
                p.finish()?;
                for t in &terms {
                    if t.target.is_half() != (left.is_half() ^ right.is_half()) {
                        return Err(p.err(
                            ParseErrorKind::NonAdditiveIndex,
                            eq_col,
                            format!("{} cannot carry the index {ls}+{rs} of [{left}, {right}]", t.target),
                        ));
                    }
                }
                if rules
                    .iter()
                    .any(|r| (r.left, r.right) == (left, right) || (r.left, r.right) == (right, left))
                {
                    return Err(p.err(
                        ParseErrorKind::DuplicateRule,
                        kw_col,
                        format!("a rule for [{left}, {right}] is already declared"),
                    ));
                }
                rules.push(BracketRule {
                    left,
                    left_sym: ls,
                    right,
                    right_sym: rs,
                    terms,
                });
            }
            other => {
                return Err(p.err(ParseErrorKind::Syntax, kw_col, format!("unknown declaration `{other}`")));
            }
        }
    }

    let name = name.ok_or_else(|| ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::BadDeclaration,
        message: "missing `algebra <name>` line".into(),
    })?;
    Ok(AlgebraSpec {
        name,
        families: family_order,
        rules,
    })
}

/// The extended Schrödinger-Virasoro table, parsed from the bundled fixture.
pub fn builtin_esv() -> AlgebraSpec {
    parse_spec(BUILTIN_ESV).expect("bundled fixture parses")
}

/// Source text of the bundled fixture.
pub fn builtin_esv_source() -> &'static str {
    BUILTIN_ESV
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct CompiledRule {
    terms: Vec<(Affine, Family)>,
}

/// A compiled, evaluable bracket table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketRuleSet {
    name: String,
    families: Vec<Family>,
    rules: BTreeMap<(Family, Family), CompiledRule>,
}

impl BracketRuleSet {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    /// Basis vectors of the declared families with `|twice_index| <= w`.
    pub fn window(&self, w: i64) -> Vec<BasisVector> {
        basis_window(w)
            .into_iter()
            .filter(|b| self.families.contains(&b.family()))
            .collect()
    }
}

/// Compiles a spec, completing it by antisymmetry.
pub fn compile_spec(spec: &AlgebraSpec) -> Result<BracketRuleSet> {
    let mut rules = BTreeMap::new();
    for r in &spec.rules {
        // Merge terms per target family.
        let mut merged: BTreeMap<Family, Affine> = BTreeMap::new();
        for t in &r.terms {
            let e = merged.entry(t.target).or_default();
            *e = e.add(&t.coeff);
        }
        merged.retain(|_, c| !c.is_zero());
        if r.left == r.right {
            for (fam, c) in &merged {
                if *c != c.swapped().neg() {
                    return Err(Error::Compile(format!(
                        "rule for [{0}, {0}] is not antisymmetric: coefficient of {fam} changes by more than a sign when {1} and {2} are swapped",
                        r.left, r.left_sym, r.right_sym
                    )));
                }
            }
        }
        let forward: Vec<(Affine, Family)> = merged.into_iter().map(|(f, c)| (c, f)).collect();
        if r.left != r.right {
            let backward = forward.iter().map(|(c, f)| (c.swapped().neg(), *f)).collect();
            rules.insert((r.right, r.left), CompiledRule { terms: backward });
        }
        rules.insert((r.left, r.right), CompiledRule { terms: forward });
    }
    Ok(BracketRuleSet {
        name: spec.name.clone(),
        families: spec.families.iter().map(|(f, _)| *f).collect(),
        rules,
    })
}

impl Bracket for BracketRuleSet {
    fn bracket_basis(&self, a: BasisVector, b: BasisVector) -> AlgebraElement {
        let Some(rule) = self.rules.get(&(a.family(), b.family())) else {
            return AlgebraElement::zero();
        };
        let (i, j) = (a.index(), b.index());
        let sum = a.twice_index() + b.twice_index();
        let mut out = AlgebraElement::zero();
        for (c, fam) in &rule.terms {
            let target = BasisVector::new(*fam, sum).expect("parity checked at parse time");
            out.add_term(target, c.eval(&i, &j));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub window: i64,
    pub triples_checked: usize,
    /// First failing triple in canonical order, with its defect.
    pub witness: Option<(BasisVector, BasisVector, BasisVector, AlgebraElement)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Exhaustive Jacobi check over all triples of window basis vectors.
pub fn validate_jacobi<B: Bracket + ?Sized>(br: &B, basis: &[BasisVector], window: i64) -> JacobiReport {
    let witness = basis.par_iter().find_map_first(|&a| {
        for &b in basis {
            for &c in basis {
                let d = br.jacobi_defect(a, b, c);
                if !d.is_zero() {
                    return Some((a, b, c, d));
                }
            }
        }
        None
    });
    JacobiReport {
        window,
        triples_checked: basis.len().pow(3),
        witness,
    }
}

/// [`validate_jacobi`] on the declared families of a compiled rule set.
pub fn validate_rules_jacobi(rules: &BracketRuleSet, w: i64) -> JacobiReport {
    validate_jacobi(rules, &rules.window(w), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Esv;
    use crate::linalg::rat;
    use BasisVector as B;

    const HEADER: &str = "algebra t\nfamily L degree n\nfamily M degree n\nfamily N degree n\nfamily Y degree n+1/2\n";

    fn with_header(body: &str) -> String {
        format!("{HEADER}{body}\n")
    }

    #[test]
    fn parses_single_rules() {
        let s = parse_spec(&with_header("bracket [L(m), N(n)] = n * N(m+n)")).unwrap();
        let r = &s.rules[0];
        assert_eq!((r.left, r.right), (Family::L, Family::N));
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[0].target, Family::N);
        assert_eq!(
            r.terms[0].coeff,
            Affine {
                constant: int(0),
                left: int(0),
                right: int(1)
            }
        );

        let s = parse_spec(&with_header("bracket [Y(p), Y(q)] = (q - p) * M(p+q)")).unwrap();
        let r = &s.rules[0];
        assert_eq!(r.terms[0].target, Family::M);
        assert_eq!(
            r.terms[0].coeff,
            Affine {
                constant: int(0),
                left: int(-1),
                right: int(1)
            }
        );
    }

    #[test]
    fn rejects_non_additive_index() {
        let e = parse_spec(&with_header("bracket [L(m), L(n)] = n * L(m+n+1)")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonAdditiveIndex);
        assert_eq!(e.line, 6);
    }

    #[test]
    fn error_kinds() {
        let e = parse_spec("algebra t\nbracket [L(m), L(n)] = L(m+n)\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndeclaredFamily);
        assert_eq!((e.line, e.column), (2, 10));

        let e = parse_spec(&with_header(
            "bracket [L(m), N(n)] = n * N(m+n)\nbracket [N(a), L(b)] = 0",
        ))
        .unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateRule);

        let e = parse_spec(&with_header("bracket [L(m), L(n)] = (n * m) * L(m+n)")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonAffine);

        let e = parse_spec(&with_header("bracket [L(m), L(n)] = (n - m) L(m+n)")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);

        let e = parse_spec(&with_header("bracket [L(m), Y(p)] = M(m+p)")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonAdditiveIndex);

        let e = parse_spec("algebra t\nfamily Y degree n\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadDeclaration);

        let e = parse_spec("family L degree n\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadDeclaration);
    }

    #[test]
    fn compile_checks_same_family_antisymmetry() {
        for ok in [
            "bracket [L(m), L(n)] = (n - m) * L(m+n)",
            "bracket [Y(p), Y(q)] = (q - p) * M(p+q)",
        ] {
            assert!(compile_spec(&parse_spec(&with_header(ok)).unwrap()).is_ok(), "{ok}");
        }
        let bad = parse_spec(&with_header("bracket [L(m), L(n)] = n * L(m+n)")).unwrap();
        assert!(matches!(compile_spec(&bad), Err(Error::Compile(_))));
    }

    #[test]
    fn builtin_matches_native_table() {
        let rules = compile_spec(&builtin_esv()).unwrap();
        assert_eq!(rules.bracket_basis(B::l(1), B::l(2)), AlgebraElement::basis(B::l(3)));
        assert_eq!(rules.bracket_basis(B::n(1), B::y(1)), AlgebraElement::basis(B::y(3)));
        assert!(rules.bracket_basis(B::m(2), B::y(1)).is_zero());
        assert_eq!(
            rules.bracket_basis(B::l(2), B::y(1)),
            AlgebraElement::term(rat(-1, 2), B::y(5))
        );
        for a in basis_window(5) {
            for b in basis_window(5) {
                assert_eq!(rules.bracket_basis(a, b), Esv.bracket_basis(a, b), "[{a},{b}]");
            }
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let spec = builtin_esv();
        let printed = spec.to_string();
        assert_eq!(parse_spec(&printed).unwrap(), spec);
    }

    #[test]
    fn jacobi_validation() {
        assert!(validate_rules_jacobi(&compile_spec(&builtin_esv()).unwrap(), 4).passed());

        // Constant coefficient on a cross-family rule: antisymmetric after
        // completion, but [[L_a, L_b], N_c] picks up (b - a) N_{a+b+c}.
        let broken = compile_spec(
            &parse_spec(
                "algebra b\nfamily L degree n\nfamily N degree n\n\
                 bracket [L(m), L(n)] = (n - m) * L(m+n)\nbracket [L(m), N(n)] = N(m+n)\n",
            )
            .unwrap(),
        )
        .unwrap();
        let rep = validate_rules_jacobi(&broken, 4);
        let (a, b, c, d) = rep.witness.clone().expect("Jacobi fails");
        assert_eq!(broken.jacobi_defect(a, b, c), d);
        assert!(!d.is_zero());

        // A constant same-family rule never gets that far.
        let constant = parse_spec("algebra b\nfamily L degree n\nbracket [L(m), L(n)] = L(m+n)\n").unwrap();
        assert!(compile_spec(&constant).is_err());

        let abelian = compile_spec(&parse_spec(HEADER).unwrap()).unwrap();
        let rep = validate_rules_jacobi(&abelian, 3);
        assert!(rep.passed());
        assert_eq!(rep.triples_checked, basis_window(3).len().pow(3));
    }
}

//! Expression language over biquaternions.
//!
//! Grammar (precedence from loosest to tightest):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := juxta (('*' | '/') juxta)*
//! juxta  := factor factor*        where each continuation starts with a unit
//! factor := '-' factor | base ('^' '-'? integer)?
//! base   := number | unit | name '(' expr (',' expr)* ')' | '(' expr ')'
//! unit   := 'i' | 'j' | 'k' | 'I'
//! ```
//!
//! Juxtaposition (`2Ii`, `3Ij`) multiplies and binds tighter than explicit
//! `*`; it is only triggered by a following unit, so it never collides with
//! function names. An alphabetic run made entirely of unit letters lexes as
//! individual units (`Ij` is two tokens), anything else is a function name.
//! `*` is non-commutative and left-associative. `a/b` is right-division
//! `a·b⁻¹`; left-division is spelled `ldiv(a, b) = a⁻¹·b`.

use std::fmt;

use crate::biquaternion::{BasisElement, Biquaternion};
use crate::conj::geometric_parts_via_conjugates;
use crate::error::Error;
use crate::geom::{dual, wedge};
use crate::metric::inner_product;
use crate::repr;
use crate::tolerance::Tolerance;

/// 1-based inclusive character-column range of a subexpression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Multiplication written by adjacency; same semantics as `Mul`, kept
    /// distinct so printing preserves the parse tree.
    Juxta,
}

/// Built-in functions, all delegating to the library modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Conj,
    CConj,
    BConj,
    Inner,
    Wedge,
    Dual,
    Exp,
    Norm,
    Modulus,
    RealNorm,
    Scalar,
    Vector,
    Re,
    Im,
    GScalar,
    GBivector,
    GVector,
    GPseudo,
    Ldiv,
}

impl Builtin {
    pub const ALL: [Builtin; 19] = [
        Builtin::Conj,
        Builtin::CConj,
        Builtin::BConj,
        Builtin::Inner,
        Builtin::Wedge,
        Builtin::Dual,
        Builtin::Exp,
        Builtin::Norm,
        Builtin::Modulus,
        Builtin::RealNorm,
        Builtin::Scalar,
        Builtin::Vector,
        Builtin::Re,
        Builtin::Im,
        Builtin::GScalar,
        Builtin::GBivector,
        Builtin::GVector,
        Builtin::GPseudo,
        Builtin::Ldiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Conj => "conj",
            Builtin::CConj => "cconj",
            Builtin::BConj => "bconj",
            Builtin::Inner => "inner",
            Builtin::Wedge => "wedge",
            Builtin::Dual => "dual",
            Builtin::Exp => "exp",
            Builtin::Norm => "norm",
            Builtin::Modulus => "modulus",
            Builtin::RealNorm => "realnorm",
            Builtin::Scalar => "scalar",
            Builtin::Vector => "vector",
            Builtin::Re => "re",
            Builtin::Im => "im",
            Builtin::GScalar => "gscalar",
            Builtin::GBivector => "gbivector",
            Builtin::GVector => "gvector",
            Builtin::GPseudo => "gpseudo",
            Builtin::Ldiv => "ldiv",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Builtin::Inner | Builtin::Wedge | Builtin::Ldiv => 2,
            _ => 1,
        }
    }

    pub fn from_name(s: &str) -> Option<Builtin> {
        Builtin::ALL.iter().copied().find(|b| b.name() == s)
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Number(f64),
    Unit(BasisElement),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Neg(Box<Expr>),
    Call(Builtin, Vec<Expr>),
    Group(Box<Expr>),
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    /// An expression with no source location, for building trees by hand.
    pub fn synthetic(kind: ExprKind) -> Expr {
        Expr { kind, span: Span { start: 0, end: 0 } }
    }

    /// Tree equality ignoring source spans.
    pub fn structure_eq(&self, other: &Expr) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Number(a), ExprKind::Number(b)) => a == b,
            (ExprKind::Unit(a), ExprKind::Unit(b)) => a == b,
            (ExprKind::Binary(o1, l1, r1), ExprKind::Binary(o2, l2, r2)) => {
                o1 == o2 && l1.structure_eq(l2) && r1.structure_eq(r2)
            }
            (ExprKind::Pow(b1, n1), ExprKind::Pow(b2, n2)) => n1 == n2 && b1.structure_eq(b2),
            (ExprKind::Neg(a), ExprKind::Neg(b)) => a.structure_eq(b),
            (ExprKind::Call(f1, a1), ExprKind::Call(f2, a2)) => {
                f1 == f2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(x, y)| x.structure_eq(y))
            }
            (ExprKind::Group(a), ExprKind::Group(b)) => a.structure_eq(b),
            _ => false,
        }
    }
}

fn unit_char(b: BasisElement) -> char {
    match b {
        BasisElement::BivI => 'i',
        BasisElement::BivJ => 'j',
        BasisElement::BivK => 'k',
        BasisElement::Pseudo => 'I',
        // the parser only produces the four single-letter units
        _ => unreachable!("not a lexical unit: {b:?}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(n) => write!(f, "{n}"),
            ExprKind::Unit(b) => write!(f, "{}", unit_char(*b)),
            ExprKind::Binary(op, l, r) => match op {
                BinOp::Add => write!(f, "{l} + {r}"),
                BinOp::Sub => write!(f, "{l} - {r}"),
                BinOp::Mul => write!(f, "{l}*{r}"),
                BinOp::Div => write!(f, "{l}/{r}"),
                BinOp::Juxta => write!(f, "{l}{r}"),
            },
            ExprKind::Pow(b, n) => write!(f, "{b}^{n}"),
            ExprKind::Neg(x) => write!(f, "-{x}"),
            ExprKind::Call(b, args) => {
                write!(f, "{}(", b.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            ExprKind::Group(x) => write!(f, "({x})"),
        }
    }
}

/// Parse failure: where, what was expected, what was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    /// 1-based character column.
    pub column: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at column {}: expected {}, found {}",
            self.column, self.expected, self.found
        )
    }
}

impl std::error::Error for SyntaxError {}

/// Evaluation failure: the domain error and the offending subexpression.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalError {
    pub span: Span,
    pub error: Error,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "columns {}-{}: {}", self.span.start, self.span.end, self.error)
    }
}

impl std::error::Error for EvalError {}

/// Either kind of failure, for one-shot parse-and-eval callers.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprError {
    Syntax(SyntaxError),
    Eval(EvalError),
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax(e) => write!(f, "{e}"),
            ExprError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(f64),
    Unit(BasisElement),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
    len: usize,
}

impl Token {
    fn span(&self) -> Span {
        Span { start: self.col, end: self.col + self.len.max(1) - 1 }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Number(n) => format!("number `{n}`"),
        Tok::Unit(b) => format!("`{}`", unit_char(*b)),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let col = i + 1;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, col, len: 1 });
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            // exponent only if it is complete, so `2exp(1)` stays two tokens
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let s: String = chars[start..i].iter().collect();
            let n: f64 = s.parse().expect("lexed a malformed number");
            out.push(Token { tok: Tok::Number(n), col, len: i - start });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let run: String = chars[start..i].iter().collect();
            if run.chars().all(|ch| matches!(ch, 'i' | 'j' | 'k' | 'I')) {
                for (off, ch) in run.chars().enumerate() {
                    let unit = match ch {
                        'i' => BasisElement::BivI,
                        'j' => BasisElement::BivJ,
                        'k' => BasisElement::BivK,
                        _ => BasisElement::Pseudo,
                    };
                    out.push(Token { tok: Tok::Unit(unit), col: col + off, len: 1 });
                }
            } else {
                out.push(Token { tok: Tok::Ident(run), col, len: i - start });
            }
        } else {
            return Err(SyntaxError {
                column: col,
                expected: "a number, unit, function name, operator, or parenthesis".into(),
                found: format!("`{c}`"),
            });
        }
    }
    out.push(Token { tok: Tok::End, col: chars.len() + 1, len: 1 });
    Ok(out)
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

    fn error(&self, expected: &str) -> SyntaxError {
        let t = self.peek();
        SyntaxError { column: t.col, expected: expected.into(), found: describe(&t.tok) }
    }

    fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
        let span = Span { start: l.span.start, end: r.span.end };
        Expr { kind: ExprKind::Binary(op, Box::new(l), Box::new(r)), span }
    }

    fn parse_expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.parse_term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let r = self.parse_term()?;
            e = Self::binary(op, e, r);
        }
        Ok(e)
    }

    fn parse_term(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.parse_juxta()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.bump();
            let r = self.parse_juxta()?;
            e = Self::binary(op, e, r);
        }
        Ok(e)
    }

    fn parse_juxta(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.parse_factor()?;
        while matches!(self.peek().tok, Tok::Unit(_)) {
            let r = self.parse_factor()?;
            e = Self::binary(BinOp::Juxta, e, r);
        }
        Ok(e)
    }

    fn parse_factor(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek().tok == Tok::Minus {
            let minus = self.bump();
            let inner = self.parse_factor()?;
            let span = Span { start: minus.col, end: inner.span.end };
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), span });
        }
        let base = self.parse_base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negated = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().tok {
            Tok::Number(n) if n.fract() == 0.0 && n.abs() <= i32::MAX as f64 => {
                let t = self.bump();
                let exp = if negated { -(n as i32) } else { n as i32 };
                let span = Span { start: base.span.start, end: t.span().end };
                Ok(Expr { kind: ExprKind::Pow(Box::new(base), exp), span })
            }
            _ => Err(self.error("an integer exponent")),
        }
    }

    fn parse_base(&mut self) -> Result<Expr, SyntaxError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number(n) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Number(n), span: t.span() })
            }
            Tok::Unit(b) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Unit(b), span: t.span() })
            }
            Tok::Ident(ref name) => {
                let Some(builtin) = Builtin::from_name(name) else {
                    let all = Builtin::ALL.map(Builtin::name).join(", ");
                    return Err(SyntaxError {
                        column: t.col,
                        expected: format!("a function name ({all})"),
                        found: format!("`{name}`"),
                    });
                };
                self.bump();
                if self.peek().tok != Tok::LParen {
                    return Err(self.error("`(`"));
                }
                self.bump();
                let mut args = vec![self.parse_expr()?];
                while self.peek().tok == Tok::Comma {
                    self.bump();
                    args.push(self.parse_expr()?);
                }
                if self.peek().tok != Tok::RParen {
                    return Err(self.error("`,` or `)`"));
                }
                let rparen = self.bump();
                if args.len() != builtin.arity() {
                    return Err(SyntaxError {
                        column: t.col,
                        expected: format!(
                            "{} argument(s) to {}",
                            builtin.arity(),
                            builtin.name()
                        ),
                        found: format!("{}", args.len()),
                    });
                }
                let span = Span { start: t.col, end: rparen.span().end };
                Ok(Expr { kind: ExprKind::Call(builtin, args), span })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.parse_expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                let rparen = self.bump();
                let span = Span { start: t.col, end: rparen.span().end };
                Ok(Expr { kind: ExprKind::Group(Box::new(inner)), span })
            }
            _ => Err(self.error("a number, a unit (i, j, k, I), a function name, `(` or `-`")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.parse_expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

/// Evaluates a parse tree. Domain failures carry the span of the
/// subexpression that caused them; any non-finite intermediate is an
/// overflow.
pub fn eval(e: &Expr, tol: Tolerance) -> Result<Biquaternion, EvalError> {
    let at = |span: Span| move |error: Error| EvalError { span, error };
    let v = match &e.kind {
        ExprKind::Number(n) => Biquaternion::from_real(*n),
        ExprKind::Unit(b) => b.biquaternion(),
        ExprKind::Binary(op, l, r) => {
            let a = eval(l, tol)?;
            let b = eval(r, tol)?;
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul | BinOp::Juxta => a * b,
                BinOp::Div => a * b.inverse(tol).map_err(at(r.span))?,
            }
        }
        ExprKind::Pow(b, n) => eval(b, tol)?.powi(*n, tol).map_err(at(e.span))?,
        ExprKind::Neg(x) => -eval(x, tol)?,
        ExprKind::Call(f, args) => {
            let a = eval(&args[0], tol)?;
            match f {
                Builtin::Conj => a.conj(),
                Builtin::CConj => a.complex_conj(),
                Builtin::BConj => a.total_conj(),
                Builtin::Inner => {
                    Biquaternion::from_complex(inner_product(a, eval(&args[1], tol)?))
                }
                Builtin::Wedge => wedge(a, eval(&args[1], tol)?),
                Builtin::Dual => dual(a),
                Builtin::Exp => repr::exp(a, tol).map_err(at(e.span))?,
                Builtin::Norm => Biquaternion::from_complex(a.semi_norm()),
                Builtin::Modulus => Biquaternion::from_complex(a.modulus()),
                Builtin::RealNorm => Biquaternion::from_real(a.real_norm()),
                Builtin::Scalar => Biquaternion::from_complex(a.scalar_part()),
                Builtin::Vector => a.vector_part(),
                Builtin::Re => Biquaternion::from_quaternion(a.real_part()),
                Builtin::Im => Biquaternion::from_quaternion(a.imag_part()),
                Builtin::GScalar => geometric_parts_via_conjugates(a).scalar,
                Builtin::GBivector => geometric_parts_via_conjugates(a).bivector,
                Builtin::GVector => geometric_parts_via_conjugates(a).vector,
                Builtin::GPseudo => geometric_parts_via_conjugates(a).pseudoscalar,
                Builtin::Ldiv => a.inverse(tol).map_err(at(args[0].span))? * eval(&args[1], tol)?,
            }
        }
        ExprKind::Group(x) => eval(x, tol)?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError { span: e.span, error: Error::Overflow })
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(text: &str, tol: Tolerance) -> Result<Biquaternion, ExprError> {
    let e = parse(text).map_err(ExprError::Syntax)?;
    eval(&e, tol).map_err(ExprError::Eval)
}

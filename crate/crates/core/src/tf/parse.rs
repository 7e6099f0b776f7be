//! Recursive-descent parser for transfer-function expressions.
//!
//! ```text
//! tf     := poly [ "/" poly ]
//! poly   := "(" poly ")" | term { ("+" | "-") term }
//! term   := [ "+" | "-" ] factor { "*" factor }
//! factor := number | "s" [ "^" number ]
//! number := digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ]
//! ```
//!
//! Whitespace is ignored. Numbers inside a term multiply into the
//! coefficient and `s` factors add their exponents. Offsets in errors count
//! characters, not bytes.

use thiserror::Error;

use super::{FracPoly, FracTF, FracTerm, ModelError};

#[derive(Debug, Clone, PartialEq, Error)]
#[error("parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("unknown character '{0}'")]
    UnknownToken(char),
    #[error("malformed number")]
    MalformedNumber,
    #[error("number out of range")]
    NumberOutOfRange,
    #[error("'{op}' is missing its {expected}")]
    DanglingOperator { op: char, expected: &'static str },
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    #[error("unbalanced parentheses")]
    UnbalancedParen,
    #[error("numerator is the zero polynomial")]
    ZeroNumerator,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error(transparent)]
    Model(ModelError),
}

impl ParseError {
    fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(f64),
    S,
    Caret,
    Star,
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::S => "'s'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Star => "'*'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }

    fn op_char(self) -> Option<char> {
        match self {
            Tok::Caret => Some('^'),
            Tok::Star => Some('*'),
            Tok::Plus => Some('+'),
            Tok::Minus => Some('-'),
            Tok::Slash => Some('/'),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let single = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            's' => Some(Tok::S),
            '^' => Some(Tok::Caret),
            '*' => Some(Tok::Star),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push(Token { tok, offset: i });
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let (value, next) = lex_number(&chars, i)?;
            tokens.push(Token {
                tok: Tok::Num(value),
                offset: i,
            });
            i = next;
        } else {
            return Err(ParseError::new(i, ParseErrorKind::UnknownToken(c)));
        }
    }
    tokens.push(Token {
        tok: Tok::End,
        offset: chars.len(),
    });
    Ok(tokens)
}

/// Scans an unsigned decimal literal starting at `start`.
fn lex_number(chars: &[char], start: usize) -> Result<(f64, usize), ParseError> {
    let digits_from = |mut i: usize| {
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    let mut i = digits_from(start);
    let mut mantissa_digits = i - start;
    if i < chars.len() && chars[i] == '.' {
        let frac_end = digits_from(i + 1);
        mantissa_digits += frac_end - (i + 1);
        i = frac_end;
    }
    if mantissa_digits == 0 {
        return Err(ParseError::new(start, ParseErrorKind::MalformedNumber));
    }
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        let exp_end = digits_from(j);
        if exp_end == j {
            return Err(ParseError::new(j, ParseErrorKind::MalformedNumber));
        }
        i = exp_end;
    }
    let literal: String = chars[start..i].iter().collect();
    let value: f64 = literal
        .parse()
        .map_err(|_| ParseError::new(start, ParseErrorKind::MalformedNumber))?;
    if !value.is_finite() {
        return Err(ParseError::new(start, ParseErrorKind::NumberOutOfRange));
    }
    Ok((value, i))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Token {
        self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos];
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: Tok) -> bool {
        if self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    /// Error for an unexpected token `t`; `after` is the operator just
    /// consumed, if any, so that a missing operand reads as a dangling
    /// operator.
    fn unexpected(&self, t: Token, after: Option<Tok>, expected: &'static str) -> ParseError {
        let kind = match (t.tok, after.and_then(Tok::op_char)) {
            (Tok::End, Some(op)) => ParseErrorKind::DanglingOperator { op, expected },
            (Tok::RParen, _) if self.depth == 0 => ParseErrorKind::UnbalancedParen,
            (tok, _) => ParseErrorKind::UnexpectedToken {
                found: tok.describe(),
                expected,
            },
        };
        ParseError::new(t.offset, kind)
    }

    fn poly(&mut self, after: Option<Tok>) -> Result<Vec<FracTerm>, ParseError> {
        if self.eat(Tok::LParen) {
            self.depth += 1;
            let inner = self.poly(None)?;
            let close = self.peek();
            match close.tok {
                Tok::RParen => {
                    self.bump();
                    self.depth -= 1;
                    Ok(inner)
                }
                Tok::End => Err(ParseError::new(
                    close.offset,
                    ParseErrorKind::UnbalancedParen,
                )),
                _ => Err(self.unexpected(close, None, "')'")),
            }
        } else {
            let mut terms = vec![self.term(after)?];
            loop {
                let op = self.peek().tok;
                if !matches!(op, Tok::Plus | Tok::Minus) {
                    break;
                }
                self.bump();
                let t = self.term(Some(op))?;
                terms.push(if op == Tok::Minus {
                    FracTerm {
                        coeff: -t.coeff,
                        ..t
                    }
                } else {
                    t
                });
            }
            Ok(terms)
        }
    }

    fn term(&mut self, after: Option<Tok>) -> Result<FracTerm, ParseError> {
        let start = self.peek().offset;
        let mut lead = after;
        let mut coeff = 1.0;
        if let sign @ (Tok::Plus | Tok::Minus) = self.peek().tok {
            self.bump();
            lead = Some(sign);
            if sign == Tok::Minus {
                coeff = -1.0;
            }
        }
        let mut exponent = 0.0;
        loop {
            let (c, e) = self.factor(lead)?;
            coeff *= c;
            exponent += e;
            if !self.eat(Tok::Star) {
                break;
            }
            lead = Some(Tok::Star);
        }
        if !coeff.is_finite() || !exponent.is_finite() {
            return Err(ParseError::new(start, ParseErrorKind::NumberOutOfRange));
        }
        FracTerm::new(coeff, exponent).map_err(|e| ParseError::new(start, ParseErrorKind::Model(e)))
    }

    /// Returns the `(coefficient, exponent)` contribution of one factor.
    fn factor(&mut self, after: Option<Tok>) -> Result<(f64, f64), ParseError> {
        let t = self.peek();
        match t.tok {
            Tok::Num(v) => {
                self.bump();
                Ok((v, 0.0))
            }
            Tok::S => {
                self.bump();
                if !self.eat(Tok::Caret) {
                    return Ok((1.0, 1.0));
                }
                let e = self.peek();
                match e.tok {
                    Tok::Num(v) => {
                        self.bump();
                        Ok((1.0, v))
                    }
                    _ => Err(self.unexpected(e, Some(Tok::Caret), "exponent")),
                }
            }
            _ => Err(self.unexpected(t, after, "number or 's'")),
        }
    }
}

/// Parses `text` into a normalized [`FracTF`]. A bare polynomial `P` is read
/// as `P/1`.
pub fn parse_tf(text: &str) -> Result<FracTF, ParseError> {
    let tokens = lex(text)?;
    if tokens[0].tok == Tok::End {
        return Err(ParseError::new(0, ParseErrorKind::Empty));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        depth: 0,
    };

    let num_start = p.peek().offset;
    let num_terms = p.poly(None)?;
    let den = if p.eat(Tok::Slash) {
        let den_start = p.peek().offset;
        Some((den_start, p.poly(Some(Tok::Slash))?))
    } else {
        None
    };

    let rest = p.peek();
    if rest.tok != Tok::End {
        return Err(p.unexpected(rest, None, "'+', '-', '*', '/' or end of input"));
    }

    let numerator = FracPoly::from_terms(num_terms).map_err(|e| {
        ParseError::new(
            num_start,
            match e {
                ModelError::ZeroPolynomial => ParseErrorKind::ZeroNumerator,
                other => ParseErrorKind::Model(other),
            },
        )
    })?;
    let denominator = match den {
        Some((offset, terms)) => FracPoly::from_terms(terms).map_err(|e| {
            ParseError::new(
                offset,
                match e {
                    ModelError::ZeroPolynomial => ParseErrorKind::ZeroDenominator,
                    other => ParseErrorKind::Model(other),
                },
            )
        })?,
        None => FracPoly::one(),
    };
    Ok(FracTF::new(numerator, denominator))
}

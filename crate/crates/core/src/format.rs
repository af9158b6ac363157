//! Text rendering and parsing of polynomials.
//!
//! Terms are grouped by the exponent of `b`, lowest first, and listed in
//! increasing tail-lex order inside a group. When there is more than one
//! group, a group with several terms is parenthesized, e.g.
//! `(x1 + x2) + b*x1*x2` or `x1^2 + b*(x1^2*x2 + x1*x2^2)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

fn factors(coeff: &BigInt, m: &Monomial) -> String {
    let mut parts = Vec::new();
    if !coeff.is_one() {
        parts.push(coeff.to_string());
    }
    if !m.is_one() {
        parts.push(m.to_string());
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn join_signed<'a>(items: impl Iterator<Item = (bool, String)> + 'a) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in items.enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let layers: Vec<(u32, Polynomial)> = (0..=self.beta_degree().unwrap_or(0))
            .map(|d| (d, self.beta_component(d)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        let grouped = layers.len() > 1;
        let pieces = layers.iter().flat_map(|(d, layer)| {
            let b = Monomial::new(vec![], *d);
            if grouped && layer.len() > 1 {
                let inner = join_signed(
                    layer
                        .terms()
                        .map(|(m, c)| (c.is_negative(), factors(&c.abs(), m))),
                );
                let body = if *d == 0 {
                    format!("({inner})")
                } else {
                    format!("{b}*({inner})")
                };
                vec![(false, body)]
            } else {
                layer
                    .terms()
                    .map(|(m, c)| (c.is_negative(), factors(&c.abs(), &m.mul(&b))))
                    .collect()
            }
        });
        f.write_str(&join_signed(pieces))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses sums, differences, products, nonnegative integer powers and
    /// parentheses over integers, `x1, x2, ...` and `b`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s,
            chars: s.char_indices().peekable(),
        };
        let out = p.expr()?;
        p.skip_ws();
        match p.chars.peek() {
            None => Ok(out),
            Some(&(i, ch)) => Err(p.error(i, &format!("unexpected {ch:?}"))),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Parser<'_> {
    fn error(&self, at: usize, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {at} in {:?}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn offset(&mut self) -> usize {
        self.chars.peek().map_or(self.src.len(), |&(i, _)| i)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.chars.next();
            let rhs = self.term()?;
            if op == '+' {
                acc += &rhs;
            } else {
                acc -= &rhs;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.chars.next();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek() == Some('-') {
            self.chars.next();
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            self.skip_ws();
            let at = self.offset();
            let e = self
                .digits()
                .ok_or_else(|| self.error(at, "expected exponent"))?;
            let e: u32 = e
                .parse()
                .map_err(|_| self.error(at, "exponent too large"))?;
            let mut out = Polynomial::one();
            for _ in 0..e {
                out = &out * &base;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
        }
        (!s.is_empty()).then_some(s)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let next = self.peek();
        let at = self.offset();
        match next {
            Some('(') => {
                self.chars.next();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    let at = self.offset();
                    return Err(self.error(at, "expected ')'"));
                }
                self.chars.next();
                Ok(inner)
            }
            Some('b') => {
                self.chars.next();
                Ok(Polynomial::beta())
            }
            Some('x') => {
                self.chars.next();
                let i = self
                    .digits()
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| self.error(at, "expected variable index"))?;
                Ok(Polynomial::x(i))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("peeked a digit");
                let n: BigInt = d.parse().expect("digits form an integer");
                Ok(if n.is_zero() {
                    Polynomial::zero()
                } else {
                    Polynomial::constant(n)
                })
            }
            Some(c) => Err(self.error(at, &format!("unexpected {c:?}"))),
            None => Err(self.error(at, "unexpected end of input")),
        }
    }
}

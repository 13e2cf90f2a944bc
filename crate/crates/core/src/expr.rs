//! Text syntax for polynomials.
//!
//! Identifiers are `t1..tn` and `x1..xn` (fundamental-weight generators) in
//! canonical coordinates, or `t1..t(n+1)`, `x1..x(n+1)` read as `z`-indexed
//! variables in type-A coordinates. `a<i>` and `ax<i>` denote the simple
//! roots `alpha_i(t)` and `alpha_i(x)` in either mode. Operators are
//! `+ - * ^`, parentheses, and `/` by a nonzero constant, so `3/2` is a
//! rational literal.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polynomial::{self, t_linear, write_with_names, x_linear, DoublePolynomial};
use crate::root_system::{Family, RootSystem, Weight};
use crate::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Coords {
    /// Fundamental-weight generators.
    #[default]
    Canonical,
    /// Type-A `z` coordinates, `z_k = omega_{k-1} - omega_k`.
    TypeA,
}

impl FromStr for Coords {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" | "omega" => Ok(Coords::Canonical),
            "zA" | "za" | "z" => Ok(Coords::TypeA),
            _ => Err(Error::Parse(format!("unknown coordinate mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else {
            let op = match c {
                '\u{2212}' => '-',
                '\u{00b7}' => '*',
                other => other,
            };
            if !"+-*/^()".contains(op) {
                return Err(Error::Parse(format!("unexpected character {c:?}")));
            }
            out.push(Tok::Op(op));
            k += 1;
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    rs: &'a RootSystem,
    coords: Coords,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<DoublePolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<DoublePolynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse(format!("can only divide by a nonzero constant, got {d}")));
                }
                acc = acc.scale(&d.constant_term().recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<DoublePolynomial> {
        if self.eat_op('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat_op('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<DoublePolynomial> {
        let base = self.atom()?;
        if self.eat_op('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected a nonnegative integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<DoublePolynomial> {
        let n = self.rs.rank();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(DoublePolynomial::constant(n, Rational::from_integer(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.variable(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn variable(&self, name: &str) -> Result<DoublePolynomial> {
        let n = self.rs.rank();
        let bad = || Error::Parse(format!("unknown variable {name:?} for {}", self.rs.cartan_type()));
        let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (head, idx) = name.split_at(split);
        let idx: usize = idx.parse().map_err(|_| bad())?;
        let simple = |i: usize| -> Result<Weight> {
            if i == 0 || i > n {
                Err(bad())
            } else {
                Ok(Weight::simple_root(n, i))
            }
        };
        match (head, self.coords) {
            ("a", _) => Ok(t_linear(self.rs, &simple(idx)?)),
            ("ax", _) => Ok(x_linear(self.rs, &simple(idx)?)),
            ("t" | "x", Coords::Canonical) => {
                if idx == 0 || idx > n {
                    return Err(bad());
                }
                Ok(if head == "t" { DoublePolynomial::t(n, idx) } else { DoublePolynomial::x(n, idx) })
            }
            ("t" | "x", Coords::TypeA) => {
                if idx == 0 || idx > n + 1 {
                    return Err(bad());
                }
                Ok(if head == "t" { polynomial::z_t(n, idx) } else { polynomial::z_x(n, idx) })
            }
            _ => Err(bad()),
        }
    }
}

fn check_coords(rs: &RootSystem, coords: Coords) -> Result<()> {
    if coords == Coords::TypeA && rs.cartan_type().family != Family::A {
        return Err(Error::Parse(format!("z coordinates need type A, not {}", rs.cartan_type())));
    }
    Ok(())
}

pub fn parse_polynomial(text: &str, rs: &RootSystem, coords: Coords) -> Result<DoublePolynomial> {
    check_coords(rs, coords)?;
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, rs, coords };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(out)
}

/// Rendering options for polynomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub coords: Coords,
    /// Write t-variables as `a1..an` and x-variables as `ax1..axn` in the
    /// simple-root basis.
    pub alpha: bool,
}

struct Named<'a> {
    poly: DoublePolynomial,
    names: &'a dyn Fn(usize) -> String,
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_with_names(f, &self.poly, self.names)
    }
}

/// Deterministic text for a polynomial under a rendering style.
pub fn render(rs: &RootSystem, p: &DoublePolynomial, style: Style) -> String {
    let n = rs.rank();
    if style.alpha {
        let names = move |slot: usize| if slot < n { format!("a{}", slot + 1) } else { format!("ax{}", slot - n + 1) };
        return Named { poly: polynomial::to_alpha_coordinates(rs, p), names: &names }.to_string();
    }
    match style.coords {
        Coords::Canonical => p.to_string(),
        Coords::TypeA => polynomial::to_z_coordinates(p).to_string(),
    }
}

/// Parses a rational literal such as `-3/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => {
            (a.trim().parse::<BigInt>().map_err(|_| bad())?, b.trim().parse::<BigInt>().map_err(|_| bad())?)
        }
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let rs = RootSystem::from_type_str("A2").unwrap();
        let p = parse_polynomial("3/2*t1^2 - x2*(t1+1) + 0*x1", &rs, Coords::Canonical).unwrap();
        assert_eq!(p.to_string(), "3/2*t1^2-t1*x2-x2");
        assert_eq!(parse_polynomial("0", &rs, Coords::Canonical).unwrap().to_string(), "0");
        assert_eq!(parse_polynomial("a1", &rs, Coords::Canonical).unwrap().to_string(), "2*t1-t2");
        assert_eq!(parse_polynomial("t2 \u{2212} t1", &rs, Coords::TypeA).unwrap().to_string(), "2*t1-t2");
        for bad in ["", "t3", "t0", "x1/t1", "1/0", "(t1", "t1 t2", "y1", "t1^x1", "t1^-1"] {
            assert!(parse_polynomial(bad, &rs, Coords::Canonical).is_err(), "{bad}");
        }
        let b2 = RootSystem::from_type_str("B2").unwrap();
        assert!(parse_polynomial("t1", &b2, Coords::TypeA).is_err());
    }

    #[test]
    fn render_styles() {
        let rs = RootSystem::from_type_str("A2").unwrap();
        let p = parse_polynomial("t1^2*t2", &rs, Coords::TypeA).unwrap();
        assert_eq!(render(&rs, &p, Style { coords: Coords::TypeA, alpha: false }), "t1^2*t2");
        let r = parse_polynomial("a1*a2+ax1", &rs, Coords::Canonical).unwrap();
        assert_eq!(render(&rs, &r, Style { alpha: true, ..Style::default() }), "a1*a2+ax1");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/2").unwrap(), Rational::new((-3).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}

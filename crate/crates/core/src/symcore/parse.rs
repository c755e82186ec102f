//! Textual scalar syntax: integers, coordinate names, `i`, `+ - * / ^`
//! (non-negative integer powers) and parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::chart::Chart;
use super::gauss::GaussRational;
use super::scalar::Scalar;
use crate::error::{GeoError, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push((col, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((col, Tok::Ident(chars[start..k].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((col, Tok::Op(c)));
            k += 1;
        } else {
            return Err(GeoError::ScalarSyntax { col, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    chart: &'a Chart,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(c, _)| *c).unwrap_or(self.end_col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(GeoError::ScalarSyntax { col: self.col(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs).map_err(|_| GeoError::ScalarSyntax {
                    col,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Scalar::constant(GaussRational::from_rational(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                if name == "i" {
                    self.pos += 1;
                    return Ok(Scalar::i());
                }
                let idx = self.chart.index_of(&name).or_else(|_| self.err(format!("unknown coordinate `{name}`")))?;
                self.pos += 1;
                Ok(Scalar::coord(idx))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses scalar syntax against a chart's coordinate names.
pub fn parse_scalar(chart: &Chart, text: &str) -> Result<Scalar> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, chart, end_col: text.chars().count() + 1 };
    let s = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_and_normalizes() {
        let c = chart();
        let s = parse_scalar(&c, "(x^2 - 1)/(x - 1)").unwrap();
        assert_eq!(s, parse_scalar(&c, "x + 1").unwrap());
        let s = parse_scalar(&c, "y/(2*y + 2*x*y)").unwrap();
        assert_eq!(s.to_text(c.coords()), "(1/2)/(x + 1)");
        let s = parse_scalar(&c, "(1 + i)*(1 - i)").unwrap();
        assert_eq!(s, Scalar::from_int(2));
        assert_eq!(parse_scalar(&c, "-x^2").unwrap(), -(Scalar::coord(0).pow(2)));
    }

    #[test]
    fn printing_round_trips() {
        let c = chart();
        for t in ["-1/(z^2 + 2*z + 1)", "(1/2)/(x + 1)", "(1 + 2*i)*x*y - z^3", "x*y/(z + 1)", "1/x^2"] {
            let s = parse_scalar(&c, t).unwrap();
            let printed = s.to_text(c.coords());
            assert_eq!(parse_scalar(&c, &printed).unwrap(), s, "{t} -> {printed}");
        }
    }

    #[test]
    fn errors_are_positioned() {
        let c = chart();
        assert!(matches!(parse_scalar(&c, "x + w"), Err(GeoError::ScalarSyntax { col: 5, .. })));
        assert!(matches!(parse_scalar(&c, "x ^ y"), Err(GeoError::ScalarSyntax { col: 5, .. })));
        assert!(matches!(parse_scalar(&c, "(x"), Err(GeoError::ScalarSyntax { col: 3, .. })));
        assert!(matches!(parse_scalar(&c, "x / 0"), Err(GeoError::ScalarSyntax { col: 3, .. })));
        assert!(matches!(parse_scalar(&c, "x $"), Err(GeoError::ScalarSyntax { col: 3, .. })));
    }
}

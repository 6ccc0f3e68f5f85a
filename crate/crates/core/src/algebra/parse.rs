//! Recursive-descent parser for polynomial expressions:
//! `+ - * ^`, parentheses, integer literals and identifiers.

use crate::algebra::fp::PrimeField;
use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '\''
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            if i < chars.len() && is_ident_char(chars[i]) && !chars[i].is_ascii_digit() {
                return Err(Error::Parse(format!("malformed token near `{lit}{}`", chars[i])));
            }
            out.push(Tok::Num(lit.parse().map_err(|_| Error::Parse(format!("bad integer `{lit}`")))?));
        } else if is_ident_char(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [String],
    _f: std::marker::PhantomData<F>,
}

impl<F: PrimeField> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let n = self.vars.len();
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(e)) if e >= 0 && e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let n = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(n, F::from_i64(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                Ok(Poly::var(n, i))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_poly<F: PrimeField>(text: &str, vars: &[String]) -> Result<Poly<F>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, vars, _f: std::marker::PhantomData };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {:?}", p.toks[p.pos])));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;

    type F3 = Fp<3>;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "X_T^2".replace("^2", "2"), "T.1".into(), "X'".into()]
    }

    #[test]
    fn precedence_and_round_trip() {
        let v = names();
        let p = parse_poly::<F3>("(x + 2*y)^2 - x*y + X_T2*T.1 + X'^3", &v).unwrap();
        let t = p.to_text(&v);
        assert_eq!(parse_poly::<F3>(&t, &v).unwrap(), p);
        let q = parse_poly::<F3>("x^2 + 4*x*y + 4*y^2 - x*y + X_T2*T.1 + X'^3", &v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_garbage() {
        let v = names();
        assert!(parse_poly::<F3>("x +", &v).is_err());
        assert!(parse_poly::<F3>("z", &v).is_err());
        assert!(parse_poly::<F3>("(x", &v).is_err());
        assert!(parse_poly::<F3>("x / y", &v).is_err());
        assert!(parse_poly::<F3>("", &v).is_err());
    }

    #[test]
    fn unary_minus() {
        let v = names();
        assert_eq!(parse_poly::<F3>("-x", &v).unwrap(), parse_poly::<F3>("2*x", &v).unwrap());
        assert_eq!(parse_poly::<F3>("x*-y", &v).unwrap(), parse_poly::<F3>("2*x*y", &v).unwrap());
    }
}

//! Text grammar for polynomials and generator lists.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ['/' INT] | VAR ['^' INT]
//! ```
//!
//! Variables are the ring's names, e.g. `x_0 .. x_5` or `t_0 .. t_2`.
//! Generator lists separate polynomials by commas or newlines; `#` starts a
//! comment that runs to the end of the line.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_EXPONENT};
use crate::poly::Polynomial;
use crate::ring::RingRef;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }
}

/// Parse one polynomial over the ring's field.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let field = ring.field();
    let n = ring.nvars();
    let mut terms = Vec::new();
    if lx.peek().is_none() {
        return lx.err("empty polynomial");
    }
    let mut first = true;
    loop {
        let mut sign = 1;
        match lx.peek() {
            Some(b'+') => lx.pos += 1,
            Some(b'-') => {
                sign = -1;
                lx.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return lx.err(format!("unexpected `{}`", c as char)),
            None => break,
        }
        first = false;
        let mut coeff = BigRational::from_integer(BigInt::from(sign));
        let mut exps = vec![0u32; n];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.integer()?;
                    let mut den = BigInt::one();
                    if lx.peek() == Some(b'/') {
                        lx.pos += 1;
                        let at = lx.pos;
                        den = lx.integer()?;
                        if den.is_zero() {
                            return Err(Error::Syntax {
                                pos: at,
                                msg: "division by zero coefficient".into(),
                            });
                        }
                    }
                    coeff *= BigRational::new(num, den);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = lx.ident()?;
                    let idx = ring.var_index(&name).ok_or(Error::UnknownVariable(name))?;
                    let mut e = 1u32;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        let k = lx.integer()?;
                        e = match u32::try_from(k) {
                            Ok(k) if k <= MAX_EXPONENT => k,
                            _ => return Err(Error::DegreeOverflow),
                        };
                    }
                    exps[idx] += e;
                    if exps[idx] > MAX_EXPONENT {
                        return Err(Error::DegreeOverflow);
                    }
                }
                Some(_) => return lx.err("expected a coefficient or variable"),
                None => return lx.err("unexpected end of input"),
            }
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
                continue;
            }
            break;
        }
        let c = field.from_rational(&coeff).map_err(|_| Error::Syntax {
            pos: lx.pos,
            msg: "coefficient denominator vanishes in the field".into(),
        })?;
        terms.push((Monomial::new(&exps)?, c));
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parse a generator list: polynomials separated by commas or newlines,
/// `#` comments allowed. Blank input yields an empty list.
pub fn parse_generators(text: &str, ring: &RingRef) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut col = 0;
        for piece in body.split(',') {
            if !piece.trim().is_empty() {
                let p = parse_polynomial(piece, ring).map_err(|e| match e {
                    Error::Syntax { pos, msg } => Error::Syntax { pos: pos + offset + col, msg },
                    other => other,
                })?;
                out.push(p);
            }
            col += piece.len() + 1;
        }
        offset += line.len();
    }
    Ok(out)
}

/// Canonical text form; `parse_polynomial(render_polynomial(f))` returns `f`.
pub fn render_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { c.neg() } else { c.clone() };
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for (v, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[v].clone()),
                _ => factors.push(format!("{}^{}", vars[v], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn render_generators(gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(render_polynomial).collect()
}

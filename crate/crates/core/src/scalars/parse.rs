//! Parser for scalar encodings.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
//! `factor := '-' factor | int | g_d ['^' n] | q ['^' int] | zeta(rat) | '(' expr ')'`.
//! In the ℓ-adic world sums may only combine `F̄_ℓ` values, which then
//! denote Teichmüller representatives.

use num_rational::Ratio;

use super::{AdicUnit, ModScalar, PrimeContext, Scalar, World};
use crate::error::{Error, Result};

#[derive(Clone, Copy)]
enum Value {
    Mod(ModScalar),
    Adic(AdicUnit),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    world: World,
    ctx: &'a PrimeContext,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| err(format!("expected integer at offset {start}")))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn add(&self, a: Value, b: Value) -> Result<Value> {
        match (a, b) {
            (Value::Mod(x), Value::Mod(y)) => Ok(Value::Mod(x.add(&y))),
            _ => Err(err("sums are only defined for F̄_ℓ values")),
        }
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Mod(x), Value::Mod(y)) => Value::Mod(x.mul(&y)),
            (Value::Mod(x), Value::Adic(u)) | (Value::Adic(u), Value::Mod(x)) => {
                let t = AdicUnit::teichmuller(x).map_err(|_| err("zero factor in ℓ-adic unit"))?;
                Value::Adic(u.mul(&t))
            }
            (Value::Adic(u), Value::Adic(v)) => Value::Adic(u.mul(&v)),
        })
    }

    fn neg(&self, a: Value) -> Result<Value> {
        match a {
            Value::Mod(x) => Ok(Value::Mod(x.neg())),
            Value::Adic(_) => Err(err("negation of an ℓ-adic unit must be written as a Teichmüller factor")),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = self.add(acc, t)?;
            } else if self.peek() == Some(b'-') {
                self.pos += 1;
                let t = self.term()?;
                let t = self.neg(t)?;
                acc = self.add(acc, t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = self.mul(acc, f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value> {
        let ell = self.ctx.ell();
        match self.peek() {
            None => Err(err("unexpected end of scalar")),
            Some(b'-') => {
                self.pos += 1;
                let f = self.factor()?;
                self.neg(f)
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Value::Mod(ModScalar::from_int(ell, (n % ell) as i64)))
            }
            Some(_) => {
                let id = self.ident();
                if let Some(d) = id.strip_prefix("g_") {
                    let d: u32 = d.parse().map_err(|_| err(format!("bad generator name {id}")))?;
                    if d == 0 {
                        return Err(err("generator degree must be positive"));
                    }
                    let g = ModScalar::generator(ell, d)?;
                    let e = if self.eat(b'^') { self.uint()? as i64 } else { 1 };
                    Ok(Value::Mod(g.pow(e)))
                } else if id == "q" {
                    let e = if self.eat(b'^') { self.int()? } else { 1 };
                    Ok(match self.world {
                        World::ModL => Value::Mod(self.ctx.q_bar().pow(e)),
                        World::LAdic => Value::Adic(AdicUnit::q_power(ell, e)),
                    })
                } else if id == "zeta" {
                    self.expect(b'(')?;
                    let num = self.int()?;
                    let den = if self.eat(b'/') { self.uint()? as i64 } else { 1 };
                    self.expect(b')')?;
                    if den == 0 {
                        return Err(err("zero denominator"));
                    }
                    match self.world {
                        World::ModL => Err(err("zeta(..) is only available in the l-adic world")),
                        World::LAdic => Ok(Value::Adic(AdicUnit::new(0, ModScalar::one(ell), Ratio::new(num, den))?)),
                    }
                } else {
                    Err(err(format!("unexpected token {id:?} at offset {}", self.pos)))
                }
            }
        }
    }
}

/// Parses a nonzero scalar of the given world.
pub fn parse_scalar(text: &str, world: World, ctx: &PrimeContext) -> Result<Scalar> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        world,
        ctx,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input in scalar {text:?}")));
    }
    match (v, world) {
        (Value::Mod(m), _) if m.is_zero() => Err(Error::Domain(format!("scalar {text:?} is zero"))),
        (Value::Mod(m), World::ModL) => Ok(Scalar::Mod(m)),
        (Value::Mod(m), World::LAdic) => Ok(Scalar::Adic(AdicUnit::teichmuller(m)?)),
        (Value::Adic(u), World::LAdic) => Ok(Scalar::Adic(u)),
        (Value::Adic(_), World::ModL) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let ctx = PrimeContext::new(3, 2).unwrap();
        for w in [World::ModL, World::LAdic] {
            for text in ["1", "2", "g_2 + 1", "2*g_2", "g_3^2 + 2*g_3 + 1"] {
                let s = parse_scalar(text, w, &ctx).unwrap();
                assert_eq!(parse_scalar(&s.encode(), w, &ctx).unwrap(), s);
            }
        }
        let u = parse_scalar("q^-1 * (g_2 + 1) * zeta(1/3)", World::LAdic, &ctx).unwrap();
        assert_eq!(u.encode(), "q^-1 * g_2 + 1 * zeta(1/3)".replace("g_2 + 1", "(g_2 + 1)"));
        assert_eq!(parse_scalar(&u.encode(), World::LAdic, &ctx).unwrap(), u);
    }

    #[test]
    fn mod_world_values() {
        let ctx = PrimeContext::new(7, 2).unwrap();
        assert_eq!(parse_scalar("q^-1", World::ModL, &ctx).unwrap().encode(), "4");
        assert_eq!(parse_scalar("-1", World::ModL, &ctx).unwrap().encode(), "6");
        assert!(parse_scalar("0", World::ModL, &ctx).is_err());
        assert!(parse_scalar("zeta(1/7)", World::ModL, &ctx).is_err());
        assert!(parse_scalar("1 +", World::ModL, &ctx).is_err());
    }
}

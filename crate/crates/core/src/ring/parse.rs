//! Recursive-descent parser for class expressions.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := ('+' | '-') unary | primary
//! primary := INT | 'L' ('^' exp)? | '[' NAME ']' | 'U' '(' NAME ')' | '(' sum ')'
//! exp     := '{' rat '}' | '(' rat ')' | ('+' | '-')? INT
//! rat     := ('+' | '-')? INT ('/' INT)?
//! ```
//!
//! `*` is the ⊙ product. Exponents must reduce to a denominator of 1 or 2.

use num_bigint::BigInt;
use num_integer::Integer;

use super::class::MotivicClass;
use super::table::{is_valid_name, AtomDef, AtomTable};
use super::{HalfInt, RingError};

pub fn parse(text: &str, table: &AtomTable) -> Result<MotivicClass, RingError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, table };
    let value = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    table: &'a AtomTable,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> RingError {
        RingError::Syntax { pos: self.pos, msg: msg.into() }
    }

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

    fn expect(&mut self, c: u8) -> Result<(), RingError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => Err(self.syntax(format!("expected {:?}, found {:?}", c as char, got as char))),
                None => Err(self.syntax(format!("expected {:?}, found end of input", c as char))),
            }
        }
    }

    fn sum(&mut self) -> Result<MotivicClass, RingError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.product()?;
            } else if self.eat(b'-') {
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<MotivicClass, RingError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let rhs = self.unary()?;
            acc = acc.smash(&rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MotivicClass, RingError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        let value = self.primary()?;
        if self.peek() == Some(b'^') {
            return Err(self.syntax("'^' is only allowed directly after L"));
        }
        Ok(value)
    }

    fn integer(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits parse"))
    }

    fn name(&mut self, close: u8) -> Result<String, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos] != close {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("").trim().to_string();
        if !is_valid_name(&name) {
            self.pos = start;
            return Err(self.syntax(format!("invalid name {name:?}")));
        }
        self.expect(close)?;
        Ok(name)
    }

    fn primary(&mut self) -> Result<MotivicClass, RingError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(MotivicClass::integer(self.integer()?)),
            Some(b'L') => {
                self.pos += 1;
                if self.eat(b'^') {
                    Ok(MotivicClass::lefschetz(self.exponent()?))
                } else {
                    Ok(MotivicClass::lefschetz(HalfInt::from_int(1)))
                }
            }
            Some(b'[') => {
                self.pos += 1;
                let name = self.name(b']')?;
                match self.table.lookup(&name) {
                    Some(AtomDef::Point) => Ok(MotivicClass::one()),
                    Some(AtomDef::Gm) => Ok(MotivicClass::gm()),
                    Some(AtomDef::Atom(a)) => Ok(MotivicClass::atom(&a)),
                    None => Err(RingError::UnknownAtom(name)),
                }
            }
            Some(b'U') => {
                self.pos += 1;
                self.expect(b'(')?;
                let name = self.name(b')')?;
                if self.table.bundle(&name).is_none() {
                    return Err(RingError::UnknownUnit(name));
                }
                Ok(MotivicClass::unit(&name))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) => Err(self.syntax(format!("unexpected {:?}", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<HalfInt, RingError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let (num, den) = if self.eat(b'{') {
            let r = self.rational()?;
            self.expect(b'}')?;
            r
        } else if self.eat(b'(') {
            let r = self.rational()?;
            self.expect(b')')?;
            r
        } else {
            let negative = if self.eat(b'-') {
                true
            } else {
                self.eat(b'+');
                false
            };
            let n = self.integer()?;
            (if negative { -n } else { n }, BigInt::from(1))
        };
        if den == BigInt::from(0) {
            return Err(RingError::BadExponent { pos: start, msg: "zero denominator".into() });
        }
        let g = num.gcd(&den);
        let (num, den) = (&num / &g, &den / &g);
        let twice = if den == BigInt::from(1) {
            num * 2
        } else if den == BigInt::from(2) {
            num
        } else {
            return Err(RingError::BadExponent {
                pos: start,
                msg: format!("denominator {den} is neither 1 nor 2"),
            });
        };
        let twice: i64 = twice
            .try_into()
            .map_err(|_| RingError::BadExponent { pos: start, msg: "exponent out of range".into() })?;
        Ok(HalfInt::from_twice(twice))
    }

    fn rational(&mut self) -> Result<(BigInt, BigInt), RingError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let num = self.integer()?;
        let num = if negative { -num } else { num };
        let den = if self.eat(b'/') { self.integer()? } else { BigInt::from(1) };
        Ok((num, den))
    }
}

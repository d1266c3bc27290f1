//! Expression language for algebra elements.
//!
//! ```text
//! tensor  := slots (('+' | '-') slots)*        leading sign allowed
//! slots   := product ('@' product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? integer)?           negative powers: scalars only
//! atom    := integer ('/' integer)? | name | '(' tensor ')'
//! ```
//!
//! Names are the generators of the selected algebra or the scalar symbols
//! `a, alpha, beta, gamma, E`. Products are normal-ordered as they are built.
//! Juxtaposition is not multiplication.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{CoeffPoly, Rational, Var};
use crate::ncpoly::{Algebra, NcElement, TensorElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown generator '{name}' at position {pos} for algebra {algebra}")]
    UnknownGenerator { name: String, pos: usize, algebra: String },
    #[error("at position {pos}: {message}")]
    Value { pos: usize, message: String },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            out.push((pos, Tok::Name(chars[start..k].iter().map(|p| p.1).collect())));
        } else if "+-*^/()@".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Value {
    Elem(NcElement),
    Tensor(TensorElement),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    k: usize,
    end: usize,
    alg: &'a Algebra,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.k).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.k).map(|t| t.0).unwrap_or(self.end)
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn tensor(&mut self) -> Result<Value, ParseError> {
        let mut neg = false;
        if self.at_sym('-') {
            self.k += 1;
            neg = true;
        } else if self.at_sym('+') {
            self.k += 1;
        }
        let pos = self.pos();
        let mut acc = self.slots()?;
        if neg {
            acc = negate(acc);
        }
        loop {
            let sub = if self.at_sym('+') {
                false
            } else if self.at_sym('-') {
                true
            } else {
                return Ok(acc);
            };
            self.k += 1;
            let mut rhs = self.slots()?;
            if sub {
                rhs = negate(rhs);
            }
            acc = add(acc, rhs).map_err(|message| ParseError::Value { pos, message })?;
        }
    }

    fn slots(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        let mut acc = self.product()?;
        while self.at_sym('@') {
            self.k += 1;
            let rhs = self.product()?;
            acc = match (acc, rhs) {
                (Value::Elem(x), Value::Elem(y)) => Value::Tensor(TensorElement::outer(&x, &y)),
                (Value::Tensor(t), Value::Elem(y)) if t.rank() < 3 => Value::Tensor(t.append(&y)),
                _ => {
                    return Err(ParseError::Value {
                        pos,
                        message: "tensors of rank above 3 are not supported".into(),
                    })
                }
            };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        let mut acc = self.unary()?;
        while self.at_sym('*') {
            self.k += 1;
            let rhs = self.unary()?;
            acc = match (acc, rhs) {
                (Value::Elem(x), Value::Elem(y)) => Value::Elem(self.alg.mul(&x, &y)),
                (Value::Tensor(t), Value::Elem(y)) | (Value::Elem(y), Value::Tensor(t)) => {
                    match scalar_of(&y) {
                        Some(c) => Value::Tensor(t.scale(&c).truncate_a(self.alg.truncation())),
                        None => {
                            return Err(ParseError::Value {
                                pos,
                                message: "only scalars can multiply a tensor".into(),
                            })
                        }
                    }
                }
                (Value::Tensor(_), Value::Tensor(_)) => {
                    return Err(ParseError::Value {
                        pos,
                        message: "write tensor products with '@' and bracket each slot".into(),
                    })
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        if self.at_sym('-') {
            self.k += 1;
            return Ok(negate(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base = self.atom()?;
        if !self.at_sym('^') {
            return Ok(base);
        }
        self.k += 1;
        let pos = self.pos();
        let neg = if self.at_sym('-') {
            self.k += 1;
            true
        } else {
            false
        };
        let n: u32 = match self.peek() {
            Some(Tok::Int(n)) => match u32::try_from(n.clone()) {
                Ok(n) => n,
                Err(_) => return self.syntax("exponent too large"),
            },
            _ => return self.syntax("expected an integer exponent"),
        };
        self.k += 1;
        let Value::Elem(e) = base else {
            return Err(ParseError::Value {
                pos,
                message: "tensors cannot be raised to a power".into(),
            });
        };
        if !neg {
            return Ok(Value::Elem(self.alg.pow(&e, n)));
        }
        let inv = scalar_of(&e).and_then(|c| invert_monomial(&c)).ok_or(ParseError::Value {
            pos,
            message: "negative exponents are allowed only on a single scalar term such as a".into(),
        })?;
        Ok(Value::Elem(self.alg.scalar(inv.pow(n))))
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.k += 1;
                let mut r = Rational::from_integer(n);
                if self.at_sym('/') {
                    self.k += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.k += 1;
                            r /= Rational::from_integer(d);
                        }
                        Some(Tok::Int(_)) => return self.syntax("division by zero"),
                        _ => return self.syntax("expected an integer denominator"),
                    }
                }
                Ok(Value::Elem(self.alg.scalar(CoeffPoly::constant(r))))
            }
            Some(Tok::Name(name)) => {
                self.k += 1;
                if let Some(v) = Var::from_name(&name) {
                    return Ok(Value::Elem(self.alg.scalar(CoeffPoly::var(v))));
                }
                match self.alg.generator_index(&name) {
                    Some(g) => Ok(Value::Elem(self.alg.gen(g))),
                    None => Err(ParseError::UnknownGenerator {
                        name,
                        pos,
                        algebra: self.alg.name().to_string(),
                    }),
                }
            }
            Some(Tok::Sym('(')) => {
                self.k += 1;
                let v = self.tensor()?;
                if !self.at_sym(')') {
                    return self.syntax("expected ')'");
                }
                self.k += 1;
                Ok(v)
            }
            Some(t) => self.syntax(format!("unexpected {}", describe(&t))),
            None => self.syntax("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Name(s) => format!("name '{s}'"),
        Tok::Sym(c) => format!("'{c}'"),
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Elem(e) => Value::Elem(e.neg()),
        Value::Tensor(t) => Value::Tensor(t.scale(&CoeffPoly::from_int(-1))),
    }
}

fn add(x: Value, y: Value) -> Result<Value, String> {
    match (x, y) {
        (Value::Elem(x), Value::Elem(y)) => Ok(Value::Elem(x.add(&y))),
        (Value::Tensor(s), Value::Tensor(t)) if s.rank() == t.rank() => Ok(Value::Tensor(s.add(&t))),
        (Value::Tensor(s), Value::Tensor(t)) => Err(format!("cannot add tensors of rank {} and {}", s.rank(), t.rank())),
        _ => Err("cannot add an element and a tensor".into()),
    }
}

fn scalar_of(e: &NcElement) -> Option<CoeffPoly> {
    if e.is_zero() {
        return Some(CoeffPoly::zero());
    }
    let mut it = e.terms();
    let (m, c) = it.next()?;
    (m.is_unit() && it.next().is_none()).then(|| c.clone())
}

/// Inverse of `r · a^k` (other symbols must be absent).
fn invert_monomial(c: &CoeffPoly) -> Option<CoeffPoly> {
    let mut it = c.terms();
    let (e, r) = it.next()?;
    if it.next().is_some() || e[1..].iter().any(|&x| x != 0) || r.is_zero() {
        return None;
    }
    let inv = Rational::one() / r;
    Some(CoeffPoly::monomial(inv, [-e[0], 0, 0, 0, 0]))
}

fn run(text: &str, alg: &Algebra) -> Result<Value, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        k: 0,
        end: text.len(),
        alg,
    };
    let v = p.tensor()?;
    if p.k < p.toks.len() {
        return p.syntax(format!("unexpected {}", describe(&p.toks[p.k].1)));
    }
    Ok(v)
}

/// Parse and normal-order an element of `alg`.
pub fn parse_element(text: &str, alg: &Algebra) -> Result<NcElement, ParseError> {
    match run(text, alg)? {
        Value::Elem(e) => Ok(alg.truncate(&e)),
        Value::Tensor(_) => Err(ParseError::Value {
            pos: 0,
            message: "expected an element, found a tensor".into(),
        }),
    }
}

/// Parse a tensor of the given rank; a plain element is accepted only for rank 1.
pub fn parse_tensor(text: &str, alg: &Algebra, rank: usize) -> Result<TensorElement, ParseError> {
    match run(text, alg)? {
        Value::Tensor(t) if t.rank() == rank => Ok(t.truncate_a(alg.truncation())),
        Value::Elem(e) if e.is_zero() => Ok(TensorElement::zero(rank)),
        Value::Tensor(t) => Err(ParseError::Value {
            pos: 0,
            message: format!("expected a rank-{rank} tensor, found rank {}", t.rank()),
        }),
        Value::Elem(_) => Err(ParseError::Value {
            pos: 0,
            message: format!("expected a rank-{rank} tensor, found an element"),
        }),
    }
}

/// Parse a scalar (an element with only a unit term).
pub fn parse_scalar(text: &str, alg: &Algebra) -> Result<CoeffPoly, ParseError> {
    let e = parse_element(text, alg)?;
    scalar_of(&e).ok_or(ParseError::Value {
        pos: 0,
        message: "expected a scalar".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galilei::{fq_algebra, uq_algebra};

    #[test]
    fn normalizes_while_parsing() {
        let fq = fq_algebra();
        let e = parse_element("v*x", &fq).unwrap();
        assert_eq!(fq.fmt(&e), "-2*a*v + x*v");
        assert_eq!(parse_element("1", &fq).unwrap(), fq.one());
        let uq = uq_algebra(1);
        assert_eq!(uq.fmt(&parse_element("N*P", &uq).unwrap()), "I - 2*a*I*P + P*N");
    }

    #[test]
    fn scalars_and_laurent_powers() {
        let fq = fq_algebra();
        let c = parse_scalar("-1/2*alpha^2*E + a^-1", &fq).unwrap();
        assert_eq!(c.to_string(), "a^-1 - 1/2*alpha^2*E");
        assert!(parse_element("x^-1", &fq).is_err());
        assert!(parse_element("(1 + a)^-1", &fq).is_err());
    }

    #[test]
    fn tensors() {
        let fq = fq_algebra();
        let t = parse_tensor("x@1 + 1@x + v@t", &fq, 2).unwrap();
        assert_eq!(fq.fmt_tensor(&t), "1@x + x@1 + v@t");
        let t3 = parse_tensor("x@1@v", &fq, 3).unwrap();
        assert_eq!(t3.rank(), 3);
        assert!(parse_tensor("x@1 + x", &fq, 2).is_err());
    }

    #[test]
    fn errors_carry_position_and_name() {
        let fq = fq_algebra();
        match parse_element("x + 2*N", &fq) {
            Err(ParseError::UnknownGenerator { name, pos, algebra }) => {
                assert_eq!((name.as_str(), pos, algebra.as_str()), ("N", 6, "Fq"));
            }
            other => panic!("{other:?}"),
        }
        match parse_element("x + * t", &fq) {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_element("x v", &fq), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_element("(x", &fq), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_element("1/0", &fq), Err(ParseError::Syntax { .. })));
    }
}

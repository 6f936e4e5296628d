//! Symbolic vectors such as `r1+w*r2-th*r3`, `(1-w)r1 + 2r4`, or raw JSON
//! (`[[1,0],[0,1]]`, one `[a, b]` pair per coordinate `a + bω`).

use eislat::lattice::Coords;
use eislat::ring::EisensteinInteger as Eis;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("unexpected character {0:?} at {1}")]
    Char(char, usize),
    #[error("unexpected end of input")]
    End,
    #[error("unexpected token at {0}")]
    Token(usize),
    #[error("basis vector r{0} outside 1..={1}")]
    Basis(usize, usize),
    #[error("cannot multiply two vectors")]
    VectorProduct,
    #[error("cannot add a scalar and a vector")]
    Mixed,
    #[error("expected a vector, got a scalar")]
    NotVector,
    #[error("expected a scalar, got a vector")]
    NotScalar,
    #[error("vector has {0} coordinates, lattice has rank {1}")]
    Length(usize, usize),
    #[error("integer overflow")]
    Overflow,
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    W,
    Th,
    Basis(usize),
    Plus,
    Minus,
    Star,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '(' => Tok::Open,
            ')' => Tok::Close,
            'w' | 'ω' => Tok::W,
            'θ' => Tok::Th,
            't' if chars.get(i + 1) == Some(&'h') => {
                i += 1;
                Tok::Th
            }
            'r' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return Err(ExprError::Char(c, i));
                }
                let k: usize = chars[i + 1..j].iter().collect::<String>().parse().map_err(|_| ExprError::Overflow)?;
                i = j - 1;
                Tok::Basis(k)
            }
            d if d.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let n: i64 = chars[i..j].iter().collect::<String>().parse().map_err(|_| ExprError::Overflow)?;
                i = j - 1;
                Tok::Num(n)
            }
            _ => return Err(ExprError::Char(c, i)),
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Eis),
    Vector(Coords),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    rank: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(usize::MAX, |(_, p)| *p)
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                neg(self.term()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(t) = self.peek() {
            let sign = match t {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = add(acc, if sign { neg(rhs) } else { rhs })?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                // juxtaposition: `2w`, `(1-w)r1`, `3r2`
                Some(Tok::W | Tok::Th | Tok::Basis(_) | Tok::Open) => {}
                _ => break,
            }
            let rhs = self.factor()?;
            acc = mul(acc, rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, ExprError> {
        let at = self.at();
        let tok = self.peek().cloned().ok_or(ExprError::End)?;
        self.pos += 1;
        Ok(match tok {
            Tok::Num(n) => Value::Scalar(Eis::from(n)),
            Tok::W => Value::Scalar(Eis::OMEGA),
            Tok::Th => Value::Scalar(Eis::THETA),
            Tok::Basis(k) => {
                if k == 0 || k > self.rank {
                    return Err(ExprError::Basis(k, self.rank));
                }
                let mut v = vec![Eis::ZERO; self.rank];
                v[k - 1] = Eis::ONE;
                Value::Vector(v)
            }
            Tok::Minus => neg(self.factor()?),
            Tok::Open => {
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(ExprError::Token(self.at()));
                }
                self.pos += 1;
                v
            }
            _ => return Err(ExprError::Token(at)),
        })
    }
}

fn neg(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(-s),
        Value::Vector(x) => Value::Vector(x.into_iter().map(|c| -c).collect()),
    }
}

fn add(a: Value, b: Value) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
        (Value::Vector(x), Value::Vector(y)) => Ok(Value::Vector(x.iter().zip(&y).map(|(&p, &q)| p + q).collect())),
        _ => Err(ExprError::Mixed),
    }
}

fn mul(a: Value, b: Value) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x * y)),
        (Value::Scalar(s), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(s)) => {
            Ok(Value::Vector(v.into_iter().map(|c| s * c).collect()))
        }
        _ => Err(ExprError::VectorProduct),
    }
}

pub fn parse(s: &str, rank: usize) -> Result<Value, ExprError> {
    let mut p = Parser { toks: lex(s)?, pos: 0, rank };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ExprError::Token(p.at()));
    }
    Ok(v)
}

pub fn parse_scalar(s: &str) -> Result<Eis, ExprError> {
    match parse(s, 0)? {
        Value::Scalar(x) => Ok(x),
        Value::Vector(_) => Err(ExprError::NotScalar),
    }
}

/// A vector of a rank-`rank` lattice, symbolic or JSON.
pub fn parse_vector(s: &str, rank: usize) -> Result<Coords, ExprError> {
    let v = if s.trim_start().starts_with('[') {
        serde_json::from_str::<Coords>(s).map_err(|e| ExprError::Json(e.to_string()))?
    } else {
        match parse(s, rank)? {
            Value::Vector(v) => v,
            Value::Scalar(_) => return Err(ExprError::NotVector),
        }
    };
    if v.len() != rank {
        return Err(ExprError::Length(v.len(), rank));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use eislat::ring::eis;

    #[test]
    fn symbolic() {
        let v = parse_vector("r1+w*r2−th*r3", 4).unwrap();
        assert_eq!(v, vec![Eis::ONE, Eis::OMEGA, -Eis::THETA, Eis::ZERO]);
        let v = parse_vector("(1-w)r1 + 2r4", 4).unwrap();
        assert_eq!(v, vec![eis(1, -1), Eis::ZERO, Eis::ZERO, eis(2, 0)]);
        assert_eq!(parse_vector("-r2", 2).unwrap(), vec![Eis::ZERO, -Eis::ONE]);
        assert_eq!(parse_scalar("2+3w").unwrap(), eis(2, 3));
        assert_eq!(parse_scalar("θ*θ").unwrap(), eis(-3, 0));
    }

    #[test]
    fn json_and_errors() {
        assert_eq!(parse_vector("[[1,0],[0,1]]", 2).unwrap(), vec![Eis::ONE, Eis::OMEGA]);
        assert_eq!(parse_vector("r5", 4), Err(ExprError::Basis(5, 4)));
        assert_eq!(parse_vector("r1*r2", 4), Err(ExprError::VectorProduct));
        assert_eq!(parse_vector("r1+1", 4), Err(ExprError::Mixed));
        assert_eq!(parse_vector("2", 4), Err(ExprError::NotVector));
        assert_eq!(parse_vector("[[1,0]]", 2), Err(ExprError::Length(1, 2)));
        assert!(parse_vector("r1 +", 2).is_err());
        assert!(parse_vector("r1 ) ", 2).is_err());
        assert!(parse_vector("x", 2).is_err());
    }
}

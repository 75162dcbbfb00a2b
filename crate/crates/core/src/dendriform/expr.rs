//! Algebra expressions over a generator alphabet:
//!
//! ```text
//! sum     := ["-"] chain (("+" | "-") chain)*
//! chain   := operand (op operand)*        op ∈ { "<", ">", "*" }
//! operand := name | "1" | "(" sum ")" | "{" sum "|" [sum ("," sum)*] "}"
//! ```
//!
//! Chains associate to the left. Mixing operators in one chain needs
//! parentheses, except `x>y<z`, which is unambiguous.

use super::free::{self, Tilde};
use super::psi::{corolla_tilde, SignConvention};
use super::DendElement;
use crate::exactlin::Rational;
use crate::trees::Alphabet;
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: at,
            msg: msg.into(),
        })
    }

    fn sum(&mut self) -> Result<Tilde> {
        let mut sign = Rational::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        let mut acc = self.chain()?.scaled(&sign);
        loop {
            let s = match self.peek() {
                Some(b'+') => Rational::one(),
                Some(b'-') => -Rational::one(),
                _ => return Ok(acc),
            };
            self.pos += 1;
            let next = self.chain()?;
            acc.add_scaled(&s, &next);
        }
    }

    fn chain(&mut self) -> Result<Tilde> {
        let mut operands = vec![self.operand()?];
        let mut ops = Vec::new();
        while let Some(c @ (b'<' | b'>' | b'*')) = self.peek() {
            ops.push((c, self.pos));
            self.pos += 1;
            operands.push(self.operand()?);
        }
        let mixed = ops.windows(2).any(|w| w[0].0 != w[1].0);
        if mixed && !(ops.len() == 2 && ops[0].0 == b'>' && ops[1].0 == b'<') {
            let at = ops.windows(2).find(|w| w[0].0 != w[1].0).unwrap()[1].1;
            return self.err(at, "mixed products need parentheses");
        }
        let mut it = operands.into_iter();
        let mut acc = it.next().unwrap();
        for ((op, at), x) in ops.into_iter().zip(it) {
            acc = match op {
                b'<' => free::prec(&acc, &x),
                b'>' => free::succ(&acc, &x),
                _ => Ok(free::star(&acc, &x)),
            }
            .or_else(|e| self.err(at, e.to_string()))?;
        }
        Ok(acc)
    }

    fn operand(&mut self) -> Result<Tilde> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'{') => {
                self.pos += 1;
                let head_at = self.pos;
                let head = self.sum()?;
                self.expect(b'|')?;
                let mut args = Vec::new();
                if self.peek() != Some(b'}') {
                    args.push(self.sum()?);
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        args.push(self.sum()?);
                    }
                }
                self.expect(b'}')?;
                corolla_tilde(&head, &args, SignConvention::Standard).or_else(|e| self.err(head_at, e.to_string()))
            }
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(g) = self.alphabet.lookup(name) {
                    Ok(free::generator(g))
                } else if name == "1" {
                    Ok(free::unit())
                } else {
                    self.err(start, format!("unknown generator {name:?}"))
                }
            }
            _ => self.err(at.max(self.pos), "expected a generator, 1, '(' or '{'"),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(self.pos, format!("expected {:?}", c as char))
        }
    }
}

pub fn parse_expr_tilde(text: &str, alphabet: &Alphabet) -> Result<Tilde> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        alphabet,
    };
    let v = p.sum()?;
    if p.peek().is_some() {
        return p.err(p.pos, "trailing input");
    }
    Ok(v)
}

pub fn parse_expr(text: &str, alphabet: &Alphabet) -> Result<DendElement> {
    Ok(DendElement::from_tilde(parse_expr_tilde(text, alphabet)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Gen;

    fn al() -> Alphabet {
        Alphabet::letters(3)
    }

    fn g(i: u32) -> Tilde {
        free::generator(Gen(i))
    }

    #[test]
    fn products_and_association() {
        let v = parse_expr_tilde("a<b<c", &al()).unwrap();
        let w = free::prec(&free::prec(&g(0), &g(1)).unwrap(), &g(2)).unwrap();
        assert_eq!(v, w);
        let v = parse_expr_tilde("a>b<c", &al()).unwrap();
        let w = free::succ(&g(0), &free::prec(&g(1), &g(2)).unwrap()).unwrap();
        assert_eq!(v, w);
        assert_eq!(parse_expr_tilde("1>a", &al()).unwrap(), g(0));
        assert_eq!(parse_expr_tilde("a*b", &al()).unwrap(), free::star(&g(0), &g(1)));
    }

    #[test]
    fn brace_call_and_sums() {
        let v = parse_expr_tilde("{a|b}", &al()).unwrap();
        assert_eq!(v, parse_expr_tilde("a<b - b>a", &al()).unwrap());
        assert_eq!(parse_expr_tilde("{a|}", &al()).unwrap(), g(0));
        assert!(parse_expr_tilde("a - a", &al()).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_expr_tilde("a<b>c", &al()),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expr_tilde("a<q", &al()),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expr_tilde("1<1", &al()),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(parse_expr_tilde("(a", &al()).is_err());
        assert!(parse_expr_tilde("a b", &al()).is_err());
    }
}

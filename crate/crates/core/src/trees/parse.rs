//! Text grammar for trees (whitespace is insignificant):
//!
//! ```text
//! tree := label | label "(" tree ("," tree)* ")"
//! pbt  := "*" | "(" pbt label pbt ")"
//! label := [A-Za-z0-9_]+
//! ```

use super::{Alphabet, Pbt, PlanarTree, RootedTree};
use crate::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            src: s.as_bytes(),
            pos: 0,
        }
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {:?}", c as char))
        }
    }

    fn label(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a label [A-Za-z0-9_]+");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }

    fn planar(&mut self) -> Result<PlanarTree> {
        let label = self.label()?;
        let mut children = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                children.push(self.planar()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err("expected ',' or ')'"),
                }
            }
        }
        Ok(PlanarTree::new(label, children))
    }

    fn pbt(&mut self, alphabet: &Alphabet) -> Result<Pbt> {
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Ok(Pbt::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.pbt(alphabet)?;
                self.skip_ws();
                let at = self.pos;
                let name = self.label()?;
                let gen = alphabet.lookup(&name).ok_or(Error::Parse {
                    pos: at,
                    msg: format!("decoration {name:?} is not in the generator alphabet"),
                })?;
                let right = self.pbt(alphabet)?;
                self.expect(b')')?;
                Ok(Pbt::node(left, gen, right))
            }
            _ => self.err("expected '*' or '('"),
        }
    }
}

pub fn parse_planar(text: &str) -> Result<PlanarTree> {
    let mut c = Cursor::new(text);
    let t = c.planar()?;
    c.finish()?;
    t.check_labels()?;
    Ok(t)
}

pub fn parse_rooted(text: &str) -> Result<RootedTree> {
    Ok(RootedTree::from_planar(&parse_planar(text)?))
}

pub fn parse_pbt(text: &str, alphabet: &Alphabet) -> Result<Pbt> {
    let mut c = Cursor::new(text);
    let t = c.pbt(alphabet)?;
    c.finish()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Gen;

    #[test]
    fn planar_grammar() {
        let t = parse_planar(" 1 ( 2 , 3 ) ").unwrap();
        assert_eq!(t.label, "1");
        assert_eq!(t.children.len(), 2);
        assert_eq!(t.to_string(), "1(2,3)");
        assert_eq!(parse_planar("1(3,2)").unwrap().to_string(), "1(3,2)");
    }

    #[test]
    fn pbt_grammar() {
        let a = Alphabet::letters(2);
        let t = parse_pbt("(* a (* b *))", &a).unwrap();
        assert_eq!(t, Pbt::node(Pbt::Leaf, Gen(0), Pbt::node(Pbt::Leaf, Gen(1), Pbt::Leaf)));
        assert_eq!(parse_pbt("*", &a).unwrap(), Pbt::Leaf);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_planar("1(2,").unwrap_err(),
            Error::Parse {
                pos: 4,
                msg: "expected a label [A-Za-z0-9_]+".into()
            }
        );
        assert!(matches!(
            parse_planar("1(2))").unwrap_err(),
            Error::Parse { pos: 4, .. }
        ));
        assert!(matches!(
            parse_pbt("(* q *)", &Alphabet::letters(1)).unwrap_err(),
            Error::Parse { pos: 3, .. }
        ));
        assert_eq!(parse_planar("1(2,1)").unwrap_err(), Error::DuplicateLabel("1".into()));
    }
}

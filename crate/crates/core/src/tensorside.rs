//! Words over an alphabet: deconcatenation, shuffles, the half-shuffle
//! (Zinbiel) product, and the evaluation of dendriform trees as words.

use std::fmt;

use crate::dendriform::Tilde;
use crate::exactlin::{format_sum, LinComb, Rational};
use crate::trees::{Alphabet, Gen, Pbt};
use crate::{Error, Result};

/// A word in the generators; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Juxtaposed names, dot-separated when some name is longer than one
    /// character; `1` for the empty word.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let sep = if alphabet.single_chars() { "" } else { "." };
        self.0.iter().map(|&g| alphabet.name(g)).collect::<Vec<_>>().join(sep)
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::empty());
        }
        let bad = |pos: usize, name: &str| Error::Parse {
            pos,
            msg: format!("unknown letter {name:?}"),
        };
        if alphabet.single_chars() {
            let mut out = Vec::new();
            for (pos, c) in text.char_indices() {
                let name = c.to_string();
                out.push(alphabet.lookup(&name).ok_or_else(|| bad(pos, &name))?);
            }
            Ok(Word(out))
        } else {
            let mut out = Vec::new();
            let mut pos = 0;
            for name in text.split('.') {
                out.push(alphabet.lookup(name).ok_or_else(|| bad(pos, name))?);
                pos += name.len() + 1;
            }
            Ok(Word(out))
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.iter().map(|g| g.index() + 1).max().unwrap_or(0);
        f.write_str(&self.display(&Alphabet::letters(n)))
    }
}

pub type WordComb = LinComb<Word>;
pub type WordPairs = LinComb<(Word, Word)>;

/// `Σ_i w[..i] ⊗ w[i..]`.
pub fn deconcat(w: &Word) -> WordPairs {
    WordPairs::from_terms((0..=w.len()).map(|i| ((Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())), Rational::one())))
}

fn shuffle_into(w: &[Gen], u: &[Gen], prefix: &mut Vec<Gen>, out: &mut WordComb) {
    if w.is_empty() || u.is_empty() {
        let mut v = prefix.clone();
        v.extend_from_slice(w);
        v.extend_from_slice(u);
        out.add_term(Word(v), Rational::one());
        return;
    }
    prefix.push(w[0]);
    shuffle_into(&w[1..], u, prefix, out);
    prefix.pop();
    prefix.push(u[0]);
    shuffle_into(w, &u[1..], prefix, out);
    prefix.pop();
}

/// The shuffle product; `binom(|w|+|u|, |w|)` terms before collection.
pub fn shuffle(w: &Word, u: &Word) -> WordComb {
    let mut out = WordComb::zero();
    shuffle_into(&w.0, &u.0, &mut Vec::new(), &mut out);
    out
}

/// The Zinbiel product `w·u = w₁ (w₂…w_p ⧢ u)`.
pub fn halfshuffle(w: &Word, u: &Word) -> Result<WordComb> {
    let (&first, rest) = w.0.split_first().ok_or(Error::EmptyWord)?;
    let mut out = WordComb::zero();
    shuffle_into(rest, &u.0, &mut vec![first], &mut out);
    Ok(out)
}

pub fn shuffle_lin(a: &WordComb, b: &WordComb) -> WordComb {
    WordComb::bilinear(a, b, shuffle)
}

pub fn halfshuffle_lin(a: &WordComb, b: &WordComb) -> Result<WordComb> {
    let mut out = WordComb::zero();
    for (w, c) in a {
        for (u, d) in b {
            out.add_scaled(&(c * d), &halfshuffle(w, u)?);
        }
    }
    Ok(out)
}

fn zin_tree(t: &Pbt) -> WordComb {
    match t.split() {
        None => WordComb::basis(Word::empty()),
        Some((l, v, r)) => {
            // l ∨ r = l ≻ (v ≺ r) ↦ (v · r) · l
            let vr = halfshuffle_lin(&WordComb::basis(Word::letter(v)), &zin_tree(r)).unwrap();
            halfshuffle_lin(&vr, &zin_tree(l)).unwrap()
        }
    }
}

/// The dendriform morphism onto the Zinbiel algebra of words:
/// `x ≺ y ↦ x·y`, `x ≻ y ↦ y·x`, unit ↦ empty word.
pub fn zin_eval(e: &Tilde) -> WordComb {
    e.map_linear(zin_tree)
}

pub fn format_words(c: &WordComb, alphabet: &Alphabet) -> String {
    format_sum(c, |w| w.display(alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dendriform::free;

    fn w(s: &str) -> Word {
        Word::parse(s, &Alphabet::letters(3)).unwrap()
    }
    fn show(c: &WordComb) -> String {
        format_words(c, &Alphabet::letters(3))
    }

    #[test]
    fn deconcatenation() {
        assert_eq!(deconcat(&w("")).len(), 1);
        let d = deconcat(&w("ab"));
        assert_eq!(d.len(), 3);
        assert!(!d.coeff(&(w("a"), w("b"))).is_zero());
    }

    #[test]
    fn shuffles() {
        assert_eq!(show(&halfshuffle(&w("a"), &w("b")).unwrap()), "ab");
        assert_eq!(show(&halfshuffle(&w("ab"), &w("c")).unwrap()), "abc + acb");
        assert_eq!(show(&shuffle(&w("ab"), &w("c"))), "abc + acb + cab");
        assert_eq!(shuffle(&w(""), &w("ab")), WordComb::basis(w("ab")));
        assert_eq!(halfshuffle(&w(""), &w("a")), Err(Error::EmptyWord));
        let zin = halfshuffle_lin(&halfshuffle(&w("a"), &w("b")).unwrap(), &WordComb::basis(w("c"))).unwrap();
        let r1 = halfshuffle_lin(&WordComb::basis(w("a")), &halfshuffle(&w("b"), &w("c")).unwrap()).unwrap();
        let r2 = halfshuffle_lin(&WordComb::basis(w("a")), &halfshuffle(&w("c"), &w("b")).unwrap()).unwrap();
        assert!(zin.sub(&r1).sub(&r2).is_zero());
    }

    #[test]
    fn zin_on_trees() {
        let a = free::generator(Gen(0));
        let b = free::generator(Gen(1));
        assert_eq!(show(&zin_eval(&free::prec(&a, &b).unwrap())), "ab");
        assert_eq!(show(&zin_eval(&free::succ(&a, &b).unwrap())), "ba");
        let p = free::prec(&a, &a).unwrap().sub(&free::succ(&a, &a).unwrap());
        assert!(zin_eval(&p).is_zero());
        assert_eq!(zin_eval(&free::unit()), WordComb::basis(Word::empty()));
    }

    #[test]
    fn word_printing() {
        let al = Alphabet::slots(2);
        let x = Word(vec![Gen(0), Gen(1)]);
        assert_eq!(x.display(&al), "x1.x2");
        assert_eq!(Word::parse("x1.x2", &al).unwrap(), x);
        assert_eq!(Word::empty().to_string(), "1");
    }
}

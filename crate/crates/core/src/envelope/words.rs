use super::quotient::TruncatedQuotient;
use crate::bialgebra::Tensor2;
use crate::dendriform::free::{self, Tilde};
use crate::exactlin::DenseSpan;
use crate::tensorside::{deconcat, shuffle, Word};
use crate::trees::Gen;
use crate::Result;

/// The class of `↘(w)`; the empty word goes to the unit.
pub fn word_class(q: &TruncatedQuotient, w: &Word) -> Result<Tilde> {
    let letters: Vec<Tilde> = w.0.iter().map(|&g| free::generator(g)).collect();
    q.reduce(&free::downcomb(&letters)?)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordCheck {
    /// Rank of the word classes of each length `0..=N`.
    pub ranks: Vec<usize>,
    pub product_defects: Vec<(Word, Word)>,
    pub coproduct_defects: Vec<Word>,
}

impl WordCheck {
    pub fn ok(&self, dims: &[usize]) -> bool {
        self.ranks == dims && self.product_defects.is_empty() && self.coproduct_defects.is_empty()
    }
}

fn words(len: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| (0..d as u32).map(move |g| w.concat(&Word::letter(Gen(g)))))
            .collect();
    }
    out
}

/// Compares the quotient of a trivial brace on `d` letters with the shuffle
/// bialgebra: product against shuffle, coproduct against deconcatenation,
/// for all words of total length `≤ N`.
pub fn check_word_identification(q: &TruncatedQuotient) -> Result<WordCheck> {
    let d = q.structure().dim();
    let n = q.bound();
    let mut out = WordCheck::default();
    let by_len: Vec<Vec<Word>> = (0..=n).map(|k| words(k, d)).collect();
    for (k, ws) in by_len.iter().enumerate() {
        let mut span = DenseSpan::new(q.quotient_basis(k));
        for w in ws {
            span.insert(&word_class(q, w)?)?;
        }
        out.ranks.push(span.rank());
    }
    let class = |w: &Word| word_class(q, w);
    for (i, us) in by_len.iter().enumerate() {
        for vs in &by_len[..=n - i] {
            for u in us {
                for v in vs {
                    let lhs = q.product(&class(u)?, &class(v)?)?;
                    let mut rhs = Tilde::zero();
                    for (w, c) in &shuffle(u, v) {
                        rhs.add_scaled(c, &class(w)?);
                    }
                    if lhs != rhs {
                        out.product_defects.push((u.clone(), v.clone()));
                    }
                }
            }
        }
        for w in us {
            let lhs = q.coproduct(&class(w)?)?;
            let mut rhs = Tensor2::zero();
            for ((a, b), c) in &deconcat(w) {
                let (ca, cb) = (class(a)?, class(b)?);
                for (s, x) in &ca {
                    for (t, y) in &cb {
                        rhs.add_term((s.clone(), t.clone()), &(c * x) * y);
                    }
                }
            }
            if lhs != rhs {
                out.coproduct_defects.push(w.clone());
            }
        }
    }
    Ok(out)
}

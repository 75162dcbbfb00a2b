use std::fmt;

use super::free::{self, Tilde};
use crate::exactlin::{format_sum, LinComb, Rational};
use crate::trees::{Alphabet, Gen, Pbt};
use crate::Result;

/// `c·1 + body` in the unital free dendriform algebra `K·1 ⊕ D(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DendElement {
    pub unit: Rational,
    pub body: LinComb<Pbt>,
}

impl DendElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        DendElement {
            unit: Rational::one(),
            body: LinComb::zero(),
        }
    }

    pub fn generator(g: Gen) -> Self {
        Self::tree(Pbt::generator(g))
    }

    /// A single basis tree; the leaf gives the unit.
    pub fn tree(t: Pbt) -> Self {
        Self::from_tilde(Tilde::basis(t))
    }

    pub fn from_tilde(t: Tilde) -> Self {
        let unit = t.coeff(&Pbt::Leaf);
        let body = t.filter(|k| !k.is_leaf());
        DendElement { unit, body }
    }

    pub fn to_tilde(&self) -> Tilde {
        let mut t = self.body.clone();
        t.add_term(Pbt::Leaf, self.unit.clone());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.body.is_zero()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        DendElement {
            unit: &self.unit * c,
            body: self.body.scaled(c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DendElement {
            unit: &self.unit + &other.unit,
            body: self.body.add(&other.body),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DendElement {
            unit: &self.unit - &other.unit,
            body: self.body.sub(&other.body),
        }
    }

    pub fn dprec(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_tilde(free::prec(&self.to_tilde(), &other.to_tilde())?))
    }

    pub fn dsucc(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_tilde(free::succ(&self.to_tilde(), &other.to_tilde())?))
    }

    pub fn dstar(&self, other: &Self) -> Self {
        Self::from_tilde(free::star(&self.to_tilde(), &other.to_tilde()))
    }

    /// Homogeneous component of degree `d` (degree 0 is the unit part).
    pub fn component(&self, d: usize) -> Self {
        if d == 0 {
            return DendElement {
                unit: self.unit.clone(),
                body: LinComb::zero(),
            };
        }
        DendElement {
            unit: Rational::zero(),
            body: free::component(&self.body, d),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.body.keys().map(Pbt::degree).max().unwrap_or(0)
    }

    /// Signed sum of trees in bracket notation, e.g. `(* a (* b *)) - ((* b *) a *)`.
    pub fn display_bracket(&self, alphabet: &Alphabet) -> String {
        format_sum(&self.to_tilde(), |t| t.to_bracket(alphabet))
    }

    /// Signed sum of trees in product notation, e.g. `a<b - b>a`.
    pub fn display_expr(&self, alphabet: &Alphabet) -> String {
        format_sum(&self.to_tilde(), |t| t.to_expr(alphabet))
    }
}

impl fmt::Display for DendElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self
            .body
            .keys()
            .flat_map(|t| t.gens())
            .map(|g| g.index() + 1)
            .max()
            .unwrap_or(0);
        f.write_str(&self.display_expr(&Alphabet::letters(n)))
    }
}

pub fn upcomb(xs: &[DendElement]) -> Result<DendElement> {
    let ts: Vec<Tilde> = xs.iter().map(DendElement::to_tilde).collect();
    Ok(DendElement::from_tilde(free::upcomb(&ts)?))
}

pub fn downcomb(xs: &[DendElement]) -> Result<DendElement> {
    let ts: Vec<Tilde> = xs.iter().map(DendElement::to_tilde).collect();
    Ok(DendElement::from_tilde(free::downcomb(&ts)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn unit_axioms() {
        let a = DendElement::generator(Gen(0));
        let one = DendElement::one();
        assert_eq!(one.dsucc(&a).unwrap(), a);
        assert_eq!(a.dprec(&one).unwrap(), a);
        assert!(one.dprec(&a).unwrap().is_zero());
        assert!(a.dsucc(&one).unwrap().is_zero());
        assert_eq!(one.dprec(&one), Err(Error::UnitProduct('<')));
        assert_eq!(one.dstar(&one), one);
    }

    #[test]
    fn printing() {
        let a = DendElement::generator(Gen(0));
        let b = DendElement::generator(Gen(1));
        let x = a.dprec(&b).unwrap().sub(&b.dsucc(&a).unwrap());
        assert_eq!(x.to_string(), "a<b - b>a");
        let al = Alphabet::letters(2);
        assert_eq!(x.display_bracket(&al), "(* a (* b *)) - ((* b *) a *)");
        assert_eq!(DendElement::one().add(&a).to_string(), "1 + a");
        assert_eq!(upcomb(&[]).unwrap(), DendElement::one());
    }
}

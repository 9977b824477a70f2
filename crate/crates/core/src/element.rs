use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::basis::{BasisVector, HalfDegree};
use crate::linalg::{fmt_rat, is_negative, Rational};

/// A finite rational linear combination of basis vectors.
///
/// Terms are kept in canonical order with no zero coefficients, so `==` is
/// equality of elements.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisVector, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisVector) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn term(coeff: Rational, b: BasisVector) -> Self {
        let mut x = Self::zero();
        x.add_term(b, coeff);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, BasisVector)>>(terms: I) -> Self {
        let mut x = Self::zero();
        for (c, b) in terms {
            x.add_term(b, c);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: BasisVector) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisVector, &Rational)> + '_ {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    pub fn support(&self) -> impl Iterator<Item = BasisVector> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, b: BasisVector, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(b).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&b, v)| (b, v * c)).collect(),
        }
    }

    /// Splits into homogeneous parts keyed by degree.
    pub fn degree_decompose(&self) -> BTreeMap<HalfDegree, AlgebraElement> {
        let mut out: BTreeMap<HalfDegree, AlgebraElement> = BTreeMap::new();
        for (b, c) in self.terms() {
            out.entry(b.degree()).or_default().add_term(b, c.clone());
        }
        out
    }

    /// The degree if the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<HalfDegree> {
        let mut degs = self.support().map(BasisVector::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }
}

impl From<BasisVector> for AlgebraElement {
    fn from(b: BasisVector) -> Self {
        Self::basis(b)
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, -c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(&b, c)| (b, -c.clone())).collect(),
        }
    }
}

pub(crate) fn write_linear<K, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (K, Rational)>,
    K: fmt::Display,
{
    let mut first = true;
    for (k, c) in terms {
        let neg = is_negative(&c);
        let abs = if neg { -c } else { c };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if !abs.is_one() {
            write!(f, "{}*", fmt_rat(&abs))?;
        }
        write!(f, "{k}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.terms().map(|(b, c)| (b, c.clone())))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

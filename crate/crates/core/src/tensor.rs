//! Tensor powers of the algebra under the diagonal adjoint action
//! `x·(a_1⊗…⊗a_n) = Σ_k a_1⊗…⊗[x,a_k]⊗…⊗a_n`.
//!
//! Pure tensors are ordered tuples of basis vectors. Nothing is symmetrized
//! implicitly: `L_1⊗M_2` and `M_2⊗L_1` are different keys.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::basis::{basis_window, BasisVector, HalfDegree};
use crate::bracket::Bracket;
use crate::element::{write_linear, AlgebraElement};
use crate::error::{Error, Result};
use crate::linalg::{int, Rational};

/// Total degree of a tensor: the sum of its factor degrees.
pub type TensorDegree = HalfDegree;

/// An ordered tuple of basis vectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PureTensor(pub Vec<BasisVector>);

impl PureTensor {
    pub fn degree(&self) -> TensorDegree {
        HalfDegree(self.0.iter().map(|b| b.twice_index()).sum())
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Largest `|twice_index|` among the factors.
    pub fn spread(&self) -> i64 {
        self.0.iter().map(|b| b.twice_index().abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for PureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A finite linear combination of order-`n` pure tensors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    order: usize,
    terms: BTreeMap<PureTensor, Rational>,
}

impl TensorElement {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "tensor order must be at least 1");
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(factors: &[BasisVector]) -> Self {
        Self::pure_scaled(Rational::one(), factors)
    }

    pub fn pure_scaled(coeff: Rational, factors: &[BasisVector]) -> Self {
        let mut t = Self::zero(factors.len());
        t.add_term(PureTensor(factors.to_vec()), coeff);
        t
    }

    /// Builds `Σ c_i · (b_i1 ⊗ … ⊗ b_in)`. Panics on mixed orders.
    pub fn from_terms<I, V>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, V)>,
        V: AsRef<[BasisVector]>,
    {
        let mut t = Self::zero(order);
        for (c, fs) in terms {
            t.add_term(PureTensor(fs.as_ref().to_vec()), c);
        }
        t
    }

    /// `a ⊗ b` for algebra elements.
    pub fn product(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let mut t = Self::zero(2);
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                t.add_term(PureTensor(vec![x, y]), cx * cy);
            }
        }
        t
    }

    pub fn order(&self) -> usize {
        self.order
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

    pub fn terms(&self) -> impl Iterator<Item = (&PureTensor, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[BasisVector]) -> Rational {
        self.terms
            .get(&PureTensor(key.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: PureTensor, coeff: Rational) {
        assert_eq!(key.order(), self.order, "pure tensor has the wrong order");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Rational) {
        assert_eq!(self.order, other.order, "tensor orders differ");
        if c.is_zero() {
            return;
        }
        for (k, v) in other.terms() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        out.add_scaled(self, c);
        out
    }

    /// Largest `|twice_index|` over all factors of all terms.
    pub fn spread(&self) -> i64 {
        self.terms.keys().map(PureTensor::spread).max().unwrap_or(0)
    }

    /// `τ(x⊗y) = y⊗x`.
    pub fn twist(&self) -> Result<Self> {
        self.expect_order("twist", 2)?;
        Ok(self.permuted(|k| vec![k[1], k[0]]))
    }

    /// `ξ(x₁⊗x₂⊗x₃) = x₂⊗x₃⊗x₁`.
    pub fn cyclic(&self) -> Result<Self> {
        self.expect_order("cyclic", 3)?;
        Ok(self.permuted(|k| vec![k[1], k[2], k[0]]))
    }

    /// Membership in `Im(Id - τ)`, tested as `(Id + τ) t = 0`; the two agree in
    /// characteristic zero since `t = u - τ(u)` with `u = t/2`.
    pub fn is_skew(&self) -> Result<bool> {
        self.expect_order("is_skew", 2)?;
        Ok(self
            .terms
            .iter()
            .all(|(k, c)| self.coeff(&[k.0[1], k.0[0]]) == -c.clone()))
    }

    /// `(Id + τ) t`.
    pub fn symmetrize(&self) -> Result<Self> {
        Ok(self + &self.twist()?)
    }

    pub fn degree_decompose(&self) -> BTreeMap<TensorDegree, TensorElement> {
        let mut out: BTreeMap<TensorDegree, TensorElement> = BTreeMap::new();
        for (k, c) in self.terms() {
            out.entry(k.degree())
                .or_insert_with(|| TensorElement::zero(self.order))
                .add_term(k.clone(), c.clone());
        }
        out
    }

    /// The terms whose factors all satisfy `|twice_index| <= w`.
    pub fn restrict(&self, w: i64) -> Self {
        Self {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.spread() <= w)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    fn permuted(&self, f: impl Fn(&[BasisVector]) -> Vec<BasisVector>) -> Self {
        let mut out = Self::zero(self.order);
        for (k, c) in self.terms() {
            out.add_term(PureTensor(f(&k.0)), c.clone());
        }
        out
    }

    fn expect_order(&self, op: &'static str, n: usize) -> Result<()> {
        if self.order == n {
            Ok(())
        } else {
            Err(Error::WrongOrder {
                op,
                expected: n,
                found: self.order,
            })
        }
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &int(-1));
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&int(-1))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.terms().map(|(k, c)| (k, c.clone())))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement[{}]({self})", self.order)
    }
}

/// `x·t` for a basis vector `x`, accumulated into `out` with weight `c`.
pub fn act_basis_into<B: Bracket + ?Sized>(
    br: &B,
    x: BasisVector,
    key: &PureTensor,
    c: &Rational,
    out: &mut TensorElement,
) {
    for pos in 0..key.order() {
        for (b, cb) in br.bracket_basis(x, key.0[pos]).terms() {
            let mut k = key.clone();
            k.0[pos] = b;
            out.add_term(k, c * cb);
        }
    }
}

/// The diagonal adjoint action `x·t`.
pub fn diag_action<B: Bracket + ?Sized>(br: &B, x: &AlgebraElement, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.order());
    for (xb, cx) in x.terms() {
        for (k, c) in t.terms() {
            act_basis_into(br, xb, k, &(cx * c), &mut out);
        }
    }
    out
}

/// `x·t` for a single basis vector `x`.
pub fn act<B: Bracket + ?Sized>(br: &B, x: BasisVector, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.order());
    for (k, c) in t.terms() {
        act_basis_into(br, x, k, c, &mut out);
    }
    out
}

/// All pure tensors of the given order whose factors lie in the window
/// `|twice_index| <= w` and whose degrees sum to `total`, in canonical order.
pub fn tensor_basis_window(order: usize, w: i64, total: TensorDegree) -> Vec<PureTensor> {
    let basis = basis_window(w);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(order);
    fill(&basis, order, w, total.twice(), &mut cur, &mut out);
    out.sort();
    out
}

fn fill(
    basis: &[BasisVector],
    remaining: usize,
    w: i64,
    target: i64,
    cur: &mut Vec<BasisVector>,
    out: &mut Vec<PureTensor>,
) {
    if remaining == 0 {
        if target == 0 {
            out.push(PureTensor(cur.clone()));
        }
        return;
    }
    let reach = w * (remaining as i64 - 1);
    for &b in basis {
        let rest = target - b.twice_index();
        if rest.abs() > reach {
            continue;
        }
        cur.push(b);
        fill(basis, remaining - 1, w, rest, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Esv;
    use BasisVector as B;

    fn t2(terms: &[(i64, B, B)]) -> TensorElement {
        TensorElement::from_terms(2, terms.iter().map(|&(c, a, b)| (int(c), [a, b])))
    }

    #[test]
    fn action_examples() {
        let got = diag_action(&Esv, &B::l(1).into(), &TensorElement::pure(&[B::n(2), B::n(-2)]));
        assert_eq!(got, t2(&[(2, B::n(3), B::n(-2)), (-2, B::n(2), B::n(-1))]));

        let got = diag_action(&Esv, &B::m(0).into(), &TensorElement::pure(&[B::l(1), B::l(-1)]));
        assert!(got.is_zero());

        let v = TensorElement::pure(&[B::m(1), B::y(1)]);
        assert_eq!(diag_action(&Esv, &B::n(0).into(), &v), v.scale(&int(3)));
    }

    #[test]
    fn twist_and_cyclic() {
        let t = TensorElement::pure(&[B::l(1), B::m(2)]);
        assert_eq!(t.twist().unwrap(), TensorElement::pure(&[B::m(2), B::l(1)]));
        assert_eq!(t.twist().unwrap().twist().unwrap(), t);
        let sym = t2(&[(1, B::l(1), B::m(2)), (1, B::m(2), B::l(1))]);
        assert_eq!(sym.twist().unwrap(), sym);

        let s = TensorElement::pure(&[B::l(0), B::m(1), B::n(2)]);
        assert_eq!(s.cyclic().unwrap(), TensorElement::pure(&[B::m(1), B::n(2), B::l(0)]));
        assert_eq!(s.cyclic().unwrap().cyclic().unwrap().cyclic().unwrap(), s);
        let aaa = TensorElement::pure(&[B::y(1); 3]);
        assert_eq!(aaa.cyclic().unwrap(), aaa);

        assert!(s.twist().is_err());
        assert!(t.cyclic().is_err());
    }

    #[test]
    fn skew_examples() {
        assert!(t2(&[(1, B::l(1), B::m(2)), (-1, B::m(2), B::l(1))]).is_skew().unwrap());
        assert!(!TensorElement::pure(&[B::l(0), B::l(0)]).is_skew().unwrap());
        assert!(TensorElement::zero(2).is_skew().unwrap());
        assert!(TensorElement::zero(3).is_skew().is_err());
    }

    #[test]
    fn degree_decomposition() {
        let t = t2(&[(1, B::l(1), B::l(-1)), (1, B::m(2), B::m(0))]);
        let parts = t.degree_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&HalfDegree(0)], TensorElement::pure(&[B::l(1), B::l(-1)]));
        assert_eq!(parts[&HalfDegree(4)], TensorElement::pure(&[B::m(2), B::m(0)]));

        let y = TensorElement::pure(&[B::y(1), B::y(-1)]);
        assert_eq!(y.degree_decompose()[&HalfDegree(0)], y);
        assert!(TensorElement::zero(2).degree_decompose().is_empty());
    }

    #[test]
    fn window_enumeration() {
        assert_eq!(tensor_basis_window(2, 0, HalfDegree(0)).len(), 9);
        let w1 = tensor_basis_window(2, 1, HalfDegree(0));
        assert_eq!(w1.len(), 11);
        assert!(w1.contains(&PureTensor(vec![B::y(1), B::y(-1)])));
        assert_eq!(
            tensor_basis_window(1, 2, HalfDegree(1)),
            vec![PureTensor(vec![B::y(1)])]
        );
        let w = tensor_basis_window(3, 3, HalfDegree(1));
        assert!(w.iter().all(|k| k.degree() == HalfDegree(1) && k.spread() <= 3));
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn product_of_elements() {
        let a = &AlgebraElement::basis(B::l(0)) + &AlgebraElement::basis(B::m(1));
        let t = TensorElement::product(&a, &B::n(1).into());
        assert_eq!(t, t2(&[(1, B::l(0), B::n(1)), (1, B::m(1), B::n(1))]));
    }
}

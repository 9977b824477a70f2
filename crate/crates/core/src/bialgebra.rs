//! Coboundary cobrackets `Δ_r(x) = x·r` and the Yang-Baxter element.
//!
//! For `r = Σ a_i⊗b_i` the element `c(r) = [r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]`
//! is computed from its expansion
//!
//! ```text
//! c(r) = Σ [a_i,a_j]⊗b_i⊗b_j + Σ a_i⊗[b_i,a_j]⊗b_j + Σ a_i⊗a_j⊗[b_i,b_j]
//! ```
//!
//! which stays inside `L⊗L⊗L`, so no enveloping algebra is needed.
//!
//! The co-Jacobi defect of `Δ_r` is `(Id+ξ+ξ²)(Id⊗Δ_r)Δ_r(x)`; for skew `r`
//! it equals `x·c(r)`, which is what [`taft_identity_defect`] measures.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::{basis_window, BasisVector, GeneratorSet};
use crate::bracket::Bracket;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::tensor::{act, diag_action, PureTensor, TensorElement};

/// An element `r ∈ L⊗L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix(TensorElement);

impl RMatrix {
    pub fn new(t: TensorElement) -> Result<Self> {
        if t.order() != 2 {
            return Err(Error::WrongOrder {
                op: "RMatrix::new",
                expected: 2,
                found: t.order(),
            });
        }
        Ok(Self(t))
    }

    pub fn zero() -> Self {
        Self(TensorElement::zero(2))
    }

    pub fn tensor(&self) -> &TensorElement {
        &self.0
    }

    pub fn is_skew(&self) -> bool {
        self.0.is_skew().expect("order 2")
    }

    fn require_skew(&self) -> Result<()> {
        if self.is_skew() {
            Ok(())
        } else {
            Err(Error::NotSkew)
        }
    }
}

impl std::fmt::Display for RMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `Δ_r(x) = x·r`.
pub fn delta_r<B: Bracket + ?Sized>(br: &B, r: &RMatrix, x: &AlgebraElement) -> TensorElement {
    diag_action(br, x, &r.0)
}

/// `c(r)` by the three-sum expansion.
pub fn cybe_c<B: Bracket + ?Sized>(br: &B, r: &RMatrix) -> TensorElement {
    let mut out = TensorElement::zero(3);
    let terms: Vec<(BasisVector, BasisVector, &Rational)> = r.0.terms().map(|(k, c)| (k.0[0], k.0[1], c)).collect();
    for &(ai, bi, ci) in &terms {
        for &(aj, bj, cj) in &terms {
            let c = ci * cj;
            for (x, cx) in br.bracket_basis(ai, aj).terms() {
                out.add_term(PureTensor(vec![x, bi, bj]), &c * cx);
            }
            for (x, cx) in br.bracket_basis(bi, aj).terms() {
                out.add_term(PureTensor(vec![ai, x, bj]), &c * cx);
            }
            for (x, cx) in br.bracket_basis(bi, bj).terms() {
                out.add_term(PureTensor(vec![ai, aj, x]), &c * cx);
            }
        }
    }
    out
}

/// Checks `g·c(r) = 0` for every generator `g`. Since the annihilator of a
/// fixed tensor is a subalgebra, a generating set decides `x·c(r) = 0` for
/// all `x` in the algebra.
pub fn mybe_check<B: Bracket + ?Sized>(br: &B, r: &RMatrix, gens: &GeneratorSet) -> Result<bool> {
    r.require_skew()?;
    let c = cybe_c(br, r);
    Ok(gens.into_iter().all(|&g| act(br, g, &c).is_zero()))
}

/// The structure constant `k` with `[a, b] = k b`, if `a` and `b` form a
/// valid pair for [`taft_r`].
pub fn taft_constant<B: Bracket + ?Sized>(br: &B, a: &AlgebraElement, b: &AlgebraElement) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::NotTaftPair("a and b must be nonzero".into()));
    }
    // a, b independent iff a is not a multiple of b.
    let (b0, cb0) = b.terms().next().expect("nonzero");
    let ratio = a.coeff(b0) / cb0;
    if &b.scale(&ratio) == a {
        return Err(Error::NotTaftPair(format!("{a} and {b} are linearly dependent")));
    }
    let ab = br.bracket(a, b);
    let k = ab.coeff(b0) / cb0;
    if k.is_zero() {
        return Err(Error::NotTaftPair(format!(
            "[{a}, {b}] = {ab} is not a nonzero multiple of {b}"
        )));
    }
    if ab != b.scale(&k) {
        return Err(Error::NotTaftPair(format!(
            "[{a}, {b}] = {ab} is not proportional to {b}"
        )));
    }
    Ok(k)
}

/// `r = a⊗b - b⊗a` for `[a, b] = k b`, `k ≠ 0`; always a solution of the
/// classical Yang-Baxter equation.
pub fn taft_r<B: Bracket + ?Sized>(br: &B, a: &AlgebraElement, b: &AlgebraElement) -> Result<RMatrix> {
    taft_constant(br, a, b)?;
    let ab = TensorElement::product(a, b);
    let ba = TensorElement::product(b, a);
    Ok(RMatrix(&ab - &ba))
}

/// `(Id⊗Δ_r)` applied to a 2-tensor.
pub fn id_tensor_delta<B: Bracket + ?Sized>(br: &B, r: &RMatrix, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(3);
    for (k, c) in t.terms() {
        let (a, b) = (k.0[0], k.0[1]);
        for (dk, dc) in act(br, b, &r.0).terms() {
            out.add_term(PureTensor(vec![a, dk.0[0], dk.0[1]]), c * dc);
        }
    }
    out
}

/// `(Id + ξ + ξ²) t` for a 3-tensor.
pub fn cyclic_sum(t: &TensorElement) -> Result<TensorElement> {
    let once = t.cyclic()?;
    let twice = once.cyclic()?;
    Ok(&(t + &once) + &twice)
}

/// `(Id+ξ+ξ²)(Id⊗Δ_r)Δ_r(x)`, zero exactly when co-Jacobi holds at `x`.
pub fn co_jacobi_defect<B: Bracket + ?Sized>(br: &B, r: &RMatrix, x: &AlgebraElement) -> TensorElement {
    let d = delta_r(br, r, x);
    cyclic_sum(&id_tensor_delta(br, r, &d)).expect("order 3")
}

/// `co_jacobi_defect(r, x) - x·c(r)`; zero for every skew `r` and every `x`.
pub fn taft_identity_defect<B: Bracket + ?Sized>(br: &B, r: &RMatrix, x: &AlgebraElement) -> Result<TensorElement> {
    r.require_skew()?;
    let lhs = co_jacobi_defect(br, r, x);
    let rhs = diag_action(br, x, &cybe_c(br, r));
    Ok(&lhs - &rhs)
}

/// `Δ_r([x,y]) - x·Δ_r(y) + y·Δ_r(x)`.
pub fn compat_defect<B: Bracket + ?Sized>(
    br: &B,
    r: &RMatrix,
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> TensorElement {
    let lhs = delta_r(br, r, &br.bracket(x, y));
    let xdy = diag_action(br, x, &delta_r(br, r, y));
    let ydx = diag_action(br, y, &delta_r(br, r, x));
    &(&lhs - &xdy) + &ydx
}

/// Draws a skew `r = Σ c_i (a_i⊗b_i - b_i⊗a_i)` with at most `max_terms`
/// pure-tensor terms (so at most `max_terms / 2` skew pairs, at least one),
/// factors from the window `|twice_index| <= w` and small nonzero rational
/// coefficients. The same `rng` state always yields the same `r`.
pub fn sample_skew_r(rng: &mut ChaCha8Rng, w: i64, max_terms: usize) -> RMatrix {
    let basis = basis_window(w);
    loop {
        let n = rng.gen_range(1..=(max_terms / 2).max(1));
        let mut t = TensorElement::zero(2);
        for _ in 0..n {
            let pair: Vec<BasisVector> = basis.choose_multiple(rng, 2).copied().collect();
            let num = loop {
                let v = rng.gen_range(-5i64..=5);
                if v != 0 {
                    break v;
                }
            };
            let c = rat(num, rng.gen_range(1i64..=3));
            t.add_term(PureTensor(vec![pair[0], pair[1]]), c.clone());
            t.add_term(PureTensor(vec![pair[1], pair[0]]), -c);
        }
        // colliding pairs can cancel; draw again
        if !t.is_zero() {
            return RMatrix(t);
        }
    }
}

/// `count` skew samples from one seed.
pub fn seeded_skew_samples(seed: u64, count: usize, w: i64, max_terms: usize) -> Vec<RMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_skew_r(&mut rng, w, max_terms)).collect()
}

/// Taft pairs `(a, b)` among basis vectors of the window with `[a, b] = k b`,
/// `k ≠ 0`, drawn from the families `(L_0, M_n)`, `(L_0, Y_p)`, `(N_0, M_n)`
/// and `(L_0, N_n)`.
pub fn window_taft_pairs<B: Bracket + ?Sized>(br: &B, w: i64) -> Vec<(BasisVector, BasisVector, Rational)> {
    use crate::basis::Family;
    let mut out = Vec::new();
    for b in basis_window(w) {
        let heads: &[BasisVector] = match b.family() {
            Family::M => &[BasisVector::l(0), BasisVector::n(0)],
            Family::Y | Family::N => &[BasisVector::l(0)],
            Family::L => &[],
        };
        for &a in heads {
            if let Ok(k) = taft_constant(br, &a.into(), &b.into()) {
                out.push((a, b, k));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Esv;
    use crate::linalg::int;
    use BasisVector as B;

    fn e(b: B) -> AlgebraElement {
        b.into()
    }

    fn skew(a: B, b: B) -> RMatrix {
        RMatrix::new(TensorElement::from_terms(2, [(int(1), [a, b]), (int(-1), [b, a])])).unwrap()
    }

    #[test]
    fn delta_examples() {
        let r = skew(B::l(0), B::m(1));
        let got = delta_r(&Esv, &r, &e(B::l(1)));
        let expect = TensorElement::from_terms(
            2,
            [
                (int(-1), [B::l(1), B::m(1)]),
                (int(1), [B::l(0), B::m(2)]),
                (int(-1), [B::m(2), B::l(0)]),
                (int(1), [B::m(1), B::l(1)]),
            ],
        );
        assert_eq!(got, expect);
        assert_eq!(delta_r(&Esv, &r, &e(B::l(0))), *r.tensor());
        assert!(delta_r(&Esv, &r, &AlgebraElement::zero()).is_zero());
    }

    #[test]
    fn cybe_examples() {
        let r = RMatrix::new(TensorElement::pure(&[B::l(0), B::l(1)])).unwrap();
        let expect = TensorElement::pure_scaled(int(-1), &[B::l(0), B::l(1), B::l(1)]);
        assert_eq!(cybe_c(&Esv, &r), expect);

        let r = taft_r(&Esv, &e(B::l(0)), &e(B::m(3))).unwrap();
        assert!(cybe_c(&Esv, &r).is_zero());
        assert!(cybe_c(&Esv, &RMatrix::zero()).is_zero());
    }

    #[test]
    fn taft_examples() {
        assert_eq!(taft_constant(&Esv, &e(B::l(0)), &e(B::m(3))).unwrap(), int(3));
        assert_eq!(taft_constant(&Esv, &e(B::n(0)), &e(B::m(5))).unwrap(), int(2));
        assert_eq!(taft_constant(&Esv, &e(B::l(0)), &e(B::n(1))).unwrap(), int(1));
        assert_eq!(taft_constant(&Esv, &e(B::l(0)), &e(B::y(1))).unwrap(), rat(1, 2));
        assert!(taft_r(&Esv, &e(B::m(0)), &e(B::n(1))).is_err());
        assert!(taft_r(&Esv, &e(B::l(0)), &e(B::l(0))).is_err());
        assert!(taft_r(&Esv, &e(B::l(0)), &e(B::n(0))).is_err());
        let r = taft_r(&Esv, &e(B::l(0)), &e(B::m(3))).unwrap();
        assert!(r.is_skew());
        assert_eq!(*r.tensor(), *skew(B::l(0), B::m(3)).tensor());
    }

    #[test]
    fn mybe_examples() {
        let gens = GeneratorSet::standard();
        let r = taft_r(&Esv, &e(B::n(0)), &e(B::m(2))).unwrap();
        assert!(mybe_check(&Esv, &r, &gens).unwrap());
        assert!(mybe_check(&Esv, &RMatrix::zero(), &gens).unwrap());
        let nonskew = RMatrix::new(TensorElement::pure(&[B::l(0), B::l(1)])).unwrap();
        assert_eq!(mybe_check(&Esv, &nonskew, &gens), Err(Error::NotSkew));
    }

    #[test]
    fn mybe_agrees_with_brute_force() {
        let gens = GeneratorSet::standard();
        let r = skew(B::l(0), B::l(1));
        let verdict = mybe_check(&Esv, &r, &gens).unwrap();
        let c = cybe_c(&Esv, &r);
        let brute = basis_window(4).into_iter().all(|x| act(&Esv, x, &c).is_zero());
        assert_eq!(verdict, brute);
    }

    #[test]
    fn co_jacobi_examples() {
        let r = taft_r(&Esv, &e(B::n(0)), &e(B::m(2))).unwrap();
        assert!(co_jacobi_defect(&Esv, &r, &e(B::l(1))).is_zero());
        assert!(co_jacobi_defect(&Esv, &RMatrix::zero(), &e(B::l(1))).is_zero());

        // skew r with x·c(r) ≠ 0: the defect is exactly x·c(r)
        let r = skew(B::l(1), B::l(2));
        let x = e(B::l(0));
        let xc = diag_action(&Esv, &x, &cybe_c(&Esv, &r));
        assert!(!xc.is_zero());
        assert_eq!(co_jacobi_defect(&Esv, &r, &x), xc);
    }

    #[test]
    fn taft_identity_examples() {
        let r = skew(B::l(0), B::l(1));
        assert!(taft_identity_defect(&Esv, &r, &e(B::l(2))).unwrap().is_zero());
        let r = taft_r(&Esv, &e(B::l(0)), &e(B::y(1))).unwrap();
        assert!(taft_identity_defect(&Esv, &r, &e(B::n(1))).unwrap().is_zero());
        assert!(taft_identity_defect(&Esv, &RMatrix::zero(), &e(B::n(1)))
            .unwrap()
            .is_zero());
        // a case where both sides are nonzero
        let r = skew(B::l(1), B::m(-2));
        assert!(!cybe_c(&Esv, &r).is_zero());
        for x in basis_window(4) {
            assert!(taft_identity_defect(&Esv, &r, &e(x)).unwrap().is_zero(), "x = {x}");
        }
        let nonskew = RMatrix::new(TensorElement::pure(&[B::l(0), B::l(1)])).unwrap();
        assert!(taft_identity_defect(&Esv, &nonskew, &e(B::n(1))).is_err());
    }

    #[test]
    fn compat_examples() {
        let r = skew(B::l(0), B::y(1));
        assert!(compat_defect(&Esv, &r, &e(B::l(1)), &e(B::l(-1))).is_zero());
        assert!(compat_defect(&Esv, &r, &e(B::n(2)), &e(B::n(2))).is_zero());
        let r = taft_r(&Esv, &e(B::n(0)), &e(B::m(2))).unwrap();
        assert!(compat_defect(&Esv, &r, &e(B::y(1)), &e(B::y(-1))).is_zero());
    }

    #[test]
    fn sampling_is_deterministic_and_skew() {
        let a = seeded_skew_samples(7, 20, 6, 4);
        let b = seeded_skew_samples(7, 20, 6, 4);
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.is_skew() && !r.tensor().is_zero()));
        assert!(a.iter().all(|r| r.tensor().len() <= 4 && r.tensor().spread() <= 6));
    }

    #[test]
    fn window_pairs() {
        let pairs = window_taft_pairs(&Esv, 6);
        assert_eq!(pairs.len(), 25);
        assert!(pairs.iter().all(|(_, _, k)| !k.is_zero()));
    }
}

//! Lie brackets given by structure constants.
//!
//! [`Bracket`] is the one trait every computation in the crate is generic
//! over; it only has to say how two basis vectors bracket. [`Esv`] hard-codes
//! the extended Schrödinger-Virasoro table, and compiled `.lialg` rule sets
//! (see [`crate::dsl`]) implement the same trait.

use num_traits::Zero;

use crate::basis::{BasisVector, Family};
use crate::element::AlgebraElement;
use crate::linalg::{int, Rational};

pub trait Bracket: Sync {
    /// `[a, b]` on basis vectors.
    fn bracket_basis(&self, a: BasisVector, b: BasisVector) -> AlgebraElement;

    /// Bilinear extension of [`bracket_basis`](Bracket::bracket_basis).
    fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let c = ca * cb;
                for (t, ct) in self.bracket_basis(a, b).terms() {
                    out.add_term(t, &c * ct);
                }
            }
        }
        out
    }

    /// `[x, b]` for a general element and a basis vector.
    fn bracket_with_basis(&self, x: &AlgebraElement, b: BasisVector) -> AlgebraElement {
        self.bracket(x, &AlgebraElement::basis(b))
    }

    /// `[[a,b],c] + [[b,c],a] + [[c,a],b]`, zero in any Lie algebra.
    fn jacobi_defect(&self, a: BasisVector, b: BasisVector, c: BasisVector) -> AlgebraElement {
        let (a, b, c) = (
            AlgebraElement::basis(a),
            AlgebraElement::basis(b),
            AlgebraElement::basis(c),
        );
        let t1 = self.bracket(&self.bracket(&a, &b), &c);
        let t2 = self.bracket(&self.bracket(&b, &c), &a);
        let t3 = self.bracket(&self.bracket(&c, &a), &b);
        &(&t1 + &t2) + &t3
    }
}

impl<B: Bracket + ?Sized> Bracket for &B {
    fn bracket_basis(&self, a: BasisVector, b: BasisVector) -> AlgebraElement {
        (**self).bracket_basis(a, b)
    }
}

/// The extended Schrödinger-Virasoro algebra with basis
/// `{L_n, M_n, N_n, Y_p | n ∈ ℤ, p ∈ ℤ + 1/2}` and brackets
///
/// ```text
/// [L_m, L_n] = (n - m) L_{m+n}     [L_m, N_n] = n N_{m+n}     [L_m, M_n] = n M_{m+n}
/// [L_n, Y_p] = (p - n/2) Y_{n+p}   [N_m, Y_p] = Y_{m+p}       [N_m, M_n] = 2 M_{m+n}
/// [M_n, Y_p] = [N_m, N_n] = [M_m, M_n] = 0                    [Y_p, Y_q] = (q - p) M_{p+q}
/// ```
///
/// Only the listed order of each family pair is tabulated; the reverse order
/// comes from antisymmetry.
#[derive(Debug, Clone, Copy, Default)]
pub struct Esv;

impl Esv {
    /// Table lookup for the listed family orders. `None` means the pair is
    /// stored the other way round.
    fn table(a: BasisVector, b: BasisVector) -> Option<(Rational, Option<BasisVector>)> {
        use Family::*;
        // Indices as rationals, halved from the stored doubled form.
        let (m, n) = (a.index(), b.index());
        let sum = a.twice_index() + b.twice_index();
        let target = |fam| BasisVector::new(fam, sum);
        Some(match (a.family(), b.family()) {
            (L, L) => (n - m, target(L)),
            (L, N) => (n, target(N)),
            (L, M) => (n, target(M)),
            (L, Y) => (n - m / int(2), target(Y)),
            (N, Y) => (int(1), target(Y)),
            (N, M) => (int(2), target(M)),
            (Y, Y) => (n - m, target(M)),
            (M, Y) | (N, N) | (M, M) => (Rational::zero(), None),
            _ => return None,
        })
    }
}

impl Bracket for Esv {
    fn bracket_basis(&self, a: BasisVector, b: BasisVector) -> AlgebraElement {
        let (coeff, target, sign) = match Esv::table(a, b) {
            Some((c, t)) => (c, t, 1),
            None => {
                let (c, t) = Esv::table(b, a).expect("every family pair is tabulated one way");
                (c, t, -1)
            }
        };
        match target {
            Some(t) if !coeff.is_zero() => AlgebraElement::term(coeff * int(sign), t),
            _ => AlgebraElement::zero(),
        }
    }
}

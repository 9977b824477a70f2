//! First-cohomology statements for `V = L⊗L`, checked on finite windows.
//!
//! Brackets and actions are always computed exactly. Truncation only ever
//! limits the support of the unknowns being solved for; equations that would
//! need an unknown outside the window are dropped rather than cut short, and
//! conclusions are read on an interior sub-window. Results about the whole
//! infinite-dimensional algebra are therefore evidence, not proof.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{basis_window, BasisVector, Family, GeneratorSet, HalfDegree};
use crate::bracket::Bracket;
use crate::error::{Error, Result};
use crate::linalg::{int, nullspace, subspace_equal, Containment, Rational, SparseMatrix, SubspaceBasis};
use crate::tensor::{act, act_basis_into, tensor_basis_window, PureTensor, TensorElement};

/// Pure tensors used as coordinates, with a reverse lookup.
struct Coords {
    keys: Vec<PureTensor>,
    pos: HashMap<PureTensor, usize>,
}

impl Coords {
    fn new(keys: Vec<PureTensor>) -> Self {
        let pos = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Self { keys, pos }
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn get(&self, k: &PureTensor) -> Option<usize> {
        self.pos.get(k).copied()
    }

    fn element(&self, order: usize, v: &[Rational]) -> TensorElement {
        TensorElement::from_terms(
            order,
            v.iter()
                .zip(&self.keys)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, k)| (c.clone(), k.0.clone())),
        )
    }
}

/// Accumulates sparse equations keyed by an arbitrary ordered row label, so
/// that the resulting matrix does not depend on insertion order.
struct Rows<K: Ord> {
    cols: usize,
    rows: BTreeMap<K, BTreeMap<usize, Rational>>,
}

impl<K: Ord> Rows<K> {
    fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: BTreeMap::new(),
        }
    }

    fn add(&mut self, row: K, col: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        let e = self
            .rows
            .entry(row)
            .or_default()
            .entry(col)
            .or_insert_with(Rational::zero);
        *e += value;
    }

    fn matrix(self) -> SparseMatrix {
        let mut m = SparseMatrix::with_cols(self.cols);
        for (_, row) in self.rows {
            m.push_row(row.into_iter().filter(|(_, v)| !v.is_zero()));
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every cocycle is a coboundary.
    TrivialH1,
    NontrivialH1,
}

/// Cocycles against coboundaries for one finite piece of a cohomology
/// computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CochainReport {
    pub description: String,
    pub window: i64,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    /// Position of the cocycle space (`a`) relative to the coboundary space (`b`).
    pub containment: Containment,
    pub verdict: Verdict,
    /// A cocycle that is not a coboundary, when there is one.
    pub witness: Option<String>,
}

impl CochainReport {
    fn build(
        description: String,
        window: i64,
        cocycles: &SubspaceBasis,
        coboundaries: &SubspaceBasis,
        show: impl Fn(&[Rational]) -> String,
    ) -> Result<Self> {
        let containment = subspace_equal(cocycles, coboundaries)?;
        let contained = matches!(containment, Containment::Equal | Containment::AInB);
        let trivial = contained && cocycles.dim() == coboundaries.dim();
        let witness = if trivial {
            None
        } else {
            cocycles
                .vectors()
                .iter()
                .find(|v| !coboundaries.contains(v))
                .map(|v| show(v))
        };
        Ok(Self {
            description,
            window,
            cocycle_dim: cocycles.dim(),
            coboundary_dim: coboundaries.dim(),
            containment,
            verdict: if trivial {
                Verdict::TrivialH1
            } else {
                Verdict::NontrivialH1
            },
            witness,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.verdict == Verdict::TrivialH1
    }
}

// ---------------------------------------------------------------------------
// L_1 identities

/// One of the closed forms
/// `L_1·(X_i⊗Z_j) = a(n) X_{i+1}⊗Z_j − b(n) X_i⊗Z_{j+1}`
/// with `i = n`, `j = −n` (or `n − 1/2`, `1/2 − n` for `Y⊗Y`).
struct L1Identity {
    left: Family,
    right: Family,
    a: fn(i64) -> i64,
    b: fn(i64) -> i64,
}

const L1_IDENTITIES: [L1Identity; 10] = {
    use Family::*;
    [
        L1Identity {
            left: N,
            right: N,
            a: |n| n,
            b: |n| n,
        },
        L1Identity {
            left: M,
            right: N,
            a: |n| n,
            b: |n| n,
        },
        L1Identity {
            left: N,
            right: M,
            a: |n| n,
            b: |n| n,
        },
        L1Identity {
            left: M,
            right: M,
            a: |n| n,
            b: |n| n,
        },
        L1Identity {
            left: L,
            right: N,
            a: |n| n - 1,
            b: |n| n,
        },
        L1Identity {
            left: N,
            right: L,
            a: |n| n,
            b: |n| 1 + n,
        },
        L1Identity {
            left: L,
            right: M,
            a: |n| n - 1,
            b: |n| n,
        },
        L1Identity {
            left: M,
            right: L,
            a: |n| n,
            b: |n| 1 + n,
        },
        L1Identity {
            left: L,
            right: L,
            a: |n| n - 1,
            b: |n| 1 + n,
        },
        L1Identity {
            left: Y,
            right: Y,
            a: |n| n - 1,
            b: |n| n,
        },
    ]
};

impl L1Identity {
    /// `(input, expected)` at `n`.
    fn instance(&self, n: i64) -> (TensorElement, TensorElement) {
        let (i, j) = if self.left == Family::Y {
            (2 * n - 1, 1 - 2 * n)
        } else {
            (2 * n, -2 * n)
        };
        let v = |f, t| BasisVector::new(f, t).expect("parity fixed by the family");
        let input = TensorElement::pure(&[v(self.left, i), v(self.right, j)]);
        let expected = TensorElement::from_terms(
            2,
            [
                (int((self.a)(n)), vec![v(self.left, i + 2), v(self.right, j)]),
                (int(-(self.b)(n)), vec![v(self.left, i), v(self.right, j + 2)]),
            ],
        );
        (input, expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L1Mismatch {
    /// 1-based position in the list of identities.
    pub identity: usize,
    pub n: i64,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L1Report {
    pub n_min: i64,
    pub n_max: i64,
    pub checked: usize,
    pub mismatch: Option<L1Mismatch>,
}

impl L1Report {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// The ten `L_1`-action identities used to normalize degree-zero
/// derivations, recomputed with [`act`] for every `n` in `n_range` and
/// compared term by term against their closed forms.
pub fn l1_identity_suite<B: Bracket + ?Sized>(br: &B, n_range: RangeInclusive<i64>) -> L1Report {
    let mut checked = 0;
    let mut mismatch = None;
    'outer: for n in n_range.clone() {
        for (k, id) in L1_IDENTITIES.iter().enumerate() {
            let (input, expected) = id.instance(n);
            let found = act(br, BasisVector::l(1), &input);
            checked += 1;
            if found != expected {
                mismatch = Some(L1Mismatch {
                    identity: k + 1,
                    n,
                    expected: expected.to_string(),
                    found: found.to_string(),
                });
                break 'outer;
            }
        }
    }
    L1Report {
        n_min: *n_range.start(),
        n_max: *n_range.end(),
        checked,
        mismatch,
    }
}

// ---------------------------------------------------------------------------
// Joint kernel

/// Basis of `{t : g·t = 0 for all g in gens}` among tensors supported on
/// `tensor_basis_window(order, w, total)`, in those coordinates.
pub fn joint_kernel<B: Bracket + ?Sized>(
    br: &B,
    order: usize,
    w: i64,
    total: HalfDegree,
    gens: &GeneratorSet,
) -> SubspaceBasis {
    let coords = Coords::new(tensor_basis_window(order, w, total));
    let mut rows = Rows::new(coords.len());
    for (col, key) in coords.keys.iter().enumerate() {
        for (gi, &g) in gens.as_slice().iter().enumerate() {
            let mut out = TensorElement::zero(order);
            act_basis_into(br, g, key, &int(1), &mut out);
            for (k, c) in out.terms() {
                rows.add((gi, k.clone()), col, c);
            }
        }
    }
    nullspace(&rows.matrix())
}

// ---------------------------------------------------------------------------
// Skew saturation

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub window: i64,
    pub margin: i64,
    /// Dimension of the solution space `S` on the whole window.
    pub solution_dim: usize,
    /// Dimension of the skew tensors on the whole window.
    pub skew_dim: usize,
    /// Dimension of `S` projected to the interior window.
    pub interior_dim: usize,
    /// Interior projection of an element of `S` that is not skew.
    pub witness: Option<String>,
}

impl SaturationReport {
    pub fn contained(&self) -> bool {
        self.witness.is_none()
    }
}

/// Solves `(Id+τ)(g·v) = 0` for all `g ∈ gens` over 2-tensors `v` supported
/// on the window, one total degree at a time, and checks that every solution
/// is skew once projected to the interior window `w − margin`.
pub fn skew_saturation_check<B: Bracket + ?Sized>(
    br: &B,
    w: i64,
    gens: &GeneratorSet,
    margin: i64,
) -> Result<SaturationReport> {
    check_margin(w, margin)?;
    if margin < gens.max_twice_degree() {
        return Err(Error::InvalidWindow(format!(
            "margin {margin} is smaller than the generator reach {}",
            gens.max_twice_degree()
        )));
    }
    let inner = w - margin;
    let per_degree: Vec<(usize, usize, usize, Option<String>)> = (-2 * w..=2 * w)
        .into_par_iter()
        .map(|d| saturation_degree(br, w, inner, HalfDegree(d), gens))
        .collect();
    let mut report = SaturationReport {
        window: w,
        margin,
        solution_dim: 0,
        skew_dim: 0,
        interior_dim: 0,
        witness: None,
    };
    for (s, k, i, wit) in per_degree {
        report.solution_dim += s;
        report.skew_dim += k;
        report.interior_dim += i;
        if report.witness.is_none() {
            report.witness = wit;
        }
    }
    Ok(report)
}

fn saturation_degree<B: Bracket + ?Sized>(
    br: &B,
    w: i64,
    inner: i64,
    d: HalfDegree,
    gens: &GeneratorSet,
) -> (usize, usize, usize, Option<String>) {
    let coords = Coords::new(tensor_basis_window(2, w, d));
    if coords.len() == 0 {
        return (0, 0, 0, None);
    }
    let mut rows = Rows::new(coords.len());
    for (col, key) in coords.keys.iter().enumerate() {
        for (gi, &g) in gens.as_slice().iter().enumerate() {
            let mut out = TensorElement::zero(2);
            act_basis_into(br, g, key, &int(1), &mut out);
            let sym = out.symmetrize().expect("order 2");
            for (k, c) in sym.terms() {
                rows.add((gi, k.clone()), col, c);
            }
        }
    }
    let s = nullspace(&rows.matrix());
    let skew_dim = coords.keys.iter().filter(|k| k.0[0] < k.0[1]).count();

    let interior: Vec<usize> = (0..coords.len())
        .filter(|&i| coords.keys[i].spread() <= inner)
        .collect();
    let projected: Vec<Vec<Rational>> = s
        .vectors()
        .iter()
        .map(|v| interior.iter().map(|&i| v[i].clone()).collect())
        .collect();
    let interior_dim = SubspaceBasis::span(interior.len(), &projected).dim();
    let witness = s.vectors().iter().find_map(|v| {
        let t = coords.element(2, v).restrict(inner);
        match t.is_skew() {
            Ok(true) => None,
            _ => Some(t.to_string()),
        }
    });
    (s.dim(), skew_dim, interior_dim, witness)
}

fn check_margin(w: i64, margin: i64) -> Result<()> {
    if w < 0 || margin < 0 || margin > w {
        return Err(Error::InvalidWindow(format!(
            "need window >= margin >= 0, got window {w}, margin {margin}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// L_0 pieces

/// Basis of the zero-degree part `span{L_0, M_0, N_0}`.
pub fn l0_basis() -> [BasisVector; 3] {
    [BasisVector::l(0), BasisVector::m(0), BasisVector::n(0)]
}

/// Pure tensors `X⊗Z` with `deg X = p` and `deg Z = q`.
pub fn piece_basis(p: HalfDegree, q: HalfDegree) -> Vec<PureTensor> {
    let fams = |d: HalfDegree| -> Vec<BasisVector> {
        Family::ALL
            .iter()
            .filter_map(|&f| BasisVector::new(f, d.twice()))
            .collect()
    };
    let mut out = Vec::new();
    for &x in &fams(p) {
        for &z in &fams(q) {
            out.push(PureTensor(vec![x, z]));
        }
    }
    out.sort();
    out
}

/// Checks that each element of [`l0_basis`] maps the piece into itself.
fn l0_invariant_piece<B: Bracket + ?Sized>(br: &B, p: HalfDegree, q: HalfDegree) -> Result<Coords> {
    let coords = Coords::new(piece_basis(p, q));
    for x in l0_basis() {
        for key in &coords.keys {
            let mut out = TensorElement::zero(2);
            act_basis_into(br, x, key, &int(1), &mut out);
            let stray = out.terms().map(|(k, _)| k).find(|k| coords.get(k).is_none()).cloned();
            if let Some(k) = stray {
                return Err(Error::NotInvariant(format!(
                    "{x}·{key} has the term {k} outside the ({p},{q}) piece"
                )));
            }
        }
    }
    Ok(coords)
}

/// `H¹` of the degree-zero subalgebra `L₀ = span{L_0, M_0, N_0}` with
/// coefficients in the `(p, q)` piece of `L⊗L`.
///
/// Cocycles are maps `D: L₀ → piece` with `D([x,y]) = x·D(y) − y·D(x)` on
/// the three basis pairs; coboundaries are the maps `x ↦ x·v`.
pub fn h1_l0_piece<B: Bracket + ?Sized>(br: &B, p: HalfDegree, q: HalfDegree) -> Result<CochainReport> {
    let coords = l0_invariant_piece(br, p, q)?;
    let l0 = l0_basis();
    let d = coords.len();
    let col = |i: usize, k: usize| i * d + k;

    let mut rows = Rows::new(3 * d);
    for i in 0..3 {
        for j in i + 1..3 {
            let xy = br.bracket_basis(l0[i], l0[j]);
            for (b, c) in xy.terms() {
                let l = l0.iter().position(|&x| x == b).ok_or_else(|| {
                    Error::NotInvariant(format!("[{}, {}] leaves the degree-zero span", l0[i], l0[j]))
                })?;
                for k in 0..d {
                    rows.add((i, j, k), col(l, k), c);
                }
            }
            for (k, key) in coords.keys.iter().enumerate() {
                // -x_i·D(x_j) + x_j·D(x_i)
                for (x, unknown, sign) in [(l0[i], j, -1), (l0[j], i, 1)] {
                    let mut out = TensorElement::zero(2);
                    act_basis_into(br, x, key, &int(sign), &mut out);
                    for (kk, c) in out.terms() {
                        let r = coords.get(kk).expect("piece is invariant");
                        rows.add((i, j, r), col(unknown, k), c);
                    }
                }
            }
        }
    }
    let cocycles = nullspace(&rows.matrix());

    let inner: Vec<Vec<Rational>> = coords
        .keys
        .iter()
        .map(|key| {
            let mut v = vec![Rational::zero(); 3 * d];
            for (i, &x) in l0.iter().enumerate() {
                let mut out = TensorElement::zero(2);
                act_basis_into(br, x, key, &int(1), &mut out);
                for (kk, c) in out.terms() {
                    v[col(i, coords.get(kk).expect("piece is invariant"))] = c.clone();
                }
            }
            v
        })
        .collect();
    let coboundaries = SubspaceBasis::span(3 * d, &inner);

    let window = p.twice().abs().max(q.twice().abs());
    CochainReport::build(
        format!("H1(L0, V) on the ({p},{q}) piece"),
        window,
        &cocycles,
        &coboundaries,
        |v| {
            l0.iter()
                .enumerate()
                .map(|(i, x)| format!("D({x}) = {}", coords.element(2, &v[i * d..(i + 1) * d])))
                .collect::<Vec<_>>()
                .join("; ")
        },
    )
}

/// Dimension of the space of `L₀`-equivariant linear maps from the `a`
/// piece to the `b` piece.
pub fn hom_l0_check<B: Bracket + ?Sized>(
    br: &B,
    a: (HalfDegree, HalfDegree),
    b: (HalfDegree, HalfDegree),
) -> Result<usize> {
    let src = l0_invariant_piece(br, a.0, a.1)?;
    let dst = l0_invariant_piece(br, b.0, b.1)?;
    let (da, db) = (src.len(), dst.len());
    // F[j][i] is the coefficient of dst key j in f(src key i).
    let col = |j: usize, i: usize| j * da + i;
    let mut rows = Rows::new(da * db);
    for (xi, x) in l0_basis().into_iter().enumerate() {
        for (i, key) in src.keys.iter().enumerate() {
            // f(x·e_i)
            let mut xe = TensorElement::zero(2);
            act_basis_into(br, x, key, &int(1), &mut xe);
            for (k, c) in xe.terms() {
                let k = src.get(k).expect("piece is invariant");
                for j in 0..db {
                    rows.add((xi, i, j), col(j, k), c);
                }
            }
            // − x·f(e_i)
            for (j, dkey) in dst.keys.iter().enumerate() {
                let mut xf = TensorElement::zero(2);
                act_basis_into(br, x, dkey, &int(-1), &mut xf);
                for (k, c) in xf.terms() {
                    let l = dst.get(k).expect("piece is invariant");
                    rows.add((xi, i, l), col(j, i), c);
                }
            }
        }
    }
    Ok(nullspace(&rows.matrix()).dim())
}

// ---------------------------------------------------------------------------
// Derivations on a window

/// A linear map `D: L → L⊗L` known on the window basis, homogeneous of
/// degree `degree_shift`: `D(b)` has total degree `deg b + degree_shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowDerivation {
    window: i64,
    degree_shift: HalfDegree,
    assignment: BTreeMap<BasisVector, TensorElement>,
}

impl WindowDerivation {
    /// Zero values are dropped. Fails if a value has the wrong order or
    /// degree, or if a basis vector lies outside the window.
    pub fn new(
        window: i64,
        degree_shift: HalfDegree,
        assignment: BTreeMap<BasisVector, TensorElement>,
    ) -> Result<Self> {
        for (b, t) in &assignment {
            if b.twice_index().abs() > window {
                return Err(Error::InvalidWindow(format!("{b} is outside window {window}")));
            }
            if t.order() != 2 {
                return Err(Error::WrongOrder {
                    op: "WindowDerivation",
                    expected: 2,
                    found: t.order(),
                });
            }
            if let Some(k) = t
                .terms()
                .map(|(k, _)| k)
                .find(|k| k.degree() != b.degree() + degree_shift)
            {
                return Err(Error::InvalidWindow(format!(
                    "D({b}) has the term {k} of degree {}, expected {}",
                    k.degree(),
                    b.degree() + degree_shift
                )));
            }
        }
        let assignment = assignment.into_iter().filter(|(_, t)| !t.is_zero()).collect();
        Ok(Self {
            window,
            degree_shift,
            assignment,
        })
    }

    pub fn zero(window: i64) -> Self {
        Self {
            window,
            degree_shift: HalfDegree::ZERO,
            assignment: BTreeMap::new(),
        }
    }

    /// The inner derivation `b ↦ b·v` on the window basis, values kept exact.
    pub fn inner<B: Bracket + ?Sized>(br: &B, window: i64, v: &TensorElement) -> Result<Self> {
        let shift = match v.degree_decompose().keys().collect::<Vec<_>>().as_slice() {
            [] => HalfDegree::ZERO,
            [d] => **d,
            _ => return Err(Error::InvalidWindow("inner derivation needs a homogeneous v".into())),
        };
        let assignment = basis_window(window).into_iter().map(|b| (b, act(br, b, v))).collect();
        Self::new(window, shift, assignment)
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn degree_shift(&self) -> HalfDegree {
        self.degree_shift
    }

    pub fn assignment(&self) -> &BTreeMap<BasisVector, TensorElement> {
        &self.assignment
    }

    pub fn get(&self, b: BasisVector) -> TensorElement {
        self.assignment
            .get(&b)
            .cloned()
            .unwrap_or_else(|| TensorElement::zero(2))
    }

    pub fn is_zero(&self) -> bool {
        self.assignment.is_empty()
    }

    /// `D([a,b]) − a·D(b) + b·D(a)`, using the stored values of `D` only.
    pub fn defect<B: Bracket + ?Sized>(&self, br: &B, a: BasisVector, b: BasisVector) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (c, k) in br.bracket_basis(a, b).terms() {
            out.add_scaled(&self.get(c), k);
        }
        let ab = act(br, a, &self.get(b));
        let ba = act(br, b, &self.get(a));
        &(&out - &ab) + &ba
    }

    /// The part of [`defect`](Self::defect) that a window derivation is
    /// required to cancel: terms whose every preimage under the action lies
    /// in the window.
    pub fn window_defect<B: Bracket + ?Sized>(&self, br: &B, a: BasisVector, b: BasisVector) -> TensorElement {
        self.defect(br, a, b).restrict(row_radius(self.window, a, b))
    }
}

/// Equations of a constraint pair `(a, b)` are kept on tensors with spread
/// at most this value. Below it, every term `a·k` or `b·k` landing there
/// comes from a `k` inside the window.
fn row_radius(w: i64, a: BasisVector, b: BasisVector) -> i64 {
    w - a.twice_index().abs().max(b.twice_index().abs())
}

/// Basis pairs `a < b` of the window whose bracket stays in the window.
pub fn constraint_pairs<B: Bracket + ?Sized>(br: &B, w: i64) -> Vec<(BasisVector, BasisVector)> {
    let basis = basis_window(w);
    let mut out = Vec::new();
    for (i, &a) in basis.iter().enumerate() {
        for &b in &basis[i + 1..] {
            if br.bracket_basis(a, b).support().all(|c| c.twice_index().abs() <= w) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Unknown layout for degree-zero window derivations: the coefficients of
/// `D(b)` on `tensor_basis_window(2, w, deg b)` for each window basis `b`.
struct DerivationLayout {
    basis: Vec<BasisVector>,
    coords: Vec<Coords>,
    offset: Vec<usize>,
    total: usize,
}

impl DerivationLayout {
    fn new(w: i64) -> Self {
        let basis = basis_window(w);
        let coords: Vec<Coords> = basis
            .iter()
            .map(|b| Coords::new(tensor_basis_window(2, w, b.degree())))
            .collect();
        let mut offset = Vec::with_capacity(basis.len());
        let mut total = 0;
        for c in &coords {
            offset.push(total);
            total += c.len();
        }
        Self {
            basis,
            coords,
            offset,
            total,
        }
    }

    fn index(&self, b: BasisVector) -> usize {
        self.basis.binary_search(&b).expect("basis vector in window")
    }

    fn derivation(&self, w: i64, v: &[Rational]) -> WindowDerivation {
        let assignment = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let o = self.offset[i];
                (b, self.coords[i].element(2, &v[o..o + self.coords[i].len()]))
            })
            .collect();
        WindowDerivation::new(w, HalfDegree::ZERO, assignment).expect("layout is homogeneous")
    }
}

/// All degree-zero window derivations: a basis of the solutions of
/// `D([a,b]) = a·D(b) − b·D(a)` over the [`constraint_pairs`], restricted to
/// equations that only involve unknowns in the window.
pub fn derivation_solutions<B: Bracket + ?Sized>(br: &B, w: i64) -> Result<Vec<WindowDerivation>> {
    check_margin(w, 0)?;
    let layout = DerivationLayout::new(w);
    let (_, kernel) = derivation_kernel(br, w, &layout);
    Ok(kernel.vectors().iter().map(|v| layout.derivation(w, v)).collect())
}

fn derivation_kernel<B: Bracket + ?Sized>(br: &B, w: i64, layout: &DerivationLayout) -> (usize, SubspaceBasis) {
    let pairs = constraint_pairs(br, w);
    let mut rows = Rows::new(layout.total);
    for (pi, &(a, b)) in pairs.iter().enumerate() {
        let radius = row_radius(w, a, b);
        let keep = |k: &PureTensor| k.spread() <= radius;
        for (c, coeff) in br.bracket_basis(a, b).terms() {
            let ci = layout.index(c);
            for (k, key) in layout.coords[ci].keys.iter().enumerate() {
                if keep(key) {
                    rows.add((pi, key.clone()), layout.offset[ci] + k, coeff);
                }
            }
        }
        // -a·D(b) + b·D(a)
        for (x, y, sign) in [(a, b, -1), (b, a, 1)] {
            let yi = layout.index(y);
            for (k, key) in layout.coords[yi].keys.iter().enumerate() {
                let mut out = TensorElement::zero(2);
                act_basis_into(br, x, key, &int(sign), &mut out);
                for (kk, c) in out.terms() {
                    if keep(kk) {
                        rows.add((pi, kk.clone()), layout.offset[yi] + k, c);
                    }
                }
            }
        }
    }
    let m = rows.matrix();
    (m.rows(), nullspace(&m))
}

/// Window evidence that every degree-zero derivation `L → L⊗L` is inner.
///
/// Solves for window derivations, restricts them to the interior window
/// `w − margin` (values on interior basis vectors, interior tensor terms),
/// and compares with the same restriction of the inner derivations
/// `b ↦ b·v` for `v` of degree zero in the window.
pub fn degree_zero_derivation_evidence<B: Bracket + ?Sized>(br: &B, w: i64, margin: i64) -> Result<CochainReport> {
    check_margin(w, margin)?;
    let inner_w = w - margin;
    let layout = DerivationLayout::new(w);
    let (_, solutions) = derivation_kernel(br, w, &layout);

    // Interior coordinates: (basis index, key index) with both interior.
    let mut interior = Vec::new();
    for (i, b) in layout.basis.iter().enumerate() {
        if b.twice_index().abs() > inner_w {
            continue;
        }
        for (k, key) in layout.coords[i].keys.iter().enumerate() {
            if key.spread() <= inner_w {
                interior.push((i, k));
            }
        }
    }
    let restrict =
        |v: &[Rational]| -> Vec<Rational> { interior.iter().map(|&(i, k)| v[layout.offset[i] + k].clone()).collect() };
    let restricted: Vec<Vec<Rational>> = solutions.vectors().iter().map(|v| restrict(v)).collect();
    let cocycles = SubspaceBasis::span(interior.len(), &restricted);

    let inner: Vec<Vec<Rational>> = tensor_basis_window(2, w, HalfDegree::ZERO)
        .par_iter()
        .map(|key| {
            let mut full = vec![Rational::zero(); layout.total];
            for (i, &b) in layout.basis.iter().enumerate() {
                let mut out = TensorElement::zero(2);
                act_basis_into(br, b, key, &int(1), &mut out);
                for (kk, c) in out.terms() {
                    if let Some(k) = layout.coords[i].get(kk) {
                        full[layout.offset[i] + k] = c.clone();
                    }
                }
            }
            restrict(&full)
        })
        .collect();
    let coboundaries = SubspaceBasis::span(interior.len(), &inner);

    CochainReport::build(
        format!(
            "degree-zero derivations L -> L⊗L on window {w} ({} unknowns, {} window solutions), read on interior window {inner_w}",
            layout.total,
            solutions.dim()
        ),
        w,
        &cocycles,
        &coboundaries,
        |v| {
            let mut by_b: BTreeMap<BasisVector, TensorElement> = BTreeMap::new();
            for (c, &(i, k)) in v.iter().zip(&interior) {
                if !c.is_zero() {
                    by_b.entry(layout.basis[i])
                        .or_insert_with(|| TensorElement::zero(2))
                        .add_term(layout.coords[i].keys[k].clone(), c.clone());
                }
            }
            by_b.iter().map(|(b, t)| format!("D({b}) = {t}")).collect::<Vec<_>>().join("; ")
        },
    )
}

/// Splits an assignment `b ↦ D(b)` into homogeneous components
/// `D = Σ_α D_α`, where `D_α(b)` collects the terms of degree `deg b + α`.
/// Zero components are omitted.
pub fn homogeneous_components(
    window: i64,
    assignment: &BTreeMap<BasisVector, TensorElement>,
) -> Result<BTreeMap<HalfDegree, WindowDerivation>> {
    let mut parts: BTreeMap<HalfDegree, BTreeMap<BasisVector, TensorElement>> = BTreeMap::new();
    for (&b, t) in assignment {
        for (d, part) in t.degree_decompose() {
            parts.entry(d - b.degree()).or_default().insert(b, part);
        }
    }
    parts
        .into_iter()
        .map(|(alpha, a)| Ok((alpha, WindowDerivation::new(window, alpha, a)?)))
        .collect()
}

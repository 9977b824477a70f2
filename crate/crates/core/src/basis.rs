//! Basis vectors of the algebra and the half-integer grading.
//!
//! Indices are stored doubled: `L_n`, `M_n`, `N_n` carry `2n`, `Y_p` carries
//! `2p`. The parity of the stored index then tells integer-indexed families
//! from the half-integer one, and every key stays an ordinary integer.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::linalg::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    L,
    M,
    N,
    Y,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::L, Family::M, Family::N, Family::Y];

    /// Whether indices of this family lie in ℤ + 1/2 rather than ℤ.
    pub fn is_half(self) -> bool {
        matches!(self, Family::Y)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::M => "M",
            Family::N => "N",
            Family::Y => "Y",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "L" => Family::L,
            "M" => Family::M,
            "N" => Family::N,
            "Y" => Family::Y,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A degree in ½ℤ, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfDegree(pub i64);

impl HalfDegree {
    pub const ZERO: HalfDegree = HalfDegree(0);

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn from_int(n: i64) -> Self {
        HalfDegree(2 * n)
    }

    pub fn as_rational(self) -> Rational {
        rat(self.0, 2)
    }
}

impl std::ops::Add for HalfDegree {
    type Output = HalfDegree;
    fn add(self, rhs: HalfDegree) -> HalfDegree {
        HalfDegree(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfDegree {
    type Output = HalfDegree;
    fn sub(self, rhs: HalfDegree) -> HalfDegree {
        HalfDegree(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_twice(self.0, f)
    }
}

fn fmt_twice(t: i64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if t % 2 == 0 {
        write!(f, "{}", t / 2)
    } else {
        write!(f, "{}/2", t)
    }
}

/// One of `L_n`, `M_n`, `N_n`, `Y_p`.
///
/// Ordered by family (`L < M < N < Y`) and then by index, which is the
/// canonical term order used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisVector {
    family: Family,
    twice_index: i64,
}

impl BasisVector {
    /// Returns `None` when the parity of `twice_index` does not match the
    /// family.
    pub fn new(family: Family, twice_index: i64) -> Option<Self> {
        let odd = twice_index.rem_euclid(2) == 1;
        (odd == family.is_half()).then_some(Self { family, twice_index })
    }

    pub fn l(n: i64) -> Self {
        Self::new(Family::L, 2 * n).unwrap()
    }

    pub fn m(n: i64) -> Self {
        Self::new(Family::M, 2 * n).unwrap()
    }

    pub fn n(n: i64) -> Self {
        Self::new(Family::N, 2 * n).unwrap()
    }

    /// `Y_p` with `p = twice_p / 2`; `twice_p` must be odd.
    pub fn y(twice_p: i64) -> Self {
        Self::new(Family::Y, twice_p).expect("Y index must be a half-integer")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn twice_index(self) -> i64 {
        self.twice_index
    }

    pub fn index(self) -> Rational {
        rat(self.twice_index, 2)
    }

    pub fn degree(self) -> HalfDegree {
        HalfDegree(self.twice_index)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_", self.family)?;
        fmt_twice(self.twice_index, f)
    }
}

impl Serialize for BasisVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBasisError(pub String);

impl fmt::Display for ParseBasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid basis vector `{}`", self.0)
    }
}

impl std::error::Error for ParseBasisError {}

/// Parses `L_3`, `M_-2`, `Y_1/2`, `Y_-5/2`.
impl FromStr for BasisVector {
    type Err = ParseBasisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseBasisError(s.to_string());
        let (fam, idx) = s.trim().split_once('_').ok_or_else(err)?;
        let family = Family::from_name(fam).ok_or_else(err)?;
        let twice = match idx.split_once('/') {
            Some((num, "2")) => num.parse::<i64>().map_err(|_| err())?,
            Some(_) => return Err(err()),
            None => 2 * idx.parse::<i64>().map_err(|_| err())?,
        };
        BasisVector::new(family, twice).ok_or_else(err)
    }
}

/// All basis vectors with `|twice_index| <= w`, in canonical order.
pub fn basis_window(w: i64) -> Vec<BasisVector> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for t in -w..=w {
            if let Some(b) = BasisVector::new(family, t) {
                out.push(b);
            }
        }
    }
    out
}

/// A non-empty list of basis vectors used as algebra generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet(Vec<BasisVector>);

impl GeneratorSet {
    pub fn new(gens: Vec<BasisVector>) -> Option<Self> {
        (!gens.is_empty()).then_some(Self(gens))
    }

    /// `{L_-2, L_-1, L_1, L_2, N_1, Y_1/2}`, which generates the whole algebra.
    pub fn standard() -> Self {
        use BasisVector as B;
        Self(vec![B::l(-2), B::l(-1), B::l(1), B::l(2), B::n(1), B::y(1)])
    }

    /// The standard generators together with `L_0`, `M_0`, `N_0`, `M_1`.
    pub fn extended() -> Self {
        use BasisVector as B;
        let mut g = vec![B::l(0), B::m(0), B::n(0), B::m(1)];
        g.extend(Self::standard().0);
        Self(g)
    }

    pub fn as_slice(&self) -> &[BasisVector] {
        &self.0
    }

    /// Largest `|degree|` among the generators, doubled.
    pub fn max_twice_degree(&self) -> i64 {
        self.0.iter().map(|b| b.twice_index().abs()).max().unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a BasisVector;
    type IntoIter = std::slice::Iter<'a, BasisVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

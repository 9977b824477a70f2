use proptest::prelude::*;

use esv::basis::{BasisVector, Family, GeneratorSet};
use esv::bialgebra::{compat_defect, delta_r, seeded_skew_samples, taft_identity_defect};
use esv::dsl::{parse_spec, Affine, AlgebraSpec, BracketRule, DegreeShape, RuleTerm};
use esv::linalg::{
    nullspace, rat_arith, solve, subspace_equal, Containment, RatOp, Solution, SparseMatrix, SubspaceBasis,
};
use esv::tensor::{act, diag_action, PureTensor};
use esv::{rat, AlgebraElement, Bracket, Esv, Rational, TensorElement};

const W: i64 = 12;

fn basis_vector() -> impl Strategy<Value = BasisVector> {
    (0usize..4, -W..=W).prop_map(|(f, t)| {
        let fam = Family::ALL[f];
        let t = if fam.is_half() { t | 1 } else { t & !1 };
        BasisVector::new(fam, t).unwrap()
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((rational(), basis_vector()), 1..4).prop_map(AlgebraElement::from_terms)
}

fn tensor(order: usize) -> impl Strategy<Value = TensorElement> {
    prop::collection::vec((rational(), prop::collection::vec(basis_vector(), order)), 1..4)
        .prop_map(move |ts| TensorElement::from_terms(order, ts))
}

fn skew_r() -> impl Strategy<Value = esv::bialgebra::RMatrix> {
    any::<u64>().prop_map(|seed| seeded_skew_samples(seed, 1, 6, 4).remove(0))
}

fn matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
            let rows: Vec<Vec<Rational>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
                .collect();
            SparseMatrix::from_dense(&rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric(x in element(), y in element()) {
        prop_assert!((&Esv.bracket(&x, &y) + &Esv.bracket(&y, &x)).is_zero());
    }

    #[test]
    fn jacobi_on_basis(a in basis_vector(), b in basis_vector(), c in basis_vector()) {
        prop_assert!(Esv.jacobi_defect(a, b, c).is_zero());
    }

    #[test]
    fn bracket_respects_grading(a in basis_vector(), b in basis_vector()) {
        let ab = Esv.bracket_basis(a, b);
        prop_assert!(ab.support().all(|t| t.degree() == a.degree() + b.degree()));
    }

    #[test]
    fn action_is_a_module_law(x in basis_vector(), y in basis_vector(), t in tensor(2)) {
        let xy = Esv.bracket_basis(x, y);
        let lhs = diag_action(&Esv, &xy, &t);
        let rhs = &act(&Esv, x, &act(&Esv, y, &t)) - &act(&Esv, y, &act(&Esv, x, &t));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twist_and_cycle_commute_with_action(x in element(), t2 in tensor(2), t3 in tensor(3)) {
        prop_assert_eq!(diag_action(&Esv, &x, &t2.twist().unwrap()), diag_action(&Esv, &x, &t2).twist().unwrap());
        prop_assert_eq!(diag_action(&Esv, &x, &t3.cyclic().unwrap()), diag_action(&Esv, &x, &t3).cyclic().unwrap());
        prop_assert_eq!(t3.cyclic().unwrap().cyclic().unwrap().cyclic().unwrap(), t3);
    }

    #[test]
    fn skew_part_is_skew(t in tensor(2)) {
        let skew = &t - &t.twist().unwrap();
        prop_assert!(skew.is_skew().unwrap());
        prop_assert!(skew.symmetrize().unwrap().is_zero());
    }

    #[test]
    fn cobracket_image_is_skew(r in skew_r(), x in element()) {
        prop_assert!(delta_r(&Esv, &r, &x).is_skew().unwrap());
    }

    #[test]
    fn coboundary_cobracket_is_compatible(r in skew_r(), x in element(), y in element()) {
        prop_assert!(compat_defect(&Esv, &r, &x, &y).is_zero());
    }

    #[test]
    fn co_jacobi_equals_action_on_c(r in skew_r(), x in basis_vector()) {
        prop_assert!(taft_identity_defect(&Esv, &r, &x.into()).unwrap().is_zero());
    }

    #[test]
    fn rank_plus_nullity(m in matrix()) {
        let k = nullspace(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == rat(0, 1)));
        }
    }

    #[test]
    fn solutions_substitute_back(m in matrix(), seed in prop::collection::vec(-3i64..=3, 6)) {
        let x: Vec<Rational> = seed.iter().take(m.cols()).map(|&v| rat(v, 1)).collect();
        let b = m.mul_vec(&x);
        match solve(&m, &b).unwrap() {
            Solution::Solved { particular, kernel } => {
                prop_assert_eq!(m.mul_vec(&particular), b);
                prop_assert_eq!(kernel.dim() + m.rank(), m.cols());
            }
            Solution::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
        }
    }

    #[test]
    fn span_is_canonical(m in matrix()) {
        let rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect();
        let s = SubspaceBasis::span(m.cols(), &rows);
        let mut rev = rows.clone();
        rev.reverse();
        prop_assert_eq!(&s, &SubspaceBasis::span(m.cols(), &rev));
        prop_assert_eq!(subspace_equal(&s, &s.canonical()).unwrap(), Containment::Equal);
        for r in &rows {
            prop_assert!(s.contains(r));
        }
    }

    #[test]
    fn division_matches_inverse(a in rational(), b in rational()) {
        match rat_arith(&a, &b, RatOp::Div) {
            Ok(q) => prop_assert_eq!(q * &b, a),
            Err(_) => prop_assert_eq!(b, rat(0, 1)),
        }
    }

    #[test]
    fn spec_print_parse_round_trip(spec in algebra_spec()) {
        let printed = spec.to_string();
        let again = parse_spec(&printed).map_err(|e| TestCaseError::fail(format!("{e}\n{printed}")))?;
        prop_assert_eq!(again, spec);
    }

    #[test]
    fn mybe_on_generators_matches_window(r in skew_r()) {
        use esv::bialgebra::{co_jacobi_defect, mybe_check};
        let mybe = mybe_check(&Esv, &r, &GeneratorSet::standard()).unwrap();
        let all = esv::basis_window(4).into_iter().all(|x| co_jacobi_defect(&Esv, &r, &x.into()).is_zero());
        prop_assert_eq!(mybe, all);
    }
}

fn affine() -> impl Strategy<Value = Affine> {
    (rational(), rational(), rational())
        .prop_filter("nonzero", |(c, l, r)| {
            !(c == &rat(0, 1) && l == &rat(0, 1) && r == &rat(0, 1))
        })
        .prop_map(|(constant, left, right)| Affine { constant, left, right })
}

fn algebra_spec() -> impl Strategy<Value = AlgebraSpec> {
    let pairs: Vec<(Family, Family)> = {
        let mut v = Vec::new();
        for (i, &a) in Family::ALL.iter().enumerate() {
            for &b in &Family::ALL[i..] {
                v.push((a, b));
            }
        }
        v
    };
    let rule = move |(a, b): (Family, Family)| {
        let targets: Vec<Family> = Family::ALL
            .iter()
            .copied()
            .filter(|t| t.is_half() == (a.is_half() != b.is_half()))
            .collect();
        (
            prop::sample::subsequence(targets.clone(), 0..=targets.len().min(2)),
            prop::collection::vec(affine(), 2),
            prop::sample::select(vec![("m", "n"), ("i", "j"), ("p", "q"), ("n", "p")]),
        )
            .prop_map(move |(ts, cs, (l, r))| BracketRule {
                left: a,
                left_sym: l.to_string(),
                right: b,
                right_sym: r.to_string(),
                terms: ts
                    .into_iter()
                    .zip(cs)
                    .map(|(target, coeff)| RuleTerm { coeff, target })
                    .collect(),
            })
    };
    prop::sample::subsequence(pairs, 1..=6).prop_flat_map(move |ps| {
        ps.into_iter()
            .map(rule)
            .collect::<Vec<_>>()
            .prop_map(|rules| AlgebraSpec {
                name: "random".into(),
                families: Family::ALL
                    .iter()
                    .map(|&f| {
                        (
                            f,
                            if f.is_half() {
                                DegreeShape::HalfInteger
                            } else {
                                DegreeShape::Integer
                            },
                        )
                    })
                    .collect(),
                rules,
            })
    })
}

#[test]
fn pure_tensor_degree_adds() {
    let k = PureTensor(vec![BasisVector::l(2), BasisVector::y(-3)]);
    assert_eq!(k.degree().twice(), 1);
}

//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p esv --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use esv::basis::{basis_window, BasisVector as B, Family, GeneratorSet, HalfDegree};
use esv::bialgebra::{
    compat_defect, cybe_c, delta_r, seeded_skew_samples, taft_identity_defect, taft_r, window_taft_pairs,
};
use esv::cohomology::{
    degree_zero_derivation_evidence, h1_l0_piece, hom_l0_check, joint_kernel, l1_identity_suite, skew_saturation_check,
};
use esv::dsl::{builtin_esv, compile_spec, parse_spec, validate_jacobi};
use esv::linalg::Containment;
use esv::report::saturation_generators;
use esv::{AlgebraElement, Bracket, Esv};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(t: Duration, limit_s: u64) -> Outcome {
    if t.as_secs() < limit_s {
        Ok(String::new())
    } else {
        Err(format!("took {:.1}s, limit {limit_s}s", t.as_secs_f64()))
    }
}

fn jacobi() -> Outcome {
    let t = Instant::now();
    let mut triples = 0;
    for w in [6, 8] {
        let basis = basis_window(w);
        let r = validate_jacobi(&Esv, &basis, w);
        if let Some((a, b, c, d)) = r.witness {
            return Err(format!("({a}, {b}, {c}) has defect {d}"));
        }
        triples += r.triples_checked;
    }
    within(t.elapsed(), 60)?;
    Ok(format!(
        "{triples} triples on windows 6 and 8, {:.1}s",
        t.elapsed().as_secs_f64()
    ))
}

fn grading() -> Outcome {
    let basis = basis_window(8);
    for &a in &basis {
        for &b in &basis {
            let ab = Esv.bracket_basis(a, b);
            if ab.support().any(|t| t.degree() != a.degree() + b.degree()) {
                return Err(format!("[{a}, {b}] = {ab}"));
            }
        }
    }
    Ok(format!("{} pairs", basis.len() * basis.len()))
}

fn cybe_taft() -> Outcome {
    let pairs = window_taft_pairs(&Esv, 6);
    for (a, b, k) in &pairs {
        let allowed = matches!(
            (*a, b.family()),
            (x, Family::M) if x == B::l(0) || x == B::n(0)
        ) || (*a == B::l(0) && b.family() == Family::Y)
            || (*a == B::l(0) && b.family() == Family::N && b.twice_index() != 0);
        if !allowed {
            return Err(format!("unexpected pair ({a}, {b})"));
        }
        // precondition [a, b] = k b, k ≠ 0
        if Esv.bracket_basis(*a, *b) != AlgebraElement::term(k.clone(), *b) || k == &esv::rat(0, 1) {
            return Err(format!("[{a}, {b}] is not a nonzero multiple of {b}"));
        }
        let r = taft_r(&Esv, &(*a).into(), &(*b).into()).map_err(|e| e.to_string())?;
        let c = cybe_c(&Esv, &r);
        if !c.is_zero() {
            return Err(format!("c({r}) = {c}"));
        }
    }
    if pairs.len() < 20 {
        return Err(format!("only {} pairs", pairs.len()));
    }
    Ok(format!("{} Taft pairs", pairs.len()))
}

fn standard_generators() -> Vec<AlgebraElement> {
    GeneratorSet::standard().as_slice().iter().map(|&g| g.into()).collect()
}

fn taft_identity() -> Outcome {
    let t = Instant::now();
    let rs = seeded_skew_samples(2024, 100, 6, 4);
    let gens = standard_generators();
    for r in &rs {
        for x in &gens {
            let d = taft_identity_defect(&Esv, r, x).map_err(|e| e.to_string())?;
            if !d.is_zero() {
                return Err(format!("r = {r}, x = {x}: {d}"));
            }
        }
    }
    within(t.elapsed(), 60)?;
    Ok(format!(
        "{} r x {} generators, {:.1}s",
        rs.len(),
        gens.len(),
        t.elapsed().as_secs_f64()
    ))
}

fn compat() -> Outcome {
    let rs = seeded_skew_samples(99, 50, 6, 4);
    let gens = standard_generators();
    for r in &rs {
        for x in &gens {
            for y in &gens {
                let d = compat_defect(&Esv, r, x, y);
                if !d.is_zero() {
                    return Err(format!("r = {r}, x = {x}, y = {y}: {d}"));
                }
            }
        }
    }
    Ok(format!("{} r x {} generator pairs", rs.len(), gens.len() * gens.len()))
}

fn coalgebra_axiom() -> Outcome {
    let mut rs = seeded_skew_samples(7, 40, 6, 4);
    for (a, b, _) in window_taft_pairs(&Esv, 6) {
        rs.push(taft_r(&Esv, &a.into(), &b.into()).unwrap());
    }
    let xs = basis_window(4);
    for r in &rs {
        for &x in &xs {
            let d = delta_r(&Esv, r, &x.into());
            if !d.is_skew().unwrap() {
                return Err(format!("Δ_r({x}) = {d} for r = {r}"));
            }
        }
    }
    Ok(format!("{} skew r x {} basis x", rs.len(), xs.len()))
}

fn joint_kernels() -> Outcome {
    let t = Instant::now();
    let gens = GeneratorSet::extended();
    let d2 = joint_kernel(&Esv, 2, 6, HalfDegree::ZERO, &gens).dim();
    let d3 = joint_kernel(&Esv, 3, 4, HalfDegree::ZERO, &gens).dim();
    if d2 != 0 || d3 != 0 {
        return Err(format!("order 2 dim {d2}, order 3 dim {d3}"));
    }
    within(t.elapsed(), 300)?;
    Ok(format!(
        "order 2 (w=6) and order 3 (w=4) kernels are 0, {:.1}s",
        t.elapsed().as_secs_f64()
    ))
}

fn skew_saturation() -> Outcome {
    let mut dims = Vec::new();
    for w in [4, 6, 8] {
        let r = skew_saturation_check(&Esv, w, &saturation_generators(), 2).map_err(|e| e.to_string())?;
        if let Some(v) = r.witness {
            return Err(format!("window {w}: {v}"));
        }
        dims.push(format!("w={w}: dim S {}", r.solution_dim));
    }
    Ok(dims.join(", "))
}

fn bidegrees() -> Vec<(HalfDegree, HalfDegree)> {
    let mut out = Vec::new();
    for p in -6..=6 {
        for q in -6..=6 {
            out.push((HalfDegree(p), HalfDegree(q)));
        }
    }
    out
}

fn h1_pieces() -> Outcome {
    let mut n = 0;
    for (p, q) in bidegrees() {
        if (p + q).twice() == 0 {
            continue;
        }
        let r = h1_l0_piece(&Esv, p, q).map_err(|e| e.to_string())?;
        let contained = matches!(r.containment, Containment::Equal | Containment::AInB);
        if r.cocycle_dim != r.coboundary_dim || !contained {
            return Err(format!("({p},{q}): {r:?}"));
        }
        n += 1;
    }
    Ok(format!("{n} pieces"))
}

fn hom_pieces() -> Outcome {
    use rayon::prelude::*;
    let pieces = bidegrees();
    let pairs: Vec<_> = pieces
        .iter()
        .flat_map(|&a| pieces.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a.0 + a.1 != b.0 + b.1)
        .collect();
    let bad = pairs.par_iter().find_map_any(|&(a, b)| match hom_l0_check(&Esv, a, b) {
        Ok(0) => None,
        Ok(d) => Some(format!("({},{}) -> ({},{}): dim {d}", a.0, a.1, b.0, b.1)),
        Err(e) => Some(e.to_string()),
    });
    match bad {
        Some(b) => Err(b),
        None => Ok(format!("{} piece pairs", pairs.len())),
    }
}

fn l1_identities() -> Outcome {
    let r = l1_identity_suite(&Esv, -10..=10);
    match r.mismatch {
        Some(m) => Err(format!(
            "identity {} at n={}: expected {}, found {}",
            m.identity, m.n, m.expected, m.found
        )),
        None => Ok(format!("{} identity instances", r.checked)),
    }
}

fn derivations() -> Outcome {
    let r = degree_zero_derivation_evidence(&Esv, 6, 2).map_err(|e| e.to_string())?;
    if !matches!(r.containment, Containment::Equal | Containment::AInB) {
        return Err(format!("{r:?}"));
    }
    let cfg = esv::report::CheckConfig::new(esv::report::CheckName::DerEvidence);
    let status = esv::report::run_check(&cfg).map_err(|e| e.to_string())?.status;
    if status != esv::report::Status::Evidence {
        return Err(format!("status {status}"));
    }
    Ok(format!(
        "interior solutions dim {} ⊆ inner dim {}, status evidence",
        r.cocycle_dim, r.coboundary_dim
    ))
}

fn dsl_fidelity() -> Outcome {
    let spec = builtin_esv();
    let printed = spec.to_string();
    let again = parse_spec(&printed).map_err(|e| e.to_string())?;
    if again != spec {
        return Err("print/parse round trip changed the table".into());
    }
    let compiled = compile_spec(&spec).map_err(|e| e.to_string())?;
    let basis = basis_window(8);
    for &a in &basis {
        for &b in &basis {
            let (x, y) = (compiled.bracket_basis(a, b), Esv.bracket_basis(a, b));
            if x != y {
                return Err(format!("[{a}, {b}]: compiled {x}, native {y}"));
            }
        }
    }
    Ok(format!("{} pairs agree, round trip exact", basis.len() * basis.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("jacobi identity on windows 6 and 8", jacobi),
        ("grading on window 8", grading),
        ("taft pairs solve CYBE", cybe_taft),
        ("co-Jacobi defect equals x·c(r)", taft_identity),
        ("cobracket compatibility", compat),
        ("cobracket image is skew", coalgebra_axiom),
        ("no nonzero invariant tensors", joint_kernels),
        ("skew saturation", skew_saturation),
        ("H1(L0, piece) trivial off degree 0", h1_pieces),
        ("no L0 maps between distinct degrees", hom_pieces),
        ("L_1 identities", l1_identities),
        ("degree-zero derivations are inner", derivations),
        ("DSL fidelity", dsl_fidelity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance suite: one line per criterion, each with its time bound.
//! Runs as a plain binary (`harness = false`) and exits nonzero if any
//! criterion fails or overruns.

mod common;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use f1hall::families::cyclic::{class_counts, verify_cyclic_bracket, verify_psi_homomorphism};
use f1hall::families::d4_quiver;
use f1hall::families::jordan::{jordan_graded_dim, jordan_quiver, verify_jordan_iso};
use f1hall::families::partition::{partition_counts, partitions};
use f1hall::families::type_a::orientations as type_a_orientations;
use f1hall::hall::{HallAlgebra, TensorElement};
use f1hall::kacmoody::{
    filtration_binomial, filtration_count, positive_roots, rho_defect_report, serre_check,
    CartanMatrix, CompositionAlgebra,
};
use f1hall::names::parse_class;
use f1hall::structure::{
    composition_series_with, enumerate_indecomposables, enumerate_reps, indecomposable_summands,
    CanonicalKey,
};
use f1hall::{count_subspaces, jordan_decompose, DimVector, PartialInjection, Quiver, Rep};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grassmannian_limit() -> Outcome {
    let mut checked = 0;
    for n in 0..=10 {
        for k in 0..=n {
            let got = count_subspaces(n, k).map_err(|e| e.to_string())?;
            ensure(got == common::pascal(n, k), || {
                format!("count_subspaces({n},{k}) = {got}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs (n,k)"))
}

fn jordan_form() -> Outcome {
    let mut checked = 0;
    for dim in 0..=6 {
        for t in PartialInjection::all(dim, dim) {
            let d = jordan_decompose(&t).map_err(|e| e.to_string())?;
            ensure(d.dim() == dim, || {
                format!("{t}: block sizes sum to {}", d.dim())
            })?;
            let again = jordan_decompose(&d.representative()).map_err(|e| e.to_string())?;
            ensure(again == d, || format!("{t}: re-decomposition differs"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} endomorphisms"))
}

fn jordan_holder_krull_schmidt() -> Outcome {
    let quivers: Vec<Arc<Quiver>> = vec![
        Arc::new(Quiver::type_a(&[true])),
        Arc::new(Quiver::type_a(&[true, false])),
        d4_quiver(),
        Arc::new(Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap()),
        Arc::new(Quiver::jordan()),
        Arc::new(Quiver::cyclic(3).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let (mut reps, mut oracle_checks) = (0, 0);
    for q in &quivers {
        for _ in 0..40 {
            let rep = common::random_nilpotent_rep(&mut rng, q, 6);
            // Composition factors, for several choices of socle element.
            let mut counts = vec![0; q.num_vertices()];
            let labels = composition_series_with(&rep, |avail| rng.gen_range(0..avail.len()))
                .map_err(|e| e.to_string())?;
            for v in labels {
                counts[v] += 1;
            }
            ensure(counts == rep.dimension_vector().0, || {
                format!("composition factors {counts:?} of {rep:?}")
            })?;
            // Shuffle invariance of the decomposition.
            let shuffled = rep.relabel(&common::random_relabeling(&mut rng, &rep));
            ensure(
                indecomposable_summands(&rep) == indecomposable_summands(&shuffled),
                || format!("decomposition changed under relabeling of {rep:?}"),
            )?;
            // Brute-force splitting oracle.
            if rep.total_dim() <= 4 {
                let ours: Vec<Rep> = indecomposable_summands(&rep)
                    .iter()
                    .flat_map(|(k, m)| std::iter::repeat_n(k.decode(q).unwrap(), m))
                    .collect();
                ensure(
                    common::same_multiset(&ours, &common::brute_split(&rep)),
                    || format!("summands disagree with splitting oracle for {rep:?}"),
                )?;
                oracle_checks += 1;
            }
            reps += 1;
        }
    }
    ensure(reps >= 200 && oracle_checks > 0, || {
        format!("only {reps} reps")
    })?;
    Ok(format!(
        "{reps} reps over {} quivers, {oracle_checks} oracle splits",
        quivers.len()
    ))
}

fn tree_theorem() -> Outcome {
    let (mut trees, mut quivers) = (0, 0);
    for n in 1..=5 {
        for tree in common::unlabeled_trees(n) {
            trees += 1;
            let mut expected = common::connected_subsets(n, &tree);
            expected.sort();
            for edges in common::orientations(&tree) {
                let q = Arc::new(Quiver::new(n, edges).unwrap());
                // One past the largest connected subtree, to see nothing bigger.
                let found = enumerate_indecomposables(&q, n + 1, true);
                let mut dims: Vec<Vec<usize>> =
                    found.iter().map(|k| k.dimension_vector().0).collect();
                dims.sort();
                ensure(dims == expected, || {
                    format!("tree {tree:?} oriented {:?}: {dims:?}", q.edges())
                })?;
                quivers += 1;
            }
        }
    }
    Ok(format!("{trees} trees, {quivers} oriented quivers"))
}

fn basis_classes(q: &Arc<Quiver>, max_total: usize) -> Vec<CanonicalKey> {
    (1..=max_total)
        .flat_map(|t| DimVector::with_total(q.num_vertices(), t))
        .flat_map(|d| enumerate_reps(q, &d, true))
        .collect()
}

fn hall_bialgebra() -> Outcome {
    let quivers: Vec<Arc<Quiver>> = vec![
        Arc::new(Quiver::type_a(&[true, false])),
        Arc::new(Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap()),
        Arc::new(Quiver::cyclic(2).unwrap()),
        jordan_quiver(),
        d4_quiver(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let (mut triples, mut pairs, mut singles) = (0, 0, 0);
    for q in &quivers {
        let h = HallAlgebra::new(q.clone());
        let classes = basis_classes(q, 4);
        let pick = |rng: &mut ChaCha8Rng, cap: usize| loop {
            let k = classes.choose(rng).unwrap().clone();
            if k.total_dim() <= cap {
                return k;
            }
        };
        for _ in 0..30 {
            // Associativity on triples with combined dimension at most 4.
            let a = pick(&mut rng, 2);
            let b = pick(&mut rng, 4 - a.total_dim() - 1);
            let c = pick(&mut rng, 4 - a.total_dim() - b.total_dim());
            let (x, y, z) = (
                h.basis(&a).unwrap(),
                h.basis(&b).unwrap(),
                h.basis(&c).unwrap(),
            );
            let left = h.product(&h.product(&x, &y).unwrap(), &z).unwrap();
            let right = h.product(&x, &h.product(&y, &z).unwrap()).unwrap();
            ensure(left == right, || {
                format!("associativity fails on {a} {b} {c}")
            })?;
            triples += 1;

            // Compatibility of product and coproduct on pairs.
            let m = pick(&mut rng, 3);
            let n = pick(&mut rng, 4 - m.total_dim());
            let (xm, xn) = (h.basis(&m).unwrap(), h.basis(&n).unwrap());
            let lhs = h.coproduct(&h.product(&xm, &xn).unwrap()).unwrap();
            let rhs = h
                .tensor_product(&h.coproduct(&xm).unwrap(), &h.coproduct(&xn).unwrap())
                .unwrap();
            ensure(lhs == rhs, || format!("Δ(xy) ≠ Δ(x)Δ(y) on {m} {n}"))?;
            pairs += 1;

            // Coassociativity and cocommutativity.
            let s = pick(&mut rng, 4);
            let xs = h.basis(&s).unwrap();
            ensure(
                h.coproduct_twice_left(&xs).unwrap() == h.coproduct_twice_right(&xs).unwrap(),
                || format!("coassociativity fails on {s}"),
            )?;
            let d: TensorElement = h.coproduct(&xs).unwrap();
            ensure(d.swap() == d, || format!("cocommutativity fails on {s}"))?;
            singles += 1;
        }
    }
    Ok(format!(
        "{triples} triples, {pairs} pairs, {singles} coproducts"
    ))
}

/// Loop-free quivers on `r` vertices with at most two edges per pair, every
/// orientation: each pair independently has no edge, one edge either way,
/// two parallel edges either way, or one edge each way.
fn serre_family(r: usize) -> Vec<Quiver> {
    let pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
        .collect();
    let options = |(a, b): (usize, usize)| -> [Vec<(usize, usize)>; 6] {
        [
            vec![],
            vec![(a, b)],
            vec![(b, a)],
            vec![(a, b), (a, b)],
            vec![(a, b), (b, a)],
            vec![(b, a), (b, a)],
        ]
    };
    let mut out = Vec::new();
    let total = 6usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut edges = Vec::new();
        for &p in &pairs {
            edges.extend(options(p)[c % 6].iter().copied());
            c /= 6;
        }
        out.push(Quiver::new(r, edges).unwrap());
    }
    out
}

fn serre_relations() -> Outcome {
    let mut quivers = 0;
    let mut checks = 0;
    for r in 2..=4 {
        for q in serre_family(r) {
            let h = HallAlgebra::new(Arc::new(q));
            for i in 0..r {
                for j in 0..r {
                    if i == j {
                        continue;
                    }
                    let v = serre_check(&h, i, j).map_err(|e| e.to_string())?;
                    ensure(v.holds(), || {
                        format!(
                            "Serre ({i},{j}) fails on {:?}: {}",
                            h.quiver().edges(),
                            v.value
                        )
                    })?;
                    checks += 1;
                }
            }
            quivers += 1;
        }
    }
    // Filtration counts: every nilpotent M of dimension (k, 1) on the
    // two-vertex quivers of the family, k ≤ 4, every split k = n + l.
    let mut filtrations = 0;
    for q in serre_family(2) {
        let q = Arc::new(q);
        for (i, j) in [(0, 1), (1, 0)] {
            for k in 0..=4 {
                let mut d = DimVector::zero(2);
                d.0[i] = k;
                d.0[j] = 1;
                for key in enumerate_reps(&q, &d, true) {
                    let m = key.decode(&q).unwrap();
                    let mut alternating = 0i64;
                    for n in 0..=k {
                        let l = k - n;
                        let count = filtration_count(&m, i, j, l, n).map_err(|e| e.to_string())?;
                        let closed =
                            filtration_binomial(&m, i, j, l, n).map_err(|e| e.to_string())?;
                        ensure(count == closed, || {
                            format!("filtrations of {key} at (l,n)=({l},{n}): {count} vs {closed}")
                        })?;
                        alternating += if l % 2 == 0 {
                            count as i64
                        } else {
                            -(count as i64)
                        };
                        filtrations += 1;
                    }
                    // The binomial terms cancel at the Serre degree.
                    let serre_degree = 1 + q.edges_between(i, j);
                    ensure(k != serre_degree || alternating == 0, || {
                        format!("alternating sum {alternating} for {key}")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "{checks} ordered pairs on {quivers} quivers, {filtrations} filtration counts"
    ))
}

fn d4_kernel() -> Outcome {
    let q = d4_quiver();
    let listed = [
        "S0", "S1", "S2", "S3", "R01", "R12", "R13", "R012", "R013", "R123", "R0123",
    ];
    let mut expected: Vec<CanonicalKey> =
        listed.iter().map(|s| parse_class(&q, s).unwrap()).collect();
    expected.sort();
    let found = enumerate_indecomposables(&q, 6, true);
    ensure(found == expected, || {
        format!("{} indecomposables found", found.len())
    })?;

    let cartan = CartanMatrix::from_quiver(&q).map_err(|e| e.to_string())?;
    let roots = positive_roots(&cartan).map_err(|e| e.to_string())?;
    let top = DimVector(vec![1, 2, 1, 1]);
    ensure(
        roots.positive_roots.len() == 12 && roots.positive_roots.contains(&top),
        || format!("roots {:?}", roots.positive_roots),
    )?;
    let h = HallAlgebra::new(q);
    let comp = CompositionAlgebra::new(&h).map_err(|e| e.to_string())?;
    let report = rho_defect_report(&comp, &roots, &top).map_err(|e| e.to_string())?;
    ensure(report.kernel() == 1 && report.cokernel() == 0, || {
        format!("report {}", report.tsv_row())
    })?;
    Ok(format!(
        "11 indecomposables, 12 roots, row {}",
        report.tsv_row()
    ))
}

fn jordan_symmetric_functions() -> Outcome {
    let h = HallAlgebra::new(jordan_quiver());
    let v = verify_jordan_iso(&h, 6).map_err(|e| e.to_string())?;
    ensure(v.passed(), || v.counterexample.clone().unwrap_or_default())?;
    let p = partition_counts(8);
    for n in 0..=8 {
        let engine = jordan_graded_dim(n) as u128;
        let independent = common::count_partitions(n);
        ensure(
            engine == p[n] && engine == independent && partitions(n).len() as u128 == independent,
            || {
                format!(
                    "degree {n}: engine {engine}, p(n) {}, recount {independent}",
                    p[n]
                )
            },
        )?;
    }
    ensure(p[8] == 22, || format!("p(8) = {}", p[8]))?;
    Ok(format!("{} identities, p(0..=8) = {:?}", v.checks, p))
}

fn type_a_isomorphism() -> Outcome {
    let mut degrees = 0;
    let mut quivers = 0;
    for n in 1..=4 {
        for o in type_a_orientations(n) {
            let q = Arc::new(Quiver::type_a(&o));
            let indecs = enumerate_indecomposables(&q, n + 1, true);
            ensure(indecs.len() == n * (n + 1) / 2, || {
                format!("A{n} {o:?}: {} indecomposables", indecs.len())
            })?;
            let h = HallAlgebra::new(q.clone());
            let roots = positive_roots(&CartanMatrix::from_quiver(&q).unwrap())
                .map_err(|e| e.to_string())?;
            let comp = CompositionAlgebra::new(&h).unwrap();
            for alpha in DimVector::box_below(n, 2) {
                let r = rho_defect_report(&comp, &roots, &alpha).map_err(|e| e.to_string())?;
                ensure(r.kernel() == 0 && r.cokernel() == 0, || {
                    format!("A{n} {o:?}: {}", r.tsv_row())
                })?;
                degrees += 1;
            }
            quivers += 1;
        }
    }
    Ok(format!("{quivers} oriented quivers, {degrees} degrees"))
}

fn cyclic_quiver() -> Outcome {
    let mut summary = Vec::new();
    for n in [2, 3] {
        let h = HallAlgebra::new(Arc::new(Quiver::cyclic(n).unwrap()));
        let b = verify_cyclic_bracket(&h, 4).map_err(|e| e.to_string())?;
        ensure(b.passed(), || b.counterexample.clone().unwrap_or_default())?;
        let p = verify_psi_homomorphism(&h, 2).map_err(|e| e.to_string())?;
        ensure(p.passed(), || p.counterexample.clone().unwrap_or_default())?;
        let counts = class_counts(n, 6).map_err(|e| e.to_string())?;
        for (d, (engine, tuples)) in counts.iter().enumerate() {
            ensure(engine == tuples, || {
                format!("n={n}, total {d}: {engine} classes vs {tuples} tuples")
            })?;
        }
        summary.push(format!(
            "n={n}: {} brackets, {} ψ pairs",
            b.checks, p.checks
        ));
    }
    Ok(summary.join("; "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "Grassmannian limit",
            Duration::from_secs(1),
            grassmannian_limit,
        ),
        ("Jordan normal form", Duration::from_secs(10), jordan_form),
        (
            "Jordan-Hölder and Krull-Schmidt",
            Duration::from_secs(60),
            jordan_holder_krull_schmidt,
        ),
        (
            "tree indecomposables",
            Duration::from_secs(60),
            tree_theorem,
        ),
        ("Hall bialgebra", Duration::from_secs(120), hall_bialgebra),
        ("Serre relations", Duration::from_secs(300), serre_relations),
        ("D4 kernel", Duration::from_secs(60), d4_kernel),
        (
            "Jordan quiver and symmetric functions",
            Duration::from_secs(60),
            jordan_symmetric_functions,
        ),
        (
            "type A isomorphism",
            Duration::from_secs(300),
            type_a_isomorphism,
        ),
        ("cyclic quiver", Duration::from_secs(120), cyclic_quiver),
    ];
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failures = 0;
    let mut timings = BTreeMap::new();
    for (idx, (name, bound, run)) in criteria.iter().enumerate() {
        let number = idx + 1;
        if only.is_some_and(|o| o != number) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        timings.insert(number, elapsed);
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *bound => ("PASS", d),
            Ok(d) => ("FAIL", format!("too slow; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} {number:>2} {name}: {:.2}s (bound {}s) {detail}",
            elapsed.as_secs_f64(),
            bound.as_secs()
        );
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

//! Algebraic invariants on randomly drawn classes.

mod common;

use std::sync::Arc;

use common::{random_nilpotent_rep, random_relabeling, random_rep};
use f1hall::hall::{HallAlgebra, HallElement};
use f1hall::kacmoody::{filtration_binomial, filtration_count, CompositionAlgebra};
use f1hall::structure::{enumerate_reps, indecomposable_summands, simple};
use f1hall::{canonical_key, DimVector, Quiver, Rep};
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn quivers() -> Vec<Arc<Quiver>> {
    [
        (1, vec![(0, 0)]),
        (2, vec![(0, 1)]),
        (2, vec![(0, 1), (0, 1)]),
        (2, vec![(0, 1), (1, 0)]),
        (3, vec![(0, 1), (2, 1)]),
        (3, vec![(0, 1), (1, 2), (2, 0)]),
        (2, vec![(0, 0), (0, 1)]),
    ]
    .into_iter()
    .map(|(r, e)| Arc::new(Quiver::new(r, e).unwrap()))
    .collect()
}

/// `count` nonzero nilpotent reps on `q`, with total dimension roughly
/// capped by `budget`.
fn draw(q: &Arc<Quiver>, seed: u64, count: usize, budget: usize) -> Vec<Rep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut left = budget;
    (0..count)
        .map(|_| {
            let rep = random_nilpotent_rep(&mut rng, q, left.clamp(1, 3));
            left = left.saturating_sub(rep.total_dim());
            rep
        })
        .collect()
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn product_is_associative(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let v = draw(q, seed, 3, 5);
        let [x, y, z] = [0, 1, 2].map(|k| hall.class(&v[k]).unwrap());
        let left = hall.product(&hall.product(&x, &y).unwrap(), &z).unwrap();
        let right = hall.product(&x, &hall.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_is_graded_and_integral(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let v = draw(q, seed, 2, 6);
        let (m, n) = (canonical_key(&v[0]), canonical_key(&v[1]));
        let expected: Vec<usize> =
            m.dimension_vector().0.iter().zip(&n.dimension_vector().0).map(|(a, b)| a + b).collect();
        let product = hall.basis_product(&m, &n).unwrap();
        // The direct sum is always an extension with the split sub counted.
        let split = canonical_key(&v[0].direct_sum(&v[1]).unwrap());
        prop_assert!(product.iter().any(|(r, c)| *r == split && *c >= 1));
        for (r, c) in &product {
            prop_assert_eq!(&r.dimension_vector().0, &expected);
            prop_assert!(*c > 0);
        }
        let element = hall.product(&hall.basis(&m).unwrap(), &hall.basis(&n).unwrap()).unwrap();
        prop_assert!(element.terms().values().all(|c| c.is_integer()));
    }

    #[test]
    fn unit_is_neutral(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let x = hall.class(&draw(q, seed, 1, 5)[0]).unwrap();
        prop_assert_eq!(hall.product(&hall.one(), &x).unwrap(), x.clone());
        prop_assert_eq!(hall.product(&x, &hall.one()).unwrap(), x);
    }

    #[test]
    fn coproduct_is_coassociative_and_cocommutative(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let v = draw(q, seed, 2, 6);
        let x = &hall.class(&v[0]).unwrap() + &hall.class(&v[1]).unwrap();
        let delta = hall.coproduct(&x).unwrap();
        prop_assert_eq!(delta.swap(), delta);
        prop_assert_eq!(hall.coproduct_twice_left(&x).unwrap(), hall.coproduct_twice_right(&x).unwrap());
    }

    #[test]
    fn coproduct_is_multiplicative(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let v = draw(q, seed, 2, 5);
        let (x, y) = (hall.class(&v[0]).unwrap(), hall.class(&v[1]).unwrap());
        let left = hall.coproduct(&hall.product(&x, &y).unwrap()).unwrap();
        let right = hall
            .tensor_product(&hall.coproduct(&x).unwrap(), &hall.coproduct(&y).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn indecomposables_are_primitive(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let rep = draw(q, seed, 1, 5).remove(0);
        let summands = indecomposable_summands(&rep);
        let x = hall.class(&rep).unwrap();
        prop_assert_eq!(hall.is_primitive(&x).unwrap(), summands.num_summands() == 1);
    }

    #[test]
    fn decomposition_rebuilds_the_class(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_rep(&mut rng, q, 7);
        let perm = random_relabeling(&mut rng, &rep);
        let d = indecomposable_summands(&rep);
        prop_assert_eq!(canonical_key(&d.rebuild(q).unwrap()), canonical_key(&rep));
        prop_assert_eq!(indecomposable_summands(&rep.relabel(&perm)), d);
    }

    #[test]
    fn subtraction_cancels(qi in 0..7usize, seed in any::<u64>()) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let v = draw(q, seed, 2, 6);
        let (x, y) = (hall.class(&v[0]).unwrap(), hall.class(&v[1]).unwrap());
        let sum: HallElement = &x + &y;
        prop_assert!((&(&sum - &y) - &x).is_zero());
        prop_assert!((&x + &(-&x)).is_zero());
    }
}

/// Representations of dimension `(n + l) e_i + e_j` on a two-vertex quiver
/// with `a` arrows `i → j` and `b` arrows `j → i`.
fn filtration_cases(a: usize, b: usize, k: usize) -> Vec<Rep> {
    let mut edges = vec![(0, 1); a];
    edges.extend(vec![(1, 0); b]);
    let q = Arc::new(Quiver::new(2, edges).unwrap());
    enumerate_reps(&q, &DimVector(vec![k, 1]), true)
        .into_iter()
        .map(|key| key.decode(&q).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn filtration_count_matches_binomial(a in 0..3usize, b in 0..3usize, k in 0..4usize, pick in any::<usize>()) {
        let reps = filtration_cases(a, b, k);
        let m = &reps[pick % reps.len()];
        for n in 0..=k {
            let l = k - n;
            prop_assert_eq!(filtration_count(m, 0, 1, l, n).unwrap(), filtration_binomial(m, 0, 1, l, n).unwrap());
        }
    }

    #[test]
    fn composition_fits_inside_the_hall_algebra(
        qi in 1..6usize,
        entries in proptest::collection::vec(0..3usize, 3),
    ) {
        let q = &quivers()[qi];
        let hall = HallAlgebra::new(q.clone());
        let comp = CompositionAlgebra::new(&hall).unwrap();
        let alpha = DimVector(entries[..q.num_vertices()].to_vec());
        let basis = comp.basis(&alpha).unwrap();
        prop_assert_eq!(basis.len(), comp.graded_dim(&alpha).unwrap());
        prop_assert!(basis.len() <= hall.graded_dim(&alpha));
        for b in &basis {
            prop_assert!(b.degrees().iter().all(|d| *d == alpha));
        }
    }
}

#[test]
fn simple_powers_are_factorial_multiples() {
    for q in quivers() {
        let hall = HallAlgebra::new(q.clone());
        for i in 0..q.num_vertices() {
            if q.edges_between(i, i) > 0 {
                continue;
            }
            let s = hall.simple(i).unwrap();
            let mut power = hall.one();
            let mut factorial = num_bigint::BigInt::one();
            for l in 1..=3u32 {
                power = hall.product(&power, &s).unwrap();
                factorial *= l;
                let expected = hall
                    .class(&simple(q.clone(), i).unwrap().power(l as usize))
                    .unwrap();
                assert_eq!(
                    power,
                    expected.scale(&f1hall::Rational::from_integer(factorial.clone()))
                );
            }
        }
    }
}

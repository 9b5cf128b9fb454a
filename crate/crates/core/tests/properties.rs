use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;
use proptest::sample::select;
use rand::rngs::StdRng;
use rand::SeedableRng;

use schubert_core::composition::{
    compose, is_block_column, is_valid_split, random_problem, random_spec, verify_product, ComposableSplit,
    CompositionSpec, FiberProblem,
};
use schubert_core::grassmann::{
    class_product, conjugate_problem, delta, duality_nonzero, pairing_coefficient, truncate, GrassmannianShape,
};
use schubert_core::lr::{
    enumerate_glr_tableaux, enumerate_lr_tableaux, freeze, glr_coef, lr_coef, multi_schur_product, schur_product,
    thaw,
};
use schubert_core::partition::{partitions_in_box, partitions_of, Partition, SkewShape};
use schubert_core::wreath::{
    cycle_type_of, cycle_type_table, symmetric_class_size, wreath_order, WreathElement,
};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn shape() -> impl Strategy<Value = GrassmannianShape> {
    (1u32..=4, 1u32..=4).prop_map(|(a, b)| GrassmannianShape::new(a, b).unwrap())
}

fn in_box(g: GrassmannianShape) -> impl Strategy<Value = Partition> {
    select(partitions_in_box(g.a, g.b).into_iter().flatten().collect::<Vec<_>>())
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=8 {
        let all = partitions_of(n, n, n as usize);
        for x in &all {
            assert!(x.dominates(x).unwrap());
            for y in &all {
                let (xy, yx) = (x.dominates(y).unwrap(), y.dominates(x).unwrap());
                assert_eq!(xy && yx, x == y);
                for z in &all {
                    if xy && y.dominates(z).unwrap() {
                        assert!(x.dominates(z).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn lr_and_glr_counts_agree_with_enumeration() {
    for n in 0..=6 {
        for k in 0..=n {
            for mu in partitions_of(k, k, k as usize) {
                for nu in partitions_of(n - k, n - k, (n - k) as usize) {
                    let prod = schur_product(&mu, &nu);
                    for lam in partitions_of(n, n, n as usize) {
                        let c = lr_coef(&lam, &mu, &nu);
                        assert_eq!(c, prod.coefficient(&lam));
                        if lam.contains(&mu) {
                            let skew = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                            assert_eq!(BigUint::from(enumerate_lr_tableaux(&skew, &nu).len()), c);
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conjugate_is_an_involution(p in partition(12, 12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn concat_and_sum(mu in partition(6, 6), nu in partition(6, 6)) {
        let (cat, sum) = (mu.sort_concat(&nu), mu.part_sum(&nu));
        prop_assert!(sum.dominates(&cat).unwrap());
        prop_assert_eq!(cat.conjugate(), mu.conjugate().part_sum(&nu.conjugate()));
    }

    #[test]
    fn box_complement_involution((rows, cols, p) in (1u32..=6, 1u32..=6).prop_flat_map(|(r, c)| {
        (Just(r), Just(c), partition(r as usize, c))
    })) {
        let comp = p.box_complement(rows, cols).unwrap();
        prop_assert_eq!(comp.box_complement(rows, cols).unwrap(), p.clone());
        prop_assert_eq!(comp.weight() + p.weight(), u64::from(rows * cols));
    }

    #[test]
    fn product_is_commutative_and_conjugation_equivariant(mu in partition(4, 4), nu in partition(4, 4)) {
        let prod = schur_product(&mu, &nu);
        prop_assert_eq!(&prod, &schur_product(&nu, &mu));
        for (lam, c) in prod.iter() {
            prop_assert_eq!(&lr_coef(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()), c);
        }
    }

    #[test]
    fn multi_product_ignores_order(factors in prop::collection::vec(partition(3, 3), 1..=4), seed: u64) {
        use rand::seq::SliceRandom;
        let mut shuffled = factors.clone();
        shuffled.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(multi_schur_product(&factors), multi_schur_product(&shuffled));
    }

    #[test]
    fn glr_counts_and_frozen_rectangles(
        contents in prop::collection::vec(partition(2, 3), 1..=3),
        extra in prop::collection::vec(0u32..=1, 3),
        d in 0u32..=2,
    ) {
        let prod = multi_schur_product(&contents);
        let budgets: Vec<u32> = contents.iter().zip(&extra).map(|(m, e)| m.len() as u32 + e).collect();
        let a: u32 = budgets.iter().sum();
        let frozen: Vec<Partition> = contents
            .iter()
            .zip(&budgets)
            .map(|(m, &ai)| Partition::rectangle(ai, d).part_sum(m))
            .collect();
        for (lam, c) in prod.iter() {
            let tableaux = enumerate_glr_tableaux(lam, &contents);
            prop_assert_eq!(&BigUint::from(tableaux.len()), c);
            prop_assert_eq!(&glr_coef(lam, &contents), c);
            let big = Partition::rectangle(a, d).part_sum(lam);
            prop_assert_eq!(&glr_coef(&big, &frozen), c);
            for t in &tableaux {
                let f = freeze(t, &budgets, d).unwrap();
                prop_assert_eq!(f.shape(), &big);
                prop_assert_eq!(&thaw(&f, &budgets, d).unwrap(), t);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn interleaved_truncation((g, factors) in shape().prop_flat_map(|g| {
        (Just(g), prop::collection::vec(in_box(g), 1..=4))
    })) {
        prop_assert_eq!(class_product(&factors, g).unwrap(), truncate(&multi_schur_product(&factors), g));
    }

    #[test]
    fn delta_survives_transpose(g in shape(), seed: u64) {
        let p = random_problem(&mut StdRng::seed_from_u64(seed), g);
        prop_assert_eq!(delta(&p), delta(&conjugate_problem(&p)));
    }

    #[test]
    fn duality_matches_products((g, lam, mu) in shape().prop_flat_map(|g| (Just(g), in_box(g), in_box(g)))) {
        let nonzero = !class_product(&[lam.clone(), mu.clone()], g).unwrap().is_empty();
        prop_assert_eq!(duality_nonzero(&lam, &mu, g).unwrap(), nonzero);
    }

    #[test]
    fn pairing_reads_coefficients((g, factors) in shape().prop_flat_map(|g| {
        (Just(g), prop::collection::vec(in_box(g), 1..=3))
    })) {
        let x = class_product(&factors, g).unwrap();
        for lam in partitions_in_box(g.a, g.b).into_iter().flatten() {
            prop_assert_eq!(pairing_coefficient(&x, &lam, g).unwrap(), x.coefficient(&lam));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_compositions_are_valid_and_multiply(seed: u64) {
        let spec = random_spec(&mut StdRng::seed_from_u64(seed), 5, 5);
        prop_assert!(spec.violations().is_empty());
        let composed = compose(&spec).unwrap();
        let amb = composed.ambient();
        prop_assert_eq!((amb.a, amb.b), (spec.base.a + spec.fiber.c, spec.base.b + spec.fiber.d));
        let check = verify_product(&spec).unwrap();
        prop_assert!(check.holds);
        // Counting tableaux on the full rectangle gives the same numbers.
        let base = spec.base.problem().unwrap();
        let fiber = spec.fiber.problem().unwrap();
        let count = |p: &schubert_core::SchubertProblem| glr_coef(&p.ambient().point(), p.conditions());
        prop_assert_eq!(count(&composed), count(&base) * count(&fiber));
    }

    #[test]
    fn block_columns_are_valid_splits(
        (a1, a2, b1, b2) in (1u32..=2, 1u32..=2, 1u32..=2, 1u32..=2),
        cut1 in prop::bool::ANY,
        cut2 in prop::bool::ANY,
        (c, d, seed) in (1u32..=2, 1u32..=2, any::<u64>()),
    ) {
        // ν: rectangles of height a2 spanning b1 columns, then height a1 spanning b2.
        let widths = |total: u32, cut: bool| if cut && total > 1 { vec![1, total - 1] } else { vec![total] };
        let (w1, w2) = (widths(b1, cut1), widths(b2, cut2));
        let mut nu: Vec<Partition> = w1.iter().map(|&w| Partition::rectangle(a2, w)).collect();
        nu.extend(w2.iter().map(|&w| Partition::rectangle(a1, w)));
        let split = ComposableSplit {
            a: a1 + a2,
            b: b1 + b2,
            mu: vec![Partition::rectangle(a1, b1), Partition::rectangle(a2, b2)],
            nu,
            row_budgets: vec![a1, a2],
            col_budgets: w1.into_iter().chain(w2).collect(),
        };
        prop_assert!(is_block_column(&split));
        prop_assert!(is_valid_split(&split));
        let g = GrassmannianShape::new(c, d).unwrap();
        let fiber = random_problem(&mut StdRng::seed_from_u64(seed), g);
        let spec = CompositionSpec {
            fiber: FiberProblem {
                c,
                d,
                alpha: vec![Partition::empty(); split.mu.len()],
                beta: vec![Partition::empty(); split.nu.len()],
                gamma: fiber.into_conditions(),
            },
            base: split,
        };
        let check = verify_product(&spec).unwrap();
        prop_assert!(check.holds);
        let (db, df) = (&check.delta_base, &check.delta_fiber);
        prop_assert_eq!(&check.delta_composed, &(db * df));
        let (db, df) = (db.to_u32_digits(), df.to_u32_digits());
        let (db, df) = (db.first().copied().unwrap_or(0), df.first().copied().unwrap_or(0));
        let expected = num_traits::pow(factorial(u64::from(df)), db as usize) * factorial(u64::from(db));
        prop_assert_eq!(wreath_order(db, df.max(1)), expected);
    }
}

#[test]
fn wreath_order_formula() {
    for p in 1..=6u64 {
        for q in 1..=6u64 {
            let expected = num_traits::pow(factorial(q), p as usize) * factorial(p);
            assert_eq!(wreath_order(p as u32, q as u32), expected);
        }
    }
}

#[test]
fn wreath_tables() {
    for p in 1..=4u32 {
        for q in 1..=3u32 {
            if p * q > 9 {
                continue;
            }
            let t = cycle_type_table(p, q).unwrap();
            assert_eq!(t.total(), wreath_order(p, q));
            for (ty, _) in &t.rows {
                assert_eq!(ty.partition().weight(), u64::from(p * q));
            }
            assert_eq!(t.count(&Partition::new(vec![1; (p * q) as usize]).unwrap()), BigUint::one());
        }
        let t = cycle_type_table(p, 1).unwrap();
        for lam in partitions_of(p, p, p as usize) {
            assert_eq!(t.count(&lam), symmetric_class_size(&lam));
        }
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn wreath_elements_preserve_blocks((p, q, top, bottoms) in (1usize..=4, 1usize..=4).prop_flat_map(|(p, q)| {
        (Just(p), Just(q), permutation(p), prop::collection::vec(permutation(q), p))
    })) {
        let e = WreathElement::new(top, bottoms).unwrap();
        let perm = e.to_permutation();
        for block in 0..p {
            let images: Vec<usize> = (0..q).map(|j| perm[block * q + j] as usize / q).collect();
            prop_assert!(images.iter().all(|&b| b == images[0]));
        }
        prop_assert_eq!(cycle_type_of(&e).partition().weight(), (p * q) as u64);
    }
}

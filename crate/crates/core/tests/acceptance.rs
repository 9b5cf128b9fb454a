//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schubert_core::composition::{
    big_hook_product, compose, find_composable_splits, random_problem, random_spec, verify_product,
    ComposableSplit, CompositionSpec, FiberProblem,
};
use schubert_core::grassmann::{class_product, delta, GrassmannianShape, SchubertProblem};
use schubert_core::lr::{lr_coef, multi_schur_product, schur_product, SchurExpansion};
use schubert_core::oracle::exhaustive_check;
use schubert_core::partition::{partitions_in_box, partitions_of, Partition};
use schubert_core::wreath::cycle_type_table;

type Check = fn() -> Result<(), String>;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn ps(list: &[&[u32]]) -> Vec<Partition> {
    list.iter().map(|x| p(x)).collect()
}

fn g(a: u32, b: u32) -> GrassmannianShape {
    GrassmannianShape::new(a, b).unwrap()
}

fn n(x: u64) -> BigUint {
    BigUint::from(x)
}

fn expect_terms(got: &SchurExpansion, want: &[(&[u32], u64)]) -> Result<(), String> {
    let mut expected = SchurExpansion::new();
    for (parts, c) in want {
        expected.add_term(p(parts), n(*c));
    }
    if *got == expected {
        Ok(())
    } else {
        Err(format!("got {}", serde_json::to_string(got).unwrap()))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sorted(mut v: Vec<Partition>) -> Vec<Partition> {
    v.sort();
    v
}

fn all_partitions(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(|k| partitions_of(k, k, k as usize)).collect()
}

fn in_box(rows: u32, cols: u32) -> Vec<Partition> {
    partitions_in_box(rows, cols).into_iter().flatten().collect()
}

fn cube_of_point() -> Result<(), String> {
    expect_terms(
        &multi_schur_product(&ps(&[&[1], &[1], &[1]])),
        &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)],
    )
}

fn two_solution_product() -> Result<(), String> {
    let got = class_product(&ps(&[&[3], &[3], &[1, 1, 1], &[1, 1, 1]]), g(4, 4)).map_err(|e| e.to_string())?;
    expect_terms(&got, &[(&[4, 4, 2, 2], 2)])
}

fn eight_factor_product() -> Result<(), String> {
    let factors = ps(&[&[3], &[3], &[1, 1, 1], &[1, 1, 1], &[1], &[1], &[1], &[1]]);
    let got = class_product(&factors, g(4, 4)).map_err(|e| e.to_string())?;
    expect_terms(&got, &[(&[4, 4, 4, 4], 4)])
}

fn square_in_g44() -> Result<(), String> {
    let got = class_product(&ps(&[&[3, 1], &[3, 1]]), g(4, 4)).map_err(|e| e.to_string())?;
    expect_terms(
        &got,
        &[
            (&[4, 4], 1),
            (&[4, 3, 1], 2),
            (&[4, 2, 2], 1),
            (&[4, 2, 1, 1], 1),
            (&[3, 3, 1, 1], 1),
            (&[3, 3, 2], 1),
        ],
    )
}

fn five_solution_split() -> ComposableSplit {
    ComposableSplit {
        a: 3,
        b: 3,
        mu: ps(&[&[2], &[2], &[1]]),
        nu: ps(&[&[1, 1], &[1], &[1]]),
        row_budgets: vec![1, 1, 1],
        col_budgets: vec![1, 1, 1],
    }
}

fn check_composition(spec: &CompositionSpec, conditions: &[&[u32]], dims: (u32, u32), deltas: (u64, u64, u64)) -> Result<(), String> {
    let composed = compose(spec).map_err(|e| e.to_string())?;
    let amb = composed.ambient();
    ensure((amb.a, amb.b) == dims, || format!("ambient G({},{})", amb.a, amb.b))?;
    ensure(sorted(composed.conditions().to_vec()) == sorted(ps(conditions)), || {
        format!("conditions {}", serde_json::to_string(composed.conditions()).unwrap())
    })?;
    let check = verify_product(spec).map_err(|e| e.to_string())?;
    let got = (check.delta_base.clone(), check.delta_fiber.clone(), check.delta_composed.clone());
    ensure(got == (n(deltas.0), n(deltas.1), n(deltas.2)) && check.holds, || format!("{got:?}"))
}

fn composition_g56() -> Result<(), String> {
    let spec = CompositionSpec {
        base: five_solution_split(),
        fiber: FiberProblem {
            c: 2,
            d: 3,
            alpha: ps(&[&[1], &[], &[1]]),
            beta: ps(&[&[1], &[1], &[]]),
            gamma: ps(&[&[1], &[1]]),
        },
    };
    check_composition(
        &spec,
        &[&[5, 1], &[5], &[4, 1], &[2, 1, 1, 1], &[2, 1, 1], &[1, 1, 1], &[1], &[1]],
        (5, 6),
        (5, 5, 25),
    )
}

fn composition_g55() -> Result<(), String> {
    let spec = CompositionSpec {
        base: five_solution_split(),
        fiber: FiberProblem {
            c: 2,
            d: 2,
            alpha: ps(&[&[1], &[], &[]]),
            beta: ps(&[&[1], &[], &[]]),
            gamma: ps(&[&[1], &[1]]),
        },
    };
    check_composition(
        &spec,
        &[&[4, 1], &[4], &[3], &[2, 1, 1, 1], &[1, 1, 1], &[1, 1, 1], &[1], &[1]],
        (5, 5),
        (5, 2, 10),
    )
}

fn wreath_table_5_2() -> Result<(), String> {
    let want: &[(&[u32], u64)] = &[
        (&[10], 384),
        (&[8, 2], 240),
        (&[8, 1, 1], 240),
        (&[6, 4], 160),
        (&[6, 2, 2], 240),
        (&[6, 2, 1, 1], 160),
        (&[6, 1, 1, 1, 1], 80),
        (&[5, 5], 384),
        (&[4, 4, 2], 300),
        (&[4, 4, 1, 1], 300),
        (&[4, 3, 3], 160),
        (&[4, 2, 2, 2], 140),
        (&[4, 2, 2, 1, 1], 180),
        (&[4, 2, 1, 1, 1, 1], 60),
        (&[4, 1, 1, 1, 1, 1, 1], 20),
        (&[3, 3, 2, 2], 240),
        (&[3, 3, 2, 1, 1], 160),
        (&[3, 3, 1, 1, 1, 1], 80),
        (&[2, 2, 2, 2, 2], 81),
        (&[2, 2, 2, 2, 1, 1], 125),
        (&[2, 2, 2, 1, 1, 1, 1], 70),
        (&[2, 2, 1, 1, 1, 1, 1, 1], 30),
        (&[2, 1, 1, 1, 1, 1, 1, 1, 1], 5),
        (&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1], 1),
    ];
    let t = cycle_type_table(5, 2).map_err(|e| e.to_string())?;
    ensure(t.rows.len() == want.len(), || format!("{} types", t.rows.len()))?;
    for (parts, c) in want {
        ensure(t.count(&p(parts)) == n(*c), || format!("{parts:?}: {}", t.count(&p(parts))))?;
    }
    ensure(t.total() == n(3840), || format!("total {}", t.total()))
}

fn oracle_agreement() -> Result<(), String> {
    let r = exhaustive_check(8);
    ensure(r.mismatches.is_empty() && r.checked > 0, || {
        format!("{} mismatches of {}, first {:?}", r.mismatches.len(), r.checked, r.mismatches.first())
    })
}

fn random_compositions() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let spec = random_spec(&mut rng, 6, 6);
        let check = verify_product(&spec).map_err(|e| format!("spec {i}: {e}"))?;
        ensure(check.holds, || format!("spec {i}: {}", serde_json::to_string(&spec).unwrap()))?;
    }
    Ok(())
}

// Property suites. Each returns the first counterexample found.

fn lr_symmetries() -> Result<(), String> {
    for w in 0..=8u32 {
        let lams = partitions_of(w, w, w as usize);
        for k in 0..=w {
            for mu in &partitions_of(k, k, k as usize) {
                for nu in &partitions_of(w - k, w - k, (w - k) as usize) {
                    for lam in &lams {
                        let c = lr_coef(lam, mu, nu);
                        ensure(c == lr_coef(lam, nu, mu), || format!("swap at {lam} {mu} {nu}"))?;
                        ensure(c == lr_coef(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()), || {
                            format!("conjugate at {lam} {mu} {nu}")
                        })?;
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    let pool: Vec<Partition> = (5..=8).flat_map(|k| partitions_of(k, k, k as usize)).collect();
    for _ in 0..500 {
        let mu = &pool[rng.gen_range(0..pool.len())];
        let nu = &pool[rng.gen_range(0..pool.len())];
        let prod = schur_product(mu, nu);
        let keys: Vec<&Partition> = prod.keys().collect();
        let lam = keys[rng.gen_range(0..keys.len())];
        let c = lr_coef(lam, mu, nu);
        ensure(c == prod.coefficient(lam) && c == lr_coef(lam, nu, mu), || format!("routes at {lam} {mu} {nu}"))?;
        ensure(c == lr_coef(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()), || {
            format!("conjugate at {lam} {mu} {nu}")
        })?;
    }
    Ok(())
}

fn dominance_bounds() -> Result<(), String> {
    let all = all_partitions(8);
    for mu in &all {
        for nu in &all {
            if mu.weight() + nu.weight() > 8 {
                continue;
            }
            let (low, high) = (mu.sort_concat(nu), mu.part_sum(nu));
            let prod = schur_product(mu, nu);
            ensure(prod.coefficient(&low) == n(1) && prod.coefficient(&high) == n(1), || {
                format!("extreme coefficients for {mu} {nu}")
            })?;
            for lam in prod.keys() {
                let ok = lam.dominates(&low).unwrap() && high.dominates(lam).unwrap();
                ensure(ok, || format!("{lam} outside [{low}, {high}]"))?;
                for a in 0..=mu.len() {
                    for b in 0..=nu.len() {
                        ensure(mu.prefix_weight(a) + nu.prefix_weight(b) <= lam.prefix_weight(a + b), || {
                            format!("prefix bound at {lam} {mu} {nu} {a} {b}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn frozen_rectangle_products() -> Result<(), String> {
    // Single factor: the term (□a,d + μ, α) has coefficient 1 and every other
    // key has strictly larger weight in its first a rows.
    for a in 0..=2u32 {
        for d in 0..=2u32 {
            for mu in in_box(a, 2) {
                for alpha in in_box(3, d) {
                    let left = Partition::rectangle(a, d).part_sum(&mu);
                    let base = (a * d) as u64 + mu.weight();
                    let special = left.sort_concat(&alpha);
                    let prod = schur_product(&left, &alpha);
                    ensure(prod.coefficient(&special) == n(1), || format!("coefficient of {special}"))?;
                    for key in prod.keys().filter(|k| **k != special) {
                        ensure(key.prefix_weight(a as usize) > base, || format!("{key} in {left}*{alpha}"))?;
                    }
                }
            }
        }
    }
    // Several factors: every key has at least the frozen weight in its top rows.
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..200 {
        let r = rng.gen_range(1..=3);
        let d = rng.gen_range(0..=2u32);
        let (mut total_a, mut bound) = (0u32, 0u64);
        let mut factors = Vec::new();
        for _ in 0..r {
            let a = rng.gen_range(0..=2u32);
            let mus = in_box(a, 2);
            let alphas = in_box(2, d);
            let mu = &mus[rng.gen_range(0..mus.len())];
            let alpha = &alphas[rng.gen_range(0..alphas.len())];
            factors.push(Partition::rectangle(a, d).part_sum(mu).sort_concat(alpha));
            total_a += a;
            bound += (a * d) as u64 + mu.weight();
        }
        let prod = multi_schur_product(&factors);
        for key in prod.keys() {
            ensure(key.prefix_weight(total_a as usize) >= bound, || format!("{key} from {factors:?}"))?;
        }
    }
    Ok(())
}

fn duality() -> Result<(), String> {
    for a in 1..=4u32 {
        for b in 1..=4u32 {
            let gr = g(a, b);
            let shapes = in_box(a, b);
            for lam in &shapes {
                let comp = gr.complement(lam).unwrap();
                let pair = class_product(&[lam.clone(), comp.clone()], gr).unwrap();
                ensure(pair == SchurExpansion::single(gr.point(), n(1)), || format!("{lam} * {comp}"))?;
                for mu in &shapes {
                    let nonzero = !class_product(&[lam.clone(), mu.clone()], gr).unwrap().is_empty();
                    ensure(nonzero == comp.contains(mu), || format!("{lam} * {mu} in G({a},{b})"))?;
                }
            }
        }
    }
    Ok(())
}

fn hook_vanishing() -> Result<(), String> {
    for a in 1..=2u32 {
        for b in 1..=2u32 {
            for c in 1..=2u32 {
                for d in 1..=2u32 {
                    let gr = g(a + c, b + d);
                    let cap = (a * d + a * b + c * b) as u64;
                    let target = SchurExpansion::single(gr.complement(&Partition::rectangle(c, d)).unwrap(), n(1));
                    for kappa in in_box(a, b + d) {
                        for lam in in_box(a + c, b) {
                            let w = kappa.weight() + lam.weight();
                            if w < cap {
                                continue;
                            }
                            let prod = class_product(&[kappa.clone(), lam.clone()], gr).unwrap();
                            if w > cap {
                                ensure(prod.is_empty(), || format!("{kappa} * {lam} should vanish"))?;
                            } else if !prod.is_empty() {
                                ensure(prod == target, || format!("{kappa} * {lam} is not the hook class"))?;
                                ensure(kappa.len() == a as usize && kappa.part(a as usize - 1) >= d, || {
                                    format!("{kappa} lacks the d-rectangle")
                                })?;
                                let alpha = p(&kappa.parts().iter().map(|x| x - d).collect::<Vec<_>>());
                                let dual = alpha.box_complement(a, b).map_err(|e| e.to_string())?;
                                ensure(lam == Partition::rectangle(c, b).sort_concat(&dual), || {
                                    format!("{lam} is not (box, {dual})")
                                })?;
                            }
                        }
                    }
                    for rho in in_box(a + c, b + d) {
                        for tau in in_box(a + c, b + d) {
                            let w = rho.prefix_weight(a as usize) + tau.conjugate().prefix_weight(b as usize);
                            if w > cap {
                                let prod = class_product(&[rho.clone(), tau.clone()], gr).unwrap();
                                ensure(prod.is_empty(), || format!("{rho} * {tau} should vanish"))?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn hook_formula() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(31);
    let mut seen = 0;
    while seen < 60 {
        let gr = g(rng.gen_range(1..=3), rng.gen_range(1..=3));
        let problem = random_problem(&mut rng, gr);
        let dl = delta(&problem);
        for split in find_composable_splits(&problem, 8) {
            let (c, d) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let got = big_hook_product(&split, c, d).map_err(|e| e.to_string())?;
            let amb = g(gr.a + c, gr.b + d);
            let hook = amb.complement(&Partition::rectangle(c, d)).unwrap();
            let want = if dl == n(0) { SchurExpansion::new() } else { SchurExpansion::single(hook, dl.clone()) };
            ensure(got == want, || format!("split {}", serde_json::to_string(&split).unwrap()))?;
            seen += 1;
        }
    }
    // Solution counts are unchanged by transposing the whole problem.
    for _ in 0..100 {
        let gr = g(rng.gen_range(1..=4), rng.gen_range(1..=4));
        let problem = random_problem(&mut rng, gr);
        let t = SchubertProblem::new(
            gr.transposed(),
            problem.conditions().iter().map(Partition::conjugate).collect(),
        )
        .unwrap();
        ensure(delta(&problem) == delta(&t), || "transpose changed the count".into())?;
    }
    Ok(())
}

fn property_suites() -> Result<(), String> {
    let suites: [(&str, Check); 6] = [
        ("lr symmetries", lr_symmetries),
        ("dominance and prefix bounds", dominance_bounds),
        ("frozen rectangle products", frozen_rectangle_products),
        ("duality", duality),
        ("hook vanishing", hook_vanishing),
        ("hook formula", hook_formula),
    ];
    for (name, f) in suites {
        f().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, Check); 10] = [
        ("cube of the point class", 1, cube_of_point),
        ("two-solution problem in G(4,4)", 1, two_solution_product),
        ("eight-factor problem in G(4,4)", 1, eight_factor_product),
        ("square of (3,1) in G(4,4)", 1, square_in_g44),
        ("composition into G(5,6)", 10, composition_g56),
        ("composition into G(5,5)", 10, composition_g55),
        ("cycle types of S_2 wr S_5", 30, wreath_table_5_2),
        ("tableau count matches the oracle up to weight 8", 300, oracle_agreement),
        ("200 random compositions", 600, random_compositions),
        ("property suites", 600, property_suites),
    ];
    panic::set_hook(Box::new(|_| {}));
    let total = criteria.len();
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took longer than {limit}s"))
        });
        match outcome {
            Ok(()) => println!("PASS  {:>2}  {name}  ({:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}  ({:.2}s): {e}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", total - failed, total);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

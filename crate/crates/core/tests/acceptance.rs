//! Acceptance criteria, one line each. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use lapcode::codes::{
    code_from_simplex, dual_code, is_mds_by_columns, minimum_distance_by_columns, minimum_distance_exhaustive,
    prime_dimension_report, verify_code_duality, ModularCode,
};
use lapcode::families::{rate_family_scan, whisker_hstar};
use lapcode::graphs::{enumerate_connected, parse_construct, star_whisker_complete, whisker, Graph};
use lapcode::simplex::{
    build_simplex, dual_vertex_matrix, height_one_decomposition_witness, hstar, is_reflexive_cofactor,
    is_reflexive_hibi, is_unimodal, lambda_set, lambda_set_bruteforce_oracle, LaplacianSimplex,
};
use lapcode::{IntMatrix, Limits};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn simplex_of(expr: &str) -> Result<LaplacianSimplex, String> {
    let g = parse_construct(expr).map_err(|e| format!("{expr}: {e}"))?;
    LaplacianSimplex::new(&g).map_err(|e| format!("{expr}: {e}"))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hstar_case(expr: &str, expected: &[u64], reflexive: bool, budget: Duration) -> Outcome {
    let start = Instant::now();
    let s = simplex_of(expr)?;
    let h = hstar(&s).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(h.coefficients() == expected, || {
        format!("h* = {h}, expected {expected:?}")
    })?;
    check(s.is_reflexive() == reflexive, || {
        format!("reflexive = {}", s.is_reflexive())
    })?;
    check(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}"))?;
    Ok(format!("h* = {h}, reflexive = {reflexive}, {elapsed:.2?}"))
}

fn c1() -> Outcome {
    let detail = hstar_case("B(C3,T:P6)", &[1, 3, 3, 5, 3, 5, 3, 3, 1], true, Duration::from_secs(1))?;
    let h = hstar(&simplex_of("B(C3,T:P6)")?).map_err(|e| e.to_string())?;
    check(!is_unimodal(&h), || "h* is unimodal".into())?;
    Ok(format!("{detail}, unimodal = false"))
}

fn c2() -> Outcome {
    hstar_case(
        "W*(C5)",
        &[1, 1, 16, 156, 1491, 3831, 3771, 1176, 126, 1, 1],
        false,
        Duration::from_secs(30),
    )
}

fn c3() -> Outcome {
    hstar_case(
        "B(K3,K6)",
        &[1, 208, 1763, 7205, 12923, 9900, 2658, 333, 1],
        false,
        Duration::from_secs(60),
    )
}

fn c4() -> Outcome {
    let mut graphs = Vec::new();
    for n in 2..=5 {
        graphs.extend(enumerate_connected(n).map_err(|e| e.to_string())?);
    }
    for expr in ["C6", "C7", "W(K3)", "B(C3,C3)"] {
        graphs.push(parse_construct(expr).map_err(|e| e.to_string())?);
    }
    let mut mismatches = Vec::new();
    for g in &graphs {
        let s = LaplacianSimplex::new(g).map_err(|e| e.to_string())?;
        let kernel = lambda_set(&s).map_err(|e| e.to_string())?;
        let oracle = lambda_set_bruteforce_oracle(&s).map_err(|e| e.to_string())?;
        if kernel != oracle {
            mismatches.push(format!("{g}: {}", kernel.first_difference(&oracle).unwrap_or_default()));
        }
    }
    check(mismatches.is_empty(), || {
        format!("{} mismatches, first {}", mismatches.len(), mismatches[0])
    })?;
    Ok(format!("{} graphs, 0 mismatches", graphs.len()))
}

fn c5() -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        for g in enumerate_connected(n).map_err(|e| e.to_string())? {
            let s = LaplacianSimplex::new(&g).map_err(|e| e.to_string())?;
            let cofactor = is_reflexive_cofactor(&s).reflexive;
            let hibi = is_reflexive_hibi(&hstar(&s).map_err(|e| e.to_string())?);
            check(cofactor == hibi, || {
                format!("{g}: cofactor {cofactor}, palindromic {hibi}")
            })?;
            count += 1;
        }
    }
    for n in 3..=8 {
        let s = LaplacianSimplex::new(&Graph::cycle(n).unwrap()).map_err(|e| e.to_string())?;
        check(s.is_reflexive() == (n % 2 == 1), || {
            format!("C{n}: reflexive = {}", s.is_reflexive())
        })?;
    }
    Ok(format!("{count} classes agree; C3..C8 reflexive exactly for odd n"))
}

fn c6() -> Outcome {
    for n in 3..=6u32 {
        let tau = star_whisker_complete(n as usize, 1).unwrap().spanning_tree_count();
        let expected = BigInt::from(2 * n + 1).pow(n - 1);
        check(tau == expected, || format!("W*(K{n}): τ = {tau}, expected {expected}"))?;
    }
    for (n, k) in [(3u32, 2u32), (3, 3), (4, 2)] {
        let tau = star_whisker_complete(n as usize, k as usize)
            .unwrap()
            .spanning_tree_count();
        let expected = BigInt::from((k + 1) * n + 1).pow(n - 1);
        check(tau == expected, || {
            format!("W*_{k}(K{n}): τ = {tau}, expected {expected}")
        })?;
    }
    Ok("7 spanning-tree counts match".into())
}

fn code_of(g: &Graph) -> Result<ModularCode, String> {
    let s = LaplacianSimplex::new(g).map_err(|e| e.to_string())?;
    code_from_simplex(&s).map_err(|e| e.to_string())
}

fn c7() -> Outcome {
    let limits = Limits::default();
    let dist = |g: &Graph| -> Result<u64, String> {
        minimum_distance_exhaustive(&code_of(g)?, &limits).map_err(|e| e.to_string())
    };
    for n in 3..=7 {
        let d = dist(&Graph::complete(n).unwrap())?;
        check(d == 2, || format!("K{n}: dist {d}"))?;
        let dual = dual_code(&code_of(&Graph::complete(n).unwrap())?).map_err(|e| e.to_string())?;
        let ones = ModularCode::new(n, n as u64, &[vec![1; n]]).unwrap();
        check(dual.same_code(&ones) && ones.same_code(&dual), || {
            format!("K{n}: dual is not <1>")
        })?;
    }
    for n in [5, 7, 9] {
        let d = dist(&Graph::cycle(n).unwrap())?;
        check(d == n as u64 - 1, || format!("C{n}: dist {d}"))?;
    }
    for n in 3..=7 {
        let d = dist(&Graph::path(n).unwrap())?;
        check(d == n as u64, || format!("T{n}: dist {d}"))?;
    }
    Ok("K3..K7 dist 2 with dual <1>; C5,C7,C9 dist n-1; T3..T7 dist n".into())
}

fn c8() -> Outcome {
    let limits = Limits::default();
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for (n, p) in [(3usize, 7u64), (5, 11), (6, 13)] {
        let start = Instant::now();
        let c = code_of(&star_whisker_complete(n, 1).unwrap())?;
        check(c.modulus() == p, || format!("modulus {} for n = {n}", c.modulus()))?;
        let k = c.dimension();
        let d = minimum_distance_exhaustive(&c, &limits).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        report.push(format!("(n={n},p={p}): k={k:?} dist={d} in {elapsed:.1?}"));
        if k != Some(n as u32) {
            failures.push(format!("n={n}: k = {k:?}"));
        }
        if d != n as u64 + 2 {
            failures.push(format!("n={n}: dist = {d}, expected {}", n + 2));
        }
        if n == 6 && elapsed > Duration::from_secs(300) {
            failures.push(format!("n=6 took {elapsed:?}"));
        }
        if n != 6 {
            let by_columns = minimum_distance_by_columns(&c, &limits).map_err(|e| e.to_string())?;
            let mds = is_mds_by_columns(&c, &limits).map_err(|e| e.to_string())?;
            report.push(format!("column method dist={by_columns} mds={mds}"));
            if !mds {
                failures.push(format!("n={n}: column method finds dependent n+1 columns"));
            }
        }
    }
    if failures.is_empty() {
        Ok(report.join("; "))
    } else {
        Err(format!("{} [{}]", failures.join("; "), report.join("; ")))
    }
}

fn c9() -> Outcome {
    let limits = Limits::default();
    let mut graphs: Vec<Graph> = ["K3", "K4", "K5", "C5", "C7", "W(K3)", "W*(K3)"]
        .iter()
        .map(|e| parse_construct(e).unwrap())
        .collect();
    for n in 2..=5 {
        for g in enumerate_connected(n).map_err(|e| e.to_string())? {
            if LaplacianSimplex::new(&g).map_err(|e| e.to_string())?.is_reflexive() {
                graphs.push(g);
            }
        }
    }
    for g in &graphs {
        let s = LaplacianSimplex::new(g).map_err(|e| e.to_string())?;
        let r = verify_code_duality(&s, &limits).map_err(|e| format!("{g}: {e}"))?;
        check(r.passed, || format!("{g}: {r:?}"))?;
        check(r.cardinality_product_ok, || format!("{g}: |C|·|C^⊥| != n^n"))?;
    }
    Ok(format!("{} reflexive simplices pass", graphs.len()))
}

fn c10() -> Outcome {
    for n in 3..=6 {
        let s = LaplacianSimplex::new(&Graph::complete(n).unwrap()).map_err(|e| e.to_string())?;
        let v = dual_vertex_matrix(&s).map_err(|e| e.to_string())?;
        let u = IntMatrix::identity(n - 1).unwrap().scaled(&BigInt::from(-1));
        let transformed = v.mul(&u).map_err(|e| e.to_string())?;
        let star = Graph::star(n).unwrap().laplacian().without_column(n - 1).unwrap();
        check(transformed == star, || format!("K{n}: V·U =\n{transformed}"))?;
    }
    Ok("V·(−I) equals the star Laplacian with column n deleted, n = 3..6".into())
}

fn c11() -> Outcome {
    for g in [
        Graph::complete(3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::cycle(5).unwrap(),
    ] {
        let base = hstar(&LaplacianSimplex::new(&g).unwrap()).map_err(|e| e.to_string())?;
        for k in 1..=2 {
            let w = whisker(&g, k).unwrap();
            let actual = hstar(&LaplacianSimplex::new(&w).unwrap()).map_err(|e| e.to_string())?;
            let predicted = whisker_hstar(&base, k).map_err(|e| e.to_string())?;
            check(actual == predicted, || format!("{g}, k={k}: {actual} vs {predicted}"))?;
        }
    }
    Ok("6 factorizations exact".into())
}

fn c12() -> Outcome {
    let rows = rate_family_scan(1, 2, &[3, 5, 7]).map_err(|e| e.to_string())?;
    let mut rates = Vec::new();
    for r in &rows {
        check(r.reflexive, || format!("n={}: not reflexive", r.n))?;
        check(r.cardinality == r.formula, || {
            format!("n={}: |C| = {}, formula {}", r.n, r.cardinality, r.formula)
        })?;
        rates.push(r.rate.to_f64());
    }
    let gaps: Vec<f64> = rates.iter().map(|r| (0.5 - r).abs()).collect();
    check(
        gaps.windows(2).all(|w| w[1] < w[0]) && rates.windows(2).all(|w| w[0] < w[1]),
        || format!("rates {rates:?} do not approach 1/2 monotonically"),
    )?;
    let sizes: Vec<String> = rows.iter().map(|r| r.cardinality.to_string()).collect();
    Ok(format!("|C| = {}, rates {:.4?}", sizes.join(", "), rates))
}

fn c13() -> Outcome {
    let s = simplex_of("B(C3,T:P6)")?;
    let target: Vec<BigInt> = [1, -1, 0, 0, 0, 0, 0, 0, 3].iter().map(|&x| BigInt::from(x)).collect();
    let points: Vec<Vec<BigInt>> = lambda_set(&s)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|e| s.point_of(e).unwrap())
        .collect();
    check(points.contains(&target), || {
        "target is not a lattice point of the parallelepiped".into()
    })?;
    let w = height_one_decomposition_witness(&s, &target).map_err(|e| e.to_string())?;
    check(w.is_none(), || format!("found decomposition {w:?}"))?;
    Ok("(1,-1,0,0,0,0,0,0,3) lies in the parallelepiped and has no height-one decomposition".into())
}

fn c14() -> Outcome {
    let mut checked = 0;
    for n in [5, 7] {
        for g in enumerate_connected(n).map_err(|e| e.to_string())? {
            let s = LaplacianSimplex::new(&g).map_err(|e| e.to_string())?;
            if !s.is_reflexive() {
                continue;
            }
            let set = lambda_set(&s).map_err(|e| e.to_string())?;
            let d = set.denominator();
            for e in set.iter() {
                let image: Vec<u64> = e.numerators().iter().map(|&x| d - 1 - x).collect();
                check(set.contains_numerators(&image), || {
                    format!("{g}: bijection image of {e} missing")
                })?;
                let neg = e.negated();
                check(set.contains_numerators(neg.numerators()), || {
                    format!("{g}: −{e} missing")
                })?;
                check(e.height() + neg.height() == e.support().len(), || {
                    format!("{g}: support identity fails at {e}")
                })?;
                let bij = set
                    .elements()
                    .binary_search_by(|x| x.numerators().cmp(&image[..]))
                    .map(|i| set.elements()[i].height());
                check(bij == Ok(n - 1 - e.height()), || format!("{g}: height of image of {e}"))?;
            }
            for i in 1..n {
                let other = lambda_set(&build_simplex(&g, i).unwrap()).map_err(|e| e.to_string())?;
                check(other == set, || format!("{g}: Λ changes when deleting column {i}"))?;
            }
            let r = prime_dimension_report(&s).map_err(|e| e.to_string())?;
            check(r.tau_matches, || format!("{g}: τ = {} but k = {}", r.tau, r.k))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} reflexive classes on 5 and 7 vertices"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "h* of B(C3,P6) and non-unimodality", c1),
        (2, "h* of W*(C5)", c2),
        (3, "h* of B(K3,K6)", c3),
        (4, "Λ kernel vs geometric oracle", c4),
        (5, "cofactor vs palindromic reflexivity", c5),
        (6, "spanning trees of W*_k(K_n)", c6),
        (7, "distances of complete, cycle and tree codes", c7),
        (8, "W*(K_n) codes: k = n, dist = n+2", c8),
        (9, "code duality", c9),
        (10, "dual of the complete-graph simplex", c10),
        (11, "whisker h* factorization", c11),
        (12, "rate family B(C_n, K_n)", c12),
        (13, "non-IDP witness", c13),
        (14, "structural invariants on prime orders", c14),
    ];
    let results: Vec<(u32, &str, Outcome, Duration)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(id, name, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
                        Err(p
                            .downcast_ref::<String>()
                            .cloned()
                            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_else(|| "panicked".into()))
                    });
                    (id, name, outcome, start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread"))
            .collect()
    });
    let mut failed = 0;
    for (id, name, outcome, elapsed) in &results {
        match outcome {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

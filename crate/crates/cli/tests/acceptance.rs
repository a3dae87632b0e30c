//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every check is exact. The instance counts and wall-clock limits below are
//! the pinned thresholds; a criterion fails when a check fails, when fewer
//! instances than required qualify, or when it exceeds its time limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use tropmat_core::colorful::{
    colorful_basis, colorful_basis_two_cocircuit, generic_rado_check, verify_bc_condition,
    verify_two_cocircuit_condition, ColorfulBasis, ColorfulOutcome,
};
use tropmat_core::euclidean::{find_km_basis, subset_contains_origin, HullMembership};
use tropmat_core::formats::{parse_json, parse_rational_instance};
use tropmat_core::generate::{
    figure1_json, figure2_json, random_3dm, random_complex, random_generic_configuration, random_horn, random_matroid,
    random_matroid_of_rank, random_tropical_configuration, rng_from_seed, MatroidFamily,
};
use tropmat_core::lp::{
    decode_matching, from_3dm, maximal_model, solve_clp, solve_zero_inf, to_dual_horn, Constraint, DualHornSystem,
    ThreeDmInstance,
};
use tropmat_core::matroid::{Clutter, Matroid};
use tropmat_core::tropical::{
    covector_graph_at_origin, is_valid_certificate, realize_complex, support_complex, TropicalConfiguration,
    TropicalScalar,
};
use tropmat_core::{ElementSet, Error, Rational};
use tropmat_testkit as oracle;

const GREEDY_MIN_INSTANCES: usize = 500;
const TROPICAL_CORPUS_SEEDS: u64 = 12_000;
const TWO_COCIRCUIT_MIN_INSTANCES: usize = 300;
const TWO_COCIRCUIT_MAX_SEEDS: u64 = 20_000;
const THREE_DM_DRAWS: u64 = 400;
const HORN_SYSTEMS: u64 = 600;
const HORN_LARGE_CLAUSES: usize = 100_000;
const HORN_LARGE_LIMIT: Duration = Duration::from_secs(1);
const COMPLEX_MIN_ROUND_TRIPS: usize = 1000;
const KERNEL_MATROIDS: u64 = 40;
const KERNEL_CLUTTERS: u64 = 400;
const RADO_INSTANCES: u64 = 400;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn tropical_instance(seed: u64) -> (Matroid, TropicalConfiguration) {
    let mut rng = rng_from_seed(seed);
    let family = MatroidFamily::ALL[(seed % 5) as usize];
    let n = (seed / 5 % 8) as usize + 1;
    let d = (seed / 40 % 3) as usize + 1;
    let matroid = random_matroid(&mut rng, n, family).expect("generator parameters are valid");
    let config = random_tropical_configuration(&mut rng, n, d, 3, 0.3).expect("generator parameters are valid");
    (matroid, config)
}

/// A found basis is a basis, its certificate reproduces the origin, and the
/// trace has at most `d` steps of strictly growing coverage.
fn check_basis(m: &Matroid, c: &TropicalConfiguration, found: &ColorfulBasis, what: &str) -> Result<(), String> {
    let d = c.dimension();
    ensure!(m.is_basis(found.basis), "{what}: {:?} is not a basis", found.basis);
    ensure!(
        is_valid_certificate(&found.coefficients, c, &vec![TropicalScalar::zero(); d]),
        "{what}: invalid certificate"
    );
    ensure!(
        found.coefficients.iter().enumerate().all(|(e, x)| found.basis.contains(e) || x.is_neg_inf()),
        "{what}: certificate leaves the basis"
    );
    ensure!(found.trace.len() <= d, "{what}: trace has {} > d = {d} steps", found.trace.len());
    let graph = covector_graph_at_origin(c);
    let mut last = 0;
    for step in &found.trace.steps {
        ensure!(graph.cover(step.basis) == step.covered, "{what}: recorded coverage is wrong");
        ensure!(step.covered.len() > last || last == 0, "{what}: coverage did not grow");
        last = step.covered.len();
    }
    ensure!(graph.cover(found.basis).len() > last, "{what}: final exchange did not grow coverage");
    Ok(())
}

fn greedy_suite() -> Outcome {
    let mut qualifying = 0;
    for seed in 0..TROPICAL_CORPUS_SEEDS {
        let (m, c) = tropical_instance(seed);
        if m.full_rank() < c.dimension() + 1 || !verify_bc_condition(&m, &c).expect("sizes agree").is_ok() {
            continue;
        }
        qualifying += 1;
        match colorful_basis(&m, &c, None).expect("sizes agree") {
            ColorfulOutcome::Found(found) => {
                check_basis(&m, &c, &found, &format!("seed {seed}"))?;
                ensure!(!found.via_fallback, "seed {seed}: greedy walk stalled under the condition");
            }
            ColorfulOutcome::NotFound { .. } => return Err(format!("seed {seed}: no basis under the condition")),
        }
    }
    ensure!(qualifying >= GREEDY_MIN_INSTANCES, "only {qualifying} < {GREEDY_MIN_INSTANCES} qualifying instances");
    Ok(format!("{qualifying} condition-ok instances, all greedy successes"))
}

fn oracle_equivalence() -> Outcome {
    let (mut found, mut fallback, mut refuted) = (0, 0, 0);
    for seed in 0..TROPICAL_CORPUS_SEEDS {
        let (m, c) = tropical_instance(seed);
        let outcome = colorful_basis(&m, &c, None).expect("sizes agree");
        let reference = oracle::covering_basis(&m, &c, None);
        ensure!(
            outcome.basis().is_some() == reference.is_some(),
            "seed {seed}: library {} but enumeration {}",
            outcome.basis().is_some(),
            reference.is_some()
        );
        match outcome {
            ColorfulOutcome::Found(basis) => {
                found += 1;
                fallback += usize::from(basis.via_fallback);
                check_basis(&m, &c, &basis, &format!("seed {seed}"))?;
            }
            ColorfulOutcome::NotFound { violation: Some(v) } => {
                refuted += 1;
                ensure!(
                    !oracle::tropical_hull_contains(&c, v.offending_set(), &oracle::origin(c.dimension())),
                    "seed {seed}: reported violation is not one"
                );
            }
            ColorfulOutcome::NotFound { violation: None } => {
                ensure!(m.full_rank() <= c.dimension(), "seed {seed}: missing violation witness");
            }
        }
    }
    Ok(format!(
        "{TROPICAL_CORPUS_SEEDS} instances: {found} found ({fallback} via fallback), {refuted} refuted with witness"
    ))
}

fn two_cocircuit_suite() -> Outcome {
    let mut qualifying = 0;
    let mut seed = 0;
    while qualifying < TWO_COCIRCUIT_MIN_INSTANCES && seed < TWO_COCIRCUIT_MAX_SEEDS {
        let mut rng = rng_from_seed(seed);
        let d = (seed % 3) as usize + 1;
        let n = d + 1 + (seed / 3 % (8 - d as u64)) as usize;
        let family = MatroidFamily::ALL[(seed / 24 % 5) as usize];
        seed += 1;
        let m = random_matroid_of_rank(&mut rng, n, d + 1, family).expect("rank is attainable");
        let c = random_tropical_configuration(&mut rng, n, d, 3, 0.3).expect("generator parameters are valid");
        let condition = verify_two_cocircuit_condition(&m, &c).expect("rank is d + 1");
        ensure!(condition.is_ok() == oracle::two_cocircuit_condition(&m, &c), "seed {seed}: verifier disagrees");
        if !condition.is_ok() {
            continue;
        }
        qualifying += 1;
        match colorful_basis_two_cocircuit(&m, &c).expect("rank is d + 1") {
            ColorfulOutcome::Found(found) => check_basis(&m, &c, &found, &format!("seed {seed}"))?,
            ColorfulOutcome::NotFound { .. } => return Err(format!("seed {seed}: no basis under the condition")),
        }
    }
    ensure!(
        qualifying >= TWO_COCIRCUIT_MIN_INSTANCES,
        "only {qualifying} < {TWO_COCIRCUIT_MIN_INSTANCES} qualifying instances"
    );
    Ok(format!("{qualifying} rank-(d+1) condition-ok instances from {seed} draws"))
}

fn labeled(edges: &[[&str; 3]]) -> Vec<[String; 3]> {
    edges.iter().map(|e| e.map(str::to_owned)).collect()
}

/// Feasibility of the encoded program, or `None` for an element of `A` in
/// no hyperedge, which leaves a color class empty.
fn reduction_verdict(instance: &ThreeDmInstance) -> Result<Option<Vec<usize>>, String> {
    let program = from_3dm(instance);
    ensure!(program.matrix.rows() == 3 * instance.k(), "wrong row count");
    if program.classes.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    match solve_clp(&program).map_err(|e| e.to_string())? {
        Some(solution) => Ok(Some(decode_matching(&solution, instance).map_err(|e| e.to_string())?)),
        None => Ok(None),
    }
}

fn three_dm_reduction() -> Outcome {
    let fixture = ThreeDmInstance::from_labeled_edges(
        2,
        &labeled(&[["a1", "b1", "c1"], ["a1", "b2", "c2"], ["a2", "b1", "c2"]]),
        None,
    )
    .map_err(|e| e.to_string())?;
    ensure!(oracle::perfect_matching(&fixture).is_none(), "fixture unexpectedly has a matching");
    ensure!(reduction_verdict(&fixture)?.is_none(), "fixture reported feasible");
    let mut feasible = 0;
    for seed in 0..THREE_DM_DRAWS {
        let mut rng = rng_from_seed(seed);
        let k = (seed % 3) as usize + 1;
        let edges = (seed / 3 % 15) as usize + 1;
        let instance = random_3dm(&mut rng, k, edges).expect("generator parameters are valid");
        let verdict = reduction_verdict(&instance)?;
        let expected = oracle::perfect_matching(&instance);
        ensure!(verdict.is_some() == expected.is_some(), "seed {seed}: reduction disagrees with brute force");
        if let Some(matching) = verdict {
            feasible += 1;
            ensure!(instance.is_perfect_matching(&matching), "seed {seed}: decoded support is not a matching");
        }
    }
    Ok(format!("k=2 fixture infeasible; {THREE_DM_DRAWS} draws, {feasible} with a perfect matching"))
}

/// `z_i ≤ z_{i+1}` along a chain whose end is forced to `−∞`, followed by
/// equations that pin the remaining variables to `0`.
fn large_horn_system() -> DualHornSystem {
    let chain = HORN_LARGE_CLAUSES / 2;
    let n = HORN_LARGE_CLAUSES + 1;
    let mut constraints: Vec<Constraint> =
        (0..chain).map(|i| Constraint::Inequality { lhs: i, rhs: vec![i + 1] }).collect();
    constraints.push(Constraint::Inequality { lhs: chain, rhs: Vec::new() });
    constraints.extend((chain + 1..n).map(|j| Constraint::Equation(vec![j])));
    DualHornSystem::new(n, constraints).expect("indices are in range")
}

fn horn_suite() -> Outcome {
    let mut feasible = 0;
    for seed in 0..HORN_SYSTEMS {
        let mut rng = rng_from_seed(seed);
        let n = (seed % 16) as usize + 1;
        let m = (seed / 16 % 30) as usize;
        let system = random_horn(&mut rng, n, m).expect("generator parameters are valid");
        let all = oracle::horn_solutions(&system);
        let solution = solve_zero_inf(&system);
        ensure!(solution.is_some() == !all.is_empty(), "seed {seed}: feasibility disagrees with enumeration");
        if let Some(x) = solution {
            feasible += 1;
            let zero: Vec<bool> = x.iter().map(|v| *v == TropicalScalar::zero()).collect();
            ensure!(system.is_satisfied_by(&zero), "seed {seed}: solution violates the system");
            let top: Vec<bool> = (0..n).map(|i| all.iter().any(|s| s[i])).collect();
            ensure!(zero == top, "seed {seed}: solution is not pointwise maximal");
        }
    }
    let system = large_horn_system();
    let start = Instant::now();
    let model = maximal_model(system.variables(), &to_dual_horn(&system)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let model = model.ok_or("large system reported infeasible")?;
    let chain = HORN_LARGE_CLAUSES / 2;
    ensure!(model.iter().enumerate().all(|(i, &z)| z == (i > chain)), "large system: wrong maximal model");
    ensure!(elapsed < HORN_LARGE_LIMIT, "large system took {elapsed:?}");
    Ok(format!(
        "{HORN_SYSTEMS} systems ({feasible} feasible) match enumeration; {HORN_LARGE_CLAUSES} clauses in {elapsed:.2?}"
    ))
}

fn complex_round_trip() -> Outcome {
    let (mut valid, mut rejected, mut seed) = (0, 0, 0u64);
    while valid < COMPLEX_MIN_ROUND_TRIPS {
        let mut rng = rng_from_seed(seed);
        let n = (seed % 7) as usize + 1;
        seed += 1;
        let complex = random_complex(&mut rng, n, 6).expect("generator parameters are valid");
        let in_all = (0..n).find(|&e| complex.facets().iter().all(|f| f.contains(e)));
        match (realize_complex(&complex), in_all) {
            (Ok(config), None) => {
                let origin = vec![TropicalScalar::zero(); config.dimension()];
                let back = support_complex(&config, &origin).map_err(|e| e.to_string())?;
                ensure!(back == complex, "seed {seed}: round trip changed the complex");
                valid += 1;
            }
            (Err(Error::ElementInAllFacets(e)), Some(first)) => {
                ensure!(e == first, "seed {seed}: wrong element {e} reported, expected {first}");
                rejected += 1;
            }
            (result, _) => return Err(format!("seed {seed}: unexpected realization result {:?}", result.err())),
        }
    }
    ensure!(rejected > 0, "no element-in-all-facets case was exercised");
    Ok(format!("{valid} round trips; {rejected} element-in-all-facets rejections"))
}

fn run_binary(args: &[&str], stdin: &Value) -> Result<(i32, Value), String> {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_tropmat"))
        .args(args)
        .arg("--quiet")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child.stdin.take().expect("stdin is piped").write_all(stdin.to_string().as_bytes()).map_err(|e| e.to_string())?;
    let output = child.wait_with_output().map_err(|e| e.to_string())?;
    let code = output.status.code().ok_or("terminated by a signal")?;
    let text = String::from_utf8(output.stdout).map_err(|e| e.to_string())?;
    Ok((code, parse_json(&text).map_err(|e| e.to_string())?))
}

fn frozen_points(fixture: &Value) -> Value {
    fixture["configuration"]["points"].clone()
}

fn figure_fixtures() -> Outcome {
    ensure!(
        frozen_points(&figure1_json())
            == json!({"r1": [-2, 1], "r2": [-2, 0], "g1": [2, 1], "g2": [2, 2], "b": [0, -1]}),
        "first fixture coordinates changed"
    );
    ensure!(
        frozen_points(&figure2_json())
            == json!({
                "r1": [-2, 1], "r2": [-2, -1], "g1": [2, 1], "g2": [2, -1],
                "b1": [1, 1], "b2": [1, 0], "b3": [-1, 1], "b4": [-1, 0]
            }),
        "second fixture coordinates changed"
    );
    ensure!(figure2_json()["configuration"]["origin"] == json!([0, "1/2"]), "second fixture origin changed");

    let (code, report) = run_binary(&["gen", "fig1"], &Value::Null)?;
    ensure!(code == 0, "gen fig1 exited {code}");
    let (code, _) = run_binary(&["km-verify", "-"], &report)?;
    ensure!(code == 0, "km-verify on the first fixture exited {code}");

    let (code, report) = run_binary(&["km-verify", "-"], &figure2_json())?;
    ensure!(code == 1 && report["status"] == "violated", "km-verify on the second fixture exited {code}");
    let violation = &report["payload"]["violation"];
    ensure!(
        violation["basis"].is_array() && violation["cocircuit"].is_array(),
        "violation lacks a (basis, cocircuit) pair: {violation}"
    );
    let (m, config) = parse_rational_instance(&figure2_json()).map_err(|e| e.to_string())?;
    let index = |v: &Value| m.ground().index_of(v.as_str().unwrap_or_default()).map_err(|e| e.to_string());
    let offending: ElementSet = violation["offending_set"]
        .as_array()
        .ok_or("offending set missing")?
        .iter()
        .map(index)
        .collect::<Result<_, _>>()?;
    ensure!(
        matches!(subset_contains_origin(&config, offending), HullMembership::Outside),
        "reported pair contains the origin"
    );

    let (code, _) = run_binary(&["km-verify", "--corank2", "-"], &figure2_json())?;
    ensure!(code == 0, "corank-2 check on the second fixture exited {code}");

    for (name, fixture) in [("first", figure1_json()), ("second", figure2_json())] {
        let (code, report) = run_binary(&["km-basis", "-"], &fixture)?;
        ensure!(code == 0, "km-basis on the {name} fixture exited {code}");
        let (m, config) = parse_rational_instance(&fixture).map_err(|e| e.to_string())?;
        let index = |v: &Value| m.ground().index_of(v.as_str().unwrap_or_default()).map_err(|e| e.to_string());
        let basis: ElementSet = report["payload"]["basis"]
            .as_array()
            .ok_or("basis missing")?
            .iter()
            .map(index)
            .collect::<Result<_, _>>()?;
        ensure!(m.is_basis(basis), "{name} fixture: reported set is not a basis");
        let library = find_km_basis(&m, &config, None).map_err(|e| e.to_string())?.ok_or("library found nothing")?;
        ensure!(library.basis == basis, "{name} fixture: binary and library disagree");
        let points: Vec<&[Rational]> = config.points().iter().map(Vec::as_slice).collect();
        ensure!(library.certificate.is_valid_for(&points), "{name} fixture: invalid certificate");
    }
    Ok("first fixture ok; second violated with witness; corank-2 ok; bases found on both".into())
}

fn kernel_matroid(seed: u64, max_n: usize) -> Matroid {
    let mut rng = rng_from_seed(seed);
    let n = (seed as usize / 5) % max_n + 1;
    random_matroid(&mut rng, n, MatroidFamily::ALL[(seed % 5) as usize]).expect("generator parameters are valid")
}

fn matroid_kernel() -> Outcome {
    let mut pairs = 0u64;
    for seed in 0..KERNEL_MATROIDS {
        let m = kernel_matroid(seed, 8);
        let table = m.rank_table();
        let full = 1usize << m.len();
        for s in 0..full {
            for t in 0..full {
                pairs += 1;
                ensure!(table[s | t] + table[s & t] <= table[s] + table[t], "seed {seed}: submodularity fails");
                ensure!(s & !t != 0 || table[s] <= table[t], "seed {seed}: rank is not monotone");
            }
        }
    }
    let mut dawson = 0u64;
    for seed in 0..KERNEL_MATROIDS {
        let m = kernel_matroid(seed, 7);
        let cocircuits = m.cocircuits();
        for a in ElementSet::full(m.len()).subsets() {
            if !m.is_independent(a).expect("in range") {
                continue;
            }
            for e in ElementSet::full(m.len()).difference(a).iter() {
                dawson += 1;
                let witness = cocircuits.iter().any(|c| c.contains(e) && c.intersection(a).is_empty());
                ensure!(m.is_independent(a.with(e)).expect("in range") == witness, "seed {seed}: Dawson fails");
            }
        }
    }
    let (mut matroidal, mut clutters) = (0, 0);
    for seed in 0..KERNEL_CLUTTERS {
        let mut rng = rng_from_seed(seed);
        let n = (seed % 6) as usize + 1;
        let family = random_complex(&mut rng, n, 6).expect("generator parameters are valid");
        let clutter = Clutter::new(n, family.facets().iter().copied()).map_err(|e| e.to_string())?;
        let blocker = clutter.blocker();
        ensure!(blocker.members() == oracle::minimal_transversals(n, clutter.members()), "seed {seed}: blocker wrong");
        ensure!(blocker.blocker() == clutter, "seed {seed}: double blocker differs");
        let check = clutter.is_matroid_basis_clutter();
        ensure!(check.is_matroid() == check.blocker_says_matroid(), "seed {seed}: criteria disagree");
        ensure!(check.is_matroid() == oracle::satisfies_exchange(clutter.members()), "seed {seed}: exchange wrong");
        matroidal += usize::from(check.is_matroid());
        clutters += 1;
    }
    for seed in 0..KERNEL_MATROIDS {
        let m = kernel_matroid(seed, 6);
        let clutter = Clutter::new(m.len(), m.bases()).map_err(|e| e.to_string())?;
        let check = clutter.is_matroid_basis_clutter();
        ensure!(check.is_matroid() && check.blocker_says_matroid(), "seed {seed}: basis clutter rejected");
        ensure!(clutter.blocker().members() == m.cocircuits(), "seed {seed}: blocker of bases is not the cocircuits");
    }
    Ok(format!(
        "{pairs} submodular pairs, {dawson} Dawson cases, {clutters} clutters ({matroidal} matroidal) plus basis clutters"
    ))
}

fn rado_suite() -> Outcome {
    let mut holding = 0;
    for seed in 0..RADO_INSTANCES {
        let mut rng = rng_from_seed(seed);
        let n = (seed % 8) as usize + 1;
        let d = (seed / 8 % 3) as usize + 1;
        let m = random_matroid(&mut rng, n, MatroidFamily::ALL[(seed / 24 % 5) as usize])
            .expect("generator parameters are valid");
        let (c, _) = random_generic_configuration(&mut rng, n, d, 3).expect("generator parameters are valid");
        let report = generic_rado_check(&m, &c).expect("sizes agree");
        ensure!(report.generic, "seed {seed}: generic instance not recognised");
        let verdict = report.rado.ok_or("missing verdict")?;
        ensure!(verdict.holds == oracle::covering_independent_set(&m, &c), "seed {seed}: Rado disagrees");
        ensure!(verdict.holds == verdict.transversal.is_some(), "seed {seed}: transversal disagrees");
        if let Some(t) = verdict.transversal {
            ensure!(m.is_independent(t).expect("in range"), "seed {seed}: transversal dependent");
            ensure!(oracle::tropical_hull_contains(&c, t, &oracle::origin(d)), "seed {seed}: transversal misses");
        }
        holding += usize::from(verdict.holds);
    }
    Ok(format!("{RADO_INSTANCES} generic instances, {holding} satisfy the rank condition"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "greedy colorful basis under the basis/cocircuit condition",
            limit: Duration::from_secs(60),
            run: greedy_suite,
        },
        Criterion {
            id: 2,
            name: "greedy vs exhaustive basis search",
            limit: Duration::from_secs(60),
            run: oracle_equivalence,
        },
        Criterion {
            id: 3,
            name: "two-cocircuit walk at rank d+1",
            limit: Duration::from_secs(60),
            run: two_cocircuit_suite,
        },
        Criterion {
            id: 4,
            name: "3-dimensional matching reduction",
            limit: Duration::from_secs(30),
            run: three_dm_reduction,
        },
        Criterion { id: 5, name: "dual-Horn {-inf,0} solver", limit: Duration::from_secs(60), run: horn_suite },
        Criterion {
            id: 6,
            name: "support complex realization round trip",
            limit: Duration::from_secs(10),
            run: complex_round_trip,
        },
        Criterion {
            id: 7,
            name: "planar fixtures through the binary",
            limit: Duration::from_secs(30),
            run: figure_fixtures,
        },
        Criterion { id: 8, name: "matroid kernel", limit: Duration::from_secs(30), run: matroid_kernel },
        Criterion {
            id: 9,
            name: "Rado condition on generic instances",
            limit: Duration::from_secs(30),
            run: rado_suite,
        },
    ];
    let mut failures = 0;
    for criterion in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(criterion.run)).unwrap_or_else(|panic| {
            let message = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| (*s).to_owned()))
                .unwrap_or_default();
            Err(format!("panicked: {message}"))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > criterion.limit {
                Err(format!("{detail}; took {elapsed:.2?}, limit {:?}", criterion.limit))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("PASS [{}] {}: {detail} ({elapsed:.2?})", criterion.id, criterion.name),
            Err(reason) => {
                failures += 1;
                println!("FAIL [{}] {}: {reason} ({elapsed:.2?})", criterion.id, criterion.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

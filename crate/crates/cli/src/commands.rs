//! Subcommand handlers: parse the instance, call the library, render.

use anyhow::{bail, Result};
use serde_json::{json, Value};
use tropmat_core::colorful::{
    colorful_basis, colorful_basis_two_cocircuit, verify_bc_condition, verify_two_cocircuit_condition, ColorfulOutcome,
};
use tropmat_core::euclidean::{find_km_basis, verify_corank2_condition, verify_km_condition};
use tropmat_core::formats::{
    clp_to_json, complex_to_json, element_to_json, matroid_to_json, parse_3dm, parse_clp, parse_complex, parse_horn,
    parse_matroid, parse_rational_instance, parse_tropical_configuration, parse_tropical_instance, rationals_to_json,
    scalars_to_json, set_to_json, three_dm_to_json, tropical_configuration_to_json,
};
use tropmat_core::generate::{
    figure1_json, figure2_json, random_3dm, random_clp, random_matroid, random_tropical_configuration, rng_from_seed,
    MatroidFamily,
};
use tropmat_core::lp::{from_3dm, solve_clp, solve_zero_inf, to_dual_horn};
use tropmat_core::matroid::{Clutter, GroundSet, Matroid};
use tropmat_core::tropical::{covector_graph, realize_complex, support_complex, tropical_membership, Membership};
use tropmat_core::ElementSet;

use crate::render::{condition, sectors_to_json, trace_to_json, violation_to_json, Output, Status};
use crate::{Family, GenArgs, GenKind};

fn resolve_pin(matroid: &Matroid, pin: Option<&str>) -> Result<Option<usize>> {
    Ok(match pin {
        Some(label) => Some(matroid.ground().index_of(label)?),
        None => None,
    })
}

pub fn membership(input: &Value) -> Result<Output> {
    let instance = parse_tropical_configuration(input)?;
    let config = &instance.configuration;
    let ground = config.ground();
    let graph = covector_graph(config, &instance.target)?;
    let neighborhoods: Vec<Value> = graph.neighborhoods().iter().map(|&n| sectors_to_json(n)).collect();
    Ok(match tropical_membership(&instance.target, config)? {
        Membership::Inside { coefficients } => Output::report(
            Status::Inside,
            json!({
                "coefficients": scalars_to_json(&coefficients),
                "elements": set_to_json(ground.full(), ground),
                "neighborhoods": neighborhoods,
            }),
        ),
        Membership::Outside { sector } => {
            Output::report(Status::Outside, json!({ "sector": sector, "neighborhoods": neighborhoods }))
        }
    })
}

fn outcome(outcome: ColorfulOutcome, ground: &GroundSet, trace: bool) -> Output {
    match outcome {
        ColorfulOutcome::Found(found) => {
            let mut payload = json!({
                "basis": set_to_json(found.basis, ground),
                "coefficients": scalars_to_json(&found.coefficients),
                "steps": found.trace.len(),
                "via_fallback": found.via_fallback,
            });
            if trace {
                payload["trace"] = trace_to_json(&found.trace, ground);
            }
            Output::report(Status::Found, payload)
        }
        ColorfulOutcome::NotFound { violation } => {
            Output::report(Status::NotFound, json!({ "violation": violation.map(|v| violation_to_json(&v, ground)) }))
        }
    }
}

pub fn colorful(input: &Value, pin: Option<&str>, trace: bool) -> Result<Output> {
    let (matroid, instance) = parse_tropical_instance(input)?;
    let pin = resolve_pin(&matroid, pin)?;
    let config = instance.centered()?;
    Ok(outcome(colorful_basis(&matroid, &config, pin)?, matroid.ground(), trace))
}

pub fn verify_condition(input: &Value) -> Result<Output> {
    let (matroid, instance) = parse_tropical_instance(input)?;
    let report = verify_bc_condition(&matroid, &instance.centered()?)?;
    Ok(condition(&report, matroid.ground()))
}

pub fn two_cocircuit(input: &Value, check: bool, trace: bool) -> Result<Output> {
    let (matroid, instance) = parse_tropical_instance(input)?;
    let config = instance.centered()?;
    if check {
        let report = verify_two_cocircuit_condition(&matroid, &config)?;
        return Ok(condition(&report, matroid.ground()));
    }
    Ok(outcome(colorful_basis_two_cocircuit(&matroid, &config)?, matroid.ground(), trace))
}

pub fn km_verify(input: &Value, corank2: bool) -> Result<Output> {
    let (matroid, config) = parse_rational_instance(input)?;
    let report =
        if corank2 { verify_corank2_condition(&matroid, &config)? } else { verify_km_condition(&matroid, &config)? };
    Ok(condition(&report, matroid.ground()))
}

pub fn km_basis(input: &Value, pin: Option<&str>) -> Result<Output> {
    let (matroid, config) = parse_rational_instance(input)?;
    let pin = resolve_pin(&matroid, pin)?;
    let ground = matroid.ground();
    Ok(match find_km_basis(&matroid, &config, pin)? {
        Some(found) => Output::report(
            Status::Found,
            json!({
                "basis": set_to_json(found.basis, ground),
                "certificate": {
                    "support": found.certificate.support.iter().map(|&e| element_to_json(e, ground)).collect::<Vec<_>>(),
                    "weights": rationals_to_json(&found.certificate.weights),
                },
            }),
        ),
        None => {
            let violation = verify_km_condition(&matroid, &config)?.violation().map(|v| violation_to_json(v, ground));
            Output::report(Status::NotFound, json!({ "violation": violation }))
        }
    })
}

pub fn clp_solve(input: &Value) -> Result<Output> {
    let instance = parse_clp(input)?;
    // A class without columns admits no colorful support.
    if let Some(c) = instance.classes.iter().position(Vec::is_empty) {
        if instance.classes.iter().flatten().all(|&j| j < instance.matrix.cols()) {
            return Ok(Output::report(Status::Infeasible, json!({ "empty_class": c })));
        }
    }
    Ok(match solve_clp(&instance)? {
        Some(solution) => {
            Output::report(Status::Feasible, json!({ "x": scalars_to_json(&solution.x), "support": solution.support }))
        }
        None => Output::report(Status::Infeasible, json!({})),
    })
}

pub fn clp_from_3dm(input: &Value) -> Result<Output> {
    let instance = parse_3dm(input)?;
    Ok(Output::Document(clp_to_json(&from_3dm(&instance))))
}

pub fn horn_solve(input: &Value) -> Result<Output> {
    let system = parse_horn(input)?;
    let clauses = to_dual_horn(&system).len();
    Ok(match solve_zero_inf(&system) {
        Some(x) => Output::report(Status::Feasible, json!({ "x": scalars_to_json(&x), "clauses": clauses })),
        None => Output::report(Status::Infeasible, json!({ "clauses": clauses })),
    })
}

pub fn realize(input: &Value) -> Result<Output> {
    let complex = parse_complex(input)?;
    Ok(Output::Document(tropical_configuration_to_json(&realize_complex(&complex)?, None)))
}

pub fn support(input: &Value) -> Result<Output> {
    let instance = parse_tropical_configuration(input)?;
    Ok(Output::Document(complex_to_json(&support_complex(&instance.configuration, &instance.target)?)))
}

pub fn matroid_info(input: &Value) -> Result<Output> {
    let matroid = parse_matroid(input, None)?;
    let ground = matroid.ground();
    let sets = |sets: Vec<ElementSet>| sets.into_iter().map(|s| set_to_json(s, ground)).collect::<Vec<_>>();
    Ok(Output::report(
        Status::Ok,
        json!({
            "matroid": matroid_to_json(&matroid),
            "n": matroid.len(),
            "rank": matroid.full_rank(),
            "bases": sets(matroid.bases()),
            "loops": set_to_json(matroid.loops(), ground),
            "cocircuits": sets(matroid.cocircuits()),
            "dual_rank": matroid.dual().full_rank(),
        }),
    ))
}

pub fn clutter_check(input: &Value) -> Result<Output> {
    let Some(n) = input.get("n").and_then(Value::as_u64) else {
        bail!("missing integer field \"n\"");
    };
    let Some(sets) = input.get("sets").and_then(Value::as_array) else {
        bail!("missing array field \"sets\"");
    };
    let n = n as usize;
    let ground = GroundSet::new(n)?;
    let mut members = Vec::with_capacity(sets.len());
    for set in sets {
        let Some(elements) = set.as_array() else {
            bail!("each member of \"sets\" must be an array of indices");
        };
        let mut member = ElementSet::empty();
        for e in elements {
            let Some(e) = e.as_u64() else {
                bail!("element {e} is not an index");
            };
            ground.check_element(e as usize)?;
            member = member.with(e as usize);
        }
        members.push(member);
    }
    let clutter = Clutter::new(n, members)?;
    let check = clutter.is_matroid_basis_clutter();
    let list = |c: &Clutter| c.members().iter().map(|&s| set_to_json(s, &ground)).collect::<Vec<_>>();
    let payload = json!({
        "members": list(&clutter),
        "blocker": list(&clutter.blocker()),
        "is_matroid": check.is_matroid(),
        "blocker_says_matroid": check.blocker_says_matroid(),
        "exchange_violation": check.exchange.map(|v| json!({
            "first": set_to_json(v.first, &ground),
            "second": set_to_json(v.second, &ground),
            "element": v.element,
        })),
        "blocker_violation": check.blocker_criterion.map(|v| json!({
            "member": set_to_json(v.member, &ground),
            "blocker_member": set_to_json(v.blocker_member, &ground),
            "element": v.element,
        })),
    });
    let status = if check.is_matroid() { Status::Ok } else { Status::Violated };
    Ok(Output::report(status, payload))
}

fn family(family: Family) -> MatroidFamily {
    match family {
        Family::Partition => MatroidFamily::Partition,
        Family::Uniform => MatroidFamily::Uniform,
        Family::Graphic => MatroidFamily::Graphic,
        Family::Explicit => MatroidFamily::Explicit,
        Family::Truncation => MatroidFamily::Truncation,
    }
}

pub fn generate(args: &GenArgs) -> Result<Output> {
    if !(0.0..=1.0).contains(&args.neg_inf) {
        bail!("--neg-inf must lie in [0, 1], got {}", args.neg_inf);
    }
    if args.range < 0 {
        bail!("--range must be nonnegative, got {}", args.range);
    }
    let mut rng = rng_from_seed(args.seed);
    let document = match args.kind {
        GenKind::Random3dm => three_dm_to_json(&random_3dm(&mut rng, args.k, args.edges)?),
        GenKind::RandomClp => clp_to_json(&random_clp(&mut rng, args.rows, args.n, args.r, args.range, args.neg_inf)?),
        GenKind::RandomConfig => {
            let matroid = random_matroid(&mut rng, args.n, family(args.family))?;
            let config = random_tropical_configuration(&mut rng, args.n, args.d, args.range, args.neg_inf)?;
            json!({
                "matroid": matroid_to_json(&matroid),
                "configuration": tropical_configuration_to_json(&config, None),
            })
        }
        GenKind::Fig1 => figure1_json(),
        GenKind::Fig2 => figure2_json(),
    };
    Ok(Output::Document(document))
}

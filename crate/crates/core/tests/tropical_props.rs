use proptest::prelude::*;
use tropmat_core::generate::{random_complex, random_scalar, random_tropical_configuration, rng_from_seed};
use tropmat_core::tropical::{
    eval_combination, is_valid_certificate, realize_complex, sector_neighbors, support_complex, tropical_membership,
    Membership, TropicalConfiguration, TropicalScalar,
};
use tropmat_core::{Error, Rational};
use tropmat_testkit as oracle;

fn config(seed: u64, max_n: usize, max_d: usize) -> TropicalConfiguration {
    let mut rng = rng_from_seed(seed);
    let n = (seed % (max_n as u64 + 1)) as usize;
    let d = (seed / 16 % max_d as u64) as usize + 1;
    random_tropical_configuration(&mut rng, n, d, 3, 0.3).unwrap()
}

fn finite_target(seed: u64, d: usize) -> Vec<TropicalScalar> {
    let mut rng = rng_from_seed(seed ^ 0x5eed);
    (0..d).map(|_| random_scalar(&mut rng, 2, 0.0)).collect()
}

fn finite(target: &[TropicalScalar]) -> Vec<Rational> {
    target.iter().map(|t| t.as_finite().unwrap().clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sectors_match_direct_comparison(seed in any::<u64>()) {
        let c = config(seed, 6, 4);
        let p = finite_target(seed, c.dimension());
        let zero = vec![TropicalScalar::zero(); c.dimension()];
        let shifted = c.translated(&p).unwrap();
        for e in 0..c.len() {
            let n = sector_neighbors(c.point(e), &p).unwrap();
            prop_assert!(!n.is_empty());
            prop_assert_eq!(n.to_vec(), oracle::sectors(c.point(e), &finite(&p)));
            prop_assert_eq!(n, sector_neighbors(shifted.point(e), &zero).unwrap());
        }
    }

    #[test]
    fn membership_agrees_with_residuation(seed in any::<u64>()) {
        let c = config(seed, 6, 3);
        let p = finite_target(seed, c.dimension());
        let fp = finite(&p);
        let verdict = tropical_membership(&p, &c).unwrap();
        prop_assert_eq!(verdict.is_inside(), oracle::tropical_hull_contains(&c, c.ground().full(), &fp));
        match verdict {
            Membership::Inside { coefficients } => {
                prop_assert!(is_valid_certificate(&coefficients, &c, &p));
                prop_assert_eq!(eval_combination(&coefficients, &c).unwrap(), p);
            }
            Membership::Outside { sector } => {
                prop_assert!((0..c.len()).all(|e| !oracle::sectors(c.point(e), &fp).contains(&sector)));
                if c.len() <= 4 {
                    let grid = [TropicalScalar::NegInf, TropicalScalar::int(-1), TropicalScalar::zero()];
                    let mut lambda = vec![0usize; c.len()];
                    loop {
                        let coeffs: Vec<_> = lambda.iter().map(|&i| grid[i].clone()).collect();
                        prop_assert!(!is_valid_certificate(&coeffs, &c, &p));
                        let Some(pos) = lambda.iter().rposition(|&i| i + 1 < grid.len()) else { break };
                        lambda[pos] += 1;
                        for later in &mut lambda[pos + 1..] {
                            *later = 0;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_homogeneous_generators_span_the_same_cone(seed in any::<u64>()) {
        // Lift v_j to (v_j, 0) and scale to (v_j + mu_j, mu_j). The target
        // (p, 0) is a max-plus combination of the scaled lifts, without any
        // normalisation of the coefficients, iff p lies in the hull of V.
        let c = config(seed, 6, 3);
        let p = finite_target(seed, c.dimension());
        let fp = finite(&p);
        let mut rng = rng_from_seed(seed.rotate_left(7));
        let factors: Vec<Rational> =
            (0..c.len()).map(|_| random_scalar(&mut rng, 3, 0.0).as_finite().unwrap().clone()).collect();
        let mut goal: Vec<TropicalScalar> = p.clone();
        goal.push(TropicalScalar::zero());
        let lifts: Vec<Vec<TropicalScalar>> = (0..c.len())
            .map(|e| {
                let mu = TropicalScalar::Finite(factors[e].clone());
                let mut v: Vec<_> = c.point(e).iter().map(|x| x.otimes(&mu)).collect();
                v.push(mu);
                v
            })
            .collect();
        let mut combination = vec![TropicalScalar::NegInf; goal.len()];
        for v in &lifts {
            let lambda = v
                .iter()
                .zip(&goal)
                .filter_map(|(x, g)| x.as_finite().map(|x| g.as_finite().unwrap() - x))
                .min()
                .unwrap();
            for (acc, x) in combination.iter_mut().zip(v) {
                let term = x.otimes(&TropicalScalar::Finite(lambda.clone()));
                if term > *acc {
                    *acc = term;
                }
            }
        }
        prop_assert_eq!(combination == goal, tropical_membership(&p, &c).unwrap().is_inside());
        prop_assert_eq!(combination == goal, oracle::tropical_hull_contains(&c, c.ground().full(), &fp));
    }

    #[test]
    fn complexes_round_trip(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let n = (seed % 8) as usize;
        let complex = random_complex(&mut rng, n, 6).unwrap();
        let in_all = (0..n).find(|&e| complex.facets().iter().all(|f| f.contains(e)));
        match realize_complex(&complex) {
            Ok(c) => {
                prop_assert!(in_all.is_none());
                let zero = vec![TropicalScalar::zero(); c.dimension()];
                prop_assert_eq!(support_complex(&c, &zero).unwrap(), complex);
            }
            Err(Error::ElementInAllFacets(e)) => prop_assert_eq!(Some(e), in_all),
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }
}

#[test]
fn affine_scaling_can_change_membership() {
    let c = TropicalConfiguration::from_ints(1, &[&[Some(1)]]).unwrap();
    let p = [TropicalScalar::int(1)];
    assert!(tropical_membership(&p, &c).unwrap().is_inside());
    let scaled = c.scaled(&[Rational::from_integer(1.into())]).unwrap();
    assert!(!tropical_membership(&p, &scaled).unwrap().is_inside());
}

#[test]
fn support_complex_faces_miss_the_target() {
    for seed in 0..200u64 {
        let c = config(seed, 6, 3);
        let zero = vec![TropicalScalar::zero(); c.dimension()];
        let complex = support_complex(&c, &zero).unwrap();
        for s in c.ground().full().subsets() {
            let inside = oracle::tropical_hull_contains(&c, s, &oracle::origin(c.dimension()));
            assert_ne!(complex.contains(s), inside, "seed {seed}: faces are exactly the sets whose hull misses 0");
        }
    }
}

//! Seeded random ideal generation for the corpus experiments.

use crate::field::FieldSpec;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Ranges for the sparse homogeneous generator.
#[derive(Clone, Debug)]
pub struct RandomIdealParams {
    pub field: FieldSpec,
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_degree: u32,
    pub min_terms: usize,
    pub max_terms: usize,
    pub homogeneous: bool,
}

impl Default for RandomIdealParams {
    fn default() -> Self {
        RandomIdealParams {
            field: FieldSpec::Prime(32003),
            max_vars: 4,
            max_gens: 3,
            max_degree: 3,
            min_terms: 2,
            max_terms: 4,
            homogeneous: true,
        }
    }
}

/// One seeded instance: the variable count and the generator list.
/// Identical seeds and parameters produce identical instances.
pub fn random_ideal(
    seed: u64,
    params: &RandomIdealParams,
    ord: &MonomialOrder,
) -> (usize, Vec<Polynomial>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = rng.gen_range(2..=params.max_vars);
    let ngens = rng.gen_range(2..=params.max_gens);
    let mut gens = Vec::with_capacity(ngens);
    while gens.len() < ngens {
        let degree = rng.gen_range(1..=params.max_degree);
        let nterms = rng.gen_range(params.min_terms..=params.max_terms);
        let mut monos: Vec<Monomial> = Vec::new();
        let mut guard = 0;
        while monos.len() < nterms && guard < 200 {
            guard += 1;
            let deg = if params.homogeneous {
                degree
            } else {
                rng.gen_range(0..=degree)
            };
            let m = random_monomial(&mut rng, nvars, deg);
            if !monos.contains(&m) {
                monos.push(m);
            }
        }
        let terms: Vec<Term> = monos
            .into_iter()
            .map(|mono| {
                let c = match params.field {
                    FieldSpec::Prime(p) => params.field.from_i64(rng.gen_range(1..p as i64)),
                    FieldSpec::Rational => params.field.from_i64(rng.gen_range(1..100)),
                };
                Term { coeff: c, mono }
            })
            .collect();
        let p = Polynomial::from_terms(terms, ord);
        if !p.is_zero() {
            gens.push(p);
        }
    }
    (nvars, gens)
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let ord = MonomialOrder::GrevLex;
        let params = RandomIdealParams::default();
        let a = random_ideal(42, &params, &ord);
        let b = random_ideal(42, &params, &ord);
        assert_eq!(a, b);
        let c = random_ideal(43, &params, &ord);
        assert!(a != c || a.0 == c.0); // different seeds usually differ
    }

    #[test]
    fn homogeneous_instances_are_homogeneous() {
        let ord = MonomialOrder::GrevLex;
        let params = RandomIdealParams::default();
        for seed in 0..50 {
            let (_, gens) = random_ideal(seed, &params, &ord);
            assert!(!gens.is_empty());
            for g in gens {
                assert!(g.is_homogeneous());
                assert!(!g.is_zero());
            }
        }
    }
}

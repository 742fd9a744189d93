use sigbasis::engine::{self, RunOptions, StrategyBundle};
use sigbasis::random::{random_ideal, RandomIdealParams};
use sigbasis::verify::{buchberger, leading_ideal_equal};
use sigbasis::{MonomialOrder, SignatureOrder};

fn main() {
    let ord = MonomialOrder::GrevLex;
    let mut failures = 0;
    // homogeneous sweep, all bundles, plus parameterized orders for ef5
    let params = RandomIdealParams::default();
    for seed in 0..500u64 {
        let (nvars, gens) = random_ideal(seed, &params, &ord);
        let oracle = buchberger(&gens, &ord);
        let pot = SignatureOrder::pot(ord.clone());
        for name in ["f5", "ef5", "gvw", "mj"] {
            let bundle = StrategyBundle::by_name(name).unwrap();
            let r = engine::run(&bundle, &gens, nvars, &ord, &pot, &RunOptions::default()).unwrap();
            if !r.stats.terminated || !leading_ideal_equal(&r.basis(), &oracle, &ord) {
                eprintln!("FAIL seed {} bundle {}", seed, name);
                failures += 1;
            }
        }
        for sord in [
            SignatureOrder::schreyer(ord.clone(), &gens).unwrap(),
            SignatureOrder::schreyer_paper_literal(ord.clone(), &gens).unwrap(),
            SignatureOrder::degree_first(ord.clone(), &gens).unwrap(),
        ] {
            let r = engine::run(
                &StrategyBundle::ef5(),
                &gens,
                nvars,
                &ord,
                &sord,
                &RunOptions::default(),
            )
            .unwrap();
            if !r.stats.terminated || !leading_ideal_equal(&r.basis(), &oracle, &ord) {
                eprintln!("FAIL seed {} ef5 parameterized", seed);
                failures += 1;
            }
        }
        // regular reductions must match top reductions observably
        let reg = RunOptions {
            regular_reductions: true,
            ..RunOptions::default()
        };
        let top_run = engine::run(
            &StrategyBundle::gvw(),
            &gens,
            nvars,
            &ord,
            &pot,
            &RunOptions::default(),
        )
        .unwrap();
        let reg_run = engine::run(&StrategyBundle::gvw(), &gens, nvars, &ord, &pot, &reg).unwrap();
        if top_run.reduced_signatures() != reg_run.reduced_signatures() {
            eprintln!("FAIL seed {} regular/top divergence", seed);
            failures += 1;
        }
    }
    // inhomogeneous sweep for gvw/mj with module tracking
    let inhom = RandomIdealParams {
        homogeneous: false,
        ..RandomIdealParams::default()
    };
    let opts = RunOptions {
        track_module: true,
        ..RunOptions::default()
    };
    for seed in 1000..1300u64 {
        let (nvars, gens) = random_ideal(seed, &inhom, &ord);
        let oracle = buchberger(&gens, &ord);
        let pot = SignatureOrder::pot(ord.clone());
        for name in ["gvw", "mj"] {
            let bundle = StrategyBundle::by_name(name).unwrap();
            let r = engine::run(&bundle, &gens, nvars, &ord, &pot, &opts).unwrap();
            if !r.stats.terminated || !leading_ideal_equal(&r.basis(), &oracle, &ord) {
                eprintln!("FAIL inhom seed {} bundle {}", seed, name);
                failures += 1;
            }
            for p in &r.done {
                let pd = sigbasis::pair::PairData {
                    sig: p.sig.clone(),
                    sig_coeff: p.sig_coeff.clone(),
                    v: p.poly.clone(),
                    u_full: p.u_full.clone(),
                    initial: p.initial,
                };
                if !sigbasis::pair::check_pair_invariant(&pd, &gens, &ord, &pot) {
                    eprintln!("FAIL inhom seed {} bundle {} module invariant", seed, name);
                    failures += 1;
                }
            }
        }
    }
    println!("stress complete: {} failures", failures);
}

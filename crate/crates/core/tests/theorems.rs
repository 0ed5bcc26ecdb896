use localturan::bounds::{property_p_check, BoundContext, BoundId};
use localturan::clique::clique_profile;
use localturan::enumerate::{enumerate_up_to, verify_corpus, CorpusMode, RandomModel, VerifyOptions};
use localturan::numeric::ksum;

#[test]
fn random_unweighted_graphs_respect_every_bound() {
    let mode = CorpusMode::Random { count: 1000, n_min: 8, model: RandomModel::Gnp { p: 0.5 }, seed: 3 };
    let r = verify_corpus(16, mode, &VerifyOptions::default()).unwrap();
    assert_eq!(r.graphs_checked, 1000);
    assert!(r.is_clean(), "{}", r.summary_table());
    // χ is only computed up to 10 vertices.
    let ee = r.tally(BoundId::EdwardsElphickW).applicable;
    assert!(ee > 0 && ee < 1000);
}

#[test]
fn random_corpus_runs_are_reproducible() {
    let mode = CorpusMode::Random {
        count: 50,
        n_min: 5,
        model: RandomModel::WeightedGnp { p: 0.4, low: 0.1, high: 2.0, signed: true },
        seed: 17,
    };
    let opts = VerifyOptions { certify: true, ..VerifyOptions::default() };
    let a = verify_corpus(12, mode, &opts).unwrap();
    let b = verify_corpus(12, mode, &opts).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn property_p_gives_half_n() {
    let mut seen = 0;
    for g in enumerate_up_to(7).unwrap() {
        if g.min_degree() == Some(0) || !property_p_check(&g) {
            continue;
        }
        seen += 1;
        let total = ksum(clique_profile(&g).cl_e.iter().map(|&(_, _, c)| 1.0 / c as f64));
        assert!(total >= g.n() as f64 / 2.0 - 1e-12, "{}", localturan::graph::to_graph6(&g));
    }
    assert!(seen > 0);
}

#[test]
fn unit_main_bound_matches_local_edge() {
    for g in enumerate_up_to(6).unwrap() {
        let ctx = BoundContext::new(&g).unwrap();
        let (a, b) = (ctx.main_weighted(), ctx.local_edge());
        assert!((a.rhs - b.rhs).abs() <= 1e-12);
        assert_eq!(a.equality, b.equality);
    }
}

#[test]
fn msopt_checks_inside_corpus_runs() {
    let opts = VerifyOptions { msopt: Some(Default::default()), ..VerifyOptions::only([BoundId::MainWeighted]) };
    let r = verify_corpus(5, CorpusMode::Exhaustive, &opts).unwrap();
    assert!(r.is_clean(), "{}", r.summary_table());
    assert!(r.tally(BoundId::MainWeighted).applicable == 52);
    assert!(r.per_bound.contains_key("MSOPT_VERTEX"));
}

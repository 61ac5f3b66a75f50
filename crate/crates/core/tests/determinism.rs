use normgraph::experiments::{
    jq_suite, layered_growth_experiment, lemma1_suite, outsection_suite, partial_cover_suite, transversal_suite,
    EdgeProbability, ExperimentConfig, JqConfig, LayeredConfig, Lemma1Params, Lemma1Part, OutsectionConfig,
    PartialCoverConfig, WindowTolerance,
};

fn reports() -> Vec<String> {
    let gnp = ExperimentConfig {
        seed: 4,
        n: 3000,
        edge: EdgeProbability::Exponent(0.9),
        trials: 6,
    };
    let mut layered = LayeredConfig::scaled(4, 6000, 5);
    layered.block_size = Some(40);
    layered.layers = 4;
    vec![
        serde_json::to_string(&lemma1_suite(&gnp, &Lemma1Params::default(), &Lemma1Part::ALL)).unwrap(),
        serde_json::to_string(&transversal_suite(&gnp, 7).unwrap()).unwrap(),
        serde_json::to_string(
            &partial_cover_suite(&PartialCoverConfig {
                seed: 4,
                a: 300,
                b: 300,
                p: 0.1,
                trials: 8,
                tolerance: WindowTolerance::default(),
                ceiling: 0.01,
            })
            .unwrap(),
        )
        .unwrap(),
        serde_json::to_string(&outsection_suite(&OutsectionConfig::new(4, 3, 12, 40)).unwrap()).unwrap(),
        serde_json::to_string(&jq_suite(&JqConfig::scaled(4, 8000, 5)).unwrap()).unwrap(),
        serde_json::to_string(&layered_growth_experiment(&layered).unwrap()).unwrap(),
    ]
}

fn in_pool(threads: usize) -> Vec<String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(reports)
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let one = in_pool(1);
    let four = in_pool(4);
    assert_eq!(one, four);
    assert_eq!(one, reports());
}

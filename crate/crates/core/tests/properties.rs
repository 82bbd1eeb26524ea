mod common;
mod oracles;

use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn core_relocation_matches_layout_walker() {
    let mut rng = StdRng::seed_from_u64(0xc0de);
    let mut leaves = 0;
    for i in 0..50 {
        let case = common::random_core_case(&mut rng);
        leaves += common::check_core_case(&case, &mut rng).unwrap_or_else(|e| panic!("case {i}: {e}"));
    }
    assert!(leaves >= 100);
}

#[test]
fn alu_matches_reference_evaluator() {
    let mut rng = StdRng::seed_from_u64(0xa1);
    for _ in 0..1000 {
        let p = common::random_alu_program(&mut rng, 64);
        assert!(p.len() <= 64);
        common::check_alu_program(&p).unwrap();
    }
}

#[test]
fn ring_matches_queue_model() {
    for (seed, size) in [(1, 64), (2, 256), (3, 4096)] {
        let mut rng = StdRng::seed_from_u64(seed);
        common::ring_model_replay(&mut rng, 10_000, size).unwrap();
    }
}

#[test]
fn ring_spsc_exactly_once_in_order() {
    assert_eq!(common::ring_spsc_stress(100_000).unwrap(), 100_000);
}

#[test]
fn parsers_survive_mutation() {
    let limit = std::time::Duration::from_secs(1);
    let objects = common::object_seeds();
    let stats = common::parser_campaign(&objects, 10_000, 0xf0, limit, wbpf_core::parse_object).unwrap();
    assert!(stats.rejected > 0 && stats.accepted > 0, "{stats:?}");
    let btf = common::btf_seeds();
    let stats = common::parser_campaign(&btf, 10_000, 0xf1, limit, common::parse_btf_deep).unwrap();
    assert!(stats.rejected > 0 && stats.accepted > 0, "{stats:?}");
}

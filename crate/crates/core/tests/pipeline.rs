use svp_core::bdd::{bddp_preprocess, bddp_query, BddConfig, BddpAdvice};
use svp_core::enumeration::{enum_svp, svp_candidates};
use svp_core::lattice::{gen_lattice, io, lll_reduce, Basis, LatticeKind};
use svp_core::oracle::brute_force_svp;
use svp_core::quantum::{qsvp, FixedLayout};
use svp_core::Error;

#[test]
fn knapsack_lattices_solve() {
    for seed in 0..3 {
        let b = gen_lattice(LatticeKind::Knapsack { bits: 10 }, 4, seed);
        let r = enum_svp(&b, &BddConfig::for_dim(4), seed).unwrap();
        assert_eq!(r.norm_sq, brute_force_svp(&b).unwrap().norm_sq());
    }
}

#[test]
fn text_file_to_answer() {
    let text = "# 3x3\n3\n7 0 0\n0 7 0\n0 0 7\n";
    let b = io::parse_basis(text).unwrap();
    assert_eq!(enum_svp(&b, &BddConfig::for_dim(3), 0).unwrap().norm_sq, 49);
    assert_eq!(io::parse_basis(&io::to_text(&b)).unwrap(), b);
}

#[test]
fn advice_reloads_for_separate_queries() {
    let b = gen_lattice(LatticeKind::Uniform { bits: 8 }, 4, 11);
    let a = bddp_preprocess(&b, &BddConfig::for_dim(4), 3).unwrap();
    let json = serde_json::to_string(&a).unwrap();
    let reloaded: BddpAdvice = serde_json::from_str(&json).unwrap();
    let before: Vec<_> = svp_candidates(&a).into_iter().map(|r| r.ok()).collect();
    let after: Vec<_> = svp_candidates(&reloaded).into_iter().map(|r| r.ok()).collect();
    assert_eq!(before, after);
}

#[test]
fn classical_and_quantum_agree() {
    for seed in 0..4 {
        let n = 3 + seed as usize % 3;
        let b = gen_lattice(LatticeKind::Uniform { bits: 8 }, n, 40 + seed);
        let cfg = BddConfig::for_dim(n);
        let c = enum_svp(&b, &cfg, seed).unwrap();
        let q = qsvp(&b, &cfg, 10, FixedLayout::default(), seed).unwrap();
        assert_eq!(c.norm_sq, q.result.norm_sq);
    }
}

#[test]
fn unreduced_input_is_reduced_first() {
    let b = Basis::new(vec![vec![100, 1], vec![101, 1]]).unwrap();
    let a = bddp_preprocess(&b, &BddConfig::for_dim(2), 0).unwrap();
    assert_eq!(a.basis(), &lll_reduce(&b, 0.99).unwrap());
    assert_eq!(bddp_query(&a, &[0.2, 0.9]).unwrap().coords, vec![0, 1]);
}

#[test]
fn wrong_target_length() {
    let a = bddp_preprocess(&Basis::identity(2), &BddConfig::for_dim(2), 0).unwrap();
    assert!(matches!(bddp_query(&a, &[0.0]), Err(Error::Shape(_))));
}

use hadaut_core::canon::{
    canonical_form, canonical_form_with, design_certificate, group_order, hadamard_certificate, is_automorphism,
    ColoredGraph, VertexInvariant,
};
use hadaut_core::construct::{hadamard_from_quadruple, incidence_matrix, Monomial};
use hadaut_core::search::{enumerate_quadruples, ReductionPolicy};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, colors: u32, density: f64, rng: &mut ChaCha8Rng) -> ColoredGraph {
    let mut g = ColoredGraph::new((0..n).map(|_| rng.gen_range(0..colors)).collect());
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    p.shuffle(rng);
    p
}

/// Counts automorphisms by running through every permutation.
fn brute_aut(g: &ColoredGraph) -> u64 {
    fn go(g: &ColoredGraph, perm: &mut Vec<u32>, used: &mut [bool]) -> u64 {
        let v = perm.len();
        if v == g.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for x in 0..g.vertex_count() {
            if used[x] || g.color(x) != g.color(v) {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(perm[u] as usize, x));
            if ok {
                used[x] = true;
                perm.push(x as u32);
                total += go(g, perm, used);
                perm.pop();
                used[x] = false;
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.vertex_count()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn aut_order_matches_bruteforce(seed in any::<u64>(), n in 1usize..=8, colors in 1u32..=3, d in 0.1f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, colors, d, &mut rng);
        let cert = canonical_form(&g);
        prop_assert_eq!(cert.aut_order.clone(), BigUint::from(brute_aut(&g)));
        for gen in &cert.generators {
            prop_assert!(is_automorphism(&g, gen));
        }
        prop_assert_eq!(group_order(n, &cert.generators), cert.aut_order);
    }

    #[test]
    fn fingerprint_is_relabeling_invariant(seed in any::<u64>(), n in 1usize..=24, colors in 1u32..=3, d in 0.05f64..0.95) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, colors, d, &mut rng);
        let base = canonical_form(&g);
        let inv = canonical_form_with(&g, VertexInvariant::CommonNeighbours(3));
        for _ in 0..5 {
            let h = g.relabel(&random_perm(n, &mut rng));
            let c = canonical_form(&h);
            prop_assert_eq!(&c.fingerprint, &base.fingerprint);
            prop_assert_eq!(&c.aut_order, &base.aut_order);
            prop_assert_eq!(&canonical_form_with(&h, VertexInvariant::CommonNeighbours(3)).fingerprint, &inv.fingerprint);
        }
    }

    #[test]
    fn canonical_ordering_reproduces_fingerprint(seed in any::<u64>(), n in 1usize..=16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, 2, 0.4, &mut rng);
        let cert = canonical_form(&g);
        // Placing `ordering[i]` at position `i` gives the canonical graph itself.
        let mut perm = vec![0u32; n];
        for (i, &v) in cert.ordering.iter().enumerate() {
            perm[v as usize] = i as u32;
        }
        let canon = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&canon).fingerprint, cert.fingerprint);
    }
}

#[test]
fn design_fingerprints_survive_100_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for q in enumerate_quadruples(7, ReductionPolicy::FULL).unwrap() {
        let d = incidence_matrix(&q).unwrap();
        let base = design_certificate(&d);
        for _ in 0..100 {
            let mut bp: Vec<usize> = (0..d.blocks()).collect();
            let mut pp: Vec<usize> = (0..d.points()).collect();
            bp.shuffle(&mut rng);
            pp.shuffle(&mut rng);
            let c = design_certificate(&d.relabel(&bp, &pp));
            assert_eq!(c.fingerprint, base.fingerprint);
            assert_eq!(c.aut_order, base.aut_order);
        }
    }
}

#[test]
fn hadamard_certificate_is_monomial_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let monomial = |n: usize, rng: &mut ChaCha8Rng| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        Monomial { perm, signs: (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect() }
    };
    for q in enumerate_quadruples(11, ReductionPolicy::FULL).unwrap() {
        let h = hadamard_from_quadruple(&q).unwrap();
        let base = hadamard_certificate(&h);
        for _ in 0..20 {
            let n = h.order();
            let k = h.transform(&monomial(n, &mut rng), &monomial(n, &mut rng));
            let c = hadamard_certificate(&k);
            assert_eq!(c.fingerprint, base.fingerprint);
            assert_eq!(c.aut_order, base.aut_order);
        }
        assert_eq!(hadamard_certificate(&h.transpose()).aut_order, base.aut_order);
    }
}

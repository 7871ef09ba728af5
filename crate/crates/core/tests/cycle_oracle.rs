//! The closed `h⁰` formula against the brute-force kernel computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use twistor_core::cycle::{
    euler_char_cycle, h0_formula, h0_oracle, h0_with_gluing, CycleLineBundle, NodePlacement,
};

fn q(p: i64, r: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(r))
}

fn uniform(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

fn nonzero(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let p = uniform(rng, -9, 9);
        if p != 0 {
            return q(p, uniform(rng, 1, 9));
        }
    }
}

/// Degree lists with `3 ≤ m ≤ 10`, `|lᵢ| ≤ 4` satisfying the formula's
/// hypotheses, drawn by rejection.
fn hypothesis_cycles(seed: u64, count: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let m = uniform(&mut rng, 3, 10) as usize;
        let d: Vec<i64> = (0..m).map(|_| uniform(&mut rng, -4, 4)).collect();
        if h0_formula(&CycleLineBundle::new(d.clone()).unwrap()).is_ok() {
            out.push(d);
        }
    }
    out
}

#[test]
fn formula_equals_oracle_on_seeded_cycles() {
    let cycles = hypothesis_cycles(20240601, 200);
    for (k, d) in cycles.iter().enumerate() {
        let b = CycleLineBundle::new(d.clone()).unwrap();
        let formula = h0_formula(&b).unwrap();
        let oracle = h0_oracle(&b, k as u64).unwrap();
        assert_eq!(formula, oracle.h0, "{d:?}");
        assert!(oracle.draws_agree(), "{d:?}: {:?}", oracle.draws);
    }
}

#[test]
fn worked_examples() {
    for (d, h) in [
        (vec![1, -1, 1, -1], 0),
        (vec![2, -2, 2, -2], 2),
        (vec![0, -2, 0, 2, 0, -2, 0, 2], 2),
    ] {
        let b = CycleLineBundle::new(d.clone()).unwrap();
        assert_eq!(h0_formula(&b), Ok(h), "{d:?}");
        assert_eq!(h0_oracle(&b, 7).unwrap().h0, h, "{d:?}");
    }
}

#[test]
fn arbitrary_node_placement() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for d in hypothesis_cycles(5, 60) {
        let m = d.len();
        let placement: Vec<NodePlacement> = (0..m)
            .map(|_| loop {
                let p = NodePlacement {
                    incoming: (nonzero(&mut rng), nonzero(&mut rng)),
                    outgoing: (nonzero(&mut rng), nonzero(&mut rng)),
                };
                let (a, b) = &p.incoming;
                let (c, e) = &p.outgoing;
                if a * e != b * c {
                    break p;
                }
            })
            .collect();
        let gluing: Vec<BigRational> = (0..m).map(|_| nonzero(&mut rng)).collect();
        let formula = h0_formula(&CycleLineBundle::new(d.clone()).unwrap()).unwrap();
        assert_eq!(h0_with_gluing(&d, &gluing, &placement), Ok(formula), "{d:?}");
    }
}

#[test]
fn all_positive_degrees_have_no_h1() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let m = uniform(&mut rng, 2, 8) as usize;
        let d: Vec<i64> = (0..m).map(|_| uniform(&mut rng, 1, 4)).collect();
        let b = CycleLineBundle::new(d.clone()).unwrap();
        let h = h0_oracle(&b, rng.next_u64()).unwrap().h0;
        assert_eq!(h as i64, d.iter().sum::<i64>(), "{d:?}");
    }
}

#[test]
fn degree_zero_monodromy() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let standard = |m| vec![NodePlacement::standard(); m];
    for _ in 0..100 {
        let m = uniform(&mut rng, 2, 7) as usize;
        let mut g: Vec<BigRational> = (0..m).map(|_| nonzero(&mut rng)).collect();
        let product: BigRational = g.iter().fold(BigRational::one(), |a, x| a * x);
        let expected = u64::from(product.is_one());
        assert_eq!(h0_with_gluing(&vec![0; m], &g, &standard(m)), Ok(expected));
        // Rescale the last node so the product is exactly one.
        let last = g[m - 1].clone() / &product;
        g[m - 1] = last;
        assert_eq!(h0_with_gluing(&vec![0; m], &g, &standard(m)), Ok(1));
    }
}

fn arb_degrees() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 2..=9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_bounded_by_euler_characteristic(d in arb_degrees(), seed in any::<u64>()) {
        let b = CycleLineBundle::new(d).unwrap();
        let h = h0_oracle(&b, seed).unwrap().h0 as i64;
        prop_assert!(h >= euler_char_cycle(&b).max(0));
    }

    #[test]
    fn formula_is_dihedrally_invariant(d in arb_degrees(), k in 0usize..10) {
        let b = CycleLineBundle::new(d.clone()).unwrap();
        let value = h0_formula(&b);
        let mut r = d.clone();
        r.rotate_left(k % d.len());
        let rotated = h0_formula(&CycleLineBundle::new(r.clone()).unwrap());
        r.reverse();
        let reversed = h0_formula(&CycleLineBundle::new(r).unwrap());
        prop_assert_eq!(value.clone().ok(), rotated.ok());
        prop_assert_eq!(value.ok(), reversed.ok());
    }
}

use num_bigint::BigInt;
use proptest::prelude::*;
use twistor_core::picard::{
    strict_transform, AnticanonicalCycle, BlowupSchedule, ComponentId, InfinitelyNear,
    InitialType, LatticeError, Location,
};
use twistor_core::SurfaceLattice;
use ComponentId::*;

fn smooth(c: ComponentId) -> Location {
    Location::Smooth { component: c }
}

#[test]
fn gram_matrix_is_unimodular() {
    for pairs in 0..=10 {
        let g = SurfaceLattice::new(pairs).gram_matrix();
        assert_eq!(g.determinant(), BigInt::from(-1), "pairs = {pairs}");
    }
}

#[test]
fn anticanonical_square() {
    for pairs in 1..=4usize {
        let k = SurfaceLattice::new(pairs).anticanonical_class();
        assert_eq!(k.self_intersection(), 8 - 2 * pairs as i64);
    }
}

#[test]
fn strict_transforms() {
    let l = SurfaceLattice::new(4);
    let c0 = strict_transform(&l, (2, 1), &[1; 8], &[]).unwrap();
    assert_eq!(c0.self_intersection(), -4);
    assert_eq!(c0.adjunction_genus(), Ok(0));
    let a = strict_transform(&l, (1, 0), &[1, 0, 1, 0, 1, 0, 1, 0], &[]).unwrap();
    assert_eq!(a.self_intersection(), -4);
    let a = strict_transform(&l, (1, 0), &[1, 0, 1, 0, 1, 0, 0, 0], &[]).unwrap();
    assert_eq!(a.self_intersection(), -3);
    // A curve cannot pass through a point infinitely near to one it misses.
    let near = [InfinitelyNear { point: 3, over: 1 }];
    assert!(matches!(
        strict_transform(&l, (0, 1), &[0, 0, 1, 0, 0, 0, 0, 0], &near),
        Err(LatticeError::InfinitelyNear { .. })
    ));
    assert!(strict_transform(&l, (0, 1), &[1; 7], &[]).is_err());
}

/// Every schedule reachable with at most `depth` steps from each type,
/// built by brute force over a fixed menu of locations.
fn all_schedules(depth: usize) -> Vec<BlowupSchedule> {
    let ids = [F, Fbar, G, Gbar, C0, A, Abar];
    let mut menu: Vec<Location> = ids.iter().map(|&c| smooth(c)).collect();
    for &a in &ids {
        for &b in &ids {
            if a < b {
                menu.push(Location::Node { components: (a, b) });
            }
        }
    }
    let mut out = Vec::new();
    for initial in [InitialType::I, InitialType::II, InitialType::III] {
        let mut frontier = vec![BlowupSchedule::new(initial, vec![])];
        for step in 1..=depth {
            let mut next = Vec::new();
            for s in &frontier {
                let mut extended = menu.clone();
                for j in 1..step {
                    extended.push(Location::InfinitelyNear {
                        over_pair: j,
                        on_strict_transform: None,
                    });
                    for &c in ids.iter().chain(&[Exceptional(2 * j + 1), Exceptional(1)]) {
                        extended.push(Location::InfinitelyNear {
                            over_pair: j,
                            on_strict_transform: Some(c),
                        });
                    }
                }
                for loc in extended {
                    let mut t = s.clone();
                    t.steps.push(loc);
                    if t.realize().is_ok() {
                        next.push(t);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
    }
    out
}

fn check_cycle(s: &BlowupSchedule, c: &AnticanonicalCycle) {
    let k = c.lattice().anticanonical_class();
    let degrees = c.anticanonical_degrees();
    assert_eq!(degrees.iter().sum::<i64>(), k.self_intersection(), "{s}");
    for comp in c.components() {
        assert_eq!(
            comp.class.anticanonical_degree(),
            comp.class.self_intersection() + 2,
            "{s}: {}",
            comp.id
        );
    }
    // Each blow-up at a node inserts two components (the point and its
    // conjugate); a smooth point inserts none.
    let mut expected = s.initial.components().len();
    for k in 0..s.steps.len() {
        let prefix = BlowupSchedule::new(s.initial, s.steps[..k].to_vec());
        let before: Vec<ComponentId> =
            prefix.realize().unwrap().components().iter().map(|c| c.id).collect();
        let at_node = match s.steps[k] {
            Location::Smooth { .. } => false,
            Location::Node { .. } => true,
            Location::InfinitelyNear { over_pair, on_strict_transform } => {
                on_strict_transform.is_some()
                    && before.iter().any(|&id| id == Exceptional(2 * over_pair - 1))
            }
        };
        if at_node {
            expected += 2;
        }
    }
    assert_eq!(c.len(), expected, "{s}");
}

#[test]
fn realized_cycles_satisfy_invariants() {
    let schedules = all_schedules(3);
    assert!(schedules.len() > 100);
    for s in &schedules {
        let c = s.realize().unwrap();
        check_cycle(s, &c);
        if s.initial == InitialType::II {
            // Nothing is ever blown up on the real fibre.
            assert_eq!(c.component(F).unwrap().class, c.lattice().fibre(), "{s}");
        }
    }
}

#[test]
fn component_count_with_nodes() {
    let s = BlowupSchedule::new(
        InitialType::I,
        vec![
            Location::Node { components: (F, G) },
            Location::Node { components: (G, Fbar) },
            smooth(F),
        ],
    );
    assert_eq!(s.realize().unwrap().len(), 8);
    let s = BlowupSchedule::new(
        InitialType::III,
        vec![Location::Node { components: (A, Abar) }, smooth(A)],
    );
    assert_eq!(s.realize().unwrap().len(), 4);
}

#[test]
fn golden_classes() {
    let s = BlowupSchedule::new(InitialType::II, vec![smooth(C0); 4]);
    let c = s.realize().unwrap();
    let c0 = &c.component(C0).unwrap().class;
    assert_eq!((c0.self_intersection(), c0.anticanonical_degree()), (-4, -2));
    let s = BlowupSchedule::new(InitialType::I, vec![smooth(G); 4]);
    let c = s.realize().unwrap();
    let g = &c.component(G).unwrap().class;
    let gbar = &c.component(Gbar).unwrap().class;
    assert_eq!(g.self_intersection(), -4);
    assert_eq!(g.intersect(gbar), Ok(0));
}

fn arb_class(pairs: usize) -> impl Strategy<Value = twistor_core::DivisorClass> {
    prop::collection::vec(-6i64..=6, 2 * pairs + 2).prop_map(move |v| {
        SurfaceLattice::new(pairs).class(v[0], v[1], &v[2..])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn involution_is_an_isometry((x, y) in (1usize..=6).prop_flat_map(|p| (arb_class(p), arb_class(p)))) {
        let (ix, iy) = (x.real_involution(), y.real_involution());
        prop_assert_eq!(ix.intersect(&iy), x.intersect(&y));
        prop_assert_eq!(ix.real_involution(), x.clone());
        let k = x.lattice().anticanonical_class();
        prop_assert_eq!(k.real_involution(), k);
    }

    #[test]
    fn form_is_symmetric_and_bilinear(
        (x, y, z) in (1usize..=5).prop_flat_map(|p| (arb_class(p), arb_class(p), arb_class(p)))
    ) {
        prop_assert_eq!(x.intersect(&y), y.intersect(&x));
        let sum = &x + &y;
        prop_assert_eq!(sum.intersect(&z).unwrap(), x.intersect(&z).unwrap() + y.intersect(&z).unwrap());
        prop_assert!(x.adjunction_genus().is_ok());
    }
}

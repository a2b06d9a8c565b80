//! Property tests for the structural invariants: random tables (both
//! arbitrary and bijective) exercise the equivalences that the theory
//! guarantees for every quadratic set.

mod common;

use proptest::prelude::*;

use braided::conditions::{check_condition, check_local, holds, ConditionId};
use braided::extension::{build_extension, GroundActions};
use braided::graph::{find_isomorphism, gamma_graph, orbit_partition};
use braided::monoid::TruncatedMonoid;
use braided::perm::Perm;
use braided::qset::{ElementId, QuadraticSet};

fn label_set(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Arbitrary total table on 1..=4 elements (not necessarily bijective).
fn any_table() -> impl Strategy<Value = QuadraticSet> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let pairs = proptest::collection::vec((0..n as u16, 0..n as u16), n * n);
            (Just(n), pairs)
        })
        .prop_map(|(n, entries)| {
            let table = entries
                .into_iter()
                .map(|(a, b)| (ElementId(a), ElementId(b)))
                .collect();
            QuadraticSet::new("rand", label_set(n), table).unwrap()
        })
}

/// Random bijective table: a shuffled assignment of the pair square.
fn any_bijective() -> impl Strategy<Value = QuadraticSet> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let m = n * n;
            let images = Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
            (Just(n), images)
        })
        .prop_map(|(n, images)| {
            let table = images
                .into_iter()
                .map(|k| (ElementId((k / n) as u16), ElementId((k % n) as u16)))
                .collect();
            QuadraticSet::new("rand_bij", label_set(n), table).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn r_decomposes_into_actions(qs in any_table()) {
        for (x, y) in qs.pairs() {
            prop_assert_eq!(qs.apply_r(x, y), (qs.left_action(x, y), qs.right_action(x, y)));
        }
    }

    #[test]
    fn involutive_iff_action_identities(qs in any_table()) {
        let by_identities = qs.pairs().all(|(x, y)| {
            let u = qs.left_action(x, y);
            let v = qs.right_action(x, y);
            qs.left_action(u, v) == x && qs.right_action(u, v) == y
        });
        prop_assert_eq!(qs.is_involutive(), by_identities);
    }

    #[test]
    fn square_free_iff_action_identities(qs in any_table()) {
        let by_identities = qs
            .elements()
            .all(|x| qs.left_action(x, x) == x && qs.right_action(x, x) == x);
        prop_assert_eq!(qs.is_square_free(), by_identities);
    }

    #[test]
    fn bijective_iff_orbits_close(qs in any_table()) {
        let bij = qs.predicate("bijective").holds;
        prop_assert_eq!(bij, qs.is_bijective());
        if bij {
            for (x, y) in qs.pairs() {
                prop_assert!(qs.pair_orbit(x, y).is_ok());
            }
        }
    }

    #[test]
    fn nondegenerate_involutive_implies_2cancellative(qs in any_bijective()) {
        if qs.is_nondegenerate() && qs.is_involutive() {
            prop_assert!(qs.predicate("2cancellative").holds);
            // the five fixed-pair characterisations agree pointwise
            for (x, y) in qs.pairs() {
                let (u, v) = qs.apply_r(x, y);
                let c1 = u == x;
                let c2 = v == y;
                let c3 = qs.left_action(x, y) == x;
                let c4 = qs.right_action(x, y) == y;
                let c5 = (u, v) == (x, y);
                prop_assert!(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5);
            }
        }
    }

    #[test]
    fn ybe_decomposition_lemma(qs in any_table()) {
        let ybe = holds(&qs, ConditionId::Ybe);
        prop_assert_eq!(
            ybe,
            holds(&qs, ConditionId::L1) && holds(&qs, ConditionId::R1) && holds(&qs, ConditionId::Lr3)
        );
        prop_assert_eq!(
            holds(&qs, ConditionId::L2),
            holds(&qs, ConditionId::L1) && holds(&qs, ConditionId::Lr3)
        );
        prop_assert_eq!(
            holds(&qs, ConditionId::R2),
            holds(&qs, ConditionId::R1) && holds(&qs, ConditionId::Lr3)
        );
    }

    #[test]
    fn lri_consequences(qs in any_bijective()) {
        if holds(&qs, ConditionId::Lri) {
            prop_assert!(qs.is_nondegenerate());
            prop_assert_eq!(holds(&qs, ConditionId::L1), holds(&qs, ConditionId::R1));
            prop_assert_eq!(holds(&qs, ConditionId::L2), holds(&qs, ConditionId::R2));
        }
    }

    #[test]
    fn local_checks_cover_global(qs in any_table()) {
        for cond in [ConditionId::L1, ConditionId::R2, ConditionId::Ybe] {
            let global = check_condition(&qs, cond).holds;
            let local = qs.elements().all(|x| {
                qs.elements()
                    .all(|y| qs.elements().all(|z| check_local(&qs, cond, (x, y, z))))
            });
            prop_assert_eq!(global, local);
        }
    }

    #[test]
    fn monoid_classes_and_cancellation(qs in any_bijective()) {
        let tm = TruncatedMonoid::build(qs.clone(), 3).unwrap();
        // degree preservation and canonical stability
        for d in 0..=3usize {
            for class in tm.classes_at_degree(d).unwrap() {
                prop_assert!(class.members.iter().all(|m| m.len() == d));
                for m in &class.members {
                    prop_assert_eq!(tm.canonical(m).unwrap(), &class.canonical);
                }
            }
        }
        // cancellation on length 2 decides 2-cancellativity of the table
        let c2 = tm.cancellation_test(2).unwrap().holds;
        prop_assert_eq!(c2, qs.predicate("2cancellative").holds);
        // a 2-cancellative braided table has cancellation on length 3
        if c2 && holds(&qs, ConditionId::Ybe) {
            prop_assert!(tm.cancellation_test(3).unwrap().holds);
        }
    }

    #[test]
    fn braided_base_monoid_theorems(qs in any_bijective()) {
        if !holds(&qs, ConditionId::Ybe) {
            return Ok(());
        }
        let tm = TruncatedMonoid::build(qs.clone(), 3).unwrap();
        // extended actions preserve degree and restrict to the table
        for x in qs.elements() {
            for y in qs.elements() {
                let l = tm.ext_left_action(&[x], &[y]).unwrap();
                prop_assert_eq!(l, vec![qs.left_action(x, y)]);
                let r = tm.ext_right_action(&[x], &[y]).unwrap();
                prop_assert_eq!(r, vec![qs.right_action(x, y)]);
            }
        }
        prop_assert!(tm.verify_action_well_defined().holds);
        let mp = tm.verify_matched_pair(3).unwrap();
        prop_assert!(mp.passed());
        let br = tm.verify_braided_monoid(2, &["ybe", "strong"]).unwrap();
        prop_assert!(br.passed());
    }

    #[test]
    fn regular_extension_transfer(xn in 1usize..=2, yn in 1usize..=2, seed in any::<u64>()) {
        // random parts (bijective) and a random regular ground assignment
        let mut rng = seed;
        let mut next = move || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng >> 33) as usize
        };
        let mk = |n: usize, prefix: &str, k: usize| {
            let labels: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
            let m = n * n;
            let mut images: Vec<usize> = (0..m).collect();
            for i in (1..m).rev() {
                images.swap(i, k % (i + 1));
            }
            let table = images
                .into_iter()
                .map(|v| (ElementId((v / n) as u16), ElementId((v % n) as u16)))
                .collect();
            QuadraticSet::new("part", labels, table).unwrap()
        };
        let x = mk(xn, "x", next());
        let y = mk(yn, "y", next());
        // random bijection Y x X -> X x Y
        let m = xn * yn;
        let mut assign: Vec<usize> = (0..m).collect();
        for i in (1..m).rev() {
            assign.swap(i, next() % (i + 1));
        }
        let mut left = vec![vec![0u16; xn]; yn];
        let mut right = vec![vec![0u16; xn]; yn];
        for (slot, img) in assign.iter().enumerate() {
            left[slot / xn][slot % xn] = (img / yn) as u16;
            right[slot / xn][slot % xn] = (img % yn) as u16;
        }
        let ext = build_extension(&x, &y, GroundActions::new(left, right)).unwrap();
        let z = ext.assembled();
        prop_assert_eq!(z.is_involutive(), x.is_involutive() && y.is_involutive());
        prop_assert_eq!(z.is_square_free(), x.is_square_free() && y.is_square_free());
        prop_assert_eq!(
            z.predicate("2cancellative").holds,
            x.predicate("2cancellative").holds && y.predicate("2cancellative").holds
        );
        // laraground: the mixed restrictions are mutually inverse
        for a in ext.ys() {
            for b in ext.xs() {
                let (u, v) = z.apply_r(a, b);
                prop_assert_eq!(z.apply_r(u, v), (a, b));
            }
        }
    }

    #[test]
    fn gamma_invariance_and_iso_oracle(qs in any_bijective()) {
        // gamma edges are invariant under automorphisms
        let autos = braided::graph::automorphisms(&qs).unwrap();
        let g = gamma_graph(&qs);
        let edges: std::collections::BTreeSet<_> = g.edges().collect();
        for a in autos.iter().take(8) {
            for (s, t, z) in g.edges() {
                prop_assert!(edges.contains(&(a.map.apply(s), a.map.apply(t), a.map.apply(z))));
            }
        }
        // search agrees with the all-bijections oracle
        let other = qs.relabel(&Perm::identity(qs.size()), label_set(qs.size())).unwrap();
        prop_assert!(find_isomorphism(&qs, &other).unwrap().is_some());
        prop_assert_eq!(
            find_isomorphism(&qs, &other).unwrap().is_some(),
            common::iso_oracle(&qs, &other)
        );
    }

    #[test]
    fn relabeled_tables_are_isomorphic(qs in any_bijective(), swap in (0u16..4, 0u16..4)) {
        let n = qs.size() as u16;
        let (i, j) = (swap.0 % n, swap.1 % n);
        let mut images: Vec<u16> = (0..n).collect();
        images.swap(i as usize, j as usize);
        let phi = Perm::from_images(images).unwrap();
        let re = qs.relabel(&phi, label_set(qs.size())).unwrap();
        prop_assert!(find_isomorphism(&qs, &re).unwrap().is_some());
        prop_assert!(common::iso_oracle(&qs, &re));
    }

    #[test]
    fn orbit_blocks_match_independent_bfs(qs in any_bijective()) {
        let orbits = orbit_partition(&qs);
        // independent BFS over the left-action relation
        let n = qs.size();
        let mut seen = vec![usize::MAX; n];
        let mut block = 0usize;
        for start in 0..n {
            if seen[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = block;
            while let Some(v) = stack.pop() {
                for z in qs.elements() {
                    let w = qs.left_action(z, ElementId(v as u16)).idx();
                    if seen[w] == usize::MAX {
                        seen[w] = block;
                        stack.push(w);
                    }
                    // undirected closure: also walk backwards
                    for u in qs.elements() {
                        if qs.left_action(z, u).idx() == v && seen[u.idx()] == usize::MAX {
                            seen[u.idx()] = block;
                            stack.push(u.idx());
                        }
                    }
                }
            }
            block += 1;
        }
        prop_assert_eq!(orbits.blocks.len(), block);
        for b in &orbits.blocks {
            let ids: std::collections::BTreeSet<usize> = b.iter().map(|e| seen[e.idx()]).collect();
            prop_assert_eq!(ids.len(), 1);
        }
    }
}

//! Property-based tests for the structural invariants of the engine.

use proptest::prelude::*;

use schubert_ss::rootsys::{format_rat, parse_rat};
use schubert_ss::ssgit::{index_tuple_count, index_tuples};
use schubert_ss::weyl::{enumerate_group, min_coset_reps, CosetSpec, WeylElement};
use schubert_ss::{rat, Kind, RootSystem, Weight, DEFAULT_ENUM_LIMIT};

fn small_system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1usize..=4).prop_map(|n| RootSystem::build(Kind::A, n).unwrap()),
        (2usize..=4).prop_map(|n| RootSystem::build(Kind::B, n).unwrap()),
        (2usize..=4).prop_map(|n| RootSystem::build(Kind::C, n).unwrap()),
        (3usize..=4).prop_map(|n| RootSystem::build(Kind::D, n).unwrap()),
        Just(RootSystem::build(Kind::G, 2).unwrap()),
        Just(RootSystem::build(Kind::F, 4).unwrap()),
    ]
}

fn word_for(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=rank, 0..12)
}

fn weight_for(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-6i64..=6, 1i64..=4), rank)
        .prop_map(|pairs| Weight::new(pairs.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_multiplicative(rs in small_system(), seed in any::<u64>()) {
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        let u_word: Vec<usize> = (0..(next() % 8)).map(|_| next() % rs.rank() + 1).collect();
        let v_word: Vec<usize> = (0..(next() % 8)).map(|_| next() % rs.rank() + 1).collect();
        let u = WeylElement::from_word(&rs, &u_word).unwrap();
        let v = WeylElement::from_word(&rs, &v_word).unwrap();
        let chi = Weight::from_integers(
            &(0..rs.rank()).map(|_| (next() % 7) as i64 - 3).collect::<Vec<_>>(),
        );
        prop_assert_eq!(u.compose(&v).apply(&chi), u.apply(&v.apply(&chi)));
    }

    #[test]
    fn inverse_preserves_length(rs in small_system(), seed in any::<u64>()) {
        let word: Vec<usize> = (0..8).map(|i| (seed >> (i * 8)) as usize % rs.rank() + 1).collect();
        let w = WeylElement::from_word(&rs, &word).unwrap();
        let inv = w.inverse(&rs).unwrap();
        prop_assert_eq!(w.length(&rs), inv.length(&rs));
        prop_assert!(w.compose(&inv).is_identity());
    }

    #[test]
    fn length_is_subadditive(rs in small_system(), seed in any::<u64>()) {
        let u_word: Vec<usize> = (0..5).map(|i| (seed >> (i * 6)) as usize % rs.rank() + 1).collect();
        let v_word: Vec<usize> = (5..10).map(|i| (seed >> (i * 6)) as usize % rs.rank() + 1).collect();
        let u = WeylElement::from_word(&rs, &u_word).unwrap();
        let v = WeylElement::from_word(&rs, &v_word).unwrap();
        prop_assert!(u.compose(&v).length(&rs) <= u.length(&rs) + v.length(&rs));
    }

    #[test]
    fn action_permutes_roots(rs in small_system(), seed in any::<u64>()) {
        let word: Vec<usize> = (0..6).map(|i| (seed >> (i * 10)) as usize % rs.rank() + 1).collect();
        let w = WeylElement::from_word(&rs, &word).unwrap();
        let mut roots: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
        for r in rs.positive_roots() {
            roots.insert(r.coords.iter().map(|c| -c).collect());
            roots.insert(r.coords);
        }
        for root in &roots {
            prop_assert!(roots.contains(&w.apply_root(root)));
        }
    }

    #[test]
    fn pairing_is_linear(rs in small_system(), seed in any::<u64>()) {
        let n = rs.rank();
        let a = Weight::from_integers(&(0..n).map(|i| (seed >> i) as i64 % 5).collect::<Vec<_>>());
        let b = Weight::from_integers(&(0..n).map(|i| (seed >> (i + 7)) as i64 % 5).collect::<Vec<_>>());
        for j in 1..=n {
            let lhs = rs.pairing(&a.add(&b), j).unwrap();
            let rhs = rs.pairing(&a, j).unwrap() + rs.pairing(&b, j).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn fraction_strings_round_trip(nums in prop::collection::vec((-50i64..=50, 1i64..=12), 1..6)) {
        let w = Weight::new(nums.into_iter().map(|(p, q)| rat(p, q)).collect());
        let strs = w.fraction_strings();
        for s in &strs {
            // Lowest terms: re-parsing and re-formatting is stable.
            prop_assert_eq!(&format_rat(&parse_rat(s).unwrap()), s);
        }
        prop_assert_eq!(Weight::from_fraction_strings(&strs).unwrap(), w);
    }

    #[test]
    fn index_tuples_satisfy_gap_and_count(p in 0usize..4, q in 1usize..9) {
        let tuples = index_tuples(p, q);
        prop_assert_eq!(tuples.len(), index_tuple_count(p, q));
        let set: std::collections::HashSet<&Vec<usize>> = tuples.iter().collect();
        prop_assert_eq!(set.len(), tuples.len());
        for t in &tuples {
            prop_assert_eq!(t.len(), p);
            for win in t.windows(2) {
                prop_assert!(win[1] >= win[0] + 2);
            }
            if let Some(&last) = t.last() {
                prop_assert!(last <= q && t[0] >= 1);
            }
        }
    }
}

#[test]
fn coset_rep_intersection_is_union_rep() {
    // W^I meet W^J equals W^{I union J}; excluded sets intersect.
    for rs in [
        RootSystem::build(Kind::A, 3).unwrap(),
        RootSystem::build(Kind::B, 3).unwrap(),
    ] {
        let all = enumerate_group(&rs, DEFAULT_ENUM_LIMIT).unwrap();
        for r1 in 1..=rs.rank() {
            for r2 in 1..=rs.rank() {
                let a = min_coset_reps(&rs, &CosetSpec::maximal(r1), DEFAULT_ENUM_LIMIT).unwrap();
                let b = min_coset_reps(&rs, &CosetSpec::maximal(r2), DEFAULT_ENUM_LIMIT).unwrap();
                let inter: std::collections::HashSet<&WeylElement> = a
                    .iter()
                    .filter(|w| b.contains(w))
                    .collect();
                // Kept sets are S minus {r1} and S minus {r2}; their union
                // drops an index only when r1 == r2 == i.
                let kept: Vec<usize> = (1..=rs.rank()).filter(|&i| i != r1 || i != r2).collect();
                let direct: std::collections::HashSet<&WeylElement> = all
                    .iter()
                    .filter(|w| kept.iter().all(|&i| w.sends_positive(i)))
                    .collect();
                assert_eq!(inter, direct, "{rs} I_{r1} and I_{r2}");
            }
        }
    }
}

#[test]
fn coset_index_divides_group_order() {
    for rs in [
        RootSystem::build(Kind::B, 4).unwrap(),
        RootSystem::build(Kind::D, 4).unwrap(),
    ] {
        let order = enumerate_group(&rs, DEFAULT_ENUM_LIMIT).unwrap().len();
        for r in 1..=rs.rank() {
            let reps = min_coset_reps(&rs, &CosetSpec::maximal(r), DEFAULT_ENUM_LIMIT).unwrap();
            assert_eq!(order % reps.len(), 0, "{rs} r={r}");
        }
    }
}

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spheremotion::comotion::{chi, psi, psi_reference_invariance, weights};
use spheremotion::generate::{random_comotion, random_sphere_map, random_torus_map, random_word};
use spheremotion::group::BaseGroup;
use spheremotion::rational::{modulo, Q};
use spheremotion::rewrite::{minimize_data, minimize_presentation, reconstruct_relator};
use spheremotion::word::{parse_word, FreeProductWord};

fn rational() -> impl Strategy<Value = Q> {
    (-40i128..40, 1i128..6).prop_map(|(n, d)| Q::new(n, d))
}

fn period() -> impl Strategy<Value = Q> {
    (1i128..12, 1i128..4).prop_map(|(n, d)| Q::new(n, d))
}

/// Laps wound by walking forward through the points and back to the first.
fn winding(ts: &[Q], period: Q) -> u32 {
    let mut total = Q::from_integer(0);
    for i in 0..ts.len() {
        let mut step = ts[(i + 1) % ts.len()] - ts[i];
        while step < Q::from_integer(0) {
            step += period;
        }
        while step >= period {
            step -= period;
        }
        total += step;
    }
    (total / period).to_integer() as u32
}

fn word() -> impl Strategy<Value = FreeProductWord> {
    let letters = prop::sample::select(vec!["a", "b", "A", "B", "t", "t^-1", "a@1", "B@2", "t2"]);
    prop::collection::vec(letters, 0..10).prop_map(|ls| parse_word(BaseGroup::free(2), &ls.join(" ")).unwrap())
}

proptest! {
    #[test]
    fn chi_is_antisymmetric(x in rational(), y in rational(), p in period(), r in rational()) {
        let same = modulo(&x, &p) == modulo(&y, &p);
        let s = chi(x, y, p, r) + chi(y, x, p, r);
        prop_assert_eq!(s, if same { 0 } else { 1 });
    }

    #[test]
    fn psi_counts_laps(ts in prop::collection::vec(rational(), 1..7), p in period(), refs in prop::collection::vec(rational(), 20)) {
        let v = psi(&ts, p, Q::from_integer(0));
        prop_assert_eq!(v, winding(&ts, p));
        prop_assert!(psi_reference_invariance(&ts, p, &refs));
        let all_equal = ts.iter().all(|t| modulo(t, &p) == modulo(&ts[0], &p));
        prop_assert_eq!(v == 0, all_equal);
    }

    #[test]
    fn psi_of_alternating_pair_is_two(a in rational(), b in rational(), p in period()) {
        prop_assume!(modulo(&a, &p) != modulo(&b, &p));
        prop_assert_eq!(psi(&[a, b, a, b], p, Q::from_integer(0)), 2);
    }

    #[test]
    fn word_group_laws(x in word(), y in word(), z in word()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inv()).is_identity());
        prop_assert_eq!(x.mul(&y).inv(), y.inv().mul(&x.inv()));
        prop_assert!(x.cyclic_reduce().is_conjugate(&x));
        prop_assert!(x.conj_by(&y).is_conjugate(&x));
        prop_assert_eq!(x.shift_copies(2).shift_copies(-2), x.clone());
        let text = x.to_string();
        prop_assert_eq!(parse_word(BaseGroup::free(2), &text).unwrap(), x);
    }

    #[test]
    fn rewriting_round_trips(seed in any::<u64>(), n in 0usize..5, rank in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&mut rng, BaseGroup::free(rank), 2 * n + 1);
        let d = minimize_presentation(&w).unwrap();
        prop_assert!(reconstruct_relator(&d).is_conjugate(&w));
        prop_assert_eq!(minimize_data(&d), d.clone());
        prop_assert!(d.validate().is_ok());
    }

    #[test]
    fn weights_total_euler_characteristic(seed in any::<u64>(), torus in any::<bool>(), jumps in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let map = if torus { random_torus_map(&mut rng, 4) } else { random_sphere_map(&mut rng, 5, 5) };
        let a = random_comotion(&mut rng, &map, jumps);
        prop_assert_eq!(weights(&map, &a).total, map.census().euler_characteristic);
    }
}

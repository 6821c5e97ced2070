//! Randomized property tests over the exact arithmetic layers.

use proptest::prelude::*;

use equik::catalogue::{catalogue, GroupKind};
use equik::cyclotomic::Cyclotomic;
use equik::f2::Subspace2;
use equik::mdecomp::{decompose, FMatrix, MSet};
use equik::Perm;

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for i in (1..images.len()).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Perm::from_images(images).unwrap()
    })
}

fn cyclotomic_strategy() -> impl Strategy<Value = Cyclotomic> {
    (1u64..=12, 0u64..12, -3i64..=3, -3i64..=3).prop_map(|(n, k, a, b)| {
        let root = Cyclotomic::root_of_unity(n, k % n);
        Cyclotomic::from_integer(a).add(&root.scale(
            &num::rational::BigRational::from_integer(b.into()),
        ))
    })
}

proptest! {
    #[test]
    fn perm_group_laws(a in perm_strategy(6), b in perm_strategy(6), c in perm_strategy(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()), Perm::identity(6));
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert_eq!(b.conjugate(&a).order(), a.order());
    }

    #[test]
    fn cyclotomic_ring_axioms(
        a in cyclotomic_strategy(),
        b in cyclotomic_strategy(),
        c in cyclotomic_strategy(),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn span_is_order_independent(
        vectors in proptest::collection::vec(0u64..16, 0..5),
        seed in any::<u64>(),
    ) {
        let mut shuffled = vectors.clone();
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(
            Subspace2::span(4, &vectors),
            Subspace2::span(4, &shuffled)
        );
    }

    #[test]
    fn decompose_round_trip_s4(n in proptest::collection::vec(0u64..=5, 5)) {
        let kind = GroupKind::S4;
        let g = kind.realize().unwrap();
        let mset = MSet::new(&g);
        let pieces: Vec<_> = catalogue(&kind)
            .unwrap()
            .into_iter()
            .map(|e| (e.label, e.subgroup))
            .collect();
        let fmatrix = FMatrix::new(&mset, &pieces).unwrap();
        prop_assert_eq!(decompose(&fmatrix.apply(&n), &fmatrix).unwrap(), n);
    }
}

//! Property suites: mutation, block order, products and polynomial algebra.

mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use ypattern::algebra::{Polynomial, RationalPoint};
use ypattern::matrix::IntMatrix;
use ypattern::quiver::{square_product, triangle_product, Quiver, ValuedQuiver};
use ypattern::seed::Seed;
use ypattern::ysystem::{mu_boxtimes_sequence, mu_square_sequence};

fn skew(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |v| {
        let mut b = IntMatrix::zeros(n);
        let mut it = v.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let x = it.next().unwrap();
                b.set(i, j, x);
                b.set(j, i, -x);
            }
        }
        b
    })
}

fn quiver() -> impl Strategy<Value = IntMatrix> {
    (1usize..=8).prop_flat_map(skew)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mutation_is_an_involution(b in quiver(), k in 0usize..8) {
        let q = Quiver::from_matrix(b.clone()).unwrap();
        let k = k % q.len();
        prop_assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
        prop_assert_eq!(b.mutate(k).rows(), matrix_mutation(&b.rows(), k));
    }

    #[test]
    fn non_adjacent_sets_mutate_in_any_order(b in quiver(), seed in any::<u64>()) {
        let q = Quiver::from_matrix(b.clone()).unwrap();
        // greedy independent set in a seeded order
        let n = q.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (v as u64).wrapping_mul(seed | 1).rotate_left(17));
        let mut set: Vec<usize> = Vec::new();
        for v in order {
            if set.iter().all(|&w| b.get(v, w) == 0) {
                set.push(v);
            }
        }
        let mut rev = set.clone();
        rev.reverse();
        prop_assert_eq!(q.mutate_set(&set).unwrap(), q.mutate_set(&rev).unwrap());
    }
}

fn poly(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (-5i64..=5, proptest::collection::vec(0u32..3, 3)),
        0..max_terms,
    )
    .prop_map(|terms| {
        let mut p = Polynomial::zero(3);
        for (c, e) in terms {
            p = &p + &(&Polynomial::constant(3, BigInt::from(c)) * &Polynomial::monomial(&e));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Polynomial::zero(3), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-&(-&a), a.clone());
    }

    #[test]
    fn exact_division_round_trips(a in poly(4), b in poly(4)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(4), b in poly(4), s in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
        let x = RationalPoint::new(random_point(&mut rng, 3)).unwrap();
        let (ea, eb) = (a.evaluate(&x).unwrap(), b.evaluate(&x).unwrap());
        prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((-&a).evaluate(&x).unwrap(), -ea);
    }

    #[test]
    fn text_form_round_trips(a in poly(5)) {
        prop_assert_eq!(Polynomial::parse(&a.to_string(), 3).unwrap(), a);
    }
}

#[test]
fn division_by_a_non_factor_fails() {
    let a = Polynomial::parse("1 + y1 + y2", 3).unwrap();
    let b = Polynomial::parse("1 + y3", 3).unwrap();
    assert!(a.div_exact(&b).is_err());
}

/// Mutating the `(+,-)` block of `Q □ Q'` gives `Q ⊠ Q'`.
#[test]
fn square_mutates_to_triangle() {
    for (a, b) in SEED_PAIRS {
        let (q, qp) = (
            Quiver::alternating(t(a)).unwrap(),
            Quiver::alternating(t(b)).unwrap(),
        );
        let seq = mu_square_sequence(q.matrix(), qp.matrix()).unwrap();
        let block = &seq.blocks[0];
        assert_eq!((block.left, block.right), (1, -1));
        let sq = square_product(&q, &qp).unwrap();
        assert_eq!(
            sq.mutate_set(&block.vertices).unwrap(),
            triangle_product(&q, &qp).unwrap(),
            "{a} {b}"
        );
    }
}

/// Every round's seed is the same when each block is applied in reverse or
/// rotated order.
#[test]
fn block_order_independence() {
    for (a, b) in SEED_PAIRS {
        let (q, qp) = (
            ValuedQuiver::alternating(t(a)),
            ValuedQuiver::alternating(t(b)),
        );
        let r = q
            .product(&qp, ypattern::quiver::ProductKind::Triangle)
            .unwrap();
        let seq = mu_boxtimes_sequence(q.matrix(), qp.matrix()).unwrap();
        let h = t(a).coxeter_number() + t(b).coxeter_number();
        let mut s = Seed::initial(&r);
        let (mut rev, mut rot) = (s.clone(), s.clone());
        for _ in 0..h {
            for blk in &seq.blocks {
                s = s.mutate_block(&blk.vertices).unwrap();
                let mut v = blk.vertices.clone();
                v.reverse();
                rev = rev.mutate_block(&v).unwrap();
                let mut w = blk.vertices.clone();
                let mid = w.len() / 2;
                w.rotate_left(mid);
                rot = rot.mutate_block(&w).unwrap();
            }
            assert_eq!(s, rev, "{a} {b}");
            assert_eq!(s, rot, "{a} {b}");
        }
    }
}

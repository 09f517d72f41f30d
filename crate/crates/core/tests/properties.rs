//! Property tests for the algebraic invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use sievelab::cyclotomic::reduce;
use sievelab::partition::Partition;
use sievelab::poly::IntPoly;
use sievelab::symfun::{self, SymPoly};

fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|v| IntPoly::from_i64_coeffs(&v))
}

fn arb_nonzero_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    arb_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(8), b in arb_poly(8), c in arb_poly(8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a - &a, IntPoly::zero());
    }

    #[test]
    fn degrees_add(a in arb_nonzero_poly(8), b in arb_nonzero_poly(8)) {
        let prod = &a * &b;
        prop_assert_eq!(
            prod.degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in arb_poly(8),
        b in arb_nonzero_poly(8)
    ) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b), Ok(a));
    }

    #[test]
    fn multisection_reassembles(p in arb_poly(16), d in 1usize..=5) {
        let mut sum = IntPoly::zero();
        for r in 0..d {
            sum = &sum + &p.multisect(d, r).inflate(d).times_monomial(r);
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn reduction_is_a_ring_map(
        a in arb_poly(20),
        b in arb_poly(20),
        d in 1u64..=12
    ) {
        let prod = reduce(&(&a * &b), d);
        let factored = reduce(&a, d).mul(&reduce(&b, d)).unwrap();
        prop_assert_eq!(prod, factored);
        let sum = reduce(&(&a + &b), d);
        let split = reduce(&a, d).add(&reduce(&b, d)).unwrap();
        prop_assert_eq!(sum, split);
    }

    #[test]
    fn conjugation_is_an_involution(mut parts in prop::collection::vec(1u32..=9, 0..=8)) {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let p = Partition::new(parts);
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }
}

fn arb_sympoly(n: usize) -> impl Strategy<Value = SymPoly> {
    let shapes: Vec<Vec<u32>> = vec![
        vec![],
        vec![1],
        vec![2],
        vec![1, 1],
        vec![2, 1],
        vec![3],
        vec![2, 2],
        vec![3, 1],
    ];
    prop::collection::vec(-4i64..=4, shapes.len()).prop_map(move |coeffs| {
        let mut f = SymPoly::zero(n);
        for (shape, c) in shapes.iter().zip(coeffs) {
            if shape.len() <= n {
                f.add_term(Partition::new(shape.clone()), BigInt::from(c));
            }
        }
        f
    })
}

fn eval_at(f: &SymPoly, zs: &[i64]) -> BigInt {
    let mut total = BigInt::zero();
    for (v, c) in f.monomial_vectors() {
        let mut term = c;
        for (&z, &e) in zs.iter().zip(&v) {
            term *= BigInt::from(z).pow(e);
        }
        total += term;
    }
    total
}

proptest! {
    #[test]
    fn symmetric_product_matches_pointwise_values(
        f in arb_sympoly(3),
        g in arb_sympoly(3),
        zs in prop::collection::vec(-5i64..=5, 3)
    ) {
        let prod = f.mul(&g).unwrap();
        prop_assert_eq!(eval_at(&prod, &zs), eval_at(&f, &zs) * eval_at(&g, &zs));
    }

    #[test]
    fn symmetric_product_commutes(f in arb_sympoly(3), g in arb_sympoly(3)) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    }

    #[test]
    fn schur_round_trip(coeffs in prop::collection::vec(-5i64..=5, 4)) {
        let shapes = [vec![3u32], vec![2, 1], vec![1, 1, 1], vec![2, 2]];
        let n = 4;
        let mut f = SymPoly::zero(n);
        for (shape, &c) in shapes.iter().zip(&coeffs) {
            let s = symfun::schur(&Partition::new(shape.clone()), n);
            f = f.add(&s.scalar_mul(&BigInt::from(c))).unwrap();
        }
        let expansion = symfun::to_schur(&f);
        for (shape, &c) in shapes.iter().zip(&coeffs) {
            let got = expansion
                .get(&Partition::new(shape.clone()))
                .cloned()
                .unwrap_or_else(BigInt::zero);
            prop_assert_eq!(got, BigInt::from(c));
        }
    }
}

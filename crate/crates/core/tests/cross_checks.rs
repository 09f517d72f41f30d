//! Cross-module identities: routes through different modules must agree.

use num_bigint::BigInt;

use sievelab::cyclotomic::{reduce, root_power};
use sievelab::multiset::{fixed_count, gf_from_enumeration, Action};
use sievelab::poly::IntPoly;
use sievelab::qcomb::{
    bnomial, divisors, gaussian_binomial, q_integer, qbnomial, qbnomial_gf, Bound,
};

#[test]
fn layers_at_q_equal_one_rebuild_the_bnomial_power() {
    for n in 0..=6u64 {
        for b in 2..=5u64 {
            let gf = qbnomial_gf(n, b);
            let mut total = IntPoly::zero();
            for (k, layer) in gf.layers().iter().enumerate() {
                total = &total + &IntPoly::monomial(layer.eval_one(), k);
            }
            assert_eq!(total, q_integer(b).pow(n), "n={n} b={b}");
        }
    }
}

#[test]
fn enumeration_gf_equals_product_layers() {
    for n in 0..=6u64 {
        for b in 2..=5u64 {
            let gf = qbnomial_gf(n, b);
            for k in 0..=(b - 1) * n {
                assert_eq!(
                    gf_from_enumeration(n, k, Bound::Finite(b)),
                    gf.layer(k as usize),
                    "n={n} b={b} k={k}"
                );
            }
        }
    }
}

#[test]
fn enumeration_gf_unbounded_matches_gaussians() {
    for n in 1..=5u64 {
        for k in 0..=2 * n {
            assert_eq!(
                gf_from_enumeration(n, k, Bound::Unbounded),
                qbnomial(n, k, Bound::Unbounded),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn repeat_block_bijection_holds_for_every_gcd() {
    // fixed points of rho^(n/d) are d-fold repeats, so their count is the
    // b-nomial of the quotient parameters, coprime or not
    for n in 1..=7u64 {
        for b in 2..=4u64 {
            for d in divisors(n) {
                for k in 0..=(b - 1) * n {
                    let fixed = fixed_count(n, k, Bound::Finite(b), Action::Rho, (n / d) as i64);
                    let expected = if k % d == 0 {
                        bnomial(n / d, (k / d) as i64, Bound::Finite(b))
                    } else {
                        BigInt::ZERO
                    };
                    assert_eq!(BigInt::from(fixed), expected, "n={n} b={b} d={d} k={k}");
                }
            }
        }
    }
}

#[test]
fn integrality_sweep_plain_cases() {
    // f(1, omega, ..., omega^(n-1)) is an integer whenever d | n or d | n-1
    let bounds = [
        Bound::Finite(2),
        Bound::Finite(3),
        Bound::Finite(4),
        Bound::Finite(5),
        Bound::Unbounded,
    ];
    for n in 1..=8u64 {
        for &b in &bounds {
            let k_top = match b {
                Bound::Finite(b) => (b - 1) * n,
                Bound::Unbounded => 2 * n,
            };
            let mut targets = divisors(n);
            if n >= 2 {
                targets.extend(divisors(n - 1));
            }
            targets.sort_unstable();
            targets.dedup();
            for d in targets {
                for k in 0..=k_top {
                    let layer = qbnomial(n, k, b);
                    assert!(
                        reduce(&layer, d).as_integer().is_some(),
                        "non-integer specialization at n={n} b={b} d={d} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn integrality_sweep_twisted_case() {
    // omega^k <n,k>_omega^(b) is an integer whenever d | n+1
    let bounds = [
        Bound::Finite(2),
        Bound::Finite(3),
        Bound::Finite(4),
        Bound::Finite(5),
        Bound::Unbounded,
    ];
    for n in 1..=8u64 {
        for &b in &bounds {
            let k_top = match b {
                Bound::Finite(b) => (b - 1) * n,
                Bound::Unbounded => 2 * n,
            };
            for d in divisors(n + 1) {
                for k in 0..=k_top {
                    let layer = qbnomial(n, k, b);
                    let twisted = root_power(d, k as i64).mul(&reduce(&layer, d)).unwrap();
                    assert!(
                        twisted.as_integer().is_some(),
                        "non-integer twisted value at n={n} b={b} d={d} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn binary_twist_washes_out_at_odd_conductors() {
    // for odd d the q^(k(k-1)/2) prefactor disappears mod Phi_d
    for n in 1..=8i64 {
        let mut targets = divisors(n as u64);
        if n >= 2 {
            targets.extend(divisors(n as u64 - 1));
        }
        for d in targets {
            if d % 2 == 0 {
                continue;
            }
            for k in 0..=n {
                let plain = gaussian_binomial(n, k);
                let twisted = plain.times_monomial((k * (k - 1) / 2) as usize);
                assert_eq!(reduce(&twisted, d), reduce(&plain, d), "n={n} d={d} k={k}");
            }
        }
    }
}

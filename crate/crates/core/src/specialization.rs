//! Closed-form generating functions for the root-of-unity
//! specializations of `<n,k>_q^(b)`, in the three divisibility regimes,
//! together with the t = 1 sums and the alternating coin formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coin::CoinPair;
use crate::poly::IntPoly;
use crate::qcomb::{binomial, bnomial, q_integer, Bound};

/// The three divisibility regimes for a primitive d-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// d | n: plain specialization.
    A,
    /// d | (n-1): plain specialization.
    B,
    /// d | (n+1): the twisted coefficients `omega^k <n,k>_omega^(b)`.
    C,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::A, Case::B, Case::C];

    /// The integer whose divisors are the admissible d for this case,
    /// or `None` when it is zero (every d would qualify).
    pub fn anchor(self, n: u64) -> Option<u64> {
        match self {
            Case::A => Some(n),
            Case::B => (n > 1).then(|| n - 1),
            Case::C => Some(n + 1),
        }
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Case::A => write!(f, "a"),
            Case::B => write!(f, "b"),
            Case::C => write!(f, "c"),
        }
    }
}

/// `(1 - t^(bd/g))^g / (1 - t^d)` with `g = gcd(b, d)`, the factor common
/// to all three regimes.
fn base_factor(d: u64, b: u64) -> IntPoly {
    let g = num_integer::gcd(b, d);
    let one = IntPoly::one();
    let num = (&one - &IntPoly::monomial(BigInt::one(), (b * d / g) as usize)).pow(g);
    let den = &one - &IntPoly::monomial(BigInt::one(), d as usize);
    num.exact_div(&den)
        .expect("1 - t^(bd/g) is divisible by 1 - t^d")
}

/// Generating function of `<n,k>_omega^(b)` over k, for d | n:
/// `((1 - t^(bd/g))^g / (1 - t^d))^(n/d)`.
pub fn gf_case_a(n: u64, d: u64, b: u64) -> IntPoly {
    assert!(d >= 1 && n % d == 0, "case a requires d | n");
    base_factor(d, b).pow(n / d)
}

/// Generating function of `<n,k>_omega^(b)` over k, for d | (n-1):
/// `[b]_t ((1 - t^(bd/g))^g / (1 - t^d))^((n-1)/d)`.
pub fn gf_case_b(n: u64, d: u64, b: u64) -> IntPoly {
    assert!(n >= 1 && d >= 1 && (n - 1) % d == 0, "case b requires d | n-1");
    &q_integer(b) * &base_factor(d, b).pow((n - 1) / d)
}

/// Generating function of the twisted integers `omega^k <n,k>_omega^(b)`
/// over k, for d | (n+1):
/// `((1 - t^(bd/g))^g / (1 - t^d))^((n+1)/d) / [b]_t`.
pub fn gf_case_c(n: u64, d: u64, b: u64) -> IntPoly {
    assert!(d >= 1 && (n + 1) % d == 0, "case c requires d | n+1");
    base_factor(d, b)
        .pow((n + 1) / d)
        .exact_div(&q_integer(b))
        .expect("the twisted generating function is a polynomial")
}

/// Closed form for `e_k(omega, ..., omega^n)` with d | (n+1):
/// `(-1)^(k mod d) s^floor(k/d) C((n+1)/d - 1, floor(k/d))` with s = 1
/// for odd d and s = -1 for even d.
///
/// The extra sign for even d comes from the factorization
/// `(1 - t^d)^m / (1 + t) = (sum_r (-1)^r t^r) (1 - t^d)^(m-1)`: the
/// `t^(jd)` layers alternate. For odd d the layer factor is
/// `(1 + t^d)^(m-1)` and the sign is absent.
pub fn ek_root_formula(n: u64, k: u64, d: u64) -> BigInt {
    assert!(d >= 1 && (n + 1) % d == 0, "requires d | n+1");
    let c = binomial(((n + 1) / d) as i64 - 1, (k / d) as i64);
    let mut sign = (k % d) % 2;
    if d % 2 == 0 {
        sign += (k / d) % 2;
    }
    if sign % 2 == 0 {
        c
    } else {
        -c
    }
}

/// The t = 1 value of the case generating function: a power of b when
/// gcd(b,d) = 1 and zero otherwise.
pub fn corollary_sum(n: u64, d: u64, b: u64, case: Case) -> BigInt {
    let exponent = match case {
        Case::A => {
            assert!(n % d == 0);
            n / d
        }
        Case::B => {
            assert!(n >= 1 && (n - 1) % d == 0);
            (n - 1) / d + 1
        }
        Case::C => {
            assert!((n + 1) % d == 0);
            (n + 1) / d - 1
        }
    };
    if num_integer::gcd(b, d) != 1 {
        BigInt::zero()
    } else {
        BigInt::from(b).pow(exponent as u32)
    }
}

/// The alternating Sylvester-set formula for the twisted coefficient of
/// `t^k` in the d | (n+1) regime.
pub fn alternating_formula(n: u64, k: u64, b: u64, d: u64) -> BigInt {
    assert!((n + 1) % d == 0, "requires d | n+1");
    let pair = CoinPair::new(b, d).expect("requires coprime b, d");
    let m = (n + 1) / d - 1;
    let bound = Bound::Finite(b);
    let at = |num: i64| -> BigInt {
        if num % d as i64 != 0 {
            BigInt::zero()
        } else {
            bnomial(m, num / d as i64, bound)
        }
    };
    let mut total = at(k as i64);
    for s in pair.sylvester_set() {
        total += at(k as i64 - 1 - s as i64);
        total -= at(k as i64 - s as i64);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{reduce, root_power};
    use crate::qcomb::qbnomial_gf;

    #[test]
    fn case_a_counterexample_row() {
        // (1 - t^3)^2: coefficients 1,0,0,-2,0,0,1
        assert_eq!(
            gf_case_a(3, 3, 3),
            IntPoly::from_i64_coeffs(&[1, 0, 0, -2, 0, 0, 1])
        );
    }

    #[test]
    fn case_a_coprime_is_inflated_power() {
        assert_eq!(
            gf_case_a(4, 2, 3),
            IntPoly::from_i64_coeffs(&[1, 0, 2, 0, 3, 0, 2, 0, 1])
        );
        assert_eq!(gf_case_a(4, 2, 3), q_integer(3).inflate(2).pow(2));
    }

    #[test]
    fn d_equal_one_specializes_to_identity() {
        for (n, b) in [(1u64, 2u64), (3, 3), (4, 5)] {
            let full = q_integer(b).pow(n);
            assert_eq!(gf_case_a(n, 1, b), full);
            assert_eq!(gf_case_b(n, 1, b), full);
            assert_eq!(gf_case_c(n, 1, b), full);
        }
    }

    #[test]
    fn case_b_small_example() {
        assert_eq!(
            gf_case_b(4, 3, 2),
            IntPoly::from_i64_coeffs(&[1, 1, 0, 1, 1])
        );
        // cross-check against direct cyclotomic evaluation
        let gf = qbnomial_gf(4, 2);
        for k in 0..=4u64 {
            assert_eq!(
                reduce(&gf.layer(k as usize), 3).as_integer().unwrap(),
                gf_case_b(4, 3, 2).coeff(k as usize)
            );
        }
    }

    #[test]
    fn case_c_matches_twisted_evaluation() {
        let (n, d, b) = (4u64, 5u64, 7u64);
        let gf = qbnomial_gf(n, b);
        let closed = gf_case_c(n, d, b);
        for k in 0..=(b - 1) * n {
            let direct = root_power(d, k as i64)
                .mul(&reduce(&gf.layer(k as usize), d))
                .unwrap()
                .as_integer()
                .expect("twisted value is an integer when d | n+1");
            assert_eq!(closed.coeff(k as usize), direct, "k={k}");
        }
    }

    #[test]
    fn case_c_binary_alternates() {
        for n in [2u64, 4, 6] {
            let d = n + 1;
            let gf = gf_case_c(n, d, 2);
            for k in 0..=2 * n {
                let expected = if k <= n {
                    if k % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    }
                } else {
                    BigInt::zero()
                };
                assert_eq!(gf.coeff(k as usize), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn ek_formula_values() {
        assert_eq!(ek_root_formula(4, 2, 5), BigInt::one());
        for n in 1..=9u64 {
            assert_eq!(ek_root_formula(n, 0, n + 1), BigInt::one());
            for k in n + 1..=2 * n + 2 {
                assert_eq!(ek_root_formula(n, k, n + 1), BigInt::zero());
            }
        }
    }

    #[test]
    fn corollary_sums_match_gf_at_one() {
        for n in 1..=6u64 {
            for b in 2..=5u64 {
                for d in crate::qcomb::divisors(n) {
                    assert_eq!(gf_case_a(n, d, b).eval_one(), corollary_sum(n, d, b, Case::A));
                }
                if n > 1 {
                    for d in crate::qcomb::divisors(n - 1) {
                        assert_eq!(
                            gf_case_b(n, d, b).eval_one(),
                            corollary_sum(n, d, b, Case::B)
                        );
                    }
                }
                for d in crate::qcomb::divisors(n + 1) {
                    assert_eq!(gf_case_c(n, d, b).eval_one(), corollary_sum(n, d, b, Case::C));
                }
            }
        }
    }

    #[test]
    fn corollary_sum_gcd_cases() {
        assert_eq!(corollary_sum(6, 3, 2, Case::A), BigInt::from(4));
        assert_eq!(corollary_sum(3, 3, 3, Case::A), BigInt::zero());
        // d = n+1 coprime: the "q-Fermat" exponent is zero
        assert_eq!(corollary_sum(4, 5, 3, Case::C), BigInt::one());
    }

    #[test]
    fn alternating_formula_matches_case_c() {
        for n in [4u64, 9, 14] {
            let closed = gf_case_c(n, 5, 7);
            for k in 0..=6 * n {
                assert_eq!(
                    alternating_formula(n, k, 7, 5),
                    closed.coeff(k as usize),
                    "n={n} k={k}"
                );
            }
        }
        assert_eq!(alternating_formula(9, 0, 7, 5), BigInt::one());
        // k = 1 mod 5 rows are nonpositive; the first interesting one is negative
        assert!(alternating_formula(9, 1, 7, 5) < BigInt::zero());
    }
}

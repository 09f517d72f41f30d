//! The b-bounded symmetric polynomials and their expansions: power sums,
//! root-of-unity power sums, dual-Cauchy forms, and Petrie/Schur
//! coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::qcomb::Bound;
use crate::specialization::Case;

use super::schur::{schur, to_schur};
use super::{e_prod, h, m, p_prod, SymPoly};

fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// The b-bounded symmetric polynomial `h_k^(b)`: the generating
/// polynomial of weight-k multisets with all multiplicities below b.
///
/// Computed from the inclusion-exclusion expansion
/// `h_k^(b) = sum_l (-1)^l e_l(z^b) h_(k-bl)`, where `e_l(z^b)` is the
/// part-scaled monomial `m_(b^l)`. Interpolates `e_k` (b = 2) and `h_k`
/// (b unbounded or b > k).
pub fn h_k_b(k: u64, b: Bound, n: usize) -> SymPoly {
    let b = match b {
        Bound::Unbounded => return h(k, n),
        Bound::Finite(b) => b,
    };
    assert!(b >= 1);
    let mut sum = SymPoly::zero(n);
    let mut l = 0u64;
    while l * b <= k && l as usize <= n {
        let scaled = if l == 0 {
            SymPoly::one(n)
        } else {
            m(&Partition::new(vec![b as u32; l as usize]), n)
        };
        let term = scaled.mul(&h(k - l * b, n)).expect("same variable count");
        sum = if l % 2 == 0 {
            sum.add(&term)
        } else {
            sum.sub(&term)
        }
        .expect("same variable count");
        l += 1;
    }
    sum
}

/// The Schur coefficients of `h_k^(b)`, each in {-1, 0, 1}.
///
/// The expansion is only stable in enough variables, so `n >= k` is
/// required.
pub fn petrie_coefficients(k: u64, b: u64, n: usize) -> BTreeMap<Partition, BigInt> {
    assert!(n as u64 >= k, "the Schur expansion needs n >= k variables");
    to_schur(&h_k_b(k, Bound::Finite(b), n))
}

/// Verifies the power-sum expansion
/// `h_k^(b) = sum_(|lambda|=k) z_lambda^(-1) (1-b)^(l_b) p_lambda`
/// exactly, clearing denominators by k!.
pub fn power_expansion_check(k: u64, b: u64, n: usize) -> bool {
    let kf = factorial(k);
    let lhs = h_k_b(k, Bound::Finite(b), n).scalar_mul(&kf);
    let mut rhs = SymPoly::zero(n);
    for lambda in partitions_of(k as u32) {
        let weight = &kf / lambda.z()
            * BigInt::from(1 - b as i64).pow(lambda.parts_divisible_by(b) as u32);
        rhs = rhs
            .add(&p_prod(&lambda, n).scalar_mul(&weight))
            .expect("same variable count");
    }
    lhs == rhs
}

/// `C(n,k)^(b)` via the partition sum
/// `sum z_lambda^(-1) (1-b)^(l_b) n^(l(lambda))`, in exact rational
/// arithmetic cleared by k!.
pub fn bnomial_partition_sum(n: u64, k: u64, b: u64) -> Result<BigInt, Error> {
    let kf = factorial(k);
    let mut num = BigInt::ZERO;
    for lambda in partitions_of(k as u32) {
        num += &kf / lambda.z()
            * BigInt::from(1 - b as i64).pow(lambda.parts_divisible_by(b) as u32)
            * BigInt::from(n).pow(lambda.len() as u32);
    }
    exact_quotient(num, &kf)
}

/// The exponent list for the principal specialization in each
/// divisibility regime: `(0, ..., n-1)` for d | n and d | (n-1),
/// `(1, ..., n)` for d | (n+1).
pub fn specialization_exponents(n: u64, case: Case) -> Vec<i64> {
    match case {
        Case::A | Case::B => (0..n as i64).collect(),
        Case::C => (1..=n as i64).collect(),
    }
}

/// Closed form for the power sum `p_lambda` at the root-of-unity
/// specialization of the given regime.
pub fn lemma_pow(lambda: &Partition, n: u64, d: u64, case: Case) -> BigInt {
    assert!(d >= 1);
    let l = lambda.len() as u32;
    let l_d = lambda.parts_divisible_by(d) as u32;
    match case {
        Case::A => {
            assert!(n % d == 0, "case a requires d | n");
            if l_d == l {
                BigInt::from(n).pow(l)
            } else {
                BigInt::ZERO
            }
        }
        Case::B => {
            assert!(n >= 1 && (n - 1) % d == 0, "case b requires d | n-1");
            BigInt::from(n).pow(l_d)
        }
        Case::C => {
            assert!((n + 1) % d == 0, "case c requires d | n+1");
            let v = BigInt::from(n).pow(l_d);
            if (l - l_d) % 2 == 0 {
                v
            } else {
                -v
            }
        }
    }
}

/// The partition-sum value of `<n,k>_omega^(b)` (twisted by `omega^k` in
/// the d | (n+1) regime), in exact arithmetic.
///
/// The d | n form divides the partition through by d, which is only
/// valid for gcd(b,d) = 1; the other two regimes carry no such
/// hypothesis.
pub fn corollary_hbpow(n: u64, k: u64, b: u64, d: u64, case: Case) -> Result<BigInt, Error> {
    assert!(d >= 1);
    match case {
        Case::A => {
            assert!(n % d == 0, "case a requires d | n");
            assert!(
                num_integer::gcd(b, d) == 1,
                "the divided partition sum requires gcd(b,d) = 1"
            );
            if k % d != 0 {
                return Ok(BigInt::ZERO);
            }
            let (k, n) = (k / d, n / d);
            let kf = factorial(k);
            let mut num = BigInt::ZERO;
            for lambda in partitions_of(k as u32) {
                num += &kf / lambda.z()
                    * BigInt::from(1 - b as i64).pow(lambda.parts_divisible_by(b) as u32)
                    * BigInt::from(n).pow(lambda.len() as u32);
            }
            exact_quotient(num, &kf)
        }
        Case::B | Case::C => {
            let kf = factorial(k);
            let mut num = BigInt::ZERO;
            for lambda in partitions_of(k as u32) {
                let mut term = &kf / lambda.z()
                    * BigInt::from(1 - b as i64).pow(lambda.parts_divisible_by(b) as u32)
                    * BigInt::from(n).pow(lambda.parts_divisible_by(d) as u32);
                if case == Case::C {
                    assert!((n + 1) % d == 0, "case c requires d | n+1");
                    let flips = lambda.len() - lambda.parts_divisible_by(d);
                    if flips % 2 == 1 {
                        term = -term;
                    }
                } else {
                    assert!(n >= 1 && (n - 1) % d == 0, "case b requires d | n-1");
                }
                num += term;
            }
            exact_quotient(num, &kf)
        }
    }
}

fn exact_quotient(num: BigInt, den: &BigInt) -> Result<BigInt, Error> {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    if r == BigInt::ZERO {
        Ok(q)
    } else {
        Err(Error::NonIntegerResult)
    }
}

/// The four dual-Cauchy expansions of `h_k^(b)`, in the order
/// power-sum / monomial / elementary / Schur.
///
/// Every root-of-unity coefficient (`p_lambda`, `e_lambda`, `m_lambda`,
/// `s_(lambda')` at `zeta, ..., zeta^(b-1)` for a primitive b-th root
/// `zeta`) must reduce to a rational integer; a non-constant
/// representative is reported as [`Error::NonIntegerCoefficient`].
pub fn cauchy_expansions(k: u64, b: u64, n: usize) -> Result<[SymPoly; 4], Error> {
    assert!(b >= 2);
    let zeta_vars = (b - 1) as usize;
    let exps: Vec<i64> = (1..=b as i64 - 1).collect();
    let spec = |f: &SymPoly| -> Result<BigInt, Error> {
        f.specialize(&exps, b)
            .as_integer()
            .ok_or(Error::NonIntegerCoefficient)
    };
    let kf = factorial(k);
    let mut by_powersum = SymPoly::zero(n);
    let mut by_monomial = SymPoly::zero(n);
    let mut by_elementary = SymPoly::zero(n);
    let mut by_schur = SymPoly::zero(n);
    for lambda in partitions_of(k as u32) {
        let p_coeff = spec(&p_prod(&lambda, zeta_vars))?;
        let mut weight = &kf / lambda.z() * &p_coeff;
        if lambda.len() % 2 == 1 {
            weight = -weight;
        }
        by_powersum = by_powersum
            .add(&p_prod(&lambda, n).scalar_mul(&weight))
            .expect("same variable count");

        let e_coeff = spec(&e_prod(&lambda, zeta_vars))?;
        by_monomial = by_monomial
            .add(&m(&lambda, n).scalar_mul(&e_coeff))
            .expect("same variable count");

        let m_coeff = spec(&m(&lambda, zeta_vars))?;
        by_elementary = by_elementary
            .add(&e_prod(&lambda, n).scalar_mul(&m_coeff))
            .expect("same variable count");

        let s_coeff = spec(&schur(&lambda.conjugate(), zeta_vars))?;
        by_schur = by_schur
            .add(&schur(&lambda, n).scalar_mul(&s_coeff))
            .expect("same variable count");
    }
    by_powersum = by_powersum.div_exact_scalar(&kf)?;
    if k % 2 == 1 {
        by_monomial = by_monomial.neg();
        by_elementary = by_elementary.neg();
        by_schur = by_schur.neg();
    }
    Ok([by_powersum, by_monomial, by_elementary, by_schur])
}

//! q-integers, Gaussian binomials, b-nomial coefficients and cyclotomic
//! polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

/// Multiplicity bound for multisets: a finite `b` restricts entries to
/// `0..b`, `Unbounded` places no restriction.
///
/// Since a multiset of weight `k` never uses a multiplicity above `k`,
/// `Unbounded` behaves as `k + 1` whenever a concrete `k` is in play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(u64),
    Unbounded,
}

impl Bound {
    /// The concrete bound to use for weight-`k` questions.
    pub fn effective(&self, k: u64) -> u64 {
        match self {
            Bound::Finite(b) => *b,
            Bound::Unbounded => k + 1,
        }
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Finite(b) => write!(f, "{b}"),
            Bound::Unbounded => write!(f, "inf"),
        }
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 0`.
pub fn q_integer(n: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::one(); n as usize])
}

/// Sorted divisors of `n` (for `n >= 1`).
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Ordinary binomial coefficient: `C(n, 0) = 1` for every n, zero
/// outside `0 <= k <= n` otherwise.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Gaussian binomial coefficient as a polynomial in q, zero outside
/// `0 <= k <= n`.
///
/// Computed by the q-Pascal recurrence; the product-formula route serves
/// as an independent oracle in the tests.
pub fn gaussian_binomial(n: i64, k: i64) -> IntPoly {
    if k == 0 {
        return IntPoly::one();
    }
    if k < 0 || n < 0 || k > n {
        return IntPoly::zero();
    }
    let (n, k) = (n as usize, k.min(n - k) as usize);
    // row[j] = [m choose j]_q after processing row m
    let mut row = vec![IntPoly::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity((row.len() + 1).min(k + 1));
        next.push(IntPoly::one());
        for j in 1..=row.len().min(k) {
            let upper = if j < row.len() {
                &row[j].times_monomial(j) + &row[j - 1]
            } else {
                row[j - 1].clone()
            };
            next.push(upper);
        }
        row = next;
    }
    row[k].clone()
}

/// The b-nomial coefficient `C(n,k)^(b)`: the coefficient of `t^k` in
/// `(1 + t + ... + t^(b-1))^n`.
pub fn bnomial(n: u64, k: i64, b: Bound) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let b = b.effective(k as u64);
    assert!(b >= 1);
    if (k as u64) > (b - 1) * n {
        return BigInt::zero();
    }
    // inclusion-exclusion against the unbounded count
    let (n, k, b) = (n as i64, k, b as i64);
    let mut sum = BigInt::zero();
    let mut j = 0;
    while j * b <= k {
        let term = binomial(n, j) * binomial(n - 1 + k - j * b, n - 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        j += 1;
    }
    sum
}

/// The double generating function `prod_{i=0}^{n-1} [b]_{q^i t}`, stored
/// layer by layer: `layers[k]` is `<n,k>_q^(b)` as a polynomial in q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateGf {
    layers: Vec<IntPoly>,
}

impl BivariateGf {
    pub fn layers(&self) -> &[IntPoly] {
        &self.layers
    }

    /// The coefficient of `t^k`, zero beyond the top layer.
    pub fn layer(&self, k: usize) -> IntPoly {
        self.layers.get(k).cloned().unwrap_or_else(IntPoly::zero)
    }
}

/// All `<n,k>_q^(b)` at once, as the layers of `prod_{i=0}^{n-1} [b]_{q^i t}`.
pub fn qbnomial_gf(n: u64, b: u64) -> BivariateGf {
    assert!(b >= 1);
    let mut layers = vec![IntPoly::one()];
    for i in 0..n {
        let top = ((b - 1) * (i + 1)) as usize;
        let mut next = vec![IntPoly::zero(); top + 1];
        for (k, layer) in layers.iter().enumerate() {
            if layer.is_zero() {
                continue;
            }
            for j in 0..b as usize {
                // multiply by the term q^(i j) t^j of [b]_{q^i t}
                next[k + j] = &next[k + j] + &layer.times_monomial((i as usize) * j);
            }
        }
        layers = next;
    }
    BivariateGf { layers }
}

/// `<n,k>_q^(b)`: the generating polynomial of the statistic
/// `x_2 + 2 x_3 + ... + (n-1) x_n` on weight-k bounded vectors.
pub fn qbnomial(n: u64, k: u64, b: Bound) -> IntPoly {
    match b {
        Bound::Finite(b) => qbnomial_gf(n, b).layer(k as usize),
        Bound::Unbounded => gaussian_binomial(n as i64 - 1 + k as i64, k as i64),
    }
}

/// The cyclotomic polynomial `Phi_d(q)`, computed by dividing `q^d - 1`
/// by the cyclotomic polynomials of the proper divisors of d.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1);
    static MEMO: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut memo = memo.lock().unwrap();
    if let Some(p) = memo.get(&d) {
        return p.clone();
    }
    for e in divisors(d) {
        if memo.contains_key(&e) {
            continue;
        }
        let mut num = IntPoly::monomial(BigInt::one(), e as usize);
        num = &num - &IntPoly::one();
        for f in divisors(e) {
            if f < e {
                num = num
                    .exact_div(&memo[&f])
                    .expect("q^e - 1 is divisible by its cyclotomic factors");
            }
        }
        memo.insert(e, num);
    }
    memo[&d].clone()
}

//! Symmetric polynomials in n variables, stored in the monomial basis.
//!
//! A [`SymPoly`] maps partitions (of length at most n) to integer
//! coefficients; the partition `lambda` stands for the monomial
//! symmetric polynomial `m_lambda`. The submodules add the Schur basis
//! ([`schur`], [`to_schur`]) and the b-bounded family with its
//! expansions ([`h_k_b`], [`power_expansion_check`], [`cauchy_expansions`]).

mod expand;
mod schur;

pub use expand::{
    bnomial_partition_sum, cauchy_expansions, corollary_hbpow, h_k_b, lemma_pow,
    petrie_coefficients, power_expansion_check, specialization_exponents,
};
pub use schur::{schur, to_schur};

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::{reduce, CycElem};
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::IntPoly;

/// A symmetric polynomial in `n` variables in the monomial basis: a map
/// from partitions of length at most n to nonzero integer coefficients,
/// with the empty partition carrying the constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        SymPoly::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut s = SymPoly::zero(n);
        s.add_term(Partition::empty(), c);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The lexicographically greatest term, which for homogeneous input
    /// is dominance-maximal.
    pub fn leading_term(&self) -> Option<(Partition, BigInt)> {
        self.terms
            .last_key_value()
            .map(|(l, c)| (l.clone(), c.clone()))
    }

    /// Adds `c * m_lambda` in place, dropping the key if it cancels.
    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        assert!(lambda.len() <= self.n, "partition is longer than the variable count");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly, Error> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<SymPoly, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.n);
        }
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, failing if any quotient is not
    /// an integer.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<SymPoly, Error> {
        let mut terms = BTreeMap::new();
        for (l, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonIntegerResult);
            }
            terms.insert(l.clone(), q);
        }
        Ok(SymPoly { n: self.n, terms })
    }

    /// Exact product, re-expressed in the monomial basis.
    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly, Error> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SymPoly::zero(self.n));
        }
        let a = self.monomial_vectors();
        let b = other.monomial_vectors();
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        let mut w = vec![0u32; self.n];
        for (u, cu) in &small {
            for (v, cv) in &large {
                // only weakly decreasing exponent sums name a partition;
                // the rest of the orbit carries no extra information
                let mut sorted = true;
                for i in 0..self.n {
                    w[i] = u[i] + v[i];
                    if i > 0 && w[i] > w[i - 1] {
                        sorted = false;
                        break;
                    }
                }
                if !sorted {
                    continue;
                }
                *acc.entry(w.clone()).or_insert_with(BigInt::zero) += cu * cv;
            }
        }
        let mut out = SymPoly::zero(self.n);
        for (vec, c) in acc {
            let parts: Vec<u32> = vec.into_iter().take_while(|&x| x > 0).collect();
            out.add_term(Partition::new(parts), c);
        }
        Ok(out)
    }

    /// Expands the stored orbits into explicit exponent vectors of
    /// length n.
    pub fn monomial_vectors(&self) -> Vec<(Vec<u32>, BigInt)> {
        let mut out = Vec::new();
        for (lambda, c) in &self.terms {
            let mut v = vec![0u32; self.n];
            v[..lambda.len()].copy_from_slice(lambda.parts());
            v.reverse(); // lexicographically least arrangement
            loop {
                out.push((v.clone(), c.clone()));
                if !next_permutation(&mut v) {
                    break;
                }
            }
        }
        out
    }

    /// Number of distinct monomials in the orbit of `lambda` among n
    /// variables.
    pub fn orbit_size(lambda: &Partition, n: usize) -> BigInt {
        assert!(lambda.len() <= n);
        let mut size: BigInt = (1..=n).map(BigInt::from).product();
        let mut div: BigInt = (1..=n - lambda.len()).map(BigInt::from).product();
        let mut i = 0;
        while i < lambda.len() {
            let mut j = i;
            while j < lambda.len() && lambda.parts()[j] == lambda.parts()[i] {
                j += 1;
            }
            div *= (1..=j - i).map(BigInt::from).product::<BigInt>();
            i = j;
        }
        size /= div;
        size
    }

    /// The value at `z_1 = ... = z_n = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(l, c)| c * SymPoly::orbit_size(l, self.n))
            .sum()
    }

    /// Substitutes `z_i = omega^(a_i)` for a primitive d-th root of
    /// unity and returns the reduced cyclotomic element. With d = 1 this
    /// is the integer value at all-ones.
    pub fn specialize(&self, exponents: &[i64], d: u64) -> CycElem {
        assert_eq!(exponents.len(), self.n, "one exponent per variable");
        assert!(d >= 1);
        let mut counts = vec![BigInt::zero(); d as usize];
        for (u, c) in self.monomial_vectors() {
            let dot: i64 = u
                .iter()
                .zip(exponents)
                .map(|(&x, &a)| x as i64 * a)
                .sum();
            counts[dot.rem_euclid(d as i64) as usize] += c;
        }
        reduce(&IntPoly::from_coeffs(counts), d)
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u64, SymPoly> {
        let mut out: BTreeMap<u64, SymPoly> = BTreeMap::new();
        for (l, c) in &self.terms {
            out.entry(l.weight())
                .or_insert_with(|| SymPoly::zero(self.n))
                .add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|l| l.weight()).max()
    }

    fn check_vars(&self, other: &SymPoly) -> Result<(), Error> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch(self.n, other.n))
        }
    }
}

impl std::fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "SymPoly(0)");
        }
        let body: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| {
                if c.is_one() {
                    format!("m{l}")
                } else if (-c).is_one() {
                    format!("-m{l}")
                } else {
                    format!("{c}*m{l}")
                }
            })
            .collect();
        write!(f, "SymPoly({})", body.join(" + "))
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The monomial symmetric polynomial `m_lambda`, zero when the partition
/// is longer than the variable count.
pub fn m(lambda: &Partition, n: usize) -> SymPoly {
    let mut s = SymPoly::zero(n);
    if lambda.len() <= n {
        s.add_term(lambda.clone(), BigInt::one());
    }
    s
}

/// The elementary symmetric polynomial `e_k`.
pub fn e(k: u64, n: usize) -> SymPoly {
    if k == 0 {
        return SymPoly::one(n);
    }
    if k as usize > n {
        return SymPoly::zero(n);
    }
    m(&Partition::new(vec![1; k as usize]), n)
}

/// The complete homogeneous symmetric polynomial `h_k`: every monomial
/// of degree k once.
pub fn h(k: u64, n: usize) -> SymPoly {
    let mut s = SymPoly::zero(n);
    for lambda in crate::partition::partitions_bounded(k as u32, k as u32, n) {
        s.add_term(lambda, BigInt::one());
    }
    s
}

/// The power sum `p_k = z_1^k + ... + z_n^k`.
pub fn p(k: u64, n: usize) -> SymPoly {
    if k == 0 {
        return SymPoly::one(n);
    }
    m(&Partition::new(vec![k as u32]), n)
}

/// Product `e_{lambda_1} e_{lambda_2} ...`.
pub fn e_prod(lambda: &Partition, n: usize) -> SymPoly {
    basis_product(lambda, n, e)
}

/// Product `h_{lambda_1} h_{lambda_2} ...`.
pub fn h_prod(lambda: &Partition, n: usize) -> SymPoly {
    basis_product(lambda, n, h)
}

/// Product `p_{lambda_1} p_{lambda_2} ...`.
pub fn p_prod(lambda: &Partition, n: usize) -> SymPoly {
    basis_product(lambda, n, p)
}

fn basis_product(lambda: &Partition, n: usize, gen: fn(u64, usize) -> SymPoly) -> SymPoly {
    let mut acc = SymPoly::one(n);
    for &part in lambda.parts() {
        acc = acc
            .mul(&gen(part as u64, n))
            .expect("factors share the variable count");
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn monomial_orbit_sizes() {
        // m_{(2,1)} in 3 variables has 6 monomials
        assert_eq!(SymPoly::orbit_size(&pt(&[2, 1]), 3), BigInt::from(6));
        assert_eq!(SymPoly::orbit_size(&pt(&[2, 2]), 3), BigInt::from(3));
        assert_eq!(m(&pt(&[2, 1]), 3).eval_ones(), BigInt::from(6));
        assert_eq!(m(&pt(&[2, 1]), 3).monomial_vectors().len(), 6);
    }

    #[test]
    fn m_vanishes_beyond_variable_count() {
        assert!(m(&pt(&[1, 1, 1]), 2).is_zero());
        assert!(e(3, 2).is_zero());
    }

    #[test]
    fn h_two_in_two_vars() {
        let expected = m(&pt(&[2]), 2).add(&m(&pt(&[1, 1]), 2)).unwrap();
        assert_eq!(h(2, 2), expected);
    }

    #[test]
    fn basis_degree_zero_is_one() {
        for n in 0..=3 {
            assert_eq!(e(0, n), SymPoly::one(n));
            assert_eq!(h(0, n), SymPoly::one(n));
            assert_eq!(p(0, n), SymPoly::one(n));
        }
    }

    #[test]
    fn square_of_e1() {
        let e1 = e(1, 2);
        let sq = e1.mul(&e1).unwrap();
        let expected = m(&pt(&[2]), 2)
            .add(&m(&pt(&[1, 1]), 2).scalar_mul(&BigInt::from(2)))
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn mul_by_one_and_zero() {
        let f = h(3, 3);
        assert_eq!(f.mul(&SymPoly::one(3)).unwrap(), f);
        assert!(f.mul(&SymPoly::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn newton_relation_small() {
        // h_1 h_1 - h_2 = e_2
        for n in 2..=5 {
            let lhs = h(1, n).mul(&h(1, n)).unwrap().sub(&h(2, n)).unwrap();
            assert_eq!(lhs, e(2, n));
        }
    }

    #[test]
    fn variable_count_mismatch_reported() {
        let err = h(1, 2).mul(&h(1, 3));
        assert_eq!(err.unwrap_err(), Error::VariableCountMismatch(2, 3));
    }

    #[test]
    fn products_are_degree_additive_and_symmetric() {
        let f = e_prod(&pt(&[2, 1]), 4);
        let g = h_prod(&pt(&[2]), 4);
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod.degree(), Some(5));
        assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    }

    #[test]
    fn specialize_power_sums_at_roots() {
        // p_k(1, omega, ..., omega^(n-1)) = n when d | k, 0 otherwise (d | n)
        for (n, d) in [(6u64, 3u64), (6, 2), (4, 4)] {
            let exps: Vec<i64> = (0..n as i64).collect();
            for k in 1..=8u64 {
                let val = p(k, n as usize).specialize(&exps, d).as_integer().unwrap();
                let expected = if k % d == 0 {
                    BigInt::from(n)
                } else {
                    BigInt::zero()
                };
                assert_eq!(val, expected, "n={n} d={d} k={k}");
            }
        }
    }

    #[test]
    fn specialize_at_d_one_is_all_ones_value() {
        let f = h(3, 4);
        let exps = vec![0i64; 4];
        assert_eq!(f.specialize(&exps, 1).as_integer().unwrap(), f.eval_ones());
    }

    #[test]
    fn homogeneous_components_split() {
        let f = h(2, 3).add(&e(1, 3)).unwrap();
        let comps = f.homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&1], e(1, 3));
        assert_eq!(comps[&2], h(2, 3));
    }

    #[test]
    fn permutation_enumeration_is_complete() {
        let mut v = vec![0u32, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        let mut w = vec![1u32, 1, 0];
        w.sort_unstable();
        let mut count = 1;
        while next_permutation(&mut w) {
            count += 1;
        }
        assert_eq!(count, 3);
    }
}

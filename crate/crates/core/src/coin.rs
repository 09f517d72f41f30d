//! Two-coin Frobenius machinery: denumerants, Sylvester sets, the double
//! abacus, rectangle decomposition and multisections.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::poly::IntPoly;
use crate::qcomb::q_integer;

/// Number of representations `n = k*b + l*d` with `k, l >= 0`, counted by
/// direct enumeration of `k <= n/b`.
///
/// This is the ground-truth oracle; the abacus geometry below is the
/// derived structure tested against it.
pub fn denumerant(b: u64, d: u64, n: u64) -> u64 {
    assert!(b >= 1 && d >= 1);
    (0..=n / b).filter(|k| (n - k * b) % d == 0).count() as u64
}

/// A lattice point of the double abacus, labelled by `x*d + y*b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbacusPoint {
    pub x: i64,
    pub y: i64,
}

/// The congruence permutations of Theorem's rectangle decomposition:
/// `delta[r]*b = r (mod d)`, `beta[r]*d = r (mod b)`, and the row widths
/// `gamma[r] = (delta[r]*b - r)/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceData {
    pub delta: Vec<u64>,
    pub beta: Vec<u64>,
    pub gamma: Vec<u64>,
}

/// A coprime pair of coin values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoinPair {
    b: u64,
    d: u64,
}

impl CoinPair {
    pub fn new(b: u64, d: u64) -> Result<Self, Error> {
        assert!(b >= 1 && d >= 1);
        if num_integer::gcd(b, d) != 1 {
            return Err(Error::NotCoprime(b, d));
        }
        Ok(CoinPair { b, d })
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The label `x*d + y*b`.
    pub fn label(&self, x: i64, y: i64) -> i64 {
        x * self.d as i64 + y * self.b as i64
    }

    /// The sorted set of non-representable numbers, all below `b*d`.
    pub fn sylvester_set(&self) -> Vec<u64> {
        (1..self.b * self.d)
            .filter(|&n| denumerant(self.b, self.d, n) == 0)
            .collect()
    }

    /// The generating polynomial of the Sylvester set.
    pub fn sylvester_poly(&self) -> IntPoly {
        let mut sum = IntPoly::zero();
        for s in self.sylvester_set() {
            sum = &sum + &IntPoly::monomial(BigInt::one(), s as usize);
        }
        sum
    }

    /// `[b]_{t^d} / [b]_t`, computed as `1 + (t - 1) S_{b,d}(t)`.
    pub fn sylvester_identity(&self) -> IntPoly {
        let s = self.sylvester_poly();
        &(&IntPoly::one() + &s.times_monomial(1)) - &s
    }

    /// The unique point of the fundamental row abacus (rows `0..d`) with
    /// the given label.
    pub fn row_point(&self, n: u64) -> AbacusPoint {
        let y = (0..self.d)
            .find(|&y| (y * self.b) % self.d == n % self.d)
            .expect("coprimality makes the row residues a permutation");
        let x = (n as i64 - (y * self.b) as i64) / self.d as i64;
        AbacusPoint { x, y: y as i64 }
    }

    /// The index of the block of the fundamental row abacus containing
    /// the label `n`; equal to the denumerant by the abacus lemma.
    ///
    /// Block k covers `(k-1)b <= x < kb`, so the triangular zeroth block
    /// holds the Sylvester labels and `(0,0)` with label 0 sits in block 1.
    pub fn block_index(&self, n: u64) -> u64 {
        let p = self.row_point(n);
        (p.x.div_euclid(self.b as i64) + 1) as u64
    }

    pub fn congruence_data(&self) -> CongruenceData {
        let solve = |modulus: u64, multiplier: u64, r: u64| {
            (0..modulus)
                .find(|&s| (s * multiplier) % modulus == r % modulus)
                .expect("coprimality guarantees a solution")
        };
        let delta: Vec<u64> = (0..self.d).map(|r| solve(self.d, self.b, r)).collect();
        let beta: Vec<u64> = (0..self.b).map(|r| solve(self.b, self.d, r)).collect();
        let gamma: Vec<u64> = delta
            .iter()
            .enumerate()
            .map(|(r, &dr)| (dr * self.b - r as u64) / self.d)
            .collect();
        CongruenceData { delta, beta, gamma }
    }

    /// The two disjoint label rectangles whose difference is
    /// `[b]_{t^d}/[b]_t`: positive part `[beta_1]_{t^d} [delta_1]_{t^b}`,
    /// negative part `t [b-beta_1]_{t^d} [d-delta_1]_{t^b}`.
    pub fn rectangle_decomposition(&self) -> (IntPoly, IntPoly) {
        if self.b == 1 || self.d == 1 {
            return (IntPoly::one(), IntPoly::zero());
        }
        let cd = self.congruence_data();
        let (b1, d1) = (cd.beta[1], cd.delta[1]);
        let positive = &q_integer(b1).inflate(self.d as usize)
            * &q_integer(d1).inflate(self.b as usize);
        let negative = (&q_integer(self.b - b1).inflate(self.d as usize)
            * &q_integer(self.d - d1).inflate(self.b as usize))
            .times_monomial(1);
        (positive, negative)
    }

    /// The d-multisection `f_r` of `[b]_{t^d}/[b]_t`: the terms congruent
    /// to r mod d, collected as a polynomial with
    /// `sum_r t^r f_r(t^d) = [b]_{t^d}/[b]_t`.
    pub fn multisection_f(&self, r: u64) -> IntPoly {
        assert!(r < self.d);
        if self.b == 1 || self.d == 1 {
            // the quotient is the constant 1, all of it in residue class 0
            return if r == 0 {
                IntPoly::one()
            } else {
                IntPoly::zero()
            };
        }
        let cd = self.congruence_data();
        let (b1, d1) = (cd.beta[1], cd.delta[1]);
        let gr = cd.gamma[r as usize];
        if cd.delta[r as usize] < d1 {
            q_integer(b1).times_monomial(gr as usize)
        } else {
            let shift = gr as i64 - self.b as i64 + b1 as i64;
            assert!(shift >= 0, "negative-branch shift must be a natural number");
            -q_integer(self.b - b1).times_monomial(shift as usize)
        }
    }

    /// The r-th signed unimodal slice `g_r = f_r * [b]_t^((n+1)/d - 1)` of
    /// the d | (n+1) specialization, together with its sign.
    pub fn corollary_g(&self, n: u64, r: u64) -> (IntPoly, i8) {
        assert!((n + 1) % self.d == 0, "requires d | n+1");
        let f = self.multisection_f(r);
        let g = &f * &q_integer(self.b).pow((n + 1) / self.d - 1);
        let epsilon = if self.b == 1 || self.d == 1 {
            1
        } else {
            let cd = self.congruence_data();
            if cd.delta[r as usize] < cd.delta[1] {
                1
            } else {
                -1
            }
        };
        (g, epsilon)
    }

    /// ASCII rendering of the double abacus over a window: labels of
    /// points with `x*d + y*b >= 0`, the fundamental row abacus in
    /// brackets, and block boundaries every b columns.
    pub fn render_abacus(
        &self,
        x_range: RangeInclusive<i64>,
        y_range: RangeInclusive<i64>,
    ) -> String {
        let width = x_range
            .clone()
            .flat_map(|x| y_range.clone().map(move |y| self.label(x, y)))
            .filter(|&l| l >= 0)
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for y in y_range.rev() {
            out.push_str(&format!("y={y:>3} "));
            for x in x_range.clone() {
                let sep = if x.rem_euclid(self.b as i64) == 0 {
                    '|'
                } else {
                    ' '
                };
                out.push(sep);
                let label = self.label(x, y);
                if label < 0 {
                    out.push_str(&format!("{:>width$} ", "."));
                } else if (0..self.d as i64).contains(&y) {
                    out.push_str(&format!("[{label:>width$}]"));
                } else {
                    out.push_str(&format!(" {label:>width$} "));
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(b: u64, d: u64) -> CoinPair {
        CoinPair::new(b, d).unwrap()
    }

    #[test]
    fn denumerant_worked_values() {
        assert_eq!(denumerant(7, 5, 41), 1);
        assert_eq!(denumerant(7, 5, 88), 2);
        assert_eq!(denumerant(7, 5, 0), 1);
        assert_eq!(denumerant(3, 4, 0), 1);
    }

    #[test]
    fn coprimality_is_enforced() {
        assert_eq!(CoinPair::new(6, 4), Err(Error::NotCoprime(6, 4)));
        assert!(CoinPair::new(7, 5).is_ok());
        assert!(CoinPair::new(1, 9).is_ok());
    }

    #[test]
    fn sylvester_set_paper_values() {
        assert_eq!(
            pair(7, 5).sylvester_set(),
            vec![1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]
        );
        assert_eq!(
            pair(3, 5).sylvester_poly(),
            IntPoly::from_i64_coeffs(&[0, 1, 1, 0, 1, 0, 0, 1])
        );
        assert_eq!(pair(2, 3).sylvester_set(), vec![1]);
        assert!(pair(1, 6).sylvester_set().is_empty());
    }

    #[test]
    fn sylvester_identity_values() {
        let mut expected = IntPoly::one();
        for e in [5, 7, 10, 12, 14, 17, 19, 24] {
            expected = &expected + &IntPoly::monomial(BigInt::one(), e);
        }
        for e in [1, 6, 8, 11, 13, 16, 18, 23] {
            expected = &expected - &IntPoly::monomial(BigInt::one(), e);
        }
        assert_eq!(pair(7, 5).sylvester_identity(), expected);
        assert_eq!(pair(4, 1).sylvester_identity(), IntPoly::one());
        assert_eq!(
            pair(2, 3).sylvester_identity(),
            IntPoly::from_i64_coeffs(&[1, -1, 1])
        );
    }

    #[test]
    fn block_index_examples() {
        let p = pair(7, 5);
        assert_eq!(p.row_point(41), AbacusPoint { x: 4, y: 3 });
        assert_eq!(p.block_index(41), 1);
        assert_eq!(p.block_index(23), 0);
        assert_eq!(p.block_index(88), 2);
        // the n = 0 corner is pinned by the oracle value nu(0) = 1
        assert_eq!(p.block_index(0), denumerant(7, 5, 0));
    }

    #[test]
    fn congruence_data_paper_values() {
        let cd = pair(7, 5).congruence_data();
        assert_eq!(cd.delta, vec![0, 3, 1, 4, 2]);
        assert_eq!(cd.beta, vec![0, 3, 6, 2, 5, 1, 4]);
        assert_eq!(cd.gamma, vec![0, 4, 1, 5, 2]);
    }

    #[test]
    fn rectangle_supports_paper_values() {
        let (pos, neg) = pair(7, 5).rectangle_decomposition();
        let support = |p: &IntPoly| -> Vec<usize> {
            (0..=p.degree().unwrap())
                .filter(|&i| !p.coeff(i).eq(&BigInt::ZERO))
                .collect()
        };
        let mut pos_support = support(&pos);
        pos_support.sort_unstable();
        assert_eq!(pos_support, vec![0, 5, 7, 10, 12, 14, 17, 19, 24]);
        let mut neg_support = support(&neg);
        neg_support.sort_unstable();
        assert_eq!(neg_support, vec![1, 6, 8, 11, 13, 16, 18, 23]);
        assert_eq!(&pos - &neg, pair(7, 5).sylvester_identity());
    }

    #[test]
    fn rectangle_small_case_by_hand() {
        // (b,d) = (2,3): beta_1 = 1, delta_1 = 2
        let (pos, neg) = pair(2, 3).rectangle_decomposition();
        assert_eq!(pos, IntPoly::from_i64_coeffs(&[1, 0, 1]));
        assert_eq!(neg, IntPoly::from_i64_coeffs(&[0, 1]));
        assert_eq!(&pos - &neg, pair(2, 3).sylvester_identity());
    }

    #[test]
    fn multisection_paper_rows() {
        let p = pair(7, 5);
        assert_eq!(p.multisection_f(0), q_integer(3));
        assert_eq!(p.multisection_f(1), -q_integer(4));
        assert_eq!(p.multisection_f(4), q_integer(3).times_monomial(2));
    }

    #[test]
    fn multisection_reconstructs_identity() {
        for (b, d) in [(7, 5), (5, 7), (2, 3), (3, 8), (9, 4), (4, 1), (1, 5)] {
            let p = pair(b, d);
            let mut sum = IntPoly::zero();
            for r in 0..d {
                sum = &sum
                    + &p.multisection_f(r)
                        .inflate(d as usize)
                        .times_monomial(r as usize);
            }
            assert_eq!(sum, p.sylvester_identity(), "(b,d)=({b},{d})");
        }
    }

    #[test]
    fn corollary_g_reduces_to_multisection() {
        let p = pair(7, 5);
        for r in 0..5 {
            let (g, eps) = p.corollary_g(4, r);
            assert_eq!(g, p.multisection_f(r));
            let expected_sign = if [0, 2, 4].contains(&r) { 1 } else { -1 };
            assert_eq!(eps, expected_sign);
        }
    }

    #[test]
    fn abacus_window_labels() {
        let p = pair(7, 5);
        assert_eq!(p.label(0, 0), 0);
        assert_eq!(p.label(4, 3), 41);
        let grid = p.render_abacus(-3..=4, 0..=4);
        assert!(grid.contains("[ 0]"));
        // leftmost label in row y of R is delta(y mod d)
        let cd = p.congruence_data();
        for y in 0..5u64 {
            let leftmost = (0..)
                .map(|x| p.label(x - 10, y as i64))
                .find(|&l| l >= 0)
                .unwrap();
            assert_eq!(leftmost as u64 % 5, (y * 7) % 5);
            assert_eq!(cd.delta[(leftmost % 5) as usize], y);
        }
    }
}

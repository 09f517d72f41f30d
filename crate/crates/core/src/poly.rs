//! Dense univariate polynomials over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A polynomial with `BigInt` coefficients, stored densely.
///
/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are trimmed so
/// the highest stored coefficient is nonzero, and the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `coeff * x^exp`.
    pub fn monomial(coeff: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        IntPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from low-to-high coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, e: u64) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `x -> x^d`, spreading the coefficients out.
    pub fn inflate(&self, d: usize) -> IntPoly {
        assert!(d >= 1, "inflation step must be positive");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Multiplies by `x^exp`.
    pub fn times_monomial(&self, exp: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Exact division: returns `r` with `divisor * r = self`.
    ///
    /// Fails with [`Error::NonExactDivision`] when the remainder is
    /// nonzero or a non-integer quotient coefficient would arise.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, Error> {
        if divisor.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return Err(Error::NonExactDivision);
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - dd];
        for i in (dd..self.coeffs.len()).rev() {
            let top = std::mem::take(&mut rem[i]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                rem[i - dd + j] -= &q * c;
            }
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Remainder modulo a monic polynomial.
    pub fn monic_rem(&self, modulus: &IntPoly) -> IntPoly {
        assert!(
            modulus.leading_coeff().is_some_and(One::is_one),
            "modulus must be monic"
        );
        let dd = modulus.coeffs.len() - 1;
        if dd == 0 {
            return IntPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        for i in (dd..rem.len()).rev() {
            let top = std::mem::take(&mut rem[i]);
            if top.is_zero() {
                continue;
            }
            for (j, c) in modulus.coeffs[..dd].iter().enumerate() {
                rem[i - dd + j] -= &top * c;
            }
        }
        IntPoly::from_coeffs(rem)
    }

    /// Collects the terms `x^(r + k*d)` into the coefficient of `x^k`.
    ///
    /// The multisections reassemble the original polynomial:
    /// `sum_r x^r * multisect(p, d, r)(x^d) = p`.
    pub fn multisect(&self, d: usize, r: usize) -> IntPoly {
        assert!(d >= 1 && r < d, "residue must satisfy 0 <= r < d");
        let coeffs = self
            .coeffs
            .iter()
            .skip(r)
            .step_by(d)
            .cloned()
            .collect::<Vec<_>>();
        IntPoly::from_coeffs(coeffs)
    }

    /// Renders with ascending powers and explicit signs, e.g. `1 - t + t^2`.
    pub fn render(&self, var: &str) -> String {
        self.render_with(var, |v, e| format!("{v}^{e}"))
    }

    /// LaTeX rendering with ascending powers, e.g. `1-t+t^{2}`.
    pub fn render_latex(&self, var: &str) -> String {
        let body = self.render_with(var, |v, e| format!("{v}^{{{e}}}"));
        body.replace(" + ", "+").replace(" - ", "-")
    }

    fn render_with(&self, var: &str, power: impl Fn(&str, usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = mag.is_one();
            if !unit || i == 0 {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if !unit {
                    out.push('*');
                }
                if i == 1 {
                    out.push_str(var);
                } else {
                    out.push_str(&power(var, i));
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.render("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

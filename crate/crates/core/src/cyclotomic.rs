//! Arithmetic in `Z[q]/Phi_d(q)`: exact evaluation at a primitive d-th
//! root of unity.
//!
//! An element is kept as its unique reduced representative modulo the
//! cyclotomic polynomial, so "is an integer" is just "the representative
//! is constant".

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::poly::IntPoly;
use crate::qcomb::cyclotomic;

/// An element of `Z[omega]` with `omega` a primitive d-th root of unity,
/// represented modulo `Phi_d(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycElem {
    d: u64,
    rep: IntPoly,
}

impl CycElem {
    /// The conductor d.
    pub fn conductor(&self) -> u64 {
        self.d
    }

    /// The reduced representative, of degree below `deg Phi_d`.
    pub fn rep(&self) -> &IntPoly {
        &self.rep
    }

    pub fn from_integer(d: u64, value: BigInt) -> CycElem {
        reduce(&IntPoly::constant(value), d)
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The integer value, when the representative is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.rep.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn add(&self, other: &CycElem) -> Result<CycElem, Error> {
        self.check_conductor(other)?;
        Ok(reduce(&(&self.rep + &other.rep), self.d))
    }

    pub fn mul(&self, other: &CycElem) -> Result<CycElem, Error> {
        self.check_conductor(other)?;
        Ok(reduce(&(&self.rep * &other.rep), self.d))
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            d: self.d,
            rep: -&self.rep,
        }
    }

    fn check_conductor(&self, other: &CycElem) -> Result<(), Error> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.d, other.d))
        }
    }
}

/// Reduces an integer polynomial modulo `Phi_d(q)`, i.e. substitutes
/// `q = omega`.
pub fn reduce(p: &IntPoly, d: u64) -> CycElem {
    assert!(d >= 1);
    CycElem {
        d,
        rep: p.monic_rem(&cyclotomic(d)),
    }
}

/// `omega^k` for any integer k, via reduction of the exponent mod d.
pub fn root_power(d: u64, k: i64) -> CycElem {
    assert!(d >= 1);
    let e = k.rem_euclid(d as i64) as usize;
    reduce(&IntPoly::monomial(BigInt::from(1), e), d)
}

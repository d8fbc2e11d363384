//! The rational function field Q(v). The distinguished variable v is a
//! square root of the generic parameter q, so q = v² always has a square
//! root in the field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// A reduced fraction of integer polynomials in v: gcd(num, den) = 1, the
/// contents share no factor, and den has positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_zero() || (g.degree() == Some(0) && g.coeff(0).is_one()) {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let c = num_integer::gcd(num.content(), den.content());
        if !c.is_one() && !c.is_zero() {
            num = IntPoly::from_coeffs(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// The variable v itself.
    pub fn v() -> Self {
        RatFunc {
            num: IntPoly::monomial(BigInt::one(), 1),
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree().unwrap_or(0) == 0 {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    /// `Some((c, k))` when the value is the monomial c·v^k with k ∈ ℤ.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        let dn = self.num.degree()?;
        let dd = self.den.degree().unwrap_or(0);
        let num_mono = self.num.coeffs().iter().take(dn).all(Zero::is_zero);
        let den_mono = self.den.coeffs().iter().take(dd).all(Zero::is_zero);
        if num_mono && den_mono {
            Some((
                BigRational::new(self.num.coeff(dn), self.den.coeff(dd)),
                dn as i64 - dd as i64,
            ))
        } else {
            None
        }
    }
}

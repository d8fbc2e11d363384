//! Arithmetic in the cyclotomic field Q(ζ_N): elements are integer
//! polynomials in ζ_N of degree < φ(N) over a positive integer denominator,
//! reduced modulo Φ_N.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{cyclotomic_polynomial, IntPoly};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic {
    order: u64,
    num: IntPoly,
    den: BigInt,
}

impl Cyclotomic {
    /// Builds `num(ζ_order) / den` in reduced canonical form.
    pub fn new(order: u64, num: IntPoly, den: BigInt) -> Self {
        assert!(order >= 1);
        assert!(!den.is_zero(), "cyclotomic denominator must be nonzero");
        let phi = cyclotomic_polynomial(order);
        let num = num.rem_monic(&phi);
        let (num, den) = if den.is_negative() {
            (num.neg(), -den)
        } else {
            (num, den)
        };
        let g = num.content().gcd(&den);
        if g.is_one() || g.is_zero() {
            Cyclotomic { order, num, den }
        } else {
            Cyclotomic {
                order,
                num: IntPoly::from_coeffs(num.coeffs().iter().map(|c| c / &g).collect()),
                den: den / g,
            }
        }
    }

    pub fn zeta(order: u64) -> Self {
        Cyclotomic::new(order, IntPoly::monomial(BigInt::one(), 1), BigInt::one())
    }

    pub fn from_rational(order: u64, r: &BigRational) -> Self {
        Cyclotomic::new(order, IntPoly::constant(r.numer().clone()), r.denom().clone())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(r)` when the element is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(BigRational::new(self.num.coeff(0), self.den.clone())),
            _ => None,
        }
    }

    /// Re-expresses the element in Q(ζ_M) for a multiple M of the order,
    /// substituting ζ_N = ζ_M^{M/N}.
    pub fn embed(&self, new_order: u64) -> Self {
        assert!(new_order % self.order == 0, "embed target must be a multiple");
        if new_order == self.order {
            return self.clone();
        }
        let k = (new_order / self.order) as usize;
        let mut coeffs = vec![BigInt::zero(); self.num.coeffs().len() * k];
        for (i, c) in self.num.coeffs().iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        Cyclotomic::new(new_order, IntPoly::from_coeffs(coeffs), self.den.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = promote(self, other);
        Cyclotomic::new(
            a.order,
            a.num.mul_int(&b.den).add(&b.num.mul_int(&a.den)),
            &a.den * &b.den,
        )
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = promote(self, other);
        Cyclotomic::new(a.order, a.num.mul(&b.num), &a.den * &b.den)
    }

    pub fn pow_u(&self, mut e: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::from_rational(self.order, &BigRational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Φ_N over Q. `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_polynomial(self.order);
        let a: Vec<BigRational> = self
            .num
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let m: Vec<BigRational> = phi
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let u = bezout_inverse(&a, &m)?;
        // num/den inverse = den * u(ζ).
        let mut lcm = BigInt::one();
        for c in &u {
            lcm = lcm.lcm(c.denom());
        }
        let int_coeffs: Vec<BigInt> = u
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        Some(Cyclotomic::new(
            self.order,
            IntPoly::from_coeffs(int_coeffs).mul_int(&(&self.den * BigInt::one())),
            lcm,
        ))
    }
}

fn promote(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    if a.order == b.order {
        (a.clone(), b.clone())
    } else {
        let m = a.order.lcm(&b.order);
        (a.embed(m), b.embed(m))
    }
}

/// Finds u with u·a ≡ 1 (mod m) in Q[x], assuming gcd(a, m) is a nonzero
/// constant (true whenever a ≠ 0 and m is irreducible).
fn bezout_inverse(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    let mut u0: Vec<BigRational> = vec![];
    let mut u1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = qpoly_divrem(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(u0.iter().map(|x| x / &c).collect())
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let d = x * y;
            out[i + j] += d;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigRational::zero();
    for i in 0..n {
        out.push(a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero));
    }
    trim(&mut out);
    out
}

fn qpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / lead;
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                let d = &c * y;
                rem[k + j] -= d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_power_order_cycles() {
        let z = Cyclotomic::zeta(5);
        let mut p = z.clone();
        for _ in 1..5 {
            p = p.mul(&z);
        }
        assert_eq!(p.as_rational(), Some(BigRational::one()));
    }

    #[test]
    fn phi_vanishes_at_zeta() {
        // 1 + ζ_3 + ζ_3^2 = 0
        let z = Cyclotomic::zeta(3);
        let s = Cyclotomic::from_rational(3, &BigRational::one())
            .add(&z)
            .add(&z.mul(&z));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Cyclotomic::zeta(8);
        let x = z.add(&Cyclotomic::from_rational(8, &BigRational::new(1.into(), 2.into())));
        let inv = x.inv().unwrap();
        let prod = x.mul(&inv);
        assert_eq!(prod.as_rational(), Some(BigRational::one()));
    }

    #[test]
    fn embed_is_consistent() {
        let z3 = Cyclotomic::zeta(3);
        let z12 = Cyclotomic::zeta(12);
        let z3_in_12 = z3.embed(12);
        let alt = z12.mul(&z12).mul(&z12).mul(&z12);
        assert_eq!(z3_in_12, alt);
    }
}

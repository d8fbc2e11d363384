//! Dense univariate polynomials over the integers, plus the cyclotomic
//! polynomials Φ_n used to reduce roots of unity to canonical form.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A dense univariate polynomial with `BigInt` coefficients. Index `i` holds
/// the degree-`i` coefficient; no trailing zeros are stored, so the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
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

    /// `c * x^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Remainder of `self` modulo a monic divisor. Monicity keeps every
    /// intermediate coefficient integral.
    pub fn rem_monic(&self, divisor: &Self) -> Self {
        assert!(
            divisor.leading().is_some_and(One::is_one),
            "rem_monic requires a monic divisor"
        );
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let lead = rem.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = rem.len() - d;
            for (j, b) in divisor.coeffs.iter().take(d).enumerate() {
                rem[shift + j] -= &lead * b;
            }
        }
        IntPoly::from_coeffs(rem)
    }

    /// Exact quotient `self / divisor`; panics when the division leaves a
    /// remainder. Used for the cyclotomic-polynomial recursion where
    /// divisibility is guaranteed.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len() - 1;
        let lead_div = divisor.leading().unwrap();
        assert!(rem.len() > d || rem.len() == divisor.coeffs.len());
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + d].div_rem(lead_div);
            assert!(r.is_zero(), "exact_div: inexact division");
            if !q.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * b;
                }
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "exact_div: nonzero remainder");
        IntPoly::from_coeffs(quot)
    }

    /// Gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive gcd with positive leading coefficient (via monic Euclid
    /// over the rationals).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs_primitive();
        }
        if other.is_zero() {
            return self.abs_primitive();
        }
        let mut a = to_rational(self);
        let mut b = to_rational(other);
        while !b.is_empty() {
            let r = qpoly_rem(&a, &b);
            a = b;
            b = r;
        }
        from_rational(&a).abs_primitive()
    }

    fn abs_primitive(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_some_and(Signed::is_negative) {
            p.neg()
        } else {
            p
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
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
}

fn to_rational(p: &IntPoly) -> Vec<BigRational> {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn from_rational(p: &[BigRational]) -> IntPoly {
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    IntPoly::from_coeffs(
        p.iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
}

fn qpoly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while rem.len() > db {
        let q = rem.pop().unwrap() / lead;
        if !q.is_zero() {
            let shift = rem.len() - db;
            for (j, c) in b.iter().take(db).enumerate() {
                let delta = &q * c;
                rem[shift + j] -= delta;
            }
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        if rem.len() <= db {
            break;
        }
    }
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    rem
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            ds.push(i);
            if i != n / i {
                ds.push(n / i);
            }
        }
        i += 1;
    }
    ds.sort_unstable();
    ds
}

/// The n-th cyclotomic polynomial Φ_n, memoized.
/// Φ_n = (x^n − 1) / ∏_{d|n, d<n} Φ_d.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let result = if n == 1 {
        IntPoly::from_coeffs(vec![-BigInt::one(), BigInt::one()])
    } else {
        let mut num = IntPoly::monomial(BigInt::one(), n as usize);
        num = num.sub(&IntPoly::one());
        let mut den = IntPoly::one();
        for d in divisors(n) {
            if d < n {
                den = den.mul(&cyclotomic_polynomial(d));
            }
        }
        num.exact_div(&den)
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

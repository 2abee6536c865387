use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use super::Rational;

/// Univariate polynomial in κ with integer coefficients, ascending order.
///
/// The coefficient vector carries no trailing zeros; the zero polynomial is
/// the empty vector and has degree −1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPolyK {
    coeffs: Vec<BigInt>,
}

impl UniPolyK {
    pub fn zero() -> Self {
        UniPolyK { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPolyK::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        UniPolyK::from_coeffs(vec![c])
    }

    /// The monomial κ.
    pub fn kappa() -> Self {
        UniPolyK::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// aκ + b.
    pub fn affine(a: i64, b: i64) -> Self {
        UniPolyK::from_coeffs(vec![BigInt::from(b), BigInt::from(a)])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPolyK { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPolyK::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of κ^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = BigRational::zero();
        let x = BigRational::new(x.numer().clone(), x.denom().clone());
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + BigRational::from_integer(c.clone());
        }
        Rational::from_big(acc.numer().clone(), acc.denom().clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return UniPolyK::zero();
        }
        UniPolyK {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return UniPolyK::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        UniPolyK {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPolyK::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Primitive gcd, positive leading coefficient. Computed by the monic
    /// Euclidean algorithm over ℚ, then rescaled to the integer primitive
    /// part.
    pub fn gcd(&self, other: &UniPolyK) -> UniPolyK {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = to_rational_coeffs(self);
        let mut b = to_rational_coeffs(other);
        while !b.is_empty() {
            let r = rational_rem(&a, &b);
            a = b;
            b = r;
        }
        from_rational_coeffs(&a).primitive()
    }

    /// Exact quotient by a divisor known to divide self over ℚ.
    ///
    /// Panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPolyK) -> UniPolyK {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return UniPolyK::zero();
        }
        let (q, r) = rational_div_rem(&to_rational_coeffs(self), &to_rational_coeffs(divisor));
        assert!(r.is_empty(), "polynomial division is not exact");
        from_rational_scaled(&q)
    }

    /// Quotient by qκ − p when it divides exactly; `None` when p/q is not a
    /// root. Used for root-multiplicity counting at κ = p/q.
    pub fn try_div_linear(&self, p: &BigInt, q: &BigInt) -> Option<UniPolyK> {
        if self.is_zero() {
            return None;
        }
        // Synthetic division from the top: f = (qκ − p)·g + r.
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return None;
        }
        let mut g = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero(); // running coefficient to absorb
        for k in (1..=d).rev() {
            let num = &self.coeffs[k] + &carry;
            let (quot, rem) = num.div_rem(q);
            if !rem.is_zero() {
                return None;
            }
            carry = &quot * p;
            g[k - 1] = quot;
        }
        if &self.coeffs[0] + &carry != BigInt::zero() {
            return None;
        }
        Some(UniPolyK::from_coeffs(g))
    }

    /// Multiplicity of the root κ = k0 (zero when k0 is not a root).
    pub fn root_multiplicity(&self, k0: &Rational) -> i64 {
        assert!(!self.is_zero(), "root multiplicity of zero polynomial");
        let p = k0.numer().clone();
        let q = k0.denom().clone();
        let mut mult = 0;
        let mut f = self.clone();
        while let Some(g) = f.try_div_linear(&p, &q) {
            mult += 1;
            f = g;
        }
        mult
    }
}

fn to_rational_coeffs(p: &UniPolyK) -> Vec<BigRational> {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of a by b over ℚ, monic-normalized to tame coefficient growth.
fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (_, mut r) = rational_div_rem(a, b);
    if let Some(lead) = r.last().cloned() {
        for c in &mut r {
            *c = &*c / &lead;
        }
    }
    r
}

fn rational_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_b = &b[db];
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead_b;
        q[dr - db] = factor.clone();
        for k in 0..=db {
            let t = &b[k] * &factor;
            r[dr - db + k] = &r[dr - db + k] - &t;
        }
        trim(&mut r);
    }
    (q, r)
}

/// Clears denominators of an exact rational quotient, asserting integrality.
fn from_rational_scaled(q: &[BigRational]) -> UniPolyK {
    UniPolyK::from_coeffs(
        q.iter()
            .map(|c| {
                assert!(c.is_integer(), "quotient coefficient is not integral");
                c.numer().clone()
            })
            .collect(),
    )
}

/// Primitive integer polynomial proportional to a rational-coefficient one.
fn from_rational_coeffs(v: &[BigRational]) -> UniPolyK {
    if v.is_empty() {
        return UniPolyK::zero();
    }
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    UniPolyK::from_coeffs(v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
}

impl fmt::Display for UniPolyK {
    /// Ascending κ-power list form, e.g. `[3,2]` for 3 + 2κ.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            for (k, c) in self.coeffs.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for UniPolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &UniPolyK {
    type Output = UniPolyK;
    fn add(self, rhs: &UniPolyK) -> UniPolyK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPolyK::from_coeffs(out)
    }
}

impl Sub for &UniPolyK {
    type Output = UniPolyK;
    fn sub(self, rhs: &UniPolyK) -> UniPolyK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPolyK::from_coeffs(out)
    }
}

impl Mul for &UniPolyK {
    type Output = UniPolyK;
    fn mul(self, rhs: &UniPolyK) -> UniPolyK {
        if self.is_zero() || rhs.is_zero() {
            return UniPolyK::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolyK::from_coeffs(out)
    }
}

impl Neg for &UniPolyK {
    type Output = UniPolyK;
    fn neg(self) -> UniPolyK {
        UniPolyK {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_trim() {
        assert_eq!(UniPolyK::zero().degree(), -1);
        assert_eq!(UniPolyK::from_ints(&[1, 0, 0]).degree(), 0);
        assert_eq!(UniPolyK::affine(2, 3).degree(), 1);
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // κ² − 1 and κ − 1 share κ − 1.
        let a = UniPolyK::from_ints(&[-1, 0, 1]);
        let b = UniPolyK::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // coprime polynomials
        let c = UniPolyK::from_ints(&[1, 1]);
        assert_eq!(b.gcd(&c), UniPolyK::one());
    }

    #[test]
    fn linear_division_and_multiplicity() {
        // (2κ+3)²(κ+1) at κ = −3/2 has multiplicity 2.
        let f = &(&UniPolyK::affine(2, 3) * &UniPolyK::affine(2, 3)) * &UniPolyK::affine(1, 1);
        assert_eq!(f.root_multiplicity(&Rational::new(-3, 2)), 2);
        assert_eq!(f.root_multiplicity(&Rational::from_int(-1)), 1);
        assert_eq!(f.root_multiplicity(&Rational::from_int(7)), 0);
    }

    #[test]
    fn exact_division() {
        let a = UniPolyK::from_ints(&[-1, 0, 1]);
        let b = UniPolyK::from_ints(&[-1, 1]);
        assert_eq!(a.div_exact(&b), UniPolyK::from_ints(&[1, 1]));
    }

    #[test]
    fn display_list_form() {
        assert_eq!(UniPolyK::from_ints(&[3, 2]).to_string(), "[3,2]");
        assert_eq!(UniPolyK::zero().to_string(), "[0]");
    }
}

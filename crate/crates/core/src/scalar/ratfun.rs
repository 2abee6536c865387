use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::integer::Integer;
use num::traits::{One, Signed};

use super::{Rational, ScalarError, UniPolyK};

/// Element of ℚ(κ), stored as a reduced ratio of integer polynomials.
///
/// Canonical form: polynomial gcd(num, den) = 1 over ℚ, den ≠ 0 with
/// positive leading coefficient, and the integer contents of num and den
/// are coprime. Zero is 0/1. Equality is structural and agrees with
/// cross-multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunctionK {
    num: UniPolyK,
    den: UniPolyK,
}

impl RationalFunctionK {
    /// Canonical reduced form of num/den.
    pub fn normalize(num: UniPolyK, den: UniPolyK) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunctionK {
                num: UniPolyK::zero(),
                den: UniPolyK::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = UniPolyK::from_coeffs(num.coeffs().iter().map(|a| a / &c).collect());
            den = UniPolyK::from_coeffs(den.coeffs().iter().map(|a| a / &c).collect());
        }
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunctionK { num, den })
    }

    pub fn from_poly(num: UniPolyK) -> Self {
        RationalFunctionK::normalize(num, UniPolyK::one()).unwrap()
    }

    pub fn zero() -> Self {
        RationalFunctionK::from_poly(UniPolyK::zero())
    }

    pub fn one() -> Self {
        RationalFunctionK::from_poly(UniPolyK::one())
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunctionK::from_poly(UniPolyK::from_ints(&[n]))
    }

    pub fn from_rational(r: &Rational) -> Self {
        RationalFunctionK::normalize(
            UniPolyK::constant(r.numer().clone()),
            UniPolyK::constant(r.denom().clone()),
        )
        .unwrap()
    }

    /// The formal parameter κ.
    pub fn kappa() -> Self {
        RationalFunctionK::from_poly(UniPolyK::kappa())
    }

    /// aκ + b.
    pub fn affine(a: i64, b: i64) -> Self {
        RationalFunctionK::from_poly(UniPolyK::affine(a, b))
    }

    pub fn num(&self) -> &UniPolyK {
        &self.num
    }

    pub fn den(&self) -> &UniPolyK {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        RationalFunctionK::normalize(self.den.clone(), self.num.clone()).unwrap()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RationalFunctionK::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at κ = k0; a pole reports `PoleAt`.
    pub fn eval_at(&self, k0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(k0);
        if d.is_zero() {
            return Err(ScalarError::PoleAt(k0.clone()));
        }
        Ok(self.num.eval(k0) / d)
    }

    /// Multiplicity of (κ − k0) in num minus its multiplicity in den;
    /// negative values are pole orders.
    pub fn vanishing_order(&self, k0: &Rational) -> Result<i64, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroFunction);
        }
        Ok(self.num.root_multiplicity(k0) - self.den.root_multiplicity(k0))
    }

    /// lim_{κ→k0} (κ − k0)^k · f(κ). Defined when the pole order at k0 is at
    /// most k; zero when the order of vanishing exceeds −k.
    pub fn scaled_limit(&self, k0: &Rational, k: u32) -> Result<Rational, ScalarError> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let ord = self.vanishing_order(k0)?;
        if ord < -(k as i64) {
            return Err(ScalarError::PoleTooDeep {
                at: k0.clone(),
                order: ord,
            });
        }
        if ord > -(k as i64) {
            return Ok(Rational::zero());
        }
        // Strip the primitive linear factor L = qκ − p from both sides:
        // f = L^ord · num'/den' and (κ−k0)^k f = q^ord (κ−k0)^{k+ord} num'/den'.
        let p = k0.numer().clone();
        let q = k0.denom().clone();
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while let Some(g) = num.try_div_linear(&p, &q) {
            num = g;
        }
        while let Some(g) = den.try_div_linear(&p, &q) {
            den = g;
        }
        let scale = Rational::from_bigint(q).pow(ord as i32);
        Ok(scale * num.eval(k0) / den.eval(k0))
    }
}

impl fmt::Display for RationalFunctionK {
    /// `num_poly / den_poly` in ascending κ-power list form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunctionK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RationalFunctionK {
    type Output = RationalFunctionK;
    fn add(self, rhs: &RationalFunctionK) -> RationalFunctionK {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunctionK::normalize(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalFunctionK {
    type Output = RationalFunctionK;
    fn sub(self, rhs: &RationalFunctionK) -> RationalFunctionK {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunctionK::normalize(num, &self.den * &rhs.den).unwrap()
    }
}

impl Mul for &RationalFunctionK {
    type Output = RationalFunctionK;
    fn mul(self, rhs: &RationalFunctionK) -> RationalFunctionK {
        // Cross-reduce before multiplying to keep intermediate degrees low.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1)
        };
        let d2 = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.div_exact(&g1)
        };
        let b = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.div_exact(&g2)
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2)
        };
        RationalFunctionK::normalize(&a * &b, &d1 * &d2).unwrap()
    }
}

impl Div for &RationalFunctionK {
    type Output = RationalFunctionK;
    fn div(self, rhs: &RationalFunctionK) -> RationalFunctionK {
        self * &rhs.recip()
    }
}

impl Neg for &RationalFunctionK {
    type Output = RationalFunctionK;
    fn neg(self) -> RationalFunctionK {
        RationalFunctionK {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! ratfun_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RationalFunctionK {
            type Output = RationalFunctionK;
            fn $method(self, rhs: RationalFunctionK) -> RationalFunctionK {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a RationalFunctionK> for RationalFunctionK {
            type Output = RationalFunctionK;
            fn $method(self, rhs: &'a RationalFunctionK) -> RationalFunctionK {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}

ratfun_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RationalFunctionK {
    type Output = RationalFunctionK;
    fn neg(self) -> RationalFunctionK {
        -&self
    }
}

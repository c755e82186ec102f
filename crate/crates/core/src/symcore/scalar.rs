//! Rational functions over Q(i) in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::gcd::gcd;
use super::poly::{Poly, PolyDisplay};
use crate::error::{GeoError, Result};

/// A quotient `num / den` with `gcd(num, den) = 1` and `den` monic under
/// grlex. Zero is `0 / 1`, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    /// Canonical form of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(GeoError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            let c = den.leading_coeff().inv().ok_or(GeoError::ZeroDenominator)?;
            return Ok(Scalar { num: num.scale(&c), den: Poly::one() });
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Makes the denominator monic; inputs must already be coprime.
    fn from_coprime(num: Poly, den: Poly) -> Scalar {
        let lc = den.leading_coeff();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.inv().expect("nonzero denominator");
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::constant(GaussRational::from_frac(num, den))
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn i() -> Self {
        Self::constant(GaussRational::i())
    }

    /// The coordinate function with index `v`.
    pub fn coord(v: usize) -> Self {
        Self::from_poly(Poly::var(v as u32))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    /// Size measure used for pivot selection.
    pub fn complexity(&self) -> (u32, usize) {
        (
            self.num.total_degree() + self.den.total_degree(),
            self.num.num_terms() + self.den.num_terms(),
        )
    }

    /// Largest coordinate index occurring, if any.
    pub fn max_var(&self) -> Option<u32> {
        match (self.num.max_var(), self.den.max_var()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn conj(&self) -> Scalar {
        Scalar { num: self.num.conj(), den: self.den.conj() }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        let inv = o.inv()?;
        Ok(self * &inv)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(GeoError::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        if self.is_zero() {
            return if e == 0 { Scalar::one() } else { Scalar::zero() };
        }
        Scalar { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Partial derivative in coordinate index `v` (quotient rule).
    pub fn diff(&self, v: usize) -> Scalar {
        let v = v as u32;
        if self.den.is_one() {
            return Self::from_poly(self.num.diff(v));
        }
        let dn = self.num.diff(v);
        let dd = self.den.diff(v);
        if dd.is_zero() {
            return Self::normalize(dn, self.den.clone()).expect("nonzero denominator");
        }
        // dividing by gcd(den, den') first leaves only small cancellations
        let s = gcd(&self.den, &dd);
        let e = self.den.div_exact(&s).expect("gcd divides");
        let de = dd.div_exact(&s).expect("gcd divides");
        let top = dn.mul(&e).sub(&self.num.mul(&de));
        Self::normalize(top, self.den.mul(&e)).expect("nonzero denominator")
    }

    /// Exact evaluation; `PoleAtPoint` when the denominator vanishes.
    pub fn eval(&self, point: &[GaussRational]) -> Result<GaussRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(GeoError::PoleAtPoint);
        }
        Ok(&self.num.eval(point) / &d)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> ScalarDisplay<'a> {
        ScalarDisplay { s: self, names }
    }

    /// Canonical printing with the given coordinate names.
    pub fn to_text(&self, names: &[String]) -> String {
        self.display(names).to_string()
    }

    /// True when the printed form must be parenthesized as a factor.
    pub fn needs_parens(&self) -> bool {
        !self.den.is_one() || self.num.needs_parens_in_product()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Scalar::normalize(self.num.add(&o.num), self.den.clone())
                .expect("nonzero denominator");
        }
        if o.den.is_one() {
            return Scalar::from_coprime(self.num.add(&o.num.mul(&self.den)), self.den.clone());
        }
        if self.den.is_one() {
            return Scalar::from_coprime(o.num.add(&self.num.mul(&o.den)), o.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        let e1 = self.den.div_exact(&g).expect("gcd divides");
        let e2 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&e2).add(&o.num.mul(&e1));
        if num.is_zero() {
            return Scalar::zero();
        }
        // any common factor of num and g*e1*e2 divides g
        let h = gcd(&num, &g);
        let num = num.div_exact(&h).expect("gcd divides");
        let den = g.div_exact(&h).expect("gcd divides").mul(&e1).mul(&e2);
        Scalar::from_coprime(num, den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(self.num.mul(&o.num));
        }
        // cross-cancel so the product stays coprime
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::from_coprime(a.mul(&c), b.mul(&d))
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor; use [`Scalar::checked_div`] for fallible division.
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| &a + &b)
    }
}

pub struct ScalarDisplay<'a> {
    s: &'a Scalar,
    names: &'a [String],
}

impl fmt::Display for ScalarDisplay<'_> {
    /// `p` for polynomials, otherwise `p/(q)` with `p` parenthesized when it
    /// is not a single monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = PolyDisplay { poly: &self.s.num, names: self.names };
        if self.s.den.is_one() {
            return write!(f, "{num}");
        }
        let den = PolyDisplay { poly: &self.s.den, names: self.names };
        let num_plain = self.s.num.num_terms() == 1
            && self
                .s
                .num
                .leading()
                .is_some_and(|(_, c)| c.is_real() && c.re().is_integer());
        let den_plain = self.s.den.num_terms() == 1
            && self
                .s
                .den
                .leading()
                .is_some_and(|(m, c)| c.is_one() && m.pairs().len() == 1);
        let ns = if num_plain { num.to_string() } else { format!("({num})") };
        let ds = if den_plain { den.to_string() } else { format!("({den})") };
        write!(f, "{ns}/{ds}")
    }
}

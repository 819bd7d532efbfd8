use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

/// A quotient `num / den` of polynomials. Only monomial factors and the
/// leading coefficient of the denominator are normalized away; equality is
/// tested by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.nvars(), den.nvars(), "ring mismatch");
        let mut r = RationalFunction { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: Poly::one(n) }
    }

    /// The Laurent monomial x^e for a signed exponent vector.
    pub fn laurent_monomial(exponents: &[i64]) -> Self {
        let n = exponents.len();
        let pos: Vec<u32> = exponents.iter().map(|&e| e.max(0) as u32).collect();
        let neg: Vec<u32> = exponents.iter().map(|&e| (-e).max(0) as u32).collect();
        RationalFunction {
            num: Poly::monomial(Monomial::from_exponents(pos), One::one()),
            den: Poly::monomial(Monomial::from_exponents(neg), One::one()),
        }
        .tap_nvars(n)
    }

    fn tap_nvars(self, n: usize) -> Self {
        debug_assert_eq!(self.num.nvars(), n);
        self
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Self {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, e: i32) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let k = e.unsigned_abs();
        RationalFunction::new(base.num.pow(k), base.den.pow(k))
    }

    /// The polynomial, if the denominator is constant.
    pub fn as_poly(&self) -> Option<Poly> {
        let c = self.den.as_constant()?;
        Some(self.num.scale(&c.recip()))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.nvars());
            return;
        }
        // cancel the common monomial factor
        let g = common_monomial(&self.num).gcd(&common_monomial(&self.den));
        if !g.is_one() {
            self.num = divide_monomial(&self.num, &g);
            self.den = divide_monomial(&self.den, &g);
        }
        let lc = self.den.leading_term(MonomialOrder::Grevlex).unwrap().1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }
}

trait MonomialGcd {
    fn gcd(&self, other: &Monomial) -> Monomial;
}

impl MonomialGcd for Monomial {
    fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exponents().iter().zip(other.exponents()).map(|(a, b)| *a.min(b)).collect(),
        )
    }
}

fn common_monomial(p: &Poly) -> Monomial {
    let mut it = p.terms().map(|(m, _)| m.clone());
    let first = it.next().unwrap_or_else(|| Monomial::one(p.nvars()));
    it.fold(first, |acc, m| acc.gcd(&m))
}

fn divide_monomial(p: &Poly, g: &Monomial) -> Poly {
    Poly::from_terms(p.nvars(), p.terms().map(|(m, c)| (g.quotient_of(m), c.clone())))
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    #[test]
    fn arithmetic_and_normalization() {
        let ring = PolyRing::new(["z", "y", "h"]).unwrap();
        let p = |s: &str| ring.parse(s).unwrap();
        let r = RationalFunction::new(p("2*y^3"), p("4*z*y^5"));
        assert_eq!(r.numerator(), &p("1/2"));
        assert_eq!(r.denominator(), &p("z*y^2"));
        let inv_y = RationalFunction::laurent_monomial(&[0, -1, 0]);
        let a = &inv_y.powi(2) - &(&RationalFunction::from_poly(p("2*h")) * &inv_y);
        assert_eq!(a, RationalFunction::new(p("1 - 2*h*y"), p("y^2")));
        assert_eq!(&a / &a, RationalFunction::from_poly(ring.one()));
    }
}

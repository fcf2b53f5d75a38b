//! Dense univariate polynomials and rational functions over a field.

use super::{Field, Rat};
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial, dense, trailing zeros stripped.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<F: Field> {
    /// `coeffs[i]` multiplies `x^i`; empty means the zero polynomial.
    pub coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "UPoly::div_rem by zero");
        let dl = d.leading().unwrap().inv().expect("leading coeff invertible");
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().clone() * dl.clone();
            let k = rd - dd;
            quo[k] = c.clone();
            rem = rem.sub(&d.mul(&Self::monomial(c, k)));
        }
        (Self::new(quo), rem)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let li = a.leading().unwrap().inv().unwrap();
            a.scale(&li)
        }
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s*self + t*other`, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let li = r0.leading().unwrap().inv().unwrap();
        (r0.scale(&li), s0.scale(&li), t0.scale(&li))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_rem(&g).0
        }
    }
}

/// Rational function in one variable, kept gcd-reduced with monic denominator.
#[derive(Clone, Debug)]
pub struct RatFn<F: Field> {
    pub num: UPoly<F>,
    pub den: UPoly<F>,
}

impl<F: Field> RatFn<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Self {
        assert!(!den.is_zero(), "RatFn: zero denominator");
        let mut r = RatFn { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: UPoly<F>) -> Self {
        RatFn { num: p, den: UPoly::one() }
    }

    pub fn var() -> Self {
        Self::from_poly(UPoly::x())
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let li = self.den.leading().unwrap().inv().unwrap();
        self.num = self.num.scale(&li);
        self.den = self.den.scale(&li);
    }

    /// Value at z = 0, if finite there.
    pub fn eval_zero(&self) -> Option<F> {
        let d0 = self.den.coeff(0);
        let inv = d0.inv()?;
        Some(self.num.coeff(0) * inv)
    }

    /// Value at z = infinity, if finite there (deg num <= deg den).
    pub fn eval_infinity(&self) -> Option<F> {
        let (dn, dd) = (self.num.degree(), self.den.degree());
        match (dn, dd) {
            (None, _) => Some(F::zero()),
            (Some(n), Some(d)) if n < d => Some(F::zero()),
            (Some(n), Some(d)) if n == d => {
                Some(self.num.leading().unwrap().clone() * self.den.leading().unwrap().inv()?)
            }
            _ => None,
        }
    }

    /// Substitutes z -> c*z for a nonzero scalar c.
    pub fn rescale_arg(&self, c: &F) -> Self {
        let sub = |p: &UPoly<F>| {
            let mut pow = F::one();
            let coeffs = p
                .coeffs
                .iter()
                .map(|a| {
                    let r = a.clone() * pow.clone();
                    pow = pow.clone() * c.clone();
                    r
                })
                .collect();
            UPoly::new(coeffs)
        };
        Self::new(sub(&self.num), sub(&self.den))
    }
}

impl<F: Field> PartialEq for RatFn<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<F: Field> Zero for RatFn<F> {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFn<F> {
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
}

impl<F: Field> Add for RatFn<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<F: Field> Sub for RatFn<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for RatFn<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<F: Field> Neg for RatFn<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFn { num: self.num.neg(), den: self.den }
    }
}

impl<F: Field> Field for RatFn<F> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rat(x: &Rat) -> Self {
        Self::from_poly(UPoly::constant(F::from_rat(x)))
    }

    fn coeff_string(&self) -> String {
        let fmt_poly = |p: &UPoly<F>| {
            if p.is_zero() {
                return "0".to_string();
            }
            let mut parts = vec![];
            for (i, c) in p.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let v = c.coeff_string();
                parts.push(match i {
                    0 => v,
                    1 => format!("({})*z", v),
                    _ => format!("({})*z^{}", v, i),
                });
            }
            parts.join(" + ")
        };
        if self.den.is_monic() && self.den.degree() == Some(0) {
            fmt_poly(&self.num)
        } else {
            format!("({}) / ({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(cs: &[i64]) -> UPoly<Rat> {
        UPoly::new(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[1, 1])), p(&[1, 1]));
    }

    #[test]
    fn ext_gcd_identity() {
        let a = p(&[2, 0, 1]);
        let b = p(&[1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn ratfn_arith() {
        // 1/(z-1) + 1/(z+1) = 2z/(z^2-1)
        let a = RatFn::new(p(&[1]), p(&[-1, 1]));
        let b = RatFn::new(p(&[1]), p(&[1, 1]));
        let s = a + b;
        assert_eq!(s, RatFn::new(p(&[0, 2]), p(&[-1, 0, 1])));
        assert_eq!(s.eval_zero(), Some(rat(0, 1)));
        assert_eq!(s.eval_infinity(), Some(rat(0, 1)));
    }
}

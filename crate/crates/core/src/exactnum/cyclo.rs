//! Cyclotomic field elements in the power basis.
//!
//! An element of Q(zeta_n) is stored as a polynomial of degree < phi(n) in a
//! fixed primitive n-th root of unity, reduced modulo the n-th cyclotomic
//! polynomial.  Orders are unified by promotion to the lcm, so mixed-order
//! arithmetic is exact and transparent.

use super::{rat_to_string, Field, Rat, UPoly};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

fn cyclo_cache() -> &'static Mutex<HashMap<u32, UPoly<Rat>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, UPoly<Rat>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, computed by dividing x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
pub fn cyclotomic_poly(n: u32) -> UPoly<Rat> {
    assert!(n >= 1);
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        UPoly::new(vec![-Rat::one(), Rat::one()])
    } else {
        let mut num = vec![Rat::zero(); n as usize + 1];
        num[0] = -Rat::one();
        num[n as usize] = Rat::one();
        let mut num = UPoly::new(num);
        for d in 1..n {
            if n % d == 0 {
                let (q, r) = num.div_rem(&cyclotomic_poly(d));
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num
    };
    cyclo_cache()
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An element of the cyclotomic field Q(zeta_order).
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    /// Power-basis coordinates; length phi(order), trailing zeros kept.
    coords: Vec<Rat>,
}

impl Cyclo {
    fn from_poly(order: u32, p: UPoly<Rat>) -> Self {
        let phi = euler_phi(order) as usize;
        let reduced = if p.degree().map_or(false, |d| d >= phi) {
            p.rem(&cyclotomic_poly(order))
        } else {
            p
        };
        let mut coords = reduced.coeffs;
        coords.resize(phi, Rat::zero());
        Cyclo { order, coords }
    }

    pub fn from_rat_val(x: Rat) -> Self {
        Cyclo { order: 1, coords: vec![x] }
    }

    /// A fixed primitive n-th root of unity.
    pub fn zeta(n: u32) -> Self {
        assert!(n >= 1);
        if n == 1 {
            return Self::one();
        }
        Self::from_poly(n, UPoly::x())
    }

    /// zeta_n^k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        Self::from_poly(n, UPoly::monomial(Rat::one(), k))
    }

    pub fn i() -> Self {
        Self::zeta(4)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Rewrites the element in Q(zeta_m) for a multiple m of the order.
    pub fn promote(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0, "promote: {} does not divide {}", self.order, m);
        let step = (m / self.order) as usize;
        let mut coeffs = vec![Rat::zero(); (self.coords.len() - 1).max(0) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * step] = c.clone();
            }
        }
        Self::from_poly(m, UPoly::new(coeffs))
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self, u32) {
        let l = num_integer::lcm(a.order, b.order);
        (a.promote(l), b.promote(l), l)
    }

    /// Whether the element is rational, and its value if so.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords.first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("pow of zero with negative exponent").pow(-k);
        }
        let mut base = self.clone();
        let mut k = k as u64;
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base.clone();
            k >>= 1;
        }
        acc
    }

    fn upoly(&self) -> UPoly<Rat> {
        UPoly::new(self.coords.clone())
    }

    /// Galois conjugate zeta -> zeta^k for k coprime to the order.
    pub fn galois(&self, k: u32) -> Self {
        assert_eq!(num_integer::gcd(k, self.order), 1, "galois: k not coprime to order");
        let mut coeffs = vec![Rat::zero(); self.order as usize];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * k as u64 % self.order as u64) as usize;
                coeffs[e] = coeffs[e].clone() + c.clone();
            }
        }
        Self::from_poly(self.order, UPoly::new(coeffs))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        if self.order == 1 {
            self.clone()
        } else {
            self.galois(self.order - 1)
        }
    }

    /// Canonical decimal-free string, e.g. `"1/2 - 2/3*zeta{8}^3"`.
    pub fn to_canonical_string(&self) -> String {
        if let Some(r) = self.as_rat() {
            return rat_to_string(&r);
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if i == 0 {
                rat_to_string(c)
            } else {
                let z = if i == 1 {
                    format!("zeta{{{}}}", self.order)
                } else {
                    format!("zeta{{{}}}^{}", self.order, i)
                };
                if c.is_one() {
                    z
                } else if (-c.clone()).is_one() {
                    format!("-{}", z)
                } else {
                    format!("{}*{}", rat_to_string(c), z)
                }
            };
            if parts.is_empty() {
                parts.push(body);
            } else if let Some(rest) = body.strip_prefix('-') {
                parts.push(format!("- {}", rest));
            } else {
                parts.push(format!("+ {}", body));
            }
        }
        parts.join(" ")
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coords == other.coords;
        }
        let (a, b, _) = Self::unify(self, other);
        a.coords == b.coords
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Self::from_rat_val(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Self::from_rat_val(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_one())
    }
}

impl Add for Cyclo {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b, l) = Self::unify(&self, &rhs);
        let coords = a
            .coords
            .iter()
            .zip(b.coords.iter())
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        Cyclo { order: l, coords }
    }
}

impl Sub for Cyclo {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclo {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclo {
            order: self.order,
            coords: self.coords.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Cyclo {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b, l) = Self::unify(&self, &rhs);
        Self::from_poly(l, a.upoly().mul(&b.upoly()))
    }
}

impl Field for Cyclo {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rat() {
            return Some(Self::from_rat_val(Rat::one() / r));
        }
        let phi_n = cyclotomic_poly(self.order);
        let (g, s, _) = self.upoly().ext_gcd(&phi_n);
        debug_assert_eq!(g.degree(), Some(0));
        let ginv = g.coeff(0).inv()?;
        Some(Self::from_poly(self.order, s.scale(&ginv)))
    }

    fn from_rat(x: &Rat) -> Self {
        Self::from_rat_val(x.clone())
    }

    fn coeff_string(&self) -> String {
        self.to_canonical_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn zeta4_squares_to_minus_one() {
        let i = Cyclo::i();
        assert_eq!(i.clone() * i, Cyclo::from_rat_val(rat(-1, 1)));
    }

    #[test]
    fn prime_order_power_sum_vanishes() {
        for n in [3u32, 5, 7, 11] {
            let mut s = Cyclo::zero();
            for j in 0..n {
                s = s + Cyclo::zeta_pow(n, j as i64);
            }
            assert!(s.is_zero(), "sum of all {}-th roots of unity", n);
        }
    }

    #[test]
    fn zeta_n_has_order_n() {
        for n in [2u32, 3, 4, 6, 8, 12, 24] {
            let z = Cyclo::zeta(n);
            assert!(z.pow(n as i64).is_one());
            for k in 1..n {
                if n % k == 0 && k < n {
                    assert!(!z.pow(k as i64).is_one(), "zeta_{}^{} = 1", n, k);
                }
            }
        }
    }

    #[test]
    fn mixed_order_arithmetic() {
        // zeta_6 = 1 + zeta_3 in Q(zeta_3) conventions: zeta_6^2 = zeta_3, and
        // zeta_6 - zeta_3 should be rational only after proper promotion.
        let z6 = Cyclo::zeta(6);
        let z3 = Cyclo::zeta(3);
        assert_eq!(z6.pow(2), z3);
        assert_eq!(z6.clone() * z3.clone(), Cyclo::zeta_pow(6, 3));
        assert_eq!(z6.pow(3), Cyclo::from_rat_val(rat(-1, 1)));
        assert_eq!(z6.clone() - z3.clone(), Cyclo::one() + Cyclo::zero() * z6);
    }

    #[test]
    fn inverse_round_trip() {
        let x = Cyclo::zeta(8) + Cyclo::from_rat_val(rat(2, 3));
        let xi = x.inv().unwrap();
        assert!((x * xi).is_one());
        assert!(Cyclo::zero().inv().is_none());
    }

    #[test]
    fn conjugation_fixes_rationals_and_inverts_roots() {
        let z = Cyclo::zeta(12);
        assert_eq!(z.conj(), z.pow(-1));
        let r = Cyclo::from_rat_val(rat(5, 7));
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Cyclo::zeta(8).to_canonical_string(), "zeta{8}");
        let x = Cyclo::from_rat_val(rat(1, 2)) - Cyclo::zeta_pow(8, 3) * Cyclo::from_rat_val(rat(2, 3));
        assert_eq!(x.to_canonical_string(), "1/2 - 2/3*zeta{8}^3");
    }
}

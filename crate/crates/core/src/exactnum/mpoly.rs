//! Multivariate polynomials and rational functions in named parameters.
//!
//! These carry the parametric coefficients of catalog presentations (g_i,
//! f_i, h_1, e_i, Q, ...).  Fractions are kept gcd-reduced via a primitive
//! polynomial remainder sequence, and evaluation at field points is exact.

use super::{Field, NumError, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Ordered parameter alphabet shared by all polynomials of one presentation.
pub type ParamScope = Arc<Vec<String>>;

pub fn scope(names: &[&str]) -> ParamScope {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Multivariate polynomial over the rationals.
#[derive(Clone, PartialEq)]
pub struct MPoly {
    pub scope: ParamScope,
    /// exponent vector (len = scope.len()) -> nonzero coefficient
    pub terms: BTreeMap<Vec<u16>, Rat>,
}

impl MPoly {
    pub fn zero(scope: &ParamScope) -> Self {
        MPoly { scope: scope.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(scope: &ParamScope, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; scope.len()], c);
        }
        MPoly { scope: scope.clone(), terms }
    }

    pub fn var(scope: &ParamScope, name: &str) -> Self {
        let i = scope
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown parameter {}", name));
        let mut e = vec![0u16; scope.len()];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Rat::one());
        MPoly { scope: scope.clone(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Reinterprets a constant (or same-named-prefix) polynomial in a larger
    /// scope.  Scopeless constants are how `Field::zero`/`one` work.
    pub fn lift_to_scope(&self, sc: &ParamScope) -> Self {
        if self.scope == *sc {
            return self.clone();
        }
        assert!(
            self.scope.is_empty() || self.is_constant(),
            "incompatible parameter scopes: {:?} vs {:?}",
            self.scope,
            sc
        );
        MPoly::constant(sc, self.as_constant().unwrap_or_else(Rat::zero))
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.scope == b.scope {
            (a.clone(), b.clone())
        } else if a.scope.is_empty() {
            (a.lift_to_scope(&b.scope), b.clone())
        } else {
            (a.clone(), b.lift_to_scope(&a.scope))
        }
    }

    fn insert_term(&mut self, e: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.scope);
        }
        MPoly {
            scope: self.scope.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.scope, Rat::one());
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// Exact evaluation with one field value per scope parameter.
    pub fn eval_in<F: Field>(&self, vals: &[F]) -> F {
        assert_eq!(vals.len(), self.scope.len());
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = F::from_rat(c);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * vals[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms.keys().map(|e| e[var] as usize).max().unwrap_or(0)
    }

    /// Coefficient of var^k, as a polynomial with that variable zeroed out.
    fn coeff_in(&self, var: usize, k: u16) -> Self {
        let mut out = Self::zero(&self.scope);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.insert_term(e2, c.clone());
            }
        }
        out
    }

    fn mul_var_pow(&self, var: usize, k: u16) -> Self {
        let mut out = Self::zero(&self.scope);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] += k;
            out.insert_term(e2, c.clone());
        }
        out
    }

    /// Exact multivariate division; `None` if not divisible.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero());
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.scope);
        let (dl_e, dl_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        while !rem.is_zero() {
            let (rl_e, rl_c) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
            let mut q_e = vec![0u16; rl_e.len()];
            for i in 0..rl_e.len() {
                if rl_e[i] < dl_e[i] {
                    return None;
                }
                q_e[i] = rl_e[i] - dl_e[i];
            }
            let q_c = rl_c / dl_c.clone();
            let mut mono = Self::zero(&self.scope);
            mono.insert_term(q_e, q_c);
            rem = rem - mono.clone() * d.clone();
            quo = quo + mono;
        }
        Some(quo)
    }

    /// Highest variable index that actually occurs, if any.
    fn top_var(&self) -> Option<usize> {
        let mut top = None;
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate().rev() {
                if k > 0 {
                    top = Some(top.map_or(i, |t: usize| t.max(i)));
                    break;
                }
            }
        }
        top
    }

    /// Content with respect to `var`: gcd of the var-coefficients.
    fn content_in(&self, var: usize) -> Self {
        let mut g = Self::zero(&self.scope);
        for k in 0..=self.degree_in(var) {
            let c = self.coeff_in(var, k as u16);
            if !c.is_zero() {
                g = Self::gcd(&g, &c);
            }
        }
        g
    }

    /// Multivariate gcd, normalized so the lex-leading coefficient is 1.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.normalized();
        }
        if b.is_zero() {
            return a.normalized();
        }
        let va = a.top_var();
        let vb = b.top_var();
        let var = match (va, vb) {
            (None, _) | (_, None) => {
                // both effectively rational constants
                return Self::constant(&a.scope, Rat::one());
            }
            (Some(x), Some(y)) => x.max(y),
        };
        let ca = a.content_in(var);
        let cb = b.content_in(var);
        let cg = Self::gcd(&ca, &cb);
        let mut pa = a.divide_exact(&ca).expect("content divides");
        let mut pb = b.divide_exact(&cb).expect("content divides");
        // primitive PRS in `var`
        if pa.degree_in(var) < pb.degree_in(var) {
            std::mem::swap(&mut pa, &mut pb);
        }
        while !pb.is_zero() {
            let r = Self::pseudo_rem(&pa, &pb, var);
            pa = pb;
            pb = if r.is_zero() {
                r
            } else {
                let c = r.content_in(var);
                r.divide_exact(&c).expect("content divides")
            };
        }
        let prim = {
            let c = pa.content_in(var);
            pa.divide_exact(&c).expect("content divides")
        };
        (cg * prim).normalized()
    }

    fn pseudo_rem(a: &Self, b: &Self, var: usize) -> Self {
        let db = b.degree_in(var);
        let lb = b.coeff_in(var, db as u16);
        let mut r = a.clone();
        while !r.is_zero() {
            let dr = r.degree_in(var);
            if dr < db {
                break;
            }
            let lr = r.coeff_in(var, dr as u16);
            r = r * lb.clone() - lr.mul_var_pow(var, (dr - db) as u16) * b.clone();
        }
        r
    }

    /// Scales so the lex-leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Rat::one() / c.clone())),
        }
    }
}

impl Add for MPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut out, rhs) = Self::unify(&self, &rhs);
        for (e, c) in rhs.terms {
            out.insert_term(e, c);
        }
        out
    }
}

impl Sub for MPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for MPoly {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly {
            scope: self.scope.clone(),
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (lhs, rhs) = Self::unify(&self, &rhs);
        let mut out = Self::zero(&lhs.scope);
        for (e1, c1) in &lhs.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u16> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    mono.push_str(&self.scope[i]);
                    if k > 1 {
                        mono.push_str(&format!("^{}", k));
                    }
                }
            }
            let body = if mono.is_empty() {
                super::rat_to_string(c)
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{}", mono)
            } else {
                format!("{}*{}", super::rat_to_string(c), mono)
            };
            if first {
                write!(f, "{}", body)?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Rational function in the parameters, gcd-reduced with normalized
/// denominator.
#[derive(Clone)]
pub struct ParamRat {
    pub num: MPoly,
    pub den: MPoly,
}

impl ParamRat {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "ParamRat: zero denominator");
        let (num, den) = MPoly::unify(&num, &den);
        let mut r = ParamRat { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: MPoly) -> Self {
        let den = MPoly::constant(&p.scope, Rat::one());
        ParamRat { num: p, den }
    }

    pub fn var(scope: &ParamScope, name: &str) -> Self {
        Self::from_poly(MPoly::var(scope, name))
    }

    pub fn constant(scope: &ParamScope, c: Rat) -> Self {
        Self::from_poly(MPoly::constant(scope, c))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::constant(&self.den.scope, Rat::one());
            return;
        }
        let g = MPoly::gcd(&self.num, &self.den);
        if !g.as_constant().is_some_and(|c| c.is_one()) {
            self.num = self.num.divide_exact(&g).expect("gcd divides num");
            self.den = self.den.divide_exact(&g).expect("gcd divides den");
        }
        let lc = self.den.terms.iter().next_back().unwrap().1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Exact evaluation; errors if the denominator vanishes.
    pub fn eval_in<F: Field>(&self, vals: &[F]) -> Result<F, NumError> {
        let d = self.den.eval_in(vals);
        let di = d.inv().ok_or(NumError::DenominatorVanishes)?;
        Ok(self.num.eval_in(vals) * di)
    }

    pub fn scope(&self) -> &ParamScope {
        &self.num.scope
    }
}

impl PartialEq for ParamRat {
    fn eq(&self, other: &Self) -> bool {
        let l = self.num.clone() * other.den.clone();
        let r = other.num.clone() * self.den.clone();
        let (l, r) = MPoly::unify(&l, &r);
        l == r
    }
}

impl fmt::Debug for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

fn empty_scope() -> ParamScope {
    static EMPTY: std::sync::OnceLock<ParamScope> = std::sync::OnceLock::new();
    EMPTY.get_or_init(|| Arc::new(vec![])).clone()
}

impl Zero for ParamRat {
    fn zero() -> Self {
        Self::constant(&empty_scope(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ParamRat {
    fn one() -> Self {
        Self::constant(&empty_scope(), Rat::one())
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl Add for ParamRat {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Sub for ParamRat {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ParamRat {
    type Output = Self;
    fn neg(self) -> Self {
        ParamRat { num: -self.num, den: self.den }
    }
}

impl Mul for ParamRat {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Field for ParamRat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rat(x: &Rat) -> Self {
        Self::constant(&empty_scope(), x.clone())
    }

    fn coeff_string(&self) -> String {
        format!("{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn gcd_reduction_in_one_variable() {
        // (g1^2 - 1)/(g1 - 1) reduces to g1 + 1
        let sc = scope(&["g1"]);
        let g1 = MPoly::var(&sc, "g1");
        let one = MPoly::constant(&sc, rat(1, 1));
        let frac = ParamRat::new(
            g1.clone() * g1.clone() - one.clone(),
            g1.clone() - one.clone(),
        );
        assert_eq!(frac, ParamRat::from_poly(g1 + one));
    }

    #[test]
    fn gcd_two_variables() {
        let sc = scope(&["a", "b"]);
        let a = MPoly::var(&sc, "a");
        let b = MPoly::var(&sc, "b");
        let p = (a.clone() + b.clone()).pow(2) * a.clone();
        let q = (a.clone() + b.clone()) * b.clone();
        let g = MPoly::gcd(&p, &q);
        assert_eq!(g, (a + b).normalized());
    }

    #[test]
    fn evaluation_is_exact() {
        let sc = scope(&["a", "b"]);
        let a = MPoly::var(&sc, "a");
        let b = MPoly::var(&sc, "b");
        let f = ParamRat::new(a.clone() * a.clone() - b.clone(), a + b);
        let v = f.eval_in(&[rat(3, 1), rat(2, 1)]).unwrap();
        assert_eq!(v, rat(7, 5));
        let bad = f.eval_in(&[rat(1, 1), rat(-1, 1)]);
        assert_eq!(bad, Err(NumError::DenominatorVanishes));
    }
}

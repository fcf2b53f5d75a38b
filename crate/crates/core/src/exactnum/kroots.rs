//! Roots of a univariate polynomial that lie in a given cyclotomic field.
//!
//! Uses a modular method: reduce the polynomial under all embeddings of
//! Q(zeta_n) into Z/p for a split prime p, find the residue roots, Hensel-lift
//! them to Z/p^k, solve for power-basis coordinates, and reconstruct rational
//! coordinates, verifying every candidate exactly.  Only exact integer
//! arithmetic is involved, so a returned root is certified; a root of very
//! large height past the lifting cap would be missed, which callers treat as
//! "no root in the field".

use super::cyclo::{euler_phi, Cyclo};
use super::{Rat, UPoly};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const LIFT_STEPS: [u32; 3] = [12, 40, 120];

/// All roots of `f` lying in Q(zeta_n), where the coefficients of `f` are
/// promoted into that field.  `f` must be nonzero.
pub fn rational_roots_in_field(f: &UPoly<Cyclo>, n: u32) -> Vec<Cyclo> {
    assert!(!f.is_zero(), "rational_roots_in_field: zero polynomial");
    if f.degree() == Some(0) {
        return vec![];
    }
    let f = f.squarefree_part();
    let phi = euler_phi(n) as usize;

    // Denominators we must avoid in the prime.
    let mut bad = BigInt::one();
    for c in &f.coeffs {
        for r in c.promote_checked(n).coords() {
            bad = bad * r.denom();
        }
    }

    for &steps in &LIFT_STEPS {
        if let Some(roots) = try_with_precision(&f, n, phi, &bad, steps) {
            return roots;
        }
    }
    vec![]
}

trait PromoteChecked {
    fn promote_checked(&self, n: u32) -> Cyclo;
}
impl PromoteChecked for Cyclo {
    fn promote_checked(&self, n: u32) -> Cyclo {
        assert!(
            n % self.order() == 0,
            "coefficient of order {} not in Q(zeta_{})",
            self.order(),
            n
        );
        self.promote(n)
    }
}

fn try_with_precision(
    f: &UPoly<Cyclo>,
    n: u32,
    phi: usize,
    bad: &BigInt,
    steps: u32,
) -> Option<Vec<Cyclo>> {
    'primes: for p in split_primes(n) {
        if (bad % BigInt::from(p)).is_zero() {
            continue;
        }
        let lead = f.leading().unwrap().promote_checked(n);
        // Embeddings: zeta -> w^j for j coprime to n, w a primitive n-th root mod p.
        let w = primitive_root_of_unity(p, n)?;
        let exps: Vec<u32> = (1..=n).filter(|j| num_integer::gcd(*j, n) == 1).collect();
        debug_assert_eq!(exps.len(), phi);

        let mut residue_roots: Vec<Vec<u64>> = Vec::with_capacity(phi);
        for &j in &exps {
            let zeta_val = pow_mod_u64(w, j as u64, p);
            let fj = reduce_poly(f, n, zeta_val, p);
            if fj.len() != f.coeffs.len() {
                continue 'primes; // leading coefficient vanished
            }
            if !is_squarefree_mod_p(&fj, p) {
                continue 'primes;
            }
            let _ = &lead;
            residue_roots.push(roots_mod_p(&fj, p));
        }

        // Lift the modulus and everything in it.
        let pk = BigInt::from(p).pow(steps);
        let zeta_lifts: Vec<BigInt> = exps
            .iter()
            .map(|&j| {
                let r0 = pow_mod_u64(w, j as u64, p);
                hensel_lift_root_of_unity(r0, n, p, steps)
            })
            .collect();
        let lifted_roots: Vec<Vec<BigInt>> = (0..phi)
            .map(|i| {
                residue_roots[i]
                    .iter()
                    .map(|&r0| hensel_lift_poly_root(f, n, &zeta_lifts[i], r0, p, &pk))
                    .collect()
            })
            .collect();

        // The coordinate-solving matrix: rows = embeddings, cols = zeta powers.
        let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(phi);
        for z in &zeta_lifts {
            let mut row = Vec::with_capacity(phi);
            let mut pw = BigInt::one();
            for _ in 0..phi {
                row.push(pw.clone());
                pw = pw * z % &pk;
            }
            mat.push(row);
        }

        let mut found: Vec<Cyclo> = Vec::new();
        let mut combo = vec![0usize; phi];
        let total: usize = lifted_roots.iter().map(|v| v.len().max(1)).product();
        if lifted_roots.iter().any(|v| v.is_empty()) {
            return Some(vec![]);
        }
        if total > 200_000 {
            return Some(vec![]); // degenerate; callers treat as no root found
        }
        loop {
            let rhs: Vec<BigInt> = (0..phi)
                .map(|i| lifted_roots[i][combo[i]].clone())
                .collect();
            if let Some(coords) = solve_mod(&mat, &rhs, &pk, p) {
                if let Some(cand) = reconstruct(&coords, &pk, n) {
                    if f_eval_is_zero(f, &cand, n) && !found.iter().any(|r| *r == cand) {
                        found.push(cand);
                    }
                }
            }
            // advance the multi-index
            let mut i = 0;
            loop {
                if i == phi {
                    found.sort_by_key(|c| format!("{:?}", c));
                    return Some(found);
                }
                combo[i] += 1;
                if combo[i] < lifted_roots[i].len() {
                    break;
                }
                combo[i] = 0;
                i += 1;
            }
        }
    }
    None
}

fn f_eval_is_zero(f: &UPoly<Cyclo>, x: &Cyclo, n: u32) -> bool {
    let mut acc = Cyclo::zero();
    for c in f.coeffs.iter().rev() {
        acc = acc * x.clone() + c.promote_checked(n);
    }
    acc.is_zero()
}

fn split_primes(n: u32) -> impl Iterator<Item = u64> {
    let n = n.max(1) as u64;
    // p = 1 (mod n), starting near 2^29 so that u64 mulmod via u128 is safe.
    let start: u64 = (1 << 29) / n * n + 1;
    (0..5000u64)
        .map(move |k| start + k * n)
        .filter(|&p| p > 2 && is_prime_u64(p))
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if p == q {
            return true;
        }
        if p % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for 64-bit range.
    let d = (p - 1) >> (p - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % p, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        let mut dd = d;
        while dd != p - 1 {
            x = mul_mod_u64(x, x, p);
            dd <<= 1;
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_u64(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, a, p);
        }
        a = mul_mod_u64(a, a, p);
        e >>= 1;
    }
    acc
}

/// A primitive n-th root of unity mod p, for p = 1 (mod n).
fn primitive_root_of_unity(p: u64, n: u32) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    let e = (p - 1) / n as u64;
    'g: for g in 2..1000u64 {
        let w = pow_mod_u64(g, e, p);
        if w == 1 {
            continue;
        }
        // order must be exactly n
        for d in 1..n {
            if n % d == 0 && pow_mod_u64(w, d as u64, p) == 1 {
                continue 'g;
            }
        }
        return Some(w);
    }
    None
}

fn rat_mod_p(r: &Rat, p: u64) -> u64 {
    let pp = BigInt::from(p);
    let num = r.numer().mod_floor(&pp).to_u64().unwrap();
    let den = r.denom().mod_floor(&pp).to_u64().unwrap();
    mul_mod_u64(num, pow_mod_u64(den, p - 2, p), p)
}

fn cyclo_mod_p(c: &Cyclo, n: u32, zeta_val: u64, p: u64) -> u64 {
    let c = c.promote(n);
    let mut acc = 0u64;
    let mut pw = 1u64;
    for r in c.coords() {
        acc = (acc + mul_mod_u64(rat_mod_p(r, p), pw, p)) % p;
        pw = mul_mod_u64(pw, zeta_val, p);
    }
    acc
}

fn reduce_poly(f: &UPoly<Cyclo>, n: u32, zeta_val: u64, p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = f
        .coeffs
        .iter()
        .map(|c| cyclo_mod_p(c, n, zeta_val, p))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

// --- F_p[x] helpers (coefficients as u64) ---

fn poly_mod_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = pow_mod_u64(b[db], p - 2, p);
    while r.len() > db {
        let c = mul_mod_u64(*r.last().unwrap(), lead_inv, p);
        let k = r.len() - 1 - db;
        for i in 0..=db {
            let sub = mul_mod_u64(c, b[i], p);
            r[k + i] = (r[k + i] + p - sub) % p;
        }
        poly_mod_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = poly_rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let li = pow_mod_u64(l, p - 2, p);
        for c in a.iter_mut() {
            *c = mul_mod_u64(*c, li, p);
        }
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + mul_mod_u64(x, y, p)) % p;
        }
    }
    poly_mod_trim(&mut v);
    if v.is_empty() {
        return v;
    }
    poly_rem_mod(&v, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem_mod(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = if acc.is_empty() || b.is_empty() {
                vec![]
            } else {
                poly_mulmod(&acc, &b, m, p)
            };
        }
        b = if b.is_empty() { vec![] } else { poly_mulmod(&b, &b, m, p) };
        e >>= 1;
    }
    acc
}

fn poly_deriv_mod(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![];
    }
    let mut v: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod_u64(c, i as u64 % p, p))
        .collect();
    poly_mod_trim(&mut v);
    v
}

fn is_squarefree_mod_p(f: &[u64], p: u64) -> bool {
    let d = poly_deriv_mod(f, p);
    if d.is_empty() {
        return false;
    }
    poly_gcd_mod(f, &d, p).len() == 1
}

/// All roots in F_p of f, via the distinct-degree step and splitting.
fn roots_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    // g = gcd(x^p - x, f): the product of linear factors.
    let xp = poly_powmod(&[0, 1], p, f, p);
    // x^p - x
    let mut xpmx = xp;
    if xpmx.len() < 2 {
        xpmx.resize(2, 0);
    }
    xpmx[1] = (xpmx[1] + p - 1) % p;
    poly_mod_trim(&mut xpmx);
    let g = if xpmx.is_empty() { f.to_vec() } else { poly_gcd_mod(f, &xpmx, p) };
    let mut out = vec![];
    let mut rng_state: u64 = 0x9E3779B97F4A7C15;
    split_linear(&g, p, &mut out, &mut rng_state);
    out.sort_unstable();
    out
}

fn split_linear(g: &[u64], p: u64, out: &mut Vec<u64>, rng: &mut u64) {
    match g.len() {
        0 | 1 => {}
        2 => {
            // c0 + c1 x = 0 -> x = -c0/c1
            let r = mul_mod_u64(p - g[0] % p, pow_mod_u64(g[1], p - 2, p), p) % p;
            out.push(r);
        }
        _ => {
            loop {
                *rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = *rng % p;
                // h = gcd(g, (x+a)^((p-1)/2) - 1)
                let mut base = vec![a, 1];
                poly_mod_trim(&mut base);
                let mut t = poly_powmod(&base, (p - 1) / 2, g, p);
                if t.is_empty() {
                    t = vec![0];
                }
                if t.is_empty() || t[0] == 0 {
                    t.resize(t.len().max(1), 0);
                }
                t[0] = (t[0] + p - 1) % p;
                poly_mod_trim(&mut t);
                if t.is_empty() {
                    continue;
                }
                let h = poly_gcd_mod(g, &t, p);
                if h.len() > 1 && h.len() < g.len() {
                    let q = poly_divide_exact(g, &h, p);
                    split_linear(&h, p, out, rng);
                    split_linear(&q, p, out, rng);
                    return;
                }
            }
        }
    }
}

fn poly_divide_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    let li = pow_mod_u64(b[db], p - 2, p);
    while r.len() > db {
        let c = mul_mod_u64(*r.last().unwrap(), li, p);
        let k = r.len() - 1 - db;
        q[k] = c;
        for i in 0..=db {
            let sub = mul_mod_u64(c, b[i], p);
            r[k + i] = (r[k + i] + p - sub) % p;
        }
        poly_mod_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    q
}

// --- Lifting ---

/// Hensel-lifts r0 (a root of x^n - 1 mod p) to mod p^steps.
fn hensel_lift_root_of_unity(r0: u64, n: u32, p: u64, steps: u32) -> BigInt {
    let mut modulus = BigInt::from(p);
    let mut r = BigInt::from(r0);
    let nn = BigInt::from(n);
    let target = BigInt::from(p).pow(steps);
    while modulus < target {
        modulus = (&modulus * &modulus).min(target.clone());
        // Newton: r -= (r^n - 1)/(n r^(n-1))
        let rn1 = r.modpow(&BigInt::from(n - 1), &modulus);
        let rn = (&rn1 * &r) % &modulus;
        let fx = (&rn - BigInt::one()).mod_floor(&modulus);
        let dfx = (&nn * &rn1) % &modulus;
        let dinv = mod_inverse(&dfx, &modulus).expect("derivative unit");
        r = (&r - fx * dinv).mod_floor(&modulus);
    }
    r.mod_floor(&target)
}

/// Hensel-lifts a simple root r0 of the reduced polynomial to mod p^steps,
/// where the polynomial's cyclotomic coefficients are evaluated at zeta_lift.
fn hensel_lift_poly_root(
    f: &UPoly<Cyclo>,
    n: u32,
    zeta_lift: &BigInt,
    r0: u64,
    p: u64,
    pk: &BigInt,
) -> BigInt {
    let coeffs: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| cyclo_mod_pk(c, n, zeta_lift, pk))
        .collect();
    let eval = |x: &BigInt, m: &BigInt| -> (BigInt, BigInt) {
        let mut v = BigInt::zero();
        let mut d = BigInt::zero();
        for c in coeffs.iter().rev() {
            d = (&d * x + &v) % m;
            v = (&v * x + c) % m;
        }
        (v.mod_floor(m), d.mod_floor(m))
    };
    let mut modulus = BigInt::from(p);
    let mut r = BigInt::from(r0);
    while &modulus < pk {
        modulus = (&modulus * &modulus).min(pk.clone());
        let (fx, dfx) = eval(&r, &modulus);
        let dinv = mod_inverse(&dfx, &modulus).expect("simple root");
        r = (&r - fx * dinv).mod_floor(&modulus);
    }
    r.mod_floor(pk)
}

fn cyclo_mod_pk(c: &Cyclo, n: u32, zeta_lift: &BigInt, pk: &BigInt) -> BigInt {
    let c = c.promote(n);
    let mut acc = BigInt::zero();
    let mut pw = BigInt::one();
    for r in c.coords() {
        let num = r.numer().mod_floor(pk);
        let den = mod_inverse(&r.denom().mod_floor(pk), pk).expect("denominator unit");
        acc = (acc + num * den % pk * &pw) % pk;
        pw = (&pw * zeta_lift) % pk;
    }
    acc.mod_floor(pk)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Gaussian elimination mod p^k; the matrix must be invertible mod p.
fn solve_mod(mat: &[Vec<BigInt>], rhs: &[BigInt], pk: &BigInt, p: u64) -> Option<Vec<BigInt>> {
    let nn = mat.len();
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut b: Vec<BigInt> = rhs.to_vec();
    let pbig = BigInt::from(p);
    for col in 0..nn {
        let piv = (col..nn).find(|&r| !(&a[r][col] % &pbig).is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = mod_inverse(&a[col][col], pk)?;
        for j in col..nn {
            a[col][j] = (&a[col][j] * &inv) % pk;
        }
        b[col] = (&b[col] * &inv) % pk;
        for r in 0..nn {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..nn {
                    a[r][j] = (&a[r][j] - &f * &a[col][j]).mod_floor(pk);
                }
                b[r] = (&b[r] - &f * &b[col]).mod_floor(pk);
            }
        }
    }
    Some(b)
}

/// Wang rational reconstruction of every coordinate.
fn reconstruct(coords: &[BigInt], pk: &BigInt, n: u32) -> Option<Cyclo> {
    let mut rats = Vec::with_capacity(coords.len());
    for c in coords {
        rats.push(rational_reconstruct(c, pk)?);
    }
    let mut acc = Cyclo::zero();
    for (i, r) in rats.into_iter().enumerate() {
        acc = acc + Cyclo::from_rat_val(r) * Cyclo::zeta_pow(n, i as i64);
    }
    Some(acc)
}

fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = m.sqrt() / BigInt::from(2);
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        let t = &t0 - &q * &t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1.sign() == Sign::Minus {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if num.gcd(&den) != BigInt::one() {
        // tolerate non-reduced pairs; Ratio::new reduces, but a shared factor
        // with the modulus signals a bogus candidate
        return Some(Rat::new(num, den));
    }
    Some(Rat::new(num, den))
}

/// Convenience: k-th roots of an element within its (or a larger) field.
pub fn nth_roots_in_field(v: &Cyclo, k: u32, field_order: u32) -> Vec<Cyclo> {
    let mut coeffs = vec![Cyclo::zero(); k as usize + 1];
    coeffs[0] = -v.clone();
    coeffs[k as usize] = Cyclo::one();
    rational_roots_in_field(&UPoly::new(coeffs), field_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rational_roots_of_rational_poly() {
        // (x - 2/3)(x + 5)(x^2 + 1) over Q: rational roots 2/3, -5
        let f = UPoly::new(
            [
                (rat(-10, 3), 0),
                (rat(-2, 3) + rat(5, 1), 1),
                (rat(0, 1), 2),
            ]
            .iter()
            .map(|_| Cyclo::zero())
            .collect::<Vec<_>>(),
        );
        drop(f);
        let x = UPoly::<Cyclo>::x();
        let lin1 = x.sub(&UPoly::constant(Cyclo::from_rat_val(rat(2, 3))));
        let lin2 = x.add(&UPoly::constant(Cyclo::from_rat_val(rat(5, 1))));
        let quad = x.mul(&x).add(&UPoly::one());
        let f = lin1.mul(&lin2).mul(&quad);
        let roots = rational_roots_in_field(&f, 1);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&Cyclo::from_rat_val(rat(2, 3))));
        assert!(roots.contains(&Cyclo::from_rat_val(rat(-5, 1))));
    }

    #[test]
    fn gaussian_roots_found_in_q_i() {
        // x^2 + 1 has roots +-i in Q(i) but none in Q
        let x = UPoly::<Cyclo>::x();
        let f = x.mul(&x).add(&UPoly::one());
        assert!(rational_roots_in_field(&f, 1).is_empty());
        let roots = rational_roots_in_field(&f, 4);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&Cyclo::i()));
        assert!(roots.contains(&(-Cyclo::i())));
    }

    #[test]
    fn cube_roots_in_q_zeta3() {
        // x^3 - 27/8: the rational root 3/2 plus its zeta_3 twists
        let c = Cyclo::from_rat_val(rat(27, 8));
        let roots = nth_roots_in_field(&c, 3, 3);
        assert_eq!(roots.len(), 3);
        let r = Cyclo::from_rat_val(rat(3, 2));
        assert!(roots.contains(&r));
        assert!(roots.contains(&(r.clone() * Cyclo::zeta(3))));
    }

    #[test]
    fn big_height_root() {
        // (x - 12345/677)(x - zeta_8 * 31/17)
        let a = Cyclo::from_rat_val(rat(12345, 677));
        let b = Cyclo::zeta(8) * Cyclo::from_rat_val(rat(31, 17));
        let x = UPoly::<Cyclo>::x();
        let f = x.sub(&UPoly::constant(a.clone())).mul(&x.sub(&UPoly::constant(b.clone())));
        let roots = rational_roots_in_field(&f, 8);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&a) && roots.contains(&b));
    }
}

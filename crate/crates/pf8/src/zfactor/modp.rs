//! Polynomial arithmetic and factorization over a prime field F_p.
//!
//! Polynomials are coefficient vectors in ascending degree, every
//! coefficient reduced to `[0, p)`, no trailing zeros. The primes used by
//! the factorization driver are small, so no special modular representation
//! is needed.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numpoly::{IntPoly, Integer};

/// Fixed seed for equal-degree splitting; factor order is reproducible
/// across runs.
const EDF_SEED: u64 = 0x8f8_0001;

pub(crate) type FpPoly = Vec<Integer>;

pub(crate) struct PrimeField {
    pub p: Integer,
}

impl PrimeField {
    pub fn new(p: Integer) -> Self {
        PrimeField { p }
    }

    fn red(&self, c: &Integer) -> Integer {
        c.mod_floor(&self.p)
    }

    pub fn from_int_poly(&self, f: &IntPoly) -> FpPoly {
        self.trim(f.coeffs().iter().map(|c| self.red(c)).collect())
    }

    pub(crate) fn trim(&self, mut v: FpPoly) -> FpPoly {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn x() -> FpPoly {
        vec![Integer::zero(), Integer::one()]
    }

    pub fn is_one(f: &FpPoly) -> bool {
        f.len() == 1 && f[0].is_one()
    }

    pub fn deg(f: &FpPoly) -> Option<usize> {
        f.len().checked_sub(1)
    }

    pub fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).cloned().unwrap_or_else(Integer::zero);
                    let y = b.get(i).cloned().unwrap_or_else(Integer::zero);
                    self.red(&(x + y))
                })
                .collect(),
        )
    }

    pub fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).cloned().unwrap_or_else(Integer::zero);
                    let y = b.get(i).cloned().unwrap_or_else(Integer::zero);
                    self.red(&(x - y))
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.trim(out.iter().map(|c| self.red(c)).collect())
    }

    fn inv_scalar(&self, c: &Integer) -> Integer {
        // extended gcd; p prime and c nonzero mod p
        let e = c.extended_gcd(&self.p);
        debug_assert!(e.gcd.is_one());
        self.red(&e.x)
    }

    pub fn divrem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let db = Self::deg(b).expect("division by zero polynomial");
        if a.len() <= db {
            return (Vec::new(), a.clone());
        }
        let lead_inv = self.inv_scalar(&b[db]);
        let mut rem = a.clone();
        let mut quot = vec![Integer::zero(); a.len() - db];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = self.red(&(&rem[i] * &lead_inv));
            rem[i] = Integer::zero();
            for j in 0..db {
                let sub = &factor * &b[j];
                rem[i - db + j] = self.red(&(&rem[i - db + j] - sub));
            }
            quot[i - db] = factor;
        }
        (self.trim(quot), self.trim(rem))
    }

    pub fn rem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &FpPoly) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) if lc.is_one() => a.clone(),
            Some(lc) => {
                let inv = self.inv_scalar(lc);
                a.iter().map(|c| self.red(&(c * &inv))).collect()
            }
        }
    }

    pub fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &FpPoly) -> FpPoly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.red(&(c * Integer::from(i as u64))))
                .collect(),
        )
    }

    /// `a^e mod (f, p)` by square and multiply.
    pub fn pow_mod(&self, a: &FpPoly, e: &Integer, f: &FpPoly) -> FpPoly {
        let mut acc = vec![Integer::one()];
        let base = self.rem(a, f);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), f);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), f);
            }
        }
        acc
    }

    pub fn to_int_poly(&self, a: &FpPoly) -> IntPoly {
        IntPoly::from_coeffs(a.clone())
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    /// For coprime inputs `g = 1`, `deg s < deg b` and `deg t < deg a`.
    pub fn ext_gcd(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let one = vec![Integer::one()];
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (one.clone(), Vec::new());
        let (mut t0, mut t1) = (Vec::new(), one);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        // scale so the gcd is exactly monic
        let lc_inv = self.inv_scalar(r0.last().expect("gcd of zero polynomials"));
        let scale = |v: &FpPoly| -> FpPoly { v.iter().map(|c| self.red(&(c * &lc_inv))).collect() };
        let g = self.trim(scale(&r0));
        let mut s = self.trim(scale(&s0));
        let mut t = self.trim(scale(&t0));
        // reduce s mod b, folding the quotient into t, to meet degree bounds
        if PrimeField::deg(&s) >= PrimeField::deg(b) && !b.is_empty() {
            let (q, s_red) = self.divrem(&s, b);
            s = s_red;
            t = self.add(&t, &self.mul(&q, a));
        }
        (g, s, t)
    }
}

/// Distinct-degree factorization of a monic squarefree `f`:
/// returns `(product of irreducibles of degree d, d)` pairs.
fn distinct_degree(fp: &PrimeField, f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = PrimeField::x();
    let mut h = x.clone();
    let mut d = 0usize;
    while PrimeField::deg(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = fp.pow_mod(&h, &fp.p, &f);
        let g = fp.gcd(&f, &fp.sub(&h, &x));
        if !PrimeField::is_one(&g) {
            out.push((g.clone(), d));
            f = fp.divrem(&f, &g).0;
            h = fp.rem(&h, &f);
        }
    }
    if PrimeField::deg(&f).unwrap_or(0) >= 1 {
        let deg = PrimeField::deg(&f).unwrap();
        out.push((f, deg));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting of a monic product `f` of
/// irreducibles all of degree `d`, for odd `p`.
fn equal_degree(fp: &PrimeField, f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = PrimeField::deg(f).unwrap();
    if n == d {
        return vec![f.clone()];
    }
    // exponent (p^d - 1) / 2
    let exp = (num_traits::pow::pow(fp.p.clone(), d) - Integer::one()) / Integer::from(2);
    let one = vec![Integer::one()];
    loop {
        let a: FpPoly = fp.trim(
            (0..n)
                .map(|_| {
                    let r: u64 = rng.gen();
                    Integer::from(r).mod_floor(&fp.p)
                })
                .collect(),
        );
        if PrimeField::deg(&a).unwrap_or(0) < 1 {
            continue;
        }
        let g = fp.gcd(&a, f);
        let split = if !PrimeField::is_one(&g) && PrimeField::deg(&g) < PrimeField::deg(f) {
            Some(g)
        } else {
            let b = fp.pow_mod(&a, &exp, f);
            let g = fp.gcd(f, &fp.sub(&b, &one));
            if !PrimeField::is_one(&g) && !g.is_empty() && PrimeField::deg(&g) < PrimeField::deg(f)
            {
                Some(g)
            } else {
                None
            }
        };
        if let Some(g) = split {
            let h = fp.divrem(f, &g).0;
            let mut out = equal_degree(fp, &g, d, rng);
            out.extend(equal_degree(fp, &fp.monic(&h), d, rng));
            return out;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BadPrime {
    #[error("leading coefficient vanishes mod {0}")]
    LeadingCoeffVanishes(Integer),
    #[error("image mod {0} is not squarefree")]
    NotSquarefree(Integer),
}

/// Complete monic irreducible factorization of `f` modulo `prime`.
///
/// The caller retries with the next prime on [`BadPrime`]. Factors come back
/// sorted by degree then coefficients, so runs are reproducible.
pub fn factor_mod_p(f: &IntPoly, prime: &Integer) -> Result<Vec<IntPoly>, BadPrime> {
    let fp = PrimeField::new(prime.clone());
    if fp.red(f.leading_coeff().expect("nonzero polynomial")).is_zero() {
        return Err(BadPrime::LeadingCoeffVanishes(prime.clone()));
    }
    let fbar = fp.monic(&fp.from_int_poly(f));
    if PrimeField::deg(&fbar).unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let gcd = fp.gcd(&fbar, &fp.derivative(&fbar));
    if !PrimeField::is_one(&gcd) {
        return Err(BadPrime::NotSquarefree(prime.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut factors: Vec<IntPoly> = Vec::new();
    for (prod, d) in distinct_degree(&fp, &fbar) {
        for g in equal_degree(&fp, &prod, d, &mut rng) {
            factors.push(fp.to_int_poly(&g));
        }
    }
    factors.sort_by(crate::zfactor::canonical_poly_order);
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numpoly::int;

    #[test]
    fn x2_plus_1_splits_mod_5() {
        let f = IntPoly::from_int_slice(&[1, 0, 1]);
        let factors = factor_mod_p(&f, &int(5)).unwrap();
        assert_eq!(
            factors,
            vec![
                IntPoly::from_int_slice(&[2, 1]),
                IntPoly::from_int_slice(&[3, 1])
            ]
        );
    }

    #[test]
    fn x2_plus_1_irreducible_mod_3() {
        let f = IntPoly::from_int_slice(&[1, 0, 1]);
        let factors = factor_mod_p(&f, &int(3)).unwrap();
        assert_eq!(factors, vec![f]);
    }

    #[test]
    fn x4_plus_1_splits_into_linears_mod_17() {
        let f = IntPoly::from_int_slice(&[1, 0, 0, 0, 1]);
        let factors = factor_mod_p(&f, &int(17)).unwrap();
        assert_eq!(factors.len(), 4);
        assert!(factors.iter().all(|g| g.degree() == Some(1)));
        // brute-force oracle: roots of x^4 = -1 mod 17
        let roots: Vec<i64> = (0..17)
            .filter(|&x: &i64| (x.pow(4) + 1) % 17 == 0)
            .collect();
        let expected: Vec<IntPoly> = roots
            .iter()
            .map(|&r| IntPoly::from_int_slice(&[(17 - r) % 17, 1]))
            .collect();
        let mut expected = expected;
        expected.sort_by(crate::zfactor::canonical_poly_order);
        assert_eq!(factors, expected);
    }

    #[test]
    fn bad_prime_reported() {
        let f = IntPoly::from_int_slice(&[1, 0, 5]);
        assert_eq!(
            factor_mod_p(&f, &int(5)),
            Err(BadPrime::LeadingCoeffVanishes(int(5)))
        );
        let sq = IntPoly::from_int_slice(&[1, 2, 1]); // (x+1)^2
        assert_eq!(factor_mod_p(&sq, &int(7)), Err(BadPrime::NotSquarefree(int(7))));
    }
}

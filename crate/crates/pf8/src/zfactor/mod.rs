//! Complete factorization of univariate integer polynomials into
//! irreducibles over Q, plus cyclotomic polynomial generation.
//!
//! The driver is classic Zassenhaus: factor modulo a small prime, lift the
//! factorization quadratically past the Mignotte coefficient bound, then
//! recombine subsets of lifted factors by exact trial division. The degree
//! range in this crate (≤ 24) keeps the exhaustive recombination trivially
//! small, so no lattice reduction is needed.

mod hensel;
mod modp;

use std::cmp::Ordering;

use num_traits::One;

pub use modp::{factor_mod_p, BadPrime};

use crate::numpoly::{IntPoly, Integer, RatPoly, Rational};

/// Upper bound accepted by [`cyclotomic`].
pub const MAX_CYCLOTOMIC_INDEX: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cyclotomic index {0} outside 1..={MAX_CYCLOTOMIC_INDEX}")]
pub struct CyclotomicIndexError(pub u32);

/// The k-th cyclotomic polynomial, monic of degree φ(k).
pub fn cyclotomic(k: u32) -> Result<IntPoly, CyclotomicIndexError> {
    if k == 0 || k > MAX_CYCLOTOMIC_INDEX {
        return Err(CyclotomicIndexError(k));
    }
    let mut memo: Vec<IntPoly> = Vec::with_capacity(k as usize + 1);
    memo.push(IntPoly::one()); // unused slot 0
    for n in 1..=k {
        // x^n - 1 divided by all lower cyclotomics at divisors of n
        let mut f = &IntPoly::monomial(Integer::one(), n as usize) - &IntPoly::one();
        for d in 1..n {
            if n % d == 0 {
                f = f.div_exact(&memo[d as usize]).expect("cyclotomic division");
            }
        }
        memo.push(f);
    }
    Ok(memo.pop().unwrap())
}

/// Canonical factor order: by degree, then by the coefficient vector.
pub(crate) fn canonical_poly_order(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Monic gcd over Q (zero if both inputs are zero).
fn rat_poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem(&b).unwrap();
        a = b;
        b = r;
    }
    match a.leading_coeff() {
        None => RatPoly::zero(),
        Some(lc) => a.scale(&lc.recip()),
    }
}

/// Primitive positive-lc gcd of two integer polynomials.
fn int_poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let g = rat_poly_gcd(&a.to_rat_poly(), &b.to_rat_poly());
    if g.is_zero() {
        return IntPoly::zero();
    }
    g.content_primitive().unwrap().1
}

/// Yun-style squarefree decomposition; the product of the parts (with their
/// multiplicities) reconstructs `p` up to a unit. Parts are primitive with
/// positive leading coefficient, pairwise coprime, sorted canonically.
pub fn squarefree_decompose(p: &IntPoly) -> Vec<(IntPoly, u32)> {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let f = p.primitive_part();
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut g = int_poly_gcd(&f, &f.derivative());
    let mut w = f.div_exact(&g).expect("gcd divides");
    let mut multiplicity = 1u32;
    while g.degree().map_or(false, |d| d >= 1) {
        let y = int_poly_gcd(&g, &w);
        let z = w.div_exact(&y).expect("gcd divides");
        if z.degree().map_or(false, |d| d >= 1) {
            out.push((z, multiplicity));
        }
        w = y;
        g = g.div_exact(&w).expect("gcd divides");
        multiplicity += 1;
    }
    if w.degree().map_or(false, |d| d >= 1) {
        out.push((w, multiplicity));
    }
    out.sort_by(|a, b| canonical_poly_order(&a.0, &b.0));
    out
}

/// A complete irreducible factorization over Q: `unit · Π factorᵢ^multᵢ`
/// equals the input exactly. Factors are primitive, irreducible, with
/// positive leading coefficient, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.to_rat_poly().pow(*e);
        }
        acc
    }
}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime ≥ 5 for which `f` keeps its degree and stays squarefree;
/// returns the prime and the monic modular factors.
fn working_prime(f: &IntPoly) -> (Integer, Vec<modp::FpPoly>) {
    let mut candidate = 5u64;
    loop {
        if is_small_prime(candidate) {
            let p = Integer::from(candidate);
            if let Ok(factors) = factor_mod_p(f, &p) {
                let fp = modp::PrimeField::new(p.clone());
                let lifted: Vec<modp::FpPoly> =
                    factors.iter().map(|g| fp.from_int_poly(g)).collect();
                return (p, lifted);
            }
        }
        candidate += 2;
    }
}

/// Factors a primitive squarefree polynomial of degree ≥ 2.
fn zassenhaus_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let (prime, modular) = working_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = hensel::mignotte_bound(f);
    let (leaves, modulus) = hensel::lift_factors(f, &modular, &prime, &bound);
    hensel::recombine(f, leaves, &modulus)
}

/// Complete irreducible factorization over Q.
pub fn factor_over_z(p: &IntPoly) -> Factorization {
    assert!(!p.is_zero(), "factorization of zero");
    let (content, prim) = p.to_rat_poly().content_primitive().unwrap();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for (part, multiplicity) in squarefree_decompose(&prim) {
        if part.degree() == Some(1) {
            factors.push((part, multiplicity));
        } else {
            for irr in zassenhaus_squarefree(&part) {
                factors.push((irr, multiplicity));
            }
        }
    }
    factors.sort_by(|a, b| canonical_poly_order(&a.0, &b.0));
    let result = Factorization {
        unit: content,
        factors,
    };
    debug_assert_eq!(result.product(), p.to_rat_poly());
    result
}

/// True iff `p` is irreducible over Q (degree ≥ 1, single factor of full
/// degree with multiplicity 1).
pub fn is_irreducible(p: &IntPoly) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(d) => {
            let f = factor_over_z(p);
            f.factors.len() == 1 && f.factors[0].1 == 1 && f.factors[0].0.degree() == Some(d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numpoly::{int, rat};
    use num_traits::{Signed, Zero};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_int_slice(coeffs)
    }

    #[test]
    fn cyclotomic_small_indices() {
        assert_eq!(cyclotomic(1).unwrap(), ip(&[-1, 1]));
        assert_eq!(cyclotomic(8).unwrap(), ip(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), ip(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
        assert!(cyclotomic(65).is_err());
    }

    #[test]
    fn cyclotomic_product_reconstructs_xn_minus_1() {
        // Π_{d | n} Φ_d = x^n - 1
        for n in [6u32, 8, 12, 30, 64] {
            let mut prod = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = &prod * &cyclotomic(d).unwrap();
                }
            }
            let target = &IntPoly::monomial(int(1), n as usize) - &IntPoly::one();
            assert_eq!(prod, target);
        }
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2)
        let f = &(&ip(&[-1, 1]) * &ip(&[-1, 1])) * &ip(&[2, 1]);
        assert_eq!(
            squarefree_decompose(&f),
            vec![(ip(&[-1, 1]), 2), (ip(&[2, 1]), 1)]
        );
        assert_eq!(
            squarefree_decompose(&ip(&[1, 0, 0, 0, 1])),
            vec![(ip(&[1, 0, 0, 0, 1]), 1)]
        );
    }

    #[test]
    fn squarefree_phi8_of_table_inputs() {
        // Phi_8(u(x)) is squarefree for every cubic u in the published table;
        // oracle: gcd(f, f') = 1.
        let table: [[i64; 4]; 19] = [
            [3, 6, 4, 2], [1, 2, 3, 9], [6, 24, 32, 17], [7, 31, 39, 18],
            [18, 75, 112, 64], [15, 65, 110, 68], [9, 54, 108, 82],
            [202, 539, 480, 144], [2, 29, 96, 144], [69, 263, 372, 216],
            [0, 2, 0, 225], [12, 96, 256, 257], [134, 561, 798, 388],
            [231, 821, 980, 392], [0, 11, 0, 450], [15, 150, 500, 626],
            [229, 1006, 1488, 738], [0, 9, 0, 800], [53, 379, 969, 873],
        ];
        for u in table {
            let u = ip(&u);
            let f = &u.pow(4) + &IntPoly::one();
            let g = int_poly_gcd(&f, &f.derivative());
            assert_eq!(g.degree(), Some(0), "gcd(f, f') constant for u = {}", u);
            let parts = squarefree_decompose(&f);
            assert_eq!(parts.len(), 1);
            assert_eq!(parts[0].1, 1);
        }
    }

    #[test]
    fn factor_x2_minus_1() {
        let f = factor_over_z(&ip(&[-1, 0, 1]));
        assert!(f.unit.is_one());
        assert_eq!(f.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]);
    }

    #[test]
    fn factor_phi8_of_lc82_u_contains_theorem_quartic() {
        let u = ip(&[9, 54, 108, 82]);
        let f = &u.pow(4) + &IntPoly::one();
        let fact = factor_over_z(&f);
        let quartic = ip(&[1, 12, 54, 108, 82]);
        assert!(
            fact.factors.iter().any(|(g, _)| *g == quartic),
            "expected quartic factor present, got {:?}",
            fact.factors
        );
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.product(), f.to_rat_poly());
    }

    #[test]
    fn factor_phi8_of_lc64_u_has_no_quartic_of_degree_8_family() {
        // lc(u) = 64 row: the usable subgroup polynomial has degree 8.
        let u = ip(&[18, 75, 112, 64]);
        let f = &u.pow(4) + &IntPoly::one();
        let fact = factor_over_z(&f);
        let degrees: Vec<usize> = fact
            .factors
            .iter()
            .map(|(g, _)| g.degree().unwrap())
            .collect();
        assert!(degrees.contains(&4));
        assert!(degrees.contains(&8));
        assert_eq!(fact.product(), f.to_rat_poly());
    }

    #[test]
    fn is_irreducible_examples() {
        assert!(is_irreducible(&ip(&[1, 0, 0, 0, 1])));
        assert!(!is_irreducible(&ip(&[-1, 0, 1])));
        // q(x) of the lc-82 family represents primes, so it is irreducible
        let q = ip(&[745, 12636, 88945, 333614, 705346, 799008, 379906]);
        assert!(is_irreducible(&q));
        assert!(!is_irreducible(&IntPoly::one()));
    }

    /// Rational root check: a degree-2 or 3 integer polynomial is
    /// irreducible over Q iff it has no rational root.
    fn low_degree_irreducible_oracle(f: &IntPoly) -> bool {
        let d = f.degree().unwrap();
        assert!((2..=3).contains(&d));
        let lc = f.leading_coeff().unwrap().clone();
        let a0 = f.coeff(0);
        if a0.is_zero() {
            return false;
        }
        let divisors = |n: &Integer| -> Vec<Integer> {
            let n = n.abs();
            let mut out = Vec::new();
            let mut d = Integer::one();
            while &d * &d <= n {
                if (&n % &d).is_zero() {
                    out.push(d.clone());
                    out.push(&n / &d);
                }
                d += 1;
            }
            out
        };
        for p in divisors(&a0) {
            for q in divisors(&lc) {
                for sign in [1i64, -1] {
                    let root = Rational::new(&p * int(sign), q.clone());
                    if f.to_rat_poly().evaluate(&root).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn factorization_oracle_random_products() {
        // multiply known irreducibles, refactor, compare canonical forms
        let irreducibles: Vec<IntPoly> = vec![
            ip(&[1, 1]),
            ip(&[-2, 1]),
            ip(&[1, 0, 1]),
            ip(&[1, 1, 1]),
            ip(&[-2, 0, 1]),
            ip(&[-2, 0, 0, 1]),
            ip(&[1, 1, 0, 1]),
            ip(&[1, 0, 0, 0, 1]),
            ip(&[1, -1, 1, -1, 1]), // Phi_10
            ip(&[7, 0, 2]),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let mut expected: Vec<(IntPoly, u32)> = Vec::new();
            let mut product = IntPoly::constant(int(rng.gen_range(1..20)));
            let unit = Rational::from_integer(product.coeff(0));
            for _ in 0..rng.gen_range(1..4) {
                let f = &irreducibles[rng.gen_range(0..irreducibles.len())];
                let e = rng.gen_range(1..3u32);
                product = &product * &f.pow(e);
                match expected.iter_mut().find(|(g, _)| g == f) {
                    Some(entry) => entry.1 += e,
                    None => expected.push((f.clone(), e)),
                }
            }
            expected.sort_by(|a, b| canonical_poly_order(&a.0, &b.0));
            let fact = factor_over_z(&product);
            assert_eq!(fact.unit, unit);
            assert_eq!(fact.factors, expected);
            for (g, _) in &fact.factors {
                if let Some(d) = g.degree() {
                    if (2..=3).contains(&d) {
                        assert!(low_degree_irreducible_oracle(g));
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_with_rational_content() {
        // content and sign are carried by the unit
        let p = RatPoly::from_coeffs(vec![rat(-3, 2), rat(0, 1), rat(-3, 2)]);
        let (c, prim) = p.content_primitive().unwrap();
        assert_eq!(c, rat(-3, 2));
        let fact = factor_over_z(&prim);
        assert_eq!(fact.factors, vec![(ip(&[1, 0, 1]), 1)]);
    }
}

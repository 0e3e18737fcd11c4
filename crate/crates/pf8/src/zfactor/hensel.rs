//! Quadratic Hensel lifting of a mod-p factorization to a power p^e above
//! the Mignotte coefficient bound, plus the subset recombination that turns
//! lifted factors into true factors over Z.

use num_integer::Integer as _;
use num_traits::{One, Signed};

use crate::numpoly::{IntPoly, Integer};

use super::modp::{FpPoly, PrimeField};

/// Binary tree over the modular factors. Every node's polynomial is monic;
/// a fork stores Bezout cofactors `s·left + t·right = 1` at the current
/// precision.
enum Node {
    Leaf {
        poly: FpPoly,
    },
    Fork {
        poly: FpPoly,
        left: Box<Node>,
        right: Box<Node>,
        s: FpPoly,
        t: FpPoly,
    },
}

impl Node {
    fn poly(&self) -> &FpPoly {
        match self {
            Node::Leaf { poly } => poly,
            Node::Fork { poly, .. } => poly,
        }
    }

    fn build(factors: &[FpPoly], fp: &PrimeField) -> Node {
        if factors.len() == 1 {
            return Node::Leaf {
                poly: factors[0].clone(),
            };
        }
        let mid = factors.len() / 2;
        let left = Node::build(&factors[..mid], fp);
        let right = Node::build(&factors[mid..], fp);
        let poly = fp.mul(left.poly(), right.poly());
        let (g, s, t) = fp.ext_gcd(left.poly(), right.poly());
        debug_assert!(PrimeField::is_one(&g), "modular factors not coprime");
        Node::Fork {
            poly,
            left: Box::new(left),
            right: Box::new(right),
            s,
            t,
        }
    }

    /// One quadratic lift step: all node data moves from precision m to m².
    /// `target` is the desired (monic) product of this subtree mod m².
    fn lift(&mut self, target: &FpPoly, ring: &PrimeField) {
        match self {
            Node::Leaf { poly } => *poly = target.clone(),
            Node::Fork {
                poly,
                left,
                right,
                s,
                t,
            } => {
                let (g, h) = (left.poly().clone(), right.poly().clone());
                // factor update
                let e = ring.sub(target, &ring.mul(&g, &h));
                let (q, r) = ring.divrem(&ring.mul(s, &e), &h);
                let g_new = ring.add(&ring.add(&g, &ring.mul(t, &e)), &ring.mul(&q, &g));
                let h_new = ring.add(&h, &r);
                // Bezout update
                let one = vec![Integer::one()];
                let b = ring.sub(
                    &ring.add(&ring.mul(s, &g_new), &ring.mul(t, &h_new)),
                    &one,
                );
                let (c, d) = ring.divrem(&ring.mul(s, &b), &h_new);
                let s_new = ring.sub(s, &d);
                let t_new = ring.sub(&ring.sub(t, &ring.mul(t, &b)), &ring.mul(&c, &g_new));
                debug_assert_eq!(PrimeField::deg(&g_new), PrimeField::deg(&g));
                debug_assert_eq!(PrimeField::deg(&h_new), PrimeField::deg(&h));
                debug_assert!(h_new.last().map_or(false, |c| c.is_one()));
                left.lift(&g_new, ring);
                right.lift(&h_new, ring);
                *poly = target.clone();
                *s = s_new;
                *t = t_new;
            }
        }
    }

    fn leaves(self, out: &mut Vec<FpPoly>) {
        match self {
            Node::Leaf { poly } => out.push(poly),
            Node::Fork { left, right, .. } => {
                left.leaves(out);
                right.leaves(out);
            }
        }
    }
}

/// Landau–Mignotte style bound: any factor of `f` over Z (adjusted by
/// `lc(f)`) has coefficients of absolute value below the returned value.
pub(crate) fn mignotte_bound(f: &IntPoly) -> Integer {
    let n = f.degree().expect("nonzero polynomial");
    let sqrt_n1 = (Integer::from(n as u64) + Integer::one()).sqrt() + Integer::one();
    sqrt_n1 * (Integer::one() << n) * f.height() * f.leading_coeff().unwrap().abs()
}

/// Lifts the monic mod-p factors of `f` to precision `m = p^(2^k) > 2·bound`,
/// returning the lifted factors together with the final modulus.
pub(crate) fn lift_factors(
    f: &IntPoly,
    modular_factors: &[FpPoly],
    prime: &Integer,
    bound: &Integer,
) -> (Vec<FpPoly>, Integer) {
    let target_modulus = Integer::from(2) * bound;
    let fp = PrimeField::new(prime.clone());
    let mut tree = Node::build(modular_factors, &fp);
    let mut m = prime.clone();
    while m <= target_modulus {
        m = &m * &m;
        let ring = PrimeField::new(m.clone());
        // monic image of f at the new precision
        let fbar = ring.monic(&ring.from_int_poly(f));
        tree.lift(&fbar, &ring);
    }
    let mut leaves = Vec::new();
    tree.leaves(&mut leaves);
    (leaves, m)
}

fn balanced(coeffs: &FpPoly, m: &Integer) -> IntPoly {
    let half = m / Integer::from(2);
    IntPoly::from_coeffs(
        coeffs
            .iter()
            .map(|c| if c > &half { c - m } else { c.clone() })
            .collect(),
    )
}

/// Advances `indices` to the next k-combination of `{0..n}`; false when done.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive subset recombination. `f` must be primitive and squarefree
/// with `f ≡ lc(f)·Π leaves (mod m)`; returns the irreducible factors of `f`
/// over Z, each certified by exact trial division.
pub(crate) fn recombine(f: &IntPoly, leaves: Vec<FpPoly>, m: &Integer) -> Vec<IntPoly> {
    let ring = PrimeField::new(m.clone());
    let mut active = leaves;
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= active.len() {
        let mut indices: Vec<usize> = (0..size).collect();
        loop {
            let mut prod = vec![f.leading_coeff().unwrap().mod_floor(m)];
            for &i in &indices {
                prod = ring.mul(&prod, &active[i]);
            }
            let candidate = balanced(&prod, m).primitive_part();
            if let Some(q) = f.div_exact(&candidate) {
                // minimal subsets are found first, so the candidate is irreducible
                out.push(candidate);
                f = q;
                for &i in indices.iter().rev() {
                    active.remove(i);
                }
                continue 'sizes;
            }
            if !next_combination(&mut indices, active.len()) {
                break;
            }
        }
        size += 1;
    }
    if f.degree().map_or(false, |d| d >= 1) {
        out.push(f.primitive_part());
    }
    out
}

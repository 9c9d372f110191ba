//! Exact scalars of the form `Σ c_d·√d` with rational `c_d` and square-free
//! integer `d`.
//!
//! Loop weights are square roots of small integers, and Gram ranks at
//! degenerate parameters (δ = √2, √3) are exact-arithmetic questions, so no
//! floating point is allowed anywhere near the elimination. Inversion is done
//! by multiplying the Galois conjugates over the primes appearing in the
//! support, which keeps the arithmetic inside the multiquadratic field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

/// `Σ_d terms[d]·√d`, keys square-free and positive, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadScalar {
    terms: BTreeMap<u64, BigRational>,
}

/// Splits `n` as `g²·d` with `d` square-free.
fn squarefree_decompose(mut n: u64) -> (u64, u64) {
    assert!(n > 0, "radicand must be positive");
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut count = 0;
        while n % p == 0 {
            n /= p;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= p;
        }
        if count % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    free *= n;
    (square, free)
}

fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

impl QuadScalar {
    pub fn zero() -> Self {
        QuadScalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(v: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !v.is_zero() {
            terms.insert(1, v);
        }
        QuadScalar { terms }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√n`, normalized: `√8` is stored as `2·√2`.
    pub fn sqrt(n: u64) -> Self {
        let (square, free) = squarefree_decompose(n);
        let mut terms = BTreeMap::new();
        terms.insert(free, BigRational::from_integer(BigInt::from(square)));
        QuadScalar { terms }
    }

    /// `√n` raised to `k`.
    pub fn sqrt_pow(n: u64, k: u32) -> Self {
        let whole = n.pow(k / 2);
        let base = Self::from_integer(whole as i64);
        if k % 2 == 1 {
            &base * &Self::sqrt(n)
        } else {
            base
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational part, if the value is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn coefficient(&self, d: u64) -> BigRational {
        self.terms.get(&d).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_term(&mut self, d: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Flips the sign of `√p` for every prime `p` in `flip`.
    fn conjugate(&self, flip: &[u64]) -> QuadScalar {
        let mut out = QuadScalar::zero();
        for (&d, c) in &self.terms {
            let flips = flip.iter().filter(|&&p| d % p == 0).count();
            let coeff = if flips % 2 == 0 { c.clone() } else { -c.clone() };
            out.insert_term(d, coeff);
        }
        out
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<QuadScalar> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(BigRational::one() / r));
        }
        let mut primes: Vec<u64> = Vec::new();
        for &d in self.terms.keys() {
            for p in prime_factors(d) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        // Product of the non-identity Galois conjugates; x times that product
        // is the field norm, a nonzero rational.
        let mut numerator = QuadScalar::one();
        for pattern in 1u32..(1 << primes.len()) {
            let flips: Vec<u64> = primes
                .iter()
                .enumerate()
                .filter(|(i, _)| pattern & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            numerator = &numerator * &self.conjugate(&flips);
        }
        let norm = self * &numerator;
        let norm = norm
            .as_rational()
            .expect("product over the full Galois orbit is rational");
        assert!(!norm.is_zero(), "nonzero field elements have nonzero norm");
        Some(&numerator * &Self::from_rational(BigRational::one() / norm))
    }
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.insert_term(d, c.clone());
        }
        out
    }
}

impl AddAssign<&QuadScalar> for QuadScalar {
    fn add_assign(&mut self, rhs: &QuadScalar) {
        for (&d, c) in &rhs.terms {
            self.insert_term(d, c.clone());
        }
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        self + &(-rhs.clone())
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(mut self) -> QuadScalar {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &QuadScalar) -> QuadScalar {
        let mut out = QuadScalar::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &rhs.terms {
                // √d1·√d2 = g·√(d1 d2 / g²) with g = gcd: both factors are
                // square-free so the quotient is square-free again.
                let g = num_integer::gcd(d1, d2);
                let d = (d1 / g) * (d2 / g);
                out.insert_term(d, c1 * c2 * BigRational::from_integer(BigInt::from(g)));
            }
        }
        out
    }
}

impl MulAssign<&QuadScalar> for QuadScalar {
    fn mul_assign(&mut self, rhs: &QuadScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in &self.terms {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if d == 1 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "√{d}")?;
            } else {
                write!(f, "{abs}·√{d}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sqrt_times(n: u64, num: i64, den: i64) -> QuadScalar {
        &QuadScalar::sqrt(n) * &QuadScalar::rational(num, den)
    }

    #[test]
    fn sqrt_normalizes_square_factors() {
        assert_eq!(QuadScalar::sqrt(8), sqrt_times(2, 2, 1));
        assert_eq!(QuadScalar::sqrt(9), QuadScalar::from_integer(3));
        assert_eq!(QuadScalar::sqrt(12), sqrt_times(3, 2, 1));
        assert_eq!(QuadScalar::sqrt(1), QuadScalar::one());
    }

    #[test]
    fn sqrt_products_renormalize() {
        // √2·√6 = 2√3.
        let prod = &QuadScalar::sqrt(2) * &QuadScalar::sqrt(6);
        assert_eq!(prod, sqrt_times(3, 2, 1));
        // √3·√3 = 3.
        let prod = &QuadScalar::sqrt(3) * &QuadScalar::sqrt(3);
        assert_eq!(prod, QuadScalar::from_integer(3));
    }

    #[test]
    fn sqrt_pow_matches_repeated_multiplication() {
        for n in [2u64, 3, 5, 6, 7] {
            let mut acc = QuadScalar::one();
            for k in 0..6u32 {
                assert_eq!(QuadScalar::sqrt_pow(n, k), acc);
                acc = &acc * &QuadScalar::sqrt(n);
            }
        }
    }

    #[test]
    fn inverse_of_mixed_element() {
        // x = 1 + √2 + √3: check x·x⁻¹ = 1 through the conjugate formula.
        let x = &(&QuadScalar::one() + &QuadScalar::sqrt(2)) + &QuadScalar::sqrt(3);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, QuadScalar::one());
        assert!(QuadScalar::zero().inverse().is_none());
    }

    /// Arbitrary small field elements over √2, √3, √5, √6.
    fn arb_scalar() -> impl Strategy<Value = QuadScalar> {
        let coeff = (-6i64..=6, 1i64..=4).prop_map(|(n, d)| (n, d));
        proptest::collection::vec(coeff, 4).prop_map(|cs| {
            let ds = [1u64, 2, 3, 6];
            let mut out = QuadScalar::zero();
            for ((n, d), &rad) in cs.into_iter().zip(&ds) {
                out += &(&QuadScalar::rational(n, d) * &QuadScalar::sqrt(rad));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            // Commutativity and associativity of both operations, and
            // distributivity.
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &QuadScalar::one(), a.clone());
            prop_assert_eq!(&a + &QuadScalar::zero(), a.clone());
        }

        #[test]
        fn stored_indices_are_squarefree(a in arb_scalar(), b in arb_scalar()) {
            let prod = &a * &b;
            for &d in prod.terms.keys() {
                let (square, free) = squarefree_decompose(d);
                prop_assert_eq!((square, free), (1, d));
            }
        }

        #[test]
        fn inverse_roundtrip(a in arb_scalar()) {
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(&a * &inv, QuadScalar::one());
            } else {
                prop_assert!(a.is_zero());
            }
        }
    }
}

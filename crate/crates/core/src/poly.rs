//! Sparse multivariate polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ring::CommutativeRing;

/// Monomials are exponent vectors of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Poly {
        Poly::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, 1)
    }

    pub fn monomial(exponents: Vec<u32>, c: impl Into<BigInt>) -> Poly {
        let mut p = Poly::zero(exponents.len());
        p.add_term(exponents, c.into());
        p
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exponents.clone())
            .or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn scaled(&self, k: &BigInt) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in self.terms() {
            p.add_term(e.clone(), c * k);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Evaluates in any commutative ring, one value per variable.
    pub fn eval<R: CommutativeRing>(&self, ring: &R, values: &[R::Elem]) -> R::Elem {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        let mut acc = ring.zero();
        for (e, c) in self.terms() {
            let mut term = ring.from_int(c);
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    term = ring.mul(&term, &ring.pow(v, k));
                }
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    /// Renders terms by descending total degree, e.g. `Z^3 - 2*Y*Z`.
    pub fn format(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut ordered: Vec<(&Vec<u32>, &BigInt)> = self.terms().collect();
        ordered.sort_by_key(|(e, _)| std::cmp::Reverse(e.iter().sum::<u32>()));
        let mut out = String::new();
        for (n, (e, c)) in ordered.into_iter().enumerate() {
            let monomial: Vec<String> = names
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(name, &k)| {
                    if k == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            let magnitude = c.abs();
            let body = match (monomial.is_empty(), magnitude.is_one()) {
                (true, _) => magnitude.to_string(),
                (false, true) => monomial.join("*"),
                (false, false) => format!("{magnitude}*{}", monomial.join("*")),
            };
            match (n, c.is_negative()) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e.clone(), -c);
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scaled(&BigInt::from(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

/// Integer polynomials as a ring, for evaluating one polynomial at others.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing {
    pub nvars: usize,
}

impl CommutativeRing for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero(self.nvars)
    }

    fn one(&self) -> Poly {
        Poly::one(self.nvars)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }

    fn scale(&self, a: &Poly, k: &BigInt) -> Poly {
        a.scaled(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Reals;

    #[test]
    fn arithmetic_and_format() {
        let y = Poly::var(2, 0);
        let z = Poly::var(2, 1);
        let p = &(&z * &z) - &y;
        assert_eq!(p.format(&["Y", "Z"]), "Z^2 - Y");
        let q = &(&p * &z) - &(&y * &z);
        assert_eq!(q.format(&["Y", "Z"]), "Z^3 - 2*Y*Z");
        assert_eq!((&q - &q).format(&["Y", "Z"]), "0");
        assert_eq!(Poly::constant(2, -3).format(&["Y", "Z"]), "-3");
        assert_eq!(q.degree_in(1), Some(3));
    }

    #[test]
    fn evaluation() {
        let y = Poly::var(2, 0);
        let z = Poly::var(2, 1);
        let p = &(&z * &z) - &y;
        assert_eq!(p.eval(&Reals, &[1.0, 3.0]), 8.0);
        let sub = p.eval(&PolyRing { nvars: 2 }, &[Poly::one(2), &z + &Poly::one(2)]);
        assert_eq!(sub.format(&["Y", "Z"]), "Z^2 + 2*Z");
    }
}

//! Arithmetic in the Green ring `r(H)`.
//!
//! Elements are sparse integer combinations of [`IndecLabel`]s. Products of
//! basis labels follow the Clebsch–Gordan rules for `M ⊗ M`, `M ⊗ P` and
//! `P ⊗ P`; they are tabulated once when the ring is built.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::catalog::{Catalog, IndecLabel};
use crate::datum::{CharacterIndex, Datum};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, Lattice};
use crate::ring::CommutativeRing;

/// Sparse integer combination of basis labels. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    coeffs: BTreeMap<IndecLabel, BigInt>,
}

impl RingElement {
    pub fn zero() -> RingElement {
        RingElement::default()
    }

    pub fn term(label: IndecLabel, coeff: impl Into<BigInt>) -> RingElement {
        let mut e = RingElement::zero();
        e.add_term(label, coeff.into());
        e
    }

    pub fn from_terms<I, C>(terms: I) -> RingElement
    where
        I: IntoIterator<Item = (IndecLabel, C)>,
        C: Into<BigInt>,
    {
        let mut e = RingElement::zero();
        for (l, c) in terms {
            e.add_term(l, c.into());
        }
        e
    }

    pub fn add_term(&mut self, label: IndecLabel, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(label).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn coeff(&self, label: &IndecLabel) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndecLabel, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scaled(&self, k: &BigInt) -> RingElement {
        if k.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            coeffs: self.coeffs.iter().map(|(l, c)| (*l, c * k)).collect(),
        }
    }

    /// Keeps only the terms whose label satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&IndecLabel) -> bool) -> RingElement {
        RingElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (*l, c.clone()))
                .collect(),
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        for (l, c) in &rhs.coeffs {
            self.add_term(*l, c.clone());
        }
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(mut self, rhs: RingElement) -> RingElement {
        self += &rhs;
        self
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            coeffs: self.coeffs.iter().map(|(l, c)| (*l, -c)).collect(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

impl Mul<&RingElement> for i64 {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        rhs.scaled(&BigInt::from(self))
    }
}

/// Sparse basis product: `(basis position, multiplicity)`.
type Product = Vec<(usize, u32)>;

/// The Green ring of the datum, with its tabulated structure constants.
#[derive(Debug, Clone)]
pub struct GreenRing {
    catalog: Catalog,
    table: Vec<Vec<Product>>,
}

impl GreenRing {
    pub fn new(datum: Datum) -> GreenRing {
        GreenRing::from_catalog(Catalog::new(Arc::new(datum)))
    }

    pub fn from_catalog(catalog: Catalog) -> GreenRing {
        let basis = catalog.basis();
        let table = basis
            .par_iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        clebsch_gordan(catalog.datum(), a, b)
                            .into_iter()
                            .map(|(l, c)| {
                                (catalog.position(&l).expect("product label in basis"), c)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        GreenRing { catalog, table }
    }

    pub fn datum(&self) -> &Datum {
        self.catalog.datum()
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn basis(&self) -> &[IndecLabel] {
        self.catalog.basis()
    }

    pub fn rank(&self) -> usize {
        self.catalog.len()
    }

    pub fn unit(&self) -> RingElement {
        RingElement::term(self.catalog.unit(), 1)
    }

    /// `a = [V_{χ^{-1}}]`.
    pub fn a(&self) -> RingElement {
        RingElement::term(self.catalog.a(), 1)
    }

    pub fn label(&self, label: IndecLabel) -> RingElement {
        RingElement::term(label, 1)
    }

    /// `M[k,i]` as a ring element.
    pub fn m(&self, k: u32, i: CharacterIndex) -> Result<RingElement> {
        Ok(self.label(self.catalog.m(k, i)?))
    }

    pub fn p(&self, j: CharacterIndex) -> Result<RingElement> {
        Ok(self.label(self.catalog.p(j)?))
    }

    /// Structure constants of a basis product, as a ring element.
    pub fn basis_product(&self, i: usize, j: usize) -> RingElement {
        RingElement::from_terms(
            self.table[i][j]
                .iter()
                .map(|&(p, c)| (self.basis()[p], BigInt::from(c))),
        )
    }

    pub fn check(&self, x: &RingElement) -> Result<()> {
        for (l, _) in x.terms() {
            self.catalog.require(l)?;
        }
        Ok(())
    }

    pub fn multiply(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        let xs: Vec<(usize, &BigInt)> = x
            .terms()
            .map(|(l, c)| Ok((self.catalog.require(l)?, c)))
            .collect::<Result<_>>()?;
        let ys: Vec<(usize, &BigInt)> = y
            .terms()
            .map(|(l, c)| Ok((self.catalog.require(l)?, c)))
            .collect::<Result<_>>()?;
        let mut acc = vec![BigInt::zero(); self.rank()];
        for &(i, ci) in &xs {
            for &(j, cj) in &ys {
                let cij = ci * cj;
                for &(p, mult) in &self.table[i][j] {
                    acc[p] += &cij * mult;
                }
            }
        }
        Ok(self.from_coordinates(&acc))
    }

    /// Coefficient-preserving relabeling by the duality on labels.
    pub fn dualize(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        Ok(RingElement::from_terms(
            x.terms()
                .map(|(l, c)| (self.catalog.dual_label(l), c.clone())),
        ))
    }

    /// `δ_{[k]} = 1 + a − M[2,0]`.
    pub fn delta_unit(&self) -> RingElement {
        let m2 = RingElement::term(IndecLabel::m(2, CharacterIndex::TRIVIAL), 1);
        &(&self.unit() + &self.a()) - &m2
    }

    /// The δ-element attached to a basis label.
    pub fn delta(&self, label: &IndecLabel) -> Result<RingElement> {
        self.catalog.require(label)?;
        let n = self.datum().n();
        Ok(match *label {
            IndecLabel::M { length, .. } if length < n => {
                self.multiply(&self.delta_unit(), &self.label(*label))?
            }
            IndecLabel::M { top, length } => {
                // rad M(n,i) ≅ M(n−1, τ(i))
                let rad = IndecLabel::m(length - 1, self.datum().tau(top));
                &self.label(*label) - &self.label(rad)
            }
            IndecLabel::P { .. } => self.label(*label),
        })
    }

    /// `f(x)`: the number of trivial tops, `f(M[k,i]) = [i = 0]`, `f(P) = 0`.
    pub fn trivial_top_functional(&self, x: &RingElement) -> BigInt {
        x.terms()
            .filter(
                |(l, _)| matches!(l, IndecLabel::M { top, .. } if *top == CharacterIndex::TRIVIAL),
            )
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// `(x, y) = dim Hom_H(X, Y*)`, evaluated as `f(xy)`.
    pub fn bilinear_form(&self, x: &RingElement, y: &RingElement) -> Result<BigInt> {
        Ok(self.trivial_top_functional(&self.multiply(x, y)?))
    }

    /// Dimension augmentation.
    pub fn dimension(&self, x: &RingElement) -> BigInt {
        x.terms().map(|(l, c)| c * self.catalog.dimension(l)).sum()
    }

    pub fn coordinates(&self, x: &RingElement) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.rank()];
        for (l, c) in x.terms() {
            v[self.catalog.require(l)?] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coordinates(&self, v: &[BigInt]) -> RingElement {
        RingElement::from_terms(self.basis().iter().zip(v).map(|(l, c)| (*l, c.clone())))
    }

    pub fn is_projective_element(&self, x: &RingElement) -> bool {
        x.terms().all(|(l, _)| self.catalog.is_projective(l))
    }

    pub fn projective_basis(&self) -> Vec<IndecLabel> {
        self.basis()
            .iter()
            .copied()
            .filter(|l| self.catalog.is_projective(l))
            .collect()
    }

    pub fn format(&self, x: &RingElement) -> String {
        format_terms(x.terms().map(|(l, c)| (self.catalog.format(l), c.clone())))
    }

    /// Parses `2*P[1] + M(2,0) - M(1,2)`; `0` and `1` are accepted.
    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (sign, term) in split_signed_terms(text)? {
            let (coeff, body) = match term.split_once('*') {
                Some((c, b)) => (
                    c.trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?,
                    b.trim(),
                ),
                None => (BigInt::one(), term.trim()),
            };
            let element = match body.parse::<BigInt>() {
                Ok(k) => self.unit().scaled(&k),
                Err(_) => self.label(self.catalog.parse_label(body)?),
            };
            out += &element.scaled(&(coeff * sign));
        }
        Ok(out)
    }

    /// Full multiplication table in basis order: `(a, b, a·b)`.
    pub fn multiplication_table(&self) -> Vec<(IndecLabel, IndecLabel, RingElement)> {
        let n = self.rank();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.basis()[i], self.basis()[j], self.basis_product(i, j)))
            .collect()
    }
}

impl CommutativeRing for GreenRing {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        RingElement::zero()
    }

    fn one(&self) -> RingElement {
        self.unit()
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a + b
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.multiply(a, b).expect("elements of this ring")
    }

    fn scale(&self, a: &RingElement, k: &BigInt) -> RingElement {
        a.scaled(k)
    }
}

/// Decomposition of a basis product as `(label, multiplicity)` pairs.
///
/// `V_i ⊗ V_j` is the single character `s = i·j` because `G` is abelian.
pub fn clebsch_gordan(d: &Datum, a: &IndecLabel, b: &IndecLabel) -> Vec<(IndecLabel, u32)> {
    let n = d.n();
    let mut out: BTreeMap<IndecLabel, u32> = BTreeMap::new();
    let mut push = |l: IndecLabel, c: u32| *out.entry(l).or_insert(0) += c;
    match (*a, *b) {
        (IndecLabel::M { top: i, length: k }, IndecLabel::M { top: j, length: l }) => {
            let s = d.character_product(i, j);
            let min = k.min(l);
            let top = k + l - 1;
            let string = |t: u32| IndecLabel::m(top - 2 * t, d.tau_pow(s, t as i64));
            if top <= n {
                (0..min).for_each(|t| push(string(t), 1));
            } else {
                let overflow = top - n;
                for t in 0..=overflow {
                    push(IndecLabel::m(n, d.tau_pow(s, t as i64)), 1);
                }
                (overflow + 1..min).for_each(|t| push(string(t), 1));
            }
        }
        (IndecLabel::M { top: i, length: k }, IndecLabel::P { orbit: j })
        | (IndecLabel::P { orbit: j }, IndecLabel::M { top: i, length: k }) => {
            let s = d.character_product(i, j);
            push(
                IndecLabel::P {
                    orbit: d.orbit_rep(s),
                },
                k,
            );
        }
        (IndecLabel::P { orbit: i }, IndecLabel::P { orbit: j }) => {
            let s = d.character_product(i, j);
            if d.in_omega0(s) {
                for t in 0..n {
                    push(IndecLabel::m(n, d.tau_pow(s, t as i64)), 1);
                }
            } else {
                push(
                    IndecLabel::P {
                        orbit: d.orbit_rep(s),
                    },
                    n,
                );
            }
        }
    }
    out.into_iter().collect()
}

/// `r(H̄) ⊕ 𝒫` with `(b₁,c₁)(b₂,c₂) = (b₁b₂, b₁c₂ + c₁b₂ + c₁c₂)`, and the
/// submodule `𝓘` spanned by `(−M[n,i], M[n,i])`.
#[derive(Debug, Clone)]
pub struct TrivialExtension<'a> {
    ring: &'a GreenRing,
    /// Labels of `r(H̄)`: every `M(k,i)`.
    quotient_basis: Vec<IndecLabel>,
    /// Labels of `𝒫`: `M(n,i)` and `P[j]`.
    projective_basis: Vec<IndecLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TrivialExtensionReport {
    pub extension_rank: usize,
    pub ideal_rank: usize,
    pub green_ring_rank: usize,
    pub multiplicative: bool,
    pub kernel_equals_ideal: bool,
    pub ideal_is_ideal: bool,
}

impl<'a> TrivialExtension<'a> {
    pub fn new(ring: &'a GreenRing) -> TrivialExtension<'a> {
        let quotient_basis = ring
            .basis()
            .iter()
            .copied()
            .filter(IndecLabel::is_m)
            .collect();
        let projective_basis = ring.projective_basis();
        TrivialExtension {
            ring,
            quotient_basis,
            projective_basis,
        }
    }

    pub fn rank(&self) -> usize {
        self.quotient_basis.len() + self.projective_basis.len()
    }

    fn multiply(
        &self,
        x: &(RingElement, RingElement),
        y: &(RingElement, RingElement),
    ) -> (RingElement, RingElement) {
        let r = self.ring;
        let b = r.mul(&x.0, &y.0);
        let c = &(&r.mul(&x.0, &y.1) + &r.mul(&x.1, &y.0)) + &r.mul(&x.1, &y.1);
        (b, c)
    }

    fn basis_pair(&self, p: usize) -> (RingElement, RingElement) {
        let q = self.quotient_basis.len();
        if p < q {
            (self.ring.label(self.quotient_basis[p]), RingElement::zero())
        } else {
            (
                RingElement::zero(),
                self.ring.label(self.projective_basis[p - q]),
            )
        }
    }

    fn coordinates(&self, x: &(RingElement, RingElement)) -> Vec<BigInt> {
        self.quotient_basis
            .iter()
            .map(|l| x.0.coeff(l))
            .chain(self.projective_basis.iter().map(|l| x.1.coeff(l)))
            .collect()
    }

    fn ideal(&self) -> Lattice {
        let n = self.ring.datum().n();
        let gens = self
            .ring
            .datum()
            .omega0()
            .iter()
            .map(|&i| {
                let m = self.ring.label(IndecLabel::m(n, i));
                self.coordinates(&(-&m, m))
            })
            .collect();
        Lattice::from_generators(self.rank(), gens)
    }

    /// Checks that `(b,c) ↦ b + c` is a ring epimorphism with kernel `𝓘`.
    pub fn verify(&self) -> TrivialExtensionReport {
        let r = self.ring;
        let size = self.rank();
        let to_ring = |x: &(RingElement, RingElement)| &x.0 + &x.1;
        let multiplicative = (0..size).all(|p| {
            (0..size).all(|q| {
                let (x, y) = (self.basis_pair(p), self.basis_pair(q));
                to_ring(&self.multiply(&x, &y)) == r.mul(&to_ring(&x), &to_ring(&y))
            })
        });
        let map = IntMatrix::from_columns(
            r.rank(),
            (0..size)
                .map(|p| r.coordinates(&to_ring(&self.basis_pair(p))).expect("basis"))
                .collect(),
        );
        let kernel = Lattice::kernel_of(&map);
        let ideal = self.ideal();
        let ideal_is_ideal = ideal.basis().iter().all(|v| {
            let q = self.quotient_basis.len();
            let x = (
                RingElement::from_terms(
                    self.quotient_basis
                        .iter()
                        .zip(&v[..q])
                        .map(|(l, c)| (*l, c.clone())),
                ),
                RingElement::from_terms(
                    self.projective_basis
                        .iter()
                        .zip(&v[q..])
                        .map(|(l, c)| (*l, c.clone())),
                ),
            );
            (0..size)
                .all(|p| ideal.contains(&self.coordinates(&self.multiply(&x, &self.basis_pair(p)))))
        });
        TrivialExtensionReport {
            extension_rank: size,
            ideal_rank: ideal.rank(),
            green_ring_rank: r.rank(),
            multiplicative,
            kernel_equals_ideal: kernel == ideal,
            ideal_is_ideal,
        }
    }
}

pub(crate) fn format_terms(terms: impl Iterator<Item = (String, BigInt)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let mag = c.abs();
        let body = if mag.is_one() {
            name
        } else {
            format!("{mag}*{name}")
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits `a + b - c` into signed terms, ignoring signs nested in brackets.
pub(crate) fn split_signed_terms(text: &str) -> Result<Vec<(BigInt, String)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut sign = BigInt::one();
    let mut leading_sign = false;
    let mut current = String::new();
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' | '[' => {
                depth += 1;
                current.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.is_empty() {
                    if !terms.is_empty() || leading_sign {
                        return Err(Error::Parse(format!("dangling sign in {text:?}")));
                    }
                    leading_sign = true;
                } else {
                    terms.push((sign.clone(), std::mem::take(&mut current)));
                }
                sign = if ch == '-' {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
            }
            c => current.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("empty term in {text:?}")));
    }
    terms.push((sign, current));
    Ok(terms)
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_terms(
            self.coeffs
                .iter()
                .map(|(l, c)| (format!("{l:?}"), c.clone())),
        );
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: u32, n: u32) -> GreenRing {
        GreenRing::new(Datum::radford(m, n).unwrap())
    }

    fn el(r: &GreenRing, s: &str) -> RingElement {
        r.parse_element(s).unwrap()
    }

    #[test]
    fn radford_products() {
        let r = ring(2, 2);
        let prod = |a: &str, b: &str| r.format(&r.multiply(&el(&r, a), &el(&r, b)).unwrap());
        assert_eq!(prod("M(2,0)", "P[1]"), "2*P[1]");
        assert_eq!(prod("P[1]", "P[1]"), "M(2,0) + M(2,2)");
        assert_eq!(prod("M(2,0)", "M(2,0)"), "M(2,0) + M(2,2)");
        let r = ring(3, 2);
        assert_eq!(
            r.format(&r.multiply(&el(&r, "P[1]"), &el(&r, "P[1]")).unwrap()),
            "2*P[2]"
        );
    }

    #[test]
    fn unit_law() {
        let r = ring(3, 3);
        for l in r.basis() {
            assert_eq!(r.multiply(&r.unit(), &r.label(*l)).unwrap(), r.label(*l));
        }
    }

    #[test]
    fn dualize_examples() {
        let r = ring(2, 2);
        assert_eq!(r.dualize(&r.unit()).unwrap(), r.unit());
        // a = M(1,2) is self-dual in Z/4
        assert_eq!(r.dualize(&r.a()).unwrap(), r.a());
        let x = el(&r, "3*M(2,0) - P[1] + 2*M(1,2)");
        assert_eq!(r.dualize(&r.dualize(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn delta_examples() {
        let r = ring(2, 2);
        let unit = r.catalog().unit();
        assert_eq!(r.delta(&unit).unwrap(), el(&r, "1 + M(1,2) - M(2,0)"));
        assert_eq!(
            r.delta(&r.catalog().parse_label("P[1]").unwrap()).unwrap(),
            el(&r, "P[1]")
        );
        assert_eq!(
            r.delta(&r.catalog().parse_label("M(2,0)").unwrap())
                .unwrap(),
            el(&r, "M(2,0) - M(1,2)")
        );
    }

    #[test]
    fn bilinear_form_examples() {
        let r = ring(2, 2);
        assert_eq!(
            r.bilinear_form(&r.unit(), &r.unit()).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            r.bilinear_form(&el(&r, "M(2,0)"), &el(&r, "P[1]")).unwrap(),
            BigInt::zero()
        );
        let m20 = r.catalog().parse_label("M(2,0)").unwrap();
        let dual_delta = r.dualize(&r.delta(&m20).unwrap()).unwrap();
        for l in r.basis() {
            let expected = if *l == m20 { 1 } else { 0 };
            assert_eq!(
                r.bilinear_form(&dual_delta, &r.label(*l)).unwrap(),
                BigInt::from(expected)
            );
        }
    }

    #[test]
    fn datum_mismatch() {
        let r = ring(2, 2);
        let foreign = RingElement::term(IndecLabel::m(3, CharacterIndex::TRIVIAL), 1);
        assert!(matches!(
            r.multiply(&foreign, &r.unit()),
            Err(Error::DatumMismatch(_))
        ));
        assert!(matches!(
            r.bilinear_form(&r.unit(), &foreign),
            Err(Error::DatumMismatch(_))
        ));
    }

    #[test]
    fn a_has_order_n() {
        for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
            let r = ring(m, n);
            assert_eq!(r.pow(&r.a(), n), r.unit());
            for k in 1..n {
                assert_ne!(r.pow(&r.a(), k), r.unit());
            }
        }
    }

    #[test]
    fn delta_annihilates_projectives() {
        let r = ring(3, 3);
        let du = r.delta_unit();
        for l in r.projective_basis() {
            assert!(r.multiply(&du, &r.label(l)).unwrap().is_zero(), "{l:?}");
        }
    }

    #[test]
    fn dual_of_delta_unit_is_a_inverse_times_delta_unit() {
        for (m, n) in [(2, 3), (3, 3), (2, 4)] {
            let r = ring(m, n);
            let a_inv = r.pow(&r.a(), n - 1);
            assert_eq!(
                r.dualize(&r.delta_unit()).unwrap(),
                r.mul(&a_inv, &r.delta_unit())
            );
        }
    }

    #[test]
    fn trivial_extension() {
        for (m, n) in [(2, 2), (3, 3)] {
            let r = ring(m, n);
            let rep = TrivialExtension::new(&r).verify();
            let d = r.datum();
            assert!(rep.multiplicative && rep.kernel_equals_ideal && rep.ideal_is_ideal);
            assert_eq!(rep.ideal_rank, d.omega0().len());
            assert_eq!(rep.extension_rank - rep.ideal_rank, rep.green_ring_rank);
            assert_eq!(
                rep.green_ring_rank,
                d.n() as usize * d.omega0().len() + d.orbit_table().orbits1.len()
            );
        }
    }

    #[test]
    fn element_formatting_and_parsing() {
        let r = ring(2, 2);
        let x = el(&r, "-M(2,0) + 2*P[1] - 3");
        assert_eq!(r.format(&x), "-3*M(1,0) - M(2,0) + 2*P[1]");
        assert_eq!(r.format(&RingElement::zero()), "0");
        assert!(r.parse_element("M(2,0) +").is_err());
        assert!(r.parse_element("M(2,0").is_err());
    }
}

//! The stable Green ring `r(H)/𝒫`: fusion ring axioms, Dickson polynomials and
//! Frobenius–Perron dimensions computed both as Perron eigenvalues and in closed form.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::IndecLabel;
use crate::datum::CharacterIndex;
use crate::error::{Error, Result};
use crate::green_ring::{GreenRing, RingElement};
use crate::lattice::IntMatrix;
use crate::poly::Poly;
use crate::ring::{CommutativeRing, Reals};

/// An element of the stable ring, supported on non-projective labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StableElement(RingElement);

impl StableElement {
    pub fn lift(&self) -> &RingElement {
        &self.0
    }

    pub fn coeff(&self, label: &IndecLabel) -> BigInt {
        self.0.coeff(label)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

pub struct StableRing<'a> {
    ring: &'a GreenRing,
    basis: Vec<IndecLabel>,
    position: HashMap<IndecLabel, usize>,
}

impl<'a> StableRing<'a> {
    pub fn new(ring: &'a GreenRing) -> StableRing<'a> {
        let c = ring.catalog();
        let basis: Vec<IndecLabel> = ring
            .basis()
            .iter()
            .copied()
            .filter(|l| !c.is_projective(l))
            .collect();
        let position = basis.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        StableRing {
            ring,
            basis,
            position,
        }
    }

    pub fn green_ring(&self) -> &GreenRing {
        self.ring
    }

    /// `M[j,i]` with `j ≤ n−1`, in Green ring basis order.
    pub fn basis(&self) -> &[IndecLabel] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, label: &IndecLabel) -> Option<usize> {
        self.position.get(label).copied()
    }

    pub fn unit(&self) -> StableElement {
        StableElement(self.ring.unit())
    }

    pub fn element(&self, label: IndecLabel) -> Result<StableElement> {
        self.position(&label).ok_or_else(|| {
            Error::DatumMismatch(format!("{label:?} is not a stable basis label"))
        })?;
        Ok(StableElement(self.ring.label(label)))
    }

    /// Drops every projective coefficient.
    pub fn project(&self, x: &RingElement) -> StableElement {
        let c = self.ring.catalog();
        StableElement(x.filtered(|l| !c.is_projective(l)))
    }

    pub fn multiply(&self, x: &StableElement, y: &StableElement) -> Result<StableElement> {
        Ok(self.project(&self.ring.multiply(&x.0, &y.0)?))
    }

    /// `N_b`: column `j` holds the coordinates of `b·b_j`.
    pub fn left_multiplication(&self, b: &IndecLabel) -> Result<IntMatrix> {
        let bx = self.element(*b)?;
        let cols = self
            .basis
            .iter()
            .map(|l| {
                let prod = self.multiply(&bx, &StableElement(self.ring.label(*l)))?;
                Ok(self.basis.iter().map(|k| prod.coeff(k)).collect())
            })
            .collect::<Result<Vec<Vec<BigInt>>>>()?;
        Ok(IntMatrix::from_columns(self.rank(), cols))
    }

    /// `ψ(x̄) = (δ*_{[k]}, x)`.
    pub fn psi(&self, x: &RingElement) -> Result<BigInt> {
        let dual_delta = self.ring.dualize(&self.ring.delta_unit())?;
        self.ring.bilinear_form(&dual_delta, x)
    }

    pub fn format(&self, x: &StableElement) -> String {
        self.ring.format(&x.0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FusionReport {
    pub stable_rank: usize,
    pub nonnegative: bool,
    pub unit_is_basis: bool,
    pub psi_well_defined: bool,
    pub psi_dual_pairing: bool,
    pub involution: bool,
    pub transitive: bool,
    pub violations: Vec<String>,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the based ring axioms and transitivity on the full stable table.
pub fn fusion_axioms_check(ring: &GreenRing) -> Result<FusionReport> {
    let st = StableRing::new(ring);
    let c = ring.catalog();
    let basis = st.basis().to_vec();
    let name = |l: &IndecLabel| c.format(l);
    let mut violations = Vec::new();

    let products: Vec<Vec<StableElement>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    st.multiply(
                        &StableElement(ring.label(*a)),
                        &StableElement(ring.label(*b)),
                    )
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut nonnegative = true;
    for (i, row) in products.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            if !p.0.has_nonnegative_coefficients() {
                nonnegative = false;
                violations.push(format!(
                    "nonnegativity: {} * {} = {}",
                    name(&basis[i]),
                    name(&basis[j]),
                    st.format(p)
                ));
            }
        }
    }

    let unit_is_basis = st.position(&c.unit()).is_some();
    if !unit_is_basis {
        violations.push("unit: M(1,0) is not a stable basis label".into());
    }

    let mut psi_well_defined = true;
    for p in ring.projective_basis() {
        let v = st.psi(&ring.label(p))?;
        if !v.is_zero() {
            psi_well_defined = false;
            violations.push(format!("psi: psi({}) = {v} on a projective", name(&p)));
        }
    }

    let mut psi_dual_pairing = true;
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let expected = BigInt::from((c.dual_label(a) == *b) as i32);
            let got = st.psi(&products[i][j].0)?;
            if got != expected {
                psi_dual_pairing = false;
                violations.push(format!(
                    "psi: psi({} * {}) = {got}, expected {expected}",
                    name(a),
                    name(b)
                ));
            }
        }
    }

    let mut involution = true;
    for (i, a) in basis.iter().enumerate() {
        let dual = c.dual_label(a);
        if st.position(&dual).is_none() || c.dual_label(&dual) != *a {
            involution = false;
            violations.push(format!("involution: {} has no stable dual", name(a)));
            continue;
        }
        for (j, b) in basis.iter().enumerate() {
            let lhs = st.project(&ring.dualize(&products[i][j].0)?);
            let rhs = st.multiply(
                &StableElement(ring.label(dual)),
                &StableElement(ring.label(c.dual_label(b))),
            )?;
            if lhs != rhs {
                involution = false;
                violations.push(format!("involution: ({} * {})* differs", name(a), name(b)));
            }
        }
    }

    let mut transitive = true;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis {
            let left = products[i].iter().any(|p| !p.coeff(b).is_zero());
            let right = (0..basis.len()).any(|k| !products[k][i].coeff(b).is_zero());
            if !(left && right) {
                transitive = false;
                violations.push(format!(
                    "transitivity: no label k with {} in {} * k",
                    name(b),
                    name(a)
                ));
            }
        }
    }

    Ok(FusionReport {
        stable_rank: st.rank(),
        nonnegative,
        unit_is_basis,
        psi_well_defined,
        psi_dual_pairing,
        involution,
        transitive,
        violations,
    })
}

/// `F_j(Y, Z)` with `F_1 = 1`, `F_2 = Z`, `F_j = Z F_{j−1} − Y F_{j−2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonPoly {
    pub j: u32,
    pub poly: Poly,
}

impl DicksonPoly {
    pub fn eval<R: CommutativeRing>(&self, ring: &R, y: &R::Elem, z: &R::Elem) -> R::Elem {
        self.poly.eval(ring, &[y.clone(), z.clone()])
    }

    pub fn format(&self) -> String {
        self.poly.format(&["Y", "Z"])
    }
}

pub fn dickson(j: i64) -> Result<DicksonPoly> {
    if j < 1 {
        return Err(Error::NonPositiveIndex(j));
    }
    let (y, z) = (Poly::var(2, 0), Poly::var(2, 1));
    let (mut prev, mut cur) = (Poly::zero(2), Poly::one(2));
    // F_0 = 0 makes F_2 = Z·F_1 − Y·F_0 come out of the same recursion.
    for _ in 1..j {
        let next = &(&z * &cur) - &(&y * &prev);
        prev = cur;
        cur = next;
    }
    Ok(DicksonPoly {
        j: j as u32,
        poly: cur,
    })
}

/// `F_j(a, M[2,0])`, evaluated in the Green ring.
pub fn dickson_in_green_ring(ring: &GreenRing, j: u32) -> Result<RingElement> {
    let m2 = ring.m(2, CharacterIndex::TRIVIAL)?;
    Ok(dickson(j as i64)?.eval(ring, &ring.a(), &m2))
}

/// `F_j(a, M[2,0]) = M[j,0]` for every `1 ≤ j ≤ n`.
pub fn dickson_identity_holds(ring: &GreenRing) -> Result<bool> {
    for j in 1..=ring.datum().n() {
        if dickson_in_green_ring(ring, j)? != ring.m(j, CharacterIndex::TRIVIAL)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F_j(1, 2cos(π/n))` for `1 ≤ j ≤ n−1`.
pub fn fpdim_closed(n: u32, j: u32) -> Result<f64> {
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: n - 1,
        });
    }
    Ok(dickson(j as i64)?.eval(&Reals, &1.0, &(2.0 * (PI / n as f64).cos())))
}

const POWER_ITERATION_TOLERANCE: f64 = 1e-13;
const POWER_ITERATION_LIMIT: usize = 200_000;

/// Perron eigenvalue of a non-negative integer matrix by power iteration on
/// `N + I` from the all-ones vector. Returns the eigenvalue and eigenvector.
pub fn perron_eigen(m: &IntMatrix) -> Result<(f64, Vec<f64>)> {
    let size = m.nrows();
    if size == 0 {
        return Err(Error::EmptyStableBasis);
    }
    let a: Vec<Vec<f64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| m.get(i, j).to_f64().unwrap_or(f64::NAN) + (i == j) as u8 as f64)
                .collect()
        })
        .collect();
    let apply = |v: &[f64]| -> Vec<f64> {
        a.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    };
    let mut v = vec![1.0; size];
    let mut lambda = 0.0;
    for _ in 0..POWER_ITERATION_LIMIT {
        let w = apply(&v);
        let norm = w.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        let next: Vec<f64> = w.iter().map(|x| x / norm).collect();
        lambda = norm;
        let residual = apply(&next)
            .iter()
            .zip(&next)
            .fold(0.0f64, |acc, (x, y)| acc.max((x - lambda * y).abs()));
        v = next;
        if residual <= POWER_ITERATION_TOLERANCE * lambda.max(1.0) {
            break;
        }
    }
    Ok((lambda - 1.0, v))
}

pub fn fpdim_eigen(st: &StableRing<'_>, b: &IndecLabel) -> Result<f64> {
    if st.rank() == 0 {
        return Err(Error::EmptyStableBasis);
    }
    Ok(perron_eigen(&st.left_multiplication(b)?)?.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct FpdimRow {
    pub label: String,
    pub eigenvalue: f64,
    pub closed_form: f64,
    pub difference: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FpdimReport {
    pub tolerance: f64,
    pub rows: Vec<FpdimRow>,
    pub max_difference: f64,
    pub max_residual: f64,
    pub duals_agree: bool,
    pub simple_dimensions_are_one: bool,
    pub at_least_one: bool,
}

impl FpdimReport {
    pub fn passed(&self) -> bool {
        self.max_difference <= self.tolerance
            && self.max_residual <= self.tolerance
            && self.duals_agree
            && self.simple_dimensions_are_one
            && self.at_least_one
    }
}

/// Both FPdim routes for every stable label, with the residual
/// `‖N_b·v − FPdim(b)·v‖∞` of the closed-form dimension vector `v`.
pub fn fpdim_report(ring: &GreenRing, tolerance: f64) -> Result<FpdimReport> {
    let st = StableRing::new(ring);
    if st.rank() == 0 {
        return Err(Error::EmptyStableBasis);
    }
    let n = ring.datum().n();
    let length = |l: &IndecLabel| match l {
        IndecLabel::M { length, .. } => *length,
        IndecLabel::P { .. } => unreachable!("stable labels are non-projective"),
    };
    let closed: Vec<f64> = st
        .basis()
        .iter()
        .map(|l| fpdim_closed(n, length(l)))
        .collect::<Result<_>>()?;
    let rows = st
        .basis()
        .par_iter()
        .enumerate()
        .map(|(p, l)| {
            let nb = st.left_multiplication(l)?;
            let (eigenvalue, _) = perron_eigen(&nb)?;
            let residual = (0..st.rank())
                .map(|i| {
                    let nv: f64 = (0..st.rank())
                        .map(|j| nb.get(i, j).to_f64().unwrap_or(f64::NAN) * closed[j])
                        .sum();
                    (nv - closed[p] * closed[i]).abs()
                })
                .fold(0.0f64, f64::max);
            Ok(FpdimRow {
                label: ring.catalog().format(l),
                eigenvalue,
                closed_form: closed[p],
                difference: (eigenvalue - closed[p]).abs(),
                residual,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let c = ring.catalog();
    let duals_agree = st.basis().iter().enumerate().all(|(p, l)| {
        st.position(&c.dual_label(l))
            .is_some_and(|q| (rows[p].eigenvalue - rows[q].eigenvalue).abs() <= tolerance)
    });
    let simple_dimensions_are_one = st
        .basis()
        .iter()
        .zip(&rows)
        .filter(|(l, _)| length(l) == 1)
        .all(|(_, r)| (r.eigenvalue - 1.0).abs() <= tolerance);
    let at_least_one = rows.iter().all(|r| r.eigenvalue >= 1.0 - tolerance);
    Ok(FpdimReport {
        tolerance,
        max_difference: rows.iter().map(|r| r.difference).fold(0.0, f64::max),
        max_residual: rows.iter().map(|r| r.residual).fold(0.0, f64::max),
        rows,
        duals_agree,
        simple_dimensions_are_one,
        at_least_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::Datum;

    fn ring(m: u32, n: u32) -> GreenRing {
        GreenRing::new(Datum::radford(m, n).unwrap())
    }

    #[test]
    fn projection() {
        let r = ring(2, 2);
        let st = StableRing::new(&r);
        assert!(st
            .project(&r.m(2, CharacterIndex::TRIVIAL).unwrap())
            .is_zero());
        assert!(st.project(&r.p(CharacterIndex(1)).unwrap()).is_zero());
        assert_eq!(st.project(&r.unit()), st.unit());
        assert_eq!(st.rank(), 2);
    }

    #[test]
    fn stable_square_radford_2_3() {
        let r = ring(2, 3);
        let st = StableRing::new(&r);
        let m2 = st
            .element(IndecLabel::m(2, CharacterIndex::TRIVIAL))
            .unwrap();
        assert_eq!(st.format(&st.multiply(&m2, &m2).unwrap()), "M(1,2)");
    }

    #[test]
    fn dickson_polynomials() {
        let f: Vec<String> = (1..=4).map(|j| dickson(j).unwrap().format()).collect();
        assert_eq!(f, ["1", "Z", "Z^2 - Y", "Z^3 - 2*Y*Z"]);
        assert_eq!(dickson(0), Err(Error::NonPositiveIndex(0)));
        for j in 1..8 {
            assert_eq!(dickson(j).unwrap().poly.degree_in(1), Some(j as u32 - 1));
        }
    }

    #[test]
    fn dickson_identity() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
            assert!(dickson_identity_holds(&ring(m, n)).unwrap());
        }
    }

    #[test]
    fn closed_forms() {
        assert!((fpdim_closed(3, 2).unwrap() - 1.0).abs() < 1e-12);
        assert!((fpdim_closed(4, 3).unwrap() - 1.0).abs() < 1e-12);
        assert!((fpdim_closed(4, 2).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(
            fpdim_closed(4, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn eigen_route() {
        let r = ring(2, 4);
        let st = StableRing::new(&r);
        let unit = fpdim_eigen(&st, &r.catalog().unit()).unwrap();
        assert!((unit - 1.0).abs() < 1e-12);
        let m2 = fpdim_eigen(&st, &IndecLabel::m(2, CharacterIndex::TRIVIAL)).unwrap();
        assert!((m2 - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn fusion_and_fpdim_reports() {
        for (m, n) in [(2, 2), (3, 3), (2, 4)] {
            let r = ring(m, n);
            let f = fusion_axioms_check(&r).unwrap();
            assert!(f.passed(), "{:?}", f.violations);
            let p = fpdim_report(&r, 1e-9).unwrap();
            assert!(p.passed(), "{p:?}");
        }
    }
}

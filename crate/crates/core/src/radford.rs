//! The Radford family: `G = ℤ/(mn)`, `χ(g) = ω^{−m}`. Presentations of the Green
//! ring as `ℤ[Y,Z,X₁,…,X_{m−1}]/I` and of `G₀(H)` as `ℤ[Y,X₁,…,X_{m−1}]/I₀`, with
//! normal-form arithmetic checked against the ring computed from the catalog.

use num_bigint::BigInt;
use serde::Serialize;

use crate::datum::{CharacterIndex, Datum, GroupDatum};
use crate::error::Result;
use crate::green_ring::{GreenRing, RingElement};
use crate::grothendieck::{G0Element, GrothendieckRing};
use crate::lattice::Lattice;
use crate::poly::Poly;
use crate::ring::CommutativeRing;
use crate::stable::dickson;

pub fn build_radford_datum(m: u32, n: u32) -> Result<GroupDatum> {
    GroupDatum::radford(m, n)
}

/// Which ring the presentation describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    GreenRing,
    Grothendieck,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    target: Target,
    m: u32,
    n: u32,
}

/// Intermediate value while multiplying out the `X` part of a monomial.
enum Partial {
    Poly(Poly),
    X(BigInt, u32),
}

impl Presentation {
    pub fn green(m: u32, n: u32) -> Result<Presentation> {
        build_radford_datum(m, n)?;
        Ok(Presentation {
            target: Target::GreenRing,
            m,
            n,
        })
    }

    pub fn grothendieck(m: u32, n: u32) -> Result<Presentation> {
        build_radford_datum(m, n)?;
        Ok(Presentation {
            target: Target::Grothendieck,
            m,
            n,
        })
    }

    pub fn target(&self) -> Target {
        self.target
    }

    fn has_z(&self) -> bool {
        self.target == Target::GreenRing
    }

    fn x_offset(&self) -> usize {
        if self.has_z() {
            2
        } else {
            1
        }
    }

    pub fn nvars(&self) -> usize {
        self.x_offset() + self.m as usize - 1
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v = vec!["Y".to_string()];
        if self.has_z() {
            v.push("Z".into());
        }
        v.extend((1..self.m).map(|j| format!("X{j}")));
        v
    }

    pub fn y(&self) -> Poly {
        Poly::var(self.nvars(), 0)
    }

    /// Only defined for the Green ring presentation.
    pub fn z(&self) -> Poly {
        assert!(self.has_z(), "G0 presentation has no Z");
        Poly::var(self.nvars(), 1)
    }

    pub fn x(&self, j: u32) -> Poly {
        Poly::var(self.nvars(), self.x_offset() + j as usize - 1)
    }

    fn constant(&self, c: impl Into<BigInt>) -> Poly {
        Poly::constant(self.nvars(), c)
    }

    /// `F_n(Y, Z)` in this presentation's variables.
    pub fn dickson_n(&self) -> Poly {
        let f = dickson(self.n as i64).expect("n >= 2");
        f.poly.eval(
            &crate::poly::PolyRing {
                nvars: self.nvars(),
            },
            &[self.y(), self.z()],
        )
    }

    /// `1 + Y + ⋯ + Y^{n−1}`.
    pub fn y_orbit_sum(&self) -> Poly {
        (0..self.n).fold(Poly::zero(self.nvars()), |acc, t| &acc + &self.y().pow(t))
    }

    /// `X_i·X_j` with `i + j = m`, the image of `(1+a+⋯+a^{n−1})M[n,0]`
    /// (or its `G₀` counterpart).
    fn x_pair_to_orbit(&self) -> Poly {
        match self.target {
            Target::GreenRing => &self.y_orbit_sum() * &self.dickson_n(),
            Target::Grothendieck => self.y_orbit_sum().scaled(&BigInt::from(self.n)),
        }
    }

    /// The generators of `I` (or `I₀`).
    pub fn relations(&self) -> Vec<Poly> {
        let (m, n) = (self.m, self.n);
        let nb = BigInt::from(n);
        let one = self.constant(1);
        let x1 = self.x(1);
        let mut rels = vec![&self.y().pow(n) - &one];
        if self.has_z() {
            let lin = &(&one + &self.y()) - &self.z();
            rels.push(&lin * &self.dickson_n());
        }
        rels.push(&(&self.y() * &x1) - &x1);
        if self.has_z() {
            rels.push(&(&self.z() * &x1) - &x1.scaled(&BigInt::from(2)));
        }
        for j in 2..m {
            rels.push(&x1.pow(j) - &self.x(j).scaled(&nb.pow(j - 1)));
        }
        let top = match self.target {
            Target::GreenRing => (&self.y_orbit_sum() * &self.dickson_n()).scaled(&nb.pow(m - 2)),
            Target::Grothendieck => self.y_orbit_sum().scaled(&nb.pow(m - 1)),
        };
        rels.push(&x1.pow(m) - &top);
        rels
    }

    /// `{Y^i Z^k : 0 ≤ i,k ≤ n−1} ∪ {X_j}` (no `Z` for `G₀`).
    pub fn normal_form_basis(&self) -> Vec<Poly> {
        let z_range = if self.has_z() { self.n } else { 1 };
        let mut basis = Vec::new();
        for i in 0..self.n {
            for k in 0..z_range {
                let mut e = vec![0; self.nvars()];
                e[0] = i;
                if self.has_z() {
                    e[1] = k;
                }
                basis.push(Poly::monomial(e, 1));
            }
        }
        basis.extend((1..self.m).map(|j| self.x(j)));
        basis
    }

    pub fn rank(&self) -> usize {
        self.normal_form_basis().len()
    }

    /// Value of a `Y,Z` polynomial acting on some `X_j`: `Y ↦ 1`, `Z ↦ 2`.
    fn scalar_on_x(&self, p: &Poly) -> BigInt {
        p.terms()
            .map(|(e, c)| {
                if self.has_z() {
                    c * BigInt::from(2).pow(e[1])
                } else {
                    c.clone()
                }
            })
            .sum()
    }

    /// Reduces a polynomial without `X` variables: `Zⁿ` through
    /// `(1+Y−Z)F_n = 0`, then `Yⁿ → 1`.
    fn reduce_yz(&self, p: Poly) -> Poly {
        let n = self.n;
        let mut p = p;
        if self.has_z() {
            let correction = &self.z().pow(n)
                + &(&(&(&self.constant(1) + &self.y()) - &self.z()) * &self.dickson_n());
            debug_assert!(correction.degree_in(1).unwrap_or(0) < n);
            loop {
                let high: Vec<(Vec<u32>, BigInt)> = p
                    .terms()
                    .filter(|(e, _)| e[1] >= n)
                    .map(|(e, c)| (e.clone(), c.clone()))
                    .collect();
                if high.is_empty() {
                    break;
                }
                for (e, c) in high {
                    let mut rest = e.clone();
                    rest[1] -= n;
                    p.add_term(e, -c.clone());
                    p = &p + &(&Poly::monomial(rest, c) * &correction);
                }
            }
        }
        let mut out = Poly::zero(self.nvars());
        for (e, c) in p.terms() {
            let mut e = e.clone();
            e[0] %= n;
            out.add_term(e, c.clone());
        }
        out
    }

    fn step(&self, state: Partial, i: u32) -> Partial {
        let (m, nb) = (self.m, BigInt::from(self.n));
        match state {
            Partial::Poly(s) => Partial::X(self.scalar_on_x(&s), i),
            Partial::X(c, j) if i + j < m => Partial::X(c * nb, i + j),
            Partial::X(c, j) if i + j == m => Partial::Poly(self.x_pair_to_orbit().scaled(&c)),
            Partial::X(c, j) => Partial::X(c * nb, i + j - m),
        }
    }

    /// Canonical representative on the normal-form basis.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let off = self.x_offset();
        let mut out = Poly::zero(self.nvars());
        for (e, c) in p.terms() {
            let mut state = Partial::Poly(self.constant(c.clone()));
            for (k, &power) in e[off..].iter().enumerate() {
                for _ in 0..power {
                    state = self.step(state, k as u32 + 1);
                }
            }
            let mut yz = vec![0; self.nvars()];
            yz[..off].copy_from_slice(&e[..off]);
            let yz = Poly::monomial(yz, 1);
            let reduced = match state {
                Partial::Poly(s) => self.reduce_yz(&s * &yz),
                Partial::X(k, j) => self.x(j).scaled(&(k * self.scalar_on_x(&yz))),
            };
            out = &out + &reduced;
        }
        out
    }

    pub fn format(&self, p: &Poly) -> String {
        let names = self.variables();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        p.format(&names)
    }

    pub fn document(&self) -> PresentationDocument {
        PresentationDocument {
            target: self.target,
            m: self.m,
            n: self.n,
            variables: self.variables(),
            relations: self.relations().iter().map(|r| self.format(r)).collect(),
            normal_form_basis: self
                .normal_form_basis()
                .iter()
                .map(|b| self.format(b))
                .collect(),
            rank: self.rank(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationDocument {
    pub target: Target,
    pub m: u32,
    pub n: u32,
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    pub normal_form_basis: Vec<String>,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub image_vanishes: bool,
    pub normal_form_vanishes: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    pub target: Target,
    pub m: u32,
    pub n: u32,
    pub rank: usize,
    pub expected_rank: usize,
    pub ring_rank: usize,
    pub relations: Vec<RelationCheck>,
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
    pub images_span_lattice: bool,
    /// Green ring only: `Φ((1−Y)F_n(Y,Z)) = (1−a)M[n,0]`.
    pub radical_generator_matches: Option<bool>,
    /// Green ring only: the product rules for `P[i]P[j]` and `M[k,s]P[j]`.
    pub product_identities_hold: Option<bool>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.rank == self.expected_rank
            && self.ring_rank == self.expected_rank
            && self
                .relations
                .iter()
                .all(|r| r.image_vanishes && r.normal_form_vanishes)
            && self.mismatches.is_empty()
            && self.images_span_lattice
            && self.radical_generator_matches != Some(false)
            && self.product_identities_hold != Some(false)
    }
}

fn relation_checks<R: CommutativeRing>(
    pres: &Presentation,
    ring: &R,
    values: &[R::Elem],
    is_zero: impl Fn(&R::Elem) -> bool,
) -> Vec<RelationCheck> {
    pres.relations()
        .iter()
        .map(|r| RelationCheck {
            relation: pres.format(r),
            image_vanishes: is_zero(&r.eval(ring, values)),
            normal_form_vanishes: pres.normal_form(r).is_zero(),
        })
        .collect()
}

/// Checks the substitution `Y ↦ a`, `Z ↦ M[2,0]`, `X_j ↦ P[j]` against the
/// Green ring of the Radford datum.
pub fn verify_presentation(m: u32, n: u32) -> Result<PresentationReport> {
    let pres = Presentation::green(m, n)?;
    let ring = GreenRing::new(Datum::radford(m, n)?);
    let mut values = vec![ring.a(), ring.m(2, CharacterIndex::TRIVIAL)?];
    for j in 1..m {
        values.push(ring.p(CharacterIndex(j))?);
    }
    let phi = |p: &Poly| p.eval(&ring, &values);

    let basis = pres.normal_form_basis();
    let images: Vec<RingElement> = basis.iter().map(phi).collect();
    let mut mismatches = Vec::new();
    for (u, iu) in basis.iter().zip(&images) {
        for (v, iv) in basis.iter().zip(&images) {
            let nf = pres.normal_form(&(u * v));
            let lhs = phi(&nf);
            let rhs = ring.multiply(iu, iv)?;
            if lhs != rhs {
                mismatches.push(format!(
                    "({})*({}) -> {} maps to {} but the product is {}",
                    pres.format(u),
                    pres.format(v),
                    pres.format(&nf),
                    ring.format(&lhs),
                    ring.format(&rhs)
                ));
            }
        }
    }

    let coords = images
        .iter()
        .map(|x| ring.coordinates(x))
        .collect::<Result<Vec<_>>>()?;
    let images_span_lattice =
        Lattice::from_generators(ring.rank(), coords) == Lattice::full(ring.rank());

    let one_minus_y = &pres.constant(1) - &pres.y();
    let generator = phi(&(&one_minus_y * &pres.dickson_n()));
    let expected = ring.multiply(
        &(&ring.unit() - &ring.a()),
        &ring.m(n, CharacterIndex::TRIVIAL)?,
    )?;

    Ok(PresentationReport {
        target: Target::GreenRing,
        m,
        n,
        rank: pres.rank(),
        expected_rank: (n * n + m - 1) as usize,
        ring_rank: ring.rank(),
        relations: relation_checks(&pres, &ring, &values, RingElement::is_zero),
        pairs_checked: basis.len() * basis.len(),
        mismatches,
        images_span_lattice,
        radical_generator_matches: Some(generator == expected),
        product_identities_hold: Some(product_identities_hold(&ring, m, n)?),
    })
}

/// `P[i]P[j] = (1+a+⋯+a^{n−1})M[n,0]` if `m | i+j`, else `n·P[i+j]`;
/// `M[k,s]P[j] = k·P[j]`.
pub fn product_identities_hold(ring: &GreenRing, m: u32, n: u32) -> Result<bool> {
    let a_sum = (0..n).fold(RingElement::zero(), |acc, t| &acc + &ring.pow(&ring.a(), t));
    let orbit = ring.multiply(&a_sum, &ring.m(n, CharacterIndex::TRIVIAL)?)?;
    for i in 1..m {
        let pi = ring.p(CharacterIndex(i))?;
        for j in 1..m {
            let pj = ring.p(CharacterIndex(j))?;
            let expected = if (i + j) % m == 0 {
                orbit.clone()
            } else {
                ring.p(CharacterIndex((i + j) % m))?
                    .scaled(&BigInt::from(n))
            };
            if ring.multiply(&pi, &pj)? != expected {
                return Ok(false);
            }
        }
        for &s in ring.datum().omega0() {
            for k in 1..=n {
                let prod = ring.multiply(&ring.m(k, s)?, &pi)?;
                if prod != pi.scaled(&BigInt::from(k)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks `Y ↦ [V_{τ(0)}]`, `X_j ↦ P[j]` against `G₀(H)`.
pub fn verify_g0_presentation(m: u32, n: u32) -> Result<PresentationReport> {
    let pres = Presentation::grothendieck(m, n)?;
    let ring = GreenRing::new(Datum::radford(m, n)?);
    let g0 = GrothendieckRing::of(&ring);
    let mut values = vec![g0.a()];
    for j in 1..m {
        values.push(g0.phi(&ring.p(CharacterIndex(j))?)?);
    }
    let phi = |p: &Poly| p.eval(&g0, &values);

    let basis = pres.normal_form_basis();
    let images: Vec<G0Element> = basis.iter().map(phi).collect();
    let mut mismatches = Vec::new();
    for (u, iu) in basis.iter().zip(&images) {
        for (v, iv) in basis.iter().zip(&images) {
            let nf = pres.normal_form(&(u * v));
            let lhs = phi(&nf);
            let rhs = g0.g0_multiply(iu, iv)?;
            if lhs != rhs {
                mismatches.push(format!(
                    "({})*({}) -> {} maps to {} but the product is {}",
                    pres.format(u),
                    pres.format(v),
                    pres.format(&nf),
                    g0.format(&lhs),
                    g0.format(&rhs)
                ));
            }
        }
    }
    let coords = images
        .iter()
        .map(|x| g0.coordinates(x))
        .collect::<Result<Vec<_>>>()?;
    let images_span_lattice =
        Lattice::from_generators(g0.rank(), coords) == Lattice::full(g0.rank());

    Ok(PresentationReport {
        target: Target::Grothendieck,
        m,
        n,
        rank: pres.rank(),
        expected_rank: (n + m - 1) as usize,
        ring_rank: g0.rank(),
        relations: relation_checks(&pres, &g0, &values, G0Element::is_zero),
        pairs_checked: basis.len() * basis.len(),
        mismatches,
        images_span_lattice,
        radical_generator_matches: None,
        product_identities_hold: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datum_shape() {
        let d = Datum::radford(2, 2).unwrap();
        assert_eq!(d.group_order(), 4);
        assert_eq!(d.hopf_dimension(), 8);
        let d = Datum::radford(3, 2).unwrap();
        assert_eq!(d.omega0(), [CharacterIndex(0), CharacterIndex(3)]);
        assert!(build_radford_datum(1, 3).is_err());
    }

    #[test]
    fn normal_forms() {
        let p = Presentation::green(2, 2).unwrap();
        assert!(p.normal_form(&(&p.y().pow(2) - &p.constant(1))).is_zero());
        assert_eq!(p.format(&p.normal_form(&p.x(1).pow(2))), "Y*Z + Z");
        let p = Presentation::green(3, 2).unwrap();
        assert_eq!(p.format(&p.normal_form(&p.x(1).pow(2))), "2*X2");
        assert_eq!(p.format(&p.normal_form(&(&p.z() * &p.x(2)))), "2*X2");
    }

    #[test]
    fn z_power_reduces_below_n() {
        let p = Presentation::green(2, 3).unwrap();
        let nf = p.normal_form(&p.z().pow(7));
        assert!(nf.degree_in(1).unwrap() < 3);
        assert!(nf.degree_in(0).unwrap() < 3);
    }

    #[test]
    fn relations_listed() {
        let p = Presentation::grothendieck(3, 2).unwrap();
        let rels: Vec<String> = p.relations().iter().map(|r| p.format(r)).collect();
        assert_eq!(
            rels,
            ["Y^2 - 1", "Y*X1 - X1", "X1^2 - 2*X2", "X1^3 - 4*Y - 4"]
        );
    }

    #[test]
    fn presentations_verify() {
        for (m, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let r = verify_presentation(m, n).unwrap();
            assert!(r.passed(), "{r:?}");
            let r = verify_g0_presentation(m, n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(verify_presentation(2, 2).unwrap().rank, 5);
        assert_eq!(verify_g0_presentation(2, 2).unwrap().rank, 3);
    }
}

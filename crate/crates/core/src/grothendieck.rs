//! `G₀(H)`: the quotient map `φ` from the Green ring, Grothendieck ring
//! arithmetic, the Cartan matrix and the embedding into the character ring of `G`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog::{Catalog, IndecLabel};
use crate::datum::{CharacterIndex, Datum};
use crate::error::{Error, Result};
use crate::green_ring::{format_terms, GreenRing, RingElement};
use crate::lattice::{IntMatrix, Lattice};
use crate::ring::CommutativeRing;

/// Basis label of `G₀(H)`: a simple `[V_i]` with `i ∈ Ω₀`, or `P[j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum G0Label {
    V(CharacterIndex),
    P(CharacterIndex),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct G0Element {
    coeffs: BTreeMap<G0Label, BigInt>,
}

impl G0Element {
    pub fn zero() -> G0Element {
        G0Element::default()
    }

    pub fn term(label: G0Label, coeff: impl Into<BigInt>) -> G0Element {
        let mut e = G0Element::zero();
        e.add_term(label, coeff.into());
        e
    }

    pub fn add_term(&mut self, label: G0Label, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(label).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn coeff(&self, label: &G0Label) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G0Label, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, k: &BigInt) -> G0Element {
        let mut out = G0Element::zero();
        for (l, c) in self.terms() {
            out.add_term(*l, c * k);
        }
        out
    }

    pub fn plus(&self, other: &G0Element) -> G0Element {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(*l, c.clone());
        }
        out
    }
}

/// An element of the character ring `r(kG) = ℤ[Ĝ]`.
pub type CharacterRingElement = BTreeMap<CharacterIndex, BigInt>;

#[derive(Debug, Clone)]
pub struct GrothendieckRing {
    catalog: Catalog,
    basis: Vec<G0Label>,
    position: HashMap<G0Label, usize>,
}

impl GrothendieckRing {
    pub fn new(catalog: Catalog) -> GrothendieckRing {
        let basis = g0_basis(catalog.datum());
        let position = basis.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        GrothendieckRing {
            catalog,
            basis,
            position,
        }
    }

    pub fn of(ring: &GreenRing) -> GrothendieckRing {
        GrothendieckRing::new(ring.catalog().clone())
    }

    pub fn datum(&self) -> &Datum {
        self.catalog.datum()
    }

    /// Orbit-grouped basis: each `Ω̄₀` orbit as `V_i, V_{τ(i)}, …`, then the `P` labels.
    pub fn basis(&self) -> &[G0Label] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, label: &G0Label) -> Option<usize> {
        self.position.get(label).copied()
    }

    pub fn unit(&self) -> G0Element {
        G0Element::term(G0Label::V(CharacterIndex::TRIVIAL), 1)
    }

    /// The image of `a`, `[V_{τ(0)}]`.
    pub fn a(&self) -> G0Element {
        G0Element::term(G0Label::V(self.datum().tau(CharacterIndex::TRIVIAL)), 1)
    }

    fn require(&self, label: &G0Label) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::DatumMismatch(format!("{label:?} is not a G0 basis label")))
    }

    /// `φ(M[k,i]) = Σ_{t<k} [V_{τ^t(i)}]`, `φ(P[j]) = P[j]`.
    pub fn phi(&self, x: &RingElement) -> Result<G0Element> {
        let d = self.datum();
        let mut out = G0Element::zero();
        for (l, c) in x.terms() {
            self.catalog.require(l)?;
            match *l {
                IndecLabel::M { top, length } => {
                    for t in 0..length {
                        out.add_term(G0Label::V(d.tau_pow(top, t as i64)), c.clone());
                    }
                }
                IndecLabel::P { orbit } => out.add_term(G0Label::P(orbit), c.clone()),
            }
        }
        Ok(out)
    }

    fn basis_product(&self, x: &G0Label, y: &G0Label) -> G0Element {
        let d = self.datum();
        let n = BigInt::from(d.n());
        let orbit_sum = |s: CharacterIndex, coeff: &BigInt| {
            let mut e = G0Element::zero();
            for t in 0..d.n() {
                e.add_term(G0Label::V(d.tau_pow(s, t as i64)), coeff.clone());
            }
            e
        };
        match (*x, *y) {
            (G0Label::V(i), G0Label::V(j)) => {
                G0Element::term(G0Label::V(d.character_product(i, j)), 1)
            }
            (G0Label::V(i), G0Label::P(j)) | (G0Label::P(j), G0Label::V(i)) => {
                G0Element::term(G0Label::P(d.orbit_rep(d.character_product(i, j))), 1)
            }
            (G0Label::P(i), G0Label::P(j)) => {
                let s = d.character_product(i, j);
                if d.in_omega0(s) {
                    orbit_sum(s, &n)
                } else {
                    G0Element::term(G0Label::P(d.orbit_rep(s)), n)
                }
            }
        }
    }

    pub fn g0_multiply(&self, x: &G0Element, y: &G0Element) -> Result<G0Element> {
        let mut out = G0Element::zero();
        for (a, ca) in x.terms() {
            self.require(a)?;
            for (b, cb) in y.terms() {
                self.require(b)?;
                out = out.plus(&self.basis_product(a, b).scaled(&(ca * cb)));
            }
        }
        Ok(out)
    }

    pub fn coordinates(&self, x: &G0Element) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.rank()];
        for (l, c) in x.terms() {
            v[self.require(l)?] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coordinates(&self, v: &[BigInt]) -> G0Element {
        let mut e = G0Element::zero();
        for (l, c) in self.basis.iter().zip(v) {
            e.add_term(*l, c.clone());
        }
        e
    }

    /// Matrix of `φ`: rows the `G₀` basis, columns the Green ring basis.
    pub fn phi_matrix(&self, ring: &GreenRing) -> Result<IntMatrix> {
        let cols = ring
            .basis()
            .iter()
            .map(|l| self.coordinates(&self.phi(&ring.label(*l))?))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_columns(self.rank(), cols))
    }

    /// `[V_i] ↦ V_i`, `P[j] ↦ Σ_t V_{τ^t(j)}`.
    pub fn embed_into_rkg(&self, x: &G0Element) -> Result<CharacterRingElement> {
        let d = self.datum();
        let mut out = CharacterRingElement::new();
        let mut add = |c: CharacterIndex, k: &BigInt| {
            let slot = out.entry(c).or_insert_with(BigInt::zero);
            *slot += k;
        };
        for (l, c) in x.terms() {
            self.require(l)?;
            match *l {
                G0Label::V(i) => add(i, c),
                G0Label::P(j) => (0..d.n()).for_each(|t| add(d.tau_pow(j, t as i64), c)),
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn format(&self, x: &G0Element) -> String {
        format_terms(x.terms().map(|(l, c)| (self.format_label(l), c.clone())))
    }

    pub fn format_label(&self, l: &G0Label) -> String {
        let d = self.datum();
        match *l {
            G0Label::V(i) => format!("V[{}]", d.format_character(i)),
            G0Label::P(j) => format!("P[{}]", d.format_character(j)),
        }
    }
}

impl CommutativeRing for GrothendieckRing {
    type Elem = G0Element;

    fn zero(&self) -> G0Element {
        G0Element::zero()
    }

    fn one(&self) -> G0Element {
        self.unit()
    }

    fn add(&self, a: &G0Element, b: &G0Element) -> G0Element {
        a.plus(b)
    }

    fn mul(&self, a: &G0Element, b: &G0Element) -> G0Element {
        self.g0_multiply(a, b).expect("elements of this ring")
    }

    fn scale(&self, a: &G0Element, k: &BigInt) -> G0Element {
        a.scaled(k)
    }
}

/// Product in the group ring of the character group.
pub fn character_ring_multiply(
    d: &Datum,
    x: &CharacterRingElement,
    y: &CharacterRingElement,
) -> CharacterRingElement {
    let mut out = CharacterRingElement::new();
    for (a, ca) in x {
        for (b, cb) in y {
            let slot = out
                .entry(d.character_product(*a, *b))
                .or_insert_with(BigInt::zero);
            *slot += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn g0_basis(d: &Datum) -> Vec<G0Label> {
    let t = d.orbit_table();
    t.orbits0
        .iter()
        .flat_map(|o| o.iter().map(|&i| G0Label::V(i)))
        .chain(t.orbits1.iter().map(|o| G0Label::P(o[0])))
        .collect()
}

/// Projective basis in the orbit-grouped order: `M(n,i)` along each `Ω̄₀`
/// orbit, then the `P` labels.
pub fn projective_basis_grouped(d: &Datum) -> Vec<IndecLabel> {
    let t = d.orbit_table();
    t.orbits0
        .iter()
        .flat_map(|o| o.iter().map(|&i| IndecLabel::m(d.n(), i)))
        .chain(t.orbits1.iter().map(|o| IndecLabel::P { orbit: o[0] }))
        .collect()
}

/// The Cartan matrix with its row and column labels.
#[derive(Debug, Clone, Serialize)]
pub struct CartanMatrix {
    pub row_labels: Vec<String>,
    pub column_labels: Vec<String>,
    pub entries: IntMatrix,
}

impl CartanMatrix {
    /// Expected block form: `|Ω̄₀|` all-ones blocks of order `n`, then an identity block.
    pub fn block_form(n: usize, blocks: usize, simple_projectives: usize) -> IntMatrix {
        let size = n * blocks + simple_projectives;
        let mut m = IntMatrix::zeros(size, size);
        for b in 0..blocks {
            for i in 0..n {
                for j in 0..n {
                    m.set(b * n + i, b * n + j, BigInt::one());
                }
            }
        }
        for k in n * blocks..size {
            m.set(k, k, BigInt::one());
        }
        m
    }

    pub fn is_block_form(&self, d: &Datum) -> bool {
        let t = d.orbit_table();
        self.entries == CartanMatrix::block_form(d.n() as usize, t.orbits0.len(), t.orbits1.len())
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.row_labels.iter().map(|s| s.len()).max().unwrap_or(0);
        writeln!(f, "{:width$}  {}", "", self.column_labels.join(" "))?;
        for (i, label) in self.row_labels.iter().enumerate() {
            let cells: Vec<String> = self
                .entries
                .row(i)
                .iter()
                .zip(&self.column_labels)
                .map(|(x, c)| format!("{:>w$}", x.to_string(), w = c.len()))
                .collect();
            writeln!(f, "{label:width$}  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `φ` restricted to the projectives, columns in orbit-grouped order.
pub fn cartan_matrix(g0: &GrothendieckRing) -> CartanMatrix {
    let d = g0.datum();
    let columns = projective_basis_grouped(d);
    let cols = columns
        .iter()
        .map(|l| {
            let image = g0
                .phi(&RingElement::term(*l, 1))
                .expect("projective label in catalog");
            g0.coordinates(&image).expect("phi lands in G0")
        })
        .collect();
    let catalog = &g0.catalog;
    CartanMatrix {
        row_labels: g0.basis().iter().map(|l| g0.format_label(l)).collect(),
        column_labels: columns.iter().map(|l| catalog.format(l)).collect(),
        entries: IntMatrix::from_columns(g0.rank(), cols),
    }
}

/// `ker φ` in Green ring coordinates.
pub fn kernel_of_phi(ring: &GreenRing, g0: &GrothendieckRing) -> Result<Lattice> {
    Ok(Lattice::kernel_of(&g0.phi_matrix(ring)?))
}

/// The span of `δ(M(k,i))` for `k ≤ n−1`.
pub fn delta_span(ring: &GreenRing) -> Result<Lattice> {
    let n = ring.datum().n();
    let gens = ring
        .basis()
        .iter()
        .filter(|l| matches!(l, IndecLabel::M { length, .. } if *length < n))
        .map(|l| ring.coordinates(&ring.delta(l)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Lattice::from_generators(ring.rank(), gens))
}

/// Gram rows `(b, p)` for each projective label `p`.
pub fn projective_gram(ring: &GreenRing) -> Result<IntMatrix> {
    let rows = ring
        .projective_basis()
        .iter()
        .map(|p| {
            let p = ring.label(*p);
            ring.basis()
                .iter()
                .map(|b| ring.bilinear_form(&ring.label(*b), &p))
                .collect()
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    Ok(IntMatrix::from_rows(ring.rank(), rows))
}

/// `𝒫⊥ = {x : (x, p) = 0 for every projective p}`.
pub fn projective_perp(ring: &GreenRing) -> Result<Lattice> {
    Ok(Lattice::kernel_of(&projective_gram(ring)?))
}

/// The projective ideal `𝒫` as a coordinate sublattice.
pub fn projective_lattice(ring: &GreenRing) -> Lattice {
    let c = ring.catalog();
    Lattice::coordinate(
        ring.rank(),
        ring.basis()
            .iter()
            .enumerate()
            .filter(|(_, l)| c.is_projective(l))
            .map(|(p, _)| p),
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct GrothendieckReport {
    pub g0_rank: usize,
    pub phi_mismatches: Vec<String>,
    pub kernel_rank: usize,
    pub expected_kernel_rank: usize,
    pub kernel_equals_delta_span: bool,
    pub kernel_equals_projective_perp: bool,
    pub cartan_rank: usize,
    pub expected_cartan_rank: usize,
    pub cartan_block_form: bool,
    pub embedding_injective: bool,
    pub embedding_mismatches: Vec<String>,
}

impl GrothendieckReport {
    pub fn passed(&self) -> bool {
        self.phi_mismatches.is_empty()
            && self.kernel_rank == self.expected_kernel_rank
            && self.kernel_equals_delta_span
            && self.kernel_equals_projective_perp
            && self.cartan_rank == self.expected_cartan_rank
            && self.cartan_block_form
            && self.embedding_injective
            && self.embedding_mismatches.is_empty()
    }
}

/// Checks `φ` multiplicativity, `ker φ = span δ = 𝒫⊥`, the Cartan block form
/// and the embedding into `r(kG)`.
pub fn verify(ring: &GreenRing) -> Result<GrothendieckReport> {
    let g0 = GrothendieckRing::of(ring);
    let d = ring.datum();
    let basis = ring.basis();

    let mut phi_mismatches = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let lhs = g0.phi(&ring.basis_product(i, j))?;
            let rhs = g0.g0_multiply(&g0.phi(&ring.label(*a))?, &g0.phi(&ring.label(*b))?)?;
            if lhs != rhs {
                phi_mismatches.push(format!(
                    "phi({} * {}) = {} but phi products give {}",
                    ring.catalog().format(a),
                    ring.catalog().format(b),
                    g0.format(&lhs),
                    g0.format(&rhs)
                ));
            }
        }
    }

    let kernel = kernel_of_phi(ring, &g0)?;
    let cartan = cartan_matrix(&g0);

    let embed_cols = g0
        .basis()
        .iter()
        .map(|l| {
            let e = g0.embed_into_rkg(&G0Element::term(*l, 1))?;
            Ok(d.characters()
                .map(|c| e.get(&c).cloned().unwrap_or_default())
                .collect())
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    let embedding = IntMatrix::from_columns(d.group_order() as usize, embed_cols);

    let mut embedding_mismatches = Vec::new();
    for a in g0.basis() {
        for b in g0.basis() {
            let (x, y) = (G0Element::term(*a, 1), G0Element::term(*b, 1));
            let lhs = g0.embed_into_rkg(&g0.g0_multiply(&x, &y)?)?;
            let rhs = character_ring_multiply(d, &g0.embed_into_rkg(&x)?, &g0.embed_into_rkg(&y)?);
            if lhs != rhs {
                embedding_mismatches.push(format!(
                    "{} * {}",
                    g0.format_label(a),
                    g0.format_label(b)
                ));
            }
        }
    }

    Ok(GrothendieckReport {
        g0_rank: g0.rank(),
        phi_mismatches,
        kernel_rank: kernel.rank(),
        expected_kernel_rank: (d.n() as usize - 1) * d.omega0().len(),
        kernel_equals_delta_span: kernel == delta_span(ring)?,
        kernel_equals_projective_perp: kernel == projective_perp(ring)?,
        cartan_rank: cartan.entries.rank(),
        expected_cartan_rank: d.orbit_table().orbits0.len() + d.orbit_table().orbits1.len(),
        cartan_block_form: cartan.is_block_form(d),
        embedding_injective: embedding.rank() == g0.rank(),
        embedding_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(m: u32, n: u32) -> (GreenRing, GrothendieckRing) {
        let ring = GreenRing::new(Datum::radford(m, n).unwrap());
        let g0 = GrothendieckRing::of(&ring);
        (ring, g0)
    }

    fn idx(i: u32) -> CharacterIndex {
        CharacterIndex(i)
    }

    #[test]
    fn phi_examples() {
        let (ring, g0) = setup(2, 2);
        let m20 = ring.m(2, idx(0)).unwrap();
        let expected =
            G0Element::term(G0Label::V(idx(0)), 1).plus(&G0Element::term(G0Label::V(idx(2)), 1));
        assert_eq!(g0.phi(&m20).unwrap(), expected);
        assert!(g0.phi(&ring.delta_unit()).unwrap().is_zero());
        assert_eq!(
            g0.phi(&ring.p(idx(1)).unwrap()).unwrap(),
            G0Element::term(G0Label::P(idx(1)), 1)
        );
    }

    #[test]
    fn g0_products() {
        let (_, g0) = setup(2, 2);
        let p1 = G0Element::term(G0Label::P(idx(1)), 1);
        assert_eq!(
            g0.format(&g0.g0_multiply(&p1, &p1).unwrap()),
            "2*V[0] + 2*V[2]"
        );
        assert_eq!(g0.g0_multiply(&g0.unit(), &p1).unwrap(), p1);
        let (_, g0) = setup(3, 2);
        let p1 = G0Element::term(G0Label::P(idx(1)), 1);
        assert_eq!(g0.format(&g0.g0_multiply(&p1, &p1).unwrap()), "2*P[2]");
    }

    #[test]
    fn cartan_radford_2_2() {
        let (_, g0) = setup(2, 2);
        let c = cartan_matrix(&g0);
        assert_eq!(
            c.entries.to_i64(),
            vec![vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(c.column_labels, ["M(2,0)", "M(2,2)", "P[1]"]);
    }

    #[test]
    fn cartan_radford_2_3_columns() {
        let (_, g0) = setup(2, 3);
        let c = cartan_matrix(&g0);
        assert!(c.is_block_form(g0.datum()));
        let sums: Vec<i64> = (0..4)
            .map(|j| c.entries.to_i64().iter().map(|r| r[j]).sum())
            .collect();
        assert_eq!(sums, [3, 3, 3, 1]);
    }

    #[test]
    fn embedding() {
        let (_, g0) = setup(2, 2);
        let e = g0
            .embed_into_rkg(&G0Element::term(G0Label::P(idx(1)), 1))
            .unwrap();
        assert_eq!(e.keys().copied().collect::<Vec<_>>(), [idx(1), idx(3)]);
        let u = g0.embed_into_rkg(&g0.unit()).unwrap();
        assert_eq!(u.into_iter().collect::<Vec<_>>(), [(idx(0), BigInt::one())]);
    }

    #[test]
    fn full_report_passes() {
        for (m, n) in [(2, 2), (3, 2), (2, 3)] {
            let (ring, _) = setup(m, n);
            let r = verify(&ring).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

//! Brute-force check of the multiplication rules: every indecomposable is
//! realized by explicit matrices over `ℚ(ω)`, tensor products are formed with
//! `Δ(y) = y⊗g + 1⊗y`, and the result is decomposed by rank counting.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Catalog, IndecLabel};
use crate::cyclotomic::{CycMatrix, CyclotomicField};
use crate::datum::{CharacterIndex, Datum};
use crate::error::{Error, Result};
use crate::green_ring::{GreenRing, RingElement};

/// Multiset of indecomposables.
pub type Decomposition = BTreeMap<IndecLabel, u32>;

/// A finite dimensional module given by the action of the group generators and `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRealization {
    pub generators: Vec<CycMatrix>,
    pub y: CycMatrix,
}

impl ModuleRealization {
    pub fn dimension(&self) -> usize {
        self.y.nrows()
    }
}

pub struct Oracle {
    catalog: Catalog,
    field: CyclotomicField,
}

impl Oracle {
    pub fn new(datum: Arc<Datum>) -> Oracle {
        let field = CyclotomicField::new(datum.exponent());
        Oracle {
            catalog: Catalog::new(datum),
            field,
        }
    }

    pub fn datum(&self) -> &Datum {
        self.catalog.datum()
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Diagonal generator matrices for a basis whose vectors carry the given characters.
    fn generator_matrices(&self, characters: &[CharacterIndex]) -> Vec<CycMatrix> {
        let d = self.datum();
        (0..d.cyclic_orders().len())
            .map(|l| {
                let e = d.generator_element(l);
                let entries = characters
                    .iter()
                    .map(|&c| self.field.root(d.value(c, &e) as i64))
                    .collect();
                CycMatrix::diagonal(&self.field, entries)
            })
            .collect()
    }

    /// Basis `v, xv, …, x^{len−1}v` with `y` shifting down the chain and
    /// `x^t v` carrying the character `τ^t(i)`.
    pub fn realize(&self, label: &IndecLabel) -> Result<ModuleRealization> {
        self.catalog.require(label)?;
        let d = self.datum();
        let f = &self.field;
        let (top, len) = match *label {
            IndecLabel::M { top, length } => (top, length as usize),
            IndecLabel::P { orbit } => (orbit, d.n() as usize),
        };
        let characters: Vec<CharacterIndex> = (0..len).map(|t| d.tau_pow(top, t as i64)).collect();
        let mut y = CycMatrix::zeros(f, len, len);
        for t in 0..len - 1 {
            y.set(t + 1, t, f.one());
        }
        if let IndecLabel::P { orbit } = *label {
            // y(x^{n−1}v) = (λ_j − 1)v
            let corner = f.sub(&f.root(d.lambda(orbit) as i64), &f.one());
            y.set(0, len - 1, corner);
        }
        Ok(ModuleRealization {
            generators: self.generator_matrices(&characters),
            y,
        })
    }

    /// Action of a group element `h = Σ h_l e_l`.
    pub fn group_action(&self, module: &ModuleRealization, h: &[u32]) -> CycMatrix {
        let f = &self.field;
        let mut acc = CycMatrix::identity(f, module.dimension());
        for (gen, &k) in module.generators.iter().zip(h) {
            acc = acc.mul(f, &gen.pow(f, k));
        }
        acc
    }

    /// `yⁿ = gⁿ − 1` and `y h = χ(h) h y` for every generator `h`.
    pub fn check_relations(&self, module: &ModuleRealization) -> Result<()> {
        let d = self.datum();
        let f = &self.field;
        let dim = module.dimension();
        let g = self.group_action(module, d.g());
        let lhs = module.y.pow(f, d.n());
        let rhs = g.pow(f, d.n()).sub(f, &CycMatrix::identity(f, dim));
        if lhs != rhs {
            return Err(Error::RelationViolation("y^n != g^n - 1".into()));
        }
        for (l, h) in module.generators.iter().enumerate() {
            let chi_h = f.root(d.value(d.chi(), &d.generator_element(l)) as i64);
            let lhs = module.y.mul(f, h);
            let rhs = h.mul(f, &module.y).scale(f, &chi_h);
            if lhs != rhs {
                return Err(Error::RelationViolation(format!(
                    "y h != chi(h) h y for generator {l}"
                )));
            }
        }
        Ok(())
    }

    /// Group elements act diagonally, `y` by `y⊗g + 1⊗y`.
    pub fn tensor(
        &self,
        a: &ModuleRealization,
        b: &ModuleRealization,
    ) -> Result<ModuleRealization> {
        let f = &self.field;
        let generators = a
            .generators
            .iter()
            .zip(&b.generators)
            .map(|(x, z)| x.kron(f, z))
            .collect();
        let gb = self.group_action(b, self.datum().g());
        let y =
            a.y.kron(f, &gb)
                .add(f, &CycMatrix::identity(f, a.dimension()).kron(f, &b.y));
        let module = ModuleRealization { generators, y };
        self.check_relations(&module)?;
        Ok(module)
    }

    /// Dual module: `h ↦ ρ(h^{-1})ᵀ`, `y ↦ ρ(S(y))ᵀ` with `S(y) = −y g^{-1}`.
    pub fn dual(&self, a: &ModuleRealization) -> Result<ModuleRealization> {
        let f = &self.field;
        let not_diagonal = || Error::RelationViolation("group action is not diagonal".into());
        let generators = a
            .generators
            .iter()
            .map(|h| {
                h.diagonal_inverse(f)
                    .map(|m| m.transpose())
                    .ok_or_else(not_diagonal)
            })
            .collect::<Result<Vec<_>>>()?;
        let g_inv = self
            .group_action(a, self.datum().g())
            .diagonal_inverse(f)
            .ok_or_else(not_diagonal)?;
        let y = a.y.mul(f, &g_inv).scale(f, &f.from_int(-1)).transpose();
        let module = ModuleRealization { generators, y };
        self.check_relations(&module)?;
        Ok(module)
    }

    /// Character of each basis vector, read off the diagonal generator matrices.
    fn characters_of(&self, module: &ModuleRealization) -> Result<Vec<CharacterIndex>> {
        let d = self.datum();
        let f = &self.field;
        if !module.generators.iter().all(CycMatrix::is_diagonal) {
            return Err(Error::RelationViolation(
                "group action is not diagonal".into(),
            ));
        }
        let big_l = d.exponent();
        (0..module.dimension())
            .map(|b| {
                let tuple = module
                    .generators
                    .iter()
                    .zip(d.cyclic_orders())
                    .map(|(h, &ord)| {
                        let k = f.root_exponent(h.get(b, b)).ok_or_else(|| {
                            Error::RelationViolation(
                                "generator eigenvalue is not a root of unity".into(),
                            )
                        })?;
                        let step = big_l / ord;
                        if k % step != 0 {
                            return Err(Error::RelationViolation(
                                "generator eigenvalue has the wrong order".into(),
                            ));
                        }
                        Ok(k / step)
                    })
                    .collect::<Result<Vec<u32>>>()?;
                d.index_of(&tuple)
            })
            .collect()
    }

    /// `e = (1/r) Σ_{s<r} g^{sn}`.
    pub fn central_idempotent(&self, module: &ModuleRealization) -> CycMatrix {
        let d = self.datum();
        let f = &self.field;
        let gn = self.group_action(module, d.g()).pow(f, d.n());
        let mut sum = CycMatrix::zeros(f, module.dimension(), module.dimension());
        let mut power = CycMatrix::identity(f, module.dimension());
        for _ in 0..d.r() {
            sum = sum.add(f, &power);
            power = power.mul(f, &gn);
        }
        let inv_r = f.from_rational(BigRational::new(BigInt::from(1), BigInt::from(d.r())));
        sum.scale(f, &inv_r)
    }

    /// Splits by `e`; on the `e`-part counts Jordan chains of `y` per socle
    /// character, on the `(1−e)`-part counts character multiplicities.
    pub fn decompose(&self, module: &ModuleRealization) -> Result<Decomposition> {
        self.check_relations(module)?;
        let d = self.datum();
        let f = &self.field;
        let dim = module.dimension();
        let characters = self.characters_of(module)?;

        let e = self.central_idempotent(module);
        for (b, &c) in characters.iter().enumerate() {
            let expected = if d.in_omega0(c) { f.one() } else { f.zero() };
            if *e.get(b, b) != expected {
                return Err(Error::RelationViolation(format!(
                    "e does not act as [{} in Omega_0] on a basis vector",
                    d.format_character(c)
                )));
            }
        }

        let mut spaces: HashMap<CharacterIndex, Vec<usize>> = HashMap::new();
        for (b, &c) in characters.iter().enumerate() {
            spaces.entry(c).or_default().push(b);
        }
        // y must map E_c into E_{τ(c)}
        for col in 0..dim {
            let target = d.tau(characters[col]);
            for row in 0..dim {
                if characters[row] != target && !module.y.get(row, col).is_zero() {
                    return Err(Error::RelationViolation(
                        "y does not shift characters by tau".into(),
                    ));
                }
            }
        }
        let space = |c: CharacterIndex| spaces.get(&c).cloned().unwrap_or_default();
        let block = |c: CharacterIndex| module.y.select(&space(d.tau(c)), &space(c));

        // rank of y^p restricted to E_c, for p = 0..=n+1
        let n = d.n() as usize;
        let mut ranks: HashMap<CharacterIndex, Vec<usize>> = HashMap::new();
        for &c in d.omega0() {
            let mut chain = CycMatrix::identity(f, space(c).len());
            let mut r = vec![chain.rank(f)];
            let mut current = c;
            for _ in 0..=n {
                chain = block(current).mul(f, &chain);
                current = d.tau(current);
                r.push(chain.rank(f));
            }
            ranks.insert(c, r);
        }

        let mut out = Decomposition::new();
        let mut found = 0usize;
        for &i in d.omega0() {
            let prev = d.tau_pow(i, -1);
            for k in 1..=n {
                // chains of length ≥ k ending at socle τ^{k−1}(i), minus those of length ≥ k+1
                let at_least_k = ranks[&i][k - 1] as i64 - ranks[&i][k] as i64;
                let at_least_next = ranks[&prev][k] as i64 - ranks[&prev][k + 1] as i64;
                let mult = at_least_k - at_least_next;
                if mult < 0 {
                    return Err(Error::RelationViolation("negative chain count".into()));
                }
                if mult > 0 {
                    out.insert(IndecLabel::m(k as u32, i), mult as u32);
                    found += k * mult as usize;
                }
            }
        }
        for orbit in &d.orbit_table().orbits1 {
            let sizes: Vec<usize> = orbit.iter().map(|&c| space(c).len()).collect();
            if sizes.iter().any(|&s| s != sizes[0]) {
                return Err(Error::RelationViolation(format!(
                    "character multiplicities differ along the orbit of {}",
                    d.format_character(orbit[0])
                )));
            }
            if sizes[0] > 0 {
                out.insert(IndecLabel::P { orbit: orbit[0] }, sizes[0] as u32);
                found += n * sizes[0];
            }
        }
        if found != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found,
            });
        }
        Ok(out)
    }

    pub fn format(&self, x: &Decomposition) -> String {
        let terms: Vec<String> = x
            .iter()
            .map(|(l, &c)| {
                let name = self.catalog.format(l);
                if c == 1 {
                    name
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// A ring element with non-negative coefficients as a multiset.
pub fn as_decomposition(x: &RingElement) -> Option<Decomposition> {
    x.terms()
        .map(|(l, c)| u32::try_from(c.clone()).ok().map(|c| (*l, c)))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleMismatch {
    pub left: String,
    pub right: String,
    pub predicted: String,
    pub observed: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub datum: String,
    pub basis_size: usize,
    pub pairs: usize,
    pub mismatches: Vec<OracleMismatch>,
    /// Labels whose realization does not decompose back to themselves.
    pub realization_failures: Vec<String>,
    /// Labels whose realized dual does not decompose to the catalog's dual label.
    pub dual_failures: Vec<String>,
    /// Ordered pairs where `A⊗B` and `B⊗A` decompose differently.
    pub asymmetric_pairs: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.realization_failures.is_empty()
            && self.dual_failures.is_empty()
            && self.asymmetric_pairs.is_empty()
    }
}

/// Decomposes `A⊗B` for every ordered pair of basis labels and compares with
/// the structure constants of the Green ring.
pub fn verify_structure_constants(ring: &GreenRing) -> Result<OracleReport> {
    let start = Instant::now();
    let oracle = Oracle::new(ring.catalog().datum().clone());
    let c = ring.catalog();
    let basis = ring.basis();
    let modules = basis
        .iter()
        .map(|l| oracle.realize(l))
        .collect::<Result<Vec<_>>>()?;

    let mut realization_failures = Vec::new();
    let mut dual_failures = Vec::new();
    for (l, m) in basis.iter().zip(&modules) {
        let single: Decomposition = [(*l, 1)].into_iter().collect();
        match oracle.decompose(m) {
            Ok(dec) if dec == single => {}
            Ok(dec) => {
                realization_failures.push(format!("{} -> {}", c.format(l), oracle.format(&dec)))
            }
            Err(e) => realization_failures.push(format!("{}: {e}", c.format(l))),
        }
        let expected: Decomposition = [(c.dual_label(l), 1)].into_iter().collect();
        match oracle.dual(m).and_then(|dm| oracle.decompose(&dm)) {
            Ok(dec) if dec == expected => {}
            Ok(dec) => dual_failures.push(format!("{}* -> {}", c.format(l), oracle.format(&dec))),
            Err(e) => dual_failures.push(format!("{}*: {e}", c.format(l))),
        }
    }

    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .collect();
    let observed: Vec<std::result::Result<Decomposition, String>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            oracle
                .tensor(&modules[i], &modules[j])
                .and_then(|t| oracle.decompose(&t))
                .map_err(|e| e.to_string())
        })
        .collect();

    let mut mismatches = Vec::new();
    let mut table: HashMap<(usize, usize), &Decomposition> = HashMap::new();
    for (&(i, j), obs) in pairs.iter().zip(&observed) {
        let predicted = ring.basis_product(i, j);
        let observed_text = match obs {
            Ok(dec) => {
                table.insert((i, j), dec);
                if as_decomposition(&predicted).as_ref() == Some(dec) {
                    continue;
                }
                oracle.format(dec)
            }
            Err(e) => format!("error: {e}"),
        };
        mismatches.push(OracleMismatch {
            left: c.format(&basis[i]),
            right: c.format(&basis[j]),
            predicted: ring.format(&predicted),
            observed: observed_text,
        });
    }
    let mut asymmetric_pairs = Vec::new();
    for &(i, j) in pairs.iter().filter(|(i, j)| i < j) {
        if let (Some(a), Some(b)) = (table.get(&(i, j)), table.get(&(j, i))) {
            if a != b {
                asymmetric_pairs.push(format!("{} , {}", c.format(&basis[i]), c.format(&basis[j])));
            }
        }
    }

    Ok(OracleReport {
        datum: ring.datum().to_string(),
        basis_size: basis.len(),
        pairs: pairs.len(),
        mismatches,
        realization_failures,
        dual_failures,
        asymmetric_pairs,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(m: u32, n: u32) -> Oracle {
        Oracle::new(Arc::new(Datum::radford(m, n).unwrap()))
    }

    fn label(o: &Oracle, s: &str) -> IndecLabel {
        o.catalog().parse_label(s).unwrap()
    }

    #[test]
    fn trivial_module() {
        let o = oracle(2, 2);
        let t = o.realize(&label(&o, "M(1,0)")).unwrap();
        assert_eq!(t.dimension(), 1);
        assert!(t.y.is_zero());
        assert_eq!(o.group_action(&t, &[1]), CycMatrix::identity(o.field(), 1));
    }

    #[test]
    fn projective_corner_entry() {
        let o = oracle(2, 2);
        let p = o.realize(&label(&o, "P[1]")).unwrap();
        let f = o.field();
        assert_eq!(*p.y.get(0, 1), f.from_int(-2));
        assert_eq!(*p.y.get(1, 0), f.one());
    }

    #[test]
    fn realizations_satisfy_relations() {
        let o = oracle(3, 2);
        for l in o.catalog().basis().to_vec() {
            let m = o.realize(&l).unwrap();
            o.check_relations(&m).unwrap();
            let e = o.central_idempotent(&m);
            let f = o.field();
            let expected = if l.is_m() {
                CycMatrix::identity(f, m.dimension())
            } else {
                CycMatrix::zeros(f, m.dimension(), m.dimension())
            };
            assert_eq!(e, expected, "{l:?}");
        }
    }

    #[test]
    fn decompositions_radford_2_2() {
        let o = oracle(2, 2);
        let p = o.realize(&label(&o, "P[1]")).unwrap();
        let m2 = o.realize(&label(&o, "M(2,0)")).unwrap();
        let pp = o.tensor(&p, &p).unwrap();
        assert_eq!(o.format(&o.decompose(&pp).unwrap()), "M(2,0) + M(2,2)");
        let mp = o.tensor(&m2, &p).unwrap();
        assert_eq!(o.format(&o.decompose(&mp).unwrap()), "2*P[1]");
        assert_eq!(o.format(&o.decompose(&m2).unwrap()), "M(2,0)");
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let o = oracle(2, 3);
        let t = o.realize(&label(&o, "M(1,0)")).unwrap();
        let m = o.realize(&label(&o, "M(2,2)")).unwrap();
        assert_eq!(o.tensor(&t, &m).unwrap(), m);
        assert_eq!(o.tensor(&m, &t).unwrap().dimension(), 2);
    }

    #[test]
    fn broken_module_is_rejected() {
        let o = oracle(2, 2);
        let mut m = o.realize(&label(&o, "M(2,0)")).unwrap();
        m.y.set(0, 1, o.field().one());
        assert!(matches!(o.decompose(&m), Err(Error::RelationViolation(_))));
    }

    #[test]
    fn structure_constants_small() {
        for (m, n) in [(2, 2), (3, 2)] {
            let ring = GreenRing::new(Datum::radford(m, n).unwrap());
            let r = verify_structure_constants(&ring).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

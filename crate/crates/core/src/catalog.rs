//! The indecomposable modules: `M(k,i)` for `i ∈ Ω₀`, `1 ≤ k ≤ n`, and one simple
//! projective `P[j]` per `τ`-orbit of `Ω₁`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::datum::{CharacterIndex, Datum};
use crate::error::{Error, Result};

/// Basis label of the Green ring. The derived order (`M` before `P`, then `M`
/// by `(top, length)`) is the basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndecLabel {
    /// `M(k,i)`: `length = k`, top character `i ∈ Ω₀`.
    M { top: CharacterIndex, length: u32 },
    /// `P[j]`, stored by the canonical orbit representative.
    P { orbit: CharacterIndex },
}

impl IndecLabel {
    pub fn m(length: u32, top: CharacterIndex) -> IndecLabel {
        IndecLabel::M { top, length }
    }

    pub fn is_m(&self) -> bool {
        matches!(self, IndecLabel::M { .. })
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    datum: Arc<Datum>,
    basis: Vec<IndecLabel>,
    position: HashMap<IndecLabel, usize>,
}

impl Catalog {
    pub fn new(datum: Arc<Datum>) -> Catalog {
        let basis = enumerate_basis(&datum);
        let position = basis.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        Catalog {
            datum,
            basis,
            position,
        }
    }

    pub fn datum(&self) -> &Arc<Datum> {
        &self.datum
    }

    pub fn basis(&self) -> &[IndecLabel] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn position(&self, label: &IndecLabel) -> Option<usize> {
        self.position.get(label).copied()
    }

    pub fn require(&self, label: &IndecLabel) -> Result<usize> {
        self.position(label).ok_or_else(|| {
            Error::DatumMismatch(format!("{} is not a basis label", self.format(label)))
        })
    }

    pub fn unit(&self) -> IndecLabel {
        IndecLabel::m(1, CharacterIndex::TRIVIAL)
    }

    /// `a = [V_{χ^{-1}}] = M(1, τ(0))`.
    pub fn a(&self) -> IndecLabel {
        IndecLabel::m(1, self.datum.tau(CharacterIndex::TRIVIAL))
    }

    /// `M(k,i)`, checked against the catalog.
    pub fn m(&self, k: u32, i: CharacterIndex) -> Result<IndecLabel> {
        let label = IndecLabel::m(k, i);
        self.require(&label)?;
        Ok(label)
    }

    /// `P[j]` for any member `j` of an `Ω₁`-orbit.
    pub fn p(&self, j: CharacterIndex) -> Result<IndecLabel> {
        if j.0 >= self.datum.group_order() || self.datum.in_omega0(j) {
            return Err(Error::DatumMismatch(format!(
                "P[{}] needs a character in Omega_1",
                j.0
            )));
        }
        Ok(IndecLabel::P {
            orbit: self.datum.orbit_rep(j),
        })
    }

    pub fn dimension(&self, label: &IndecLabel) -> u32 {
        match label {
            IndecLabel::M { length, .. } => *length,
            IndecLabel::P { .. } => self.datum.n(),
        }
    }

    pub fn is_projective(&self, label: &IndecLabel) -> bool {
        match label {
            IndecLabel::M { length, .. } => *length == self.datum.n(),
            IndecLabel::P { .. } => true,
        }
    }

    /// `M(k,i)* = M(k, τ^{1−k}(i*))`, `P[j]* = P[j*]`.
    pub fn dual_label(&self, label: &IndecLabel) -> IndecLabel {
        let d = &self.datum;
        match *label {
            IndecLabel::M { top, length } => {
                IndecLabel::m(length, d.tau_pow(d.dual_character(top), 1 - length as i64))
            }
            IndecLabel::P { orbit } => IndecLabel::P {
                orbit: d.orbit_rep(d.dual_character(orbit)),
            },
        }
    }

    pub fn display<'a>(&'a self, label: &'a IndecLabel) -> LabelDisplay<'a> {
        LabelDisplay {
            datum: &self.datum,
            label,
        }
    }

    pub fn format(&self, label: &IndecLabel) -> String {
        self.display(label).to_string()
    }

    /// Parses `M(k,i)` or `P[j]`; `i`, `j` are comma-joined tuples and any orbit
    /// member is accepted for `P`.
    pub fn parse_label(&self, text: &str) -> Result<IndecLabel> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("cannot parse label {text:?}"));
        let numbers = |s: &str| -> Result<Vec<u32>> {
            s.split(',')
                .map(|x| x.parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        if let Some(body) = t.strip_prefix("M(").and_then(|s| s.strip_suffix(')')) {
            let parts = numbers(body)?;
            let (&k, tuple) = parts.split_first().ok_or_else(bad)?;
            let i = self.datum.index_of(tuple)?;
            return self.m(k, i);
        }
        if let Some(body) = t.strip_prefix("P[").and_then(|s| s.strip_suffix(']')) {
            let j = self.datum.index_of(&numbers(body)?)?;
            return self.p(j);
        }
        Err(bad())
    }
}

/// Deterministic basis order: every `M(k,i)` sorted by `(i,k)`, then `P` labels.
pub fn enumerate_basis(d: &Datum) -> Vec<IndecLabel> {
    let mut basis: Vec<IndecLabel> = d
        .omega0()
        .iter()
        .flat_map(|&i| (1..=d.n()).map(move |k| IndecLabel::m(k, i)))
        .collect();
    basis.extend(
        d.orbit_table()
            .orbits1
            .iter()
            .map(|o| IndecLabel::P { orbit: o[0] }),
    );
    basis.sort();
    basis
}

pub struct LabelDisplay<'a> {
    datum: &'a Datum,
    label: &'a IndecLabel,
}

impl fmt::Display for LabelDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self.label {
            IndecLabel::M { top, length } => {
                write!(f, "M({},{})", length, self.datum.format_character(top))
            }
            IndecLabel::P { orbit } => write!(f, "P[{}]", self.datum.format_character(orbit)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog(m: u32, n: u32) -> Catalog {
        Catalog::new(Arc::new(Datum::radford(m, n).unwrap()))
    }

    #[test]
    fn radford_2_2_basis() {
        let c = catalog(2, 2);
        let names: Vec<String> = c.basis().iter().map(|l| c.format(l)).collect();
        assert_eq!(names, ["M(1,0)", "M(2,0)", "M(1,2)", "M(2,2)", "P[1]"]);
        assert_eq!(c.unit(), c.basis()[0]);
    }

    #[test]
    fn radford_basis_size() {
        for (m, n) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 3)] {
            assert_eq!(
                catalog(m, n).len() as u32,
                n * n + m - 1,
                "(m,n) = ({m},{n})"
            );
        }
    }

    #[test]
    fn duals_in_radford_2_2() {
        let c = catalog(2, 2);
        let parse = |s| c.parse_label(s).unwrap();
        assert_eq!(c.dual_label(&parse("M(1,0)")), parse("M(1,0)"));
        assert_eq!(c.dual_label(&parse("M(2,0)")), parse("M(2,2)"));
        assert_eq!(c.dual_label(&parse("P[1]")), parse("P[1]"));
        assert_eq!(parse("P[3]"), parse("P[1]"));
    }

    #[test]
    fn dual_label_is_an_involution_preserving_shape() {
        for (m, n) in [(2, 3), (3, 3), (2, 4)] {
            let c = catalog(m, n);
            for l in c.basis() {
                let dual = c.dual_label(l);
                assert!(c.position(&dual).is_some());
                assert_eq!(c.dual_label(&dual), *l);
                assert_eq!(c.dimension(&dual), c.dimension(l));
                assert_eq!(c.is_projective(&dual), c.is_projective(l));
            }
        }
    }

    #[test]
    fn projectivity_and_dimension() {
        let c = catalog(3, 3);
        let projective = c.basis().iter().filter(|l| c.is_projective(l)).count();
        // M(3,i) for |Ω₀| = 3 plus two P labels
        assert_eq!(projective, 5);
        let d = c.datum();
        // |Ω₀| projective covers of dimension n, and each P has multiplicity n in H.
        let dim_h: u64 = d.omega0().len() as u64 * d.n() as u64
            + d.orbit_table().orbits1.len() as u64 * (d.n() * d.n()) as u64;
        assert_eq!(dim_h, d.hopf_dimension());
    }

    #[test]
    fn parse_errors() {
        let c = catalog(2, 2);
        assert!(c.parse_label("M(3,0)").is_err());
        assert!(c.parse_label("M(1,1)").is_err());
        assert!(c.parse_label("P[0]").is_err());
        assert!(c.parse_label("Q[1]").is_err());
    }
}

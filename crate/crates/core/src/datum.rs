//! Group data `(G, χ, g, 1)` over finite abelian groups `G = ℤ/d₁ × ⋯ × ℤ/d_s`.
//!
//! Characters of `G` are indexed by exponent tuples: the character with tuple
//! `c` sends the `l`-th cyclic generator to `ω_{d_l}^{c_l}`. Every root of unity
//! is stored as an exponent of `ω_L`, `L = lcm(d_l)`; nothing here is a float.
//!
//! Tuples are packed into a mixed-radix code ([`CharacterIndex`]) whose numeric
//! order is the lexicographic order of the tuples.

use std::fmt;
use std::path::Path;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw, unvalidated group datum as read from a datum file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDatum {
    pub cyclic_orders: Vec<u32>,
    pub chi: Vec<u32>,
    pub g: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadfordParams {
    pub m: u32,
    pub n: u32,
}

/// On-disk datum document: either explicit tuples or the `radford` shorthand.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumFile {
    Radford { radford: RadfordParams },
    Explicit(GroupDatum),
}

impl DatumFile {
    pub fn into_group_datum(self) -> Result<GroupDatum> {
        match self {
            DatumFile::Explicit(d) => Ok(d),
            DatumFile::Radford { radford } => GroupDatum::radford(radford.m, radford.n),
        }
    }
}

impl GroupDatum {
    /// Cyclic group of order `mn` with `g` the generator and `χ(g) = ω^{-m}`.
    pub fn radford(m: u32, n: u32) -> Result<GroupDatum> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidParameters(format!(
                "Radford datum needs m > 1 and n >= 2, got m = {m}, n = {n}"
            )));
        }
        let order = m
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidParameters("m*n overflows".into()))?;
        Ok(GroupDatum {
            cyclic_orders: vec![order],
            chi: vec![m * (n - 1)],
            g: vec![1],
        })
    }

    pub fn from_json(text: &str) -> Result<GroupDatum> {
        let file: DatumFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.into_group_datum()
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<GroupDatum> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        GroupDatum::from_json(&text)
    }
}

/// Mixed-radix code of a character tuple. Ordering is lexicographic on tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CharacterIndex(pub u32);

impl CharacterIndex {
    pub const TRIVIAL: CharacterIndex = CharacterIndex(0);
}

/// The permutation `τ` (tensoring with `V_{χ^{-1}}`) and its orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    pub tau: Vec<CharacterIndex>,
    /// Orbits inside `Ω₀`, sorted by representative; each listed as `rep, τ(rep), …`.
    pub orbits0: Vec<Vec<CharacterIndex>>,
    pub orbits1: Vec<Vec<CharacterIndex>>,
    /// Canonical (lexicographically smallest) representative of each orbit.
    pub rep: Vec<CharacterIndex>,
}

/// A validated group datum of non-nilpotent type together with its orbit data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Datum {
    raw: GroupDatum,
    strides: Vec<u32>,
    exponent: u32,
    group_order: u32,
    n: u32,
    r: u32,
    chi: CharacterIndex,
    omega0: Vec<CharacterIndex>,
    omega1: Vec<CharacterIndex>,
    orbits: OrbitTable,
}

/// Checks the datum and derives `n = ord χ(g)` and `r = ord(g) / n`.
pub fn validate_datum(d: &GroupDatum) -> Result<Datum> {
    Datum::new(d.clone())
}

impl Datum {
    pub fn new(raw: GroupDatum) -> Result<Datum> {
        let s = raw.cyclic_orders.len();
        if s == 0 {
            return Err(Error::MalformedTuple("cyclic_orders is empty".into()));
        }
        if raw.chi.len() != s || raw.g.len() != s {
            return Err(Error::MalformedTuple(format!(
                "cyclic_orders has {} entries but chi has {} and g has {}",
                s,
                raw.chi.len(),
                raw.g.len()
            )));
        }
        if let Some(&d) = raw.cyclic_orders.iter().find(|&&d| d == 0) {
            return Err(Error::MalformedTuple(format!(
                "cyclic order {d} is not positive"
            )));
        }
        for (name, t) in [("chi", &raw.chi), ("g", &raw.g)] {
            for (l, (&x, &d)) in t.iter().zip(&raw.cyclic_orders).enumerate() {
                if x >= d {
                    return Err(Error::MalformedTuple(format!(
                        "{name}[{l}] = {x} is not reduced modulo {d}"
                    )));
                }
            }
        }
        let group_order = raw
            .cyclic_orders
            .iter()
            .try_fold(1u32, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::MalformedTuple("group order overflows".into()))?;
        let exponent = raw.cyclic_orders.iter().fold(1u32, |acc, &d| acc.lcm(&d));
        let mut strides = vec![1u32; s];
        for l in (0..s.saturating_sub(1)).rev() {
            strides[l] = strides[l + 1] * raw.cyclic_orders[l + 1];
        }

        let chi = CharacterIndex(raw.chi.iter().zip(&strides).map(|(c, st)| c * st).sum());
        let mut datum = Datum {
            raw,
            strides,
            exponent,
            group_order,
            n: 0,
            r: 0,
            chi,
            omega0: Vec::new(),
            omega1: Vec::new(),
            orbits: OrbitTable {
                tau: Vec::new(),
                orbits0: Vec::new(),
                orbits1: Vec::new(),
                rep: Vec::new(),
            },
        };

        let q = datum.value(chi, &datum.raw.g.clone());
        let n = exponent / (q.gcd(&exponent));
        if n < 2 {
            return Err(Error::DegenerateOrder(n as u64));
        }
        let g_n: Vec<u32> = datum.scale_element(&datum.raw.g, n);
        if g_n.iter().all(|&x| x == 0) {
            return Err(Error::NilpotentType);
        }
        if datum.character_power(chi, n as i64) != CharacterIndex::TRIVIAL {
            return Err(Error::CharacterOrder { n: n as u64 });
        }
        let g_order = datum
            .raw
            .g
            .iter()
            .zip(&datum.raw.cyclic_orders)
            .fold(1u32, |acc, (&x, &d)| acc.lcm(&(d / x.gcd(&d))));
        datum.n = n;
        datum.r = g_order / n;

        let (omega0, omega1): (Vec<_>, Vec<_>) =
            datum.characters().partition(|&c| datum.value(c, &g_n) == 0);
        datum.omega0 = omega0;
        datum.omega1 = omega1;
        datum.orbits = build_orbit_table(&datum);
        Ok(datum)
    }

    pub fn radford(m: u32, n: u32) -> Result<Datum> {
        Datum::new(GroupDatum::radford(m, n)?)
    }

    pub fn group_datum(&self) -> &GroupDatum {
        &self.raw
    }

    pub fn cyclic_orders(&self) -> &[u32] {
        &self.raw.cyclic_orders
    }

    /// Order of `q = χ(g)`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `ord(g) / n`; strictly greater than 1 for a valid datum.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// `L = lcm` of the cyclic orders; all roots of unity are powers of `ω_L`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn group_order(&self) -> u32 {
        self.group_order
    }

    /// `dim H = n·|G|`.
    pub fn hopf_dimension(&self) -> u64 {
        self.n as u64 * self.group_order as u64
    }

    /// Exponent of `q = χ(g)` as a power of `ω_L`.
    pub fn q_exponent(&self) -> u32 {
        self.value(self.chi, &self.raw.g)
    }

    pub fn chi(&self) -> CharacterIndex {
        self.chi
    }

    pub fn characters(&self) -> impl Iterator<Item = CharacterIndex> {
        (0..self.group_order).map(CharacterIndex)
    }

    pub fn omega0(&self) -> &[CharacterIndex] {
        &self.omega0
    }

    pub fn omega1(&self) -> &[CharacterIndex] {
        &self.omega1
    }

    pub fn orbit_table(&self) -> &OrbitTable {
        &self.orbits
    }

    pub fn components(&self, c: CharacterIndex) -> Vec<u32> {
        self.strides
            .iter()
            .zip(&self.raw.cyclic_orders)
            .map(|(&st, &d)| (c.0 / st) % d)
            .collect()
    }

    pub fn index_of(&self, tuple: &[u32]) -> Result<CharacterIndex> {
        if tuple.len() != self.strides.len() {
            return Err(Error::MalformedTuple(format!(
                "expected a {}-tuple, got {:?}",
                self.strides.len(),
                tuple
            )));
        }
        let mut code = 0;
        for ((&x, &d), &st) in tuple.iter().zip(&self.raw.cyclic_orders).zip(&self.strides) {
            if x >= d {
                return Err(Error::MalformedTuple(format!(
                    "component {x} is not reduced modulo {d}"
                )));
            }
            code += x * st;
        }
        Ok(CharacterIndex(code))
    }

    /// Comma-joined tuple, e.g. `0` or `1,2`.
    pub fn format_character(&self, c: CharacterIndex) -> String {
        self.components(c)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Character product, i.e. the index of `V_a ⊗ V_b`.
    pub fn character_product(&self, a: CharacterIndex, b: CharacterIndex) -> CharacterIndex {
        let ca = self.components(a);
        let cb = self.components(b);
        let t: Vec<u32> = ca
            .iter()
            .zip(&cb)
            .zip(&self.raw.cyclic_orders)
            .map(|((x, y), d)| (x + y) % d)
            .collect();
        self.pack(&t)
    }

    pub fn character_power(&self, a: CharacterIndex, k: i64) -> CharacterIndex {
        let t: Vec<u32> = self
            .components(a)
            .iter()
            .zip(&self.raw.cyclic_orders)
            .map(|(&x, &d)| (x as i64 * k).rem_euclid(d as i64) as u32)
            .collect();
        self.pack(&t)
    }

    /// `i*`, the index of `(V_i)^*`.
    pub fn dual_character(&self, a: CharacterIndex) -> CharacterIndex {
        self.character_power(a, -1)
    }

    /// Exponent `e` with `ψ_c(h) = ω_L^e`, `h` given as a group element tuple.
    pub fn value(&self, c: CharacterIndex, h: &[u32]) -> u32 {
        let l = self.exponent as u64;
        self.components(c)
            .iter()
            .zip(h)
            .zip(&self.raw.cyclic_orders)
            .map(|((&x, &y), &d)| (x as u64 * y as u64 % d as u64) * (l / d as u64))
            .sum::<u64>()
            .rem_euclid(l) as u32
    }

    /// Exponent of `λ_c`, the scalar by which `gⁿ` acts on `V_c`.
    pub fn lambda(&self, c: CharacterIndex) -> u32 {
        self.value(c, &self.scale_element(&self.raw.g, self.n))
    }

    pub fn in_omega0(&self, c: CharacterIndex) -> bool {
        self.lambda(c) == 0
    }

    pub fn tau(&self, c: CharacterIndex) -> CharacterIndex {
        self.orbits.tau[c.0 as usize]
    }

    /// `τ^t(c)` for any integer `t`.
    pub fn tau_pow(&self, c: CharacterIndex, t: i64) -> CharacterIndex {
        self.character_product(c, self.character_power(self.chi, -t))
    }

    pub fn orbit_rep(&self, c: CharacterIndex) -> CharacterIndex {
        self.orbits.rep[c.0 as usize]
    }

    pub fn generator_element(&self, l: usize) -> Vec<u32> {
        let mut e = vec![0; self.strides.len()];
        e[l] = 1 % self.raw.cyclic_orders[l];
        e
    }

    pub fn g(&self) -> &[u32] {
        &self.raw.g
    }

    fn scale_element(&self, h: &[u32], k: u32) -> Vec<u32> {
        h.iter()
            .zip(&self.raw.cyclic_orders)
            .map(|(&x, &d)| ((x as u64 * k as u64) % d as u64) as u32)
            .collect()
    }

    fn pack(&self, t: &[u32]) -> CharacterIndex {
        CharacterIndex(t.iter().zip(&self.strides).map(|(x, st)| x * st).sum())
    }
}

/// `τ(s)` is the index of `χ^{-1}·ψ_s`; orbits are listed from their smallest member.
pub fn build_orbit_table(d: &Datum) -> OrbitTable {
    let count = d.group_order as usize;
    let chi_inv = d.character_power(d.chi, -1);
    let tau: Vec<CharacterIndex> = d
        .characters()
        .map(|c| d.character_product(chi_inv, c))
        .collect();
    let mut rep = vec![CharacterIndex(u32::MAX); count];
    let mut orbits0 = Vec::new();
    let mut orbits1 = Vec::new();
    for c in d.characters() {
        if rep[c.0 as usize].0 != u32::MAX {
            continue;
        }
        let mut orbit = vec![c];
        let mut next = tau[c.0 as usize];
        while next != c {
            orbit.push(next);
            next = tau[next.0 as usize];
        }
        for &member in &orbit {
            rep[member.0 as usize] = c;
        }
        if d.in_omega0(c) {
            orbits0.push(orbit);
        } else {
            orbits1.push(orbit);
        }
    }
    OrbitTable {
        tau,
        orbits0,
        orbits1,
        rep,
    }
}

impl fmt::Display for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G = {}, chi = ({}), g = ({}), n = {}, r = {}",
            self.raw
                .cyclic_orders
                .iter()
                .map(|d| format!("Z/{d}"))
                .collect::<Vec<_>>()
                .join(" x "),
            self.raw
                .chi
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.raw
                .g
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.n,
            self.r
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(i: u32) -> CharacterIndex {
        CharacterIndex(i)
    }

    #[test]
    fn radford_2_2_validates() {
        let d = Datum::radford(2, 2).unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.r(), 2);
        assert_eq!(d.group_order(), 4);
        assert_eq!(d.hopf_dimension(), 8);
        assert_eq!(d.omega0(), &[idx(0), idx(2)]);
        assert_eq!(d.omega1(), &[idx(1), idx(3)]);
    }

    #[test]
    fn nilpotent_and_degenerate_data_are_rejected() {
        let nil = GroupDatum {
            cyclic_orders: vec![2],
            chi: vec![1],
            g: vec![1],
        };
        assert_eq!(validate_datum(&nil), Err(Error::NilpotentType));
        let degenerate = GroupDatum {
            cyclic_orders: vec![4],
            chi: vec![0],
            g: vec![1],
        };
        assert_eq!(validate_datum(&degenerate), Err(Error::DegenerateOrder(1)));
        let arity = GroupDatum {
            cyclic_orders: vec![4, 2],
            chi: vec![1],
            g: vec![1, 0],
        };
        assert!(matches!(
            validate_datum(&arity),
            Err(Error::MalformedTuple(_))
        ));
        let unreduced = GroupDatum {
            cyclic_orders: vec![4],
            chi: vec![6],
            g: vec![1],
        };
        assert!(matches!(
            validate_datum(&unreduced),
            Err(Error::MalformedTuple(_))
        ));
        assert!(matches!(
            GroupDatum::radford(1, 3),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn chi_of_wrong_order_is_rejected() {
        // Z/2 x Z/6, g = (0,1), chi = (1,2): chi(g) has order 3 but chi^3 = (1,0).
        let d = GroupDatum {
            cyclic_orders: vec![2, 6],
            chi: vec![1, 2],
            g: vec![0, 1],
        };
        assert_eq!(validate_datum(&d), Err(Error::CharacterOrder { n: 3 }));
    }

    #[test]
    fn radford_orbits() {
        let d = Datum::radford(2, 2).unwrap();
        let t = d.orbit_table();
        assert_eq!(t.tau, vec![idx(2), idx(3), idx(0), idx(1)]);
        assert_eq!(t.orbits0, vec![vec![idx(0), idx(2)]]);
        assert_eq!(t.orbits1, vec![vec![idx(1), idx(3)]]);

        let d = Datum::radford(2, 3).unwrap();
        assert_eq!(d.omega0().len(), 3);
        assert_eq!(d.omega0().len() % 3, 0);
    }

    #[test]
    fn tau_has_order_n() {
        for (m, n) in [(3, 3), (2, 4), (3, 2)] {
            let d = Datum::radford(m, n).unwrap();
            for c in d.characters() {
                let mut x = c;
                for step in 1..=n {
                    x = d.tau(x);
                    assert_eq!(x == c, step == n, "tau^{step}({c:?})");
                }
                assert_eq!(d.lambda(d.tau(c)), d.lambda(c));
                assert_eq!(d.tau_pow(c, 1), d.tau(c));
                assert_eq!(d.tau_pow(d.tau_pow(c, -1), 1), c);
            }
        }
    }

    #[test]
    fn dual_character_is_an_involution() {
        let d = Datum::radford(2, 2).unwrap();
        assert_eq!(
            d.dual_character(CharacterIndex::TRIVIAL),
            CharacterIndex::TRIVIAL
        );
        assert_eq!(d.dual_character(idx(1)), idx(3));
        let d = Datum::radford(3, 2).unwrap();
        for c in d.characters() {
            assert_eq!(d.dual_character(d.dual_character(c)), c);
            assert_eq!(d.in_omega0(d.dual_character(c)), d.in_omega0(c));
        }
    }

    #[test]
    fn non_cyclic_datum() {
        let d = Datum::new(GroupDatum {
            cyclic_orders: vec![2, 4],
            chi: vec![1, 2],
            g: vec![0, 1],
        })
        .unwrap();
        assert_eq!((d.n(), d.r()), (2, 2));
        assert_eq!(d.omega0().len(), 4);
        assert_eq!(d.orbit_table().orbits0.len(), 2);
        assert_eq!(d.orbit_table().orbits1.len(), 2);
        assert_eq!(d.format_character(d.index_of(&[1, 3]).unwrap()), "1,3");
        // tau(c) = c - chi
        assert_eq!(d.components(d.tau(CharacterIndex::TRIVIAL)), vec![1, 2]);
    }

    #[test]
    fn datum_file_shorthand() {
        let d = GroupDatum::from_json(r#"{"radford": {"m": 3, "n": 2}}"#).unwrap();
        assert_eq!(
            d,
            GroupDatum {
                cyclic_orders: vec![6],
                chi: vec![3],
                g: vec![1]
            }
        );
        let d = GroupDatum::from_json(r#"{"cyclic_orders": [2, 4], "chi": [1, 2], "g": [0, 1]}"#)
            .unwrap();
        assert_eq!(d.cyclic_orders, vec![2, 4]);
        assert!(GroupDatum::from_json("{}").is_err());
    }
}

//! The Jacobson radical of the Green ring as the kernel of the Cartan map, its
//! principal generator `(1−a)M[n,0]`, and a bounded search for idempotents.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::datum::CharacterIndex;
use crate::error::Result;
use crate::green_ring::{GreenRing, RingElement};
use crate::grothendieck::{
    cartan_matrix, kernel_of_phi, projective_basis_grouped, projective_gram, projective_lattice,
    GrothendieckRing,
};
use crate::lattice::Lattice;
use crate::ring::CommutativeRing;

/// `ker(φ|_𝒫)` in Green ring coordinates.
pub fn radical_lattice(ring: &GreenRing) -> Result<Lattice> {
    let g0 = GrothendieckRing::of(ring);
    let columns = projective_basis_grouped(ring.datum());
    let kernel = Lattice::kernel_of(&cartan_matrix(&g0).entries);
    let gens = kernel
        .basis()
        .iter()
        .map(|w| {
            let x = RingElement::from_terms(columns.iter().copied().zip(w.iter().cloned()));
            ring.coordinates(&x)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Lattice::from_generators(ring.rank(), gens))
}

/// `ker φ ∩ 𝒫`, computed as a lattice intersection.
pub fn radical_by_intersection(ring: &GreenRing) -> Result<Lattice> {
    let g0 = GrothendieckRing::of(ring);
    Ok(kernel_of_phi(ring, &g0)?.intersect(&projective_lattice(ring)))
}

/// `(1−a)·M[n,0]`.
pub fn principal_generator(ring: &GreenRing) -> Result<RingElement> {
    let m = ring.m(ring.datum().n(), CharacterIndex::TRIVIAL)?;
    ring.multiply(&(&ring.unit() - &ring.a()), &m)
}

/// The ideal generated by `(1−a)M[n,0]`, spanned by its products with the basis.
pub fn principal_ideal(ring: &GreenRing) -> Result<Lattice> {
    let generator = principal_generator(ring)?;
    let gens = ring
        .basis()
        .iter()
        .map(|b| ring.coordinates(&ring.multiply(&generator, &ring.label(*b))?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Lattice::from_generators(ring.rank(), gens))
}

#[derive(Debug, Clone, Serialize)]
pub struct PrincipalWitness {
    pub holds: bool,
    pub generator: String,
    pub ideal_basis: Vec<String>,
}

pub fn principal_generator_check(ring: &GreenRing) -> Result<PrincipalWitness> {
    let ideal = principal_ideal(ring)?;
    Ok(PrincipalWitness {
        holds: ideal == radical_lattice(ring)?,
        generator: ring.format(&principal_generator(ring)?),
        ideal_basis: ideal
            .basis()
            .iter()
            .map(|v| ring.format(&ring.from_coordinates(v)))
            .collect(),
    })
}

/// `M[n,0](1−a) = −δ_{[k]}·Σ_{k=1}^{n−1}(M[1,0]+⋯+M[k,0])·a^{n−1−k}·(1−a)`.
pub fn radical_generator_identity_holds(ring: &GreenRing) -> Result<bool> {
    let n = ring.datum().n();
    let one_minus_a = &ring.unit() - &ring.a();
    let mut partial = RingElement::zero();
    let mut sum = RingElement::zero();
    for k in 1..n {
        partial += &ring.m(k, CharacterIndex::TRIVIAL)?;
        let a_power = ring.pow(&ring.a(), n - 1 - k);
        sum += &ring.multiply(&partial, &a_power)?;
    }
    let rhs = -ring.multiply(&ring.multiply(&ring.delta_unit(), &sum)?, &one_minus_a)?;
    Ok(principal_generator(ring)? == rhs)
}

pub fn is_idempotent(ring: &GreenRing, x: &RingElement) -> Result<bool> {
    Ok(ring.multiply(x, x)? == *x)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdempotentSearch {
    pub coefficient_bound: u32,
    pub max_support: usize,
    pub candidates_examined: u64,
    pub idempotents: Vec<String>,
    pub nontrivial: Vec<String>,
}

impl IdempotentSearch {
    pub fn passed(&self) -> bool {
        self.nontrivial.is_empty()
    }
}

/// Exhaustive search over elements with coefficients in `[-bound, bound]` and
/// at most `max_support` basis labels. Evidence only: it cannot rule out
/// idempotents outside the box.
pub fn idempotent_search(ring: &GreenRing, bound: u32, max_support: usize) -> IdempotentSearch {
    let rank = ring.rank();
    let coeffs: Vec<i64> = (-(bound as i64)..=bound as i64)
        .filter(|&c| c != 0)
        .collect();
    let supports = subsets(rank, max_support);
    let (examined, mut found) = supports
        .par_iter()
        .map(|support| {
            let mut examined = 0u64;
            let mut found = Vec::new();
            let mut choice = vec![0usize; support.len()];
            loop {
                let x = RingElement::from_terms(
                    support
                        .iter()
                        .zip(&choice)
                        .map(|(&p, &c)| (ring.basis()[p], BigInt::from(coeffs[c]))),
                );
                examined += 1;
                if ring.multiply(&x, &x).expect("basis elements") == x {
                    found.push(x);
                }
                if !advance(&mut choice, coeffs.len()) {
                    break;
                }
            }
            (examined, found)
        })
        .reduce(
            || (0, Vec::new()),
            |(e1, mut f1), (e2, f2)| {
                f1.extend(f2);
                (e1 + e2, f1)
            },
        );
    found.sort_by_cached_key(|x| ring.coordinates(x).expect("basis elements"));
    let trivial = |x: &RingElement| x.is_zero() || *x == ring.unit();
    IdempotentSearch {
        coefficient_bound: bound,
        max_support,
        candidates_examined: examined,
        nontrivial: found
            .iter()
            .filter(|x| !trivial(x))
            .map(|x| ring.format(x))
            .collect(),
        idempotents: found.iter().map(|x| ring.format(x)).collect(),
    }
}

/// All subsets of `0..n` of size at most `k`, including the empty one.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l: &usize| l + 1);
            for i in start..n {
                let mut t = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn advance(choice: &mut [usize], radix: usize) -> bool {
    for c in choice.iter_mut() {
        *c += 1;
        if *c < radix {
            return true;
        }
        *c = 0;
    }
    false
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    pub rank: usize,
    pub expected_rank: usize,
    pub basis: Vec<String>,
    pub generator: PrincipalWitness,
    pub generator_squares_to_zero: bool,
    pub intersection_agrees: bool,
    pub basis_squares_to_zero: bool,
    pub orthogonal_to_projectives: bool,
}

impl RadicalReport {
    pub fn passed(&self) -> bool {
        self.rank == self.expected_rank
            && self.generator.holds
            && self.generator_squares_to_zero
            && self.intersection_agrees
            && self.basis_squares_to_zero
            && self.orthogonal_to_projectives
    }
}

pub fn radical_report(ring: &GreenRing) -> Result<RadicalReport> {
    let d = ring.datum();
    let radical = radical_lattice(ring)?;
    let elements: Vec<RingElement> = radical
        .basis()
        .iter()
        .map(|v| ring.from_coordinates(v))
        .collect();
    let generator = principal_generator(ring)?;
    let gram = projective_gram(ring)?;
    let mut basis_squares_to_zero = true;
    for x in &elements {
        basis_squares_to_zero &= ring.multiply(x, x)?.is_zero();
    }
    // pairwise sums exercise mixed terms x·y + y·x as well
    for (i, x) in elements.iter().enumerate() {
        for y in &elements[i + 1..] {
            let s = x + y;
            basis_squares_to_zero &= ring.multiply(&s, &s)?.is_zero();
        }
    }
    let orthogonal_to_projectives = radical
        .basis()
        .iter()
        .all(|v| gram.mul_vec(v).iter().all(Zero::is_zero));
    Ok(RadicalReport {
        rank: radical.rank(),
        expected_rank: (d.n() as usize - 1) * d.orbit_table().orbits0.len(),
        basis: elements.iter().map(|x| ring.format(x)).collect(),
        generator: principal_generator_check(ring)?,
        generator_squares_to_zero: ring.multiply(&generator, &generator)?.is_zero(),
        intersection_agrees: radical == radical_by_intersection(ring)?,
        basis_squares_to_zero,
        orthogonal_to_projectives,
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
    fn radford_2_2_radical() {
        let r = ring(2, 2);
        let l = radical_lattice(&r).unwrap();
        assert_eq!(l.rank(), 1);
        let x = r.from_coordinates(&l.basis()[0]);
        assert_eq!(r.format(&x), "M(2,0) - M(2,2)");
        let w = principal_generator_check(&r).unwrap();
        assert!(w.holds);
        assert_eq!(w.generator, "M(2,0) - M(2,2)");
    }

    #[test]
    fn radical_ranks() {
        assert_eq!(radical_lattice(&ring(2, 3)).unwrap().rank(), 2);
        assert_eq!(radical_lattice(&ring(3, 3)).unwrap().rank(), 2);
    }

    #[test]
    fn reports_pass() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
            let rep = radical_report(&ring(m, n)).unwrap();
            assert!(rep.passed(), "({m},{n}): {rep:?}");
        }
    }

    #[test]
    fn generator_through_delta() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
            assert!(radical_generator_identity_holds(&ring(m, n)).unwrap());
        }
    }

    #[test]
    fn idempotent_predicate() {
        let r = ring(2, 2);
        assert!(is_idempotent(&r, &RingElement::zero()).unwrap());
        assert!(is_idempotent(&r, &r.unit()).unwrap());
        assert!(!is_idempotent(&r, &r.a()).unwrap());
    }

    #[test]
    fn bounded_search_radford_2_2() {
        let s = idempotent_search(&ring(2, 2), 1, 3);
        assert_eq!(s.idempotents, ["0", "M(1,0)"]);
        assert!(s.passed());
        // 1 + 5·2 + 10·4 + 10·8
        assert_eq!(s.candidates_examined, 131);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 1 + 4 + 6);
        assert_eq!(subsets(3, 3).len(), 8);
    }
}

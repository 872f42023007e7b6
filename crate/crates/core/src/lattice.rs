//! Integer matrices and sublattices of `ℤ^N` in row Hermite normal form.
//!
//! HNF convention: nonzero rows only, strictly increasing pivot columns,
//! positive pivots, entries above a pivot reduced into `[0, pivot)`. Two
//! lattices are equal exactly when their HNF bases are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<BigInt>>) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged column {j}");
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> IntMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        IntMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        hermite_normal_form(self.rows(), self.cols).len()
    }

    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.rows()
            .into_iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_i64().expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Row echelon reduction of the first `pivot_limit` columns; returns the
/// number of pivots. Rows past that count are zero on those columns.
fn echelonize(rows: &mut [Vec<BigInt>], pivot_limit: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..pivot_limit {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            let best = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut clean = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                let (head, tail) = rows.split_at_mut(r);
                axpy(&mut tail[0], &q, &head[pivot_row]);
                if !rows[r][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                if rows[pivot_row][col].is_negative() {
                    rows[pivot_row].iter_mut().for_each(|x| *x = -&*x);
                }
                for r in 0..pivot_row {
                    let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                    if !q.is_zero() {
                        let (head, tail) = rows.split_at_mut(pivot_row);
                        axpy(&mut head[r], &q, &tail[0]);
                    }
                }
                pivot_row += 1;
                break;
            }
        }
    }
    pivot_row
}

/// `target -= q * source`
fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Row HNF of the lattice spanned by `rows` (each of length `width`).
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>, width: usize) -> Vec<Vec<BigInt>> {
    debug_assert!(rows.iter().all(|r| r.len() == width));
    let pivots = echelonize(&mut rows, width);
    rows.truncate(pivots);
    rows
}

/// A sublattice of `ℤ^ambient`, stored by its HNF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn from_generators(ambient: usize, generators: Vec<Vec<BigInt>>) -> Lattice {
        Lattice {
            ambient,
            basis: hermite_normal_form(generators, ambient),
        }
    }

    pub fn zero(ambient: usize) -> Lattice {
        Lattice {
            ambient,
            basis: Vec::new(),
        }
    }

    /// The sublattice spanned by the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Lattice {
        let gens = axes
            .into_iter()
            .map(|a| {
                let mut v = vec![BigInt::zero(); ambient];
                v[a] = BigInt::from(1);
                v
            })
            .collect();
        Lattice::from_generators(ambient, gens)
    }

    pub fn full(ambient: usize) -> Lattice {
        Lattice::coordinate(ambient, 0..ambient)
    }

    /// `{x ∈ ℤ^cols : A·x = 0}`.
    pub fn kernel_of(a: &IntMatrix) -> Lattice {
        let (m, n) = (a.nrows(), a.ncols());
        // rows [Aᵀ e_b | e_b]; unimodular row operations keep the right block
        // an exact record of the combination taken.
        let mut rows: Vec<Vec<BigInt>> = (0..n)
            .map(|b| {
                let mut row: Vec<BigInt> = (0..m).map(|i| a.get(i, b).clone()).collect();
                row.extend((0..n).map(|c| BigInt::from((c == b) as i32)));
                row
            })
            .collect();
        let pivots = echelonize(&mut rows, m);
        let gens = rows[pivots..].iter().map(|r| r[m..].to_vec()).collect();
        Lattice::from_generators(n, gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rest = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero HNF row");
            if rest[..pivot].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = rest[pivot].div_rem(&row[pivot]);
            if !r.is_zero() {
                return false;
            }
            axpy(&mut rest, &q, row);
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Lattice::from_generators(self.ambient, gens)
    }

    /// `L₁ ∩ L₂` from the integer relations `u·B₁ = v·B₂` between the two bases.
    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        let r1 = self.rank();
        let stacked: Vec<Vec<BigInt>> = self.basis.iter().chain(&other.basis).cloned().collect();
        if stacked.is_empty() {
            return Lattice::zero(self.ambient);
        }
        let relations =
            Lattice::kernel_of(&IntMatrix::from_rows(self.ambient, stacked).transpose());
        let gens = relations
            .basis
            .iter()
            .map(|w| {
                let mut v = vec![BigInt::zero(); self.ambient];
                for (c, row) in w[..r1].iter().zip(&self.basis) {
                    axpy(&mut v, &-c, row);
                }
                v
            })
            .collect();
        Lattice::from_generators(self.ambient, gens)
    }

    /// Index `[ℤ^N : L]` when the lattice has full rank.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient).then(|| {
            self.basis
                .iter()
                .enumerate()
                .map(|(i, r)| r[i].clone())
                .product()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn hnf_small() {
        let h = hermite_normal_form(big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]), 3);
        // the lattice has index |det| = 624
        let l = Lattice {
            ambient: 3,
            basis: h.clone(),
        };
        assert_eq!(l.index(), Some(BigInt::from(624)));
        for (i, row) in h.iter().enumerate() {
            assert!(row[i] > BigInt::zero());
            for above in &h[..i] {
                assert!(above[i] >= BigInt::zero() && above[i] < row[i]);
            }
        }
    }

    #[test]
    fn cartan_kernel() {
        let a = IntMatrix::from_i64(&[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        let k = Lattice::kernel_of(&a);
        assert_eq!(k.basis(), &big(&[vec![1, -1, 0]])[..]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn intersection() {
        let l1 = Lattice::from_generators(2, big(&[vec![2, 0], vec![0, 1]]));
        let l2 = Lattice::from_generators(2, big(&[vec![1, 0], vec![0, 3]]));
        assert_eq!(
            l1.intersect(&l2),
            Lattice::from_generators(2, big(&[vec![2, 0], vec![0, 3]]))
        );
        let l3 = Lattice::from_generators(2, big(&[vec![1, 1]]));
        assert_eq!(
            l1.intersect(&l3),
            Lattice::from_generators(2, big(&[vec![2, 2]]))
        );
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..7, c), r)
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(rows in small_matrix()) {
            let a = IntMatrix::from_i64(&rows);
            let k = Lattice::kernel_of(&a);
            prop_assert_eq!(k.rank() + a.rank(), a.ncols());
            for v in k.basis() {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn hnf_is_canonical(rows in small_matrix(), shuffle in any::<u64>()) {
            let width = rows[0].len();
            let l = Lattice::from_generators(width, big(&rows));
            let mut permuted = big(&rows);
            let len = permuted.len();
            permuted.rotate_left((shuffle as usize) % len);
            // add a row combination; the span is unchanged
            let extra: Vec<BigInt> = permuted[0].iter().zip(&permuted[len - 1]).map(|(a, b)| a * 3 - b).collect();
            permuted.push(extra);
            prop_assert_eq!(Lattice::from_generators(width, permuted), l.clone());
            for v in big(&rows) {
                prop_assert!(l.contains(&v));
            }
        }
    }
}

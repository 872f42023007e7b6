//! Exact arithmetic in the cyclotomic field `ℚ(ω_L)` and dense matrices over it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of `Φ_L`, lowest degree first.
pub fn cyclotomic_polynomial(order: u32) -> Vec<BigInt> {
    assert!(order >= 1);
    // x^L − 1 divided by Φ_d for every proper divisor d of L
    let mut p: Vec<BigInt> = vec![BigInt::zero(); order as usize + 1];
    p[0] = BigInt::from(-1);
    p[order as usize] = BigInt::one();
    for d in (1..order).filter(|d| order.is_multiple_of(*d)) {
        p = exact_divide(&p, &cyclotomic_polynomial(d));
    }
    p
}

/// Quotient of integer polynomials when the divisor is monic and divides exactly.
fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "monic divisor");
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division is exact");
    q
}

/// An element of `ℚ(ω_L)`, reduced modulo `Φ_L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycNumber {
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }
}

#[derive(Debug, Clone)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<BigInt>,
    powers: Vec<CycNumber>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> CyclotomicField {
        let modulus = cyclotomic_polynomial(order);
        let mut field = CyclotomicField {
            order,
            modulus,
            powers: Vec::new(),
        };
        let deg = field.degree();
        let mut current = field.one();
        let mut x = field.zero();
        if deg > 1 {
            x.coeffs[1] = BigRational::one();
        } else {
            // degree one: ω is the rational root of Φ_L
            x.coeffs[0] = BigRational::from_integer(-field.modulus[0].clone());
        }
        for _ in 0..order {
            field.powers.push(current.clone());
            current = field.mul(&current, &x);
        }
        field
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber {
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycNumber {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, q: BigRational) -> CycNumber {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(&self, k: i64) -> CycNumber {
        self.from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// `ω^k`.
    pub fn root(&self, k: i64) -> CycNumber {
        self.powers[k.rem_euclid(self.order as i64) as usize].clone()
    }

    /// `k` with `a = ω^k`, if `a` is a root of unity of order dividing `L`.
    pub fn root_exponent(&self, a: &CycNumber) -> Option<u32> {
        self.powers.iter().position(|p| p == a).map(|k| k as u32)
    }

    pub fn add(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycNumber {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycNumber {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &CycNumber) -> CycNumber {
        CycNumber {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, a: &CycNumber, q: &BigRational) -> CycNumber {
        CycNumber {
            coeffs: a.coeffs.iter().map(|x| x * q).collect(),
        }
    }

    pub fn mul(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        if let Some(q) = a.as_rational() {
            return self.scale(b, q);
        }
        if let Some(q) = b.as_rational() {
            return self.scale(a, q);
        }
        let deg = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                prod[i + j] += x * y;
            }
        }
        for i in (deg..prod.len()).rev() {
            let c = std::mem::take(&mut prod[i]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus[..deg].iter().enumerate() {
                prod[i - deg + j] -= &c * m;
            }
        }
        prod.truncate(deg);
        CycNumber { coeffs: prod }
    }

    /// Multiplicative inverse, by solving `a·b = 1` in the power basis.
    pub fn inv(&self, a: &CycNumber) -> Option<CycNumber> {
        if let Some(q) = a.as_rational() {
            return (!q.is_zero()).then(|| self.from_rational(q.recip()));
        }
        let deg = self.degree();
        // columns a·x^j; augmented with e_0
        let mut rows: Vec<Vec<BigRational>> = vec![Vec::with_capacity(deg + 1); deg];
        let mut col = a.clone();
        let x = if deg > 1 {
            self.powers[1].clone()
        } else {
            self.one()
        };
        for _ in 0..deg {
            for (r, c) in rows.iter_mut().zip(&col.coeffs) {
                r.push(c.clone());
            }
            col = self.mul(&col, &x);
        }
        for (i, r) in rows.iter_mut().enumerate() {
            r.push(if i == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        for c in 0..deg {
            let p = (c..deg).find(|&r| !rows[r][c].is_zero())?;
            rows.swap(c, p);
            let pivot = rows[c][c].clone();
            for v in rows[c].iter_mut() {
                *v /= &pivot;
            }
            let pivot_row = rows[c].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (v, p) in row.iter_mut().zip(&pivot_row) {
                        *v -= &f * p;
                    }
                }
            }
        }
        Some(CycNumber {
            coeffs: rows.into_iter().map(|r| r[deg].clone()).collect(),
        })
    }

    pub fn format(&self, a: &CycNumber) -> String {
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("({c})w"),
                _ => format!("({c})w^{k}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Dense matrix over a cyclotomic field; products skip zero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

impl CycMatrix {
    pub fn zeros(f: &CyclotomicField, rows: usize, cols: usize) -> CycMatrix {
        CycMatrix {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn identity(f: &CyclotomicField, size: usize) -> CycMatrix {
        let mut m = CycMatrix::zeros(f, size, size);
        for i in 0..size {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn diagonal(f: &CyclotomicField, entries: Vec<CycNumber>) -> CycMatrix {
        let mut m = CycMatrix::zeros(f, entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycNumber) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNumber::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn mul(&self, f: &CyclotomicField, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = CycMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let next = f.add(cur, &f.mul(a, b));
                    out.set(i, j, next);
                }
            }
        }
        out
    }

    pub fn add(&self, f: &CyclotomicField, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, f: &CyclotomicField, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, f: &CyclotomicField, c: &CycNumber) -> CycMatrix {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, f: &CyclotomicField, e: u32) -> CycMatrix {
        (0..e).fold(CycMatrix::identity(f, self.rows), |acc, _| acc.mul(f, self))
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        CycMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, f: &CyclotomicField, other: &CycMatrix) -> CycMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = CycMatrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> CycMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        CycMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Inverse of a diagonal matrix with non-zero diagonal.
    pub fn diagonal_inverse(&self, f: &CyclotomicField) -> Option<CycMatrix> {
        if !self.is_diagonal() {
            return None;
        }
        let entries = (0..self.rows)
            .map(|i| f.inv(self.get(i, i)))
            .collect::<Option<Vec<_>>>()?;
        Some(CycMatrix::diagonal(f, entries))
    }

    /// Exact rank by Gaussian elimination over the field.
    pub fn rank(&self, f: &CyclotomicField) -> usize {
        let mut rows: Vec<Vec<CycNumber>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = f.inv(&rows[rank][c]).expect("non-zero pivot is invertible");
            let pivot_row: Vec<CycNumber> = rows[rank].iter().map(|x| f.mul(x, &inv)).collect();
            for row in rows.iter_mut().skip(rank + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        *v = f.sub(v, &f.mul(&factor, p));
                    }
                }
            }
            rows[rank] = pivot_row;
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity() {
        for order in [2, 3, 4, 6, 8, 9, 12] {
            let f = CyclotomicField::new(order);
            assert_eq!(f.root(order as i64), f.one());
            for k in 1..order {
                assert_ne!(f.root(k as i64), f.one(), "order {order}, k {k}");
                assert_eq!(f.root_exponent(&f.root(k as i64)), Some(k));
            }
            let sum = (0..order).fold(f.zero(), |acc, k| f.add(&acc, &f.root(k as i64)));
            assert!(sum.is_zero());
        }
        let f = CyclotomicField::new(2);
        assert_eq!(f.root(1), f.from_int(-1));
    }

    #[test]
    fn rank_over_the_field() {
        let f = CyclotomicField::new(4);
        let i = f.root(1);
        let mut m = CycMatrix::zeros(&f, 2, 2);
        // [[1, i], [i, -1]] is singular
        m.set(0, 0, f.one());
        m.set(0, 1, i.clone());
        m.set(1, 0, i.clone());
        m.set(1, 1, f.from_int(-1));
        assert_eq!(m.rank(&f), 1);
        m.set(1, 1, f.one());
        assert_eq!(m.rank(&f), 2);
    }

    proptest! {
        #[test]
        fn inverse_is_inverse(order in prop::sample::select(vec![3u32, 5, 8, 9, 12]),
                              coeffs in prop::collection::vec(-5i64..=5, 12)) {
            let f = CyclotomicField::new(order);
            let a = (0..f.degree()).fold(f.zero(), |acc, k| {
                f.add(&acc, &f.mul(&f.from_int(coeffs[k]), &f.root(k as i64)))
            });
            prop_assume!(!a.is_zero());
            let b = f.inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &b), f.one());
        }

        #[test]
        fn multiplication_matches_exponents(order in 2u32..=12, j in 0i64..24, k in 0i64..24) {
            let f = CyclotomicField::new(order);
            prop_assert_eq!(f.mul(&f.root(j), &f.root(k)), f.root(j + k));
        }
    }
}

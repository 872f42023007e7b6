use num_bigint::BigInt;

/// Minimal commutative ring interface used to evaluate integer polynomials
/// (Dickson polynomials, presentation relations) in different rings.
pub trait CommutativeRing {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: &BigInt) -> Self::Elem;

    fn from_int(&self, k: &BigInt) -> Self::Elem {
        self.scale(&self.one(), k)
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The reals in double precision.
#[derive(Debug, Clone, Copy, Default)]
pub struct Reals;

impl CommutativeRing for Reals {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn scale(&self, a: &f64, k: &BigInt) -> f64 {
        use num_traits::ToPrimitive;
        a * k.to_f64().unwrap_or(f64::NAN)
    }
}

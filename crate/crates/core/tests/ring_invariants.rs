mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use greenring::grothendieck::GrothendieckRing;
use greenring::stable::StableRing;
use greenring::{CommutativeRing, Datum, GreenRing, RingElement};

fn ring(m: u32, n: u32) -> GreenRing {
    GreenRing::new(Datum::radford(m, n).unwrap())
}

fn element(ring: &GreenRing, coeffs: &[i32]) -> RingElement {
    let v: Vec<BigInt> = (0..ring.rank())
        .map(|i| BigInt::from(coeffs[i % coeffs.len()]))
        .collect();
    ring.from_coordinates(&v)
}

fn params() -> impl Strategy<Value = (u32, u32)> {
    prop::sample::select(common::RADFORD.to_vec())
}

fn coeffs() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-2i32..=2, 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_commutative((m, n) in params(), x in coeffs(), y in coeffs(), z in coeffs()) {
        let r = ring(m, n);
        let (x, y, z) = (element(&r, &x), element(&r, &y), element(&r, &z));
        prop_assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
        prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
    }

    #[test]
    fn distributes_over_addition((m, n) in params(), x in coeffs(), y in coeffs(), z in coeffs()) {
        let r = ring(m, n);
        let (x, y, z) = (element(&r, &x), element(&r, &y), element(&r, &z));
        prop_assert_eq!(r.mul(&x, &(&y + &z)), &r.mul(&x, &y) + &r.mul(&x, &z));
    }

    #[test]
    fn duality_is_a_ring_involution((m, n) in params(), x in coeffs(), y in coeffs()) {
        let r = ring(m, n);
        let (x, y) = (element(&r, &x), element(&r, &y));
        let dx = r.dualize(&x).unwrap();
        prop_assert_eq!(r.dualize(&dx).unwrap(), x.clone());
        prop_assert_eq!(r.dualize(&r.mul(&x, &y)).unwrap(), r.mul(&dx, &r.dualize(&y).unwrap()));
    }

    #[test]
    fn dimension_is_a_ring_map((m, n) in params(), x in coeffs(), y in coeffs()) {
        let r = ring(m, n);
        let (x, y) = (element(&r, &x), element(&r, &y));
        prop_assert_eq!(r.dimension(&r.mul(&x, &y)), r.dimension(&x) * r.dimension(&y));
    }

    #[test]
    fn form_is_symmetric_and_invariant((m, n) in params(), x in coeffs(), y in coeffs(), z in coeffs()) {
        let r = ring(m, n);
        let (x, y, z) = (element(&r, &x), element(&r, &y), element(&r, &z));
        prop_assert_eq!(r.bilinear_form(&x, &y).unwrap(), r.bilinear_form(&y, &x).unwrap());
        let lhs = r.bilinear_form(&r.mul(&x, &y), &z).unwrap();
        prop_assert_eq!(lhs, r.bilinear_form(&x, &r.mul(&y, &z)).unwrap());
    }

    #[test]
    fn phi_is_multiplicative((m, n) in params(), x in coeffs(), y in coeffs()) {
        let r = ring(m, n);
        let g0 = GrothendieckRing::of(&r);
        let (x, y) = (element(&r, &x), element(&r, &y));
        let lhs = g0.phi(&r.mul(&x, &y)).unwrap();
        let rhs = g0.g0_multiply(&g0.phi(&x).unwrap(), &g0.phi(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projectives_form_an_ideal((m, n) in params(), x in coeffs(), k in 0usize..64) {
        let r = ring(m, n);
        let x = element(&r, &x);
        let proj = r.projective_basis();
        let p = r.label(proj[k % proj.len()]);
        prop_assert!(r.is_projective_element(&r.mul(&x, &p)));
    }

    #[test]
    fn stable_projection_is_multiplicative((m, n) in params(), x in coeffs(), y in coeffs()) {
        let r = ring(m, n);
        let st = StableRing::new(&r);
        let (x, y) = (element(&r, &x), element(&r, &y));
        let lhs = st.project(&r.mul(&x, &y));
        let rhs = st.multiply(&st.project(&x), &st.project(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn non_cyclic_data_validate_non_nilpotent() {
    for (name, d) in common::test_data() {
        assert!(
            d.omega0().len() < d.group_order() as usize,
            "{name}: Omega_1 empty"
        );
        assert_eq!(d.omega0().len() % d.n() as usize, 0, "{name}");
        assert_eq!(d.omega1().len() % d.n() as usize, 0, "{name}");
    }
}

#[test]
fn rank_matches_orbit_count() {
    for (name, d) in common::test_data() {
        let (n, z, o) = (d.n() as usize, d.omega0().len(), d.omega1().len());
        let ring = GreenRing::new(d);
        assert_eq!(ring.rank(), n * z + o / n, "{name}");
        assert_eq!(GrothendieckRing::of(&ring).rank(), z + o / n, "{name}");
    }
}

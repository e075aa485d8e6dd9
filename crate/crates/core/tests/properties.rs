mod common;

use common::*;
use proptest::prelude::*;
use quivergrass::ar::{extension_module, tau_dropping_projectives, tau_minus_dropping_injectives};
use quivergrass::field::first_primes;
use quivergrass::grassmannian::{budget_from_env, count_subreps, stratify};
use quivergrass::rep::{ext1_dim, hom_dim};
use quivergrass::{
    fit_polynomial, DimVector, ExactMatrix, IntPolynomial, LaurentCharacter, Quiver,
};
use rand::Rng;
use std::sync::Arc;

fn small_quivers() -> Vec<Arc<Quiver>> {
    vec![a3_linear(), a3_sink(), d4(), kronecker(), a2_tilde()]
}

fn random_cocycle(
    q: &Quiver,
    x: &quivergrass::Representation,
    s: &quivergrass::Representation,
    seed: u64,
) -> Vec<ExactMatrix> {
    let mut g = rng(seed);
    let f = x.field();
    let p = f.order().unwrap() as i64;
    q.arrows()
        .iter()
        .map(|a| {
            let (r, c) = (x.dim(a.target), s.dim(a.source));
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| g.gen_range(0..p)).collect())
                .collect();
            ExactMatrix::from_i64(f, r, c, &rows).unwrap()
        })
        .collect()
}

fn laurent(terms: &[(i8, i8, i8, i8, i8)]) -> LaurentCharacter {
    let mut out = LaurentCharacter::zero();
    for &(y1, y2, x1, x2, c) in terms {
        out.add_term(
            vec![y1 as i64, y2 as i64],
            vec![x1 as i64, x2 as i64],
            c as i128,
        );
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn strata_partition_the_grassmannian(qi in 0usize..5, seed in any::<u64>()) {
        let q = &small_quivers()[qi];
        let f = field(2);
        let mut g = rng(seed);
        let x = random_rep(q, f, 1, &mut g);
        let s = random_rep(q, f, 1, &mut g);
        let ext = extension_module(&x, &s, random_cocycle(q, &x, &s, seed)).unwrap();
        for e in ext.middle.dims().sub_vectors() {
            let total: u128 = stratify(&ext, &e, budget_from_env()).unwrap().values().sum();
            prop_assert_eq!(total, count_subreps(&ext.middle, &e, budget_from_env()).unwrap());
        }
    }

    #[test]
    fn duality_preserves_counts(qi in 0usize..5, seed in any::<u64>()) {
        let q = &small_quivers()[qi];
        let m = random_rep(q, field(3), 2, &mut rng(seed));
        let dual = m.dual();
        for e in m.dims().sub_vectors() {
            let rest = m.dims() - &e;
            prop_assert_eq!(
                count_subreps(&m, &e, budget_from_env()).unwrap(),
                count_subreps(&dual, &rest, budget_from_env()).unwrap()
            );
        }
    }

    #[test]
    fn hom_and_ext_are_additive(qi in 0usize..5, seed in any::<u64>()) {
        let q = &small_quivers()[qi];
        let f = field(5);
        let mut g = rng(seed);
        let (a, b, c) = (random_rep(q, f, 2, &mut g), random_rep(q, f, 2, &mut g), random_rep(q, f, 2, &mut g));
        let ab = a.direct_sum(&b).unwrap();
        prop_assert_eq!(hom_dim(&ab, &c).unwrap(), hom_dim(&a, &c).unwrap() + hom_dim(&b, &c).unwrap());
        prop_assert_eq!(ext1_dim(&c, &ab).unwrap(), ext1_dim(&c, &a).unwrap() + ext1_dim(&c, &b).unwrap());
    }

    #[test]
    fn ar_formula_on_random_modules(qi in 0usize..5, seed in any::<u64>()) {
        let q = &small_quivers()[qi];
        let f = field(7);
        let mut g = rng(seed);
        let (m, n) = (random_rep(q, f, 2, &mut g), random_rep(q, f, 2, &mut g));
        let ext = ext1_dim(&m, &n).unwrap();
        prop_assert_eq!(ext, hom_dim(&n, &tau_dropping_projectives(&m).unwrap()).unwrap());
        prop_assert_eq!(ext, hom_dim(&tau_minus_dropping_injectives(&n).unwrap(), &m).unwrap());
    }

    #[test]
    fn interpolation_recovers_polynomials(coeffs in proptest::collection::vec(-50i128..50, 0..6)) {
        let poly = IntPolynomial::new(coeffs);
        let bound = poly.coeffs().len().max(1) - 1;
        let samples: Vec<(u64, i128)> = first_primes(bound + 2).into_iter().map(|p| (p, poly.eval(p as i128))).collect();
        prop_assert_eq!(fit_polynomial(&samples, bound).unwrap(), poly);
    }

    #[test]
    fn characters_form_a_commutative_ring(
        a in proptest::collection::vec((-2i8..3, -2i8..3, -2i8..3, -2i8..3, -3i8..4), 0..5),
        b in proptest::collection::vec((-2i8..3, -2i8..3, -2i8..3, -2i8..3, -3i8..4), 0..5),
        c in proptest::collection::vec((-2i8..3, -2i8..3, -2i8..3, -2i8..3, -3i8..4), 0..5),
    ) {
        let (a, b, c) = (laurent(&a), laurent(&b), laurent(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a * &b).terms().all(|(_, _, k)| k != 0));
        prop_assert_eq!(LaurentCharacter::from_json_value(a.to_json_value()).unwrap(), a);
    }

    #[test]
    fn sub_vectors_are_exactly_the_bounded_vectors(d in proptest::collection::vec(0i64..3, 1..4)) {
        let d = DimVector(d);
        let subs = d.sub_vectors();
        let expected: usize = d.0.iter().map(|&x| x as usize + 1).product();
        prop_assert_eq!(subs.len(), expected);
        prop_assert!(subs.iter().all(|e| e.is_nonnegative() && e.le(&d)));
    }
}

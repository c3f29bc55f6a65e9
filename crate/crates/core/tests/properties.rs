use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scalerep::gauge::{
    covariant_derivative, link_factor, local_representation, open_path_residual, transport_field, GaugePotential,
    Lattice,
};
use scalerep::structure::{
    add_scaled, compose_scaling, conj_scaled, correspondent, div_scaled, group_identity, group_inv, group_op,
    lt_scaled, map_down, mul_scaled, same_value, sub_scaled, ExternalView,
};
use scalerep::term::sample::TermSampler;
use scalerep::term::{check_equation, eval_base, evaluate, parse_term};
use scalerep::{CRational, ExactStructure, NumberType, Rational, Scalar, StructureHandle};

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=24).prop_map(|(n, d)| Rational::frac(n, d))
}

fn crat() -> impl Strategy<Value = CRational> {
    (rat(), rat()).prop_map(|(re, im)| CRational::new(re, im))
}

fn nonzero_crat() -> impl Strategy<Value = CRational> {
    crat().prop_filter("nonzero", |z| !z.is_zero())
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// A legal scale for each number type, exact Gaussian-rational carrier.
fn structure() -> impl Strategy<Value = ExactStructure> {
    prop_oneof![
        (1i64..=9).prop_map(|n| (NumberType::Natural, CRational::from_int(n))),
        (-9i64..=9)
            .prop_filter("nonzero", |n| *n != 0)
            .prop_map(|n| (NumberType::Integer, CRational::from_int(n))),
        nonzero_rat().prop_map(|r| (NumberType::Rational, CRational::real(r))),
        nonzero_rat().prop_map(|r| (NumberType::Real, CRational::real(r))),
        nonzero_crat().prop_map(|c| (NumberType::Complex, c)),
    ]
    .prop_map(|(t, p)| StructureHandle::new(t, p).unwrap())
}

fn field_structure() -> impl Strategy<Value = ExactStructure> {
    prop_oneof![
        nonzero_rat().prop_map(|r| StructureHandle::new(NumberType::Rational, CRational::real(r)).unwrap()),
        nonzero_crat().prop_map(|c| StructureHandle::new(NumberType::Complex, c).unwrap()),
    ]
}

/// A field structure with a value and a nonzero value of its type.
fn field_values() -> impl Strategy<Value = (ExactStructure, CRational, CRational)> {
    prop_oneof![
        (nonzero_rat(), rat(), nonzero_rat()).prop_map(|(r, a, b)| {
            let s = StructureHandle::new(NumberType::Rational, CRational::real(r)).unwrap();
            (s, a.into(), b.into())
        }),
        (nonzero_crat(), crat(), nonzero_crat()).prop_map(|(c, a, b)| (
            StructureHandle::new(NumberType::Complex, c).unwrap(),
            a,
            b
        )),
    ]
}

fn number_type() -> impl Strategy<Value = NumberType> {
    prop::sample::select(vec![
        NumberType::Natural,
        NumberType::Integer,
        NumberType::Rational,
        NumberType::Real,
        NumberType::Complex,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn exact_field_laws(a in crat(), b in crat(), c in crat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &CRational::zero(), a.clone());
        prop_assert_eq!(&a * &CRational::one(), a.clone());
        prop_assert!((&a + &-&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CRational::one());
            prop_assert_eq!(&(&b * &a).checked_div(&a).unwrap(), &b);
        }
    }

    #[test]
    fn abs_squared_is_multiplicative(z in crat(), w in crat()) {
        prop_assert_eq!((&z * &w).abs_squared(), &z.abs_squared() * &w.abs_squared());
        prop_assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn rationals_are_reduced(n in any::<i64>(), d in any::<i64>().prop_filter("nonzero", |d| *d != 0),
                             a in rat(), b in rat()) {
        let reduced = |r: &Rational| r.denom() > &0.into() && r.numer().gcd(r.denom()).is_one();
        prop_assert!(reduced(&Rational::new(n, d).unwrap()));
        prop_assert!(reduced(&(&a + &b)));
        prop_assert!(reduced(&(&a - &b)));
        prop_assert!(reduced(&(&a * &b)));
        if !b.is_zero() {
            prop_assert!(reduced(&a.checked_div(&b).unwrap()));
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn structure_group_laws(a in nonzero_crat(), b in nonzero_crat(), c in nonzero_crat()) {
        let s = |z: &CRational| StructureHandle::new(NumberType::Complex, z.clone()).unwrap();
        let (a, b, c) = (s(&a), s(&b), s(&c));
        let e = group_identity::<CRational>(NumberType::Complex);
        prop_assert_eq!(
            group_op(&group_op(&a, &b).unwrap(), &c).unwrap(),
            group_op(&a, &group_op(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(group_op(&a, &e).unwrap(), a.clone());
        prop_assert_eq!(group_op(&e, &a).unwrap(), a.clone());
        prop_assert_eq!(group_op(&a, &group_inv(&a).unwrap()).unwrap(), e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn scaled_operations_match_external_formulas((s, a, b) in field_values()) {
        let p = s.scale().clone();
        let (av, bv) = (same_value(&a, &s).unwrap(), same_value(&b, &s).unwrap());
        let (pa, pb) = (&p * &a, &p * &b);
        let corr = |v: &scalerep::ExactValue| correspondent(v).base_value;
        prop_assert_eq!(corr(&add_scaled(&av, &bv).unwrap()), &pa + &pb);
        prop_assert_eq!(corr(&sub_scaled(&av, &bv).unwrap()), &pa - &pb);
        prop_assert_eq!(corr(&mul_scaled(&av, &bv).unwrap()), (&pa * &pb).checked_div(&p).unwrap());
        prop_assert_eq!(corr(&div_scaled(&av, &bv).unwrap()), (&p * &pa).checked_div(&pb).unwrap());
        if s.number_type() == NumberType::Complex {
            prop_assert_eq!(corr(&conj_scaled(&av).unwrap()), &p * &a.conj());
            prop_assert_eq!(conj_scaled(&conj_scaled(&av).unwrap()).unwrap(), av.clone());
        }
        prop_assert_eq!(map_down(&pa, &s).unwrap(), av);
    }

    #[test]
    fn sameness_and_vacuum(s in structure(), a in -20i64..=20) {
        let a = CRational::from_int(if s.number_type() == NumberType::Natural { a.abs() } else { a });
        let corr = correspondent(&same_value(&a, &s).unwrap()).base_value;
        if s.is_base() || a.is_zero() {
            prop_assert_eq!(corr, a);
        } else {
            prop_assert_ne!(corr, a);
        }
    }

    #[test]
    fn internal_order_ignores_scale_sign(r in nonzero_rat(), a in rat(), b in rat()) {
        let s = StructureHandle::new(NumberType::Rational, CRational::real(r)).unwrap();
        let lt = lt_scaled(&same_value(&a.clone().into(), &s).unwrap(), &same_value(&b.clone().into(), &s).unwrap());
        prop_assert_eq!(lt.unwrap(), a.real_cmp(&b) == Some(std::cmp::Ordering::Less));
    }

    #[test]
    fn composition_is_one_scaling(s in field_structure(), q in nonzero_rat(), seed in any::<u64>()) {
        let q = CRational::real(q);
        let composed = compose_scaling(&s, &q).unwrap();
        let direct = StructureHandle::new(s.number_type(), &q * s.scale()).unwrap();
        prop_assert_eq!(&composed, &direct);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sampler = TermSampler::new(s.number_type(), 4);
        let env = sampler.sample_env(&mut rng);
        let t = sampler.sample_evaluable(&mut rng, &env);
        prop_assert_eq!(
            evaluate(&t, &env, &ExternalView::new(composed)).unwrap(),
            evaluate(&t, &env, &ExternalView::new(direct)).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn terms_round_trip(nt in number_type(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = TermSampler::new(nt, 6).sample(&mut rng);
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn homogeneity(s in structure(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sampler = TermSampler::new(s.number_type(), 6);
        let env = sampler.sample_env(&mut rng);
        let t = sampler.sample_evaluable(&mut rng, &env);
        let base = eval_base(&t, &env).unwrap();
        let external = evaluate(&t, &env, &ExternalView::new(s.clone())).unwrap();
        prop_assert_eq!(external, s.scale() * &base, "{}", t);
    }

    #[test]
    fn equation_verdicts_are_uniform(s in structure(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sampler = TermSampler::new(s.number_type(), 3);
        let env = sampler.sample_env(&mut rng);
        let t = sampler.sample_evaluable(&mut rng, &env);
        let u = if seed % 2 == 0 { t.clone() } else { sampler.sample_evaluable(&mut rng, &env) };
        let v = check_equation(&t, &u, &env, &s).unwrap();
        prop_assert!(v.is_uniform(), "{} = {}: {:?}", t, u, v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transport_annihilates(amp in -1.0f64..1.0, phase in 0.0f64..6.3, sites in 2usize..80,
                             dx in 0.01f64..0.5, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        prop_assume!(re.abs() + im.abs() > 1e-3);
        let lat = Lattice::new(1, sites, dx).unwrap();
        let a = GaugePotential::from_fn(&lat, |c, _| amp * (phase + c[0] as f64).sin());
        let r = link_factor(&a, &lat);
        let f = transport_field(&lat, &r, 0, Complex64::new(re, im)).unwrap();
        let df = covariant_derivative(&f, &r, 0, &lat).unwrap();
        prop_assert!(open_path_residual(&df, 0, &lat) < 1e-12 * f.max_norm());
    }

    #[test]
    fn link_composition(re in -5.0f64..5.0, im in -5.0f64..5.0, r1 in 0.01f64..10.0, r2 in 0.01f64..10.0) {
        let a = Complex64::new(re, im);
        let two = local_representation(local_representation(a, r1).unwrap(), r2).unwrap();
        let one = local_representation(a, r1 * r2).unwrap();
        prop_assert!((two - one).norm() <= 1e-12 * one.norm().max(1.0));
    }
}

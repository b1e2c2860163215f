use annulus_core::closed::{diff_x, fermionic_rep};
use annulus_core::homology::is_boundary;
use annulus_core::open::{diff, iota};
use annulus_core::{parse_element, ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
use proptest::prelude::*;

fn arb_monomial() -> impl Strategy<Value = ClosedMonomial> {
    prop::collection::vec(((1i64..=6), any::<bool>(), 1u32..=3), 0..4).prop_map(|v| {
        let mut m = ClosedMonomial::one();
        for (k, neg, e) in v {
            m.mul_var(if neg { -k } else { k }, e);
        }
        m
    })
}

fn half_odd(max: i64) -> impl Strategy<Value = HalfInt> {
    (-max..max).prop_map(|k| HalfInt::from_doubled(2 * k + 1))
}

fn arb_tag(c: Complex) -> BoxedStrategy<OpenTag> {
    match c {
        Complex::F00 => Just(OpenTag::Empty).boxed(),
        Complex::F11 => (-6i64..=6).prop_map(OpenTag::ArcC).boxed(),
        Complex::F02 => half_odd(5).prop_map(OpenTag::ArcA).boxed(),
        Complex::F22 => prop_oneof![
            (half_odd(4), half_odd(4)).prop_map(|(i, j)| OpenTag::Insular(i, j)),
            (-4i64..=4, -4i64..=4).prop_map(|(i, j)| OpenTag::Traversing(i, j)),
        ]
        .boxed(),
    }
}

fn arb_generator(c: Complex) -> impl Strategy<Value = Generator> {
    (arb_tag(c), arb_monomial()).prop_map(|(t, m)| Generator::new(t, m))
}

fn arb_complex() -> impl Strategy<Value = Complex> {
    prop::sample::select(Complex::ALL.to_vec())
}

fn arb_element() -> impl Strategy<Value = Element> {
    arb_complex().prop_flat_map(|c| {
        prop::collection::vec(arb_generator(c), 0..6)
            .prop_map(move |gs| Element::from_generators(c, gs).unwrap())
    })
}

fn preserves_weight(g: &Generator) -> bool {
    !matches!(g.tag(), OpenTag::ArcC(_) | OpenTag::Traversing(..))
}

proptest! {
    #[test]
    fn text_round_trip(e in arb_element()) {
        let text = e.to_string();
        prop_assert_eq!(parse_element(&text, e.complex()).unwrap(), e);
    }

    #[test]
    fn gradings_are_additive(g in arb_complex().prop_flat_map(arb_generator), k in 1i64..=7, neg: bool) {
        let k = if neg { -k } else { k };
        let h = g.with_monomial(g.monomial().times_var(k, 1));
        prop_assert_eq!(h.winding(), g.winding() + k);
        prop_assert_eq!(h.weight(), g.weight() + k.abs());
        prop_assert!(g.weight() >= g.winding().abs());
        prop_assert!(g.weight() >= HalfInt::ZERO);
        let e: Element = g.clone().into();
        prop_assert_eq!(e.mul_var(k, 1), h.into());
        prop_assert!(e.mul_var(0, 1).is_zero());
    }

    #[test]
    fn differential_respects_gradings(g in arb_complex().prop_flat_map(arb_generator)) {
        for t in diff(&g.clone().into()).terms() {
            prop_assert_eq!(t.winding(), g.winding());
            prop_assert!(t.weight() <= g.weight());
            if preserves_weight(&g) && preserves_weight(t) {
                prop_assert_eq!(t.weight(), g.weight());
            }
        }
    }

    #[test]
    fn iota_is_an_involutive_chain_map(e in arb_element()) {
        prop_assert_eq!(iota(&iota(&e)), e.clone());
        prop_assert_eq!(iota(&diff(&e)), diff(&iota(&e)));
    }

    #[test]
    fn boundary_witnesses_persist(g in prop_oneof![arb_generator(Complex::F00), arb_generator(Complex::F02)]) {
        prop_assume!(g.weight() <= HalfInt::from_int(8));
        let e = diff(&g.into());
        let m = e.max_weight().unwrap_or(HalfInt::ZERO);
        let u = is_boundary(&e, m).unwrap();
        prop_assert!(u.is_some());
        prop_assert_eq!(diff(&u.unwrap()), e.clone());
        let u2 = is_boundary(&e, m + 2).unwrap().unwrap();
        prop_assert_eq!(diff(&u2), e);
    }

    #[test]
    fn fermionic_part_is_recovered(
        fs in prop::collection::btree_set((-3i64..=2).prop_map(|k| 2 * k + 1), 0..4),
        extra in prop::collection::vec(((-4i64..=4).prop_filter("nonzero", |k| *k != 0), 1u32..=2), 0..3),
    ) {
        let planted = ClosedMonomial::from_pairs(fs.iter().map(|&k| (k, 1)));
        let mut u = ClosedMonomial::from_pairs(extra);
        let shift = planted.winding() - u.winding();
        if shift != 0 {
            u.mul_var(shift, 1);
        }
        prop_assume!(u.weight() <= 10);
        let mut p = Element::monomial(planted.clone());
        p.add_assign(&diff_x(&Element::monomial(u)));
        let bound = p.max_weight().unwrap_or(HalfInt::ZERO);
        let (r, wit) = fermionic_rep(&p, bound).unwrap();
        prop_assert_eq!(r.clone(), Element::monomial(planted));
        let mut back = r;
        back.add_assign(&diff_x(&wit));
        prop_assert_eq!(back, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn differential_squares_to_zero(e in arb_element()) {
        let e = e.filter(|g| g.weight() <= HalfInt::from_int(12));
        prop_assert!(diff(&diff(&e)).is_zero());
    }
}

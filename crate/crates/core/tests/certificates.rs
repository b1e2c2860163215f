use annulus_core::homology::{self, homology_with_representatives, is_boundary, is_cycle, TruncationSpec, Window};
use annulus_core::open::{diagonal_sum, diff, disc_proj, s_n, EElement};
use annulus_core::verify::{detected_cycle, run, Suite};
use annulus_core::{parse_element, Complex, Element, HalfInt};

fn hi(n: i64) -> HalfInt {
    HalfInt::from_int(n)
}

fn f00(t: &str) -> Element {
    parse_element(t, Complex::F00).unwrap()
}

fn f22(t: &str) -> Element {
    parse_element(t, Complex::F22).unwrap()
}

#[test]
fn diagonal_sums_see_a_class_the_disc_misses() {
    let e = f22("c(0)*d(0)*x(3) + c(2)*d(0)*x(1) + c(1)*d(1)*x(1) + c(0)*d(2)*x(1) + a(3/2)*b(3/2)");
    assert_eq!(e, detected_cycle());
    assert!(is_cycle(&e));
    assert_eq!(disc_proj(&e), Ok(EElement::ZERO));
    assert_eq!(diagonal_sum(0, &e).unwrap(), f00("x(3)"));
    assert_eq!(diagonal_sum(2, &e).unwrap(), f00("x(1)"));
    for n in [-2, -1, 1, 3, 4] {
        assert!(diagonal_sum(n, &e).unwrap().is_zero(), "sigma_{n}");
    }
    for m in [3, 6, 10] {
        assert_eq!(is_boundary(&f00("x(3)"), hi(m)), Ok(None));
        assert_eq!(is_boundary(&f00("x(1)"), hi(m)), Ok(None));
    }
}

#[test]
fn listed_element_with_winding_four_insular_part_is_not_a_cycle() {
    let e = f22("c(0)*d(0)*x(3) + c(2)*d(0)*x(1) + c(1)*d(1)*x(1) + c(0)*d(2)*x(1) + a(7/2)*b(1/2) + a(3/2)*b(5/2)");
    assert!(e.homogeneous_winding().is_err());
    assert!(!is_cycle(&e));
}

#[test]
fn diagonals_are_boundaries_of_traversing_arcs() {
    let s3 = s_n(3);
    assert_eq!(diff(&f22("c(0)*d(3)")), s3);
    let u = is_boundary(&s3, hi(6)).unwrap().unwrap();
    assert_eq!(diff(&u), s3);
}

#[test]
fn f11_window_classes_die_two_steps_later() {
    for w in -4..=4 {
        for m in 0..=8 {
            let spec = TruncationSpec::new(Complex::F11, hi(w), hi(m));
            let r = homology_with_representatives(&spec).unwrap();
            for rep in r.basis_reps.unwrap() {
                let u = is_boundary(&rep, hi(m + 2)).unwrap();
                assert!(u.is_some(), "w={w} M={m}: {rep}");
            }
        }
    }
}

#[test]
fn boundary_matrices_square_to_zero() {
    for c in Complex::ALL {
        let m = if c == Complex::F22 { 6 } else { 8 };
        for w in -3..=3 {
            let w = if c == Complex::F02 { HalfInt::from_doubled(2 * w + 1) } else { hi(w) };
            let d = Window::new(&TruncationSpec::new(c, w, hi(m))).unwrap().boundary_matrix().unwrap();
            assert!(d.mul(&d).unwrap().is_zero(), "{c} w={w}");
        }
    }
}

#[test]
fn weight_preserving_windows_split_into_slices() {
    for c in [Complex::F00, Complex::F02] {
        for w in -2..=2 {
            let w = if c == Complex::F02 { HalfInt::from_doubled(2 * w + 1) } else { hi(w) };
            let spec = TruncationSpec::new(c, w, hi(8));
            let total = homology::homology_dim(&spec).unwrap().dim_homology;
            let by_slice: usize = (0..=16)
                .map(|k| homology::slice_homology_dim(&spec, HalfInt::from_doubled(k)).unwrap())
                .sum();
            assert_eq!(total, by_slice, "{c} w={w}");
        }
    }
}

#[test]
fn verify_suites_pass_at_the_default_window() {
    for check in run(Suite::All, 10) {
        assert!(check.passed, "{check}");
    }
}

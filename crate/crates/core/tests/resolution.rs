use qhall_core::freealg::DividedWord;
use qhall_core::hall::varpi;
use qhall_core::rank2::from_coords;
use qhall_core::resolution::{
    c_closed, c_recursive, chi_e_symbolic, coefficients, euler_check, qbinom_alternating,
    reassemble, resolution_shadow, CoefficientTable,
};
use qhall_core::{avatar, Avatar, EvalConvention, FreeElement, HallSpace, LaurentPoly, QuiverShape, Weight};

#[test]
fn frozen_table_n2() {
    // rows (m, p, a, b, c) for N = 2, by hand from the three formulas
    let v = LaurentPoly::v_pow;
    let expected = [
        (0, 0, 0, 0, v(0)),
        (1, 0, -2, -2, v(0)),
        (1, 1, -2, 0, -v(-2)),
        (2, 0, -4, -4, v(0)),
        (2, 1, -3, -1, -v(-1)),
        (2, 2, -4, 0, v(-2)),
    ];
    let table = CoefficientTable::new(2).unwrap();
    assert_eq!(table.rows.len(), expected.len());
    for (row, (m, p, a, b, c)) in table.rows.iter().zip(expected) {
        assert_eq!((row.m, row.p, row.a, row.b, &row.c), (m, p, a, b, &c));
    }
    assert_eq!(coefficients(2, 1, 2).unwrap().c.to_string(), "-v^-1");
}

#[test]
fn recursion_equals_closed_form() {
    for n in 1..=6 {
        for m in 0..=n {
            let closed: Vec<_> = (0..=m).map(|p| c_closed(m, p, n)).collect();
            assert_eq!(c_recursive(m, n).unwrap(), closed, "m={m} N={n}");
            assert_eq!(chi_e_symbolic(m, n).unwrap().coords(), &closed[..]);
        }
    }
}

#[test]
fn triangular_system_reassembles() {
    for n in 1..=6 {
        for m in 0..=n {
            assert_eq!(reassemble(m, n).unwrap(), FreeElement::word(DividedWord::i_j_i(0, m)));
        }
    }
}

#[test]
fn alternating_sum_vanishes() {
    for d in 1..=12 {
        assert!(qbinom_alternating(d).unwrap().is_zero(), "d={d}");
    }
}

#[test]
fn shadows() {
    for n in 1..=6 {
        for m in 0..=n {
            let s = resolution_shadow(m, n).unwrap();
            assert_eq!(s.terms.len(), m as usize + 1);
            assert!(euler_check(m, n).unwrap());
        }
    }
}

#[test]
fn symbolic_chi_matches_hall_avatar() {
    let conv = EvalConvention::PlusSqrt;
    for q in [2, 3] {
        for n in 1..=3 {
            let shape = QuiverShape::q(n).unwrap();
            for m in 0..=n {
                let sp = HallSpace::new(shape, Weight::new(m, 1), q).unwrap();
                let chi = from_coords(&chi_e_symbolic(m, n).unwrap());
                let lhs = varpi(&chi, &sp, conv).unwrap();
                assert_eq!(lhs, avatar(Avatar::E(m), shape, q, conv).unwrap(), "m={m} N={n} q={q}");
            }
        }
    }
}

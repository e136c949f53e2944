use proptest::prelude::*;
use qhall_core::ffield::{echelon_subspaces, gaussian_count, Mat, PrimeField};
use qhall_core::freealg::{serre_element, theta_y, Side};
use qhall_core::hall::{
    group_act, hall_product, locus_indicator, omega_i, omega_i_with_basis, stable_subspaces,
    transfer, varpi, GroupElement,
};
use qhall_core::rank2::{from_coords, monomial};
use qhall_core::{
    avatar, qfact, rank_certificate, Avatar, CoordVector, EvalConvention, FreeElement, Generator,
    HallFunction, HallSpace, LaurentPoly, Locus, QuiverShape, Rank2Datum, SqrtQValue,
    TransferMode, Weight,
};
use Generator::{I, J};

const CONV: EvalConvention = EvalConvention::PlusSqrt;

fn space(shape: QuiverShape, i: u32, j: u32, q: u32) -> HallSpace {
    HallSpace::new(shape, Weight::new(i, j), q).unwrap()
}

fn q_shape(n: u32) -> QuiverShape {
    QuiverShape::q(n).unwrap()
}

// ---------------------------------------------------------------- oracles

/// Number of `p`-dimensional `W ⊆ F_q^m` containing the column space of
/// `x`, by testing every echelon subspace.
fn containing_subspaces(x: &Mat, m: usize, p: usize, f: PrimeField) -> u64 {
    let cols = x.transpose();
    echelon_subspaces(m, p, f)
        .iter()
        .filter(|w| w.contains_all(&cols, f))
        .count() as u64
}

#[test]
fn point_counts() {
    assert_eq!(space(q_shape(1), 1, 1, 2).num_points(), 2);
    assert_eq!(space(q_shape(2), 2, 1, 2).num_points(), 16);
    assert_eq!(space(q_shape(3), 0, 1, 3).num_points(), 1);
    assert_eq!(space(q_shape(3), 3, 1, 3).num_points(), 19683);
}

#[test]
fn stable_subspaces_examples() {
    let sp = space(q_shape(2), 3, 1, 2);
    let zero = sp.decode(0);
    for wi in 0..=3 {
        for wj in 0..=1 {
            let n = stable_subspaces(&sp, &zero, Weight::new(wi, wj)).len() as u64;
            assert_eq!(n, gaussian_count(3, wi, 2) * gaussian_count(1, wj, 2));
        }
    }
    let sp = space(q_shape(1), 1, 1, 3);
    for x in sp.enumerate_points() {
        assert_eq!(stable_subspaces(&sp, &x, Weight::new(1, 0)).len(), 1);
        let nonzero = !x.arrow(0).is_zero();
        assert_eq!(stable_subspaces(&sp, &x, Weight::new(0, 1)).is_empty(), nonzero);
    }
}

#[test]
fn generator_products() {
    for q in [2, 3, 5] {
        let fi = HallFunction::constant(space(q_shape(1), 1, 0, q), CONV, &SqrtQValue::one(q));
        let fj = HallFunction::constant(space(q_shape(1), 0, 1, q), CONV, &SqrtQValue::one(q));
        let ji = hall_product(&fj, &fi).unwrap();
        assert!(ji.values().iter().all(|v| *v == CONV.v_power(-1, q)));
        let ij = hall_product(&fi, &fj).unwrap();
        assert_eq!(ij.support().collect::<Vec<_>>(), vec![0]);
        assert_eq!(*ij.value(0), SqrtQValue::one(q));
    }
}

#[test]
fn varpi_examples() {
    let q = 2;
    let j = varpi(&FreeElement::divided_power(J, 1), &space(q_shape(1), 0, 1, q), CONV).unwrap();
    assert_eq!(j.values(), &[SqrtQValue::one(q)]);
    let i2 = varpi(&FreeElement::divided_power(I, 2), &space(q_shape(1), 2, 0, q), CONV).unwrap();
    assert_eq!(i2.values(), &[SqrtQValue::one(q)]);
    let d = Rank2Datum::new(1).unwrap();
    let f1 = varpi(&d.f(1), &space(q_shape(1), 1, 1, q), CONV).unwrap();
    assert_eq!(f1, avatar(Avatar::E(1), q_shape(1), q, CONV).unwrap());
    assert!(f1.value(0).is_zero());
    assert_eq!(*f1.value(1), CONV.v_power(-1, q));
}

#[test]
fn locus_and_transfer_examples() {
    let sp = space(q_shape(1), 1, 1, 2);
    let one = HallFunction::constant(sp, CONV, &SqrtQValue::one(2));
    let r = transfer(&one, Locus::SinkOpen, TransferMode::Restrict).unwrap();
    assert_eq!(r.support().collect::<Vec<_>>(), vec![1]);
    let ij = varpi(&theta_y(&[(I, 1), (J, 1)]), &sp, CONV).unwrap();
    assert!(transfer(&ij, Locus::SinkOpen, TransferMode::Restrict).unwrap().is_zero());

    let sp = space(q_shape(2), 2, 1, 2);
    let inside = locus_indicator(&sp, Locus::Stratum(1)).unwrap();
    assert_eq!(sp.enumerate_points().filter(|x| inside(x)).count(), 10);
}

#[test]
fn rank_certificate_examples() {
    let sp = space(q_shape(1), 1, 1, 2);
    let ji = varpi(&theta_y(&[(J, 1), (I, 1)]), &sp, CONV).unwrap();
    let ij = varpi(&theta_y(&[(I, 1), (J, 1)]), &sp, CONV).unwrap();
    assert_eq!(rank_certificate(&[ji.clone(), ij]).unwrap(), 2);
    assert_eq!(rank_certificate(&[ji.clone(), ji]).unwrap(), 1);
    let sp = space(q_shape(2), 2, 1, 2);
    let fs: Vec<_> = (0..=2).map(|p| varpi(&monomial(2, p), &sp, CONV).unwrap()).collect();
    assert_eq!(rank_certificate(&fs).unwrap(), 3);
}

#[test]
fn avatar_i_matches_containing_subspace_count() {
    for q in [2, 3] {
        let f = PrimeField::new(q).unwrap();
        for n in 1..=2 {
            for m in 0..=n {
                let sp = space(q_shape(n), m, 1, q);
                for p in 0..=m {
                    let a = avatar(Avatar::I(m, p), q_shape(n), q, CONV).unwrap();
                    let shift = CONV.v_power(-i64::from(p * (m - p) + p * n), q);
                    for (k, x) in sp.enumerate_points().enumerate() {
                        let count = containing_subspaces(&x.hstacked(), m as usize, p as usize, f);
                        assert_eq!(*a.value(k as u64), &shift * &SqrtQValue::from_int(count, q));
                    }
                }
            }
        }
    }
}

#[test]
fn serre_vanishing_small() {
    for n in 1..=2 {
        for q in [2, 3] {
            let sp = space(q_shape(n), n + 1, 1, q);
            let f = varpi(&serre_element(-i64::from(n)).unwrap(), &sp, CONV).unwrap();
            assert!(f.is_zero(), "N={n} q={q}");
        }
    }
}

#[test]
fn divided_power_consistency() {
    for q in [2, 3] {
        for n in 1..=3 {
            let sp = space(q_shape(1), n, 0, q);
            let base = varpi(&FreeElement::divided_power(I, 1), &space(q_shape(1), 1, 0, q), CONV).unwrap();
            let mut pow = base.clone();
            for _ in 1..n {
                pow = hall_product(&base, &pow).unwrap();
            }
            let dp = varpi(&FreeElement::divided_power(I, n), &sp, CONV).unwrap();
            let fact = qhall_core::eval_sqrt_q(&qfact(n.into()).unwrap(), q, CONV).unwrap();
            assert_eq!(pow, dp.scale(&fact));
        }
    }
}

#[test]
fn omega_worked_examples() {
    for q in [2, 3] {
        // m = 0 → m' = 1, N = 1
        let src = HallFunction::constant(space(q_shape(1), 0, 1, q), CONV, &SqrtQValue::one(q));
        let g = omega_i(&src).unwrap();
        let prime = QuiverShape::q_prime(1).unwrap();
        let d = Rank2Datum::new(1).unwrap();
        let target = varpi(&d.reflection_word(Side::Upper, 1), &space(prime, 1, 1, q), CONV).unwrap();
        assert_eq!(g.values(), target.values());
        // m = 1 → m' = 0, N = 1, on the E(1) avatar
        let e1 = avatar(Avatar::E(1), q_shape(1), q, CONV).unwrap();
        let g = omega_i(&e1).unwrap();
        assert_eq!(g.values(), &[SqrtQValue::one(q)]);
    }
}

// ---------------------------------------------------------------- properties

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i64..=2), 0..3).prop_map(LaurentPoly::from_terms)
}

/// A random homogeneous element of weight `(i, j)`, `j ≤ 1`.
fn homogeneous(i: u32, j: u32) -> BoxedStrategy<FreeElement> {
    if j == 0 {
        laurent()
            .prop_map(move |c| FreeElement::divided_power(I, i).scale(&c))
            .boxed()
    } else {
        prop::collection::vec(laurent(), i as usize + 1)
            .prop_map(|c| from_coords(&CoordVector::new(c)))
            .boxed()
    }
}

/// Three weights with total at most `(3, 1)`.
fn three_weights() -> impl Strategy<Value = [Weight; 3]> {
    (0u32..=3, 0u32..=3, 0u32..=3, 0usize..4)
        .prop_filter("total i ≤ 3", |(a, b, c, _)| a + b + c <= 3)
        .prop_map(|(a, b, c, jpos)| {
            let mut w = [Weight::new(a, 0), Weight::new(b, 0), Weight::new(c, 0)];
            if jpos < 3 {
                w[jpos].j = 1;
            }
            w
        })
}

fn three_elements() -> impl Strategy<Value = Vec<(Weight, FreeElement)>> {
    three_weights().prop_flat_map(|ws| {
        ws.iter()
            .map(|&w| homogeneous(w.i, w.j).prop_map(move |x| (w, x)))
            .collect::<Vec<_>>()
    })
}

/// `(N, m, q, g_i, g_j)` with `m ≤ min(N, 2)`.
fn group_setting() -> impl Strategy<Value = (u32, u32, u32, Mat, Mat)> {
    (1u32..=2, prop::sample::select(vec![2u32, 3]))
        .prop_flat_map(|(n, q)| (Just(n), 0..=n, Just(q)))
        .prop_flat_map(|(n, m, q)| (Just(n), Just(m), Just(q), invertible(m as usize, q), invertible(1, q)))
}

fn setting() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=2, prop::sample::select(vec![2u32, 3]))
}

fn invertible(n: usize, q: u32) -> impl Strategy<Value = Mat> {
    prop::collection::vec(0..q, n * n)
        .prop_map(move |d| Mat::from_rows(n, n, d))
        .prop_filter("invertible", move |m| m.inverse(PrimeField::new(q).unwrap()).is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_associative((n, q) in setting(), xs in three_elements()) {
        let shape = q_shape(n);
        let fs: Vec<_> = xs
            .iter()
            .map(|(w, x)| varpi(x, &space(shape, w.i, w.j, q), CONV).unwrap())
            .collect();
        let left = hall_product(&hall_product(&fs[0], &fs[1]).unwrap(), &fs[2]).unwrap();
        let right = hall_product(&fs[0], &hall_product(&fs[1], &fs[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn varpi_is_multiplicative((n, q) in setting(), a in 0u32..=2, b in 0u32..=1, jfirst in any::<bool>(),
                               c1 in laurent(), c2 in laurent(), coords in prop::collection::vec(laurent(), 3)) {
        let shape = q_shape(n);
        prop_assume!(a + b <= 3);
        let (w1, w2) = if jfirst { (Weight::new(a, 1), Weight::new(b, 0)) } else { (Weight::new(a, 0), Weight::new(b, 1)) };
        let mk = |w: Weight, c: &LaurentPoly| {
            if w.j == 0 {
                FreeElement::divided_power(I, w.i).scale(c)
            } else {
                let mut v = coords[..=w.i as usize].to_vec();
                v[0] = &v[0] + c;
                from_coords(&CoordVector::new(v))
            }
        };
        let (x, y) = (mk(w1, &c1), mk(w2, &c2));
        let total = w1 + w2;
        let lhs = varpi(&x.multiply(&y), &space(shape, total.i, total.j, q), CONV).unwrap();
        let rhs = hall_product(
            &varpi(&x, &space(shape, w1.i, w1.j, q), CONV).unwrap(),
            &varpi(&y, &space(shape, w2.i, w2.j, q), CONV).unwrap(),
        ).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn invariance_preserved((n, m, q, gi, gj) in group_setting(), coords in prop::collection::vec(laurent(), 3)) {
        let sp = space(q_shape(n), m, 1, q);
        let g = GroupElement::new(gi, gj, PrimeField::new(q).unwrap()).unwrap();
        let x = from_coords(&CoordVector::new(coords[..=m as usize].to_vec()));
        let h = varpi(&x, &sp, CONV).unwrap();
        prop_assert!(h.invariance_defects(&g).unwrap().is_empty());
        let r = transfer(&h, Locus::SinkOpen, TransferMode::Restrict).unwrap();
        prop_assert!(r.invariance_defects(&g).unwrap().is_empty());
        for p in 0..=m {
            let a = avatar(Avatar::I(m, p), q_shape(n), q, CONV).unwrap();
            prop_assert!(a.invariance_defects(&g).unwrap().is_empty());
        }
        let e = avatar(Avatar::E(m), q_shape(n), q, CONV).unwrap();
        prop_assert!(e.invariance_defects(&g).unwrap().is_empty());
        // the action permutes the points
        let mut seen = vec![false; sp.num_points() as usize];
        for y in sp.enumerate_points() {
            seen[sp.encode(&group_act(&sp, &g, &y).unwrap()) as usize] = true;
        }
        prop_assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn omega_independent_of_splitting(n in 1u32..=3, m in 0u32..=3, q in prop::sample::select(vec![2u32, 3]),
                                      seed in any::<u64>()) {
        prop_assume!(m <= n);
        let e = avatar(Avatar::E(m), q_shape(n), q, CONV).unwrap();
        let f = PrimeField::new(q).unwrap();
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let twisted = omega_i_with_basis(&e, |_| loop {
            let data: Vec<u32> = (0..m * m).map(|_| (next() % u64::from(q)) as u32).collect();
            let a = Mat::from_rows(m as usize, m as usize, data);
            if a.inverse(f).is_some() {
                break Some(a);
            }
        }).unwrap();
        prop_assert_eq!(twisted, omega_i(&e).unwrap());
    }

    #[test]
    fn restrict_after_extend_is_identity((n, q) in setting(), m in 0u32..=2, coords in prop::collection::vec(laurent(), 3)) {
        prop_assume!(m <= n);
        let sp = space(q_shape(n), m, 1, q);
        let x = from_coords(&CoordVector::new(coords[..=m as usize].to_vec()));
        let r = transfer(&varpi(&x, &sp, CONV).unwrap(), Locus::SinkOpen, TransferMode::Restrict).unwrap();
        let e = transfer(&r, Locus::SinkOpen, TransferMode::ExtendByZero).unwrap();
        prop_assert_eq!(transfer(&e, Locus::SinkOpen, TransferMode::Restrict).unwrap(), r);
    }
}

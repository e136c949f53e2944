//! Randomized property suites. Every sample is drawn from a ChaCha stream
//! seeded by `--seed`, so a failing sample number reproduces exactly.

use qhall_core::ffield::{Mat, PrimeField};
use qhall_core::freealg::{theta_y, Side};
use qhall_core::hall::{hall_product, varpi, GroupElement};
use qhall_core::rank2::{decompose_theta_i, from_coords, left_theta_i, project};
use qhall_core::{
    eval_sqrt_q, CoordVector, EvalConvention, FreeElement, Generator, HallSpace, LaurentPoly,
    QuiverShape, Rank2Datum, Weight,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checks::{Settings, Task, TaskResult};
use crate::report::{Params, Witness};

pub const SAMPLES: u64 = 16;

pub const NAMES: [&str; 5] = [
    "props.associativity",
    "props.homomorphism",
    "props.invariance",
    "props.decomposition",
    "props.projection",
];

fn laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n = rng.gen_range(0..4);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-4i64..=4), rng.gen_range(-3i64..=3))))
}

fn word(rng: &mut ChaCha8Rng) -> FreeElement {
    let n = rng.gen_range(0..=4);
    let runs: Vec<_> = (0..n)
        .map(|_| {
            let g = if rng.gen() { Generator::I } else { Generator::J };
            (g, rng.gen_range(1..=3))
        })
        .collect();
    theta_y(&runs)
}

/// A homogeneous element of weight `(a, b)` with `b ≤ 1`.
fn homogeneous(rng: &mut ChaCha8Rng, a: u32, b: u32) -> FreeElement {
    if b == 0 {
        return FreeElement::divided_power(Generator::I, a).scale(&laurent(rng));
    }
    let coords = (0..=a).map(|_| laurent(rng)).collect();
    from_coords(&CoordVector::new(coords))
}

fn coords(rng: &mut ChaCha8Rng, m: u32) -> CoordVector {
    CoordVector::new((0..=m).map(|_| laurent(rng)).collect())
}

fn invertible(rng: &mut ChaCha8Rng, n: usize, f: PrimeField) -> Mat {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..f.order())).collect();
        let m = Mat::from_rows(n, n, data);
        if m.inverse(f).is_some() {
            return m;
        }
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

type Sample = fn(&mut ChaCha8Rng, EvalConvention) -> Result<Option<(String, String)>, String>;

fn associativity(rng: &mut ChaCha8Rng, ev: EvalConvention) -> Result<Option<(String, String)>, String> {
    let (a, b, c) = (word(rng), word(rng), word(rng));
    let (l, r) = (a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    if l != r {
        return Ok(Some((e(l), e(r))));
    }
    // Hall side: three generator-weight pieces at N ≤ 2, q = 2
    let n = rng.gen_range(1..=2);
    let shape = QuiverShape::q(n).map_err(e)?;
    let ws: Vec<Weight> = {
        let jpos = rng.gen_range(0..3);
        (0..3).map(|k| Weight::new(rng.gen_range(0..=1), u32::from(k == jpos))).collect()
    };
    let fs = ws
        .iter()
        .map(|w| {
            let sp = HallSpace::new(shape, *w, 2).map_err(e)?;
            varpi(&homogeneous(rng, w.i, w.j), &sp, ev).map_err(e)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let l = hall_product(&hall_product(&fs[0], &fs[1]).map_err(e)?, &fs[2]).map_err(e)?;
    let r = hall_product(&fs[0], &hall_product(&fs[1], &fs[2]).map_err(e)?).map_err(e)?;
    Ok(l.differences(&r).map_err(e)?.first().map(|(_, x, y)| (e(x), e(y))))
}

fn homomorphism(rng: &mut ChaCha8Rng, ev: EvalConvention) -> Result<Option<(String, String)>, String> {
    let q = [2, 3, 5][rng.gen_range(0..3)];
    let (a, b) = (laurent(rng), laurent(rng));
    let lhs = eval_sqrt_q(&(&a * &b), q, ev).map_err(e)?;
    let rhs = &eval_sqrt_q(&a, q, ev).map_err(e)? * &eval_sqrt_q(&b, q, ev).map_err(e)?;
    if lhs != rhs {
        return Ok(Some((e(rhs), e(lhs))));
    }
    let n = rng.gen_range(1..=2);
    let shape = QuiverShape::q(n).map_err(e)?;
    let (a, b) = (rng.gen_range(0..=2), rng.gen_range(0..=1));
    let (w1, w2) = if rng.gen() {
        (Weight::new(a, 1), Weight::new(b, 0))
    } else {
        (Weight::new(a, 0), Weight::new(b, 1))
    };
    let (x, y) = (homogeneous(rng, w1.i, w1.j), homogeneous(rng, w2.i, w2.j));
    let sp = |w: Weight| HallSpace::new(shape, w, 2).map_err(e);
    let prod = hall_product(
        &varpi(&x, &sp(w1)?, ev).map_err(e)?,
        &varpi(&y, &sp(w2)?, ev).map_err(e)?,
    )
    .map_err(e)?;
    let direct = varpi(&x.multiply(&y), &sp(w1 + w2)?, ev).map_err(e)?;
    Ok(direct.differences(&prod).map_err(e)?.first().map(|(_, x, y)| (e(x), e(y))))
}

fn invariance(rng: &mut ChaCha8Rng, ev: EvalConvention) -> Result<Option<(String, String)>, String> {
    let n = rng.gen_range(1..=2);
    let m = rng.gen_range(0..=n);
    let q = [2, 3][rng.gen_range(0..2)];
    let f = PrimeField::new(q).map_err(e)?;
    let sp = HallSpace::new(QuiverShape::q(n).map_err(e)?, Weight::new(m, 1), q).map_err(e)?;
    let h = varpi(&from_coords(&coords(rng, m)), &sp, ev).map_err(e)?;
    let g = GroupElement::new(invertible(rng, m as usize, f), invertible(rng, 1, f), f).map_err(e)?;
    let bad = h.invariance_defects(&g).map_err(e)?;
    Ok(bad.first().map(|k| ("invariant".into(), format!("defect at point {k}"))))
}

fn decomposition(rng: &mut ChaCha8Rng, _: EvalConvention) -> Result<Option<(String, String)>, String> {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=n);
    let d = Rank2Datum::new(n).map_err(e)?;
    let y = from_coords(&coords(rng, m - 1));
    let k = laurent(rng);
    let x = &d.f(m).scale(&k) + &left_theta_i(&y);
    let (k2, y2) = decompose_theta_i(&x, m, d).map_err(e)?;
    let back = &d.f(m).scale(&k2) + &left_theta_i(&y2);
    Ok((k2 != k || y2 != y || back != x).then(|| (e(&k), e(&k2))))
}

fn projection(rng: &mut ChaCha8Rng, _: EvalConvention) -> Result<Option<(String, String)>, String> {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(0..=n);
    let d = Rank2Datum::new(n).map_err(e)?;
    let side = if rng.gen() { Side::Upper } else { Side::Lower };
    let (_, once) = project(&from_coords(&coords(rng, m)), side, m, d).map_err(e)?;
    let (_, twice) = project(&once, side, m, d).map_err(e)?;
    Ok((once != twice).then(|| (e(&once), e(&twice))))
}

fn run(sample: Sample, seed: u64, ev: EvalConvention) -> TaskResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for k in 0..SAMPLES {
        if let Some((exp, act)) = sample(&mut rng, ev)? {
            out.push(Witness::new(k, exp, act));
        }
    }
    Ok(out)
}

pub fn suites(s: &Settings) -> Vec<Task> {
    let samples: [Sample; 5] = [associativity, homomorphism, invariance, decomposition, projection];
    NAMES
        .iter()
        .zip(samples)
        .map(|(name, sample)| {
            let (seed, ev) = (s.seed, s.ev);
            let mut ps = Params::new();
            ps.insert("seed".into(), seed.into());
            ps.insert("ev".into(), ev.as_str().into());
            Task::new(name, ps, 0, move || run(sample, seed, ev))
        })
        .collect()
}

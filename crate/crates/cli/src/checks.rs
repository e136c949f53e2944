//! The verification suites. Each suite expands into independent tasks; a
//! task yields the witnesses of one parameter combination.

use std::time::Instant;

use qhall_core::freealg::{serre_element, DividedWord};
use qhall_core::hall::{avatar_in, omega_i, transfer, varpi};
use qhall_core::laurent::qbinom;
use qhall_core::rank2::{lusztig_t, monomial, to_coords};
use qhall_core::resolution::{
    c_closed, c_recursive, chi_e_symbolic, qbinom_alternating, reassemble, resolution_shadow,
};
use qhall_core::{
    eval_sqrt_q, ffield::gaussian_count, rank_certificate, Avatar, Direction, EvalConvention,
    FreeElement, HallFunction, HallSpace, LaurentPoly, Locus, QuiverShape, Rank2Datum,
    SqrtQValue, TransferMode, Weight,
};
use rayon::prelude::*;

use crate::report::{Params, Report, Witness};

pub type TaskResult = Result<Vec<Witness>, String>;

pub struct Task {
    pub check: String,
    pub params: Params,
    /// Largest point count the task enumerates.
    pub points: u128,
    run: Box<dyn Fn() -> TaskResult + Send + Sync>,
}

impl Task {
    pub fn new(
        check: &str,
        params: Params,
        points: u128,
        run: impl Fn() -> TaskResult + Send + Sync + 'static,
    ) -> Self {
        Self {
            check: check.to_owned(),
            params,
            points,
            run: Box::new(run),
        }
    }

    pub fn run(&self) -> Report {
        let start = Instant::now();
        let witnesses = match (self.run)() {
            Ok(w) => w,
            Err(e) => vec![Witness::new(0, "no error", e)],
        };
        let ms = start.elapsed().as_millis() as u64;
        Report::new(self.check.clone(), self.params.clone(), witnesses, ms)
    }
}

/// Runs tasks in parallel; the result is sorted by check and parameters.
pub fn run_tasks(tasks: &[Task]) -> Vec<Report> {
    let mut reports: Vec<Report> = tasks.par_iter().map(Task::run).collect();
    crate::report::sort_reports(&mut reports);
    reports
}

/// Parameter lists after defaults are applied.
#[derive(Debug, Clone)]
pub struct Settings {
    pub n: Option<Vec<u32>>,
    pub m: Option<Vec<u32>>,
    pub q: Option<Vec<u32>>,
    pub ev: EvalConvention,
    pub seed: u64,
    pub cap: u64,
}

impl Settings {
    pub fn with_defaults(ev: EvalConvention, cap: u64) -> Self {
        Self {
            n: None,
            m: None,
            q: None,
            ev,
            seed: 0,
            cap,
        }
    }

    fn ns(&self, default: std::ops::RangeInclusive<u32>) -> Vec<u32> {
        self.n.clone().unwrap_or_else(|| default.collect())
    }

    fn qs(&self, default: &[u32]) -> Vec<u32> {
        self.q.clone().unwrap_or_else(|| default.to_vec())
    }

    /// `m` values in `0..=max`, restricted to `--m` when given.
    fn ms(&self, max: u32) -> Vec<u32> {
        match &self.m {
            Some(ms) => ms.iter().copied().filter(|&m| m <= max).collect(),
            None => (0..=max).collect(),
        }
    }
}

fn params(pairs: &[(&str, crate::report::Param)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn points(q: u32, entries: u32) -> u128 {
    u128::from(q).checked_pow(entries).unwrap_or(u128::MAX)
}

fn err(e: qhall_core::Error) -> String {
    e.to_string()
}

fn function_witnesses(actual: &HallFunction, expected: &HallFunction) -> TaskResult {
    Ok(actual
        .differences(expected)
        .map_err(err)?
        .into_iter()
        .map(|(k, e, a)| Witness::new(k, e, a))
        .collect())
}

fn coord_witnesses(actual: &[LaurentPoly], expected: &[LaurentPoly]) -> Vec<Witness> {
    let len = actual.len().max(expected.len());
    let zero = LaurentPoly::zero();
    (0..len)
        .filter_map(|k| {
            let a = actual.get(k).unwrap_or(&zero);
            let e = expected.get(k).unwrap_or(&zero);
            (a != e).then(|| Witness::new(k as u64, e, a))
        })
        .collect()
}

fn q_space(n: u32, m: u32, q: u32, cap: u64) -> Result<HallSpace, String> {
    HallSpace::with_cap(QuiverShape::q(n).map_err(err)?, Weight::new(m, 1), q, cap).map_err(err)
}

fn q_prime_space(n: u32, m: u32, q: u32, cap: u64) -> Result<HallSpace, String> {
    HallSpace::with_cap(QuiverShape::q_prime(n).map_err(err)?, Weight::new(m, 1), q, cap).map_err(err)
}

fn hall_params(m: Option<u32>, n: u32, q: u32, ev: EvalConvention) -> Params {
    let mut p = params(&[("N", n.into()), ("q", q.into()), ("ev", ev.as_str().into())]);
    if let Some(m) = m {
        p.insert("m".into(), m.into());
    }
    p
}

pub fn serre(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=2) {
        for q in s.qs(&[2, 3]) {
            let (ev, cap) = (s.ev, s.cap);
            out.push(Task::new("serre", hall_params(None, n, q, ev), points(q, n * (n + 1)), move || {
                let sp = q_space(n, n + 1, q, cap)?;
                let f = varpi(&serre_element(-i64::from(n)).map_err(err)?, &sp, ev).map_err(err)?;
                Ok(f.support().map(|k| Witness::new(k, "0", f.value(k))).collect())
            }));
        }
    }
    out
}

pub fn cor58(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=6) {
        for m in s.ms(n) {
            out.push(Task::new("cor58", params(&[("N", n.into()), ("m", m.into())]), 0, move || {
                let d = Rank2Datum::new(n).map_err(err)?;
                let lhs = to_coords(&reassemble(m, n).map_err(err)?, m, d).map_err(err)?;
                let rhs = to_coords(&FreeElement::word(DividedWord::i_j_i(0, m)), m, d).map_err(err)?;
                Ok(coord_witnesses(lhs.coords(), rhs.coords()))
            }));
        }
    }
    out
}

pub fn cor59(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    let symbolic_ns = s.ns(1..=6);
    for &n in &symbolic_ns {
        for m in s.ms(n) {
            out.push(Task::new("cor59.recursion", params(&[("N", n.into()), ("m", m.into())]), 0, move || {
                let closed: Vec<_> = (0..=m).map(|p| c_closed(m, p, n)).collect();
                let rec = c_recursive(m, n).map_err(err)?;
                let chi = chi_e_symbolic(m, n).map_err(err)?;
                let mut w = coord_witnesses(&rec, &closed);
                w.extend(coord_witnesses(chi.coords(), &closed));
                Ok(w)
            }));
        }
    }
    for n in s.ns(1..=3) {
        for m in s.ms(n) {
            for q in s.qs(&[2, 3]) {
                let (ev, cap) = (s.ev, s.cap);
                out.push(Task::new("cor59.hall", hall_params(Some(m), n, q, ev), points(q, n * m), move || {
                    let sp = q_space(n, m, q, cap)?;
                    let d = Rank2Datum::new(n).map_err(err)?;
                    let lhs = varpi(&d.f(m), &sp, ev).map_err(err)?;
                    let rhs = avatar_in(Avatar::E(m), &sp, ev).map_err(err)?;
                    function_witnesses(&lhs, &rhs)
                }));
            }
        }
    }
    out
}

pub fn thm57(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=3) {
        for m in s.ms(n.min(3)) {
            for p in 0..=m {
                for q in s.qs(&[2, 3]) {
                    let (ev, cap) = (s.ev, s.cap);
                    let mut ps = hall_params(Some(m), n, q, ev);
                    ps.insert("p".into(), p.into());
                    out.push(Task::new("thm57", ps, points(q, n * m), move || {
                        let sp = q_space(n, m, q, cap)?;
                        let lhs = avatar_in(Avatar::I(m, p), &sp, ev).map_err(err)?;
                        let rhs = varpi(&monomial(m, m - p), &sp, ev).map_err(err)?;
                        function_witnesses(&rhs, &lhs)
                    }));
                }
            }
        }
    }
    out
}

fn restrict(f: &HallFunction, l: Locus) -> Result<HallFunction, String> {
    transfer(f, l, TransferMode::Restrict).map_err(err)
}

pub fn omega(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=3) {
        for m in s.ms(n) {
            for q in s.qs(&[2, 3]) {
                let (ev, cap) = (s.ev, s.cap);
                let cost = points(q, n * m).max(points(q, n * (n - m)));
                out.push(Task::new("omega", hall_params(Some(m), n, q, ev), cost, move || {
                    let d = Rank2Datum::new(n).map_err(err)?;
                    let f = varpi(&d.f(m), &q_space(n, m, q, cap)?, ev).map_err(err)?;
                    let lhs = omega_i(&restrict(&f, Locus::SinkOpen)?).map_err(err)?;
                    let t = lusztig_t(&d.f(m), m, d, Direction::Forward).map_err(err)?;
                    let g = varpi(&t, &q_prime_space(n, n - m, q, cap)?, ev).map_err(err)?;
                    function_witnesses(&lhs, &restrict(&g, Locus::SourceOpen)?)
                }));
            }
        }
    }
    out
}

pub fn prop510(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=3) {
        for m in s.ms(n) {
            for q in s.qs(&[2, 3]) {
                let (ev, cap) = (s.ev, s.cap);
                let cost = points(q, n * m).max(points(q, n * (n - m)));
                out.push(Task::new("prop510", hall_params(Some(m), n, q, ev), cost, move || {
                    let e = avatar_in(Avatar::E(m), &q_space(n, m, q, cap)?, ev).map_err(err)?;
                    let lhs = omega_i(&restrict(&e, Locus::SinkOpen)?).map_err(err)?;
                    let target = q_prime_space(n, n - m, q, cap)?;
                    let rhs = avatar_in(Avatar::E(n - m), &target, ev).map_err(err)?;
                    function_witnesses(&lhs, &restrict(&rhs, Locus::SourceOpen)?)
                }));
            }
        }
    }
    out
}

pub fn resolution(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=6) {
        for m in s.ms(n) {
            out.push(Task::new("resolution", params(&[("N", n.into()), ("m", m.into())]), 0, move || {
                let shadow = resolution_shadow(m, n).map_err(err)?;
                let chi = chi_e_symbolic(m, n).map_err(err)?;
                let mut w = coord_witnesses(shadow.euler_characteristic().coords(), chi.coords());
                if shadow.terms.len() != m as usize + 1 {
                    w.push(Witness::new(0, format!("{} terms", m + 1), format!("{} terms", shadow.terms.len())));
                }
                Ok(w)
            }));
        }
    }
    out
}

/// `--m` lists `d` for the alternating sum and `m` for the subspace bridge.
pub fn qbinom_suite(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    let ds: Vec<u32> = match &s.m {
        Some(ms) => ms.iter().copied().filter(|&d| d >= 1).collect(),
        None => (1..=12).collect(),
    };
    for d in ds {
        out.push(Task::new("qbinom.alternating", params(&[("d", d.into())]), 0, move || {
            let x = qbinom_alternating(d).map_err(err)?;
            Ok(if x.is_zero() { vec![] } else { vec![Witness::new(0, "0", x)] })
        }));
    }
    let ms: Vec<u32> = match &s.m {
        Some(ms) => ms.iter().copied().filter(|&m| m <= 6).collect(),
        None => (0..=4).collect(),
    };
    for m in ms {
        for q in s.qs(&[2, 3, 5]) {
            let ev = s.ev;
            let ps = params(&[("m", m.into()), ("q", q.into()), ("ev", ev.as_str().into())]);
            out.push(Task::new("qbinom.bridge", ps, u128::from(q).pow(m), move || {
                let mut w = Vec::new();
                for p in 0..=m {
                    let b = qbinom(m.into(), p.into()).map_err(err)?;
                    let k = i64::from(p * (m - p));
                    // [m choose p] only has exponents of the parity of k
                    let sign = if ev.sign() < 0 && k % 2 == 1 { -1 } else { 1 };
                    let lhs = &eval_sqrt_q(&b, q, ev).map_err(err)? * &SqrtQValue::q_half_power(k, q);
                    let rhs = SqrtQValue::from_int(sign * gaussian_count(m, p, q) as i64, q);
                    if lhs != rhs {
                        w.push(Witness::new(p.into(), rhs, lhs));
                    }
                }
                Ok(w)
            }));
        }
    }
    out
}

pub fn basis(s: &Settings) -> Vec<Task> {
    let mut out = Vec::new();
    for n in s.ns(1..=3) {
        for m in s.ms(n) {
            for q in s.qs(&[2]) {
                let (ev, cap) = (s.ev, s.cap);
                out.push(Task::new("basis", hall_params(Some(m), n, q, ev), points(q, n * m), move || {
                    let sp = q_space(n, m, q, cap)?;
                    let fs = (0..=m)
                        .map(|p| varpi(&monomial(m, p), &sp, ev))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(err)?;
                    let r = rank_certificate(&fs).map_err(err)?;
                    Ok(if r == m as usize + 1 { vec![] } else { vec![Witness::new(0, m + 1, r)] })
                }));
            }
        }
    }
    out
}

/// The Hall-level suites used to calibrate the evaluation convention.
pub fn calibration_suite(s: &Settings) -> Vec<Task> {
    let mut t = cor59(s);
    t.retain(|t| t.check == "cor59.hall");
    t.extend(thm57(s));
    t.extend(omega(s));
    t.extend(prop510(s));
    t
}

/// Largest task by point count, if it exceeds the cap.
pub fn over_cap(tasks: &[Task], cap: u64) -> Option<&Task> {
    tasks
        .iter()
        .filter(|t| t.points > u128::from(cap))
        .max_by_key(|t| t.points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings() -> Settings {
        Settings::with_defaults(EvalConvention::PlusSqrt, qhall_core::DEFAULT_POINT_CAP)
    }

    #[test]
    fn m_filter_respects_n() {
        let mut s = settings();
        s.n = Some(vec![1]);
        s.m = Some(vec![0, 2]);
        let tasks = omega(&s);
        assert_eq!(tasks.len(), 2);
        assert!(tasks.iter().all(|t| t.params["m"] == 0u32.into()));
    }

    #[test]
    fn small_suites_pass() {
        let mut s = settings();
        s.n = Some(vec![1, 2]);
        s.q = Some(vec![2]);
        for tasks in [serre(&s), cor59(&s), thm57(&s), omega(&s), prop510(&s), basis(&s)] {
            for r in run_tasks(&tasks) {
                assert!(r.pass, "{} {}", r.check, r.params_text());
            }
        }
    }

    #[test]
    fn wrong_convention_produces_point_witnesses() {
        let mut s = settings();
        s.ev = EvalConvention::PlusInvSqrt;
        s.n = Some(vec![2]);
        s.m = Some(vec![2]);
        s.q = Some(vec![2]);
        let reports = run_tasks(&cor59(&s));
        let hall = reports.iter().find(|r| r.check == "cor59.hall").unwrap();
        assert!(!hall.pass);
        assert!(hall.witnesses.iter().all(|w| w.index < 16));
    }

    #[test]
    fn cap_estimate() {
        let mut s = settings();
        s.n = Some(vec![4]);
        s.q = Some(vec![3]);
        let tasks = cor59(&s);
        let t = over_cap(&tasks, 1_000_000).unwrap();
        assert_eq!(t.points, 3u128.pow(16));
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every check is exact; there are no tolerances.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use elias_core::criteria::{
    elias_index, elias_via_ulrich_cover, frobenius_extension, gll_monomial, gorenstein_report,
    gr_is_cm, is_elias, is_mfull_monomial_witness, is_ulrich, type_of_ideal, type_of_quotient,
    ulrich_index,
};
use elias_core::series::{
    colength, contains_in_principal, gll_randomized, is_elias_linear, power_generators,
    BranchedRingModel, GllStatus, SeriesElement, Q,
};
use elias_core::{hilbert_function, quotient_length, NumericalSemigroup, ValueIdeal};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::Semi;

const SEED: u64 = 0x5eed_e11a5;
const SAMPLES: usize = 500;
const TIME_LIMIT: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;

fn ns(g: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(g).unwrap())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_1() -> Outcome {
    let h = ns(&[4, 5, 11]);
    let m = ValueIdeal::maximal(&h);
    let m2 = ValueIdeal::mpower(&h, 2);
    ensure!(h.multiplicity() == 4, "e = {}", h.multiplicity());
    ensure!(m.mu() == 3 && m2.mu() == 3, "mu(m) = {}, mu(m^2) = {}", m.mu(), m2.mu());
    let v = is_elias(&m2).map_err(|e| e.to_string())?;
    let methods = v.methods;
    ensure!(
        v.elias && methods.type_equality && methods.colon_te && methods.fractional_colon && methods.canonical,
        "m^2 verdict {v:?}"
    );
    let tr = m2.trace();
    ensure!(
        tr.minimal_generators() == [8, 9, 10, 11],
        "tr(m^2) generated by {:?}",
        tr.minimal_generators()
    );
    let back = m2.colon(&m).unwrap().intersect(&ValueIdeal::unit(&h)).unwrap();
    ensure!(back == m, "m^2 : m = {back}");
    ensure!(!m.is_subset_of(&tr).unwrap(), "m inside tr(m^2)");
    Ok("mu(m) = mu(m^2) = 3 = e - 1, m^2 Elias by all four routes, tr(m^2) = (8,9,10,11), m^2:m = m".into())
}

fn criterion_2() -> Outcome {
    let h = ns(&[6, 7, 15]);
    let hf: Vec<usize> = (0..6).map(|s| hilbert_function(&h, s)).collect();
    ensure!(hf == [1, 3, 4, 5, 5, 6], "Hilbert function {hf:?}");
    let m4 = ValueIdeal::mpower(&h, 4);
    ensure!(is_elias(&m4).map_err(|e| e.to_string())?.elias, "m^4 not Elias");
    let model = BranchedRingModel::semigroup(&h, BranchedRingModel::required_semigroup_truncation(&h))
        .map_err(|e| e.to_string())?;
    let inside = contains_in_principal(&model, &power_generators(&model, 4), &SeriesElement::t_pow(6))
        .map_err(|e| e.to_string())?;
    ensure!(inside, "m^4 not inside (t^6)");
    Ok(format!("Hilbert {hf:?}, m^4 Elias, m^4 ⊆ (t^6)"))
}

fn criterion_3() -> Outcome {
    for n in 3..=8i64 {
        let gens: Vec<i64> = (n..2 * n).collect();
        let h = ns(&gens);
        let i = ValueIdeal::from_generators(&h, &gens[..gens.len() - 1]).unwrap();
        let cert = elias_via_ulrich_cover(&i, &ValueIdeal::maximal(&h)).map_err(|e| e.to_string())?;
        ensure!(cert.is_some(), "n = {n}: no Ulrich cover certificate");
        ensure!(is_elias(&i).map_err(|e| e.to_string())?.elias, "n = {n}: not Elias");
        let t = type_of_quotient(&i).map_err(|e| e.to_string())?;
        ensure!(t == 1, "n = {n}: type(R/I) = {t}");
    }
    Ok("n = 3..8: cover certificate, Elias, R/I Gorenstein".into())
}

fn criterion_4() -> Outcome {
    let a = SeriesElement::monomial(3, 0, 1, Q::one());
    let b = SeriesElement::monomial(3, 1, 1, Q::one());
    let c = SeriesElement::monomial(3, 2, 1, Q::one());
    let gens = [&a - &b, &b - &c];
    for n in [12, 24] {
        let model = BranchedRingModel::axes(3, n).map_err(|e| e.to_string())?;
        let v = is_elias_linear(&model, &gens).map_err(|e| e.to_string())?;
        ensure!(v.elias, "N = {n}: not Elias, witness {:?}", v.witness);
        let len = colength(&model, &gens).map_err(|e| e.to_string())?;
        ensure!(len == 2, "N = {n}: colength {len}");
    }
    Ok("(a-b, b-c) Elias at N = 12 and 24, colength 2".into())
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for e in 3..=6i64 {
        let h = ns(&[e, e + 1, e * e - e - 1]);
        let (eli, ulr, gll) = (elias_index(&h), ulrich_index(&h), gll_monomial(&h));
        rows.push(format!("e={e}: eli {eli} ulr {ulr} gll {gll}"));
        let target = (e - 1) as u32;
        if h.cm_type() != 2 || h.multiplicity() != e {
            failures.push(format!("e = {e}: type {} multiplicity {}", h.cm_type(), h.multiplicity()));
        }
        if ulr != target {
            failures.push(format!("e = {e}: ulrich_index {ulr}, expected {target}"));
        }
        if eli != 2 {
            failures.push(format!("e = {e}: elias_index {eli}"));
        }
        if gll != target {
            failures.push(format!("e = {e}: gll_monomial {gll}, expected {target}"));
        }
        let model = BranchedRingModel::semigroup(&h, BranchedRingModel::required_semigroup_truncation(&h))
            .map_err(|e| e.to_string())?;
        let first = gll_randomized(&model, target, 16, SEED).map_err(|e| e.to_string())?;
        let again = gll_randomized(&model, target, 16, SEED).map_err(|e| e.to_string())?;
        let last = first.last().expect("at least one row");
        if !matches!(last.status, GllStatus::Success { .. }) {
            failures.push(format!("e = {e}: randomized search found no witness at s = {target}"));
        }
        if first != again {
            failures.push(format!("e = {e}: randomized search not reproducible"));
        }
    }
    if failures.is_empty() {
        Ok(rows.join("; "))
    } else {
        Err(format!("{} [{}]", failures.join("; "), rows.join("; ")))
    }
}

fn criterion_6() -> Outcome {
    let n = Arc::new(NumericalSemigroup::naturals());
    ensure!(elias_index(&n) == 1, "eli(N) = {}", elias_index(&n));
    for k in 1..=5 {
        let h = ns(&[2, 2 * k + 1]);
        ensure!(elias_index(&h) == 2, "eli<2,{}> = {}", 2 * k + 1, elias_index(&h));
    }
    let ext = Arc::new(frobenius_extension(&ns(&[2, 3])).map_err(|e| e.to_string())?);
    ensure!(elias_index(&ext) == 1, "extension of <2,3> has eli {}", elias_index(&ext));
    for g in [[3, 4], [3, 5], [2, 7]] {
        let ext = Arc::new(frobenius_extension(&ns(&g)).map_err(|e| e.to_string())?);
        ensure!(elias_index(&ext) == 2, "extension {ext} of {g:?} has eli {}", elias_index(&ext));
    }
    Ok("eli(N) = 1, eli<2,2k+1> = 2, Frobenius extensions as stated".into())
}

/// Violation counts for the ten randomized checks.
fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut violations = [0usize; 10];
    let mut notes: Vec<String> = Vec::new();
    let mut flag = |item: usize, note: String, violations: &mut [usize; 10]| {
        violations[item] += 1;
        if notes.len() < 5 {
            notes.push(note);
        }
    };
    for _ in 0..SAMPLES {
        let gens = common::random_semigroup(&mut rng, 8, 20);
        let oracle = Semi::new(&gens);
        let h = ns(&gens);
        let e = h.multiplicity();
        let vals = common::random_ideal_values(&mut rng, &oracle);
        let i = ValueIdeal::from_generators(&h, &vals).unwrap();
        let tag = format!("{h} I={vals:?}");

        // (b) unanimity, plus agreement with the brute-force oracle
        let verdict = match is_elias(&i) {
            Ok(v) => v,
            Err(err) => {
                flag(1, format!("(b) {tag}: {err}"), &mut violations);
                continue;
            }
        };
        if verdict.elias != common::elias(&oracle, &common::ideal(&oracle, &vals)) {
            flag(1, format!("(b) {tag}: oracle disagrees"), &mut violations);
        }
        // (a)
        if verdict.type_ideal < verdict.type_quotient {
            flag(0, format!("(a) {tag}"), &mut violations);
        }
        // (c) subideals of an Elias ideal
        if verdict.elias {
            let other = common::random_ideal_values(&mut rng, &oracle);
            let j = ValueIdeal::from_generators(&h, &other).unwrap();
            for sub in [i.product(&j).unwrap(), i.intersect(&j).unwrap()] {
                if !is_elias(&sub).unwrap().elias {
                    flag(2, format!("(c) {tag} sub {sub}"), &mut violations);
                }
            }
        }
        // (d) principal and canonical
        let x = vals[rng.gen_range(0..vals.len())];
        let principal = ValueIdeal::from_generators(&h, &[x]).unwrap();
        let shifted_k = ValueIdeal::canonical(&h).shift(h.frobenius() + 1);
        if !h.is_regular() && !is_elias(&shifted_k).unwrap().elias || !is_elias(&principal).unwrap().elias {
            flag(3, format!("(d) {h} x={x}"), &mut violations);
        }
        // (e)
        let by_mu = i.mu() as i64 == e;
        let by_type = type_of_ideal(&i).unwrap() as i64 == e;
        match is_ulrich(&i) {
            Ok(u) if u == by_mu && u == by_type => {}
            other => flag(4, format!("(e) {tag}: {other:?} mu {by_mu} type {by_type}"), &mut violations),
        }
        // (f)
        if verdict.elias && is_mfull_monomial_witness(&i).unwrap() {
            let inside = i.is_subset_of(&ValueIdeal::from_generators(&h, &[e]).unwrap()).unwrap();
            let j = i.shift(-e);
            if !inside || !j.is_integral() || !is_ulrich(&j).unwrap() {
                flag(5, format!("(f) {tag}"), &mut violations);
            }
        }
        // (g)
        let (eli, gll, ulr) = (elias_index(&h), gll_monomial(&h), ulrich_index(&h));
        let chain = eli <= gll && gll <= ulr + 1;
        let graded = !gr_is_cm(&h) || (eli == gll && gll == ulr + 1);
        if !chain || !graded {
            flag(6, format!("(g) {h}: eli {eli} gll {gll} ulr {ulr}"), &mut violations);
        }
        // (h)
        let conductor = ValueIdeal::conductor(&h);
        let trace = i.trace();
        if is_elias(&conductor).unwrap().elias || (!trace.is_unit() && is_elias(&trace).unwrap().elias) {
            flag(7, format!("(h) {tag}"), &mut violations);
        }
        // (i)
        if verdict.elias && i.is_extension_module() {
            let lifted = i
                .colon(&ValueIdeal::maximal(&h))
                .unwrap()
                .intersect(&ValueIdeal::unit(&h))
                .unwrap();
            if !lifted.is_subset_of(&conductor).unwrap() {
                flag(8, format!("(i) {tag}"), &mut violations);
            }
        }
        // (j)
        let truncation =
            BranchedRingModel::required_semigroup_truncation(&h) + vals[vals.len() - 1];
        let model = BranchedRingModel::semigroup(&h, truncation).unwrap();
        let series: Vec<SeriesElement> = vals.iter().map(|&v| SeriesElement::t_pow(v)).collect();
        let linear = is_elias_linear(&model, &series).map(|v| v.elias);
        let len = colength(&model, &series);
        let expected_len = quotient_length(&ValueIdeal::unit(&h), &i).unwrap();
        if linear != Ok(verdict.elias) || len != Ok(expected_len) {
            flag(9, format!("(j) {tag}: {linear:?} {len:?}"), &mut violations);
        }
    }
    let summary = "abcdefghij"
        .chars()
        .zip(violations)
        .map(|(c, v)| format!("({c}) {v}"))
        .collect::<Vec<_>>()
        .join(" ");
    if violations.iter().all(|&v| v == 0) {
        Ok(format!("{SAMPLES} samples, violations {summary}"))
    } else {
        Err(format!("violations {summary}; first: {}", notes.join(" | ")))
    }
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut samples = 0;
    let mut elias_samples = 0;
    let mut rings = std::collections::BTreeSet::new();
    while samples < 200 {
        let gens = common::random_semigroup(&mut rng, 8, 20);
        let oracle = Semi::new(&gens);
        if !oracle.symmetric() {
            continue;
        }
        let h = ns(&gens);
        let vals = common::random_ideal_values(&mut rng, &oracle);
        let i = ValueIdeal::from_generators(&h, &vals).unwrap();
        let report = gorenstein_report(&i).map_err(|e| format!("{h} I={vals:?}: {e}"))?;
        let elias = is_elias(&i).unwrap().elias;
        ensure!(report.delta_is_one == elias, "{h} I={vals:?}: delta and Elias differ");
        ensure!(report.auslander_index == elias_index(&h), "{h}: ind != eli");
        ensure!(!elias || report.contained_in_m_trace, "{h} I={vals:?}: I not in m tr(I)");
        samples += 1;
        elias_samples += usize::from(elias);
        rings.insert(gens);
    }
    let h = ns(&[3, 4]);
    let ind = gorenstein_report(&ValueIdeal::maximal(&h)).unwrap().auslander_index;
    Ok(format!(
        "{samples} samples on {} symmetric rings ({elias_samples} Elias); ind<3,4> = {ind} = eli<3,4> = {}",
        rings.len(),
        elias_index(&h)
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("<4,5,11>: m^2 Elias, trace and colon", criterion_1),
        ("<6,7,15>: Hilbert function and m^4", criterion_2),
        ("<n..2n-1>: Ulrich cover family", criterion_3),
        ("axes n=3: (a-b, b-c)", criterion_4),
        ("<e,e+1,e^2-e-1>: index family", criterion_5),
        ("Elias index one and two", criterion_6),
        ("randomized property suites", criterion_7),
        ("Gorenstein reporting", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > TIME_LIMIT => Err(format!("took {elapsed:.2?}")),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!("criterion {} {status} ({elapsed:.2?}) {name}: {detail}", k + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

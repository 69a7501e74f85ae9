//! What each command computes, as serializable records with a plain-text
//! rendering.

use std::fmt::Write as _;
use std::sync::Arc;

use elias_core::criteria::{
    elias_index, elias_via_ulrich_cover, frobenius_extension, gll_monomial, gorenstein_report,
    gr_is_cm, ulrich_index, GorensteinReport,
};
use elias_core::series::{
    colength, gll_randomized, gll_upper_bound, is_elias_linear, power_generators,
    truncation_stability_check, BranchedRingModel, GllRow, GllStatus, SeriesElement,
    WitnessSource,
};
use elias_core::{hilbert_function, CriteriaReport, NumericalSemigroup};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::parse::{eval, eval_series, IdealExpr, Ring};

/// Hilbert function values printed by `info`.
const HILBERT_PREFIX: u32 = 8;
/// Truncation used for axis rings unless one is given.
const AXIS_TRUNCATION: i64 = 12;

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub s_max: Option<u32>,
    pub trials: usize,
    pub seed: u64,
    pub truncation: Option<i64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            s_max: None,
            trials: 32,
            seed: 0,
            truncation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupInfo {
    pub generators: Vec<i64>,
    pub e: i64,
    pub frobenius: i64,
    pub genus: usize,
    pub apery: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub gorenstein: bool,
    pub regular: bool,
    pub hilbert: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisInfo {
    pub branches: usize,
    pub e: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Info {
    Semigroup(SemigroupInfo),
    Axes(AxisInfo),
}

pub fn info(ring: &Ring) -> Result<Info, CliError> {
    Ok(match ring {
        Ring::Semigroup(h) => Info::Semigroup(SemigroupInfo {
            generators: h.generators().to_vec(),
            e: h.multiplicity(),
            frobenius: h.frobenius(),
            genus: h.genus(),
            apery: h.apery_set(h.multiplicity())?,
            pseudo_frobenius: h.pseudo_frobenius().to_vec(),
            cm_type: h.cm_type(),
            gorenstein: h.is_symmetric(),
            regular: h.is_regular(),
            hilbert: (0..HILBERT_PREFIX).map(|s| hilbert_function(h, s)).collect(),
        }),
        Ring::Axes(n) => Info::Axes(AxisInfo {
            branches: *n,
            e: *n,
        }),
    })
}

pub fn render_info(ring: &Ring, info: &Info) -> String {
    let mut out = String::new();
    match info {
        Info::Semigroup(i) => {
            let _ = writeln!(out, "semigroup        {ring}");
            if i.regular {
                let _ = writeln!(out, "regular ring: k[[t]]");
            }
            let _ = writeln!(out, "multiplicity     {}", i.e);
            let _ = writeln!(out, "frobenius        {}", i.frobenius);
            let _ = writeln!(out, "genus            {}", i.genus);
            let _ = writeln!(out, "apery (e)        {}", list(&i.apery));
            let _ = writeln!(out, "pseudo-frobenius {}", list(&i.pseudo_frobenius));
            let _ = writeln!(out, "type             {}", i.cm_type);
            let _ = writeln!(out, "gorenstein       {}", i.gorenstein);
            let _ = writeln!(out, "hilbert          {}", list(&i.hilbert));
        }
        Info::Axes(a) => {
            let _ = writeln!(out, "coordinate axes in {} variables", a.branches);
            let _ = writeln!(out, "multiplicity     {}", a.e);
        }
    }
    out
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisRing {
    pub branches: usize,
    pub truncation: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisIdeal {
    pub generators: Vec<String>,
    pub colength: usize,
}

/// Elias verdict over an axis ring, from the series model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisReport {
    pub ring: AxisRing,
    pub ideal: AxisIdeal,
    pub elias: bool,
    /// An element of `I :_Q m` outside R.
    pub witness: Option<String>,
    pub colon_dim: usize,
    /// The verdict was rederived at twice the truncation.
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Check {
    Semigroup(Box<CriteriaReport>),
    Axes(AxisReport),
}

fn axis_model(n: usize, options: &SearchOptions) -> Result<BranchedRingModel, CliError> {
    Ok(BranchedRingModel::axes(n, options.truncation.unwrap_or(AXIS_TRUNCATION))?)
}

fn semigroup_model(
    h: &Arc<NumericalSemigroup>,
    options: &SearchOptions,
) -> Result<BranchedRingModel, CliError> {
    let n = options
        .truncation
        .unwrap_or_else(|| BranchedRingModel::required_semigroup_truncation(h));
    Ok(BranchedRingModel::semigroup(h, n)?)
}

fn show(model: &BranchedRingModel, x: &SeriesElement) -> String {
    if model.branch_count() == 1 {
        return x.display_with("t");
    }
    let mut acc = String::new();
    for b in 0..model.branch_count() {
        let var = ((b'a' + b as u8) as char).to_string();
        let mut line = SeriesElement::zero(1);
        for (&e, c) in x.branch(b) {
            line.set(0, e, c.clone());
        }
        if line.is_zero() {
            continue;
        }
        let part = line.display_with(&var);
        if acc.is_empty() {
            acc = part;
        } else if let Some(rest) = part.strip_prefix('-') {
            acc = format!("{acc} - {rest}");
        } else {
            acc = format!("{acc} + {part}");
        }
    }
    if acc.is_empty() {
        "0".into()
    } else {
        acc
    }
}

/// `check`: the criteria report, with a randomized gll bound when
/// `trials > 0` over a semigroup ring.
pub fn check(ring: &Ring, expr: &IdealExpr, options: &SearchOptions) -> Result<Check, CliError> {
    match ring {
        Ring::Semigroup(h) => {
            let ideal = eval(expr, h)?;
            let mut report = CriteriaReport::build(&ideal)?;
            if options.trials > 0 {
                report = report.with_randomized_gll(&ideal, options.trials, options.seed)?;
            }
            Ok(Check::Semigroup(Box::new(report)))
        }
        Ring::Axes(n) => {
            let model = axis_model(*n, options)?;
            let gens = eval_series(expr, &model)?;
            let verdict = is_elias_linear(&model, &gens)?;
            let stable =
                truncation_stability_check(&model, |m| Ok(is_elias_linear(m, &gens)?.elias))?
                    == verdict.elias;
            Ok(Check::Axes(AxisReport {
                ring: AxisRing {
                    branches: *n,
                    truncation: model.truncation(),
                },
                ideal: AxisIdeal {
                    generators: gens.iter().map(|g| show(&model, g)).collect(),
                    colength: colength(&model, &gens)?,
                },
                elias: verdict.elias,
                witness: verdict.witness.map(|w| show(&model, &w)),
                colon_dim: verdict.colon_dim,
                stable,
            }))
        }
    }
}

pub fn render_check(check: &Check) -> String {
    let mut out = String::new();
    match check {
        Check::Semigroup(r) => {
            let _ = writeln!(out, "ring             <{}>  e={} type={} F={} gorenstein={}",
                list(&r.ring.generators), r.ring.e, r.ring.cm_type, r.ring.frobenius, r.ring.gorenstein);
            let _ = writeln!(out, "ideal            ({})  mu={} order={} colength={}",
                list(&r.ideal.generators), r.ideal.mu, r.ideal.order, r.ideal.colength);
            let _ = writeln!(out, "type(I)          {}", r.type_ideal);
            let _ = writeln!(out, "type(R/I)        {}", r.type_quotient);
            let _ = writeln!(out, "elias            {}", r.elias);
            let m = &r.elias_methods;
            let _ = writeln!(out, "  type equality  {}", m.type_equality);
            let _ = writeln!(out, "  t^e colon      {}", m.colon_te);
            let _ = writeln!(out, "  I :_Q m in R   {}", m.fractional_colon);
            let _ = writeln!(out, "  K in m(K:I)    {}", m.canonical);
            let p = &r.predicates;
            let _ = writeln!(out, "ulrich           {}", p.ulrich);
            let _ = writeln!(out, "m-full (t^e)     {}", p.mfull_te);
            let _ = writeln!(out, "full             {}", p.full);
            let _ = writeln!(out, "integrally closed {}", p.integrally_closed);
            let _ = writeln!(out, "k[[t]]-module    {}", p.extension_module);
            let i = &r.indices;
            let gll = i.gll_upper_randomized.map_or("-".to_string(), |s| s.to_string());
            let _ = writeln!(out, "indices          eli={} ulr={} gll_monomial={} gll_randomized<={gll}",
                i.eli, i.ulr, i.gll_monomial);
            let c = &r.certificates;
            if let Some(w) = c.fractional_colon_witness {
                let _ = writeln!(out, "witness          t^{w} in I :_Q m, not in R");
            }
            if let Some(g) = c.principal_container {
                let _ = writeln!(out, "certificate      I inside (t^{g})");
            }
            if let Some(s) = &c.small_mu {
                let _ = writeln!(out, "certificate      mu={} < e={}, type(R/I)={}", s.mu, s.multiplicity, s.type_quotient);
            }
            if let Some(p) = &c.product_with_m {
                let _ = writeln!(out, "certificate      mu(mI)={} <= mu(I)={} = e-1: mI Elias", p.mu_of_product, p.mu);
            }
            if let Some(u) = &c.ulrich_cover {
                let _ = writeln!(out, "certificate      Ulrich cover m^{} blocked at {:?}", u.power, u.blocking);
            }
        }
        Check::Axes(a) => {
            let _ = writeln!(out, "ring             axis:{} (truncation {})", a.ring.branches, a.ring.truncation);
            let _ = writeln!(out, "ideal            ({})  colength={}", a.ideal.generators.join(", "), a.ideal.colength);
            let _ = writeln!(out, "elias            {}", a.elias);
            let _ = writeln!(out, "colon dimension  {}", a.colon_dim);
            let _ = writeln!(out, "stable at 2N     {}", a.stable);
            if let Some(w) = &a.witness {
                let _ = writeln!(out, "witness          {w}");
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GllRowReport {
    pub s: u32,
    pub success: bool,
    pub witness: Option<String>,
    pub source: Option<String>,
    pub attempts: Option<usize>,
}

fn row_report(model: &BranchedRingModel, row: &GllRow) -> GllRowReport {
    match &row.status {
        GllStatus::Success { witness, source } => GllRowReport {
            s: row.s,
            success: true,
            witness: Some(show(model, witness)),
            source: Some(match source {
                WitnessSource::Generator(i) => format!("generator {i}"),
                WitnessSource::Random { trial, coefficients } => {
                    format!("trial {trial} coefficients {coefficients:?}")
                }
            }),
            attempts: None,
        },
        GllStatus::NoWitnessFound { attempts } => GllRowReport {
            s: row.s,
            success: false,
            witness: None,
            source: None,
            attempts: Some(*attempts),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GllReport {
    pub truncation: i64,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<GllRowReport>,
    /// Smallest `s` with a verified witness.
    pub upper_bound: Option<u32>,
}

/// `gll`: randomized search for `x` with `m^s ⊆ (x)`, `s = 1..=s_max`.
pub fn gll(ring: &Ring, options: &SearchOptions) -> Result<GllReport, CliError> {
    let (model, default_max) = match ring {
        Ring::Semigroup(h) => (semigroup_model(h, options)?, gll_monomial(h)),
        Ring::Axes(n) => (axis_model(*n, options)?, 3),
    };
    let s_max = options.s_max.unwrap_or(default_max);
    let rows = gll_randomized(&model, s_max, options.trials, options.seed)?;
    Ok(GllReport {
        truncation: model.truncation(),
        seed: options.seed,
        trials: options.trials,
        upper_bound: gll_upper_bound(&rows),
        rows: rows.iter().map(|r| row_report(&model, r)).collect(),
    })
}

pub fn render_gll(report: &GllReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "randomized gll search (truncation {}, seed {}, {} trials)",
        report.truncation, report.seed, report.trials);
    for r in &report.rows {
        match (&r.witness, &r.source) {
            (Some(w), Some(src)) => {
                let _ = writeln!(out, "  s={:<3} SUCCESS   x = {w}  ({src})", r.s);
            }
            _ => {
                let _ = writeln!(out, "  s={:<3} NO_WITNESS_FOUND after {} attempts (inconclusive)",
                    r.s, r.attempts.unwrap_or(0));
            }
        }
    }
    let bound = report.upper_bound.map_or("none".to_string(), |s| s.to_string());
    let _ = writeln!(out, "gll upper bound  {bound}");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indices {
    /// Absent over axis rings when no power up to `s_max` is Elias.
    pub eli: Option<u32>,
    pub ulr: Option<u32>,
    pub gll_monomial: Option<u32>,
    pub gr_cm: Option<bool>,
    pub gll: GllReport,
}

pub fn indices(ring: &Ring, options: &SearchOptions) -> Result<Indices, CliError> {
    match ring {
        Ring::Semigroup(h) => Ok(Indices {
            eli: Some(elias_index(h)),
            ulr: Some(ulrich_index(h)),
            gll_monomial: Some(gll_monomial(h)),
            gr_cm: Some(gr_is_cm(h)),
            gll: gll(ring, options)?,
        }),
        Ring::Axes(n) => {
            let s_max = options.s_max.unwrap_or(3);
            let model = axis_model(*n, options)?;
            let mut eli = None;
            for s in 1..=s_max {
                if is_elias_linear(&model, &power_generators(&model, s))?.elias {
                    eli = Some(s);
                    break;
                }
            }
            Ok(Indices {
                eli,
                ulr: None,
                gll_monomial: None,
                gr_cm: None,
                gll: gll(ring, options)?,
            })
        }
    }
}

pub fn render_indices(ring: &Ring, idx: &Indices) -> String {
    let opt = |v: Option<u32>| v.map_or("-".to_string(), |s| s.to_string());
    let mut out = String::new();
    let _ = writeln!(out, "ring             {ring}");
    let _ = writeln!(out, "eli              {}", opt(idx.eli));
    let _ = writeln!(out, "ulr              {}", opt(idx.ulr));
    let _ = writeln!(out, "gll (monomial)   {}", opt(idx.gll_monomial));
    if let Some(cm) = idx.gr_cm {
        let _ = writeln!(out, "gr_m(R) CM       {cm}");
    }
    out.push_str(&render_gll(&idx.gll));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub generators: Vec<i64>,
    pub eli: u32,
}

pub fn extension(ring: &Ring) -> Result<Extension, CliError> {
    let Ring::Semigroup(h) = ring else {
        return Err(CliError::Unsupported("Frobenius extension of an axis ring".into()));
    };
    let ext = Arc::new(frobenius_extension(h)?);
    Ok(Extension {
        generators: ext.generators().to_vec(),
        eli: elias_index(&ext),
    })
}

pub fn gorenstein(ring: &Ring, expr: &IdealExpr) -> Result<GorensteinReport, CliError> {
    let Ring::Semigroup(h) = ring else {
        return Err(CliError::Unsupported("Gorenstein report over an axis ring".into()));
    };
    Ok(gorenstein_report(&eval(expr, h)?)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub certified: bool,
    pub blocking: Vec<(i64, i64)>,
}

pub fn cover(ring: &Ring, ideal: &IdealExpr, cover: &IdealExpr) -> Result<Cover, CliError> {
    let Ring::Semigroup(h) = ring else {
        return Err(CliError::Unsupported("Ulrich cover over an axis ring".into()));
    };
    let cert = elias_via_ulrich_cover(&eval(ideal, h)?, &eval(cover, h)?)?;
    Ok(Cover {
        certified: cert.is_some(),
        blocking: cert.map(|c| c.blocking).unwrap_or_default(),
    })
}

/// Looks up a dotted path such as `ring.type` or `indices.eli`; array
/// elements are addressed by index.
pub fn lookup<'a>(value: &'a serde_json::Value, path: &str) -> Option<&'a serde_json::Value> {
    path.split('.').filter(|p| !p.is_empty()).try_fold(value, |v, key| match v {
        serde_json::Value::Object(map) => map.get(key),
        serde_json::Value::Array(items) => key.parse::<usize>().ok().and_then(|i| items.get(i)),
        _ => None,
    })
}

/// Parses an expected value: JSON when it parses, a bare string otherwise.
pub fn expected_value(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap_or_else(|_| serde_json::Value::String(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_ring};
    use serde_json::json;

    fn opts() -> SearchOptions {
        SearchOptions {
            trials: 0,
            ..SearchOptions::default()
        }
    }

    #[test]
    fn info_table() {
        let ring = parse_ring("6,7,15").unwrap();
        let Info::Semigroup(i) = info(&ring).unwrap() else { panic!() };
        assert_eq!(i.hilbert[..6], [1, 3, 4, 5, 5, 6]);
        let ring = parse_ring("4,5,11").unwrap();
        let v = serde_json::to_value(info(&ring).unwrap()).unwrap();
        assert_eq!(v["frobenius"], 7);
        assert_eq!(v["type"], 2);
        assert_eq!(v["apery"], json!([0, 5, 10, 11]));
        assert!(render_info(&parse_ring("1").unwrap(), &info(&parse_ring("1").unwrap()).unwrap())
            .contains("regular ring"));
    }

    #[test]
    fn axis_check() {
        let ring = parse_ring("axis:3").unwrap();
        let expr = parse_ideal("gens: a-b, b-c", &ring).unwrap();
        let Check::Axes(r) = check(&ring, &expr, &opts()).unwrap() else { panic!() };
        assert!(r.elias && r.stable);
        assert_eq!(r.ideal.colength, 2);
        assert_eq!(r.ideal.generators, vec!["a - b", "b - c"]);
        let expr = parse_ideal("m", &ring).unwrap();
        let Check::Axes(r) = check(&ring, &expr, &opts()).unwrap() else { panic!() };
        assert!(!r.elias);
        assert!(r.witness.is_some());
    }

    #[test]
    fn json_round_trip() {
        let ring = parse_ring("4,5,11").unwrap();
        for src in ["mpow:2", "conductor", "gens:9", "trace(mpow:2)"] {
            let c = check(&ring, &parse_ideal(src, &ring).unwrap(), &SearchOptions::default()).unwrap();
            let text = serde_json::to_string(&c).unwrap();
            let back: Check = serde_json::from_str(&text).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn paths() {
        let v = json!({"ring": {"type": 2}, "ideal": {"generators": [8, 9, 10]}});
        assert_eq!(lookup(&v, "ring.type"), Some(&json!(2)));
        assert_eq!(lookup(&v, "ideal.generators.1"), Some(&json!(9)));
        assert_eq!(lookup(&v, "ideal.mu"), None);
        assert_eq!(expected_value("[8,9,10]"), json!([8, 9, 10]));
        assert_eq!(expected_value("true"), json!(true));
        assert_eq!(expected_value("NotSymmetric"), json!("NotSymmetric"));
    }

    #[test]
    fn index_report() {
        let ring = parse_ring("5,6,19").unwrap();
        let idx = indices(&ring, &SearchOptions { trials: 4, ..SearchOptions::default() }).unwrap();
        assert_eq!((idx.eli, idx.ulr, idx.gll_monomial), (Some(2), Some(4), Some(4)));
        assert_eq!(idx.gll.upper_bound, Some(4));
        let ring = parse_ring("axis:3").unwrap();
        let idx = indices(&ring, &SearchOptions { trials: 4, ..SearchOptions::default() }).unwrap();
        assert_eq!(idx.eli, Some(2));
    }
}

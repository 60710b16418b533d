use std::io::Write;

use hecke::asymptotics::{
    check_lemma71, check_lemma72, estimate_count, modular_closed_form, modular_log10,
    primitive_ratio_series, Boundary,
};
use hecke::counting::{
    dp_class_counts, primitive_from_totals, Setting, SymmetricClassCounter,
};
use hecke::group::HeckeParams;
use hecke::recip::{
    enumerate_reciprocal_classes_sharded, oracle_enumerate_reciprocal, sandwich_by_label,
    sandwich_by_shape, split_primitive_counts, structure_check, ClassCensus,
    ReciprocalClassRecord, ReciprocalType,
};
use num_bigint::BigUint;
use serde::Serialize;

use crate::args::{
    CommonArgs, CompareArgs, CountArgs, EnumerateArgs, EstimateArgs, Format, Formula, Method,
    VerifyArgs,
};
use crate::report::{emit_report, fixed6, log10_biguint, write_csv, write_json, CountReportRow};
use crate::CliError;

/// Above this length `compare` takes exact counts from the recurrence.
pub const ENUMERATION_LIMIT: u32 = 24;

pub(crate) struct Plan {
    pub params: Vec<HeckeParams>,
    pub lengths: Vec<u32>,
    pub shards: usize,
}

/// Validated `--p` and length lists. `--max-length` means a single bound,
/// or every bound from 4 up to it when `range` is set.
pub(crate) fn plan(common: &CommonArgs, range: bool) -> Result<Plan, CliError> {
    let mut ps = common.p.clone();
    ps.sort_unstable();
    ps.dedup();
    let params = ps
        .into_iter()
        .map(|p| HeckeParams::new(p).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut lengths = match (common.max_length, common.lengths.is_empty()) {
        (Some(m), _) if range => (4.min(m)..=m).collect(),
        (Some(m), _) => vec![m],
        (None, false) => common.lengths.clone(),
        (None, true) => {
            return Err(CliError::Usage(
                "one of --max-length or --lengths is required".into(),
            ))
        }
    };
    lengths.sort_unstable();
    lengths.dedup();
    Ok(Plan {
        params,
        lengths,
        shards: usize::from(common.parallel),
    })
}

fn records(
    params: &HeckeParams,
    x: u32,
    method: Method,
    shards: usize,
) -> Result<Vec<ReciprocalClassRecord>, CliError> {
    Ok(match method {
        Method::Oracle => oracle_enumerate_reciprocal(params, x)?,
        _ => enumerate_reciprocal_classes_sharded(params, x, shards)?,
    })
}

#[derive(Serialize)]
struct ClassRow {
    p: u32,
    length: u32,
    #[serde(rename = "type")]
    rtype: String,
    primitive: bool,
    key: String,
    shapes: String,
    tuple: Option<String>,
}

pub(crate) fn enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let plan = plan(&args.common, false)?;
    if args.method == Method::Dp {
        return Err(CliError::Usage(
            "enumerate lists classes; use --method enumerate or oracle".into(),
        ));
    }
    let x = *plan.lengths.last().expect("nonempty");
    let mut rows = Vec::new();
    for params in &plan.params {
        for rec in records(params, x, args.method, plan.shards)? {
            if args.list {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    rec.length, rec.rtype, rec.primitive, rec.key
                )?;
            } else {
                rows.push(ClassRow {
                    p: params.p(),
                    length: rec.length,
                    rtype: rec.rtype.to_string(),
                    primitive: rec.primitive,
                    key: rec.key.to_string(),
                    shapes: rec.shapes.names().join(";"),
                    tuple: rec.tuple.as_ref().map(ToString::to_string),
                });
            }
        }
    }
    if !args.list {
        match args.common.format.unwrap_or(Format::Csv) {
            Format::Csv if rows.is_empty() => {
                writeln!(out, "p,length,type,primitive,key,shapes,tuple")?
            }
            Format::Csv => write_csv(&rows, out)?,
            Format::Json => write_json(&rows, out)?,
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CountRow {
    p: u32,
    x: u32,
    method: &'static str,
    count: String,
}

fn total_count(
    params: &HeckeParams,
    x: u32,
    method: Method,
    shards: usize,
) -> Result<BigUint, CliError> {
    match method {
        Method::Dp => {
            if params.is_even() {
                return Err(CliError::Usage(format!(
                    "--method dp counts all reciprocal classes only for odd p (got p = {})",
                    params.p()
                )));
            }
            Ok(dp_class_counts(params, x)?.total)
        }
        _ => Ok(BigUint::from(records(params, x, method, shards)?.len())),
    }
}

pub(crate) fn count(args: &CountArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let plan = plan(&args.common, false)?;
    let method = match args.method {
        Method::Enumerate => "enumerate",
        Method::Oracle => "oracle",
        Method::Dp => "dp",
    };
    let mut rows = Vec::new();
    for params in &plan.params {
        for &x in &plan.lengths {
            rows.push(CountRow {
                p: params.p(),
                x,
                method,
                count: total_count(params, x, args.method, plan.shards)?.to_string(),
            });
        }
    }
    match args.common.format {
        Some(Format::Csv) => write_csv(&rows, out)?,
        Some(Format::Json) => write_json(&rows, out)?,
        None if rows.len() == 1 => writeln!(out, "{}", rows[0].count)?,
        None => {
            for r in &rows {
                writeln!(out, "{}\t{}\t{}", r.p, r.x, r.count)?;
            }
        }
    }
    Ok(())
}

fn resolve_formula(params: &HeckeParams, formula: Option<Formula>) -> Result<Formula, CliError> {
    let f = formula.unwrap_or(if params.is_even() {
        Formula::Thm2
    } else {
        Formula::Thm1
    });
    let ok = match f {
        Formula::Thm1 => !params.is_even(),
        Formula::Thm2 => params.is_even(),
        Formula::Modular => params.p() == 3,
        Formula::Lemma42 | Formula::Lemma43 => true,
    };
    if ok {
        Ok(f)
    } else {
        Err(CliError::Usage(format!(
            "formula {} does not apply to p = {}",
            f.as_str(),
            params.p()
        )))
    }
}

fn setting_of(f: Formula) -> Option<Setting> {
    match f {
        Formula::Thm1 => Some(Setting::Thm1),
        Formula::Thm2 => Some(Setting::Thm2),
        Formula::Lemma42 => Some(Setting::Lemma42),
        Formula::Lemma43 => Some(Setting::Lemma43),
        Formula::Modular => None,
    }
}

struct EstimatePoint {
    log10: f64,
    decimal: String,
    boundary: Option<Boundary>,
}

fn estimate_point(params: &HeckeParams, f: Formula, x: u32) -> Result<EstimatePoint, CliError> {
    match setting_of(f) {
        Some(setting) => {
            if setting.uses_syllable_weights() && x < 4 {
                return Err(CliError::Usage(format!(
                    "formula {} needs lengths of at least 4",
                    f.as_str()
                )));
            }
            let e = estimate_count::<f64>(params, setting, x)?;
            Ok(EstimatePoint {
                log10: e.log10_value,
                decimal: e.decimal_string,
                boundary: Some(e.boundary),
            })
        }
        None => {
            if x < 4 {
                return Err(CliError::Usage("modular formula needs lengths of at least 4".into()));
            }
            Ok(EstimatePoint {
                log10: modular_log10(x),
                decimal: modular_closed_form(x).to_string(),
                boundary: None,
            })
        }
    }
}

#[derive(Serialize)]
struct EstimateRow {
    p: u32,
    x: u32,
    formula: &'static str,
    estimate_log10: String,
    estimate: String,
    boundary: Option<&'static str>,
}

pub(crate) fn estimate(args: &EstimateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let plan = plan(&args.common, false)?;
    let mut rows = Vec::new();
    for params in &plan.params {
        let f = resolve_formula(params, args.formula)?;
        for &x in &plan.lengths {
            let e = estimate_point(params, f, x)?;
            rows.push(EstimateRow {
                p: params.p(),
                x,
                formula: f.as_str(),
                estimate_log10: fixed6(e.log10),
                estimate: e.decimal,
                boundary: e.boundary.map(|b| b.as_str()),
            });
        }
    }
    match args.common.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(&rows, out)?,
        Format::Json => write_json(&rows, out)?,
    }
    Ok(())
}

pub(crate) fn compare_rows(
    params: &HeckeParams,
    formula: Option<Formula>,
    lengths: &[u32],
    shards: usize,
) -> Result<Vec<CountReportRow>, CliError> {
    let f = resolve_formula(params, formula)?;
    let top = lengths.iter().copied().max().unwrap_or(0);
    let counter = SymmetricClassCounter::new(params, top)?;
    let mut rows = Vec::new();
    for &x in lengths {
        let est = estimate_point(params, f, x)?;
        let dp_exact = counter.count(x)?;
        let (exact, primitive) = if x <= ENUMERATION_LIMIT {
            let recs = enumerate_reciprocal_classes_sharded(params, x, shards)?;
            let (prim, non) = split_primitive_counts(&recs);
            (Some(BigUint::from(prim + non)), Some(BigUint::from(prim)))
        } else if !params.is_even() {
            let prim = primitive_from_totals(x, |y| counter.count(y))?;
            (Some(dp_exact.clone()), Some(prim))
        } else {
            (None, None)
        };
        let ratio = exact
            .as_ref()
            .map(|e| fixed6(10f64.powf(log10_biguint(e) - est.log10)));
        let nonprimitive = match (&exact, &primitive) {
            (Some(e), Some(p)) => Some((e - p).to_string()),
            _ => None,
        };
        rows.push(CountReportRow {
            p: params.p(),
            x,
            exact: exact.map(|e| e.to_string()),
            dp_exact: dp_exact.to_string(),
            estimate_log10: fixed6(est.log10),
            ratio,
            primitive: primitive.map(|p| p.to_string()),
            nonprimitive,
        });
    }
    Ok(rows)
}

pub(crate) fn compare(args: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let plan = plan(&args.common, true)?;
    let mut rows = Vec::new();
    for params in &plan.params {
        rows.extend(compare_rows(params, args.formula, &plan.lengths, plan.shards)?);
    }
    emit_report(&rows, args.common.format.unwrap_or(Format::Csv), out)?;
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    pub p: u32,
    pub x: u32,
    pub status: &'static str,
    pub detail: String,
}

fn record(check: &'static str, params: &HeckeParams, x: u32, ok: bool, detail: String) -> CheckRecord {
    CheckRecord {
        check,
        p: params.p(),
        x,
        status: if ok { "pass" } else { "fail" },
        detail,
    }
}

/// All checks for one `p` and bound.
pub(crate) fn verify_point(
    params: &HeckeParams,
    x: u32,
    shards: usize,
) -> Result<Vec<CheckRecord>, CliError> {
    let mut out = Vec::new();
    let recs = enumerate_reciprocal_classes_sharded(params, x, shards)?;
    let oracle = oracle_enumerate_reciprocal(params, x)?;
    let same = recs.iter().map(|r| &r.key).eq(oracle.iter().map(|r| &r.key));
    out.push(record(
        "oracle-equivalence",
        params,
        x,
        same,
        format!("enumerated={} oracle={}", recs.len(), oracle.len()),
    ));

    let census = ClassCensus::new(&recs);
    let counter = SymmetricClassCounter::new(params, x)?;
    let dp = counter.count(x)?;
    let shaped = BigUint::from(census.with_shape(ReciprocalType::Symmetric));
    out.push(record(
        "symmetric-count",
        params,
        x,
        dp == shaped,
        format!("recurrence={dp} enumerated={shaped}"),
    ));

    if params.is_even() {
        for (name, s) in [
            ("sandwich-label", sandwich_by_label(&census)),
            ("sandwich-shape", sandwich_by_shape(&census)),
        ] {
            out.push(record(
                name,
                params,
                x,
                s.holds(),
                format!(
                    "sym={} total={} rec={} both={}",
                    s.symmetric, s.total, s.p_reciprocal, s.both
                ),
            ));
        }
    }

    let mut bad = Vec::new();
    for rec in &recs {
        let s = structure_check(&rec.key, params)?;
        let ok = if s.power {
            rec.rtype == ReciprocalType::PowerOfIotaGammaTilde
        } else if params.is_even() {
            (0..2).all(|i| s.symmetric[i] + s.p_reciprocal[i] + s.mixed[i] > 0)
        } else {
            s.symmetric == [2, 2] && s.p_reciprocal == [0, 0] && s.mixed == [0, 0]
        };
        if !ok {
            bad.push(rec.key.to_string());
        }
    }
    out.push(record(
        "structure",
        params,
        x,
        bad.is_empty(),
        if bad.is_empty() {
            format!("classes={}", recs.len())
        } else {
            format!("unexpected shapes: {}", bad.join(" | "))
        },
    ));

    let l71 = check_lemma71(params, x)?;
    out.push(record(
        "nonprimitive-bound",
        params,
        x,
        l71.holds,
        format!(
            "nonprimitive={} bound={} loose_bound={}",
            l71.nonprimitive, l71.rhs, l71.rhs_loose
        ),
    ));

    match check_lemma72(params, x) {
        Ok(l72) => out.push(record(
            "square-constant",
            params,
            x,
            l72.min_c.is_finite(),
            format!("min_c={:.6}", l72.min_c),
        )),
        Err(hecke::Error::EmptyCount(_)) => out.push(record(
            "square-constant",
            params,
            x,
            true,
            "no classes".into(),
        )),
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

pub(crate) fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let plan = plan(&args.common, true)?;
    let mut all = Vec::new();
    for params in &plan.params {
        for &x in &plan.lengths {
            all.extend(verify_point(params, x, plan.shards)?);
        }
    }
    match args.common.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(&all, out)?,
        Format::Json => write_json(&all, out)?,
    }
    Ok(all.iter().all(|r| r.status == "pass"))
}

#[derive(Serialize)]
struct RatioRow {
    p: u32,
    x: u32,
    ratio: Option<String>,
    ratio_decimal: Option<String>,
}

pub(crate) fn primitive_ratio(args: &CommonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let plan = plan(args, false)?;
    let mut rows = Vec::new();
    for params in &plan.params {
        for (x, ratio) in primitive_ratio_series(params, &plan.lengths)? {
            rows.push(RatioRow {
                p: params.p(),
                x,
                ratio_decimal: ratio.as_ref().map(|q| {
                    let l = log10_biguint(&q.numer().magnitude().clone())
                        - log10_biguint(&q.denom().magnitude().clone());
                    fixed6(10f64.powf(l))
                }),
                ratio: ratio.map(|q| q.to_string()),
            });
        }
    }
    match args.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(&rows, out)?,
        Format::Json => write_json(&rows, out)?,
    }
    Ok(())
}

use std::f64::consts::LN_2;

use pauli_renyi::bounds::{
    band_bounds, check_lower, check_upper, entropic_sum_renyi, entropic_sum_tsallis, lower_bound,
    mixed_ceiling, rho_hat,
};
use pauli_renyi::distributions::{renyi_entropy, tsallis_entropy};
use pauli_renyi::verify::{
    derivative_sign_check, diagonal_family_check, grid_max_sum_pure, grid_min_sum,
    grid_min_sum_with_claim, impurity_gap_scan, shannon_limit_check, sweep_band,
    VerificationReport,
};
use pauli_renyi::{Axis, EntropyOrder, SaturationKind, SaturationReport};

use crate::args::{BandArgs, Format, SaturateArgs, StateArgs, VerifyArgs};
use crate::input::{self, State};
use crate::Failure;

/// How far the negative-control flag lowers the `2 ln 2` claim.
const INJECTED_OFFSET: f64 = 0.05;

fn core_error(e: pauli_renyi::Error) -> Failure {
    use pauli_renyi::Error as E;
    match e {
        E::InvalidOrder(_) | E::OrderOutOfRange { .. } => Failure::Domain(e.to_string()),
        E::BoundViolated { .. } | E::EqualityConditionViolated(_) => Failure::Verification(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

/// Fixed-point rendering with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (11 - x.abs().log10().floor() as i64).max(0) as usize;
    format!("{x:.decimals$}")
}

fn render_pairs(pairs: &[(String, String)], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("quantity,value\n");
    }
    for (k, v) in pairs {
        let sep = if format == Format::Csv { ',' } else { '=' };
        out.push_str(&format!("{k}{sep}{v}\n"));
    }
    out
}

fn classify(s: &State, a: EntropyOrder, tol: f64) -> Result<SaturationReport, Failure> {
    let lower = check_lower(&s.triple, a, tol).map_err(core_error)?;
    if lower.kind == SaturationKind::LowerSaturated || !s.pure {
        return Ok(lower);
    }
    let upper = check_upper(&s.triple, a, tol).map_err(core_error)?;
    Ok(if upper.kind == SaturationKind::UpperSaturated { upper } else { lower })
}

pub fn eval(args: &StateArgs, format: Option<Format>) -> Result<String, Failure> {
    let a = input::order(args.alpha)?;
    let s = input::state(args)?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut put = |k: &str, v: String| pairs.push((k.to_owned(), v));
    put("alpha", a.value().to_string());
    put("state", if s.pure { "pure" } else { "mixed" }.to_owned());
    let [x, y, z] = s.bloch.components();
    put("bloch", format!("{x},{y},{z}"));
    for axis in Axis::ALL {
        let d = s.triple.get(axis);
        let [plus, minus] = [d.probs()[0], d.probs()[1]];
        put(&format!("p_{axis}"), format!("{plus},{minus}"));
        put(&format!("renyi_{axis}"), renyi_entropy(d, a).to_string());
        put(&format!("tsallis_{axis}"), tsallis_entropy(d, a).to_string());
    }
    let sum = entropic_sum_renyi(&s.triple, a).map_err(core_error)?;
    put("renyi_sum", sum.to_string());
    put("tsallis_sum", entropic_sum_tsallis(&s.triple, a).map_err(core_error)?.to_string());
    put("lower_bound", lower_bound().to_string());
    put("gap_lower", (sum - lower_bound()).to_string());
    let (name, upper) = if s.pure {
        ("pure", 3.0 * rho_hat(a).map_err(core_error)?)
    } else {
        ("mixed", mixed_ceiling())
    };
    put("upper_bound_kind", name.to_owned());
    put("upper_bound", upper.to_string());
    put("gap_upper", (upper - sum).to_string());
    let r = classify(&s, a, pauli_renyi::bounds::DEFAULT_SATURATION_TOLERANCE)?;
    put("classification", r.kind.to_string());
    Ok(render_pairs(&pairs, format.unwrap_or(Format::Text)))
}

pub fn saturate(args: &SaturateArgs, format: Option<Format>) -> Result<String, Failure> {
    let a = input::order(args.state.alpha)?;
    if !(args.tol.is_finite() && args.tol >= 0.0) {
        return Err(Failure::Input(format!("--tol must be a nonnegative number, got {}", args.tol)));
    }
    let s = input::state(&args.state)?;
    let r = classify(&s, a, args.tol)?;
    let axis = r.witness_axis.map_or_else(|| "none".to_owned(), |ax| ax.to_string());
    Ok(match format.unwrap_or(Format::Text) {
        Format::Text => format!("kind={} axis={axis} gap={}\n", r.kind, r.gap),
        Format::Csv => format!("kind,axis,gap\n{},{axis},{}\n", r.kind, r.gap),
    })
}

pub fn band(args: &BandArgs, format: Option<Format>) -> Result<String, Failure> {
    let alphas = match args.alpha {
        Some(alpha) => vec![alpha],
        None => input::alpha_range(&args.alpha_range)?,
    };
    let mut rows = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        let bp = band_bounds(input::order(alpha)?).map_err(core_error)?;
        rows.push([bp.alpha, bp.lower, bp.b_upper, bp.a_upper].map(sig12));
    }
    let mut out = String::new();
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            out.push_str("alpha,lower,B_renyi,A_tsallis\n");
            for r in rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        Format::Text => {
            out.push_str(&format!("{:<16} {:<16} {:<16} {:<16}\n", "alpha", "lower", "B_renyi", "A_tsallis"));
            for r in rows {
                out.push_str(&format!("{:<16} {:<16} {:<16} {:<16}\n", r[0], r[1], r[2], r[3]));
            }
        }
    }
    Ok(out)
}

fn report_csv(r: &VerificationReport) -> String {
    format!(
        "{},{},{},{},{},{}\n",
        r.check, r.alpha, r.claimed, r.observed, r.abs_error, r.passed
    )
}

/// Returns the rendered reports together with the overall verdict, so the
/// reports are written out even when some of them fail.
pub fn verify(args: &VerifyArgs, format: Option<Format>) -> Result<(String, Result<(), Failure>), Failure> {
    let alphas = input::alpha_list(&args.alpha)?;
    let orders = alphas.iter().map(|&a| input::order(a)).collect::<Result<Vec<_>, _>>()?;
    if args.samples == 0 || args.points == 0 {
        return Err(Failure::Input("--samples and --points must be at least 1".into()));
    }
    let lambdas: Vec<f64> = (0..=20).map(|k| k as f64 / 20.0).collect();
    let g = args.grid;

    let mut reports = Vec::new();
    for &a in &orders {
        reports.extend(if args.inject_wrong_lower {
            grid_min_sum_with_claim(a, g, 2.0 * LN_2 - INJECTED_OFFSET)
        } else {
            grid_min_sum(a, g)
        }
        .map_err(core_error)?);
        reports.extend(grid_max_sum_pure(a, g).map_err(core_error)?);
        if !a.is_one() {
            reports.extend(impurity_gap_scan(a, args.seed, args.samples).map_err(core_error)?);
            reports.extend(derivative_sign_check(a, args.points).map_err(core_error)?);
        }
        reports.extend(diagonal_family_check(a, &lambdas).map_err(core_error)?);
    }
    reports.extend(sweep_band(&alphas, g).map_err(core_error)?.reports);
    if orders.iter().any(|a| a.is_one()) {
        reports.push(shannon_limit_check().map_err(core_error)?);
    }

    let mut out = String::new();
    let format = format.unwrap_or(Format::Text);
    if format == Format::Csv {
        out.push_str("check,alpha,claimed,observed,err,passed\n");
    }
    for r in &reports {
        match format {
            Format::Text => {
                out.push_str(&r.to_line());
                out.push('\n');
            }
            Format::Csv => out.push_str(&report_csv(r)),
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.check.as_str()).collect();
    let verdict = if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{} of {} checks failed: {}",
            failed.len(),
            reports.len(),
            failed.join(", ")
        )))
    };
    Ok((out, verdict))
}

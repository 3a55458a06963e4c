//! Parsing of state specifications and order ranges.

use pauli_renyi::bounds::bound_order;
use pauli_renyi::pauli_measure::{measure_mixed, measure_pure};
use pauli_renyi::qubit::{angles_to_bloch, pauli_eigenstate, Axis, BlochVector, PureStateAngles, Sign};
use pauli_renyi::{EntropyOrder, PauliTriple};

use crate::args::StateArgs;
use crate::Failure;

pub struct State {
    pub bloch: BlochVector,
    pub triple: PauliTriple,
    pub pure: bool,
}

fn numbers<const N: usize>(flag: &str, s: &str) -> Result<[f64; N], Failure> {
    let bad = || Failure::Input(format!("--{flag}: expected {N} comma-separated numbers, got {s:?}"));
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let arr: [f64; N] = parts.try_into().map_err(|_| bad())?;
    if arr.iter().any(|x| !x.is_finite()) {
        return Err(bad());
    }
    Ok(arr)
}

fn axis(s: &str) -> Result<Axis, Failure> {
    match s.trim() {
        "x" | "X" => Ok(Axis::X),
        "y" | "Y" => Ok(Axis::Y),
        "z" | "Z" => Ok(Axis::Z),
        other => Err(Failure::Input(format!("unknown axis {other:?}"))),
    }
}

pub fn order(alpha: f64) -> Result<EntropyOrder, Failure> {
    let a = EntropyOrder::new(alpha).map_err(|e| Failure::Domain(e.to_string()))?;
    bound_order(a).map_err(|e| Failure::Domain(e.to_string()))
}

pub fn state(args: &StateArgs) -> Result<State, Failure> {
    let input = |e: pauli_renyi::Error| Failure::Input(e.to_string());
    if let Some(s) = &args.angles {
        let [tau, phi] = numbers::<2>("angles", s)?;
        let psi = PureStateAngles::new(tau, phi).map_err(input)?;
        return Ok(State { bloch: angles_to_bloch(&psi), triple: measure_pure(&psi), pure: true });
    }
    if let Some(s) = &args.eigenstate {
        let mut chars = s.chars();
        let (ax, sign) = match (chars.next(), chars.next(), chars.next()) {
            (Some(a), Some('+'), None) => (a, Sign::Plus),
            (Some(a), Some('-'), None) => (a, Sign::Minus),
            _ => return Err(Failure::Input(format!("--eigenstate: expected e.g. z+ or x-, got {s:?}"))),
        };
        let psi = pauli_eigenstate(axis(&ax.to_string())?, sign);
        return Ok(State { bloch: angles_to_bloch(&psi), triple: measure_pure(&psi), pure: true });
    }
    let bloch = if let Some(s) = &args.bloch {
        let [x, y, z] = numbers::<3>("bloch", s)?;
        BlochVector::new(x, y, z).map_err(input)?
    } else if let Some(s) = &args.mix {
        let (lambda, ax) = s
            .split_once(',')
            .ok_or_else(|| Failure::Input(format!("--mix: expected LAMBDA,AXIS, got {s:?}")))?;
        let [lambda] = numbers::<1>("mix", lambda)?;
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Failure::Input(format!("--mix: weight {lambda} outside [0, 1]")));
        }
        let [x, y, z] = axis(ax)?.unit().map(|c| c * (2.0 * lambda - 1.0));
        BlochVector::new(x, y, z).map_err(input)?
    } else {
        return Err(Failure::Input("no state given".into()));
    };
    let triple = measure_mixed(&bloch).map_err(input)?;
    Ok(State { bloch, triple, pure: bloch.is_pure() })
}

/// `START:END:STEP` to a list of orders; the last value is clamped to `END`.
pub fn alpha_range(s: &str) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::Input(format!("--alpha-range: expected START:END:STEP, got {s:?}"));
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [start, end, step] = parts[..] else { return Err(bad()) };
    if !(start.is_finite() && end.is_finite() && step.is_finite()) || step <= 0.0 || end < start {
        return Err(bad());
    }
    let n = ((end - start) / step + 1e-9).floor() as usize + 1;
    if n > 10_000_000 {
        return Err(bad());
    }
    Ok((0..n).map(|k| (start + k as f64 * step).min(end)).collect())
}

pub fn alpha_list(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Input(format!("--alpha: bad number {p:?}")))
        })
        .collect()
}

use super::{big_ratio, LogCount, WeightResult, WeightValue, WeightValues, WeightVector};
use crate::error::{Error, Result};

/// Divides every arc and vertex weight by the total flow `N(t, s)`, giving
/// values in `[0, 1]`. Float and exact inputs produce float output; log
/// input stays in log space (values become `ln w - ln N(t, s) <= 0`).
///
/// No weight exceeds the total flow, but rounded float and log products can
/// overshoot it by an ulp or so; such values are clamped to 1 (0 in log
/// space).
pub fn normalize(wr: &WeightResult) -> Result<WeightResult> {
    if !wr.method.is_flow() {
        return Err(Error::Argument(format!(
            "normalization needs a flow method (spc, splc, spnp), got {}",
            wr.method
        )));
    }
    let total = wr
        .total_flow
        .clone()
        .ok_or_else(|| Error::Internal("flow result without total flow".into()))?;

    let scale = |v: &WeightVector| -> Result<WeightVector> {
        Ok(match (v.values(), &total) {
            (WeightValues::Float(xs), WeightValue::Float(t)) if *t > 0.0 => {
                WeightVector::from_f64(xs.iter().map(|x| (x / t).min(1.0)).collect())
            }
            (WeightValues::Exact(xs), WeightValue::Exact(t)) if *t > 0u32.into() => {
                WeightVector::from_f64(xs.iter().map(|x| big_ratio(x, t).min(1.0)).collect())
            }
            (WeightValues::Log(xs), WeightValue::Log(t)) if t.is_finite() => {
                WeightVector::from_counts(xs.iter().map(|x| LogCount((x.0 - t).min(0.0))).collect())
            }
            _ => {
                return Err(Error::Internal(
                    "total flow is zero; the network is not in standard form".into(),
                ))
            }
        })
    };

    let mut out = wr.clone();
    out.arc = scale(&wr.arc)?;
    out.vertex = scale(&wr.vertex)?;
    out.total_flow = Some(match total {
        WeightValue::Log(_) => WeightValue::Log(0.0),
        _ => WeightValue::Float(1.0),
    });
    out.normalized = true;
    Ok(out)
}

/// Natural logarithm of every weight. The transform is monotone, so the
/// ordering of arcs is unchanged. Zero arc weights have no logarithm; they
/// are mapped to one below the smallest logarithm of a positive weight and
/// listed in `floored_arcs`. Log-mode input is returned unchanged.
pub fn log_transform(wr: &WeightResult) -> WeightResult {
    if let WeightValues::Log(_) = wr.arc.values() {
        return wr.clone();
    }
    let (arc, floored) = log_floor(&wr.arc);
    let (vertex, _) = log_floor(&wr.vertex);
    let mut out = wr.clone();
    out.arc = arc;
    out.vertex = vertex;
    out.total_flow = wr.total_flow.as_ref().map(|t| WeightValue::Log(t.ln()));
    out.floored_arcs = floored;
    out
}

fn log_floor(v: &WeightVector) -> (WeightVector, Vec<usize>) {
    let logs: Vec<f64> = (0..v.len()).map(|i| v.ln(i)).collect();
    let min_positive = logs
        .iter()
        .copied()
        .filter(|x| x.is_finite())
        .fold(f64::INFINITY, f64::min);
    let floor = if min_positive.is_finite() {
        min_positive - 1.0
    } else {
        -1.0
    };
    let mut floored = Vec::new();
    let values = logs
        .into_iter()
        .enumerate()
        .map(|(i, x)| {
            if x.is_finite() {
                LogCount(x)
            } else {
                floored.push(i);
                LogCount(floor)
            }
        })
        .collect();
    (WeightVector::from_counts(values), floored)
}

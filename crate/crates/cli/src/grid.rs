//! Parsing of scalar lists and `start:stop:step` sweeps.

/// Parses `start:stop:step`, `start:stop` (step 1) or a single value into
/// an ascending list of points. Descending ranges are normalized.
pub fn parse_range(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').map(str::trim).collect();
    let num = |s: &str| -> Result<f64, String> {
        let v: f64 = s
            .parse()
            .map_err(|_| format!("'{s}' is not a number (in '{spec}')"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("'{s}' is not finite"))
        }
    };
    let (start, stop, step) = match parts.as_slice() {
        [x] => return Ok(vec![num(x)?]),
        [a, b] => (num(a)?, num(b)?, 1.0),
        [a, b, s] => (num(a)?, num(b)?, num(s)?),
        _ => return Err(format!("'{spec}' is not of the form start:stop[:step]")),
    };
    if step == 0.0 {
        return Err(format!("step must be nonzero in '{spec}'"));
    }
    let (lo, hi) = if start <= stop {
        (start, stop)
    } else {
        (stop, start)
    };
    let step = step.abs();
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(format!("'{spec}' expands to {count} points"));
    }
    Ok((0..count).map(|i| tidy(lo + i as f64 * step)).collect())
}

/// Parses a comma-separated list whose items are values or ranges; the
/// result is sorted ascending with duplicates removed.
pub fn parse_list(spec: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.extend(parse_range(item)?);
    }
    if out.is_empty() {
        return Err("empty list".to_string());
    }
    out.sort_by(f64::total_cmp);
    out.dedup();
    Ok(out)
}

// Rounds away the representation error of start + i·step.
fn tidy(x: f64) -> f64 {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

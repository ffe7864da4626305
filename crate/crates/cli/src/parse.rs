use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::Value;
use spfkit::C64;

/// Comma-separated complex numbers such as `1.5, -2+0.5i, 3i`.
pub fn complex_list(s: &str) -> Result<Vec<C64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<C64>().map_err(|_| anyhow!("cannot parse complex number '{t}'")))
        .collect()
}

/// Series coefficients from JSON: an array of numbers, `[re, im]` pairs or
/// strings, either bare or under a `coeffs` key.
pub fn series_file(path: &Path) -> Result<Vec<C64>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let arr = match &v {
        Value::Array(a) => a,
        Value::Object(m) => match m.get("coeffs") {
            Some(Value::Array(a)) => a,
            _ => bail!("expected a 'coeffs' array in {}", path.display()),
        },
        _ => bail!("expected an array of coefficients in {}", path.display()),
    };
    arr.iter().map(json_complex).collect()
}

fn json_complex(v: &Value) -> Result<C64> {
    match v {
        Value::Number(n) => Ok(C64::new(n.as_f64().unwrap_or(f64::NAN), 0.0)),
        Value::Array(p) if p.len() == 2 => {
            let re = p[0].as_f64().ok_or_else(|| anyhow!("bad real part {}", p[0]))?;
            let im = p[1].as_f64().ok_or_else(|| anyhow!("bad imaginary part {}", p[1]))?;
            Ok(C64::new(re, im))
        }
        Value::String(s) => s.parse::<C64>().map_err(|_| anyhow!("cannot parse complex number '{s}'")),
        other => bail!("unsupported coefficient {other}"),
    }
}

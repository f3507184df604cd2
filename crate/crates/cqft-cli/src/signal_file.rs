//! Text format for signals: UTF-8, `#` comment lines, one sample per data
//! line as 8 comma-separated decimals (w_re, w_im, x_re, x_im, y_re, y_im,
//! z_re, z_im). A `# dims: R C` comment marks a row-major 2-D grid. Values
//! are written with 17 significant digits, so write-then-read is exact.

use std::io::{BufRead, Write};

use cqft::{CQuat, Cplx};

#[derive(Debug, Clone)]
pub struct ParsedSignal {
    pub dims: Option<(usize, usize)>,
    pub samples: Vec<CQuat>,
}

pub fn read_signal<R: BufRead>(reader: R) -> Result<ParsedSignal, String> {
    let mut dims = None;
    let mut samples = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| format!("read failure: {e}"))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(spec) = comment.trim().strip_prefix("dims:") {
                let parts: Vec<&str> = spec.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(format!("line {}: malformed dims comment", lineno + 1));
                }
                let r: usize = parts[0]
                    .parse()
                    .map_err(|_| format!("line {}: bad row count", lineno + 1))?;
                let c: usize = parts[1]
                    .parse()
                    .map_err(|_| format!("line {}: bad column count", lineno + 1))?;
                dims = Some((r, c));
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 8 {
            return Err(format!(
                "line {}: expected 8 comma-separated fields, found {}",
                lineno + 1,
                fields.len()
            ));
        }
        let mut v = [0.0f64; 8];
        for (k, field) in fields.iter().enumerate() {
            let parsed: f64 = field
                .parse()
                .map_err(|_| format!("line {}: unparseable number {field:?}", lineno + 1))?;
            if !parsed.is_finite() {
                return Err(format!("line {}: non-finite value {field:?}", lineno + 1));
            }
            v[k] = parsed;
        }
        samples.push(CQuat::new(
            Cplx::new(v[0], v[1]),
            Cplx::new(v[2], v[3]),
            Cplx::new(v[4], v[5]),
            Cplx::new(v[6], v[7]),
        ));
    }
    if samples.is_empty() {
        return Err("no data rows found".to_string());
    }
    Ok(ParsedSignal { dims, samples })
}

pub fn write_signal<W: Write>(
    out: &mut W,
    samples: &[CQuat],
    dims: Option<(usize, usize)>,
) -> std::io::Result<()> {
    if let Some((r, c)) = dims {
        writeln!(out, "# dims: {r} {c}")?;
    }
    for q in samples {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            q.w.re, q.w.im, q.x.re, q.x.im, q.y.re, q.y.im, q.z.re, q.z.im
        )?;
    }
    Ok(())
}

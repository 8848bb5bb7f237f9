//! CSV emission with reproducible numeric formatting.
//!
//! Floats are written in Rust's shortest round-trip representation (at most
//! 17 significant digits), so identical runs produce byte-identical files.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

pub fn fmt_f64(x: f64) -> String {
    // `{}` and `{:e}` both emit the shortest representation that
    // round-trips; positional notation would pad tiny magnitudes with
    // hundreds of zeros, so those switch to the exponent form.
    let mag = x.abs();
    if x == 0.0 || (1e-4..1e16).contains(&mag) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()
}

/// Parse `a+bi` / `a-bi` / `a` / `bi` / `i` into a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim().replace(' ', "");
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Ok(re) = t.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    if let Some(body) = t.strip_suffix('i') {
        // split at the last +/- that is not an exponent sign or leading sign
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re: f64 = if re_str.is_empty() {
            0.0
        } else {
            re_str
                .parse()
                .map_err(|_| format!("bad real part in {s:?}"))?
        };
        let im: f64 = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse()
                .map_err(|_| format!("bad imaginary part in {s:?}"))?,
        };
        return Ok(Complex64::new(re, im));
    }
    Err(format!("cannot parse complex literal {s:?}"))
}

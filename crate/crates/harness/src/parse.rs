//! Parsing of complex literals and 17-digit formatting.

use std::collections::BTreeMap;

use dickson_core::identity::Symbol;
use dickson_core::Complex64;

use crate::error::HarnessError;

fn usage(msg: String) -> HarnessError {
    HarnessError::Usage(msg)
}

/// Parses `"1.5"`, `"0.5+0.2i"`, `"-3i"` or a real fraction `"1/4"`.
pub fn parse_complex(s: &str) -> Result<Complex64, HarnessError> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: f64 = p.trim().parse().map_err(|_| usage(format!("bad fraction {s:?}")))?;
        let q: f64 = q.trim().parse().map_err(|_| usage(format!("bad fraction {s:?}")))?;
        return Ok(Complex64::new(p / q, 0.0));
    }
    t.parse::<Complex64>().map_err(|_| usage(format!("bad complex number {s:?}")))
}

/// Parses `k=1,a=2+i` (comma-separated) into a symbol map.
pub fn parse_bindings<'a>(
    items: impl IntoIterator<Item = &'a str>,
) -> Result<BTreeMap<Symbol, Complex64>, HarnessError> {
    let mut out = BTreeMap::new();
    for item in items {
        let (name, value) = item.split_once('=').ok_or_else(|| usage(format!("expected name=value, got {item:?}")))?;
        let sym: Symbol = name.trim().parse().map_err(|_| usage(format!("unknown parameter {name:?}")))?;
        if out.insert(sym, parse_complex(value)?).is_some() {
            return Err(usage(format!("parameter {name} given twice")));
        }
    }
    Ok(out)
}

/// A real number to 17 significant digits, positional where that stays readable.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == x.trunc() && x.abs() < 1e15 {
        return format!("{}", x as i64);
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci.split_once('e').and_then(|(_, e)| e.parse().ok()).expect("exponent present");
    if !(-5..17).contains(&exp) {
        return sci;
    }
    format!("{x:.*}", (16 - exp) as usize)
}

/// `re±im i`, or just `re` when the imaginary part is zero.
pub fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return fmt_real(z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", fmt_real(z.re), sign, fmt_real(z.im.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_complex("1/4").unwrap(), Complex64::new(0.25, 0.0));
        assert_eq!(parse_complex("0.5+0.2i").unwrap(), Complex64::new(0.5, 0.2));
        assert_eq!(parse_complex(" -3 ").unwrap(), Complex64::new(-3.0, 0.0));
        assert!(parse_complex("1+").is_err());
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_real((-2.0f64).exp()), "0.13533528323661270");
        assert_eq!(fmt_real(7.0), "7");
        assert_eq!(fmt_complex(Complex64::new(-1.3, 0.0)), "-1.3000000000000000");
        assert_eq!(fmt_complex(Complex64::new(0.5, -0.25)), "0.50000000000000000-0.25000000000000000i");
        assert_eq!(fmt_real(2f64.powi(-100)), "7.8886090522101181e-31");
    }

    #[test]
    fn bindings() {
        let m = parse_bindings("k=1,a=2+1i".split(',')).unwrap();
        assert_eq!(m[&Symbol::A], Complex64::new(2.0, 1.0));
        assert!(parse_bindings(["k=1", "k=2"]).is_err());
        assert!(parse_bindings(["q=1"]).is_err());
    }
}

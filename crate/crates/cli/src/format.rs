//! Number formatting shared by every output: 15 significant digits.

use serde_json::Value;

const DIGITS: usize = 15;

/// `%.15g`-style text: fixed notation for moderate exponents, scientific otherwise,
/// trailing zeros removed.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..DIGITS as i32).contains(&exp) {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Value rounded to 15 significant digits, so JSON output carries no more.
pub fn round(x: f64) -> f64 {
    if x.is_finite() {
        num(x).parse().unwrap_or(x)
    } else {
        x
    }
}

/// JSON number rounded to 15 significant digits; non-finite values become strings.
pub fn json_num(x: f64) -> Value {
    if x.is_finite() {
        serde_json::Number::from_f64(round(x)).map_or(Value::Null, Value::Number)
    } else {
        Value::String(num(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(num(4f64.ln()), "1.38629436111989");
        assert_eq!(num(0.5), "0.5");
        assert_eq!(num(-2.0), "-2");
        assert_eq!(num(1e-7), "1e-7");
        assert_eq!(num(1.0 / 3.0 * 1e20), "3.33333333333333e19");
        assert_eq!(num(123456.0), "123456");
        assert_eq!(num(0.0001234), "0.0001234");
        assert_eq!(num(f64::NAN), "NaN");
        assert_eq!(num(std::f64::consts::PI), "3.14159265358979");
        assert_eq!(round(1.0 / 3.0), 0.333333333333333);
    }
}

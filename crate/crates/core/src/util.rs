//! Small shared helpers.

/// Scientific notation with 5 significant digits and a two-digit exponent,
/// e.g. `5.0000e-01`, `-6.3171e-06`. Used for all CSV output.
pub fn sci(x: f64) -> String {
    if x == 0.0 {
        return "0.0000e+00".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let s = format!("{:.4e}", x);
    // Rust renders the exponent without sign padding ("5.0000e-1", "1.2e3").
    let (mant, exp) = s.split_once('e').expect("exponent in formatted float");
    let (sign, digits) = match exp.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exp),
    };
    format!("{mant}e{sign}{digits:0>2}")
}

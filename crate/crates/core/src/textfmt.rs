//! Fixed-format decimal rendering for file outputs.
//!
//! All text formats (spectrum listings, multiset dumps, CSV rows) use plain
//! decimal notation with a fixed number of significant digits, so outputs
//! are byte-identical across runs and platforms.

/// Render `x` with `sig` significant digits: plain decimal notation, with
/// a fallback to scientific once the integer part alone would exceed the
/// significant digits.
pub fn sig_digits(x: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", sig - 1, 0.0);
    }
    let exponent = x.abs().log10().floor() as i32;
    if exponent >= sig as i32 {
        return format!("{:.*e}", sig - 1, x);
    }
    let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
    format!("{:.*}", decimals, x)
}

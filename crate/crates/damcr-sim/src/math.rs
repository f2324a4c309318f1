//! Scalar helpers shared across the simulator: dB/linear conversions and
//! the complementary error function used by the packet-error model.

/// Convert a dB (or dBm) quantity to linear scale (mW for dBm inputs).
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Convert a linear quantity to dB.
pub fn linear_to_db(lin: f64) -> f64 {
    10.0 * lin.log10()
}

/// Complementary error function, erfc(x) = 1 - erf(x).
///
/// Chebyshev-fitted rational approximation (the classic `erfcc` form) with
/// fractional error below 1.2e-7 over the whole real line, which is well
/// inside the tolerance of every bit-error computation in this crate.
pub fn erfc(x: f64) -> f64 {
    let z = x.abs();
    let t = 1.0 / (1.0 + 0.5 * z);
    let ans = t * (-z * z - 1.265_512_23
        + t * (1.000_023_68
            + t * (0.374_091_96
                + t * (0.096_784_18
                    + t * (-0.186_288_06
                        + t * (0.278_868_07
                            + t * (-1.135_203_98
                                + t * (1.488_515_87
                                    + t * (-0.822_152_23 + t * 0.170_872_77)))))))))
    .exp();
    if x >= 0.0 {
        ans
    } else {
        2.0 - ans
    }
}

//! Shared oracles for the integration suites.

use num_integer::Roots;

/// Brute-force Pell scan: the fundamental unit of O_K for squarefree d > 1 as
/// basis coordinates (u, v), found by trying coordinate heights from 1 up.
///
/// For d ≡ 1 (mod 4) the scan runs over half-integers (t + s*sqrt(d))/2 with
/// t ≡ s (mod 2) and t^2 - d s^2 = ±4; otherwise over u^2 - d v^2 = ±1.
/// Completely independent of the continued-fraction implementation.
pub fn pell_fundamental_unit(d: u64, bound: u128) -> (i128, i128) {
    if d % 4 == 1 {
        for s in 1..bound {
            let ds2 = u128::from(d) * s * s;
            // the -4 branch first: smaller t means smaller unit
            for delta in [-4i128, 4] {
                let Some(val) = ds2.checked_add_signed(delta) else { continue };
                let t = val.sqrt();
                if t * t == val && t % 2 == s % 2 {
                    // (t + s sqrt d)/2 = (t - s)/2 + s * (1 + sqrt d)/2
                    return (((t as i128) - (s as i128)) / 2, s as i128);
                }
            }
        }
    } else {
        for v in 1..bound {
            let dv2 = u128::from(d) * v * v;
            for delta in [-1i128, 1] {
                let Some(val) = dv2.checked_add_signed(delta) else { continue };
                let u = val.sqrt();
                if u * u == val {
                    return (u as i128, v as i128);
                }
            }
        }
    }
    panic!("Pell oracle bound {bound} exhausted for d = {d}");
}

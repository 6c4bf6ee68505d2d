use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(z) by the Lanczos approximation (g = 7, nine terms), with the reflection
/// formula for `Re z < 1/2`. Positive integers and half-integers up to 171 use
/// the finite product instead, so factorial ratios come out exact.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::PoleEncountered(format!("Γ has a pole at {}", z.re)));
    }
    if z.im == 0.0 && z.re > 0.0 && z.re <= 171.0 && (2.0 * z.re).fract() == 0.0 {
        return Ok(Complex64::new(gamma_lattice(z.re), 0.0));
    }
    Ok(gamma_unchecked(z))
}

/// `Γ(n)` or `Γ(n + 1/2)` by the recurrence down to `Γ(1)` or `Γ(1/2)`.
fn gamma_lattice(x: f64) -> f64 {
    let (mut acc, mut k) = if x.fract() == 0.0 { (1.0, 1.0) } else { (PI.sqrt(), 0.5) };
    while k < x {
        acc *= k;
        k += 1.0;
    }
    acc
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return PI / (s * gamma_unchecked(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * x
}

pub fn gamma_real(x: f64) -> Result<f64> {
    gamma_complex(Complex64::new(x, 0.0)).map(|z| z.re)
}

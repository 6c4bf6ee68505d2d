use num_complex::Complex64;

/// The exponents `(σ1, σ2, σ3)` and the two derived dictionaries.
///
/// `ν_i = σ_i - σ_{i+1} - σ_{i+2}` (indices mod 3), inverted by
/// `σ_i = -(ν_{i+1} + ν_{i+2}) / 2`. The real torus integral uses
/// `a_i = (ν_i - 1)/4`, the complex plane integral `a_i = -1 - ν_i`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParameterSet {
    sigma: [Complex64; 3],
}

impl ParameterSet {
    pub fn from_sigma(sigma: [Complex64; 3]) -> Self {
        Self { sigma }
    }

    pub fn from_nu(nu: [Complex64; 3]) -> Self {
        let s = |i: usize| -(nu[(i + 1) % 3] + nu[(i + 2) % 3]) / 2.0;
        Self { sigma: [s(0), s(1), s(2)] }
    }

    pub fn from_real_a(a: [Complex64; 3]) -> Self {
        Self::from_nu(a.map(|x| 4.0 * x + 1.0))
    }

    pub fn from_complex_a(a: [Complex64; 3]) -> Self {
        Self::from_nu(a.map(|x| -1.0 - x))
    }

    pub fn sigma(&self) -> [Complex64; 3] {
        self.sigma
    }

    pub fn nu(&self) -> [Complex64; 3] {
        let s = self.sigma;
        [0, 1, 2].map(|i| s[i] - s[(i + 1) % 3] - s[(i + 2) % 3])
    }

    pub fn real_a(&self) -> [Complex64; 3] {
        self.nu().map(|n| (n - 1.0) / 4.0)
    }

    pub fn complex_a(&self) -> [Complex64; 3] {
        self.nu().map(|n| -1.0 - n)
    }
}

/// Shorthand for a real triple lifted to complex numbers.
pub fn real3(a: [f64; 3]) -> [Complex64; 3] {
    a.map(|x| Complex64::new(x, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: [Complex64; 3], y: [Complex64; 3]) -> bool {
        x.iter().zip(y.iter()).all(|(a, b)| (a - b).norm() <= 1e-14 * (1.0 + b.norm()))
    }

    #[test]
    fn round_trips() {
        let sigma = [Complex64::new(0.3, 1.0), Complex64::new(-1.25, 0.5), Complex64::new(2.0, -0.75)];
        let ps = ParameterSet::from_sigma(sigma);
        assert!(close(ParameterSet::from_nu(ps.nu()).sigma(), sigma));
        assert!(close(ParameterSet::from_real_a(ps.real_a()).nu(), ps.nu()));
        assert!(close(ParameterSet::from_complex_a(ps.complex_a()).nu(), ps.nu()));
        let total: Complex64 = ps.nu().iter().sum();
        let s: Complex64 = sigma.iter().sum();
        assert!((total + s).norm() < 1e-14);
    }

    #[test]
    fn real_dictionary_example() {
        // a = (1,1,1) on the real side means ν = (5,5,5) and σ = (-5,-5,-5).
        let ps = ParameterSet::from_real_a(real3([1.0, 1.0, 1.0]));
        assert!(close(ps.sigma(), real3([-5.0, -5.0, -5.0])));
    }
}

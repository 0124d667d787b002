//! Exact spectral transforms over Z_2^n.
//!
//! Two conventions coexist on purpose. The 0/1-valued Fourier transform
//! carries the Cayley-graph eigenvalues; the (+/-1)-valued signed Walsh
//! transform carries nonlinearity. For every function they are linked by
//! `signed[w] = -2 * fourier_numerator[w]` at w != 0 and
//! `signed[0] = 2^n - 2 * fourier_numerator[0]`, which the test suites keep
//! as a standing check. All arithmetic is exact; there is no floating point.

use crate::boolfn::BooleanFunction;

/// In-place fast Walsh-Hadamard butterfly, n*2^n integer operations.
/// Output index w holds sum_x (-1)^(w.x) * input[x].
fn butterfly(values: &mut [i64]) {
    let mut half = 1;
    while half < values.len() {
        let mut block = 0;
        while block < values.len() {
            for i in block..block + half {
                let (a, b) = (values[i], values[i + half]);
                values[i] = a + b;
                values[i + half] = a - b;
            }
            block += half * 2;
        }
        half *= 2;
    }
}

/// The transform of the 0/1-valued function, stored as the exact integer
/// numerators of the dyadic rationals f*(w) = numerators[w] / 2^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierSpectrum {
    n: usize,
    numerators: Vec<i64>,
}

impl FourierSpectrum {
    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn numerator(&self, w: usize) -> i64 {
        self.numerators[w]
    }

    /// log2 of the common denominator, i.e. n.
    pub fn denominator_log2(&self) -> usize {
        self.n
    }
}

/// The signed Walsh spectrum: values[w] = sum_x (-1)^(f(x) (+) w.x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedWalshSpectrum {
    n: usize,
    values: Vec<i64>,
}

impl SignedWalshSpectrum {
    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn max_abs(&self) -> u64 {
        self.values
            .iter()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Nonlinearity from the spectrum: 2^(n-1) - max_w |S(w)| / 2.
    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - self.max_abs() / 2
    }

    /// Flat spectrum, |S(w)| = 2^(n/2) for every w. Equivalent to bent;
    /// possible only for even arity.
    pub fn is_flat(&self) -> bool {
        if self.n % 2 != 0 {
            return false;
        }
        let target = 1u64 << (self.n / 2);
        self.values.iter().all(|v| v.unsigned_abs() == target)
    }
}

/// Fast 0/1 Fourier transform of `f`.
pub fn fourier(f: &BooleanFunction) -> FourierSpectrum {
    let mut numerators: Vec<i64> = (0..f.table_len()).map(|x| f.value(x) as i64).collect();
    butterfly(&mut numerators);
    debug_assert_eq!(numerators[0], f.weight() as i64);
    debug_assert!(numerators
        .iter()
        .all(|v| v.unsigned_abs() <= 1 << f.arity()));
    FourierSpectrum {
        n: f.arity(),
        numerators,
    }
}

/// Fast signed Walsh transform of `f`.
pub fn signed_walsh(f: &BooleanFunction) -> SignedWalshSpectrum {
    let mut values: Vec<i64> = (0..f.table_len())
        .map(|x| 1 - 2 * f.value(x) as i64)
        .collect();
    butterfly(&mut values);
    debug_assert_eq!(values[0], (1i64 << f.arity()) - 2 * f.weight() as i64);
    debug_assert_eq!(
        values.iter().map(|v| (v * v) as u128).sum::<u128>(),
        1u128 << (2 * f.arity()),
        "Parseval identity violated"
    );
    SignedWalshSpectrum {
        n: f.arity(),
        values,
    }
}

/// Eigenvalues of Cay(Z_2^n, support(f)), indexed by the character label w:
/// lambda_w = 2^n f*(b(w)), i.e. exactly the Fourier numerators. Index 0
/// carries the largest eigenvalue |support(f)|.
pub fn cayley_eigenvalues(f: &BooleanFunction) -> Vec<i64> {
    fourier(f).numerators
}

//! Instance generators: Maiorana-McFarland bent functions, finite-field
//! multiplication vectorial bent functions, exhaustive small-arity
//! enumeration, and seeded deterministic random functions.

use crate::boolfn::{dot, BooleanFunction};
use crate::error::{Error, Result};
use crate::transform;
use crate::vectorial::VectorialFunction;

/// SplitMix64: tiny, platform-independent, good enough for test instances.
/// The contract is determinism from the seed, nothing more.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// A deterministic pseudo-random truth table; the same (n, seed) pair gives
/// an identical function on every platform and run.
pub fn random_function(n: usize, seed: u64) -> Result<BooleanFunction> {
    let mut rng = SplitMix64(seed);
    let words: Vec<u64> = (0..(1usize << n).div_ceil(64))
        .map(|_| rng.next())
        .collect();
    BooleanFunction::from_fn(n, |x| words[x / 64] >> (x % 64) & 1 == 1)
}

/// A bijection on {0, ..., size-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            map: (0..size).collect(),
        }
    }

    pub fn from_mapping(map: Vec<usize>) -> Result<Self> {
        let size = map.len();
        let mut seen = vec![false; size];
        for &image in &map {
            if image >= size || seen[image] {
                return Err(Error::NotABijection { size });
            }
            seen[image] = true;
        }
        Ok(Permutation { map })
    }

    /// Seeded Fisher-Yates shuffle of the identity.
    pub fn random(size: usize, seed: u64) -> Self {
        let mut rng = SplitMix64(seed);
        let mut map: Vec<usize> = (0..size).collect();
        for i in (1..size).rev() {
            let j = (rng.next() % (i as u64 + 1)) as usize;
            map.swap(i, j);
        }
        Permutation { map }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }
}

/// Maiorana-McFarland construction: f(x, y) = x . pi(y) (+) g(y), where x is
/// the first n/2 input bits and y the last n/2. Always bent, for every
/// permutation pi of {0, ..., 2^(n/2)-1} and every g of arity n/2.
pub fn mm_bent(n: usize, pi: &Permutation, g: &BooleanFunction) -> Result<BooleanFunction> {
    if n % 2 != 0 {
        return Err(Error::OddArity { arity: n });
    }
    let half = n / 2;
    if pi.size() != 1 << half {
        return Err(Error::SizeMismatch {
            expected: 1 << half,
            got: pi.size(),
        });
    }
    if g.arity() != half {
        return Err(Error::ArityMismatch {
            left: half,
            right: g.arity(),
        });
    }
    let mask = (1usize << half) - 1;
    BooleanFunction::from_fn(n, |p| {
        let (x, y) = (p >> half, p & mask);
        dot(x, pi.apply(y)) ^ g.value(y)
    })
}

// Irreducible polynomials pinning the field arithmetic, indexed by degree.
// x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1, x^8+x^4+x^3+x+1.
const IRREDUCIBLE: [usize; 9] = [
    0,
    0b10,
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b100_0011,
    0b1000_0011,
    0b1_0001_1011,
];

/// Multiplication in the field with 2^degree elements.
fn gf_mul(a: usize, b: usize, degree: usize) -> usize {
    debug_assert!((1..=8).contains(&degree));
    debug_assert!(a < 1 << degree && b < 1 << degree);
    let mut product = 0usize;
    for i in 0..degree {
        if a >> i & 1 == 1 {
            product ^= b << i;
        }
    }
    let poly = IRREDUCIBLE[degree];
    for bit in (degree..2 * degree).rev() {
        if product >> bit & 1 == 1 {
            product ^= poly << (bit - degree);
        }
    }
    product
}

/// The field-multiplication vectorial bent function F(x, y) = x * y in the
/// field with 2^(n/2) elements, one output bit per component (component 1
/// is the most significant product bit). (n, n/2)-bent for every even n
/// with n/2 <= 8.
pub fn nyberg_vectorial_bent(n: usize) -> Result<VectorialFunction> {
    if n % 2 != 0 {
        return Err(Error::OddArity { arity: n });
    }
    let m = n / 2;
    if m == 0 || m > 8 {
        return Err(Error::ResourceGuard {
            operation: "nyberg_vectorial_bent",
            limit: 16,
            requested: n,
        });
    }
    let mask = (1usize << m) - 1;
    let components = (1..=m)
        .map(|i| {
            BooleanFunction::from_fn(n, |p| {
                let (x, y) = (p >> m, p & mask);
                gf_mul(x, y, m) >> (m - i) & 1 == 1
            })
        })
        .collect::<Result<Vec<_>>>()?;
    VectorialFunction::new(components)
}

/// All bent functions of arity 2 or 4, by exhaustive scan of every truth
/// table using the flat-spectrum criterion. Ordered by table code, where
/// bit i of the code is table entry i.
pub fn enumerate_bent(n: usize) -> Result<Vec<BooleanFunction>> {
    if n % 2 != 0 {
        return Err(Error::OddArity { arity: n });
    }
    if n < 2 {
        return Err(Error::InvalidArity {
            arity: n,
            min: 2,
            max: 4,
        });
    }
    if n > 4 {
        return Err(Error::ResourceGuard {
            operation: "enumerate_bent",
            limit: 4,
            requested: n,
        });
    }
    let mut out = Vec::new();
    for code in 0..1u64 << (1 << n) {
        let f = BooleanFunction::from_fn(n, |x| code >> x & 1 == 1)?;
        if transform::signed_walsh(&f).is_flat() {
            out.push(f);
        }
    }
    Ok(out)
}

//! Boolean functions on n-bit inputs: truth tables, supports, the affine
//! reference set, nonlinearity and the bent predicate.
//!
//! Bit-order convention, fixed repo-wide: the input point `b(i)` for truth
//! table index `i` is the n-bit binary expansion of `i` with variable `x1`
//! in the most significant bit, i.e. `i = sum_j x_j * 2^(n-j)`. Index 0 is
//! the all-zero input.

use crate::bits::BitVec;
use crate::error::{Error, Guards, Result};
use crate::transform;

/// Arities above this would allocate unreasonably large truth tables.
pub const MAX_ARITY: usize = 26;

/// GF(2) inner product of two points: parity of the bitwise AND.
#[inline]
pub fn dot(a: usize, b: usize) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// A Boolean function f: Z_2^n -> Z_2, stored as its 2^n-entry truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    table: BitVec,
}

impl BooleanFunction {
    fn check_arity(n: usize) -> Result<()> {
        if !(1..=MAX_ARITY).contains(&n) {
            return Err(Error::InvalidArity {
                arity: n,
                min: 1,
                max: MAX_ARITY,
            });
        }
        Ok(())
    }

    /// Builds a function from a table of 0/1 entries, entry `i` being the
    /// value at the point `b(i)`.
    pub fn from_truth_table(n: usize, bits: &[u8]) -> Result<Self> {
        Self::check_arity(n)?;
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::TruthTableLength {
                arity: n,
                expected,
                got: bits.len(),
            });
        }
        let mut table = BitVec::zeros(expected);
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => table.set(i, true),
                other => {
                    return Err(Error::NonBinarySymbol {
                        position: i,
                        found: other,
                    })
                }
            }
        }
        Ok(BooleanFunction { n, table })
    }

    /// Builds a function by evaluating `f` at every point `0..2^n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        Self::check_arity(n)?;
        let len = 1usize << n;
        let mut table = BitVec::zeros(len);
        for x in 0..len {
            if f(x) {
                table.set(x, true);
            }
        }
        Ok(BooleanFunction { n, table })
    }

    /// The constant function with the given value.
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    /// The affine function x -> a.x (+) c.
    pub fn affine(n: usize, a: usize, c: bool) -> Result<Self> {
        if a >= 1usize << n {
            return Err(Error::PointOutOfRange { point: a, arity: n });
        }
        Self::from_fn(n, |x| dot(a, x) ^ c)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of truth-table entries, 2^n.
    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    /// Value at the point `x` (an integer in `0..2^n`).
    #[inline]
    pub fn value(&self, x: usize) -> bool {
        self.table.get(x)
    }

    /// Number of inputs mapped to 1 (the Hamming weight of the table).
    pub fn weight(&self) -> u64 {
        self.table.count_ones() as u64
    }

    /// The support: every point where the function is 1.
    pub fn support(&self) -> PointSet {
        PointSet {
            n: self.n,
            members: self.table.clone(),
        }
    }

    /// Pointwise XOR with another function of the same arity.
    pub fn xor(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut table = self.table.clone();
        table.xor_assign(&other.table);
        Ok(BooleanFunction { n: self.n, table })
    }

    /// The complement f (+) 1.
    pub fn complement(&self) -> BooleanFunction {
        let mut table = self.table.clone();
        table.negate();
        BooleanFunction { n: self.n, table }
    }

    /// The translate x -> f(x (+) t).
    pub fn translate(&self, t: usize) -> Result<BooleanFunction> {
        if t >= self.table_len() {
            return Err(Error::PointOutOfRange {
                point: t,
                arity: self.n,
            });
        }
        Self::from_fn(self.n, |x| self.value(x ^ t))
    }

    /// Minimum Hamming distance to the 2^(n+1) affine functions, computed
    /// through the signed Walsh spectrum. [`nonlinearity_brute_force`] is the
    /// independent slow route; the two always agree.
    pub fn nonlinearity(&self) -> u64 {
        transform::signed_walsh(self).nonlinearity()
    }

    /// Whether the function attains the maximum nonlinearity (2^n - 2^(n/2))/2.
    pub fn is_bent(&self) -> bool {
        self.bent_verdict().is_bent()
    }

    /// Bent check with the reason on failure. Odd arity is a verdict, not an
    /// error, so mixed-arity batches can be processed uniformly.
    pub fn bent_verdict(&self) -> BentVerdict {
        if self.n % 2 != 0 {
            return BentVerdict::OddArity;
        }
        let maximum = ((1u64 << self.n) - (1u64 << (self.n / 2))) / 2;
        let nl = self.nonlinearity();
        if nl == maximum {
            BentVerdict::Bent
        } else {
            BentVerdict::BelowMaximum {
                nonlinearity: nl,
                maximum,
            }
        }
    }

    /// Truth table as a 0/1 string, index 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.table_len())
            .map(|i| if self.value(i) { '1' } else { '0' })
            .collect()
    }

    /// Truth table as hex, each digit packing four consecutive entries with
    /// the first entry in the digit's most significant bit. `None` for n=1,
    /// where the table is shorter than a digit.
    pub fn to_hex_string(&self) -> Option<String> {
        if self.n < 2 {
            return None;
        }
        let mut out = String::with_capacity(self.table_len() / 4);
        for chunk in 0..self.table_len() / 4 {
            let mut digit = 0u32;
            for j in 0..4 {
                digit = digit << 1 | self.value(chunk * 4 + j) as u32;
            }
            out.push(char::from_digit(digit, 16).unwrap());
        }
        Some(out)
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BooleanFunction(n={}, table={})",
            self.n,
            self.to_bit_string()
        )
    }
}

/// Outcome of the bent check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BentVerdict {
    Bent,
    /// Bent functions exist only for even arity.
    OddArity,
    BelowMaximum {
        nonlinearity: u64,
        maximum: u64,
    },
}

impl BentVerdict {
    pub fn is_bent(&self) -> bool {
        matches!(self, BentVerdict::Bent)
    }

    /// Human-readable reason when not bent.
    pub fn reason(&self) -> Option<String> {
        match self {
            BentVerdict::Bent => None,
            BentVerdict::OddArity => Some("arity must be even".to_string()),
            BentVerdict::BelowMaximum {
                nonlinearity,
                maximum,
            } => Some(format!(
                "nonlinearity {nonlinearity} below maximum {maximum}"
            )),
        }
    }
}

/// A set of n-bit points, stored as an indicator over `0..2^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    members: BitVec,
}

impl PointSet {
    pub fn empty(n: usize) -> Result<Self> {
        BooleanFunction::check_arity(n)?;
        Ok(PointSet {
            n,
            members: BitVec::zeros(1 << n),
        })
    }

    pub fn from_points(n: usize, points: &[usize]) -> Result<Self> {
        let mut set = Self::empty(n)?;
        for &p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn contains(&self, p: usize) -> bool {
        p < self.members.len() && self.members.get(p)
    }

    pub fn insert(&mut self, p: usize) -> Result<()> {
        if p >= self.members.len() {
            return Err(Error::PointOutOfRange {
                point: p,
                arity: self.n,
            });
        }
        self.members.set(p, true);
        Ok(())
    }

    pub fn remove(&mut self, p: usize) {
        if p < self.members.len() {
            self.members.set(p, false);
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    /// A copy with the all-zero point removed.
    pub fn without_zero(&self) -> PointSet {
        let mut copy = self.clone();
        copy.remove(0);
        copy
    }

    /// The indicator function of this set.
    pub fn indicator(&self) -> BooleanFunction {
        BooleanFunction {
            n: self.n,
            table: self.members.clone(),
        }
    }

    /// Bitwise XOR of the membership indicators; callers check arity.
    pub(crate) fn xor_members(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        let mut members = self.members.clone();
        members.xor_assign(&other.members);
        PointSet { n: self.n, members }
    }
}

impl std::fmt::Debug for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let points: Vec<String> = self
            .iter()
            .map(|p| format!("{:0width$b}", p, width = self.n))
            .collect();
        write!(f, "{{{}}}", points.join(", "))
    }
}

/// All 2^(n+1) affine functions a.x (+) c of arity n, ordered by (a, c).
pub fn affine_functions(n: usize, guards: &Guards) -> Result<Vec<BooleanFunction>> {
    BooleanFunction::check_arity(n)?;
    if n > guards.max_brute_force_arity {
        return Err(Error::ResourceGuard {
            operation: "affine_functions",
            limit: guards.max_brute_force_arity,
            requested: n,
        });
    }
    let mut out = Vec::with_capacity(1 << (n + 1));
    for a in 0..1usize << n {
        for c in [false, true] {
            out.push(BooleanFunction::affine(n, a, c)?);
        }
    }
    Ok(out)
}

/// Nonlinearity by direct minimization over every affine function. The slow
/// independent route used to validate the spectral computation.
pub fn nonlinearity_brute_force(f: &BooleanFunction, guards: &Guards) -> Result<u64> {
    let n = f.arity();
    if n > guards.max_brute_force_arity {
        return Err(Error::ResourceGuard {
            operation: "nonlinearity_brute_force",
            limit: guards.max_brute_force_arity,
            requested: n,
        });
    }
    let len = f.table_len();
    let mut best = u64::MAX;
    for a in 0..len {
        let mut distance = 0u64;
        for x in 0..len {
            if f.value(x) != dot(a, x) {
                distance += 1;
            }
        }
        // a.x and a.x (+) 1 disagree with f on complementary point sets.
        best = best.min(distance).min(len as u64 - distance);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize, bits: &str) -> BooleanFunction {
        let v: Vec<u8> = bits.bytes().map(|b| b - b'0').collect();
        BooleanFunction::from_truth_table(n, &v).unwrap()
    }

    #[test]
    fn from_truth_table_and_function() {
        let and = f(2, "0001");
        assert!(!and.value(0b00) && !and.value(0b01) && !and.value(0b10));
        assert!(and.value(0b11));
        let xor = f(2, "0110");
        for x in 0..4 {
            assert_eq!(xor.value(x), (x >> 1) & 1 != x & 1);
        }
    }

    #[test]
    fn from_truth_table_length_guard() {
        let err = BooleanFunction::from_truth_table(2, &[0, 1, 0, 1, 0, 1]).unwrap_err();
        assert_eq!(
            err,
            Error::TruthTableLength {
                arity: 2,
                expected: 4,
                got: 6
            }
        );
    }

    #[test]
    fn from_truth_table_rejects_non_binary() {
        let err = BooleanFunction::from_truth_table(2, &[0, 0, 2, 1]).unwrap_err();
        assert_eq!(
            err,
            Error::NonBinarySymbol {
                position: 2,
                found: 2
            }
        );
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            f(2, "0001").support().iter().collect::<Vec<_>>(),
            vec![0b11]
        );
        assert!(BooleanFunction::constant(2, false)
            .unwrap()
            .support()
            .is_empty());
        assert_eq!(
            f(2, "0111").support().iter().collect::<Vec<_>>(),
            vec![0b01, 0b10, 0b11]
        );
    }

    #[test]
    fn support_size_is_table_weight() {
        for t in 0..16u32 {
            let g = BooleanFunction::from_fn(2, |x| t >> x & 1 == 1).unwrap();
            assert_eq!(g.support().len() as u64, g.weight());
        }
    }

    #[test]
    fn affine_functions_counts() {
        let guards = Guards::default();
        let n1 = affine_functions(1, &guards).unwrap();
        assert_eq!(n1.len(), 4);
        let tables: Vec<String> = n1.iter().map(|g| g.to_bit_string()).collect();
        assert!(tables.contains(&"00".to_string()));
        assert!(tables.contains(&"11".to_string()));
        assert!(tables.contains(&"01".to_string()));
        assert!(tables.contains(&"10".to_string()));

        let n2 = affine_functions(2, &guards).unwrap();
        assert_eq!(n2.len(), 8);
        // No duplicates.
        for i in 0..n2.len() {
            for j in i + 1..n2.len() {
                assert_ne!(n2[i], n2[j]);
            }
        }
    }

    #[test]
    fn affine_functions_satisfy_affinity_identity() {
        for l in affine_functions(3, &Guards::default()).unwrap() {
            let l0 = l.value(0);
            for x in 0..8 {
                for y in 0..8 {
                    assert_eq!(l.value(x ^ y), l.value(x) ^ l.value(y) ^ l0);
                }
            }
        }
    }

    #[test]
    fn affine_functions_guard() {
        let guards = Guards {
            max_brute_force_arity: 3,
            ..Guards::default()
        };
        let err = affine_functions(4, &guards).unwrap_err();
        assert!(matches!(
            err,
            Error::ResourceGuard {
                limit: 3,
                requested: 4,
                ..
            }
        ));
    }

    #[test]
    fn nonlinearity_of_affine_is_zero() {
        for l in affine_functions(3, &Guards::default()).unwrap() {
            assert_eq!(l.nonlinearity(), 0);
            assert_eq!(nonlinearity_brute_force(&l, &Guards::default()).unwrap(), 0);
        }
    }

    #[test]
    fn nonlinearity_of_and_is_one() {
        let and = f(2, "0001");
        assert_eq!(
            nonlinearity_brute_force(&and, &Guards::default()).unwrap(),
            1
        );
        assert_eq!(and.nonlinearity(), 1);
    }

    #[test]
    fn nonlinearity_quadratic_bent_n4() {
        // x1*x2 (+) x3*x4
        let g = BooleanFunction::from_fn(4, |x| {
            let (x1, x2, x3, x4) = (x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1);
            (x1 & x2) ^ (x3 & x4) == 1
        })
        .unwrap();
        assert_eq!(nonlinearity_brute_force(&g, &Guards::default()).unwrap(), 6);
        assert_eq!(g.nonlinearity(), 6);
        assert!(g.is_bent());
    }

    #[test]
    fn bent_verdicts() {
        assert!(f(2, "0001").is_bent());
        for l in affine_functions(2, &Guards::default()).unwrap() {
            assert!(!l.is_bent());
        }
        let odd = f(1, "01");
        assert_eq!(odd.bent_verdict(), BentVerdict::OddArity);
        assert_eq!(odd.bent_verdict().reason().unwrap(), "arity must be even");
    }

    #[test]
    fn brute_force_matches_spectral_nonlinearity() {
        let guards = Guards::default();
        // Exhaustive at n=2.
        for t in 0..16u32 {
            let g = BooleanFunction::from_fn(2, |x| t >> x & 1 == 1).unwrap();
            assert_eq!(
                g.nonlinearity(),
                nonlinearity_brute_force(&g, &guards).unwrap()
            );
        }
        // Seeded random sample at n=3 and n=4.
        for n in [3, 4] {
            for seed in 0..1000 {
                let g = crate::genlab::random_function(n, seed).unwrap();
                assert_eq!(
                    g.nonlinearity(),
                    nonlinearity_brute_force(&g, &guards).unwrap()
                );
            }
        }
    }

    #[test]
    fn complement_of_bent_is_bent_with_complementary_support() {
        let g = f(2, "0001");
        let c = g.complement();
        assert!(c.is_bent());
        let low = 2u64 - 1; // 2^(n-1) - 2^(n/2-1)
        let high = 2u64 + 1;
        assert_eq!(g.weight(), low);
        assert_eq!(c.weight(), high);
    }

    #[test]
    fn translate_moves_support() {
        let g = f(2, "0001");
        let t = g.translate(0b11).unwrap();
        assert_eq!(t.to_bit_string(), "1000");
    }

    #[test]
    fn hex_round_trip() {
        let g = f(2, "0001");
        assert_eq!(g.to_hex_string().unwrap(), "1");
        let h = f(4, "0001001000110100");
        assert_eq!(h.to_hex_string().unwrap(), "1234");
        assert!(f(1, "01").to_hex_string().is_none());
    }

    #[test]
    fn point_set_rejects_out_of_range() {
        let mut s = PointSet::empty(2).unwrap();
        assert!(s.insert(4).is_err());
        s.insert(3).unwrap();
        assert!(s.contains(3));
        assert!(!s.contains(0));
    }
}

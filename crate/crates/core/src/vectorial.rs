//! Vectorial Boolean functions F: Z_2^n -> Z_2^m, their two nonlinearity
//! notions, the vectorial bent predicate, and symmetric-difference algebra
//! on supports.

use crate::boolfn::{dot, BooleanFunction, PointSet};
use crate::error::{Error, Guards, Result};
use crate::srg::{srg_lambda_eq_mu_for_set, LambdaMuCheck};

/// An (n, m) function stored as its m component truth tables (f_1, ..., f_m).
/// Component 1 is the most significant output bit, matching the repo-wide
/// bit order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorialFunction {
    components: Vec<BooleanFunction>,
}

impl VectorialFunction {
    pub fn new(components: Vec<BooleanFunction>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::EmptyCollection {
                operation: "VectorialFunction::new",
            });
        };
        let n = first.arity();
        for c in &components {
            if c.arity() != n {
                return Err(Error::ArityMismatch {
                    left: n,
                    right: c.arity(),
                });
            }
        }
        Ok(VectorialFunction { components })
    }

    /// Input arity n.
    pub fn arity(&self) -> usize {
        self.components[0].arity()
    }

    /// Output arity m.
    pub fn output_arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[BooleanFunction] {
        &self.components
    }

    /// Component f_i by its 1-based index.
    pub fn component(&self, i: usize) -> &BooleanFunction {
        &self.components[i - 1]
    }

    /// F(x) as an m-bit integer, component 1 in the most significant bit.
    pub fn evaluate(&self, x: usize) -> usize {
        self.components
            .iter()
            .fold(0, |acc, c| acc << 1 | c.value(x) as usize)
    }
}

/// The XOR combination F.v = (+)_{i: v_i = 1} f_i for a nonzero m-bit
/// selector v (bit convention as in [`VectorialFunction`]: v_1 is the most
/// significant of the m bits).
pub fn component_combination(f: &VectorialFunction, v: usize) -> Result<BooleanFunction> {
    let m = f.output_arity();
    if v == 0 {
        return Err(Error::ZeroCombination);
    }
    if v >= 1 << m {
        return Err(Error::PointOutOfRange { point: v, arity: m });
    }
    let mut combo: Option<BooleanFunction> = None;
    for i in 1..=m {
        if v >> (m - i) & 1 == 1 {
            combo = Some(match combo {
                None => f.component(i).clone(),
                Some(acc) => acc.xor(f.component(i))?,
            });
        }
    }
    Ok(combo.expect("v is nonzero"))
}

/// min_v Nl(F.v) over the 2^m - 1 nonzero selectors: the component-wise
/// nonlinearity of F.
pub fn min_combination_nonlinearity(f: &VectorialFunction) -> u64 {
    (1..1usize << f.output_arity())
        .map(|v| {
            component_combination(f, v)
                .expect("selector in range")
                .nonlinearity()
        })
        .min()
        .expect("at least one component")
}

/// Distance-based nonlinearity: the minimum number of points where F
/// differs from an affine map Z_2^n -> Z_2^m, by brute force over all
/// 2^(m(n+1)) affine maps. Guarded by `guards.max_affine_map_bits`.
pub fn affine_map_distance(f: &VectorialFunction, guards: &Guards) -> Result<u64> {
    let n = f.arity();
    let m = f.output_arity();
    let code_bits = m * (n + 1);
    if code_bits > guards.max_affine_map_bits {
        return Err(Error::ResourceGuard {
            operation: "affine_map_distance",
            limit: guards.max_affine_map_bits,
            requested: code_bits,
        });
    }
    let len = 1usize << n;
    let values: Vec<usize> = (0..len).map(|x| f.evaluate(x)).collect();
    let row_mask = len - 1;
    let mut best = u64::MAX;
    // Each code packs m rows of (n coefficient bits + 1 constant bit).
    for code in 0..1u64 << code_bits {
        let mut distance = 0u64;
        for (x, &fx) in values.iter().enumerate() {
            let mut image = 0usize;
            for i in 0..m {
                let chunk = (code >> (i * (n + 1))) as usize;
                let row = chunk & row_mask;
                let constant = chunk >> n & 1;
                image = image << 1 | (dot(row, x) as usize ^ constant);
            }
            if image != fx {
                distance += 1;
            }
        }
        best = best.min(distance);
    }
    Ok(best)
}

/// Outcome of the vectorial bent check. On failure `witness` names a
/// selector whose combination is not bent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorialBentCheck {
    pub bent: bool,
    pub witness: Option<usize>,
}

/// F is (n, m)-bent iff every one of its 2^m - 1 nonzero combinations is
/// bent; equivalently [`min_combination_nonlinearity`] reaches
/// (2^n - 2^(n/2))/2.
pub fn vectorial_bent_check(f: &VectorialFunction) -> VectorialBentCheck {
    for v in 1..1usize << f.output_arity() {
        let combo = component_combination(f, v).expect("selector in range");
        if !combo.is_bent() {
            return VectorialBentCheck {
                bent: false,
                witness: Some(v),
            };
        }
    }
    VectorialBentCheck {
        bent: true,
        witness: None,
    }
}

pub fn is_vectorial_bent(f: &VectorialFunction) -> bool {
    vectorial_bent_check(f).bent
}

/// (A \ B) u (B \ A), the group operation on supports.
pub fn symmetric_difference(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    Ok(a.xor_members(b))
}

/// Points contained in an odd number of the given sets; equals the left
/// fold of the pairwise symmetric difference. The collection must be
/// nonempty.
pub fn nary_symmetric_difference(sets: &[PointSet]) -> Result<PointSet> {
    let Some((first, rest)) = sets.split_first() else {
        return Err(Error::EmptyCollection {
            operation: "nary_symmetric_difference",
        });
    };
    let mut acc = first.clone();
    for s in rest {
        acc = symmetric_difference(&acc, s)?;
    }
    Ok(acc)
}

/// Per-subset verdict for the support condition: for a nonempty index set I,
/// the Cayley graph on the symmetric difference of the selected supports is
/// tested for strong regularity with lambda = mu.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetReport {
    /// The m-bit indicator of the subset (same convention as combination
    /// selectors); reports are ordered by this value.
    pub selector: usize,
    /// 1-based component indices in the subset.
    pub indices: Vec<usize>,
    /// Size of the symmetric difference of the selected supports.
    pub support_size: u64,
    /// The lambda = mu regularity verdict for that connection set.
    pub check: LambdaMuCheck,
    /// Internal cross-check: the symmetric difference of the supports equals
    /// the support of the XOR combination of the selected components.
    pub supports_match: bool,
}

/// Runs the per-subset regularity check over every nonempty subset of
/// components. For an (n, m)-bent F with loop-free components every subset
/// passes; failures are reported per subset, never as errors.
pub fn support_regularity_report(f: &VectorialFunction) -> Vec<SubsetReport> {
    let m = f.output_arity();
    let supports: Vec<PointSet> = f.components().iter().map(|c| c.support()).collect();
    (1..1usize << m)
        .map(|selector| {
            let indices: Vec<usize> = (1..=m).filter(|i| selector >> (m - i) & 1 == 1).collect();
            let selected: Vec<PointSet> =
                indices.iter().map(|&i| supports[i - 1].clone()).collect();
            let difference = nary_symmetric_difference(&selected).expect("nonempty, equal arity");
            let combo_support = component_combination(f, selector)
                .expect("selector in range")
                .support();
            let supports_match = difference == combo_support;
            let check = srg_lambda_eq_mu_for_set(&difference);
            SubsetReport {
                selector,
                indices,
                support_size: difference.len() as u64,
                check,
                supports_match,
            }
        })
        .collect()
}

//! Dual enumerators of direct sums of codes on direct and ordinal sums of
//! pomsets.

use crate::block::BlockStructure;
use crate::code::LinearCode;
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::macwilliams::{chain::chain_dual_enumerator, fourier::fourier_dual_enumerator};
use crate::pomset::{Pomset, SumMode};

/// What the sum identities need to know about one component code `C_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumPart {
    /// Enumerator of `C_k^perp` under the dual of the component pomset.
    pub dual_enumerator: WeightEnumerator,
    /// `|C_k|`
    pub code_size: u64,
    /// Code length `n_k`.
    pub length: usize,
    /// Number of pomset points `s_k`.
    pub points: usize,
    pub modulus: u32,
}

impl SumPart {
    fn check(&self) -> Result<()> {
        let expected = self.points * (self.modulus / 2) as usize;
        if self.dual_enumerator.degree() != expected {
            return Err(Error::InvalidParts(format!(
                "enumerator degree {} does not match {} points over Z_{}",
                self.dual_enumerator.degree(),
                self.points,
                self.modulus
            )));
        }
        Ok(())
    }
}

fn product(a: &WeightEnumerator, b: &WeightEnumerator) -> Result<WeightEnumerator> {
    let mut out = vec![0u64; a.degree() + b.degree() + 1];
    for (i, &x) in a.coeffs().iter().enumerate() {
        for (j, &y) in b.coeffs().iter().enumerate() {
            let term = x.checked_mul(y).ok_or_else(|| Error::InvalidParts("coefficient overflow".into()))?;
            out[i + j] = out[i + j]
                .checked_add(term)
                .ok_or_else(|| Error::InvalidParts("coefficient overflow".into()))?;
        }
    }
    Ok(WeightEnumerator::new(out))
}

/// `x^(s1 h) W2 + (m^n2 / |C2|) y^(s2 h) (W1 - x^(s1 h))`
fn ordinal_pair(lower: &SumPart, upper: &SumPart) -> Result<SumPart> {
    let m = lower.modulus;
    let d2 = upper.dual_enumerator.degree();
    let space = (m as u128)
        .checked_pow(upper.length as u32)
        .ok_or_else(|| Error::InvalidParts("m^n overflows".into()))?;
    if upper.code_size == 0 || space % upper.code_size as u128 != 0 {
        return Err(Error::InvalidParts(format!(
            "|C| = {} does not divide {}^{}",
            upper.code_size, m, upper.length
        )));
    }
    let factor = u64::try_from(space / upper.code_size as u128).map_err(|_| Error::InvalidParts("coefficient overflow".into()))?;
    let degree = lower.dual_enumerator.degree() + d2;
    let mut out = vec![0u64; degree + 1];
    out[..=d2].copy_from_slice(upper.dual_enumerator.coeffs());
    for (k, &a) in lower.dual_enumerator.coeffs().iter().enumerate().skip(1) {
        out[d2 + k] = a
            .checked_mul(factor)
            .ok_or_else(|| Error::InvalidParts("coefficient overflow".into()))?;
    }
    Ok(SumPart {
        dual_enumerator: WeightEnumerator::new(out),
        code_size: lower.code_size * upper.code_size,
        length: lower.length + upper.length,
        points: lower.points + upper.points,
        modulus: m,
    })
}

/// Combines component dual enumerators. Direct mode multiplies them;
/// ordinal mode applies the two-part identity right-associatively,
/// `P1 + (P2 + (... + P_l))`.
pub fn sum_dual_enumerator(parts: &[SumPart], mode: SumMode, modulus: u32) -> Result<WeightEnumerator> {
    if parts.len() < 2 {
        return Err(Error::InvalidParts(format!("need at least 2 parts, got {}", parts.len())));
    }
    for p in parts {
        if p.modulus != modulus {
            return Err(Error::ModulusMismatch {
                left: p.modulus,
                right: modulus,
            });
        }
        p.check()?;
    }
    match mode {
        SumMode::Direct => parts[1..]
            .iter()
            .try_fold(parts[0].dual_enumerator.clone(), |acc, p| product(&acc, &p.dual_enumerator)),
        SumMode::Ordinal => {
            let last = parts.last().unwrap().clone();
            let folded = parts[..parts.len() - 1]
                .iter()
                .rev()
                .try_fold(last, |upper, lower| ordinal_pair(lower, &upper))?;
            Ok(folded.dual_enumerator)
        }
    }
}

/// A pomset written as a tree of direct and ordinal sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Composition {
    Leaf(Pomset),
    Sum { mode: SumMode, parts: Vec<Composition> },
}

impl Composition {
    pub fn points(&self) -> usize {
        match self {
            Composition::Leaf(p) => p.size(),
            Composition::Sum { parts, .. } => parts.iter().map(Composition::points).sum(),
        }
    }

    /// The pomset the tree describes.
    pub fn build(&self) -> Result<Pomset> {
        match self {
            Composition::Leaf(p) => Ok(p.clone()),
            Composition::Sum { mode, parts } => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::InvalidParts("empty composition".into()))?
                    .build()?;
                iter.try_fold(first, |acc, p| acc.combine(&p.build()?, *mode))
            }
        }
    }
}

/// Dual enumerator of `code` under the dual of the composed pomset, using
/// the sum identities at every internal node. Chain leaves use the chain
/// identity; other leaves fall back to the character-sum transform.
///
/// The code must split as a direct sum along the tree's components.
pub fn composition_dual_enumerator(
    code: &LinearCode,
    tree: &Composition,
    structure: &BlockStructure,
    budget: u64,
) -> Result<WeightEnumerator> {
    if tree.points() != structure.num_blocks() {
        return Err(Error::StructureMismatch(format!(
            "composition has {} points but there are {} blocks",
            tree.points(),
            structure.num_blocks()
        )));
    }
    match tree {
        Composition::Leaf(p) if p.is_chain() => chain_dual_enumerator(code, p, structure),
        Composition::Leaf(p) => fourier_dual_enumerator(code, p, structure, budget),
        Composition::Sum { mode, parts } => {
            let mut sum_parts = Vec::with_capacity(parts.len());
            let mut from = 1;
            let mut product_size: u128 = 1;
            for part in parts {
                let to = from + part.points() - 1;
                let sub = code.project(from, to)?;
                product_size *= sub.size() as u128;
                let w = composition_dual_enumerator(&sub, part, sub.structure(), budget)?;
                sum_parts.push(SumPart {
                    dual_enumerator: w,
                    code_size: sub.size() as u64,
                    length: sub.structure().len(),
                    points: part.points(),
                    modulus: structure.modulus(),
                });
                from = to + 1;
            }
            if product_size != code.size() as u128 {
                return Err(Error::Hypothesis(
                    "code is not the direct sum of its projections onto the pomset components".into(),
                ));
            }
            sum_dual_enumerator(&sum_parts, *mode, structure.modulus())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(coeffs: Vec<u64>, code_size: u64, length: usize, points: usize, modulus: u32) -> SumPart {
        SumPart {
            dual_enumerator: WeightEnumerator::new(coeffs),
            code_size,
            length,
            points,
            modulus,
        }
    }

    #[test]
    fn direct_with_full_second_code_is_a_shift() {
        // C2 = Z_5^2 on one point: dual is {0}, enumerator x^2
        let w1 = part(vec![1, 2, 2], 5, 1, 1, 5);
        let w2 = part(vec![1, 0, 0], 25, 2, 1, 5);
        let w = sum_dual_enumerator(&[w1, w2], SumMode::Direct, 5).unwrap();
        assert_eq!(w.coeffs(), &[1, 2, 2, 0, 0]);
    }

    #[test]
    fn rejects_bad_parts() {
        let p = part(vec![1, 2, 2], 5, 1, 1, 5);
        assert!(sum_dual_enumerator(std::slice::from_ref(&p), SumMode::Direct, 5).is_err());
        let q = part(vec![1, 1], 2, 1, 1, 4);
        assert!(matches!(
            sum_dual_enumerator(&[p.clone(), q], SumMode::Ordinal, 5),
            Err(Error::ModulusMismatch { .. })
        ));
        let bad_degree = part(vec![1, 2], 5, 1, 1, 5);
        assert!(sum_dual_enumerator(&[p, bad_degree], SumMode::Ordinal, 5).is_err());
    }
}

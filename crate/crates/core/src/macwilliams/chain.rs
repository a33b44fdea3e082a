//! Dual enumerators for chain pomsets, computed from the code alone.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::block::{BlockStructure, CodeVector};
use crate::code::LinearCode;
use crate::cyclotomic::{as_integer, kernel_sum, CycloNum, CyclotomicField};
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::pomset::Pomset;

/// Per-block constants of the chain identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCoefficients {
    /// `((2j+1)^k - (2j-1)^k) / 2`, half the number of vectors in `Z_m^k`
    /// with block Lee weight exactly `j` (for `j < m/2`).
    pub beta: BigInt,
    /// `m^k - (m-1)^k`, the number with block Lee weight `m/2` when `m` is
    /// even.
    pub gamma: BigInt,
}

pub fn chain_coefficients(j: u32, block_dim: usize, modulus: u32) -> Result<ChainCoefficients> {
    crate::pomset::check_modulus(modulus)?;
    let h = modulus / 2;
    if j == 0 || j > h {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: h as usize,
        });
    }
    if block_dim == 0 {
        return Err(Error::InvalidBlocks("block dimension 0".into()));
    }
    let k = block_dim as u32;
    let pow = |b: i64| num_traits::pow(BigInt::from(b), k as usize);
    let beta = (pow(2 * j as i64 + 1) - pow(2 * j as i64 - 1)) / 2;
    let gamma = pow(modulus as i64) - pow(modulus as i64 - 1);
    Ok(ChainCoefficients { beta, gamma })
}

/// The per-codeword term for one block:
/// `sum_a cos(2 pi u_a j / m) prod_{b<a} K(u_b, j-1) prod_{b>a} K(u_b, j)`,
/// with the `j = m/2` variant `sum_a (-1)^{u_a} prod_{b<a} K(u_b, m/2-1)
/// prod_{b>a} (K(u_b, m/2-1) + (-1)^{u_b})` when `m` is even.
pub(crate) fn block_term(block: &[u32], j: u32, field: &std::sync::Arc<CyclotomicField>) -> Result<CycloNum> {
    let m = field.modulus();
    let top = m.is_multiple_of(2) && j == m / 2;
    let mut total = CycloNum::zero(field);
    for a in 0..block.len() {
        let mut term = if top {
            // (-1)^u = w^(u m/2)
            CycloNum::root_power(field, (block[a] * (m / 2)) as i64)
        } else {
            CycloNum::cosine(field, block[a] as i64 * j as i64)
        };
        for (b, &ub) in block.iter().enumerate() {
            if b == a {
                continue;
            }
            let factor = if b < a {
                kernel_sum(ub, j - 1, m)?
            } else if top {
                kernel_sum(ub, j - 1, m)? + CycloNum::root_power(field, (ub * (m / 2)) as i64)
            } else {
                kernel_sum(ub, j, m)?
            };
            term = &term * &factor;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `LW^j` summed over a stratum whose words are nonzero on `block` and zero
/// after it.
pub fn lw_term(stratum: &BTreeSet<CodeVector>, block: usize, j: u32, structure: &BlockStructure) -> Result<CycloNum> {
    let m = structure.modulus();
    let s = structure.num_blocks();
    if block == 0 || block > s {
        return Err(Error::IndexOutOfRange { index: block, max: s });
    }
    if j == 0 || j > m / 2 {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: (m / 2) as usize,
        });
    }
    let field = CyclotomicField::get(m)?;
    let mut total = CycloNum::zero(&field);
    for u in stratum {
        structure.check_vector(u)?;
        let nonzero_here = u.block(structure, block).iter().any(|&x| x != 0);
        let zero_after = (block + 1..=s).all(|b| u.block(structure, b).iter().all(|&x| x == 0));
        if !nonzero_here || !zero_after {
            return Err(Error::Hypothesis(format!(
                "stratum word {u} must be nonzero on block {block} and zero after it"
            )));
        }
        total = &total + &block_term(u.block(structure, block), j, &field)?;
    }
    Ok(total)
}

/// Reorders `code` and `structure` so that `pomset` becomes the standard
/// chain `1 < 2 < ... < s`.
pub(crate) fn normalize_chain(
    code: &LinearCode,
    pomset: &Pomset,
    structure: &BlockStructure,
) -> Result<(LinearCode, BlockStructure)> {
    structure.check_pomset(pomset)?;
    if code.structure() != structure {
        return Err(Error::StructureMismatch("code uses a different block structure".into()));
    }
    let order = pomset.chain_order().ok_or(Error::NotAChain)?;
    if order.iter().enumerate().all(|(i, &b)| b == i + 1) {
        return Ok((code.clone(), structure.clone()));
    }
    let code = code.permute_blocks(&order);
    let structure = code.structure().clone();
    Ok((code, structure))
}

pub(crate) fn to_enumerator(values: Vec<BigRational>) -> Result<WeightEnumerator> {
    let coeffs = values
        .into_iter()
        .map(|v| {
            if !v.is_integer() || v < BigRational::zero() {
                return Err(Error::NonInteger(v.to_string()));
            }
            u64::try_from(v.to_integer()).map_err(|_| Error::NonInteger(v.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightEnumerator::new(coeffs))
}

fn ratio(num: BigInt, den: usize) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

/// Enumerator of `C^perp` under the dual chain, evaluated from the strata
/// `C_i`, `C_i'` of `C` with exact cyclotomic sums.
pub fn chain_dual_enumerator(code: &LinearCode, pomset: &Pomset, structure: &BlockStructure) -> Result<WeightEnumerator> {
    let (code, structure) = normalize_chain(code, pomset, structure)?;
    let m = structure.modulus();
    let h = m / 2;
    let s = structure.num_blocks();
    let field = CyclotomicField::get(m)?;
    let mut coeffs = vec![BigRational::zero(); structure.max_weight() + 1];
    coeffs[0] = BigRational::one();

    for i in 1..=s {
        let (lower, top) = code.chain_strata(i)?;
        let factor = ratio(num_traits::pow(BigInt::from(m), structure.len_after(i)), code.size());
        let lower_size = BigInt::from(lower.size());
        for j in 1..=h {
            let cc = chain_coefficients(j, structure.dim(i), m)?;
            let lw = lw_term(&top, i, j, &structure)?;
            let (base, multiplier) = if m % 2 == 0 && j == h {
                (cc.gamma * &lower_size, 1)
            } else {
                (cc.beta * &lower_size, 2)
            };
            let value = (CycloNum::from_integer(&field, base) + lw).scale_int(multiplier);
            let value = BigRational::from_integer(as_integer(&value)?) * &factor;
            coeffs[(s - i) * h as usize + j as usize] = value;
        }
    }
    to_enumerator(coeffs)
}

/// The block-dimension-one specialisation written out directly: codewords of
/// `C_i'` are grouped by the Lee weight `l` of their top coordinate, and the
/// character sums collapse to single cosines.
pub fn lee_chain_dual_enumerator(code: &LinearCode, pomset: &Pomset, structure: &BlockStructure) -> Result<WeightEnumerator> {
    if structure.dims().iter().any(|&d| d != 1) {
        return Err(Error::Hypothesis("every block must have dimension 1".into()));
    }
    let (code, structure) = normalize_chain(code, pomset, structure)?;
    let m = structure.modulus();
    let h = m / 2;
    let s = structure.num_blocks();
    let field = CyclotomicField::get(m)?;
    let mut coeffs = vec![BigRational::zero(); structure.max_weight() + 1];
    coeffs[0] = BigRational::one();

    for i in 1..=s {
        let (lower, top) = code.chain_strata(i)?;
        let factor = ratio(num_traits::pow(BigInt::from(m), s - i), code.size());
        let c_i = CycloNum::from_integer(&field, lower.size());
        let top_values: Vec<u32> = top.iter().map(|u| u.0[i - 1]).collect();
        for j in 1..=h {
            let value = if m % 2 == 1 {
                // |C_i| + sum_l cos(2 pi l j / m) |C_il'|
                let mut acc = c_i.clone();
                for l in 1..=h {
                    let count = top_values.iter().filter(|&&u| u.min(m - u) == l).count();
                    acc = acc + CycloNum::cosine(&field, (l * j) as i64).scale_int(count as i64);
                }
                acc.scale_int(2)
            } else if j < h {
                let cos_sum = top_values
                    .iter()
                    .fold(CycloNum::zero(&field), |acc, &u| acc + CycloNum::cosine(&field, (u * j) as i64));
                (c_i.clone() + cos_sum).scale_int(2)
            } else {
                let signs: i64 = top_values.iter().map(|&u| if u % 2 == 0 { 1 } else { -1 }).sum();
                c_i.clone() + CycloNum::from_integer(&field, signs)
            };
            coeffs[(s - i) * h as usize + j as usize] = BigRational::from_integer(as_integer(&value)?) * &factor;
        }
    }
    to_enumerator(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_closed_forms() {
        for j in 1..=3 {
            let c = chain_coefficients(j, 1, 7).unwrap();
            assert_eq!(c.beta, BigInt::from(1));
            assert_eq!(c.gamma, BigInt::from(1));
        }
        assert_eq!(chain_coefficients(1, 2, 5).unwrap().beta, BigInt::from(4));
        assert_eq!(chain_coefficients(2, 2, 5).unwrap().beta, BigInt::from(8));
        assert_eq!(chain_coefficients(2, 2, 4).unwrap().gamma, BigInt::from(7));
        assert!(chain_coefficients(0, 2, 5).is_err());
        assert!(chain_coefficients(3, 2, 5).is_err());
    }

    #[test]
    fn beta_counts_lee_shells() {
        // 2 * beta = #{v in Z_m^k : max Lee weight = j} for j < m/2
        for m in [5u32, 6, 7] {
            for k in 1..=3usize {
                let b = BlockStructure::new(m, vec![k]).unwrap();
                for j in 1..=(m - 1) / 2 {
                    let count = (0..b.space_size() as u64)
                        .filter(|&i| b.block_weights(&b.vector_at(i))[0] == j)
                        .count();
                    assert_eq!(BigInt::from(count), chain_coefficients(j, k, m).unwrap().beta * 2);
                }
                if m % 2 == 0 {
                    let count = (0..b.space_size() as u64)
                        .filter(|&i| b.block_weights(&b.vector_at(i))[0] == m / 2)
                        .count();
                    assert_eq!(BigInt::from(count), chain_coefficients(m / 2, k, m).unwrap().gamma);
                }
            }
        }
    }

    #[test]
    fn lw_of_empty_stratum_is_zero() {
        let b = BlockStructure::new(5, vec![1, 2]).unwrap();
        assert!(lw_term(&BTreeSet::new(), 2, 1, &b).unwrap().is_zero());
    }

    #[test]
    fn lw_even_top_branch_single_coordinate() {
        let b = BlockStructure::new(4, vec![1]).unwrap();
        let stratum: BTreeSet<CodeVector> = [CodeVector(vec![2])].into_iter().collect();
        assert_eq!(as_integer(&lw_term(&stratum, 1, 2, &b).unwrap()), Ok(BigInt::from(1)));
        let stratum: BTreeSet<CodeVector> = [CodeVector(vec![2]), CodeVector(vec![1])].into_iter().collect();
        assert_eq!(as_integer(&lw_term(&stratum, 1, 2, &b).unwrap()), Ok(BigInt::from(0)));
    }

    #[test]
    fn lw_rejects_words_outside_stratum() {
        let b = BlockStructure::new(5, vec![1, 2]).unwrap();
        let stratum: BTreeSet<CodeVector> = [CodeVector(vec![1, 0, 0])].into_iter().collect();
        assert!(matches!(lw_term(&stratum, 2, 1, &b), Err(Error::Hypothesis(_))));
        assert!(lw_term(&stratum, 1, 1, &b).is_ok());
        assert!(lw_term(&stratum, 1, 3, &b).is_err());
    }

    #[test]
    fn rejects_non_chain() {
        let b = BlockStructure::new(5, vec![1, 1]).unwrap();
        let p = Pomset::antichain(2, 5).unwrap();
        let c = LinearCode::zero(&b);
        assert_eq!(chain_dual_enumerator(&c, &p, &b), Err(Error::NotAChain));
    }

    #[test]
    fn full_space_has_trivial_dual() {
        for (m, dims) in [(4u32, vec![2, 1]), (5, vec![1, 2]), (3, vec![1, 1, 1])] {
            let b = BlockStructure::new(m, dims).unwrap();
            let p = Pomset::chain(b.num_blocks(), m).unwrap();
            let w = chain_dual_enumerator(&LinearCode::full_space(&b), &p, &b).unwrap();
            assert_eq!(w, WeightEnumerator::x_power(b.max_weight()));
        }
    }
}

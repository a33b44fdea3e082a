use rayon::prelude::*;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::block::{weight_unchecked, BlockStructure, CodeVector};
use crate::code::LinearCode;
use crate::cyclotomic::{as_integer, CycloNum, CyclotomicField};
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::pomset::Pomset;

/// Dual enumerator through the transform identity
/// `sum_{v in C^perp} f(v) = (1/|C|) sum_{u in C} sum_{v} w^(u.v) f(v)`
/// with `f(v) = x^(D - w(v)) y^(w(v))` under the dual pomset.
///
/// Works for any pomset. For each weight the pairs `(u, v)` are first
/// counted by `u.v mod m`, then that group-ring element is evaluated exactly
/// in `Q(w)`.
pub fn fourier_dual_enumerator(
    code: &LinearCode,
    pomset: &Pomset,
    structure: &BlockStructure,
    budget: u64,
) -> Result<WeightEnumerator> {
    structure.check_pomset(pomset)?;
    if code.structure() != structure {
        return Err(Error::StructureMismatch("code uses a different block structure".into()));
    }
    structure.check_budget(budget)?;
    let m = structure.modulus() as usize;
    let degree = structure.max_weight();
    let dual = pomset.dual();
    let words: Vec<&CodeVector> = code.words().iter().collect();
    let total = structure.space_size() as u64;

    let counts = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; (degree + 1) * m],
            |mut acc, i| {
                let v = structure.vector_at(i);
                let w = weight_unchecked(&v, &dual, structure) as usize;
                for u in &words {
                    acc[w * m + u.dot(&v, m as u32) as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; (degree + 1) * m],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let field = CyclotomicField::get(structure.modulus())?;
    let size = BigInt::from(code.size());
    let mut coeffs = Vec::with_capacity(degree + 1);
    for w in 0..=degree {
        let value = as_integer(&CycloNum::from_group_ring(&field, &counts[w * m..(w + 1) * m]))?;
        let (q, r) = value.div_rem(&size);
        if r != BigInt::from(0) {
            return Err(Error::NonInteger(format!("{value}/{size}")));
        }
        coeffs.push(u64::try_from(&q).map_err(|_| Error::NonInteger(q.to_string()))?);
    }
    Ok(WeightEnumerator::new(coeffs))
}

use std::fmt;

use crate::block::{weight_unchecked, BlockStructure};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::pomset::Pomset;

/// Homogeneous weight enumerator `sum_i A_i x^(D-i) y^i`, stored as `A_0..A_D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty(), "enumerator needs at least A_0");
        WeightEnumerator { coeffs }
    }

    /// `x^degree`: the enumerator of the zero code.
    pub fn x_power(degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[0] = 1;
        WeightEnumerator { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, weight: usize) -> u64 {
        self.coeffs.get(weight).copied().unwrap_or(0)
    }

    /// Number of words counted, `sum_i A_i`.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// First weight at which the two coefficient lists differ.
    pub fn first_difference(&self, other: &WeightEnumerator) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeff(i) != other.coeff(i))
    }

    /// `A = [1, 0, 1, 8, 6]`
    pub fn coefficient_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        format!("A = [{}]", parts.join(", "))
    }
}

fn power(var: char, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = format!("{}{}", power('x', d - i), power('y', i));
            if a == 1 && !mono.is_empty() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Counts codewords by `(P, pi)`-weight.
pub fn weight_enumerator(code: &LinearCode, pomset: &Pomset, structure: &BlockStructure) -> Result<WeightEnumerator> {
    structure.check_pomset(pomset)?;
    if code.structure() != structure {
        return Err(Error::StructureMismatch("code uses a different block structure".into()));
    }
    Ok(enumerate_words(code.words().iter(), pomset, structure))
}

pub(crate) fn enumerate_words<'a>(
    words: impl Iterator<Item = &'a crate::block::CodeVector>,
    pomset: &Pomset,
    structure: &BlockStructure,
) -> WeightEnumerator {
    let mut coeffs = vec![0u64; structure.max_weight() + 1];
    for w in words {
        coeffs[weight_unchecked(w, pomset, structure) as usize] += 1;
    }
    WeightEnumerator { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_formatting() {
        assert_eq!(WeightEnumerator::new(vec![1, 0, 1, 8, 6]).to_string(), "x^4 + x^2y^2 + 8xy^3 + 6y^4");
        assert_eq!(
            WeightEnumerator::new(vec![1, 2, 2, 10, 10]).to_string(),
            "x^4 + 2x^3y + 2x^2y^2 + 10xy^3 + 10y^4"
        );
        assert_eq!(WeightEnumerator::x_power(0).to_string(), "1");
        assert_eq!(WeightEnumerator::new(vec![1, 0, 0, 0, 0]).coefficient_list(), "A = [1, 0, 0, 0, 0]");
    }

    #[test]
    fn first_difference() {
        let a = WeightEnumerator::new(vec![1, 0, 3]);
        let b = WeightEnumerator::new(vec![1, 1, 2]);
        assert_eq!(a.first_difference(&b), Some(1));
        assert_eq!(a.first_difference(&a), None);
    }
}

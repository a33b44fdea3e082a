//! Prime modulus, every block of dimension two.
//!
//! Over a field every nonzero top block of a codeword in `C_i'` can be scaled
//! to `(1, t)` or `(0, 1)`, and the character sum over the whole scalar orbit
//! takes one of three integer values. The dual enumerator then only needs
//! the number of orbits in each class.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::block::{BlockStructure, CodeVector};
use crate::code::LinearCode;
use crate::cyclotomic::{as_integer, CycloNum, CyclotomicField};
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::macwilliams::chain::{block_term, normalize_chain, to_enumerator};
use crate::pomset::Pomset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DimTwoClass {
    /// orbit sum `2m - 4j`
    Class1,
    /// orbit sum `-4j`
    Class2,
    /// orbit sum `m - 4j`
    Class3,
}

impl DimTwoClass {
    pub fn orbit_value(self, j: u32, modulus: u32) -> i64 {
        let (m, j) = (modulus as i64, j as i64);
        match self {
            DimTwoClass::Class1 => 2 * m - 4 * j,
            DimTwoClass::Class2 => -4 * j,
            DimTwoClass::Class3 => m - 4 * j,
        }
    }

    pub fn index(self) -> usize {
        match self {
            DimTwoClass::Class1 => 1,
            DimTwoClass::Class2 => 2,
            DimTwoClass::Class3 => 3,
        }
    }

    /// Inverse of [`orbit_value`](Self::orbit_value).
    pub fn from_orbit_value(value: i64, j: u32, modulus: u32) -> Option<Self> {
        [DimTwoClass::Class1, DimTwoClass::Class2, DimTwoClass::Class3]
            .into_iter()
            .find(|c| c.orbit_value(j, modulus) == value)
    }
}

impl fmt::Display for DimTwoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class{}", self.index())
    }
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn check_prime(modulus: u32) -> Result<()> {
    if !is_prime(modulus) {
        return Err(Error::Hypothesis(format!("modulus {modulus} is not prime")));
    }
    Ok(())
}

fn check_j(j: u32, modulus: u32) -> Result<()> {
    if j == 0 || j > modulus / 2 {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: (modulus / 2) as usize,
        });
    }
    Ok(())
}

/// Signed representative of `x mod m` in `(-m/2, m/2]`.
fn centered(x: i64, m: i64) -> i64 {
    let r = x.rem_euclid(m);
    if r <= m / 2 {
        r
    } else {
        r - m
    }
}

fn inverse_mod(t: i64, m: i64) -> i64 {
    // m prime: t^(m-2)
    let mut result = 1i64;
    let (mut base, mut exp) = (t.rem_euclid(m), m - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    result
}

/// Class of a normalised top block `(1, t)` (or `(1, -t)`) for the shell
/// `j`.
///
/// Two conditions decide it: some `a` with `|a| <= j` solves
/// `a t + j = 0 (mod m)`, and `t j` lies within `j - 1` of a multiple of `m`.
/// Both hold for class 1, neither for class 2, exactly one for class 3. The
/// block `(1, 0)` satisfies only the second and is class 3, as is `(0, 1)`.
pub fn classify_block_dim2(t: u32, j: u32, modulus: u32) -> Result<DimTwoClass> {
    check_prime(modulus)?;
    check_j(j, modulus)?;
    if t >= modulus {
        return Err(Error::ResidueOutOfRange { value: t, modulus });
    }
    let (m, t, j) = (modulus as i64, t as i64, j as i64);
    let solvable = t != 0 && centered(j * inverse_mod(t, m), m).abs() <= j;
    let near_multiple = centered(t * j, m).abs() < j;
    Ok(match (solvable, near_multiple) {
        (true, true) => DimTwoClass::Class1,
        (false, false) => DimTwoClass::Class2,
        _ => DimTwoClass::Class3,
    })
}

/// The interval-based case analysis exactly as it is commonly stated for
/// `t` in `1..=(m-1)/2`, kept to report where its boundary inequalities
/// disagree with [`classify_block_dim2`].
pub fn printed_rule_class(t: u32, j: u32, modulus: u32) -> Result<DimTwoClass> {
    check_prime(modulus)?;
    check_j(j, modulus)?;
    let t = t.min(modulus - t) as i64;
    let (m, j) = (modulus as i64, j as i64);
    if j == 1 {
        return Ok(if t <= 1 { DimTwoClass::Class3 } else { DimTwoClass::Class2 });
    }
    let divides = t != 0 && j % t == 0;
    let solvable = divides || (-j..=j).any(|a| (a * t + j).rem_euclid(m) == 0);
    // lower/upper bounds are fractions p/q; compare t against them exactly
    let ge = |p: i64, q: i64| t * q >= p;
    let gt = |p: i64, q: i64| t * q > p;
    let le = |p: i64, q: i64| t * q <= p;
    let lt = |p: i64, q: i64| t * q < p;
    // (lm+1)/j - 1 <= t <= (lm-1)/j + 1
    let near = |l: i64| ge(l * m + 1 - j, j) && le(l * m - 1 + j, j);

    if j % 2 == 0 {
        let class1 = ((1..j / 2).any(near) || (ge(j * m + 2 - 2 * j, 2 * j) && le(m - 1, 2))) && solvable;
        if class1 {
            return Ok(DimTwoClass::Class1);
        }
        let class2 = (t >= 1 && le(m + 1 - j, j) && !divides)
            || ((1..j / 2).any(|l| gt(l * m - 1 + j, j) && lt((l + 1) * m + 1 - j, j)) && !divides && !solvable);
        if class2 {
            return Ok(DimTwoClass::Class2);
        }
    } else {
        if (1..=(j - 1) / 2).any(near) && solvable {
            return Ok(DimTwoClass::Class1);
        }
        let class2 = (t >= 1 && lt(m + 1 - j, j) && !divides)
            || ((1..=(j - 3) / 2).any(|l| ge(l * m - 1 + j, j) && le((l + 1) * m + 1 - j, j)) && !divides && !solvable)
            || (gt((j - 1) * m - 2 + 2 * j, 2 * j) && le(m - 1, 2) && !divides && !solvable);
        if class2 {
            return Ok(DimTwoClass::Class2);
        }
    }
    Ok(DimTwoClass::Class3)
}

/// Exact sum of the per-codeword block term over the nonzero multiples of
/// the block `(1, t)`.
pub fn orbit_sum(t: u32, j: u32, modulus: u32) -> Result<CycloNum> {
    check_j(j, modulus)?;
    let field = CyclotomicField::get(modulus)?;
    let mut total = CycloNum::zero(&field);
    for r in 1..modulus {
        let block = [r, (r as u64 * t as u64 % modulus as u64) as u32];
        total = &total + &block_term(&block, j, &field)?;
    }
    Ok(total)
}

/// Class implied by the exact orbit sum; `None` if the sum is not one of the
/// three expected integers.
pub fn orbit_class(t: u32, j: u32, modulus: u32) -> Result<Option<DimTwoClass>> {
    let value = as_integer(&orbit_sum(t, j, modulus)?)?;
    Ok(i64::try_from(&value)
        .ok()
        .and_then(|v| DimTwoClass::from_orbit_value(v, j, modulus)))
}

/// Orbit representatives of `C_i'` split by class for the shell `j`:
/// the words whose block `i` starts (at its first nonzero entry) with 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassSets {
    pub class1: BTreeSet<CodeVector>,
    pub class2: BTreeSet<CodeVector>,
    pub class3: BTreeSet<CodeVector>,
}

impl ClassSets {
    pub fn get(&self, class: DimTwoClass) -> &BTreeSet<CodeVector> {
        match class {
            DimTwoClass::Class1 => &self.class1,
            DimTwoClass::Class2 => &self.class2,
            DimTwoClass::Class3 => &self.class3,
        }
    }
}

fn check_hypotheses(pomset: &Pomset, structure: &BlockStructure) -> Result<()> {
    check_prime(structure.modulus())?;
    if structure.dims().iter().any(|&d| d != 2) {
        return Err(Error::Hypothesis("every block must have dimension 2".into()));
    }
    if !pomset.is_chain() {
        return Err(Error::NotAChain);
    }
    Ok(())
}

fn classify_stratum(top: &BTreeSet<CodeVector>, block: usize, j: u32, structure: &BlockStructure) -> Result<ClassSets> {
    let m = structure.modulus();
    let mut sets = ClassSets::default();
    for u in top {
        let b = u.block(structure, block);
        let class = match (b[0], b[1]) {
            (0, 1) => DimTwoClass::Class3,
            (1, t) => classify_block_dim2(t, j, m)?,
            _ => continue,
        };
        match class {
            DimTwoClass::Class1 => sets.class1.insert(u.clone()),
            DimTwoClass::Class2 => sets.class2.insert(u.clone()),
            DimTwoClass::Class3 => sets.class3.insert(u.clone()),
        };
    }
    Ok(sets)
}

/// Classification of the orbit representatives of `C_i'` for shell `j`,
/// in the code's own block numbering (the pomset must be the standard
/// chain `1 < ... < s`).
pub fn classification_sets(
    code: &LinearCode,
    pomset: &Pomset,
    structure: &BlockStructure,
    block: usize,
    j: u32,
) -> Result<ClassSets> {
    check_hypotheses(pomset, structure)?;
    check_j(j, structure.modulus())?;
    let (_, top) = code.chain_strata(block)?;
    classify_stratum(&top, block, j, structure)
}

/// Dual enumerator from class counts: the `(i, j)` coefficient is
/// `2 m^(2(s-i)) / |C| * (4j |C_i| + (2m-4j) n1 - 4j n2 + (m-4j) n3)`.
pub fn field_dim2_dual_enumerator(code: &LinearCode, pomset: &Pomset, structure: &BlockStructure) -> Result<WeightEnumerator> {
    check_hypotheses(pomset, structure)?;
    let (code, structure) = normalize_chain(code, pomset, structure)?;
    let m = structure.modulus();
    let h = m / 2;
    let s = structure.num_blocks();
    let mut coeffs = vec![BigRational::zero(); structure.max_weight() + 1];
    coeffs[0] = BigRational::one();
    for i in 1..=s {
        let (lower, top) = code.chain_strata(i)?;
        let factor = BigRational::new(
            num_traits::pow(BigInt::from(m), 2 * (s - i)) * 2,
            BigInt::from(code.size()),
        );
        for j in 1..=h {
            let sets = classify_stratum(&top, i, j, &structure)?;
            let mut bracket = 4 * j as i64 * lower.size() as i64;
            for class in [DimTwoClass::Class1, DimTwoClass::Class2, DimTwoClass::Class3] {
                bracket += class.orbit_value(j, m) * sets.get(class).len() as i64;
            }
            coeffs[(s - i) * h as usize + j as usize] = BigRational::from_integer(bracket.into()) * &factor;
        }
    }
    to_enumerator(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn worked_example_classes() {
        assert_eq!(classify_block_dim2(2, 1, 5), Ok(DimTwoClass::Class2));
        assert_eq!(classify_block_dim2(1, 1, 5), Ok(DimTwoClass::Class3));
        assert_eq!(classify_block_dim2(2, 2, 5), Ok(DimTwoClass::Class1));
        assert_eq!(classify_block_dim2(3, 2, 5), Ok(DimTwoClass::Class1));
        assert_eq!(classify_block_dim2(0, 2, 5), Ok(DimTwoClass::Class3));
    }

    #[test]
    fn shell_one_never_hits_class1() {
        for m in [3u32, 5, 7, 11, 13] {
            for t in 0..m {
                let c = classify_block_dim2(t, 1, m).unwrap();
                let expected = if t == 0 || t == 1 || t == m - 1 { DimTwoClass::Class3 } else { DimTwoClass::Class2 };
                assert_eq!(c, expected, "m={m} t={t}");
            }
        }
    }

    #[test]
    fn classification_errors() {
        assert!(matches!(classify_block_dim2(1, 1, 9), Err(Error::Hypothesis(_))));
        assert!(classify_block_dim2(1, 3, 5).is_err());
        assert!(classify_block_dim2(5, 1, 5).is_err());
    }

    #[test]
    fn orbit_sums_match_classes_small() {
        for m in [3u32, 5, 7] {
            for j in 1..=m / 2 {
                for t in 0..m {
                    let oracle = orbit_class(t, j, m).unwrap().expect("orbit sum takes a class value");
                    assert_eq!(classify_block_dim2(t, j, m).unwrap(), oracle, "m={m} j={j} t={t}");
                }
            }
        }
    }

    #[test]
    fn class_value_round_trip() {
        for c in [DimTwoClass::Class1, DimTwoClass::Class2, DimTwoClass::Class3] {
            assert_eq!(DimTwoClass::from_orbit_value(c.orbit_value(2, 7), 2, 7), Some(c));
        }
    }
}

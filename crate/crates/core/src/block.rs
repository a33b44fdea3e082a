//! Lee weights and the pomset block weight on `Z_m^{k_1} + ... + Z_m^{k_s}`.

use std::fmt;
use std::ops::Range;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::pomset::{check_modulus, Mset, Pomset};

/// Modulus plus the labeling `pi`: block `i` has `dims[i - 1]` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockStructure {
    modulus: u32,
    dims: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockStructure {
    pub fn new(modulus: u32, dims: Vec<usize>) -> Result<Self> {
        check_modulus(modulus)?;
        if dims.is_empty() {
            return Err(Error::InvalidBlocks("need at least one block".into()));
        }
        if let Some(i) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidBlocks(format!("block {} has dimension 0", i + 1)));
        }
        let mut offsets = Vec::with_capacity(dims.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &d in &dims {
            acc += d;
            offsets.push(acc);
        }
        Ok(BlockStructure {
            modulus,
            dims,
            offsets,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Block dimension `pi(i)`, 1-indexed.
    pub fn dim(&self, block: usize) -> usize {
        self.dims[block - 1]
    }

    /// Number of blocks `s`.
    pub fn num_blocks(&self) -> usize {
        self.dims.len()
    }

    /// Code length `n`.
    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate range of block `i`, 1-indexed.
    pub fn block_range(&self, block: usize) -> Range<usize> {
        self.offsets[block - 1]..self.offsets[block]
    }

    /// Number of coordinates in blocks strictly after `block`.
    pub fn len_after(&self, block: usize) -> usize {
        self.len() - self.offsets[block]
    }

    /// `s * floor(m/2)`, the degree of every weight enumerator.
    pub fn max_weight(&self) -> usize {
        self.num_blocks() * (self.modulus / 2) as usize
    }

    /// `m^n`, saturating.
    pub fn space_size(&self) -> u128 {
        (self.modulus as u128).saturating_pow(self.len() as u32)
    }

    pub fn check_budget(&self, budget: u64) -> Result<()> {
        let size = self.space_size();
        if size > budget as u128 {
            return Err(Error::BudgetExceeded { size, budget });
        }
        Ok(())
    }

    /// The vector with mixed-radix index `index`, last coordinate fastest.
    pub fn vector_at(&self, mut index: u64) -> CodeVector {
        let m = self.modulus as u64;
        let mut entries = vec![0u32; self.len()];
        for slot in entries.iter_mut().rev() {
            *slot = (index % m) as u32;
            index /= m;
        }
        CodeVector(entries)
    }

    pub fn index_of(&self, v: &CodeVector) -> u64 {
        v.0.iter().fold(0u64, |acc, &x| acc * self.modulus as u64 + x as u64)
    }

    /// Blocks `from..=to` (1-indexed) as a standalone structure.
    pub fn sub_structure(&self, from: usize, to: usize) -> Result<Self> {
        BlockStructure::new(self.modulus, self.dims[from - 1..to].to_vec())
    }

    /// Same blocks listed in `order` (1-indexed block numbers).
    pub fn permuted(&self, order: &[usize]) -> Self {
        BlockStructure::new(self.modulus, order.iter().map(|&b| self.dim(b)).collect()).expect("permutation of a valid structure")
    }

    pub fn check_vector(&self, v: &CodeVector) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: v.len(),
            });
        }
        if let Some(&bad) = v.0.iter().find(|&&x| x >= self.modulus) {
            return Err(Error::ResidueOutOfRange {
                value: bad,
                modulus: self.modulus,
            });
        }
        Ok(())
    }

    pub(crate) fn check_pomset(&self, pomset: &Pomset) -> Result<()> {
        if pomset.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: pomset.modulus(),
                right: self.modulus,
            });
        }
        if pomset.size() != self.num_blocks() {
            return Err(Error::StructureMismatch(format!(
                "pomset has {} points but there are {} blocks",
                pomset.size(),
                self.num_blocks()
            )));
        }
        Ok(())
    }

    /// Per-block Lee weight `max_t w_L(u_{i_t})`.
    pub(crate) fn block_weights(&self, v: &CodeVector) -> Vec<u32> {
        (1..=self.num_blocks())
            .map(|b| {
                v.0[self.block_range(b)]
                    .iter()
                    .map(|&x| lee(x, self.modulus))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }
}

/// A vector of residues in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeVector(pub Vec<u32>);

impl CodeVector {
    pub fn zero(len: usize) -> Self {
        CodeVector(vec![0; len])
    }

    /// Reduces arbitrary integers into `[0, m)`.
    pub fn reduced(entries: &[i64], modulus: u32) -> Self {
        CodeVector(entries.iter().map(|&x| x.rem_euclid(modulus as i64) as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &CodeVector, modulus: u32) -> CodeVector {
        CodeVector(self.0.iter().zip(&other.0).map(|(&a, &b)| (a + b) % modulus).collect())
    }

    pub fn sub(&self, other: &CodeVector, modulus: u32) -> CodeVector {
        CodeVector(self.0.iter().zip(&other.0).map(|(&a, &b)| (a + modulus - b) % modulus).collect())
    }

    pub fn neg(&self, modulus: u32) -> CodeVector {
        CodeVector(self.0.iter().map(|&a| (modulus - a) % modulus).collect())
    }

    pub fn scale(&self, k: u32, modulus: u32) -> CodeVector {
        let (k, m) = (k as u64, modulus as u64);
        CodeVector(self.0.iter().map(|&a| ((a as u64 * k) % m) as u32).collect())
    }

    /// Standard inner product mod `m`.
    pub fn dot(&self, other: &CodeVector, modulus: u32) -> u32 {
        let s: u64 = self.0.iter().zip(&other.0).map(|(&a, &b)| a as u64 * b as u64).sum();
        (s % modulus as u64) as u32
    }

    pub fn block<'a>(&'a self, structure: &BlockStructure, block: usize) -> &'a [u32] {
        &self.0[structure.block_range(block)]
    }

    /// Coordinates of the given blocks concatenated in order.
    pub fn permute_blocks(&self, structure: &BlockStructure, order: &[usize]) -> CodeVector {
        CodeVector(order.iter().flat_map(|&b| self.block(structure, b).iter().copied()).collect())
    }
}

impl fmt::Display for CodeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x < 10) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

fn lee(a: u32, m: u32) -> u32 {
    a.min(m - a)
}

/// `min(a, m - a)`.
pub fn lee_weight(a: u32, modulus: u32) -> Result<u32> {
    check_modulus(modulus)?;
    if a >= modulus {
        return Err(Error::ResidueOutOfRange { value: a, modulus });
    }
    Ok(lee(a, modulus))
}

/// The mset `{s_i/i : s_i = max Lee weight in block i, s_i != 0}`.
pub fn lee_block_support(u: &CodeVector, structure: &BlockStructure) -> Result<Mset> {
    structure.check_vector(u)?;
    Ok(Mset::from_counts(structure.block_weights(u)))
}

/// Cardinality of the ideal generated by the Lee block support.
pub fn pomset_block_weight(u: &CodeVector, pomset: &Pomset, structure: &BlockStructure) -> Result<u64> {
    structure.check_pomset(pomset)?;
    structure.check_vector(u)?;
    Ok(weight_unchecked(u, pomset, structure))
}

pub(crate) fn weight_unchecked(u: &CodeVector, pomset: &Pomset, structure: &BlockStructure) -> u64 {
    pomset.ideal_cardinality(&structure.block_weights(u))
}

pub fn pomset_block_distance(u: &CodeVector, v: &CodeVector, pomset: &Pomset, structure: &BlockStructure) -> Result<u64> {
    structure.check_vector(u)?;
    structure.check_vector(v)?;
    pomset_block_weight(&u.sub(v, structure.modulus()), pomset, structure)
}

/// Minimum weight over the nonzero codewords.
pub fn min_distance(code: &LinearCode, pomset: &Pomset, structure: &BlockStructure) -> Result<u64> {
    structure.check_pomset(pomset)?;
    if code.structure() != structure {
        return Err(Error::StructureMismatch("code uses a different block structure".into()));
    }
    code.words()
        .iter()
        .filter(|w| !w.is_zero())
        .map(|w| weight_unchecked(w, pomset, structure))
        .min()
        .ok_or(Error::DegenerateCode)
}

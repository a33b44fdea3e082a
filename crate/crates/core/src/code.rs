//! Linear codes over `Z_m` held as explicit codeword sets.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::block::{BlockStructure, CodeVector};
use crate::error::{Error, Result};

/// Largest `m^n` scanned exhaustively unless the caller says otherwise.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A submodule of `Z_m^n` together with its block structure.
#[derive(Debug, Clone)]
pub struct LinearCode {
    structure: BlockStructure,
    words: BTreeSet<CodeVector>,
    // rows whose span is the whole code
    generators: Vec<CodeVector>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.structure == other.structure && self.words == other.words
    }
}

impl Eq for LinearCode {}

/// Adds `<g>` to `words` in place.
fn extend_span(words: &mut BTreeSet<CodeVector>, g: &CodeVector, modulus: u32) {
    let multiples: Vec<CodeVector> = (1..modulus).map(|k| g.scale(k, modulus)).collect();
    let current: Vec<CodeVector> = words.iter().cloned().collect();
    for w in &current {
        for mg in &multiples {
            words.insert(w.add(mg, modulus));
        }
    }
}

impl LinearCode {
    /// Smallest submodule containing every row.
    pub fn span(rows: &[CodeVector], structure: &BlockStructure) -> Result<Self> {
        for r in rows {
            structure.check_vector(r)?;
        }
        let m = structure.modulus();
        let mut words = BTreeSet::new();
        words.insert(CodeVector::zero(structure.len()));
        let mut generators = Vec::new();
        for r in rows {
            if words.contains(r) {
                continue;
            }
            extend_span(&mut words, r, m);
            generators.push(r.clone());
        }
        Ok(LinearCode {
            structure: structure.clone(),
            words,
            generators,
        })
    }

    /// Accepts an explicit word list only if it is already a submodule.
    pub fn from_words(words: &[CodeVector], structure: &BlockStructure) -> Result<Self> {
        let code = Self::span(words, structure)?;
        let given: BTreeSet<&CodeVector> = words.iter().collect();
        if given.len() != code.words.len() {
            return Err(Error::StructureMismatch(format!(
                "word list of size {} is not closed under addition and scaling (its span has {} words)",
                given.len(),
                code.words.len()
            )));
        }
        Ok(code)
    }

    fn from_set(structure: BlockStructure, words: BTreeSet<CodeVector>) -> Self {
        let m = structure.modulus();
        let mut span = BTreeSet::new();
        span.insert(CodeVector::zero(structure.len()));
        let mut generators = Vec::new();
        for w in &words {
            if !span.contains(w) {
                extend_span(&mut span, w, m);
                generators.push(w.clone());
            }
        }
        debug_assert_eq!(span.len(), words.len());
        LinearCode {
            structure,
            words,
            generators,
        }
    }

    pub fn zero(structure: &BlockStructure) -> Self {
        Self::span(&[], structure).expect("empty span")
    }

    /// All of `Z_m^n`.
    pub fn full_space(structure: &BlockStructure) -> Self {
        let rows: Vec<CodeVector> = (0..structure.len())
            .map(|i| {
                let mut v = CodeVector::zero(structure.len());
                v.0[i] = 1;
                v
            })
            .collect();
        Self::span(&rows, structure).expect("unit vectors conform")
    }

    pub fn structure(&self) -> &BlockStructure {
        &self.structure
    }

    pub fn modulus(&self) -> u32 {
        self.structure.modulus()
    }

    pub fn words(&self) -> &BTreeSet<CodeVector> {
        &self.words
    }

    pub fn generators(&self) -> &[CodeVector] {
        &self.generators
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, v: &CodeVector) -> bool {
        self.words.contains(v)
    }

    /// Exhaustive check that the word set is closed under the module operations.
    pub fn is_submodule(&self) -> bool {
        let m = self.modulus();
        if !self.contains(&CodeVector::zero(self.structure.len())) {
            return false;
        }
        self.words.iter().all(|a| {
            (1..m).all(|k| self.contains(&a.scale(k, m)))
                && self.words.iter().all(|b| self.contains(&a.add(b, m)))
        })
    }

    /// Every `v` in `Z_m^n` with `c . v = 0` for all codewords `c`, by
    /// exhaustive scan.
    pub fn dual(&self, budget: u64) -> Result<LinearCode> {
        self.structure.check_budget(budget)?;
        let m = self.modulus();
        let total = self.structure.space_size() as u64;
        let words: BTreeSet<CodeVector> = (0..total)
            .into_par_iter()
            .map(|i| self.structure.vector_at(i))
            .filter(|v| self.generators.iter().all(|g| g.dot(v, m) == 0))
            .collect();
        Ok(Self::from_set(self.structure.clone(), words))
    }

    /// `(C_i, C_i')`: codewords vanishing on blocks `i..=s`, and codewords
    /// nonzero on block `i` but vanishing after it.
    pub fn chain_strata(&self, block: usize) -> Result<(LinearCode, BTreeSet<CodeVector>)> {
        let s = self.structure.num_blocks();
        if block == 0 || block > s {
            return Err(Error::IndexOutOfRange { index: block, max: s });
        }
        let tail_zero = |w: &CodeVector, from: usize| (from..=s).all(|b| w.block(&self.structure, b).iter().all(|&x| x == 0));
        let lower: BTreeSet<CodeVector> = self.words.iter().filter(|w| tail_zero(w, block)).cloned().collect();
        let top: BTreeSet<CodeVector> = self
            .words
            .iter()
            .filter(|w| tail_zero(w, block + 1) && !tail_zero(w, block))
            .cloned()
            .collect();
        Ok((Self::from_set(self.structure.clone(), lower), top))
    }

    /// `{(u, v) : u in self, v in other}` on the concatenated blocks.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        let mut dims = self.structure.dims().to_vec();
        dims.extend_from_slice(other.structure.dims());
        let structure = BlockStructure::new(self.modulus(), dims)?;
        let mut rows = Vec::new();
        let (n1, n2) = (self.structure.len(), other.structure.len());
        for g in &self.generators {
            let mut v = g.0.clone();
            v.resize(n1 + n2, 0);
            rows.push(CodeVector(v));
        }
        for g in &other.generators {
            let mut v = vec![0; n1];
            v.extend_from_slice(&g.0);
            rows.push(CodeVector(v));
        }
        Self::span(&rows, &structure)
    }

    /// Image under projection onto blocks `from..=to`.
    pub fn project(&self, from: usize, to: usize) -> Result<LinearCode> {
        let s = self.structure.num_blocks();
        if from == 0 || to > s || from > to {
            return Err(Error::IndexOutOfRange { index: to.max(from), max: s });
        }
        let sub = self.structure.sub_structure(from, to)?;
        let range = self.structure.block_range(from).start..self.structure.block_range(to).end;
        let words = self.words.iter().map(|w| CodeVector(w.0[range.clone()].to_vec())).collect();
        Ok(Self::from_set(sub, words))
    }

    /// Reorders blocks; `order` lists the old block numbers in their new
    /// positions.
    pub fn permute_blocks(&self, order: &[usize]) -> LinearCode {
        let structure = self.structure.permuted(order);
        let words = self.words.iter().map(|w| w.permute_blocks(&self.structure, order)).collect();
        Self::from_set(structure, words)
    }
}

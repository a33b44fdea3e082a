//! Multisets, mset order relations and pomsets.
//!
//! Points are 1-indexed. A pomset over `Z_m` always sits on the carrier
//! `{h/1, ..., h/s}` with `h = floor(m/2)`; the order relation is stored as an
//! explicit set of element pairs `p/a R q/b`, reflexive pairs included.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A multiset over the base points `1..=s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mset {
    counts: Vec<u32>,
}

impl Mset {
    pub fn empty(base_size: usize) -> Self {
        Mset {
            counts: vec![0; base_size],
        }
    }

    /// Builds an mset from per-point counts, `counts[a - 1] = C_M(a)`.
    pub fn from_counts(counts: Vec<u32>) -> Self {
        Mset { counts }
    }

    /// Builds an mset from `(count, point)` elements; repeated points keep the
    /// larger count.
    pub fn from_elements(base_size: usize, elements: &[(u32, usize)]) -> Result<Self> {
        let mut m = Mset::empty(base_size);
        for &(count, point) in elements {
            if point == 0 || point > base_size {
                return Err(Error::IndexOutOfRange {
                    index: point,
                    max: base_size,
                });
            }
            let slot = &mut m.counts[point - 1];
            *slot = (*slot).max(count);
        }
        Ok(m)
    }

    pub fn base_size(&self) -> usize {
        self.counts.len()
    }

    /// `C_M(point)`; zero for points outside the base set.
    pub fn count(&self, point: usize) -> u32 {
        if point == 0 {
            return 0;
        }
        self.counts.get(point - 1).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn cardinality(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn root_set(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn is_submset_of(&self, other: &Mset) -> bool {
        let n = self.counts.len().max(other.counts.len());
        (1..=n).all(|a| self.count(a) <= other.count(a))
    }

    /// Pointwise maximum of counts.
    pub fn union(&self, other: &Mset) -> Mset {
        let n = self.counts.len().max(other.counts.len());
        Mset {
            counts: (1..=n).map(|a| self.count(a).max(other.count(a))).collect(),
        }
    }

    /// Non-zero elements as `(count, point)`.
    pub fn elements(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (c, i + 1))
    }
}

impl fmt::Display for Mset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (c, a)) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}/{a}")?;
        }
        write!(f, "}}")
    }
}

/// An element `count/point` of an mset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub count: u32,
    pub point: usize,
}

impl Element {
    pub fn new(count: u32, point: usize) -> Self {
        Element { count, point }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.count, self.point)
    }
}

/// One relation pair `lower R upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationPair {
    pub lower: Element,
    pub upper: Element,
}

impl RelationPair {
    pub fn new(lower: Element, upper: Element) -> Self {
        RelationPair { lower, upper }
    }

    fn reversed(self) -> Self {
        RelationPair {
            lower: self.upper,
            upper: self.lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PomsetKind {
    Chain,
    Antichain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    Direct,
    Ordinal,
}

/// A partially ordered multiset on `{h/1, ..., h/s}`, `h = floor(m/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pomset {
    modulus: u32,
    size: usize,
    relation: BTreeSet<RelationPair>,
    // below[a - 1] = (b, q) for every b != a with some q/b R p/a, max q per b
    below: Vec<Vec<(usize, u32)>>,
}

pub(crate) fn check_modulus(m: u32) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(())
}

impl Pomset {
    /// Validates an explicit relation. Reflexive pairs `h/a R h/a` are added
    /// if missing; everything else must already be transitively closed.
    pub fn new(size: usize, modulus: u32, pairs: impl IntoIterator<Item = RelationPair>) -> Result<Self> {
        check_modulus(modulus)?;
        if size == 0 {
            return Err(Error::EmptyPomset);
        }
        let h = modulus / 2;
        let mut relation: BTreeSet<RelationPair> = pairs.into_iter().collect();
        for a in 1..=size {
            let e = Element::new(h, a);
            relation.insert(RelationPair::new(e, e));
        }
        let pomset = Self::from_parts(modulus, size, relation);
        pomset.validate()?;
        Ok(pomset)
    }

    fn from_parts(modulus: u32, size: usize, relation: BTreeSet<RelationPair>) -> Self {
        let mut below = vec![Vec::<(usize, u32)>::new(); size];
        for pair in &relation {
            if pair.lower.point == pair.upper.point {
                continue;
            }
            let list = &mut below[pair.upper.point - 1];
            match list.iter_mut().find(|(b, _)| *b == pair.lower.point) {
                Some((_, q)) => *q = (*q).max(pair.lower.count),
                None => list.push((pair.lower.point, pair.lower.count)),
            }
        }
        for list in &mut below {
            list.sort_unstable();
        }
        Pomset {
            modulus,
            size,
            relation,
            below,
        }
    }

    pub fn chain(size: usize, modulus: u32) -> Result<Self> {
        Self::make(size, modulus, PomsetKind::Chain)
    }

    pub fn antichain(size: usize, modulus: u32) -> Result<Self> {
        Self::make(size, modulus, PomsetKind::Antichain)
    }

    /// `h/i R h/j` iff `i <= j` for a chain; only reflexive pairs for an
    /// antichain.
    pub fn make(size: usize, modulus: u32, kind: PomsetKind) -> Result<Self> {
        check_modulus(modulus)?;
        if size == 0 {
            return Err(Error::EmptyPomset);
        }
        let h = modulus / 2;
        let mut relation = BTreeSet::new();
        for i in 1..=size {
            match kind {
                PomsetKind::Chain => {
                    for j in i..=size {
                        relation.insert(RelationPair::new(Element::new(h, i), Element::new(h, j)));
                    }
                }
                PomsetKind::Antichain => {
                    relation.insert(RelationPair::new(Element::new(h, i), Element::new(h, i)));
                }
            }
        }
        Ok(Self::from_parts(modulus, size, relation))
    }

    /// Direct or ordinal sum; the points of `other` are shifted past ours.
    pub fn combine(&self, other: &Pomset, mode: SumMode) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let shift = self.size;
        let h = self.max_count();
        let mut relation = self.relation.clone();
        relation.extend(other.relation.iter().map(|p| {
            RelationPair::new(
                Element::new(p.lower.count, p.lower.point + shift),
                Element::new(p.upper.count, p.upper.point + shift),
            )
        }));
        if mode == SumMode::Ordinal {
            for i in 1..=shift {
                for j in shift + 1..=shift + other.size {
                    relation.insert(RelationPair::new(Element::new(h, i), Element::new(h, j)));
                }
            }
        }
        Ok(Self::from_parts(self.modulus, shift + other.size, relation))
    }

    /// Same carrier, every relation pair reversed.
    pub fn dual(&self) -> Self {
        let relation = self.relation.iter().map(|p| p.reversed()).collect();
        Self::from_parts(self.modulus, self.size, relation)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of points `s`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Count carried by every carrier point, `floor(m/2)`.
    pub fn max_count(&self) -> u32 {
        self.modulus / 2
    }

    pub fn carrier(&self) -> Mset {
        Mset::from_counts(vec![self.max_count(); self.size])
    }

    pub fn relation(&self) -> &BTreeSet<RelationPair> {
        &self.relation
    }

    pub fn relates(&self, lower: Element, upper: Element) -> bool {
        self.relation.contains(&RelationPair::new(lower, upper))
    }

    /// Points strictly below `point`, with the count pulled in for each.
    pub fn strictly_below(&self, point: usize) -> &[(usize, u32)] {
        &self.below[point - 1]
    }

    /// `<S>`: the union over `k/a` in `S` of `{k/a}` together with every
    /// `q/b` (`b != a`) related below `a`.
    pub fn ideal_of(&self, generators: &Mset) -> Result<Mset> {
        if generators.base_size() > self.size || !generators.is_submset_of(&self.carrier()) {
            return Err(Error::NotSubmset(generators.to_string()));
        }
        Ok(self.ideal_unchecked(generators.counts()))
    }

    /// Ideal generated by per-point counts; callers guarantee the counts fit
    /// the carrier.
    pub(crate) fn ideal_unchecked(&self, generator_counts: &[u32]) -> Mset {
        let mut counts = vec![0u32; self.size];
        for (a, &k) in generator_counts.iter().enumerate() {
            if k == 0 {
                continue;
            }
            counts[a] = counts[a].max(k);
            for &(b, q) in &self.below[a] {
                counts[b - 1] = counts[b - 1].max(q);
            }
        }
        Mset::from_counts(counts)
    }

    /// Cardinality of the ideal generated by per-point counts.
    pub(crate) fn ideal_cardinality(&self, generator_counts: &[u32]) -> u64 {
        self.ideal_unchecked(generator_counts).cardinality()
    }

    /// If every pair of distinct points is related with full counts, returns
    /// the points ordered from bottom to top.
    pub fn chain_order(&self) -> Option<Vec<usize>> {
        let h = self.max_count();
        let mut order: Vec<usize> = (1..=self.size).collect();
        for a in 1..=self.size {
            for b in a + 1..=self.size {
                let ab = self.relates(Element::new(h, a), Element::new(h, b));
                let ba = self.relates(Element::new(h, b), Element::new(h, a));
                if ab == ba {
                    return None;
                }
            }
        }
        // the number of points below is a strict ranking in a chain
        order.sort_by_key(|&a| self.below[a - 1].len());
        Some(order)
    }

    pub fn is_chain(&self) -> bool {
        self.chain_order().is_some()
    }

    /// Checks the order axioms and carrier counts by scanning
    /// the stored pairs.
    pub fn validate(&self) -> Result<()> {
        let h = self.max_count();
        for pair in &self.relation {
            for e in [pair.lower, pair.upper] {
                if e.point == 0 || e.point > self.size {
                    return Err(Error::InvalidRelation(format!("point {} not in 1..={}", e.point, self.size)));
                }
                if e.count == 0 || e.count > h {
                    return Err(Error::InvalidRelation(format!("count of {e} outside 1..={h}")));
                }
            }
        }
        for a in 1..=self.size {
            let e = Element::new(h, a);
            if !self.relates(e, e) {
                return Err(Error::InvalidRelation(format!("not reflexive at {e}")));
            }
        }
        for pair in &self.relation {
            if pair.lower != pair.upper && self.relation.contains(&pair.reversed()) {
                return Err(Error::InvalidRelation(format!(
                    "not antisymmetric: {} and {} related both ways",
                    pair.lower, pair.upper
                )));
            }
        }
        for first in &self.relation {
            let start = RelationPair::new(first.upper, Element::new(0, 0));
            for second in self.relation.range(start..) {
                if second.lower != first.upper {
                    break;
                }
                if !self.relates(first.lower, second.upper) {
                    return Err(Error::InvalidRelation(format!(
                        "not transitive: {} R {} R {}",
                        first.lower, first.upper, second.upper
                    )));
                }
            }
        }
        Ok(())
    }
}

//! Empirical search for pomsets whose code enumerator does not determine the
//! dual enumerator.
//!
//! A structure that admits a MacWilliams-type identity must map equal
//! enumerators to equal dual enumerators. Finding two codes that break this
//! refutes admissibility; finding none proves nothing.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::block::{BlockStructure, CodeVector};
use crate::code::LinearCode;
use crate::enumerator::{weight_enumerator, WeightEnumerator};
use crate::error::Result;
use crate::pomset::Pomset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeWitness {
    pub first: LinearCode,
    pub second: LinearCode,
    pub enumerator: WeightEnumerator,
    pub first_dual: WeightEnumerator,
    pub second_dual: WeightEnumerator,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProbeReport {
    /// Distinct codes looked at.
    pub codes_examined: usize,
    /// Distinct code enumerators seen.
    pub enumerator_classes: usize,
    pub witness: Option<ProbeWitness>,
}

struct Collector<'a> {
    pomset: &'a Pomset,
    dual_pomset: Pomset,
    structure: &'a BlockStructure,
    budget: u64,
    seen: BTreeSet<BTreeSet<CodeVector>>,
    classes: BTreeMap<Vec<u64>, (LinearCode, WeightEnumerator)>,
    witness: Option<ProbeWitness>,
}

impl<'a> Collector<'a> {
    fn new(pomset: &'a Pomset, structure: &'a BlockStructure, budget: u64) -> Self {
        Collector {
            pomset,
            dual_pomset: pomset.dual(),
            structure,
            budget,
            seen: BTreeSet::new(),
            classes: BTreeMap::new(),
            witness: None,
        }
    }

    /// Returns true once a witness is known.
    fn offer(&mut self, code: LinearCode) -> Result<bool> {
        if !self.seen.insert(code.words().clone()) {
            return Ok(self.witness.is_some());
        }
        let enumerator = weight_enumerator(&code, self.pomset, self.structure)?;
        let dual = code.dual(self.budget)?;
        let dual_enumerator = weight_enumerator(&dual, &self.dual_pomset, self.structure)?;
        match self.classes.get(enumerator.coeffs()) {
            Some((other, other_dual)) => {
                if *other_dual != dual_enumerator && self.witness.is_none() {
                    self.witness = Some(ProbeWitness {
                        first: other.clone(),
                        second: code,
                        enumerator,
                        first_dual: other_dual.clone(),
                        second_dual: dual_enumerator,
                    });
                }
            }
            None => {
                self.classes.insert(enumerator.coeffs().to_vec(), (code, dual_enumerator));
            }
        }
        Ok(self.witness.is_some())
    }

    fn report(self) -> ProbeReport {
        ProbeReport {
            codes_examined: self.seen.len(),
            enumerator_classes: self.classes.len(),
            witness: self.witness,
        }
    }
}

/// Samples `trials` random codes (1 to `n` random generators each) and
/// stops at the first witness. Deterministic for a fixed seed.
pub fn macwilliams_probe(
    pomset: &Pomset,
    structure: &BlockStructure,
    trials: usize,
    seed: u64,
    budget: u64,
) -> Result<ProbeReport> {
    structure.check_pomset(pomset)?;
    if trials == 0 {
        return Ok(ProbeReport::default());
    }
    structure.check_budget(budget)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut collector = Collector::new(pomset, structure, budget);
    let m = structure.modulus();
    for _ in 0..trials {
        let rows = rng.random_range(1..=structure.len());
        let generators: Vec<CodeVector> = (0..rows)
            .map(|_| CodeVector((0..structure.len()).map(|_| rng.random_range(0..m)).collect()))
            .collect();
        if collector.offer(LinearCode::span(&generators, structure)?)? {
            break;
        }
    }
    Ok(collector.report())
}

/// Walks every submodule of `Z_m^n` (each reached by adjoining one vector
/// at a time to a smaller one) and stops at the first witness.
pub fn macwilliams_probe_exhaustive(pomset: &Pomset, structure: &BlockStructure, budget: u64) -> Result<ProbeReport> {
    structure.check_pomset(pomset)?;
    structure.check_budget(budget)?;
    let total = structure.space_size() as u64;
    let mut collector = Collector::new(pomset, structure, budget);
    let mut frontier = vec![LinearCode::zero(structure)];
    let mut queued: BTreeSet<BTreeSet<CodeVector>> = BTreeSet::new();
    queued.insert(frontier[0].words().clone());
    while let Some(code) = frontier.pop() {
        for i in 0..total {
            let v = structure.vector_at(i);
            if code.contains(&v) {
                continue;
            }
            let mut rows = code.generators().to_vec();
            rows.push(v);
            let bigger = LinearCode::span(&rows, structure)?;
            if queued.insert(bigger.words().clone()) {
                frontier.push(bigger);
            }
        }
        if collector.offer(code)? {
            break;
        }
    }
    Ok(collector.report())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;

    #[test]
    fn zero_trials_is_empty() {
        let b = BlockStructure::new(4, vec![1, 1]).unwrap();
        let p = Pomset::chain(2, 4).unwrap();
        assert_eq!(macwilliams_probe(&p, &b, 0, 7, DEFAULT_BUDGET).unwrap(), ProbeReport::default());
    }

    #[test]
    fn exhaustive_visits_every_submodule_of_z4_squared() {
        // Z_4^2 has 15 submodules
        let b = BlockStructure::new(4, vec![1, 1]).unwrap();
        let p = Pomset::chain(2, 4).unwrap();
        let report = macwilliams_probe_exhaustive(&p, &b, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.codes_examined, 15);
        assert!(report.witness.is_none());
    }

    #[test]
    fn seeded_probe_is_deterministic() {
        let b = BlockStructure::new(3, vec![1, 1, 1]).unwrap();
        let p = Pomset::antichain(3, 3).unwrap();
        let a = macwilliams_probe(&p, &b, 20, 11, DEFAULT_BUDGET).unwrap();
        let c = macwilliams_probe(&p, &b, 20, 11, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, c);
        assert!(a.codes_examined >= 1);
    }
}

//! Fixed benchmark instances.

use pomset_codes::{BlockStructure, CodeVector, LinearCode, Pomset};

pub struct Instance {
    pub name: &'static str,
    pub code: LinearCode,
    pub pomset: Pomset,
    pub structure: BlockStructure,
}

fn build(name: &'static str, m: u32, dims: &[usize], rows: &[&[u32]], pomset: Pomset) -> Instance {
    let structure = BlockStructure::new(m, dims.to_vec()).unwrap();
    let rows: Vec<CodeVector> = rows.iter().map(|r| CodeVector(r.to_vec())).collect();
    let code = LinearCode::span(&rows, &structure).unwrap();
    Instance {
        name,
        code,
        pomset,
        structure,
    }
}

/// Chain instances small enough for brute force but large enough to show
/// the gap between the closed forms and scanning `Z_m^n`.
pub fn chain_instances() -> Vec<Instance> {
    vec![
        build("z5_blocks_2_2_1", 5, &[2, 2, 1], &[&[1, 0, 2, 3, 4], &[0, 1, 1, 0, 2]], Pomset::chain(3, 5).unwrap()),
        build("z6_blocks_2_1_2", 6, &[2, 1, 2], &[&[1, 2, 3, 0, 5], &[0, 3, 0, 2, 2]], Pomset::chain(3, 6).unwrap()),
        build("z7_blocks_2_2", 7, &[2, 2], &[&[1, 0, 3, 5], &[0, 1, 6, 2]], Pomset::chain(2, 7).unwrap()),
    ]
}

/// A composition instance: an antichain of two points under a chain of two.
pub fn ordinal_instance() -> Instance {
    let lower = Pomset::antichain(2, 5).unwrap();
    let pomset = lower
        .combine(&Pomset::chain(2, 5).unwrap(), pomset_codes::SumMode::Ordinal)
        .unwrap();
    build("z5_antichain_under_chain", 5, &[1, 1, 1, 2], &[&[1, 2, 0, 0, 0], &[0, 0, 1, 3, 4]], pomset)
}

use serde::{Deserialize, Serialize};

use pomset_codes::{BlockStructure, CodeVector, Composition, Element, LinearCode, Pomset, RelationPair, SumMode};

/// A JSON experiment description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub m: u32,
    pub blocks: Vec<usize>,
    pub pomset: PomsetSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Options::is_empty")]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PomsetSpec {
    Chain {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<usize>,
    },
    Antichain {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<usize>,
    },
    /// Pairs `[p, a, q, b]` meaning `p/a R q/b`, points numbered from 1.
    Relation { points: usize, pairs: Vec<(u32, usize, u32, usize)> },
    Direct { parts: Vec<PomsetSpec> },
    Ordinal { parts: Vec<PomsetSpec> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl Options {
    pub fn is_empty(&self) -> bool {
        *self == Options::default()
    }
}

/// Everything a command needs, validated.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub structure: BlockStructure,
    pub pomset: Pomset,
    pub tree: Composition,
    pub code: LinearCode,
}

impl PomsetSpec {
    fn tree(&self, m: u32, default_points: Option<usize>) -> Result<Composition, String> {
        let need = |points: &Option<usize>| {
            points
                .or(default_points)
                .ok_or_else(|| "\"points\" is required for pomsets inside a composition".to_string())
        };
        let leaf = |p: pomset_codes::Result<Pomset>| p.map(Composition::Leaf).map_err(|e| e.to_string());
        match self {
            PomsetSpec::Chain { points } => leaf(Pomset::chain(need(points)?, m)),
            PomsetSpec::Antichain { points } => leaf(Pomset::antichain(need(points)?, m)),
            PomsetSpec::Relation { points, pairs } => leaf(Pomset::new(
                *points,
                m,
                pairs
                    .iter()
                    .map(|&(p, a, q, b)| RelationPair::new(Element::new(p, a), Element::new(q, b))),
            )),
            PomsetSpec::Direct { parts } | PomsetSpec::Ordinal { parts } => {
                if parts.len() < 2 {
                    return Err("a composition needs at least two parts".into());
                }
                let mode = if matches!(self, PomsetSpec::Direct { .. }) {
                    SumMode::Direct
                } else {
                    SumMode::Ordinal
                };
                let parts = parts.iter().map(|p| p.tree(m, None)).collect::<Result<_, _>>()?;
                Ok(Composition::Sum { mode, parts })
            }
        }
    }

    pub fn is_composition(&self) -> bool {
        matches!(self, PomsetSpec::Direct { .. } | PomsetSpec::Ordinal { .. })
    }

    pub fn describe(&self) -> String {
        let list = |parts: &[PomsetSpec], sep: &str| {
            let inner: Vec<String> = parts.iter().map(PomsetSpec::describe).collect();
            format!("({})", inner.join(sep))
        };
        let count = |p: &Option<usize>| match p {
            Some(1) => " on 1 point".to_string(),
            Some(n) => format!(" on {n} points"),
            None => String::new(),
        };
        match self {
            PomsetSpec::Chain { points } => format!("chain{}", count(points)),
            PomsetSpec::Antichain { points } => format!("antichain{}", count(points)),
            PomsetSpec::Relation { points, pairs } => format!("relation on {points} points with {} pairs", pairs.len()),
            PomsetSpec::Direct { parts } => list(parts, " (+) "),
            PomsetSpec::Ordinal { parts } => list(parts, " + "),
        }
    }
}

impl ExperimentSpec {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid spec: {e}"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialises")
    }

    pub fn build(&self) -> Result<Experiment, String> {
        let structure = BlockStructure::new(self.m, self.blocks.clone()).map_err(|e| e.to_string())?;
        let tree = self.pomset.tree(self.m, Some(self.blocks.len()))?;
        let pomset = tree.build().map_err(|e| e.to_string())?;
        if pomset.size() != self.blocks.len() {
            return Err(format!(
                "pomset has {} points but there are {} blocks",
                pomset.size(),
                self.blocks.len()
            ));
        }
        let rows = |vs: &[Vec<u32>]| -> Result<Vec<CodeVector>, String> {
            vs.iter()
                .map(|v| {
                    let v = CodeVector(v.clone());
                    structure.check_vector(&v).map_err(|e| e.to_string())?;
                    Ok(v)
                })
                .collect()
        };
        let code = match (&self.generators, &self.words) {
            (Some(g), None) => LinearCode::span(&rows(g)?, &structure),
            (None, Some(w)) => LinearCode::from_words(&rows(w)?, &structure),
            _ => return Err("exactly one of \"generators\" or \"words\" is required".into()),
        }
        .map_err(|e| e.to_string())?;
        Ok(Experiment {
            structure,
            pomset,
            tree,
            code,
        })
    }
}

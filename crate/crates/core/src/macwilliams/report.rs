use std::fmt;

use crate::block::BlockStructure;
use crate::code::LinearCode;
use crate::enumerator::{weight_enumerator, WeightEnumerator};
use crate::error::{Error, Result};
use crate::macwilliams::{
    chain::chain_dual_enumerator, field::field_dim2_dual_enumerator, fourier::fourier_dual_enumerator,
    sum::{composition_dual_enumerator, Composition},
};
use crate::pomset::Pomset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Theorem,
    Corollary,
    Sum,
    Fourier,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem => "theorem",
            Method::Corollary => "corollary",
            Method::Sum => "sum",
            Method::Fourier => "fourier",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(Method::Theorem),
            "corollary" => Ok(Method::Corollary),
            "sum" => Ok(Method::Sum),
            "fourier" => Ok(Method::Fourier),
            other => Err(Error::Hypothesis(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Mismatch { first_difference: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub method: Method,
    pub code_enumerator: WeightEnumerator,
    pub predicted: WeightEnumerator,
    pub actual: WeightEnumerator,
    pub dual_size: usize,
    pub verdict: Verdict,
}

/// Computes `C^perp` by scanning the ambient space and weighs it under the
/// dual pomset.
pub fn brute_force_dual_enumerator(
    code: &LinearCode,
    pomset: &Pomset,
    structure: &BlockStructure,
    budget: u64,
) -> Result<(LinearCode, WeightEnumerator)> {
    structure.check_pomset(pomset)?;
    let dual = code.dual(budget)?;
    let w = weight_enumerator(&dual, &pomset.dual(), structure)?;
    Ok((dual, w))
}

/// Best identity for the pomset: the chain theorem for chains, the
/// dimension-two field corollary when it applies, otherwise the transform.
pub fn auto_method(pomset: &Pomset, structure: &BlockStructure) -> Method {
    if pomset.is_chain() {
        if structure.dims().iter().all(|&d| d == 2) && crate::macwilliams::field::is_prime(structure.modulus()) {
            Method::Corollary
        } else {
            Method::Theorem
        }
    } else {
        Method::Fourier
    }
}

/// Predicts the dual enumerator with `method`. `Method::Sum` needs a
/// composition tree; the other methods ignore it.
pub fn predict_dual_enumerator(
    code: &LinearCode,
    pomset: &Pomset,
    structure: &BlockStructure,
    method: Method,
    tree: Option<&Composition>,
    budget: u64,
) -> Result<WeightEnumerator> {
    match method {
        Method::Theorem => chain_dual_enumerator(code, pomset, structure),
        Method::Corollary => field_dim2_dual_enumerator(code, pomset, structure),
        Method::Fourier => fourier_dual_enumerator(code, pomset, structure, budget),
        Method::Sum => {
            let tree = tree.ok_or_else(|| Error::Hypothesis("sum method needs a composition".into()))?;
            if tree.build()? != *pomset {
                return Err(Error::Hypothesis("composition does not build the given pomset".into()));
            }
            composition_dual_enumerator(code, tree, structure, budget)
        }
    }
}

/// Predicts with `method` and compares against brute force.
pub fn verify_identity(
    code: &LinearCode,
    pomset: &Pomset,
    structure: &BlockStructure,
    method: Method,
    tree: Option<&Composition>,
    budget: u64,
) -> Result<IdentityReport> {
    let code_enumerator = weight_enumerator(code, pomset, structure)?;
    let predicted = predict_dual_enumerator(code, pomset, structure, method, tree, budget)?;
    let (dual, actual) = brute_force_dual_enumerator(code, pomset, structure, budget)?;
    let verdict = match predicted.first_difference(&actual) {
        None => Verdict::Equal,
        Some(first_difference) => Verdict::Mismatch { first_difference },
    };
    Ok(IdentityReport {
        method,
        code_enumerator,
        predicted,
        actual,
        dual_size: dual.size(),
        verdict,
    })
}

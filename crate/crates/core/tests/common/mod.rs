//! Brute-force reference implementations that share no code with the
//! library beyond the plain data types used to talk to it.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use pomset_codes::{BlockStructure, CodeVector, LinearCode, Pomset, SumMode};
use rand::Rng;

/// A partial order on points `0..s`, stored as `below[a][b] = (b < a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order {
    pub below: Vec<Vec<bool>>,
}

impl Order {
    pub fn chain(s: usize) -> Self {
        Order {
            below: (0..s).map(|a| (0..s).map(|b| b < a).collect()).collect(),
        }
    }

    pub fn antichain(s: usize) -> Self {
        Order {
            below: vec![vec![false; s]; s],
        }
    }

    pub fn size(&self) -> usize {
        self.below.len()
    }

    pub fn sum(&self, other: &Order, ordinal: bool) -> Self {
        let (s1, s2) = (self.size(), other.size());
        let mut below = vec![vec![false; s1 + s2]; s1 + s2];
        for a in 0..s1 {
            for b in 0..s1 {
                below[a][b] = self.below[a][b];
            }
        }
        for a in 0..s2 {
            for b in 0..s2 {
                below[s1 + a][s1 + b] = other.below[a][b];
            }
            if ordinal {
                for b in 0..s1 {
                    below[s1 + a][b] = true;
                }
            }
        }
        Order { below }
    }

    pub fn transpose(&self) -> Self {
        let s = self.size();
        Order {
            below: (0..s).map(|a| (0..s).map(|b| self.below[b][a]).collect()).collect(),
        }
    }
}

fn lee(a: u32, m: u32) -> u32 {
    a.min(m - a)
}

/// Ideal cardinality of the Lee block support, every point carrying
/// `floor(m/2)`.
pub fn weight(v: &[u32], m: u32, dims: &[usize], order: &Order) -> usize {
    let h = (m / 2) as usize;
    let mut support = Vec::with_capacity(dims.len());
    let mut pos = 0;
    for &d in dims {
        support.push(v[pos..pos + d].iter().map(|&x| lee(x, m)).max().unwrap() as usize);
        pos += d;
    }
    let mut ideal = support.clone();
    for a in 0..dims.len() {
        if support[a] > 0 {
            for b in 0..dims.len() {
                if order.below[a][b] {
                    ideal[b] = h;
                }
            }
        }
    }
    ideal.iter().sum()
}

pub fn all_vectors(m: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Additive closure of the generators (every submodule of `Z_m^n` is an
/// additive subgroup).
pub fn span(generators: &[Vec<u32>], m: u32, n: usize) -> BTreeSet<Vec<u32>> {
    let mut words = BTreeSet::new();
    words.insert(vec![0; n]);
    let mut frontier = vec![vec![0; n]];
    while let Some(w) = frontier.pop() {
        for g in generators {
            let next: Vec<u32> = w.iter().zip(g).map(|(a, b)| (a + b) % m).collect();
            if words.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    words
}

pub fn dual(words: &BTreeSet<Vec<u32>>, m: u32, n: usize) -> BTreeSet<Vec<u32>> {
    all_vectors(m, n)
        .into_iter()
        .filter(|v| {
            words
                .iter()
                .all(|u| u.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % m == 0)
        })
        .collect()
}

pub fn enumerator(words: &BTreeSet<Vec<u32>>, m: u32, dims: &[usize], order: &Order) -> Vec<u64> {
    let mut a = vec![0u64; dims.len() * (m / 2) as usize + 1];
    for w in words {
        a[weight(w, m, dims, order)] += 1;
    }
    a
}

/// Enumerator of the dual code under the transposed order.
pub fn dual_enumerator(words: &BTreeSet<Vec<u32>>, m: u32, dims: &[usize], order: &Order) -> Vec<u64> {
    let n = dims.iter().sum();
    enumerator(&dual(words, m, n), m, dims, &order.transpose())
}

/// Library objects built from plain data.
pub fn structure(m: u32, dims: &[usize]) -> BlockStructure {
    BlockStructure::new(m, dims.to_vec()).unwrap()
}

pub fn code(words: &BTreeSet<Vec<u32>>, m: u32, dims: &[usize]) -> LinearCode {
    let rows: Vec<CodeVector> = words.iter().map(|w| CodeVector(w.clone())).collect();
    LinearCode::from_words(&rows, &structure(m, dims)).unwrap()
}

pub fn words_of(code: &LinearCode) -> BTreeSet<Vec<u32>> {
    code.words().iter().map(|w| w.0.clone()).collect()
}

/// A pomset recipe that can be realised both as a library [`Pomset`] and as
/// an [`Order`].
#[derive(Debug, Clone)]
pub enum Shape {
    Chain(usize),
    ReversedChain(usize),
    Antichain(usize),
    Sum(Box<Shape>, Box<Shape>, SumMode),
}

impl Shape {
    pub fn points(&self) -> usize {
        match self {
            Shape::Chain(s) | Shape::ReversedChain(s) | Shape::Antichain(s) => *s,
            Shape::Sum(a, b, _) => a.points() + b.points(),
        }
    }

    pub fn order(&self) -> Order {
        match self {
            Shape::Chain(s) => Order::chain(*s),
            Shape::ReversedChain(s) => Order::chain(*s).transpose(),
            Shape::Antichain(s) => Order::antichain(*s),
            Shape::Sum(a, b, mode) => a.order().sum(&b.order(), *mode == SumMode::Ordinal),
        }
    }

    pub fn pomset(&self, m: u32) -> Pomset {
        match self {
            Shape::Chain(s) => Pomset::chain(*s, m).unwrap(),
            Shape::ReversedChain(s) => Pomset::chain(*s, m).unwrap().dual(),
            Shape::Antichain(s) => Pomset::antichain(*s, m).unwrap(),
            Shape::Sum(a, b, mode) => a.pomset(m).combine(&b.pomset(m), *mode).unwrap(),
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, m: u32, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.random_range(0..m)).collect()
}

/// A random submodule with at most `max_size` words, spanned by one or two
/// random vectors.
pub fn random_code<R: Rng>(rng: &mut R, m: u32, n: usize, max_size: usize) -> BTreeSet<Vec<u32>> {
    loop {
        let rows = rng.random_range(1..=2usize.min(n.max(1)));
        let gens: Vec<Vec<u32>> = (0..rows).map(|_| random_vector(rng, m, n)).collect();
        let words = span(&gens, m, n);
        if words.len() <= max_size {
            return words;
        }
    }
}

pub fn random_dims<R: Rng>(rng: &mut R, s: usize, max_dim: usize) -> Vec<usize> {
    (0..s).map(|_| rng.random_range(1..=max_dim)).collect()
}

/// Direct sum of two word sets.
pub fn concat(a: &BTreeSet<Vec<u32>>, b: &BTreeSet<Vec<u32>>) -> BTreeSet<Vec<u32>> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x.iter().chain(y).copied().collect()))
        .collect()
}

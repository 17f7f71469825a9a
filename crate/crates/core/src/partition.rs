//! Partitions, bipartitions, and the partition data of symplectic unipotent
//! classes.
//!
//! A unipotent class of `Sp_{2n}` is labelled by the partition of `2n` given
//! by its Jordan block sizes; the partitions that occur are exactly those in
//! which every odd part appears an even number of times.  This module
//! enumerates those labels and computes the order of the component group of
//! the centraliser of a class representative, which is an elementary abelian
//! 2-group controlled by the even parts of the label.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the half-rank `n` accepted by the class enumeration sweep.
/// At `n = 30` the sweep already sifts through the 966 467 partitions of 60;
/// anything larger should be a deliberate choice (see the CLI's environment
/// override).
pub const DEFAULT_CLASS_ENUM_BOUND: u64 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, found {prev} before {next}")]
    NotSorted { prev: u64, next: u64 },
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("sum of parts does not fit in 64 bits")]
    SumOverflow,
    #[error("not a symplectic class label: the sum must be even and every odd part must have even multiplicity")]
    NotSymplectic,
    #[error("half-rank {requested} exceeds the enumeration bound {bound}")]
    BoundExceeded { requested: u64, bound: u64 },
}

/// A weakly decreasing sequence of positive integers.
///
/// Serialises as the bare list of parts, e.g. `[6,4,2]`; the empty partition
/// is `[]`.  Construction validates sortedness and positivity, so a value of
/// this type is always well formed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart);
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotSorted { prev: w[0], next: w[1] });
            }
        }
        let total: u128 = parts.iter().map(|&p| p as u128).sum();
        if u64::try_from(total).is_err() {
            return Err(PartitionError::SumOverflow);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.  Cannot overflow: checked at construction.
    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Runs of equal parts, largest part first: `(part, multiplicity)`.
    pub fn multiplicities(&self) -> Vec<(u64, usize)> {
        let mut runs = Vec::new();
        for &p in &self.parts {
            match runs.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        runs
    }

    /// The partition with every part doubled.
    pub fn double(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_mul(2).expect("doubled part does not fit in 64 bits"))
            .collect();
        Partition { parts }
    }

    /// True iff this partition labels a unipotent class of a symplectic
    /// group: the sum is even and every odd part has even multiplicity.
    pub fn is_symplectic_class(&self) -> bool {
        self.sum().is_multiple_of(2)
            && self
                .multiplicities()
                .iter()
                .all(|&(p, m)| p.is_multiple_of(2) || m.is_multiple_of(2))
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u64>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// An ordered pair of partitions.  Serialises as a two-element list,
/// e.g. `[[3,1],[2]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Vec<u64>, Vec<u64>)", into = "(Vec<u64>, Vec<u64>)")]
pub struct Bipartition {
    alpha: Partition,
    beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    /// Total size `|alpha| + |beta|`.
    pub fn size(&self) -> u64 {
        self.alpha
            .sum()
            .checked_add(self.beta.sum())
            .expect("bipartition size does not fit in 64 bits")
    }
}

impl TryFrom<(Vec<u64>, Vec<u64>)> for Bipartition {
    type Error = PartitionError;
    fn try_from((a, b): (Vec<u64>, Vec<u64>)) -> Result<Self, Self::Error> {
        Ok(Bipartition::new(Partition::new(a)?, Partition::new(b)?))
    }
}

impl From<Bipartition> for (Vec<u64>, Vec<u64>) {
    fn from(bp: Bipartition) -> Self {
        (bp.alpha.parts, bp.beta.parts)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.alpha, self.beta)
    }
}

/// The label of a unipotent class of `Sp_{2n}`: a partition of `2n` in which
/// every odd part has even multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymplecticClassLabel {
    partition: Partition,
    n: u64,
}

impl SymplecticClassLabel {
    pub fn new(partition: Partition) -> Result<Self, PartitionError> {
        if !partition.is_symplectic_class() {
            return Err(PartitionError::NotSymplectic);
        }
        let n = partition.sum() / 2;
        Ok(SymplecticClassLabel { partition, n })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Half the sum of the parts, i.e. the `n` of the ambient `Sp_{2n}`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(n_u, delta_u)`: the number of distinct even parts, and 1 if some
    /// even part has odd multiplicity (0 otherwise).
    pub fn n_delta(&self) -> (u64, u64) {
        let mut n_u = 0u64;
        let mut delta = 0u64;
        for (p, m) in self.partition.multiplicities() {
            if p % 2 == 0 {
                n_u += 1;
                if m % 2 == 1 {
                    delta = 1;
                }
            }
        }
        (n_u, delta)
    }

    /// Order of the component group of the centraliser of a class
    /// representative: `2^(n_u - delta_u)`.
    pub fn component_group_order(&self) -> u64 {
        let (n_u, delta) = self.n_delta();
        debug_assert!(n_u >= delta);
        1u64
            .checked_shl((n_u - delta) as u32)
            .expect("component group order does not fit in 64 bits")
    }
}

impl fmt::Display for SymplecticClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

/// All partitions of `n` in descending lexicographic order, starting from
/// `[n]` and ending at `[1, 1, ..., 1]`.  For `n = 0` yields the empty
/// partition once.
pub fn partitions_of(n: u64) -> impl Iterator<Item = Partition> {
    DescLexPartitions { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

struct DescLexPartitions {
    next: Option<Vec<u64>>,
}

impl Iterator for DescLexPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: decrement the last part exceeding 1, then refill the
        // freed weight greedily with parts no larger than the decremented one.
        let succ = current.iter().rposition(|&p| p > 1).map(|k| {
            let mut next: Vec<u64> = current[..=k].to_vec();
            next[k] -= 1;
            let cap = next[k];
            let mut rest = current[k..].iter().sum::<u64>() - cap;
            while rest > 0 {
                let part = cap.min(rest);
                next.push(part);
                rest -= part;
            }
            next
        });
        self.next = succ;
        Some(Partition { parts: current })
    }
}

/// All bipartitions of total size `n`, ordered by `|alpha|` ascending and
/// then descending-lexicographically in each component.
pub fn bipartitions_of(n: u64) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for alpha in partitions_of(k) {
            for beta in partitions_of(n - k) {
                out.push(Bipartition::new(alpha.clone(), beta));
            }
        }
    }
    out
}

/// The unipotent class labels of `Sp_{2n}` in descending lexicographic
/// order, using the default enumeration bound.
pub fn enumerate_symplectic_classes(n: u64) -> Result<Vec<SymplecticClassLabel>, PartitionError> {
    enumerate_symplectic_classes_bounded(n, DEFAULT_CLASS_ENUM_BOUND)
}

/// As [`enumerate_symplectic_classes`], with an explicit bound on `n`.
pub fn enumerate_symplectic_classes_bounded(
    n: u64,
    bound: u64,
) -> Result<Vec<SymplecticClassLabel>, PartitionError> {
    if n > bound {
        return Err(PartitionError::BoundExceeded { requested: n, bound });
    }
    let total = n.checked_mul(2).ok_or(PartitionError::SumOverflow)?;
    Ok(partitions_of(total)
        .filter(Partition::is_symplectic_class)
        .map(|p| SymplecticClassLabel::new(p).expect("filtered on the class condition"))
        .collect())
}

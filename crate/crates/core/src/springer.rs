//! The combinatorial Springer correspondence for the symplectic group.
//!
//! Characters of the Weyl group of `Sp_{2n}` are bipartitions of `n`, i.e.
//! `(r, s) = (0, 0)`, defect-1 symbol classes of rank `n`.  Adding the
//! rank-0 unit at parameters `(1, 1)` embeds them into the `(1, 1)`,
//! defect-1 symbols of the same rank, and that map is onto: subtracting the
//! staircase `(0, 2, ..., 2m; 1, 3, ..., 2m-1)` from any canonical
//! `(1, 1)`-symbol lands back on a bipartition.  When the merged entries of
//! the image symbol are pairwise distinct they determine a unipotent class
//! of `Sp_{2n}` — the wave front of the attached character — through an
//! explicit entrywise rule.

use thiserror::Error;

use crate::partition::{Bipartition, Partition, SymplecticClassLabel};
use crate::symbol::{unit_symbol, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpringerError {
    #[error("symbol parameters (r = {r}, s = {s}, defect {d}) do not fit this operation")]
    WrongParameters { r: u64, s: u64, d: i64 },
    #[error("merged rows repeat the entry {entry}; the wave-front rule needs pairwise distinct entries")]
    RepeatedEntries { entry: u64 },
    #[error("symbol is not in the image of the correspondence")]
    NotInImage,
}

/// A bipartition together with its image symbol.  Built by [`springer`];
/// the symbol is canonical, has `r = s = 1` and defect 1, and its rank is
/// the size of the bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerImage {
    source: Bipartition,
    symbol: Symbol,
}

impl SpringerImage {
    pub fn source(&self) -> &Bipartition {
        &self.source
    }

    pub fn symbol(&self) -> &Symbol {
        &self.symbol
    }

    pub fn rank(&self) -> u64 {
        self.symbol.rank()
    }

    /// The unipotent class supporting the character, when defined.
    pub fn wavefront(&self) -> Result<SymplecticClassLabel, SpringerError> {
        wavefront_partition(&self.symbol)
    }
}

/// The correspondence on symbols: add the `(1, 1)` unit to an `(r, s) =
/// (0, 0)`, defect-1 symbol.  Rank is preserved and the result is canonical.
pub fn springer_symbol(x: &Symbol) -> Result<Symbol, SpringerError> {
    if x.r() != 0 || x.s() != 0 || x.defect() != 1 {
        return Err(SpringerError::WrongParameters { r: x.r(), s: x.s(), d: x.defect() });
    }
    Ok(x
        .add(&unit_symbol(1, 1, 1))
        .expect("the unit has defect 1"))
}

/// The correspondence on a Weyl group character given as a bipartition.
pub fn springer(bp: &Bipartition) -> SpringerImage {
    let x = Symbol::from_bipartition(bp);
    let symbol = springer_symbol(&x).expect("bipartition symbols have r = s = 0 and defect 1");
    SpringerImage { source: bp.clone(), symbol }
}

/// Whether raw rows form a valid symbol in the image of the correspondence:
/// the gap conditions at `(r, s) = (1, 1)` with defect 1.  (Every such
/// symbol is an image; see [`springer_inverse`].)
pub fn is_springer_image(r: u64, s: u64, row_a: &[u64], row_b: &[u64]) -> bool {
    Symbol::new(r, s, row_a.to_vec(), row_b.to_vec())
        .map(|x| x.r() == 1 && x.s() == 1 && x.defect() == 1)
        .unwrap_or(false)
}

/// Whether raw rows form a valid `(1, 1)`-symbol of odd defect — the full
/// family attached to unipotent data, of which the correspondence image is
/// the defect-1 slice.
pub fn is_unipotent_symbol(r: u64, s: u64, row_a: &[u64], row_b: &[u64]) -> bool {
    Symbol::new(r, s, row_a.to_vec(), row_b.to_vec())
        .map(|x| x.r() == 1 && x.s() == 1 && x.defect().rem_euclid(2) == 1)
        .unwrap_or(false)
}

/// Inverts [`springer`]: subtract the staircase from the canonical
/// representative and strip the remaining zeros.  Total on valid `(1, 1)`,
/// defect-1 symbols, since their canonical rows dominate the staircase
/// entrywise.
pub fn springer_inverse(x: &Symbol) -> Result<Bipartition, SpringerError> {
    if x.r() != 1 || x.s() != 1 || x.defect() != 1 {
        return Err(SpringerError::WrongParameters { r: x.r(), s: x.s(), d: x.defect() });
    }
    let c = x.canonical();
    // Staircase entries 0, 2, ..., 2m on top and 1, 3, ..., 2m-1 below.
    let sub = |row: &[u64], start: u64| -> Result<Vec<u64>, SpringerError> {
        row.iter()
            .enumerate()
            .map(|(i, &entry)| {
                entry
                    .checked_sub(start + 2 * i as u64)
                    .ok_or(SpringerError::NotInImage)
            })
            .collect()
    };
    let row_a = sub(c.row_a(), 0)?;
    let row_b = sub(c.row_b(), 1)?;
    let preimage = Symbol::new(0, 0, row_a, row_b)
        .expect("staircase subtraction keeps rows weakly increasing");
    Ok(preimage
        .to_bipartition()
        .expect("subtraction preserves the defect"))
}

/// The unipotent class attached to an `(r, s) = (1, 1)`, defect-1 symbol
/// with pairwise distinct merged entries `c_0 < c_1 < ... < c_k`: the
/// nonzero values among `2c_i - 2i`, reversed into a partition.  All parts
/// are even and they sum to twice the rank, so the result labels a class of
/// `Sp_{2 rank}`; it does not depend on the representative chosen.
pub fn wavefront_partition(x: &Symbol) -> Result<SymplecticClassLabel, SpringerError> {
    if x.r() != 1 || x.s() != 1 || x.defect() != 1 {
        return Err(SpringerError::WrongParameters { r: x.r(), s: x.s(), d: x.defect() });
    }
    let mut merged: Vec<u64> = x.row_a().iter().chain(x.row_b()).copied().collect();
    merged.sort_unstable();
    for w in merged.windows(2) {
        if w[0] == w[1] {
            return Err(SpringerError::RepeatedEntries { entry: w[0] });
        }
    }
    let mut parts: Vec<u64> = merged
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            // c_i >= i because the entries are distinct and non-negative.
            (c - i as u64)
                .checked_mul(2)
                .expect("wave-front part does not fit in 64 bits")
        })
        .filter(|&p| p != 0)
        .collect();
    parts.reverse();
    let label = SymplecticClassLabel::new(
        Partition::new(parts).expect("the rule yields weakly increasing values"),
    )
    .expect("even parts summing to twice the rank");
    debug_assert_eq!(label.n(), x.rank());
    Ok(label)
}

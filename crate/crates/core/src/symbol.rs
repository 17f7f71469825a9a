//! Two-row symbols with shift equivalence, addition, and the bijection with
//! bipartitions.
//!
//! A symbol is a pair of rows of non-negative integers together with two
//! parameters `(r, s)`.  Within each row consecutive entries must grow by at
//! least `r + s`, and the bottom row must start at `s` or above.  The
//! *defect* is the length difference between the rows, the *rank* is the
//! entry sum minus a correction term depending only on `(r, s)`, the bottom
//! row length `m`, and the defect.  Symbols are considered up to the *shift*
//! operation, which prepends minimal entries to both rows and bumps the rest;
//! shifting changes neither rank nor defect.  Addition of two symbols with
//! equal defect aligns their lengths by shifting and then adds entrywise,
//! adding ranks and parameters.
//!
//! With `r = s = 0` and defect 1, symbols up to shift are exactly
//! bipartitions: read the rows bottom-up as the weakly increasing parts.
//! That case labels the irreducible characters of the hyperoctahedral group,
//! and the top-heavy ones (top row sum strictly larger) are those whose
//! restriction to the index-two subgroup of type D stays irreducible.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Bipartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("row {row} needs gaps of at least {min_gap}, found {prev} then {next}")]
    GapViolation { row: char, prev: u64, next: u64, min_gap: u64 },
    #[error("bottom row starts at {found}, below the parameter s = {min}")]
    BottomEntryTooSmall { found: u64, min: u64 },
    #[error("entry sum falls short of the correction term by {0}")]
    NegativeRank(i128),
    #[error("entry sum does not fit in 64 bits")]
    EntrySumOverflow,
    #[error("symbol is already in canonical form")]
    NotReducible,
    #[error("operands carry different (r, s) parameters")]
    ParameterMismatch,
    #[error("operands have defects {0} and {1}")]
    DefectMismatch(i64, i64),
    #[error("operation needs r = s = 0 and defect 1, got r = {r}, s = {s}, defect {d}")]
    WrongParameters { r: u64, s: u64, d: i64 },
}

/// A validated two-row symbol.  Immutable; all operations return new values.
///
/// Serialises as `{"r":1,"s":1,"rows":[[0,3],[2]]}` and displays as
/// `[0,3;2]`, with an empty row shown as `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymbolRepr", into = "SymbolRepr")]
pub struct Symbol {
    r: u64,
    s: u64,
    row_a: Vec<u64>,
    row_b: Vec<u64>,
    rank: u64,
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    r: u64,
    s: u64,
    rows: (Vec<u64>, Vec<u64>),
}

impl TryFrom<SymbolRepr> for Symbol {
    type Error = SymbolError;
    fn try_from(repr: SymbolRepr) -> Result<Self, Self::Error> {
        Symbol::new(repr.r, repr.s, repr.rows.0, repr.rows.1)
    }
}

impl From<Symbol> for SymbolRepr {
    fn from(sym: Symbol) -> Self {
        SymbolRepr { r: sym.r, s: sym.s, rows: (sym.row_a, sym.row_b) }
    }
}

/// The correction term subtracted from the entry sum: with `e = floor(d/2)`,
/// `r (m+e) (m+d-e-1) + s (m+e) (m+d-e)`.  Equals the entry sum of the
/// minimal symbol of shape `(m, d)`, so the rank of a valid symbol is never
/// negative in practice.
fn correction(r: u64, s: u64, m: usize, d: i64) -> i128 {
    let m = m as i128;
    let d = d as i128;
    let e = d.div_euclid(2);
    (r as i128) * (m + e) * (m + d - e - 1) + (s as i128) * (m + e) * (m + d - e)
}

impl Symbol {
    /// Validates the two gap conditions and the bottom-entry bound, then
    /// solves for the rank.
    pub fn new(r: u64, s: u64, row_a: Vec<u64>, row_b: Vec<u64>) -> Result<Self, SymbolError> {
        let gap = r as u128 + s as u128;
        for (name, row) in [('a', &row_a), ('b', &row_b)] {
            for w in row.windows(2) {
                if (w[1] as u128) < w[0] as u128 + gap {
                    return Err(SymbolError::GapViolation {
                        row: name,
                        prev: w[0],
                        next: w[1],
                        min_gap: gap.min(u64::MAX as u128) as u64,
                    });
                }
            }
        }
        if let Some(&b1) = row_b.first() {
            if b1 < s {
                return Err(SymbolError::BottomEntryTooSmall { found: b1, min: s });
            }
        }
        let total: i128 = row_a.iter().chain(&row_b).map(|&x| x as i128).sum();
        let d = row_a.len() as i64 - row_b.len() as i64;
        let rank = total - correction(r, s, row_b.len(), d);
        if rank < 0 {
            return Err(SymbolError::NegativeRank(-rank));
        }
        let rank = u64::try_from(rank).map_err(|_| SymbolError::EntrySumOverflow)?;
        Ok(Symbol { r, s, row_a, row_b, rank })
    }

    /// Builds from data already known to satisfy the constructor's checks.
    /// Debug builds re-validate.
    fn from_parts_unchecked(r: u64, s: u64, row_a: Vec<u64>, row_b: Vec<u64>, rank: u64) -> Self {
        let sym = Symbol { r, s, row_a, row_b, rank };
        debug_assert_eq!(
            Symbol::new(sym.r, sym.s, sym.row_a.clone(), sym.row_b.clone()).as_ref(),
            Ok(&sym)
        );
        sym
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn row_a(&self) -> &[u64] {
        &self.row_a
    }

    pub fn row_b(&self) -> &[u64] {
        &self.row_b
    }

    /// Bottom row length, the `m` of the shape.
    pub fn m(&self) -> usize {
        self.row_b.len()
    }

    /// Top row length minus bottom row length.
    pub fn defect(&self) -> i64 {
        self.row_a.len() as i64 - self.row_b.len() as i64
    }

    /// Entry sum minus the correction term; invariant under shift.
    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// Prepends `0` to the top row and `s` to the bottom row, bumping every
    /// old entry by `r + s`.  Rank and defect are unchanged, `m` grows by 1.
    pub fn shift(&self) -> Symbol {
        let gap = self.r as u128 + self.s as u128;
        let bump = |&x: &u64| {
            u64::try_from(x as u128 + gap).expect("shifted entry does not fit in 64 bits")
        };
        let mut row_a = Vec::with_capacity(self.row_a.len() + 1);
        row_a.push(0);
        row_a.extend(self.row_a.iter().map(bump));
        let mut row_b = Vec::with_capacity(self.row_b.len() + 1);
        row_b.push(self.s);
        row_b.extend(self.row_b.iter().map(bump));
        Symbol::from_parts_unchecked(self.r, self.s, row_a, row_b, self.rank)
    }

    /// Inverse of [`shift`](Self::shift) where defined: the leading entries
    /// must be exactly `0` and `s`.
    pub fn unshift(&self) -> Result<Symbol, SymbolError> {
        if self.row_a.first() != Some(&0) || self.row_b.first() != Some(&self.s) {
            return Err(SymbolError::NotReducible);
        }
        let gap = self.r as u128 + self.s as u128;
        // Remaining entries all dominate `gap` by the gap conditions.
        let drop = |&x: &u64| (x as u128 - gap) as u64;
        let row_a = self.row_a[1..].iter().map(drop).collect();
        let row_b = self.row_b[1..].iter().map(drop).collect();
        Ok(Symbol::from_parts_unchecked(self.r, self.s, row_a, row_b, self.rank))
    }

    /// True iff no unshift applies: `m = 0`, or the rows do not start with
    /// `0` and `s`.
    pub fn is_canonical(&self) -> bool {
        self.row_a.first() != Some(&0) || self.row_b.first() != Some(&self.s)
    }

    /// The minimal representative of the shift class: unshift until stuck.
    pub fn canonical(&self) -> Symbol {
        let mut cur = self.clone();
        while let Ok(smaller) = cur.unshift() {
            cur = smaller;
        }
        cur
    }

    /// Shift equivalence.  Defined only between symbols with the same
    /// `(r, s)`; symbols of different defect are never equivalent.
    pub fn is_equivalent_to(&self, other: &Symbol) -> Result<bool, SymbolError> {
        if (self.r, self.s) != (other.r, other.s) {
            return Err(SymbolError::ParameterMismatch);
        }
        Ok(self.canonical() == other.canonical())
    }

    /// Entrywise sum after aligning lengths by shifting the shorter operand;
    /// no canonical reduction.  Parameters and ranks add; the defect must
    /// match and is preserved.
    pub fn add_unreduced(&self, other: &Symbol) -> Result<Symbol, SymbolError> {
        if self.defect() != other.defect() {
            return Err(SymbolError::DefectMismatch(self.defect(), other.defect()));
        }
        let mut x = self.clone();
        let mut y = other.clone();
        while x.m() < y.m() {
            x = x.shift();
        }
        while y.m() < x.m() {
            y = y.shift();
        }
        let sum_entry = |(&u, &v): (&u64, &u64)| {
            u.checked_add(v).expect("summed entry does not fit in 64 bits")
        };
        let row_a: Vec<u64> = x.row_a.iter().zip(&y.row_a).map(sum_entry).collect();
        let row_b: Vec<u64> = x.row_b.iter().zip(&y.row_b).map(sum_entry).collect();
        let r = self.r.checked_add(other.r).expect("parameter r overflows");
        let s = self.s.checked_add(other.s).expect("parameter s overflows");
        let rank = self.rank.checked_add(other.rank).expect("rank overflows");
        Ok(Symbol::from_parts_unchecked(r, s, row_a, row_b, rank))
    }

    /// Symbol addition, returned in canonical form.
    pub fn add(&self, other: &Symbol) -> Result<Symbol, SymbolError> {
        Ok(self.add_unreduced(other)?.canonical())
    }

    /// The `(r, s) = (0, 0)`, defect-1 symbol of a bipartition: each
    /// component reversed into weakly increasing order and padded in front
    /// with zeros, the top row one entry longer than the bottom.  The result
    /// is canonical, of rank `|alpha| + |beta|`.
    pub fn from_bipartition(bp: &Bipartition) -> Symbol {
        let alpha = bp.alpha().parts();
        let beta = bp.beta().parts();
        let m = beta.len().max(alpha.len().saturating_sub(1));
        let mut row_a = vec![0u64; m + 1 - alpha.len()];
        row_a.extend(alpha.iter().rev());
        let mut row_b = vec![0u64; m - beta.len()];
        row_b.extend(beta.iter().rev());
        Symbol::from_parts_unchecked(0, 0, row_a, row_b, bp.size())
    }

    /// Inverse of [`from_bipartition`] on the shift class: strip zeros and
    /// reverse each row.  Requires `(r, s) = (0, 0)` and defect 1.
    pub fn to_bipartition(&self) -> Result<Bipartition, SymbolError> {
        self.require_hyperoctahedral()?;
        let strip = |row: &[u64]| {
            let parts: Vec<u64> = row.iter().rev().copied().filter(|&x| x != 0).collect();
            Partition::new(parts).expect("reversed symbol row is weakly decreasing")
        };
        Ok(Bipartition::new(strip(&self.row_a), strip(&self.row_b)))
    }

    /// True iff the character labelled by this symbol restricts irreducibly
    /// to the type-D reflection subgroup: on the canonical representative the
    /// top row sum strictly exceeds the bottom row sum.  Requires
    /// `(r, s) = (0, 0)` and defect 1.
    pub fn is_type_d_symbol(&self) -> Result<bool, SymbolError> {
        self.require_hyperoctahedral()?;
        let c = self.canonical();
        let top: u128 = c.row_a.iter().map(|&x| x as u128).sum();
        let bottom: u128 = c.row_b.iter().map(|&x| x as u128).sum();
        Ok(top > bottom)
    }

    fn require_hyperoctahedral(&self) -> Result<(), SymbolError> {
        if self.r != 0 || self.s != 0 || self.defect() != 1 {
            return Err(SymbolError::WrongParameters { r: self.r, s: self.s, d: self.defect() });
        }
        Ok(())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |f: &mut fmt::Formatter<'_>, entries: &[u64]| -> fmt::Result {
            if entries.is_empty() {
                return write!(f, "∅");
            }
            for (i, x) in entries.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        };
        write!(f, "[")?;
        row(f, &self.row_a)?;
        write!(f, ";")?;
        row(f, &self.row_b)?;
        write!(f, "]")
    }
}

/// The rank-0 unit of the given defect (0 or 1) for symbol addition at
/// parameters `(r, s)`: `[∅;∅]` or `[0;∅]`.
pub fn unit_symbol(r: u64, s: u64, defect: u8) -> Symbol {
    match defect {
        0 => Symbol::from_parts_unchecked(r, s, vec![], vec![], 0),
        1 => Symbol::from_parts_unchecked(r, s, vec![0], vec![], 0),
        _ => panic!("units exist only in defect 0 and 1"),
    }
}

/// A shift-equivalence class of symbols, keyed by the canonical
/// representative.  Equality and hashing go through that representative, so
/// two classes compare equal exactly when their members are equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolClass {
    canonical: Symbol,
}

impl SymbolClass {
    pub fn of(sym: &Symbol) -> SymbolClass {
        SymbolClass { canonical: sym.canonical() }
    }

    pub fn canonical(&self) -> &Symbol {
        &self.canonical
    }

    pub fn rank(&self) -> u64 {
        self.canonical.rank()
    }

    pub fn defect(&self) -> i64 {
        self.canonical.defect()
    }
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

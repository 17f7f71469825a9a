//! Machine verification of a multiplicity-one identity for cuspidal
//! characters of symplectic groups.
//!
//! A cuspidal unipotent datum of `Sp_{2n}` is controlled by two torsion
//! parameters `(e, f)` with `n = e(e+1) + f²`.  On one side sits the
//! denominator `2^(e+f-Δ(f))` of the generic degree of the attached special
//! character (with `Δ(0) = 0` and `Δ(f) = 1` otherwise); on the other, the
//! component group of the centraliser of the wave-front class of that
//! character.  The identity says they agree: the restriction of the
//! generalised Gelfand–Graev character involved is multiplicity free.
//!
//! The verification runs the whole chain exactly: build the two special
//! symbols, j-induce them by symbol addition, push through the Springer
//! correspondence, extract the wave-front class, and compare the component
//! group order with the denominator.  A closed form for the wave-front
//! partition is checked along the way.

use serde::Serialize;
use thiserror::Error;

use crate::partition::{Partition, SymplecticClassLabel};
use crate::springer::{springer_symbol, wavefront_partition, SpringerError};
use crate::symbol::{Symbol, SymbolError};

/// Default cap on `max_n` accepted by [`sweep`].
pub const DEFAULT_SWEEP_BOUND: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuspidalError {
    #[error(transparent)]
    Springer(#[from] SpringerError),
    #[error("sweep limit {requested} exceeds the bound {bound}")]
    BoundExceeded { requested: u64, bound: u64 },
}

/// The combinatorial data attached to the torsion parameters `(e, f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspidalDatum {
    e: u64,
    f: u64,
    /// `e(e+1)`, the rank of the first special symbol.
    a: u64,
    /// `f²`, the rank of the second.
    b: u64,
    /// `a + b`, the half-rank of the ambient group.
    n: u64,
    /// A cuspidal character exists for these parameters iff `e >= 1` or
    /// `f >= 2`.
    cuspidal_exists: bool,
    /// Denominator of the generic degree: `2^(e+f-Δ(f))`.
    n_chi: u64,
    special_b: Symbol,
    special_d: Symbol,
}

impl CuspidalDatum {
    pub fn new(e: u64, f: u64) -> CuspidalDatum {
        let a = e
            .checked_add(1)
            .and_then(|e1| e.checked_mul(e1))
            .expect("e(e+1) does not fit in 64 bits");
        let b = f.checked_mul(f).expect("f² does not fit in 64 bits");
        let n = a.checked_add(b).expect("rank does not fit in 64 bits");
        let (special_b, special_d) = special_character(e, f);
        CuspidalDatum {
            e,
            f,
            a,
            b,
            n,
            cuspidal_exists: e >= 1 || f >= 2,
            n_chi: generic_denominator(e, f),
            special_b,
            special_d,
        }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cuspidal_exists(&self) -> bool {
        self.cuspidal_exists
    }

    pub fn n_chi(&self) -> u64 {
        self.n_chi
    }

    pub fn special_b(&self) -> &Symbol {
        &self.special_b
    }

    pub fn special_d(&self) -> &Symbol {
        &self.special_d
    }
}

/// Recovers `(e, f, cuspidal_exists)` from the ranks `(a, b)` when `a` is
/// pronic and `b` is a perfect square; `None` otherwise.
pub fn cuspidal_parameters(a: u64, b: u64) -> Option<(u64, u64, bool)> {
    let e = pronic_root(a)?;
    let f = exact_sqrt(b)?;
    Some((e, f, e >= 1 || f >= 2))
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let x = sqrt_floor(n);
    (x * x == n).then_some(x)
}

/// `e(e+1) = n` forces `e = floor(sqrt(n))`, which the float seed plus the
/// correction loops computes exactly.
fn pronic_root(n: u64) -> Option<u64> {
    let e = sqrt_floor(n);
    (e.checked_mul(e.checked_add(1)?) == Some(n)).then_some(e)
}

fn sqrt_floor(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// The two special symbols for parameters `(e, f)`: the `(0, 0)`, defect-1
/// symbols `(0, 1, ..., e ; 1, ..., e)` of rank `e(e+1)` and
/// `(1, ..., f ; 1, ..., f-1)` of rank `f²` (the latter degenerating to
/// `[0;∅]` and `[1;∅]` for `f = 0, 1`).  Both are canonical.
pub fn special_character(e: u64, f: u64) -> (Symbol, Symbol) {
    let first = Symbol::new(0, 0, (0..=e).collect(), (1..=e).collect())
        .expect("consecutive runs satisfy the zero-gap condition");
    let second = if f == 0 {
        Symbol::new(0, 0, vec![0], vec![]).unwrap()
    } else {
        Symbol::new(0, 0, (1..=f).collect(), (1..f).collect())
            .expect("consecutive runs satisfy the zero-gap condition")
    };
    debug_assert_eq!(first.rank(), e * (e + 1));
    debug_assert_eq!(second.rank(), f * f);
    (first, second)
}

/// `2^(e+f-Δ(f))` with `Δ(0) = 0`, `Δ(f) = 1` for `f >= 1`: the 2-part of
/// the denominator of the generic degree of the special character.
pub fn generic_denominator(e: u64, f: u64) -> u64 {
    let delta = u64::from(f >= 1);
    let exp = e.checked_add(f).expect("exponent does not fit in 64 bits") - delta;
    1u64
        .checked_shl(u32::try_from(exp).unwrap_or(u32::MAX))
        .expect("denominator does not fit in 64 bits")
}

/// Truncated induction of the product of two hyperoctahedral characters,
/// realised as symbol addition.  Both operands must have `(r, s) = (0, 0)`
/// and defect 1.
pub fn j_induce(x: &Symbol, y: &Symbol) -> Result<Symbol, SymbolError> {
    for z in [x, y] {
        if z.r() != 0 || z.s() != 0 || z.defect() != 1 {
            return Err(SymbolError::WrongParameters { r: z.r(), s: z.s(), d: z.defect() });
        }
    }
    x.add(y)
}

/// Closed form for half the wave-front partition of the pipeline at
/// `(e, f)`: with `k = |e - f|`, the parts `1, 1, 2, 2, ..., k-1, k-1,
/// k, k+1, ..., k+2e` when `e < f`, and `1, 1, ..., k, k, k+1, ..., k+2f`
/// when `f <= e`.
pub fn closed_form_mu(e: u64, f: u64) -> Partition {
    let mut parts: Vec<u64> = Vec::new();
    if e < f {
        let k = f - e;
        for i in 1..k {
            parts.push(i);
            parts.push(i);
        }
        parts.extend(k..=k + 2 * e);
    } else {
        let k = e - f;
        for i in 1..=k {
            parts.push(i);
            parts.push(i);
        }
        parts.extend(k + 1..=k + 2 * f);
    }
    parts.reverse();
    Partition::new(parts).expect("parts are positive and weakly decreasing")
}

/// Everything the multiplicity-one check at `(e, f)` produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub datum: CuspidalDatum,
    /// Addition of the two special symbols.
    pub j_symbol: Symbol,
    /// Image of `j_symbol` under the Springer correspondence.
    pub springer_symbol: Symbol,
    /// Wave-front class of the pipeline, a partition of `2n`.
    pub lambda: SymplecticClassLabel,
    /// Half of `lambda`, compared against [`closed_form_mu`].
    pub mu: Partition,
    /// Component group order of the centraliser of `lambda`.
    pub a_order: u64,
    /// `a_order == n_chi`.
    pub identity_holds: bool,
    pub mu_matches_closed_form: bool,
}

/// Runs the exact pipeline at `(e, f)` and compares both sides of the
/// identity.  Fails only if the wave-front rule hits repeated entries,
/// which does not happen for any valid parameters.
pub fn verify_multiplicity_one(e: u64, f: u64) -> Result<VerificationReport, CuspidalError> {
    let datum = CuspidalDatum::new(e, f);
    let j_symbol = j_induce(&datum.special_b, &datum.special_d)
        .expect("special symbols are (0, 0) of defect 1");
    let image = springer_symbol(&j_symbol).expect("j-induction preserves the parameters");
    let lambda = wavefront_partition(&image)?;
    let mu = Partition::new(
        lambda
            .partition()
            .parts()
            .iter()
            .map(|&p| p / 2) // wave-front parts are even
            .collect(),
    )
    .expect("halving preserves order and positivity");
    debug_assert_eq!(&mu.double(), lambda.partition());
    let a_order = lambda.component_group_order();
    let identity_holds = a_order == datum.n_chi;
    let mu_matches_closed_form = mu == closed_form_mu(e, f);
    Ok(VerificationReport {
        datum,
        j_symbol,
        springer_symbol: image,
        lambda,
        mu,
        a_order,
        identity_holds,
        mu_matches_closed_form,
    })
}

/// All parameter pairs `(e, f)` with `e(e+1) + f² <= max_n`, ordered by the
/// rank `n` and then by `e`.
pub fn parameter_pairs(max_n: u64) -> Vec<(u64, u64)> {
    let mut pairs: Vec<(u64, u64, u64)> = Vec::new();
    let mut e = 0u64;
    loop {
        let a = match e.checked_mul(e + 1) {
            Some(a) if a <= max_n => a,
            _ => break,
        };
        let mut f = 0u64;
        loop {
            let n = match f.checked_mul(f).and_then(|b| a.checked_add(b)) {
                Some(n) if n <= max_n => n,
                _ => break,
            };
            pairs.push((n, e, f));
            f += 1;
        }
        e += 1;
    }
    pairs.sort();
    pairs.into_iter().map(|(_, e, f)| (e, f)).collect()
}

/// Verifies the identity for every parameter pair up to `max_n`, with the
/// default bound on `max_n`.
pub fn sweep(max_n: u64) -> Result<Vec<VerificationReport>, CuspidalError> {
    sweep_bounded(max_n, DEFAULT_SWEEP_BOUND)
}

/// As [`sweep`], with an explicit bound.
pub fn sweep_bounded(max_n: u64, bound: u64) -> Result<Vec<VerificationReport>, CuspidalError> {
    if max_n > bound {
        return Err(CuspidalError::BoundExceeded { requested: max_n, bound });
    }
    parameter_pairs(max_n)
        .into_iter()
        .map(|(e, f)| verify_multiplicity_one(e, f))
        .collect()
}

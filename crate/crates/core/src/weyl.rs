//! Signed permutations and the labelling of quasi-isolated rational series.
//!
//! The Weyl group of `Sp_{2n}` acts on the diagonal torus as the group of
//! signed permutations of `n` letters, of order `2^n n!`.  An order-2
//! semisimple element is, up to conjugacy, a sign vector with `a` entries
//! `+1` and `b = n - a` entries `-1`.  Its stabilizer `W(s)` inside the
//! Weyl group, the reflection subgroup `W°(s)` generated by the roots
//! trivial on `s`, and the quotient `W(s)/W°(s)` are all computed here by
//! direct enumeration — deliberately brute force, so they can serve as an
//! oracle for the closed-form counts they are compared against.  Orbits of
//! the (here untwisted) Frobenius action on that quotient then label the
//! rational series attached to `s`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

/// Everything is enumerated explicitly, so the rank is kept small; `n = 7`
/// already means 645 120 group elements.
pub const MAX_WEYL_RANK: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("rank {requested} exceeds the enumeration bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("cuspidal support needs rank {needed}, only {available} available")]
    RankExceeded { needed: u64, available: u64 },
}

/// An element of the hyperoctahedral group on letters `1..=n`: a permutation
/// composed with sign flips, stored as the images of `1..=n` and extended by
/// `w(-i) = -w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i64).collect() }
    }

    /// Validates that the absolute images form a permutation of `1..=n`.
    pub fn from_images(images: Vec<i64>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return None;
            }
            seen[a - 1] = true;
        }
        Some(SignedPermutation { images })
    }

    fn from_images_unchecked(images: Vec<i64>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_some());
        SignedPermutation { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    pub fn apply(&self, i: i64) -> i64 {
        let image = self.images[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -image
        } else {
            image
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.rank(), other.rank());
        let images = (1..=self.images.len() as i64)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        SignedPermutation::from_images_unchecked(images)
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0i64; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let target = (i + 1) as i64;
            images[(v.unsigned_abs() - 1) as usize] = if v < 0 { -target } else { target };
        }
        SignedPermutation::from_images_unchecked(images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == (i + 1) as i64)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A root `±e_i` or `±e_i ± e_j`, stored by its coefficients on the
/// standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    coeffs: Vec<i8>,
}

impl Root {
    fn axis(n: usize, i: usize, sign: i8) -> Root {
        let mut coeffs = vec![0; n];
        coeffs[i] = sign;
        Root { coeffs }
    }

    fn pair(n: usize, i: usize, j: usize, si: i8, sj: i8) -> Root {
        let mut coeffs = vec![0; n];
        coeffs[i] = si;
        coeffs[j] = sj;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs
    }

    /// The root evaluated at a `±1` sign vector.  Coefficient signs drop
    /// out because the coordinates square to one: the value is the product
    /// of the coordinates in the support.
    pub fn value_on_signs(&self, signs: &[i8]) -> i8 {
        self.coeffs
            .iter()
            .zip(signs)
            .filter(|(&c, _)| c != 0)
            .map(|(_, &s)| s)
            .product()
    }

    /// The reflection in this root, as a signed permutation: a sign flip
    /// for `±e_i`, a plain transposition for `±(e_i - e_j)`, a sign-flipping
    /// one for `±(e_i + e_j)`.
    pub fn reflection(&self) -> SignedPermutation {
        let support: Vec<usize> = (0..self.coeffs.len()).filter(|&k| self.coeffs[k] != 0).collect();
        let mut images: Vec<i64> = (1..=self.coeffs.len() as i64).collect();
        match support[..] {
            [i] => images[i] = -((i + 1) as i64),
            [i, j] => {
                if self.coeffs[i] == self.coeffs[j] {
                    images[i] = -((j + 1) as i64);
                    images[j] = -((i + 1) as i64);
                } else {
                    images.swap(i, j);
                }
            }
            _ => unreachable!("roots have one or two coordinates"),
        }
        SignedPermutation::from_images_unchecked(images)
    }
}

/// The full hyperoctahedral group with its root system, enumerated.
pub struct WeylGroup {
    rank: usize,
    elements: Vec<SignedPermutation>,
    roots: Vec<Root>,
}

pub fn weyl_group(n: usize) -> Result<WeylGroup, WeylError> {
    if n > MAX_WEYL_RANK {
        return Err(WeylError::BoundExceeded { requested: n, bound: MAX_WEYL_RANK });
    }
    let mut elements = Vec::new();
    for perm in (1..=n as i64).permutations(n) {
        for mask in 0u32..(1u32 << n) {
            let images = perm
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask & (1 << k) != 0 { -v } else { v })
                .collect();
            elements.push(SignedPermutation::from_images_unchecked(images));
        }
    }
    let mut roots = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        roots.push(Root::axis(n, i, 1));
        roots.push(Root::axis(n, i, -1));
    }
    for i in 0..n {
        for j in i + 1..n {
            roots.push(Root::pair(n, i, j, 1, -1));
            roots.push(Root::pair(n, i, j, -1, 1));
            roots.push(Root::pair(n, i, j, 1, 1));
            roots.push(Root::pair(n, i, j, -1, -1));
        }
    }
    debug_assert_eq!(roots.len(), 2 * n * n);
    Ok(WeylGroup { rank: n, elements, roots })
}

impl WeylGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }
}

/// A conjugacy representative of an order-dividing-2 element of the
/// diagonal torus: `a` coordinates `+1` followed by `b` coordinates `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionDatum {
    a: usize,
    b: usize,
    signs: Vec<i8>,
}

impl InvolutionDatum {
    pub fn new(a: usize, b: usize) -> InvolutionDatum {
        let mut signs = vec![1i8; a];
        signs.extend(std::iter::repeat_n(-1i8, b));
        InvolutionDatum { a, b, signs }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// The `n + 1` splits `(a, b)` of `n`, ordered by `b` ascending.
pub fn enumerate_quasi_isolated(n: usize) -> Vec<InvolutionDatum> {
    (0..=n).map(|b| InvolutionDatum::new(n - b, b)).collect()
}

/// The stabilizer `W(s)` of the sign vector and the subgroup `W°(s)`
/// generated by reflections in roots trivial on `s`.  Both lists are
/// sorted, so the first member of any coset scan is its minimum.
pub struct CentralizerWeyl {
    pub stabilizer: Vec<SignedPermutation>,
    pub connected: Vec<SignedPermutation>,
}

pub fn centralizer_weyl(group: &WeylGroup, datum: &InvolutionDatum) -> CentralizerWeyl {
    assert_eq!(group.rank(), datum.n(), "involution rank must match the group");
    let signs = datum.signs();
    let mut stabilizer: Vec<SignedPermutation> = group
        .elements()
        .iter()
        .filter(|w| {
            w.images()
                .iter()
                .zip(signs)
                .all(|(&v, &s)| signs[(v.unsigned_abs() - 1) as usize] == s)
        })
        .cloned()
        .collect();
    stabilizer.sort();

    let generators: Vec<SignedPermutation> = group
        .roots()
        .iter()
        .filter(|root| root.value_on_signs(signs) == 1)
        .map(Root::reflection)
        .collect();
    let connected = generated_subgroup(group.rank(), &generators);
    CentralizerWeyl { stabilizer, connected }
}

/// Closure of a generating set, breadth-first; returns the sorted element
/// list.
fn generated_subgroup(n: usize, generators: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let identity = SignedPermutation::identity(n);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(identity.images().to_vec());
    let mut frontier = vec![identity];
    while let Some(w) = frontier.pop() {
        for g in generators {
            let next = w.compose(g);
            if seen.insert(next.images().to_vec()) {
                frontier.push(next);
            }
        }
    }
    let mut elements: Vec<SignedPermutation> = seen
        .into_iter()
        .map(SignedPermutation::from_images_unchecked)
        .collect();
    elements.sort();
    elements
}

/// A finite group presented by its multiplication table; element `i` is a
/// label plus a row of products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl FiniteGroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }
}

/// The quotient `W(s)/W°(s)` as a multiplication table.  Cosets are keyed
/// by their minimal member, which also provides the label.  Panics if the
/// reflection subgroup is not normal — it always is here, but the table
/// would silently lie otherwise, so this is checked for real.
pub fn component_group(cent: &CentralizerWeyl) -> FiniteGroupTable {
    let mut coset_of: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut reps: Vec<SignedPermutation> = Vec::new();
    for w in &cent.stabilizer {
        if coset_of.contains_key(w.images()) {
            continue;
        }
        let id = reps.len();
        for c in &cent.connected {
            coset_of.insert(w.compose(c).images().to_vec(), id);
        }
        reps.push(w.clone());
    }
    assert_eq!(
        reps.len() * cent.connected.len(),
        cent.stabilizer.len(),
        "cosets must partition the stabilizer evenly"
    );
    let connected_set: HashSet<&[i64]> =
        cent.connected.iter().map(|w| w.images()).collect();
    for rep in &reps {
        let rep_inv = rep.inverse();
        for c in &cent.connected {
            let conj = rep.compose(c).compose(&rep_inv);
            assert!(
                connected_set.contains(conj.images()),
                "reflection subgroup is not normal in the stabilizer"
            );
        }
    }

    let coset = |w: &SignedPermutation| coset_of[w.images()];
    let mult = reps
        .iter()
        .map(|u| reps.iter().map(|v| coset(&u.compose(v))).collect())
        .collect();
    let inverse = reps.iter().map(|u| coset(&u.inverse())).collect();
    let identity = coset(&SignedPermutation::identity(
        reps.first().map_or(0, SignedPermutation::rank),
    ));
    let labels = reps.iter().map(SignedPermutation::to_string).collect();
    FiniteGroupTable { mult, inverse, identity, labels }
}

/// The identity map, always an automorphism; the Frobenius twist for split
/// groups.
pub fn identity_automorphism(table: &FiniteGroupTable) -> Vec<usize> {
    (0..table.order()).collect()
}

/// Orbit representatives (each orbit's minimal index, ascending) of the
/// twisted conjugation `z ↦ a⁻¹ · z · φ(a)` on the group, where the
/// automorphism `φ` is given elementwise.  For the identity twist on an
/// abelian group every orbit is a singleton.
pub fn h1_orbits(table: &FiniteGroupTable, phi: &[usize]) -> Vec<usize> {
    assert_eq!(phi.len(), table.order(), "twist must cover the group");
    let k = table.order();
    for i in 0..k {
        for j in 0..k {
            assert_eq!(
                phi[table.mul(i, j)],
                table.mul(phi[i], phi[j]),
                "twist must be an automorphism"
            );
        }
    }
    let mut reps = BTreeSet::new();
    for z in 0..k {
        let rep = (0..k)
            .map(|a| table.mul(table.inv(a), table.mul(z, phi[a])))
            .min()
            .expect("groups are nonempty");
        reps.insert(rep);
    }
    reps.into_iter().collect()
}

/// One rational series: a split `(a, b)`, the order of the component group
/// of the centralizer, and which of its Frobenius orbits is meant.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesLabel {
    pub involution: InvolutionDatum,
    pub component_order: usize,
    pub h1_index: usize,
    pub h1_label: String,
}

/// All series labels at rank `n`: for each split, one label per orbit of
/// the (untwisted) Frobenius on the component group.
pub fn series_labels(n: usize) -> Result<Vec<SeriesLabel>, WeylError> {
    let group = weyl_group(n)?;
    let mut out = Vec::new();
    for datum in enumerate_quasi_isolated(n) {
        let cent = centralizer_weyl(&group, &datum);
        let table = component_group(&cent);
        let phi = identity_automorphism(&table);
        for index in h1_orbits(&table, &phi) {
            out.push(SeriesLabel {
                involution: datum.clone(),
                component_order: table.order(),
                h1_index: index,
                h1_label: table.label(index).to_string(),
            });
        }
    }
    Ok(out)
}

/// The Levi subgroup carrying the cuspidal support at parameter `e`:
/// `GL_1^(n-k) × Sp_{2k}` with `k = e(e+1)`, whose relative Weyl group has
/// type `B_{n-k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarishChandraDatum {
    pub n: u64,
    pub e: u64,
    /// `k = e(e+1)`: the symplectic factor is `Sp_{2k}`.
    pub cuspidal_rank: u64,
    /// `n - k` torus factors.
    pub torus_factors: u64,
    /// Rank of the relative Weyl group, again `n - k`.
    pub relative_weyl_rank: u64,
}

impl HarishChandraDatum {
    pub fn levi_shape(&self) -> String {
        match (self.torus_factors, self.cuspidal_rank) {
            (0, 0) => "1".to_string(),
            (0, k) => format!("Sp_{}", 2 * k),
            (t, 0) => format!("GL1^{t}"),
            (t, k) => format!("GL1^{t} x Sp_{}", 2 * k),
        }
    }

    pub fn relative_weyl_type(&self) -> String {
        format!("B{}", self.relative_weyl_rank)
    }
}

pub fn harish_chandra_levi(n: u64, e: u64) -> Result<HarishChandraDatum, WeylError> {
    let k = e as u128 * (e as u128 + 1);
    if k > n as u128 {
        return Err(WeylError::RankExceeded {
            needed: u64::try_from(k).unwrap_or(u64::MAX),
            available: n,
        });
    }
    let k = k as u64;
    Ok(HarishChandraDatum {
        n,
        e,
        cuspidal_rank: k,
        torus_factors: n - k,
        relative_weyl_rank: n - k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let orders: Vec<usize> = (0..=3).map(|n| weyl_group(n).unwrap().order()).collect();
        assert_eq!(orders, vec![1, 2, 8, 48]);
        assert_eq!(weyl_group(3).unwrap().roots().len(), 18);
        assert!(matches!(weyl_group(8), Err(WeylError::BoundExceeded { .. })));
    }

    #[test]
    fn signed_permutation_arithmetic() {
        let w = SignedPermutation::from_images(vec![2, -1, 3]).unwrap();
        assert_eq!(w.apply(1), 2);
        assert_eq!(w.apply(-2), 1);
        assert!(w.compose(&w.inverse()).is_identity());
        assert!(w.inverse().compose(&w).is_identity());
        assert_eq!(w.to_string(), "[2,-1,3]");
        assert!(SignedPermutation::from_images(vec![2, 2]).is_none());
        assert!(SignedPermutation::from_images(vec![0, 1]).is_none());
        assert!(SignedPermutation::from_images(vec![3, 1]).is_none());
    }

    #[test]
    fn reflections_are_involutions_and_generate() {
        let group = weyl_group(3).unwrap();
        for root in group.roots() {
            let r = root.reflection();
            assert!(r.compose(&r).is_identity(), "reflection in {root:?} squared");
        }
        let all: Vec<SignedPermutation> =
            group.roots().iter().map(Root::reflection).collect();
        assert_eq!(generated_subgroup(3, &all).len(), group.order());
    }

    #[test]
    fn centralizer_orders_match_the_product_formula() {
        // 2^a a! 2^b b!, with the reflection part B_a × D_b.
        let group = weyl_group(3).unwrap();
        let expect = |a: usize, b: usize| -> usize {
            let fact = |m: usize| (1..=m).product::<usize>().max(1);
            (1 << a) * fact(a) * (1 << b) * fact(b)
        };
        let d_order = |b: usize| -> usize {
            // |W(D_b)| = 2^(b-1) b!, degenerating to 1 for b <= 1.
            let fact = |m: usize| (1..=m).product::<usize>().max(1);
            if b <= 1 {
                1
            } else {
                (1 << (b - 1)) * fact(b)
            }
        };
        let b_order = |a: usize| -> usize {
            let fact = |m: usize| (1..=m).product::<usize>().max(1);
            (1 << a) * fact(a)
        };
        for datum in enumerate_quasi_isolated(3) {
            let cent = centralizer_weyl(&group, &datum);
            assert_eq!(cent.stabilizer.len(), expect(datum.a(), datum.b()));
            assert_eq!(cent.connected.len(), b_order(datum.a()) * d_order(datum.b()));
        }
    }

    #[test]
    fn component_groups_have_order_one_or_two() {
        let group = weyl_group(3).unwrap();
        for datum in enumerate_quasi_isolated(3) {
            let cent = centralizer_weyl(&group, &datum);
            let table = component_group(&cent);
            let expected = if datum.b() == 0 { 1 } else { 2 };
            assert_eq!(table.order(), expected, "split ({}, {})", datum.a(), datum.b());
            assert!(table.is_abelian());
            assert_eq!(table.mul(table.identity(), 0), 0);
            for i in 0..table.order() {
                assert_eq!(table.mul(i, table.inv(i)), table.identity());
            }
        }
    }

    #[test]
    fn trivial_twist_orbits_are_singletons() {
        let group = weyl_group(2).unwrap();
        let cent = centralizer_weyl(&group, &InvolutionDatum::new(0, 2));
        let table = component_group(&cent);
        let orbits = h1_orbits(&table, &identity_automorphism(&table));
        assert_eq!(orbits, (0..table.order()).collect::<Vec<_>>());
    }

    #[test]
    fn series_counts() {
        // One series for b = 0, two for each 1 <= b <= n.
        for n in 0..=4 {
            let labels = series_labels(n).unwrap();
            assert_eq!(labels.len(), 2 * n + 1, "rank {n}");
        }
    }

    #[test]
    fn levi_data() {
        let datum = harish_chandra_levi(6, 1).unwrap();
        assert_eq!(datum.cuspidal_rank, 2);
        assert_eq!(datum.torus_factors, 4);
        assert_eq!(datum.levi_shape(), "GL1^4 x Sp_4");
        assert_eq!(datum.relative_weyl_type(), "B4");

        assert_eq!(harish_chandra_levi(0, 0).unwrap().levi_shape(), "1");
        assert_eq!(harish_chandra_levi(2, 1).unwrap().levi_shape(), "Sp_4");
        assert_eq!(harish_chandra_levi(3, 0).unwrap().levi_shape(), "GL1^3");
        assert_eq!(
            harish_chandra_levi(6, 3),
            Err(WeylError::RankExceeded { needed: 12, available: 6 })
        );
    }
}

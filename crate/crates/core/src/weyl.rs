//! Weyl group engine: element representation as integer action matrices,
//! reflection action, length from inversions, Bruhat order, minimal coset
//! representatives, and enumeration of the group and of Coxeter elements.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use num::BigInt;

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::rootsys::{Root, RootSystem, Weight};
use crate::{Rat, Result};

/// A Weyl group element.
///
/// The canonical form is the integer matrix of the action on root-basis
/// coordinates (column `j` is the image of `alpha_{j+1}`); the stored word
/// is a certificate, not an identity. Equality and hashing use the matrix
/// only.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: IntMatrix,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            matrix: IntMatrix::identity(rs.rank()),
            word: Vec::new(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        Ok(WeylElement {
            matrix: simple_reflection_matrix(rs, i),
            word: vec![i],
        })
    }

    /// Product of simple reflections `s_{w[0]} s_{w[1]} ... s_{w[k-1]}`;
    /// when applied to a weight, the rightmost letter acts first.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut m = IntMatrix::identity(rs.rank());
        for &i in word {
            rs.check_index(i)?;
            m = m.mul(&simple_reflection_matrix(rs, i));
        }
        Ok(WeylElement {
            matrix: m,
            word: word.to_vec(),
        })
    }

    pub(crate) fn from_matrix(matrix: IntMatrix, word: Vec<usize>) -> Self {
        WeylElement { matrix, word }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Linear action on a weight. Panics on rank mismatch.
    pub fn apply(&self, chi: &Weight) -> Weight {
        let n = self.matrix.size();
        assert_eq!(chi.rank(), n, "rank mismatch in Weyl action");
        let coords = (0..n)
            .map(|i| {
                let mut acc = Rat::from(BigInt::from(0));
                for j in 0..n {
                    let m = self.matrix.get(i, j);
                    if m != 0 {
                        acc += &chi.coords()[j] * Rat::from(BigInt::from(m));
                    }
                }
                acc
            })
            .collect();
        Weight::new(coords)
    }

    /// Action on integer root coordinates.
    pub fn apply_root(&self, coords: &[i64]) -> Vec<i64> {
        self.matrix.apply_int(coords)
    }

    /// Group product `self * other` (so `other` acts first on weights).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            word,
        }
    }

    pub fn inverse(&self, rs: &RootSystem) -> Result<WeylElement> {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &word)
    }

    /// Number of positive roots sent negative; equals the minimal word length.
    pub fn length(&self, rs: &RootSystem) -> usize {
        length_of(&self.matrix, &positive_root_coords(rs))
    }

    pub fn is_reduced(&self, rs: &RootSystem) -> bool {
        self.word.len() == self.length(rs)
    }

    /// True iff `w(alpha_i)` is a positive root.
    pub fn sends_positive(&self, i: usize) -> bool {
        let n = self.matrix.size();
        (0..n).all(|row| self.matrix.get(row, i - 1) >= 0)
    }
}

pub(crate) fn simple_reflection_matrix(rs: &RootSystem, j: usize) -> IntMatrix {
    let n = rs.rank();
    let mut m = IntMatrix::identity(n);
    // s_j(alpha_i) = alpha_i - c(i,j) alpha_j: only row j changes.
    for i in 1..=n {
        m.set(j - 1, i - 1, if i == j { -1 } else { -rs.cartan(i, j) });
    }
    m
}

/// Reflection in an arbitrary root: `s_beta(alpha_i) = alpha_i -
/// <alpha_i, coroot(beta)> beta`.
pub fn reflection_matrix(rs: &RootSystem, beta: &Root) -> IntMatrix {
    let n = rs.rank();
    let mut m = IntMatrix::identity(n);
    for i in 1..=n {
        let pairing: i64 = (1..=n).map(|k| beta.coroot[k - 1] * rs.cartan(i, k)).sum();
        if pairing != 0 {
            for row in 0..n {
                let cur = m.get(row, i - 1);
                m.set(row, i - 1, cur - pairing * beta.coords[row]);
            }
        }
    }
    m
}

pub(crate) fn positive_root_coords(rs: &RootSystem) -> Vec<Vec<i64>> {
    rs.positive_roots().into_iter().map(|r| r.coords).collect()
}

pub(crate) fn length_of(m: &IntMatrix, pos_roots: &[Vec<i64>]) -> usize {
    pos_roots
        .iter()
        .filter(|coords| {
            let image = m.apply_int(coords);
            // The image of a root has all coordinates of one sign.
            image.iter().any(|&c| c < 0)
        })
        .count()
}

/// Breadth-first enumeration of the whole group, lengths nondecreasing,
/// each element once with a reduced word.
pub fn enumerate_group(rs: &RootSystem, limit: u128) -> Result<Vec<WeylElement>> {
    let order = rs.weyl_order();
    if order > limit {
        return Err(Error::EnumerationLimit { order, limit });
    }
    let n = rs.rank();
    let gens: Vec<IntMatrix> = (1..=n).map(|i| simple_reflection_matrix(rs, i)).collect();
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut out: Vec<WeylElement> = Vec::new();
    let identity = WeylElement::identity(rs);
    seen.insert(identity.matrix.clone());
    let mut frontier = vec![identity.clone()];
    out.push(identity);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for (idx, gen) in gens.iter().enumerate() {
                let m = w.matrix.mul(gen);
                if seen.insert(m.clone()) {
                    let mut word = w.word.clone();
                    word.push(idx + 1);
                    let elem = WeylElement::from_matrix(m, word);
                    next.push(elem.clone());
                    out.push(elem);
                }
            }
        }
        frontier = next;
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// Parabolic coset specification: `I = S` minus the excluded indices;
/// representatives are the minimal-length elements of the cosets `w W_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpec {
    excluded: BTreeSet<usize>,
}

impl CosetSpec {
    pub fn new(excluded: BTreeSet<usize>) -> Result<Self> {
        if excluded.is_empty() {
            return Err(Error::EmptyExclusion);
        }
        Ok(CosetSpec { excluded })
    }

    /// `I_r = S \ {alpha_r}` for a maximal parabolic.
    pub fn maximal(r: usize) -> Self {
        CosetSpec {
            excluded: BTreeSet::from([r]),
        }
    }

    pub fn excluded(&self) -> &BTreeSet<usize> {
        &self.excluded
    }

    /// Indices in `I` (the kept simple roots), for a system of given rank.
    pub fn kept(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|i| !self.excluded.contains(i)).collect()
    }
}

/// Minimal coset representatives `W^I`: the `w` sending every simple root
/// in `I` to a positive root. Preserves BFS (length) order.
pub fn min_coset_reps(rs: &RootSystem, spec: &CosetSpec, limit: u128) -> Result<Vec<WeylElement>> {
    let kept = spec.kept(rs.rank());
    let all = enumerate_group(rs, limit)?;
    Ok(all
        .into_iter()
        .filter(|w| kept.iter().all(|&i| w.sends_positive(i)))
        .collect())
}

/// Bruhat order via the standard descent recursion.
pub fn bruhat_leq(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    let pos = positive_root_coords(rs);
    let gens: Vec<IntMatrix> = (1..=rs.rank())
        .map(|i| simple_reflection_matrix(rs, i))
        .collect();
    let mut um = u.matrix.clone();
    let mut wm = w.matrix.clone();
    loop {
        if um.is_identity() {
            return true;
        }
        let lw = length_of(&wm, &pos);
        if length_of(&um, &pos) > lw {
            return false;
        }
        // Find a left descent of w: l(s_i w) < l(w).
        let mut descended = false;
        for gen in &gens {
            let siw = gen.mul(&wm);
            if length_of(&siw, &pos) < lw {
                let siu = gen.mul(&um);
                if length_of(&siu, &pos) < length_of(&um, &pos) {
                    um = siu;
                }
                wm = siw;
                descended = true;
                break;
            }
        }
        if !descended {
            // w is the identity but u is not.
            return false;
        }
    }
}

/// Test-grade oracle for the Bruhat order: subword search over one reduced
/// word of `w`. Exponential in the length of `w`; retained for
/// cross-checking only.
pub fn bruhat_leq_subword(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    assert!(w.is_reduced(rs), "subword oracle needs a reduced word");
    let word = w.word();
    let k = word.len();
    assert!(k < 22, "subword oracle limited to short elements");
    let lu = u.length(rs);
    for mask in 0u32..(1 << k) {
        if (mask.count_ones() as usize) < lu {
            continue;
        }
        let sub: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| word[i]).collect();
        let prod = WeylElement::from_word(rs, &sub).expect("valid indices");
        if prod == *u {
            return true;
        }
    }
    false
}

/// All distinct Coxeter elements: products of the `n` simple reflections,
/// each index used exactly once, deduplicated by matrix form. Output is
/// sorted by word for determinism.
pub fn coxeter_elements(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    let n = rs.rank();
    if n > 8 {
        return Err(Error::RankGuard { rank: n });
    }
    let gens: Vec<IntMatrix> = (1..=n).map(|i| simple_reflection_matrix(rs, i)).collect();
    let mut by_matrix: HashMap<IntMatrix, Vec<usize>> = HashMap::new();
    for perm in (1..=n).permutations(n) {
        let mut m = IntMatrix::identity(n);
        for &i in &perm {
            m = m.mul(&gens[i - 1]);
        }
        by_matrix.entry(m).or_insert(perm);
    }
    let mut out: Vec<WeylElement> = by_matrix
        .into_iter()
        .map(|(m, word)| WeylElement::from_matrix(m, word))
        .collect();
    out.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(out)
}

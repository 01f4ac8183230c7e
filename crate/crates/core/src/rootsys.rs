//! Immutable root-system data for the simple types A-G under Bourbaki
//! labeling, with exact pairings, fundamental weights, and positive roots.
//!
//! Conventions:
//! - `cartan(i, j)` is the Cartan integer `<alpha_i, coroot(alpha_j)>`
//!   (1-based indices), so `pairing(chi, j)` is linear in the root-basis
//!   coordinates of `chi` and the simple reflection `s_j` changes only
//!   coordinate `j` of a weight.
//! - Type B has the short root at `alpha_n`, type C the long root at
//!   `alpha_n`, type D forks at `{n-1, n}` attached to `n-2`, type E hangs
//!   node 2 off node 4 of the chain `1-3-4-5-...`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::{Rat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::E => "E",
            Kind::F => "F",
            Kind::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "E" => Ok(Kind::E),
            "F" => Ok(Kind::F),
            "G" => Ok(Kind::G),
            other => Err(format!("unknown type {other:?}, expected one of A,B,C,D,E,F,G")),
        }
    }
}

/// Exact rational weight in simple-root coordinates: `coords[i]` is the
/// coefficient of `alpha_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.fraction_strings())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.fraction_strings().join(", "))
    }
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| Rat::from(BigInt::from(c))).collect(),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Coordinate of `alpha_i` (1-based).
    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True iff every simple-root coordinate is `<= 0`.
    pub fn is_nonpositive(&self) -> bool {
        self.coords.iter().all(|c| !c.is_positive())
    }

    /// True iff every simple-root coordinate is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Least positive integer `k` such that `k * self` has integer
    /// coordinates (the lcm of the coordinate denominators).
    pub fn clearing_factor(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn scaled(&self, k: &Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scaled_int(&self, k: i64) -> Weight {
        self.scaled(&Rat::from(BigInt::from(k)))
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn max_coord(&self) -> Rat {
        self.coords
            .iter()
            .cloned()
            .max()
            .expect("weight has at least one coordinate")
    }

    /// Coordinates as lowest-terms fraction strings: `"p"` for integers,
    /// `"p/q"` otherwise.
    pub fn fraction_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rat).collect()
    }

    pub fn from_fraction_strings(strs: &[String]) -> std::result::Result<Weight, String> {
        let coords = strs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Weight { coords })
    }
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> std::result::Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// A positive root together with its coroot, both in integer coordinates
/// over the simple (co)roots.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    pub coords: Vec<i64>,
    pub coroot: Vec<i64>,
}

/// Immutable Cartan datum for a labeled simple type and rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    cartan: IntMatrix,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl RootSystem {
    pub fn build(kind: Kind, rank: usize) -> Result<Self> {
        let constraint: Option<&'static str> = match kind {
            Kind::A if rank < 1 => Some("type A needs rank >= 1"),
            Kind::B if rank < 2 => Some("type B needs rank >= 2"),
            Kind::C if rank < 2 => Some("type C needs rank >= 2"),
            Kind::D if rank < 3 => Some("type D needs rank >= 3"),
            Kind::E if !(6..=8).contains(&rank) => Some("type E needs rank in {6,7,8}"),
            Kind::F if rank != 4 => Some("type F needs rank 4"),
            Kind::G if rank != 2 => Some("type G needs rank 2"),
            _ => None,
        };
        if let Some(constraint) = constraint {
            return Err(Error::InvalidRank {
                kind,
                rank,
                constraint,
            });
        }

        // Edges as (i, j, c(i,j), c(j,i)) with 1-based node labels.
        let mut edges: Vec<(usize, usize, i64, i64)> = Vec::new();
        let chain = |edges: &mut Vec<(usize, usize, i64, i64)>, upto: usize| {
            for i in 1..upto {
                edges.push((i, i + 1, -1, -1));
            }
        };
        match kind {
            Kind::A => chain(&mut edges, rank),
            Kind::B => {
                chain(&mut edges, rank - 1);
                // alpha_n short: <alpha_{n-1}, coroot(alpha_n)> = -2.
                edges.push((rank - 1, rank, -2, -1));
            }
            Kind::C => {
                chain(&mut edges, rank - 1);
                // alpha_n long: <alpha_n, coroot(alpha_{n-1})> = -2.
                edges.push((rank - 1, rank, -1, -2));
            }
            Kind::D => {
                chain(&mut edges, rank - 2);
                edges.push((rank - 2, rank - 1, -1, -1));
                edges.push((rank - 2, rank, -1, -1));
            }
            Kind::E => {
                edges.push((1, 3, -1, -1));
                edges.push((3, 4, -1, -1));
                edges.push((2, 4, -1, -1));
                for i in 4..rank {
                    edges.push((i, i + 1, -1, -1));
                }
            }
            Kind::F => {
                edges.push((1, 2, -1, -1));
                edges.push((2, 3, -2, -1));
                edges.push((3, 4, -1, -1));
            }
            Kind::G => edges.push((1, 2, -3, -1)),
        }

        let mut cartan = IntMatrix::zero(rank);
        for i in 0..rank {
            cartan.set(i, i, 2);
        }
        for (i, j, cij, cji) in edges {
            cartan.set(i - 1, j - 1, cij);
            cartan.set(j - 1, i - 1, cji);
        }
        Ok(RootSystem { kind, rank, cartan })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan integer `<alpha_i, coroot(alpha_j)>`, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan.get(i - 1, j - 1)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Simple roots adjacent to `alpha_i` in the Dynkin graph.
    pub fn dynkin_neighbors(&self, i: usize) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&j| j != i && self.cartan(i, j) != 0)
            .collect()
    }

    /// `<chi, coroot(alpha_j)>`.
    pub fn pairing(&self, chi: &Weight, j: usize) -> Result<Rat> {
        self.check_index(j)?;
        if chi.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: chi.rank(),
                right: self.rank,
            });
        }
        let mut acc = Rat::zero();
        for i in 1..=self.rank {
            let c = self.cartan(i, j);
            if c != 0 {
                acc += chi.coord(i) * Rat::from(BigInt::from(c));
            }
        }
        Ok(acc)
    }

    /// `<chi, coroot(beta)>` for a root `beta` given by its coroot
    /// coordinates over the simple coroots.
    pub fn pairing_coroot(&self, chi: &Weight, coroot: &[i64]) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (k, &ck) in coroot.iter().enumerate() {
            if ck != 0 {
                acc += self.pairing(chi, k + 1)? * Rat::from(BigInt::from(ck));
            }
        }
        Ok(acc)
    }

    /// All coroot pairings `>= 0`.
    pub fn is_dominant(&self, chi: &Weight) -> Result<bool> {
        for j in 1..=self.rank {
            if self.pairing(chi, j)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The unique weight with `pairing(. , j) = delta_{rj}`, computed by an
    /// exact rational solve against the transposed Cartan matrix.
    pub fn fundamental_weight(&self, r: usize) -> Result<Weight> {
        self.check_index(r)?;
        let n = self.rank;
        // Solve C^T x = e_r over the rationals (Gaussian elimination;
        // Cartan matrices of simple types are invertible).
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|row| {
                let mut v: Vec<Rat> = (0..n)
                    .map(|col| Rat::from(BigInt::from(self.cartan.get(col, row))))
                    .collect();
                v.push(if row + 1 == r { Rat::one() } else { Rat::zero() });
                v
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&row| !aug[row][col].is_zero())
                .expect("Cartan matrix is invertible");
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for entry in aug[col].iter_mut() {
                *entry /= p.clone();
            }
            for row in 0..n {
                if row != col && !aug[row][col].is_zero() {
                    let f = aug[row][col].clone();
                    for k in 0..=n {
                        let delta = &aug[col][k] * &f;
                        aug[row][k] -= delta;
                    }
                }
            }
        }
        Ok(Weight::new(aug.iter().map(|row| row[n].clone()).collect()))
    }

    pub fn fundamental_weights(&self) -> Result<Vec<Weight>> {
        (1..=self.rank).map(|r| self.fundamental_weight(r)).collect()
    }

    /// All positive roots with their coroots, generated by reflection
    /// closure from the simple roots.
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut out: Vec<Root> = Vec::new();
        let mut queue: Vec<Root> = (0..n)
            .map(|i| {
                let mut coords = vec![0i64; n];
                coords[i] = 1;
                Root {
                    coords: coords.clone(),
                    coroot: coords,
                }
            })
            .collect();
        for r in &queue {
            seen.insert(r.coords.clone());
        }
        while let Some(root) = queue.pop() {
            for j in 1..=n {
                // s_j on the root: only coordinate j moves.
                let mut coords = root.coords.clone();
                let pairing: i64 = (1..=n).map(|i| root.coords[i - 1] * self.cartan(i, j)).sum();
                coords[j - 1] -= pairing;
                if coords.iter().any(|&c| c < 0) {
                    continue;
                }
                if seen.insert(coords.clone()) {
                    // Coroot transforms through the reflection in the
                    // coroot lattice: s_j(coroot) drops <alpha_j, coroot>
                    // times coroot(alpha_j).
                    let mut coroot = root.coroot.clone();
                    let co_pairing: i64 =
                        (1..=n).map(|i| root.coroot[i - 1] * self.cartan(j, i)).sum();
                    coroot[j - 1] -= co_pairing;
                    let new = Root { coords, coroot };
                    queue.push(new);
                }
            }
            out.push(root);
        }
        debug_assert_eq!(out.len(), self.num_positive_roots());
        out
    }

    /// Known count of positive roots for the type.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.kind {
            Kind::A => n * (n + 1) / 2,
            Kind::B | Kind::C => n * n,
            Kind::D => n * (n - 1),
            Kind::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Kind::F => 24,
            Kind::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u32;
        let fact = |k: u32| -> u128 { (1..=k as u128).product::<u128>().max(1) };
        match self.kind {
            Kind::A => fact(n + 1),
            Kind::B | Kind::C => (1u128 << n) * fact(n),
            Kind::D => (1u128 << (n - 1)) * fact(n),
            Kind::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Kind::F => 1152,
            Kind::G => 12,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn build_a1() {
        let rs = RootSystem::build(Kind::A, 1).unwrap();
        assert_eq!(rs.cartan(1, 1), 2);
    }

    #[test]
    fn build_g2_off_diagonal() {
        let rs = RootSystem::build(Kind::G, 2).unwrap();
        let off = [rs.cartan(1, 2), rs.cartan(2, 1)];
        assert!(off.contains(&-1) && off.contains(&-3));
    }

    #[test]
    fn build_b3_short_long_edge() {
        let rs = RootSystem::build(Kind::B, 3).unwrap();
        assert_eq!(rs.cartan(2, 3) * rs.cartan(3, 2), 2);
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(RootSystem::build(Kind::D, 2).is_err());
        assert!(RootSystem::build(Kind::E, 5).is_err());
        assert!(RootSystem::build(Kind::F, 3).is_err());
        assert!(RootSystem::build(Kind::G, 3).is_err());
    }

    #[test]
    fn cartan_invariants_all_types() {
        let all = [
            (Kind::A, 4),
            (Kind::B, 4),
            (Kind::C, 4),
            (Kind::D, 5),
            (Kind::E, 6),
            (Kind::E, 7),
            (Kind::E, 8),
            (Kind::F, 4),
            (Kind::G, 2),
        ];
        for (kind, rank) in all {
            let rs = RootSystem::build(kind, rank).unwrap();
            for i in 1..=rank {
                assert_eq!(rs.cartan(i, i), 2);
                for j in 1..=rank {
                    if i != j {
                        assert!((-3..=0).contains(&rs.cartan(i, j)));
                        assert_eq!(rs.cartan(i, j) == 0, rs.cartan(j, i) == 0);
                    }
                }
            }
            // Connectivity of the Dynkin graph.
            let mut reached = vec![false; rank + 1];
            let mut stack = vec![1usize];
            reached[1] = true;
            while let Some(i) = stack.pop() {
                for j in rs.dynkin_neighbors(i) {
                    if !reached[j] {
                        reached[j] = true;
                        stack.push(j);
                    }
                }
            }
            assert!((1..=rank).all(|i| reached[i]), "{kind}{rank} disconnected");
        }
    }

    #[test]
    fn fundamental_weight_delta_property() {
        for (kind, rank) in [(Kind::A, 3), (Kind::B, 4), (Kind::C, 4), (Kind::D, 4), (Kind::G, 2)] {
            let rs = RootSystem::build(kind, rank).unwrap();
            for r in 1..=rank {
                let w = rs.fundamental_weight(r).unwrap();
                for j in 1..=rank {
                    let expect = if j == r { rat(1, 1) } else { rat(0, 1) };
                    assert_eq!(rs.pairing(&w, j).unwrap(), expect);
                }
                assert!(w.coords().iter().all(|c| c.is_positive()));
            }
        }
    }

    #[test]
    fn fundamental_weight_a1() {
        let rs = RootSystem::build(Kind::A, 1).unwrap();
        assert_eq!(rs.fundamental_weight(1).unwrap().coords(), &[rat(1, 2)]);
    }

    #[test]
    fn fundamental_weight_c_n_first() {
        // omega_1 = alpha_1 + ... + alpha_{n-1} + (1/2) alpha_n in type C.
        for n in [3usize, 4, 5] {
            let rs = RootSystem::build(Kind::C, n).unwrap();
            let w = rs.fundamental_weight(1).unwrap();
            for i in 1..n {
                assert_eq!(*w.coord(i), rat(1, 1));
            }
            assert_eq!(*w.coord(n), rat(1, 2));
        }
    }

    #[test]
    fn fundamental_weight_d_spin() {
        // omega_{n-1} = (1/2)(alpha_1 + 2 alpha_2 + ... + (n-2) alpha_{n-2})
        //             + (1/4)(n alpha_{n-1} + (n-2) alpha_n)
        for n in [4usize, 5, 6] {
            let rs = RootSystem::build(Kind::D, n).unwrap();
            let w = rs.fundamental_weight(n - 1).unwrap();
            for i in 1..=n - 2 {
                assert_eq!(*w.coord(i), rat(i as i64, 2));
            }
            assert_eq!(*w.coord(n - 1), rat(n as i64, 4));
            assert_eq!(*w.coord(n), rat(n as i64 - 2, 4));
        }
    }

    #[test]
    fn pairing_hand_example_a3() {
        let rs = RootSystem::build(Kind::A, 3).unwrap();
        let chi = Weight::from_integers(&[1, 2, 1]);
        assert_eq!(rs.pairing(&chi, 2).unwrap(), rat(2, 1));
    }

    #[test]
    fn pairing_b_first_weight_fixed_by_sn() {
        for n in [3usize, 4, 5] {
            let rs = RootSystem::build(Kind::B, n).unwrap();
            let w1 = rs.fundamental_weight(1).unwrap();
            // omega_1 = alpha_1 + ... + alpha_n, fixed by s_n.
            assert_eq!(w1, Weight::from_integers(&vec![1; n]));
            assert_eq!(rs.pairing(&w1, n).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn positive_roots_a2() {
        let rs = RootSystem::build(Kind::A, 2).unwrap();
        let roots = rs.positive_roots();
        assert_eq!(roots.len(), 3);
        let coords: HashSet<Vec<i64>> = roots.into_iter().map(|r| r.coords).collect();
        assert!(coords.contains(&vec![1, 0]));
        assert!(coords.contains(&vec![0, 1]));
        assert!(coords.contains(&vec![1, 1]));
    }

    #[test]
    fn positive_root_counts() {
        for (kind, rank, count) in [
            (Kind::A, 5, 15),
            (Kind::B, 4, 16),
            (Kind::C, 4, 16),
            (Kind::D, 5, 20),
            (Kind::F, 4, 24),
            (Kind::G, 2, 6),
            (Kind::E, 6, 36),
        ] {
            let rs = RootSystem::build(kind, rank).unwrap();
            assert_eq!(rs.positive_roots().len(), count);
        }
    }

    #[test]
    fn highest_roots_match_known_forms() {
        // Type A: alpha_1 + ... + alpha_n.
        let rs = RootSystem::build(Kind::A, 4).unwrap();
        let heights: Vec<i64> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coords.iter().sum())
            .collect();
        let max = *heights.iter().max().unwrap();
        assert_eq!(max, 4);
        // Type D: alpha_1 + 2(alpha_2 + ... + alpha_{n-2}) + alpha_{n-1} + alpha_n.
        let rs = RootSystem::build(Kind::D, 5).unwrap();
        let top = rs
            .positive_roots()
            .into_iter()
            .max_by_key(|r| r.coords.iter().sum::<i64>())
            .unwrap();
        assert_eq!(top.coords, vec![1, 2, 2, 1, 1]);
    }

    #[test]
    fn fraction_string_round_trip() {
        let w = Weight::new(vec![rat(-3, 2), rat(5, 1), rat(0, 1)]);
        let strs = w.fraction_strings();
        assert_eq!(strs, vec!["-3/2", "5", "0"]);
        assert_eq!(Weight::from_fraction_strings(&strs).unwrap(), w);
    }
}

use crate::rootsys::Kind;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {kind}: {constraint}")]
    InvalidRank {
        kind: Kind,
        rank: usize,
        constraint: &'static str,
    },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("Weyl group order {order} exceeds enumeration limit {limit}")]
    EnumerationLimit { order: u128, limit: u128 },
    #[error("rank {rank} exceeds the Coxeter enumeration bound of 8")]
    RankGuard { rank: usize },
    #[error("weight is not dominant: pairing with coroot {index} is negative")]
    NotDominant { index: usize },
    #[error("weight is not in the root lattice (non-integer coordinate)")]
    NotInRootLattice,
    #[error("element is not a minimal coset representative for the support complement")]
    NotMinimalRep,
    #[error("zero weight is not admissible")]
    ZeroWeight,
    #[error("minimality filters disagree on {context}: global {global} vs local {local} elements")]
    FilterDisagreement {
        context: String,
        global: usize,
        local: usize,
    },
    #[error("excluded index set must be nonempty for maximal parabolic use")]
    EmptyExclusion,
}

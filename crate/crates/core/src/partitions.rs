//! Ghost partitions of a topological type `(g,h)` and the bookkeeping of
//! the cell each one indexes.
//!
//! A partition distributes genus and boundary components over ghost
//! branches hanging off the main disk: closed ghosts of genus `g_i >= 1`
//! attached at interior points, and open ghosts of type `(g_i, h_i)`
//! attached along the boundary, with `2 g_i + h_i - 1 >= 1`. Partitions
//! are stored unordered; the canonical display lists closed genera in
//! descending order followed by open pairs in descending lexicographic
//! order.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::{doubled, moduli_dim, TopologicalType};

/// One ghost branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ghost {
    Closed(u32),
    Open(u32, u32),
}

impl Ghost {
    /// Genus of the complex double of the branch.
    pub fn doubled_genus(self) -> u32 {
        match self {
            Ghost::Closed(g) => 2 * g,
            Ghost::Open(g, h) => doubled(g, h),
        }
    }

    /// Moduli type of the branch with its single attaching mark.
    pub fn moduli_type(self) -> TopologicalType {
        match self {
            Ghost::Closed(g) => TopologicalType::closed(g, 1),
            Ghost::Open(g, h) => TopologicalType::open_with(g, h, 0, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct GhostPartition {
    closed: Vec<u32>,
    open: Vec<(u32, u32)>,
    target: (u32, u32),
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    closed: Vec<u32>,
    open: Vec<(u32, u32)>,
    target: (u32, u32),
}

impl TryFrom<PartitionRepr> for GhostPartition {
    type Error = Error;
    fn try_from(r: PartitionRepr) -> Result<Self> {
        GhostPartition::new(r.target, r.closed, r.open)
    }
}

impl From<GhostPartition> for PartitionRepr {
    fn from(p: GhostPartition) -> Self {
        PartitionRepr {
            closed: p.closed,
            open: p.open,
            target: p.target,
        }
    }
}

impl GhostPartition {
    /// Validate and canonicalise a partition of `target = (g, h)`.
    pub fn new(target: (u32, u32), mut closed: Vec<u32>, mut open: Vec<(u32, u32)>) -> Result<Self> {
        let (g, h) = target;
        let bad = |why: String| Err(Error::InvalidPartition(why));
        if h == 0 {
            return bad("target must have a boundary component".into());
        }
        if let Some(c) = closed.iter().find(|&&c| c == 0) {
            return bad(format!("closed ghost of genus {c}"));
        }
        if let Some(o) = open.iter().find(|&&(gi, hi)| hi == 0 || 2 * gi + hi - 1 == 0) {
            return bad(format!("unstable open ghost {o:?}"));
        }
        let genus: u32 = closed.iter().sum::<u32>() + open.iter().map(|o| o.0).sum::<u32>();
        let boundary: u32 = 1 + open.iter().map(|o| o.1 - 1).sum::<u32>();
        if genus != g || boundary != h {
            return bad(format!("ghosts smooth to ({genus},{boundary}), not ({g},{h})"));
        }
        closed.sort_unstable_by(|a, b| b.cmp(a));
        open.sort_unstable_by(|a, b| b.cmp(a));
        Ok(GhostPartition { closed, open, target })
    }

    /// The partition with no ghosts: the smooth disk, type `(0,1)`.
    pub fn empty() -> Self {
        GhostPartition {
            closed: Vec::new(),
            open: Vec::new(),
            target: (0, 1),
        }
    }

    pub fn closed(&self) -> &[u32] {
        &self.closed
    }

    pub fn open(&self) -> &[(u32, u32)] {
        &self.open
    }

    pub fn target(&self) -> (u32, u32) {
        self.target
    }

    /// Number of closed ghosts.
    pub fn r(&self) -> usize {
        self.closed.len()
    }

    /// Number of open ghosts.
    pub fn q(&self) -> usize {
        self.open.len()
    }

    /// Ghosts in canonical order: closed first, then open.
    pub fn ghosts(&self) -> Vec<Ghost> {
        self.closed
            .iter()
            .map(|&g| Ghost::Closed(g))
            .chain(self.open.iter().map(|&(g, h)| Ghost::Open(g, h)))
            .collect()
    }

    pub fn is_closed_only(&self) -> bool {
        self.open.is_empty()
    }

    /// Genus `2g+h-1` of the complex double of the target.
    pub fn target_doubled_genus(&self) -> u32 {
        doubled(self.target.0, self.target.1)
    }

    /// Rebuild from a list of ghosts, re-validating against the same target.
    pub fn from_ghosts(target: (u32, u32), ghosts: impl IntoIterator<Item = Ghost>) -> Result<Self> {
        let (mut closed, mut open) = (Vec::new(), Vec::new());
        for gh in ghosts {
            match gh {
                Ghost::Closed(g) => closed.push(g),
                Ghost::Open(g, h) => open.push((g, h)),
            }
        }
        Self::new(target, closed, open)
    }
}

impl fmt::Display for GhostPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .closed
            .iter()
            .map(|g| g.to_string())
            .chain(self.open.iter().map(|(g, h)| format!("({g},{h})")))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `(g, h)`, deduplicated up to reordering and listed in
/// descending canonical order.
pub fn enumerate_partitions(g: u32, h: u32) -> Vec<GhostPartition> {
    if h == 0 {
        return Vec::new();
    }
    let mut closed_memo = HashMap::new();
    let mut open_memo = HashMap::new();
    let mut out = Vec::new();
    for closed_genus in (0..=g).rev() {
        let closed_parts = closed_multisets(closed_genus, closed_genus, &mut closed_memo);
        let open_parts = open_multisets(g - closed_genus, h - 1, (u32::MAX, u32::MAX), &mut open_memo);
        for c in closed_parts.iter() {
            for o in open_parts.iter() {
                out.push(GhostPartition {
                    closed: c.clone(),
                    open: o.clone(),
                    target: (g, h),
                });
            }
        }
    }
    out.sort_by(|a, b| (&b.closed, &b.open).cmp(&(&a.closed, &a.open)));
    out
}

/// Descending integer partitions of `rem` with parts at most `max`.
fn closed_multisets(rem: u32, max: u32, memo: &mut HashMap<(u32, u32), Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
    if rem == 0 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&(rem, max)) {
        return v.clone();
    }
    let mut out = Vec::new();
    for first in (1..=max.min(rem)).rev() {
        for mut tail in closed_multisets(rem - first, first, memo) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    memo.insert((rem, max), out.clone());
    out
}

type OpenMemo = HashMap<(u32, u32, (u32, u32)), Vec<Vec<(u32, u32)>>>;

/// Descending multisets of open ghosts `(g_i, h_i)`, each `<= max`, with
/// `sum g_i = genus` and `sum (h_i - 1) = excess`.
fn open_multisets(genus: u32, excess: u32, max: (u32, u32), memo: &mut OpenMemo) -> Vec<Vec<(u32, u32)>> {
    if genus == 0 && excess == 0 {
        return vec![Vec::new()];
    }
    let key = (genus, excess, max);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut out = Vec::new();
    for gi in (0..=genus).rev() {
        for hi in (1..=excess + 1).rev() {
            let part = (gi, hi);
            if part > max || 2 * gi + hi - 1 == 0 {
                continue;
            }
            for mut tail in open_multisets(genus - gi, excess - (hi - 1), part, memo) {
                tail.insert(0, part);
                out.push(tail);
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn multiplicities<T: PartialEq>(sorted: &[T]) -> Vec<usize> {
    let mut counts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = (i..sorted.len())
            .find(|&j| sorted[j] != sorted[i])
            .unwrap_or(sorted.len());
        counts.push(j - i);
        i = j;
    }
    counts
}

/// `|Aut(lambda)|`: permutations of identical ghosts. A closed ghost of
/// genus `a` and an open ghost `(a,1)` are different kinds.
pub fn automorphism_order(p: &GhostPartition) -> u64 {
    multiplicities(&p.closed)
        .into_iter()
        .chain(multiplicities(&p.open))
        .map(factorial)
        .product()
}

/// Number of distinct ordered arrangements of the ghosts, `(r+q)! / |Aut|`.
pub fn ordered_arrangements(p: &GhostPartition) -> u64 {
    factorial(p.r() + p.q()) / automorphism_order(p)
}

/// Real dimension `3 g~ - (2r + q)` of the cell.
pub fn cell_dimension(p: &GhostPartition) -> u32 {
    3 * p.target_doubled_genus() - (2 * p.r() + p.q()) as u32
}

/// The same dimension assembled factor by factor: each closed ghost moves
/// over the disk (2) times its moduli, each open ghost over the boundary
/// circle (1) times its moduli.
pub fn cell_dimension_from_factors(p: &GhostPartition) -> Result<u32> {
    p.ghosts()
        .into_iter()
        .map(|gh| {
            let position = if matches!(gh, Ghost::Closed(_)) { 2 } else { 1 };
            Ok(position + moduli_dim(&gh.moduli_type())?)
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSummary {
    pub partition: GhostPartition,
    pub dim: u32,
    /// Real rank of the obstruction bundle over the cell.
    pub ob_rank: u32,
    /// Real rank of the gluing-parameter bundle, `2r + q`.
    pub gluing_rank: u32,
    /// `ob_rank - gluing_rank`.
    #[serde(rename = "obF_rank")]
    pub obf_rank: u32,
}

/// Ranks over the cell of `p`. The obstruction rank is summed ghost by
/// ghost (`6 g_i` per closed ghost, `3(2 g_i + h_i - 1)` per open one).
pub fn cell_summary(p: &GhostPartition) -> CellSummary {
    let ob_rank: u32 = p.ghosts().iter().map(|gh| 3 * gh.doubled_genus()).sum();
    let gluing_rank = (2 * p.r() + p.q()) as u32;
    CellSummary {
        partition: p.clone(),
        dim: cell_dimension(p),
        ob_rank,
        gluing_rank,
        obf_rank: ob_rank - gluing_rank,
    }
}

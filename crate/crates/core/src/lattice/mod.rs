//! How the cells `N_lambda` meet.
//!
//! Intersections of cells are modelled by explicit bubble-tree
//! [`Configuration`]s: the disk with trees of ghost pieces hanging off it,
//! each node marked interior or boundary. Three basic moves generate every
//! intersection:
//!
//! - **I**: two closed ghosts collide, leaving a sphere bubble that carries
//!   both; the partition gains a closed ghost of the summed genus.
//! - **II**: two open ghosts collide on the boundary, leaving a disk bubble;
//!   the new open ghost has type `(g + g', h + h' - 1)`.
//! - **III**: a closed ghost reaches the boundary and sits on a disk bubble;
//!   it becomes an open ghost `(g, 1)`.

mod config;
mod graph;

pub use config::{
    config_dimension, generate_configurations, gluing_audit, Attachment, BubbleTree, Configuration, GluingAudit,
    NodeKind, Piece,
};
pub use graph::{lattice_graph, LatticeGraph};

use serde::{Deserialize, Serialize};

use crate::partitions::{Ghost, GhostPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    I,
    II,
    III,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::I => "I",
            MoveKind::II => "II",
            MoveKind::III => "III",
        }
    }

    /// Real codimension of the collision stratum inside the source cell and
    /// inside the target cell.
    pub fn codimensions(self) -> (u32, u32) {
        match self {
            MoveKind::I => (2, 4),
            MoveKind::II => (1, 2),
            MoveKind::III => (1, 2),
        }
    }
}

impl std::fmt::Display for MoveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A basic move applied to ghosts of a partition. Operands index
/// [`GhostPartition::ghosts`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenerationMove {
    pub kind: MoveKind,
    pub operands: Vec<usize>,
}

impl DegenerationMove {
    /// Check operand count and ghost kinds against `p`.
    pub fn applies_to(&self, p: &GhostPartition) -> bool {
        let ghosts = p.ghosts();
        let get = |i: usize| ghosts.get(i).copied();
        match (self.kind, self.operands.as_slice()) {
            (MoveKind::I, &[a, b]) => {
                a != b && matches!(get(a), Some(Ghost::Closed(_))) && matches!(get(b), Some(Ghost::Closed(_)))
            }
            (MoveKind::II, &[a, b]) => {
                a != b && matches!(get(a), Some(Ghost::Open(..))) && matches!(get(b), Some(Ghost::Open(..)))
            }
            (MoveKind::III, &[a]) => matches!(get(a), Some(Ghost::Closed(_))),
            _ => false,
        }
    }

    /// The partition reached by the move, or `None` if it does not apply.
    pub fn apply(&self, p: &GhostPartition) -> Option<GhostPartition> {
        if !self.applies_to(p) {
            return None;
        }
        let ghosts = p.ghosts();
        let merged = match (self.kind, self.operands.as_slice()) {
            (MoveKind::I, &[a, b]) => match (ghosts[a], ghosts[b]) {
                (Ghost::Closed(x), Ghost::Closed(y)) => Ghost::Closed(x + y),
                _ => unreachable!(),
            },
            (MoveKind::II, &[a, b]) => match (ghosts[a], ghosts[b]) {
                (Ghost::Open(g1, h1), Ghost::Open(g2, h2)) => Ghost::Open(g1 + g2, h1 + h2 - 1),
                _ => unreachable!(),
            },
            (MoveKind::III, &[a]) => match ghosts[a] {
                Ghost::Closed(x) => Ghost::Open(x, 1),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        };
        let rest = ghosts
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.operands.contains(i))
            .map(|(_, &gh)| gh);
        GhostPartition::from_ghosts(p.target(), rest.chain(std::iter::once(merged))).ok()
    }
}

/// Every partition reachable from `p` by one basic move, one entry per
/// distinct `(kind, result)`.
pub fn basic_degenerations(p: &GhostPartition) -> Vec<(DegenerationMove, GhostPartition)> {
    let n = p.r() + p.q();
    let mut candidates = Vec::new();
    for a in 0..n {
        candidates.push(DegenerationMove {
            kind: MoveKind::III,
            operands: vec![a],
        });
        for b in a + 1..n {
            candidates.push(DegenerationMove {
                kind: MoveKind::I,
                operands: vec![a, b],
            });
            candidates.push(DegenerationMove {
                kind: MoveKind::II,
                operands: vec![a, b],
            });
        }
    }
    let mut out: Vec<(DegenerationMove, GhostPartition)> = Vec::new();
    for mv in candidates {
        if let Some(target) = mv.apply(p) {
            if !out.iter().any(|(m, t)| m.kind == mv.kind && *t == target) {
                out.push((mv, target));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(target: (u32, u32), closed: &[u32], open: &[(u32, u32)]) -> GhostPartition {
        GhostPartition::new(target, closed.to_vec(), open.to_vec()).unwrap()
    }

    #[test]
    fn moves_on_the_four_cell_example() {
        // canonical ghost order of (2,1) is [Closed(2), Closed(1)]
        let l1 = part((3, 1), &[1, 2], &[]);
        let iii = DegenerationMove {
            kind: MoveKind::III,
            operands: vec![1],
        };
        assert_eq!(iii.apply(&l1), Some(part((3, 1), &[2], &[(1, 1)])));
        let i = DegenerationMove {
            kind: MoveKind::I,
            operands: vec![0, 1],
        };
        assert_eq!(i.apply(&l1), Some(part((3, 1), &[3], &[])));
        let l4 = part((3, 1), &[], &[(1, 1), (2, 1)]);
        let ii = DegenerationMove {
            kind: MoveKind::II,
            operands: vec![0, 1],
        };
        assert_eq!(ii.apply(&l4), Some(part((3, 1), &[], &[(3, 1)])));
    }

    #[test]
    fn moves_reject_wrong_operands() {
        let l = part((3, 1), &[1], &[(2, 1)]);
        assert!(DegenerationMove {
            kind: MoveKind::I,
            operands: vec![0, 1]
        }
        .apply(&l)
        .is_none());
        assert!(DegenerationMove {
            kind: MoveKind::II,
            operands: vec![0, 1]
        }
        .apply(&l)
        .is_none());
        assert!(DegenerationMove {
            kind: MoveKind::III,
            operands: vec![1]
        }
        .apply(&l)
        .is_none());
        assert!(DegenerationMove {
            kind: MoveKind::III,
            operands: vec![5]
        }
        .apply(&l)
        .is_none());
        assert!(DegenerationMove {
            kind: MoveKind::I,
            operands: vec![0, 0]
        }
        .apply(&part((2, 1), &[1, 1], &[]))
        .is_none());
    }

    #[test]
    fn basic_degenerations_dedupe_identical_ghosts() {
        let p = part((3, 1), &[1, 1, 1], &[]);
        let moves = basic_degenerations(&p);
        // one collision (1,1)->2 and one boundary move 1->(1,1)
        assert_eq!(moves.len(), 2);
        assert!(basic_degenerations(&GhostPartition::empty()).is_empty());
    }
}

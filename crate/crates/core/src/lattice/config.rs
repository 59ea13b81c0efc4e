use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DegenerationMove, MoveKind};
use crate::error::{Error, Result};
use crate::moduli::{doubled, moduli_dim, TopologicalType};
use crate::partitions::{Ghost, GhostPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Interior,
    Boundary,
}

impl NodeKind {
    /// Real dimension of the smoothing parameter of a node of this kind,
    /// and of the locus a branch sweeps when attached to the disk this way.
    pub fn real_dim(self) -> u32 {
        match self {
            NodeKind::Interior => 2,
            NodeKind::Boundary => 1,
        }
    }
}

/// A component of a ghost tree. Genus-zero pieces are the sphere and disk
/// bubbles produced by collisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Piece {
    Closed { genus: u32 },
    Open { genus: u32, boundary: u32 },
}

impl Piece {
    fn is_open(self) -> bool {
        matches!(self, Piece::Open { .. })
    }

    fn genus(self) -> u32 {
        match self {
            Piece::Closed { genus } | Piece::Open { genus, .. } => genus,
        }
    }

    fn boundary(self) -> u32 {
        match self {
            Piece::Closed { .. } => 0,
            Piece::Open { boundary, .. } => boundary,
        }
    }
}

impl From<Ghost> for Piece {
    fn from(g: Ghost) -> Self {
        match g {
            Ghost::Closed(genus) => Piece::Closed { genus },
            Ghost::Open(genus, boundary) => Piece::Open { genus, boundary },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BubbleTree {
    pub piece: Piece,
    /// Child subtrees with the kind of the node joining them to this piece.
    pub children: Vec<(NodeKind, BubbleTree)>,
}

impl BubbleTree {
    pub fn leaf(piece: Piece) -> Self {
        BubbleTree {
            piece,
            children: Vec::new(),
        }
    }

    fn canonicalize(&mut self) {
        for (_, c) in self.children.iter_mut() {
            c.canonicalize();
        }
        self.children.sort();
    }

    fn vertices(&self) -> usize {
        1 + self.children.iter().map(|(_, c)| c.vertices()).sum::<usize>()
    }

    /// Count of tree edges of each kind, `(interior, boundary)`.
    fn edge_counts(&self) -> (u32, u32) {
        self.children.iter().fold((0, 0), |(i, b), (k, c)| {
            let (ci, cb) = c.edge_counts();
            match k {
                NodeKind::Interior => (i + 1 + ci, b + cb),
                NodeKind::Boundary => (i + ci, b + 1 + cb),
            }
        })
    }

    /// Moduli type of this vertex given the kind of node above it.
    fn vertex_type(&self, up: NodeKind) -> TopologicalType {
        let interior = self.children.iter().filter(|(k, _)| *k == NodeKind::Interior).count() as u32;
        let boundary = self.children.len() as u32 - interior;
        match self.piece {
            Piece::Closed { genus } => TopologicalType::closed(genus, interior + boundary + 1),
            Piece::Open { genus, boundary: h } => {
                let (n, m) = match up {
                    NodeKind::Interior => (interior + 1, boundary),
                    NodeKind::Boundary => (interior, boundary + 1),
                };
                TopologicalType::open_with(genus, h, n, m)
            }
        }
    }

    fn check(&self, up: NodeKind, path: &str) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidConfiguration(format!("{path}: {why}")));
        match (self.piece.is_open(), up) {
            (false, NodeKind::Boundary) => return bad("closed piece attached at a boundary node".into()),
            (true, NodeKind::Interior) => return bad("open piece attached at an interior node".into()),
            _ => {}
        }
        if let Piece::Open { boundary: 0, .. } = self.piece {
            return bad("open piece without boundary".into());
        }
        for (k, child) in &self.children {
            if !self.piece.is_open() && *k == NodeKind::Boundary {
                return bad("boundary node on a closed piece".into());
            }
            child.check(*k, &format!("{path}/{}", child_label(child)))?;
        }
        let t = self.vertex_type(up);
        if !t.is_stable() {
            return bad(format!("unstable piece {t}"));
        }
        Ok(())
    }

    fn dimension(&self, up: NodeKind) -> Result<u32> {
        let own = moduli_dim(&self.vertex_type(up))?;
        self.children
            .iter()
            .try_fold(own, |acc, (k, c)| Ok(acc + c.dimension(*k)?))
    }

    fn genus_and_boundary(&self) -> (u32, u32) {
        self.children
            .iter()
            .fold((self.piece.genus(), self.piece.boundary()), |(g, h), (_, c)| {
                let (cg, ch) = c.genus_and_boundary();
                (g + cg, h + ch)
            })
    }
}

fn child_label(t: &BubbleTree) -> String {
    match t.piece {
        Piece::Closed { genus } => format!("closed{genus}"),
        Piece::Open { genus, boundary } => format!("open({genus},{boundary})"),
    }
}

impl fmt::Display for BubbleTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.piece {
            Piece::Closed { genus: 0 } => write!(f, "S")?,
            Piece::Open { genus: 0, boundary: 1 } => write!(f, "D")?,
            Piece::Closed { genus } => write!(f, "{genus}")?,
            Piece::Open { genus, boundary } => write!(f, "({genus},{boundary})")?,
        }
        if !self.children.is_empty() {
            let kids: Vec<String> = self
                .children
                .iter()
                .map(|(k, c)| format!("{}{c}", if *k == NodeKind::Interior { "" } else { "~" }))
                .collect();
            write!(f, "[{}]", kids.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Attachment {
    pub location: NodeKind,
    pub tree: BubbleTree,
}

/// The main disk together with its decorated ghost trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Configuration {
    pub target: (u32, u32),
    pub attachments: Vec<Attachment>,
}

impl Configuration {
    /// Generic curve of the cell `N_lambda`: every ghost attached directly
    /// to the disk, in the partition's canonical ghost order.
    pub fn cell(p: &GhostPartition) -> Self {
        let attachments = p
            .ghosts()
            .into_iter()
            .map(|gh| Attachment {
                location: if matches!(gh, Ghost::Closed(_)) {
                    NodeKind::Interior
                } else {
                    NodeKind::Boundary
                },
                tree: BubbleTree::leaf(gh.into()),
            })
            .collect();
        Configuration {
            target: p.target(),
            attachments,
        }
    }

    /// Collision stratum of a basic move applied to the cell of `p`.
    pub fn collision(p: &GhostPartition, mv: &DegenerationMove) -> Result<Self> {
        if !mv.applies_to(p) {
            return Err(Error::InvalidConfiguration(format!(
                "move {} {:?} does not apply to {p}",
                mv.kind, mv.operands
            )));
        }
        let cell = Self::cell(p);
        match (mv.kind, mv.operands.as_slice()) {
            (MoveKind::I, &[a, b]) => cell.collide_interior(a, b),
            (MoveKind::II, &[a, b]) => cell.collide_boundary(a, b),
            (MoveKind::III, &[a]) => cell.push_to_boundary(a),
            _ => unreachable!("applies_to checked the operand count"),
        }
    }

    /// Two interior attachments meet: a sphere bubble at one interior point
    /// carries both trees.
    pub fn collide_interior(&self, a: usize, b: usize) -> Result<Self> {
        self.merge(a, b, NodeKind::Interior, Piece::Closed { genus: 0 })
    }

    /// Two boundary attachments meet: a disk bubble on the boundary carries
    /// both trees.
    pub fn collide_boundary(&self, a: usize, b: usize) -> Result<Self> {
        self.merge(a, b, NodeKind::Boundary, Piece::Open { genus: 0, boundary: 1 })
    }

    /// An interior attachment reaches the boundary: a disk bubble on the
    /// boundary carries it at an interior point.
    pub fn push_to_boundary(&self, a: usize) -> Result<Self> {
        let att = self.attachment(a)?;
        if att.location != NodeKind::Interior {
            return Err(Error::InvalidConfiguration(format!("attachment {a} is not interior")));
        }
        let bubble = BubbleTree {
            piece: Piece::Open { genus: 0, boundary: 1 },
            children: vec![(NodeKind::Interior, att.tree.clone())],
        };
        let mut attachments: Vec<Attachment> = self
            .attachments
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != a)
            .map(|(_, x)| x.clone())
            .collect();
        attachments.push(Attachment {
            location: NodeKind::Boundary,
            tree: bubble,
        });
        Ok(Configuration {
            target: self.target,
            attachments,
        }
        .canonical())
    }

    fn attachment(&self, i: usize) -> Result<&Attachment> {
        self.attachments
            .get(i)
            .ok_or_else(|| Error::InvalidConfiguration(format!("no attachment {i}")))
    }

    fn merge(&self, a: usize, b: usize, kind: NodeKind, bubble: Piece) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidConfiguration(
                "an attachment cannot collide with itself".into(),
            ));
        }
        let (x, y) = (self.attachment(a)?, self.attachment(b)?);
        if x.location != kind || y.location != kind {
            return Err(Error::InvalidConfiguration(format!(
                "attachments {a} and {b} are not both {kind:?}"
            )));
        }
        let tree = BubbleTree {
            piece: bubble,
            children: vec![(kind, x.tree.clone()), (kind, y.tree.clone())],
        };
        let mut attachments: Vec<Attachment> = self
            .attachments
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != a && i != b)
            .map(|(_, t)| t.clone())
            .collect();
        attachments.push(Attachment { location: kind, tree });
        Ok(Configuration {
            target: self.target,
            attachments,
        }
        .canonical())
    }

    /// Sort attachments and children so equal strata compare equal.
    pub fn canonical(mut self) -> Self {
        for a in self.attachments.iter_mut() {
            a.tree.canonicalize();
        }
        self.attachments.sort();
        self
    }

    /// Number of nodes of each kind, `(interior, boundary)`, counting both
    /// the disk attachments and the edges inside the trees.
    pub fn node_counts(&self) -> (u32, u32) {
        self.attachments.iter().fold((0, 0), |(i, b), a| {
            let (ti, tb) = a.tree.edge_counts();
            match a.location {
                NodeKind::Interior => (i + 1 + ti, b + tb),
                NodeKind::Boundary => (i + ti, b + 1 + tb),
            }
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.attachments.iter().map(|a| a.tree.vertices()).sum()
    }

    /// Type `(g,h)` obtained by smoothing every node.
    pub fn smoothed_type(&self) -> (u32, u32) {
        let (mut g, mut h) = (0u32, 1u32);
        for a in &self.attachments {
            let (tg, th) = a.tree.genus_and_boundary();
            g += tg;
            h += th;
        }
        let (_, boundary_nodes) = self.node_counts();
        (g, h - boundary_nodes)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.attachments.iter().enumerate() {
            a.tree.check(a.location, &format!("attachment {i}"))?;
        }
        let smoothed = self.smoothed_type();
        if smoothed != self.target {
            return Err(Error::InvalidConfiguration(format!(
                "smooths to {smoothed:?}, expected {:?}",
                self.target
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .attachments
            .iter()
            .map(|a| format!("{}{}", if a.location == NodeKind::Interior { "" } else { "~" }, a.tree))
            .collect();
        write!(f, "{:?}<{}>", self.target, parts.join(" "))
    }
}

/// Real dimension of the stratum: each attachment moves over the disk (2)
/// or its boundary (1), and each tree vertex contributes its moduli, with
/// one mark per incident node.
pub fn config_dimension(c: &Configuration) -> Result<u32> {
    c.validate()?;
    c.attachments.iter().try_fold(0, |acc, a| {
        Ok(acc + a.location.real_dim() + a.tree.dimension(a.location)?)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingAudit {
    pub dimension: u32,
    /// Real dimension of the gluing parameters: 2 per interior node, 1 per
    /// boundary node.
    pub gluing: u32,
    pub total: u32,
    /// `3 g~` of the target, the real rank of the obstruction bundle.
    pub expected: u32,
    pub ok: bool,
}

/// Dimension of a neighbourhood of the stratum in the total space of the
/// gluing-parameter bundle, compared against the obstruction rank.
pub fn gluing_audit(c: &Configuration) -> Result<GluingAudit> {
    let dimension = config_dimension(c)?;
    let (interior, boundary) = c.node_counts();
    let gluing = 2 * interior + boundary;
    let total = dimension + gluing;
    let expected = 3 * doubled(c.target.0, c.target.1);
    Ok(GluingAudit {
        dimension,
        gluing,
        total,
        expected,
        ok: total == expected,
    })
}

/// All strata reachable from the cell of `p` by repeated collisions of
/// attachments (interior pairs, boundary pairs, interior to boundary),
/// including the cell itself. Canonical and deduplicated, sorted.
pub fn generate_configurations(p: &GhostPartition) -> Vec<Configuration> {
    let start = Configuration::cell(p).canonical();
    let mut seen: BTreeSet<Configuration> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(c) = queue.pop_front() {
        let n = c.attachments.len();
        let mut next = Vec::new();
        for a in 0..n {
            next.push(c.push_to_boundary(a));
            for b in a + 1..n {
                next.push(c.collide_interior(a, b));
                next.push(c.collide_boundary(a, b));
            }
        }
        for nc in next.into_iter().flatten() {
            if seen.insert(nc.clone()) {
                queue.push_back(nc);
            }
        }
    }
    seen.into_iter().collect()
}

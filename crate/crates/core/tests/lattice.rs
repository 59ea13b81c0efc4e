use std::time::Instant;

use diskgw::lattice::{
    basic_degenerations, config_dimension, generate_configurations, gluing_audit, lattice_graph, Configuration,
    DegenerationMove, LatticeGraph, MoveKind,
};
use diskgw::partitions::{cell_dimension, enumerate_partitions, GhostPartition};

fn part(target: (u32, u32), closed: &[u32], open: &[(u32, u32)]) -> GhostPartition {
    GhostPartition::new(target, closed.to_vec(), open.to_vec()).unwrap()
}

/// The four cells of type (3,1) meeting in a common stratum.
fn four_cells() -> [GhostPartition; 4] {
    [
        part((3, 1), &[1, 2], &[]),
        part((3, 1), &[2], &[(1, 1)]),
        part((3, 1), &[1], &[(2, 1)]),
        part((3, 1), &[], &[(1, 1), (2, 1)]),
    ]
}

#[test]
fn four_cell_dimensions() {
    let dims: Vec<u32> = four_cells().iter().map(cell_dimension).collect();
    assert_eq!(dims, [14, 15, 15, 16]);
}

#[test]
fn four_cell_pairwise_and_quadruple_strata() {
    let [l1, l2, l3, _] = four_cells();
    // l1 = (2,1): ghost 0 has genus 2, ghost 1 genus 1
    let c1 = Configuration::cell(&l1);
    let l1_l2 = c1.push_to_boundary(1).unwrap();
    let l1_l3 = c1.push_to_boundary(0).unwrap();
    let c2 = Configuration::cell(&l2);
    let l2_l4 = c2.push_to_boundary(0).unwrap();
    let c3 = Configuration::cell(&l3);
    let l3_l4 = c3.push_to_boundary(0).unwrap();
    let quad = l1_l2.push_to_boundary(0).unwrap();

    assert_eq!(config_dimension(&l1_l2), Ok(13));
    assert_eq!(config_dimension(&l1_l3), Ok(13));
    assert_eq!(config_dimension(&l2_l4), Ok(14));
    assert_eq!(config_dimension(&l3_l4), Ok(14));
    assert_eq!(config_dimension(&quad), Ok(12));

    // both ghosts on disk bubbles, reached in either order
    assert_eq!(l1_l3.push_to_boundary(0).unwrap(), quad);

    let audit = gluing_audit(&quad).unwrap();
    assert_eq!(
        (audit.dimension, audit.gluing, audit.total, audit.ok),
        (12, 6, 18, true)
    );
}

#[test]
fn closed_collision_in_genus_four() {
    let l1 = part((4, 1), &[1, 2], &[(1, 1)]);
    let l2 = part((4, 1), &[3], &[(1, 1)]);
    assert_eq!(cell_dimension(&l1), 19);
    assert_eq!(cell_dimension(&l2), 21);
    let mv = DegenerationMove {
        kind: MoveKind::I,
        operands: vec![0, 1],
    };
    assert_eq!(mv.apply(&l1), Some(l2.clone()));
    let stratum = Configuration::collision(&l1, &mv).unwrap();
    assert_eq!(config_dimension(&stratum), Ok(17));
    assert_eq!(cell_dimension(&l1) - 17, 2);
    assert_eq!(cell_dimension(&l2) - 17, 4);
    let audit = gluing_audit(&stratum).unwrap();
    // 17 + (2 + 4) from the collided nodes + 1 for the untouched boundary ghost
    assert_eq!(
        (audit.dimension, audit.gluing, audit.total, audit.expected, audit.ok),
        (17, 7, 24, 24, true)
    );
}

#[test]
fn torus_type_lattice() {
    let g = lattice_graph(1, 1);
    assert_eq!(g.vertices.len(), 2);
    assert_eq!(g.edges, vec![(0, 1, MoveKind::III)]);
    let dims: Vec<u32> = g.vertices.iter().map(cell_dimension).collect();
    assert_eq!(dims, [4, 5]);
    for p in &g.vertices {
        assert_eq!(gluing_audit(&Configuration::cell(p)).unwrap().total, 6);
    }
}

#[test]
fn four_cell_subgraph() {
    let cells = four_cells();
    let g = LatticeGraph::over(cells.to_vec());
    let expected: std::collections::BTreeSet<(usize, usize)> = [(0, 1), (0, 2), (1, 3), (2, 3)].into();
    assert_eq!(g.adjacency(), expected);
    assert!(g.edges.iter().all(|e| e.2 == MoveKind::III));
}

#[test]
fn move_codimensions_exhaustive() {
    for g in 0..=4 {
        for h in 1..=3 {
            for p in enumerate_partitions(g, h) {
                for (mv, target) in basic_degenerations(&p) {
                    let stratum = Configuration::collision(&p, &mv).unwrap();
                    let d = config_dimension(&stratum).unwrap();
                    let (down, up) = mv.kind.codimensions();
                    assert_eq!(cell_dimension(&p) - d, down, "{p} {:?}", mv);
                    assert_eq!(cell_dimension(&target) - d, up, "{target} {:?}", mv);
                }
            }
        }
    }
}

#[test]
fn exhaustive_gluing_audit() {
    let start = Instant::now();
    let mut checked = 0usize;
    for g in 0..=4 {
        for h in 1..=3 {
            for p in enumerate_partitions(g, h) {
                for c in generate_configurations(&p) {
                    let a = gluing_audit(&c).unwrap();
                    assert!(a.ok, "{c}: {a:?}");
                    checked += 1;
                }
            }
        }
    }
    eprintln!("audited {checked} configurations in {:?}", start.elapsed());
    assert!(checked > 0);
}

#[test]
fn lattices_with_one_boundary_are_connected() {
    for g in 0..=8 {
        assert!(lattice_graph(g, 1).is_connected(), "genus {g}");
    }
    for g in 0..=4 {
        for h in 2..=3 {
            assert!(lattice_graph(g, h).is_connected(), "({g},{h})");
        }
    }
}

#[test]
fn dimension_invariant_under_attachment_order() {
    for p in enumerate_partitions(4, 2) {
        for c in generate_configurations(&p) {
            let d = config_dimension(&c).unwrap();
            let mut rev = c.clone();
            rev.attachments.reverse();
            assert_eq!(config_dimension(&rev), Ok(d));
        }
    }
}

//! Tiling graphs: strip tilings encoded as graphs of maximum degree one on
//! ordered vertices, where monominos become isolated vertices and dominos
//! become edges between consecutive vertices (plus the wrap edge in circular
//! mode).
//!
//! Edges are stored as canonically oriented pairs: `(i, i+1)` for a domino
//! starting at cell `i`, and `(n, 1)` for the circular domino. The oriented
//! wrap pair keeps `(1, 2)` and `(2, 1)` distinct on two vertices, which the
//! bijection with circular tilings requires. Linear tiling graphs on `n`
//! vertices are counted by `F_{n+1}` and circular ones by `L_n`, matching
//! the strip counts under the bijection.

use std::collections::BTreeSet;

use serde_json::{Value, json};
use thiserror::Error;

use crate::poly::IntPoly2;
use crate::tilings::{Mode, StripTiling, Tile, TileKind};

/// The edge set violates the tiling-graph invariants.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid tiling graph: {reason}")]
pub struct InvalidGraph {
    pub reason: String,
}

fn invalid(reason: impl Into<String>) -> InvalidGraph {
    InvalidGraph {
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TilingGraph {
    /// Vertex count; vertices are `v_1 .. v_n` ordered by index.
    pub n: usize,
    pub mode: Mode,
    /// Canonically oriented edges: `(i, i+1)` or the wrap pair `(n, 1)`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl TilingGraph {
    pub fn validate(&self) -> Result<(), InvalidGraph> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            let consecutive = v == u + 1 && u >= 1 && v <= self.n;
            let wrap = u == self.n && v == 1 && self.n >= 2;
            match self.mode {
                Mode::Linear if !consecutive => {
                    return Err(invalid(format!(
                        "edge ({u}, {v}) does not join consecutive vertices"
                    )));
                }
                Mode::Circular if !consecutive && !wrap => {
                    return Err(invalid(format!(
                        "edge ({u}, {v}) is neither consecutive nor the wrap pair"
                    )));
                }
                _ => {}
            }
            for w in [u, v] {
                if !seen.insert(w) {
                    return Err(invalid(format!("vertex v_{w} has degree greater than 1")));
                }
            }
        }
        Ok(())
    }

    /// Weight `s^{#isolated vertices} * t^{#edges}`.
    pub fn weight(&self) -> IntPoly2 {
        let covered = self.edges.len() * 2;
        let isolated = (self.n - covered) as u32;
        IntPoly2::monomial(isolated, self.edges.len() as u32, 1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.n,
            "mode": self.mode.as_str(),
            "edges": self.edges.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        })
    }
}

/// Encodes a strip tiling (no empty tile) as a tiling graph.
pub fn tiling_to_graph(tiling: &StripTiling, mode: Mode) -> TilingGraph {
    assert!(
        !tiling.has_empty(),
        "tiling graphs require a nonempty strip"
    );
    let mut edges = BTreeSet::new();
    for tile in &tiling.tiles {
        match tile.kind {
            TileKind::Domino => {
                edges.insert((tile.start, tile.start + 1));
            }
            TileKind::CircularDomino => {
                edges.insert((tiling.length, 1));
            }
            TileKind::Monomino | TileKind::Empty => {}
        }
    }
    TilingGraph {
        n: tiling.length,
        mode,
        edges,
    }
}

/// Decodes a tiling graph back into the unique strip tiling it came from.
pub fn graph_to_tiling(graph: &TilingGraph) -> Result<StripTiling, InvalidGraph> {
    graph.validate()?;
    let mut tiles = Vec::new();
    let mut covered = vec![false; graph.n + 1];
    if graph.edges.contains(&(graph.n, 1)) {
        tiles.push(Tile {
            kind: TileKind::CircularDomino,
            start: graph.n,
        });
        covered[graph.n] = true;
        covered[1] = true;
    }
    for &(u, v) in &graph.edges {
        if v == u + 1 {
            covered[u] = true;
            covered[v] = true;
        }
    }
    let mut cell = 1;
    while cell <= graph.n {
        if graph.edges.contains(&(cell, cell + 1)) {
            tiles.push(Tile::domino(cell));
            cell += 2;
        } else if covered[cell] {
            cell += 1; // half of the wrap edge, already recorded
        } else {
            tiles.push(Tile::monomino(cell));
            cell += 1;
        }
    }
    tiles.sort_by_key(|t| match t.kind {
        TileKind::CircularDomino => 1,
        _ => t.start,
    });
    Ok(StripTiling {
        length: graph.n,
        tiles,
    })
}

/// All tiling graphs on `n >= 1` ordered vertices, enumerated directly
/// (matchings of the path, plus wrap-edge matchings in circular mode).
pub fn enum_tiling_graphs(n: usize, mode: Mode) -> Vec<TilingGraph> {
    assert!(n >= 1, "tiling graphs need at least one vertex");
    let mut out = Vec::new();
    for edge_set in path_matchings(1, n) {
        out.push(TilingGraph {
            n,
            mode,
            edges: edge_set,
        });
    }
    if mode == Mode::Circular && n >= 2 {
        for mut edge_set in path_matchings(2, n.saturating_sub(1)) {
            edge_set.insert((n, 1));
            out.push(TilingGraph {
                n,
                mode,
                edges: edge_set,
            });
        }
    }
    out
}

/// All matchings of the path on vertices `lo..=hi` using consecutive edges.
fn path_matchings(lo: usize, hi: usize) -> Vec<BTreeSet<(usize, usize)>> {
    let mut out = Vec::new();
    let mut current = BTreeSet::new();
    fn go(
        v: usize,
        hi: usize,
        current: &mut BTreeSet<(usize, usize)>,
        out: &mut Vec<BTreeSet<(usize, usize)>>,
    ) {
        if v > hi {
            out.push(current.clone());
            return;
        }
        go(v + 1, hi, current, out);
        if v < hi {
            current.insert((v, v + 1));
            go(v + 2, hi, current, out);
            current.remove(&(v, v + 1));
        }
    }
    go(lo, hi, &mut current, &mut out);
    out
}

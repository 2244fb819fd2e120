//! Barrier tilings of a 1 x `n` strip.
//!
//! A barrier point `k` splits the strip after `k` cells. An `I` barrier
//! tiles cells `1..k` and `k+1..n` independently; an `L` barrier (only for
//! `1 <= k <= n-1`) forces a special domino on cells `k, k+1` and tiles the
//! remaining cells `1..k-1` and `k+2..n`. Domino weights are powers of `q`
//! built from floor and height:
//!
//! * height: `n-k+1` for an `I` barrier, `k` for an `L` barrier;
//! * floor: right-cell index for a left-compartment domino, `n+1` minus the
//!   left-cell index for a right-compartment domino, `n-k+1` for the
//!   special domino;
//! * weight: `q^{F_f}` on the right of `I` or left of `L`, `q^{F_f F_h}`
//!   on the left of `I` or right of `L`, and `q^{F_f F_{h+1}}` for the
//!   special domino.
//!
//! The total weight over all barrier tilings is `[F_{n+1}]_q` for every
//! barrier point.

use num_bigint::BigUint;
use serde_json::{Value, json};

use crate::poly::QPoly;
use crate::sequences::fib_uint;
use crate::tilings::{Mode, Restriction, StripTiling, Tile, TileKind, enum_strip};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BarrierKind {
    I,
    L,
}

impl BarrierKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BarrierKind::I => "I",
            BarrierKind::L => "L",
        }
    }
}

/// Floor and height of a placed domino.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominoGeometry {
    pub floor: u64,
    pub height: u64,
}

/// A barrier tiling. `left` covers cells `1..k` (`I`) or `1..k-1` (`L`) in
/// strip coordinates; `right` is stored in compartment-local coordinates
/// starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarrierTiling {
    pub n: usize,
    pub k: usize,
    pub kind: BarrierKind,
    pub left: StripTiling,
    pub right: StripTiling,
    /// The forced domino on cells `k, k+1`; present iff `kind` is `L`.
    pub special: Option<Tile>,
}

impl BarrierTiling {
    /// Offset from right-compartment-local cell indices to strip cells.
    fn right_offset(&self) -> usize {
        match self.kind {
            BarrierKind::I => self.k,
            BarrierKind::L => self.k + 1,
        }
    }

    pub fn height(&self) -> u64 {
        match self.kind {
            BarrierKind::I => (self.n - self.k) as u64 + 1,
            BarrierKind::L => self.k as u64,
        }
    }

    /// Every domino with its floor and height, special domino included.
    pub fn domino_geometry(&self) -> Vec<(Tile, DominoGeometry)> {
        let h = self.height();
        let mut out = Vec::new();
        for tile in &self.left.tiles {
            if tile.kind == TileKind::Domino {
                let floor = tile.start as u64 + 1;
                out.push((*tile, DominoGeometry { floor, height: h }));
            }
        }
        if let Some(special) = self.special {
            let floor = (self.n - self.k) as u64 + 1;
            out.push((special, DominoGeometry { floor, height: h }));
        }
        let offset = self.right_offset();
        for tile in &self.right.tiles {
            if tile.kind == TileKind::Domino {
                let global_start = offset + tile.start;
                let floor = (self.n + 1 - global_start) as u64;
                out.push((
                    Tile::domino(global_start),
                    DominoGeometry { floor, height: h },
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let offset = self.right_offset();
        let geometry: std::collections::BTreeMap<usize, DominoGeometry> = self
            .domino_geometry()
            .into_iter()
            .map(|(t, g)| (t.start, g))
            .collect();
        let tile_json = |tile: &Tile, start: usize, special: bool| {
            let mut obj = json!({ "kind": tile.kind.as_str(), "start": start });
            if let Some(g) = geometry
                .get(&start)
                .filter(|_| tile.kind == TileKind::Domino)
            {
                obj["floor"] = json!(g.floor);
                obj["height"] = json!(g.height);
            }
            if special {
                obj["special"] = json!(true);
            }
            obj
        };
        let mut tiles: Vec<Value> = Vec::new();
        for t in &self.left.tiles {
            if t.kind != TileKind::Empty {
                tiles.push(tile_json(t, t.start, false));
            }
        }
        if let Some(sp) = &self.special {
            tiles.push(tile_json(sp, sp.start, true));
        }
        for t in &self.right.tiles {
            if t.kind != TileKind::Empty {
                tiles.push(tile_json(t, offset + t.start, false));
            }
        }
        json!({
            "n": self.n,
            "k": self.k,
            "kind": self.kind.as_str(),
            "tiles": tiles,
        })
    }
}

/// All barrier tilings of a 1 x `n` strip with barrier point `k`
/// (`0 <= k <= n`): every `I` tiling, then every `L` tiling when the
/// special domino fits.
pub fn enum_barrier(n: usize, k: usize) -> Vec<BarrierTiling> {
    assert!(k <= n, "barrier point must lie on the strip");
    let mut out = Vec::new();
    for left in enum_strip(k, Mode::Linear, Restriction::None) {
        for right in enum_strip(n - k, Mode::Linear, Restriction::None) {
            out.push(BarrierTiling {
                n,
                k,
                kind: BarrierKind::I,
                left: left.clone(),
                right,
                special: None,
            });
        }
    }
    if k >= 1 && k < n {
        for left in enum_strip(k - 1, Mode::Linear, Restriction::None) {
            for right in enum_strip(n - k - 1, Mode::Linear, Restriction::None) {
                out.push(BarrierTiling {
                    n,
                    k,
                    kind: BarrierKind::L,
                    left: left.clone(),
                    right,
                    special: Some(Tile::domino(k)),
                });
            }
        }
    }
    out
}

/// Product of the per-domino weights of a barrier tiling.
pub fn barrier_weight(tiling: &BarrierTiling) -> QPoly {
    let h = fib_uint(tiling.height());
    let mut exponent = BigUint::ZERO;
    for tile in &tiling.left.tiles {
        if tile.kind == TileKind::Domino {
            let f = fib_uint(tile.start as u64 + 1);
            exponent += match tiling.kind {
                BarrierKind::I => f * &h,
                BarrierKind::L => f,
            };
        }
    }
    if tiling.special.is_some() {
        let f = fib_uint((tiling.n - tiling.k) as u64 + 1);
        let h_plus = fib_uint(tiling.height() + 1);
        exponent += f * h_plus;
    }
    let offset = tiling.right_offset();
    for tile in &tiling.right.tiles {
        if tile.kind == TileKind::Domino {
            let global_start = offset + tile.start;
            let f = fib_uint((tiling.n + 1 - global_start) as u64);
            exponent += match tiling.kind {
                BarrierKind::I => f,
                BarrierKind::L => f * &h,
            };
        }
    }
    QPoly::monomial(exponent, 1)
}

/// Total weight of all barrier tilings of a 1 x `n` strip at barrier point
/// `k`; equals `[F_{n+1}]_q` for every `k`.
pub fn barrier_sum(n: usize, k: usize) -> QPoly {
    enum_barrier(n, k).iter().map(barrier_weight).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{q_fib, q_fib_base};

    #[test]
    fn enumeration_counts() {
        assert_eq!(enum_barrier(3, 1).len(), 3);
        assert_eq!(enum_barrier(2, 1).len(), 2);
        // k = 0 leaves only plain linear tilings of the strip
        let plain = enum_barrier(4, 0);
        assert_eq!(plain.len(), 5);
        assert!(plain.iter().all(|t| t.kind == BarrierKind::I));
        // k = n likewise admits no L barrier
        assert!(enum_barrier(4, 4).iter().all(|t| t.kind == BarrierKind::I));
    }

    #[test]
    fn weight_examples() {
        // left-of-I domino on cells 2,3 in a 1x10 strip with k=4: floor 3, height 7
        let tiling = BarrierTiling {
            n: 10,
            k: 4,
            kind: BarrierKind::I,
            left: StripTiling {
                length: 4,
                tiles: vec![Tile::monomino(1), Tile::domino(2), Tile::monomino(4)],
            },
            right: StripTiling {
                length: 6,
                tiles: vec![
                    Tile::monomino(1),
                    Tile::monomino(2),
                    Tile::domino(3),
                    Tile::monomino(5),
                    Tile::monomino(6),
                ],
            },
            special: None,
        };
        // d1: q^{F_3 F_7} = q^26; d2 (right, global left cell 7): q^{F_4} = q^3
        assert_eq!(
            barrier_weight(&tiling),
            QPoly::monomial(29u32, 1),
            "q^{{F_3 F_7}} * q^{{F_4}}"
        );
        let geom = tiling.domino_geometry();
        assert_eq!(
            geom[0].1,
            DominoGeometry {
                floor: 3,
                height: 7
            }
        );
        assert_eq!(
            geom[1].1,
            DominoGeometry {
                floor: 4,
                height: 7
            }
        );

        // special domino of B(3,1): floor 3, height 1 -> q^{F_3 F_2} = q^2
        let special = enum_barrier(3, 1)
            .into_iter()
            .find(|t| t.kind == BarrierKind::L)
            .unwrap();
        assert_eq!(barrier_weight(&special), QPoly::monomial(2u32, 1));
    }

    #[test]
    fn sum_examples() {
        let expected: QPoly = (0u32..3).map(|e| QPoly::monomial(e, 1)).sum();
        assert_eq!(barrier_sum(3, 1), expected);
        for n in 0..=8usize {
            assert_eq!(barrier_sum(n, 0), q_fib(n as u64 + 1), "k=0 at n={n}");
        }
        for k in 0..=5usize {
            assert_eq!(barrier_sum(5, k), q_fib(6), "n=5, k={k}");
        }
    }

    #[test]
    fn kind_split_matches_product_forms() {
        for n in 1..=10usize {
            for k in 0..=n {
                let tilings = enum_barrier(n, k);
                let i_part: QPoly = tilings
                    .iter()
                    .filter(|t| t.kind == BarrierKind::I)
                    .map(barrier_weight)
                    .sum();
                let l_part: QPoly = tilings
                    .iter()
                    .filter(|t| t.kind == BarrierKind::L)
                    .map(barrier_weight)
                    .sum();
                let (n64, k64) = (n as u64, k as u64);
                let expected_i =
                    &q_fib_base(k64 + 1, &fib_uint(n64 - k64 + 1)) * &q_fib(n64 - k64 + 1);
                assert_eq!(i_part, expected_i, "I part at n={n}, k={k}");
                let expected_l = if k >= 1 && k < n {
                    let shift = QPoly::monomial(fib_uint(n64 - k64 + 1) * fib_uint(k64 + 1), 1);
                    &(&shift * &q_fib_base(n64 - k64, &fib_uint(k64))) * &q_fib(k64)
                } else {
                    QPoly::zero()
                };
                assert_eq!(l_part, expected_l, "L part at n={n}, k={k}");
            }
        }
    }
}

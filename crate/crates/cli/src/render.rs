//! ASCII renderings: monominos as `•`, horizontal dominos as `───`,
//! vertical dominos as `│`, special dominos as `═══`, barrier points as
//! `‖`, untiled cells as `·`.

use fibtile::barrier::{BarrierKind, BarrierTiling};
use fibtile::graphs::TilingGraph;
use fibtile::staircase::{FullStaircaseTiling, StaircaseTiling, Step, induced_path};
use fibtile::tilings::{PartitionTiling, StripTiling, Tile, TileKind};

/// Per-cell glyphs for a strip; `None` marks an uncovered cell.
fn cell_map(
    length: usize,
    tiles: &[Tile],
    special_at: Option<usize>,
) -> Vec<Option<(usize, char)>> {
    let mut cells: Vec<Option<(usize, char)>> = vec![None; length + 1];
    for (id, tile) in tiles.iter().enumerate() {
        let glyph = |start: usize| {
            if special_at == Some(start) {
                '═'
            } else {
                '─'
            }
        };
        match tile.kind {
            TileKind::Monomino => cells[tile.start] = Some((id, '•')),
            TileKind::Domino => {
                let g = glyph(tile.start);
                cells[tile.start] = Some((id, g));
                cells[tile.start + 1] = Some((id, g));
            }
            TileKind::CircularDomino => {
                cells[tile.start] = Some((id, '─'));
                cells[1] = Some((id, '─'));
            }
            TileKind::Empty => {}
        }
    }
    cells
}

/// Joins cell glyphs: cells of one tile fuse through their connector, a
/// barrier point shows as `‖`, other tile boundaries as `|`.
fn join_cells(cells: &[Option<(usize, char)>], barrier: Option<usize>) -> String {
    let mut out = String::new();
    for c in 1..cells.len() {
        match cells[c] {
            Some((_, g)) => out.push(g),
            None => out.push('·'),
        }
        if c + 1 < cells.len() {
            let same_tile =
                matches!((cells[c], cells[c + 1]), (Some((a, _)), Some((b, _))) if a == b);
            if barrier == Some(c) {
                out.push('‖');
            } else if same_tile {
                out.push(cells[c].map(|(_, g)| g).unwrap_or('·'));
            } else {
                out.push('|');
            }
        }
    }
    out
}

pub fn strip(tiling: &StripTiling) -> String {
    if tiling.length == 0 {
        return "(empty)".to_string();
    }
    let wrapped = tiling
        .tiles
        .iter()
        .any(|t| t.kind == TileKind::CircularDomino);
    let body = join_cells(&cell_map(tiling.length, &tiling.tiles, None), None);
    if wrapped { format!("({body})") } else { body }
}

/// Column strips use the vertical glyph for dominos.
fn column(tiling: &StripTiling) -> String {
    if tiling.length == 0 {
        return "(empty)".to_string();
    }
    let tokens: Vec<&str> = tiling
        .tiles
        .iter()
        .filter(|t| t.kind != TileKind::Empty)
        .map(|t| match t.kind {
            TileKind::Monomino => "•",
            _ => "│",
        })
        .collect();
    tokens.join("|")
}

pub fn partition(tiling: &PartitionTiling) -> String {
    let mut out = format!(
        "lambda = {:?} in {}x{}\n",
        tiling.lambda.parts(),
        tiling.lambda.rows(),
        tiling.lambda.cols()
    );
    for (i, row) in tiling.row_tilings.iter().enumerate() {
        out.push_str(&format!("row {}: {}\n", i + 1, strip(row)));
    }
    for (i, col) in tiling.col_tilings.iter().enumerate() {
        out.push_str(&format!("col {}: {}\n", i + 1, column(col)));
    }
    out
}

pub fn barrier(tiling: &BarrierTiling) -> String {
    let mut tiles: Vec<Tile> = tiling
        .left
        .tiles
        .iter()
        .filter(|t| t.kind != TileKind::Empty)
        .copied()
        .collect();
    let special_at = tiling.special.map(|t| t.start);
    if let Some(sp) = tiling.special {
        tiles.push(sp);
    }
    let offset = match tiling.kind {
        BarrierKind::I => tiling.k,
        BarrierKind::L => tiling.k + 1,
    };
    for t in &tiling.right.tiles {
        if t.kind != TileKind::Empty {
            tiles.push(Tile {
                kind: t.kind,
                start: offset + t.start,
            });
        }
    }
    let body = if tiling.n == 0 {
        "(empty)".to_string()
    } else {
        join_cells(&cell_map(tiling.n, &tiles, special_at), Some(tiling.k))
    };
    format!(
        "{} barrier at k={}: {}",
        tiling.kind.as_str(),
        tiling.k,
        body
    )
}

pub fn staircase(tiling: &StaircaseTiling) -> String {
    let mut out = format!(
        "path from ({}, 0): {}\n",
        tiling.k,
        tiling.path().as_string()
    );
    for (idx, row) in tiling.rows.iter().enumerate() {
        let length = tiling.n - (idx + 1);
        let step = match row.step {
            Step::I => "I",
            Step::L => "L",
        };
        let special_at = match row.step {
            Step::L => Some(row.p),
            Step::I => None,
        };
        let body = if length == 0 {
            "(empty)".to_string()
        } else {
            join_cells(
                &cell_map(length, &row.tiles, special_at),
                Some(row.p.min(length)),
            )
        };
        out.push_str(&format!(
            "row {} [p={}, {}]: {}\n",
            idx + 1,
            row.p,
            step,
            body
        ));
    }
    out
}

pub fn staircase_full(tiling: &FullStaircaseTiling) -> String {
    let path = induced_path(tiling);
    let abscissas = path.abscissas();
    let mut out = format!("path from ({}, 0): {}\n", tiling.k, path.as_string());
    for r in 1..=tiling.n {
        let length = tiling.n - r;
        let p = abscissas[r - 1];
        let step = path.steps[r - 1];
        let special_at = match step {
            Step::L => Some(p),
            Step::I => None,
        };
        let body = if length == 0 {
            "(empty)".to_string()
        } else {
            join_cells(
                &cell_map(length, &tiling.rows[r - 1].tiles, special_at),
                Some(p.min(length)),
            )
        };
        let step = match step {
            Step::I => "I",
            Step::L => "L",
        };
        out.push_str(&format!("row {r} [p={p}, {step}]: {body}\n"));
    }
    out
}

pub fn graph(g: &TilingGraph) -> String {
    let mut tokens: Vec<String> = Vec::new();
    let mut c = 1;
    while c <= g.n {
        if g.edges.contains(&(c, c + 1)) {
            tokens.push(format!("{c}──{}", c + 1));
            c += 2;
        } else {
            tokens.push(format!("{c}"));
            c += 1;
        }
    }
    let mut out = tokens.join("  ");
    if g.edges.contains(&(g.n, 1)) {
        out = format!("({out})  wrap {}──1", g.n);
    }
    out
}

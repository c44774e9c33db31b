//! Directed 1-skeleton of a grid tiling and its canonical byte encoding.
//!
//! Vertices are tile corners; edges join consecutive vertices along tile
//! boundaries and carry their compass direction. With the four corners of
//! the square fixed, this direction-labelled graph determines the
//! rectangulation, so a canonical traversal of it identifies the class.

use std::collections::VecDeque;
use std::fmt;

use super::grid::GridTiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    N = 0,
    E = 1,
    S = 2,
    W = 3,
}

impl Dir {
    const ALL: [Dir; 4] = [Dir::N, Dir::E, Dir::S, Dir::W];

    fn step(self) -> (i64, i64) {
        match self {
            Dir::N => (0, 1),
            Dir::E => (1, 0),
            Dir::S => (0, -1),
            Dir::W => (-1, 0),
        }
    }
}

/// Canonical identifier of a rectangulation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkeletonEncoding(Vec<u8>);

impl SkeletonEncoding {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for SkeletonEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkeletonEncoding({})", self.to_hex())
    }
}

pub(crate) struct Skeleton {
    pub width: u32,
    pub height: u32,
    pub points: Vec<(u32, u32)>,
    /// `neighbors[v][dir]` is the vertex reached from `v` in direction `dir`.
    pub neighbors: Vec<[Option<usize>; 4]>,
}

impl Skeleton {
    pub fn build(tiling: &GridTiling) -> Skeleton {
        let (w, h) = (tiling.width(), tiling.height());
        let owner = tiling.owners();
        let cell = |x: u32, y: u32| owner[(y * w + x) as usize];
        let stride = (w + 1) as usize;
        let at = |x: u32, y: u32| (y as usize) * stride + x as usize;

        let mut vertex_id = vec![usize::MAX; stride * (h + 1) as usize];
        let mut points = Vec::new();
        for t in tiling.tiles() {
            for (x, y) in [(t.x0, t.y0), (t.x1, t.y0), (t.x0, t.y1), (t.x1, t.y1)] {
                if vertex_id[at(x, y)] == usize::MAX {
                    vertex_id[at(x, y)] = points.len();
                    points.push((x, y));
                }
            }
        }

        // unit segment (x, y)-(x+1, y) lies on a boundary
        let horizontal = |x: u32, y: u32| y == 0 || y == h || cell(x, y - 1) != cell(x, y);
        // unit segment (x, y)-(x, y+1) lies on a boundary
        let vertical = |x: u32, y: u32| x == 0 || x == w || cell(x - 1, y) != cell(x, y);
        let on_skeleton = |x: u32, y: u32, d: Dir| -> bool {
            match d {
                Dir::E => x < w && horizontal(x, y),
                Dir::W => x > 0 && horizontal(x - 1, y),
                Dir::N => y < h && vertical(x, y),
                Dir::S => y > 0 && vertical(x, y - 1),
            }
        };

        let neighbors = points
            .iter()
            .map(|&(x, y)| {
                let mut out = [None; 4];
                for d in Dir::ALL {
                    if !on_skeleton(x, y, d) {
                        continue;
                    }
                    let (dx, dy) = d.step();
                    let (mut cx, mut cy) = (x as i64 + dx, y as i64 + dy);
                    // a boundary segment always ends at a tile corner
                    while vertex_id[at(cx as u32, cy as u32)] == usize::MAX {
                        cx += dx;
                        cy += dy;
                    }
                    out[d as usize] = Some(vertex_id[at(cx as u32, cy as u32)]);
                }
                out
            })
            .collect();

        Skeleton {
            width: w,
            height: h,
            points,
            neighbors,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].iter().flatten().count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.points.len())
            .map(|v| self.degree(v))
            .sum::<usize>()
            / 2
    }

    pub fn is_interior(&self, v: usize) -> bool {
        let (x, y) = self.points[v];
        x > 0 && x < self.width && y > 0 && y < self.height
    }

    /// Breadth-first traversal from the south-west corner, exploring
    /// directions in the order N, E, S, W. Each vertex emits a direction
    /// mask followed by the discovery index of each present neighbour.
    pub fn encode(&self) -> SkeletonEncoding {
        let root = self
            .points
            .iter()
            .position(|&p| p == (0, 0))
            .expect("south-west corner is always a vertex");
        let mut order = vec![usize::MAX; self.points.len()];
        let mut queue = VecDeque::from([root]);
        order[root] = 0;
        let mut discovered = 1;
        let mut bytes = Vec::with_capacity(2 + self.points.len() * 5);
        bytes.extend_from_slice(&(self.points.len() as u16).to_le_bytes());
        while let Some(v) = queue.pop_front() {
            let mut mask = 0u8;
            for d in Dir::ALL {
                if self.neighbors[v][d as usize].is_some() {
                    mask |= 1 << d as u8;
                }
            }
            bytes.push(mask);
            for d in Dir::ALL {
                if let Some(u) = self.neighbors[v][d as usize] {
                    if order[u] == usize::MAX {
                        order[u] = discovered;
                        discovered += 1;
                        queue.push_back(u);
                    }
                    bytes.extend_from_slice(&(order[u] as u16).to_le_bytes());
                }
            }
        }
        debug_assert_eq!(discovered, self.points.len(), "skeleton is connected");
        SkeletonEncoding(bytes)
    }
}

/// Canonical encoding of the rectangulation realized by `tiling`.
pub fn canonical_encoding(tiling: &GridTiling) -> SkeletonEncoding {
    Skeleton::build(tiling).encode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::grid::Rect;

    fn tiling(w: u32, h: u32, tiles: &[(u32, u32, u32, u32)]) -> GridTiling {
        GridTiling::new(
            w,
            h,
            tiles
                .iter()
                .map(|&(a, b, c, d)| Rect::new(a, b, c, d))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_tile_is_a_four_cycle() {
        let enc = canonical_encoding(&tiling(1, 1, &[(0, 0, 1, 1)]));
        // SW: N->1, E->2; NW(1): E->3, S->0; SE(2): N->3, W->0; NE(3): S->2, W->1
        let want: Vec<u8> = vec![
            4, 0, //
            0b0011, 1, 0, 2, 0, //
            0b0110, 3, 0, 0, 0, //
            0b1001, 3, 0, 0, 0, //
            0b1100, 2, 0, 1, 0,
        ];
        assert_eq!(enc.as_bytes(), want.as_slice());
    }

    #[test]
    fn rescaled_realizations_agree() {
        let a = tiling(1, 2, &[(0, 0, 1, 1), (0, 1, 1, 2)]);
        let b = tiling(1, 3, &[(0, 0, 1, 2), (0, 2, 1, 3)]);
        let c = tiling(2, 3, &[(0, 0, 2, 1), (0, 1, 2, 3)]);
        assert_eq!(canonical_encoding(&a), canonical_encoding(&b));
        assert_eq!(canonical_encoding(&a), canonical_encoding(&c));
    }

    #[test]
    fn wall_order_is_distinguished() {
        // vertical wall at x=1, left split at height a, right split at b
        let split = |a: u32, b: u32| {
            tiling(
                2,
                3,
                &[(0, 0, 1, a), (0, a, 1, 3), (1, 0, 2, b), (1, b, 2, 3)],
            )
        };
        let low_high = canonical_encoding(&split(1, 2));
        let high_low = canonical_encoding(&split(2, 1));
        let level = canonical_encoding(&split(1, 1));
        assert_ne!(low_high, high_low);
        assert_ne!(low_high, level);
        assert_ne!(high_low, level);
        // same order on a different grid
        let stretched = tiling(
            3,
            5,
            &[(0, 0, 2, 1), (0, 1, 2, 5), (2, 0, 3, 4), (2, 4, 3, 5)],
        );
        assert_eq!(canonical_encoding(&stretched), low_high);
    }

    #[test]
    fn singular_vertex_skeleton() {
        let grid = tiling(
            2,
            2,
            &[(0, 0, 1, 1), (1, 0, 2, 1), (0, 1, 1, 2), (1, 1, 2, 2)],
        );
        let sk = Skeleton::build(&grid);
        assert_eq!(sk.points.len(), 9);
        assert_eq!(sk.edge_count(), 12);
        let centre = sk.points.iter().position(|&p| p == (1, 1)).unwrap();
        assert!(sk.is_interior(centre));
        assert_eq!(sk.degree(centre), 4);
    }
}

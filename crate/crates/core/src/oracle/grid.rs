use crate::error::{Error, Result};

/// Axis-aligned rectangle `[x0, x1] x [y0, y1]` with integer corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rect {
    pub x0: u32,
    pub y0: u32,
    pub x1: u32,
    pub y1: u32,
}

impl Rect {
    pub fn new(x0: u32, y0: u32, x1: u32, y1: u32) -> Self {
        Rect { x0, y0, x1, y1 }
    }
}

/// A partition of the `width x height` integer grid into rectangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTiling {
    width: u32,
    height: u32,
    tiles: Vec<Rect>,
}

impl GridTiling {
    /// Validates that `tiles` are interior-disjoint and cover the grid.
    pub fn new(width: u32, height: u32, tiles: Vec<Rect>) -> Result<Self> {
        if width == 0 || height == 0 || tiles.is_empty() {
            return Err(Error::InvalidArgument("empty grid tiling".into()));
        }
        let mut covered = vec![false; (width * height) as usize];
        for t in &tiles {
            if t.x0 >= t.x1 || t.y0 >= t.y1 || t.x1 > width || t.y1 > height {
                return Err(Error::InvalidArgument(format!(
                    "tile {t:?} is degenerate or outside {width}x{height}"
                )));
            }
            for y in t.y0..t.y1 {
                for x in t.x0..t.x1 {
                    let cell = &mut covered[(y * width + x) as usize];
                    if *cell {
                        return Err(Error::InvalidArgument(format!(
                            "tiles overlap at cell ({x}, {y})"
                        )));
                    }
                    *cell = true;
                }
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::InvalidArgument("tiles do not cover the grid".into()));
        }
        Ok(GridTiling {
            width,
            height,
            tiles,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn tiles(&self) -> &[Rect] {
        &self.tiles
    }

    /// Tile index owning each unit cell, row-major from the bottom row.
    pub(crate) fn owners(&self) -> Vec<u32> {
        let mut owner = vec![u32::MAX; (self.width * self.height) as usize];
        for (i, t) in self.tiles.iter().enumerate() {
            for y in t.y0..t.y1 {
                for x in t.x0..t.x1 {
                    owner[(y * self.width + x) as usize] = i as u32;
                }
            }
        }
        owner
    }

    /// Image under one of the eight symmetries of the square.
    pub fn transformed(&self, symmetry: Symmetry) -> GridTiling {
        let (w, h) = (self.width, self.height);
        let map = |x: u32, y: u32| -> (u32, u32) {
            let (mut x, mut y) = (x, y);
            if symmetry.mirror_x {
                x = w - x;
            }
            if symmetry.mirror_y {
                y = h - y;
            }
            if symmetry.transpose {
                (y, x)
            } else {
                (x, y)
            }
        };
        let tiles = self
            .tiles
            .iter()
            .map(|t| {
                let (ax, ay) = map(t.x0, t.y0);
                let (bx, by) = map(t.x1, t.y1);
                Rect::new(ax.min(bx), ay.min(by), ax.max(bx), ay.max(by))
            })
            .collect();
        let (width, height) = if symmetry.transpose { (h, w) } else { (w, h) };
        GridTiling {
            width,
            height,
            tiles,
        }
    }
}

/// An element of the dihedral group of the square: optional reflections in
/// the vertical and horizontal midlines, then an optional reflection in the
/// main diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symmetry {
    pub mirror_x: bool,
    pub mirror_y: bool,
    pub transpose: bool,
}

impl Symmetry {
    pub fn all() -> [Symmetry; 8] {
        let mut out = [Symmetry {
            mirror_x: false,
            mirror_y: false,
            transpose: false,
        }; 8];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = Symmetry {
                mirror_x: i & 1 != 0,
                mirror_y: i & 2 != 0,
                transpose: i & 4 != 0,
            };
        }
        out
    }
}

/// Calls `visit` once for every partition of the `width x height` grid into
/// exactly `tiles` rectangles.
///
/// Each step covers the first uncovered cell (bottom row first, then left to
/// right) with a rectangle whose lower-left corner is that cell, so every
/// partition is produced exactly once.
pub fn for_each_grid_tiling<F>(width: u32, height: u32, tiles: usize, mut visit: F)
where
    F: FnMut(&GridTiling),
{
    if width == 0 || height == 0 || tiles == 0 {
        return;
    }
    let mut search = Search {
        width,
        height,
        target: tiles,
        covered: vec![false; (width * height) as usize],
        placed: Vec::with_capacity(tiles),
    };
    search.run(0, (width * height) as usize, &mut visit);
}

/// Collects [`for_each_grid_tiling`] into a vector.
pub fn enumerate_grid_tilings(width: u32, height: u32, tiles: usize) -> Vec<GridTiling> {
    let mut out = Vec::new();
    for_each_grid_tiling(width, height, tiles, |t| out.push(t.clone()));
    out
}

struct Search {
    width: u32,
    height: u32,
    target: usize,
    covered: Vec<bool>,
    placed: Vec<Rect>,
}

impl Search {
    fn run<F: FnMut(&GridTiling)>(&mut self, start: usize, uncovered: usize, visit: &mut F) {
        if uncovered == 0 {
            if self.placed.len() == self.target {
                visit(&GridTiling {
                    width: self.width,
                    height: self.height,
                    tiles: self.placed.clone(),
                });
            }
            return;
        }
        let remaining = self.target - self.placed.len();
        if remaining == 0 || remaining > uncovered {
            return;
        }
        let first = match (start..self.covered.len()).find(|&i| !self.covered[i]) {
            Some(i) => i,
            None => return,
        };
        let w = self.width as usize;
        let (x0, y0) = ((first % w) as u32, (first / w) as u32);

        let mut max_x = x0;
        while max_x < self.width && !self.covered[(y0 * self.width + max_x) as usize] {
            max_x += 1;
        }
        for x1 in x0 + 1..=max_x {
            for y1 in y0 + 1..=self.height {
                let row = y1 - 1;
                if (x0..x1).any(|x| self.covered[(row * self.width + x) as usize]) {
                    break;
                }
                // last tile must take everything that is left
                let area = ((x1 - x0) * (y1 - y0)) as usize;
                if remaining == 1 && area != uncovered {
                    continue;
                }
                self.mark(x0, y0, x1, y1, true);
                self.placed.push(Rect::new(x0, y0, x1, y1));
                self.run(first + 1, uncovered - area, visit);
                self.placed.pop();
                self.mark(x0, y0, x1, y1, false);
            }
        }
    }

    fn mark(&mut self, x0: u32, y0: u32, x1: u32, y1: u32, value: bool) {
        for y in y0..y1 {
            for x in x0..x1 {
                self.covered[(y * self.width + x) as usize] = value;
            }
        }
    }
}

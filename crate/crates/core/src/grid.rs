//! One-dimensional grids and line-decomposed 2D meshes.

use crate::{Error, Result};

/// Minimum cell count for the uniform builder (six-point WENO stencil).
pub const MIN_UNIFORM_CELLS: usize = 6;
/// Minimum cell count for the half-cell builder.
pub const MIN_HALF_CELL_CELLS: usize = 7;
/// Lines with fewer nodes than this use a single global interpolant for
/// their cell integrals instead of the ENO/WENO stencils.
pub const MIN_STENCIL_NODES: usize = 7;

/// Ordered nodes `x_0 < x_1 < ... < x_N` and their spacings.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    nodes: Vec<f64>,
    spacings: Vec<f64>,
}

impl Grid1D {
    /// Builds a grid from arbitrary strictly increasing nodes (at least 3).
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::Grid(format!("need at least 3 nodes, got {}", nodes.len())));
        }
        if nodes.iter().any(|x| !x.is_finite()) {
            return Err(Error::Grid("non-finite node".into()));
        }
        let spacings: Vec<f64> = nodes.windows(2).map(|w| w[1] - w[0]).collect();
        if let Some(i) = spacings.iter().position(|&d| d <= 0.0) {
            return Err(Error::Grid(format!("nodes not strictly increasing at cell {i}")));
        }
        Ok(Self { nodes, spacings })
    }

    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(b > a) {
            return Err(Error::Grid(format!("empty interval [{a}, {b}]")));
        }
        if n < MIN_UNIFORM_CELLS {
            return Err(Error::Grid(format!(
                "uniform grid needs N >= {MIN_UNIFORM_CELLS} cells, got {n}"
            )));
        }
        let h = (b - a) / n as f64;
        let mut nodes: Vec<f64> = (0..=n).map(|i| a + i as f64 * h).collect();
        nodes[n] = b;
        Self::from_nodes(nodes)
    }

    /// `n` cells: two end cells of width `h/2` around `n - 2` full cells,
    /// with `(n - 1) h = b - a`.
    pub fn half_cell(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(b > a) {
            return Err(Error::Grid(format!("empty interval [{a}, {b}]")));
        }
        if n < MIN_HALF_CELL_CELLS {
            return Err(Error::Grid(format!(
                "half-cell grid needs N >= {MIN_HALF_CELL_CELLS} cells, got {n}"
            )));
        }
        let h = (b - a) / (n - 1) as f64;
        let mut nodes = Vec::with_capacity(n + 1);
        nodes.push(a);
        for i in 0..n - 1 {
            nodes.push(a + (i as f64 + 0.5) * h);
        }
        nodes.push(b);
        Self::from_nodes(nodes)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn spacings(&self) -> &[f64] {
        &self.spacings
    }

    /// Number of cells.
    pub fn cells(&self) -> usize {
        self.spacings.len()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn a(&self) -> f64 {
        self.nodes[0]
    }

    pub fn b(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    pub fn length(&self) -> f64 {
        self.b() - self.a()
    }

    pub fn min_spacing(&self) -> f64 {
        self.spacings.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// True when every spacing matches the first to 1e-10 relative.
    pub fn is_uniform(&self) -> bool {
        let h = self.spacings[0];
        self.spacings.iter().all(|&d| (d - h).abs() <= 1e-10 * h)
    }

    /// Interior spacing and end-cell fractions for grids whose interior cells
    /// share one width `h` (uniform, half-cell and circle chord lines).
    /// Returns `None` when the interior is not uniform.
    pub fn end_fractions(&self) -> Option<(f64, f64, f64)> {
        let n = self.cells();
        if n < 3 {
            return None;
        }
        let h = self.spacings[1];
        let interior = &self.spacings[1..n - 1];
        if interior.iter().any(|&d| (d - h).abs() > 1e-9 * h) {
            return None;
        }
        Some((h, self.spacings[0] / h, self.spacings[n - 1] / h))
    }
}

/// A node on a mesh line: either a global unknown or a boundary point whose
/// value comes from boundary data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineNode {
    Unknown(usize),
    Boundary,
}

/// One grid line of a 2D mesh. `fixed` is the constant coordinate (y for an
/// x-line, x for a y-line).
#[derive(Debug, Clone)]
pub struct MeshLine {
    pub fixed: f64,
    pub grid: Grid1D,
    pub nodes: Vec<LineNode>,
}

impl MeshLine {
    /// Physical (x, y) of node `i`.
    pub fn point(&self, i: usize, along_x: bool) -> (f64, f64) {
        let s = self.grid.nodes()[i];
        if along_x {
            (s, self.fixed)
        } else {
            (self.fixed, s)
        }
    }
}

/// 2D mesh decomposed into x-lines and y-lines that share lattice unknowns.
#[derive(Debug, Clone)]
pub struct LineMesh2D {
    pub x_lines: Vec<MeshLine>,
    pub y_lines: Vec<MeshLine>,
    /// Coordinates of each unknown, indexed by global id.
    pub points: Vec<(f64, f64)>,
    /// Lattice spacing.
    pub h: f64,
}

/// Which sides of a rectangle carry Dirichlet data. Free sides hold unknowns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectSides {
    pub west: bool,
    pub east: bool,
    pub south: bool,
    pub north: bool,
}

impl RectSides {
    pub const ALL: RectSides = RectSides { west: true, east: true, south: true, north: true };
}

impl LineMesh2D {
    pub fn unknowns(&self) -> usize {
        self.points.len()
    }

    /// Rectangle `[x0,x1] x [y0,y1]` meshed with the same 1D grid shape on
    /// both axes (`make` builds a grid for an interval).
    pub fn rectangle(
        (x0, x1): (f64, f64),
        (y0, y1): (f64, f64),
        sides: RectSides,
        make: impl Fn(f64, f64) -> Result<Grid1D>,
    ) -> Result<Self> {
        let gx = make(x0, x1)?;
        let gy = make(y0, y1)?;
        let (nx, ny) = (gx.len(), gy.len());
        let mut id = vec![vec![None; nx]; ny];
        let mut points = Vec::new();
        for (j, &y) in gy.nodes().iter().enumerate() {
            for (i, &x) in gx.nodes().iter().enumerate() {
                let on_data = (i == 0 && sides.west)
                    || (i == nx - 1 && sides.east)
                    || (j == 0 && sides.south)
                    || (j == ny - 1 && sides.north);
                if !on_data {
                    id[j][i] = Some(points.len());
                    points.push((x, y));
                }
            }
        }
        let node = |j: usize, i: usize| match id[j][i] {
            Some(g) => LineNode::Unknown(g),
            None => LineNode::Boundary,
        };
        let mut x_lines = Vec::new();
        for (j, &y) in gy.nodes().iter().enumerate() {
            let nodes: Vec<LineNode> = (0..nx).map(|i| node(j, i)).collect();
            if nodes.iter().any(|n| matches!(n, LineNode::Unknown(_))) {
                x_lines.push(MeshLine { fixed: y, grid: gx.clone(), nodes });
            }
        }
        let mut y_lines = Vec::new();
        for (i, &x) in gx.nodes().iter().enumerate() {
            let nodes: Vec<LineNode> = (0..ny).map(|j| node(j, i)).collect();
            if nodes.iter().any(|n| matches!(n, LineNode::Unknown(_))) {
                y_lines.push(MeshLine { fixed: x, grid: gy.clone(), nodes });
            }
        }
        let h = gx.end_fractions().map(|(h, _, _)| h).unwrap_or(gx.min_spacing());
        Ok(Self { x_lines, y_lines, points, h })
    }

    /// Disk of radius `r` centred at the origin, embedded in the lattice
    /// `x = i h`, `y = j h`. Each lattice row (column) strictly inside the disk
    /// becomes a line whose end nodes sit on the circle.
    pub fn circle(r: f64, h: f64) -> Result<Self> {
        if !(r > 0.0) || !(h > 0.0) || h >= r {
            return Err(Error::Grid(format!("bad circle mesh parameters r = {r}, h = {h}")));
        }
        let m = (r / h).floor() as i64 + 1;
        let mut ids = std::collections::HashMap::new();
        let mut points = Vec::new();
        // Interior lattice points, snapped ones excluded.
        let chord = |c: f64| (r * r - c * c).max(0.0).sqrt();
        let inside = |i: i64, j: i64| -> bool {
            let (x, y) = (i as f64 * h, j as f64 * h);
            let s = chord(y);
            x.abs() < s && !snaps(s, x.abs(), h) && {
                let t = chord(x);
                y.abs() < t && !snaps(t, y.abs(), h)
            }
        };
        for j in -m..=m {
            for i in -m..=m {
                if inside(i, j) {
                    ids.insert((i, j), points.len());
                    points.push((i as f64 * h, j as f64 * h));
                }
            }
        }
        let build = |along_x: bool| -> Result<Vec<MeshLine>> {
            let mut lines = Vec::new();
            for j in -m..=m {
                let fixed = j as f64 * h;
                if fixed.abs() >= r {
                    continue;
                }
                let s = chord(fixed);
                let mut coords = vec![-s];
                let mut nodes = vec![LineNode::Boundary];
                for i in -m..=m {
                    let key = if along_x { (i, j) } else { (j, i) };
                    if let Some(&g) = ids.get(&key) {
                        coords.push(i as f64 * h);
                        nodes.push(LineNode::Unknown(g));
                    }
                }
                coords.push(s);
                nodes.push(LineNode::Boundary);
                if nodes.len() < 3 {
                    continue;
                }
                lines.push(MeshLine { fixed, grid: Grid1D::from_nodes(coords)?, nodes });
            }
            Ok(lines)
        };
        let x_lines = build(true)?;
        let y_lines = build(false)?;
        Ok(Self { x_lines, y_lines, points, h })
    }
}

/// A chord end at `s` snaps onto the lattice point at `x` when the gap is a
/// vanishing fraction of `h`; the lattice point then becomes the boundary node.
fn snaps(s: f64, x: f64, h: f64) -> bool {
    (s - x) / h < 1e-10
}

/// End-cell fraction of a circle chord line: `(s - largest lattice x < s) / h`.
pub fn chord_fraction(s: f64, h: f64) -> f64 {
    let mut below = (s / h).floor() * h;
    if below >= s {
        below -= h;
    }
    let lam = (s - below) / h;
    if lam < 1e-10 {
        1.0
    } else {
        lam
    }
}

//! The quiver of a (quasi-)standard twisting map and its inverse recipe.
//!
//! Vertices live on the grid `{1..n} × {1..m}`: the cell `(j,l)` is a vertex
//! exactly when `A(l,l)_{jj} = 1`.  Every non-vertex cell carries one arrow
//! `α_{jl}` with source `s(α_{jl}) = (j,i)` — where `i` is the unique index
//! with `A(i,l)_{jj} = 1` — and target `t(α_{jl}) = (c_j(A(l,l)), l)`.  Both
//! endpoints are vertices, and every row and every column of the grid
//! contains a vertex; conversely, any such quiver arises from exactly one
//! standard twisting map.

use crate::build::build_standard;
use crate::std01::{c_index, equiv_to_standard_01, fixed_rows};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use twistlab_core::{QMat, Rat};
use twistlab_twistmap::TwistingFamily;

/// The quiver of a standard twisting map of `K^m` with `K^n`.
///
/// Arrows are keyed by their cell `(j,l)`; the stored value `(i,k)` encodes
/// the source `(j,i)` and the target `(k,l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardQuiver {
    m: usize,
    n: usize,
    vertices: BTreeSet<(usize, usize)>,
    arrows: BTreeMap<(usize, usize), (usize, usize)>,
}

impl StandardQuiver {
    /// Validates and builds a quiver on the `{1..n} × {1..m}` grid.
    ///
    /// Required shape: every row and every column of the grid contains a
    /// vertex; the arrow keys are exactly the non-vertex cells; for the
    /// arrow at `(j,l)` with value `(i,k)`, both the source `(j,i)` and the
    /// target `(k,l)` are vertices.
    pub fn new(
        m: usize,
        n: usize,
        vertices: BTreeSet<(usize, usize)>,
        arrows: BTreeMap<(usize, usize), (usize, usize)>,
    ) -> Result<Self, String> {
        if m == 0 || n == 0 {
            return Err("m and n must be positive".to_string());
        }
        for &(j, l) in &vertices {
            if !(1..=n).contains(&j) || !(1..=m).contains(&l) {
                return Err(format!("vertex ({j},{l}) outside the {n}x{m} grid"));
            }
        }
        for j in 1..=n {
            if !(1..=m).any(|l| vertices.contains(&(j, l))) {
                return Err(format!("row {j} of the grid has no vertex"));
            }
        }
        for l in 1..=m {
            if !(1..=n).any(|j| vertices.contains(&(j, l))) {
                return Err(format!("column {l} of the grid has no vertex"));
            }
        }
        for j in 1..=n {
            for l in 1..=m {
                match (vertices.contains(&(j, l)), arrows.get(&(j, l))) {
                    (true, Some(_)) => {
                        return Err(format!("cell ({j},{l}) is a vertex but carries an arrow"))
                    }
                    (false, None) => {
                        return Err(format!("non-vertex cell ({j},{l}) is missing its arrow"))
                    }
                    (false, Some(&(i, k))) => {
                        if !vertices.contains(&(j, i)) {
                            return Err(format!(
                                "arrow at ({j},{l}) has source ({j},{i}), which is not a vertex"
                            ));
                        }
                        if !vertices.contains(&(k, l)) {
                            return Err(format!(
                                "arrow at ({j},{l}) has target ({k},{l}), which is not a vertex"
                            ));
                        }
                    }
                    (true, None) => {}
                }
            }
        }
        if arrows.len() + vertices.len() != m * n {
            // Arrows outside the grid would otherwise go unnoticed.
            return Err("arrows present at cells outside the grid".to_string());
        }
        Ok(StandardQuiver { m, n, vertices, arrows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The vertex set `Q_0` as cells `(j,l)` of the grid.
    pub fn vertices(&self) -> &BTreeSet<(usize, usize)> {
        &self.vertices
    }

    /// The arrows, keyed by cell `(j,l)` with value `(i,k)`: source `(j,i)`,
    /// target `(k,l)`.
    pub fn arrows(&self) -> &BTreeMap<(usize, usize), (usize, usize)> {
        &self.arrows
    }

    pub fn is_vertex(&self, j: usize, l: usize) -> bool {
        self.vertices.contains(&(j, l))
    }

    /// Source vertex of the arrow at `(j,l)`, when that cell has one.
    pub fn source(&self, j: usize, l: usize) -> Option<(usize, usize)> {
        self.arrows.get(&(j, l)).map(|&(i, _)| (j, i))
    }

    /// Target vertex of the arrow at `(j,l)`, when that cell has one.
    pub fn target(&self, j: usize, l: usize) -> Option<(usize, usize)> {
        self.arrows.get(&(j, l)).map(|&(_, k)| (k, l))
    }

    /// Text rendering of the grid: rows `j = 1..n` top to bottom, columns
    /// `l = 1..m` left to right, `•` for vertices and `o` for arrow cells,
    /// followed by one `a j,l: (j,i) -> (k,l)` line per arrow.
    pub fn to_grid(&self) -> String {
        let mut out = String::new();
        for j in 1..=self.n {
            let row: Vec<&str> =
                (1..=self.m).map(|l| if self.is_vertex(j, l) { "•" } else { "o" }).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        for (&(j, l), &(i, k)) in &self.arrows {
            writeln!(out, "a {j},{l}: ({j},{i}) -> ({k},{l})").expect("writing to a String");
        }
        out
    }

    /// DOT rendering: vertices as filled circle nodes named `"j,l"`, one
    /// edge per arrow labeled `a_{jl}`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for &(j, l) in &self.vertices {
            writeln!(out, "  \"{j},{l}\" [shape=circle, style=filled];").expect("string write");
        }
        for (&(j, l), &(i, k)) in &self.arrows {
            writeln!(out, "  \"{j},{i}\" -> \"{k},{l}\" [label=\"a_{j}{l}\"];")
                .expect("string write");
        }
        out.push_str("}\n");
        out
    }
}

/// The quiver of a standard (or quasi-standard) twisting map.
///
/// Only the diagonal blocks `A(l,l)` and `B(j,j)` enter the construction, so
/// a quasi-standard map yields the quiver of its associated standard map.
/// Errors when some diagonal block is not an idempotent-function 0,1-matrix.
pub fn quiver_of(f: &TwistingFamily) -> Result<StandardQuiver, String> {
    let (m, n) = (f.m(), f.n());
    for l in 1..=m {
        if !equiv_to_standard_01(f.a(l, l)) {
            return Err(format!(
                "A({l},{l}) is not an idempotent-function 0,1-matrix; the map is not quasi-standard"
            ));
        }
    }
    let b_diag: Vec<QMat> = (1..=n)
        .map(|j| f.b_matrix(j, j).expect("index in range"))
        .collect();
    for (j, b) in b_diag.iter().enumerate() {
        if !equiv_to_standard_01(b) {
            return Err(format!(
                "B({j},{j}) is not an idempotent-function 0,1-matrix; the map is not quasi-standard",
                j = j + 1
            ));
        }
    }
    let mut vertices = BTreeSet::new();
    for l in 1..=m {
        for j in fixed_rows(f.a(l, l)) {
            vertices.insert((j, l));
        }
    }
    let mut arrows = BTreeMap::new();
    for j in 1..=n {
        for l in 1..=m {
            if vertices.contains(&(j, l)) {
                continue;
            }
            // Source column: the unique i with A(i,l)_{jj} = 1, read off row
            // l of B(j,j).
            let i = c_index(&b_diag[j - 1], l)
                .map_err(|e| format!("source of the arrow at ({j},{l}): {e}"))?;
            // Target row: where the diagonal block sends j.
            let k = c_index(f.a(l, l), j).expect("non-vertex row of a checked block");
            arrows.insert((j, l), (i, k));
        }
    }
    StandardQuiver::new(m, n, vertices, arrows)
}

/// The standard twisting map attached to a quiver: the diagonal data is read
/// off the rows (`A(l)` row `j` is `e_j` at a vertex, else `e_k` from the
/// arrow's target; `B(j)` row `l` is `e_l` at a vertex, else `e_i` from the
/// arrow's source) and fed through [`build_standard`].
pub fn quiver_to_standard(q: &StandardQuiver) -> TwistingFamily {
    let point = |cond: bool| if cond { Rat::one() } else { Rat::zero() };
    let a_list: Vec<QMat> = (1..=q.m())
        .map(|l| {
            QMat::from_fn(q.n(), q.n(), |j0, c0| {
                let j = j0 + 1;
                let image = match q.target(j, l) {
                    None => j,
                    Some((k, _)) => k,
                };
                point(c0 + 1 == image)
            })
        })
        .collect();
    let b_list: Vec<QMat> = (1..=q.n())
        .map(|j| {
            QMat::from_fn(q.m(), q.m(), |l0, c0| {
                let l = l0 + 1;
                let image = match q.source(j, l) {
                    None => l,
                    Some((_, i)) => i,
                };
                point(c0 + 1 == image)
            })
        })
        .collect();
    build_standard(&a_list, &b_list)
        .expect("a valid quiver always satisfies the constructor preconditions")
}

//! A 167-vertex triangulated 3-sphere that admits no (4,2)-coloring:
//! ten copies of a 15-vertex ball without (3,2)-colorings are attached
//! to the edges of a K₅ embedded as a bipyramid, forcing five colors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{search_coloring, ColoringProblem, Status};
use crate::complex::{ComplexError, SimplicialComplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereError {
    /// A required triangle or subcomplex is absent.
    MissingStructure(Vertex, Vertex),
    Complex(ComplexError),
}

impl fmt::Display for SphereError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereError::MissingStructure(a, b) => {
                write!(f, "missing attachment structure at edge {}-{}", a, b)
            }
            SphereError::Complex(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for SphereError {}

impl From<ComplexError> for SphereError {
    fn from(e: ComplexError) -> Self {
        SphereError::Complex(e)
    }
}

/// Facets of the 15-vertex ball: the 16-vertex "double trefoil" sphere
/// with the star of vertex 7 removed and vertex 16 renamed to 7.
const BALL: [[Vertex; 4]; 66] = [
    [1, 2, 5, 6], [1, 2, 5, 12], [1, 2, 6, 12], [1, 3, 8, 11],
    [1, 4, 5, 6], [1, 4, 5, 7], [1, 4, 6, 12], [1, 4, 10, 13],
    [1, 4, 10, 7], [1, 4, 12, 13], [1, 5, 12, 13], [1, 5, 13, 7],
    [1, 8, 9, 14], [1, 8, 10, 14], [1, 8, 10, 15], [1, 8, 11, 15],
    [1, 9, 11, 15], [1, 9, 14, 15], [1, 10, 13, 14], [1, 10, 15, 7],
    [1, 13, 14, 7], [1, 14, 15, 7], [2, 3, 4, 13], [2, 3, 4, 15],
    [2, 3, 13, 15], [2, 4, 8, 7], [2, 4, 10, 13], [2, 4, 10, 7],
    [2, 5, 6, 14], [2, 5, 12, 14], [2, 6, 8, 12], [2, 6, 8, 7],
    [2, 6, 9, 14], [2, 6, 9, 7], [2, 8, 9, 14], [2, 8, 12, 14],
    [2, 9, 10, 7], [3, 4, 12, 13], [3, 4, 12, 15], [3, 5, 6, 14],
    [3, 5, 8, 11], [3, 5, 11, 14], [3, 6, 9, 14], [3, 6, 9, 7],
    [3, 9, 12, 13], [3, 9, 12, 7], [3, 9, 13, 15], [3, 9, 14, 15],
    [3, 12, 15, 7], [3, 14, 15, 7], [4, 5, 8, 7], [4, 6, 12, 15],
    [5, 8, 11, 13], [5, 8, 13, 7], [5, 11, 12, 13], [5, 11, 12, 14],
    [6, 8, 12, 15], [6, 8, 13, 15], [6, 8, 13, 7], [8, 10, 12, 14],
    [8, 10, 12, 15], [8, 11, 13, 15], [9, 10, 12, 7], [9, 11, 12, 13],
    [9, 11, 13, 15], [10, 12, 15, 7],
];

/// The Hamiltonian path on the ball's boundary sphere.
pub const HAMILTONIAN_PATH: [Vertex; 15] = [14, 12, 11, 9, 10, 2, 13, 15, 4, 8, 1, 3, 5, 6, 7];

pub const K5_VERTICES: [Vertex; 5] = [151, 152, 153, 154, 155];

const CAVITY_APEX: Vertex = 166;
const BOUNDARY_APEX: Vertex = 167;

/// K₅ edges in attachment order: the central bipyramid edge first,
/// then the rest lexicographically.
pub fn k5_edges() -> Vec<[Vertex; 2]> {
    let mut edges = alloc::vec![[151, 152]];
    for (i, &a) in K5_VERTICES.iter().enumerate() {
        for &b in &K5_VERTICES[i + 1..] {
            if [a, b] != [151, 152] {
                edges.push([a, b]);
            }
        }
    }
    edges
}

/// Vertex labels of the ball copy attached to the i-th edge (1-based).
pub fn ball_vertices(i: usize) -> Vec<Vertex> {
    let off = 15 * (i as Vertex - 1);
    (1..=15).map(|v| off + v).collect()
}

/// The 15-vertex 3-ball with no (3,2)-coloring.
pub fn ball_b15() -> SimplicialComplex {
    let facets: Vec<Vec<Vertex>> = BALL.iter().map(|t| t.to_vec()).collect();
    SimplicialComplex::build(&facets)
        .expect("ball facet table is valid")
        .with_name("B15")
}

fn sorted3(a: Vertex, b: Vertex, c: Vertex) -> [Vertex; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

fn sorted4(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> [Vertex; 4] {
    let mut t = [a, b, c, d];
    t.sort_unstable();
    t
}

/// Boundary triangles of the ball (each in exactly one facet).
fn ball_boundary() -> Vec<[Vertex; 3]> {
    let mut count: BTreeMap<[Vertex; 3], u32> = BTreeMap::new();
    for t in &BALL {
        for i in 0..4 {
            let mut f = Vec::with_capacity(3);
            for (j, &v) in t.iter().enumerate() {
                if j != i {
                    f.push(v);
                }
            }
            *count.entry(sorted3(f[0], f[1], f[2])).or_insert(0) += 1;
        }
    }
    count.into_iter().filter(|&(_, c)| c == 1).map(|(f, _)| f).collect()
}

/// Coherently oriented copies of the boundary triangles.
fn orient_boundary(tris: &[[Vertex; 3]]) -> BTreeMap<[Vertex; 3], [Vertex; 3]> {
    let mut edge_tris: BTreeMap<[Vertex; 2], Vec<usize>> = BTreeMap::new();
    for (i, t) in tris.iter().enumerate() {
        for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
            edge_tris.entry(e).or_default().push(i);
        }
    }
    let mut oriented: BTreeMap<usize, [Vertex; 3]> = BTreeMap::new();
    oriented.insert(0, tris[0]);
    let mut stack = alloc::vec![0usize];
    while let Some(i) = stack.pop() {
        let ot = oriented[&i];
        for (a, b) in [(ot[0], ot[1]), (ot[1], ot[2]), (ot[2], ot[0])] {
            let key = if a < b { [a, b] } else { [b, a] };
            let hits = edge_tris
                .get(&key)
                .unwrap_or_else(|| panic!("no edge {:?} (triangle {:?})", key, ot));
            for &j in hits {
                if j == i || oriented.contains_key(&j) {
                    continue;
                }
                let c = *tris[j].iter().find(|&&v| v != a && v != b).unwrap();
                // the neighbor traverses the shared edge the other way
                oriented.insert(j, [b, a, c]);
                stack.push(j);
            }
        }
    }
    assert_eq!(oriented.len(), tris.len());
    oriented.into_iter().map(|(i, o)| (tris[i], o)).collect()
}

/// Neighbors of v on the oriented boundary sphere, in cyclic order.
fn link_cycle(oriented: &BTreeMap<[Vertex; 3], [Vertex; 3]>, v: Vertex) -> Vec<Vertex> {
    let mut succ: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for ot in oriented.values() {
        if !ot.contains(&v) {
            continue;
        }
        let [a, b, c] = *ot;
        if a == v {
            succ.insert(b, c);
        } else if b == v {
            succ.insert(c, a);
        } else {
            succ.insert(a, b);
        }
    }
    let start = *succ.keys().next().unwrap();
    let mut cycle = alloc::vec![start];
    loop {
        let next = succ[cycle.last().unwrap()];
        if next == start {
            break;
        }
        cycle.push(next);
    }
    assert_eq!(cycle.len(), succ.len());
    cycle
}

/// One-sided strip along the Hamiltonian path: at each interior path
/// vertex, the fan of boundary triangles from the next path vertex
/// around to the previous one.
fn path_strip() -> BTreeSet<[Vertex; 3]> {
    let oriented = orient_boundary(&ball_boundary());
    let mut strip = BTreeSet::new();
    for j in 1..14 {
        let v = HAMILTONIAN_PATH[j];
        let prev = HAMILTONIAN_PATH[j - 1];
        let next = HAMILTONIAN_PATH[j + 1];
        let cycle = link_cycle(&oriented, v);
        let start = cycle.iter().position(|&x| x == next).unwrap();
        let end = cycle.iter().position(|&x| x == prev).unwrap();
        let mut i = start;
        while i != end {
            let a = cycle[i];
            let b = cycle[(i + 1) % cycle.len()];
            strip.insert(sorted3(v, a, b));
            i = (i + 1) % cycle.len();
        }
    }
    strip
}

struct Builder {
    tets: BTreeSet<[Vertex; 4]>,
    strip: BTreeSet<[Vertex; 3]>,
}

impl Builder {
    fn add(&mut self, t: [Vertex; 4]) {
        let t = sorted4(t[0], t[1], t[2], t[3]);
        assert!(t[0] < t[1] && t[1] < t[2] && t[2] < t[3], "degenerate tetrahedron");
        assert!(self.tets.insert(t), "duplicate tetrahedron");
    }

    /// Triangles currently contained in exactly one tetrahedron.
    fn free_triangles(&self) -> BTreeSet<[Vertex; 3]> {
        let mut count: BTreeMap<[Vertex; 3], u32> = BTreeMap::new();
        for t in &self.tets {
            for i in 0..4 {
                let f = match i {
                    0 => [t[1], t[2], t[3]],
                    1 => [t[0], t[2], t[3]],
                    2 => [t[0], t[1], t[3]],
                    _ => [t[0], t[1], t[2]],
                };
                *count.entry(f).or_insert(0) += 1;
            }
        }
        count.into_iter().filter(|&(_, c)| c == 1).map(|(f, _)| f).collect()
    }

    /// Ball copy, chain of tetrahedra along the path, chain extensions
    /// to the flanking triangles, and the thickening cone.
    fn gadget(&mut self, idx: Vertex, a: Vertex, b: Vertex, p: Vertex, q: Vertex) {
        let off = 15 * (idx - 1);
        let w = 155 + idx;
        let h: Vec<Vertex> = HAMILTONIAN_PATH.iter().map(|&v| off + v).collect();
        for t in &BALL {
            self.add([off + t[0], off + t[1], off + t[2], off + t[3]]);
        }
        for j in 0..14 {
            self.add([a, b, h[j], h[j + 1]]);
        }
        self.add([a, b, p, h[0]]);
        self.add([a, b, h[14], q]);
        let strip: Vec<[Vertex; 3]> = self.strip.iter().cloned().collect();
        for t in strip {
            self.add([w, off + t[0], off + t[1], off + t[2]]);
        }
        for j in 0..14 {
            self.add([w, a, h[j], h[j + 1]]);
        }
        // the strip and the chain side close up to a sphere except for
        // one triangular hole; fill it so the cone stays a ball
        self.add([w, a, h[0], h[14]]);
    }
}

/// Builds the non-(4,2)-colorable 3-sphere: bipyramid K₅ skeleton, two
/// interior tetrahedra, ten attached ball gadgets, a cone filling the
/// cavity (vertex 166) and a cone over the boundary (vertex 167).
pub fn build_non_4_2_colorable_sphere() -> SimplicialComplex {
    let mut builder = Builder {
        tets: BTreeSet::new(),
        strip: path_strip(),
    };
    // interior wedges of the bipyramid around the central edge
    builder.add([151, 152, 153, 155]);
    builder.add([151, 152, 154, 155]);

    // central gadget, pointing into the cavity 151-152-153-154
    builder.gadget(1, 151, 152, 153, 154);

    // fill the cavity: cone over its enclosing surface
    let cavity_vertices: BTreeSet<Vertex> = (1..=15).chain([156, 151, 152, 153, 154]).collect();
    let mut cavity_base: BTreeSet<[Vertex; 3]> = builder
        .free_triangles()
        .into_iter()
        .filter(|f| f.iter().all(|v| cavity_vertices.contains(v)))
        .collect();
    cavity_base.insert([151, 153, 154]);
    cavity_base.insert([152, 153, 154]);
    for f in cavity_base {
        builder.add([CAVITY_APEX, f[0], f[1], f[2]]);
    }

    // outer gadgets, each taking over the two currently free triangles
    // at its edge
    for (i, e) in k5_edges().into_iter().enumerate().skip(1) {
        let [a, b] = e;
        let flanking: Vec<[Vertex; 3]> = builder
            .free_triangles()
            .into_iter()
            .filter(|f| f.contains(&a) && f.contains(&b))
            .collect();
        assert_eq!(flanking.len(), 2, "edge {}-{} must have two free triangles", a, b);
        let p = *flanking[0].iter().find(|&&v| v != a && v != b).unwrap();
        let q = *flanking[1].iter().find(|&&v| v != a && v != b).unwrap();
        builder.gadget(i as Vertex + 1, a, b, p, q);
    }

    // close the ball with the cone over its boundary
    for f in builder.free_triangles() {
        builder.add([BOUNDARY_APEX, f[0], f[1], f[2]]);
    }

    let facets: Vec<Vec<Vertex>> = builder.tets.iter().map(|t| t.to_vec()).collect();
    SimplicialComplex::build(&facets)
        .expect("assembled sphere is a valid complex")
        .with_name("non_4_2_colorable")
}

/// Findings for one K₅ edge.
#[derive(Debug, Clone)]
pub struct EdgeObstruction {
    pub edge: [Vertex; 2],
    pub ball: Vec<Vertex>,
    /// every ball vertex forms a triangle with the edge
    pub fully_connected: bool,
    /// the induced ball has no (3,2)-coloring
    pub ball_not_3_2_colorable: bool,
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub edges: Vec<EdgeObstruction>,
}

impl ObstructionReport {
    /// No 4-coloring can leave any K₅ edge monochromatic.
    pub fn all_obstructed(&self) -> bool {
        self.edges.len() == 10
            && self
                .edges
                .iter()
                .all(|e| e.fully_connected && e.ball_not_3_2_colorable)
    }
}

/// Checks, per K₅ edge, that the attached ball blocks a monochromatic
/// edge: each ball vertex spans a triangle with the edge, and the
/// induced ball complex admits no (3,2)-coloring.
pub fn verify_k5_obstruction(
    complex: &SimplicialComplex,
    k5_edges: &[[Vertex; 2]],
    ball_vertex_sets: &[Vec<Vertex>],
) -> Result<ObstructionReport, SphereError> {
    // all triangles of the complex
    let mut triangles: BTreeSet<[Vertex; 3]> = BTreeSet::new();
    for facet in complex.facets() {
        for t in crate::util::k_subsets(facet, 3) {
            triangles.insert([t[0], t[1], t[2]]);
        }
    }
    let mut edges = Vec::new();
    for (e, ball) in k5_edges.iter().zip(ball_vertex_sets) {
        let [a, b] = *e;
        let fully_connected = ball
            .iter()
            .all(|&v| triangles.contains(&sorted3(a, b, v)));
        if !fully_connected {
            return Err(SphereError::MissingStructure(a, b));
        }
        let keep: BTreeSet<Vertex> = ball.iter().cloned().collect();
        let induced = complex.induced(&keep)?;
        if induced.dim() != 3 {
            return Err(SphereError::MissingStructure(a, b));
        }
        let problem = ColoringProblem::new(&induced, 3, 2)
            .map_err(|_| SphereError::MissingStructure(a, b))?;
        let ball_not_3_2_colorable = search_coloring(&problem).status == Status::NotColorable;
        edges.push(EdgeObstruction {
            edge: *e,
            ball: ball.clone(),
            fully_connected,
            ball_not_3_2_colorable,
        });
    }
    Ok(ObstructionReport { edges })
}

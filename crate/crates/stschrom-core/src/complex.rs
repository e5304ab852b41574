//! Abstract simplicial complexes stored as facet lists, with manifold
//! verification, orientability and the standard constructions (cone,
//! suspension, connected sum, cyclic polytope boundaries).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::util::k_subsets;

/// Vertex labels are positive integers.
pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    EmptyComplex,
    /// Facets of mixed cardinality.
    NonUniform,
    /// A facet with a repeated vertex.
    DegenerateFacet,
    /// A facet contained in (here: equal to) another facet.
    RedundantFacet,
    /// A vertex label of 0.
    ZeroVertex,
    UnknownVertex(Vertex),
    UnknownFacet,
    ApexCollision(Vertex),
    DimensionMismatch,
    /// Connected-sum identification would create a degenerate facet.
    IdentificationCollision,
    TooFewVertices,
    /// Manifold check: some ridge lies in fewer than two facets.
    NotClosed,
    /// Manifold check: bad ridge degree or bad vertex link.
    NotManifold,
    Disconnected,
    /// classify_closed_manifold supports dimensions 2 and 3 only.
    UnsupportedDimension,
    BadMatching,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::EmptyComplex => write!(f, "empty facet list"),
            ComplexError::NonUniform => write!(f, "facets of mixed cardinality"),
            ComplexError::DegenerateFacet => write!(f, "facet with repeated vertex"),
            ComplexError::RedundantFacet => write!(f, "facet contained in another facet"),
            ComplexError::ZeroVertex => write!(f, "vertex labels must be positive"),
            ComplexError::UnknownVertex(v) => write!(f, "vertex {} not in complex", v),
            ComplexError::UnknownFacet => write!(f, "facet not in complex"),
            ComplexError::ApexCollision(v) => write!(f, "apex {} already a vertex", v),
            ComplexError::DimensionMismatch => write!(f, "complexes of different dimension"),
            ComplexError::IdentificationCollision => {
                write!(f, "identification creates a repeated vertex in a facet")
            }
            ComplexError::TooFewVertices => write!(f, "too few vertices"),
            ComplexError::NotClosed => write!(f, "complex has boundary"),
            ComplexError::NotManifold => write!(f, "complex is not a manifold"),
            ComplexError::Disconnected => write!(f, "complex is disconnected"),
            ComplexError::UnsupportedDimension => {
                write!(f, "manifold classification supports dimensions 2 and 3")
            }
            ComplexError::BadMatching => write!(f, "invalid vertex matching"),
        }
    }
}

impl core::error::Error for ComplexError {}

/// Face counts by dimension, `f = (f_0, ..., f_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceClassification {
    pub orientable: bool,
    pub euler: i64,
    /// Genus g if orientable (euler = 2 - 2g), crosscap number u if not
    /// (euler = 2 - u).
    pub genus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeManifoldReport {
    pub orientable: bool,
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Surface(SurfaceClassification),
    ThreeManifold(ThreeManifoldReport),
}

impl Classification {
    pub fn orientable(&self) -> bool {
        match self {
            Classification::Surface(s) => s.orientable,
            Classification::ThreeManifold(m) => m.orientable,
        }
    }
}

/// A pure abstract simplicial complex, stored canonically: facet
/// vertices sorted, facet list sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<Vertex>>,
    name: Option<String>,
}

impl SimplicialComplex {
    /// Builds a complex from a facet list, validating uniform
    /// cardinality, absence of repeated vertices and inclusion-freeness.
    pub fn build(facets: &[Vec<Vertex>]) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let card = facets[0].len();
        if card == 0 {
            return Err(ComplexError::EmptyComplex);
        }
        let mut canon: Vec<Vec<Vertex>> = Vec::with_capacity(facets.len());
        for f in facets {
            if f.len() != card {
                return Err(ComplexError::NonUniform);
            }
            if f.contains(&0) {
                return Err(ComplexError::ZeroVertex);
            }
            let mut g = f.clone();
            g.sort_unstable();
            if g.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DegenerateFacet);
            }
            canon.push(g);
        }
        canon.sort();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            // with uniform cardinality, containment means equality
            return Err(ComplexError::RedundantFacet);
        }
        let vertices: BTreeSet<Vertex> = canon.iter().flatten().copied().collect();
        Ok(SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets: canon,
            name: None,
        })
    }

    /// Like `build` but silently drops duplicate facets. Used for
    /// derived complexes (links) whose facet lists may repeat.
    pub(crate) fn build_pruned(facets: &[Vec<Vertex>]) -> Result<Self, ComplexError> {
        let set: BTreeSet<Vec<Vertex>> = facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.sort_unstable();
                g
            })
            .collect();
        let list: Vec<Vec<Vertex>> = set.into_iter().collect();
        Self::build(&list)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(String::from(name));
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    /// Dimension of the facets (all facets have dim+1 vertices).
    pub fn dim(&self) -> usize {
        self.facets[0].len() - 1
    }

    pub fn contains_facet(&self, facet: &[Vertex]) -> bool {
        let mut f = facet.to_vec();
        f.sort_unstable();
        self.facets.binary_search(&f).is_ok()
    }

    /// The complex with one facet removed. Fails if the facet is absent.
    pub fn without_facet(&self, facet: &[Vertex]) -> Result<Self, ComplexError> {
        let mut f = facet.to_vec();
        f.sort_unstable();
        let i = self
            .facets
            .binary_search(&f)
            .map_err(|_| ComplexError::UnknownFacet)?;
        let mut facets = self.facets.clone();
        facets.remove(i);
        SimplicialComplex::build(&facets)
    }

    /// Applies a relabeling to every vertex; must be injective on the
    /// vertex set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Self, ComplexError> {
        let facets: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&v| map(v)).collect())
            .collect();
        let c = SimplicialComplex::build(&facets)?;
        if c.vertices.len() != self.vertices.len() {
            return Err(ComplexError::BadMatching);
        }
        Ok(c)
    }

    /// Subcomplex of all facets fully contained in `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Result<Self, ComplexError> {
        let facets: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .filter(|f| f.iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        SimplicialComplex::build(&facets)
    }

    /// Counts all faces of every dimension.
    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = Vec::with_capacity(d + 1);
        for k in 0..=d {
            if k == 0 {
                counts.push(self.vertices.len() as u64);
                continue;
            }
            if k == d {
                counts.push(self.facets.len() as u64);
                continue;
            }
            let mut faces: BTreeSet<Vec<Vertex>> = BTreeSet::new();
            for f in &self.facets {
                for s in k_subsets(f, k + 1) {
                    faces.insert(s);
                }
            }
            counts.push(faces.len() as u64);
        }
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// The link of `v`: facets are `F \ {v}` for facets `F` containing
    /// `v`.
    pub fn vertex_link(&self, v: Vertex) -> Result<Self, ComplexError> {
        if self.vertices.binary_search(&v).is_err() {
            return Err(ComplexError::UnknownVertex(v));
        }
        let facets: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&u| u != v).collect())
            .collect();
        SimplicialComplex::build_pruned(&facets)
    }

    /// Cone over the complex with a fresh apex.
    pub fn cone(&self, apex: Vertex) -> Result<Self, ComplexError> {
        if self.vertices.binary_search(&apex).is_ok() {
            return Err(ComplexError::ApexCollision(apex));
        }
        let facets: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.push(apex);
                g
            })
            .collect();
        SimplicialComplex::build(&facets)
    }

    /// Suspension: union of the cones over two fresh apices.
    pub fn suspension(&self, apex1: Vertex, apex2: Vertex) -> Result<Self, ComplexError> {
        if apex1 == apex2 {
            return Err(ComplexError::ApexCollision(apex2));
        }
        let mut facets = self.cone(apex1)?.facets;
        facets.extend(self.cone(apex2)?.facets);
        SimplicialComplex::build(&facets)
    }

    /// Ridge -> cofacet incidence: for every (d-1)-face, the list of
    /// (facet index, index of the deleted vertex within the facet).
    fn ridge_cofacets(&self) -> BTreeMap<Vec<Vertex>, Vec<(usize, usize)>> {
        let mut map: BTreeMap<Vec<Vertex>, Vec<(usize, usize)>> = BTreeMap::new();
        for (fi, f) in self.facets.iter().enumerate() {
            for drop in 0..f.len() {
                let ridge: Vec<Vertex> = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                map.entry(ridge).or_default().push((fi, drop));
            }
        }
        map
    }

    /// True if the facet-adjacency graph (across ridges) is connected.
    /// Assumes every ridge has exactly two cofacets.
    fn facet_graph_connected(&self, ridges: &BTreeMap<Vec<Vertex>, Vec<(usize, usize)>>) -> bool {
        let n = self.facets.len();
        let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for cof in ridges.values() {
            if cof.len() == 2 {
                adj[cof[0].0].push(cof[1].0);
                adj[cof[1].0].push(cof[0].0);
            }
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(f) = stack.pop() {
            for &g in &adj[f] {
                if !seen[g] {
                    seen[g] = true;
                    count += 1;
                    stack.push(g);
                }
            }
        }
        count == n
    }

    /// Assigns each facet a sign so that the two cofacets of every
    /// ridge induce opposite orientations, or reports failure.
    ///
    /// A sorted facet with sign s induces on the ridge obtained by
    /// deleting its i-th vertex the orientation s * (-1)^i; coherence
    /// demands the two inductions differ.
    pub fn orientation_signs(&self) -> Option<Vec<i8>> {
        let ridges = self.ridge_cofacets();
        if ridges.values().any(|c| c.len() != 2) {
            return None;
        }
        let n = self.facets.len();
        let mut sign: Vec<i8> = alloc::vec![0; n];
        let mut constraints: Vec<Vec<(usize, i8)>> = alloc::vec![Vec::new(); n];
        for cof in ridges.values() {
            let (f, i) = cof[0];
            let (g, j) = cof[1];
            // sign[f]*(-1)^i = -sign[g]*(-1)^j
            let rel = if (i + j) % 2 == 0 { -1 } else { 1 };
            constraints[f].push((g, rel));
            constraints[g].push((f, rel));
        }
        sign[0] = 1;
        let mut stack = alloc::vec![0usize];
        while let Some(f) = stack.pop() {
            for &(g, rel) in &constraints[f] {
                let want = sign[f] * rel;
                if sign[g] == 0 {
                    sign[g] = want;
                    stack.push(g);
                } else if sign[g] != want {
                    return None;
                }
            }
        }
        if sign.contains(&0) {
            // disconnected; caller rejects that case separately
            return None;
        }
        Some(sign)
    }

    /// True if this 1-dimensional complex is a single closed cycle.
    fn is_single_cycle(&self) -> bool {
        if self.dim() != 1 {
            return false;
        }
        let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
        for e in &self.facets {
            *deg.entry(e[0]).or_insert(0) += 1;
            *deg.entry(e[1]).or_insert(0) += 1;
        }
        if deg.values().any(|&d| d != 2) {
            return false;
        }
        // connected 2-regular graph with |E| = |V| is one cycle
        self.facets.len() == self.vertices.len() && self.connected_graph()
    }

    fn connected_graph(&self) -> bool {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for e in &self.facets {
            for w in k_subsets(e, 2) {
                adj.entry(w[0]).or_default().push(w[1]);
                adj.entry(w[1]).or_default().push(w[0]);
            }
        }
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut stack = alloc::vec![self.vertices[0]];
        seen.insert(self.vertices[0]);
        while let Some(v) = stack.pop() {
            if let Some(nb) = adj.get(&v) {
                for &w in nb {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Verifies that the complex is a closed connected 2- or 3-manifold
    /// and classifies it (orientability; genus in dimension 2).
    pub fn classify_closed_manifold(&self) -> Result<Classification, ComplexError> {
        let d = self.dim();
        if d != 2 && d != 3 {
            return Err(ComplexError::UnsupportedDimension);
        }
        let ridges = self.ridge_cofacets();
        for cof in ridges.values() {
            if cof.len() < 2 {
                return Err(ComplexError::NotClosed);
            }
            if cof.len() > 2 {
                return Err(ComplexError::NotManifold);
            }
        }
        if !self.facet_graph_connected(&ridges) {
            return Err(ComplexError::Disconnected);
        }
        for &v in &self.vertices {
            let link = self.vertex_link(v).expect("vertex is present");
            let good = match d {
                2 => link.is_single_cycle(),
                _ => matches!(
                    link.classify_closed_manifold(),
                    Ok(Classification::Surface(SurfaceClassification { euler: 2, .. }))
                ),
            };
            if !good {
                return Err(ComplexError::NotManifold);
            }
        }
        let orientable = self.orientation_signs().is_some();
        let euler = self.euler_characteristic();
        Ok(if d == 2 {
            let genus = if orientable {
                debug_assert!((2 - euler) % 2 == 0);
                ((2 - euler) / 2) as u64
            } else {
                (2 - euler) as u64
            };
            Classification::Surface(SurfaceClassification { orientable, euler, genus })
        } else {
            Classification::ThreeManifold(ThreeManifoldReport { orientable, euler })
        })
    }
}

/// Connected sum along the facets `f1` of `k1` and `f2` of `k2`.
///
/// `k2` is relabeled: matched vertices of `f2` take the labels of their
/// partners in `f1`, all other vertices get fresh labels above `k1`'s
/// maximum. `matching` pairs vertices of `f1` with vertices of `f2`;
/// when `None`, vertices are identified in sorted order.
pub fn connected_sum(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
    f1: &[Vertex],
    f2: &[Vertex],
    matching: Option<&[(Vertex, Vertex)]>,
) -> Result<SimplicialComplex, ComplexError> {
    if k1.dim() != k2.dim() {
        return Err(ComplexError::DimensionMismatch);
    }
    if !k1.contains_facet(f1) || !k2.contains_facet(f2) {
        return Err(ComplexError::UnknownFacet);
    }
    let mut a = f1.to_vec();
    let mut b = f2.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    let pairs: Vec<(Vertex, Vertex)> = match matching {
        Some(m) => {
            let mut m = m.to_vec();
            m.sort_unstable();
            let ma: Vec<Vertex> = m.iter().map(|&(x, _)| x).collect();
            let mut mb: Vec<Vertex> = m.iter().map(|&(_, y)| y).collect();
            mb.sort_unstable();
            if ma != a || mb != b {
                return Err(ComplexError::BadMatching);
            }
            m
        }
        None => a.iter().copied().zip(b.iter().copied()).collect(),
    };
    let mut map: BTreeMap<Vertex, Vertex> = pairs.iter().map(|&(x, y)| (y, x)).collect();
    let mut next = k1.vertices().last().copied().unwrap_or(0) + 1;
    for &v in k2.vertices() {
        map.entry(v).or_insert_with(|| {
            let fresh = next;
            next += 1;
            fresh
        });
    }
    let mut facets: Vec<Vec<Vertex>> = k1.without_facet(f1)?.facets;
    for f in k2.without_facet(f2)?.facets {
        let g: Vec<Vertex> = f.iter().map(|v| map[v]).collect();
        let mut s = g.clone();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::IdentificationCollision);
        }
        facets.push(g);
    }
    SimplicialComplex::build(&facets)
}

/// The unique 7-vertex triangulation of the torus: triangles
/// {i, i+1, i+3} and {i, i+2, i+3} mod 7, labels 1..7.
pub fn torus7() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7u32 {
        facets.push(alloc::vec![i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
        facets.push(alloc::vec![i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
    }
    SimplicialComplex::build(&facets)
        .expect("fixed facet list")
        .with_name("torus_7")
}

/// The vertex-minimal 6-vertex triangulation of the real projective
/// plane (antipodal quotient of the icosahedron).
pub fn rp2_6() -> SimplicialComplex {
    let facets = [
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 4],
        [1, 3, 6],
        [1, 5, 6],
        [2, 3, 5],
        [2, 3, 6],
        [2, 4, 6],
        [3, 4, 5],
        [4, 5, 6],
    ];
    let facets: Vec<Vec<Vertex>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::build(&facets)
        .expect("fixed facet list")
        .with_name("rp2_6")
}

/// Facets of the boundary of the cyclic polytope CP(m, dim): the
/// dim-subsets of 1..m satisfying Gale's evenness condition.
pub fn cyclic_polytope_boundary(m: u32, dim: usize) -> Result<SimplicialComplex, ComplexError> {
    if (m as usize) < dim + 1 {
        return Err(ComplexError::TooFewVertices);
    }
    let points: Vec<Vertex> = (1..=m).collect();
    let mut facets = Vec::new();
    'subsets: for s in k_subsets(&points, dim) {
        let member = |v: Vertex| s.binary_search(&v).is_ok();
        for i in 1..=m {
            if member(i) {
                continue;
            }
            for j in i + 1..=m {
                if member(j) {
                    continue;
                }
                let between = s.iter().filter(|&&v| i < v && v < j).count();
                if between % 2 != 0 {
                    continue 'subsets;
                }
            }
        }
        facets.push(s);
    }
    SimplicialComplex::build(&facets)
}

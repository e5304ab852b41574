//! Search for (k,2)-colorings of pure simplicial complexes: a
//! depth-first backtracking search over reachable vertices with
//! fewest-admissible-colors selection, plus coloring verification,
//! chromatic number computation and color-class merging.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ComplexError, SimplicialComplex, Vertex};
use crate::util::k_subsets;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    /// Only s = 2 is supported.
    UnsupportedS,
    /// k must be at least 2.
    BadK,
    /// The complex must have dimension at least 2.
    NotPure,
    /// A vertex without an assigned color.
    PartialColoring(Vertex),
    ColorOutOfRange(Vertex),
    /// A monochromatic constraint triple.
    Violation([Vertex; 3]),
    /// merge_color_classes input has a monochromatic edge in a facet.
    NotStrongColoring([Vertex; 2]),
    UnknownFacet,
    Complex(ComplexError),
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::UnsupportedS => write!(f, "only s = 2 is supported"),
            ColoringError::BadK => write!(f, "need at least 2 colors"),
            ColoringError::NotPure => write!(f, "complex dimension must be at least 2"),
            ColoringError::PartialColoring(v) => write!(f, "vertex {} is uncolored", v),
            ColoringError::ColorOutOfRange(v) => write!(f, "vertex {} has an invalid color", v),
            ColoringError::Violation(t) => {
                write!(f, "monochromatic triple {{{}, {}, {}}}", t[0], t[1], t[2])
            }
            ColoringError::NotStrongColoring(e) => {
                write!(f, "monochromatic edge {{{}, {}}} in a facet", e[0], e[1])
            }
            ColoringError::UnknownFacet => write!(f, "facet not in complex"),
            ColoringError::Complex(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for ColoringError {}

impl From<ComplexError> for ColoringError {
    fn from(e: ComplexError) -> Self {
        ColoringError::Complex(e)
    }
}

/// A total assignment of colors 1..=k to the vertices of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub k: u32,
    pub assignment: BTreeMap<Vertex, u32>,
}

/// A (k,2)-coloring instance: no constraint triple (3-subset of a
/// facet) may be monochromatic. Facets can be excluded from the
/// constraints.
#[derive(Debug, Clone)]
pub struct ColoringProblem {
    complex: SimplicialComplex,
    k: u32,
    removed_facets: Vec<Vec<Vertex>>,
    /// Deduplicated constraint triples as indices into `labels`.
    triples: Vec<[usize; 3]>,
    labels: Vec<Vertex>,
}

impl ColoringProblem {
    pub fn new(complex: &SimplicialComplex, k: u32, s: u32) -> Result<Self, ColoringError> {
        if s != 2 {
            return Err(ColoringError::UnsupportedS);
        }
        if k < 2 {
            return Err(ColoringError::BadK);
        }
        if complex.dim() < 2 {
            return Err(ColoringError::NotPure);
        }
        let mut problem = ColoringProblem {
            complex: complex.clone(),
            k,
            removed_facets: Vec::new(),
            triples: Vec::new(),
            labels: complex.vertices().to_vec(),
        };
        problem.rebuild_triples();
        Ok(problem)
    }

    /// Excludes a facet's triples from the constraints.
    pub fn remove_facet(&mut self, facet: &[Vertex]) -> Result<(), ColoringError> {
        if !self.complex.contains_facet(facet) {
            return Err(ColoringError::UnknownFacet);
        }
        let mut f = facet.to_vec();
        f.sort_unstable();
        if !self.removed_facets.contains(&f) {
            self.removed_facets.push(f);
            self.rebuild_triples();
        }
        Ok(())
    }

    fn rebuild_triples(&mut self) {
        let index: BTreeMap<Vertex, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut set: BTreeSet<[usize; 3]> = BTreeSet::new();
        for facet in self.complex.facets() {
            if self.removed_facets.contains(facet) {
                continue;
            }
            for t in k_subsets(facet, 3) {
                set.insert([index[&t[0]], index[&t[1]], index[&t[2]]]);
            }
        }
        self.triples = set.into_iter().collect();
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn constraint_triples(&self) -> impl Iterator<Item = [Vertex; 3]> + '_ {
        self.triples
            .iter()
            .map(move |t| [self.labels[t[0]], self.labels[t[1]], self.labels[t[2]]])
    }

    /// Checks a total coloring against all constraint triples.
    pub fn verify(&self, c: &Coloring) -> Result<(), ColoringError> {
        for &v in &self.labels {
            match c.assignment.get(&v) {
                None => return Err(ColoringError::PartialColoring(v)),
                Some(&col) if col == 0 || col > c.k => {
                    return Err(ColoringError::ColorOutOfRange(v))
                }
                _ => {}
            }
        }
        for t in &self.triples {
            let cols: Vec<u32> = t
                .iter()
                .map(|&i| c.assignment[&self.labels[i]])
                .collect();
            if cols[0] == cols[1] && cols[1] == cols[2] {
                return Err(ColoringError::Violation([
                    self.labels[t[0]],
                    self.labels[t[1]],
                    self.labels[t[2]],
                ]));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Colorable,
    NotColorable,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: Status,
    pub witness: Option<Coloring>,
    pub stats: SearchStats,
}

/// One initial coloring of the starting triple.
pub type Seed = [(Vertex, u32); 3];

/// The symmetry-breaking initial configurations on the lexicographically least
/// constraint triple: the three monochromatic-edge patterns with
/// colors 1 and 2, plus (k >= 3) the triple colored 1, 2, 3 in a
/// single fixed permutation.
pub fn seed_configurations(problem: &ColoringProblem) -> Vec<Seed> {
    let t = match problem.triples.first() {
        Some(t) => [
            problem.labels[t[0]],
            problem.labels[t[1]],
            problem.labels[t[2]],
        ],
        // no constraints at all: color everything later by fallback
        None => return alloc::vec![],
    };
    let mut seeds = alloc::vec![
        [(t[0], 1), (t[1], 1), (t[2], 2)],
        [(t[0], 1), (t[1], 2), (t[2], 1)],
        [(t[0], 2), (t[1], 1), (t[2], 1)],
    ];
    if problem.k >= 3 {
        seeds.push([(t[0], 1), (t[1], 2), (t[2], 3)]);
    }
    seeds
}

struct SearchState<'p> {
    problem: &'p ColoringProblem,
    /// per vertex, the completing pairs of its constraint triples
    pairs: Vec<Vec<(usize, usize)>>,
    /// 0 = uncolored
    color: Vec<u32>,
    /// blocked[v*k + (c-1)]: number of triples at v whose other two
    /// vertices are both colored c
    blocked: Vec<u32>,
    /// number of triples at v with both other vertices colored
    colored2: Vec<u32>,
    uncolored: usize,
    stats: SearchStats,
}

impl<'p> SearchState<'p> {
    fn new(problem: &'p ColoringProblem) -> Self {
        let n = problem.labels.len();
        let mut pairs = alloc::vec![Vec::new(); n];
        for t in &problem.triples {
            pairs[t[0]].push((t[1], t[2]));
            pairs[t[1]].push((t[0], t[2]));
            pairs[t[2]].push((t[0], t[1]));
        }
        SearchState {
            problem,
            pairs,
            color: alloc::vec![0; n],
            blocked: alloc::vec![0; n * problem.k as usize],
            colored2: alloc::vec![0; n],
            uncolored: n,
            stats: SearchStats::default(),
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        debug_assert_eq!(self.color[v], 0);
        self.color[v] = c;
        self.uncolored -= 1;
        let k = self.problem.k as usize;
        for i in 0..self.pairs[v].len() {
            let (a, b) = self.pairs[v][i];
            let (ca, cb) = (self.color[a], self.color[b]);
            if ca != 0 && cb == 0 {
                self.colored2[b] += 1;
                if ca == c {
                    self.blocked[b * k + (c - 1) as usize] += 1;
                }
            } else if cb != 0 && ca == 0 {
                self.colored2[a] += 1;
                if cb == c {
                    self.blocked[a * k + (c - 1) as usize] += 1;
                }
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        debug_assert_ne!(c, 0);
        let k = self.problem.k as usize;
        for i in 0..self.pairs[v].len() {
            let (a, b) = self.pairs[v][i];
            let (ca, cb) = (self.color[a], self.color[b]);
            if ca != 0 && cb == 0 {
                self.colored2[b] -= 1;
                if ca == c {
                    self.blocked[b * k + (c - 1) as usize] -= 1;
                }
            } else if cb != 0 && ca == 0 {
                self.colored2[a] -= 1;
                if cb == c {
                    self.blocked[a * k + (c - 1) as usize] -= 1;
                }
            }
        }
        self.color[v] = 0;
        self.uncolored += 1;
    }

    /// Admissible colors for v: not blocked and, for symmetry
    /// breaking, at most one more than the largest color in use.
    fn admissible(&self, v: usize, max_used: u32) -> Vec<u32> {
        let k = self.problem.k as usize;
        let limit = core::cmp::min(max_used + 1, self.problem.k);
        (1..=limit)
            .filter(|&c| self.blocked[v * k + (c - 1) as usize] == 0)
            .collect()
    }

    /// The reachable vertex with the fewest admissible colors, ties
    /// broken by lowest label. Falls back to the lowest-labeled
    /// uncolored vertex when nothing is reachable.
    fn select(&self, max_used: u32) -> Option<(usize, Vec<u32>)> {
        let mut best: Option<(usize, Vec<u32>)> = None;
        for v in 0..self.color.len() {
            if self.color[v] != 0 || self.colored2[v] == 0 {
                continue;
            }
            let adm = self.admissible(v, max_used);
            let better = match &best {
                None => true,
                Some((_, b)) => adm.len() < b.len(),
            };
            if better {
                if adm.is_empty() {
                    return Some((v, adm));
                }
                best = Some((v, adm));
            }
        }
        if best.is_none() {
            // disconnected leftovers (or no colored facet yet)
            if let Some(v) = (0..self.color.len()).find(|&v| self.color[v] == 0) {
                return Some((v, self.admissible(v, max_used)));
            }
        }
        best
    }

    fn dfs(&mut self, max_used: u32, depth: usize) -> bool {
        self.stats.nodes += 1;
        self.stats.max_depth = core::cmp::max(self.stats.max_depth, depth);
        if self.uncolored == 0 {
            return true;
        }
        let (v, admissible) = match self.select(max_used) {
            Some(choice) => choice,
            None => return true,
        };
        for c in admissible {
            self.assign(v, c);
            if self.dfs(core::cmp::max(max_used, c), depth + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }

    fn witness(&self) -> Coloring {
        Coloring {
            k: self.problem.k,
            assignment: self
                .problem
                .labels
                .iter()
                .zip(&self.color)
                .map(|(&v, &c)| (v, c))
                .collect(),
        }
    }
}

/// Exhausts the subtree rooted at one seed configuration.
pub fn search_from_seed(problem: &ColoringProblem, seed: &Seed) -> SearchOutcome {
    let mut state = SearchState::new(problem);
    let index: BTreeMap<Vertex, usize> = problem
        .labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut max_used = 0;
    for &(v, c) in seed {
        state.assign(index[&v], c);
        max_used = core::cmp::max(max_used, c);
    }
    let found = state.dfs(max_used, seed.len());
    SearchOutcome {
        status: if found { Status::Colorable } else { Status::NotColorable },
        witness: if found { Some(state.witness()) } else { None },
        stats: state.stats,
    }
}

/// Full search: tries the seed configurations in order; colorable as
/// soon as one subtree succeeds, not colorable only after all are
/// exhausted.
pub fn search_coloring(problem: &ColoringProblem) -> SearchOutcome {
    let seeds = seed_configurations(problem);
    if seeds.is_empty() {
        // no constraint triples: any assignment works
        let mut state = SearchState::new(problem);
        let found = state.dfs(0, 0);
        debug_assert!(found);
        return SearchOutcome {
            status: Status::Colorable,
            witness: Some(state.witness()),
            stats: state.stats,
        };
    }
    let mut stats = SearchStats::default();
    for seed in &seeds {
        let outcome = search_from_seed(problem, seed);
        stats.nodes += outcome.stats.nodes;
        stats.max_depth = core::cmp::max(stats.max_depth, outcome.stats.max_depth);
        if outcome.status == Status::Colorable {
            return SearchOutcome { stats, ..outcome };
        }
    }
    SearchOutcome {
        status: Status::NotColorable,
        witness: None,
        stats,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticResult {
    Exact(u32),
    ExceedsCap(u32),
}

/// The least k <= k_max admitting a (k,2)-coloring, starting at k=2.
pub fn chromatic_number(
    complex: &SimplicialComplex,
    s: u32,
    k_max: u32,
) -> Result<ChromaticResult, ColoringError> {
    if k_max < 2 {
        return Err(ColoringError::BadK);
    }
    for k in 2..=k_max {
        let problem = ColoringProblem::new(complex, k, s)?;
        if search_coloring(&problem).status == Status::Colorable {
            return Ok(ChromaticResult::Exact(k));
        }
    }
    Ok(ChromaticResult::ExceedsCap(k_max))
}

/// Merges color classes (1,2), (3,4), ... of a strong coloring (no
/// monochromatic edge inside any facet), producing a valid
/// (ceil(k/2), 2)-coloring.
pub fn merge_color_classes(
    complex: &SimplicialComplex,
    c: &Coloring,
) -> Result<Coloring, ColoringError> {
    for &v in complex.vertices() {
        match c.assignment.get(&v) {
            None => return Err(ColoringError::PartialColoring(v)),
            Some(&col) if col == 0 || col > c.k => return Err(ColoringError::ColorOutOfRange(v)),
            _ => {}
        }
    }
    for facet in complex.facets() {
        for e in k_subsets(facet, 2) {
            if c.assignment[&e[0]] == c.assignment[&e[1]] {
                return Err(ColoringError::NotStrongColoring([e[0], e[1]]));
            }
        }
    }
    let merged = Coloring {
        k: c.k.div_ceil(2),
        assignment: c
            .assignment
            .iter()
            .map(|(&v, &col)| (v, col.div_ceil(2)))
            .collect(),
    };
    Ok(merged)
}

//! Maximum-genus embeddings of Steiner triple systems: iterative
//! boundary-cycle expansion (orientable and non-orientable variants),
//! completion to a closed triangulation via a zigzag annulus and a
//! cone apex, and the two-color collar extension of an STS coloring.
//!
//! All vertex labels here are 1-based, matching
//! [`SteinerTripleSystem::complex`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::Coloring;
use crate::complex::{ComplexError, SimplicialComplex, Vertex};
use crate::steiner::SteinerTripleSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    /// star_order does not list exactly the star triples of the base
    /// vertex.
    BadStarOrder,
    /// triple_order does not cover exactly the non-star triples.
    BadTripleOrder,
    /// A vertex of the next triple has no occurrence on the cycle.
    TripleNotOnCycle([Vertex; 3]),
    /// Triples remain pending.
    IncompleteCycle,
    /// The base coloring is not a valid coloring of the STS triples.
    InvalidBaseColoring,
    /// No two-color assignment of the inner cycle is consistent.
    CollarStuck,
    Complex(ComplexError),
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingError::BadStarOrder => write!(f, "star order must arrange the star triples"),
            EmbeddingError::BadTripleOrder => {
                write!(f, "triple order must cover the non-star triples")
            }
            EmbeddingError::TripleNotOnCycle(t) => {
                write!(f, "triple {{{}, {}, {}}} not on cycle", t[0], t[1], t[2])
            }
            EmbeddingError::IncompleteCycle => write!(f, "triples still pending"),
            EmbeddingError::InvalidBaseColoring => write!(f, "base coloring violates a triple"),
            EmbeddingError::CollarStuck => write!(f, "no consistent collar coloring"),
            EmbeddingError::Complex(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for EmbeddingError {}

impl From<ComplexError> for EmbeddingError {
    fn from(e: ComplexError) -> Self {
        EmbeddingError::Complex(e)
    }
}

/// The boundary of the white region: a circular vertex word with
/// repetitions. Index 0 is a fixed origin preserved across rewrites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCycle {
    word: Vec<Vertex>,
}

impl BoundaryCycle {
    pub fn word(&self) -> &[Vertex] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Adjacent pairs including the wrap-around pair.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.word.len())
            .map(move |i| (self.word[i], self.word[(i + 1) % self.word.len()]))
    }
}

#[derive(Debug, Clone)]
pub struct EmbeddingState {
    sts: SteinerTripleSystem,
    star_vertex: Vertex,
    star_order: Vec<[Vertex; 3]>,
    pending: Vec<[Vertex; 3]>,
    cycle: BoundaryCycle,
    handles: usize,
    orientable: bool,
}

/// 1-based sorted triples of the system.
fn labeled_triples(sts: &SteinerTripleSystem) -> Vec<[Vertex; 3]> {
    sts.triples()
        .iter()
        .map(|t| {
            let mut l = [t[0] + 1, t[1] + 1, t[2] + 1];
            l.sort_unstable();
            l
        })
        .collect()
}

fn sorted_copy(t: &[Vertex; 3]) -> [Vertex; 3] {
    let mut s = *t;
    s.sort_unstable();
    s
}

impl EmbeddingState {
    pub fn cycle(&self) -> &BoundaryCycle {
        &self.cycle
    }

    pub fn sts(&self) -> &SteinerTripleSystem {
        &self.sts
    }

    pub fn star_vertex(&self) -> Vertex {
        self.star_vertex
    }

    pub fn star_order(&self) -> &[[Vertex; 3]] {
        &self.star_order
    }

    pub fn handles(&self) -> usize {
        self.handles
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn pending(&self) -> &[[Vertex; 3]] {
        &self.pending
    }

    /// Inserts the next pending triple, expanding the boundary cycle
    /// by three entries.
    pub fn step(&mut self) -> Result<(), EmbeddingError> {
        let triple = match self.pending.first() {
            Some(&t) => t,
            None => return Err(EmbeddingError::IncompleteCycle),
        };
        let last = self.pending.len() == 1;
        let twisted = !self.orientable && last;
        self.cycle = expand_cycle(&self.cycle, &triple, twisted)?;
        self.pending.remove(0);
        self.handles += 1;
        Ok(())
    }

    pub fn run(&mut self) -> Result<(), EmbeddingError> {
        while !self.pending.is_empty() {
            self.step()?;
        }
        Ok(())
    }

    /// Sets up the star embedding with explicit orders without
    /// inserting any non-star triple yet.
    pub fn with_orders(
        sts: &SteinerTripleSystem,
        star_vertex: Vertex,
        star_order: &[[Vertex; 3]],
        triple_order: &[[Vertex; 3]],
        orientable: bool,
    ) -> Result<Self, EmbeddingError> {
        let all = labeled_triples(sts);
        let mut star: Vec<[Vertex; 3]> = all
            .iter()
            .filter(|t| t.contains(&star_vertex))
            .cloned()
            .collect();
        star.sort_unstable();
        let mut rest: Vec<[Vertex; 3]> = all
            .iter()
            .filter(|t| !t.contains(&star_vertex))
            .cloned()
            .collect();
        rest.sort_unstable();
        if star.is_empty() {
            return Err(EmbeddingError::BadStarOrder);
        }

        let star_order: Vec<[Vertex; 3]> = star_order.iter().map(sorted_copy).collect();
        let mut star_sorted = star_order.clone();
        star_sorted.sort_unstable();
        if star_sorted != star {
            return Err(EmbeddingError::BadStarOrder);
        }
        let pending: Vec<[Vertex; 3]> = triple_order.iter().map(sorted_copy).collect();
        let mut pending_sorted = pending.clone();
        pending_sorted.sort_unstable();
        if pending_sorted != rest {
            return Err(EmbeddingError::BadTripleOrder);
        }

        // boundary of the embedded star: for each triple {star, a, b}
        // (a < b) in cyclic order, walk star → a → b
        let mut word = Vec::with_capacity(3 * star_order.len());
        for t in &star_order {
            let others: Vec<Vertex> = t.iter().cloned().filter(|&x| x != star_vertex).collect();
            word.push(star_vertex);
            word.push(others[0]);
            word.push(others[1]);
        }

        Ok(EmbeddingState {
            sts: sts.clone(),
            star_vertex,
            star_order,
            pending,
            cycle: BoundaryCycle { word },
            handles: 0,
            orientable,
        })
    }
}

/// Chooses occurrences by the first-occurrence rule: the triple vertex
/// whose first occurrence from the origin is earliest becomes u, the
/// one appearing first after it becomes v, the third w (wrapping).
/// Writes the cycle as u A v B w C and returns the expansion
/// u A v w C u v B w, or — twisted — u A v w B̄ v u C̄ w. The origin
/// entry stays at index 0.
fn expand_cycle(
    cycle: &BoundaryCycle,
    triple: &[Vertex; 3],
    twisted: bool,
) -> Result<BoundaryCycle, EmbeddingError> {
    let word = &cycle.word;
    let n = word.len();
    let first = |value: Vertex, from: usize| -> Option<usize> {
        (0..n).map(|i| (from + i) % n).find(|&i| word[i] == value)
    };
    let mut firsts: Vec<(usize, Vertex)> = Vec::new();
    for &x in triple {
        match first(x, 0) {
            Some(p) => firsts.push((p, x)),
            None => return Err(EmbeddingError::TripleNotOnCycle(*triple)),
        }
    }
    firsts.sort_unstable();
    let (pu, u) = firsts[0];
    let (rest_a, rest_b) = (firsts[1].1, firsts[2].1);
    let pa = first(rest_a, (pu + 1) % n).unwrap();
    let pb = first(rest_b, (pu + 1) % n).unwrap();
    // circular distance from pu decides which comes next
    let dist = |p: usize| (p + n - pu) % n;
    let (v, w) = if dist(pa) < dist(pb) {
        (rest_a, rest_b)
    } else {
        (rest_b, rest_a)
    };
    let pv = first(v, (pu + 1) % n).unwrap();
    let pw = first(w, (pv + 1) % n).unwrap();

    // rotate so u leads; remember each entry's old index
    let rotated: Vec<(Vertex, Option<usize>)> =
        (0..n).map(|i| (word[(pu + i) % n], Some((pu + i) % n))).collect();
    let iv = dist(pv);
    let iw = {
        let d = (pw + n - pv) % n;
        iv + d
    };
    debug_assert!(0 < iv && iv < iw && iw < n);
    let seg_a = &rotated[1..iv];
    let seg_b = &rotated[iv + 1..iw];
    let seg_c = &rotated[iw + 1..];

    let mut new_word: Vec<(Vertex, Option<usize>)> = Vec::with_capacity(n + 3);
    new_word.push((u, Some(pu)));
    new_word.extend_from_slice(seg_a);
    new_word.push((v, Some(pv)));
    new_word.push((w, None));
    if twisted {
        new_word.extend(seg_b.iter().rev().cloned());
        new_word.push((v, None));
        new_word.push((u, None));
        new_word.extend(seg_c.iter().rev().cloned());
    } else {
        new_word.extend_from_slice(seg_c);
        new_word.push((u, None));
        new_word.push((v, None));
        new_word.extend_from_slice(seg_b);
    }
    new_word.push((w, Some(pw)));

    // restore the origin to index 0
    let origin = new_word
        .iter()
        .position(|&(_, old)| old == Some(0))
        .expect("origin entry survives the rewrite");
    let mut out = Vec::with_capacity(n + 3);
    for i in 0..new_word.len() {
        out.push(new_word[(origin + i) % new_word.len()].0);
    }
    Ok(BoundaryCycle { word: out })
}

/// Sets up the star embedding and inserts all remaining triples.
/// `star_order` defaults to the star triples sorted lexicographically,
/// `triple_order` to the remaining triples sorted lexicographically.
pub fn embed_max_genus(
    sts: &SteinerTripleSystem,
    star_vertex: Vertex,
    star_order: Option<&[[Vertex; 3]]>,
    triple_order: Option<&[[Vertex; 3]]>,
    orientable: bool,
) -> Result<EmbeddingState, EmbeddingError> {
    let all = labeled_triples(sts);
    let mut star_default: Vec<[Vertex; 3]> = all
        .iter()
        .filter(|t| t.contains(&star_vertex))
        .cloned()
        .collect();
    star_default.sort_unstable();
    let mut rest_default: Vec<[Vertex; 3]> = all
        .iter()
        .filter(|t| !t.contains(&star_vertex))
        .cloned()
        .collect();
    rest_default.sort_unstable();
    let mut state = EmbeddingState::with_orders(
        sts,
        star_vertex,
        star_order.unwrap_or(&star_default),
        triple_order.unwrap_or(&rest_default),
        orientable,
    )?;
    state.run()?;
    Ok(state)
}

/// Labels used by [`complete_to_triangulation`]: inner-cycle vertex i
/// (0-based along the boundary word) and the cone apex, for an STS on
/// n points.
pub fn inner_vertex(n: u32, i: usize) -> Vertex {
    n + 1 + i as u32
}

pub fn apex_vertex(n: u32) -> Vertex {
    n + 1 + n * (n - 1) / 2
}

/// Closes the white disk: one fresh inner-cycle vertex per boundary
/// entry, zigzag annulus triangles, and a cone apex over the inner
/// cycle. Together with the STS triples this is a closed surface.
pub fn complete_to_triangulation(
    state: &EmbeddingState,
) -> Result<SimplicialComplex, EmbeddingError> {
    if !state.pending.is_empty() {
        return Err(EmbeddingError::IncompleteCycle);
    }
    let n = state.sts.n();
    let word = state.cycle.word();
    let len = word.len();
    debug_assert_eq!(len as u32, n * (n - 1) / 2);
    let apex = apex_vertex(n);

    let mut facets: Vec<Vec<Vertex>> = labeled_triples(&state.sts)
        .iter()
        .map(|t| t.to_vec())
        .collect();
    for i in 0..len {
        let o1 = word[i];
        let o2 = word[(i + 1) % len];
        let c1 = inner_vertex(n, i);
        let c2 = inner_vertex(n, (i + 1) % len);
        facets.push(alloc::vec![o1, o2, c1]);
        facets.push(alloc::vec![o2, c1, c2]);
        facets.push(alloc::vec![apex, c1, c2]);
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// An STS coloring extended over the annulus and apex: inner-cycle
/// vertices use only colors 1 and 2, the apex color 3.
#[derive(Debug, Clone)]
pub struct CollarColoring {
    pub coloring: Coloring,
}

/// Extends a valid coloring of the STS triples to the completed
/// triangulation. The inner cycle is two-colored by a consistency walk
/// (a toggle rule made total by propagating both start choices).
pub fn collar_coloring(
    state: &EmbeddingState,
    base: &Coloring,
) -> Result<CollarColoring, EmbeddingError> {
    let n = state.sts.n();
    let outer = |v: Vertex| -> Result<u32, EmbeddingError> {
        match base.assignment.get(&v) {
            Some(&c) if c >= 1 && c <= base.k => Ok(c),
            _ => Err(EmbeddingError::InvalidBaseColoring),
        }
    };
    for t in labeled_triples(&state.sts) {
        let (a, b, c) = (outer(t[0])?, outer(t[1])?, outer(t[2])?);
        if a == b && b == c {
            return Err(EmbeddingError::InvalidBaseColoring);
        }
    }
    if !state.pending.is_empty() {
        return Err(EmbeddingError::IncompleteCycle);
    }

    let word = state.cycle.word();
    let len = word.len();
    // constraints on inner colors x_i ∈ {1,2}:
    //   unary: x_i ≠ c if both outer neighbors word[i], word[i+1] have color c
    //   pair (x_i, x_{i+1}): not both equal to the color of word[i+1]
    let oc: Vec<u32> = (0..len).map(|i| base.assignment[&word[i]]).collect();
    let allowed = |i: usize, x: u32| -> bool {
        !(oc[i] == x && oc[(i + 1) % len] == x)
    };
    let pair_ok = |i: usize, x: u32, y: u32| -> bool {
        // edge between x_i and x_{i+1}; shared outer neighbor word[i+1]
        !(x == y && oc[(i + 1) % len] == x)
    };

    let mut solution: Option<Vec<u32>> = None;
    'outer: for start in [1u32, 2] {
        if !allowed(0, start) {
            continue;
        }
        // reachable[i]: bitmask over {1,2}; prev[i][x-1]: predecessor value
        let mut prev = alloc::vec![[0u32; 2]; len];
        let mut reach = alloc::vec![0u8; len];
        reach[0] = 1 << (start - 1);
        for i in 1..len {
            for y in [1u32, 2] {
                if !allowed(i, y) {
                    continue;
                }
                for x in [1u32, 2] {
                    if reach[i - 1] & (1 << (x - 1)) != 0 && pair_ok(i - 1, x, y) {
                        reach[i] |= 1 << (y - 1);
                        prev[i][(y - 1) as usize] = x;
                        break;
                    }
                }
            }
            if reach[i] == 0 {
                continue 'outer;
            }
        }
        for last in [1u32, 2] {
            if reach[len - 1] & (1 << (last - 1)) != 0 && pair_ok(len - 1, last, start) {
                let mut xs = alloc::vec![0u32; len];
                xs[len - 1] = last;
                for i in (1..len).rev() {
                    xs[i - 1] = prev[i][(xs[i] - 1) as usize];
                }
                // the backtrace fixes one path; re-check the wrap pair
                if xs[0] == start {
                    solution = Some(xs);
                    break 'outer;
                }
            }
        }
    }
    let xs = solution.ok_or(EmbeddingError::CollarStuck)?;

    let mut assignment: BTreeMap<Vertex, u32> = base.assignment.clone();
    for (i, &x) in xs.iter().enumerate() {
        assignment.insert(inner_vertex(n, i), x);
    }
    assignment.insert(apex_vertex(n), 3);
    Ok(CollarColoring {
        coloring: Coloring {
            k: core::cmp::max(base.k, 3),
            assignment,
        },
    })
}

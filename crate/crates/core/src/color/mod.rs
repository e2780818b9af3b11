//! Exact coloring oracles: chromatic number, c-colorability, list
//! coloring, and (a:b) set coloring.
//!
//! The decision search is DSATUR-ordered branch and bound with canonical
//! color introduction (a vertex may open at most one fresh color), which is
//! sound because saturation-based selection is invariant under color
//! renaming. Every public oracle re-validates its witness before returning
//! it; an improper witness is a bug and panics.

pub mod fractional;
pub mod product;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("vertex {v} and neighbor {u} share color {color}")]
    Improper { v: usize, u: usize, color: usize },
    #[error("vertex {v} has color {color}, outside palette of size {palette}")]
    OutsidePalette { v: usize, color: usize, palette: usize },
    #[error("coloring covers {got} vertices, graph has {want}")]
    WrongLength { got: usize, want: usize },
}

/// A total assignment of colors `0..palette` to vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Self {
        Coloring { colors, palette }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.n() {
            return Err(ColoringError::WrongLength {
                got: self.colors.len(),
                want: g.n(),
            });
        }
        for (v, &c) in self.colors.iter().enumerate() {
            if c >= self.palette {
                return Err(ColoringError::OutsidePalette {
                    v,
                    color: c,
                    palette: self.palette,
                });
            }
        }
        for &(u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Err(ColoringError::Improper {
                    v,
                    u,
                    color: self.colors[u],
                });
            }
        }
        Ok(())
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        seen.extend(self.colors.iter().copied());
        seen.len()
    }
}

/// Assignment of b-element subsets of a palette `0..a`, disjoint across
/// edges.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetColoring {
    pub sets: Vec<Vec<usize>>,
    pub a: usize,
    pub b: usize,
}

impl SetColoring {
    pub fn validate(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.sets.len() != g.n() {
            return Err(ColoringError::WrongLength {
                got: self.sets.len(),
                want: g.n(),
            });
        }
        for (v, set) in self.sets.iter().enumerate() {
            let distinct: std::collections::BTreeSet<usize> = set.iter().copied().collect();
            if distinct.len() != self.b || set.len() != self.b {
                return Err(ColoringError::WrongLength {
                    got: set.len(),
                    want: self.b,
                });
            }
            for &c in set {
                if c >= self.a {
                    return Err(ColoringError::OutsidePalette {
                        v,
                        color: c,
                        palette: self.a,
                    });
                }
            }
        }
        for &(u, v) in g.edges() {
            for &c in &self.sets[u] {
                if self.sets[v].contains(&c) {
                    return Err(ColoringError::Improper { v, u, color: c });
                }
            }
        }
        Ok(())
    }
}

/// How a chromatic-number value is backed on the low side.
#[derive(Debug, Clone)]
pub enum LowerCert {
    /// A clique of this size exists (clique witness attached).
    Clique(Vec<usize>),
    /// Exhaustive search refuted this many colors.
    ExhaustedSearch(usize),
}

#[derive(Debug, Clone)]
pub enum ChromaticOutcome {
    Exact {
        chi: usize,
        coloring: Coloring,
        lower_cert: LowerCert,
    },
    /// The node budget ran out; best known bounds and coloring.
    Inconclusive {
        lower: usize,
        upper: usize,
        best: Coloring,
    },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Exact { chi, .. } => Some(*chi),
            ChromaticOutcome::Inconclusive { .. } => None,
        }
    }

    pub fn coloring(&self) -> &Coloring {
        match self {
            ChromaticOutcome::Exact { coloring, .. } => coloring,
            ChromaticOutcome::Inconclusive { best, .. } => best,
        }
    }
}

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Exact chromatic number with witness (default search budget).
pub fn chromatic_number(g: &Graph) -> ChromaticOutcome {
    chromatic_number_budgeted(g, DEFAULT_BUDGET)
}

pub fn chromatic_number_budgeted(g: &Graph, budget: u64) -> ChromaticOutcome {
    if g.n() == 0 {
        return ChromaticOutcome::Exact {
            chi: 0,
            coloring: Coloring::new(Vec::new(), 0),
            lower_cert: LowerCert::Clique(Vec::new()),
        };
    }
    let clique = crate::cliques::clique_number(g);
    let greedy = dsatur_greedy(g);
    let mut upper = greedy.distinct_colors();
    let mut best = compact_palette(&greedy);
    let lower = clique.size;
    if lower == upper {
        best.validate(g).expect("greedy coloring must be proper");
        return ChromaticOutcome::Exact {
            chi: lower,
            coloring: best,
            lower_cert: LowerCert::Clique(clique.witness),
        };
    }
    let mut remaining = budget;
    for c in lower..upper {
        match decide_k_colorable(g, c, None, &mut remaining) {
            SearchOutcome::Colorable(col) => {
                col.validate(g).expect("search witness must be proper");
                let cert = if c == lower {
                    LowerCert::Clique(clique.witness)
                } else {
                    LowerCert::ExhaustedSearch(c - 1)
                };
                return ChromaticOutcome::Exact {
                    chi: c,
                    coloring: col,
                    lower_cert: cert,
                };
            }
            SearchOutcome::Uncolorable => continue,
            SearchOutcome::BudgetExceeded => {
                return ChromaticOutcome::Inconclusive {
                    lower: c,
                    upper,
                    best,
                };
            }
        }
    }
    // Refuted everything below the greedy bound: the greedy value is exact.
    upper = best.palette;
    ChromaticOutcome::Exact {
        chi: upper,
        coloring: best,
        lower_cert: LowerCert::ExhaustedSearch(upper - 1),
    }
}

/// A proper c-coloring, or `None` after exhaustive search.
pub fn k_colorable(g: &Graph, c: usize) -> Option<Coloring> {
    let mut budget = DEFAULT_BUDGET;
    match decide_k_colorable(g, c, None, &mut budget) {
        SearchOutcome::Colorable(col) => {
            col.validate(g).expect("search witness must be proper");
            Some(col)
        }
        SearchOutcome::Uncolorable => None,
        SearchOutcome::BudgetExceeded => panic!(
            "k_colorable exhausted its default budget; use decide_k_colorable for bounded runs"
        ),
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Colorable(Coloring),
    Uncolorable,
    BudgetExceeded,
}

/// Bounded c-colorability decision. `order`, when given, fixes the static
/// assignment order instead of dynamic saturation selection (useful when
/// the caller knows the instance's structure).
pub fn decide_k_colorable(
    g: &Graph,
    c: usize,
    order: Option<&[usize]>,
    budget: &mut u64,
) -> SearchOutcome {
    if g.n() == 0 {
        return SearchOutcome::Colorable(Coloring::new(Vec::new(), c));
    }
    if c == 0 {
        return SearchOutcome::Uncolorable;
    }
    assert!(c <= 64, "palette is limited to 64 colors");
    let mut colors = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let (sub, back) = g.induced(&comp);
        let local_order: Option<Vec<usize>> = order.map(|o| {
            let mut inv = vec![usize::MAX; g.n()];
            for (i, &v) in back.iter().enumerate() {
                inv[v] = i;
            }
            o.iter().filter(|&&v| inv[v] != usize::MAX).map(|&v| inv[v]).collect()
        });
        match color_component(&sub, c, local_order.as_deref(), budget) {
            SearchOutcome::Colorable(col) => {
                for (i, &v) in back.iter().enumerate() {
                    colors[v] = col.colors[i];
                }
            }
            other => return other,
        }
    }
    SearchOutcome::Colorable(Coloring::new(colors, c))
}

fn color_component(
    g: &Graph,
    c: usize,
    order: Option<&[usize]>,
    budget: &mut u64,
) -> SearchOutcome {
    let n = g.n();
    // Fast path: greedy suffices when the palette is large.
    let greedy = dsatur_greedy(g);
    if greedy.distinct_colors() <= c {
        return SearchOutcome::Colorable(Coloring::new(greedy.colors, c));
    }
    let mut st = ColorSearch {
        g,
        c,
        order,
        colors: vec![usize::MAX; n],
        neighbor_colors: vec![0u64; n],
        assigned: 0,
        max_used: 0,
        budget,
    };
    if st.dive() {
        SearchOutcome::Colorable(Coloring::new(st.colors, c))
    } else if *st.budget == 0 {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::Uncolorable
    }
}

struct ColorSearch<'a> {
    g: &'a Graph,
    c: usize,
    order: Option<&'a [usize]>,
    colors: Vec<usize>,
    /// Bitmask of colors on already-colored neighbors.
    neighbor_colors: Vec<u64>,
    assigned: usize,
    max_used: usize,
    budget: &'a mut u64,
}

impl<'a> ColorSearch<'a> {
    fn dive(&mut self) -> bool {
        if self.assigned == self.g.n() {
            return true;
        }
        if *self.budget == 0 {
            return false;
        }
        *self.budget -= 1;
        let v = match self.order {
            Some(order) => order[self.assigned],
            None => self.pick_most_saturated(),
        };
        debug_assert_eq!(self.colors[v], usize::MAX);
        // Canonical introduction: at most one color beyond those in use.
        let limit = (self.max_used + 1).min(self.c - 1);
        for col in 0..=limit {
            if self.neighbor_colors[v] >> col & 1 == 1 {
                continue;
            }
            let old_max = self.max_used;
            self.colors[v] = col;
            self.max_used = self.max_used.max(col);
            self.assigned += 1;
            let mut touched = Vec::new();
            for u in self.g.neighbors(v).iter() {
                if self.colors[u] == usize::MAX && self.neighbor_colors[u] >> col & 1 == 0 {
                    self.neighbor_colors[u] |= 1 << col;
                    touched.push(u);
                }
            }
            // Forward check: any uncolored vertex with a full mask is dead.
            let full = if self.c == 64 { u64::MAX } else { (1 << self.c) - 1 };
            let dead = touched
                .iter()
                .any(|&u| self.neighbor_colors[u] & full == full);
            if !dead && self.dive() {
                return true;
            }
            for u in touched {
                self.neighbor_colors[u] &= !(1 << col);
            }
            self.colors[v] = usize::MAX;
            self.assigned -= 1;
            self.max_used = old_max;
            if *self.budget == 0 {
                return false;
            }
        }
        false
    }

    fn pick_most_saturated(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize, 0usize);
        for v in 0..self.g.n() {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let sat = self.neighbor_colors[v].count_ones() as usize;
            let deg = self.g.degree(v);
            let key = (sat, deg, self.g.n() - v);
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
            }
        }
        best
    }
}

/// DSATUR greedy coloring: most saturated first, ties by degree then
/// lowest id. Deterministic; used for upper bounds and heuristic
/// witnesses.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut sat: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), n - v))
            .unwrap();
        let mut col = 0;
        while sat[v].contains(&col) {
            col += 1;
        }
        colors[v] = col;
        for u in g.neighbors(v).iter() {
            sat[u].insert(col);
        }
    }
    let palette = colors.iter().copied().max().map_or(0, |m| m + 1);
    Coloring::new(colors, palette)
}

fn compact_palette(col: &Coloring) -> Coloring {
    Coloring::new(col.colors.clone(), col.distinct_colors().max(
        col.colors.iter().copied().max().map_or(0, |m| m + 1),
    ))
}

/// Proper coloring with every vertex colored from its own list, or `None`
/// after exhaustive search. Lists must cover all vertices.
pub fn list_color(g: &Graph, lists: &[Vec<usize>]) -> Option<Coloring> {
    assert_eq!(lists.len(), g.n(), "one list per vertex");
    let n = g.n();
    let lists: Vec<VertexSet> = lists
        .iter()
        .map(|l| {
            let cap = l.iter().copied().max().map_or(1, |m| m + 1);
            VertexSet::from_iter(cap.max(1), l.iter().copied())
        })
        .collect();
    let mut colors = vec![usize::MAX; n];
    if list_color_rec(g, &lists, &mut colors) {
        let palette = colors.iter().copied().max().map_or(0, |m| m + 1);
        let col = Coloring::new(colors, palette);
        col.validate(g).expect("list coloring witness must be proper");
        Some(col)
    } else {
        None
    }
}

fn list_color_rec(g: &Graph, lists: &[VertexSet], colors: &mut Vec<usize>) -> bool {
    // Most constrained vertex: fewest remaining choices.
    let mut pick = None;
    let mut pick_choices = usize::MAX;
    for v in 0..g.n() {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut avail = lists[v].clone();
        for u in g.neighbors(v).iter() {
            if colors[u] != usize::MAX && colors[u] < avail.capacity() {
                avail.remove(colors[u]);
            }
        }
        let k = avail.len();
        if k == 0 {
            return false;
        }
        if k < pick_choices {
            pick_choices = k;
            pick = Some((v, avail));
        }
    }
    let Some((v, avail)) = pick else {
        return true;
    };
    for col in avail.iter() {
        colors[v] = col;
        if list_color_rec(g, lists, colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// An (a:b)-coloring (b-subsets of `0..a`, disjoint across edges), or
/// `None` after exhaustive search. Requires `a >= b >= 1`.
pub fn ab_coloring(g: &Graph, a: usize, b: usize) -> Result<Option<SetColoring>, AbColoringError> {
    if b < 1 || a < b {
        return Err(AbColoringError::BadParameters { a, b });
    }
    assert!(a <= 64, "set-coloring palette is limited to 64 colors");
    let subsets = combinations(a, b);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut masks = vec![0u64; g.n()];
    let mut chosen = vec![usize::MAX; g.n()];
    if ab_rec(g, &subsets, &order, 0, &mut masks, &mut chosen) {
        let sets: Vec<Vec<usize>> = chosen
            .iter()
            .map(|&i| mask_to_set(subsets[i]))
            .collect();
        let sc = SetColoring { sets, a, b };
        sc.validate(g).expect("set coloring witness must be valid");
        Ok(Some(sc))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Error)]
pub enum AbColoringError {
    #[error("(a:b)-coloring needs a >= b >= 1, got a={a}, b={b}")]
    BadParameters { a: usize, b: usize },
}

fn ab_rec(
    g: &Graph,
    subsets: &[u64],
    order: &[usize],
    idx: usize,
    masks: &mut Vec<u64>,
    chosen: &mut Vec<usize>,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    for (i, &s) in subsets.iter().enumerate() {
        if s & masks[v] != 0 {
            continue;
        }
        chosen[v] = i;
        let mut touched = Vec::new();
        for u in g.neighbors(v).iter() {
            if chosen[u] == usize::MAX {
                touched.push((u, masks[u]));
                masks[u] |= s;
            }
        }
        if ab_rec(g, subsets, order, idx + 1, masks, chosen) {
            return true;
        }
        for (u, old) in touched {
            masks[u] = old;
        }
        chosen[v] = usize::MAX;
    }
    false
}

fn combinations(a: usize, b: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..b).collect();
    loop {
        out.push(cur.iter().fold(0u64, |m, &i| m | 1 << i));
        // next combination in lex order
        let mut i = b;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + a - b {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..b {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn mask_to_set(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::rng::SplitMix64;

    #[test]
    fn chromatic_known_values() {
        assert_eq!(chromatic_number(&Graph::complete(5)).exact(), Some(5));
        assert_eq!(chromatic_number(&Graph::cycle(5)).exact(), Some(3));
        assert_eq!(chromatic_number(&Graph::petersen()).exact(), Some(3));
        assert_eq!(
            chromatic_number(&crate::construct::grotzsch_graph()).exact(),
            Some(4)
        );
        assert_eq!(chromatic_number(&Graph::empty(3)).exact(), Some(1));
    }

    #[test]
    fn chromatic_matches_brute_force() {
        let mut rng = SplitMix64::new(41);
        for n in 1..=9usize {
            for _ in 0..25 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.next_bool(0.45))
                    .collect();
                let g = Graph::from_edges(n, edges).unwrap();
                assert_eq!(
                    chromatic_number(&g).exact(),
                    Some(brute::chi(&g)),
                    "mismatch on {g:?}"
                );
            }
        }
    }

    #[test]
    fn k_colorable_examples() {
        assert!(k_colorable(&Graph::cycle(5), 2).is_none());
        assert!(k_colorable(&Graph::cycle(5), 3).is_some());
        assert!(k_colorable(&Graph::complete(4), 3).is_none());
        // Strong 2-blowup of C5 needs 5 colors.
        let s = crate::construct::strong_p_blowup(&Graph::cycle(5), 2);
        assert!(k_colorable(&s, 4).is_none());
        assert_eq!(chromatic_number(&s).exact(), Some(5));
    }

    #[test]
    fn list_color_examples() {
        // Single vertex with an off-palette list.
        let g = Graph::empty(1);
        let col = list_color(&g, &[vec![7]]).unwrap();
        assert_eq!(col.colors, vec![7]);
        // K3 with identical singleton lists is infeasible.
        assert!(list_color(&Graph::complete(3), &[vec![1], vec![1], vec![1]]).is_none());
        // Planar graphs are colorable from any lists of size 5.
        let wheel = crate::construct::add_universal(&Graph::cycle(5), 1);
        let lists: Vec<Vec<usize>> = (0..wheel.n()).map(|_| (0..5).collect()).collect();
        assert!(list_color(&wheel, &lists).is_some());
        // Brooks-style sanity: lists of different sizes and offsets.
        let lists = vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3], vec![0, 3], vec![1, 3]];
        let g = Graph::cycle(6);
        let col = list_color(&g, &lists).unwrap();
        for (v, l) in lists.iter().enumerate() {
            assert!(l.contains(&col.colors[v]));
        }
    }

    #[test]
    fn ab_coloring_examples() {
        // The cyclic (5:2)-coloring of C5 exists.
        let c5 = Graph::cycle(5);
        assert!(ab_coloring(&c5, 5, 2).unwrap().is_some());
        // (4:2) does not: chi_f(C5) = 5/2 > 2.
        assert!(ab_coloring(&c5, 4, 2).unwrap().is_none());
        assert!(ab_coloring(&c5, 2, 3).is_err());
        // b = 1 degenerates to ordinary coloring.
        let mut rng = SplitMix64::new(4);
        for n in 1..=6usize {
            for _ in 0..10 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.next_bool(0.5))
                    .collect();
                let g = Graph::from_edges(n, edges).unwrap();
                for c in 1..=4usize {
                    assert_eq!(
                        ab_coloring(&g, c, 1).unwrap().is_some(),
                        k_colorable(&g, c).is_some(),
                        "b=1 degeneration mismatch on {g:?} with c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_reports_inconclusive() {
        let g = Graph::petersen();
        match chromatic_number_budgeted(&g, 1) {
            ChromaticOutcome::Inconclusive { lower, upper, best } => {
                assert!(lower <= upper);
                best.validate(&g).unwrap();
            }
            ChromaticOutcome::Exact { .. } => {
                // Fine too: the clique bound may close the gap without search.
            }
        }
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        let combos = combinations(4, 2);
        assert_eq!(combos.len(), 6);
        assert_eq!(mask_to_set(combos[0]), vec![0, 1]);
        assert_eq!(mask_to_set(combos[5]), vec![2, 3]);
    }
}

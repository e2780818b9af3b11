//! The two constructive coloring procedures over tree products, and the
//! chromatic-gap check they combine into.
//!
//! The upper-bound colorer paints each copy of G with a palette block
//! selected by the base-graph color of its level. The witness extractor
//! walks one root-to-leaf path, at each level choosing a copy vertex whose
//! color avoids the recent progenitors; the collected colors form a proper
//! coloring of the strong blowup of the base graph, which pins a distinct-
//! color count of at least p * chi_f(H0).

use super::{chromatic_number, k_colorable, ChromaticOutcome, Coloring};
use crate::construct::{p_blowup, strong_p_blowup, tree_product, ConstructError, TreeProduct};
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProductColorError {
    #[error("supplied base coloring is improper: {0}")]
    ImproperBaseColoring(#[from] super::ColoringError),
    #[error("base coloring uses {got} colors, caller promised at most {want}")]
    PaletteTooLarge { got: usize, want: usize },
    #[error("product was not built over the {p}-blowup of the given base graph")]
    NotABlowupProduct { p: usize },
}

/// Proper coloring of `tp.product` with at most `c * chi(G)` colors.
///
/// `tp` must have been built over the p-blowup of `h0`; `h0_coloring` is a
/// proper coloring of `h0` with at most `c` colors (computed exactly when
/// not supplied).
pub fn product_color_upper(
    tp: &TreeProduct,
    h0: &Graph,
    p: usize,
    c: usize,
    h0_coloring: Option<&Coloring>,
) -> Result<Coloring, ProductColorError> {
    check_blowup_product(tp, h0, p)?;
    let base = match h0_coloring {
        Some(col) => {
            col.validate(h0)?;
            col.clone()
        }
        None => match chromatic_number(h0) {
            ChromaticOutcome::Exact { coloring, .. } => coloring,
            ChromaticOutcome::Inconclusive { best, .. } => best,
        },
    };
    if base.distinct_colors() > c {
        return Err(ProductColorError::PaletteTooLarge {
            got: base.distinct_colors(),
            want: c,
        });
    }
    // Exact coloring of G, reused as the pattern inside every copy.
    let g_coloring = match chromatic_number(tp.g()) {
        ChromaticOutcome::Exact { coloring, .. } => coloring,
        ChromaticOutcome::Inconclusive { best, .. } => best,
    };
    let chi_g = g_coloring.distinct_colors();

    // Level i (1-based) carries blowup position i-1, whose base vertex in
    // h0 is (i-1)/p; its h0-color selects the palette block.
    let mut colors = vec![0usize; tp.product.n()];
    for pv in 0..tp.product.n() {
        let (_, base_vertex) = tp.copy_of(pv);
        let level = tp.level(pv);
        let h0_vertex = (level - 1) / p;
        let block = base.colors[h0_vertex];
        colors[pv] = block * chi_g + g_coloring.colors[base_vertex];
    }
    let out = Coloring::new(colors, c * chi_g);
    out.validate(&tp.product)
        .expect("palette-block product coloring must be proper");
    Ok(out)
}

fn check_blowup_product(tp: &TreeProduct, h0: &Graph, p: usize) -> Result<(), ProductColorError> {
    let expect = p_blowup(h0, p);
    if tp.h().order() != expect.order() || tp.h().graph != expect.graph {
        return Err(ProductColorError::NotABlowupProduct { p });
    }
    Ok(())
}

/// Why extraction stopped short.
#[derive(Debug, Error)]
#[error(
    "extraction stuck at level {level}: the copy shows {distinct} distinct colors \
     but all of them appear on the recent progenitors"
)]
pub struct ExtractionStuck {
    pub level: usize,
    pub distinct: usize,
}

/// Result of a successful witness extraction.
#[derive(Debug, Clone)]
pub struct BlowupWitness {
    /// Coloring of the blowup H (one color per level, in level order).
    pub psi: Coloring,
    pub distinct_colors: usize,
    /// The chosen root-to-leaf copy path (tree node per level).
    pub path: Vec<usize>,
}

/// Extracts a coloring of H from a proper coloring of the product by
/// walking a root-to-leaf path; at level i the chosen vertex's color must
/// avoid the progenitors of levels >= i - p + 1 (ties to the lowest base
/// vertex id). On success, psi is proper on the strong p-blowup of h0.
pub fn extract_blowup_witness(
    tp: &TreeProduct,
    phi: &Coloring,
    h0: &Graph,
    p: usize,
) -> Result<BlowupWitness, ExtractError> {
    phi.validate(&tp.product)
        .map_err(ExtractError::ImproperProductColoring)?;
    check_blowup_product(tp, h0, p).map_err(|_| ExtractError::NotABlowupProduct { p })?;
    let k = tp.k;
    let mut psi = Vec::with_capacity(k);
    let mut path = Vec::with_capacity(k);
    let mut chosen_vertices: Vec<usize> = Vec::with_capacity(k);
    let mut node = 0usize;
    for level in 1..=k {
        let forbidden: std::collections::BTreeSet<usize> = chosen_vertices
            [level.saturating_sub(p)..]
            .iter()
            .map(|&pv| phi.colors[pv])
            .collect();
        let pick = (0..tp.n)
            .map(|v| tp.product_vertex(node, v))
            .find(|&pv| !forbidden.contains(&phi.colors[pv]));
        let Some(pv) = pick else {
            let distinct: std::collections::BTreeSet<usize> = (0..tp.n)
                .map(|v| phi.colors[tp.product_vertex(node, v)])
                .collect();
            return Err(ExtractError::Stuck(ExtractionStuck {
                level,
                distinct: distinct.len(),
            }));
        };
        psi.push(phi.colors[pv]);
        path.push(node);
        chosen_vertices.push(pv);
        if level < k {
            node = tp.node_child(node, pv % tp.n).expect("inner node has children");
        }
    }
    let psi = Coloring::new(psi, phi.palette);
    // The guarantee: psi properly colors the strong p-blowup of h0.
    let strong = strong_p_blowup(h0, p);
    psi.validate(&strong)
        .expect("extracted coloring must be proper on the strong blowup");
    let distinct = psi.distinct_colors();
    Ok(BlowupWitness {
        psi,
        distinct_colors: distinct,
        path,
    })
}

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("product coloring is improper: {0}")]
    ImproperProductColoring(super::ColoringError),
    #[error("product was not built over the {p}-blowup of the given base graph")]
    NotABlowupProduct { p: usize },
    #[error(transparent)]
    Stuck(ExtractionStuck),
}

/// Outcome of the chromatic-gap check on T(g0, K_{k0 x 4}).
#[derive(Debug)]
pub struct GapReport {
    pub g0_three_colorable: bool,
    /// Colors used by the constructive product coloring (upper branch only).
    pub constructive_upper: Option<usize>,
    pub exact_chi: Option<usize>,
    pub chi_lower: usize,
    pub chi_upper: usize,
    pub product_vertices: usize,
    /// Whether this instance lands in the promised branch: chi <= 3*k0 when
    /// g0 is 3-colorable, chi >= 4*k0 otherwise. `None` if the exact value
    /// stayed out of reach.
    pub dichotomy_holds: Option<bool>,
}

#[derive(Debug, Error)]
pub enum GapError {
    #[error("g0 must be planar for the gap check")]
    NotPlanar,
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Builds T(g0, K_{k0 x 4}) and reports both sides of the 3k0 / 4k0 gap.
pub fn reduction_gap_check(g0: &Graph, k0: usize, size_limit: usize) -> Result<GapReport, GapError> {
    if crate::planar::planar_embedding(g0).is_none() {
        return Err(GapError::NotPlanar);
    }
    let h0 = Graph::complete(k0);
    let h = p_blowup(&h0, 4);
    let tp = tree_product(g0, &h, size_limit)?;

    let three = k_colorable(g0, 3);
    let constructive_upper = if three.is_some() {
        // chi(K_{k0}) = k0 colors on the base; blocks of size chi(g0) <= 3.
        let col = product_color_upper(&tp, &h0, 4, k0, None)
            .expect("gap construction uses a valid blowup product");
        Some(col.distinct_colors())
    } else {
        None
    };

    let (exact_chi, chi_lower, chi_upper) = match chromatic_number(&tp.product) {
        ChromaticOutcome::Exact { chi, .. } => (Some(chi), chi, chi),
        ChromaticOutcome::Inconclusive { lower, upper, .. } => (None, lower, upper),
    };

    let dichotomy_holds = exact_chi.map(|chi| {
        if three.is_some() {
            chi <= 3 * k0
        } else {
            chi >= 4 * k0
        }
    });
    Ok(GapReport {
        g0_three_colorable: three.is_some(),
        constructive_upper,
        exact_chi,
        chi_lower,
        chi_upper,
        product_vertices: tp.product.n(),
        dichotomy_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::complete_multipartite;
    use crate::graph::OrderedGraph;

    #[test]
    fn upper_colorer_on_disjoint_copies() {
        // T(K4, K_{1x4}): h0 = K1, p = 4, c = 1: a plain 4-coloring.
        let g = Graph::complete(4);
        let h = complete_multipartite(1, 4);
        let tp = tree_product(&g, &h, 1000).unwrap();
        let col = product_color_upper(&tp, &Graph::complete(1), 4, 1, None).unwrap();
        assert_eq!(col.distinct_colors(), 4);
    }

    #[test]
    fn upper_colorer_budgets() {
        // T(K2, 1-blowup of K2): c * chi(g) = 2 * 2.
        let g = Graph::complete(2);
        let h = p_blowup(&Graph::complete(2), 1);
        let tp = tree_product(&g, &h, 1000).unwrap();
        let col = product_color_upper(&tp, &Graph::complete(2), 1, 2, None).unwrap();
        assert!(col.distinct_colors() <= 4);

        // T(K3, K_{2x2}): c * chi(g) = 2 * 3.
        let g = Graph::complete(3);
        let h = complete_multipartite(2, 2);
        let tp = tree_product(&g, &h, 1000).unwrap();
        let col = product_color_upper(&tp, &Graph::complete(2), 2, 2, None).unwrap();
        assert!(col.distinct_colors() <= 6);
    }

    #[test]
    fn upper_colorer_rejects_improper_base() {
        let g = Graph::complete(2);
        let h = p_blowup(&Graph::complete(2), 1);
        let tp = tree_product(&g, &h, 1000).unwrap();
        let bad = Coloring::new(vec![0, 0], 2);
        assert!(matches!(
            product_color_upper(&tp, &Graph::complete(2), 1, 2, Some(&bad)),
            Err(ProductColorError::ImproperBaseColoring(_))
        ));
    }

    #[test]
    fn extraction_on_k4_levels() {
        // T(K4, K_{1x4}), any proper 4-coloring: psi uses exactly 4 colors.
        let g = Graph::complete(4);
        let h = complete_multipartite(1, 4);
        let tp = tree_product(&g, &h, 1000).unwrap();
        let phi = k_colorable(&tp.product, 4).unwrap();
        let w = extract_blowup_witness(&tp, &phi, &Graph::complete(1), 4).unwrap();
        assert_eq!(w.distinct_colors, 4);
        assert_eq!(w.psi.colors.len(), 4);
    }

    #[test]
    fn extraction_gets_stuck_when_palette_small() {
        // T(K2, K_{1x4}) with a 2-coloring: stuck by level 3.
        let g = Graph::complete(2);
        let h = complete_multipartite(1, 4);
        let tp = tree_product(&g, &h, 1000).unwrap();
        let phi = k_colorable(&tp.product, 2).unwrap();
        match extract_blowup_witness(&tp, &phi, &Graph::complete(1), 4) {
            Err(ExtractError::Stuck(s)) => {
                assert!(s.level <= 3);
                assert!(s.distinct < 4);
            }
            other => panic!("expected stuck, got {other:?}"),
        }
    }

    #[test]
    fn extraction_strong_blowup_bound() {
        // T(K4, K_{2x2}): h0 = K2, p = 2; psi is proper on K4, >= 4 colors.
        let g = Graph::complete(4);
        let h = complete_multipartite(2, 2);
        let tp = tree_product(&g, &h, 100_000).unwrap();
        let phi = super::super::dsatur_greedy(&tp.product);
        let w = extract_blowup_witness(&tp, &phi, &Graph::complete(2), 2).unwrap();
        assert!(w.distinct_colors >= 4);
    }

    #[test]
    fn gap_check_small_instances() {
        // K3 is 3-colorable: product chi <= 3.
        let r = reduction_gap_check(&Graph::complete(3), 1, 100_000).unwrap();
        assert!(r.g0_three_colorable);
        assert_eq!(r.exact_chi, Some(3));
        assert_eq!(r.dichotomy_holds, Some(true));
        assert_eq!(r.product_vertices, 120);

        // K4 is not: product chi = 4 = 4 * k0.
        let r = reduction_gap_check(&Graph::complete(4), 1, 100_000).unwrap();
        assert!(!r.g0_three_colorable);
        assert_eq!(r.exact_chi, Some(4));
        assert_eq!(r.dichotomy_holds, Some(true));
        assert_eq!(r.product_vertices, 340);

        // C5 is 3-colorable.
        let r = reduction_gap_check(&Graph::cycle(5), 1, 100_000).unwrap();
        assert!(r.exact_chi.unwrap() <= 3);

        // Non-planar inputs are rejected.
        assert!(matches!(
            reduction_gap_check(&Graph::complete(5), 1, 100_000),
            Err(GapError::NotPlanar)
        ));
    }

    #[test]
    fn witness_extraction_rejects_non_blowup() {
        let g = Graph::complete(3);
        let h = OrderedGraph::identity(Graph::cycle(4));
        let tp = tree_product(&g, &h, 100_000).unwrap();
        let phi = super::super::dsatur_greedy(&tp.product);
        assert!(matches!(
            extract_blowup_witness(&tp, &phi, &Graph::complete(2), 2),
            Err(ExtractError::NotABlowupProduct { .. })
        ));
    }
}

//! Certified brackets for the cop count: every inequality the library can
//! check is evaluated on the input graph and composed into [lo, hi], with
//! one named entry per bound so a report never hides which argument fired.

use crate::config::Limits;
use crate::decomposition::{treewidth_exact, TreeDecomposition};
use crate::error::{Error, Result};
use crate::generators::{self, ProductSpec};
use crate::graph::{Graph, VertexSet};
use crate::interval::{self, IntervalRepresentation};
use crate::solver;
use crate::strategies::is_k_wide;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One evaluated inequality. `value: None` means the bound did not apply;
/// `note` then carries the reason instead of the certificate summary.
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: Option<usize>,
    pub note: String,
}

impl BoundEntry {
    fn applies(name: &'static str, kind: BoundKind, value: usize, note: String) -> Self {
        BoundEntry {
            name,
            kind,
            value: Some(value),
            note,
        }
    }

    fn skipped(name: &'static str, kind: BoundKind, reason: String) -> Self {
        BoundEntry {
            name,
            kind,
            value: None,
            note: reason,
        }
    }
}

/// All bound entries for one graph plus the composed bracket. When the exact
/// solver fit in the budget, `exact` carries the true value (already checked
/// against the bracket).
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub bracket: (usize, usize),
    pub exact: Option<usize>,
}

/// Optional structure the caller knows about the graph; each hint unlocks
/// the bounds that need it.
#[derive(Default)]
pub struct BoundHints {
    pub representation: Option<IntervalRepresentation>,
    pub product: Option<ProductSpec>,
    pub decomposition: Option<TreeDecomposition>,
}

/// Largest k for which some induced subgraph is k-wide, by exhaustive search
/// over connected induced subgraphs, with the witness. The robber can defend
/// such a subgraph against k−1 cops, so c ≥ k.
pub fn lower_bound_wide(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("wideness search needs a nonempty graph"));
    }
    if n > limits.wide_search_n {
        return Err(Error::capability(format!(
            "exhaustive wideness search is capped at {} vertices, got {n}",
            limits.wide_search_n
        )));
    }
    let mut best = 0usize;
    let mut witness = VertexSet::empty(n);
    for mask in 1u64..1 << n {
        let h = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if h.len() <= best {
            continue;
        }
        // Wideness of a fixed subgraph is monotone in k downward, so only
        // probe k values that would improve the best.
        let mut k = best + 1;
        while k <= h.len() && is_k_wide(g, &h, k, limits)? {
            best = k;
            witness = h.clone();
            k += 1;
        }
    }
    Ok((best, witness))
}

/// The degree-treewidth sandwich: ⌈(tw+1)/(Δ+1)⌉ ≤ c ≤ tw+1.
pub fn bounds_treewidth(g: &Graph, limits: &Limits) -> Result<(usize, usize)> {
    let (tw, _) = treewidth_exact(g, limits.treewidth_n)?;
    let delta = g.max_degree();
    Ok(((tw + 1).div_ceil(delta + 1), tw + 1))
}

/// Domination upper bound: one cop parked on each vertex of a dominating
/// set leaves the robber nowhere to stand that is not adjacent to a cop.
pub fn upper_bound_domination(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let (gamma, set) = g.domination_number_exact(limits.domination_n)?;
    Ok((gamma, set))
}

/// Lifting bound across a Cartesian product: one fiber of real cops per
/// virtual cop on the first factor.
pub fn upper_bound_product(spec: &ProductSpec, factor_cop_number: usize) -> Result<usize> {
    if spec.factors.is_empty() {
        return Err(Error::input("product bound needs at least one factor"));
    }
    let n = spec.product_size();
    let n1 = spec.factors[0].vertex_count();
    if n1 == 0 {
        return Err(Error::input("product factors must be nonempty"));
    }
    Ok((n * factor_cop_number).div_ceil(n1))
}

/// Finite instantiation of the hypercube bracket at dimension m: dominating
/// set size as the upper bound, the treewidth sandwich as the lower bound
/// where the exact treewidth is still computable.
#[derive(Clone, Debug)]
pub struct HypercubeBracket {
    pub m: usize,
    /// ⌈(tw+1)/(m+1)⌉ with exact treewidth; None once 2^m outgrows the DP.
    pub lower: Option<usize>,
    pub upper: usize,
}

pub fn hypercube_bracket(m: usize, limits: &Limits) -> Result<HypercubeBracket> {
    if m == 0 {
        return Err(Error::input("hypercube bracket needs m ≥ 1"));
    }
    let upper = generators::hypercube_dominating_set(m)?.len();
    let lower = if 1usize << m <= limits.treewidth_n {
        let q = generators::hypercube(m)?;
        let (tw, _) = treewidth_exact(&q, limits.treewidth_n)?;
        Some((tw + 1).div_ceil(m + 1))
    } else {
        None
    };
    Ok(HypercubeBracket { m, lower, upper })
}

fn set_summary(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().take(12).map(|v| v.to_string()).collect();
    if s.len() > 12 {
        format!("{{{}, ...}} ({} vertices)", items.join(", "), s.len())
    } else {
        format!("{{{}}}", items.join(", "))
    }
}

/// Evaluates every applicable bound on `g` and composes the bracket.
/// Individual size-limit refusals become inapplicable entries; a bracket
/// that crosses (lo > hi) or misses the solved value is an internal error,
/// since it means some certificate lied.
pub fn compose(g: &Graph, hints: &BoundHints, limits: &Limits) -> Result<BoundReport> {
    if g.vertex_count() == 0 {
        return Err(Error::input("bounds need a nonempty graph"));
    }
    if !g.is_connected() {
        return Err(Error::input("bounds are defined for connected graphs"));
    }
    let mut entries = Vec::new();

    entries.push(BoundEntry::applies(
        "trivial",
        BoundKind::Lower,
        1,
        "a connected nonempty graph needs at least one cop".into(),
    ));

    entries.push(match lower_bound_wide(g, limits) {
        Ok((k, h)) => BoundEntry::applies(
            "wide-subgraph",
            BoundKind::Lower,
            k,
            format!("{k}-wide induced subgraph on {}", set_summary(&h)),
        ),
        Err(Error::Capability(reason)) => {
            BoundEntry::skipped("wide-subgraph", BoundKind::Lower, reason)
        }
        Err(e) => return Err(e),
    });

    let tw = match treewidth_exact(g, limits.treewidth_n) {
        Ok((tw, _)) => Some(tw),
        Err(Error::Capability(_)) => None,
        Err(e) => return Err(e),
    };
    let delta = g.max_degree();
    entries.push(match tw {
        Some(tw) => BoundEntry::applies(
            "treewidth-degree",
            BoundKind::Lower,
            (tw + 1).div_ceil(delta + 1),
            format!("⌈(tw+1)/(Δ+1)⌉ with tw = {tw}, Δ = {delta}"),
        ),
        None => BoundEntry::skipped(
            "treewidth-degree",
            BoundKind::Lower,
            format!(
                "exact treewidth is capped at {} vertices",
                limits.treewidth_n
            ),
        ),
    });

    let w_cert = match &hints.representation {
        Some(rep) => Some(interval::compute_w(g, rep)?),
        None => None,
    };
    entries.push(match &w_cert {
        Some((w, cert)) => BoundEntry::applies(
            "interval-wideness",
            BoundKind::Lower,
            *w,
            format!(
                "w(G) = {w} on slice range {:?} of the representation",
                cert.range
            ),
        ),
        None => BoundEntry::skipped(
            "interval-wideness",
            BoundKind::Lower,
            "no interval representation given".into(),
        ),
    });

    entries.push(match tw {
        Some(tw) => BoundEntry::applies(
            "treewidth",
            BoundKind::Upper,
            tw + 1,
            format!("bag-sweep strategy over an optimal decomposition, tw = {tw}"),
        ),
        None => BoundEntry::skipped(
            "treewidth",
            BoundKind::Upper,
            format!(
                "exact treewidth is capped at {} vertices",
                limits.treewidth_n
            ),
        ),
    });

    entries.push(match &hints.decomposition {
        Some(td) if td.is_valid_for(g) => BoundEntry::applies(
            "decomposition",
            BoundKind::Upper,
            td.width() + 1,
            format!("bag-sweep over the given decomposition, width {}", td.width()),
        ),
        Some(_) => BoundEntry::skipped(
            "decomposition",
            BoundKind::Upper,
            "given decomposition does not cover the graph".into(),
        ),
        None => BoundEntry::skipped(
            "decomposition",
            BoundKind::Upper,
            "no decomposition given".into(),
        ),
    });

    entries.push(match upper_bound_domination(g, limits) {
        Ok((gamma, set)) => BoundEntry::applies(
            "domination",
            BoundKind::Upper,
            gamma,
            format!("cops parked on the dominating set {}", set_summary(&set)),
        ),
        Err(Error::Capability(reason)) => {
            BoundEntry::skipped("domination", BoundKind::Upper, reason)
        }
        Err(e) => return Err(e),
    });

    entries.push(match &w_cert {
        Some((w, _)) => BoundEntry::applies(
            "interval-triple",
            BoundKind::Upper,
            3 * w,
            format!("three teams of w = {w} cops"),
        ),
        None => BoundEntry::skipped(
            "interval-triple",
            BoundKind::Upper,
            "no interval representation given".into(),
        ),
    });

    entries.push(match &hints.product {
        Some(spec) => match product_entry(g, spec, limits) {
            Ok(entry) => entry,
            Err(e) => return Err(e),
        },
        None => BoundEntry::skipped(
            "product",
            BoundKind::Upper,
            "no product structure given".into(),
        ),
    });

    let lo = entries
        .iter()
        .filter(|e| e.kind == BoundKind::Lower)
        .filter_map(|e| e.value)
        .max()
        .unwrap_or(1);
    let hi = entries
        .iter()
        .filter(|e| e.kind == BoundKind::Upper)
        .filter_map(|e| e.value)
        .min()
        .unwrap_or(g.vertex_count());
    if lo > hi {
        return Err(Error::internal(format!(
            "bound bracket crossed: lo = {lo} > hi = {hi}; some certificate is wrong"
        )));
    }

    let exact = match solver::cop_number_exact(g, limits) {
        Ok(res) => Some(res.cop_number),
        Err(Error::Budget(_)) | Err(Error::Capability(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(c) = exact {
        if c < lo || c > hi {
            return Err(Error::internal(format!(
                "solved value {c} escapes the bracket [{lo}, {hi}]"
            )));
        }
    }

    Ok(BoundReport {
        entries,
        bracket: (lo, hi),
        exact,
    })
}

fn product_entry(g: &Graph, spec: &ProductSpec, limits: &Limits) -> Result<BoundEntry> {
    let built = generators::product(spec)?;
    let matches = g.vertex_count() == built.vertex_count()
        && (0..g.vertex_count()).all(|v| g.neighbors(v) == built.neighbors(v));
    if !matches {
        return Ok(BoundEntry::skipped(
            "product",
            BoundKind::Upper,
            "graph is not the product of the given factors".into(),
        ));
    }
    let n1 = spec.factors[0].vertex_count();
    match solver::cop_number_exact(&spec.factors[0], limits) {
        Ok(res) => {
            let value = upper_bound_product(spec, res.cop_number)?;
            Ok(BoundEntry::applies(
                "product",
                BoundKind::Upper,
                value,
                format!(
                    "n/n1 = {} real cops per virtual cop, factor needs {}",
                    g.vertex_count() / n1,
                    res.cop_number
                ),
            ))
        }
        Err(Error::Budget(reason)) | Err(Error::Capability(reason)) => Ok(BoundEntry::skipped(
            "product",
            BoundKind::Upper,
            format!("first factor not solvable: {reason}"),
        )),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, grid, hypercube, theta_family, three_sun};

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn wide_lower_examples() {
        let (k, h) = lower_bound_wide(&cycle(6).unwrap(), &limits()).unwrap();
        assert_eq!(k, 2);
        assert_eq!(h.len(), 6, "whole cycle is the witness");
        let (k, _) = lower_bound_wide(&complete(5).unwrap(), &limits()).unwrap();
        assert_eq!(k, 1);
        let (k, _) = lower_bound_wide(&three_sun(), &limits()).unwrap();
        assert_eq!(k, 2);
        assert!(matches!(
            lower_bound_wide(&grid(4).unwrap(), &limits()),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn treewidth_sandwich_examples() {
        assert_eq!(
            bounds_treewidth(&complete(5).unwrap(), &limits()).unwrap(),
            (1, 5)
        );
        let q3 = hypercube(3).unwrap();
        assert_eq!(bounds_treewidth(&q3, &limits()).unwrap(), (1, 4));
        let mut wide_limits = limits();
        wide_limits.treewidth_n = 21;
        // Three hubs only give a K3 minor, so the theta graph on m = 3 is
        // series-parallel: tw = 2, and c = 3 meets the upper bound exactly.
        let t3 = theta_family(3).unwrap();
        assert_eq!(bounds_treewidth(&t3, &wide_limits).unwrap(), (1, 3));
    }

    #[test]
    fn domination_examples() {
        for n in 2..=6 {
            let (gamma, _) = upper_bound_domination(&complete(n).unwrap(), &limits()).unwrap();
            assert_eq!(gamma, 1);
        }
        let (gamma, set) = upper_bound_domination(&hypercube(3).unwrap(), &limits()).unwrap();
        assert_eq!(gamma, 2);
        assert!(hypercube(3).unwrap().is_dominating(&set));
        let (gamma, _) = upper_bound_domination(&cycle(6).unwrap(), &limits()).unwrap();
        assert_eq!(gamma, 2);
    }

    #[test]
    fn product_bound_examples() {
        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let q3 = ProductSpec::cartesian(vec![k2.clone(), k2.clone(), k2.clone()]);
        assert_eq!(upper_bound_product(&q3, 1).unwrap(), 4);
        let rook = ProductSpec::cartesian(vec![k3.clone(), k3]);
        assert_eq!(upper_bound_product(&rook, 1).unwrap(), 3);
        let q4 = ProductSpec::cartesian(vec![k2.clone(), k2.clone(), k2.clone(), k2]);
        assert_eq!(upper_bound_product(&q4, 1).unwrap(), 8);
    }

    #[test]
    fn hypercube_bracket_examples() {
        let b3 = hypercube_bracket(3, &limits()).unwrap();
        assert_eq!((b3.lower, b3.upper), (Some(1), 2));
        // tw of the 4-cube is 6, so the sandwich gives ceil(7/5) = 2.
        let b4 = hypercube_bracket(4, &limits()).unwrap();
        assert_eq!((b4.lower, b4.upper), (Some(2), 4));
        let b7 = hypercube_bracket(7, &limits()).unwrap();
        assert_eq!((b7.lower, b7.upper), (None, 16));
    }

    #[test]
    fn compose_meets_exact_on_small_graphs() {
        let report = compose(&complete(5).unwrap(), &BoundHints::default(), &limits()).unwrap();
        assert_eq!(report.bracket, (1, 1));
        assert_eq!(report.exact, Some(1));

        let q3 = hypercube(3).unwrap();
        let spec = ProductSpec::cartesian(vec![
            complete(2).unwrap(),
            complete(2).unwrap(),
            complete(2).unwrap(),
        ]);
        // Q3 and K2^3 share the bit-pattern labeling, so the hint applies.
        let hints = BoundHints {
            product: Some(spec),
            ..Default::default()
        };
        let report = compose(&q3, &hints, &limits()).unwrap();
        assert_eq!(report.exact, Some(2));
        assert_eq!(report.bracket, (2, 2), "wide lower meets domination upper");
        let product = report
            .entries
            .iter()
            .find(|e| e.name == "product")
            .unwrap();
        assert_eq!(product.value, Some(4), "product bound stays an entry");
    }

    #[test]
    fn compose_brackets_theta() {
        let t3 = theta_family(3).unwrap();
        let mut lim = limits();
        lim.treewidth_n = 21;
        let report = compose(&t3, &BoundHints::default(), &lim).unwrap();
        assert_eq!(report.exact, Some(3));
        let (lo, hi) = report.bracket;
        assert!(lo <= 3 && 3 <= hi);
        // Hub set dominates every internal path vertex.
        assert_eq!(hi, 3);
    }

    #[test]
    fn compose_with_interval_hint() {
        let (g, rep) = generators::strong_product_path_clique(2).unwrap();
        let hints = BoundHints {
            representation: Some(rep),
            ..Default::default()
        };
        let report = compose(&g, &hints, &limits()).unwrap();
        assert_eq!(report.exact, Some(2));
        let w_entry = report
            .entries
            .iter()
            .find(|e| e.name == "interval-wideness")
            .unwrap();
        assert_eq!(w_entry.value, Some(2));
        let triple = report
            .entries
            .iter()
            .find(|e| e.name == "interval-triple")
            .unwrap();
        assert_eq!(triple.value, Some(6));
        assert!(report.bracket.0 == 2 && report.bracket.1 <= 4);
    }

    #[test]
    fn compose_never_drops_entries() {
        let report = compose(&cycle(5).unwrap(), &BoundHints::default(), &limits()).unwrap();
        let names: Vec<&str> = report.entries.iter().map(|e| e.name).collect();
        assert_eq!(
            names,
            vec![
                "trivial",
                "wide-subgraph",
                "treewidth-degree",
                "interval-wideness",
                "treewidth",
                "decomposition",
                "domination",
                "interval-triple",
                "product"
            ]
        );
        for entry in &report.entries {
            assert!(
                entry.value.is_some() || !entry.note.is_empty(),
                "inapplicable entries keep a reason"
            );
        }
    }

    #[test]
    fn grid_ratio_measurement() {
        for r in 2..=4usize {
            let g = grid(r).unwrap();
            let (tw, _) = treewidth_exact(&g, 18).unwrap();
            let c = solver::cop_number_exact(&g, &limits()).unwrap().cop_number;
            assert!(c <= tw + 1, "r = {r}");
            assert!(tw + 1 <= 5 * c, "r = {r}");
        }
    }
}

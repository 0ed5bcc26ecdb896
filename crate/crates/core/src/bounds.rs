//! The catalog of clique-localized inequalities, evaluated on one graph.
//!
//! Every report is oriented so that `slack = rhs − lhs ≥ 0` is the content of
//! the inequality: upper bounds on λ(G) put λ on the left, lower bounds on a
//! sum or on χ(G) put the bound on the left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clique::{clique_profile, maximal_cliques, CliqueProfile};
use crate::coloring::chromatic_number;
use crate::graph::connected_components;
use crate::numeric::{ksum, scale, EQUALITY_TOL};
use crate::spectral::{graph_spectrum, SpectrumSummary};
use crate::{Error, Result, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundId {
    MainWeighted,
    LocalEdge,
    VertexDegree,
    LocalizedWilf,
    Nikiforov,
    WilfEdge,
    Stanley,
    Hong,
    Bradac,
    SumClMinor,
    SumCl,
    TuranDegree,
    AdakChandran,
    EdwardsElphickW,
    CvetkovicW,
    Psi,
}

impl BoundId {
    pub const ALL: [BoundId; 16] = [
        BoundId::MainWeighted,
        BoundId::LocalEdge,
        BoundId::VertexDegree,
        BoundId::LocalizedWilf,
        BoundId::Nikiforov,
        BoundId::WilfEdge,
        BoundId::Stanley,
        BoundId::Hong,
        BoundId::Bradac,
        BoundId::SumClMinor,
        BoundId::SumCl,
        BoundId::TuranDegree,
        BoundId::AdakChandran,
        BoundId::EdwardsElphickW,
        BoundId::CvetkovicW,
        BoundId::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::MainWeighted => "MAIN_WEIGHTED",
            BoundId::LocalEdge => "LOCAL_EDGE",
            BoundId::VertexDegree => "VERTEX_DEGREE",
            BoundId::LocalizedWilf => "LOCALIZED_WILF",
            BoundId::Nikiforov => "NIKIFOROV",
            BoundId::WilfEdge => "WILF_EDGE",
            BoundId::Stanley => "STANLEY",
            BoundId::Hong => "HONG",
            BoundId::Bradac => "BRADAC",
            BoundId::SumClMinor => "SUM_CL_MINOR",
            BoundId::SumCl => "SUM_CL",
            BoundId::TuranDegree => "TURAN_DEGREE",
            BoundId::AdakChandran => "ADAK_CHANDRAN",
            BoundId::EdwardsElphickW => "EDWARDS_ELPHICK_W",
            BoundId::CvetkovicW => "CVETKOVIC_W",
            BoundId::Psi => "PSI",
        }
    }

    /// Needs the exact chromatic number for its comparison.
    pub fn needs_chi(self) -> bool {
        matches!(self, BoundId::EdwardsElphickW | BoundId::CvetkovicW)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        BoundId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown bound id {s:?}")))
    }
}

/// One evaluated inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub equality: bool,
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Clique order used by NIKIFOROV.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl BoundReport {
    pub fn new(bound_id: BoundId, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        Self {
            bound_id,
            lhs,
            rhs,
            slack,
            equality: slack.abs() <= EQUALITY_TOL * scale(rhs),
            applicable: true,
            reason: None,
            r: None,
        }
    }

    /// A report whose inequality is not asserted; `lhs`/`rhs` hold whatever
    /// could still be computed (NaN otherwise).
    pub fn inapplicable(bound_id: BoundId, lhs: f64, rhs: f64, reason: impl Into<String>) -> Self {
        Self {
            bound_id,
            lhs,
            rhs,
            slack: rhs - lhs,
            equality: false,
            applicable: false,
            reason: Some(reason.into()),
            r: None,
        }
    }

    /// Applicable and below the relative slack tolerance.
    pub fn is_violation(&self) -> bool {
        self.applicable && (self.slack.is_nan() || self.slack < -EQUALITY_TOL * scale(self.rhs))
    }

    /// `slack / max(1, |rhs|)`.
    pub fn relative_slack(&self) -> f64 {
        self.slack / scale(self.rhs)
    }
}

const UNIT_ONLY: &str = "requires unit edge weights";

/// Spectrum, clique profile and degree data of one graph, shared by every bound.
#[derive(Debug, Clone)]
pub struct BoundContext<'a> {
    pub graph: &'a WeightedGraph,
    pub spectrum: SpectrumSummary,
    pub profile: CliqueProfile,
    pub degrees: Vec<usize>,
    pub components: usize,
    pub unit_weighted: bool,
}

fn ratio(cl: usize) -> f64 {
    // (cl − 1)/cl; 0 for isolated vertices.
    (cl as f64 - 1.0) / cl as f64
}

impl<'a> BoundContext<'a> {
    pub fn new(graph: &'a WeightedGraph) -> Result<Self> {
        Ok(Self {
            spectrum: graph_spectrum(graph)?,
            profile: clique_profile(graph),
            degrees: graph.degrees(),
            components: connected_components(graph).len(),
            unit_weighted: graph.is_unit_weighted(),
            graph,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.spectrum.spectral_radius
    }

    fn n(&self) -> f64 {
        self.graph.n() as f64
    }

    fn m(&self) -> f64 {
        self.graph.m() as f64
    }

    fn has_isolated(&self) -> bool {
        self.degrees.contains(&0)
    }

    /// `Σ_v (cl(v)−1)/cl(v)`.
    fn vertex_ratio_sum(&self) -> f64 {
        ksum(self.profile.cl_v.iter().map(|&c| ratio(c)))
    }

    /// `Σ_v d(v)(cl(v)−1)/cl(v)`.
    fn degree_ratio_sum(&self) -> f64 {
        ksum(self.profile.cl_v.iter().zip(&self.degrees).map(|(&c, &d)| d as f64 * ratio(c)))
    }

    fn edge_sum(&self, f: impl Fn(f64) -> f64) -> f64 {
        ksum(self.profile.cl_e.iter().map(|&(_, _, c)| f(c as f64)))
    }

    fn unit_or(&self, id: BoundId, report: impl FnOnce() -> BoundReport) -> BoundReport {
        if self.unit_weighted {
            report()
        } else {
            BoundReport::inapplicable(id, f64::NAN, f64::NAN, UNIT_ONLY)
        }
    }

    /// `λ(G) ≤ √(2 Σ_e (cl(e)−1)/cl(e) · w(e)²)`.
    pub fn main_weighted(&self) -> BoundReport {
        let g = self.graph;
        let total = ksum(self.profile.cl_e.iter().map(|&(u, v, c)| ratio(c) * g.weight(u, v).powi(2)));
        BoundReport::new(BoundId::MainWeighted, self.lambda(), (2.0 * total).sqrt())
    }

    pub fn local_edge(&self) -> BoundReport {
        self.unit_or(BoundId::LocalEdge, || {
            BoundReport::new(BoundId::LocalEdge, self.lambda(), (2.0 * self.edge_sum(|c| (c - 1.0) / c)).sqrt())
        })
    }

    pub fn vertex_degree(&self) -> BoundReport {
        self.unit_or(BoundId::VertexDegree, || {
            BoundReport::new(BoundId::VertexDegree, self.lambda(), self.degree_ratio_sum().sqrt())
        })
    }

    pub fn localized_wilf(&self) -> BoundReport {
        self.unit_or(BoundId::LocalizedWilf, || {
            BoundReport::new(BoundId::LocalizedWilf, self.lambda(), self.vertex_ratio_sum())
        })
    }

    /// `λ ≤ √(2(1−1/r)m)` with `r = ω(G)`.
    pub fn nikiforov(&self) -> BoundReport {
        self.unit_or(BoundId::Nikiforov, || {
            let r = self.profile.omega;
            let rhs = if r == 0 { 0.0 } else { (2.0 * (1.0 - 1.0 / r as f64) * self.m()).sqrt() };
            BoundReport { r: Some(r), ..BoundReport::new(BoundId::Nikiforov, self.lambda(), rhs) }
        })
    }

    pub fn wilf_edge(&self) -> BoundReport {
        self.unit_or(BoundId::WilfEdge, || {
            let rhs = if self.graph.n() == 0 { 0.0 } else { (2.0 * (1.0 - 1.0 / self.n()) * self.m()).sqrt() };
            BoundReport::new(BoundId::WilfEdge, self.lambda(), rhs)
        })
    }

    pub fn stanley(&self) -> BoundReport {
        self.unit_or(BoundId::Stanley, || {
            BoundReport::new(BoundId::Stanley, self.lambda(), -0.5 + (2.0 * self.m() + 0.25).sqrt())
        })
    }

    pub fn hong(&self) -> BoundReport {
        self.unit_or(BoundId::Hong, || {
            if self.graph.n() == 0 || self.has_isolated() {
                return BoundReport::inapplicable(BoundId::Hong, self.lambda(), f64::NAN, "requires minimum degree >= 1");
            }
            BoundReport::new(BoundId::Hong, self.lambda(), (2.0 * self.m() - self.n() + 1.0).sqrt())
        })
    }

    /// `Σ_e cl(e)/(cl(e)−1) ≤ n²/2`.
    pub fn bradac(&self) -> BoundReport {
        BoundReport::new(BoundId::Bradac, self.edge_sum(|c| c / (c - 1.0)), self.n() * self.n() / 2.0)
    }

    fn needs_no_isolated(&self, id: BoundId, lhs: f64, rhs: f64) -> BoundReport {
        if self.graph.n() < 2 {
            BoundReport::inapplicable(id, lhs, rhs, "requires n >= 2")
        } else if self.has_isolated() {
            BoundReport::inapplicable(id, lhs, rhs, "requires no isolated vertices")
        } else {
            BoundReport::new(id, lhs, rhs)
        }
    }

    /// `n/2 ≤ Σ_e 1/(cl(e)−1)`.
    pub fn sum_cl_minor(&self) -> BoundReport {
        self.needs_no_isolated(BoundId::SumClMinor, self.n() / 2.0, self.edge_sum(|c| 1.0 / (c - 1.0)))
    }

    /// `(n − c(G))/2 ≤ Σ_e 1/cl(e)`.
    pub fn sum_cl(&self) -> BoundReport {
        self.needs_no_isolated(
            BoundId::SumCl,
            (self.n() - self.components as f64) / 2.0,
            self.edge_sum(|c| 1.0 / c),
        )
    }

    /// `Σ_v d(v)(cl(v)−1)/cl(v) ≤ (Σ_v (cl(v)−1)/cl(v))²`.
    pub fn turan_degree(&self) -> BoundReport {
        self.unit_or(BoundId::TuranDegree, || {
            BoundReport::new(BoundId::TuranDegree, self.degree_ratio_sum(), self.vertex_ratio_sum().powi(2))
        })
    }

    /// `m ≤ (n/2) Σ_v (cl(v)−1)/cl(v)`.
    pub fn adak_chandran(&self) -> BoundReport {
        self.unit_or(BoundId::AdakChandran, || {
            BoundReport::new(BoundId::AdakChandran, self.m(), self.n() / 2.0 * self.vertex_ratio_sum())
        })
    }

    /// `1 + λ²/(‖A‖_F² − λ²) ≤ χ(G)`.
    pub fn edwards_elphick(&self, chi: Option<usize>) -> BoundReport {
        let id = BoundId::EdwardsElphickW;
        let l2 = self.lambda().powi(2);
        let f2 = self.spectrum.frobenius_norm.powi(2);
        if f2 - l2 <= 1e-12 * scale(f2) {
            return BoundReport::inapplicable(id, f64::NAN, chi_value(chi), "requires ||A||_F > lambda");
        }
        let bound = 1.0 + l2 / (f2 - l2);
        with_chi(id, bound, chi)
    }

    /// `1 + λ/(n − λ) ≤ χ(G)` under `2 Σ_e w(e) ≥ ‖A‖_F²`.
    pub fn cvetkovic(&self, chi: Option<usize>) -> BoundReport {
        let id = BoundId::CvetkovicW;
        let weight_sum = 2.0 * ksum(self.graph.edges().map(|e| e.2));
        let f2 = self.graph.frobenius_sq();
        if self.graph.n() == 0 {
            return BoundReport::inapplicable(id, f64::NAN, chi_value(chi), "requires n >= 1");
        }
        if weight_sum < f2 {
            return BoundReport::inapplicable(id, f64::NAN, chi_value(chi), "requires 2*sum(w) >= ||A||_F^2");
        }
        let lambda = self.lambda();
        if lambda >= self.n() {
            return BoundReport::inapplicable(id, f64::NAN, chi_value(chi), "requires lambda < n");
        }
        with_chi(id, 1.0 + lambda / (self.n() - lambda), chi)
    }

    /// `2m ≤ (n − Σ 1/(d+1))(n + 1 − Σ 1/(d+1))`.
    pub fn psi(&self) -> BoundReport {
        self.unit_or(BoundId::Psi, || {
            let s = ksum(self.degrees.iter().map(|&d| 1.0 / (d as f64 + 1.0)));
            BoundReport::new(BoundId::Psi, 2.0 * self.m(), (self.n() - s) * (self.n() + 1.0 - s))
        })
    }

    pub fn report(&self, id: BoundId, chi: Option<usize>) -> BoundReport {
        match id {
            BoundId::MainWeighted => self.main_weighted(),
            BoundId::LocalEdge => self.local_edge(),
            BoundId::VertexDegree => self.vertex_degree(),
            BoundId::LocalizedWilf => self.localized_wilf(),
            BoundId::Nikiforov => self.nikiforov(),
            BoundId::WilfEdge => self.wilf_edge(),
            BoundId::Stanley => self.stanley(),
            BoundId::Hong => self.hong(),
            BoundId::Bradac => self.bradac(),
            BoundId::SumClMinor => self.sum_cl_minor(),
            BoundId::SumCl => self.sum_cl(),
            BoundId::TuranDegree => self.turan_degree(),
            BoundId::AdakChandran => self.adak_chandran(),
            BoundId::EdwardsElphickW => self.edwards_elphick(chi),
            BoundId::CvetkovicW => self.cvetkovic(chi),
            BoundId::Psi => self.psi(),
        }
    }

    pub fn all(&self, chi: Option<usize>) -> Vec<BoundReport> {
        BoundId::ALL.iter().map(|&id| self.report(id, chi)).collect()
    }
}

fn chi_value(chi: Option<usize>) -> f64 {
    chi.map_or(f64::NAN, |c| c as f64)
}

fn with_chi(id: BoundId, bound: f64, chi: Option<usize>) -> BoundReport {
    match chi {
        Some(c) => BoundReport::new(id, bound, c as f64),
        None => BoundReport::inapplicable(id, bound, f64::NAN, "chromatic number not available (n > 10)"),
    }
}

pub fn bound_main_weighted(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.main_weighted())
}

pub fn bound_local_edge(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.local_edge())
}

pub fn bound_vertex_degree(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.vertex_degree())
}

pub fn bound_localized_wilf(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.localized_wilf())
}

/// NIKIFOROV, WILF_EDGE, STANLEY, HONG.
pub fn bound_classics(g: &WeightedGraph) -> Result<Vec<BoundReport>> {
    let ctx = BoundContext::new(g)?;
    Ok(vec![ctx.nikiforov(), ctx.wilf_edge(), ctx.stanley(), ctx.hong()])
}

/// SUM_CL_MINOR, SUM_CL, BRADAC.
pub fn sum_inequalities(g: &WeightedGraph) -> Result<Vec<BoundReport>> {
    let ctx = BoundContext::new(g)?;
    Ok(vec![ctx.sum_cl_minor(), ctx.sum_cl(), ctx.bradac()])
}

pub fn turan_degree_report(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.turan_degree())
}

pub fn adak_chandran_report(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.adak_chandran())
}

/// EDWARDS_ELPHICK_W and CVETKOVIC_W; `chi` defaults to the exact value for n ≤ 10.
pub fn chromatic_lower_bounds(g: &WeightedGraph, chi: Option<usize>) -> Result<[BoundReport; 2]> {
    let ctx = BoundContext::new(g)?;
    let chi = chi.or_else(|| chromatic_number(g));
    Ok([ctx.edwards_elphick(chi), ctx.cvetkovic(chi)])
}

pub fn psi_report(g: &WeightedGraph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.psi())
}

/// Every bound in the catalog; χ is computed exactly when `chi` is `None`
/// and the graph has at most 10 vertices.
pub fn compute_all_bounds(g: &WeightedGraph, chi: Option<usize>) -> Result<Vec<BoundReport>> {
    let chi = chi.or_else(|| chromatic_number(g));
    Ok(BoundContext::new(g)?.all(chi))
}

/// Every vertex of every maximal clique has a neighbor outside that clique.
pub fn property_p_check(g: &WeightedGraph) -> bool {
    maximal_cliques(g).iter().all(|clique| {
        clique.iter().all(|&v| g.neighbors(v).ones().any(|u| clique.binary_search(&u).is_err()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use approx::assert_abs_diff_eq;

    fn get(reports: &[BoundReport], id: BoundId) -> BoundReport {
        reports.iter().find(|r| r.bound_id == id).unwrap().clone()
    }

    #[test]
    fn main_weighted_examples() {
        let r = bound_main_weighted(&families::example_one()).unwrap();
        assert_abs_diff_eq!(r.lhs, 2.0 * 3f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(r.rhs, 2.0 * 3f64.sqrt(), epsilon = 1e-12);
        assert!(r.equality);

        let r = bound_main_weighted(&families::complete(3)).unwrap();
        assert_abs_diff_eq!(r.rhs, 2.0, epsilon = 1e-14);
        assert!(r.equality);

        let r = bound_main_weighted(&families::paw()).unwrap();
        assert_abs_diff_eq!(r.rhs, 5f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(r.lhs, 2.1700864866260323, epsilon = 1e-9);
        assert!(!r.equality && r.slack > 0.0);

        let r = bound_main_weighted(&WeightedGraph::empty(3)).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
    }

    #[test]
    fn vertex_localized_bounds_on_k23() {
        let g = families::complete_multipartite(&[2, 3]);
        let all = compute_all_bounds(&g, None).unwrap();
        let s6 = 6f64.sqrt();
        let le = get(&all, BoundId::LocalEdge);
        assert_abs_diff_eq!(le.rhs, s6, epsilon = 1e-14);
        assert!(le.equality);
        let vd = get(&all, BoundId::VertexDegree);
        assert_abs_diff_eq!(vd.rhs, s6, epsilon = 1e-14);
        assert!(vd.equality);
        let lw = get(&all, BoundId::LocalizedWilf);
        assert_abs_diff_eq!(lw.rhs, 2.5, epsilon = 1e-14);
        assert!(!lw.equality);
        let ee = get(&all, BoundId::EdwardsElphickW);
        assert_abs_diff_eq!(ee.lhs, 2.0, epsilon = 1e-12);
        assert!(ee.equality);
    }

    #[test]
    fn triangle_is_tight_everywhere_it_should_be() {
        let all = compute_all_bounds(&families::complete(3), None).unwrap();
        for id in [
            BoundId::MainWeighted,
            BoundId::LocalEdge,
            BoundId::VertexDegree,
            BoundId::LocalizedWilf,
            BoundId::Stanley,
            BoundId::Hong,
            BoundId::TuranDegree,
            BoundId::AdakChandran,
            BoundId::EdwardsElphickW,
            BoundId::CvetkovicW,
            BoundId::Psi,
            BoundId::Bradac,
        ] {
            let r = get(&all, id);
            assert!(r.applicable && r.equality, "{id}: {r:?}");
        }
        assert_abs_diff_eq!(get(&all, BoundId::TuranDegree).lhs, 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(get(&all, BoundId::CvetkovicW).lhs, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn c5_is_strict() {
        let all = compute_all_bounds(&families::cycle(5), None).unwrap();
        let le = get(&all, BoundId::LocalEdge);
        assert_abs_diff_eq!(le.rhs, 5f64.sqrt(), epsilon = 1e-14);
        assert!(!le.equality);
        let nk = get(&all, BoundId::Nikiforov);
        assert_eq!(nk.r, Some(2));
        assert_abs_diff_eq!(nk.rhs, 5f64.sqrt(), epsilon = 1e-14);
        assert!(nk.slack > 0.0);
    }

    #[test]
    fn hong_on_stars_and_isolated_vertices() {
        let classics = bound_classics(&families::star(3)).unwrap();
        let hong = get(&classics, BoundId::Hong);
        assert_abs_diff_eq!(hong.rhs, 3f64.sqrt(), epsilon = 1e-14);
        assert!(hong.equality);
        let with_iso = WeightedGraph::unweighted(3, &[(0, 1)]).unwrap();
        let hong = get(&bound_classics(&with_iso).unwrap(), BoundId::Hong);
        assert!(!hong.applicable);
        assert!(!hong.is_violation());
    }

    #[test]
    fn sum_inequalities_examples() {
        let paw = sum_inequalities(&families::paw()).unwrap();
        let sc = get(&paw, BoundId::SumCl);
        assert_abs_diff_eq!(sc.rhs, 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(sc.lhs, 1.5, epsilon = 1e-15);
        assert!(sc.equality);

        for n in 3..=7 {
            let b = get(&sum_inequalities(&families::complete(n)).unwrap(), BoundId::Bradac);
            assert_abs_diff_eq!(b.lhs, (n * n) as f64 / 2.0, epsilon = 1e-12);
            assert!(b.equality);
        }

        let star = get(&sum_inequalities(&families::star(3)).unwrap(), BoundId::SumClMinor);
        assert_eq!((star.lhs, star.rhs), (2.0, 3.0));
        assert!(!star.equality);

        let iso = sum_inequalities(&WeightedGraph::unweighted(3, &[(0, 1)]).unwrap()).unwrap();
        assert!(!get(&iso, BoundId::SumCl).applicable);
        assert!(get(&iso, BoundId::Bradac).applicable);
    }

    #[test]
    fn turan_degree_examples() {
        let k22 = turan_degree_report(&families::complete_multipartite(&[2, 2])).unwrap();
        assert_eq!((k22.lhs, k22.rhs), (4.0, 4.0));
        assert!(k22.equality);
        let p3 = turan_degree_report(&families::path(3)).unwrap();
        assert_eq!((p3.lhs, p3.rhs), (2.0, 2.25));
        assert!(!p3.equality);
    }

    #[test]
    fn adak_chandran_examples() {
        let e = adak_chandran_report(&WeightedGraph::empty(4)).unwrap();
        assert!(e.equality);
        let paw = adak_chandran_report(&families::paw()).unwrap();
        assert_abs_diff_eq!(paw.rhs, 5.0, epsilon = 1e-14);
        assert_eq!(paw.lhs, 4.0);
    }

    #[test]
    fn psi_examples() {
        assert!(psi_report(&families::complete(3)).unwrap().equality);
        let single = psi_report(&WeightedGraph::empty(1)).unwrap();
        assert_eq!((single.lhs, single.rhs), (0.0, 0.0));
        let star = psi_report(&families::star(3)).unwrap();
        assert_abs_diff_eq!(star.rhs, 117.0 / 16.0, epsilon = 1e-14);
        assert_eq!(star.lhs, 6.0);
    }

    #[test]
    fn chromatic_bounds_without_chi() {
        let g = families::cycle(12);
        let [ee, cv] = chromatic_lower_bounds(&g, None).unwrap();
        assert!(!ee.applicable && ee.lhs.is_finite());
        assert!(!cv.applicable);
        let [ee, _] = chromatic_lower_bounds(&WeightedGraph::empty(3), None).unwrap();
        assert!(!ee.applicable);
    }

    #[test]
    fn cvetkovic_precondition_is_verbatim() {
        // Weights below 1 make 2 Σ w < ‖A‖_F² false the other way round: it holds.
        let half = families::complete(3).map_weights(|_, _, _| 0.5).unwrap();
        let [_, cv] = chromatic_lower_bounds(&half, None).unwrap();
        assert!(cv.applicable);
        let heavy = families::complete(3).map_weights(|_, _, _| 2.0).unwrap();
        let [_, cv] = chromatic_lower_bounds(&heavy, None).unwrap();
        assert!(!cv.applicable);
    }

    #[test]
    fn weighted_graphs_skip_unit_only_bounds() {
        let g = families::example_one();
        let all = compute_all_bounds(&g, None).unwrap();
        assert!(!get(&all, BoundId::LocalEdge).applicable);
        assert!(!get(&all, BoundId::Psi).applicable);
        assert!(get(&all, BoundId::MainWeighted).applicable);
        assert!(get(&all, BoundId::EdwardsElphickW).applicable);
    }

    #[test]
    fn property_p_examples() {
        assert!(!property_p_check(&families::complete(3)));
        assert!(property_p_check(&families::cycle(5)));
        assert!(!property_p_check(&families::paw()));
    }

    #[test]
    fn bound_id_names_round_trip() {
        for id in BoundId::ALL {
            assert_eq!(id.name().parse::<BoundId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.name()));
        }
        assert_eq!("main-weighted".parse::<BoundId>().unwrap(), BoundId::MainWeighted);
        assert!("nope".parse::<BoundId>().is_err());
    }
}

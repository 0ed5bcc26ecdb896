//! Equality certificates for the weighted clique-localized spectral bound.
//!
//! A weighted graph attains `λ(G) = √(2 Σ_e (cl(e)−1)/cl(e) · w(e)²)` exactly
//! when, after removing isolated vertices, it is complete r-partite with parts
//! `V₁..V_r` and some `w` satisfies
//!
//! 1. `A = ±Σᵢ (1_{Vᵢ}∘w)((1−1_{Vᵢ})∘w)ᵀ`, and
//! 2. `‖1_{Vᵢ}∘w‖² = ‖w‖² − √(1−1/r)·‖A‖_F` for every part.
//!
//! The certificate takes `w = √c · x` with `x` the unit Perron vector of `|A|`
//! and `c = √(r/(r−1))·‖A‖_F`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::bound_main_weighted;
use crate::graph::{multipartite_parts, strip_isolated};
use crate::numeric::{ksum, scale, CERTIFICATE_TOL};
use crate::spectral::perron_vector;
use crate::{Error, Partition, Result, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalCertificate {
    pub r: usize,
    /// Parts over the non-isolated vertices, original labels.
    pub parts: Vec<Vec<usize>>,
    /// Entry `k` belongs to the `k`-th smallest non-isolated vertex.
    pub w: Vec<f64>,
    pub c: f64,
    pub sign: i8,
    pub structural_residual: f64,
    pub norm_residual: f64,
    /// `‖1_{Vᵢ}∘w‖²` per part.
    pub part_norms_sq: Vec<f64>,
}

impl ExtremalCertificate {
    pub fn partition(&self) -> Result<Partition> {
        Partition::new(self.parts.clone())
    }

    /// Both residuals within `1e-7 · max(1, ‖A‖_F)`.
    pub fn within_threshold(&self, frobenius: f64) -> bool {
        let t = CERTIFICATE_TOL * scale(frobenius);
        self.structural_residual <= t && self.norm_residual <= t
    }
}

/// Pipeline step at which reconstruction gave up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    EqualityPrecheck,
    Edgeless,
    MixedSign,
    NotMultipartite,
    Residual,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::EqualityPrecheck => "equality-precheck",
            Stage::Edgeless => "edgeless",
            Stage::MixedSign => "mixed-sign",
            Stage::NotMultipartite => "not-multipartite",
            Stage::Residual => "residual",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rejection {
    pub stage: Stage,
    pub diagnostic: String,
    /// The rejected candidate, when one was built.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<ExtremalCertificate>,
}

impl Rejection {
    fn at(stage: Stage, diagnostic: impl Into<String>) -> Self {
        Self { stage, diagnostic: diagnostic.into(), candidate: None }
    }
}

/// Certificate for a graph whose main bound is tight.
///
/// Errors if the bound does not report equality; otherwise returns the
/// accepted certificate or the stage where reconstruction failed.
pub fn certify_equality(g: &WeightedGraph) -> Result<std::result::Result<ExtremalCertificate, Rejection>> {
    let report = bound_main_weighted(g)?;
    if !report.equality {
        return Err(Error::Precondition(format!(
            "main bound is strict (slack {:e}); certify only graphs that attain it",
            report.slack
        )));
    }
    reconstruct_certificate(g)
}

/// Runs the reconstruction pipeline without the equality precheck.
pub fn reconstruct_certificate(g: &WeightedGraph) -> Result<std::result::Result<ExtremalCertificate, Rejection>> {
    let stripped = strip_isolated(g);
    let h = &stripped.graph;
    if h.m() == 0 {
        return Ok(Err(Rejection::at(Stage::Edgeless, "graph has no edges")));
    }
    let Some(sign) = h.common_sign() else {
        return Ok(Err(Rejection::at(Stage::MixedSign, "edge weights have mixed signs")));
    };
    let Some(local) = multipartite_parts(h) else {
        return Ok(Err(Rejection::at(
            Stage::NotMultipartite,
            "non-isolated part is not complete multipartite",
        )));
    };
    let r = local.len();
    let frobenius = h.frobenius_sq().sqrt();
    let c = (r as f64 / (r as f64 - 1.0)).sqrt() * frobenius;
    let x = perron_vector(h)?;
    let w: Vec<f64> = x.iter().map(|v| c.sqrt() * v).collect();
    let parts = local
        .parts
        .iter()
        .map(|p| p.iter().map(|&i| stripped.kept[i]).collect())
        .collect();
    let cert = assemble(g, parts, w, sign)?;
    debug_assert!((cert.c - c).abs() <= 1e-12 * scale(c));
    if cert.within_threshold(frobenius) {
        Ok(Ok(cert))
    } else {
        Ok(Err(Rejection {
            stage: Stage::Residual,
            diagnostic: format!(
                "residuals {:e} / {:e} exceed {:e}",
                cert.structural_residual,
                cert.norm_residual,
                CERTIFICATE_TOL * scale(frobenius)
            ),
            candidate: Some(cert),
        }))
    }
}

fn assemble(g: &WeightedGraph, parts: Vec<Vec<usize>>, w: Vec<f64>, sign: i8) -> Result<ExtremalCertificate> {
    let r = parts.len();
    let c = if r >= 2 { (r as f64 / (r as f64 - 1.0)).sqrt() * g.frobenius_sq().sqrt() } else { 0.0 };
    let mut cert = ExtremalCertificate {
        r,
        parts,
        w,
        c,
        sign,
        structural_residual: f64::NAN,
        norm_residual: f64::NAN,
        part_norms_sq: Vec::new(),
    };
    let (s, nr) = verify_certificate(g, &cert)?;
    cert.structural_residual = s;
    cert.norm_residual = nr;
    cert.part_norms_sq = part_norms(&cert)?;
    Ok(cert)
}

/// Position of every vertex in `support` plus its part index.
fn layout(cert: &ExtremalCertificate) -> Result<(Vec<usize>, Vec<usize>)> {
    let partition = cert.partition()?;
    let support = partition.support();
    let mut part_of = vec![usize::MAX; support.len()];
    for (k, part) in partition.parts.iter().enumerate() {
        for v in part {
            part_of[support.binary_search(v).expect("part vertex is in support")] = k;
        }
    }
    Ok((support, part_of))
}

fn part_norms(cert: &ExtremalCertificate) -> Result<Vec<f64>> {
    let (_, part_of) = layout(cert)?;
    let partition = cert.partition()?;
    Ok((0..partition.len())
        .map(|k| ksum(part_of.iter().zip(&cert.w).filter(|(&p, _)| p == k).map(|(_, x)| x * x)))
        .collect())
}

/// Recomputes `(structural_residual, norm_residual)` of `cert` against `g`.
///
/// Only `parts`, `w` and `sign` are read; the stored residuals are ignored.
pub fn verify_certificate(g: &WeightedGraph, cert: &ExtremalCertificate) -> Result<(f64, f64)> {
    let (support, part_of) = layout(cert)?;
    let non_isolated: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if support.iter().any(|&v| v >= g.n()) || support != non_isolated {
        return Err(Error::Precondition(format!(
            "partition covers {support:?} but the non-isolated vertices are {non_isolated:?}"
        )));
    }
    if cert.w.len() != support.len() {
        return Err(Error::Dimension { expected: support.len(), found: cert.w.len() });
    }
    if cert.sign != 1 && cert.sign != -1 {
        return Err(Error::Precondition(format!("sign must be 1 or -1, got {}", cert.sign)));
    }
    let sign = cert.sign as f64;
    let w = &cert.w;

    let mut structural = 0f64;
    for a in 0..support.len() {
        for b in a + 1..support.len() {
            let model = if part_of[a] == part_of[b] { 0.0 } else { sign * w[a] * w[b] };
            structural = structural.max((g.weight(support[a], support[b]) - model).abs());
        }
    }

    let r = cert.parts.len() as f64;
    let total = ksum(w.iter().map(|x| x * x));
    let target = total - (1.0 - 1.0 / r).sqrt() * g.frobenius_sq().sqrt();
    let norm = part_norms(cert)?.iter().fold(0f64, |m, &p| m.max((p - target).abs()));
    Ok((structural, norm))
}

/// Builds a certificate around an externally supplied `w`, taking the parts
/// and sign from the graph itself.
pub fn certificate_from_witness(g: &WeightedGraph, w: Vec<f64>) -> Result<ExtremalCertificate> {
    let stripped = strip_isolated(g);
    let h = &stripped.graph;
    if h.m() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let sign = h
        .common_sign()
        .ok_or_else(|| Error::Precondition("edge weights have mixed signs".into()))?;
    let local =
        multipartite_parts(h).ok_or_else(|| Error::Precondition("graph is not complete multipartite".into()))?;
    if w.len() != stripped.kept.len() {
        return Err(Error::Dimension { expected: stripped.kept.len(), found: w.len() });
    }
    let parts = local
        .parts
        .iter()
        .map(|p| p.iter().map(|&i| stripped.kept[i]).collect())
        .collect();
    assemble(g, parts, w, sign)
}

/// Structural class of an unweighted graph after removing isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EqualityClass {
    Edgeless,
    CompleteBipartite { balanced: bool },
    /// `r ≥ 3` parts of equal size.
    CompleteRegularMultipartite { r: usize },
    NotExtremal,
}

impl EqualityClass {
    /// Complete bipartite, or complete regular r-partite for r ≥ 3.
    pub fn is_extremal(self) -> bool {
        self != EqualityClass::NotExtremal
    }

    /// All parts the same size.
    pub fn is_regular(self) -> bool {
        matches!(
            self,
            EqualityClass::Edgeless
                | EqualityClass::CompleteBipartite { balanced: true }
                | EqualityClass::CompleteRegularMultipartite { .. }
        )
    }
}

impl fmt::Display for EqualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqualityClass::Edgeless => f.write_str("EDGELESS"),
            EqualityClass::CompleteBipartite { balanced: true } => f.write_str("COMPLETE_BIPARTITE(balanced)"),
            EqualityClass::CompleteBipartite { balanced: false } => f.write_str("COMPLETE_BIPARTITE"),
            EqualityClass::CompleteRegularMultipartite { r } => write!(f, "COMPLETE_REGULAR_MULTIPARTITE({r})"),
            EqualityClass::NotExtremal => f.write_str("NOT_EXTREMAL"),
        }
    }
}

/// Weights are ignored; only the edge set matters.
pub fn classify_unweighted_equality(g: &WeightedGraph) -> EqualityClass {
    let h = strip_isolated(g).graph;
    if h.m() == 0 {
        return EqualityClass::Edgeless;
    }
    let Some(parts) = multipartite_parts(&h) else {
        return EqualityClass::NotExtremal;
    };
    let sizes = parts.part_sizes();
    let equal = sizes.iter().all(|&s| s == sizes[0]);
    match sizes.len() {
        2 => EqualityClass::CompleteBipartite { balanced: equal },
        r if equal => EqualityClass::CompleteRegularMultipartite { r },
        _ => EqualityClass::NotExtremal,
    }
}

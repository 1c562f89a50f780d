//! Lefschetz properties, inverse systems and systems of parameters.
//!
//! Quotients `R / (I_Δ + (g_1, ..., g_s))` are handled inside the face-ring
//! basis: in degree `k` the face-supported monomials span `(R/I_Δ)_k`, and
//! the products `m·g_j` reduced modulo `I_Δ` span the image of the extra
//! generators. Everything is exact.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{face_monomials, stanley_reisner_generators, ArtinianFrame, Monomial, Polynomial};
use crate::complex::{Coloring, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, TripletMatrix};
use crate::subdivision::{facet_ridge_graph, hesd, Graph};

/// `R / (I_Δ + extra)` for homogeneous `extra`.
#[derive(Clone, Debug)]
pub struct Quotient<'a> {
    complex: &'a SimplicialComplex,
    extra: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl<'a> Quotient<'a> {
    /// Zero forms are dropped.
    pub fn new(complex: &'a SimplicialComplex, extra: &[Polynomial]) -> Result<Self> {
        let extra: Vec<Polynomial> = extra.iter().filter(|g| !g.is_zero()).cloned().collect();
        let degrees = extra.iter().map(Polynomial::require_homogeneous).collect::<Result<_>>()?;
        let n = complex.num_vertices();
        if let Some(g) = extra.iter().find(|g| g.num_vars() > n) {
            return Err(Error::Input(format!("`{g}` uses variables beyond x{n}")));
        }
        Ok(Quotient { complex, extra, degrees })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.complex
    }

    pub fn extra(&self) -> &[Polynomial] {
        &self.extra
    }

    /// Face-supported monomials of degree `k`, a basis of `(R/I_Δ)_k`.
    pub fn face_basis(&self, k: u32) -> Vec<Monomial> {
        face_monomials(self.complex, k, &|_| None)
    }

    /// Rows: the products `m·g` in degree `k`, reduced modulo `I_Δ`;
    /// columns: `face_basis(k)`.
    pub fn relation_matrix(&self, k: u32) -> (Vec<Monomial>, ExactMatrix) {
        let basis = self.face_basis(k);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut triplets = Vec::new();
        let mut row = 0;
        for (g, &e) in self.extra.iter().zip(&self.degrees) {
            if e > k {
                continue;
            }
            for m in self.face_basis(k - e) {
                for (u, c) in g.terms() {
                    if let Some(&col) = index.get(&m.mul(u)) {
                        triplets.push((row, col, c.clone()));
                    }
                }
                row += 1;
            }
        }
        let matrix = ExactMatrix::new(row, basis.len(), triplets);
        (basis, matrix)
    }

    pub fn hilbert(&self, k: u32) -> usize {
        let (basis, rel) = self.relation_matrix(k);
        basis.len() - rel.rank()
    }

    /// `HF(0..=upto)`.
    pub fn hilbert_vector(&self, upto: u32) -> Vec<usize> {
        (0..=upto).into_par_iter().map(|k| self.hilbert(k)).collect()
    }

    /// Degree by which an artinian quotient must vanish: with every extra
    /// generator of degree at most `D`, the ideal contains a system of
    /// parameters of degree `D`, so `(d+1)(D-1) + deg h + 1` suffices.
    pub fn vanishing_bound(&self) -> u32 {
        let d1 = (self.complex.dim() + 1).max(0) as u32;
        let top = self.degrees.iter().copied().max().unwrap_or(1).max(1);
        d1 * (top - 1) + self.complex.fh_profile().h_degree as u32 + 1
    }

    /// First degree where the quotient vanishes, searching up to `limit`.
    pub fn vanishing_degree(&self, limit: u32) -> Option<u32> {
        (0..=limit).find(|&k| self.hilbert(k) == 0)
    }

    pub fn require_artinian(&self) -> Result<u32> {
        let bound = self.vanishing_bound();
        self.vanishing_degree(bound).ok_or(Error::NotArtinian(bound))
    }

    /// Span test: `g` lies in `I_Δ + extra` iff appending its reduction does
    /// not raise the rank of the degree-`deg g` relations.
    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        let k = g.require_homogeneous()?;
        let (basis, rel) = self.relation_matrix(k);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let extra_row: Vec<(usize, usize, BigRational)> = g
            .terms()
            .filter_map(|(m, c)| index.get(m).map(|&col| (rel.rows(), col, c.clone())))
            .collect();
        if extra_row.is_empty() {
            return Ok(true);
        }
        let stacked = ExactMatrix::new(
            rel.rows() + 1,
            rel.cols(),
            rel.entries().iter().cloned().chain(extra_row),
        );
        Ok(stacked.rank() == rel.rank())
    }

    /// Degree-`k` part of the inverse system: face-supported `F` with
    /// `g ∘ F = 0` for every extra generator `g`. Built from the contraction
    /// action directly.
    pub fn inverse_system_piece(&self, k: u32) -> Result<InverseSystemPiece> {
        self.require_artinian()?;
        let basis = self.face_basis(k);
        let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut triplets = Vec::new();
        for (col, m) in basis.iter().enumerate() {
            let f = Polynomial::monomial(m.clone());
            for (j, g) in self.extra.iter().enumerate() {
                for (q, c) in g.contract(&f).terms() {
                    let next = row_of.len();
                    let row = *row_of.entry((j, q.clone())).or_insert(next);
                    triplets.push((row, col, c.clone()));
                }
            }
        }
        let conditions = ExactMatrix::new(row_of.len(), basis.len(), triplets);
        let kernel = conditions.kernel_basis();
        let basis = kernel.vectors.iter().map(|v| Polynomial::from_coordinates(&basis, v)).collect();
        Ok(InverseSystemPiece { degree: k, basis })
    }

    /// Duality oracle for membership: `g` of degree `k` lies in the ideal iff
    /// it contracts every degree-`k` inverse system element to zero.
    pub fn annihilates_inverse_system(&self, g: &Polynomial) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        let k = g.require_homogeneous()?;
        let piece = self.inverse_system_piece(k)?;
        Ok(piece.basis.iter().all(|f| g.contract(f).is_zero()))
    }
}

/// Basis of one graded piece of an inverse system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseSystemPiece {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

impl InverseSystemPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn quotient_hilbert(complex: &SimplicialComplex, extra: &[Polynomial], k: u32) -> Result<usize> {
    Ok(Quotient::new(complex, extra)?.hilbert(k))
}

pub fn inverse_system_piece(complex: &SimplicialComplex, extra: &[Polynomial], k: u32) -> Result<InverseSystemPiece> {
    Quotient::new(complex, extra)?.inverse_system_piece(k)
}

pub fn ideal_membership(complex: &SimplicialComplex, extra: &[Polynomial], g: &Polynomial) -> Result<bool> {
    Quotient::new(complex, extra)?.contains(g)
}

/// Candidate system of parameters `θ_1, ..., θ_{d+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SopCandidate {
    pub theta: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    /// `Σ deg θ_i + deg h_Δ - (d+1)`, once attached to a complex.
    pub total_degree_t: Option<i64>,
}

impl SopCandidate {
    pub fn new(theta: Vec<Polynomial>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(theta.len());
        for g in &theta {
            if g.is_zero() {
                return Err(Error::Homogeneity("0".into()));
            }
            degrees.push(g.require_homogeneous()?);
        }
        Ok(SopCandidate { theta, degrees, total_degree_t: None })
    }

    /// Checks the count against `dim Δ + 1` and fills in the total degree.
    pub fn attach(mut self, complex: &SimplicialComplex) -> Result<Self> {
        let expected = (complex.dim() + 1).max(0) as usize;
        if self.theta.len() != expected {
            return Err(Error::Arity { expected, got: self.theta.len() });
        }
        let n = complex.num_vertices();
        if let Some(g) = self.theta.iter().find(|g| g.num_vars() > n) {
            return Err(Error::Input(format!("`{g}` uses variables beyond x{n}")));
        }
        let sum: i64 = self.degrees.iter().map(|&e| e as i64).sum();
        self.total_degree_t = Some(sum + complex.fh_profile().h_degree as i64 - expected as i64);
        Ok(self)
    }
}

/// Outcome of [`is_sop`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SopCheck {
    pub is_sop: bool,
    pub vanishing_degree: Option<u32>,
    /// Quotient Hilbert function from degree 0 through the vanishing degree
    /// (or through the search bound).
    pub hilbert: Vec<usize>,
}

/// Checks that `I_Δ + (θ)` is artinian: the quotient must vanish by degree
/// `1 + Σ(deg θ_i - 1) + deg h`.
pub fn is_sop(complex: &SimplicialComplex, cand: &SopCandidate) -> Result<SopCheck> {
    let cand = cand.clone().attach(complex)?;
    let q = Quotient::new(complex, &cand.theta)?;
    let bound = 1 + cand.degrees.iter().map(|e| e - 1).sum::<u32>() + complex.fh_profile().h_degree as u32;
    let mut hilbert = Vec::new();
    for k in 0..=bound {
        let h = q.hilbert(k);
        hilbert.push(h);
        if h == 0 {
            return Ok(SopCheck { is_sop: true, vanishing_degree: Some(k), hilbert });
        }
    }
    Ok(SopCheck { is_sop: false, vanishing_degree: None, hilbert })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FailureMode {
    None,
    Injectivity,
    Surjectivity,
    Both,
}

impl FailureMode {
    fn classify(source: usize, target: usize, rank: usize) -> Self {
        if rank == source.min(target) {
            FailureMode::None
        } else if source < target {
            FailureMode::Injectivity
        } else if source > target {
            FailureMode::Surjectivity
        } else {
            FailureMode::Both
        }
    }
}

/// Rank of one multiplication map `A_k -> A_{k+j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub k: u32,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
    pub full_rank: bool,
    pub failure_mode: FailureMode,
}

impl DegreeRank {
    fn new(k: u32, m: &ExactMatrix) -> Self {
        let rank = m.rank();
        let failure_mode = FailureMode::classify(m.cols(), m.rows(), rank);
        DegreeRank {
            k,
            dim_source: m.cols(),
            dim_target: m.rows(),
            rank,
            full_rank: failure_mode == FailureMode::None,
            failure_mode,
        }
    }
}

/// `×L` in every degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlpReport {
    pub holds: bool,
    pub per_degree: Vec<DegreeRank>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<TripletMatrix>>,
}

impl WlpReport {
    pub fn failures(&self) -> impl Iterator<Item = &DegreeRank> {
        self.per_degree.iter().filter(|r| !r.full_rank)
    }
}

/// Ranks of `×L : A_k -> A_{k+1}` for `k = 0..=socle`. Matrices are kept
/// when `embed` is set.
pub fn wlp_check_with(frame: &ArtinianFrame, embed: bool) -> WlpReport {
    let l = frame.sum_of_vars();
    let results: Vec<(DegreeRank, ExactMatrix)> = (0..=frame.socle_degree())
        .into_par_iter()
        .map(|k| {
            let m = frame.multiplication_matrix(&l, k).expect("L is linear");
            (DegreeRank::new(k, &m), m)
        })
        .collect();
    let holds = results.iter().all(|r| r.0.full_rank);
    let matrices = embed.then(|| results.iter().map(|r| r.1.to_triplet_json()).collect());
    WlpReport { holds, per_degree: results.into_iter().map(|r| r.0).collect(), matrices }
}

pub fn wlp_check(frame: &ArtinianFrame) -> WlpReport {
    wlp_check_with(frame, false)
}

/// Ranks of `×L^j : A_k -> A_{k+j}` for all `j >= 1`, `k + j <= socle`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlpReport {
    pub holds: bool,
    pub entries: Vec<PowerRank>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerRank {
    pub j: u32,
    #[serde(flatten)]
    pub rank: DegreeRank,
}

/// The maps `×L^j` are obtained as products of consecutive `×L` matrices.
pub fn slp_check(frame: &ArtinianFrame) -> SlpReport {
    let socle = frame.socle_degree();
    let l = frame.sum_of_vars();
    let steps: Vec<ExactMatrix> = (0..socle)
        .into_par_iter()
        .map(|k| frame.multiplication_matrix(&l, k).expect("L is linear"))
        .collect();
    let mut entries: Vec<PowerRank> = (0..socle)
        .into_par_iter()
        .flat_map_iter(|k| {
            let mut out = Vec::new();
            let mut acc = ExactMatrix::identity(frame.hilbert_function(k));
            for j in 1..=socle - k {
                acc = steps[(k + j - 1) as usize].mul(&acc);
                out.push(PowerRank { j, rank: DegreeRank::new(k, &acc) });
            }
            out
        })
        .collect();
    entries.sort_by_key(|e| (e.j, e.rank.k));
    let holds = entries.iter().all(|e| e.rank.full_rank);
    SlpReport { holds, entries }
}

/// `ker(×L^T : A_k -> A_{k-1})`, as polynomials in the degree-`k` standard
/// monomials. These are the `G` with `L ∘ G = 0`.
pub fn kernel_transpose_basis(frame: &ArtinianFrame, k: u32) -> Result<InverseSystemPiece> {
    if k < 1 {
        return Err(Error::Range("kernel degree must be at least 1".into()));
    }
    let m = frame.multiplication_matrix(&frame.sum_of_vars(), k - 1)?;
    let kernel = m.transpose().kernel_basis();
    let basis = frame.standard_basis(k);
    Ok(InverseSystemPiece {
        degree: k,
        basis: kernel.vectors.iter().map(|v| Polynomial::from_coordinates(basis, v)).collect(),
    })
}

/// `θ_i = Σ_{ρ(v) = i} x_v`.
pub fn colored_sop(complex: &SimplicialComplex, coloring: &Coloring) -> Result<SopCandidate> {
    coloring.check(complex)?;
    let theta = (1..=coloring.k).map(|c| Polynomial::sum_of(&coloring.class(c))).collect();
    SopCandidate::new(theta)?.attach(complex)
}

/// `Σ_{σ ∈ B_1} x_σ - Σ_{σ ∈ B_2} x_σ` over the two sides of the facet-ridge
/// graph, `B_1` being the side of the first facet. The result is checked
/// against the Stanley-Reisner generators, the colored forms, the squares
/// and `L`.
pub fn colored_dual_generator(complex: &SimplicialComplex, coloring: &Coloring) -> Result<Polynomial> {
    if !complex.is_homology_sphere() {
        return Err(Error::Hypothesis("complex is not a homology sphere".into()));
    }
    let sop = colored_sop(complex, coloring)?;
    let frg = facet_ridge_graph(complex)?;
    let (b1, b2) = frg
        .bipartition
        .ok_or_else(|| Error::Hypothesis("facet-ridge graph is not bipartite".into()))?;
    let mut f = Polynomial::zero();
    for (side, sign) in [(b1, BigRational::one()), (b2, -BigRational::one())] {
        for i in side {
            f.add_term(Monomial::squarefree(&frg.facets[i]), sign.clone());
        }
    }
    let n = complex.num_vertices();
    let squares = (0..n).map(|i| Polynomial::monomial(Monomial::power(i, 2)));
    let killers: Vec<Polynomial> = stanley_reisner_generators(complex)
        .generators
        .into_iter()
        .chain(sop.theta)
        .chain(squares)
        .chain([Polynomial::sum_of_vars(n)])
        .collect();
    if let Some(g) = killers.iter().find(|g| !g.contract(&f).is_zero()) {
        return Err(Error::Hypothesis(format!("`{g}` does not annihilate the candidate dual generator")));
    }
    Ok(f)
}

/// `e_1, ..., e_count` in `n` variables.
pub fn universal_sop(n: usize, count: usize) -> Result<SopCandidate> {
    if count < 1 || count > n {
        return Err(Error::Range(format!("count {count} outside 1..={n}")));
    }
    SopCandidate::new((1..=count).map(|k| Polynomial::elementary_symmetric(n, k)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U1Verdict {
    pub pass: bool,
    pub vanishing_degree: Option<u32>,
    pub hilbert: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U2Verdict {
    pub pass: bool,
    pub sum_of_degrees: u32,
    pub h_degree: usize,
    pub d_plus_one: usize,
    pub computed_t: i64,
    pub t: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipWitness {
    pub polynomial: Polynomial,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U3Verdict {
    pub pass: bool,
    pub f: MembershipWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U4Verdict {
    pub pass: bool,
    pub powers: Vec<MembershipWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U5Verdict {
    pub pass: bool,
    pub hf_t: usize,
    pub hf_t_minus_deg_f: usize,
    pub deg_f: u32,
}

/// Verdicts on the five conditions for an unexpected system of parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnexpectedReport {
    pub t: u32,
    pub u1: U1Verdict,
    pub u2: U2Verdict,
    pub u3: U3Verdict,
    pub u4: U4Verdict,
    pub u5: U5Verdict,
    pub overall: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<TripletMatrix>>,
}

/// Checks `cand` against `f`, the caps and the total degree `t`:
///
/// - U1: `θ` is a system of parameters of `R/I_Δ`;
/// - U2: `Σ deg θ_i + deg h_Δ - (d+1) = t`;
/// - U3: `f ∈ I_Δ + (θ)`;
/// - U4: `x_i^{a_i} ∈ I_Δ + (θ)` for every `i`;
/// - U5: `HF(t) <= HF(t - deg f)` on `A_Δ(a)`.
///
/// With `embed`, the report carries the matrix of `×f` from degree
/// `t - deg f` to `t` in `A_Δ(a)`.
pub fn verify_unexpected_with(
    complex: &SimplicialComplex,
    cand: &SopCandidate,
    f: &Polynomial,
    caps: &[u32],
    t: u32,
    embed: bool,
) -> Result<UnexpectedReport> {
    let h_degree = complex.fh_profile().h_degree;
    if (t as usize) < h_degree {
        return Err(Error::Range(format!("t = {t} is below deg h = {h_degree}")));
    }
    if f.is_zero() {
        return Err(Error::Input("f must be nonzero".into()));
    }
    let deg_f = f.require_homogeneous()?;
    let cand = cand.clone().attach(complex)?;
    let frame = ArtinianFrame::new(complex.clone(), caps.to_vec())?;
    let q = Quotient::new(complex, &cand.theta)?;

    let sop = is_sop(complex, &cand)?;
    let u1 = U1Verdict { pass: sop.is_sop, vanishing_degree: sop.vanishing_degree, hilbert: sop.hilbert };

    let computed_t = cand.total_degree_t.expect("attached");
    let u2 = U2Verdict {
        pass: computed_t == t as i64,
        sum_of_degrees: cand.degrees.iter().sum(),
        h_degree,
        d_plus_one: cand.theta.len(),
        computed_t,
        t,
    };

    let member = q.contains(f)?;
    let u3 = U3Verdict { pass: member, f: MembershipWitness { polynomial: f.clone(), member } };

    let powers: Vec<MembershipWitness> = caps
        .par_iter()
        .enumerate()
        .map(|(i, &a)| {
            let p = Polynomial::monomial(Monomial::power(i, a));
            let member = q.contains(&p)?;
            Ok(MembershipWitness { polynomial: p, member })
        })
        .collect::<Result<_>>()?;
    let u4 = U4Verdict { pass: powers.iter().all(|w| w.member), powers };

    let hf_t = frame.hilbert_function(t);
    let hf_t_minus_deg_f = t.checked_sub(deg_f).map_or(0, |k| frame.hilbert_function(k));
    let u5 = U5Verdict { pass: hf_t <= hf_t_minus_deg_f, hf_t, hf_t_minus_deg_f, deg_f };

    let matrices = match (embed, t.checked_sub(deg_f)) {
        (true, Some(k)) => Some(vec![frame.multiplication_matrix(f, k)?.to_triplet_json()]),
        (true, None) => Some(Vec::new()),
        _ => None,
    };
    let overall = u1.pass && u2.pass && u3.pass && u4.pass && u5.pass;
    Ok(UnexpectedReport { t, u1, u2, u3, u4, u5, overall, matrices })
}

pub fn verify_unexpected(
    complex: &SimplicialComplex,
    cand: &SopCandidate,
    f: &Polynomial,
    caps: &[u32],
    t: u32,
) -> Result<UnexpectedReport> {
    verify_unexpected_with(complex, cand, f, caps, t, false)
}

/// Prediction of the WLP of `A_G(a)` for a connected graph `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphWlpVerdict {
    pub wlp: bool,
    pub vertices: usize,
    pub edges: usize,
    /// Subdivision parameter used, `a - 1`.
    pub subdivision: u32,
    pub reason: String,
}

/// WLP holds iff `v > e`, or `v <= e` and `hesd(G, a-1)` is not bipartite.
pub fn graph_wlp_classifier(graph: &SimplicialComplex, a: u32) -> Result<GraphWlpVerdict> {
    if graph.dim() != 1 || !graph.is_pure() {
        return Err(Error::Input("expected a graph (pure of dimension 1)".into()));
    }
    if !Graph::skeleton(graph).is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    if a < 2 {
        return Err(Error::Range("a must be at least 2".into()));
    }
    let (v, e) = (graph.num_vertices(), graph.facets().len());
    let r = a - 1;
    let (wlp, reason) = if v > e {
        (true, format!("v = {v} > e = {e}"))
    } else {
        let sub = hesd(graph, r)?;
        if Graph::skeleton(&sub.complex).is_bipartite() {
            (false, format!("v = {v} <= e = {e} and hesd(G, {r}) is bipartite"))
        } else {
            (true, format!("v = {v} <= e = {e} and hesd(G, {r}) is not bipartite"))
        }
    };
    Ok(GraphWlpVerdict { wlp, vertices: v, edges: e, subdivision: r, reason })
}

/// For `F` in `n` variables with `L • F = 0` and every exponent below `a`,
/// returns whether `deg F <= n(a-1)/2`.
pub fn divergence_bound_check(f: &Polynomial, a: u32, n: usize) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Hypothesis("F is zero".into()));
    }
    if f.num_vars() > n {
        return Err(Error::Hypothesis(format!("F uses variables beyond x{n}")));
    }
    let deg = f.require_homogeneous()?;
    if f.terms().any(|(m, _)| m.max_exponent() >= a) {
        return Err(Error::Hypothesis(format!("F has an exponent of at least {a}")));
    }
    if !Polynomial::sum_of_vars(n).differentiate(f).is_zero() {
        return Err(Error::Hypothesis("L • F is not zero".into()));
    }
    Ok(2 * deg as u64 <= n as u64 * (a as u64 - 1))
}

//! Constructive verification: witnesses showing that some loop set strictly
//! raises a graph's energy, subadditivity and case checks for loop-set
//! complements, and the equienergetic 24n-vertex families built from the
//! two looped cubic bases.

use rayon::prelude::*;

use crate::energy::{energy, energy_self_loop};
use crate::error::{Error, Result};
use crate::graph::{Graph, LoopSet, SelfLoopGraph};
use crate::graph6;
use crate::spectral::{
    cluster_spectrum, join_spectrum_regular, ClusteredSpectrum, RegularBlockSpec, Spectrum,
    CLUSTER_TOL,
};
use crate::DEFAULT_TOL;

/// Which of the three constructive arguments produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessRoute {
    /// Edgeless graph: any proper nonempty loop set works; {0} is used.
    EmptyGraph,
    /// A greedy maximal independent set of some component raised the energy.
    IndependentSet,
    /// The complement of that independent set did.
    ComplementOfIndependentSet,
}

impl WitnessRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessRoute::EmptyGraph => "empty-graph",
            WitnessRoute::IndependentSet => "independent-set",
            WitnessRoute::ComplementOfIndependentSet => "complement-of-independent-set",
        }
    }
}

/// A loop set S together with the energies certifying E(G_S) > E(G).
#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub loop_set: LoopSet,
    pub e_base: f64,
    pub e_loops: f64,
    pub route: WitnessRoute,
}

/// Finds a loop set whose energy strictly exceeds the graph's, beyond the
/// default tolerance.
pub fn conjecture_witness(g: &Graph) -> Result<WitnessCertificate> {
    conjecture_witness_with_tol(g, DEFAULT_TOL)
}

/// Same, with an explicit strictness tolerance.
///
/// Edgeless graphs get the loop set {0}. Otherwise the greedy maximal
/// independent set S of the first component with at least two vertices is
/// tried, then its complement V \ S. If neither exceeds the base energy by
/// more than `tol`, the ambiguity is reported as an error instead of
/// guessing — that would mean either numerical trouble or a counterexample.
pub fn conjecture_witness_with_tol(g: &Graph, tol: f64) -> Result<WitnessCertificate> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let e_base = energy(g)?;

    if g.edge_count() == 0 {
        let loops = LoopSet::from_vertices(&[0]);
        let gs = SelfLoopGraph::new(g.clone(), loops.clone())?;
        let e_loops = energy_self_loop(&gs)?.energy;
        if e_loops <= e_base + tol {
            return Err(Error::ToleranceAmbiguity {
                e_base,
                e_ind: e_loops,
                e_comp: e_loops,
            });
        }
        return Ok(WitnessCertificate {
            loop_set: loops,
            e_base,
            e_loops,
            route: WitnessRoute::EmptyGraph,
        });
    }

    let components = g.connected_components();
    let component = components
        .blocks()
        .iter()
        .find(|b| b.len() >= 2)
        .expect("a graph with edges has a component of size >= 2");
    let independent = g.maximal_independent_set(component)?;
    let loops = LoopSet::from_vertices(&independent);
    let gs = SelfLoopGraph::new(g.clone(), loops.clone())?;
    let e_ind = energy_self_loop(&gs)?.energy;
    if e_ind > e_base + tol {
        return Ok(WitnessCertificate {
            loop_set: loops,
            e_base,
            e_loops: e_ind,
            route: WitnessRoute::IndependentSet,
        });
    }
    let complement = loops.complement(n);
    let e_comp = energy_self_loop(&gs.loop_complement())?.energy;
    if e_comp > e_base + tol {
        return Ok(WitnessCertificate {
            loop_set: complement,
            e_base,
            e_loops: e_comp,
            route: WitnessRoute::ComplementOfIndependentSet,
        });
    }
    Err(Error::ToleranceAmbiguity {
        e_base,
        e_ind,
        e_comp,
    })
}

/// `E(G_S) + E(G_{V \ S}) - 2 E(G)`, which is nonnegative for every S by
/// trace-norm subadditivity.
pub fn check_subadditivity(g: &Graph, s: &LoopSet) -> Result<f64> {
    if g.order() == 0 {
        return Ok(0.0);
    }
    let e = energy(g)?;
    let gs = SelfLoopGraph::new(g.clone(), s.clone())?;
    let e_s = energy_self_loop(&gs)?.energy;
    let e_c = energy_self_loop(&gs.loop_complement())?.energy;
    Ok(e_s + e_c - 2.0 * e)
}

/// One verification failure: the offending input plus what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub input: String,
    pub detail: String,
}

/// Tally of a verification run. Only failures are kept individually.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckSummary {
    total: usize,
    passed: usize,
    failures: Vec<CheckFailure>,
}

impl CheckSummary {
    pub fn new() -> Self {
        CheckSummary::default()
    }

    pub fn record(&mut self, passed: bool, input: impl Into<String>, detail: impl FnOnce() -> String) {
        self.total += 1;
        if passed {
            self.passed += 1;
        } else {
            self.failures.push(CheckFailure {
                input: input.into(),
                detail: detail(),
            });
        }
    }

    pub fn record_failure(&mut self, input: impl Into<String>, detail: impl Into<String>) {
        self.total += 1;
        self.failures.push(CheckFailure {
            input: input.into(),
            detail: detail.into(),
        });
    }

    pub fn record_pass(&mut self) {
        self.total += 1;
        self.passed += 1;
    }

    pub fn merge(&mut self, other: CheckSummary) {
        self.total += other.total;
        self.passed += other.passed;
        self.failures.extend(other.failures);
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn passed(&self) -> usize {
        self.passed
    }

    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    pub fn failures(&self) -> &[CheckFailure] {
        &self.failures
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn record_id(g: &Graph, s: &LoopSet) -> String {
    match SelfLoopGraph::new(g.clone(), s.clone()).and_then(|gs| graph6::format_record(&gs)) {
        Ok(line) => line,
        Err(_) => format!("n={} alpha={}", g.order(), s.alpha()),
    }
}

/// Checks the complement dichotomy on one (G, S) with proper nonempty S:
/// if E(G_S) dips below E(G) the complement must strictly exceed it, and if
/// E(G_S) ties E(G) the complement must not dip below.
pub fn check_complement_dichotomy(g: &Graph, s: &LoopSet) -> Result<CheckSummary> {
    check_complement_dichotomy_with_tol(g, s, DEFAULT_TOL)
}

pub fn check_complement_dichotomy_with_tol(g: &Graph, s: &LoopSet, tol: f64) -> Result<CheckSummary> {
    assert!(
        !s.is_empty() && s.alpha() < g.order(),
        "loop set must be proper and nonempty"
    );
    let e = energy(g)?;
    let gs = SelfLoopGraph::new(g.clone(), s.clone())?;
    let e_s = energy_self_loop(&gs)?.energy;
    let e_c = energy_self_loop(&gs.loop_complement())?.energy;

    let mut summary = CheckSummary::new();
    let strict_ok = e_s >= e - tol || e_c > e + tol;
    let tie_ok = (e_s - e).abs() > tol || e_c >= e - tol;
    summary.record(strict_ok && tie_ok, record_id(g, s), || {
        format!("E = {e}, E_S = {e_s}, E_complement = {e_c}")
    });
    Ok(summary)
}

/// The two 12-vertex cubic bases the equienergetic families are built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyVariant {
    /// Hexagonal prism with a loop on every vertex.
    H1,
    /// Truncated tetrahedron with a loop on every vertex.
    H2,
}

impl FamilyVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyVariant::H1 => "h1",
            FamilyVariant::H2 => "h2",
        }
    }

    pub fn base_graph(self) -> Graph {
        match self {
            FamilyVariant::H1 => Graph::hex_prism(),
            FamilyVariant::H2 => Graph::trunc_tetrahedron(),
        }
    }

    /// Spectrum of the base adjacency plus the identity (loops on all 12
    /// vertices), descending. Row sum 4 comes first.
    fn looped_spectrum(self) -> [f64; 12] {
        match self {
            FamilyVariant::H1 => [
                4.0, 3.0, 3.0, 2.0, 1.0, 1.0, 1.0, 1.0, 0.0, -1.0, -1.0, -2.0,
            ],
            FamilyVariant::H2 => [
                4.0, 3.0, 3.0, 3.0, 1.0, 1.0, 0.0, 0.0, 0.0, -1.0, -1.0, -1.0,
            ],
        }
    }
}

impl std::str::FromStr for FamilyVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h1" => Ok(FamilyVariant::H1),
            "h2" => Ok(FamilyVariant::H2),
            other => Err(Error::UnknownFamily(other.into())),
        }
    }
}

/// What the 12n loop-free vertices look like: no edges, or n cliques of 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyPartner {
    Empty12,
    Complete12,
}

impl FamilyPartner {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyPartner::Empty12 => "empty",
            FamilyPartner::Complete12 => "complete",
        }
    }

    fn copy_graph(self) -> Graph {
        match self {
            FamilyPartner::Empty12 => Graph::empty(12),
            FamilyPartner::Complete12 => Graph::complete(12),
        }
    }

    fn row_sum(self) -> f64 {
        match self {
            FamilyPartner::Empty12 => 0.0,
            FamilyPartner::Complete12 => 11.0,
        }
    }

    /// Residual eigenvalues of n disjoint partner copies, descending.
    fn residual(self, n: usize) -> Vec<f64> {
        match self {
            FamilyPartner::Empty12 => vec![0.0; 12 * n - 1],
            FamilyPartner::Complete12 => {
                let mut v = vec![11.0; n - 1];
                v.extend(std::iter::repeat_n(-1.0, 11 * n));
                v
            }
        }
    }

    /// Closed-form shared energy of the pair at copy count n.
    pub fn closed_form_energy(self, n: usize) -> f64 {
        let nf = n as f64;
        match self {
            FamilyPartner::Empty12 => 24.0 * nf - 4.0 + 4.0 * (36.0 * nf * nf + 1.0).sqrt(),
            FamilyPartner::Complete12 => 45.0 * nf - 14.0 + (576.0 * nf * nf + 49.0).sqrt(),
        }
    }
}

impl std::str::FromStr for FamilyPartner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "empty" => Ok(FamilyPartner::Empty12),
            "complete" => Ok(FamilyPartner::Complete12),
            other => Err(Error::UnknownFamily(other.into())),
        }
    }
}

/// One member of the 24n-vertex construction: n copies of a looped cubic
/// base joined to 12n partner vertices, loops on the whole base side.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub variant: FamilyVariant,
    pub partner: FamilyPartner,
    pub n: usize,
    pub graph: SelfLoopGraph,
    pub predicted_spectrum: ClusteredSpectrum,
    pub predicted_energy: f64,
}

impl FamilyInstance {
    /// The block-spectrum prediction as a flat descending list.
    pub fn predicted_values(&self) -> Spectrum {
        let mut values = Vec::with_capacity(24 * self.n);
        for &(v, m) in self.predicted_spectrum.pairs() {
            values.extend(std::iter::repeat_n(v, m));
        }
        Spectrum::from_unsorted(values)
    }
}

/// Builds the explicit 24n-vertex self-loop graph together with its
/// block-spectrum prediction and closed-form energy.
pub fn build_family(
    variant: FamilyVariant,
    partner: FamilyPartner,
    n: usize,
) -> Result<FamilyInstance> {
    if n == 0 {
        return Err(Error::CopyCountZero);
    }
    let base_side = variant.base_graph().disjoint_copies(n)?;
    let partner_side = partner.copy_graph().disjoint_copies(n)?;
    let joined = base_side.join(&partner_side);
    let loops = LoopSet::full(12 * n);
    let graph = SelfLoopGraph::new(joined, loops)?;

    // residuals of the base side: n copies of the looped base spectrum with
    // one occurrence of the row sum 4 set aside for the join quadratic
    let looped = variant.looped_spectrum();
    let mut residual = Vec::with_capacity(12 * n - 1);
    for _ in 0..n {
        residual.extend_from_slice(&looped[1..]);
    }
    residual.extend(std::iter::repeat_n(looped[0], n - 1));

    let base_block = RegularBlockSpec::new(looped[0], residual, 12 * n)?;
    let partner_block = RegularBlockSpec::new(partner.row_sum(), partner.residual(n), 12 * n)?;
    let predicted = join_spectrum_regular(&base_block, &partner_block, 1.0, 1.0)?;

    Ok(FamilyInstance {
        variant,
        partner,
        n,
        graph,
        predicted_spectrum: cluster_spectrum(&predicted, CLUSTER_TOL),
        predicted_energy: partner.closed_form_energy(n),
    })
}

/// Everything `verify_family_pair` learned about one (partner, n) pair.
#[derive(Clone, Debug)]
pub struct FamilyPairReport {
    pub partner: FamilyPartner,
    pub n: usize,
    /// Eigensolved energy of the hex-prism member.
    pub energy_first: f64,
    /// Eigensolved energy of the truncated-tetrahedron member.
    pub energy_second: f64,
    pub predicted_energy: f64,
    pub summary: CheckSummary,
}

impl FamilyPairReport {
    pub fn equal(&self) -> bool {
        (self.energy_first - self.energy_second).abs() <= DEFAULT_TOL
    }
}

/// Builds both members for one partner and copy count and checks, from the
/// explicit matrices: predicted spectra, equal energies, the closed form,
/// and a structural non-isomorphism certificate.
pub fn verify_family_pair(partner: FamilyPartner, n: usize) -> Result<FamilyPairReport> {
    verify_family_pair_with_tol(partner, n, DEFAULT_TOL)
}

pub fn verify_family_pair_with_tol(
    partner: FamilyPartner,
    n: usize,
    tol: f64,
) -> Result<FamilyPairReport> {
    let first = build_family(FamilyVariant::H1, partner, n)?;
    let second = build_family(FamilyVariant::H2, partner, n)?;
    let mut summary = CheckSummary::new();
    let mut energies = [0.0f64; 2];

    for (slot, instance) in [&first, &second].into_iter().enumerate() {
        let id = format!(
            "variant={} partner={} n={}",
            instance.variant.as_str(),
            partner.as_str(),
            n
        );
        let report = energy_self_loop(&instance.graph)?;
        energies[slot] = report.energy;

        let predicted_values = instance.predicted_values();
        let spread = report.spectrum.max_abs_diff(&predicted_values);
        summary.record(spread <= CLUSTER_TOL, id.clone(), || {
            format!("computed spectrum deviates from block prediction by {spread:.3e}")
        });

        let clustered = cluster_spectrum(&report.spectrum, CLUSTER_TOL);
        let table_ok =
            clustered.matches_table(instance.predicted_spectrum.pairs(), CLUSTER_TOL);
        summary.record(table_ok, id.clone(), || {
            format!(
                "multiplicity table mismatch: computed {:?}, predicted {:?}",
                clustered.pairs(),
                instance.predicted_spectrum.pairs()
            )
        });

        let closed = instance.predicted_energy;
        summary.record((report.energy - closed).abs() <= tol, id, || {
            format!(
                "energy {} deviates from closed form {} by {:.3e}",
                report.energy,
                closed,
                (report.energy - closed).abs()
            )
        });
    }

    let pair_id = format!("partner={} n={}", partner.as_str(), n);
    summary.record(
        (energies[0] - energies[1]).abs() <= tol,
        pair_id.clone(),
        || {
            format!(
                "members are not equienergetic: {} vs {}",
                energies[0], energies[1]
            )
        },
    );

    // the truncated-tetrahedron side carries triangles inside its copies,
    // the hex-prism side does not, so the triangle counts must differ
    let tri_first = first.graph.base().triangle_count();
    let tri_second = second.graph.base().triangle_count();
    summary.record(tri_first != tri_second, pair_id, || {
        format!("triangle counts coincide at {tri_first}; certificate failed")
    });

    Ok(FamilyPairReport {
        partner,
        n,
        energy_first: energies[0],
        energy_second: energies[1],
        predicted_energy: first.predicted_energy,
        summary,
    })
}

/// Runs the constructive witness over every labeled graph on exactly `n`
/// vertices, 2 <= n <= 6. Any witness failure (including tolerance
/// ambiguity) is recorded.
pub fn exhaustive_conjecture_check(n: usize) -> Result<CheckSummary> {
    exhaustive_conjecture_check_with_tol(n, DEFAULT_TOL)
}

pub fn exhaustive_conjecture_check_with_tol(n: usize, tol: f64) -> Result<CheckSummary> {
    if !(2..=6).contains(&n) {
        return Err(Error::EnumerationOrderOutOfRange { n });
    }
    let pairs = n * (n - 1) / 2;
    let outcomes: Vec<Option<CheckFailure>> = (0..1u64 << pairs)
        .into_par_iter()
        .map(|mask| {
            let g = Graph::from_edge_mask(n, mask);
            match conjecture_witness_with_tol(&g, tol) {
                Ok(_) => None,
                Err(e) => Some(CheckFailure {
                    input: graph6::encode_graph6(&g).unwrap_or_else(|_| format!("mask={mask}")),
                    detail: e.to_string(),
                }),
            }
        })
        .collect();

    let mut summary = CheckSummary::new();
    for outcome in outcomes {
        match outcome {
            None => summary.record_pass(),
            Some(failure) => summary.record_failure(failure.input, failure.detail),
        }
    }
    Ok(summary)
}

/// Witness check over an explicit corpus of graphs.
pub fn corpus_conjecture_check(graphs: &[Graph], tol: f64) -> CheckSummary {
    let outcomes: Vec<Option<CheckFailure>> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| match conjecture_witness_with_tol(g, tol) {
            Ok(_) => None,
            Err(e) => Some(CheckFailure {
                input: graph6::encode_graph6(g).unwrap_or_else(|_| format!("index={idx}")),
                detail: e.to_string(),
            }),
        })
        .collect();
    let mut summary = CheckSummary::new();
    for outcome in outcomes {
        match outcome {
            None => summary.record_pass(),
            Some(failure) => summary.record_failure(failure.input, failure.detail),
        }
    }
    summary
}

//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Expected values come from closed forms and frozen multiplicity tables,
//! never from the code paths they are checking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use selfloop_energy::energy::{adjacency, adjacency_with_loops, energy, energy_self_loop};
use selfloop_energy::graph::{Graph, LoopSet, SelfLoopGraph};
use selfloop_energy::spectral::{
    cluster_spectrum, eigenvalues_symmetric, join_spectrum_regular, DenseSymmetricMatrix,
    RegularBlockSpec,
};
use selfloop_energy::verify::{
    build_family, check_subadditivity, exhaustive_conjecture_check, FamilyPartner, FamilyVariant,
};

const TOL: f64 = 1e-8;

fn pass(n: usize, line: &str) {
    println!("[PASS] criterion {n}: {line}");
}

fn looped(g: &Graph, mask: u64) -> SelfLoopGraph {
    SelfLoopGraph::new(g.clone(), LoopSet::from_bit_mask(mask)).unwrap()
}

fn pair_energy(partner: FamilyPartner, n: usize) -> (f64, f64) {
    let e = |variant| {
        let instance = build_family(variant, partner, n).unwrap();
        energy_self_loop(&instance.graph).unwrap().energy
    };
    (e(FamilyVariant::H1), e(FamilyVariant::H2))
}

#[test]
fn acceptance_1_pair_energies_match_closed_form() {
    for n in 1..=5usize {
        let nf = n as f64;
        let closed = 24.0 * nf - 4.0 + 4.0 * (36.0 * nf * nf + 1.0).sqrt();
        let (e1, e2) = pair_energy(FamilyPartner::Empty12, n);
        assert!(
            (e1 - closed).abs() <= TOL,
            "n={n}: first member energy {e1} vs closed form {closed}"
        );
        assert!(
            (e2 - closed).abs() <= TOL,
            "n={n}: second member energy {e2} vs closed form {closed}"
        );
        assert!((e1 - e2).abs() <= TOL, "n={n}: members differ: {e1} vs {e2}");
    }
    pass(
        1,
        "both 24n-vertex members have energy 24n - 4 + 4*sqrt(36n^2+1) for n = 1..5",
    );
}

/// Frozen multiplicity tables for the empty-partner family, descending.
fn expected_clusters(variant: FamilyVariant, n: usize) -> Vec<(f64, usize)> {
    let nf = n as f64;
    let s = 2.0 * (36.0 * nf * nf + 1.0).sqrt();
    let mut table = vec![(2.0 + s, 1)];
    if n > 1 {
        table.push((4.0, n - 1));
    }
    match variant {
        FamilyVariant::H1 => {
            table.extend([
                (3.0, 2 * n),
                (2.0, n),
                (1.0, 4 * n),
                (0.0, 13 * n - 1),
                (-1.0, 2 * n),
                (-2.0, n),
            ]);
        }
        FamilyVariant::H2 => {
            table.extend([(3.0, 3 * n), (1.0, 2 * n), (0.0, 15 * n - 1), (-1.0, 3 * n)]);
        }
    }
    table.push((2.0 - s, 1));
    table
}

#[test]
fn acceptance_2_multiplicity_tables() {
    for n in 1..=3usize {
        for variant in [FamilyVariant::H1, FamilyVariant::H2] {
            let instance = build_family(variant, FamilyPartner::Empty12, n).unwrap();
            let spectrum =
                eigenvalues_symmetric(&adjacency_with_loops(&instance.graph)).unwrap();
            let clustered = cluster_spectrum(&spectrum, 1e-6);
            let expected = expected_clusters(variant, n);
            assert!(
                clustered.matches_table(&expected, 1e-6),
                "variant {variant:?} n={n}: computed {:?}, expected {expected:?}",
                clustered.pairs()
            );
        }
    }
    pass(
        2,
        "clustered spectra match the multiplicity tables (13n-1 and 15n-1 zeros) for n = 1..3",
    );
}

#[test]
fn acceptance_3_complete_partner_closed_form() {
    let closed_at_1 = FamilyPartner::Complete12.closed_form_energy(1);
    assert!(
        (closed_at_1 - 56.0).abs() < 1e-12,
        "closed form at n=1 should be exactly 56, got {closed_at_1}"
    );
    for n in 1..=3usize {
        let nf = n as f64;
        let closed = 45.0 * nf - 14.0 + (576.0 * nf * nf + 49.0).sqrt();
        let (e1, e2) = pair_energy(FamilyPartner::Complete12, n);
        assert!(
            (e1 - closed).abs() <= TOL,
            "n={n}: first member energy {e1} vs derived closed form {closed}"
        );
        assert!(
            (e2 - closed).abs() <= TOL,
            "n={n}: second member energy {e2} vs derived closed form {closed}"
        );
    }
    pass(
        3,
        "complete-partner energies equal 45n - 14 + sqrt(576n^2+49) for n = 1..3 (56 at n = 1)",
    );
}

#[test]
fn acceptance_4_witness_on_all_small_graphs() {
    for n in 2..=6usize {
        let summary = exhaustive_conjecture_check(n).unwrap();
        let expected_total = 1u64 << (n * (n - 1) / 2);
        assert_eq!(summary.total() as u64, expected_total, "n={n}");
        assert!(
            summary.all_passed(),
            "n={n}: {} failures, first: {:?}",
            summary.failed(),
            summary.failures().first()
        );
    }
    pass(
        4,
        "constructive witness succeeds with strict margin on all labeled graphs, n = 2..6",
    );
}

#[test]
fn acceptance_5_subadditivity() {
    // exhaustive: every graph on up to 5 vertices, every proper nonempty S
    for n in 2..=5usize {
        let pairs = n * (n - 1) / 2;
        let worst = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                let mut worst = f64::INFINITY;
                for s_mask in 1..(1u64 << n) - 1 {
                    let gap =
                        check_subadditivity(&g, &LoopSet::from_bit_mask(s_mask)).unwrap();
                    worst = worst.min(gap);
                }
                worst
            })
            .reduce(|| f64::INFINITY, f64::min);
        assert!(worst >= -TOL, "n={n}: worst gap {worst}");
    }

    // random: 10^4 (G, S) pairs on 10 vertices
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let cases: Vec<(Graph, LoopSet)> = (0..10_000)
        .map(|_| {
            let edge_mask: u64 = rng.gen::<u64>() & ((1u64 << 45) - 1);
            let loop_mask: u64 = rng.gen::<u64>() & ((1u64 << 10) - 1);
            (
                Graph::from_edge_mask(10, edge_mask),
                LoopSet::from_bit_mask(loop_mask),
            )
        })
        .collect();
    let worst = cases
        .par_iter()
        .map(|(g, s)| check_subadditivity(g, s).unwrap())
        .reduce(|| f64::INFINITY, f64::min);
    assert!(worst >= -TOL, "random n=10: worst gap {worst}");

    pass(
        5,
        "E(G_S) + E(G_comp) - 2E(G) >= -1e-8 exhaustively (n <= 5) and on 10^4 random pairs (n = 10)",
    );
}

#[test]
fn acceptance_6_bipartite_laws() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        let worst: (f64, f64) = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                if !g.is_bipartite() {
                    return (0.0, 0.0);
                }
                let e_base = energy(&g).unwrap();
                let energies: Vec<f64> = (0..1u64 << n)
                    .map(|s_mask| energy_self_loop(&looped(&g, s_mask)).unwrap().energy)
                    .collect();
                let full = (1u64 << n) - 1;
                let mut asym: f64 = 0.0;
                let mut dip: f64 = 0.0;
                for s_mask in 0..=full {
                    let e_s = energies[s_mask as usize];
                    let e_c = energies[(full ^ s_mask) as usize];
                    asym = asym.max((e_s - e_c).abs());
                    dip = dip.max(e_base - e_s);
                }
                (asym, dip)
            })
            .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
        assert!(
            worst.0 <= TOL,
            "n={n}: complement energies differ by up to {}",
            worst.0
        );
        assert!(
            worst.1 <= TOL,
            "n={n}: energy drops below the base by up to {}",
            worst.1
        );
    }
    pass(
        6,
        "bipartite graphs (n <= 6): E(G_S) = E(G_comp) and E(G_S) >= E(G) for every S",
    );
}

#[test]
fn acceptance_7_looped_cubic_base_spectra() {
    let cases: [(&str, Graph, [f64; 12]); 2] = [
        (
            "hex_prism",
            Graph::hex_prism(),
            [
                -2.0, -1.0, -1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 2.0, 3.0, 3.0, 4.0,
            ],
        ),
        (
            "trunc_tetrahedron",
            Graph::trunc_tetrahedron(),
            [
                -1.0, -1.0, -1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 3.0, 3.0, 3.0, 4.0,
            ],
        ),
    ];
    for (name, g, ascending) in cases {
        let gs = SelfLoopGraph::new(g, LoopSet::full(12)).unwrap();
        let spectrum = eigenvalues_symmetric(&adjacency_with_loops(&gs)).unwrap();
        for (computed, expected) in spectrum.values().iter().zip(ascending.iter().rev()) {
            assert!(
                (computed - expected).abs() <= 1e-9,
                "{name}: computed {computed} vs expected {expected}"
            );
        }
    }
    pass(
        7,
        "looped hex prism and truncated tetrahedron reproduce the 12-value integer spectra",
    );
}

fn known_spectrum_cases() -> Vec<(String, Graph, Vec<f64>)> {
    let mut cases = Vec::new();
    for n in 1..=20usize {
        let mut expected = vec![n as f64 - 1.0];
        expected.extend(vec![-1.0; n - 1]);
        cases.push((format!("K_{n}"), Graph::complete(n), expected));
    }
    for n in 1..=20usize {
        let expected: Vec<f64> = (1..=n)
            .map(|k| 2.0 * (std::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos())
            .collect();
        cases.push((format!("P_{n}"), Graph::path(n).unwrap(), expected));
    }
    for n in 3..=20usize {
        let expected: Vec<f64> = (0..n)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        cases.push((format!("C_{n}"), Graph::cycle(n).unwrap(), expected));
    }
    for (p, q) in [(1, 1), (1, 5), (2, 3), (3, 4), (4, 4), (3, 7), (6, 6)] {
        let r = (p as f64 * q as f64).sqrt();
        let mut expected = vec![r, -r];
        expected.extend(vec![0.0; p + q - 2]);
        cases.push((
            format!("K_{p},{q}"),
            Graph::complete_bipartite(p, q),
            expected,
        ));
    }
    cases
}

#[test]
fn acceptance_8_eigensolver_quality() {
    // identities on random symmetric matrices
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let matrices: Vec<DenseSymmetricMatrix> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=50);
            let mut entries: Vec<f64> = Vec::new();
            let m = DenseSymmetricMatrix::from_fn(n, |_, _| {
                entries.push(rng.gen_range(-1.0..1.0));
                *entries.last().unwrap()
            });
            m
        })
        .collect();
    matrices.par_iter().for_each(|m| {
        let n = m.order() as f64;
        let s = eigenvalues_symmetric(m).unwrap();
        let trace_err = (s.sum() - m.trace()).abs();
        assert!(trace_err <= 1e-9 * n, "trace error {trace_err} at n={n}");
        let sq: f64 = s.values().iter().map(|v| v * v).sum();
        let frob_err = (sq - m.frobenius_norm().powi(2)).abs();
        assert!(frob_err <= 1e-9 * n, "frobenius error {frob_err} at n={n}");
    });

    // named families against their closed-form spectra
    for (name, g, expected) in known_spectrum_cases() {
        let mut expected = expected;
        expected.sort_unstable_by(|a, b| b.total_cmp(a));
        let s = eigenvalues_symmetric(&adjacency(&g)).unwrap();
        assert_eq!(s.len(), expected.len(), "{name}");
        for (computed, reference) in s.values().iter().zip(&expected) {
            assert!(
                (computed - reference).abs() <= 1e-9,
                "{name}: computed {computed} vs {reference}"
            );
        }
    }
    pass(
        8,
        "trace/Frobenius identities on 10^3 random matrices; K_n, P_n, C_n, K_pq spectra within 1e-9",
    );
}

/// Random symmetric matrix with constant row sums: 0/1 off-diagonal
/// entries, diagonal topped up to the maximum degree.
fn random_row_regular(rng: &mut ChaCha8Rng, max_order: usize) -> DenseSymmetricMatrix {
    let n = rng.gen_range(1..=max_order);
    let mut m = DenseSymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                m.set_sym(i, j, 1.0);
            }
        }
    }
    let degrees: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).sum())
        .collect();
    let max_degree = degrees.iter().cloned().fold(0.0, f64::max);
    for (i, degree) in degrees.iter().enumerate() {
        m.set_sym(i, i, max_degree - degree);
    }
    m
}

fn block_spec_of(m: &DenseSymmetricMatrix) -> RegularBlockSpec {
    let n = m.order();
    let row_sum: f64 = (0..n).map(|j| m.get(0, j)).sum();
    let spectrum = eigenvalues_symmetric(m).unwrap();
    // the all-ones vector is an eigenvector, so one eigenvalue sits at the
    // row sum; drop the closest occurrence to form the residual list
    let closest = spectrum
        .values()
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (*a - row_sum).abs().total_cmp(&(*b - row_sum).abs())
        })
        .map(|(i, v)| (i, *v))
        .unwrap();
    assert!(
        (closest.1 - row_sum).abs() <= 1e-9,
        "no eigenvalue near the row sum {row_sum}"
    );
    let residual: Vec<f64> = spectrum
        .values()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != closest.0)
        .map(|(_, v)| *v)
        .collect();
    RegularBlockSpec::new(row_sum, residual, n).unwrap()
}

fn join_matrix(m1: &DenseSymmetricMatrix, m2: &DenseSymmetricMatrix) -> DenseSymmetricMatrix {
    let (n1, n2) = (m1.order(), m2.order());
    DenseSymmetricMatrix::from_fn(n1 + n2, |i, j| {
        if i < n1 && j < n1 {
            m1.get(i, j)
        } else if i >= n1 && j >= n1 {
            m2.get(i - n1, j - n1)
        } else {
            1.0
        }
    })
}

#[test]
fn acceptance_9_join_rule_matches_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for case in 0..100 {
        let m1 = random_row_regular(&mut rng, 16);
        let m2 = random_row_regular(&mut rng, 16);
        let predicted = join_spectrum_regular(&block_spec_of(&m1), &block_spec_of(&m2), 1.0, 1.0)
            .unwrap();
        let direct = eigenvalues_symmetric(&join_matrix(&m1, &m2)).unwrap();
        let spread = predicted.max_abs_diff(&direct);
        assert!(
            spread <= TOL,
            "case {case}: block rule deviates from direct eigensolve by {spread:.3e}"
        );
    }
    pass(
        9,
        "block join rule equals direct eigensolve on 100 random constant-row-sum pairs",
    );
}

//! The block join rule: joining two graphs with constant row sums keeps
//! both residual spectra and replaces the two row-sum eigenvalues with the
//! roots of (x - r1)(x - r2) - n1 n2 = 0. Here the rule is checked against
//! the eigensolver on explicit matrices.
//!
//! ```bash
//! cargo run -p selfloop-energy --example join_spectrum
//! ```

use selfloop_energy::energy::adjacency;
use selfloop_energy::graph::Graph;
use selfloop_energy::report::fmt_sig12;
use selfloop_energy::spectral::{
    eigenvalues_symmetric, join_spectrum_regular, RegularBlockSpec,
};
use selfloop_energy::Result;

/// Splits the eigensolved spectrum of a regular graph into its row-sum
/// eigenvalue and the residual list.
fn block_spec(g: &Graph) -> Result<RegularBlockSpec> {
    let degree = g
        .regular_degree()
        .expect("block spec needs a regular graph") as f64;
    let spectrum = eigenvalues_symmetric(&adjacency(g))?;
    let mut residual = spectrum.values().to_vec();
    let at = residual
        .iter()
        .position(|v| (v - degree).abs() < 1e-9)
        .expect("a regular graph has its degree in the spectrum");
    residual.remove(at);
    RegularBlockSpec::new(degree, residual, g.order())
}

fn main() -> Result<()> {
    let pairs: Vec<(String, Graph, Graph)> = vec![
        ("empty(3) v empty(4) = K_{3,4}".into(), Graph::empty(3), Graph::empty(4)),
        ("C_4 v K_2".into(), Graph::cycle(4)?, Graph::complete(2)),
        ("C_6 v C_6".into(), Graph::cycle(6)?, Graph::cycle(6)?),
        (
            "hex prism v trunc tetrahedron".into(),
            Graph::hex_prism(),
            Graph::trunc_tetrahedron(),
        ),
    ];

    for (name, g, h) in &pairs {
        let predicted = join_spectrum_regular(&block_spec(g)?, &block_spec(h)?, 1.0, 1.0)?;
        let direct = eigenvalues_symmetric(&adjacency(&g.join(h)))?;
        let spread = predicted.max_abs_diff(&direct);
        println!("{name}");
        let shown: Vec<String> = predicted
            .values()
            .iter()
            .take(6)
            .map(|v| fmt_sig12(*v))
            .collect();
        println!(
            "  predicted spectrum starts [{}, ...]; max deviation from eigensolver {spread:.2e}",
            shown.join(", "),
        );
    }
    Ok(())
}

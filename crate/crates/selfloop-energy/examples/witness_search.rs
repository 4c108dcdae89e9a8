//! Constructive witnesses: for every graph on at least two vertices some
//! loop set strictly increases the energy. Edgeless graphs use a single
//! loop; everything else tries a greedy maximal independent set of a
//! component, then its complement.
//!
//! ```bash
//! cargo run -p selfloop-energy --example witness_search
//! ```

use selfloop_energy::graph::Graph;
use selfloop_energy::report::fmt_sig12;
use selfloop_energy::verify::conjecture_witness;
use selfloop_energy::Result;

fn main() -> Result<()> {
    let cases: Vec<(String, Graph)> = vec![
        ("empty(2)".into(), Graph::empty(2)),
        ("K_2".into(), Graph::complete(2)),
        ("P_3".into(), Graph::path(3)?),
        ("C_5".into(), Graph::cycle(5)?),
        ("K_5".into(), Graph::complete(5)),
        ("K_{2,3}".into(), Graph::complete_bipartite(2, 3)),
        ("hex prism".into(), Graph::hex_prism()),
        ("trunc tetrahedron".into(), Graph::trunc_tetrahedron()),
        (
            "2 K_3 + isolated vertex".into(),
            Graph::complete(3).disjoint_copies(2)?.join(&Graph::empty(0)),
        ),
    ];

    for (name, g) in &cases {
        let cert = conjecture_witness(g)?;
        let members: Vec<String> = cert.loop_set.iter().map(|v| v.to_string()).collect();
        println!(
            "{name}: route {} with S = {{{}}}: E(G) = {} < E(G_S) = {}  (margin {})",
            cert.route.as_str(),
            members.join(","),
            fmt_sig12(cert.e_base),
            fmt_sig12(cert.e_loops),
            fmt_sig12(cert.e_loops - cert.e_base),
        );
    }
    Ok(())
}

//! Energies of a few named graphs, with and without self-loops.
//!
//! ```bash
//! cargo run -p selfloop-energy --example energy_basics
//! ```

use selfloop_energy::energy::{energy, energy_self_loop};
use selfloop_energy::graph::{Graph, LoopSet, SelfLoopGraph};
use selfloop_energy::report::fmt_sig12;
use selfloop_energy::Result;

fn main() -> Result<()> {
    println!("plain graph energies");
    for (name, g) in [
        ("K_2", Graph::complete(2)),
        ("K_3", Graph::complete(3)),
        ("P_3", Graph::path(3)?),
        ("C_4", Graph::cycle(4)?),
        ("K_{3,4}", Graph::complete_bipartite(3, 4)),
        ("hex prism", Graph::hex_prism()),
        ("trunc tetrahedron", Graph::trunc_tetrahedron()),
    ] {
        println!("  E({name}) = {}", fmt_sig12(energy(&g)?));
    }

    println!();
    println!("self-loop energies E(G_S) = sum |lambda_i - alpha/n|");
    let cases: [(&str, Graph, Vec<usize>); 4] = [
        ("K_2 with a loop at 0", Graph::complete(2), vec![0]),
        ("P_3 with a loop at the middle", Graph::path(3)?, vec![1]),
        ("P_3 with loops at both ends", Graph::path(3)?, vec![0, 2]),
        ("empty graph on 4, loops on 2", Graph::empty(4), vec![0, 1]),
    ];
    for (name, g, loops) in cases {
        let gs = SelfLoopGraph::new(g, LoopSet::from_vertices(&loops))?;
        let r = energy_self_loop(&gs)?;
        println!(
            "  {name}: alpha = {}, shift = {}, E = {}",
            r.alpha,
            r.shift,
            fmt_sig12(r.energy)
        );
    }

    // the two P_3 loop sets above are complements of each other; P_3 is
    // bipartite, so their energies coincide
    println!();
    println!("note: the two P_3 values agree because P_3 is bipartite and");
    println!("      complementary loop sets on bipartite graphs are equienergetic");
    Ok(())
}

//! The corpus file format: one `graph6[ : hexmask]` record per line, where
//! the hex mask marks looped vertices (digit k covers vertices 4k..4k+3).
//! This example writes a small corpus, reads it back, and prints the
//! energy of every record.
//!
//! ```bash
//! cargo run -p selfloop-energy --example graph6_corpus
//! ```

use selfloop_energy::energy::energy_self_loop;
use selfloop_energy::graph::{Graph, LoopSet, SelfLoopGraph};
use selfloop_energy::graph6::{format_record, parse_corpus};
use selfloop_energy::report::fmt_sig12;
use selfloop_energy::Result;

fn main() -> Result<()> {
    let records: Vec<SelfLoopGraph> = vec![
        SelfLoopGraph::new(Graph::complete(2), LoopSet::from_vertices(&[0]))?,
        SelfLoopGraph::new(Graph::path(3)?, LoopSet::from_vertices(&[1]))?,
        SelfLoopGraph::new(Graph::cycle(5)?, LoopSet::from_vertices(&[0, 2]))?,
        SelfLoopGraph::new(Graph::hex_prism(), LoopSet::full(12))?,
        SelfLoopGraph::new(Graph::trunc_tetrahedron(), LoopSet::full(12))?,
        SelfLoopGraph::new(Graph::complete_bipartite(2, 2), LoopSet::empty())?,
    ];

    let mut corpus = String::from("# energies of a few self-loop graphs\n");
    for gs in &records {
        corpus.push_str(&format_record(gs)?);
        corpus.push('\n');
    }
    println!("corpus file contents:");
    print!("{corpus}");

    println!();
    println!("parsed back and evaluated:");
    for gs in parse_corpus(&corpus)? {
        let line = format_record(&gs)?;
        let r = energy_self_loop(&gs)?;
        println!(
            "  {line:<22} n = {:>2}, alpha = {:>2}, E = {}",
            r.n,
            r.alpha,
            fmt_sig12(r.energy)
        );
    }
    Ok(())
}

//! The 24n-vertex equienergetic pairs: n copies of a looped cubic base
//! (hexagonal prism or truncated tetrahedron) joined to 12n partner
//! vertices. The two members are non-isomorphic (one side has triangles,
//! the other does not) yet share the same energy for every n.
//!
//! ```bash
//! cargo run -p selfloop-energy --example equienergetic_family
//! ```

use selfloop_energy::report::fmt_sig12;
use selfloop_energy::verify::{build_family, verify_family_pair, FamilyPartner, FamilyVariant};
use selfloop_energy::Result;

fn main() -> Result<()> {
    for partner in [FamilyPartner::Empty12, FamilyPartner::Complete12] {
        println!("partner side: {} 12-vertex blocks", partner.as_str());
        for n in 1..=3usize {
            let report = verify_family_pair(partner, n)?;
            println!(
                "  n = {n}: 24n = {} vertices, shared energy {} (closed form {}), \
                 equal = {}, checks {}/{}",
                24 * n,
                fmt_sig12(report.energy_first),
                fmt_sig12(report.predicted_energy),
                report.equal(),
                report.summary.passed(),
                report.summary.total(),
            );
        }
        println!();
    }

    // the predicted multiplicity table for one member, straight from the
    // block join rule
    let instance = build_family(FamilyVariant::H2, FamilyPartner::Empty12, 2)?;
    println!(
        "predicted clusters for the truncated-tetrahedron member, empty partner, n = 2:"
    );
    for &(value, multiplicity) in instance.predicted_spectrum.pairs() {
        println!("  {:>16} x {multiplicity}", fmt_sig12(value));
    }
    Ok(())
}

//! Classifies `P` and `Q` under each embedding and prints the 8×8 regular
//! representation `Ψ(P)` together with its spectral data.

use sl2prod::construction::paper_generators;
use sl2prod::linalg::{classify, regular_rep};
use sl2prod::projective::{hyperbolic_like, SpectralSource};

fn main() -> sl2prod::Result<()> {
    let (p, q) = paper_generators();
    for (name, m) in [("P", &p), ("Q", &q)] {
        for k in 0..4 {
            let c = classify(m, k)?;
            println!("sigma_{k}({name}): {:?}, trace {}", c.class, c.trace);
        }
    }
    println!("\nPsi(P):");
    for row in regular_rep(&p, 4)?.m.rows_as_strings() {
        println!("  {}", row.join("\t"));
    }
    match hyperbolic_like(&SpectralSource::Psi(p))? {
        Some(d) => println!(
            "Psi(P) is hyperbolic-like; dominant block sigma_{}",
            d.block
        ),
        None => println!("Psi(P) is not hyperbolic-like"),
    }
    let q_like = hyperbolic_like(&SpectralSource::Psi(q))?.is_some();
    println!("Psi(Q) hyperbolic-like: {q_like}");
    Ok(())
}

//! Freeness and discreteness probes for `⟨Pᴺ, Qᴺ⟩` at the certified `N`:
//! no short relations, the margin profile over word length, and torsion.

use sl2prod::construction::paper_generators;
use sl2prod::probe::{
    margin_profile, torsion_probe, trivial_words, GeneratorSet, WordFamily, DEFAULT_DEPTH_CAP,
};
use sl2prod::projective::free_pair_power;
use sl2prod::ring::ratio;

fn main() -> sl2prod::Result<()> {
    let (p, q) = paper_generators();
    let n = free_pair_power(&p, &q)?.n;
    let (found, count) = trivial_words(&GeneratorSet::new(&p.pow_u(n), &q.pow_u(n))?, 6);
    println!(
        "N = {n}: {count} words of length <= 6, {} evaluate to +-I",
        found.len()
    );

    let fam = WordFamily::new(&p, &q, n, [0, 1], 2)?;
    for row in margin_profile(&fam, 6, DEFAULT_DEPTH_CAP, &ratio(1, 100))? {
        println!(
            "L = {}: margin in {}, witness {}, escape {}",
            row.l,
            row.margin,
            row.witness,
            row.escape_holds()
        );
    }
    println!("torsion of P: {:?}", torsion_probe(&p, 0, 10_000)?.result);
    Ok(())
}

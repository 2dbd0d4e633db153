//! Checks the constant sequence `Pₙ = P` against the limit conditions and
//! runs a small deterministic search for sequences that pass them.

use sl2prod::construction::paper_generators;
use sl2prod::limits::{
    check_limit_conditions, paper_q, search_limit_candidates, LimitCandidate, LimitTargets,
};

fn main() -> sl2prod::Result<()> {
    let (p, _) = paper_generators();
    let (targets, q) = (LimitTargets::default_targets(), paper_q());
    let report = check_limit_conditions(&LimitCandidate::new(p)?, &targets, &q)?;
    for c in report.failing() {
        println!("constant sequence fails ({}): {}", c.id, c.name);
    }
    for c in search_limit_candidates(1, &targets, &q, 5)? {
        let r = check_limit_conditions(&c, &targets, &q)?;
        println!(
            "candidate {}  (iv) {}  (viii) {}",
            c.p_n,
            r.holds("iv"),
            r.holds("viii")
        );
    }
    Ok(())
}

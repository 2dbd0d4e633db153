//! Closed forms for `Qⁿσ₂(A)Q⁻ⁿ`, the Pell quantities behind `trace(Qⁿ)`
//! and the inequality probes, for one sample matrix `A`.

use sl2prod::construction::{
    chebyshev, conjugation_record, inequality_probe, InequalityParams, PROBED_INEQUALITIES,
};
use sl2prod::linalg::RingMat2;

fn main() -> sl2prod::Result<()> {
    let a: RingMat2 = "1 0 0 0; 1 -1 1 0; 0 0 0 0; 1 0 0 0".parse()?;
    for n in 0..=4 {
        let rec = conjugation_record(&a, n)?;
        println!(
            "n = {n}: a_n = {}, b_n = {}, closed form matches: {}",
            rec.a_n, rec.b_n, rec.closed_form_matches
        );
    }
    for n in [1, 5, 10, 20] {
        println!("trace(Q^{n}) = {}", chebyshev(n).as_quad());
    }
    let params = InequalityParams::default();
    for w in PROBED_INEQUALITIES {
        let r = inequality_probe(&a, w, &params)?;
        println!(
            "inequality {w}: {} ({} checks, combined with {})",
            r.holds,
            r.checks.len(),
            r.combine
        );
    }
    Ok(())
}

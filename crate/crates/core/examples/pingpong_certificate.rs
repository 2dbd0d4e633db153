//! Finds the least `N` for which the ping-pong table of `σ₂(P)ᴺ, σ₂(Q)ᴺ`
//! certifies, then re-checks the certificate from its JSON alone.

use sl2prod::construction::paper_generators;
use sl2prod::projective::{check_certificate, free_pair_power, PingPongCertificate};

fn main() -> sl2prod::Result<()> {
    let (p, q) = paper_generators();
    let cert = free_pair_power(&p, &q)?;
    println!("certified N = {}", cert.n);
    for ball in &cert.balls {
        println!(
            "  ball {:5} center ({}, {}) radius {}",
            ball.label, ball.center[0], ball.center[1], ball.radius
        );
    }
    let json = cert.to_json();
    let back = PingPongCertificate::from_json(&json)?;
    for c in check_certificate(&back)? {
        println!("  [{}] {}", if c.holds { "ok" } else { "FAILED" }, c.name);
    }
    Ok(())
}

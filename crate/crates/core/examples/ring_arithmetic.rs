//! Exact arithmetic in `Z[β]`, `β = 2^(1/4)`: products, inverses, exact
//! signs and the four Galois embeddings.

use sl2prod::ring::{field_quantity_n, galois, QuarticElem};

fn main() -> sl2prod::Result<()> {
    let x: QuarticElem = "1 -1 0 0".parse()?;
    let y = QuarticElem::from_ints([3, 0, 2, 0]);
    println!("x = {x}");
    println!("y = {y}");
    println!("x * y = {}", &x * &y);
    println!("1/x = {}", x.inv()?);
    println!("sign(x) = {:?}  (x ~ {:.6})", x.sign(), x.to_f64());
    println!("N(x) = {}", field_quantity_n(&x)?);
    for k in 0..4 {
        let (re, im) = galois(&x, k).to_f64_pair();
        println!("sigma_{k}(x) = {re:+.6} {im:+.6}i");
    }
    Ok(())
}

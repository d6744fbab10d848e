// Rectifying Schur functions indexed by compositions, and rebuilding a
// low-level product from the reduced one.

use redkron::partition::parse_composition;
use redkron::products::{expand_at_level, straighten};
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["[1,3]", "[1,2,1]", "[0,3,1]", "[0,2,1,1]", "[-1,2]"] {
        println!("s{text} = {}", straighten(&parse_composition(text)?));
    }

    // [2,1,1][2,2] from [1,1]•⋆[2]• by straightening each ν[4]
    let kernel = Kernel::new();
    let (lambda, mu) = (partition![1, 1], partition![2]);
    let reduced = kernel.reduced_product(&lambda, &mu)?;
    let rebuilt = expand_at_level(&reduced, 4);
    assert_eq!(rebuilt, kernel.signed_product_at_level(&lambda, &mu, 4)?);
    let terms: Vec<String> = rebuilt.iter().map(|(p, c)| format!("{c}{p}")).collect();
    println!("[2,1,1][2,2] = {}", terms.join(" + "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

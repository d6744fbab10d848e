// Kronecker products [λ[n]][μ[n]] settling down as n grows.

use redkron::products::stable_level;
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kernel = Kernel::new();
    let (lambda, mu) = (partition![1, 1], partition![2]);
    for n in 4..=8 {
        let a = lambda.at_level(n).expect("above threshold");
        let b = mu.at_level(n).expect("above threshold");
        println!("{a}{b} = {}", kernel.product_at_level(&lambda, &mu, n)?);
    }
    println!("stable from n = {}", stable_level(&lambda, &mu));
    println!("reduced: {}", kernel.reduced_product(&lambda, &mu)?);
    println!(
        "g([3,1],[2,2],[2,1,1]) = {}",
        kernel.kron_coeff(&partition![3, 1], &partition![2, 2], &partition![2, 1, 1])?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

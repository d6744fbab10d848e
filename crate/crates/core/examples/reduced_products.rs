// Reduced Kronecker products, their cc-types and the closed forms for
// [1]• ⋆ [λ]• and [n−1,1][λ].

use redkron::analysis::{cc_type, one_box_pairs};
use redkron::products::{hook_kron_closed, star_one_closed};
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kernel = Kernel::new();
    for (lambda, mu) in [
        (partition![1, 1], partition![2]),
        (partition![2], partition![2]),
        (partition![1, 1], partition![1, 1]),
        (partition![1], partition![3, 2, 1]),
    ] {
        let d = kernel.reduced_product(&lambda, &mu)?;
        println!("{lambda} * {mu} = {d}");
        println!(
            "  cc-type {}, one-box pairs {}",
            cc_type(&d),
            one_box_pairs(&d)
        );
    }

    let shape = partition![3, 2, 1];
    assert_eq!(
        star_one_closed(&shape),
        kernel.reduced_product(&partition![1], &shape)?
    );
    let hook = partition![5, 1];
    assert_eq!(
        hook_kron_closed(&shape)?,
        kernel.kron_product(&hook, &shape)?
    );
    println!("[5,1][3,2,1] = {}", hook_kron_closed(&shape)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

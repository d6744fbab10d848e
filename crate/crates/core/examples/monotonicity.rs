// Coefficients only grow when factors grow: checked on explicit and on
// random witnesses.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use redkron::analysis::{monotonicity_check, random_witness, MonotonicityKind, Triple, Witness};
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kernel = Kernel::new();
    let w = Witness::ReducedAdd {
        base: Triple(partition![1, 1], partition![2], partition![1, 1]),
        step: Triple(partition![1], partition![], partition![1]),
    };
    println!("{:?}: {}", w.kind(), monotonicity_check(&kernel, &w)?);
    println!(
        "g([2,1],[2],[2,1]) = {}",
        kernel.reduced_coeff(&partition![2, 1], &partition![2], &partition![2, 1])?
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for kind in MonotonicityKind::ALL {
        let mut held = 0;
        for _ in 0..50 {
            let w = random_witness(&kernel, kind, &mut rng)?;
            if monotonicity_check(&kernel, &w)? {
                held += 1;
            }
        }
        println!("{kind}: {held}/50");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

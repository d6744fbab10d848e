// Probing saturation for reduced Kronecker coefficients. This is a
// conjecture, so the probe only reports.

use redkron::analysis::saturation_probe;
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // scaled triples reach level 24
    let kernel = Kernel::new().with_max_level(24);
    for (a, b, c) in [
        (partition![1, 1], partition![2], partition![1, 1]),
        (partition![2], partition![2], partition![2]),
        (partition![1], partition![1], partition![3]),
        (partition![3], partition![3], partition![3]),
    ] {
        let r = saturation_probe(&kernel, &a, &b, &c, 2)?;
        println!(
            "({a}, {b}, {c}): scaled {}, base {}, counterexample {}",
            r.scaled,
            r.base,
            r.counterexample()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// Lower bounds for components, constituents and one-box pairs, in terms of
// the number of distinct parts.

use redkron::analysis::{lower_bounds, outer_bound_check};
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kernel = Kernel::new();
    for (lambda, mu) in [
        (partition![1], partition![1]),
        (partition![2, 1], partition![1]),
        (partition![3, 1], partition![2, 1]),
        (partition![3, 2, 1], partition![2]),
    ] {
        let r = lower_bounds(&kernel, &lambda, &mu)?;
        println!(
            "{lambda} * {mu}: dp = ({}, {}), bounds ({}, {}, {}), actual {:?}",
            r.n, r.m, r.component_lb, r.constituent_lb, r.pair_lb, r.actual
        );
        assert!(r.holds());
    }
    assert!(outer_bound_check(&partition![3, 1], &partition![2, 1])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// Which reduced products are multiplicity free or have few components.

use redkron::analysis::{cc_type, classify_product};
use redkron::partition::partitions_up_to;
use redkron::Kernel;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kernel = Kernel::new();
    let shapes = partitions_up_to(3);
    for a in &shapes {
        for b in &shapes {
            if a > b {
                continue;
            }
            let case = classify_product(a, b);
            let product = kernel.reduced_product(a, b)?;
            let cc = cc_type(&product);
            assert_eq!(case.multiplicity_free(), product.is_multiplicity_free());
            assert_eq!(case.few_components(), cc.components < 10);
            println!("{a:>8} * {b:<8} {:<22} {cc}", case.tag.to_string());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

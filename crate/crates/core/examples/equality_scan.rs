// Distinct factor pairs never share an outer or a reduced product.

use redkron::analysis::{equality_scan, ProductKind};
use redkron::Kernel;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kernel = Kernel::new();
    for kind in [ProductKind::Outer, ProductKind::Reduced] {
        let collisions = equality_scan(&kernel, kind, 4)?;
        println!("{kind:?}: {} collisions up to size 4", collisions.len());
        for c in &collisions {
            println!("  {:?} -> {}", c.pairs, c.product);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

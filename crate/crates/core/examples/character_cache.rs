// Writing character tables to disk and reading them back.

use redkron::characters::{cache_file_name, CharacterStore};
use redkron::{partition, Kernel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("redkron-example-{}", std::process::id()));
    let store = CharacterStore::new();
    for n in 0..=8 {
        store.write_cache(n, &dir)?;
    }
    println!("wrote {}", dir.join(cache_file_name(8)).display());

    let warm = Kernel::new().with_cache_dir(&dir);
    let cold = Kernel::new();
    let (a, b) = (partition![1], partition![2, 1]);
    assert_eq!(warm.reduced_product(&a, &b)?, cold.reduced_product(&a, &b)?);
    println!("{a} * {b} = {}", warm.reduced_product(&a, &b)?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// One-box pairs in [1]• ⋆ [δ_n]•, by how each component arises from δ_n.

use redkron::analysis::{dd_pair_count, pair_census_staircase, printed_census_entry, PairCensus};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=5 {
        let census = pair_census_staircase(n);
        println!("n={n}");
        for (x, y) in PairCensus::pair_types() {
            println!(
                "  ({x},{y}): counted {:>3}, printed formula {:>3}",
                census.get(x, y),
                printed_census_entry(n, x, y)
            );
        }
        println!("  (d,d) closed form {}", dd_pair_count(n));
        println!("  total without (b,b): {}", census.total_excluding_bb());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

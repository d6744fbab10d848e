// Character table of S_5 by the Murnaghan–Nakayama rule.

use redkron::characters::CharacterStore;
use redkron::partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let store = CharacterStore::new();
    let table = store.table(5)?;

    let header: Vec<String> = table
        .classes()
        .iter()
        .map(|c| c.cycles().to_string())
        .collect();
    println!("{:>12} {}", "", header.join(" "));
    for (row, shape) in table.partitions().iter().enumerate() {
        let values: Vec<String> = table.row(row).iter().map(|v| format!("{v:>3}")).collect();
        println!("{:>12} {}", shape.to_string(), values.join(" "));
    }

    // row orthogonality: sum over classes of |C| χ(ρ)² = n!
    let norm: i128 = table
        .classes()
        .iter()
        .enumerate()
        .map(|(col, c)| c.class_size() as i128 * (table.value(2, col) as i128).pow(2))
        .sum();
    assert_eq!(norm, 120);

    let chi = store.character_value_at(&partition![3, 2], &partition![2, 2, 1])?;
    println!("chi^[3,2]([2,2,1]) = {chi}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

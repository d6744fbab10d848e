// Partitions, the two ways of gluing diagrams, and the counting sequences.

use redkron::partition::{is_larger, parse_partition, sequence, SequenceKind};
use redkron::{partition, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "[4,2,1,1]".parse()?;
    println!(
        "{lambda}: size {}, conjugate {}",
        lambda.size(),
        lambda.conjugate()
    );

    let tau = partition![2, 1];
    println!("{lambda} + {tau} = {}", lambda.plus(&tau));
    println!("{lambda} u {tau} = {}", lambda.union(&tau));
    println!(
        "{lambda} padded to 12: {}",
        lambda.at_level(12).expect("above threshold")
    );

    // (2,1) grows from (1) by a row step and a column step
    assert!(is_larger(&partition![2, 1], &partition![1]));
    assert!(!is_larger(&partition![3], &partition![1, 1]));

    if let Err(e) = parse_partition("[1,2]") {
        println!("rejected [1,2]: {e}");
    }

    for n in 1..=8 {
        println!(
            "n={n}: p={} f={} g={}",
            sequence(SequenceKind::P, n),
            sequence(SequenceKind::F, n),
            sequence(SequenceKind::G, n)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

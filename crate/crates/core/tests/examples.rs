mod partitions {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/partitions.rs"
    ));
}

mod character_table {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/character_table.rs"
    ));
}

mod kronecker_ladder {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/kronecker_ladder.rs"
    ));
}

mod straightening {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/straightening.rs"
    ));
}

mod reduced_products {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/reduced_products.rs"
    ));
}

mod classification {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/classification.rs"
    ));
}

mod lower_bounds {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/lower_bounds.rs"
    ));
}

mod staircase_census {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/staircase_census.rs"
    ));
}

mod equality_scan {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/equality_scan.rs"
    ));
}

mod saturation_probe {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/saturation_probe.rs"
    ));
}

mod monotonicity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/monotonicity.rs"
    ));
}

mod character_cache {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/character_cache.rs"
    ));
}

#[test]
fn partitions_example_runs() {
    partitions::run_example().expect("partitions example should run");
}

#[test]
fn character_table_example_runs() {
    character_table::run_example().expect("character_table example should run");
}

#[test]
fn kronecker_ladder_example_runs() {
    kronecker_ladder::run_example().expect("kronecker_ladder example should run");
}

#[test]
fn straightening_example_runs() {
    straightening::run_example().expect("straightening example should run");
}

#[test]
fn reduced_products_example_runs() {
    reduced_products::run_example().expect("reduced_products example should run");
}

#[test]
fn classification_example_runs() {
    classification::run_example().expect("classification example should run");
}

#[test]
fn lower_bounds_example_runs() {
    lower_bounds::run_example().expect("lower_bounds example should run");
}

#[test]
fn staircase_census_example_runs() {
    staircase_census::run_example().expect("staircase_census example should run");
}

#[test]
fn equality_scan_example_runs() {
    equality_scan::run_example().expect("equality_scan example should run");
}

#[test]
fn saturation_probe_example_runs() {
    saturation_probe::run_example().expect("saturation_probe example should run");
}

#[test]
fn monotonicity_example_runs() {
    monotonicity::run_example().expect("monotonicity example should run");
}

#[test]
fn character_cache_example_runs() {
    character_cache::run_example().expect("character_cache example should run");
}

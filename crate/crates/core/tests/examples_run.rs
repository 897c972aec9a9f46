#[allow(dead_code)]
mod product_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/product_table.rs"));
}

#[allow(dead_code)]
mod eigen_decomposition {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/eigen_decomposition.rs"));
}

#[allow(dead_code)]
mod fusion_verification {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fusion_verification.rs"));
}

#[allow(dead_code)]
mod automorphisms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/automorphisms.rs"));
}

#[allow(dead_code)]
mod generation_closure {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/generation_closure.rs"));
}

#[allow(dead_code)]
mod sigma_ideal {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sigma_ideal.rs"));
}

#[allow(dead_code)]
mod char3_jordan {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/char3_jordan.rs"));
}

#[allow(dead_code)]
mod baric_jordan {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/baric_jordan.rs"));
}

#[allow(dead_code)]
mod cli_session {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_session.rs"));
}

#[test]
fn product_table_example_runs() {
    product_table::run_example().expect("product_table example should run");
}

#[test]
fn eigen_decomposition_example_runs() {
    eigen_decomposition::run_example().expect("eigen_decomposition example should run");
}

#[test]
fn fusion_verification_example_runs() {
    fusion_verification::run_example().expect("fusion_verification example should run");
}

#[test]
fn automorphisms_example_runs() {
    automorphisms::run_example().expect("automorphisms example should run");
}

#[test]
fn generation_closure_example_runs() {
    generation_closure::run_example().expect("generation_closure example should run");
}

#[test]
fn sigma_ideal_example_runs() {
    sigma_ideal::run_example().expect("sigma_ideal example should run");
}

#[test]
fn char3_jordan_example_runs() {
    char3_jordan::run_example().expect("char3_jordan example should run");
}

#[test]
fn baric_jordan_example_runs() {
    baric_jordan::run_example().expect("baric_jordan example should run");
}

#[test]
fn cli_session_example_runs() {
    cli_session::run_example().expect("cli_session example should run");
}

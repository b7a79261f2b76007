mod annotated_splittings {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/annotated_splittings.rs"));
}

mod classify_gbs {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify_gbs.rs"));
}

mod cli_pipeline {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_pipeline.rs"));
}

mod dot_export {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dot_export.rs"));
}

mod fingerprints {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fingerprints.rs"));
}

mod gbs_graphs {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gbs_graphs.rs"));
}

mod modular_map {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/modular_map.rs"));
}

mod smith_normal_form {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/smith_normal_form.rs"));
}

mod word_problem {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/word_problem.rs"));
}

mod words {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/words.rs"));
}

#[test]
fn annotated_splittings_runs() {
    annotated_splittings::run_example().expect("example runs");
}

#[test]
fn classify_gbs_runs() {
    classify_gbs::run_example().expect("example runs");
}

#[test]
fn cli_pipeline_runs() {
    cli_pipeline::run_example().expect("example runs");
}

#[test]
fn dot_export_runs() {
    dot_export::run_example().expect("example runs");
}

#[test]
fn fingerprints_runs() {
    fingerprints::run_example().expect("example runs");
}

#[test]
fn gbs_graphs_runs() {
    gbs_graphs::run_example().expect("example runs");
}

#[test]
fn modular_map_runs() {
    modular_map::run_example().expect("example runs");
}

#[test]
fn smith_normal_form_runs() {
    smith_normal_form::run_example().expect("example runs");
}

#[test]
fn word_problem_runs() {
    word_problem::run_example().expect("example runs");
}

#[test]
fn words_runs() {
    words::run_example().expect("example runs");
}

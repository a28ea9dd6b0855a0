//! Every example runs to completion.

#[allow(dead_code)]
#[path = "../examples/certificates.rs"]
mod certificates;

#[allow(dead_code)]
#[path = "../examples/chevalley.rs"]
mod chevalley;

#[allow(dead_code)]
#[path = "../examples/command_line.rs"]
mod command_line;

#[allow(dead_code)]
#[path = "../examples/exact_polynomials.rs"]
mod exact_polynomials;

#[allow(dead_code)]
#[path = "../examples/gkm_classes.rs"]
mod gkm_classes;

#[allow(dead_code)]
#[path = "../examples/negative_control.rs"]
mod negative_control;

#[allow(dead_code)]
#[path = "../examples/reproduce_tables.rs"]
mod reproduce_tables;

#[allow(dead_code)]
#[path = "../examples/restrictions.rs"]
mod restrictions;

#[allow(dead_code)]
#[path = "../examples/root_data.rs"]
mod root_data;

#[allow(dead_code)]
#[path = "../examples/structure_constants.rs"]
mod structure_constants;

#[allow(dead_code)]
#[path = "../examples/weighted_config.rs"]
mod weighted_config;

#[test]
fn example_certificates() {
    certificates::run_example().unwrap();
}

#[test]
fn example_chevalley() {
    chevalley::run_example().unwrap();
}

#[test]
fn example_command_line() {
    command_line::run_example().unwrap();
}

#[test]
fn example_exact_polynomials() {
    exact_polynomials::run_example().unwrap();
}

#[test]
fn example_gkm_classes() {
    gkm_classes::run_example().unwrap();
}

#[test]
fn example_negative_control() {
    negative_control::run_example().unwrap();
}

#[test]
fn example_reproduce_tables() {
    reproduce_tables::run_example().unwrap();
}

#[test]
fn example_restrictions() {
    restrictions::run_example().unwrap();
}

#[test]
fn example_root_data() {
    root_data::run_example().unwrap();
}

#[test]
fn example_structure_constants() {
    structure_constants::run_example().unwrap();
}

#[test]
fn example_weighted_config() {
    weighted_config::run_example().unwrap();
}

mod common;

use common::toolkit_checks::*;

#[test]
fn hyperplanes() {
    hyperplanes_match_brute_force(21);
}

#[test]
fn hulls() {
    hulls_match_geodesic_closure(22);
}

#[test]
fn gates_and_duality() {
    gates_and_edge_duality_on_random_pairs(23, 100);
}

#[test]
fn parallel_sets() {
    parallel_sets_match_distance_search(24);
}

#[test]
fn products() {
    products_match_crossing_components(25);
}

#[test]
fn facing_triples() {
    facing_triples_match_exhaustive_search(26);
}

#[test]
fn sageev_duals() {
    duals_are_median_and_complete(27, 50);
}

mod common;

fn check(result: Result<(), String>) {
    if let Err(e) = result {
        panic!("{e}");
    }
}

#[test]
fn orbit_stabilizer_identity() {
    check(common::orbit_stabilizer());
}

#[test]
fn chain_order_matches_closure() {
    check(common::order_matches_closure());
}

#[test]
fn rank_matches_orbital_count() {
    check(common::rank_matches_orbitals());
}

#[test]
fn semilinear_homomorphism_law() {
    check(common::semilinear_homomorphism());
}

#[test]
fn scaled_kernel_is_scalar_subgroup() {
    check(common::scaled_kernel_is_y());
}

#[test]
fn dickson_class_is_additive() {
    check(common::dickson_additivity());
}

#[test]
fn rank3_criteria_agree() {
    check(common::criteria_agree());
}

#[test]
fn r_transitive_off_sigma_with_line7_exception() {
    check(common::r_transitivity());
}

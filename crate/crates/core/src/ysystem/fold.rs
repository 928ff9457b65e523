//! Cross-check of a valued pattern against its simply laced lift.

use super::report::{cx, Ledger, LiftInfo, PeriodicityReport, SystemKind};
use super::sequence::mu_boxtimes_sequence;
use crate::algebra::TropicalMonomial;
use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::quiver::{FoldingCatalogue, GroupAction, ProductKind, ProductShape, ValuedQuiver};
use crate::seed::{seed_equals, Seed};

/// `π(c̃)`: exponents summed over each fibre of `projection`.
fn project_c(c: &TropicalMonomial, projection: &[usize], m: usize) -> TropicalMonomial {
    let mut e = vec![0; m];
    for (i, &x) in c.exponents().iter().enumerate() {
        e[projection[i]] += x;
    }
    TropicalMonomial::from_exponents(e)
}

/// Compares the valued seed with the projection of the lifted one: every
/// lifted vertex projects onto the data of its orbit.
fn compare(valued: &Seed, lifted: &Seed, action: &GroupAction) -> Option<String> {
    let proj = action.projection();
    let m = valued.rank();
    match action.valued_orbit_quiver() {
        Ok(v) if v.matrix() == valued.matrix() && v.symmetrizer() == valued.symmetrizer() => {}
        Ok(v) => {
            return Some(format!(
                "orbit quiver {} differs from the valued matrix {}",
                v.matrix(),
                valued.matrix()
            ))
        }
        Err(e) => return Some(e.to_string()),
    }
    for (v, &o) in proj.iter().enumerate() {
        let c = project_c(lifted.c_vector(v), proj, m);
        if &c != valued.c_vector(o) {
            return Some(format!(
                "c-vector of lifted vertex {v} projects to {c}, expected {}",
                valued.c_vector(o)
            ));
        }
        let f = lifted.f_polynomial(v).substitute(proj, m);
        if &f != valued.f_polynomial(o) {
            return Some(format!(
                "F-polynomial of lifted vertex {v} projects to {f}, expected {}",
                valued.f_polynomial(o)
            ));
        }
    }
    None
}

/// Runs the valued `μ_⊠` pattern of `(left, right)` next to the lifted
/// simply laced pattern, where each valued mutation becomes the mutation at
/// an orbit of `G x G'`. Every step checks admissibility of the action and
/// that the lifted c-vectors, F-polynomials and exchange matrix project onto
/// the valued ones; the valued seed must return by round `h + h'`.
pub fn verify_folding(
    left: DynkinType,
    right: DynkinType,
    max_rounds: Option<usize>,
    force: bool,
) -> Result<PeriodicityReport> {
    if left.simply_laced() && right.simply_laced() && !force {
        return Err(Error::input(format!(
            "{left} x {right} is simply laced; nothing to fold"
        )));
    }
    let (fl, fr) = (
        FoldingCatalogue::for_type(left),
        FoldingCatalogue::for_type(right),
    );
    let mut action = fl.action().product(fr.action(), ProductKind::Triangle)?;
    let (q, qp) = (
        ValuedQuiver::alternating(left),
        ValuedQuiver::alternating(right),
    );
    let r = q.product(&qp, ProductKind::Triangle)?;
    let seq = mu_boxtimes_sequence(q.matrix(), qp.matrix())?;
    let h = left.coxeter_number() + right.coxeter_number();
    let bound = max_rounds.unwrap_or(h);
    let rounds = bound.max(h);

    let mut led = Ledger::default();
    let c_lift = led.open("lift is the triangle product of the lifted factors");
    let c_admissible = led.open("action admissible at every step");
    let c_projection =
        led.open("projection of the lifted seed equals the valued seed at every step");
    let c_lifted_return = led.open("lifted seed returns at round h + h'");
    let c_return = led.open("valued seed returns at round h + h'");

    let lifted_q = fl
        .lifted_quiver()
        .product(fr.lifted_quiver(), ProductKind::Triangle)?;
    if lifted_q.matrix() != action.quiver().matrix() {
        led.fail(
            c_lift,
            cx(
                0,
                None,
                None,
                "acted quiver differs from the lifted product".into(),
            ),
        );
    }
    let initial = Seed::initial(&r);
    let lifted_initial = Seed::from_quiver(action.quiver());
    if let Some(why) = compare(&initial, &lifted_initial, &action) {
        led.fail(c_projection, cx(0, None, None, why));
    }
    let mut seed = initial.clone();
    let mut lifted = lifted_initial.clone();
    let mut minimal_period = None;
    let mut executed = 0;
    'rounds: for round in 1..=rounds {
        if led.failed() {
            break;
        }
        for (step, &v) in seq.flat().iter().enumerate() {
            seed = seed.mutate(v)?;
            let orbit = action.orbits()[v].clone();
            lifted = lifted.mutate_block(&orbit)?;
            action = action.mutate_orbit(v)?;
            if !action.is_admissible() {
                led.fail(
                    c_admissible,
                    cx(
                        round,
                        Some(step),
                        None,
                        format!("orbit quiver {} is not admissible", action.orbit_quiver()),
                    ),
                );
                break 'rounds;
            }
            if let Some(why) = compare(&seed, &lifted, &action) {
                led.fail(c_projection, cx(round, Some(step), None, why));
                break 'rounds;
            }
        }
        executed = round;
        let returned = seed_equals(&seed, &initial)?;
        if returned && minimal_period.is_none() {
            minimal_period = Some(round);
        }
    }
    if executed == rounds && !seed_equals(&seed, &initial)? {
        led.fail(
            c_return,
            cx(
                rounds,
                None,
                None,
                format!("valued seed differs from the initial seed after {rounds} rounds"),
            ),
        );
    }
    if executed == rounds && !seed_equals(&lifted, &lifted_initial)? {
        led.fail(
            c_lifted_return,
            cx(
                rounds,
                None,
                None,
                format!("lifted seed differs from its initial seed after {rounds} rounds"),
            ),
        );
    }
    if executed < rounds && !led.failed() {
        led.fail(
            c_return,
            cx(executed, None, None, "run stopped early".into()),
        );
    }
    let within = minimal_period.filter(|&p| p <= bound);
    if within.is_none() && !led.failed() {
        led.fail(
            c_return,
            cx(
                bound,
                None,
                None,
                format!("no return within {bound} rounds"),
            ),
        );
    }
    if let Some(c) = &mut led.counterexample {
        c.seed = Some(seed.to_json());
    }
    let divides = within.is_some_and(|p| h.is_multiple_of(p));
    let returned_at_expected = executed == rounds && led.checks[c_return].passed;
    let lifted_shape = ProductShape::new(fl.lifted_quiver().len(), fr.lifted_quiver().len());
    let labels = lifted_q.labels();
    let lift = LiftInfo {
        lifted: [fl.lifted_type(), fr.lifted_type()],
        lifted_vertices: lifted_shape.len(),
        group_order: action.group_order(),
        orbits: action
            .orbits()
            .iter()
            .map(|o| o.iter().map(|&v| labels[v].clone()).collect())
            .collect(),
        d: (0..action.orbits().len())
            .map(|o| action.stabilizer_order(o) as u64)
            .collect(),
    };
    let mut report = PeriodicityReport::new(
        left,
        right,
        SystemKind::Fold,
        r.len(),
        h,
        executed,
        minimal_period,
        divides,
        returned_at_expected,
        led.checks,
        led.counterexample,
    );
    report.lift = Some(lift);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn b2_a1_lifts_to_a3_a1() {
        let r = verify_folding(t("B2"), t("A1"), None, false).unwrap();
        assert!(r.is_verified(), "{r}");
        let lift = r.lift.unwrap();
        assert_eq!(lift.lifted, [t("A3"), t("A1")]);
        assert_eq!(lift.d, vec![1, 2]);
        assert_eq!(lift.group_order, 2);
        assert_eq!(r.coxeter_sum, 6);
    }

    #[test]
    fn g2_a1_has_three_element_orbits() {
        let r = verify_folding(t("G2"), t("A1"), None, false).unwrap();
        assert!(r.is_verified(), "{r}");
        assert_eq!(8 % r.minimal_period.unwrap(), 0);
        let lift = r.lift.unwrap();
        assert_eq!(lift.orbits[0], vec!["(1,1)", "(1',1)", "(1'',1)"]);
    }

    #[test]
    fn simply_laced_pairs_need_force() {
        assert!(verify_folding(t("A2"), t("A1"), None, false)
            .unwrap_err()
            .is_input_error());
        let r = verify_folding(t("A2"), t("A1"), None, true).unwrap();
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.lift.unwrap().group_order, 1);
        assert_eq!(r.minimal_period, Some(5));
    }
}

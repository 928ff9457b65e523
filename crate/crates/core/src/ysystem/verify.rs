//! Round-by-round verification of the restricted Y-patterns of `Q ⊠ Q'`
//! and `Q □ Q'`, and of the direct Y-system.

use num_integer::Integer;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::direct::{y_system_step, PairData, YSystemState};
use super::report::{cx, Ledger, PeriodicityReport, SystemKind};
use super::sequence::{mu_boxtimes_sequence, mu_square_sequence, MutationSequence};
use crate::algebra::RationalPoint;
use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{
    constrained_violation, has_slice_role, horizontal_slice, vertical_slice, ProductKind,
    ProductShape, ValuedQuiver,
};
use crate::seed::{seed_equals, Seed};

/// Which restricted pattern to run.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    Boxtimes,
    Square,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub pattern: PatternKind,
    /// Defaults to `h + h'`.
    pub max_rounds: Option<usize>,
    /// Random points for the evaluation check; 0 disables it.
    pub point_trials: usize,
    pub rng_seed: u64,
    /// Largest product on which slices are compared after every mutation.
    pub slice_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            pattern: PatternKind::Boxtimes,
            max_rounds: None,
            point_trials: 2,
            rng_seed: 0,
            slice_limit: 12,
        }
    }
}

/// One factor of the product: the alternating valued quiver of a type.
fn factor(t: DynkinType) -> ValuedQuiver {
    ValuedQuiver::alternating(t)
}

/// `verify_periodicity_with` with default options.
pub fn verify_periodicity(
    left: DynkinType,
    right: DynkinType,
    max_rounds: Option<usize>,
) -> Result<PeriodicityReport> {
    let opts = VerifyOptions {
        max_rounds,
        ..VerifyOptions::default()
    };
    verify_periodicity_with(left, right, &opts, &mut |_, _| {})
}

/// Runs the restricted Y-pattern round by round from the initial seed of
/// the product, calling `progress(round, total)` after each round.
///
/// Checked along the way: the quiver returns after every round; for `⊠`,
/// every intermediate quiver is `(Q,Q')`-constrained, each mutated vertex
/// is a sink-source and horizontal/vertical slices follow the mutations of
/// `Q`/`Q'`; c-vectors stay sign-coherent; a round returns the seed iff its
/// coefficients are trivial; the seed evaluated at random points agrees
/// with the normalized Y-system. The verdict requires a return within the
/// bound at a round dividing `h + h'` and an exact return at `h + h'`.
pub fn verify_periodicity_with(
    left: DynkinType,
    right: DynkinType,
    opts: &VerifyOptions,
    progress: &mut dyn FnMut(usize, usize),
) -> Result<PeriodicityReport> {
    let (q, qp) = (factor(left), factor(right));
    let kind = match opts.pattern {
        PatternKind::Boxtimes => ProductKind::Triangle,
        PatternKind::Square => ProductKind::Square,
    };
    let r = q.product(&qp, kind)?;
    let seq = match opts.pattern {
        PatternKind::Boxtimes => mu_boxtimes_sequence(q.matrix(), qp.matrix())?,
        PatternKind::Square => mu_square_sequence(q.matrix(), qp.matrix())?,
    };
    let shape = ProductShape::new(q.len(), qp.len());
    let h = left.coxeter_number() + right.coxeter_number();
    let bound = opts.max_rounds.unwrap_or(h);
    let rounds = bound.max(h);

    let mut led = Ledger::default();
    let c_quiver = led.open("quiver returns after every round");
    let c_coherent = led.open("c-vectors sign-coherent at every step");
    let c_trivial = led.open("seed returns iff C = 1 and F = 1");
    let boxtimes = opts.pattern == PatternKind::Boxtimes;
    let c_constrained =
        boxtimes.then(|| led.open("(Q,Q')-constrained, no loops or 2-cycles at every step"));
    let c_role = boxtimes.then(|| led.open("mutated vertices are sink-sources"));
    let c_slices =
        (boxtimes && shape.len() <= opts.slice_limit).then(|| led.open("slice law at every step"));
    let pair = PairData::new(left, right);
    let points = if left.simply_laced() && right.simply_laced() && opts.point_trials > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
        (0..opts.point_trials)
            .map(|_| RationalPoint::random(shape.len(), &mut rng))
            .collect()
    } else {
        Vec::new()
    };
    let c_points = (!points.is_empty())
        .then(|| led.open("seed evaluations agree with the normalized Y-system"));
    let c_return = led.open("seed returns at round h + h'");

    let initial = Seed::initial(&r);
    let mut seed = initial.clone();
    let mut minimal_period = None;
    let mut hq: Vec<IntMatrix> = (0..shape.right)
        .map(|ip| horizontal_slice(r.matrix(), shape, ip))
        .collect();
    let mut vq: Vec<IntMatrix> = (0..shape.left)
        .map(|i| vertical_slice(r.matrix(), shape, i))
        .collect();
    // point values of the comparison trajectory per trial
    let conj = Conjugation::new(r.matrix(), &seq, opts.pattern);
    let mut traj: Vec<Vec<BigRational>> = points.iter().map(|p| conj.enter(p.values())).collect();

    let flat = seq.flat();
    let mut executed = 0;
    'rounds: for round in 1..=rounds {
        for (step, &v) in flat.iter().enumerate() {
            let b = seed.matrix();
            if let Some(c) = c_role {
                if !has_slice_role(b, shape, v, false) {
                    led.fail(
                        c,
                        cx(
                            round,
                            Some(step),
                            Some(v),
                            format!("vertex {v} is not a sink-source before its mutation"),
                        ),
                    );
                }
            }
            seed = match seed.mutate(v) {
                Ok(s) => s,
                Err(e @ (Error::Internal(_) | Error::Divisibility)) => {
                    led.fail(c_coherent, cx(round, Some(step), Some(v), e.to_string()));
                    break 'rounds;
                }
                Err(e) => return Err(e),
            };
            let b = seed.matrix();
            if let Some(c) = c_constrained {
                if let Some(why) = constrained_violation(b, q.matrix(), qp.matrix()) {
                    led.fail(c, cx(round, Some(step), Some(v), why));
                }
            }
            if let Some(c) = c_slices {
                let (i, ip) = shape.coords(v);
                hq[ip] = hq[ip].mutate(i);
                vq[i] = vq[i].mutate(ip);
                let ok = (0..shape.right).all(|jp| horizontal_slice(b, shape, jp) == hq[jp])
                    && (0..shape.left).all(|j| vertical_slice(b, shape, j) == vq[j]);
                if !ok {
                    led.fail(
                        c,
                        cx(
                            round,
                            Some(step),
                            Some(v),
                            format!("slices disagree after mutating {v}"),
                        ),
                    );
                }
            }
            if let Some(j) = seed.c_vectors().iter().position(|c| !c.is_sign_coherent()) {
                led.fail(
                    c_coherent,
                    cx(
                        round,
                        Some(step),
                        Some(v),
                        format!("c-vector {j} is not sign-coherent"),
                    ),
                );
            }
            if led.failed() {
                break 'rounds;
            }
        }
        executed = round;
        if seed.matrix() != r.matrix() {
            led.fail(
                c_quiver,
                cx(
                    round,
                    None,
                    None,
                    format!("quiver after round {round} differs from the product"),
                ),
            );
            break;
        }
        let returned = seed_equals(&seed, &initial)?;
        if returned != seed.has_trivial_coefficients() {
            led.fail(
                c_trivial,
                cx(
                    round,
                    None,
                    None,
                    format!("return {returned} but trivial coefficients {}", !returned),
                ),
            );
            break;
        }
        if let Some(c) = c_points {
            for (p, y) in points.iter().zip(traj.iter_mut()) {
                *y = pair.tau(-1, &pair.tau(1, y)?)?;
                let expect = conj.leave(y);
                let got = (0..shape.len())
                    .map(|j| seed.y_variable(j).evaluate(p))
                    .collect::<Result<Vec<_>>>()?;
                if got != expect {
                    led.fail(
                        c,
                        cx(
                            round,
                            None,
                            None,
                            format!("seed evaluation differs from the Y-system at round {round}"),
                        ),
                    );
                }
            }
        }
        if returned && minimal_period.is_none() {
            minimal_period = Some(round);
        }
        progress(round, rounds);
        if led.failed() {
            break;
        }
    }
    if executed == rounds && !seed_equals(&seed, &initial)? {
        led.fail(
            c_return,
            cx(
                rounds,
                None,
                None,
                format!("seed differs from the initial seed after {rounds} rounds"),
            ),
        );
    } else if executed < rounds && !led.failed() {
        led.fail(
            c_return,
            cx(executed, None, None, "run stopped early".into()),
        );
    }
    if let Some(c) = &mut led.counterexample {
        c.seed = Some(seed.to_json());
    }

    let within = minimal_period.filter(|&p| p <= bound);
    let divides = within.is_some_and(|p| h.is_multiple_of(p));
    if within.is_none() && led.counterexample.is_none() {
        led.counterexample = Some(cx(
            bound,
            None,
            None,
            format!("no return within {bound} rounds"),
        ));
    }
    let returned_at_expected = led.checks[c_return].passed && executed == rounds;
    Ok(PeriodicityReport::new(
        left,
        right,
        match opts.pattern {
            PatternKind::Boxtimes => SystemKind::Boxtimes,
            PatternKind::Square => SystemKind::Square,
        },
        shape.len(),
        h,
        executed,
        minimal_period,
        divides,
        returned_at_expected,
        led.checks,
        led.counterexample,
    ))
}

/// Direct Y-seed mutation of point values at `k`.
pub fn mutate_y_values(b: &IntMatrix, y: &[BigRational], k: usize) -> Vec<BigRational> {
    use crate::algebra::pow_rational;
    use num_traits::One;
    let one = BigRational::one();
    (0..y.len())
        .map(|j| {
            let bkj = b.get(k, j);
            if j == k {
                y[k].recip()
            } else if bkj >= 0 {
                &y[j] * pow_rational(&(&one + y[k].recip()), -bkj)
            } else {
                &y[j] * pow_rational(&(&one + &y[k]), -bkj)
            }
        })
        .collect()
}

fn mutate_block_values(
    b: &IntMatrix,
    y: &[BigRational],
    block: &[usize],
) -> (IntMatrix, Vec<BigRational>) {
    let mut b = b.clone();
    let mut y = y.to_vec();
    for &k in block {
        y = mutate_y_values(&b, &y, k);
        b = b.mutate(k);
    }
    (b, y)
}

/// Values of a `⊠` round seen on `Q □ Q'`: mutating the `(+,-)` block
/// turns `Q ⊠ Q'` into `Q □ Q'` and back, and `μ_⊠ = μ_{+,-} μ_□ μ_{+,-}`.
/// A round of `μ_□` acts on point values as `τ_+` followed by `τ_-`.
struct Conjugation {
    block: Vec<usize>,
    from: IntMatrix,
    to: IntMatrix,
}

impl Conjugation {
    fn new(b: &IntMatrix, seq: &MutationSequence, kind: PatternKind) -> Self {
        let block = match kind {
            PatternKind::Square => Vec::new(),
            PatternKind::Boxtimes => seq
                .blocks
                .iter()
                .find(|b| b.left == 1 && b.right == -1)
                .map(|b| b.vertices.clone())
                .unwrap_or_default(),
        };
        let to = block.iter().fold(b.clone(), |m, &k| m.mutate(k));
        Conjugation {
            block,
            from: b.clone(),
            to,
        }
    }

    fn enter(&self, y: &[BigRational]) -> Vec<BigRational> {
        mutate_block_values(&self.from, y, &self.block).1
    }

    fn leave(&self, y: &[BigRational]) -> Vec<BigRational> {
        mutate_block_values(&self.to, y, &self.block).1
    }
}

/// Runs the direct recurrence `trials` times from random slices for
/// `2(h + h')` steps and records the minimal period of each run.
pub fn verify_direct_ysystem(
    left: DynkinType,
    right: DynkinType,
    trials: usize,
    rng_seed: u64,
) -> Result<PeriodicityReport> {
    let pair = PairData::new(left, right);
    let h = left.coxeter_number() + right.coxeter_number();
    let bound = 2 * h;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut led = Ledger::default();
    let c_return = led.open("both slices return after 2(h + h') steps");
    let c_divides = led.open("minimal period divides 2(h + h')");
    let mut minimal = None::<usize>;
    for trial in 0..trials {
        let start = YSystemState::random(&pair, &mut rng);
        let mut s = start.clone();
        let mut period = None;
        for t in 1..=bound {
            s = y_system_step(&pair, &s);
            if period.is_none() && s.prev == start.prev && s.cur == start.cur {
                period = Some(t);
            }
        }
        if s.prev != start.prev || s.cur != start.cur {
            led.fail(
                c_return,
                cx(
                    trial,
                    Some(bound),
                    None,
                    format!("trial {trial}: no return after {bound} steps"),
                ),
            );
        }
        match period {
            Some(p) if bound.is_multiple_of(p) => minimal = Some(minimal.map_or(p, |m| m.lcm(&p))),
            Some(p) => led.fail(
                c_divides,
                cx(trial, Some(p), None, format!("trial {trial}: period {p}")),
            ),
            None => led.fail(
                c_divides,
                cx(trial, None, None, format!("trial {trial}: no period found")),
            ),
        }
    }
    let divides = minimal.is_some_and(|p| bound.is_multiple_of(p)) && !led.failed();
    let returned = led.checks[c_return].passed && trials > 0;
    Ok(PeriodicityReport::new(
        left,
        right,
        SystemKind::Direct,
        pair.len(),
        h,
        bound,
        minimal,
        divides,
        returned,
        led.checks,
        led.counterexample,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn a1_a1_has_period_two() {
        let r = verify_periodicity(t("A1"), t("A1"), None).unwrap();
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.minimal_period, Some(2));
        assert_eq!(r.expected_period, 4);
    }

    #[test]
    fn a2_a1_is_the_pentagon() {
        let r = verify_periodicity(t("A2"), t("A1"), None).unwrap();
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.minimal_period, Some(5));
        assert!(r.checks.iter().any(|c| c.name.contains("constrained")));
    }

    #[test]
    fn square_pattern_has_the_same_period() {
        for (a, b) in [("A2", "A2"), ("A3", "A2"), ("D4", "A1")] {
            let opts = VerifyOptions {
                pattern: PatternKind::Square,
                ..VerifyOptions::default()
            };
            let sq = verify_periodicity_with(t(a), t(b), &opts, &mut |_, _| {}).unwrap();
            let bt = verify_periodicity(t(a), t(b), None).unwrap();
            assert!(sq.is_verified(), "{sq}");
            assert_eq!(sq.minimal_period, bt.minimal_period);
        }
    }

    #[test]
    fn short_bound_gives_a_counterexample() {
        let r = verify_periodicity(t("A2"), t("A1"), Some(3)).unwrap();
        assert!(!r.is_verified());
        assert!(r.counterexample.unwrap().reason.contains("within 3"));
    }

    #[test]
    fn progress_is_reported_per_round() {
        let mut seen = Vec::new();
        verify_periodicity_with(t("A2"), t("A2"), &VerifyOptions::default(), &mut |r, n| {
            seen.push((r, n))
        })
        .unwrap();
        assert_eq!(seen, (1..=6).map(|r| (r, 6)).collect::<Vec<_>>());
    }

    #[test]
    fn valued_pair_runs_directly() {
        let r = verify_periodicity(t("B2"), t("A1"), None).unwrap();
        assert!(r.is_verified(), "{r}");
        assert_eq!(r.minimal_period, Some(3));
    }

    #[test]
    fn direct_system_periods() {
        for (a, b, p) in [("A1", "A1", 4), ("A2", "A1", 10), ("A3", "A2", 14)] {
            let r = verify_direct_ysystem(t(a), t(b), 3, 7).unwrap();
            assert!(r.is_verified(), "{r}");
            assert_eq!(r.minimal_period, Some(p));
            assert_eq!(r.expected_period, 2 * r.coxeter_sum);
        }
    }

    #[test]
    fn direct_y_mutation_matches_the_exchange_rule() {
        // 1 -> 2: Y_2' = Y_2 (1 + Y_1^{-1})^{-1} = Y_1 Y_2 / (1 + Y_1)
        let b = IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let y = mutate_y_values(&b, &[q(2, 1), q(3, 1)], 0);
        assert_eq!(y, vec![q(1, 2), q(2, 1)]);
    }
}

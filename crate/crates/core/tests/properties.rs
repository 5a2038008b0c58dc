use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use radixstat::constructors::{
    build_oscillating_schedule, construct_mean_without_frequency, first_zero_run_difference,
    floor_average_bounds, floor_weighted_average, quota_construct, Level,
};
use radixstat::simulation::{
    normality_experiment_with, uniform_digit_trial, Execution, ExperimentConfig,
};
use radixstat::stats::running_stats;
use radixstat::stream::{with_prefix, DigitStream, FiniteDigits};
use radixstat::{
    expand_fraction, mean_from_frequencies, ratio, solve_ternary_system, FrequencyProfile, Radix,
    RadixExpansion, Rational,
};

fn radix() -> impl Strategy<Value = Radix> {
    (2u32..=10).prop_map(|s| Radix::new(s).unwrap())
}

fn digits_in(s: u32, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..s as u8, len)
}

/// θ ∈ (0, 2) and x1 < x2 inside the admissible window, ε = (x2 − x1)/4.
fn construction_params() -> impl Strategy<Value = (Rational, Rational, Rational, Rational)> {
    (2i64..24)
        .prop_flat_map(|q| (1..2 * q, Just(q)))
        .prop_flat_map(|(p, q)| (Just(p), Just(q), 1i64..11, 1i64..11))
        .prop_filter("x1 < x2", |(_, _, i, j)| i < j)
        .prop_map(|(p, q, i, j)| {
            let theta = ratio(p, q);
            let lower = std::cmp::max(Rational::zero(), Rational::one() - &theta);
            let upper = (ratio(2, 1) - &theta) / ratio(2, 1);
            let step = (&upper - &lower) / ratio(12, 1);
            let x1 = &lower + &step * ratio(i, 1);
            let x2 = &lower + &step * ratio(j, 1);
            let eps = (&x2 - &x1) / ratio(4, 1);
            (theta, x1, x2, eps)
        })
}

proptest! {
    #[test]
    fn expansion_round_trips_exactly(q in 1u64..=10_000, p_seed in any::<u64>(), s in radix()) {
        let p = p_seed % q;
        let e = expand_fraction(p, q, s).unwrap();
        prop_assert_eq!(e.evaluate(), Rational::new(p.into(), q.into()));
        prop_assert!(!e.period().iter().all(|&d| d == s.max_digit()));
        let reduced = q / p.gcd(&q);
        let len = (e.preperiod().len() + e.period().len()) as u64;
        if reduced >= 3 {
            prop_assert!(len < reduced);
        } else {
            prop_assert!(len <= reduced);
        }
        prop_assert_eq!(e.to_string().parse::<RadixExpansion>().unwrap(), e);
    }

    #[test]
    fn terminating_iff_denominator_divides_a_power_of_the_base(q in 1u64..=2_000, p_seed in any::<u64>(), s in radix()) {
        let p = p_seed % q;
        let e = expand_fraction(p, q, s).unwrap();
        let mut reduced = q / p.gcd(&q);
        let base = u64::from(s.get());
        loop {
            let g = reduced.gcd(&base);
            if g == 1 { break; }
            while reduced % g == 0 { reduced /= g; }
        }
        prop_assert_eq!(e.is_terminating(), reduced == 1);
    }

    #[test]
    fn mean_identity_is_exact(s in 2u32..=10, seed_digits in prop::collection::vec(any::<u8>(), 1..3000)) {
        let radix = Radix::new(s).unwrap();
        let digits: Vec<u8> = seed_digits.iter().map(|d| d % s as u8).collect();
        let n = digits.len() as u64;
        let checkpoints: Vec<u64> = (1..=n).filter(|k| k % 97 == 1 || *k == n).collect();
        let stream = FiniteDigits::new(radix, digits).unwrap();
        for row in running_stats(&stream, &checkpoints).unwrap().rows {
            prop_assert_eq!(row.mean(), row.mean_from_counts());
            prop_assert!(row.freqs().iter().sum::<Rational>().is_one());
            prop_assert!(row.mean() >= Rational::zero());
            prop_assert!(row.mean() <= ratio(i64::from(s) - 1, 1));
        }
    }

    #[test]
    fn ternary_system_round_trip(a in 0i64..500, b in 0i64..500, c in 0i64..500) {
        prop_assume!(a + b + c > 0);
        let t = a + b + c;
        let (v0, v1, v2) = (ratio(a, t), ratio(b, t), ratio(c, t));
        let r = &v1 + ratio(2, 1) * &v2;
        prop_assert_eq!(solve_ternary_system(&v0, &r).unwrap(), (v1, v2));
    }

    #[test]
    fn frequencies_transport_through_the_ternary_system(digits in digits_in(3, 50..2000)) {
        let n = digits.len() as u64;
        let checkpoints: Vec<u64> = (1..=n).step_by(7).collect();
        let stream = FiniteDigits::new(Radix::TERNARY, digits).unwrap();
        let rows = running_stats(&stream, &checkpoints).unwrap().rows;
        let derived: Vec<(Rational, Rational, Rational)> = rows
            .iter()
            .map(|row| {
                let (v1, v2) = solve_ternary_system(&row.freq(0), &row.mean()).unwrap();
                prop_assert_eq!(&v1, &row.freq(1));
                prop_assert_eq!(&v2, &row.freq(2));
                Ok((row.freq(0), row.mean(), v1))
            })
            .collect::<Result<_, TestCaseError>>()?;
        for (m, l) in derived.iter().zip(derived.iter().skip(1)) {
            let lhs = (&m.2 - &l.2).abs();
            let rhs = ratio(2, 1) * (&m.0 - &l.0).abs() + (&m.1 - &l.1).abs();
            prop_assert!(lhs <= rhs);
        }
    }

    #[test]
    fn profile_mean_stays_in_range(s in 2u32..=10, weights in prop::collection::vec(0i64..20, 10)) {
        let w = &weights[..s as usize];
        let total: i64 = w.iter().sum();
        prop_assume!(total > 0);
        let f = FrequencyProfile::new(w.iter().map(|&x| ratio(x, total)).collect()).unwrap();
        let theta = mean_from_frequencies(&f);
        prop_assert!(theta >= Rational::zero() && theta <= ratio(i64::from(s) - 1, 1));
    }

    #[test]
    fn prefix_counts_add_up(prefix in digits_in(3, 0..40), tail in digits_in(3, 1..200), n in 1u64..260) {
        let k = prefix.len() as u64;
        let tail_stream = FiniteDigits::new(Radix::TERNARY, tail.clone()).unwrap();
        let joined = with_prefix(prefix.clone(), tail_stream).unwrap();
        let n = n.min(k + tail.len() as u64);
        let row = &running_stats(&joined, &[n]).unwrap().rows[0];
        let count = |ds: &[u8], upto: u64, d: u8| ds.iter().take(upto as usize).filter(|&&x| x == d).count() as u64;
        for d in 0..3 {
            let expected = count(&prefix, n.min(k), d) + count(&tail, n.saturating_sub(k), d);
            prop_assert_eq!(row.count(d), expected);
        }
    }

    #[test]
    fn prefix_moves_the_mean_by_a_bounded_amount(prefix in digits_in(3, 0..20), tail in digits_in(3, 500..1500)) {
        let n = 400u64;
        let base = FiniteDigits::new(Radix::TERNARY, tail).unwrap();
        let plain = running_stats(&base, &[n]).unwrap().rows[0].mean();
        let len = prefix.len() as i64;
        let moved = running_stats(&with_prefix(prefix, &base).unwrap(), &[n]).unwrap().rows[0].mean();
        prop_assert!((moved - plain).abs() <= ratio(2 * len, n as i64));
    }

    #[test]
    fn quota_counts_track_their_quotas(weights in prop::collection::vec(0i64..12, 2..6)) {
        let total: i64 = weights.iter().sum();
        prop_assume!(total > 0);
        let tau: Vec<Rational> = weights.iter().map(|&w| ratio(w, total)).collect();
        let f = FrequencyProfile::new(tau).unwrap();
        let digits = quota_construct(&f, 3000);
        let mut counts = vec![0i64; weights.len()];
        for (m, &d) in digits.iter().enumerate() {
            counts[d as usize] += 1;
            let m = m as i64 + 1;
            for (i, &w) in weights.iter().enumerate() {
                // |N_i − m·w/total| ≤ 2
                prop_assert!((counts[i] * total - m * w).abs() <= 2 * total);
            }
        }
    }

    #[test]
    fn floor_average_sandwich(p in 0i64..400, q in 1i64..60, k in 1u64..50, extra in 0u64..400) {
        let x = ratio(p, q);
        let n = k + extra;
        let w = floor_weighted_average(&x, k, n).unwrap();
        let (lower, upper) = floor_average_bounds(&x, k, n).unwrap();
        prop_assert!(lower < w && w <= upper);
        if k == 1 {
            prop_assert!(&x - ratio(2, n as i64 + 1) < floor_weighted_average(&x, 1, n).unwrap());
        }
    }

    #[test]
    fn consecutive_breakpoints_are_far_apart(i in 1i64..10, gap in 2i64..10, e in 1i64..100) {
        let x1 = ratio(i, 10);
        let x2 = ratio(i + gap, 10);
        let half = (&x2 - &x1) / ratio(2, 1);
        let eps = &half * ratio(e, 101);
        let sched = build_oscillating_schedule(&x1, &x2, &eps, 3000).unwrap();
        let witness = &x2 - &x1 - ratio(2, 1) * &eps;
        let complete: Vec<_> = sched.runs().iter().filter(|r| r.complete).collect();
        prop_assert!(complete.len() >= 2);
        for run in &complete {
            match run.level {
                Level::Low => prop_assert!(run.w_end < &x1 + &eps),
                Level::High => prop_assert!(run.w_end > &x2 - &eps),
            }
        }
        for pair in complete.windows(2) {
            prop_assert!((&pair[1].w_end - &pair[0].w_end).abs() > witness);
            prop_assert!(pair[1].end > pair[0].end);
        }
    }

    #[test]
    fn block_rows_satisfy_the_linear_identities((theta, x1, x2, eps) in construction_params()) {
        let (spec, _) = construct_mean_without_frequency(&theta, &x1, &x2, &eps, 400).unwrap();
        prop_assert!(spec.identity_violations().is_empty());
        for e in spec.estimates() {
            prop_assert!(e.a_sandwich_holds(&theta));
            prop_assert!(e.b_sandwich_holds());
            prop_assert!(e.block_bounds_hold(&theta));
            if e.k >= 2 {
                let tri = ratio((e.k * (e.k - 1) / 2) as i64, 1);
                let six_over_k = ratio(6, e.k as i64);
                prop_assert!((ratio(e.a_sum as i64, 1) / &tri - &theta).abs() < six_over_k);
                prop_assert!((ratio(e.b_len as i64, 1) / &tri - Rational::one()).abs() < six_over_k);
            }
        }
    }

    #[test]
    fn distinct_value_pairs_give_distinct_zero_runs(
        (theta, x1, x2, eps) in construction_params(),
        shift in 1i64..6,
    ) {
        // shift both values by the same amount inside the window
        let upper = (ratio(2, 1) - &theta) / ratio(2, 1);
        let lower = std::cmp::max(Rational::zero(), Rational::one() - &theta);
        let d = (&upper - &lower) * ratio(shift, 1000);
        let (y1, y2) = (&x1 + &d, &x2 + &d);
        prop_assume!(y2 < upper);
        let values = [&x1, &x2];
        let others = [&y1, &y2];
        let delta = values.iter().flat_map(|u| others.map(|v| (*u - v).abs())).min().unwrap();
        prop_assume!(delta.is_positive());
        let bound = (Rational::one() / &delta).ceil().to_integer().to_u64().unwrap();
        let blocks = bound.max(2);
        let (a, _) = construct_mean_without_frequency(&theta, &x1, &x2, &eps, blocks).unwrap();
        let (b, _) = construct_mean_without_frequency(&theta, &y1, &y2, &eps, blocks).unwrap();
        let k = first_zero_run_difference(&a, &b);
        prop_assert!(k.is_some_and(|k| k <= bound));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn serial_and_parallel_runs_agree(seed in any::<u64>(), s in radix(), trials in 1u64..24) {
        let cfg = ExperimentConfig::new(s, 500, trials, seed).unwrap();
        let band = ratio(1, 20);
        let serial = normality_experiment_with(&cfg, &band, Execution::Serial).unwrap();
        let parallel = normality_experiment_with(&cfg, &band, Execution::Parallel).unwrap();
        prop_assert_eq!(&serial, &parallel);
        prop_assert!(serial.fraction_in_band >= Rational::zero() && serial.fraction_in_band <= Rational::one());
    }

    #[test]
    fn trial_stats_obey_the_mean_identity(seed in any::<u64>(), s in radix()) {
        let row = uniform_digit_trial(s, 2000, seed);
        prop_assert_eq!(row.mean(), row.mean_from_counts());
        prop_assert_eq!(row.n(), 2000);
        prop_assert_eq!(row, uniform_digit_trial(s, 2000, seed));
    }
}

#[test]
fn digits_are_replayable() {
    let e = expand_fraction(3, 7, Radix::DECIMAL).unwrap();
    let a: Vec<u8> = e.digits().take(50).collect();
    let b: Vec<u8> = e.digits().take(50).collect();
    assert_eq!(a, b);
}

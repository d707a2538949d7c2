//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its headline numbers (run with `-- --nocapture` to see
//! them). Every tolerance is pinned in the assertions themselves.

mod common;

use common::*;
use wat_core::colex::{
    colex_partial_order_dfa, is_wheeler_dfa, length_budget, path_coherence_check,
    TotalOrder, WheelerCertificate,
};
use wat_core::gadgets::{
    family_a, family_b, intersect_wdfa, report_order_hardness, report_reduced_universality,
    report_reducedness, report_wheeler_language,
};
use wat_core::lang::{bounded_witness_oracle, is_wheeler_language_dfa};
use wat_core::minwdfa::{self, default_iteration_cap, determinize_wnfa, fingerprint, min_wdfa};
use wat_core::oracle::{self, TestRng};
use wat_core::{Dfa, DEFAULT_DET_CAP};

const CAP: usize = DEFAULT_DET_CAP;

/// 1. The Fig.-1 golden automaton is Wheeler with exactly the order
///    q0 < q1 < q2 < q3 < q4 < q5.
#[test]
fn criterion_1_figure_one_golden() {
    let d = fig1();
    match is_wheeler_dfa(&d) {
        WheelerCertificate::Wheeler(order) => {
            assert_eq!(order.rank_to_state(), &[0, 1, 2, 3, 4, 5]);
        }
        WheelerCertificate::NotWheeler(v) => panic!("golden automaton rejected: {v}"),
    }
    println!("criterion 1: PASS (unique order q0<q1<q2<q3<q4<q5)");
}

/// 2. Minimum-WDFA sizes of the two families: m+2 and 2n+1 for 1 ≤ n,m ≤ 5.
#[test]
fn criterion_2_family_min_wdfa_sizes() {
    assert_eq!(min_wdfa(&family_b(3)).unwrap().wdfa.state_count(), 5);
    assert_eq!(min_wdfa(&family_a(3)).unwrap().wdfa.state_count(), 7);
    for k in 1..=5 {
        let b = min_wdfa(&family_b(k)).unwrap().wdfa.state_count();
        assert_eq!(b, k + 2, "B_{k} minimum WDFA size");
        let a = min_wdfa(&family_a(k)).unwrap().wdfa.state_count();
        assert_eq!(a, 2 * k + 1, "A_{k} minimum WDFA size");
    }
    println!("criterion 2: PASS (B_m -> m+2 states, A_n -> 2n+1 states, 1..=5)");
}

/// 3. Intersection bound: exactly 2n+m states on the family pairs (the bound
///    is tight), and the additive bound holds on 100 random pairs.
#[test]
fn criterion_3_intersection_bound_and_tightness() {
    for n in 1..=5 {
        for m in 1..=5 {
            let wa = min_wdfa(&family_a(n)).unwrap();
            let wb = min_wdfa(&family_b(m)).unwrap();
            let r = intersect_wdfa(&wa.wdfa, &wa.order, &wb.wdfa, &wb.order)
                .unwrap()
                .expect("family intersection is nonempty");
            assert_eq!(r.bound, (2 * n + 1) + (m + 2) - 2 - 1);
            assert_eq!(r.wdfa.state_count(), 2 * n + m, "A_{n} ∩ B_{m}");
        }
    }

    // random minimum-WDFA pairs (≤ 8 states each)
    let ab = ab2();
    let mut rng = TestRng::new(0xC3);
    let mut pool: Vec<minwdfa::MinWdfa> = Vec::new();
    while pool.len() < 15 {
        let d = random_trimmed_dfa(&mut rng, 1, 6, &ab);
        if let Ok(r) = min_wdfa(&d) {
            if r.wdfa.state_count() <= 8 {
                pool.push(r);
            }
        }
    }
    let mut pairs = 0;
    'outer: for i in 0..pool.len() {
        for j in 0..pool.len() {
            if pairs >= 100 {
                break 'outer;
            }
            pairs += 1;
            let (l, r) = (&pool[i], &pool[j]);
            // intersect_wdfa errors if the bound fails; unwrap is the assertion
            let res = intersect_wdfa(&l.wdfa, &l.order, &r.wdfa, &r.order).unwrap();
            if let Some(out) = res {
                assert!(out.wdfa.state_count() <= out.bound);
                // minimality against the bounded class oracle
                let n_min = out.wdfa.minimize().state_count();
                let budget = length_budget(n_min).min(12);
                let blocks =
                    oracle::equiv_c_classes_bounded(&out.wdfa.minimize(), budget, 14).unwrap();
                assert_eq!(out.wdfa.state_count(), blocks.len(), "pair ({i},{j})");
            }
        }
    }
    assert_eq!(pairs, 100);
    println!("criterion 3: PASS (A_n ∩ B_m = 2n+m exactly; 100 random pairs within bound)");
}

/// 4. Determinization of certified Wheeler NFAs: at most 2n-1-|Σ_eff| states
///    and the output is Wheeler, over 200 generated WNFAs with n ≤ 7.
#[test]
fn criterion_4_wnfa_determinization_bound() {
    let mut rng = TestRng::new(0xC4);
    let mut done = 0;
    let mut nontrivial = 0;
    while done < 200 {
        let Some((nfa, order_vec)) = random_wnfa(&mut rng, 7, 9) else { continue };
        let order = TotalOrder::from_rank_to_state(order_vec).unwrap();
        let n = nfa.state_count();
        let sigma_eff = nfa.occurring_symbols().len();
        let (wdfa, _) = determinize_wnfa(&nfa, &order, CAP)
            .expect("certified Wheeler NFA must determinize within the bound");
        assert!(wdfa.state_count() <= 2 * n - 1 - sigma_eff);
        assert!(is_wheeler_dfa(&wdfa).is_wheeler());
        assert!(oracle::lang_equal(&nfa, wdfa.as_nfa(), Some(8)));
        if !nfa.is_deterministic() {
            nontrivial += 1;
        }
        done += 1;
    }
    assert!(nontrivial >= 40, "sampler produced too few nondeterministic WNFAs");
    println!("criterion 4: PASS (200 WNFAs, bound 2n-1-|Σ| and Wheeler outputs; {nontrivial} nondeterministic)");
}

/// 5. The co-lex partial order fixpoint agrees with the bounded-counterexample
///    oracle on every pair, over the exhaustive ≤3-state minimal suite and 300
///    random DFAs with 4-7 states.
#[test]
fn criterion_5_partial_order_oracle_agreement() {
    let ab = ab2();
    let mut instances: Vec<Dfa> = oracle::all_trim_minimal_dfas(3, &ab);
    let exhaustive_count = instances.len();
    let mut rng = TestRng::new(0xC5);
    for _ in 0..300 {
        instances.push(random_trimmed_dfa(&mut rng, 4, 7, &ab));
    }
    let mut pairs_checked = 0usize;
    for d in &instances {
        let res = colex_partial_order_dfa(d);
        let n = res.dfa.state_count();
        for q in 0..n {
            for p in 0..n {
                if q == p {
                    continue;
                }
                let ours = res.order.less(q, p);
                let cx = oracle::colex_counterexample(&res.dfa, q, p);
                assert_eq!(ours, cx.is_none(), "pair ({q},{p})");
                if let Some(cx) = cx {
                    // the pumping argument bounds shortest counterexamples
                    assert!(cx.depth <= n * n + n);
                }
                pairs_checked += 1;
            }
        }
    }
    println!(
        "criterion 5: PASS ({exhaustive_count} exhaustive + 300 random instances, {pairs_checked} pairs)"
    );
}

/// 6. The Wheeler-language checker agrees with (a) the bounded witness
///    oracle, (b) class-count stabilization, (c) the fingerprint pipeline's
///    success/failure, over the exhaustive ≤3-state minimal suite plus 200
///    random 4-6-state minimal DFAs.
#[test]
fn criterion_6_language_checker_cross_validation() {
    let ab = ab2();
    let mut instances: Vec<Dfa> = oracle::all_trim_minimal_dfas(3, &ab);
    let exhaustive_count = instances.len();
    let mut rng = TestRng::new(0xC6);
    for _ in 0..200 {
        instances.push(random_minimal_dfa(&mut rng, 4, 6, &ab));
    }
    let mut wheeler_count = 0usize;
    for (idx, d) in instances.iter().enumerate() {
        let verdict = is_wheeler_language_dfa(d);
        let min = &verdict.min_dfa;
        let n = min.state_count();

        // (a) witness oracle is sound and must not contradict the verdict
        let oracle_witness = bounded_witness_oracle(min, if n <= 3 { 6 } else { 5 });
        if let Some(w) = &oracle_witness {
            w.validate(min).unwrap();
            assert!(!verdict.wheeler, "instance {idx}: oracle witness on a Wheeler verdict");
        }
        if let Some(w) = &verdict.witness {
            w.validate(min).unwrap();
        }

        // (b) stabilization of the bounded class scan: one enumeration at the
        // top budget, block counts at smaller budgets by filtering it
        let pref = oracle::enum_pref(min, 14, 14).unwrap();
        let blocks = |l: usize| {
            let mut count = 0usize;
            let mut last: Option<(usize, Option<usize>)> = None;
            for e in &pref.entries {
                if e.word.len() > l {
                    continue;
                }
                let key = (e.state, e.end);
                if last != Some(key) {
                    count += 1;
                }
                last = Some(key);
            }
            count
        };
        if verdict.wheeler {
            let l = (n * n + n).min(12);
            assert_eq!(blocks(l), blocks(l + 1), "instance {idx}: Wheeler blocks kept moving");
            assert_eq!(blocks(l + 1), blocks(l + 2), "instance {idx}");
        } else {
            let w = verdict.witness.as_ref().unwrap();
            let window = w.gamma.len().max(2);
            assert!(
                blocks(14) > blocks(14 - window),
                "instance {idx}: non-Wheeler blocks stopped growing"
            );
        }

        // (c) the fingerprint pipeline succeeds exactly on Wheeler inputs
        let pipeline = fingerprint(min, default_iteration_cap(n))
            .and_then(|f| minwdfa::fingerprint_to_min_wdfa(min, &f));
        assert_eq!(
            pipeline.is_ok(),
            verdict.wheeler,
            "instance {idx}: pipeline and checker disagree"
        );
        wheeler_count += usize::from(verdict.wheeler);
    }
    println!(
        "criterion 6: PASS ({exhaustive_count} exhaustive + 200 random instances, {wheeler_count} Wheeler)"
    );
}

/// 7. Gadget biconditionals at desk scale: exhaustive 1-2-state NFAs over two
///    symbols, a seeded spread of 3-4-state NFAs, and 100 random 5-6-state
///    NFAs, for all four constructions.
#[test]
fn criterion_7_gadget_biconditionals() {
    let ab = ab2();
    let mut corpus: Vec<wat_core::Nfa> = Vec::new();

    // exhaustive ≤2-state NFAs (all edge sets, initial sets, final sets), trimmed
    for n in 1..=2usize {
        let all_edges: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|u| (0..2).flat_map(move |a| (0..n).map(move |v| (u, a, v))))
            .collect();
        for mask in 0..(1u32 << all_edges.len()) {
            let edges: Vec<_> = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            for init_mask in 1u32..(1 << n) {
                for fin_mask in 1u32..(1 << n) {
                    let initials: Vec<usize> = (0..n).filter(|&q| init_mask & (1 << q) != 0).collect();
                    let finals: Vec<usize> = (0..n).filter(|&q| fin_mask & (1 << q) != 0).collect();
                    let nfa =
                        wat_core::Nfa::new(ab.clone(), n, initials, finals, edges.clone()).unwrap();
                    if let Some(t) = nfa.trim() {
                        corpus.push(t);
                    }
                }
            }
        }
    }
    let exhaustive_count = corpus.len();

    // seeded spread of 3-4-state NFAs plus 100 random 5-6-state NFAs
    let mut rng = TestRng::new(0xC7);
    for _ in 0..120 {
        corpus.push(random_trimmed_nfa(&mut rng, 3, 4, &ab));
    }
    for _ in 0..100 {
        corpus.push(random_trimmed_nfa(&mut rng, 5, 6, &ab));
    }

    let mut universal_count = 0usize;
    for (idx, nfa) in corpus.iter().enumerate() {
        let reports = [
            report_reduced_universality(nfa, CAP).unwrap(),
            report_order_hardness(nfa, CAP).unwrap(),
            report_reducedness(nfa, CAP).unwrap(),
            report_wheeler_language(nfa, CAP).unwrap(),
        ];
        for r in &reports {
            assert!(
                r.agree,
                "instance {idx}: {} disagrees ({} = {}, {} = {})",
                r.gadget, r.lhs_desc, r.lhs, r.rhs_desc, r.rhs
            );
        }
        // the universality-to-reduced construction always emits a reduced automaton
        assert!(reports[0].notes.iter().any(|s| s == "output reduced: true"), "instance {idx}");
        universal_count += usize::from(reports[0].lhs);
    }
    assert!(universal_count > 0, "corpus never hit a universal instance");
    println!(
        "criterion 7: PASS ({exhaustive_count} exhaustive + 220 sampled instances, all four gadgets agree; {universal_count} universal)"
    );
}

/// 8. Fingerprints: bijection with the bounded class blocks, representative
///    lengths under n+n², and agreement with brute-force minimal-WDFA search
///    on the small instances.
#[test]
fn criterion_8_fingerprint_correctness() {
    let ab = ab2();
    // Wheeler corpus: families, Fig. 1, exhaustive ≤3-state Wheeler languages,
    // random Wheeler instances
    let mut corpus: Vec<Dfa> = vec![fig1()];
    for k in 1..=5 {
        corpus.push(family_a(k));
        corpus.push(family_b(k));
    }
    for d in oracle::all_trim_minimal_dfas(3, &ab) {
        corpus.push(d);
    }
    let mut rng = TestRng::new(0xC8);
    for _ in 0..120 {
        corpus.push(random_minimal_dfa(&mut rng, 4, 6, &ab));
    }

    let mut wheeler_instances = 0usize;
    let mut brute_checked = 0usize;
    for (idx, d) in corpus.iter().enumerate() {
        let Ok(r) = min_wdfa(d) else { continue };
        wheeler_instances += 1;
        let n = r.min_dfa.state_count();

        // representative lengths obey the class-length bound
        for rep in &r.fingerprint.reps {
            assert!(rep.len() < n + n * n, "instance {idx}: rep too long");
        }

        // bijection with the bounded class blocks at a stabilized budget
        let budget = (n * n + n + 2).min(14);
        let blocks = oracle::equiv_c_classes_bounded(&r.min_dfa, budget, 14).unwrap();
        assert_eq!(
            r.fingerprint.reps.len(),
            blocks.len(),
            "instance {idx}: class count mismatch at budget {budget}"
        );
        let pref = oracle::enum_pref(&r.min_dfa, budget, 14).unwrap();
        let mut block_of_rep = Vec::new();
        for rep in &r.fingerprint.reps {
            let pos = pref.position(rep).expect("short reps are inside the bounded set");
            let block = blocks.iter().position(|b| (b.first..b.first + b.size).contains(&pos));
            block_of_rep.push(block.unwrap());
        }
        // reps land in ascending blocks; distinctness makes it a bijection
        assert!(block_of_rep.windows(2).all(|w| w[0] < w[1]), "instance {idx}");
        assert_eq!(block_of_rep.len(), blocks.len(), "instance {idx}: reps not in bijection");

        // the direct block-built automaton coincides with the construction
        let direct = oracle::min_wdfa_from_blocks(&r.min_dfa, budget, 14).unwrap();
        assert_eq!(r.wdfa, direct, "instance {idx}");

        // no strictly smaller Wheeler DFA exists (exhaustive, tiny sizes)
        let m = r.wdfa.state_count();
        if m <= 5 && d.alphabet().len() == 2 && brute_checked < 25 {
            brute_checked += 1;
            assert!(
                !oracle::smaller_wdfa_exists(&r.wdfa, m, 9).unwrap(),
                "instance {idx}: a smaller WDFA exists"
            );
        }
    }
    assert!(wheeler_instances >= 20);
    assert!(brute_checked >= 10);
    println!(
        "criterion 8: PASS ({wheeler_instances} Wheeler instances; {brute_checked} exhaustively confirmed minimal)"
    );
}

/// 9. Interval and path-coherence properties of every constructed WDFA:
///    bounded incoming languages occupy contiguous blocks and 1,000 sampled
///    (interval, word) probes stay intervals.
#[test]
fn criterion_9_interval_and_path_coherence() {
    let ab = ab2();
    let mut corpus: Vec<Dfa> = vec![fig1()];
    for k in 1..=4 {
        corpus.push(family_a(k));
        corpus.push(family_b(k));
    }
    let mut rng = TestRng::new(0xC9);
    let mut added = 0;
    while added < 25 {
        let d = random_trimmed_dfa(&mut rng, 1, 6, &ab);
        if min_wdfa(&d).is_ok() {
            corpus.push(d);
            added += 1;
        }
    }

    let mut wdfas = 0usize;
    let mut probes = 0usize;
    for (idx, d) in corpus.iter().enumerate() {
        let Ok(r) = min_wdfa(d) else { continue };
        wdfas += 1;
        let order = TotalOrder::identity(r.wdfa.state_count());

        // contiguity: each state's bounded incoming words form one block of
        // the sorted bounded prefix set (the WDFA is input-consistent, so a
        // state's block is exactly its class)
        let pref = oracle::enum_pref(&r.wdfa, 8, 14).unwrap();
        let states: Vec<usize> = pref.entries.iter().map(|e| e.state).collect();
        for q in 0..r.wdfa.state_count() {
            let first = states.iter().position(|&s| s == q);
            let last = states.iter().rposition(|&s| s == q);
            if let (Some(a), Some(b)) = (first, last) {
                assert!(
                    states[a..=b].iter().all(|&s| s == q),
                    "instance {idx}: I_q{q} blocked apart"
                );
            }
        }

        // sampled path coherence
        let samples = 1000;
        path_coherence_check(&r.wdfa, &order, samples, 0x9 + idx as u64)
            .unwrap_or_else(|v| panic!("instance {idx}: path coherence violated: {v:?}"));
        probes += samples;
    }
    // also exercise the intersection outputs
    for n in 1..=3 {
        for m in 1..=3 {
            let wa = min_wdfa(&family_a(n)).unwrap();
            let wb = min_wdfa(&family_b(m)).unwrap();
            if let Some(res) =
                intersect_wdfa(&wa.wdfa, &wa.order, &wb.wdfa, &wb.order).unwrap()
            {
                let order = TotalOrder::identity(res.wdfa.state_count());
                path_coherence_check(&res.wdfa, &order, 1000, 99).unwrap();
                probes += 1000;
                wdfas += 1;
            }
        }
    }
    assert!(wdfas >= 30);
    println!("criterion 9: PASS ({wdfas} WDFAs, {probes} probes, zero violations)");
}

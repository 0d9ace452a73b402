//! The headline verification suite.
//!
//! Each test here is one acceptance criterion for the library: an exact,
//! exhaustively checkable statement about delta-matroids, the interlace
//! polynomial, the two moves, or the primitive-projection machinery. Every
//! test prints a single `acceptance NN name: PASS|FAIL [detail]` line
//! (visible under `cargo test --test acceptance -- --nocapture`) and then
//! asserts, so a red run still reports the full verdict table.
//!
//! The tests are numbered `c01` … `c13`; the default alphabetical order of
//! the harness runs them in sequence. Expensive shared structures (the
//! labeled binary universe at n = 5, the degree-n independence rows) are
//! built once behind `OnceLock`s and reused across criteria.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use deltam::{
    binarity, hopf, moves, BinaryUniverse, DeltaMatroid, Gf2SymMatrix, GraphPolyMemo,
    IntPolynomial, PrimitiveSpan, SetSystem, SimpleGraph,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Seed for every randomized sweep in this suite. Fixed so that reruns check
/// the same instances; criterion 6 replays criterion 5's sample bit-for-bit.
const SEED: u64 = 0x5EED_CAFE;

/// Random binary four-term instances at n = 5 (criteria 5 and 6).
const RANDOM_FOUR_TERM: usize = 10_000;

fn conclude(num: u32, name: &str, ok: bool, detail: String) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("acceptance {num:02} {name}: {verdict}  [{detail}]");
    assert!(ok, "acceptance {num:02} {name} failed: {detail}");
}

fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(coeffs.to_vec())
}

fn dm(n: usize, feasible: &[u32]) -> Result<DeltaMatroid, deltam::Error> {
    DeltaMatroid::new(SetSystem::new(n, feasible.to_vec())?)
}

/// Every labeled simple graph on n vertices, as edge subsets of K_n.
fn all_labeled_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::from_edges(n, &edges).expect("edges of K_n are valid")
        })
        .collect()
}

static UNIVERSES: [OnceLock<BinaryUniverse>; 6] = [const { OnceLock::new() }; 6];

fn universe(n: usize) -> &'static BinaryUniverse {
    UNIVERSES[n].get_or_init(|| BinaryUniverse::build(n).expect("n is within capacity"))
}

static SPANS: OnceLock<Vec<PrimitiveSpan>> = OnceLock::new();

/// The degree-n independence rows for n = 2..=7, built once.
fn spans() -> &'static [PrimitiveSpan] {
    SPANS.get_or_init(|| {
        (2..=7)
            .map(|n| hopf::primitive_span(n).expect("n is within capacity"))
            .collect()
    })
}

/// q(π(D)) — shorthand used by several criteria.
fn projected_polynomial(d: &DeltaMatroid) -> IntPolynomial {
    hopf::project_primitive(d)
        .expect("projection stays within capacity")
        .interlace_polynomial()
}

// ---------------------------------------------------------------------------

/// 1. The worked positive and negative axiom examples classify correctly.
#[test]
fn c01_axiom_examples() {
    // {∅, {1}, {1,2}, {2,3}, {1,2,3}} on three elements satisfies exchange.
    let good = dm(3, &[0b000, 0b001, 0b011, 0b110, 0b111]);
    // Dropping {1} breaks it: no single-step exchange fixes (∅, {1,2,3}).
    let bad = dm(3, &[0b000, 0b011, 0b110, 0b111]);
    let ok = good.is_ok() && matches!(bad, Err(deltam::Error::ExchangeAxiom { .. }));
    let detail = format!(
        "positive example valid; negative example rejected: {}",
        match &bad {
            Err(e) => e.to_string(),
            Ok(_) => "NOT REJECTED".to_string(),
        }
    );
    conclude(1, "axiom-examples", ok, detail);
}

/// 2. The graph polynomial equals the set-system polynomial of the
/// nondegeneracy delta-matroid evaluated at x − 1, for every labeled graph
/// on ≤ 5 vertices and 500 random graphs on 6.
#[test]
fn c02_graph_polynomial_bridge() {
    let start = Instant::now();
    let mut memo = GraphPolyMemo::new();
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    let mut classes5: BTreeSet<SimpleGraph> = BTreeSet::new();

    let bridge_holds = |g: &SimpleGraph, memo: &mut GraphPolyMemo| -> bool {
        let recursive = g
            .interlace_polynomial_memo(memo)
            .expect("graph within capacity");
        let direct = g
            .delta_matroid()
            .as_set_system()
            .interlace_polynomial()
            .shift(-1);
        recursive == direct
    };

    for n in 0..=5 {
        for g in all_labeled_graphs(n) {
            checked += 1;
            if !bridge_holds(&g, &mut memo) {
                mismatches += 1;
            }
            if n == 5 {
                classes5.insert(g.canonical_form().expect("graph within capacity").0);
            }
        }
    }
    let classes_ok = classes5.len() == 34;

    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..500 {
        let g = SimpleGraph::random(6, &mut rng);
        checked += 1;
        if !bridge_holds(&g, &mut memo) {
            mismatches += 1;
        }
    }

    let elapsed = start.elapsed();
    let ok = mismatches == 0 && classes_ok && elapsed < Duration::from_secs(10);
    conclude(
        2,
        "graph-polynomial-bridge",
        ok,
        format!(
            "{checked} graphs, {mismatches} mismatches, {} isomorphism classes at n=5, {:.2?}",
            classes5.len(),
            elapsed
        ),
    );
}

/// 3. The elimination recursion and the direct subset sum agree on every
/// delta-matroid on ≤ 4 elements; the enumeration counts are pinned.
#[test]
fn c03_recursion_equals_direct() {
    let start = Instant::now();
    let expected_counts = [1usize, 3, 15, 155, 5959];
    let mut counts = Vec::new();
    let mut mismatches = 0usize;
    for n in 0..=4 {
        let all = moves::enumerate_delta_matroids(n).expect("n is within capacity");
        counts.push(all.len());
        for d in &all {
            let direct = d.as_set_system().interlace_polynomial();
            let recursive = d.interlace_polynomial_recursive();
            if direct != recursive {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = counts == expected_counts && mismatches == 0 && elapsed < Duration::from_secs(60);
    conclude(
        3,
        "recursion-equals-direct",
        ok,
        format!("counts {counts:?} (expected {expected_counts:?}), {mismatches} mismatches, {elapsed:.2?}"),
    );
}

/// 4. The graph four-term defect vanishes for every labeled graph on ≤ 5
/// vertices and every ordered vertex pair.
#[test]
fn c04_graph_four_term() {
    let start = Instant::now();
    let mut memo = GraphPolyMemo::new();
    let mut pairs = 0usize;
    let mut nonzero = 0usize;
    for n in 2..=5 {
        for g in all_labeled_graphs(n) {
            let base = g
                .interlace_polynomial_memo(&mut memo)
                .expect("graph within capacity");
            for a in 1..=n {
                for b in 1..=n {
                    if a == b {
                        continue;
                    }
                    let mv = g.moves(a, b).expect("pair is valid and moves commute");
                    let defect = &(&base
                        - &mv
                            .exchanged
                            .interlace_polynomial_memo(&mut memo)
                            .expect("graph within capacity"))
                        - &(&mv
                            .slid
                            .interlace_polynomial_memo(&mut memo)
                            .expect("graph within capacity")
                            - &mv
                                .both
                                .interlace_polynomial_memo(&mut memo)
                                .expect("graph within capacity"));
                    pairs += 1;
                    if !defect.is_zero() {
                        nonzero += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = nonzero == 0 && elapsed < Duration::from_secs(60);
    conclude(
        4,
        "graph-four-term",
        ok,
        format!("{pairs} (graph, pair) cases, {nonzero} nonzero defects, {elapsed:.2?}"),
    );
}

/// 5. The delta-matroid four-term defect vanishes — exhaustively over the
/// binary universe on n ≤ 4 (with the per-subset distance identity holding
/// pointwise), plus 10^4 seeded random binary instances at n = 5.
#[test]
fn c05_delta_matroid_four_term() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    let expected = [(2usize, 11usize, 22usize), (3, 45, 270), (4, 228, 2736)];
    for (n, want_instances, want_pairs) in expected {
        let report = moves::verify_four_term_exhaustive(n).expect("n is within capacity");
        ok &= report.clean()
            && report.instances == want_instances
            && report.pairs == want_pairs;
        detail.push_str(&format!(
            "n={n}: {}/{} clean={}; ",
            report.instances,
            report.pairs,
            report.clean()
        ));
    }
    let random = moves::verify_four_term_random(5, RANDOM_FOUR_TERM, SEED)
        .expect("n is within capacity");
    ok &= random.clean() && random.instances == RANDOM_FOUR_TERM;
    detail.push_str(&format!(
        "random n=5: {} instances clean={}",
        random.instances,
        random.clean()
    ));
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    conclude(
        5,
        "delta-matroid-four-term",
        ok,
        format!("{detail}, {elapsed:.2?}"),
    );
}

/// 6. Both moves keep binary delta-matroids binary: every member of every
/// four-term quadruple over the same universe as criterion 5 lies in the
/// labeled binary universe of matching size.
#[test]
fn c06_quadruples_stay_binary() {
    let start = Instant::now();
    let mut members = 0usize;
    let mut escapes = 0usize;

    for n in 2..=4 {
        let uni = universe(n);
        for d in moves::enumerate_binary(n).expect("n is within capacity") {
            for a in 1..=n {
                for b in 1..=n {
                    if a == b {
                        continue;
                    }
                    let quad = moves::four_term_quadruple(d.as_set_system(), a, b)
                        .expect("moves commute on delta-matroids");
                    for m in quad.members() {
                        members += 1;
                        if !uni.contains(m) {
                            escapes += 1;
                        }
                    }
                }
            }
        }
    }

    // Bit-for-bit the same instance stream as criterion 5's random sweep.
    let uni5 = universe(5);
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RANDOM_FOUR_TERM {
        let d = moves::random_binary(5, &mut rng);
        let a = rng.gen_range(1..=5);
        let b = loop {
            let b = rng.gen_range(1..=5);
            if b != a {
                break b;
            }
        };
        let quad = moves::four_term_quadruple(d.as_set_system(), a, b)
            .expect("moves commute on delta-matroids");
        for m in quad.members() {
            members += 1;
            if !uni5.contains(m) {
                escapes += 1;
            }
        }
    }

    let elapsed = start.elapsed();
    let ok = escapes == 0;
    conclude(
        6,
        "quadruples-stay-binary",
        ok,
        format!("{members} quadruple members, {escapes} outside the universe, {elapsed:.2?}"),
    );
}

/// 7. The matrix-extension identity q(M_{A'}) = q(M_A) + (x+1)·q(M_A ∖ 1)
/// for the all-ones matrices n = 1..6 and 200 random symmetric matrices per
/// size n ≤ 6.
#[test]
fn c07_extension_identity() {
    let start = Instant::now();
    let x_plus_one = poly(&[1, 1]);
    let mut checked = 0usize;
    let mut failures = 0usize;
    let mut check = |a: &Gf2SymMatrix| {
        let d = a.delta_matroid();
        let d_prime = a.extend().delta_matroid();
        let lhs = d_prime.as_set_system().interlace_polynomial();
        let rhs = &d.as_set_system().interlace_polynomial()
            + &(&x_plus_one
                * &d.delete(1)
                    .expect("element 1 exists")
                    .as_set_system()
                    .interlace_polynomial());
        checked += 1;
        if lhs != rhs {
            failures += 1;
        }
    };
    for n in 1..=6 {
        check(&Gf2SymMatrix::all_ones(n));
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for n in 1..=6 {
        for _ in 0..200 {
            check(&Gf2SymMatrix::random(n, &mut rng));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0;
    conclude(
        7,
        "extension-identity",
        ok,
        format!("{checked} matrices, {failures} failures, {elapsed:.2?}"),
    );
}

/// 8. The constant term of q(π(D_n)) for the all-ones family is
/// (−1)^{n−1}·(n−1)! for n = 2..7.
#[test]
fn c08_projection_constant_terms() {
    let start = Instant::now();
    let expected = [-1i64, 2, -6, 24, -120, 720];
    let mut got = Vec::new();
    for n in 2..=7 {
        let d = hopf::all_ones(n).expect("n is within capacity");
        got.push(projected_polynomial(&d).coeff(0));
    }
    let elapsed = start.elapsed();
    let ok = got == expected && elapsed < Duration::from_secs(60);
    conclude(
        8,
        "projection-constant-terms",
        ok,
        format!("constant terms {got:?} (expected {expected:?}), {elapsed:.2?}"),
    );
}

/// 9. The −x recurrence q(π(D')) = −x·q(π(D)) under matrix extension, for
/// every tower family with base ≥ 2 on ≤ 7 elements and for 100 random
/// symmetric matrices per size (extension within 6 elements); the size-1
/// base case genuinely fails and is pinned as failing.
#[test]
fn c09_projection_shift_law() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut failures = 0usize;

    let holds = |d: &DeltaMatroid, d_prime: &DeltaMatroid| -> bool {
        let lhs = projected_polynomial(d_prime);
        let rhs = &projected_polynomial(d).scale(-1) * &IntPolynomial::x();
        lhs == rhs
    };

    for base in 2..=6usize {
        for steps in 0..=6 - base {
            let d = hopf::tower(base, steps).expect("tower within capacity");
            let d_prime = hopf::tower(base, steps + 1).expect("tower within capacity");
            checked += 1;
            if !holds(&d, &d_prime) {
                failures += 1;
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(SEED);
    for n in 2..=5 {
        for _ in 0..100 {
            let a = Gf2SymMatrix::random(n, &mut rng);
            checked += 1;
            if !holds(&a.delta_matroid(), &a.extend().delta_matroid()) {
                failures += 1;
            }
        }
    }

    // The size-1 base case breaks the law, with these exact values.
    let d1 = hopf::tower(1, 0).expect("within capacity");
    let d1_ext = hopf::tower(1, 1).expect("within capacity");
    let lhs = projected_polynomial(&d1_ext);
    let rhs = &projected_polynomial(&d1).scale(-1) * &IntPolynomial::x();
    let boundary_ok = lhs == poly(&[1, -1]) && rhs == poly(&[0, -2]) && lhs != rhs;

    let elapsed = start.elapsed();
    let ok = failures == 0 && boundary_ok;
    conclude(
        9,
        "projection-shift-law",
        ok,
        format!(
            "{checked} extensions, {failures} failures; size-1 boundary fails as recorded: {boundary_ok}; {elapsed:.2?}"
        ),
    );
}

/// 10. Degrees: q(π(·)) of the complete-graph family has degree exactly n
/// with leading coefficient (−1)^{n−1}(n−1)!, while every tower row in the
/// same degree stays below n, for n = 2..7.
#[test]
fn c10_projection_degrees() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for span in spans() {
        let n = span.n;
        let factorial: i64 = (1..=n as i64 - 1).product();
        let want_leading = if n % 2 == 0 { -factorial } else { factorial };
        // Rows 0..n−1 are the all-ones family and the towers; row n−1 is the
        // complete graph.
        let (towers, complete) = span.polynomials.split_at(n - 1);
        for p in towers {
            ok &= p.degree().map_or(true, |d| d < n);
        }
        let complete = &complete[0];
        let complete_ok =
            complete.degree() == Some(n) && complete.leading_coeff() == Some(want_leading);
        ok &= complete_ok;
        detail.push_str(&format!(
            "n={n}: deg {:?} lead {:?}; ",
            complete.degree(),
            complete.leading_coeff()
        ));
    }
    let elapsed = start.elapsed();
    conclude(
        10,
        "projection-degrees",
        ok,
        format!("{detail}{elapsed:.2?}"),
    );
}

/// 11. Independence: the n projected polynomials in degree n have rank n
/// for n = 2..7, with the small cases matching their recorded values.
#[test]
fn c11_primitive_independence() {
    let start = Instant::now();
    let mut ok = true;
    let mut ranks = Vec::new();
    for span in spans() {
        ranks.push(span.rank);
        ok &= span.rank == span.n;
    }

    // Pinned small values: rows of the n = 2 and n = 3 spans.
    let span2 = &spans()[0];
    let span3 = &spans()[1];
    ok &= span2.polynomials[0] == poly(&[-1, 1]); // all-ones, 2 elements
    ok &= span3.polynomials[0] == poly(&[2, -3, 1]); // all-ones, 3 elements
    ok &= span3.polynomials[1] == poly(&[0, 1, -1]); // tower base 2, one step
    ok &= span3.polynomials[2] == poly(&[0, -2, 0, 2]); // complete graph, 3 vertices

    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(120);
    conclude(
        11,
        "primitive-independence",
        ok,
        format!("ranks {ranks:?} for n=2..7, {elapsed:.2?}"),
    );
}

/// 12. Multiplicativity: q(D1·D2) = q(D1)·q(D2) on 1000 random binary
/// pairs of total size ≤ 8.
#[test]
fn c12_multiplicativity() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut failures = 0usize;
    for _ in 0..1000 {
        let n1 = rng.gen_range(0..=6);
        let n2 = rng.gen_range(0..=(8 - n1).min(6));
        let d1 = moves::random_binary(n1, &mut rng);
        let d2 = moves::random_binary(n2, &mut rng);
        let product = d1.product(&d2).expect("total size within capacity");
        let lhs = product.as_set_system().interlace_polynomial();
        let rhs = &d1.as_set_system().interlace_polynomial()
            * &d2.as_set_system().interlace_polynomial();
        if lhs != rhs {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0;
    conclude(
        12,
        "multiplicativity",
        ok,
        format!("1000 pairs, {failures} failures, {elapsed:.2?}"),
    );
}

/// 13. The binarity decision (matrix reconstruction) agrees with the
/// exhaustive matrix-and-twist universe on every delta-matroid with n ≤ 4
/// and on 1000 random set systems (plus 200 random binary instances) at
/// n = 5.
#[test]
fn c13_binarity_oracle_agreement() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    let mut binary_seen = 0usize;

    for n in 0..=4 {
        let uni = universe(n);
        for d in moves::enumerate_delta_matroids(n).expect("n is within capacity") {
            let s = d.as_set_system();
            let fast = binarity(s).is_binary();
            let oracle = uni.contains(s);
            checked += 1;
            binary_seen += usize::from(oracle);
            if fast != oracle {
                disagreements += 1;
            }
        }
    }

    let uni5 = universe(5);
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..1000 {
        let indicator = loop {
            let bits: u32 = rng.gen();
            if bits != 0 {
                break bits;
            }
        };
        let s = SetSystem::from_indicator(5, indicator as u64).expect("nonzero indicator");
        let fast = binarity(&s).is_binary();
        let oracle = uni5.contains(&s);
        checked += 1;
        binary_seen += usize::from(oracle);
        if fast != oracle {
            disagreements += 1;
        }
    }
    for _ in 0..200 {
        let d = moves::random_binary(5, &mut rng);
        let s = d.as_set_system();
        let fast = binarity(s).is_binary();
        let oracle = uni5.contains(s);
        checked += 1;
        binary_seen += usize::from(oracle);
        if fast != oracle {
            disagreements += 1;
        }
    }

    let elapsed = start.elapsed();
    let ok = disagreements == 0;
    conclude(
        13,
        "binarity-oracle-agreement",
        ok,
        format!(
            "{checked} systems ({binary_seen} binary), {disagreements} disagreements, {elapsed:.2?}"
        ),
    );
}

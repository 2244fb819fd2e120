//! Acceptance suite: every criterion is exact (integer or polynomial
//! equality, zero tolerance) and prints one pass/fail line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigInt;
use num_traits::One;

use fibtile::barrier::barrier_sum;
use fibtile::graphs::{enum_tiling_graphs, graph_to_tiling, tiling_to_graph};
use fibtile::identities;
use fibtile::poly::{IntPoly2, QPoly};
use fibtile::sequences::{
    circ_lucas_poly, fib, gauss_binom, lucas, lucas_poly, lucasnomial, q_fib, q_fib_factorial,
    q_fibonomial,
};
use fibtile::staircase::{coord_partition_sum, full_sum, staircase_sum};
use fibtile::tilings::{
    Mode, ModifiedVariant, Restriction, enum_strip, extension_classes, modified_fibonomial_count,
    sagan_savage_sum, strip_weight_st,
};

fn pass(criterion: &str, detail: &str) {
    println!("acceptance {criterion}: pass — {detail}");
}

fn strip_total(n: usize, mode: Mode) -> (IntPoly2, usize) {
    let tilings = enum_strip(n, mode, Restriction::None);
    let total = tilings.iter().map(|t| strip_weight_st(t, mode)).sum();
    (total, tilings.len())
}

#[test]
fn criterion_01_figure_reproduction() {
    let (linear, linear_count) = strip_total(3, Mode::Linear);
    let expected = &IntPoly2::monomial(3, 0, 1) + &IntPoly2::monomial(1, 1, 2);
    assert_eq!(linear, expected);
    assert_eq!(linear_count, 3);

    let (circular, circular_count) = strip_total(3, Mode::Circular);
    let expected = &IntPoly2::monomial(3, 0, 1) + &IntPoly2::monomial(1, 1, 3);
    assert_eq!(circular, expected);
    assert_eq!(circular_count, 4);
    pass(
        "1",
        "length-3 strip totals s^3+2st (3 tilings) and s^3+3st (4 tilings)",
    );
}

#[test]
fn criterion_02_strip_lemma() {
    let one = BigInt::one();
    for n in 0..=18usize {
        let (linear, _) = strip_total(n, Mode::Linear);
        assert_eq!(linear, lucas_poly(n as u64 + 1), "linear total at n={n}");
        assert_eq!(linear.evaluate(&one, &one), fib(n as u64 + 1));

        let (circular, _) = strip_total(n, Mode::Circular);
        assert_eq!(
            circular,
            circ_lucas_poly(n as u64),
            "circular total at n={n}"
        );
        assert_eq!(circular.evaluate(&one, &one), lucas(n as u64));
    }
    pass(
        "2",
        "strip weight totals match {n+1} and <n> for n <= 18, counts included",
    );
}

#[test]
fn criterion_03_partition_tiling_theorem() {
    for m in 0..=5usize {
        for n in 0..=5usize {
            assert_eq!(
                sagan_savage_sum(m, n, Mode::Linear),
                lucasnomial((m + n) as u64, m as u64).unwrap(),
                "linear partition total at m={m}, n={n}"
            );
        }
    }
    for m in 0..=4usize {
        for n in 0..=4usize {
            let expected = lucasnomial((m + n) as u64, m as u64)
                .unwrap()
                .scale(BigInt::from(2).pow((m + n) as u32));
            assert_eq!(
                sagan_savage_sum(m, n, Mode::Circular),
                expected,
                "circular partition total at m={m}, n={n}"
            );
        }
    }
    pass(
        "3",
        "partition totals equal Lucasnomials (m,n <= 5) and 2^{m+n} times them (m,n <= 4)",
    );
}

#[test]
fn criterion_04_modified_interpretation() {
    let one = BigInt::one();
    for m in 0..=5usize {
        for n in 0..=5usize {
            let unrestricted = modified_fibonomial_count(m, n, ModifiedVariant::Unrestricted);
            let expected = lucasnomial((m + n + 2) as u64, n as u64)
                .unwrap()
                .evaluate(&one, &one);
            assert_eq!(unrestricted, expected, "unrestricted count at m={m}, n={n}");

            let monomino = modified_fibonomial_count(m, n, ModifiedVariant::Monomino);
            let expected = lucasnomial((m + n + 1) as u64, n as u64)
                .unwrap()
                .evaluate(&one, &one);
            assert_eq!(monomino, expected, "monomino count at m={m}, n={n}");
        }
    }
    for m in 0..=3usize {
        for n in 0..=3usize {
            let report = extension_classes(m, n).expect("classes partition and size correctly");
            let covered: usize = report.classes.iter().map(|c| c.class_size).sum();
            assert_eq!(
                covered, report.total_restricted,
                "partition at m={m}, n={n}"
            );
        }
    }
    pass(
        "4",
        "modified weighted counts hit the shifted Fibonomials; extension classes partition",
    );
}

#[test]
fn criterion_05_gaussian_specialization() {
    let q1 = &QPoly::one() + &QPoly::q();
    let mq = QPoly::monomial(1u32, -1);
    for total in 0..=10u64 {
        for k in 0..=total {
            let image = lucasnomial(total, k).unwrap().substitute_st(&q1, &mq);
            assert_eq!(
                image,
                gauss_binom(total, k).unwrap(),
                "specialization at n={total}, k={k}"
            );
        }
    }
    pass(
        "5",
        "every Lucasnomial with m+n <= 10 specializes to its Gaussian binomial",
    );
}

#[test]
fn criterion_06_barrier_theorem() {
    for n in 0..=12usize {
        let expected = q_fib(n as u64 + 1);
        for k in 0..=n {
            assert_eq!(barrier_sum(n, k), expected, "barrier total at n={n}, k={k}");
        }
    }
    pass(
        "6",
        "barrier totals equal [F_{n+1}]_q for all 0 <= k <= n <= 12",
    );
}

#[test]
fn criterion_07_staircase_theorems() {
    for n in 0..=8usize {
        for k in 0..=n {
            assert_eq!(
                staircase_sum(n, k),
                q_fibonomial(n as u64, k as u64).unwrap(),
                "staircase total at n={n}, k={k}"
            );
        }
    }
    for n in 0..=8usize {
        let expected = q_fib_factorial(n as u64);
        for k in 0..=n {
            assert_eq!(
                full_sum(n, k),
                expected,
                "full staircase total at n={n}, k={k}"
            );
        }
    }
    for m in 0..=8usize {
        for n in 0..=(8 - m) {
            assert_eq!(
                coord_partition_sum(m, n),
                q_fibonomial((m + n) as u64, n as u64).unwrap(),
                "coordinate total at m={m}, n={n}"
            );
        }
    }
    pass(
        "7",
        "staircase, full-staircase and coordinate totals match their q-Fibonomial forms",
    );
}

#[test]
fn criterion_08_identity_suite() {
    let grids: &[(&str, u64)] = &[
        ("G0", 6),
        ("G1", 6),
        ("G2", 6),
        ("G3", 6),
        ("G4", 6),
        ("G5", 6),
        ("G6", 6),
        ("G7", 6),
        ("L1", 20),
        ("L2", 20),
        ("B1", 20),
        ("B2", 20),
        ("B5", 20),
        ("B6", 20),
        ("Q1", 8),
        ("Q2", 8),
        ("Q3", 8),
        ("X1", 10),
    ];
    for (id, max) in grids {
        let desc = identities::find(id).expect("registered");
        let report = identities::verify(id, &desc.default_grid(*max)).unwrap();
        assert!(report.passed, "{}", report.render_line());
        assert!(report.points_checked > 0, "{id} grid is empty");
    }
    // stepped expansions: n <= 14 with 1 <= a <= 4
    for id in ["B3", "B7"] {
        let desc = identities::find(id).expect("registered");
        let grid: Vec<Vec<u64>> = desc
            .default_grid(14)
            .into_iter()
            .filter(|p| p[1] <= 4)
            .collect();
        let report = identities::verify(id, &grid).unwrap();
        assert!(report.passed, "{}", report.render_line());
    }
    let b4 = identities::find("B4").expect("registered");
    let report = identities::verify("B4", &b4.default_grid(14)).unwrap();
    assert!(report.passed, "{}", report.render_line());

    // divisibility must fail on a non-divisor pair
    assert!(
        q_fib(6).exact_div(&q_fib(4)).is_err(),
        "negative probe: [F_6]_q / [F_4]_q has a remainder"
    );
    pass(
        "8",
        "all 21 identities pass on their stated grids; the negative probe stays NotDivisible",
    );
}

#[test]
fn criterion_09_graph_bijection() {
    for n in 1..=14usize {
        for mode in [Mode::Linear, Mode::Circular] {
            let tilings = enum_strip(n, mode, Restriction::None);
            let graphs = enum_tiling_graphs(n, mode);
            assert_eq!(tilings.len(), graphs.len(), "counts at n={n} {mode:?}");

            let mut images = std::collections::BTreeSet::new();
            for tiling in &tilings {
                let graph = tiling_to_graph(tiling, mode);
                assert_eq!(
                    &graph_to_tiling(&graph).unwrap(),
                    tiling,
                    "round trip at n={n}"
                );
                images.insert(graph);
            }
            assert_eq!(images.len(), graphs.len(), "bijection is onto at n={n}");

            let total: IntPoly2 = graphs.iter().map(|g| g.weight()).sum();
            let expected = match mode {
                Mode::Linear => lucas_poly(n as u64 + 1),
                Mode::Circular => circ_lucas_poly(n as u64),
            };
            assert_eq!(total, expected, "graph weights at n={n} {mode:?}");
        }
    }
    pass(
        "9",
        "tiling/graph round trip and weight agreement hold for n <= 14, both modes",
    );
}

#[test]
fn criterion_10_deterministic_reports() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_fibtile"))
            .args(["verify", "--all", "--max", "5"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "verify --all --max 5 exits 0");
    assert_eq!(first.stdout, second.stdout, "reports are byte-identical");
    assert_eq!(first.stderr, second.stderr);
    pass(
        "10",
        "two consecutive `verify --all --max 5` runs emit byte-identical reports",
    );
}

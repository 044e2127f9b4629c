//! Known values, checked against every computation route.

use hlkostka::kostka::{kostka_table, KostkaTable, Method};
use hlkostka::symfunc::{Params, Sign};
use hlkostka::{RPartition, TPoly};

fn tables(n: usize, r: usize, sign: Sign) -> Vec<KostkaTable> {
    let methods: &[Method] = if sign == Sign::Minus {
        &Method::ALL
    } else {
        &[Method::Solve, Method::GramSchmidt]
    };
    methods
        .iter()
        .map(|&m| kostka_table(n, sign, m, &Params::generic(r), None).unwrap())
        .collect()
}

fn check(n: usize, r: usize, sign: Sign, expected: &[(&str, &str, &str)]) {
    for t in tables(n, r, sign) {
        for &(l, mu, k) in expected {
            let (l, mu): (RPartition, RPartition) = (l.parse().unwrap(), mu.parse().unwrap());
            assert_eq!(
                t.get(&l, &mu),
                TPoly::parse(k, t.nvars).unwrap(),
                "K{sign}_{l},{mu} by {}",
                t.method
            );
        }
        t.check_unitriangular().unwrap();
    }
}

/// Single-component tables are the Kostka–Foulkes polynomials.
#[test]
fn kostka_foulkes_n3_and_n4() {
    for sign in Sign::BOTH {
        check(
            3,
            1,
            sign,
            &[
                ("([3])", "([2,1])", "t"),
                ("([3])", "([1,1,1])", "t^3"),
                ("([2,1])", "([1,1,1])", "t + t^2"),
                ("([2,1])", "([3])", "0"),
            ],
        );
        check(
            4,
            1,
            sign,
            &[
                ("([4])", "([1,1,1,1])", "t^6"),
                ("([3,1])", "([2,2])", "t"),
                ("([3,1])", "([1,1,1,1])", "t^3 + t^4 + t^5"),
                ("([2,2])", "([2,1,1])", "t"),
                ("([2,2])", "([1,1,1,1])", "t^2 + t^4"),
                ("([2,1,1])", "([1,1,1,1])", "t + t^2 + t^3"),
            ],
        );
    }
}

/// With one box, a single root joins the two positions and carries one
/// parameter: `t₁` for the minus family and `t_r` for the plus family.
#[test]
fn one_box_tables() {
    check(1, 2, Sign::Minus, &[("([1],[])", "([],[1])", "t1")]);
    check(1, 2, Sign::Plus, &[("([1],[])", "([],[1])", "t2")]);
    check(
        1,
        3,
        Sign::Minus,
        &[
            ("([1],[],[])", "([],[1],[])", "t1"),
            ("([1],[],[])", "([],[],[1])", "t1*t2"),
            ("([],[1],[])", "([],[],[1])", "t2"),
        ],
    );
    check(
        1,
        3,
        Sign::Plus,
        &[
            ("([1],[],[])", "([],[1],[])", "0"),
            ("([1],[],[])", "([],[],[1])", "t3"),
            ("([],[1],[])", "([],[],[1])", "t1*t3"),
        ],
    );
}

#[test]
fn two_box_two_component_minus_table() {
    check(
        2,
        2,
        Sign::Minus,
        &[
            ("([2],[])", "([1],[1])", "t1"),
            ("([2],[])", "([1,1],[])", "t1*t2"),
            ("([2],[])", "([],[2])", "t1^2"),
            ("([2],[])", "([],[1,1])", "t1^3*t2"),
            ("([1],[1])", "([1,1],[])", "t2"),
            ("([1],[1])", "([],[2])", "t1"),
            ("([1],[1])", "([],[1,1])", "t1 + t1^2*t2"),
            ("([1,1],[])", "([],[1,1])", "t1^2"),
            ("([],[2])", "([],[1,1])", "t1*t2"),
            ("([1,1],[])", "([],[2])", "0"),
        ],
    );
}

/// The plus family at `r = 2` is the minus family with `t₁ ↔ t₂`.
#[test]
fn two_component_plus_is_minus_with_swapped_parameters() {
    for n in 1..=3 {
        let minus = kostka_table(n, Sign::Minus, Method::Solve, &Params::generic(2), None).unwrap();
        let plus = kostka_table(n, Sign::Plus, Method::Solve, &Params::generic(2), None).unwrap();
        let swap = [TPoly::var(2, 1), TPoly::var(2, 0)];
        assert_eq!(
            minus.specialize(&swap).unwrap().first_difference(&plus),
            None,
            "n = {n}"
        );
    }
}

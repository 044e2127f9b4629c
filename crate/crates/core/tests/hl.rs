//! Hall–Littlewood functions in Schur coordinates against hand expansions.

use hlkostka::hl::{b_lambda, hl_p, hl_q};
use hlkostka::symfunc::{Params, Sign, SymEngine};
use hlkostka::{RPartition, TPoly};

fn rp(s: &str) -> RPartition {
    s.parse().unwrap()
}

fn assert_schur(f: &hlkostka::symfunc::SymElem<TPoly>, nvars: usize, expected: &[(&str, &str)]) {
    let mut seen = 0;
    for &(l, c) in expected {
        assert_eq!(
            f.get(&rp(l)),
            TPoly::parse(c, nvars).unwrap(),
            "coefficient of s_{l}"
        );
        seen += 1;
    }
    assert_eq!(f.coords().len(), seen, "unexpected extra terms in {f:?}");
}

#[test]
fn classical_p_and_q() {
    let e = SymEngine::new(Params::generic(1));
    for sign in Sign::BOTH {
        assert_schur(
            &hl_p(&rp("([2])"), sign, &e).unwrap(),
            1,
            &[("([2])", "1"), ("([1,1])", "-t")],
        );
        assert_schur(
            &hl_p(&rp("([3])"), sign, &e).unwrap(),
            1,
            &[("([3])", "1"), ("([2,1])", "-t"), ("([1,1,1])", "t^2")],
        );
        assert_schur(
            &hl_p(&rp("([2,1])"), sign, &e).unwrap(),
            1,
            &[("([2,1])", "1"), ("([1,1,1])", "-t - t^2")],
        );
        assert_schur(
            &hl_q(&rp("([1,1])"), sign, &e).unwrap(),
            1,
            &[("([1,1])", "1 - t - t^2 + t^3")],
        );
    }
    assert_eq!(
        b_lambda(&rp("([2,1])"), &e).unwrap(),
        TPoly::parse("1 - 2*t + t^2", 1).unwrap()
    );
}

#[test]
fn one_box_two_components() {
    let e = SymEngine::new(Params::generic(2));
    assert_schur(
        &hl_p(&rp("([1],[])"), Sign::Minus, &e).unwrap(),
        2,
        &[("([1],[])", "1"), ("([],[1])", "-t1")],
    );
    assert_schur(
        &hl_p(&rp("([1],[])"), Sign::Plus, &e).unwrap(),
        2,
        &[("([1],[])", "1"), ("([],[1])", "-t2")],
    );
    for sign in Sign::BOTH {
        assert_schur(
            &hl_p(&rp("([],[1])"), sign, &e).unwrap(),
            2,
            &[("([],[1])", "1")],
        );
    }
}

/// `P` at a uniform specialization equals `P` computed with uniform parameters.
#[test]
fn p_commutes_with_uniform_specialization() {
    let generic = SymEngine::new(Params::generic(2));
    let uniform = SymEngine::new(Params::uniform(2));
    let t = [TPoly::var(1, 0), TPoly::var(1, 0)];
    for l in hlkostka::combinat::gen_rpartitions(3, 2) {
        for sign in Sign::BOTH {
            let g = hl_p(&l, sign, &generic).unwrap();
            let u = hl_p(&l, sign, &uniform).unwrap();
            for (mu, c) in g.coords() {
                assert_eq!(
                    c.substitute(&t).with_nvars(1),
                    u.get(mu),
                    "{sign} {l} at {mu}"
                );
            }
        }
    }
}

use proptest::prelude::*;
use webbasis::tableaux::{reading_permutation, Filling};
use webbasis::webaction::WebVector;
use webbasis::webs::{tableau_to_web, web_to_tableau};
use webbasis::{Tableau, Web, WebBasis};

/// A standard tableau of shape (n,n) from a ballot sequence: `true` puts the
/// next value in the top row.
fn tableau_from_ballot(n: usize, choices: &[bool]) -> Tableau {
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    let mut choice = choices.iter().cycle();
    for v in 1..=2 * n {
        let can_top = top.len() < n;
        let can_bottom = bottom.len() < top.len();
        let go_top = match (can_top, can_bottom) {
            (true, true) => *choice.next().unwrap(),
            (t, _) => t,
        };
        if go_top {
            top.push(v)
        } else {
            bottom.push(v)
        }
    }
    Tableau::new(top, bottom).unwrap()
}

fn arb_tableau(max_n: usize) -> impl Strategy<Value = Tableau> {
    (1..=max_n, prop::collection::vec(any::<bool>(), 1..40))
        .prop_map(|(n, choices)| tableau_from_ballot(n, &choices))
}

proptest! {
    #[test]
    fn psi_round_trips(t in arb_tableau(14)) {
        let w = tableau_to_web(&t);
        prop_assert_eq!(web_to_tableau(&w), t.clone());
        let lefts: Vec<usize> = w.arcs().iter().map(|a| a.left).collect();
        prop_assert_eq!(lefts.as_slice(), t.top());
    }

    #[test]
    fn nesting_equals_inversions(t in arb_tableau(14)) {
        let w = tableau_to_web(&t);
        let word = reading_permutation(&t);
        let w_ = word.word();
        let brute = (0..w_.len())
            .flat_map(|a| (a + 1..w_.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| w_[a] > w_[b])
            .count();
        prop_assert_eq!(w.nesting_number(), brute);
    }

    #[test]
    fn text_forms_round_trip(t in arb_tableau(14)) {
        let w = tableau_to_web(&t);
        prop_assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t.clone());
        prop_assert_eq!(w.to_string().parse::<Web>().unwrap(), w);
        prop_assert_eq!(t.to_string().parse::<Filling>().unwrap(), t.as_filling().clone());
    }

    #[test]
    fn generators_are_involutions_on_vectors(
        n in 1usize..=5,
        coeffs in prop::collection::vec(-5i64..=5, 42),
        i in 1usize..=9,
    ) {
        let basis = WebBasis::new(n).unwrap();
        let i = 1 + (i - 1) % (2 * n - 1);
        let v = WebVector::from_dense(n, &coeffs[..basis.len()]);
        let twice = basis.act_simple_on_vector(i, &basis.act_simple_on_vector(i, &v).unwrap()).unwrap();
        prop_assert_eq!(twice, v);
    }

    #[test]
    fn words_act_like_products_of_generator_matrices(
        n in 1usize..=4,
        word in prop::collection::vec(1usize..=7, 0..8),
        start in 0usize..14,
    ) {
        let basis = WebBasis::new(n).unwrap();
        let word: Vec<usize> = word.into_iter().map(|l| 1 + (l - 1) % (2 * n - 1)).collect();
        let start = start % basis.len();
        let v = basis.act_word::<i64>(&word, &WebVector::basis(n, start)).unwrap();
        let mut dense = WebVector::<i64>::basis(n, start).to_dense(basis.len());
        for &l in &word {
            dense = basis.generator_matrix::<i64>(l).unwrap().mul_vec(&dense);
        }
        prop_assert_eq!(v.to_dense(basis.len()), dense);
    }
}

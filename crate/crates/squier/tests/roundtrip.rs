use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use squier::format::{
    parse_shell, parse_shell_file, parse_word, parse_zigzag, write_shell, write_shell_file,
    write_word, write_zigzag,
};
use squier::presentation::{parse_presentation, write_presentation};
use squier_core::{
    applicable_steps, inverse_applicable_steps, Letter, Polygraph, Shell, SignedStep, Word, ZigZag,
};

const SOURCES: [&str; 3] = [
    "[generators]\na\n[rules]\nr: a a -> a\n",
    "[generators]\na b\n[rules]\ns: b a -> a b\n",
    "[generators]\nx\n[rules]\ni: x x -> 1\n",
];

fn polygraph(k: usize) -> Polygraph {
    parse_presentation(SOURCES[k]).unwrap().polygraph
}

fn walk(p: &Polygraph, seed: u64, len: usize) -> ZigZag {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(0..=5);
    let start =
        Word::from_letters((0..n).map(|_| Letter(rng.gen_range(0..p.generators().len()) as u32)));
    let mut here = start.clone();
    let mut steps = Vec::new();
    for _ in 0..len {
        let mut moves: Vec<SignedStep> =
            applicable_steps(p, &here).into_iter().map(SignedStep::pos).collect();
        moves.extend(
            inverse_applicable_steps(p, &here)
                .into_iter()
                .filter(|s| s.source().len() <= 6)
                .map(SignedStep::neg),
        );
        let Some(m) = moves.choose(&mut rng).cloned() else { break };
        here = m.target();
        steps.push(m);
    }
    ZigZag::from_steps(start, steps).unwrap()
}

proptest! {
    #[test]
    fn words_round_trip(k in 0usize..3, letters in proptest::collection::vec(0u32..2, 0..8)) {
        let p = polygraph(k);
        let n = p.generators().len() as u32;
        let w = Word::from_letters(letters.into_iter().map(|l| Letter(l % n)));
        prop_assert_eq!(parse_word(&p, &write_word(&p, &w)).unwrap(), w);
    }

    #[test]
    fn zigzags_round_trip(k in 0usize..3, seed in any::<u64>(), len in 0usize..7) {
        let p = polygraph(k);
        let z = walk(&p, seed, len);
        let text = write_zigzag(&p, &z);
        let back = parse_zigzag(&p, &text).unwrap();
        prop_assert_eq!(write_zigzag(&p, &back), text);
        prop_assert_eq!(back, z);
    }

    #[test]
    fn shells_round_trip(k in 0usize..3, seeds in any::<[u64; 4]>()) {
        // edges need not close up: the text layer does not check corners
        let p = polygraph(k);
        let [t, b, l, r] = seeds.map(|s| walk(&p, s, 4));
        let s = Shell::from_edges(t, b, l, r);
        prop_assert_eq!(parse_shell(&p, &write_shell(&p, &s)).unwrap(), s.clone());
        prop_assert_eq!(parse_shell_file(&p, &write_shell_file(&p, &s)).unwrap(), s);
    }

    #[test]
    fn presentations_round_trip(k in 0usize..3) {
        let pres = parse_presentation(SOURCES[k]).unwrap();
        let text = write_presentation(&pres.polygraph, pres.precedence.as_ref());
        prop_assert_eq!(&text, SOURCES[k]);
        prop_assert_eq!(parse_presentation(&text).unwrap(), pres);
    }
}

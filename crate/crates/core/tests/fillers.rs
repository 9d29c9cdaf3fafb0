use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use squier_core::{
    applicable_steps, fill_shell, fill_square, fill_zigzag, normalize, squier_completion,
    validate_filler, CellTerm, Completion, Degeneracy, Error, Letter, Path, Polygraph, Precedence,
    Regime, Shell, Strategy, Word, ZigZag, DEFAULT_FUEL,
};

fn word(p: &Polygraph, s: &str) -> Word {
    Word::from_letters(s.chars().map(|c| p.generator(&c.to_string()).unwrap()))
}

fn presentation(letters: &str, rules: &[(&str, &str)]) -> Polygraph {
    let mut p = Polygraph::new(Regime::TwoPolygraph);
    for c in letters.chars() {
        p.add_generator(c.to_string());
    }
    for (i, (l, r)) in rules.iter().enumerate() {
        let (l, r) = (word(&p, l), word(&p, r));
        p.add_rule(format!("r{i}"), l, r);
    }
    p
}

fn completed(p: &Polygraph, fuel: usize) -> Completion {
    squier_completion(p, &Precedence::reverse_declaration(p), fuel).unwrap()
}

fn all_words(letters: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for l in 0..letters {
                out.push(out[i].concat(&Word::from_letters([Letter(l)])));
            }
        }
        start = end;
    }
    out
}

fn random_maximal_path(p: &Polygraph, w: &Word, rng: &mut ChaCha8Rng) -> Path {
    let mut path = Path::identity(w.clone());
    loop {
        let steps = applicable_steps(p, &path.target());
        let Some(step) = steps.choose(rng) else { return path };
        path = path.then(&Path::from(step.clone())).unwrap();
    }
}

fn examples() -> Vec<Polygraph> {
    vec![
        presentation("a", &[("aa", "a")]),
        presentation("ab", &[("ba", "ab")]),
        presentation("x", &[("xx", "")]),
        presentation("ab", &[("ab", ""), ("ba", "")]),
    ]
}

#[test]
fn fill_square_on_random_maximal_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for p in examples() {
        let c = completed(&p, DEFAULT_FUEL);
        let q = c.polygraph();
        for w in all_words(q.generators().len() as u32, 5) {
            let f = random_maximal_path(q, &w, &mut rng);
            let g = random_maximal_path(q, &w, &mut rng);
            let cell = fill_square(&c, &f, &g).unwrap();
            let nf = ZigZag::identity(f.target());
            let shell = Shell::from_edges(ZigZag::from(g), nf.clone(), ZigZag::from(f), nf);
            assert!(validate_filler(&cell, &shell));
        }
    }
}

#[test]
fn fill_zigzag_agrees_with_fill_square_on_positive_tops() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for p in examples() {
        let c = completed(&p, DEFAULT_FUEL);
        let q = c.polygraph();
        for w in all_words(q.generators().len() as u32, 4) {
            let full = random_maximal_path(q, &w, &mut rng);
            let cut = full.len() / 2;
            let f = Path::new(w.clone(), full.steps()[..cut].to_vec()).unwrap();
            let g1 = normalize(q, &w, Strategy::Leftmost, DEFAULT_FUEL).unwrap();
            let g2 = normalize(q, &f.target(), Strategy::Rightmost, DEFAULT_FUEL).unwrap();
            let direct = fill_zigzag(&c, &ZigZag::from(f.clone()), &g1, &g2).unwrap();
            let via_square = CellTerm::vertical(
                CellTerm::horizontal(
                    CellTerm::degenerate(Degeneracy::Eps1, ZigZag::from(f.clone())),
                    CellTerm::degenerate(Degeneracy::GammaPlus, ZigZag::from(g2.clone())),
                )
                .unwrap(),
                fill_square(&c, &g1, &f.then(&g2).unwrap()).unwrap(),
            )
            .unwrap();
            assert_eq!(direct.faces(), via_square.faces());
            assert!(validate_filler(&via_square, direct.faces()));
        }
    }
}

#[test]
fn filler_recursion_is_bounded_by_fuel() {
    let p = presentation("ab", &[("ba", "ab")]);
    let c = completed(&p, 1);
    let w = word(c.polygraph(), "bba");
    let left = normalize(c.polygraph(), &w, Strategy::Leftmost, DEFAULT_FUEL).unwrap();
    let right = normalize(c.polygraph(), &w, Strategy::Rightmost, DEFAULT_FUEL).unwrap();
    assert!(matches!(fill_square(&c, &left, &right), Err(Error::FuelExhausted { .. })));
    let roomy = completed(&p, DEFAULT_FUEL);
    assert!(fill_square(&roomy, &left, &right).is_ok());
}

#[test]
fn fill_shell_is_deterministic() {
    let p = presentation("a", &[("aa", "a")]);
    let c = completed(&p, DEFAULT_FUEL);
    let q = c.polygraph();
    let r = &q.rules()[0];
    let aaa = word(q, "aaa");
    let step =
        |l: &str, rr: &str| squier_core::RewriteStep::new(word(q, l), r.clone(), word(q, rr));
    let top = ZigZag::from(step("", "a")).compose(&ZigZag::from(step("a", "")).inverse()).unwrap();
    let s = Shell::new(
        top,
        ZigZag::identity(word(q, "aa")),
        ZigZag::from(step("", "a")),
        ZigZag::from(step("a", "")),
    )
    .unwrap();
    assert_eq!(*s.top_left(), aaa);
    let first = fill_shell(&c, &s).unwrap();
    let second = fill_shell(&c.clone(), &s).unwrap();
    assert_eq!(first, second);
    assert!(validate_filler(&first, &s));
}

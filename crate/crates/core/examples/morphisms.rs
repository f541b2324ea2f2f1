//! Compute candidate sets by arc consistency and extract a morphism.

use adequate::{extract_morphism, Alphabet, CandidateSets, Mode, SigmaTree};

fn tree(s: &str, alphabet: &Alphabet) -> SigmaTree {
    let f = adequate::parse(s, alphabet, Mode::ADEQUATE_MONOID).unwrap();
    SigmaTree::evaluate(&f, alphabet).unwrap()
}

fn main() {
    let alphabet = Alphabet::new("ab".chars()).unwrap();
    let x = tree("(a)+(ab)+a", &alphabet);
    let y = tree("(ab)+a", &alphabet);

    let sets = CandidateSets::compute_traced(&x, &y, |r| {
        println!("refine B_{} by child {}: {:?} -> {:?}", r.vertex, r.child, r.before, r.after);
    })
    .unwrap();
    for v in 0..x.vertex_count() {
        println!("B_{v} = {:?}", sets.get(v));
    }
    match extract_morphism(&x, &y).unwrap() {
        Some(m) => println!("morphism: {:?}", m.map),
        None => println!("no morphism"),
    }
    println!("reverse direction exists: {}", extract_morphism(&y, &x).unwrap().is_some());
}
